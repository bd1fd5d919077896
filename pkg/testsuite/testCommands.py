#Copyright (C) 2026 The RansomNeg developers

#This program is free software; you can redistribute it and/or modify
#it under the terms of the GNU General Public License as published by
#the Free Software Foundation; either version 2 of the License, or
#(at your option) any later version.

#This program is distributed in the hope that it will be useful,
#but WITHOUT ANY WARRANTY; without even the implied warranty of
#MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#GNU General Public License for more details.

#You should have received a copy of the GNU General Public License
#along with this program; if not, write to the Free Software Foundation,
#Inc., 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA


import contextlib
import io
import os
import shutil
import tempfile
import unittest
import warnings

from RansomNeg import Commands

def run(argv):
    """
    Runs a subcommand and returns the exit code with the captured output.
    """
    out, err = io.StringIO(), io.StringIO()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = Commands.main(argv)
    return code, out.getvalue(), err.getvalue()

class KnownValues(unittest.TestCase):

    flat = ["--blocks", "1,1,1,1,1"]

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def testOffers(self):
        code, out, err = run(["offers"] + self.flat + ["--r-min", "1.5"])
        self.assertEqual(0, code)
        lines = out.splitlines()
        self.assertEqual("N = 3", lines[0])
        self.assertEqual("offers: 3, 2, 2", lines[1])
        self.assertTrue(lines[2].startswith("round"))
        self.assertEqual(6, len(lines))

    def testOffersFromConfig(self):
        path = os.path.join(self.tmp, "victim.cfg")
        with open(path, "w") as f:
            f.write("# flat profile\nblocks = 1, 1, 1, 1, 1\nr_min = 3/2\n")
        code, out, err = run(["offers", "-c", path])
        self.assertEqual(0, code)
        self.assertIn("offers: 3, 2, 2", out)
        code, out, err = run(["offers", "-c", path, "--r-min", "3.5"])
        self.assertIn("N = 1", out)

    def testOffersCsv(self):
        path = os.path.join(self.tmp, "schedule.csv")
        code, out, err = run(["offers"] + self.flat +
                             ["--r-min", "1.5", "--csv", path])
        self.assertEqual(0, code)
        with open(path) as f:
            rows = f.read().splitlines()
        self.assertEqual("round,proposer,offer,residual_value,reservation",
                         rows[0])
        self.assertEqual(4, len(rows))
        self.assertTrue(rows[1].startswith("1,"))

    def testHorizon(self):
        code, out, err = run(["horizon"] + self.flat + ["--r-min", "1.5"])
        self.assertEqual(0, code)
        self.assertEqual("N = 3", out.strip())

    def testNoHorizon(self):
        code, out, err = run(["horizon"] + self.flat + ["--r-min", "10"])
        self.assertEqual(1, code)
        self.assertIn("error", err)

    def testRubinstein(self):
        code, out, err = run(["rubinstein", "10", "8", "2"])
        self.assertEqual(0, code)
        self.assertEqual("r_f = 5", out.strip())

    def testMechanismEval(self):
        code, out, err = run(["mechanism", "eval", "--theta-v", "100",
                              "--theta-a", "25"])
        self.assertEqual(0, code)
        lines = out.splitlines()
        self.assertEqual("scaledParams(pScale=170, qScale=64, invQScale=1024)",
                         lines[0])
        self.assertEqual(["r_f = 25", "alpha = 1", "sigma = 0",
                          "exact r_f = 25"], lines[1:])

    def testMechanismVerify(self):
        code, out, err = run(["mechanism", "verify-bic", "-g", "16",
                              "-s", "64"])
        self.assertEqual(0, code)
        self.assertIn("attacker dominance: pass", out)
        self.assertIn("victim optimality:  pass", out)

    def testMechanismVerifyAllTypes(self):
        """
        Types with negative truthful utility gain by reporting above the
        victim's report
        """
        code, out, err = run(["mechanism", "verify-bic", "-g", "16",
                              "-s", "64", "--all-types"])
        self.assertEqual(1, code)
        self.assertIn("attacker dominance: FAIL", out)
        self.assertIn("violations", out)

    def testStageGame(self):
        code, out, err = run(["stage-game", "--tau-g", "2", "--tau-l", "2",
                              "--kappa-g", "3", "--kappa-l", "3",
                              "--r-f", "4", "--value", "10", "--r-max", "10"])
        self.assertEqual(0, code)
        self.assertEqual("equilibrium: (V1, A4)", out.splitlines()[0])

    def testUsage(self):
        self.assertEqual(1, run([])[0])
        self.assertEqual(1, run(["haggle"])[0])
        self.assertEqual(1, run(["mechanism"])[0])
        self.assertEqual(1, run(["rubinstein", "ten", "8", "2"])[0])

    def testParseAddress(self):
        self.assertEqual(('127.0.0.1', 9000), Commands.parseAddress(":9000"))
        self.assertEqual(('10.0.0.2', 80), Commands.parseAddress("10.0.0.2:80"))
        self.assertRaises(ValueError, Commands.parseAddress, "localhost")
        self.assertRaises(ValueError, Commands.parseAddress, "host:port")

if __name__ == "__main__":
    unittest.main()
