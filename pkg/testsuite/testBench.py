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


import os
import shutil
import tempfile
import unittest

from RansomNeg import Settings
from RansomNeg.Mechanism.Mechanism import mechanismParams
from RansomNeg.PostProcessing import Tables
from RansomNeg.Protocol import Bench

class KnownValues(unittest.TestCase):

    def testTimingRow(self):
        row = Bench.timingRow(8, 16, [0.003, 0.001, 0.002])
        self.assertAlmostEqual(0.002, row.median)

    def testTimingTable(self):
        rows = [Bench.timingRow(8, 8, [0.0125]),
                Bench.timingRow(16, 32, [0.5, 0.25])]
        lines = Tables.timingTable(rows).splitlines()
        self.assertEqual("k_theta    k      Execution time", lines[0])
        self.assertEqual("-" * 34, lines[1])
        self.assertEqual("8          8      12.50 ms", lines[2])
        self.assertEqual("16         32     375.00 ms", lines[3])

class Loopback(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def testRunOnce(self):
        params = mechanismParams.fromQ('1/4', 4, 4)
        elapsed = Bench.runOnce(params, 8, 4, seed=b"bench")
        self.assertGreater(elapsed, 0)

    def testBenchmark(self):
        rows = Bench.benchmark([(4, 4), (8, 8)], 2)
        self.assertEqual([(4, 4), (8, 8)], [(r.kTheta, r.k) for r in rows])
        for row in rows:
            self.assertEqual(2, len(row.times))
            self.assertGreater(row.median, 0)

    def testDefaultGrid(self):
        """
        Every cell of the default grid stays within the cell limit and the
        time grows with both widths
        """
        rows = Bench.benchmark(Settings.benchGrid, Settings.benchRepetitions)
        medians = dict(((r.kTheta, r.k), r.median) for r in rows)
        self.assertEqual(list(Settings.benchGrid), list(medians))
        for cell, median in medians.items():
            self.assertLessEqual(median, Settings.benchCellLimit, cell)

        kThetas = sorted(set(kTheta for kTheta, _ in medians))
        ks = sorted(set(k for _, k in medians))
        for kTheta in kThetas:
            for small, large in zip(ks, ks[1:]):
                self.assertGreaterEqual(medians[kTheta, large],
                                        0.95*medians[kTheta, small])
        for k in ks:
            for small, large in zip(kThetas, kThetas[1:]):
                self.assertGreaterEqual(medians[large, k],
                                        0.95*medians[small, k])

    def testPlot(self):
        path = os.path.join(self.tmp, "timing.png")
        Tables.plotTiming([Bench.timingRow(4, 4, [0.001]),
                           Bench.timingRow(4, 8, [0.002])], path)
        self.assertTrue(os.path.getsize(path) > 0)

if __name__ == "__main__":
    unittest.main()
