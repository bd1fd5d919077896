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
from fractions import Fraction as F

from RansomNeg.Basic.Config import configFile, toFraction
from RansomNeg.Basic.Utilities import toBits, fromBits, double, isDyadic, \
    formatMoney

class KnownValues(unittest.TestCase):

    content = """# victim
// loss profile
% per round
l0 = 1
blocks = 1, 1.5, 3/2
tail =
r_max = 10
q = 1/4
k = 16
theta_hex = 0x1f
note = a = b
"""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.path = os.path.join(self.tmp, "victim.cfg")
        with open(self.path, "w") as f:
            f.write(self.content)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def testParse(self):
        cfg = configFile(self.path)
        self.assertEqual(sorted(['l0', 'blocks', 'tail', 'r_max', 'q', 'k',
                                 'theta_hex', 'note']), sorted(cfg.keys()))
        self.assertEqual("a = b", cfg['note'])
        self.assertTrue('q' in cfg)
        self.assertFalse('p_bar' in cfg)

    def testFraction(self):
        cfg = configFile(self.path)
        self.assertEqual(F(1, 4), cfg.fraction('q'))
        self.assertEqual(10, cfg.fraction('r_max'))
        self.assertEqual(F(2, 3), cfg.fraction('p_bar', F(2, 3)))

    def testFractions(self):
        cfg = configFile(self.path)
        self.assertEqual([1, F(3, 2), F(3, 2)], cfg.fractions('blocks'))
        self.assertEqual([], cfg.fractions('tail'))
        self.assertEqual([2, 2], cfg.fractions('missing', [2, 2]))

    def testIntegers(self):
        cfg = configFile(self.path)
        self.assertEqual(16, cfg.integer('k'))
        self.assertEqual(31, cfg.hexInteger('theta_hex'))
        self.assertEqual(8, cfg.integer('k_theta', 8))

    def testMissing(self):
        cfg = configFile(self.path)
        self.assertRaises(KeyError, cfg.fraction, 'p_bar')
        self.assertRaises(KeyError, cfg.fractions, 'loss')
        self.assertRaises(KeyError, cfg.integer, 'k_theta')
        self.assertRaises(KeyError, cfg.hexInteger, 'seed')

    def testOverrides(self):
        cfg = configFile(self.path, {'q': '1/8', 'k': 8})
        self.assertEqual(F(1, 8), cfg.fraction('q'))
        self.assertEqual(8, cfg.integer('k'))

    def testEntriesOnly(self):
        cfg = configFile(entries={'r_min': '2.5'})
        self.assertEqual(F(5, 2), cfg.fraction('r_min'))

    def testMalformed(self):
        cfg = configFile(entries={'q': 'quarter', 'k': '1.5', 'h': 'xyz'})
        self.assertRaises(ValueError, cfg.fraction, 'q')
        self.assertRaises(ValueError, cfg.integer, 'k')
        self.assertRaises(ValueError, cfg.hexInteger, 'h')
        bad = os.path.join(self.tmp, "bad.cfg")
        with open(bad, "w") as f:
            f.write("q = 1/4\nno separator here\n")
        self.assertRaises(ValueError, configFile, bad)

    def testToFraction(self):
        self.assertEqual(F(1, 10), toFraction("0.1"))
        self.assertEqual(F(-3, 4), toFraction(" -3/4 "))
        self.assertRaises(ValueError, toFraction, "1/0")
        self.assertRaises(ValueError, toFraction, "")

class Utilities(unittest.TestCase):

    def testBits(self):
        self.assertEqual([0, 1, 1, 0], toBits(6, 4))
        self.assertEqual(6, fromBits([0, 1, 1, 0]))
        self.assertEqual([0] * 8, toBits(0, 8))
        self.assertRaises(ValueError, toBits, 16, 4)
        self.assertRaises(ValueError, toBits, -1, 4)
        for n in range(256):
            self.assertEqual(n, fromBits(toBits(n, 8)))

    def testDouble(self):
        self.assertEqual(2, double(1))
        self.assertEqual(0x87, double(1 << 127))
        self.assertEqual(((1 << 127) - 1) << 1, double((1 << 127) - 1))
        self.assertEqual(0x87 ^ 2, double((1 << 127) | 1))

    def testIsDyadic(self):
        self.assertTrue(isDyadic(F(1, 4)))
        self.assertTrue(isDyadic(F(3, 8)))
        self.assertTrue(isDyadic(5))
        self.assertFalse(isDyadic(F(1, 3)))
        self.assertFalse(isDyadic(F(1, 10)))

    def testFormatMoney(self):
        self.assertEqual("5", formatMoney(5))
        self.assertEqual("5", formatMoney(F(10, 2)))
        self.assertEqual("3/2 (~1.5)", formatMoney(F(3, 2)))
        self.assertEqual("1/3 (~0.333333)", formatMoney(F(1, 3)))

if __name__ == "__main__":
    unittest.main()
