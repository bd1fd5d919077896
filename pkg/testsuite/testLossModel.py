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


import unittest
from fractions import Fraction as F

from RansomNeg.Basic.Config import configFile
from RansomNeg.Game.LossModel import lossProfile, victimParams, totalValue, \
    residualValue, reservation, totalLoss, fixedLoss

class KnownValues(unittest.TestCase):

    # Blocks, tail and the total value
    totals = (
            ((1, 1, 1, 1, 1), 0, 5),
            ((), 7, 7),
            ((2, 3), F(3, 2), F(13, 2))
        )

    # Blocks, tail, round and the residual value
    residuals = (
            ((1, 1, 1, 1, 1), 0, 3, 2),
            ((1, 1, 1, 1, 1), 0, 0, 5),
            ((2, 3), F(3, 2), 5, F(3, 2))
        )

    def testTotalValue(self):
        """
        Sum of all blocks and the tail
        """
        for blocks, tail, total in self.totals:
            self.assertEqual(total, totalValue(lossProfile(blocks=blocks,
                                                           tail=tail)))

    def testResidualValue(self):
        for blocks, tail, n, value in self.residuals:
            self.assertEqual(value, residualValue(
                lossProfile(blocks=blocks, tail=tail), n))

    def testReservation(self):
        """
        Residual value capped by r_max
        """
        profile = lossProfile(blocks=(1, 1, 1, 1, 1))
        self.assertEqual(4, reservation(victimParams(10, profile), 1))
        self.assertEqual(F(5, 2), reservation(victimParams(F(5, 2), profile), 1))

        tailOnly = victimParams(7, lossProfile(tail=7))
        for n in range(5):
            self.assertEqual(7, reservation(tailOnly, n))

    def testTotalLoss(self):
        victim = victimParams(10, lossProfile(l0=1, blocks=(1, 1, 1, 1, 1)))
        self.assertEqual(5, totalLoss(victim, 2, 2, released=True))
        self.assertEqual(6, totalLoss(victim, 0, 0, released=False))
        zero = victimParams(10, lossProfile(blocks=(1, 1, 1, 1, 1)))
        self.assertEqual(0, totalLoss(zero, 0, 0))
        self.assertRaises(ValueError, totalLoss, victim, 1, -1)

    def testFixedLoss(self):
        victim = victimParams(10, lossProfile(l0=1, blocks=(2, 2)))
        self.assertEqual(3, fixedLoss(victim, 'A4', 2))
        self.assertEqual(7, fixedLoss(victim, 'A5', 2))
        self.assertEqual(1, fixedLoss(victim, 'A6', 0))
        self.assertEqual(5, fixedLoss(victim, 'A7', 0))
        self.assertRaises(ValueError, fixedLoss, victim, 'A1', 0)

    def testResidualValueAt(self):
        """
        Linear inside a block, tail after the last one
        """
        profile = lossProfile(blocks=(2, 4), tail=1, roundLength=2)
        self.assertEqual(7, profile.residualValueAt(0))
        self.assertEqual(6, profile.residualValueAt(1))
        self.assertEqual(5, profile.residualValueAt(2))
        self.assertEqual(3, profile.residualValueAt(3))
        self.assertEqual(1, profile.residualValueAt(4))
        self.assertEqual(1, profile.residualValueAt(100))
        victim = victimParams(F(11, 2), profile)
        self.assertEqual(F(11, 2), victim.reservationAt(1))
        self.assertEqual(5, victim.reservationAt(2))

    def testInvalidProfiles(self):
        self.assertRaises(ValueError, lossProfile, -1)
        self.assertRaises(ValueError, lossProfile, 0, (1, -1))
        self.assertRaises(ValueError, lossProfile, 0, (), -1)
        self.assertRaises(ValueError, lossProfile, 0, (), 0, 0)
        self.assertRaises(ValueError, victimParams, -1, lossProfile())

    def testFromConfig(self):
        cfg = configFile(entries={'l0': '0.5', 'blocks': '1, 2.25, 1/3',
                                  'tail': '2', 'r_max': '4'})
        victim = victimParams.fromConfig(cfg)
        self.assertEqual(F(1, 2), victim.profile.l0)
        self.assertEqual((1, F(9, 4), F(1, 3)), victim.profile.blocks)
        self.assertEqual(4, victim.rMax)
        self.assertEqual(1, victim.profile.roundLength)

class Properties(unittest.TestCase):

    def testMonotone(self):
        """
        v(n) never increases and reaches the tail after the last block,
        reservations equal one of their bounds, later settlement costs more
        """
        profile = lossProfile(l0=2, blocks=(F(3, 2), 0, 4, F(1, 7), 2), tail=3)
        victim = victimParams(9, profile)
        self.assertEqual(profile.totalValue(), profile.residualValue(0))
        for n in range(10):
            self.assertLessEqual(profile.residualValue(n + 1),
                                 profile.residualValue(n))
            r = victim.reservation(n)
            self.assertIn(r, (victim.rMax, profile.residualValue(n)))
            self.assertLessEqual(totalLoss(victim, n, 1),
                                 totalLoss(victim, n + 1, 1))
        for n in range(profile.M, profile.M + 3):
            self.assertEqual(profile.tail, profile.residualValue(n))


if __name__ == "__main__":
    unittest.main()
