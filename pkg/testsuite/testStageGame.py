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
import warnings
from fractions import Fraction as F

import numpy as np

from RansomNeg.Game.StageGame import reputationParams, stageOutcome, payoffs, \
    spne, bruteForceSpne, premises, premiseWarning, maximumRansom

class KnownValues(unittest.TestCase):

    anonymous = reputationParams(tauG=0, tauL=0, kappaG=3, kappaL=3, cR=1, cD=0)
    trusted = reputationParams(tauG=2, tauL=2, kappaG=3, kappaL=3, cR=1, cD=0)

    def testPayoffs(self):
        """
        Leaf payoffs of the game tree
        """
        rep = reputationParams(tauG=2, cR=1)
        self.assertEqual((-5, 6), payoffs(rep, 5, 10, 'V1', 'A4'))
        rep = reputationParams(kappaG=1, cR=1, cD=0)
        self.assertEqual((-10, 1), payoffs(rep, 5, 10, 'V2', 'A7'))
        rep = reputationParams(cR=F(1, 10), cD=0)
        self.assertEqual((0, F(-1, 10)), payoffs(rep, 0, 0, 'V1', 'A4'))

    def testAllLeaves(self):
        rep = reputationParams(tauG=1, tauL=2, kappaG=3, kappaL=4, cR=5, cD=1)
        self.assertEqual((-7, 7 - 5 + 1), payoffs(rep, 7, 20, 'V1', 'A4'))
        self.assertEqual((-27, 7 - 1 - 2), payoffs(rep, 7, 20, 'V1', 'A5'))
        self.assertEqual((0, -5 - 4 + 1), payoffs(rep, 7, 20, 'V2', 'A6'))
        self.assertEqual((-20, -1 + 3), payoffs(rep, 7, 20, 'V2', 'A7'))

    def testIllegalPair(self):
        self.assertRaises(ValueError, payoffs, self.trusted, 1, 2, 'V1', 'A6')
        self.assertRaises(ValueError, payoffs, self.trusted, 1, 2, 'V2', 'A4')
        self.assertRaises(ValueError, stageOutcome, 'V2', 'A5', 0, 0)

    def testInvalidReputation(self):
        self.assertRaises(ValueError, reputationParams, cR=1, cD=1)
        self.assertRaises(ValueError, reputationParams, cR=1, cD=-1)
        self.assertRaises(ValueError, reputationParams, tauG=-1)

    def testAnonymousAttacker(self):
        """
        Without reputation the victim refuses and the attacker punishes
        """
        for rF in (F(1, 2), 1, 4, 9):
            outcome = spne(self.anonymous, rF, 10, 10)
            self.assertEqual(('V2', 'A7'), outcome.actions)

    def testTrustedAttacker(self):
        self.assertEqual(('V1', 'A4'), spne(self.trusted, 4, 10, 10).actions)
        self.assertEqual(('V2', 'A7'), spne(self.trusted, 12, 10, 10).actions)
        self.assertEqual(('V2', 'A7'), spne(self.trusted, 6, 10, 5).actions)

    def testFlipAtBoundary(self):
        """
        The victim pays exactly below min(v, r_max), ties go to refusal
        """
        for v, rMax in ((10, 20), (20, 10), (10, 10)):
            cap = maximumRansom(v, rMax)
            self.assertEqual(('V1', 'A4'),
                             spne(self.trusted, cap - F(1, 100), v, rMax).actions)
            self.assertEqual(('V2', 'A7'), spne(self.trusted, cap, v, rMax).actions)

    def testPremises(self):
        self.assertTrue(premises(self.anonymous)['anonymous'])
        self.assertFalse(premises(self.anonymous)['reputation'])
        self.assertTrue(premises(self.trusted)['reputation'])

    def testPremiseWarning(self):
        rep = reputationParams(tauG=5, tauL=5, kappaG=1, kappaL=1, cR=1)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            spne(rep, 1, 10, 10)
        self.assertTrue(any(issubclass(w.category, premiseWarning)
                            for w in caught))

    def testNegativeRansom(self):
        self.assertRaises(ValueError, spne, self.trusted, -1, 10, 10)

class Oracle(unittest.TestCase):

    def testBruteForceAgrees(self):
        """
        Backward induction lands on a path of an enumerated subgame perfect
        profile for random parameters
        """
        rng = np.random.default_rng(7)
        num = lambda: F(int(rng.integers(0, 41)), 4)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", premiseWarning)
            for _ in range(1000):
                cD = num()
                rep = reputationParams(num(), num(), num(), num(),
                                       cD + F(int(rng.integers(1, 20)), 4), cD)
                rF, v, rMax = num(), num(), num()
                outcome = spne(rep, rF, v, rMax)
                found = bruteForceSpne(rep, rF, v, rMax)
                self.assertIn(outcome.actions, [o.actions for o in found])


if __name__ == "__main__":
    unittest.main()
