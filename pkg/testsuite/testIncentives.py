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

import numpy as np

from RansomNeg.Mechanism import Incentives
from RansomNeg.Mechanism.Mechanism import mechanismParams

class KnownValues(unittest.TestCase):

    quarter = mechanismParams.fromQ(F(1, 4))

    def testAttackerUtility(self):
        for utility in (Incentives.expectedAttackerUtility,
                        Incentives.attackerUtilityFormula):
            self.assertEqual(20, utility(self.quarter, 30, 30, 100))
            self.assertEqual(20, utility(self.quarter, 30, 10, 100))
            self.assertEqual(0, utility(self.quarter, 30, 101, 100))
            self.assertEqual(-10, utility(self.quarter, 60, 60, 100))

    def testCoinOutcomes(self):
        outcomes = Incentives.coinOutcomes(self.quarter)
        self.assertEqual(4, len(outcomes))
        self.assertEqual(1, sum(p for _, _, p in outcomes))
        self.assertEqual(2, len(Incentives.coinOutcomes(
            mechanismParams.fromQ(F(1, 2)))))

    def testVictimUtility(self):
        self.assertEqual(F(9, 50), Incentives.expectedVictimUtility(
            self.quarter, F(3, 5), F(3, 5)))
        self.assertEqual(0, Incentives.expectedVictimUtility(self.quarter, 0, 0))
        self.assertEqual(F(9, 50), Incentives.expectedVictimUtility(
            self.quarter, 160, 160, prior=(100, 200)))
        self.assertRaises(ValueError, Incentives.expectedVictimUtility,
                          self.quarter, 1, 1, (1, 1))

    def testVictimGridSearch(self):
        reports = [F(i, 100) for i in range(101)]
        best = max(reports, key=lambda r: Incentives.expectedVictimUtility(
            self.quarter, F(3, 5), r))
        self.assertLessEqual(abs(best - F(3, 5)), F(1, 100))

class Properties(unittest.TestCase):

    grid = [F(i, 63) for i in range(64)]
    victimReports = [F(i, 4) for i in range(5)]

    def testFormulasAgree(self):
        rng = np.random.default_rng(21)
        for q in (F(1, 2), F(1, 4), F(3, 8)):
            params = mechanismParams.fromQ(q)
            for _ in range(300):
                thetaV, thetaA, reportA = (F(int(x), 64)
                                           for x in rng.integers(0, 129, 3))
                thetaV += F(1, 128)
                self.assertEqual(
                    Incentives.attackerUtilityFormula(params, thetaA, reportA, thetaV),
                    Incentives.expectedAttackerUtility(params, thetaA, reportA, thetaV))
                theta, r = (F(int(x), 256) for x in rng.integers(0, 257, 2))
                self.assertEqual(
                    Incentives.victimUtilityFormula(params, theta, r),
                    Incentives.expectedVictimUtility(params, theta, r))

    def testAttackerDominance(self):
        """
        Truthful reports are optimal for every attacker type expecting a
        non-negative utility
        """
        for q in (F(1, 4), F(1, 2)):
            result = Incentives.verifyAttackerDominance(
                mechanismParams.fromQ(q), self.grid, self.victimReports,
                rationalOnly=True)
            self.assertTrue(result)
            self.assertEqual(0, result.worstGap)
            self.assertEqual([], result.violations)

    def testOverreportingTypes(self):
        """
        Types between half the victim's report and the report itself gain
        exactly their loss by asking for more than the victim offers
        """
        params = mechanismParams.fromQ(F(1, 4))
        result = Incentives.verifyAttackerDominance(params, self.grid,
                                                    self.victimReports)
        expected = [(a, r, v) for v in self.victimReports for a in self.grid
                    if v/2 < a <= v for r in self.grid if r > v]
        self.assertFalse(result)
        self.assertEqual(sorted(expected), sorted(result.violations))
        self.assertEqual(max(a - v/2 for a, _, v in expected), result.worstGap)
        self.assertEqual(64 * 64 * 5, result.checked)

    def testVictimOptimality(self):
        params = mechanismParams.fromQ(F(1, 4))
        thetas = [F(i, 20) for i in range(21)]
        result = Incentives.verifyVictimOptimality(params, thetas, F(1, 1024))
        self.assertTrue(result)
        self.assertGreaterEqual(result.worstGap, 0)
        self.assertEqual(21 * 1025, result.checked)

    def testVictimOptimalityShiftedPrior(self):
        params = mechanismParams.fromQ(F(1, 8))
        result = Incentives.verifyVictimOptimality(
            params, [100, 120, 150, 199], F(1, 256), prior=(100, 200))
        self.assertTrue(result)

    def testZeroValuation(self):
        params = mechanismParams.fromQ(F(1, 4))
        result = Incentives.verifyVictimOptimality(params, [0], F(1, 64))
        self.assertTrue(result)
        self.assertEqual(0, result.worstGap)


if __name__ == "__main__":
    unittest.main()
