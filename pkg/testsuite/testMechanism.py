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

from RansomNeg.Mechanism import Mechanism
from RansomNeg.Mechanism.Mechanism import mechanismParams, scaledParams, \
    report, mechanismOutcome, outcomeReal, outcomeFixed

def fixedFor(q, kTheta=8, k=8):
    params = mechanismParams.fromQ(q, kTheta, k)
    return params, scaledParams.fromParams(params)

class KnownValues(unittest.TestCase):

    quarter = mechanismParams.fromQ(F(1, 4))

    # theta_v, theta_a, u0, u1, (alpha, r_f, sigma)
    real = (
            (100, 30, F(1, 10), F(9, 10), (True, 0, True)),
            (100, 30, F(9, 10), F(9, 10), (True, 100, False)),
            (100, 120, F(9, 10), F(1, 10), (False, 0, False)),
            (100, 30, F(1, 10), F(1, 10), (True, 100, False)),
            (100, 25, F(1, 10), F(1, 10), (True, 25, False)),
        )

    # theta_v, theta_a, s0, s1, (alpha, r_f, sigma) at q=1/4, k=8
    fixed = (
            (100, 30, 169, 200, (True, 0, True)),
            (100, 30, 170, 200, (True, 100, False)),
            (100, 30, 0, 63, (True, 100, False)),
            (100, 30, 0, 64, (True, 0, True)),
            (100, 25, 0, 0, (True, 25, False)),
            (100, 101, 0, 0, (False, 0, False)),
            (0, 0, 0, 0, (False, 0, False)),
            (0, 5, 255, 255, (False, 0, False)),
        )

    def testParams(self):
        self.assertEqual(F(2, 3), self.quarter.pBar)
        self.assertEqual(F(1, 4), mechanismParams.fromPBar(F(2, 3)).q)
        self.assertEqual(F(1, 2), self.quarter.paymentShare)
        self.assertEqual("q=1/4;p_bar=2/3;k=8;k_theta=8",
                         mechanismParams.fromQ(F(1, 4), 8, 8).describe())
        self.assertRaises(ValueError, mechanismParams, 0, 1)
        self.assertRaises(ValueError, mechanismParams, F(3, 4), 2)
        self.assertRaises(ValueError, mechanismParams, F(1, 4), F(3, 4))
        self.assertRaises(ValueError, mechanismParams.fromQ, F(1, 4), 0, 8)

    def testDyadicWarning(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            mechanismParams.fromQ(F(1, 3))
            mechanismParams.fromQ(F(3, 8))
        self.assertEqual(1, len(caught))
        self.assertTrue(issubclass(caught[0].category, Mechanism.dyadicWarning))

    def testScaledParams(self):
        params, scaled = fixedFor(F(1, 4))
        self.assertEqual(scaledParams(170, 64, 1024), scaled)
        params, scaled = fixedFor(F(1, 2), 4, 4)
        self.assertEqual(scaledParams(16, 8, 32), scaled)

    def testWidth(self):
        params, scaled = fixedFor(F(1, 4), 16, 32)
        self.assertEqual(64, Mechanism.arithmeticWidth(params))
        Mechanism.checkWidth(params, scaled)
        params, scaled = fixedFor(F(1, 4), 17, 32)
        self.assertRaises(Mechanism.widthOverflow, Mechanism.checkWidth,
                          params, scaled)
        self.assertRaises(Mechanism.widthOverflow, outcomeFixed, params,
                          scaled, report(1, 1), 0, 0)

    def testOutcomeReal(self):
        for thetaV, thetaA, u0, u1, expected in self.real:
            outcome = outcomeReal(self.quarter, report(thetaV, thetaA), u0, u1)
            self.assertEqual(mechanismOutcome(*expected), outcome)

    def testOutcomeFixed(self):
        params, scaled = fixedFor(F(1, 4))
        for thetaV, thetaA, s0, s1, expected in self.fixed:
            outcome = outcomeFixed(params, scaled, report(thetaV, thetaA), s0, s1)
            self.assertEqual(mechanismOutcome(*expected), outcome)

    def testInvalidInputs(self):
        params, scaled = fixedFor(F(1, 4))
        self.assertRaises(ValueError, outcomeReal, params, report(1, 1), 1, 0)
        self.assertRaises(ValueError, outcomeFixed, params, scaled,
                          report(1, 1), 256, 0)
        self.assertRaises(ValueError, outcomeFixed, params, scaled,
                          report(256, 1), 0, 0)
        self.assertRaises(ValueError, outcomeFixed, params, scaled,
                          report(F(1, 2), 1), 0, 0)
        self.assertRaises(ValueError, report, -1, 0)

    def testOutcomeInvariant(self):
        self.assertRaises(ValueError, mechanismOutcome, True, 0, False)
        self.assertRaises(ValueError, mechanismOutcome, False, 3, False)
        self.assertRaises(ValueError, mechanismOutcome, True, 3, True)
        self.assertEqual(mechanismOutcome(False, 0, False),
                         mechanismOutcome.fromPayment(0))
        self.assertEqual(mechanismOutcome(True, 0, True),
                         mechanismOutcome.fromPayment(0, sigma=True))

    def testExpectedPayment(self):
        self.assertEqual(50, Mechanism.expectedPayment(self.quarter, 100))
        self.assertEqual(0, Mechanism.expectedPayment(self.quarter, 0))
        self.assertEqual(50, Mechanism.expectedPaymentExact(self.quarter, 100, 30))
        self.assertEqual(0, Mechanism.expectedPaymentExact(self.quarter, 100, 101))

class Properties(unittest.TestCase):

    def testExhaustiveSmallWidths(self):
        """
        Every outcome at k_theta=k=4 pays at most the victim's report and at
        least the attacker's
        """
        params, scaled = fixedFor(F(1, 4), 4, 4)
        for thetaV in range(16):
            for thetaA in range(16):
                rep = report(thetaV, thetaA)
                for s0 in range(16):
                    for s1 in range(16):
                        outcome = outcomeFixed(params, scaled, rep, s0, s1)
                        self.assertLessEqual(outcome.rF, thetaV)
                        if outcome.rF > 0:
                            self.assertGreaterEqual(outcome.rF, thetaA)
                        self.assertEqual(outcome.alpha,
                                         outcome.rF > 0 or outcome.sigma)

    def testHalfPayment(self):
        """
        A truthful victim pays half the report in expectation whenever the
        attacker asks for no more than this report
        """
        rng = np.random.default_rng(11)
        for _ in range(50):
            b = int(rng.integers(1, 7))
            q = F(int(rng.integers(1, 2**(b - 1) + 1)), 2**b)
            params = mechanismParams.fromQ(q)
            thetaV = F(int(rng.integers(0, 10**6)), int(rng.integers(1, 1000)))
            low = q * thetaV * F(int(rng.integers(0, 101)), 100)
            high = thetaV * F(int(rng.integers(0, 101)), 100)
            for thetaA in (low, high):
                self.assertEqual(thetaV / 2, Mechanism.expectedPaymentExact(
                    params, thetaV, thetaA))

    def testMonteCarloPayment(self):
        params = mechanismParams.fromQ(F(1, 4))
        mean, stderr = Mechanism.simulatePayments(params, 100, 30, 10**6, seed=3)
        self.assertLess(abs(mean - 50), 3*stderr)

    def testFixedMatchesReal(self):
        """
        Exact scaling gives the same outcome in both arithmetics
        """
        rng = np.random.default_rng(12)
        for q in (F(1, 2), F(1, 4), F(1, 8)):
            params, scaled = fixedFor(q)
            step = int(1 / q)
            for _ in range(2000):
                thetaV = step * int(rng.integers(0, 256 // step))
                thetaA = int(rng.integers(0, 256))
                s0, s1 = (int(s) for s in rng.integers(0, 256, 2))
                if s0 == scaled.pScale:
                    continue
                rep = report(thetaV, thetaA)
                self.assertEqual(
                    outcomeReal(params, rep, F(s0, 256), F(s1, 256)),
                    outcomeFixed(params, scaled, rep, s0, s1))

    def testRoundingBound(self):
        """
        Flooring never raises the payment and loses less than 1/q
        """
        rng = np.random.default_rng(13)
        for q in (F(1, 2), F(1, 4), F(1, 8)):
            params, scaled = fixedFor(q)
            for _ in range(2000):
                thetaV, thetaA, s0, s1 = (int(x) for x in rng.integers(0, 256, 4))
                if s0 == scaled.pScale:
                    continue
                rep = report(thetaV, thetaA)
                real = outcomeReal(params, rep, F(s0, 256), F(s1, 256))
                fixed = outcomeFixed(params, scaled, rep, s0, s1)
                self.assertEqual(real.sigma, fixed.sigma)
                self.assertGreaterEqual(real.rF - fixed.rF, 0)
                self.assertLessEqual(real.rF - fixed.rF, 1/q - 1)

    def testCounterofferUndershoot(self):
        """
        The low offer scaled back by 1/q never exceeds the victim's report
        """
        rng = np.random.default_rng(14)
        for q in (F(1, 2), F(1, 4), F(1, 8), F(3, 8), F(5, 16)):
            for k in (8, 16):
                params, scaled = fixedFor(q, 8, k)
                for _ in range(200):
                    thetaV = int(rng.integers(2, 256))
                    r2 = (thetaV * scaled.qScale) >> k
                    self.assertLessEqual((r2 * scaled.invQScale) >> k, thetaV)
                    outcome = outcomeFixed(params, scaled,
                                           report(thetaV, r2 + 1), 0, 0)
                    self.assertTrue(outcome.alpha)
                    self.assertLessEqual(outcome.rF, thetaV)


if __name__ == "__main__":
    unittest.main()
