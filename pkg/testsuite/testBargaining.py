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

from RansomNeg.Game import Bargaining
from RansomNeg.Game.Bargaining import bargainingInstance, offerSchedule, \
    incompleteInfoProfile
from RansomNeg.Game.LossModel import lossProfile, victimParams

def instance(blocks, rMin, tail=0, rMax=None):
    profile = lossProfile(blocks=blocks, tail=tail)
    if rMax is None:
        rMax = profile.totalValue()
    return bargainingInstance(victimParams(rMax, profile), rMin)

def randomProfile(rng, maxBlocks=21):
    count = int(rng.integers(0, maxBlocks + 1))
    blocks = [F(int(rng.integers(0, 50)), int(rng.integers(1, 9)))
              for _ in range(count)]
    tail = F(int(rng.integers(0, 20)), int(rng.integers(1, 5)))
    return lossProfile(blocks=blocks, tail=tail)

class KnownValues(unittest.TestCase):

    flat = (1, 1, 1, 1, 1)

    def testDetermineHorizon(self):
        self.assertEqual(3, Bargaining.determineHorizon(instance(self.flat, F(3, 2))))
        self.assertEqual(1, Bargaining.determineHorizon(instance(self.flat, F(7, 2))))

    def testEvenHorizon(self):
        try:
            Bargaining.determineHorizon(instance(self.flat, F(1, 2)))
        except Bargaining.nonOddHorizon as e:
            self.assertEqual(4, e.N)
        else:
            self.fail("Even horizon not reported")

    def testNoHorizon(self):
        self.assertRaises(Bargaining.noFeasibleHorizon,
                          Bargaining.determineHorizon, instance(self.flat, 10))
        self.assertRaises(Bargaining.noFeasibleHorizon,
                          Bargaining.determineHorizon, instance(self.flat, 2))
        self.assertRaises(Bargaining.infiniteHorizon,
                          Bargaining.determineHorizon,
                          instance((1, 1), 2, tail=3))

    def testClosedFormOffer(self):
        inst = instance(self.flat, F(3, 2))
        self.assertEqual(3, Bargaining.closedFormOffer(inst, 1, 3))
        self.assertEqual(2, Bargaining.closedFormOffer(inst, 2, 3))
        self.assertEqual(2, Bargaining.closedFormOffer(inst, 3, 3))

    def testSingleRound(self):
        inst = instance((F(3, 2), 2, 7), 1, tail=F(1, 3))
        self.assertEqual(inst.profile.residualValue(1),
                         Bargaining.closedFormOffer(inst, 1, 1))
        self.assertEqual(offerSchedule([inst.profile.residualValue(1)]),
                         Bargaining.backwardInductionOffers(inst, 1))

    def testInvalidRounds(self):
        inst = instance(self.flat, F(3, 2))
        self.assertRaises(ValueError, Bargaining.closedFormOffer, inst, 0, 3)
        self.assertRaises(ValueError, Bargaining.closedFormOffer, inst, 4, 3)
        self.assertRaises(Bargaining.nonOddHorizon,
                          Bargaining.closedFormOffer, inst, 1, 4)
        self.assertRaises(Bargaining.nonOddHorizon, bargainingInstance,
                          inst.victim, 1, 2)

    def testWorkedSchedule(self):
        inst = instance(self.flat, F(3, 2))
        N = Bargaining.determineHorizon(inst)
        schedule = Bargaining.backwardInductionOffers(inst, N)
        self.assertEqual(offerSchedule([3, 2, 2]), schedule)
        self.assertEqual('attacker', schedule.proposer(1))
        self.assertEqual('victim', schedule.proposer(2))
        self.assertEqual([1, 2, 3], Bargaining.feasibleRounds(inst, N))
        self.assertEqual(3, Bargaining.maximumRansom(inst, N))

    def testRubinsteinSplit(self):
        self.assertEqual(5, Bargaining.rubinsteinSplit(10, 8, 2))
        self.assertEqual(6, Bargaining.rubinsteinSplit(6, 10, 6))
        self.assertRaises(Bargaining.noDeal, Bargaining.rubinsteinSplit, 4, 4, 5)

    def testRound1Limit(self):
        exact, approx, split = Bargaining.round1Limit(
            lossProfile(blocks=(1, 1, 1, 1, 1, 1)))
        self.assertEqual((3, 3, False), (exact, approx, split))
        exact, approx, split = Bargaining.round1Limit(lossProfile(blocks=(4,)))
        self.assertEqual((0, 2), (exact, approx))
        exact, approx, split = Bargaining.round1Limit(
            lossProfile(blocks=(2, 4), tail=6))
        self.assertEqual((7, 6, True), (exact, approx, split))

    def testRound1LimitConverges(self):
        """
        For equal blocks the exact limit approaches half the value
        """
        for count in (1, 5, 51, 501):
            exact, approx, _ = Bargaining.round1Limit(lossProfile(blocks=[1]*count))
            self.assertLessEqual(abs(1 - exact / approx), F(1, count))

    def testRound1Threshold(self):
        profile = lossProfile(blocks=(2, 2, 2))
        self.assertEqual(3, Bargaining.round1Threshold(victimParams(10, profile)))
        self.assertEqual(2, Bargaining.round1Threshold(victimParams(2, profile)))

    def testMarginalLossLint(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            self.assertFalse(Bargaining.marginalLossLint(
                lossProfile(blocks=self.flat), 3))
            self.assertTrue(Bargaining.marginalLossLint(
                lossProfile(blocks=(1, 1, 1), tail=100), 3))
        self.assertEqual(1, len(caught))
        self.assertTrue(issubclass(caught[0].category,
                                   Bargaining.marginalLossWarning))

class Properties(unittest.TestCase):

    def testClosedFormMatchesInduction(self):
        """
        Both derivations give exactly the same offers
        """
        rng = np.random.default_rng(1)
        for _ in range(200):
            profile = randomProfile(rng)
            inst = bargainingInstance(victimParams(profile.totalValue(), profile), 0)
            for N in range(1, 22, 2):
                self.assertEqual(Bargaining.closedFormOffers(inst, N),
                                 Bargaining.backwardInductionOffers(inst, N))

    def testOfferBounds(self):
        """
        Offers never increase over the rounds, shrink with a longer horizon
        and stay below the residual value
        """
        rng = np.random.default_rng(2)
        for _ in range(10000):
            profile = randomProfile(rng, 12)
            inst = bargainingInstance(victimParams(profile.totalValue(), profile), 0)
            N = 2 * int(rng.integers(0, 8)) + 1
            n = int(rng.integers(1, N + 1))
            R = lambda m, M: Bargaining.closedFormOffer(inst, m, M)
            if n < N:
                self.assertLessEqual(R(n + 1, N), R(n, N))
            self.assertLessEqual(R(n, N + 2), R(n, N))
            self.assertLessEqual(R(n, N), profile.residualValue(n))

    def testVictimRoundsRepeat(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            profile = randomProfile(rng)
            inst = bargainingInstance(victimParams(profile.totalValue(), profile), 0)
            schedule = Bargaining.backwardInductionOffers(inst, 9)
            for n in range(2, 9, 2):
                self.assertEqual(schedule.offer(n), schedule.offer(n + 1))

class IncompleteInformation(unittest.TestCase):

    loss = lossProfile(blocks=[2] * 10)

    def testBounds(self):
        self.assertEqual((F(1, 5), F(2, 3)), Bargaining.qBounds(self.loss))
        self.assertEqual(6, Bargaining.r2Tilde(self.loss, F(1, 2)))
        self.assertEqual(F(3, 7), Bargaining.rhoLowerBound(self.loss, F(1, 2)))
        self.assertEqual(0, Bargaining.rhoLowerBound(self.loss, F(1, 5)))
        self.assertEqual(F(16, 17),
                         Bargaining.pBarLowerBound(self.loss, F(1, 2), F(1, 2)))

        self.assertTrue(incompleteInfoProfile(F(1, 2), 1, F(1, 2))
                        .checkBounds(self.loss))
        self.assertFalse(incompleteInfoProfile(F(1, 2), F(1, 2), F(1, 2))
                         .checkBounds(self.loss))
        self.assertFalse(incompleteInfoProfile(F(3, 4), 1, 1)
                         .checkBounds(self.loss))
        self.assertRaises(ValueError, incompleteInfoProfile, 2, 1, 1)

    def testBestResponse(self):
        profile = incompleteInfoProfile(F(1, 2), 1, F(1, 2))
        r2 = Bargaining.r2Tilde(self.loss, profile.q)
        self.assertEqual(('A1', None),
                         Bargaining.counterofferResponse(profile, r2, 5, self.loss))
        self.assertEqual(('A1', None),
                         Bargaining.counterofferResponse(profile, r2, 6, self.loss))
        self.assertEqual(('A3', 12),
                         Bargaining.counterofferResponse(profile, r2, 8, self.loss))
        self.assertEqual(('A3', 13),
                         Bargaining.counterofferResponse(profile, r2, 13, self.loss))

    def testPayoffs(self):
        profile = incompleteInfoProfile(F(1, 2), 1, F(1, 2))
        self.assertEqual(6, Bargaining.acceptPayoff(profile, self.loss))
        self.assertEqual(7, Bargaining.deviationBound(profile, self.loss))

    def testPayoffGap(self):
        """
        Accepting minus deviating equals v(2) - p(rho v(3) + (1-q)V)
        """
        rng = np.random.default_rng(4)
        for _ in range(200):
            loss = randomProfile(rng)
            q = F(int(rng.integers(0, 11)), 10)
            profile = incompleteInfoProfile(q, F(int(rng.integers(0, 11)), 10),
                                            F(int(rng.integers(0, 11)), 10))
            gap = Bargaining.acceptPayoff(profile, loss) - \
                Bargaining.deviationBound(profile, loss)
            self.assertEqual(loss.residualValue(2) - profile.pBar * (
                profile.rho * loss.residualValue(3) +
                (1 - q) * loss.totalValue()), gap)

    def testCounterofferBelowV3(self):
        """
        At the upper bound of q the counteroffer r2/q never exceeds v(3)
        """
        rng = np.random.default_rng(5)
        checked = 0
        while checked < 100:
            loss = randomProfile(rng)
            if loss.cumulativeLoss(2) == 0:
                continue
            q = Bargaining.qBounds(loss)[1]
            r2 = Bargaining.r2Tilde(loss, q)
            self.assertLessEqual(r2 / q, loss.residualValue(3))
            checked += 1

    def testVictimRound2(self):
        profile = incompleteInfoProfile(F(1, 2), F(3, 4), F(1, 2))
        self.assertEqual([('V1', None, 1)],
                         Bargaining.victimRound2(profile, self.loss, 10))
        self.assertEqual([('V3', 6, F(3, 4)), ('V3', 16, F(1, 4))],
                         Bargaining.victimRound2(profile, self.loss, 11))


if __name__ == "__main__":
    unittest.main()
