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


import logging
import warnings
from fractions import Fraction

from RansomNeg import Settings
from RansomNeg.Game.LossModel import victimParams

"""
Finite horizon alternating-offers bargaining between attacker and victim.
The attacker proposes in odd rounds, the victim in even rounds. Offers are
derived twice, once from the closed form and once by backward induction, so
that both can be compared exactly.
"""

log = logging.getLogger(__name__)

class noFeasibleHorizon(ValueError):
    """
    The attacker's reservation is not below the value after the first round.
    """

class nonOddHorizon(ValueError):
    """
    The last round implied by the reservation values is even.
    """

    def __init__(self, N):
        ValueError.__init__(self, "Horizon N=%i is even" % N)
        self.N = N

class infiniteHorizon(ValueError):
    """
    The attacker's reservation does not exceed the tail, no finite last round
    exists.
    """

class noDeal(ValueError):
    """
    The attacker asks more than the victim is able or willing to pay.
    """

class marginalLossWarning(UserWarning):
    pass

class bargainingInstance():
    """
    :param victim: Victim parameters
    :type victim: :class:`~RansomNeg.Game.LossModel.victimParams`
    :param rMin: Minimum ransom the attacker accepts
    :type rMin: Fraction
    :param horizon: Last bargaining round, determined if omitted
    :type horizon: int
    """

    def __init__(self, victim, rMin, horizon=None):
        self.victim = victim
        self.rMin = Fraction(rMin)
        self.horizon = horizon

        if self.rMin < 0:
            raise ValueError("r_min must not be negative")
        if horizon is not None:
            checkHorizon(horizon)

    def __repr__(self):
        return "bargainingInstance(%r, rMin=%s, horizon=%s)" % (
            self.victim, self.rMin, self.horizon)

    @classmethod
    def fromConfig(cls, cfg):
        return cls(victimParams.fromConfig(cfg), cfg.fraction('r_min'))

    @property
    def profile(self):
        return self.victim.profile

    def N(self):
        """
        Returns the given horizon or determines it.
        """
        if self.horizon is None:
            return determineHorizon(self)
        return self.horizon

class offerSchedule():
    """
    Equilibrium offers :math:`r^*_n` for the rounds n = 1..N.
    """

    def __init__(self, offers):
        self.offers = tuple(Fraction(r) for r in offers)

    def __len__(self):
        return len(self.offers)

    def __iter__(self):
        return iter(self.offers)

    def __eq__(self, other):
        return tuple(self) == tuple(other)

    def __repr__(self):
        return "offerSchedule([%s])" % ", ".join(str(r) for r in self.offers)

    def offer(self, n):
        """
        Offer of round n, counting from 1.
        """
        if not 1 <= n <= len(self.offers):
            raise ValueError("Round %i outside 1..%i" % (n, len(self.offers)))
        return self.offers[n-1]

    def proposer(self, n):
        """
        'attacker' in odd, 'victim' in even rounds.
        """
        self.offer(n)
        return 'attacker' if n % 2 else 'victim'

def checkHorizon(N):
    if int(N) != N or N < 1:
        raise ValueError("Horizon must be a positive integer, got %s" % N)
    if N % 2 == 0:
        raise nonOddHorizon(N)

def determineHorizon(inst):
    """
    Last bargaining round N, the round with

    ..math::

        v(N+1) < r_{min} < v(N)

    :param inst: Bargaining instance
    :type inst: :class:`bargainingInstance`
    :rtype: int
    """
    profile = inst.profile
    rMin = inst.rMin

    if rMin <= profile.tail:
        raise infiniteHorizon(
            "r_min=%s does not exceed the tail %s" % (rMin, profile.tail))
    if rMin >= profile.residualValue(1):
        raise noFeasibleHorizon(
            "r_min=%s is not below v(1)=%s" % (rMin, profile.residualValue(1)))

    # v(n) equals the tail from M on, which is below r_min
    for N in range(1, profile.M + 1):
        if profile.residualValue(N) > rMin > profile.residualValue(N + 1):
            if N % 2 == 0:
                raise nonOddHorizon(N)
            log.debug("Horizon N=%i for r_min=%s", N, rMin)
            return N

    # r_min hits some v(n) exactly
    raise noFeasibleHorizon("r_min=%s equals a residual value" % rMin)

def closedFormOffer(inst, n, N):
    """
    Optimal offer in round n of an N round negotiation,

    ..math::

        r^*_n = V - \\sum_{k=0}^{\\lfloor (N-n)/2 \\rfloor - 1} b_{N-1-2k}
                - \\int_0^{(2\\lfloor n/2 \\rfloor + 1)T} \\ell(\\delta) d\\delta

    :param n: Round index
    :type n: int
    :param N: Last round
    :type N: int
    :rtype: Fraction
    """
    checkHorizon(N)
    if not 1 <= n <= N:
        raise ValueError("Round %i outside 1..%i" % (n, N))

    profile = inst.profile
    late = sum((profile.block(N - 1 - 2*k) for k in range((N - n)//2)),
               Fraction(0))
    return profile.totalValue() - late - profile.cumulativeLoss(2*(n//2) + 1)

def backwardInductionOffers(inst, N):
    """
    Offers of all rounds by backward induction. The last attacker offer is
    the residual value :math:`v(N)`. A victim offers what the attacker would
    get one round later, an attacker adds the loss the victim saves by not
    waiting.

    :rtype: :class:`offerSchedule`
    """
    checkHorizon(N)
    profile = inst.profile
    offers = [profile.residualValue(N)]
    for n in range(N - 1, 0, -1):
        if n % 2 == 0:
            offers.append(offers[-1])
        else:
            offers.append(offers[-1] + profile.block(n))
    offers.reverse()
    return offerSchedule(offers)

def closedFormOffers(inst, N):
    return offerSchedule(closedFormOffer(inst, n, N) for n in range(1, N + 1))

def feasibleRounds(inst, N):
    """
    Rounds in which the attacker can get a ransom, :math:`r_{min} \\leq R(n,N)`.

    :rtype: list
    """
    schedule = closedFormOffers(inst, N)
    return [n for n in range(1, N + 1) if inst.rMin <= schedule.offer(n)]

def maximumRansom(inst, N):
    """
    Highest ransom the attacker can get, the opening offer :math:`R(1,N)`.
    """
    return closedFormOffer(inst, 1, N)

def rubinsteinSplit(v, rMax, rMin):
    """
    Infinite horizon split without time dependent losses,

    ..math::

        r_f = \\frac{\\min\\{v, r_{max}\\} + r_{min}}{2}

    :rtype: Fraction
    """
    cap = min(Fraction(v), Fraction(rMax))
    rMin = Fraction(rMin)
    if rMin > cap:
        raise noDeal("r_min=%s exceeds min(v, r_max)=%s" % (rMin, cap))
    return (cap + rMin) / 2

def round1Limit(profile):
    """
    Minimum ransom the victim pays in round 1 of an unbounded negotiation.
    The exact value sums the blocks of the victim rounds and attributes half
    of the tail to them. The approximation is half the data value.

    :param profile: Loss profile
    :type profile: :class:`~RansomNeg.Game.LossModel.lossProfile`
    :returns: exact value, approximation and whether the tail was split
    :rtype: tuple
    """
    exact = sum(profile.blocks[1::2], Fraction(0)) + profile.tail / 2
    approx = profile.totalValue() / 2
    return exact, approx, profile.tail > 0

def round1Threshold(victim):
    """
    Opening demands at or below :math:`\\min\\{V/2, r_{max}\\}` should be
    accepted right away.
    """
    return min(victim.profile.totalValue() / 2, victim.rMax)

def marginalLossLint(profile, N, ratio=None):
    """
    Warns if the loss of the last round is not small against the remaining
    value :math:`v(N+1)`.

    :returns: True if the profile passes
    :rtype: bool
    """
    if ratio is None:
        ratio = Settings.marginalLossRatio
    last = profile.block(N - 1)
    rest = profile.residualValue(N + 1)
    if last > Fraction(ratio) * rest:
        warnings.warn("Loss %s of round %i is not marginal against v(%i)=%s"
                      % (last, N, N + 1, rest), marginalLossWarning)
        return False
    return True

# Incomplete information

class incompleteInfoProfile():
    """
    Randomisation of the victim in rounds 2 and 4.

    :param q: Scaling of the low counteroffer in round 2
    :param pBar: Probability of the low counteroffer
    :param rho: Probability of accepting in round 4
    """

    def __init__(self, q, pBar, rho):
        self.q = Fraction(q)
        self.pBar = Fraction(pBar)
        self.rho = Fraction(rho)
        for name in ('q', 'pBar', 'rho'):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise ValueError("%s=%s is not a probability" % (name, value))

    def __repr__(self):
        return "incompleteInfoProfile(q=%s, pBar=%s, rho=%s)" % (
            self.q, self.pBar, self.rho)

    def checkBounds(self, loss):
        """
        Returns True if q, rho and p_bar satisfy the lower and upper bounds
        derived from the loss profile.
        """
        low, high = qBounds(loss)
        if not low <= self.q <= high:
            return False
        if self.rho < rhoLowerBound(loss, self.q):
            return False
        return self.pBar >= pBarLowerBound(loss, self.q, self.rho)

def qBounds(loss):
    """
    Admissible range :math:`[B_2/V, B_2/B_3]` of q.
    """
    B2 = loss.cumulativeLoss(2)
    B3 = loss.cumulativeLoss(3)
    if B3 == 0:
        raise ValueError("Profile has no loss during the first three rounds")
    return B2 / loss.totalValue(), B2 / B3

def rhoLowerBound(loss, q):
    v3 = loss.residualValue(3)
    excess = r2Tilde(loss, q)
    if excess <= 0:
        return Fraction(0)
    if v3 == 0:
        raise ValueError("Bound on rho undefined for v(3)=0")
    return excess / v3

def pBarLowerBound(loss, q, rho):
    denominator = Fraction(rho) * loss.residualValue(3) + \
        (1 - Fraction(q)) * loss.totalValue()
    if denominator == 0:
        raise ValueError("Bound on p_bar undefined")
    return loss.residualValue(2) / denominator

def r2Tilde(loss, q):
    """
    Low counteroffer of the victim in round 2,
    :math:`\\tilde{r}_2 = qV - B_2`.
    """
    return Fraction(q) * loss.totalValue() - loss.cumulativeLoss(2)

def victimRound2(profile, loss, r1):
    """
    Mixed response of the victim to the opening demand r1.

    :returns: pairs of (action, counteroffer, probability)
    :rtype: list
    """
    V = loss.totalValue()
    if Fraction(r1) <= V / 2:
        return [('V1', None, Fraction(1))]
    return [('V3', r2Tilde(loss, profile.q), profile.pBar),
            ('V3', loss.residualValue(2), 1 - profile.pBar)]

def counterofferResponse(profile, r2, rMin, loss=None):
    """
    Best response of the attacker in round 3 to the counteroffer r2: accept
    (A1) if it reaches r_min, otherwise counter (A3) with
    :math:`r_3 = \\max\\{r_2/q, r_{min}\\}`.

    :returns: action and counteroffer, None when accepting
    :rtype: tuple
    """
    r2 = Fraction(r2)
    rMin = Fraction(rMin)
    if loss is not None and not profile.checkBounds(loss):
        log.warning("%r violates the bounds for %r", profile, loss)
    if rMin <= r2:
        return 'A1', None
    if profile.q == 0:
        raise ValueError("Counteroffer undefined for q=0")
    return 'A3', max(r2 / profile.q, rMin)

def acceptPayoff(profile, loss):
    """
    Expected payoff of accepting the round 2 counteroffer,

    ..math::

        (1 - \\bar{p} + \\bar{p} q) v(2) + \\bar{p} (q - 1) B_2
    """
    p, q = profile.pBar, profile.q
    return (1 - p + p*q) * loss.residualValue(2) + \
        p * (q - 1) * loss.cumulativeLoss(2)

def deviationBound(profile, loss):
    """
    Upper bound :math:`\\bar{p} \\rho v(3)` of the expected payoff of
    countering the low offer.
    """
    return profile.pBar * profile.rho * loss.residualValue(3)
