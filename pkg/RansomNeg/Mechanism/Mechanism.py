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

import numpy as np

from RansomNeg import Settings
from RansomNeg.Basic.Utilities import isDyadic

"""
Negotiation mechanism with coin-flip biases q and p_bar. The victim counters
in round 2 with a low offer :math:`q\\hat{\\theta}^V` (probability p_bar) or
the full report, the attacker accepts or asks for
:math:`\\max\\{r_2/q, \\hat{\\theta}^A\\}`, which the victim pays with
probability q and otherwise gets the data without payment.

The outcome is given twice: with exact rationals and uniform draws, and in
integer fixed-point arithmetic with k-bit random words. The integer version is
the one the circuit implements.
"""

log = logging.getLogger(__name__)

class dyadicWarning(UserWarning):
    """
    q is not a dyadic rational, fixed-point scaling rounds.
    """

class widthOverflow(ValueError):
    """
    An intermediate product does not fit the arithmetic width.
    """

class mechanismParams():
    """
    Public parameters of the mechanism, agreed on by both parties.

    :param q: Probability of paying the round 3 counteroffer, also the
        scaling of the low round 2 offer
    :type q: Fraction
    :param pBar: Probability of the low round 2 offer
    :type pBar: Fraction
    :param kTheta: Bitwidth of the reported values
    :type kTheta: int
    :param k: Bitwidth of the random words
    :type k: int
    """

    def __init__(self, q, pBar, kTheta=None, k=None):
        self.q = Fraction(q)
        self.pBar = Fraction(pBar)
        self.kTheta = Settings.kTheta if kTheta is None else int(kTheta)
        self.k = Settings.k if k is None else int(k)

        if not 0 < self.q <= Fraction(1, 2):
            raise ValueError("q=%s outside (0, 1/2]" % self.q)
        if not Fraction(1, 2) <= self.pBar <= 1:
            raise ValueError("p_bar=%s outside [1/2, 1]" % self.pBar)
        if self.pBar * (1 - self.q) != Fraction(1, 2):
            raise ValueError("p_bar*(1-q) = %s, must be 1/2"
                             % (self.pBar * (1 - self.q)))
        if self.kTheta < 1 or self.k < 1:
            raise ValueError("Bitwidths must be positive")
        if not isDyadic(self.q):
            warnings.warn("q=%s is not dyadic, scaled constants round"
                          % self.q, dyadicWarning)

    def __repr__(self):
        return "mechanismParams(q=%s, pBar=%s, kTheta=%i, k=%i)" % (
            self.q, self.pBar, self.kTheta, self.k)

    def __eq__(self, other):
        return isinstance(other, mechanismParams) and \
            self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.q, self.pBar, self.kTheta, self.k)

    @classmethod
    def fromQ(cls, q, kTheta=None, k=None):
        """
        Solves :math:`\\bar{p}(1-q) = 1/2` for p_bar.
        """
        q = Fraction(q)
        return cls(q, 1 / (2*(1 - q)), kTheta, k)

    @classmethod
    def fromPBar(cls, pBar, kTheta=None, k=None):
        pBar = Fraction(pBar)
        return cls(1 - 1 / (2*pBar), pBar, kTheta, k)

    @classmethod
    def fromConfig(cls, cfg):
        q = cfg.fraction('q')
        pBar = cfg.fraction('p_bar', 1 / (2*(1 - q)))
        return cls(q, pBar, cfg.integer('k_theta', Settings.kTheta),
                   cfg.integer('k', Settings.k))

    @property
    def paymentShare(self):
        """
        Expected share of the report the victim pays,
        :math:`1 - \\bar{p} + \\bar{p}q`. Equal to 1/2.
        """
        return 1 - self.pBar + self.pBar * self.q

    def describe(self):
        """
        Canonical text form, exchanged in the protocol handshake.

        :rtype: string
        """
        return "q=%s;p_bar=%s;k=%i;k_theta=%i" % (self.q, self.pBar, self.k,
                                                 self.kTheta)

class scaledParams():
    """
    Fixed-point constants :math:`\\lfloor x 2^k \\rfloor` for p_bar, q and 1/q.
    """

    def __init__(self, pScale, qScale, invQScale):
        self.pScale = int(pScale)
        self.qScale = int(qScale)
        self.invQScale = int(invQScale)

    def __repr__(self):
        return "scaledParams(pScale=%i, qScale=%i, invQScale=%i)" % (
            self.pScale, self.qScale, self.invQScale)

    def __eq__(self, other):
        return (self.pScale, self.qScale, self.invQScale) == \
               (other.pScale, other.qScale, other.invQScale)

    @classmethod
    def fromParams(cls, params):
        one = 1 << params.k
        scale = lambda x: (x * one).numerator // (x * one).denominator
        return cls(scale(params.pBar), scale(params.q), scale(1 / params.q))

def arithmeticWidth(params):
    """
    Width :math:`2k_\\theta + k` of the product :math:`r_2 (1/q)_{scale}`.
    """
    return 2*params.kTheta + params.k

def checkWidth(params, scaled, maxWidth=None):
    """
    Raises :class:`widthOverflow` if the scaled constants or the products
    exceed the arithmetic width.
    """
    if maxWidth is None:
        maxWidth = Settings.maxWidth
    width = arithmeticWidth(params)
    if width > maxWidth:
        raise widthOverflow("Arithmetic width %i exceeds %i" % (width, maxWidth))
    if scaled.invQScale.bit_length() > params.kTheta + params.k:
        raise widthOverflow("(1/q)_scale=%i needs more than %i bits"
                            % (scaled.invQScale, params.kTheta + params.k))
    if scaled.pScale.bit_length() > params.k + 1 or \
       scaled.qScale.bit_length() > params.k:
        raise widthOverflow("Scaled probabilities exceed %i bits" % params.k)

class report():
    """
    Reported types, :math:`\\hat{\\theta}^V` of the victim and
    :math:`\\hat{\\theta}^A` of the attacker.
    """

    def __init__(self, thetaV, thetaA):
        self.thetaV = Fraction(thetaV)
        self.thetaA = Fraction(thetaA)
        if self.thetaV < 0 or self.thetaA < 0:
            raise ValueError("Reports must not be negative")

    def __repr__(self):
        return "report(thetaV=%s, thetaA=%s)" % (self.thetaV, self.thetaA)

    def checkFixed(self, kTheta):
        """
        Both reports must be integers below :math:`2^{k_\\theta}`.
        """
        for name, value in (('thetaV', self.thetaV), ('thetaA', self.thetaA)):
            if value.denominator != 1 or value >= (1 << kTheta):
                raise ValueError("%s=%s is not a %i bit integer"
                                 % (name, value, kTheta))

class mechanismOutcome():
    """
    Allocation alpha, payment rF and release flag sigma.
    """

    def __init__(self, alpha, rF, sigma):
        self.alpha = bool(alpha)
        self.rF = Fraction(rF)
        self.sigma = bool(sigma)

        if self.alpha != (self.rF > 0 or self.sigma):
            raise ValueError("alpha must equal (r_f > 0 or sigma)")
        if self.sigma and self.rF != 0:
            raise ValueError("Release without payment with r_f=%s" % self.rF)

    @classmethod
    def fromPayment(cls, rF, sigma=False):
        """
        Applies the allocation rule :math:`\\alpha = (r_f > 0 \\lor \\sigma)`.
        """
        return cls(Fraction(rF) > 0 or sigma, rF, sigma)

    def __eq__(self, other):
        return (self.alpha, self.rF, self.sigma) == \
               (other.alpha, other.rF, other.sigma)

    def __repr__(self):
        return "mechanismOutcome(alpha=%i, rF=%s, sigma=%i)" % (
            self.alpha, self.rF, self.sigma)

def outcomeReal(params, rep, u0, u1):
    """
    Outcome with exact arithmetic. u0 selects the round 2 offer, u1 the
    victim's round 4 decision.

    :param params: Mechanism parameters
    :type params: :class:`mechanismParams`
    :param rep: Reports
    :type rep: :class:`report`
    :param u0: Uniform draw in [0, 1)
    :param u1: Uniform draw in [0, 1)
    :rtype: :class:`mechanismOutcome`
    """
    for u in (u0, u1):
        if not 0 <= u < 1:
            raise ValueError("Draw %s outside [0, 1)" % u)

    q = params.q
    r2 = q * rep.thetaV if u0 < params.pBar else rep.thetaV
    if rep.thetaA <= r2:
        return mechanismOutcome.fromPayment(r2)

    r3 = max(r2 / q, rep.thetaA)
    if r3 <= rep.thetaV:
        if u1 < q:
            return mechanismOutcome.fromPayment(r3)
        return mechanismOutcome.fromPayment(0, sigma=True)
    return mechanismOutcome.fromPayment(0)

def outcomeFixed(params, scaled, rep, s0, s1):
    """
    Outcome in fixed-point arithmetic. Multiplications by q and 1/q are
    products with the scaled constants followed by a right shift by k.

    :param scaled: Scaled constants
    :type scaled: :class:`scaledParams`
    :param s0: k-bit random word for the round 2 choice
    :type s0: int
    :param s1: k-bit random word for the round 4 choice
    :type s1: int
    :rtype: :class:`mechanismOutcome`
    """
    k = params.k
    for s in (s0, s1):
        if not 0 <= s < (1 << k):
            raise ValueError("Random word %i is not a %i bit value" % (s, k))
    rep.checkFixed(params.kTheta)
    checkWidth(params, scaled)

    thetaV = rep.thetaV.numerator
    thetaA = rep.thetaA.numerator

    if s0 < scaled.pScale:
        r2 = (thetaV * scaled.qScale) >> k
    else:
        r2 = thetaV
    if thetaA <= r2:
        return mechanismOutcome.fromPayment(r2)

    r3 = max((r2 * scaled.invQScale) >> k, thetaA)
    if r3 <= thetaV:
        if s1 < scaled.qScale:
            return mechanismOutcome.fromPayment(r3)
        return mechanismOutcome.fromPayment(0, sigma=True)
    return mechanismOutcome.fromPayment(0)

def expectedPayment(params, thetaV):
    """
    Expected payment of a truthful victim whenever the attacker's report does
    not exceed hers, :math:`(1 - \\bar{p} + \\bar{p}q)\\theta^V = \\theta^V/2`.

    :rtype: Fraction
    """
    return params.paymentShare * Fraction(thetaV)

def expectedPaymentExact(params, thetaV, thetaA):
    """
    Expected payment by enumeration of the four coin outcomes.

    :rtype: Fraction
    """
    rep = report(thetaV, thetaA)
    total = Fraction(0)
    for low, pLow in ((True, params.pBar), (False, 1 - params.pBar)):
        for pay, pPay in ((True, params.q), (False, 1 - params.q)):
            u0 = Fraction(0) if low else params.pBar
            u1 = Fraction(0) if pay else params.q
            if u0 >= 1 or u1 >= 1:
                continue
            total += pLow * pPay * outcomeReal(params, rep, u0, u1).rF
    return total

def simulatePayments(params, thetaV, thetaA, draws=1000000, seed=None):
    """
    Monte Carlo estimate of the payment with uniform draws.

    :param draws: Number of samples
    :type draws: int
    :param seed: Seed of the generator (optional)
    :returns: mean and its standard error
    :rtype: tuple
    """
    rng = np.random.default_rng(seed)
    q = float(params.q)
    thetaV = float(thetaV)
    thetaA = float(thetaA)

    low = rng.random(draws) < float(params.pBar)
    pay = rng.random(draws) < q

    r2 = np.where(low, q * thetaV, thetaV)
    r3 = np.maximum(r2 / q, thetaA)
    accept = thetaA <= r2
    rF = np.where(accept, r2, np.where((r3 <= thetaV) & pay, r3, 0.0))

    log.debug("Simulated %i payments for thetaV=%s thetaA=%s",
              draws, thetaV, thetaA)
    return float(rF.mean()), float(rF.std(ddof=1) / np.sqrt(draws))
