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
from fractions import Fraction

from RansomNeg.Mechanism.Mechanism import outcomeReal, report

"""
Expected utilities under the mechanism and grid checks that truthful
reporting is optimal for both parties.
"""

log = logging.getLogger(__name__)

class bicReport():
    """
    Result of a grid check.

    :param passed: True if no report beats the truthful one
    :param worstGap: Largest advantage of a non-truthful report
    :param checked: Number of compared (type, report) pairs
    :param worstCase: Point of the worst gap
    :param violations: Points where a report beats the truthful one
    """

    def __init__(self, passed, worstGap, checked, worstCase=None,
                 violations=()):
        self.passed = passed
        self.worstGap = worstGap
        self.checked = checked
        self.worstCase = worstCase
        self.violations = list(violations)

    def __repr__(self):
        return "bicReport(passed=%s, worstGap=%s, checked=%i)" % (
            self.passed, self.worstGap, self.checked)

    def __bool__(self):
        return self.passed

def coinOutcomes(params):
    """
    The four outcomes of the two coins as draws (u0, u1) with their
    probabilities. Zero probability outcomes are left out.

    :rtype: list
    """
    result = []
    for u0, p0 in ((Fraction(0), params.pBar), (params.pBar, 1 - params.pBar)):
        for u1, p1 in ((Fraction(0), params.q), (params.q, 1 - params.q)):
            if p0 * p1 > 0:
                result.append((u0, u1, p0 * p1))
    return result

def expectedAttackerUtility(params, thetaA, reportA, thetaVReport):
    """
    Expected utility :math:`\\beta - \\alpha\\theta^A` of an attacker with
    valuation thetaA who reports reportA.

    :rtype: Fraction
    """
    thetaA = Fraction(thetaA)
    rep = report(thetaVReport, reportA)
    total = Fraction(0)
    for u0, u1, p in coinOutcomes(params):
        outcome = outcomeReal(params, rep, u0, u1)
        total += p * (outcome.rF - outcome.alpha * thetaA)
    return total

def attackerUtilityFormula(params, thetaA, reportA, thetaVReport):
    """
    Closed piecewise form of :func:`expectedAttackerUtility`,

    ..math::

        \\mathbb{E}[u^A] = \\begin{cases}
            \\bar{p}(q\\hat{\\theta}^V - \\theta^A)
                + (1-\\bar{p})(\\hat{\\theta}^V - \\theta^A)
                & \\hat{\\theta}^A \\leq q\\hat{\\theta}^V \\\\
            (1-\\bar{p}+\\bar{p}q)\\hat{\\theta}^V - \\theta^A
                & q\\hat{\\theta}^V < \\hat{\\theta}^A \\leq \\hat{\\theta}^V \\\\
            0 & \\text{otherwise}
        \\end{cases}

    Both agree whenever the accepted offer is positive.
    """
    p, q = params.pBar, params.q
    thetaA = Fraction(thetaA)
    reportA = Fraction(reportA)
    thetaV = Fraction(thetaVReport)

    if reportA <= q * thetaV:
        return p * (q*thetaV - thetaA) + (1 - p) * (thetaV - thetaA)
    elif reportA <= thetaV:
        return (1 - p) * (thetaV - thetaA) + p * q * (thetaV - thetaA) \
            - p * (1 - q) * thetaA
    return Fraction(0)

def uniformCdf(prior):
    """
    CDF of the attacker's report after normalising the prior support
    ``(lo, hi)`` to [0, 1].
    """
    lo, hi = (Fraction(x) for x in prior)
    if not hi > lo:
        raise ValueError("Empty prior support [%s, %s]" % (lo, hi))
    return lambda u: min(max(u, Fraction(0)), Fraction(1))

def normalise(x, prior):
    lo, hi = (Fraction(v) for v in prior)
    return (Fraction(x) - lo) / (hi - lo)

def expectedVictimUtility(params, thetaV, reportV, prior=(0, 1)):
    """
    Interim utility :math:`\\alpha\\theta^V - \\beta` of a victim with
    valuation thetaV reporting reportV, averaged over a truthful attacker
    whose valuation is uniform on the prior support. Values are mapped to
    [0, 1] by :math:`u = (x - \\underline{r})/(\\overline{r} - \\underline{r})`.

    ..math::

        F(q\\hat{\\theta}^V)(\\bar{p}\\theta^V - \\bar{p}q\\hat{\\theta}^V)
        + F(q\\hat{\\theta}^V)(1-\\bar{p})(\\theta^V - \\hat{\\theta}^V)
        + (F(\\hat{\\theta}^V) - F(q\\hat{\\theta}^V))
          ((1-\\bar{p}+\\bar{p}q)(\\theta^V - \\hat{\\theta}^V)
           + \\bar{p}(1-q)\\theta^V)

    :param prior: Support of the uniform prior
    :type prior: tuple
    :rtype: Fraction
    """
    F = uniformCdf(prior)
    p, q = params.pBar, params.q
    theta = normalise(thetaV, prior)
    r = normalise(reportV, prior)

    low = F(q * r)
    mid = F(r) - low
    return low * (p * (theta - q*r) + (1 - p) * (theta - r)) + \
        mid * ((1 - p) * (theta - r) + p * q * (theta - r) + p * (1 - q) * theta)

def victimUtilityFormula(params, thetaV, reportV, prior=(0, 1)):
    """
    Collapsed form :math:`F(\\hat{\\theta}^V)(\\theta^V - c\\hat{\\theta}^V)`
    with :math:`c = 1-\\bar{p}+\\bar{p}q`, valid since
    :math:`\\bar{p}(1-q) + c = 1`.
    """
    F = uniformCdf(prior)
    theta = normalise(thetaV, prior)
    r = normalise(reportV, prior)
    return F(r) * (theta - params.paymentShare * r)

def verifyAttackerDominance(params, grid, victimReports=None, rationalOnly=False):
    """
    Checks on a grid of values that no attacker report yields more expected
    utility than the truthful one, for every victim report.

    A truthful attacker whose valuation lies between
    :math:`(1-\\bar{p}+\\bar{p}q)\\hat{\\theta}^V` and :math:`\\hat{\\theta}^V`
    expects a negative utility and gains by reporting above
    :math:`\\hat{\\theta}^V`. With rationalOnly such types, the ones with a
    negative truthful utility, are skipped.

    :param grid: Valuations and reports of the attacker
    :type grid: list
    :param victimReports: Victim reports, the grid if omitted
    :type victimReports: list
    :param rationalOnly: Skip types with a negative truthful utility
    :type rationalOnly: bool
    :rtype: :class:`bicReport`
    """
    grid = [Fraction(x) for x in grid]
    if victimReports is None:
        victimReports = grid
    worst = None
    worstCase = None
    violations = []
    checked = 0

    for thetaV in victimReports:
        thetaV = Fraction(thetaV)
        for thetaA in grid:
            truthful = expectedAttackerUtility(params, thetaA, thetaA, thetaV)
            if rationalOnly and truthful < 0:
                continue
            for reportA in grid:
                gap = expectedAttackerUtility(params, thetaA, reportA, thetaV) \
                    - truthful
                checked += 1
                if gap > 0:
                    violations.append((thetaA, reportA, thetaV))
                if worst is None or gap > worst:
                    worst = gap
                    worstCase = (thetaA, reportA, thetaV)

    passed = not violations
    log.info("Attacker dominance on %i points: %s, worst gap %s",
             checked, "passed" if passed else "failed", worst)
    return bicReport(passed, worst, checked, worstCase, violations)

def verifyVictimOptimality(params, thetas, step=Fraction(1, 1024), prior=(0, 1)):
    """
    For every valuation, searches the report grid ``0, step, ..., 1`` of the
    normalised support for the maximum interim utility. Passes if the
    maximiser lies within one grid step of the truthful report.

    :param thetas: Victim valuations inside the prior support
    :type thetas: list
    :param step: Grid step
    :type step: Fraction
    :rtype: :class:`bicReport`
    """
    lo, hi = (Fraction(x) for x in prior)
    step = Fraction(step)
    count = int(1 / step)
    reports = [lo + (hi - lo) * step * i for i in range(count + 1)]

    passed = True
    worst = Fraction(0)
    worstCase = None
    checked = 0

    for thetaV in thetas:
        thetaV = Fraction(thetaV)
        truthful = expectedVictimUtility(params, thetaV, thetaV, prior)
        best, bestReport = None, None
        for r in reports:
            value = expectedVictimUtility(params, thetaV, r, prior)
            checked += 1
            if best is None or value > best:
                best, bestReport = value, r
        if abs(normalise(bestReport, prior) - normalise(thetaV, prior)) > step:
            passed = False
            worstCase = (thetaV, bestReport)
        if best - truthful > worst:
            worst = best - truthful
            if passed:
                worstCase = (thetaV, bestReport)

    log.info("Victim optimality on %i points: %s, worst gap %s",
             checked, "passed" if passed else "failed", worst)
    return bicReport(passed, worst, checked, worstCase)
