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

from RansomNeg.Circuit.Circuit import circuitBuilder
from RansomNeg.Mechanism.Mechanism import checkWidth, arithmeticWidth, \
    mechanismOutcome, scaledParams

"""
Circuit form of the fixed-point mechanism outcome. Both parties feed a share
of each random word and their report; the shares are XORed inside the
circuit so neither party controls the coins.
"""

log = logging.getLogger(__name__)

victimInputs = ('s0_v', 's1_v', 'theta_v')
attackerInputs = ('s0_a', 's1_a', 'theta_a')

_built = {}

def buildMechanismCircuit(params, scaled=None):
    """
    Builds the circuit with inputs, in wire order, s0_v, s1_v (k bits),
    theta_v (k_theta bits), s0_a, s1_a, theta_a and outputs r_f
    (k_theta + 1 bits), alpha and sigma. There is no overflow flag: the top
    bit of r_f is always clear, and :func:`checkWidth` raises
    :class:`widthOverflow` before building when any intermediate value could
    overflow. The scaled constants are hard-wired. One circuit per parameter
    set is built and then handed out again.

    :param params: Mechanism parameters
    :type params: :class:`~RansomNeg.Mechanism.Mechanism.mechanismParams`
    :param scaled: Scaled constants, derived from params if omitted
    :type scaled: :class:`~RansomNeg.Mechanism.Mechanism.scaledParams`
    :rtype: :class:`~RansomNeg.Circuit.Circuit.circuit`
    """
    if scaled is None:
        scaled = scaledParams.fromParams(params)
    checkWidth(params, scaled)

    key = (params.key(), scaled.pScale, scaled.qScale, scaled.invQScale)
    if key not in _built:
        _built[key] = _build(params, scaled)
    return _built[key]

def _build(params, scaled):
    k = params.k
    kTheta = params.kTheta
    width = arithmeticWidth(params)

    b = circuitBuilder()
    s0v = b.addInput('s0_v', k)
    s1v = b.addInput('s1_v', k)
    thetaV = b.addInput('theta_v', kTheta)
    s0a = b.addInput('s0_a', k)
    s1a = b.addInput('s1_a', k)
    thetaA = b.addInput('theta_a', kTheta)

    S0 = [b.XOR(x, y) for x, y in zip(s0v, s0a)]
    S1 = [b.XOR(x, y) for x, y in zip(s1v, s1a)]

    # Round 2
    low = b.lessThan(b.extend(S0, k + 1), b.constant(scaled.pScale, k + 1))
    qv = b.shiftRight(
        b.multiply(thetaV, b.constant(scaled.qScale, k), kTheta + k), k)
    r2 = b.mux(low, qv, thetaV)
    accept2 = b.lessEqual(thetaA, r2)

    # Round 3 and 4
    r2q = b.shiftRight(
        b.multiply(b.extend(r2, width), b.constant(scaled.invQScale, width),
                   width), k)
    r3 = b.maximum(r2q, b.extend(thetaA, width - k))
    ok3 = b.lessEqual(r3, b.extend(thetaV, width - k))
    pay3 = b.lessThan(S1, b.constant(scaled.qScale, k))

    paid = b.mux(b.AND(ok3, pay3), r3, [False] * len(r3))
    rF = b.extend(b.mux(accept2, b.extend(r2, len(r3)), paid), kTheta + 1)

    sigma = b.AND(b.AND(b.NOT(accept2), ok3), b.NOT(pay3))
    alpha = b.OR(b.nonZero(rF), sigma)

    b.addOutput('r_f', rF)
    b.addOutput('alpha', [alpha])
    b.addOutput('sigma', [sigma])

    result = b.build()
    log.debug("Built mechanism circuit for %r: %r", params, result)
    return result

def mechanismInputs(thetaV, thetaA, s0v, s1v, s0a=0, s1a=0):
    """
    Named circuit inputs. With zero attacker shares the random words are
    the victim shares.

    :rtype: dict
    """
    return {'s0_v': s0v, 's1_v': s1v, 'theta_v': int(thetaV),
            's0_a': s0a, 's1_a': s1a, 'theta_a': int(thetaA)}

def decodeOutcome(outputs):
    """
    Turns named circuit outputs into an outcome.

    :param outputs: Output name to integer
    :type outputs: dict
    :rtype: :class:`~RansomNeg.Mechanism.Mechanism.mechanismOutcome`
    """
    return mechanismOutcome(outputs['alpha'], outputs['r_f'], outputs['sigma'])
