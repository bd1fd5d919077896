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


import warnings
from fractions import Fraction
from itertools import product

"""
The three-stage ransomware game with a given final ransom. The victim pays
(V1) or refuses (V2); after a payment the attacker cooperates (A4) or defects
(A5), after a refusal the attacker releases (A6) or punishes (A7).
"""

victimActions = ('V1', 'V2')

attackerResponses = {
    'V1': ('A4', 'A5'),
    'V2': ('A6', 'A7')
    }
"""
Legal attacker actions after each victim action, in tie-breaking order.

:type: dict
"""

class premiseWarning(UserWarning):
    """
    Issued when the reputation parameters satisfy neither proposition.
    """

class reputationParams():
    """
    Reputation of the attacker.

    :param tauG: Trust gained by cooperating
    :param tauL: Trust lost by defecting
    :param kappaG: Credibility gained by punishing
    :param kappaL: Credibility lost by releasing without payment
    :param cR: Cost to release the data
    :param cD: Cost to delete the data
    """

    def __init__(self, tauG=0, tauL=0, kappaG=0, kappaL=0, cR=1, cD=0):
        self.tauG = Fraction(tauG)
        self.tauL = Fraction(tauL)
        self.kappaG = Fraction(kappaG)
        self.kappaL = Fraction(kappaL)
        self.cR = Fraction(cR)
        self.cD = Fraction(cD)

        if not self.cR > self.cD >= 0:
            raise ValueError("Costs must satisfy c_r > c_d >= 0")
        for name in ('tauG', 'tauL', 'kappaG', 'kappaL'):
            if getattr(self, name) < 0:
                raise ValueError("Reputation value %s must not be negative" % name)

    def __repr__(self):
        return ("reputationParams(tauG=%s, tauL=%s, kappaG=%s, kappaL=%s, "
                "cR=%s, cD=%s)" % (self.tauG, self.tauL, self.kappaG,
                                   self.kappaL, self.cR, self.cD))

class stageOutcome():
    """
    Equilibrium path of the stage game.
    """

    def __init__(self, victimAction, attackerAction, victimPayoff, attackerPayoff):
        if attackerAction not in attackerResponses[victimAction]:
            raise ValueError("Illegal action pair (%s, %s)"
                             % (victimAction, attackerAction))
        self.victimAction = victimAction
        self.attackerAction = attackerAction
        self.victimPayoff = victimPayoff
        self.attackerPayoff = attackerPayoff

    def __repr__(self):
        return "(%s, %s) payoffs (%s, %s)" % (self.victimAction,
                                              self.attackerAction,
                                              self.victimPayoff,
                                              self.attackerPayoff)

    def __eq__(self, other):
        return (self.victimAction, self.attackerAction) == \
               (other.victimAction, other.attackerAction)

    @property
    def actions(self):
        return (self.victimAction, self.attackerAction)

def payoffs(rep, rF, v, victimAction, attackerAction):
    """
    Returns the leaf payoffs (victim, attacker) of the game tree.

    :param rep: Reputation of the attacker
    :type rep: :class:`reputationParams`
    :param rF: Final ransom
    :type rF: Fraction
    :param v: Value of the data
    :type v: Fraction
    :rtype: tuple
    """
    rF = Fraction(rF)
    v = Fraction(v)
    pair = (victimAction, attackerAction)

    if pair == ('V1', 'A4'):
        return -rF, rF - rep.cR + rep.tauG
    elif pair == ('V1', 'A5'):
        return -rF - v, rF - rep.cD - rep.tauL
    elif pair == ('V2', 'A6'):
        return Fraction(0), -rep.cR - rep.kappaL + rep.tauG
    elif pair == ('V2', 'A7'):
        return -v, -rep.cD + rep.kappaG
    raise ValueError("Illegal action pair (%s, %s)" % pair)

def premises(rep):
    """
    Checks which proposition premises hold for the reputation.
    'anonymous': no trust, positive threat credibility;
    'reputation': threat credibility above trust above zero and
    :math:`\\tau_g + \\tau_l > c_r`.

    :rtype: dict
    """
    tau = rep.tauG + rep.tauL
    kappa = rep.kappaG + rep.kappaL
    return {
        'anonymous': tau == 0 and kappa > 0,
        'reputation': kappa > tau > 0 and tau > rep.cR
        }

def attackerBestResponse(rep, rF, v, victimAction):
    """
    Attacker's payoff maximising reply. Ties go to the first action in
    :data:`attackerResponses`.

    :rtype: string
    """
    best = None
    for action in attackerResponses[victimAction]:
        value = payoffs(rep, rF, v, victimAction, action)[1]
        if best is None or value > best[1]:
            best = (action, value)
    return best[0]

def spne(rep, rF, v, rMax):
    """
    Subgame perfect equilibrium by backward induction. Paying is only
    possible if the ransom stays below r_max; at equal payoffs the victim
    refuses.

    :param rep: Reputation of the attacker
    :type rep: :class:`reputationParams`
    :param rF: Final ransom
    :param v: Value of the data
    :param rMax: Maximum payable ransom
    :rtype: :class:`stageOutcome`
    """
    rF = Fraction(rF)
    if rF < 0:
        raise ValueError("Negative ransom %s" % rF)

    held = premises(rep)
    if not (held['anonymous'] or held['reputation']):
        warnings.warn("Reputation %r satisfies no proposition premise" % rep,
                      premiseWarning)

    replies = dict((a, attackerBestResponse(rep, rF, v, a)) for a in victimActions)
    refuse = payoffs(rep, rF, v, 'V2', replies['V2'])
    pay = payoffs(rep, rF, v, 'V1', replies['V1'])

    if rF < Fraction(rMax) and pay[0] > refuse[0]:
        return stageOutcome('V1', replies['V1'], *pay)
    return stageOutcome('V2', replies['V2'], *refuse)

def bruteForceSpne(rep, rF, v, rMax):
    """
    Enumerates all pure strategy profiles (victim action, attacker reply to
    V1, attacker reply to V2) and returns the equilibrium paths of those that
    are subgame perfect. Used to cross-check :func:`spne`.

    :rtype: list
    """
    rF = Fraction(rF)
    canPay = rF < Fraction(rMax)
    found = []

    for a, replyPay, replyRefuse in product(victimActions,
                                            attackerResponses['V1'],
                                            attackerResponses['V2']):
        if a == 'V1' and not canPay:
            continue
        reply = {'V1': replyPay, 'V2': replyRefuse}

        # Every attacker subgame must be played optimally
        perfect = True
        for node in victimActions:
            own = payoffs(rep, rF, v, node, reply[node])[1]
            for other in attackerResponses[node]:
                if payoffs(rep, rF, v, node, other)[1] > own:
                    perfect = False
        if not perfect:
            continue

        # No profitable victim deviation, refusal wins ties
        mine = payoffs(rep, rF, v, a, reply[a])[0]
        other = 'V2' if a == 'V1' else 'V1'
        theirs = payoffs(rep, rF, v, other, reply[other])[0]
        if other == 'V1' and not canPay:
            theirs = None
        if theirs is not None and (theirs > mine or (theirs == mine and other == 'V2')):
            continue
        found.append(stageOutcome(a, reply[a], *payoffs(rep, rF, v, a, reply[a])))
    return found

def maximumRansom(v, rMax):
    """
    Highest ransom a rational victim pays, :math:`\\min(v, r_{max})`.

    :rtype: Fraction
    """
    return min(Fraction(v), Fraction(rMax))
