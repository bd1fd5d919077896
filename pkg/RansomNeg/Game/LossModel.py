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


from fractions import Fraction

"""
Financial loss dynamics of a ransomware victim. The loss rate is never held as
a function; it enters every formula through its integrals over bargaining
rounds. A profile therefore stores the mass of each round (block) plus the mass
after the last block (tail). Amounts are exact rationals.
"""

class lossProfile():
    """
    Discretised loss rate of the victim.

    :param l0: Immediate downtime loss :math:`L_0`
    :type l0: Fraction
    :param blocks: Loss inside each round,
        :math:`b_j = \\int_{jT}^{(j+1)T} \\ell(\\delta) d\\delta`
    :type blocks: list
    :param tail: Loss after the last block
    :type tail: Fraction
    :param roundLength: Duration :math:`T` of one bargaining round
    :type roundLength: Fraction
    """

    def __init__(self, l0=0, blocks=(), tail=0, roundLength=1):
        self.l0 = Fraction(l0)
        self.blocks = tuple(Fraction(b) for b in blocks)
        self.tail = Fraction(tail)
        self.roundLength = Fraction(roundLength)

        if self.l0 < 0:
            raise ValueError("Immediate loss l0 must not be negative")
        if self.tail < 0:
            raise ValueError("Tail mass must not be negative")
        for j, b in enumerate(self.blocks):
            if b < 0:
                raise ValueError("Block %i has a negative loss %s" % (j, b))
        if self.roundLength <= 0:
            raise ValueError("Round length must be positive")

        # Prefix sums B_n, B_0 = 0
        self._cumulative = [Fraction(0)]
        for b in self.blocks:
            self._cumulative.append(self._cumulative[-1] + b)

    def __repr__(self):
        return "lossProfile(l0=%s, blocks=[%s], tail=%s, T=%s)" % (
            self.l0, ", ".join(str(b) for b in self.blocks), self.tail,
            self.roundLength)

    def __eq__(self, other):
        return isinstance(other, lossProfile) and \
            (self.l0, self.blocks, self.tail, self.roundLength) == \
            (other.l0, other.blocks, other.tail, other.roundLength)

    def __hash__(self):
        return hash((self.l0, self.blocks, self.tail, self.roundLength))

    @classmethod
    def fromConfig(cls, cfg):
        """
        Reads ``l0``, ``blocks``, ``tail`` and ``round_length`` from a
        :class:`~RansomNeg.Basic.Config.configFile`.
        """
        return cls(
                cfg.fraction('l0', 0),
                cfg.fractions('blocks', []),
                cfg.fraction('tail', 0),
                cfg.fraction('round_length', 1)
                )

    @property
    def M(self):
        """
        Number of blocks
        """
        return len(self.blocks)

    def block(self, j):
        """
        Loss in round j. Rounds after the last block return 0, the tail is
        not split over rounds.

        :rtype: Fraction
        """
        if j < 0:
            raise ValueError("Negative round index %i" % j)
        if j < self.M:
            return self.blocks[j]
        return Fraction(0)

    def totalValue(self):
        """
        Value of the encrypted data,
        :math:`v = \\int_0^\\infty \\ell(\\delta) d\\delta`.

        :rtype: Fraction
        """
        return self._cumulative[-1] + self.tail

    def cumulativeLoss(self, n):
        """
        Loss accumulated during the first n rounds,
        :math:`B_n = \\int_0^{nT} \\ell(\\delta) d\\delta`.

        :rtype: Fraction
        """
        if n < 0:
            raise ValueError("Negative round index %i" % n)
        return self._cumulative[min(n, self.M)]

    def residualValue(self, n):
        """
        Value of the data after n rounds, :math:`v(n) = v - B_n`. Equals the
        tail for n beyond the last block.

        :rtype: Fraction
        """
        return self.totalValue() - self.cumulativeLoss(n)

    def residualValueAt(self, t):
        """
        Value of the data at an arbitrary time t. The loss rate is taken as
        constant inside a block; after the last block the tail remains.

        :param t: Time since the attack began
        :type t: Fraction
        :rtype: Fraction
        """
        t = Fraction(t)
        if t < 0:
            raise ValueError("Negative time %s" % t)
        rounds = t / self.roundLength
        n = rounds.numerator // rounds.denominator
        if n >= self.M:
            return self.tail
        return self.residualValue(n) - (rounds - n) * self.blocks[n]

class victimParams():
    """
    Victim side of the negotiation.

    :param rMax: Maximum ransom the victim can pay
    :type rMax: Fraction
    :param profile: Loss profile
    :type profile: :class:`lossProfile`
    """

    def __init__(self, rMax, profile):
        self.rMax = Fraction(rMax)
        self.profile = profile
        if self.rMax < 0:
            raise ValueError("r_max must not be negative")

    def __repr__(self):
        return "victimParams(rMax=%s, %r)" % (self.rMax, self.profile)

    @classmethod
    def fromConfig(cls, cfg):
        return cls(cfg.fraction('r_max'), lossProfile.fromConfig(cfg))

    def reservation(self, n):
        """
        Reservation value after n rounds,
        :math:`\\psi(nT) = \\min\\{v(n), r_{max}\\}`.

        :rtype: Fraction
        """
        return min(self.profile.residualValue(n), self.rMax)

    def reservationAt(self, t):
        """
        Reservation value :math:`\\psi(t)` at an arbitrary time.

        :rtype: Fraction
        """
        return min(self.profile.residualValueAt(t), self.rMax)

def totalValue(profile):
    return profile.totalValue()

def residualValue(profile, n):
    return profile.residualValue(n)

def reservation(victim, n):
    return victim.reservation(n)

def totalLoss(victim, settleRound, rF, released=True):
    """
    Total financial loss of the victim with the intangible losses set to
    zero,

    ..math::

        L = L_0 + \\int_0^{nT} \\ell(\\delta) d\\delta + r_f

    If the data is never released the whole value v is lost.

    :param victim: Victim parameters
    :type victim: :class:`victimParams`
    :param settleRound: Round in which the data is released
    :type settleRound: int
    :param rF: Paid ransom
    :type rF: Fraction
    :param released: Whether the data is released
    :type released: bool
    :rtype: Fraction
    """
    rF = Fraction(rF)
    if rF < 0:
        raise ValueError("Negative ransom %s" % rF)
    profile = victim.profile
    if released:
        elapsed = profile.cumulativeLoss(settleRound)
    else:
        elapsed = profile.totalValue()
    return profile.l0 + elapsed + rF

def fixedLoss(victim, attackerAction, rF):
    """
    Loss without accumulation over time: the value v is lost unless the
    attacker cooperates (A4) or releases (A6).

    ..math::

        L = L_0 + \\mathbb{I}(a^A \\notin \\{A4, A6\\}) v + r_f

    :param attackerAction: Final action of the attacker, 'A4' to 'A7'
    :type attackerAction: string
    :rtype: Fraction
    """
    rF = Fraction(rF)
    if rF < 0:
        raise ValueError("Negative ransom %s" % rF)
    if attackerAction not in ('A4', 'A5', 'A6', 'A7'):
        raise ValueError("Unknown attacker action %s" % attackerAction)
    profile = victim.profile
    lost = 0 if attackerAction in ('A4', 'A6') else profile.totalValue()
    return profile.l0 + lost + rF
