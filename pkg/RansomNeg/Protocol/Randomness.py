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

import numpy as np
from scipy.stats import chisquare

from RansomNeg.Crypto.Entropy import randomSource

"""
The coins of the mechanism are XORs of one word from each party. As long as
one party draws uniformly, the XOR is uniform whatever the other one sends.
"""

log = logging.getLogger(__name__)

maxCells = 1 << 20

def combineShares(victimShare, attackerShare):
    return victimShare ^ attackerShare

def victimShares(source, k, count):
    """
    Words of the victim as the sessions draw them, from the ``shares``
    child of the session's random source.

    :type source: :class:`~RansomNeg.Crypto.Entropy.randomSource`
    :rtype: numpy.ndarray
    """
    return source.derive('shares').integers(k, count)

def xorUniformity(attackerShare, k=8, samples=1000000, seed=None, source=None):
    """
    Chi-square test of :math:`S^V \\oplus S^A` for victim words from the
    protocol's random source and a fixed attacker word.

    :param attackerShare: Fixed k-bit word of the attacker
    :type attackerShare: int
    :param k: Bitwidth
    :type k: int
    :param samples: Number of victim words
    :type samples: int
    :param seed: Seed of the victim's source, the operating system's
        entropy pool if omitted
    :type seed: bytes
    :param source: Victim source, overrides the seed (optional)
    :type source: :class:`~RansomNeg.Crypto.Entropy.randomSource`
    :returns: chi-square statistic and p-value
    :rtype: tuple
    """
    if not 0 <= attackerShare < (1 << k):
        raise ValueError("Attacker word %i does not fit %i bits"
                         % (attackerShare, k))
    if (1 << k) > maxCells:
        raise ValueError("Too many cells for k=%i" % k)
    if source is None:
        source = randomSource(seed)
    victim = victimShares(source, k, samples)
    combined = np.bitwise_xor(victim, np.uint64(attackerShare))
    counts = np.bincount(combined.astype(np.int64), minlength=1 << k)
    statistic, pValue = chisquare(counts)
    log.debug("XOR uniformity for S_A=%i from %r: chi2=%.2f p=%.4f",
              attackerShare, source, statistic, pValue)
    return float(statistic), float(pValue)
