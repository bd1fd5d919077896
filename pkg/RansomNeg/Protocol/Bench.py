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
import threading
import time

import numpy as np

from RansomNeg import Settings
from RansomNeg.Mechanism.Mechanism import mechanismParams
from RansomNeg.Protocol.Session import negotiationConfig, victimListener, \
    runAttacker

"""
Wall-clock time of complete negotiations over loopback.
"""

log = logging.getLogger(__name__)

class timingRow():

    def __init__(self, kTheta, k, times):
        self.kTheta = kTheta
        self.k = k
        self.times = list(times)

    @property
    def median(self):
        return float(np.median(self.times))

    def __repr__(self):
        return "timingRow(kTheta=%i, k=%i, median=%.2f ms)" % (
            self.kTheta, self.k, 1000 * self.median)

def runOnce(params, thetaV, thetaA, seed=None):
    """
    One negotiation between two threads on loopback.

    :returns: Seconds from connecting to the attacker's result
    :rtype: float
    """
    victim = negotiationConfig(params, thetaV, 'victim')
    with victimListener(victim, ('127.0.0.1', 0)) as listener:
        attacker = negotiationConfig(params, thetaA, 'attacker',
                                     address=listener.address)
        failures = []

        def serve():
            try:
                listener.serveOne(seed)
            except Exception as e:
                failures.append(e)

        thread = threading.Thread(target=serve)
        thread.start()
        start = time.perf_counter()
        runAttacker(attacker, seed)
        elapsed = time.perf_counter() - start
        thread.join()
    if failures:
        raise failures[0]
    return elapsed

def benchmark(grid=None, repetitions=None, q=None):
    """
    Times negotiations for each (k_theta, k) pair. Reports are drawn at half
    and a quarter of the largest value.

    :param grid: (k_theta, k) pairs, :data:`RansomNeg.Settings.benchGrid`
        if omitted
    :param repetitions: Runs per pair
    :returns: One :class:`timingRow` per pair
    :rtype: list
    """
    if grid is None:
        grid = Settings.benchGrid
    if repetitions is None:
        repetitions = Settings.benchRepetitions
    if q is None:
        q = '1/4'

    rows = []
    for kTheta, k in grid:
        params = mechanismParams.fromQ(q, kTheta, k)
        thetaV = (1 << kTheta) // 2
        thetaA = (1 << kTheta) // 4
        times = [runOnce(params, thetaV, thetaA) for _ in range(repetitions)]
        row = timingRow(kTheta, k, times)
        log.info("%r", row)
        rows.append(row)
    return rows
