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


"""
Default values and settings are done in this file
"""

stepTimeout = 10.0
"""
Seconds a party waits for the next protocol message before it aborts the
negotiation.

:type: float
"""

acceptTimeout = 300.0
"""
Seconds the victim's listener waits for an attacker to connect.

:type: float
"""

listenAddress = ('127.0.0.1', 4080)
"""
Default address of the victim's listener.

:type: tuple
"""

k = 8
"""
Default bitwidth of the randomness strings :math:`S_0` and :math:`S_1`.

:type: int
"""

kTheta = 8
"""
Default bitwidth of the reported reservation values.

:type: int
"""

maxWidth = 64
"""
Largest arithmetic width :math:`2k_\\theta+k` the circuit builder accepts.

:type: int
"""

marginalLossRatio = 0.1
"""
Threshold of the marginal loss lint. The loss of the last bargaining round
should stay below this fraction of the residual value after the horizon.

:type: float
"""

benchGrid = ((8, 8), (8, 16), (8, 32), (16, 8), (16, 16), (16, 32))
"""
:math:`(k_\\theta, k)` pairs timed by the benchmark, in table order.

:type: tuple
"""

benchRepetitions = 5

benchCellLimit = 1.0
"""
Seconds a single loopback negotiation may take in any cell of
:data:`benchGrid`.

:type: float
"""

commentSymbols = ("//", "%", "#")
"""
Line comments accepted in configuration and transcript files.

:type: tuple
"""

logFormat = "%(asctime)s %(name)s %(levelname)s %(message)s"
