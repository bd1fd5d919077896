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


import socket
import unittest
from fractions import Fraction as F

from RansomNeg.Crypto.Entropy import randomSource
from RansomNeg.Mechanism.Mechanism import mechanismParams
from RansomNeg.Protocol.Randomness import combineShares, victimShares, \
    xorUniformity
from RansomNeg.Protocol.Session import negotiationConfig, victimSession

class constantSource(randomSource):
    """
    Source that only ever returns zero bytes.
    """

    def randomBytes(self, n):
        return bytes(n)

    def derive(self, tag):
        return self

class KnownValues(unittest.TestCase):

    def testCombine(self):
        self.assertEqual(0, combineShares(0xA5, 0xA5))
        self.assertEqual(0xFF, combineShares(0xA5, 0x5A))
        self.assertEqual(7, combineShares(7, 0))

    def testInvalidShare(self):
        self.assertRaises(ValueError, xorUniformity, 256, 8, 10)
        self.assertRaises(ValueError, xorUniformity, -1, 8, 10)
        self.assertRaises(ValueError, xorUniformity, 0, 32, 10)

    def testSessionShares(self):
        """
        The sampled words are the ones a victim session draws
        """
        for k in (8, 16, 32):
            params = mechanismParams.fromQ(F(1, 4), 8, k)
            a, b = socket.socketpair()
            try:
                session = victimSession(negotiationConfig(params, 1, 'victim'),
                                        a, randomSource(b"shares"))
                drawn = list(session.drawShares())
            finally:
                a.close()
                b.close()
            sampled = victimShares(randomSource(b"shares"), k, 2)
            self.assertEqual(drawn, [int(x) for x in sampled])

    def testIntegers(self):
        first = randomSource(b"words")
        second = randomSource(b"words")
        for bits in (1, 8, 12, 32, 64):
            words = first.integers(bits, 5)
            self.assertEqual([second.integer(bits) for _ in range(5)],
                             [int(x) for x in words])
        self.assertRaises(ValueError, first.integers, 65, 1)

class Uniformity(unittest.TestCase):

    shares = (0, 0xA5, 0xFF)

    def testSeededSource(self):
        for share in self.shares:
            statistic, pValue = xorUniformity(share, 8, 1000000,
                                              seed=b"uniformity %i" % share)
            self.assertGreater(pValue, 0.001)

    def testSystemSource(self):
        for share in self.shares:
            statistic, pValue = xorUniformity(share, 8, 1000000)
            self.assertGreater(pValue, 0.001)

    def testSmallWidth(self):
        statistic, pValue = xorUniformity(3, 2, 100000, seed=b"two bits")
        self.assertGreater(pValue, 0.001)

    def testConstantSourceFails(self):
        for share in self.shares:
            statistic, pValue = xorUniformity(share, 8, 10000,
                                              source=constantSource())
            self.assertLess(pValue, 1e-6)

if __name__ == "__main__":
    unittest.main()
