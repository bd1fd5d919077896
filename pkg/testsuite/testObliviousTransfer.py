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


import unittest

from RansomNeg import Constants
from RansomNeg.Crypto import ObliviousTransfer
from RansomNeg.Crypto.Entropy import randomSource
from RansomNeg.Crypto.Garbling import fromBlock
from RansomNeg.Crypto.ObliviousTransfer import otSender, otReceiver, \
    otTransfer

def labelPairs(count, seed=b"pairs"):
    source = randomSource(seed)
    return [(source.label(), source.label()) for _ in range(count)]

class KnownValues(unittest.TestCase):

    def check(self, choices, seed=b"pairs"):
        pairs = labelPairs(len(choices), seed)
        received = otTransfer(pairs, choices, randomSource(b"sender"),
                              randomSource(b"receiver"))
        self.assertEqual([pair[c] for pair, c in zip(pairs, choices)], received)

    def testAllZero(self):
        self.check([0] * 8)

    def testAlternating(self):
        self.check([0, 1, 0, 1, 0, 1, 0, 1])
        self.check([1] * 5)

    def testRandomChoices(self):
        source = randomSource(b"choices")
        self.check([source.integer(1) for _ in range(64)], b"more pairs")

    def testUnseeded(self):
        pairs = labelPairs(3)
        self.assertEqual([pairs[0][1], pairs[1][0], pairs[2][1]],
                         otTransfer(pairs, [1, 0, 1]))

    def testOtherLabelHidden(self):
        """
        The receiver's key does not open the label it did not choose
        """
        pairs = labelPairs(4)
        choices = [0, 1, 1, 0]
        sender = otSender(pairs, randomSource(b"sender"))
        receiver = otReceiver(choices, randomSource(b"receiver"))
        masked = sender.respond(receiver.respond(sender.firstMessage()))
        size = Constants.labelBytes
        for i, c in enumerate(choices):
            offset = (2*i + 1 - c) * size
            other = fromBlock(masked[offset:offset + size]) ^ receiver._keys[i]
            self.assertNotEqual(pairs[i][1 - c], other)

    def testElements(self):
        p = Constants.modpPrime
        self.assertEqual(12345, ObliviousTransfer.decodeElement(
            ObliviousTransfer.encodeElement(12345)))
        for bad in (0, 1, p - 1):
            self.assertRaises(ValueError, ObliviousTransfer.decodeElement,
                              ObliviousTransfer.encodeElement(bad))
        self.assertRaises(ValueError, ObliviousTransfer.decodeElement, b"\x05")
        self.assertNotEqual(ObliviousTransfer.keyOf(12345, 0),
                            ObliviousTransfer.keyOf(12345, 1))

    def testMalformedMessages(self):
        pairs = labelPairs(2)
        sender = otSender(pairs, randomSource(b"sender"))
        self.assertRaises(ValueError, sender.respond, bytes(512))
        A = sender.firstMessage()
        self.assertEqual(Constants.modpBytes, len(A))
        self.assertRaises(ValueError, sender.respond, bytes(256))
        self.assertRaises(ValueError, sender.respond, bytes(512))

        receiver = otReceiver([0, 1], randomSource(b"receiver"))
        self.assertRaises(ValueError, receiver.finish, bytes(64))
        self.assertRaises(ValueError, receiver.respond, bytes(256))
        B = receiver.respond(A)
        self.assertEqual(2 * Constants.modpBytes, len(B))
        self.assertRaises(ValueError, receiver.finish, bytes(63))

        self.assertRaises(ValueError, otReceiver, [0, 2])
        self.assertRaises(ValueError, otTransfer, pairs, [0])


class FixedBase(unittest.TestCase):

    def testMatchesPow(self):
        p = Constants.modpPrime
        source = randomSource(b"exponents")
        for base in (Constants.modpGenerator, 3, p - 2, source.integer(2047)):
            table = ObliviousTransfer.fixedBase(base)
            exponents = [0, 1, 15, 16, (1 << Constants.otExponentBits) - 1] + \
                [source.integer(Constants.otExponentBits) for _ in range(20)]
            for e in exponents:
                self.assertEqual(pow(base, e, p), table.power(e))

    def testLongExponent(self):
        p = Constants.modpPrime
        table = ObliviousTransfer.fixedBase(5)
        e = 1 << (Constants.otExponentBits + 3)
        self.assertEqual(pow(5, e, p), table.power(e))

    def testSharedGenerator(self):
        g = ObliviousTransfer.generatorPowers()
        self.assertIs(g, ObliviousTransfer.generatorPowers())
        self.assertEqual(Constants.modpGenerator, g.power(1))

if __name__ == "__main__":
    unittest.main()
