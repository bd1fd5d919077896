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


import hashlib
import logging
import struct

from RansomNeg import Constants
from RansomNeg.Crypto.Entropy import randomSource
from RansomNeg.Crypto.Garbling import toBlock, fromBlock

"""
Batched 1-out-of-2 oblivious transfer of wire labels over the 2048-bit MODP
group, in the style of the "simplest" Diffie-Hellman based OT:

    1. The sender draws a and sends :math:`A = g^a`.
    2. For every choice bit c the receiver draws b and sends
       :math:`B = g^b` if c is 0 and :math:`B = A g^b` otherwise.
    3. The sender derives :math:`k_0 = H(B^a)` and
       :math:`k_1 = H((B/A)^a)` and sends both labels masked with them.
    4. The receiver unmasks the chosen label with :math:`H(A^b)`.
"""

log = logging.getLogger(__name__)

def encodeElement(x):
    return x.to_bytes(Constants.modpBytes, 'big')

def decodeElement(data):
    """
    Reads a group element and rejects values outside :math:`[2, p-2]`.
    """
    if len(data) != Constants.modpBytes:
        raise ValueError("Group element must have %i bytes" % Constants.modpBytes)
    x = int.from_bytes(data, 'big')
    if not 2 <= x <= Constants.modpPrime - 2:
        raise ValueError("Group element out of range")
    return x

def keyOf(element, index):
    """
    128-bit mask derived from a group element and the transfer index.
    """
    digest = hashlib.sha256(struct.pack("<I", index) +
                            encodeElement(element)).digest()
    return fromBlock(digest[:Constants.labelBytes])

def _exponent(source):
    while True:
        x = source.integer(Constants.otExponentBits)
        if x > 1:
            return x

class fixedBase():
    """
    Powers of one base modulo the MODP prime for exponents of up to
    :data:`RansomNeg.Constants.otExponentBits` bits. The table holds
    :math:`x^{d 16^i}` for every 4-bit digit d and position i, so a power
    costs one multiplication per digit instead of a square-and-multiply
    chain.

    :param base: Group element
    :type base: int
    """

    window = 4

    def __init__(self, base):
        p = Constants.modpPrime
        self.base = base % p
        self.digits = -(-Constants.otExponentBits // self.window)
        self.table = []
        row = self.base
        for _ in range(self.digits):
            powers = [1, row]
            for _ in range(2, 1 << self.window):
                powers.append(powers[-1] * row % p)
            self.table.append(powers)
            row = powers[-1] * row % p

    def power(self, e):
        p = Constants.modpPrime
        if e < 0 or e >> (self.window * self.digits):
            return pow(self.base, e, p)
        mask = (1 << self.window) - 1
        result = 1
        for powers in self.table:
            d = e & mask
            if d:
                result = result * powers[d] % p
            e >>= self.window
        return result

_generator = None

def generatorPowers():
    """
    Shared :class:`fixedBase` table of the generator.
    """
    global _generator
    if _generator is None:
        _generator = fixedBase(Constants.modpGenerator)
    return _generator


class otSender():
    """
    Sender side, holding one label pair per transfer.

    :param pairs: (label 0, label 1) per transfer
    :type pairs: list
    :param source: Random source (optional)
    :type source: :class:`~RansomNeg.Crypto.Entropy.randomSource`
    """

    def __init__(self, pairs, source=None):
        self.pairs = list(pairs)
        self.source = source if source is not None else randomSource()
        self._a = None
        self._A = None

    def firstMessage(self):
        """
        :returns: :math:`A = g^a`
        :rtype: bytes
        """
        self._a = _exponent(self.source)
        self._A = generatorPowers().power(self._a)
        return encodeElement(self._A)

    def respond(self, message):
        """
        Masks both labels of every pair.

        :param message: Concatenated elements B of the receiver
        :type message: bytes
        :returns: Concatenated masked labels
        :rtype: bytes
        """
        if self._a is None:
            raise ValueError("First message was not sent")
        size = Constants.modpBytes
        if len(message) != size * len(self.pairs):
            raise ValueError("Expected %i group elements" % len(self.pairs))

        p = Constants.modpPrime
        # (B/A)^a = B^a (A^a)^-1
        unmask = pow(pow(self._A, self._a, p), -1, p)
        parts = []
        for i, (m0, m1) in enumerate(self.pairs):
            B = decodeElement(message[i*size:(i+1)*size])
            Ba = pow(B, self._a, p)
            k0 = keyOf(Ba, i)
            k1 = keyOf(Ba * unmask % p, i)
            parts.append(toBlock(m0 ^ k0) + toBlock(m1 ^ k1))
        log.debug("Answered %i transfers", len(self.pairs))
        return b"".join(parts)

class otReceiver():
    """
    Receiver side, holding one choice bit per transfer.

    :param choices: Choice bits
    :type choices: list
    """

    def __init__(self, choices, source=None):
        self.choices = [int(c) for c in choices]
        self.source = source if source is not None else randomSource()
        self._keys = None
        for c in self.choices:
            if c not in (0, 1):
                raise ValueError("Choice %s is not a bit" % c)

    def respond(self, message):
        """
        :param message: The sender's element A
        :type message: bytes
        :returns: Concatenated elements B
        :rtype: bytes
        """
        p = Constants.modpPrime
        A = decodeElement(message)
        g = generatorPowers()
        powersOfA = fixedBase(A)

        self._keys = []
        parts = []
        for i, c in enumerate(self.choices):
            b = _exponent(self.source)
            B = g.power(b)
            if c:
                B = A * B % p
            self._keys.append(keyOf(powersOfA.power(b), i))
            parts.append(encodeElement(B))
        return b"".join(parts)

    def finish(self, message):
        """
        :param message: Masked label pairs of the sender
        :type message: bytes
        :returns: Chosen labels
        :rtype: list
        """
        if self._keys is None:
            raise ValueError("Second message was not sent")
        size = Constants.labelBytes
        if len(message) != 2 * size * len(self.choices):
            raise ValueError("Expected %i masked pairs" % len(self.choices))

        labels = []
        for i, c in enumerate(self.choices):
            offset = (2*i + c) * size
            labels.append(fromBlock(message[offset:offset + size]) ^ self._keys[i])
        return labels

def otTransfer(pairs, choices, senderSource=None, receiverSource=None):
    """
    Runs both sides in one process.

    :rtype: list
    """
    if len(pairs) != len(choices):
        raise ValueError("%i pairs for %i choices" % (len(pairs), len(choices)))
    sender = otSender(pairs, senderSource)
    receiver = otReceiver(choices, receiverSource)
    return receiver.finish(sender.respond(receiver.respond(sender.firstMessage())))
