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
import threading

from cryptography.hazmat.backends import default_backend
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

from RansomNeg import Constants
from RansomNeg.Basic.Utilities import double
from RansomNeg.Circuit.Circuit import XOR, AND, NOT
from RansomNeg.Crypto.Entropy import randomSource

"""
Semi-honest garbling with free XOR and point-and-permute. Every wire carries
two 128-bit labels, :math:`L_1 = L_0 \\oplus \\Delta`, where the least
significant bit of :math:`\\Delta` is one, so the two labels of a wire have
opposite colour bits. AND gates carry four rows ordered by the colour bits
of their inputs; XOR and NOT gates carry nothing.

The row key is the fixed-key AES hash

..math::

    H(A, B, i) = \\pi(K) \\oplus K, \\quad K = 2A \\oplus 4B \\oplus i

with doubling in :math:`GF(2^{128})`.
"""

log = logging.getLogger(__name__)

labelMask = (1 << 128) - 1

class digestMismatch(ValueError):
    """
    The garbled circuit was not built from the expected circuit.
    """

class invalidOutputLabel(ValueError):
    """
    An output label matches neither commitment of its wire.
    """

    def __init__(self, wire):
        ValueError.__init__(self, "Output label of wire %i is invalid" % wire)
        self.wire = wire

_local = threading.local()

def _fixedKeyEncryptor():
    """
    AES-128 in ECB mode under the public garbling key. One encryptor per
    thread, reused for every block.
    """
    encryptor = getattr(_local, 'encryptor', None)
    if encryptor is None:
        encryptor = Cipher(algorithms.AES(Constants.garblingKey), modes.ECB(),
                           backend=default_backend()).encryptor()
        _local.encryptor = encryptor
    return encryptor

def toBlock(label):
    return label.to_bytes(Constants.labelBytes, 'little')

def fromBlock(block):
    return int.from_bytes(block, 'little')

def color(label):
    return label & 1

def rowKey(a, b, gateIndex):
    return double(a) ^ double(double(b)) ^ gateIndex

def hashKeys(keys):
    """
    :math:`\\pi(K) \\oplus K` for many keys with a single cipher call.

    :type keys: list
    :rtype: list
    """
    size = Constants.labelBytes
    data = _fixedKeyEncryptor().update(b"".join(toBlock(K) for K in keys))
    return [fromBlock(data[i*size:(i+1)*size]) ^ K for i, K in enumerate(keys)]

def hashLabels(a, b, gateIndex):
    """
    Row key of an AND gate for the input labels a and b.

    :rtype: int
    """
    return hashKeys([rowKey(a, b, gateIndex)])[0]

def commitment(wire, label):
    """
    Public commitment to one output label.

    :rtype: bytes
    """
    return hashlib.sha256(struct.pack("<I", wire) + toBlock(label)).digest()

class garbledCircuit():
    """
    What the garbler sends: digest of the plain circuit, the four rows of
    every AND gate in gate order and the commitment pair of every output
    wire.

    :param baseDigest: SHA-256 of the plain circuit
    :type baseDigest: bytes
    :param gateCount: Number of gates of the plain circuit
    :type gateCount: int
    :param tables: Rows of each AND gate
    :type tables: list
    :param decode: (commitment to label 0, commitment to label 1) per
        output wire
    :type decode: list
    """

    def __init__(self, baseDigest, gateCount, tables, decode):
        self.baseDigest = bytes(baseDigest)
        self.gateCount = gateCount
        self.tables = [tuple(rows) for rows in tables]
        self.decode = [tuple(pair) for pair in decode]

    def __eq__(self, other):
        return self.serialize() == other.serialize()

    def __repr__(self):
        return "garbledCircuit(gates=%i, tables=%i, outputs=%i)" % (
            self.gateCount, len(self.tables), len(self.decode))

    def serialize(self):
        """
        Little-endian byte form: digest, gate count, number of tables and the
        tables, number of output wires and their commitments.

        :rtype: bytes
        """
        parts = [self.baseDigest, struct.pack("<II", self.gateCount,
                                              len(self.tables))]
        for rows in self.tables:
            parts.extend(toBlock(r) for r in rows)
        parts.append(struct.pack("<I", len(self.decode)))
        for h0, h1 in self.decode:
            parts.append(h0 + h1)
        return b"".join(parts)

    @classmethod
    def deserialize(cls, data):
        data = bytes(data)
        size = Constants.labelBytes
        try:
            digest = data[:32]
            gateCount, tableCount = struct.unpack_from("<II", data, 32)
            position = 40
            tables = []
            for _ in range(tableCount):
                rows = [fromBlock(data[position + i*size:position + (i+1)*size])
                        for i in range(4)]
                position += 4 * size
                tables.append(rows)
            outputCount, = struct.unpack_from("<I", data, position)
            position += 4
            decode = []
            for _ in range(outputCount):
                decode.append((data[position:position + 32],
                               data[position + 32:position + 64]))
                position += 64
        except struct.error:
            raise ValueError("Truncated garbled circuit")
        if position != len(data) or len(digest) != 32:
            raise ValueError("Malformed garbled circuit")
        return cls(digest, gateCount, tables, decode)

def outputWireList(circ):
    return [w for _, wires in circ.outputs for w in wires]

def garble(circ, seed=None, source=None):
    """
    Garbles a circuit.

    :param circ: Plain circuit
    :type circ: :class:`~RansomNeg.Circuit.Circuit.circuit`
    :param seed: Seed for reproducible labels (optional)
    :type seed: bytes
    :param source: Random source, overrides the seed (optional)
    :type source: :class:`~RansomNeg.Crypto.Entropy.randomSource`
    :returns: garbled circuit, label pairs of the input wires and label
        pairs of the output wires
    :rtype: tuple
    """
    if source is None:
        source = randomSource(seed)

    delta = source.label() | 1
    zero = [None] * circ.wireCount
    for w in range(circ.inputWidth):
        zero[w] = source.label()

    keys = []
    masks = []
    for index, g in enumerate(circ.gates):
        if g.kind == XOR:
            zero[g.out] = zero[g.inA] ^ zero[g.inB]
        elif g.kind == NOT:
            zero[g.out] = zero[g.inA] ^ delta
        else:
            out = source.label()
            zero[g.out] = out
            pa, pb = color(zero[g.inA]), color(zero[g.inB])
            # rows in the order 2*i + j of the colour bits
            for i in (0, 1):
                for j in (0, 1):
                    a, b = i ^ pa, j ^ pb
                    la = zero[g.inA] ^ (delta if a else 0)
                    lb = zero[g.inB] ^ (delta if b else 0)
                    keys.append(rowKey(la, lb, index))
                    masks.append(out ^ (delta if a & b else 0))

    rows = [h ^ m for h, m in zip(hashKeys(keys), masks)]
    tables = [rows[r:r + 4] for r in range(0, len(rows), 4)]

    inputLabels = [(zero[w], zero[w] ^ delta) for w in range(circ.inputWidth)]
    outputLabels = [(zero[w], zero[w] ^ delta) for w in outputWireList(circ)]
    decode = [(commitment(i, l0), commitment(i, l1))
              for i, (l0, l1) in enumerate(outputLabels)]

    gc = garbledCircuit(circ.digest(), len(circ.gates), tables, decode)
    log.debug("Garbled %r", gc)
    return gc, inputLabels, outputLabels

def encodeInputs(labelPairs, bits):
    """
    Selects the label of each bit.

    :rtype: list
    """
    if len(labelPairs) != len(bits):
        raise ValueError("Expected %i bits, got %i" % (len(labelPairs), len(bits)))
    return [pair[bit] for pair, bit in zip(labelPairs, bits)]

def evaluate(gc, circ, inputLabels):
    """
    Evaluates the garbled circuit on one label per input wire. The digest of
    the plain circuit is checked before any gate is touched.

    :param gc: Garbled circuit
    :type gc: :class:`garbledCircuit`
    :param circ: Plain circuit the evaluator built locally
    :type circ: :class:`~RansomNeg.Circuit.Circuit.circuit`
    :param inputLabels: Label of every input wire
    :type inputLabels: list
    :returns: Labels of the output wires
    :rtype: list
    """
    if circ.digest() != gc.baseDigest:
        raise digestMismatch("Garbled circuit does not match the local circuit")
    if gc.gateCount != len(circ.gates) or len(gc.tables) != circ.andCount() \
       or len(gc.decode) != len(outputWireList(circ)):
        raise ValueError("Garbled circuit has the wrong shape")
    if len(inputLabels) != circ.inputWidth:
        raise ValueError("Expected %i input labels, got %i"
                         % (circ.inputWidth, len(inputLabels)))

    labels = list(inputLabels) + [None] * (circ.wireCount - circ.inputWidth)
    tables = iter(gc.tables)
    for index, g in enumerate(circ.gates):
        if g.kind == XOR:
            labels[g.out] = labels[g.inA] ^ labels[g.inB]
        elif g.kind == NOT:
            labels[g.out] = labels[g.inA]
        else:
            rows = next(tables)
            la, lb = labels[g.inA], labels[g.inB]
            labels[g.out] = hashLabels(la, lb, index) ^ \
                rows[2*color(la) + color(lb)]
    return [labels[w] for w in outputWireList(circ)]

def decodeOutputs(gc, outputLabels):
    """
    Maps output labels to bits with the commitments. Used by the evaluator to
    read the result and by the garbler to check the labels sent back.

    :rtype: list
    """
    if len(outputLabels) != len(gc.decode):
        raise ValueError("Expected %i output labels, got %i"
                         % (len(gc.decode), len(outputLabels)))
    bits = []
    for i, (label, (h0, h1)) in enumerate(zip(outputLabels, gc.decode)):
        h = commitment(i, label)
        if h == h0:
            bits.append(0)
        elif h == h1:
            bits.append(1)
        else:
            raise invalidOutputLabel(i)
    return bits

def decodeAndProve(gc, outputLabels):
    """
    :returns: Output bits and the labels to hand to the garbler
    :rtype: tuple
    """
    return decodeOutputs(gc, outputLabels), list(outputLabels)

def verifyOutputLabels(outputLabelPairs, labels):
    """
    Garbler side check against its own label pairs.

    :returns: Output bits
    :rtype: list
    """
    if len(labels) != len(outputLabelPairs):
        raise ValueError("Expected %i output labels, got %i"
                         % (len(outputLabelPairs), len(labels)))
    bits = []
    for i, (label, (l0, l1)) in enumerate(zip(labels, outputLabelPairs)):
        if label == l0:
            bits.append(0)
        elif label == l1:
            bits.append(1)
        else:
            raise invalidOutputLabel(i)
    return bits
