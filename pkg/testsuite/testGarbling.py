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


import itertools
import unittest
from fractions import Fraction as F

import numpy as np

from RansomNeg.Circuit import Circuit
from RansomNeg.Circuit.Circuit import circuit, gate
from RansomNeg.Circuit.MechanismCircuit import buildMechanismCircuit, \
    mechanismInputs, decodeOutcome
from RansomNeg.Crypto import Garbling
from RansomNeg.Crypto.Entropy import randomSource
from RansomNeg.Crypto.Garbling import garble, garbledCircuit, encodeInputs, \
    evaluate, decodeOutputs
from RansomNeg.Mechanism.Mechanism import mechanismParams, scaledParams, \
    report, outcomeFixed

def oneGate(kind):
    return circuit(3, [gate(kind, 0, 1, 2)], [('a', 0, 1), ('b', 1, 1)],
                   [('z', [2])])

def run(gc, circ, inputLabels, bits):
    return decodeOutputs(gc, evaluate(gc, circ, encodeInputs(inputLabels, bits)))

class KnownValues(unittest.TestCase):

    seed = b"garbling test"

    def testTruthTables(self):
        for kind, table in ((Circuit.AND, (0, 0, 0, 1)),
                            (Circuit.XOR, (0, 1, 1, 0))):
            circ = oneGate(kind)
            gc, inputLabels, outputLabels = garble(circ, self.seed)
            for bits, z in zip(itertools.product((0, 1), repeat=2), table):
                self.assertEqual([z], run(gc, circ, inputLabels, list(bits)))

    def testNotGate(self):
        circ = circuit(2, [gate(Circuit.NOT, 0, None, 1)], [('a', 0, 1)],
                       [('z', [1])])
        gc, inputLabels, _ = garble(circ, self.seed)
        self.assertEqual([], gc.tables)
        self.assertEqual([1], run(gc, circ, inputLabels, [0]))
        self.assertEqual([0], run(gc, circ, inputLabels, [1]))

    def testLabels(self):
        gc, inputLabels, outputLabels = garble(oneGate(Circuit.AND), self.seed)
        delta = inputLabels[0][0] ^ inputLabels[0][1]
        self.assertEqual(1, delta & 1)
        for l0, l1 in inputLabels + outputLabels:
            self.assertEqual(delta, l0 ^ l1)
            self.assertNotEqual(Garbling.color(l0), Garbling.color(l1))
            self.assertLess(max(l0, l1), 1 << 128)
        self.assertEqual(1, len(gc.tables))
        self.assertEqual(4, len(gc.tables[0]))

    def testDeterministic(self):
        circ = oneGate(Circuit.AND)
        first = garble(circ, self.seed)
        self.assertEqual(first, garble(circ, self.seed))
        self.assertEqual(first, garble(circ, source=randomSource(self.seed)))
        self.assertNotEqual(first[1], garble(circ, b"other seed")[1])
        self.assertNotEqual(first[1], garble(circ)[1])

    def testHash(self):
        a, b = 0x1234, 0xabcdef
        self.assertEqual(Garbling.hashLabels(a, b, 0),
                         Garbling.hashLabels(a, b, 0))
        self.assertNotEqual(Garbling.hashLabels(a, b, 0),
                            Garbling.hashLabels(a, b, 1))
        self.assertNotEqual(Garbling.hashLabels(a, b, 0),
                            Garbling.hashLabels(b, a, 0))

    def testBatchHash(self):
        pairs = [(0x1234, 0xabcdef, 0), (7, 9, 3), ((1 << 128) - 1, 0, 11)]
        keys = [Garbling.rowKey(a, b, i) for a, b, i in pairs]
        self.assertEqual([Garbling.hashLabels(a, b, i) for a, b, i in pairs],
                         Garbling.hashKeys(keys))
        self.assertEqual([], Garbling.hashKeys([]))

    def testIdentityWiring(self):
        circ = circuit(3, [], [('x', 0, 3)], [('y', [2, 0, 1])])
        gc, inputLabels, outputLabels = garble(circ, self.seed)
        labels = evaluate(gc, circ, encodeInputs(inputLabels, [1, 0, 1]))
        self.assertEqual([inputLabels[2][1], inputLabels[0][1],
                          inputLabels[1][0]], labels)
        self.assertEqual([1, 1, 0], decodeOutputs(gc, labels))

    def testNoOutputs(self):
        circ = circuit(3, [gate(Circuit.AND, 0, 1, 2)],
                       [('a', 0, 1), ('b', 1, 1)], [])
        gc, inputLabels, outputLabels = garble(circ, self.seed)
        self.assertEqual([], outputLabels)
        self.assertEqual([], run(gc, circ, inputLabels, [1, 1]))

    def testDigestMismatch(self):
        gc, inputLabels, _ = garble(oneGate(Circuit.AND), self.seed)
        self.assertRaises(Garbling.digestMismatch, evaluate, gc,
                          oneGate(Circuit.XOR), encodeInputs(inputLabels, [1, 1]))

    def testWrongShape(self):
        circ = oneGate(Circuit.AND)
        gc, inputLabels, _ = garble(circ, self.seed)
        labels = encodeInputs(inputLabels, [1, 1])
        short = garbledCircuit(gc.baseDigest, gc.gateCount, [], gc.decode)
        self.assertRaises(ValueError, evaluate, short, circ, labels)
        self.assertRaises(ValueError, evaluate, gc, circ, labels[:1])
        self.assertRaises(ValueError, encodeInputs, inputLabels, [1])

    def testTamperedRow(self):
        """
        A flipped byte in the row the evaluator opens yields a label that
        matches no commitment
        """
        circ = oneGate(Circuit.AND)
        gc, inputLabels, _ = garble(circ, self.seed)
        data = gc.serialize()
        for bits in itertools.product((0, 1), repeat=2):
            labels = encodeInputs(inputLabels, list(bits))
            row = 2*Garbling.color(labels[0]) + Garbling.color(labels[1])
            for offset in (0, 7, 15):
                position = 40 + 16*row + offset
                tampered = garbledCircuit.deserialize(
                    data[:position] + bytes([data[position] ^ 0x01]) +
                    data[position + 1:])
                out = evaluate(tampered, circ, labels)
                self.assertRaises(Garbling.invalidOutputLabel,
                                  decodeOutputs, tampered, out)

    def testForgedOutputLabel(self):
        circ = oneGate(Circuit.AND)
        gc, inputLabels, outputLabels = garble(circ, self.seed)
        out = evaluate(gc, circ, encodeInputs(inputLabels, [1, 1]))
        bits, proof = Garbling.decodeAndProve(gc, out)
        self.assertEqual([1], bits)
        self.assertEqual([1], Garbling.verifyOutputLabels(outputLabels, proof))
        forged = [out[0] ^ (1 << 64)]
        try:
            decodeOutputs(gc, forged)
        except Garbling.invalidOutputLabel as e:
            self.assertEqual(0, e.wire)
        else:
            self.fail("Forged label accepted")
        self.assertRaises(Garbling.invalidOutputLabel,
                          Garbling.verifyOutputLabels, outputLabels, forged)
        self.assertRaises(ValueError, Garbling.verifyOutputLabels,
                          outputLabels, [])

    def testSerialization(self):
        circ = buildMechanismCircuit(mechanismParams.fromQ(F(1, 4), 4, 4))
        gc, _, _ = garble(circ, self.seed)
        data = gc.serialize()
        self.assertEqual(32 + 8 + 64*circ.andCount() + 4 + 64*7, len(data))
        self.assertEqual(circ.digest(), data[:32])
        self.assertEqual(gc, garbledCircuit.deserialize(data))
        self.assertRaises(ValueError, garbledCircuit.deserialize, data[:-1])
        self.assertRaises(ValueError, garbledCircuit.deserialize, data + b"\x00")
        self.assertRaises(ValueError, garbledCircuit.deserialize, data[:36])

class MechanismEquivalence(unittest.TestCase):
    """
    Garbled evaluation decodes to the fixed-point outcome
    """

    def compare(self, params, cases, perGarbling, seed):
        circ = buildMechanismCircuit(params)
        scaled = scaledParams.fromParams(params)
        rng = np.random.default_rng(seed)
        source = randomSource(bytes([seed]))
        k, kTheta = params.k, params.kTheta

        for i in range(cases):
            if i % perGarbling == 0:
                gc, inputLabels, _ = garble(circ, source=source)
            s0v, s1v = (int(x) for x in rng.integers(0, 1 << k, 2))
            s0a, s1a = (int(x) for x in rng.integers(1, 1 << k, 2))
            thetaV, thetaA = (int(x) for x in rng.integers(0, 1 << kTheta, 2))
            values = mechanismInputs(thetaV, thetaA, s0v, s1v, s0a, s1a)
            bits = run(gc, circ, inputLabels, circ.encodeInputs(values))
            self.assertEqual(
                outcomeFixed(params, scaled, report(thetaV, thetaA),
                             s0v ^ s0a, s1v ^ s1a),
                decodeOutcome(circ.decodeOutputs(bits)))

    def testSmallWidths(self):
        self.compare(mechanismParams.fromQ(F(1, 4), 4, 4), 1000, 50, 41)

    def testDefaultWidths(self):
        self.compare(mechanismParams.fromQ(F(1, 4), 8, 8), 1000, 100, 42)

    def testWidestWidths(self):
        self.compare(mechanismParams.fromQ(F(1, 4), 16, 32), 1000, 100, 43)


if __name__ == "__main__":
    unittest.main()
