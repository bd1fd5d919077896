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
import itertools
import struct
import unittest
from fractions import Fraction as F

import numpy as np

from RansomNeg.Circuit import Circuit
from RansomNeg.Circuit.Circuit import circuit, circuitBuilder, gate, \
    deserialize
from RansomNeg.Circuit.MechanismCircuit import buildMechanismCircuit, \
    mechanismInputs, decodeOutcome
from RansomNeg.Mechanism.Mechanism import mechanismParams, scaledParams, \
    widthOverflow, report, outcomeFixed

def binary(operation, width):
    """
    Circuit of a builder operation on two width-bit inputs x and y.
    """
    b = circuitBuilder()
    x = b.addInput('x', width)
    y = b.addInput('y', width)
    result = operation(b, x, y)
    if not isinstance(result, list):
        result = [result]
    b.addOutput('z', result)
    return b.build()

def allPairs(width):
    pairs = list(itertools.product(range(1 << width), repeat=2))
    return [x for x, _ in pairs], [y for _, y in pairs]

class KnownValues(unittest.TestCase):

    # Hand assembled form of z = AND(a, b)
    andBytes = (
            b"RNCC"
            b"\x01"
            b"\x03\x00\x00\x00"
            b"\x01\x00\x00\x00"
            b"\x02"
            b"\x01a" b"\x00\x00\x00\x00" b"\x01\x00\x00\x00"
            b"\x01b" b"\x01\x00\x00\x00" b"\x01\x00\x00\x00"
            b"\x01"
            b"\x01z" b"\x01\x00\x00\x00" b"\x02\x00\x00\x00"
            b"\x01" b"\x00\x00\x00\x00" b"\x01\x00\x00\x00" b"\x02\x00\x00\x00"
        )

    def andCircuit(self):
        b = circuitBuilder()
        a = b.addInput('a', 1)
        c = b.addInput('b', 1)
        b.addOutput('z', [b.AND(a[0], c[0])])
        return b.build()

    def testSingleGates(self):
        for kind, table in ((Circuit.XOR, (0, 1, 1, 0)),
                            (Circuit.AND, (0, 0, 0, 1))):
            c = circuit(3, [gate(kind, 0, 1, 2)],
                        [('a', 0, 1), ('b', 1, 1)], [('z', [2])])
            for (a, b), z in zip(itertools.product((0, 1), repeat=2), table):
                self.assertEqual([z], c.evalPlain([a, b]))
        c = circuit(2, [gate(Circuit.NOT, 0, None, 1)], [('a', 0, 1)],
                    [('z', [1])])
        self.assertEqual([1], c.evalPlain([0]))
        self.assertEqual([0], c.evalPlain([1]))

    def testGoldenSerialization(self):
        c = self.andCircuit()
        self.assertEqual(self.andBytes, c.serialize())
        self.assertEqual(hashlib.sha256(self.andBytes).digest(), c.digest())
        self.assertEqual(c.digest(), Circuit.circuitDigest(c))

    def testNotSerialization(self):
        c = circuit(2, [gate(Circuit.NOT, 0, None, 1)], [('a', 0, 1)],
                    [('z', [1])])
        self.assertTrue(c.serialize().endswith(
            struct.pack("<BIII", Circuit.NOT, 0, 0xFFFFFFFF, 1)))
        self.assertEqual(c.serialize(), deserialize(c.serialize()).serialize())

    def testDeserialize(self):
        c = deserialize(self.andBytes)
        self.assertEqual(3, c.wireCount)
        self.assertEqual((gate(Circuit.AND, 0, 1, 2),), c.gates)
        self.assertEqual({'z': 1}, c.evaluate({'a': 1, 'b': 1}))

    def testMalformed(self):
        self.assertRaises(ValueError, deserialize, self.andBytes[:-1])
        self.assertRaises(ValueError, deserialize, self.andBytes + b"\x00")
        self.assertRaises(ValueError, deserialize, b"XXXX" + self.andBytes[4:])
        self.assertRaises(ValueError, deserialize,
                          self.andBytes[:4] + b"\x02" + self.andBytes[5:])
        # Gate reading its own output wire
        self.assertRaises(ValueError, deserialize,
                          self.andBytes[:-12] + struct.pack("<III", 0, 2, 2))

    def testCheck(self):
        inputs = [('a', 0, 1), ('b', 1, 1)]
        self.assertRaises(ValueError, circuit, 3,
                          [gate(Circuit.AND, 0, 2, 2)], inputs, [('z', [2])])
        self.assertRaises(ValueError, circuit, 3,
                          [gate(Circuit.AND, 0, 1, 1)], inputs, [('z', [1])])
        self.assertRaises(ValueError, circuit, 3,
                          [gate(Circuit.AND, 0, 1, 2)], inputs, [('z', [5])])
        self.assertRaises(ValueError, circuit, 2, [], [('a', 1, 1)], [])
        self.assertRaises(ValueError, gate, Circuit.NOT, 0, 1, 2)
        self.assertRaises(ValueError, gate, 7, 0, 1, 2)

    def testEvalPlainWidth(self):
        self.assertRaises(ValueError, self.andCircuit().evalPlain, [1])

    def testBuilderErrors(self):
        b = circuitBuilder()
        x = b.addInput('x', 2)
        self.assertRaises(ValueError, b.addInput, 'x', 1)
        b.AND(x[0], x[1])
        self.assertRaises(ValueError, b.addInput, 'y', 1)
        b.addOutput('z', x)
        self.assertRaises(ValueError, b.addOutput, 'z', x)
        self.assertRaises(ValueError, circuitBuilder().addOutput, 'c', [True])

    def testConstantFolding(self):
        b = circuitBuilder()
        x = b.addInput('x', 1)[0]
        self.assertEqual(x, b.AND(True, x))
        self.assertIs(False, b.AND(x, False))
        self.assertIs(False, b.XOR(True, True))
        self.assertIs(False, b.XOR(x, x))
        self.assertEqual(x, b.XOR(False, x))
        self.assertEqual(0, len(b.gates))
        self.assertEqual([True, False, True], b.constant(5, 3))

    def testConstantOutputs(self):
        b = circuitBuilder()
        b.addInput('x', 2)
        b.addOutput('c', b.constant(5, 3))
        c = b.build()
        for x in range(4):
            self.assertEqual({'c': 5}, c.evaluate({'x': x}))

    def testMechanismExample(self):
        params = mechanismParams.fromQ(F(1, 4), 8, 8)
        c = buildMechanismCircuit(params)
        outputs = c.evaluate(mechanismInputs(100, 30, 169 ^ 77, 200 ^ 3, 77, 3))
        self.assertEqual({'r_f': 0, 'alpha': 1, 'sigma': 1}, outputs)
        outputs = c.evaluate(mechanismInputs(100, 30, 170, 200))
        self.assertEqual({'r_f': 100, 'alpha': 1, 'sigma': 0}, outputs)
        self.assertEqual(9, len(c.outputWires('r_f')))
        self.assertEqual(48, c.inputWidth)

    def testDigest(self):
        params = mechanismParams.fromQ(F(1, 4), 8, 8)
        c = buildMechanismCircuit(params)
        self.assertEqual(c.digest(), buildMechanismCircuit(params).digest())
        self.assertEqual(c.serialize(), deserialize(c.serialize()).serialize())
        for other in (mechanismParams.fromQ(F(1, 8), 8, 8),
                      mechanismParams.fromQ(F(1, 4), 8, 16),
                      mechanismParams.fromQ(F(1, 4), 16, 8)):
            self.assertNotEqual(c.digest(), buildMechanismCircuit(other).digest())

    def testWidthOverflow(self):
        self.assertRaises(widthOverflow, buildMechanismCircuit,
                          mechanismParams.fromQ(F(1, 4), 17, 32))

class Primitives(unittest.TestCase):
    """
    Builder operations against integer arithmetic for every input pair
    """

    def check(self, operation, expected, widths=range(1, 6)):
        for width in widths:
            xs, ys = allPairs(width)
            out = binary(operation, width).evalPacked({'x': xs, 'y': ys})['z']
            for x, y, z in zip(xs, ys, out):
                self.assertEqual(expected(x, y, width), z,
                                 "%i, %i at width %i" % (x, y, width))

    def testAdd(self):
        self.check(lambda b, x, y: b.add(x, y)[0] + [b.add(x, y)[1]],
                   lambda x, y, w: x + y)

    def testLessThan(self):
        self.check(lambda b, x, y: b.lessThan(x, y),
                   lambda x, y, w: int(x < y))

    def testLessEqual(self):
        self.check(lambda b, x, y: b.lessEqual(x, y),
                   lambda x, y, w: int(x <= y))

    def testMaximum(self):
        self.check(lambda b, x, y: b.maximum(x, y),
                   lambda x, y, w: max(x, y))

    def testMultiply(self):
        self.check(lambda b, x, y: b.multiply(x, y, 2*len(x)),
                   lambda x, y, w: x * y)
        self.check(lambda b, x, y: b.multiply(x, y, len(x)),
                   lambda x, y, w: (x * y) % (1 << w))

    def testMux(self):
        self.check(lambda b, x, y: b.mux(x[0], x, y),
                   lambda x, y, w: x if x & 1 else y)

    def testOr(self):
        self.check(lambda b, x, y: [b.OR(p, q) for p, q in zip(x, y)],
                   lambda x, y, w: x | y)

    def testNonZero(self):
        self.check(lambda b, x, y: b.nonZero(x),
                   lambda x, y, w: int(x != 0))

    def testConstantOperands(self):
        self.check(lambda b, x, y: b.multiply(x, b.constant(5, 3), len(x) + 3),
                   lambda x, y, w: 5 * x)
        self.check(lambda b, x, y: b.lessThan(x, b.constant(3, len(x) + 1)),
                   lambda x, y, w: int(x < 3))

    def testShiftRight(self):
        self.check(lambda b, x, y: b.shiftRight(x, 1),
                   lambda x, y, w: x >> 1, range(2, 6))

    def testPackedMatchesPlain(self):
        c = binary(lambda b, x, y: b.add(x, y)[0], 4)
        xs, ys = allPairs(4)
        packed = c.evalPacked({'x': xs, 'y': ys})['z']
        for x, y, z in zip(xs, ys, packed):
            self.assertEqual({'z': z}, c.evaluate({'x': x, 'y': y}))
        self.assertRaises(ValueError, c.evalPacked, {'x': [1], 'y': [1, 2]})

class MechanismEquivalence(unittest.TestCase):
    """
    The circuit computes the fixed-point outcome
    """

    def compare(self, params, values, s0, s1):
        c = buildMechanismCircuit(params)
        scaled = scaledParams.fromParams(params)
        out = c.evalPacked(values)
        for i in range(len(s0)):
            outcome = decodeOutcome({name: out[name][i] for name in out})
            self.assertLess(out['r_f'][i], 1 << params.kTheta)
            self.assertEqual(
                outcomeFixed(params, scaled,
                             report(values['theta_v'][i], values['theta_a'][i]),
                             s0[i], s1[i]),
                outcome)

    def testExhaustiveSmallWidths(self):
        for q in (F(1, 4), F(3, 8), F(1, 2)):
            params = mechanismParams.fromQ(q, 4, 4)
            combos = list(itertools.product(range(16), repeat=4))
            thetaV, thetaA, s0, s1 = (list(column) for column in zip(*combos))
            zero = [0] * len(combos)
            self.compare(params, {'s0_v': s0, 's1_v': s1, 'theta_v': thetaV,
                                  's0_a': zero, 's1_a': zero,
                                  'theta_a': thetaA}, s0, s1)

    def testRandomWideCircuit(self):
        params = mechanismParams.fromQ(F(1, 4), 16, 32)
        rng = np.random.default_rng(31)
        count = 10000
        draw = lambda bits: [int(x) for x in rng.integers(0, 1 << bits, count)]
        values = {'s0_v': draw(32), 's1_v': draw(32), 'theta_v': draw(16),
                  's0_a': draw(32), 's1_a': draw(32), 'theta_a': draw(16)}
        # Low attacker reports reach the acceptance branches
        values['theta_a'][::2] = [a >> 3 for a in values['theta_a'][::2]]
        s0 = [v ^ a for v, a in zip(values['s0_v'], values['s0_a'])]
        s1 = [v ^ a for v, a in zip(values['s1_v'], values['s1_a'])]
        self.compare(params, values, s0, s1)

    def testOutputLayout(self):
        """
        r_f, alpha and sigma only, the top bit of r_f stays clear because
        r_f never exceeds the victim's report
        """
        params = mechanismParams.fromQ(F(1, 4), 8, 8)
        c = buildMechanismCircuit(params)
        self.assertEqual(['r_f', 'alpha', 'sigma'], [n for n, _ in c.outputs])
        self.assertEqual(9, len(c.outputWires('r_f')))
        values = {'s0_v': [0, 255], 's1_v': [0, 255], 'theta_v': [255, 255],
                  's0_a': [0, 0], 's1_a': [0, 0], 'theta_a': [0, 255]}
        self.assertEqual([0, 0], [r >> 8 for r in c.evalPacked(values)['r_f']])

    def testBuiltOnce(self):
        params = mechanismParams.fromQ(F(1, 4), 8, 16)
        c = buildMechanismCircuit(params)
        self.assertIs(c, buildMechanismCircuit(mechanismParams.fromQ(F(1, 4), 8, 16)))
        self.assertIsNot(c, buildMechanismCircuit(mechanismParams.fromQ(F(1, 8), 8, 16)))
        self.assertIs(c.digest(), c.digest())
        self.assertEqual(c.digest(), deserialize(c.serialize()).digest())

    def testAndCountGrows(self):
        counts = [buildMechanismCircuit(mechanismParams.fromQ(F(1, 4), t, k))
                  .andCount() for t, k in ((4, 4), (8, 8), (8, 16), (16, 16),
                                           (16, 32))]
        self.assertEqual(sorted(counts), counts)


if __name__ == "__main__":
    unittest.main()
