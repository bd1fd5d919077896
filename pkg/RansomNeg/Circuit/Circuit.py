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
import struct

from RansomNeg import Constants
from RansomNeg.Basic.Utilities import toBits, fromBits

"""
Boolean circuits of XOR, AND and NOT gates over numbered wires. Input wires
come first, every gate writes a fresh wire, so the gate list is in
topological order.
"""

XOR = 0
AND = 1
NOT = 2

gateNames = {XOR: 'XOR', AND: 'AND', NOT: 'NOT'}

noWire = 0xFFFFFFFF
"""
Second input of a NOT gate in the serialized form.

:type: int
"""

class gate():
    """
    :param kind: XOR, AND or NOT
    :type kind: int
    :param inA: First input wire
    :param inB: Second input wire, None for NOT
    :param out: Output wire
    """

    def __init__(self, kind, inA, inB, out):
        if kind not in gateNames:
            raise ValueError("Unknown gate kind %s" % kind)
        if (kind == NOT) != (inB is None):
            raise ValueError("%s gate with wrong number of inputs"
                             % gateNames[kind])
        self.kind = kind
        self.inA = inA
        self.inB = inB
        self.out = out

    def __repr__(self):
        if self.kind == NOT:
            return "NOT(%i) -> %i" % (self.inA, self.out)
        return "%s(%i, %i) -> %i" % (gateNames[self.kind], self.inA,
                                     self.inB, self.out)

    def __eq__(self, other):
        return (self.kind, self.inA, self.inB, self.out) == \
               (other.kind, other.inA, other.inB, other.out)

class circuit():
    """
    Immutable gate list with named input ranges and named output wires.

    :param wireCount: Number of wires
    :type wireCount: int
    :param gates: Gates in evaluation order
    :type gates: list
    :param inputMap: (name, start, width) of every input range
    :type inputMap: list
    :param outputs: (name, wires) of every output, least significant first
    :type outputs: list
    """

    def __init__(self, wireCount, gates, inputMap, outputs):
        self.wireCount = wireCount
        self.gates = tuple(gates)
        self.inputMap = tuple((n, s, w) for n, s, w in inputMap)
        self.outputs = tuple((n, tuple(ws)) for n, ws in outputs)
        self.check()
        self._digest = None

    def __repr__(self):
        return "circuit(wires=%i, gates=%i, and=%i)" % (
            self.wireCount, len(self.gates), self.andCount())

    def check(self):
        """
        Validates input ranges, topological order and single assignment.
        """
        assigned = [False] * self.wireCount
        position = 0
        for name, start, width in self.inputMap:
            if start != position:
                raise ValueError("Input %s does not start at wire %i"
                                 % (name, position))
            for w in range(start, start + width):
                assigned[w] = True
            position += width

        for g in self.gates:
            for w in (g.inA, g.inB):
                if w is None:
                    continue
                if not 0 <= w < self.wireCount or not assigned[w]:
                    raise ValueError("Gate %r reads an unassigned wire" % g)
            if not 0 <= g.out < self.wireCount or assigned[g.out]:
                raise ValueError("Gate %r writes wire %i twice" % (g, g.out))
            assigned[g.out] = True

        for name, wires in self.outputs:
            for w in wires:
                if not 0 <= w < self.wireCount or not assigned[w]:
                    raise ValueError("Output %s reads unassigned wire %i"
                                     % (name, w))

    @property
    def inputWidth(self):
        return sum(w for _, _, w in self.inputMap)

    def outputWires(self, name):
        for n, wires in self.outputs:
            if n == name:
                return wires
        raise KeyError("No output %s" % name)

    def andCount(self):
        return sum(1 for g in self.gates if g.kind == AND)

    def evalPlain(self, bits):
        """
        Evaluates the circuit gate by gate.

        :param bits: Input bits in wire order
        :type bits: list
        :returns: Output bits, concatenated in output order
        :rtype: list
        """
        if len(bits) != self.inputWidth:
            raise ValueError("Expected %i input bits, got %i"
                             % (self.inputWidth, len(bits)))
        values = list(bits) + [0] * (self.wireCount - len(bits))
        for g in self.gates:
            if g.kind == XOR:
                values[g.out] = values[g.inA] ^ values[g.inB]
            elif g.kind == AND:
                values[g.out] = values[g.inA] & values[g.inB]
            else:
                values[g.out] = values[g.inA] ^ 1
        return [values[w] for _, wires in self.outputs for w in wires]

    def encodeInputs(self, values):
        """
        Turns named integer inputs into the input bit vector.

        :param values: Input name to integer
        :type values: dict
        :rtype: list
        """
        bits = []
        for name, _, width in self.inputMap:
            bits.extend(toBits(values[name], width))
        return bits

    def decodeOutputs(self, bits):
        result = {}
        position = 0
        for name, wires in self.outputs:
            result[name] = fromBits(bits[position:position + len(wires)])
            position += len(wires)
        return result

    def evaluate(self, values):
        """
        Named form of :meth:`evalPlain`, integers in and out.

        :rtype: dict
        """
        return self.decodeOutputs(self.evalPlain(self.encodeInputs(values)))

    def evalPacked(self, values):
        """
        Bit-sliced evaluation of many input sets in one pass. Every wire holds
        an integer whose bit i belongs to input set i.

        :param values: Input name to a list of integers, one per input set
        :type values: dict
        :returns: Output name to a list of integers
        :rtype: dict
        """
        counts = set(len(v) for v in values.values())
        if len(counts) != 1:
            raise ValueError("Input lists differ in length")
        count = counts.pop()
        full = (1 << count) - 1

        wires = [0] * self.wireCount
        for name, start, width in self.inputMap:
            column = values[name]
            for bit in range(width):
                mask = 0
                for i, v in enumerate(column):
                    if (v >> bit) & 1:
                        mask |= 1 << i
                wires[start + bit] = mask

        for g in self.gates:
            if g.kind == XOR:
                wires[g.out] = wires[g.inA] ^ wires[g.inB]
            elif g.kind == AND:
                wires[g.out] = wires[g.inA] & wires[g.inB]
            else:
                wires[g.out] = wires[g.inA] ^ full

        result = {}
        for name, outWires in self.outputs:
            column = [0] * count
            for bit, w in enumerate(outWires):
                mask = wires[w]
                i = 0
                while mask:
                    if mask & 1:
                        column[i] |= 1 << bit
                    mask >>= 1
                    i += 1
            result[name] = column
        return result

    def serialize(self):
        """
        Canonical little-endian byte form: magic, version, wire and gate
        count, input map, outputs, then the gates as kind (1 byte) and three
        4-byte wire indices.

        :rtype: bytes
        """
        parts = [Constants.circuitMagic,
                 struct.pack("<BII", Constants.formatVersion, self.wireCount,
                             len(self.gates)),
                 struct.pack("<B", len(self.inputMap))]
        for name, start, width in self.inputMap:
            raw = name.encode("ascii")
            parts.append(struct.pack("<B", len(raw)) + raw +
                         struct.pack("<II", start, width))
        parts.append(struct.pack("<B", len(self.outputs)))
        for name, wires in self.outputs:
            raw = name.encode("ascii")
            parts.append(struct.pack("<B", len(raw)) + raw +
                         struct.pack("<I%iI" % len(wires), len(wires), *wires))
        for g in self.gates:
            inB = noWire if g.inB is None else g.inB
            parts.append(struct.pack("<BIII", g.kind, g.inA, inB, g.out))
        return b"".join(parts)

    def digest(self):
        """
        SHA-256 of :meth:`serialize`, computed once.

        :rtype: bytes
        """
        if self._digest is None:
            self._digest = hashlib.sha256(self.serialize()).digest()
        return self._digest

def circuitDigest(c):
    return c.digest()

def deserialize(data):
    """
    Inverse of :meth:`circuit.serialize`. Raises ValueError on malformed
    data.

    :type data: bytes
    :rtype: :class:`circuit`
    """
    reader = _reader(data)
    if reader.take(4) != Constants.circuitMagic:
        raise ValueError("Not a serialized circuit")
    version, wireCount, gateCount = reader.unpack("<BII")
    if version != Constants.formatVersion:
        raise ValueError("Unsupported circuit version %i" % version)

    inputMap = []
    for _ in range(reader.unpack("<B")[0]):
        name = reader.take(reader.unpack("<B")[0]).decode("ascii")
        start, width = reader.unpack("<II")
        inputMap.append((name, start, width))

    outputs = []
    for _ in range(reader.unpack("<B")[0]):
        name = reader.take(reader.unpack("<B")[0]).decode("ascii")
        count = reader.unpack("<I")[0]
        outputs.append((name, reader.unpack("<%iI" % count)))

    gates = []
    for _ in range(gateCount):
        kind, inA, inB, out = reader.unpack("<BIII")
        gates.append(gate(kind, inA, None if kind == NOT else inB, out))
    if not reader.done():
        raise ValueError("Trailing bytes after the last gate")
    return circuit(wireCount, gates, inputMap, outputs)

class _reader():

    def __init__(self, data):
        self.data = bytes(data)
        self.position = 0

    def take(self, n):
        if self.position + n > len(self.data):
            raise ValueError("Truncated data")
        chunk = self.data[self.position:self.position + n]
        self.position += n
        return chunk

    def unpack(self, fmt):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def done(self):
        return self.position == len(self.data)

class circuitBuilder():
    """
    Builds circuits from bit lists. A bit is a wire index or a Python bool
    for a hard-wired constant; gates on constants are folded away. Numbers
    are lists of bits, least significant first.
    """

    def __init__(self):
        self.wireCount = 0
        self.gates = []
        self.inputMap = []
        self.outputs = []
        self._zero = None

    def addInput(self, name, width):
        """
        Allocates an input range. All inputs precede the first gate.

        :rtype: list
        """
        if self.gates:
            raise ValueError("Inputs must be added before any gate")
        if any(n == name for n, _, _ in self.inputMap):
            raise ValueError("Input %s exists" % name)
        start = self.wireCount
        self.inputMap.append((name, start, width))
        self.wireCount += width
        return list(range(start, start + width))

    def _gate(self, kind, a, b=None):
        out = self.wireCount
        self.wireCount += 1
        self.gates.append(gate(kind, a, b, out))
        return out

    # Single bits

    def XOR(self, a, b):
        if isinstance(a, bool) and isinstance(b, bool):
            return a != b
        if isinstance(a, bool):
            a, b = b, a
        if isinstance(b, bool):
            return self.NOT(a) if b else a
        if a == b:
            return False
        return self._gate(XOR, a, b)

    def AND(self, a, b):
        if isinstance(a, bool) and isinstance(b, bool):
            return a and b
        if isinstance(a, bool):
            a, b = b, a
        if isinstance(b, bool):
            return a if b else False
        if a == b:
            return a
        return self._gate(AND, a, b)

    def NOT(self, a):
        if isinstance(a, bool):
            return not a
        return self._gate(NOT, a)

    def OR(self, a, b):
        return self.XOR(self.XOR(a, b), self.AND(a, b))

    # Numbers

    @staticmethod
    def constant(value, width):
        return [bool(b) for b in toBits(value, width)]

    @staticmethod
    def extend(x, width):
        """
        Zero extension or truncation to width bits.
        """
        x = list(x[:width])
        return x + [False] * (width - len(x))

    @staticmethod
    def shiftRight(x, n):
        return list(x[n:])

    def add(self, x, y, carry=False):
        """
        Ripple-carry adder with one AND per bit,
        :math:`c_{out} = c \\oplus ((a \\oplus c)(b \\oplus c))`.

        :returns: sum of width max(len(x), len(y)) and the carry out
        :rtype: tuple
        """
        width = max(len(x), len(y))
        x = self.extend(x, width)
        y = self.extend(y, width)
        result = []
        for a, b in zip(x, y):
            ac = self.XOR(a, carry)
            bc = self.XOR(b, carry)
            result.append(self.XOR(ac, b))
            carry = self.XOR(carry, self.AND(ac, bc))
        return result, carry

    def lessThan(self, x, y):
        """
        Unsigned x < y, the negated carry out of :math:`x + \\bar{y} + 1`.
        """
        width = max(len(x), len(y))
        x = self.extend(x, width)
        y = self.extend(y, width)
        carry = True
        for a, b in zip(x, y):
            b = self.NOT(b)
            ac = self.XOR(a, carry)
            bc = self.XOR(b, carry)
            carry = self.XOR(carry, self.AND(ac, bc))
        return self.NOT(carry)

    def lessEqual(self, x, y):
        return self.NOT(self.lessThan(y, x))

    def mux(self, sel, x, y):
        """
        x if sel else y, bitwise :math:`y \\oplus s(x \\oplus y)`.
        """
        width = max(len(x), len(y))
        x = self.extend(x, width)
        y = self.extend(y, width)
        return [self.XOR(b, self.AND(sel, self.XOR(a, b))) for a, b in zip(x, y)]

    def multiply(self, x, y, width):
        """
        Shift-and-add product truncated to width bits.
        """
        acc = [False] * width
        for i, bit in enumerate(y):
            if i >= width:
                break
            partial = [False] * i + [self.AND(a, bit) for a in x]
            acc, _ = self.add(acc, self.extend(partial, width))
        return acc

    def maximum(self, x, y):
        return self.mux(self.lessThan(x, y), y, x)

    def nonZero(self, x):
        result = False
        for bit in x:
            result = self.OR(result, bit)
        return result

    # Outputs

    def _materialize(self, bit):
        if not isinstance(bit, bool):
            return bit
        if self._zero is None:
            if not self.inputMap or self.wireCount == 0:
                raise ValueError("Constant outputs need at least one input wire")
            self._zero = self._gate(XOR, 0, 0)
            self._one = self._gate(NOT, self._zero)
        return self._one if bit else self._zero

    def addOutput(self, name, bits):
        """
        Declares output bits. Constants get wires of their own.
        """
        if any(n == name for n, _ in self.outputs):
            raise ValueError("Output %s exists" % name)
        self.outputs.append((name, [self._materialize(b) for b in bits]))

    def build(self):
        return circuit(self.wireCount, self.gates, self.inputMap, self.outputs)
