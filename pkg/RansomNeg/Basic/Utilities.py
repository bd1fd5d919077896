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


from fractions import Fraction

def toBits(num, width):
    """
    Converts a non-negative integer into a list of bits, least significant
    bit first. toBits(6, 4) gives [0, 1, 1, 0].

    :param num: Number to convert
    :type num: int
    :param width: Number of bits
    :type width: int
    :rtype: list
    """
    if num < 0 or num >> width:
        raise ValueError("%i does not fit into %i bits" % (num, width))
    return [(num >> i) & 1 for i in range(width)]

def fromBits(bits):
    """
    Inverse of :func:`toBits`.

    :rtype: int
    """
    return sum(bit << i for i, bit in enumerate(bits))

def double(block):
    """
    Doubling of a 128-bit block in :math:`GF(2^{128})` with the reduction
    polynomial :math:`x^{128}+x^7+x^2+x+1`.

    :param block: 128-bit block
    :type block: int
    :rtype: int
    """
    block <<= 1
    if block >> 128:
        block = (block ^ 0x87) & ((1 << 128) - 1)
    return block

def isDyadic(x):
    """
    Returns ``True`` if the rational x is a multiple of a power of two, so
    that fixed-point scaling represents it exactly.

    :type x: Fraction
    :rtype: bool
    """
    d = Fraction(x).denominator
    return d & (d - 1) == 0

def formatMoney(x):
    """
    Formats an exact amount. Integers are printed without denominator, other
    rationals as ``a/b`` followed by their decimal approximation.

    :type x: Fraction
    :rtype: string
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%s (~%.6g)" % (x, float(x))
