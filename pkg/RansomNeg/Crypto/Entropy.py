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
import os

import numpy as np
from cryptography.hazmat.backends import default_backend
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

from RansomNeg import Constants

"""
Sources of random bytes. A seeded source expands its seed with AES-256 in
counter mode and reproduces the same stream on every run; an unseeded one
reads the operating system's entropy pool.
"""

class randomSource():
    """
    :param seed: Seed of a reproducible stream, bytes or hex digits (optional)
    :type seed: bytes
    """

    def __init__(self, seed=None):
        self.seed = None
        self._stream = None
        if seed is not None:
            if isinstance(seed, str):
                seed = bytes.fromhex(seed)
            self.seed = bytes(seed)
            key = hashlib.sha256(b"ransomneg-seed" + self.seed).digest()
            self._stream = Cipher(algorithms.AES(key), modes.CTR(bytes(16)),
                                  backend=default_backend()).encryptor()

    def __repr__(self):
        return "randomSource(%s)" % ("seeded" if self.seeded else "system")

    @property
    def seeded(self):
        return self._stream is not None

    def randomBytes(self, n):
        if self._stream is None:
            return os.urandom(n)
        return self._stream.update(bytes(n))

    def integer(self, bits):
        """
        Uniform integer below :math:`2^{bits}`.

        :rtype: int
        """
        raw = int.from_bytes(self.randomBytes((bits + 7) // 8), 'little')
        return raw & ((1 << bits) - 1)

    def integers(self, bits, count):
        """
        The next count draws of :meth:`integer` at once, read from the same
        byte stream.

        :param bits: Bitwidth of each draw, at most 64
        :type bits: int
        :rtype: numpy.ndarray
        """
        size = (bits + 7) // 8
        if not 0 < size <= 8:
            raise ValueError("Cannot draw %i-bit words" % bits)
        raw = np.frombuffer(self.randomBytes(size * count), dtype=np.uint8)
        padded = np.zeros((count, 8), dtype=np.uint8)
        padded[:, :size] = raw.reshape(count, size)
        words = padded.view('<u8').ravel()
        return words & np.uint64((1 << bits) - 1)

    def label(self):
        """
        Fresh 128-bit wire label.

        :rtype: int
        """
        return self.integer(8 * Constants.labelBytes)

    def derive(self, tag):
        """
        Independent child source for one part of a run. Children of a seeded
        source are seeded too, so each part sees the same stream no matter
        in which order the parts draw.

        :param tag: Name of the child
        :type tag: string
        """
        if self.seed is None:
            return randomSource()
        return randomSource(hashlib.sha256(self.seed + tag.encode()).digest())
