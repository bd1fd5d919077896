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
Commonly used constants are defined globally by this package.
"""

labelBytes = 16
"""
Size of a wire label in bytes (128 bit).

:type: int
"""

garblingKey = bytes(range(16))
"""
Public key of the fixed-key AES permutation used by the garbling hash. Any
value works as long as both parties use the same one.

:type: bytes
"""

modpPrime = int(
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD1"
    "29024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245"
    "E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D"
    "670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9"
    "DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF", 16)
"""
2048-bit MODP group of RFC 3526 (group 14), a safe prime.

:type: int
"""

modpGenerator = 2
"""
Generator of the prime-order subgroup of quadratic residues modulo
:data:`modpPrime`.

:type: int
"""

modpBytes = 256

otExponentBits = 256
"""
Size of the secret exponents drawn during oblivious transfer.

:type: int
"""

circuitMagic = b"RNCC"
formatVersion = 1
