"""
Building parity-check matrices from a group ring
================================================

The exponent matrix of a code lists, for every block of H, the exponents of
a circulant permutation matrix.  Here we build it for the cyclic group of
order 8 over the ring F2[x]/(x^255 - 1), look at a corner of it, and lift a
4 x 8 subarray into a binary H.
"""

import numpy as np

from groupring_ldpc import construction as C, gf2
from groupring_ldpc.groups import cyclic, dihedral

W = C.construct_theorem2(cyclic(8))
print("moduli", W.moduli, "shape", W.shape)
print(np.array(W.tolist()))

###############################################################################
# Every construction is checked against the two rules that keep the lifted
# code free of 4-cycles.

print(C.check_constraints(W))

###############################################################################
# Keep the first 4 block rows and lift.  Each entry becomes a 255 x 255
# permutation block, so H is 1020 x 2040.

code = C.lift(C.subarray(W, 4, 8))
print("H", code.H.shape, "length", code.length, "dimension", code.dimension())
print("4-cycles:", gf2.has_4cycle(code.H))
print("girth (up to 8):", gf2.girth(code.H, 8, block_size=W.b))

###############################################################################
# A non-Abelian group works the same way.  The dihedral group of order 8
# gives another matrix with the same row weights.

Wd = C.construct_theorem2(dihedral(8))
print(np.array(Wd.tolist()))
print(C.check_constraints(Wd).ok)
