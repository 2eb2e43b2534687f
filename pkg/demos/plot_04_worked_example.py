"""
A zero divisor in F2[x]/(x^7 - 1) C3
====================================

w = x + x^2 g + x^4 g^2 over the cyclic group <g> of order 3 is not a
unit.  Its determinant shares a factor with x^7 - 1, and the encoder has to
work with an annihilator instead of an inverse.
"""

import numpy as np

from groupring_ldpc import encoder as E, gf2poly
from groupring_ldpc.group_ring import GroupRingElement, TensorRing, rg_matrix, ring_adjugate, ring_det
from groupring_ldpc.groups import cyclic

G, R = cyclic(3), TensorRing((7,))
w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
M = rg_matrix(w)
det = gf2poly.from_bits(ring_det(M, R))
print("det =", gf2poly.to_str(det))
print("gcd with x^7 - 1 =", gf2poly.to_str(gf2poly.gcd(det, (1 << 7) | 1)))

adj = ring_adjugate(M, R)
print("first row of adj:", [gf2poly.to_str(gf2poly.from_bits(a)) for a in adj[0]])

###############################################################################
# Encode with the annihilating factor f = 1 + x + x^2 + x^4.

ctx = E.zero_divisor_context(w, [0], f=0b10111)
print("rank(W) =", ctx.info["rank_W"], "rank(U) =", ctx.info["rank_U"])
m = np.zeros(ctx.k, np.uint8)
m[:3] = [1, 0, 1]
c = E.encode_zero_divisor(m, ctx, allow_partial=True)
print(c.reshape(3, 7))
