"""
Three ways to encode
====================

A codeword can be produced from a lifted generator matrix, from schoolbook
products in the group ring, or from subquadratic products.  All three give
the same bits; the counters show what each one costs.
"""

import numpy as np

from groupring_ldpc import encoder as E, gf2
from groupring_ldpc.fixtures import get

spec = get("c5").code_spec()
ctx = E.module_context(spec.H, spec.exponent_matrix().moduli)
G = E.derive_generator(ctx)
print("k =", ctx.k, "n =", ctx.length)

rng = np.random.default_rng(1)
msgs = rng.integers(0, 2, (20, ctx.k), dtype=np.uint8)

slow, fast = E.Counter(), E.Counter()
a = E.encode_matrix(msgs, G)
b = E.encode_groupring(msgs, ctx, slow)
c = E.encode_fast(msgs, ctx, fast)
print("agree:", (a == b).all() and (a == c).all())
print("syndromes zero:", not gf2.matmul(a, spec.H.T).any())
print("bit products per message:", slow.n // 20, "vs", fast.n // 20)

###############################################################################
# A unit in R'G encodes on its own: the code is spanned by the rows of u
# picked out by a block set L.  With |G| = 9 and b = 511 the fast path
# splits F2[z]/(z^4599 - 1) into small fields.

from groupring_ldpc.group_ring import GroupRingElement, TensorRing, invert_element
from groupring_ldpc.groups import cyclic

G9, R = cyclic(9), TensorRing((511,))
while True:
    w = GroupRingElement.random(G9, R, rng)
    if invert_element(w) is not None:
        break
uctx = E.unit_context(w, [0, 1, 2])
m = rng.integers(0, 2, (1, uctx.k), dtype=np.uint8)
n1, n2 = E.Counter(), E.Counter()
same = (E.encode_groupring(m, uctx, n1) == E.encode_fast(m, uctx, n2)).all()
print(same, n1.n, n2.n, f"{n2.n / (9 * 511 ** 2):.2%} of n b^2")
print(E.fft2_gate(G9, R))
