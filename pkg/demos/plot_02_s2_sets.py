"""
S2-sets and the extended construction
=====================================

An S2-set in an Abelian group has all pairwise differences distinct.
The exponents of a column of W come from such a set, so the search for
large ones decides how many rows a code can have.
"""

from groupring_ldpc import combinatorics as K, construction as C, gf2
from groupring_ldpc.groups import cyclic

for v in (7, 13, 21, 31):
    S = K.search_max_s2((v,))
    print(f"Z_{v}: size {S.size}, members {[m[0] for m in S.members]}, certified {S.certified}")

###############################################################################
# Non-cyclic groups.  Z2^4 holds an S2-set of size 6 and no larger.

S = K.search_max_s2((2, 2, 2, 2), stop_at_bound=False)
print(S.size, S.certified, S.members)

###############################################################################
# Singer difference sets give S2-sets with lambda = 1 for free.

ds = K.singer_difference_set(2, 3)
print("Singer (7,3,1):", [d[0] for d in ds.members])

###############################################################################
# An S2-set in Z4^4 drives a 16-column matrix; the 4 x 16 subarray lifts to
# a length-4096 code.

D = K.z4_4_set()
W = C.construct_from_s2(D, cyclic(16), (4, 4, 4, 4))
print(C.check_constraints(W).ok)
code = C.lift(C.subarray(W, 4, 16))
print(code.length, code.dimension(), gf2.has_4cycle(code.H))
