"""
BER of a length-2040 code on the AWGN channel
=============================================

BPSK over AWGN with a sum-product decoder.  A short run; raise
min_frame_errors for smoother curves.
"""

from groupring_ldpc import channel as ch, encoder as E
from groupring_ldpc.fixtures import get

spec = get("c1").code_spec()
ctx = E.module_context(spec.H, spec.exponent_matrix().moduli)
code = ch.SimCode(spec.H, E.derive_generator(ctx))
print("rate", round(code.rate, 3))

res = ch.simulate(code, [1.5, 2.0, 2.5], min_frame_errors=20, max_frames=2048, iters=30, seed=1)
print(res.to_csv())

###############################################################################
# Uncoded BPSK for comparison, against the closed form Q(sqrt(2 Eb/N0)).

unc = ch.simulate(None, [1.5, 2.0, 2.5], min_frame_errors=10 ** 9, max_frames=200, uncoded_bits=1000, seed=1)
for p in unc.points:
    print(p.ebn0_db, p.ber, float(ch.uncoded_ber(p.ebn0_db)))
