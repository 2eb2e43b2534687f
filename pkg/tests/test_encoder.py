import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupring_ldpc import encoder as E
from groupring_ldpc import gf2, gf2poly
from groupring_ldpc.group_ring import (GroupRingElement, TensorRing, invert_element, lift_element,
                                       transpose_element)
from groupring_ldpc.groups import cyclic, dihedral, direct_product, quaternion

from paper_data import WORKED_C1, WORKED_DET, WORKED_F, WORKED_L, WORKED_M1


def random_unit(G, R, seed):
    rng = np.random.default_rng(seed)
    for _ in range(200):
        w = GroupRingElement.random(G, R, rng)
        if invert_element(w) is not None:
            return w
    raise AssertionError("no unit found")


def all_paths(ctx, msgs):
    G = E.derive_generator(ctx)
    a = E.encode_matrix(msgs, G)
    cs, cf = E.Counter(), E.Counter()
    b = E.encode_groupring(msgs, ctx, cs)
    c = E.encode_fast(msgs, ctx, cf)
    return G, a, b, c, cs, cf


@pytest.mark.parametrize("G,moduli,L", [
    (cyclic(3), (7,), [0]),
    (cyclic(5), (3,), [0, 2]),
    (direct_product([2, 3]), (5,), [1, 4]),
    (dihedral(8), (3,), [0, 3, 5]),
    (quaternion(), (3,), [2]),
    (cyclic(4), (3, 5), [0]),
], ids=str)
def test_unit_case_paths_agree(G, moduli, L):
    R = TensorRing(moduli)
    w = random_unit(G, R, 7)
    ctx = E.unit_context(w, L)
    assert ctx.case is E.Case.UNIT
    rng = np.random.default_rng(1)
    msgs = rng.integers(0, 2, (40, ctx.k), dtype=np.uint8)
    Gm, a, b, c, cs, cf = all_paths(ctx, msgs)
    assert (a == b).all() and (a == c).all()
    assert not gf2.matmul(a, ctx.H.T).any()
    # rank(G) + rank(H) = nb for a full-rank H
    assert gf2.rank(Gm) + gf2.rank(ctx.H) == G.order * R.b
    assert cs.n == E.naive_count(ctx) * len(msgs)
    assert cf.n == E.fast_count(ctx) * len(msgs)


def test_unit_generator_is_lifted_rows_of_u_transpose():
    G, R = cyclic(3), TensorRing((7,))
    w = random_unit(G, R, 3)
    ctx = E.unit_context(w, [1])
    ut = transpose_element(invert_element(w))
    rows = lift_element(ut)
    Lp = [i for i in range(3) if i != 1]
    expect = np.concatenate([rows[i * 7:(i + 1) * 7] for i in Lp])
    assert (E.derive_generator_unit(ctx) == expect).all()


def test_unit_context_refuses_zero_divisor():
    G, R = cyclic(3), TensorRing((7,))
    w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
    with pytest.raises(E.NotUnitError):
        E.unit_context(w, [0])


def test_worked_zero_divisor_example():
    G, R = cyclic(3), TensorRing((7,))
    w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
    ctx = E.zero_divisor_context(w, [0], f=WORKED_F)
    info = ctx.info
    assert gf2poly.from_bits(info["det"]) == WORKED_DET
    assert info["rank_W"] == 16 and info["rank_U"] == 3
    assert list(info["independent_rows"]) == WORKED_L
    assert ctx.partial and info["image_rank"] == 12 and ctx.code_dimension == 14
    m = np.zeros(ctx.k, np.uint8)
    m[:3] = WORKED_M1
    assert E.encode_zero_divisor(m, ctx, allow_partial=True).tolist() == WORKED_C1
    with pytest.raises(E.UnsupportedStructure):
        E.encode_zero_divisor(m, ctx)


def test_worked_example_paths_agree():
    G, R = cyclic(3), TensorRing((7,))
    w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
    ctx = E.zero_divisor_context(w, [0], f=WORKED_F)
    msgs = np.random.default_rng(0).integers(0, 2, (30, ctx.k), dtype=np.uint8)
    _, a, b, c, _, _ = all_paths(ctx, msgs)
    assert (a == b).all() and (a == c).all() and not gf2.matmul(a, ctx.H.T).any()


def test_default_annihilator():
    G, R = cyclic(3), TensorRing((7,))
    w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
    u, det, f = E.annihilator(w)
    assert gf2poly.from_bits(det) == WORKED_DET
    assert (w * u).is_zero() and not u.is_zero()


@pytest.mark.parametrize("n,rho,gamma,extended", [(5, 2, 5, False), (4, 2, 4, False), (3, 2, 6, True)])
def test_module_context(n, rho, gamma, extended):
    from groupring_ldpc import construction as C
    from groupring_ldpc.codespec import theorem2_members
    if extended:
        W = C.construct_extended(theorem2_members(n), cyclic(n), (2 ** n - 1,))
    else:
        W = C.construct_theorem2(cyclic(n))
    L = C.lift(C.subarray(W, rho, gamma))
    ctx = E.module_context(L.H, W.moduli)
    assert ctx.k == L.dimension() and not ctx.partial
    msgs = np.random.default_rng(2).integers(0, 2, (25, ctx.k), dtype=np.uint8)
    Gm, a, b, c, _, _ = all_paths(ctx, msgs)
    assert gf2.rank(Gm) == ctx.k
    assert (a == b).all() and (a == c).all() and not gf2.matmul(a, L.H.T).any()


def test_short_messages_are_right_padded():
    G, R = cyclic(3), TensorRing((7,))
    ctx = E.unit_context(random_unit(G, R, 3), [0])
    m = np.array([1, 0, 1], np.uint8)
    full = np.zeros(ctx.k, np.uint8)
    full[:3] = m
    assert (E.encode_fast(m, ctx) == E.encode_fast(full, ctx)).all()
    with pytest.raises(ValueError):
        E.encode_fast(np.zeros(ctx.k + 1, np.uint8), ctx)


def test_karatsuba_counts():
    assert [E.karatsuba_count(n) for n in (1, 2, 3, 4, 9)] == [1, 3, 7, 9, 43]
    assert E.karatsuba_count(511) == 19681
    for n in range(2, 200):
        assert E.karatsuba_count(n) < n * n or n <= 3


@settings(max_examples=30)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=2), st.integers(0, 2 ** 31))
def test_fast_cyclic_product(shape, seed):
    shape = tuple(shape)
    R = TensorRing(shape)
    rng = np.random.default_rng(seed)
    A = rng.integers(0, 2, (3, R.b), dtype=np.uint8)
    C = rng.integers(0, 2, (3, R.b), dtype=np.uint8)
    cnt = E.Counter()
    out = E.cyclic_mul_fast(A, C, shape, cnt)
    assert (out == R.mul_many(A, C)).all()
    assert cnt.n > 0


@pytest.mark.parametrize("G,moduli", [(cyclic(9), (511,)), (cyclic(8), (255,)),
                                      (direct_product([2, 2]), (3, 5)), (dihedral(8), (7,))], ids=str)
def test_fft2_gate_never_passes_over_binary_rings(G, moduli):
    R = TensorRing(moduli)
    assert E.ring_root_order(R) == 1
    gate = E.fft2_gate(G, R)
    assert not gate.ok and gate.reason


def test_fft2_gate_trivial_group():
    assert E.fft2_gate(cyclic(1), TensorRing((7,))).ok


def test_crt_exponents():
    dp = E.crt_exponents([1, 2, 4], 3, 8)
    N = 21
    for i, (d, e) in enumerate(zip([1, 2, 4], dp)):
        assert e % 7 == d and e % 3 == i and 0 <= e < N


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 8), (5, 8), (3, 16), (5, 4), (7, 4), (3, 32), (2, 8)]),
       st.integers(0, 2 ** 31))
def test_invertibility_verdict_matches_rank(nq, seed):
    n, q = nq
    rng = np.random.default_rng(seed)
    D = [int(v) for v in rng.integers(0, q - 1, n)]
    rep = E.invertibility_test_cyclic(D, n, q)
    w = GroupRingElement.from_exponents(cyclic(n), TensorRing((q - 1,)), D)
    full = gf2.rank(lift_element(w)) == n * (q - 1)
    if rep.verdict == "Invertible":
        assert full
    elif rep.verdict == "NotInvertible":
        assert not full
    else:
        assert np.gcd(n, q - 1) > 1


def test_invertibility_reports_hypotheses():
    rep = E.invertibility_test_cyclic([1, 2, 4], 3, 8)
    assert rep.verdict == "NotInvertible"
    assert set(rep.hypotheses) >= {"n_prime", "q_minus_1_prime", "modified_s2", "two_primitive_root"}
    assert rep.gcds and rep.reason


@pytest.mark.parametrize("N", [7, 15, 63, 255])
def test_crt_mul_matches_cyclic_convolution(N):
    rng = np.random.default_rng(N)
    A = rng.integers(0, 2, (3, N), dtype=np.uint8)
    C = rng.integers(0, 2, (3, N), dtype=np.uint8)
    basis = E.crt_basis(N)
    assert sum(E.gf2poly.deg(f) for f in basis.factors) == N
    c = E.Counter()
    P = E.crt_mul(A, C, basis, c)
    ref = np.zeros_like(A)
    for i in range(3):
        for s in np.flatnonzero(A[i]):
            ref[i] ^= np.roll(C[i], s)
    assert (P == ref).all()
    assert c.n == 3 * basis.products < 3 * E.karatsuba_count(N)


def test_crt_basis_even_length_unsupported():
    assert E.crt_basis(16) is None
