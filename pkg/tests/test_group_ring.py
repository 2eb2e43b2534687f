import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupring_ldpc import gf2, gf2poly
from groupring_ldpc.group_ring import (GroupRingElement, TensorRing, grp_multiply, invert_element,
                                       lift_element, lift_matrix, rg_matrix, ring_adjugate, ring_det,
                                       ring_matmul, transpose_element)
from groupring_ldpc.groups import cyclic, dihedral, direct_product, quaternion

RINGS = [(3,), (4,), (3, 4), (2, 2, 2)]
GROUPS = [cyclic(3), cyclic(4), direct_product([2, 2]), dihedral(6), quaternion()]


def conv_reference(a, c, moduli):
    """Plain nested loops over exponent tuples."""
    R = TensorRing(moduli)
    out = R.zero()
    for i in np.flatnonzero(a):
        for j in np.flatnonzero(c):
            ei, ej = R.psi_inv(int(i)), R.psi_inv(int(j))
            out[R.psi(tuple(x + y for x, y in zip(ei, ej)))] ^= 1
    return out


@settings(max_examples=40)
@given(st.sampled_from(RINGS), st.integers(0, 2 ** 31))
def test_ring_product_and_lift_homomorphism(moduli, seed):
    R = TensorRing(moduli)
    rng = np.random.default_rng(seed)
    a, c = rng.integers(0, 2, (2, R.b), dtype=np.uint8)
    p = R.mul(a, c)
    assert (p == conv_reference(a, c, moduli)).all()
    assert (gf2.matmul(R.lift(a), R.lift(c)) == R.lift(p)).all()


def test_psi_last_variable_fastest():
    R = TensorRing((3, 4))
    assert R.psi((1, 3)) == 7 and R.psi_inv(7) == (1, 3)
    assert R.add_table[R.psi((2, 3)), R.psi((2, 2))] == R.psi((1, 1))


def test_lift_of_monomial_is_qcpm():
    R = TensorRing((3, 4))
    M = R.lift(R.monomial((1, 3)))
    assert (M.sum(0) == 1).all() and (M.sum(1) == 1).all()
    assert M[0, R.psi((1, 3))] == 1


@settings(max_examples=30)
@given(st.sampled_from(GROUPS), st.sampled_from(RINGS[:3]), st.integers(0, 2 ** 31))
def test_rg_matrix_is_a_homomorphism(G, moduli, seed):
    R = TensorRing(moduli)
    rng = np.random.default_rng(seed)
    a = GroupRingElement.random(G, R, rng)
    c = GroupRingElement.random(G, R, rng)
    ac = grp_multiply(a, c)
    assert (ring_matmul(rg_matrix(a), rg_matrix(c), R) == rg_matrix(ac)).all()
    assert (gf2.matmul(lift_element(a), lift_element(c)) == lift_element(ac)).all()


def test_group_ring_product_definition():
    G, R = dihedral(6), TensorRing((3,))
    a = GroupRingElement.from_exponents(G, R, [None, 1, None, None, 2, None])
    c = GroupRingElement.from_exponents(G, R, [0, None, None, 1, None, None])
    ac = a * c
    ref = GroupRingElement(G, R)
    for h in (1, 4):
        for k in (0, 3):
            ref.coeffs[G.mul(h, k)] ^= R.mul(a.coeffs[h], c.coeffs[k])
    assert ac == ref


@settings(max_examples=25)
@given(st.sampled_from(GROUPS[:4]), st.integers(0, 2 ** 31))
def test_inverse(G, seed):
    R = TensorRing((7,))
    w = GroupRingElement.random(G, R, np.random.default_rng(seed))
    u = invert_element(w)
    full = gf2.rank(lift_element(w)) == G.order * R.b
    assert (u is not None) == full
    if u is not None:
        assert w * u == GroupRingElement.identity(G, R)


def test_transpose_matches_matrix_transpose():
    G, R = dihedral(8), TensorRing((3,))
    u = GroupRingElement.random(G, R, np.random.default_rng(4))
    assert (lift_element(transpose_element(u)) == lift_element(u).T).all()


def test_det_and_adjugate_of_worked_example():
    G, R = cyclic(3), TensorRing((7,))
    w = GroupRingElement.from_exponents(G, R, [1, 2, 4])
    W = rg_matrix(w)
    det = ring_det(W, R)
    assert gf2poly.from_bits(det) == 0b1101001  # x^6 + x^5 + x^3 + 1
    adj = ring_adjugate(W, R)  # cofactor matrix; W adj^t = det I
    printed = [[0b1000100, 0b0110000, 0b0001010]]  # x^2+x^6, x^4+x^5, x+x^3
    assert [[gf2poly.from_bits(c) for c in adj[0]]] == printed
    prod = ring_matmul(W, adj.transpose(1, 0, 2), R)
    eye = np.zeros_like(prod)
    for i in range(3):
        eye[i, i] = det
    assert (prod == eye).all()
    assert gf2.rank(lift_matrix(W, R)) == 16
