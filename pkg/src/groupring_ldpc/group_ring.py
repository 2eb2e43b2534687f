"""The binary tensor ring R' and the group ring R'G.

R' = F2[x1]/(x1^m1 - 1) (x) ... (x) F2[xt]/(xt^mt - 1) with m_j = q_j - 1.
A ring coefficient is a 0/1 vector of length b = prod(m_j); position
psi(i1..it) = sum_j i_j * prod_{s>j} m_s holds the coefficient of
x1^i1 ... xt^it (0-based, last variable fastest, the same layout as the
Kronecker product of CPMs).
"""
from __future__ import annotations

from functools import cached_property
from math import gcd, prod

import numpy as np

from . import gf2, gf2poly
from .groups import FiniteGroup


class TensorRing:
    def __init__(self, moduli):
        moduli = tuple(int(m) for m in np.atleast_1d(moduli))
        if not moduli or min(moduli) < 1:
            raise ValueError(f"bad moduli {moduli}")
        self.moduli = moduli
        self.b = prod(moduli)

    def __eq__(self, other):
        return isinstance(other, TensorRing) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return f"TensorRing{self.moduli}"

    def psi(self, exps):
        i = 0
        for e, m in zip(exps, self.moduli):
            i = i * m + (e % m)
        return i

    def psi_inv(self, i):
        return tuple(int(v) for v in np.unravel_index(i, self.moduli))

    def zero(self):
        return np.zeros(self.b, dtype=np.uint8)

    def one(self):
        return self.monomial((0,) * len(self.moduli))

    def monomial(self, exps):
        v = self.zero()
        v[self.psi(exps)] = 1
        return v

    def poly(self, exps_list):
        """Sum of monomials (exponent tuples or ints for t = 1)."""
        v = self.zero()
        for e in exps_list:
            e = (e,) if np.ndim(e) == 0 else e
            v[self.psi(e)] ^= 1
        return v

    @cached_property
    def add_table(self):
        """add_table[i, j] = psi(psi_inv(i) + psi_inv(j))."""
        grids = np.indices(self.moduli).reshape(len(self.moduli), -1)
        out = np.zeros((self.b, self.b), dtype=np.int64)
        for ax, m in enumerate(self.moduli):
            s = (grids[ax][:, None] + grids[ax][None, :]) % m
            out = out * m + s
        return out

    @cached_property
    def neg_index(self):
        grids = np.indices(self.moduli).reshape(len(self.moduli), -1)
        out = np.zeros(self.b, dtype=np.int64)
        for ax, m in enumerate(self.moduli):
            out = out * m + (-grids[ax]) % m
        return out

    def mul(self, a, c):
        """Product in R' (multi-dimensional cyclic convolution mod 2)."""
        return self.mul_many(np.asarray(a)[None], np.asarray(c)[None])[0]

    def mul_many(self, A, C):
        shape = self.moduli
        axes = tuple(range(1, len(shape) + 1))
        fa = np.fft.rfftn(A.reshape((-1,) + shape).astype(np.float64), s=shape, axes=axes)
        fc = np.fft.rfftn(C.reshape((-1,) + shape).astype(np.float64), s=shape, axes=axes)
        prodv = np.fft.irfftn(fa * fc, s=shape, axes=axes)
        return (np.rint(prodv).astype(np.int64) & 1).reshape(len(A), -1).astype(np.uint8)

    def star(self, a):
        """x_j -> x_j^-1 on every variable."""
        return np.asarray(a)[..., self.neg_index]

    def lift(self, a):
        """b x b binary matrix of a coefficient: sum of QCPMs of its monomials.
        Row r is a shifted by r, so lift(x^e) = CPM(e1) (x) ... (x) CPM(et)."""
        a = np.asarray(a, dtype=np.uint8)
        # M[r, c] = a[c - r]
        diff = self.add_table[self.neg_index]  # diff[r, c] = c - r
        return a[diff]

    def exponent_of(self, a):
        """Exponent tuple of a monomial coefficient, or None."""
        nz = np.flatnonzero(a)
        if len(nz) != 1:
            return None
        return self.psi_inv(int(nz[0]))


class GroupRingElement:
    """Element of R'G stored as an (order, b) 0/1 array; row g is the
    coefficient of group element g."""

    def __init__(self, group: FiniteGroup, ring: TensorRing, coeffs=None):
        self.group = group
        self.ring = ring
        if coeffs is None:
            coeffs = np.zeros((group.order, ring.b), dtype=np.uint8)
        coeffs = np.asarray(coeffs, dtype=np.uint8).reshape(group.order, ring.b) & 1
        self.coeffs = coeffs

    @classmethod
    def identity(cls, group, ring):
        e = cls(group, ring)
        e.coeffs[0] = ring.one()
        return e

    @classmethod
    def from_terms(cls, group, ring, terms):
        """terms: {group index: coefficient}; coefficient is a bit vector,
        an int exponent (t = 1) or a tuple exponent (monomial)."""
        e = cls(group, ring)
        for g, c in terms.items():
            c = np.asarray(c)
            if c.ndim == 1 and c.size == ring.b and ring.b > 1 and c.dtype == np.uint8:
                e.coeffs[g] ^= c
            else:
                e.coeffs[g] ^= ring.monomial(tuple(np.atleast_1d(c)))
        return e

    @classmethod
    def from_exponents(cls, group, ring, exps):
        """Monomial coefficients: exps[g] is the exponent tuple (or int) of the
        coefficient of g, None for 0."""
        e = cls(group, ring)
        for g, x in enumerate(exps):
            if x is not None:
                e.coeffs[g] = ring.monomial(tuple(np.atleast_1d(x)))
        return e

    @classmethod
    def random(cls, group, ring, rng):
        return cls(group, ring, rng.integers(0, 2, size=(group.order, ring.b), dtype=np.uint8))

    def _check(self, other):
        if self.group != other.group or self.ring != other.ring:
            raise ValueError("group ring mismatch")

    def __add__(self, other):
        self._check(other)
        return GroupRingElement(self.group, self.ring, self.coeffs ^ other.coeffs)

    __sub__ = __add__

    def __mul__(self, other):
        return grp_multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement) and self.group == other.group
                and self.ring == other.ring and np.array_equal(self.coeffs, other.coeffs))

    def is_zero(self):
        return not self.coeffs.any()

    def scale(self, c):
        """Multiply every coefficient by the ring element c."""
        n = self.group.order
        return GroupRingElement(self.group, self.ring,
                                self.ring.mul_many(self.coeffs, np.repeat(np.asarray(c)[None], n, 0)))

    def bits(self):
        """Concatenated coefficient vectors: the binary word of length nb."""
        return self.coeffs.reshape(-1).copy()

    def __repr__(self):
        return f"GroupRingElement({self.group!r}, {self.ring!r}, support={np.flatnonzero(self.coeffs.any(1)).tolist()})"


def grp_multiply(a, c):
    """(ac)(g) = sum_h a(h) c(h^-1 g)."""
    a._check(c)
    G, R = a.group, a.ring
    n = G.order
    shape = R.moduli
    axes = tuple(range(1, len(shape) + 1))
    fa = np.fft.rfftn(a.coeffs.reshape((n,) + shape).astype(np.float64), s=shape, axes=axes)
    fc = np.fft.rfftn(c.coeffs.reshape((n,) + shape).astype(np.float64), s=shape, axes=axes)
    # idx[h, g] = h^-1 g
    idx = G.mul_table[G.inv_table][:, :]
    out = np.zeros_like(fa)
    for h in np.flatnonzero(a.coeffs.any(1)):
        out += fa[h] * fc[idx[h]]
    res = np.fft.irfftn(out, s=shape, axes=axes)
    coeffs = (np.rint(res).astype(np.int64) & 1).reshape(n, -1)
    return GroupRingElement(G, R, coeffs)


def rg_matrix(w):
    """n x n x b array: entry (i, j) is the coefficient of g_i^-1 g_j."""
    G = w.group
    idx = G.mul_table[G.inv_table]  # idx[i, j] = g_i^-1 g_j
    return w.coeffs[idx]


def lift_matrix(M, ring):
    """Replace every coefficient of an (r, c, b) array by its b x b lift."""
    r, c, _ = M.shape
    b = ring.b
    out = np.zeros((r * b, c * b), dtype=np.uint8)
    for i in range(r):
        for j in range(c):
            out[i * b:(i + 1) * b, j * b:(j + 1) * b] = ring.lift(M[i, j])
    return out


def lift_element(w):
    """The nb x nb binary matrix of w (RG-matrix, then coefficient lifts)."""
    return lift_matrix(rg_matrix(w), w.ring)


def transpose_element(u):
    """u^t = sum_g u(g)^* g^-1 where * sends every x_j to x_j^-1."""
    G = u.group
    out = np.empty_like(u.coeffs)
    out[G.inv_table] = u.ring.star(u.coeffs)
    return GroupRingElement(G, u.ring, out)


def _crt_layout(group, ring):
    """If R'G is isomorphic to F2[C_N] by pairwise-coprime CRT, return
    (N, exponent array of shape (n, b)), else None."""
    factors = group.cyclic_factors()
    if factors is None:
        return None
    orders = list(factors) + list(ring.moduli)
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if gcd(orders[i], orders[j]) != 1:
                return None
    N = prod(orders)
    # exponent e with e = coordinate (mod each order)
    coords = np.indices(orders).reshape(len(orders), -1)
    e = np.zeros(coords.shape[1], dtype=object)
    for k, m in enumerate(orders):
        Mk = N // m
        e = e + coords[k].astype(object) * Mk * pow(Mk, -1, m)
    e = np.array([int(v) % N for v in e], dtype=np.int64)
    return N, e.reshape(group.order, ring.b)


def to_univariate(w):
    lay = _crt_layout(w.group, w.ring)
    if lay is None:
        raise ValueError("group ring is not CRT-cyclic")
    N, E = lay
    return gf2poly.from_exponents(E[w.coeffs.astype(bool)].tolist()), N


def from_univariate(poly, group, ring):
    N, E = _crt_layout(group, ring)
    bits = np.array(gf2poly.to_bits(poly, N), dtype=np.uint8)
    return GroupRingElement(group, ring, bits[E])


def invert_element(w):
    """w^-1 in R'G, or None when w is not a unit."""
    lay = _crt_layout(w.group, w.ring)
    if lay is not None:
        N = lay[0]
        f, _ = to_univariate(w)
        inv = gf2poly.inverse_mod(f, (1 << N) | 1)
        if inv is None:
            return None
        u = from_univariate(inv, w.group, w.ring)
    else:
        u = _invert_by_lifting(w)
        if u is None:
            return None
    if grp_multiply(w, u) != GroupRingElement.identity(w.group, w.ring):
        raise ArithmeticError("inverse check failed")
    return u


def _invert_by_lifting(w):
    # lift(w) lift(u) = I, and the first row of lift(u) lists u(g_0), ..., u(g_{n-1})
    L = lift_element(w)
    e0 = np.zeros(L.shape[0], dtype=np.uint8)
    e0[0] = 1
    if gf2.rank(L) < L.shape[0]:
        return None
    row = gf2.solve(L.T, e0)
    return GroupRingElement(w.group, w.ring, row.reshape(w.group.order, w.ring.b))


def is_unit(w):
    return invert_element(w) is not None


def ring_det(M, ring):
    """Determinant of a square matrix over R' (Leibniz expansion with cofactors;
    fine for the small matrices it is used on)."""
    n = M.shape[0]
    if n == 1:
        return M[0, 0].copy()
    total = ring.zero()
    for j in range(n):
        minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
        total ^= ring.mul(M[0, j], ring_det(minor, ring))
    return total


def ring_adjugate(M, ring):
    """adj(M) with adj[i, j] = cofactor C_ij (signs vanish in characteristic 2)."""
    n = M.shape[0]
    out = np.zeros_like(M)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(M, i, axis=0), j, axis=1)
            out[i, j] = ring_det(minor, ring) if n > 1 else ring.one()
    return out


def ring_matmul(A, B, ring):
    r, k, b = A.shape
    c = B.shape[1]
    out = np.zeros((r, c, b), dtype=np.uint8)
    for i in range(r):
        for j in range(c):
            acc = ring.zero()
            for s in range(k):
                acc ^= ring.mul(A[i, s], B[s, j])
            out[i, j] = acc
    return out
