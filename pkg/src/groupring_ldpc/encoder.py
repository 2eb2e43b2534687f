"""Encoding of group-ring codes.

Every encoder here reduces to sums of products in R'G (or blockwise products
in R'^gamma).  A context holds a list of Terms; a term scatters some message
bits into a multiplier element and multiplies it by a fixed factor.  The
three evaluation paths are

  encode_matrix     m @ G with G lifted from the same terms (oracle)
  encode_groupring  schoolbook convolution, every bit product counted
  encode_fast       subquadratic products, also counted: Karatsuba over the
                    cyclic axes, or, when R'G (or R') is F2[z]/(z^N - 1) with
                    N odd, a split into residue fields F2[z]/(p_i) where
                    each product costs Karatsuba on deg p_i coefficients
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

import numpy as np

from . import gf2, gf2poly
from .combinatorics import AbelianGroupZ, is_modified_s2_set
from .finite_fields import GaloisField
from .group_ring import (GroupRingElement, TensorRing, _crt_layout, invert_element, lift_element,
                         lift_matrix, rg_matrix, ring_adjugate, ring_det, transpose_element)
from .groups import FiniteGroup, cyclic

log = logging.getLogger(__name__)


class NotUnitError(ValueError):
    pass


class UnsupportedStructure(ValueError):
    pass


class Case(enum.Enum):
    UNIT = "Unit"
    ZERO_DIVISOR_SIMPLE = "ZeroDivisorSimple"
    ZERO_DIVISOR_GENERAL = "ZeroDivisorGeneral"


class Counter:
    """Number of coefficient (bit) multiplications performed."""

    def __init__(self):
        self.n = 0

    def add(self, k):
        self.n += int(k)

    def __repr__(self):
        return f"Counter({self.n})"


@lru_cache(maxsize=None)
def karatsuba_count(n):
    """Bit products used by the Karatsuba split below on length-n inputs."""
    if n <= 1:
        return n
    h = (n + 1) // 2
    return 2 * karatsuba_count(h) + karatsuba_count(n - h)


# -- convolution kernels -----------------------------------------------------

def _kara(A, C, counter):
    """Linear convolution over every axis after the first (batch) axis."""
    if A.ndim == 1:
        counter.add(A.size)
        return A & C
    L = A.shape[1]
    if L == 1:
        return _kara(A[:, 0], C[:, 0], counter)[:, None]
    B = A.shape[0]
    h = (L + 1) // 2
    a0, a1 = A[:, :h], A[:, h:]
    c0, c1 = C[:, :h], C[:, h:]
    am = a0.copy()
    am[:, : L - h] ^= a1
    cm = c0.copy()
    cm[:, : L - h] ^= c1
    P = _kara(np.concatenate([a0, am]), np.concatenate([c0, cm]), counter)
    p0, pm = P[:B], P[B:]
    p1 = _kara(a1, c1, counter)
    out = np.zeros((B, 2 * L - 1) + p0.shape[2:], dtype=np.uint8)
    l1 = p1.shape[1]
    out[:, : 2 * h - 1] ^= p0
    out[:, 2 * h: 2 * h + l1] ^= p1
    mid = pm ^ p0
    mid[:, :l1] ^= p1
    out[:, h: h + 2 * h - 1] ^= mid
    return out


def _fold(X, lengths):
    """Reduce a linear convolution mod (x_j^{m_j} - 1) on the trailing axes."""
    nb = X.ndim - len(lengths)
    for ax, m in enumerate(lengths):
        ax += nb
        head = np.take(X, range(m), axis=ax)
        tail = np.take(X, range(m, X.shape[ax]), axis=ax)
        pad = [(0, 0)] * X.ndim
        pad[ax] = (0, m - tail.shape[ax])
        X = head ^ np.pad(tail, pad)
    return X


def cyclic_mul_fast(A, C, shape, counter):
    """Batched product in F2[Z_{m1} x ... x Z_{md}]: A, C of shape (B, prod(shape))."""
    B = A.shape[0]
    X = _kara(A.reshape((B,) + tuple(shape)), C.reshape((B,) + tuple(shape)), counter)
    return _fold(X, shape).reshape(B, -1)


# -- residue-field split of F2[z]/(z^N - 1) ---------------------------------------

@dataclass
class CRTBasis:
    """z^N - 1 = prod p_i over F2 (N odd).  `reduce` (N, N) maps coefficient
    vectors to the concatenated residues, `rebuild` maps them back."""
    N: int
    factors: list
    degrees: np.ndarray
    reduce: np.ndarray
    rebuild: np.ndarray
    groups: dict  # degree -> (factor indices, residue offsets, (n_d, 2d-1, d) fold maps)

    @property
    def products(self):
        """Bit products of one multiplication in F2[z]/(z^N - 1)."""
        return int(sum(karatsuba_count(int(d)) for d in self.degrees))


def _minimal_polys(N):
    m = _mult_order(2, N)
    F = GaloisField(2, m)
    step = (F.q - 1) // N
    seen, out = set(), []
    for s in range(N):
        if s in seen:
            continue
        coset, x = [], s
        while x not in coset:
            coset.append(x)
            x = 2 * x % N
        seen.update(coset)
        poly = [1]
        for x in coset:
            r = F.alpha_pow(step * x)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] ^= c
                nxt[i] ^= F.mul(c, r)
            poly = nxt
        if any(c > 1 for c in poly):
            raise ArithmeticError("minimal polynomial not over F2")
        out.append(gf2poly.from_bits(poly))
    return out


def _powers_mod(polys, d, count):
    """(count, n_polys, d): coefficients of z^j mod p for j < count."""
    low = np.array([gf2poly.to_bits(p, d) for p in polys], dtype=np.uint8)
    S = np.zeros((len(polys), d), dtype=np.uint8)
    S[:, 0] = 1
    out = np.empty((count, len(polys), d), dtype=np.uint8)
    for j in range(count):
        out[j] = S
        top = S[:, -1].copy()
        S = np.roll(S, 1, axis=1)
        S[:, 0] = 0
        S ^= top[:, None] & low
    return out


@lru_cache(maxsize=8)
def crt_basis(N, max_field_bits=20):
    """Residue-field data for odd N, or None when the splitting field
    GF(2^ord_N(2)) is too large to tabulate."""
    if N % 2 == 0 or _mult_order(2, N) > max_field_bits:
        return None
    factors = _minimal_polys(N)
    degrees = np.array([gf2poly.deg(f) for f in factors])
    offsets = np.concatenate([[0], np.cumsum(degrees)])
    reduce = np.zeros((N, N), dtype=np.uint8)
    groups = {}
    for d in np.unique(degrees):
        d = int(d)
        idx = np.flatnonzero(degrees == d)
        pw = _powers_mod([factors[i] for i in idx], d, N)
        for a, i in enumerate(idx):
            reduce[:, offsets[i]: offsets[i] + d] = pw[:, a]
        groups[d] = (idx, offsets[idx], np.ascontiguousarray(pw[: 2 * d - 1].transpose(1, 0, 2)))
    big = (1 << N) | 1
    rebuild = np.zeros((N, N), dtype=np.uint8)
    for i, f in enumerate(factors):
        cof, _ = gf2poly.divmod_(big, f)
        e = gf2poly.mod(gf2poly.mul(cof, gf2poly.inverse_mod(gf2poly.mod(cof, f), f)), big)
        bits = np.array(gf2poly.to_bits(e, N), dtype=np.uint8)
        for k in range(int(degrees[i])):
            rebuild[offsets[i] + k] = np.roll(bits, k)
    return CRTBasis(N, factors, degrees, reduce, rebuild, groups)


def crt_mul(A, C, basis: CRTBasis, counter):
    """Batched product in F2[z]/(z^N - 1) through the residue fields."""
    ra, rc = gf2.matmul(A, basis.reduce), gf2.matmul(C, basis.reduce)
    B = A.shape[0]
    out = np.zeros_like(ra)
    for d, (idx, off, fold) in basis.groups.items():
        cols = (off[:, None] + np.arange(d)).ravel()
        a = ra[:, cols].reshape(-1, d)
        c = rc[:, cols].reshape(-1, d)
        P = _kara(a, c, counter).reshape(B, len(idx), 2 * d - 1)
        out[:, cols] = (np.einsum("bfk,fkd->bfd", P.astype(np.int64), fold) & 1).reshape(B, -1)
    return gf2.matmul(out, basis.rebuild)


def ring_mul_school(A, C, ring, counter):
    """Batched schoolbook product in R'; b^2 bit products per pair."""
    B, b = A.shape
    out = np.zeros((B, b), dtype=np.uint8)
    add = ring.add_table
    for s in range(b):
        out[:, add[s]] ^= A[:, s: s + 1] & C
    counter.add(B * b * b)
    return out


# -- fast-path feature gate ------------------------------------------------------

def _mult_order(a, m):
    if m == 1:
        return 1
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k


def ring_root_order(ring: TensorRing):
    """Largest m such that every residue field of R' holds a primitive m-th
    root of unity: gcd of |F|-1 over the residue fields F_{2^d}."""
    lam = 1
    for m in ring.moduli:
        while m % 2 == 0:
            m //= 2
        lam = lam * m // gcd(lam, m)
    g = 0
    for e in range(1, lam + 1):
        if lam % e == 0:
            g = gcd(g, 2 ** _mult_order(2, e) - 1)
    return g


@dataclass
class GateReport:
    ok: bool
    reason: str
    exponent: int = 0
    root_order: int = 0


def fft2_gate(group: FiniteGroup, ring: TensorRing):
    """Whether a length-|G| DFT exists over R': G Abelian, exp(G) odd and
    dividing the root order of R'."""
    if not group.is_abelian():
        return GateReport(False, "G is not Abelian")
    m = group.exponent()
    o = ring_root_order(ring)
    if m % 2 == 0:
        return GateReport(False, f"exponent {m} of G is even", m, o)
    if o % m:
        return GateReport(False, f"exponent {m} of G does not divide {o}", m, o)
    return GateReport(True, "DFT over G available", m, o)


# -- contexts --------------------------------------------------------------------

@dataclass
class Term:
    """Scatter message bits to `slots` of an (n_in, b) multiplier and multiply
    by `factor` (n_f, b); `pairs` rows (h, g, o) add mult[h] * factor[g] to
    output block o."""
    slots: np.ndarray
    n_in: int
    factor: np.ndarray
    pairs: np.ndarray
    n_out: int
    group: FiniteGroup | None = None  # set when the term is a full product in R'G

    @property
    def k(self):
        return len(self.slots)


def _group_pairs(group, blocks):
    mt = group.mul_table
    return np.array([(h, g, mt[h, g]) for h in blocks for g in range(group.order)], dtype=np.int64)


def _module_pairs(n_out):
    return np.array([(0, j, j) for j in range(n_out)], dtype=np.int64)


@dataclass
class EncodingContext:
    case: Case
    ring: TensorRing
    H: np.ndarray
    terms: list
    extra: np.ndarray | None = None  # binary rows for message bits past the terms
    group: FiniteGroup | None = None
    w: GroupRingElement | None = None
    u: GroupRingElement | None = None
    L: tuple = ()
    Lp: tuple = ()
    omega: int | None = None
    info: dict = field(default_factory=dict)

    @property
    def b(self):
        return self.ring.b

    @property
    def length(self):
        return self.H.shape[1]

    @property
    def k(self):
        return sum(t.k for t in self.terms) + (0 if self.extra is None else len(self.extra))

    @property
    def code_dimension(self):
        return self.length - gf2.rank(self.H)

    @property
    def partial(self):
        """True when the encoder only reaches a subcode."""
        return self.info.get("image_rank", self.k) < self.code_dimension


def unit_context(w: GroupRingElement, L):
    """Case 1: w a unit, H = lifted rows L of its RG-matrix."""
    u = invert_element(w)
    if u is None:
        raise NotUnitError("w is not a unit of R'G")
    G, ring = w.group, w.ring
    n, b = G.order, ring.b
    L = tuple(int(i) for i in L)
    Lp = tuple(i for i in range(n) if i not in set(L))
    H = lift_matrix(rg_matrix(w)[list(L)], ring) if L else np.zeros((0, n * b), dtype=np.uint8)
    slots = (np.array(Lp, dtype=np.int64)[:, None] * b + np.arange(b)).reshape(-1)
    ut = transpose_element(u)
    term = Term(slots, n, ut.coeffs, _group_pairs(G, Lp), n, G)
    return EncodingContext(Case.UNIT, ring, H, [term], None, G, w, u, L, Lp)


def annihilator(w: GroupRingElement, f=None):
    """u with W U = 0 from U = f adj(W)^t, t = 1 only.  By default f is
    (x^b - 1) / gcd(det W, x^b - 1)."""
    ring = w.ring
    if len(ring.moduli) != 1:
        raise UnsupportedStructure("adjugate annihilator implemented for one field only")
    b = ring.b
    W = rg_matrix(w)
    det = ring_det(W, ring)
    modulus = (1 << b) | 1
    if f is None:
        g = gf2poly.gcd(gf2poly.from_bits(det), modulus)
        f = gf2poly.divmod_(modulus, g)[0]
    fv = np.array(gf2poly.to_bits(gf2poly.mod(f, modulus), b), dtype=np.uint8)
    adjT = ring_adjugate(W, ring).transpose(1, 0, 2)
    n = W.shape[0]
    U = ring.mul_many(adjT.reshape(-1, b), np.repeat(fv[None], n * n, 0)).reshape(W.shape)
    u = GroupRingElement(w.group, ring, U[0])
    if not np.array_equal(rg_matrix(u), U):
        raise UnsupportedStructure("f adj(W)^t is not an RG-matrix")
    return u, det, f


def zero_divisor_context(w: GroupRingElement, L, f=None, C=None):
    """Case 2 at the scope of the worked example.

    u comes from `annihilator`; the group-ring part encodes through greedy
    independent columns of lift(U); the remaining dimension uses columns of a
    right inverse C of the greedy independent rows of lift(W) (H's rows first).
    A caller may supply its own C (rows of lift(W) selected greedily)."""
    G, ring = w.group, w.ring
    n, b = G.order, ring.b
    L = tuple(int(i) for i in L)
    Wb = lift_element(w)
    hrows = [i * b + r for i in L for r in range(b)]
    H = Wb[hrows]
    if gf2.rank(H) < len(hrows):
        raise UnsupportedStructure("H is not full rank")
    order = hrows + [i for i in range(n * b) if i not in set(hrows)]
    sel = [order[i] for i in gf2.independent_rows(Wb[order])]
    if sel[: len(hrows)] != hrows:
        raise UnsupportedStructure("rows of H are not the first independent rows")
    Hp = Wb[sel]
    if C is None:
        C = gf2.right_inverse(Hp)
    elif not np.array_equal(gf2.matmul(Hp, C), gf2.identity(len(sel))):
        raise UnsupportedStructure("supplied C is not a right inverse")
    C1 = np.ascontiguousarray(C[:, len(hrows):].T)
    u, det, fpoly = annihilator(w, f)
    Ub = lift_element(u)
    cols = gf2.independent_rows(Ub.T)
    ut = transpose_element(u)
    term = Term(np.array(cols, dtype=np.int64), n, ut.coeffs, _group_pairs(G, range(n)), n, G)
    ctx = EncodingContext(Case.ZERO_DIVISOR_GENERAL if len(C1) else Case.ZERO_DIVISOR_SIMPLE,
                          ring, H, [term], C1 if len(C1) else None, G, w, u, L,
                          tuple(i for i in range(n) if i not in set(L)), None)
    ctx.info.update(rank_W=len(sel), rank_U=len(cols), det=det, f=fpoly, independent_rows=sel, C=C)
    Gm = derive_generator(ctx)
    ctx.info["image_rank"] = gf2.rank(Gm)
    return ctx


def module_context(H, moduli, seed=0, max_generators=64):
    """Encoder for any quasi-cyclic H whose blocks are QCPM sums over R'.

    The code is an R'-submodule of R'^gamma.  Random codewords are added as
    generators until their R'-spans fill the code; each generator gets the
    message slots picked by greedy elimination over all shifted copies."""
    ring = TensorRing(moduli)
    b = ring.b
    H = gf2.as_bits(H)
    N = H.shape[1]
    if N % b:
        raise ValueError("length is not a multiple of b")
    gamma = N // b
    basis = gf2.nullspace(H)
    k = len(basis)
    rng = np.random.default_rng(seed)
    add = ring.add_table
    gens, rows = [], np.zeros((0, N), dtype=np.uint8)
    rank = 0
    while rank < k:
        if len(gens) >= max_generators:
            raise UnsupportedStructure("too many module generators")
        g = gf2.matmul(rng.integers(0, 2, k, dtype=np.uint8), basis).reshape(gamma, b)
        shifted = np.zeros((b, gamma, b), dtype=np.uint8)
        for s in range(b):
            shifted[s][:, add[s]] = g
        cand = np.concatenate([rows, shifted.reshape(b, N)])
        r = gf2.rank(cand)
        if r > rank:
            gens.append(g)
            rows, rank = cand, r
    piv = np.array(gf2.independent_rows(rows), dtype=np.int64)
    terms = []
    for i, g in enumerate(gens):
        slots = piv[(piv >= i * b) & (piv < (i + 1) * b)] - i * b
        if len(slots):
            terms.append(Term(slots, 1, g, _module_pairs(gamma), gamma))
    ctx = EncodingContext(Case.ZERO_DIVISOR_GENERAL, ring, H, terms)
    ctx.info.update(generators=len(terms), image_rank=rank)
    return ctx


# -- generator matrices and the three encoders ---------------------------------

def _term_block_matrix(t: Term):
    M = np.zeros((t.n_in, t.n_out, t.factor.shape[1]), dtype=np.uint8)
    for h, g, o in t.pairs:
        M[h, o] ^= t.factor[g]
    return M


def derive_generator(ctx: EncodingContext):
    """k x N binary generator matrix: lifted rows of every term, then extra rows."""
    parts = [lift_matrix(_term_block_matrix(t), ctx.ring)[t.slots] for t in ctx.terms]
    if ctx.extra is not None:
        parts.append(ctx.extra)
    return np.concatenate(parts) if parts else np.zeros((0, ctx.length), dtype=np.uint8)


def derive_generator_unit(ctx: EncodingContext):
    """G = lifted rows L' of the RG-matrix of u^t."""
    if ctx.case is not Case.UNIT:
        raise NotUnitError("generator derivation needs a unit context")
    return derive_generator(ctx)


def _as_batch(m, k):
    m = gf2.as_bits(m)
    single = m.ndim == 1
    m = np.atleast_2d(m)
    if m.shape[1] > k:
        raise ValueError(f"message longer than k = {k}")
    if m.shape[1] < k:
        m = np.pad(m, ((0, 0), (0, k - m.shape[1])))
    return m, single


def encode_matrix(m, G):
    """c = m G; short messages are zero padded on the right."""
    mm, single = _as_batch(m, G.shape[0])
    c = gf2.matmul(mm, G)
    return c[0] if single else c


def _multiplier(bits, t: Term, b):
    B = bits.shape[0]
    M = np.zeros((B, t.n_in * b), dtype=np.uint8)
    M[:, t.slots] = bits
    return M.reshape(B, t.n_in, b)


def _eval_pairs(M, t: Term, mul):
    """out[o] = sum over pairs (h, g, o) of mul(M[:, h], g)."""
    B, _, b = M.shape
    out = np.zeros((B, t.n_out, b), dtype=np.uint8)
    for g in np.unique(t.pairs[:, 1]):
        sel = t.pairs[t.pairs[:, 1] == g]
        P = mul(M[:, sel[:, 0]].reshape(-1, b), g).reshape(B, len(sel), b)
        for i, o in enumerate(sel[:, 2]):
            out[:, o] ^= P[:, i]
    return out


def _school_by(ring, factor, counter):
    def mul(A, g):
        # dense circulant product: b^2 bit products per row
        counter.add(A.shape[0] * ring.b ** 2)
        return gf2.matmul(A, ring.lift(factor[g]))
    return mul


def _fast_by(ring, factor, counter):
    def mul(A, g):
        C = np.broadcast_to(factor[g], A.shape)
        return cyclic_mul_fast(A, np.ascontiguousarray(C), ring.moduli, counter)
    return mul


def _term_pairs(t: Term):
    """Pairs restricted to multiplier blocks that can hold message bits."""
    blocks = np.unique(t.slots // t.factor.shape[1])
    return t.pairs[np.isin(t.pairs[:, 0], blocks)]


def _encode_terms(m, ctx, fast, counter):
    mm, single = _as_batch(m, ctx.k)
    B, b = mm.shape[0], ctx.b
    counter = Counter() if counter is None else counter
    c = np.zeros((B, ctx.length), dtype=np.uint8)
    pos = 0
    for t in ctx.terms:
        M = _multiplier(mm[:, pos: pos + t.k], t, b)
        pos += t.k
        t = Term(t.slots, t.n_in, t.factor, _term_pairs(t), t.n_out, t.group)
        if fast:
            out = _fast_term(M, t, ctx.ring, counter)
        else:
            out = _eval_pairs(M, t, _school_by(ctx.ring, t.factor, counter))
        c ^= out.reshape(B, -1)
    if ctx.extra is not None:
        c ^= gf2.matmul(mm[:, pos:], ctx.extra)
    return c[0] if single else c


def _group_shape(group):
    if group is None:
        return None
    f = group.cyclic_factors()
    return None if f is None else tuple(f)


def _crt_for(group, ring):
    """(layout, basis) when the product space is F2[z]/(z^N - 1) with a
    tabulated splitting field; group None means R' alone."""
    lay = _crt_layout(cyclic(1) if group is None else group, ring)
    if lay is None:
        return None
    basis = crt_basis(lay[0])
    return None if basis is None else (lay[1], basis)


def plan_fast(t: Term, ring: TensorRing):
    """Cheapest of ('crt', count), ('group', count) and ('pairs', count),
    count being the bit products per message."""
    kr = prod(karatsuba_count(m) for m in ring.moduli)
    options = [("pairs", len(t.pairs) * kr)]
    gshape = _group_shape(t.group)
    if gshape is not None:
        options.append(("group", prod(karatsuba_count(m) for m in gshape) * kr))
    if t.group is not None and _crt_layout(t.group, ring) is not None:
        n_mul, space = 1, t.group
    else:
        n_mul, space = len(t.pairs), None
    if _crt_layout(cyclic(1) if space is None else space, ring) is not None:
        N = (1 if space is None else space.order) * ring.b
        if N % 2 and _mult_order(2, N) <= 20:
            # per residue field of degree d: Karatsuba on d coefficients
            options.append(("crt", n_mul * _crt_products(N)))
    return min(options, key=lambda o: o[1])


@lru_cache(maxsize=None)
def _crt_products(N):
    return crt_basis(N).products


def _fast_term(M, t: Term, ring, counter):
    B, _, b = M.shape
    how, _ = plan_fast(t, ring)
    if how == "crt":
        if t.group is not None and _crt_layout(t.group, ring) is not None:
            E, basis = _crt_for(t.group, ring)
            A = np.zeros((B, basis.N), dtype=np.uint8)
            A[:, E] = M
            C = np.zeros((1, basis.N), dtype=np.uint8)
            C[:, E] = t.factor
            P = crt_mul(A, np.repeat(C, B, 0), basis, counter)
            return P[:, E]
        E, basis = _crt_for(None, ring)
        E = E[0]

        def mul(A, g):
            X = np.zeros((A.shape[0], basis.N), dtype=np.uint8)
            X[:, E] = A
            Y = np.zeros_like(X)
            Y[:, E] = t.factor[g]
            return crt_mul(X, Y, basis, counter)[:, E]
        return _eval_pairs(M, t, mul)
    if how == "group":
        gshape = _group_shape(t.group)
        shape = gshape + ring.moduli
        F = np.broadcast_to(t.factor[None], (B,) + t.factor.shape)
        X = _kara(M.reshape((B,) + shape), np.ascontiguousarray(F).reshape((B,) + shape), counter)
        return _fold(X, shape).reshape(B, t.n_out, b)
    return _eval_pairs(M, t, _fast_by(ring, t.factor, counter))


def encode_groupring(m, ctx: EncodingContext, counter=None):
    """Group-ring encoding with schoolbook products (c = m_{L'} u^t in the unit case)."""
    return _encode_terms(m, ctx, False, counter)


def encode_fast(m, ctx: EncodingContext, counter=None):
    """Same output as encode_groupring with subquadratic products.

    A DFT over G would need fft2_gate to pass; over binary R' it never does
    for |G| > 1 (R' always has F2 as a residue field).  Instead each term
    takes the cheapest of: Karatsuba per block pair, Karatsuba over G's
    cyclic axes too, or the residue-field split of F2[z]/(z^N - 1).  The
    counter sees bit products only; the split's reduce/rebuild maps are
    XOR-only."""
    if ctx.group is not None:
        gate = fft2_gate(ctx.group, ctx.ring)
        if not gate.ok:
            log.debug("DFT over G skipped: %s", gate.reason)
    return _encode_terms(m, ctx, True, counter)


def encode_zero_divisor(m, ctx: EncodingContext, allow_partial=False, counter=None):
    """c = m1 U^b + m2 C^b: group-ring part plus the right-inverse rows."""
    if ctx.case is Case.UNIT:
        raise UnsupportedStructure("context is a unit case")
    if ctx.partial and not allow_partial:
        raise UnsupportedStructure(
            f"encoder reaches rank {ctx.info.get('image_rank')} < dimension {ctx.code_dimension}")
    return encode_groupring(m, ctx, counter)


def naive_count(ctx: EncodingContext):
    """Bit products of encode_groupring per message."""
    b = ctx.b
    return sum(len(_term_pairs(t)) * b * b for t in ctx.terms)


def fast_count(ctx: EncodingContext):
    return sum(plan_fast(Term(t.slots, t.n_in, t.factor, _term_pairs(t), t.n_out, t.group),
                         ctx.ring)[1] for t in ctx.terms)


# -- invertibility test for cyclic G over one field --------------------------------

@dataclass
class InvertibilityReport:
    verdict: str  # Invertible, NotInvertible, Inconclusive
    d_prime: list = field(default_factory=list)
    f: int = 0
    gcds: dict = field(default_factory=dict)
    hypotheses: dict = field(default_factory=dict)
    reason: str = ""


def _is_prime(n):
    return n > 1 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def crt_exponents(D, n, q):
    """d'_i with d'_i = d_i (mod q-1) and d'_i = i (mod n)."""
    m = q - 1
    N = n * m
    return [(n * d * pow(n, -1, m) + i * m * pow(m, -1, n)) % N if m > 1 else (i * m * pow(m, -1, n)) % N
            for i, d in enumerate(D)]


def invertibility_test_cyclic(D, n, q):
    """Is the lifted RG-matrix of sum_i alpha^{d_i} g^i (G = C_n) invertible over F2?

    With gcd(n, q-1) = 1, F2[C_{q-1} x C_n] is F2[C_N], N = n(q-1), and the
    lifted matrix is circulant with polynomial f = sum x^{d'_i}; it is
    invertible iff gcd(f, x^N - 1) = 1.  The factor-wise gcds against
    Phi_1, Phi_n, Phi_{q-1}, Phi_N are reported too."""
    D = [int(d) for d in D]
    m = q - 1
    if len(D) != n:
        raise ValueError("need one exponent per group element")
    hyp = {
        "n_prime": _is_prime(n) and n % 2 == 1,
        "q_minus_1_prime": _is_prime(m) and m % 2 == 1,
        "distinct": n != m,
    }
    if gcd(n, m) != 1:
        return InvertibilityReport("Inconclusive", hypotheses=hyp, reason="n and q-1 not coprime")
    N = n * m
    dp = crt_exponents(D, n, q)
    f = gf2poly.from_exponents(dp)
    hyp["two_primitive_root"] = _mult_order(2, N) == _phi(N) if gcd(2, N) == 1 else False
    hyp["modified_s2"] = is_modified_s2_set([(d % m,) for d in D], AbelianGroupZ((m,)))
    hyp["span"] = max(dp) - min(dp) <= _phi(N)
    gcds = {}
    for d in sorted({1, n, m, N}):
        gcds[d] = gf2poly.gcd(f, gf2poly.cyclotomic(d))
    hyp["coprime_phi_n_phi_q1"] = gcds[n] == 1 and gcds[m] == 1
    full = gf2poly.gcd(f, (1 << N) | 1)
    verdict = "Invertible" if full == 1 else "NotInvertible"
    return InvertibilityReport(verdict, dp, f, gcds, hyp, f"gcd(f, x^{N}-1) = {gf2poly.to_str(full)}")


def _phi(n):
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out
