"""Exponent matrices from group rings and their lifting to parity-check matrices.

An exponent matrix holds, for every entry, a tuple (i_1..i_t) with
0 <= i_j < m_j, or NEG_INF components for the zero element.  Lifting
replaces an entry by CPM(i_1) (x) ... (x) CPM(i_t), a b x b permutation
with b = prod(m_j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import gf2
from .combinatorics import AbelianGroupZ, doubles_distinct, is_modified_s2_set, is_s2_set
from .finite_fields import NEG_INF, prime_power
from .group_ring import TensorRing
from .groups import FiniteGroup


class ConstructionError(ValueError):
    pass


@dataclass
class ExponentMatrix:
    entries: np.ndarray  # (rows, cols, t) int64, NEG_INF marks a zero entry
    moduli: tuple
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.int64)
        if self.entries.ndim == 2:
            self.entries = self.entries[:, :, None]
        self.moduli = tuple(int(m) for m in self.moduli)
        zero = (self.entries == NEG_INF).any(-1)
        self.entries[zero] = NEG_INF
        ok = (self.entries >= 0) & (self.entries < np.array(self.moduli))
        if not (ok | zero[..., None]).all():
            raise ConstructionError("exponent out of range")

    @property
    def shape(self):
        return self.entries.shape[:2]

    @property
    def b(self):
        return prod(self.moduli)

    @property
    def ring(self):
        return TensorRing(self.moduli)

    def flat(self):
        """(rows, cols) array of psi-indices, NEG_INF for zero entries."""
        idx = np.zeros(self.shape, dtype=np.int64)
        for j, m in enumerate(self.moduli):
            idx = idx * m + self.entries[..., j]
        idx[(self.entries == NEG_INF).any(-1)] = NEG_INF
        return idx

    def tolist(self):
        """Entries as ints (t = 1) or tuples, None for zero."""
        out = []
        for row in self.entries:
            r = []
            for e in row:
                if (e == NEG_INF).any():
                    r.append(None)
                elif len(e) == 1:
                    r.append(int(e[0]))
                else:
                    r.append(tuple(int(v) for v in e))
            out.append(r)
        return out

    def to_dict(self):
        return {"moduli": list(self.moduli), "entries": [[None if e is None else list(np.atleast_1d(e))
                                                          for e in row] for row in self.tolist()]}

    @classmethod
    def from_dict(cls, d):
        moduli = tuple(d["moduli"])
        t = len(moduli)
        ent = [[[NEG_INF] * t if e is None else list(e) for e in row] for row in d["entries"]]
        return cls(np.array(ent, dtype=np.int64), moduli)


@dataclass
class LiftedCode:
    H: np.ndarray
    b: int
    rho: int
    gamma: int
    source: ExponentMatrix

    @property
    def length(self):
        return self.H.shape[1]

    def rank(self):
        return gf2.rank(self.H)

    def dimension(self):
        return self.length - self.rank()


def _rg_exponents(group, exps, moduli):
    """Exponent matrix whose entry (i, j) is exps[g_i^-1 g_j]."""
    idx = group.mul_table[group.inv_table]
    E = np.asarray(exps, dtype=np.int64).reshape(group.order, len(moduli))
    return E[idx]


def construct_theorem2(group: FiniteGroup, p=2):
    """RG-matrix of w = sum_i alpha^(p^i) g_i over GF(p^n), n = |G|, as exponents."""
    n = group.order
    q = p ** n
    if prime_power(p) != (p, 1):
        raise ConstructionError(f"{p} is not prime")
    if q > 1 << 20:
        raise ConstructionError(f"field GF({p}^{n}) too large")
    m = q - 1
    exps = [[pow(p, i, m) if m > 1 else 0] for i in range(n)]
    W = ExponentMatrix(_rg_exponents(group, exps, (m,)), (m,),
                       {"construction": "theorem2", "group": group.to_dict(), "p": p})
    rep = check_constraints(W)
    if not rep.ok:
        raise ConstructionError(f"constraint check failed: {rep}")
    return W


def s2_hypotheses(D, moduli):
    """Why construct_from_s2 accepts D, or raise ConstructionError."""
    H = AbelianGroupZ(moduli)
    if not is_s2_set(D, H):
        raise ConstructionError("D is not an S2-set")
    odd = all(m % 2 for m in moduli)
    if not (odd or is_modified_s2_set(D, H)):
        raise ConstructionError("D must be a modified S2-set unless every modulus is odd")
    return H


def construct_from_s2(D, group: FiniteGroup, moduli):
    """RG-matrix of w = sum_i alpha^(d_i) g_i for an S2-set D = (d_0..d_{n-1})."""
    moduli = tuple(moduli)
    if len(D) != group.order:
        raise ConstructionError(f"|D| = {len(D)} but |G| = {group.order}")
    H = s2_hypotheses(D, moduli)
    D = [H.norm(d) for d in D]
    return ExponentMatrix(_rg_exponents(group, D, moduli), moduli,
                          {"construction": "s2set", "group": group.to_dict(),
                           "members": [list(d) for d in D]})


def construct_extended(D, group: FiniteGroup, moduli):
    """[W | W^-1] where the second block is the RG-matrix of sum_i alpha^(-d_i) g_i."""
    moduli = tuple(moduli)
    if len(D) != group.order:
        raise ConstructionError(f"|D| = {len(D)} but |G| = {group.order}")
    H = s2_hypotheses(D, moduli)
    odd = all(m % 2 for m in moduli)
    if not (odd or doubles_distinct(D, H)):
        raise ConstructionError("2D has repeated elements and some modulus is even")
    D = [H.norm(d) for d in D]
    neg = [H.neg(d) for d in D]
    W = np.concatenate([_rg_exponents(group, D, moduli), _rg_exponents(group, neg, moduli)], axis=1)
    return ExponentMatrix(W, moduli, {"construction": "s2set_extended", "group": group.to_dict(),
                                      "members": [list(d) for d in D]})


@dataclass
class ConstraintReport:
    ok: bool
    constraint: int = 0
    witness: tuple = ()

    def __str__(self):
        if self.ok:
            return "pass"
        return f"constraint {self.constraint} violated at {self.witness}"


def check_constraints(W: ExponentMatrix):
    """Alpha-multiplied row constraints by brute force over all scalar pairs.

    1: for every row and k != l, alpha^k row and alpha^l row agree in at most
       one position.
    2: for rows i != j and all k, l, alpha^k row_i and alpha^l row_j agree in
       at most one position.
    Zero entries (NEG_INF) stay zero under scaling, so two zeros agree."""
    ring = W.ring
    b = ring.b
    F = W.flat()
    rows, cols = F.shape
    add = ring.add_table

    def scaled(row):
        # out[k, c] = psi(k + row[c]), -1 for zero entries
        out = np.where(row[None, :] >= 0, add[:, np.maximum(row, 0)], -1)
        return out

    S = [scaled(F[i]) for i in range(rows)]
    for i in range(rows):
        for j in range(i, rows):
            agree = np.zeros((b, b), dtype=np.int32)
            for c in range(cols):
                agree += S[i][:, c][:, None] == S[j][:, c][None, :]
            if i == j:
                np.fill_diagonal(agree, 0)
            if agree.max() > 1:
                k, l = np.unravel_index(int(agree.argmax()), agree.shape)
                return ConstraintReport(False, 1 if i == j else 2,
                                        (i, j, ring.psi_inv(int(k)), ring.psi_inv(int(l))))
    return ConstraintReport(True)


def subarray(W: ExponentMatrix, rho=None, gamma=None, rows=None, cols=None):
    """Upper-left rho x gamma block H(rho, gamma), or explicit row/column lists."""
    m, n = W.shape
    rows = list(range(rho if rho is not None else m)) if rows is None else list(rows)
    cols = list(range(gamma if gamma is not None else n)) if cols is None else list(cols)
    if max(rows, default=0) >= m or max(cols, default=0) >= n:
        raise ConstructionError("subarray out of range")
    prov = dict(W.provenance, rows=rows, cols=cols)
    return ExponentMatrix(W.entries[np.ix_(rows, cols)], W.moduli, prov)


def lift(W: ExponentMatrix):
    """Binary parity-check matrix: every entry becomes its QCPM (or zero block)."""
    ring = W.ring
    b = ring.b
    F = W.flat()
    rho, gamma = F.shape
    H = np.zeros((rho * b, gamma * b), dtype=np.uint8)
    r = np.arange(b)
    add = ring.add_table
    for i in range(rho):
        for j in range(gamma):
            e = F[i, j]
            if e >= 0:
                H[i * b + r, j * b + add[r, e]] = 1
    return LiftedCode(H, b, rho, gamma, W)


def qcpm(exps, moduli):
    """CPM(e_1) (x) ... (x) CPM(e_t) by explicit Kronecker products."""
    M = np.ones((1, 1), dtype=np.uint8)
    for e, m in zip(exps, moduli):
        if e == NEG_INF:
            return np.zeros((prod(moduli),) * 2, dtype=np.uint8)
        C = np.roll(np.eye(m, dtype=np.uint8), e, axis=1)
        M = np.kron(M, C)
    return M


def block_size_check(W, b=None):
    """Necessary condition b >= n for girth 6 (n = number of block columns)."""
    if isinstance(W, ExponentMatrix):
        n = W.shape[1]
        b = W.b if b is None else b
    else:
        n = int(W)
    return b >= n
