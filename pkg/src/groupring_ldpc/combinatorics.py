"""Difference sets, Singer sets, S2-sets and their search.

An S2-set D in an Abelian group H has all sums d1 + d2 of two distinct
members distinct.  It is modified when also 2D and D + D are disjoint.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, prod

import numpy as np

from .finite_fields import GaloisField, prime_power
from .groups import FiniteGroup


class AbelianGroupZ:
    """Z_m1 x ... x Z_mt; elements are tuples, indexed in mixed radix."""

    def __init__(self, moduli):
        self.moduli = tuple(int(m) for m in np.atleast_1d(moduli))
        if not self.moduli or min(self.moduli) < 1:
            raise ValueError(f"bad moduli {self.moduli}")
        self.order = prod(self.moduli)

    def __repr__(self):
        return "Z" + "xZ".join(str(m) for m in self.moduli)

    def __eq__(self, other):
        return isinstance(other, AbelianGroupZ) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def elements(self):
        return [self.element(i) for i in range(self.order)]

    def element(self, i):
        return tuple(int(v) for v in np.unravel_index(i, self.moduli))

    def index(self, h):
        i = 0
        for x, m in zip(h, self.moduli):
            i = i * m + (x % m)
        return i

    def norm(self, h):
        h = tuple(np.atleast_1d(h))
        return tuple(int(x) % m for x, m in zip(h, self.moduli))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def sub(self, a, b):
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def double(self, a):
        return self.add(a, a)

    def add_table(self):
        grids = np.indices(self.moduli).reshape(len(self.moduli), -1)
        out = np.zeros((self.order, self.order), dtype=np.int64)
        for ax, m in enumerate(self.moduli):
            out = out * m + (grids[ax][:, None] + grids[ax][None, :]) % m
        return out

    def involution_subgroup_order(self):
        """|I(H)|: the subgroup generated by elements of order <= 2 is the
        product of Z_2 for every even factor."""
        return 2 ** sum(1 for m in self.moduli if m % 2 == 0)


def _members(D, H):
    return [H.norm(d) for d in D]


def is_s2_set(D, H):
    D = _members(D, H)
    if len(set(D)) != len(D):
        return False
    sums = [H.add(D[i], D[j]) for i in range(len(D)) for j in range(i + 1, len(D))]
    return len(set(sums)) == len(sums)


def is_modified_s2_set(D, H):
    if not is_s2_set(D, H):
        return False
    D = _members(D, H)
    sums = {H.add(D[i], D[j]) for i in range(len(D)) for j in range(i + 1, len(D))}
    return not ({H.double(d) for d in D} & sums)


def differences_distinct(D, H):
    """All d1 - d2 (d1 != d2) distinct."""
    D = _members(D, H)
    diffs = [H.sub(a, b) for a in D for b in D if a != b]
    return len(set(diffs)) == len(diffs)


def doubles_distinct(D, H):
    D = _members(D, H)
    return len({H.double(d) for d in D}) == len(D)


@dataclass
class S2Set:
    group: AbelianGroupZ
    members: list
    certified: bool = False
    nodes: int = 0
    is_modified: bool = field(init=False)

    def __post_init__(self):
        self.members = _members(self.members, self.group)
        if not is_s2_set(self.members, self.group):
            raise ValueError("not an S2-set")
        self.is_modified = is_modified_s2_set(self.members, self.group)

    @property
    def size(self):
        return len(self.members)

    def to_dict(self):
        return {"group": list(self.group.moduli), "members": [list(m) for m in self.members],
                "size": self.size, "certified": self.certified}


# difference sets

def is_difference_set(members, lam, group):
    """Check D D^(-1) = (k - lam) 1 + lam G over the integers.  `group` is a
    FiniteGroup (members are indices) or an AbelianGroupZ (members are
    tuples)."""
    if isinstance(group, AbelianGroupZ):
        idx = [group.index(group.norm(d)) for d in members]
        A = group.add_table()
        neg = [group.index(group.neg(group.element(i))) for i in range(group.order)]
        mul = lambda a, b: int(A[a, b])
        inv = lambda a: neg[a]
    else:
        idx = list(members)
        mul, inv = group.mul, group.inv
    if len(set(idx)) != len(idx):
        return False
    k = len(idx)
    counts = np.zeros(group.order, dtype=np.int64)
    for a in idx:
        for b in idx:
            counts[mul(a, inv(b))] += 1
    target = np.full(group.order, lam, dtype=np.int64)
    target[0] += k - lam
    return bool((counts == target).all())


@dataclass
class DifferenceSet:
    group: AbelianGroupZ
    members: list
    v: int
    k: int
    lam: int

    @property
    def n(self):
        return self.k - self.lam


def singer_params(q, m):
    return ((q ** m - 1) // (q - 1), (q ** (m - 1) - 1) // (q - 1), (q ** (m - 2) - 1) // (q - 1))


def singer_difference_set(q, m):
    """{i < v : Tr(alpha^i) = 0} in Z_v with v = (q^m - 1)/(q - 1)."""
    pb = prime_power(q)
    if pb is None or m < 3:
        raise ValueError(f"unsupported Singer parameters q={q}, m={m}")
    p, s = pb
    F = GaloisField(p, s * m)
    v, k, lam = singer_params(q, m)
    members = [i for i in range(v) if F.trace(F.alpha_pow(i), q) == 0]
    return DifferenceSet(AbelianGroupZ([v]), [(i,) for i in members], v, k, lam)


# upper bound on the size of an S2-set

def s2_upper_bound(H):
    """floor((3 + sqrt(1 + 4 h_y)) / 2) with h_y = |H| (n2 + 1) / n2 and
    n2 = |H| / |I(H)|."""
    n2 = Fraction(H.order, H.involution_subgroup_order())
    hy = H.order * (n2 + 1) / n2
    disc = 1 + 4 * hy  # largest s with (2s - 3)^2 <= disc
    r = isqrt(disc.numerator // disc.denominator)
    while (r + 1) ** 2 <= disc:
        r += 1
    while r * r > disc:
        r -= 1
    return (3 + r) // 2


# search

class _Budget(Exception):
    pass


def _orbit_rep(H):
    """rep[i] = index of the canonical image of element i under the
    componentwise unit multipliers: (gcd(h_j, m_j) mod m_j)_j."""
    out = np.zeros(H.order, dtype=np.int64)
    for i in range(H.order):
        h = H.element(i)
        out[i] = H.index(tuple(gcd(x, m) % m for x, m in zip(h, H.moduli)))
    return out


def search_max_s2(H, modified=False, budget=10 ** 7, stop_at_bound=True):
    """Largest (modified) S2-set in H by branch and bound.

    Symmetry: every S2-set is equivalent under a translation and a
    componentwise unit multiplier to one that contains 0 and a = the smallest
    orbit representative among its pairwise differences, with every other
    difference having a representative >= a.  Each a is searched in turn.
    The result is certified when the whole tree fits in the budget.  With
    stop_at_bound the search also ends once a set meets s2_upper_bound(H);
    pass False to certify without relying on that bound."""
    if not isinstance(H, AbelianGroupZ):
        H = AbelianGroupZ(H)
    N = H.order
    A = H.add_table().tolist()
    neg = [H.index(H.neg(H.element(i))) for i in range(N)]
    dbl = [A[i][i] for i in range(N)]
    halves = [0] * N
    for y in range(N):
        halves[dbl[y]] |= 1 << y
    rep = _orbit_rep(H).tolist()
    bit = [1 << i for i in range(N)]
    cap = s2_upper_bound(H) if stop_at_bound else N + 1

    best = [[0]]
    nodes = [0]

    def grow(S, sums, doubles, forbid, last, amask):
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        if len(S) > len(best[0]):
            best[0] = list(S)
        if len(S) >= cap:
            return True
        allowed = ~forbid & ~((1 << (last + 1)) - 1) & ((1 << N) - 1)
        if len(S) + allowed.bit_count() <= len(best[0]):
            return False
        while allowed:
            low = allowed & -allowed
            x = low.bit_length() - 1
            allowed ^= low
            if len(S) + 1 + allowed.bit_count() <= len(best[0]):
                break
            row = A[x]
            ns = 0
            for d in S:
                ns |= bit[row[d]]
            # forbid future y: y + d hits a sum, y - d has a small orbit rep,
            # and the modified-set conditions
            f = forbid | bit[x] | amask[x]
            nS = S + [x]
            s2 = sums | ns
            for s in _bits(ns):
                for d in nS:
                    f |= bit[A[s][neg[d]]]
            for s in _bits(sums):
                f |= bit[A[s][neg[x]]]
            nd = doubles
            if modified:
                if s2 & bit[dbl[x]] or ns & doubles:
                    continue
                nd = doubles | bit[dbl[x]]
                for d in nS:
                    f |= bit[A[dbl[x]][neg[d]]]
                for t in _bits(doubles):
                    f |= bit[A[t][neg[x]]]
                for s in _bits(ns):
                    f |= halves[s]
            if grow(nS, s2, nd, f, x, amask):
                return True
        return False

    certified = True
    try:
        for a in sorted(set(rep) - {0}):
            if rep[a] != a:
                continue
            # forbid y with some y - d of representative below a
            small = [v for v in range(N) if v and rep[v] < a]
            amask = []
            for x in range(N):
                m = 0
                for v in small:
                    m |= bit[A[x][v]]
                amask.append(m)
            S = [0, a]
            if amask[0] & bit[a]:
                continue
            sums = bit[a]
            if modified and (bit[dbl[a]] & sums or bit[dbl[0]] & sums or dbl[0] == a):
                continue
            doubles = bit[dbl[0]] | bit[dbl[a]]
            f = bit[0] | bit[a] | amask[0] | amask[a]
            for d in S:
                f |= bit[A[a][neg[d]]]
            if modified:
                for d in S:
                    f |= bit[A[dbl[0]][neg[d]]] | bit[A[dbl[a]][neg[d]]]
                f |= halves[a]
            if grow(S, sums, doubles, f, 0, amask):
                break
    except _Budget:
        certified = False
    members = [H.element(i) for i in sorted(best[0])]
    return S2Set(H, members, certified=certified, nodes=nodes[0])


def _bits(v):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


# published sets; the modified sets and the Z4^4 set use 1-based labels

CYCLIC_S2_RECORDS = {
    1: (1, [[0]]),
    2: (2, [[0, 1]]),
    3: (3, [[0, 1, 2]]),
    4: (6, [[0, 1, 2, 4]]),
    5: (11, [[0, 1, 2, 4, 7]]),
    6: (19, [[0, 1, 2, 4, 7, 12]]),
    7: (28, [[0, 1, 2, 4, 8, 15, 20], [0, 1, 2, 5, 9, 17, 23]]),
    8: (40, [[0, 1, 5, 7, 9, 20, 23, 35]]),
    9: (56, [[0, 1, 2, 4, 7, 13, 24, 32, 42]]),
    10: (72, [[0, 1, 2, 4, 7, 13, 23, 31, 39, 59]]),
}

NONCYCLIC_S2_SETS = [
    (6, (2, 2, 2, 2), [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 1, 1)]),
    (6, (2, 2, 4), [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 3)]),
    (6, (4, 4), [(0, 0), (0, 1), (0, 2), (1, 0), (2, 3), (3, 0)]),
    (7, (2, 2, 2, 3), [(0, 0, 0, 0), (0, 0, 1, 1), (0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 1, 0), (0, 0, 0, 2)]),
    (8, (2, 4, 5), [(0, 0, 0), (0, 1, 1), (0, 0, 2), (0, 2, 1), (0, 3, 3), (0, 3, 4), (1, 0, 0), (1, 2, 0)]),
]

MODIFIED_S2_RAW = [
    (4, (3, 3, 2), [(1, 2, 2), (1, 3, 2), (2, 2, 2), (2, 3, 1)]),
    (5, (3, 3, 3), [(1, 1, 2), (1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]),
    (6, (3, 4, 4), [(2, 2, 3), (2, 2, 4), (2, 3, 3), (2, 1, 2), (3, 2, 3), (1, 3, 1)]),
    (7, (3, 4, 6), [(1, 2, 3), (1, 2, 5), (1, 1, 3), (1, 1, 2), (2, 2, 3), (2, 1, 5), (3, 3, 6)]),
    (8, (3, 4, 7), [(3, 2, 2), (3, 2, 1), (3, 2, 4), (3, 4, 7), (3, 3, 7), (1, 2, 2), (1, 3, 4), (2, 4, 1)]),
    (9, (3, 6, 6), [(2, 4, 1), (2, 4, 6), (2, 5, 1), (2, 5, 5), (2, 1, 5), (2, 3, 4), (3, 4, 1), (3, 2, 5), (1, 5, 2)]),
    (10, (3, 6, 8), [(2, 2, 5), (2, 2, 6), (2, 2, 8), (2, 4, 5), (2, 3, 6), (2, 1, 3), (3, 2, 5), (3, 4, 6),
                     (3, 1, 1), (1, 4, 1)]),
    (11, (4, 6, 7), [(2, 3, 1), (2, 3, 3), (2, 3, 7), (2, 1, 1), (2, 4, 3), (1, 3, 1), (1, 1, 3), (1, 4, 2),
                     (1, 6, 5), (3, 1, 4), (4, 2, 3)]),
    (12, (4, 7, 7), [(3, 7, 5), (3, 7, 4), (3, 7, 2), (3, 2, 5), (3, 3, 5), (3, 6, 3), (1, 7, 6), (1, 4, 2),
                     (1, 1, 3), (4, 7, 1), (4, 2, 5), (2, 6, 1)]),
    (13, (8, 8, 4), [(6, 6, 4), (6, 6, 1), (6, 4, 4), (6, 7, 4), (6, 1, 3), (8, 6, 4), (8, 4, 2), (7, 6, 1),
                     (7, 7, 2), (4, 4, 3), (2, 3, 3), (3, 8, 4), (1, 1, 1)]),
]

Z4_4_SET_RAW = [
    (3, 4, 1, 4), (3, 4, 1, 3), (3, 4, 2, 4), (3, 4, 4, 1), (3, 3, 1, 4), (3, 1, 2, 1), (1, 3, 1, 3),
    (1, 1, 4, 4), (4, 4, 1, 4), (4, 3, 2, 4), (4, 1, 1, 2), (4, 2, 3, 1), (2, 4, 4, 2), (2, 3, 3, 3),
    (2, 1, 2, 3), (2, 2, 4, 1),
]


def from_one_based(members, moduli):
    """Labels 1..m stand for residues 0..m-1."""
    return [tuple((x - 1) % m for x, m in zip(d, moduli)) for d in members]


def modified_s2_sets():
    return [(k, moduli, from_one_based(D, moduli)) for k, moduli, D in MODIFIED_S2_RAW]


def z4_4_set():
    return from_one_based(Z4_4_SET_RAW, (4, 4, 4, 4))
