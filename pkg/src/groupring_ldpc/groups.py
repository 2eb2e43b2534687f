"""Small finite groups with a fixed element listing.

Every group is indexed 0..order-1 with the identity at index 0.  The
listing matters: RG-matrix rows are defined relative to it.

  cyclic(n)          a^0, a^1, ..., a^(n-1)
  direct_product(ns) mixed radix over the cyclic factors, last factor fastest
  dihedral(2n)       1, r, ..., r^(n-1), s, rs, ..., r^(n-1)s
  quaternion()       1, -1, i, -i, j, -j, k, -k
"""
from __future__ import annotations

from math import gcd, prod

import numpy as np

TABLE_LIMIT = 256

# unit quaternions 1, i, j, k as 0..3; product is (sign, unit)
_QUNIT = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 1), (1, 0), (0, 3), (1, 2)],
    [(0, 2), (1, 3), (1, 0), (0, 1)],
    [(0, 3), (0, 2), (1, 1), (1, 0)],
]


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Finite group on indices 0..order-1 (identity is 0)."""

    def __init__(self, kind, params, order):
        self.kind = kind
        self.params = tuple(params)
        self.order = order
        self.identity_index = 0
        self._mul = None
        self._inv = None
        if order <= TABLE_LIMIT:
            idx = np.arange(order)
            self._mul = np.array([[self._raw_mul(i, j) for j in idx] for i in idx], dtype=np.int64)
            self._inv = np.array([self._raw_inv(i) for i in idx], dtype=np.int64)

    # raw operations from the presentation
    def _raw_mul(self, i, j):
        k = self.kind
        if k == "cyclic":
            return (i + j) % self.order
        if k == "direct_product":
            a, b = self.to_tuple(i), self.to_tuple(j)
            return self.from_tuple([(x + y) % n for x, y, n in zip(a, b, self.params)])
        if k == "dihedral":
            n = self.order // 2
            a, s = i % n, i // n
            c, t = j % n, j // n
            c = c if s == 0 else -c
            return (a + c) % n + n * (s ^ t)
        if k == "quaternion":
            sgn, u = self._q_split(i)
            sgn2, u2 = self._q_split(j)
            s3, u3 = _QUNIT[u][u2]
            return 2 * u3 + (sgn ^ sgn2 ^ s3)
        raise GroupError(kind)

    def _raw_inv(self, i):
        for j in range(self.order):
            if self._raw_mul(i, j) == 0:
                return j
        raise GroupError("no inverse")

    @staticmethod
    def _q_split(i):
        return i % 2, i // 2

    def mul(self, i, j):
        if self._mul is not None:
            return int(self._mul[i, j])
        return self._raw_mul(i, j)

    def inv(self, i):
        if self._inv is not None:
            return int(self._inv[i])
        return self._raw_inv(i)

    @property
    def mul_table(self):
        if self._mul is None:
            n = self.order
            self._mul = np.array([[self._raw_mul(i, j) for j in range(n)] for i in range(n)])
            self._inv = np.array([self._raw_inv(i) for i in range(n)])
        return self._mul

    @property
    def inv_table(self):
        self.mul_table
        return self._inv

    # mixed radix helpers (direct products only)
    def to_tuple(self, i):
        out = []
        for n in reversed(self.params):
            out.append(i % n)
            i //= n
        return tuple(reversed(out))

    def from_tuple(self, t):
        i = 0
        for x, n in zip(t, self.params):
            i = i * n + x
        return i

    def is_abelian(self):
        T = self.mul_table
        return bool((T == T.T).all())

    def element_order(self, i):
        k, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            k += 1
        return k

    def exponent(self):
        e = 1
        for i in range(self.order):
            o = self.element_order(i)
            e = e * o // gcd(e, o)
        return e

    def cyclic_factors(self):
        """Orders of the cyclic factors whose mixed-radix listing matches ours,
        or None for the non-Abelian kinds."""
        if self.kind == "cyclic":
            return (self.order,)
        if self.kind == "direct_product":
            return self.params
        return None

    def to_dict(self):
        if self.kind == "cyclic":
            return {"kind": "cyclic", "n": self.order}
        if self.kind == "direct_product":
            return {"kind": "direct_product", "factors": list(self.params)}
        if self.kind == "dihedral":
            return {"kind": "dihedral", "n": self.order}
        return {"kind": "quaternion"}

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and (self.kind, self.params) == (other.kind, other.params)

    def __hash__(self):
        return hash((self.kind, self.params))

    def __repr__(self):
        return f"FiniteGroup({self.kind}, {self.params})"


def cyclic(n):
    if n < 1:
        raise GroupError(f"cyclic order must be positive, got {n}")
    return FiniteGroup("cyclic", (n,), n)


def direct_product(orders):
    orders = tuple(int(n) for n in orders)
    if not orders or min(orders) < 1:
        raise GroupError(f"bad factor orders {orders}")
    return FiniteGroup("direct_product", orders, prod(orders))


def dihedral(order):
    """Dihedral group with `order` elements (order = 2n)."""
    if order < 2 or order % 2:
        raise GroupError(f"dihedral order must be even and >= 2, got {order}")
    return FiniteGroup("dihedral", (order,), order)


def quaternion():
    return FiniteGroup("quaternion", (8,), 8)


def make_group(kind, *args):
    """make_group("cyclic", 8), make_group({"kind": "dihedral", "n": 8}), ..."""
    if isinstance(kind, dict):
        d = dict(kind)
        k = d.pop("kind")
        if k == "cyclic":
            return cyclic(int(d["n"]))
        if k == "direct_product":
            return direct_product(d["factors"])
        if k == "dihedral":
            return dihedral(int(d["n"]))
        if k == "quaternion":
            return quaternion()
        raise GroupError(f"unknown group kind {k!r}")
    if kind == "cyclic":
        return cyclic(*args)
    if kind == "direct_product":
        return direct_product(*args)
    if kind == "dihedral":
        return dihedral(*args)
    if kind == "quaternion":
        return quaternion()
    raise GroupError(f"unknown group kind {kind!r}")


def elements_of(group):
    return list(range(group.order))
