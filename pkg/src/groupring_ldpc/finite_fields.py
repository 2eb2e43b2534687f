"""GF(p^beta) with exp/log tables, location vectors and CPM dispersion.

Field elements are stored as integers whose base-p digits are the
coefficients of the polynomial basis 1, a, a^2, ...  Exponents of the
primitive element use NEG_INF (-1) for the zero element.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

NEG_INF = -1


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(q):
    """Return (p, beta) with q = p**beta, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                return None
            beta, r = 0, q
            while r % p == 0:
                r //= p
                beta += 1
            return (p, beta) if r == 1 else None
    return None


def _digits(v, p, n):
    out = []
    for _ in range(n):
        out.append(v % p)
        v //= p
    return out


def _undigits(ds, p):
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _powers_of_x(poly, p, beta, limit):
    """Walk x^0, x^1, ... in GF(p)[x]/(poly); poly is a monic coefficient list
    (low degree first, length beta+1).  Yields at most `limit` elements and
    stops early when 1 recurs."""
    if p == 2:
        return _powers_of_x_bin(_undigits(poly, 2), beta, limit)
    cur = [1] + [0] * (beta - 1)
    seen = []
    for k in range(limit):
        seen.append(_undigits(cur, p))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * poly[i]) % p for i, c in enumerate(cur)]
        if cur == [1] + [0] * (beta - 1):
            return seen
    return seen


def _powers_of_x_bin(poly, beta, limit):
    # same walk with polynomials packed into ints
    cur, seen = 1, []
    for _ in range(limit):
        seen.append(cur)
        cur <<= 1
        if cur >> beta:
            cur ^= poly
        if cur == 1:
            return seen
    return seen


@lru_cache(maxsize=None)
def primitive_polynomial(p, beta):
    """First primitive polynomial of degree beta over GF(p), ordering the
    monic candidates by the integer whose base-p digits are the low
    coefficients.  Returned low degree first."""
    q = p ** beta
    for code in range(1, p ** beta):
        poly = _digits(code, p, beta) + [1]
        if poly[0] == 0:
            continue
        if len(_powers_of_x(poly, p, beta, q)) == q - 1:
            return tuple(poly)
    raise ValueError(f"no primitive polynomial for GF({p}^{beta})")


class GaloisField:
    """GF(p^beta) with primitive element alpha = x mod primitive_poly."""

    def __init__(self, p, beta=1):
        if not _is_prime(p) or beta < 1:
            raise ValueError(f"unsupported field size {p}^{beta}")
        if p ** beta > 1 << 20:
            raise ValueError(f"field GF({p}^{beta}) too large")
        self.p, self.beta = p, beta
        self.q = p ** beta
        self.primitive_poly = primitive_polynomial(p, beta)
        exp = _powers_of_x(list(self.primitive_poly), p, beta, self.q)
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.full(self.q, NEG_INF, dtype=np.int64)
        self.log_table[self.exp_table] = np.arange(self.q - 1)

    @property
    def order(self):
        return self.q - 1

    def alpha_pow(self, e):
        if e == NEG_INF:
            return 0
        return int(self.exp_table[e % (self.q - 1)])

    def log(self, v):
        return int(self.log_table[v])

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = _digits(a, self.p, self.beta), _digits(b, self.p, self.beta)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.alpha_pow(self.log(a) + self.log(b))

    def trace(self, a, sub_q=None):
        """Trace from GF(q) down to GF(sub_q) (default: the prime field)."""
        sub_q = sub_q or self.p
        m = 0
        r = 1
        while r < self.q:
            r *= sub_q
            m += 1
        if r != self.q:
            raise ValueError(f"GF({sub_q}) is not a subfield of GF({self.q})")
        out, x = 0, a
        for _ in range(m):
            out = self.add(out, x)
            x = self.power(x, sub_q)
        return out

    def power(self, a, k):
        if a == 0:
            return 0
        return self.alpha_pow(self.log(a) * k)

    def __repr__(self):
        return f"GaloisField({self.p}^{self.beta})"


def field_for(q):
    pb = prime_power(q)
    if pb is None:
        raise ValueError(f"{q} is not a prime power")
    return GaloisField(*pb)


def location_vector(field, e):
    """One-hot vector of length q-1 at position e; all zero for NEG_INF."""
    v = np.zeros(field.q - 1, dtype=np.uint8)
    if e != NEG_INF:
        v[e % (field.q - 1)] = 1
    return v


def cpm(field, e):
    """(q-1)x(q-1) circulant permutation matrix of alpha^e; row r is the
    location vector of alpha^(e+r)."""
    m = field.q - 1
    M = np.zeros((m, m), dtype=np.uint8)
    if e != NEG_INF:
        r = np.arange(m)
        M[r, (e + r) % m] = 1
    return M


def gf_mul_exponents(field, e1, e2):
    if e1 == NEG_INF or e2 == NEG_INF:
        return NEG_INF
    return (e1 + e2) % (field.q - 1)
