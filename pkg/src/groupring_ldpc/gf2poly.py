"""Polynomials over GF(2) packed into Python ints (bit i = coeff of x^i)."""
from __future__ import annotations

from functools import lru_cache


def deg(a):
    return a.bit_length() - 1


def mul(a, b):
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def divmod_(a, b):
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = deg(b)
    while a and deg(a) >= db:
        s = deg(a) - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def mod(a, b):
    return divmod_(a, b)[1]


def gcd(a, b):
    while b:
        a, b = b, mod(a, b)
    return a


def ext_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
        t0, t1 = t1, t0 ^ mul(q, t1)
    return r0, s0, t0


def inverse_mod(a, m):
    g, s, _ = ext_gcd(mod(a, m), m)
    if g != 1:
        return None
    return mod(s, m)


def from_exponents(exps):
    v = 0
    for e in exps:
        v ^= 1 << e
    return v


def exponents(a):
    return [i for i in range(a.bit_length()) if a >> i & 1]


def from_bits(bits):
    v = 0
    for i, b in enumerate(bits):
        if b:
            v |= 1 << i
    return v


def to_bits(a, n):
    return [(a >> i) & 1 for i in range(n)]


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Phi_n reduced mod 2, via x^n - 1 = prod_{d | n} Phi_d."""
    out = (1 << n) | 1
    for d in range(1, n):
        if n % d == 0:
            out = divmod_(out, cyclotomic(d))[0]
    return out


def to_str(a, var="x"):
    if a == 0:
        return "0"
    terms = []
    for e in sorted(exponents(a), reverse=True):
        terms.append("1" if e == 0 else var if e == 1 else f"{var}^{e}")
    return "+".join(terms)
