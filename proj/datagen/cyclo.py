"""Minimal exact cyclotomic arithmetic on sparse exponent dicts.

A value in Q(zeta_n) is a dict {exponent: integer coefficient}; all
operations reduce modulo the n-th cyclotomic polynomial into the power
basis 1, zeta, ..., zeta^(phi(n)-1).
"""

import math
from fractions import Fraction
from functools import lru_cache


def phi(n):
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def mobius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of Phi_n, ascending, exact integers."""
    # start from x^n - 1, divide by Phi_d for proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        assert c * den[-1] == num[i + len(den) - 1]
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    assert all(v == 0 for v in num)
    return out


def reduce_dict(n, d):
    """Reduce {exp: coeff} mod Phi_n into the power basis; returns sparse
    dict with minimal support (coefficients may be Fractions)."""
    deg = phi(n)
    coeffs = [0] * n
    for e, c in d.items():
        coeffs[e % n] += c
    p = cyclotomic_poly(n)
    for i in range(n - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(deg + 1):
                coeffs[i - deg + j] -= c * p[j]
    out = {e: c for e, c in enumerate(coeffs[:deg]) if c}
    return out


def embed(n, d, m):
    """View a value of conductor n inside Q(zeta_m), n | m."""
    assert m % n == 0
    k = m // n
    return reduce_dict(m, {e * k: c for e, c in d.items()})


def mul(n, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1 + e2) % n
            out[e] = out.get(e, 0) + c1 * c2
    return reduce_dict(n, out)


def conj(n, a):
    return reduce_dict(n, {(-e) % n: c for e, c in a.items()})


def trace_root(n, t):
    """Tr_{Q(zeta_n)/Q}(zeta_n^t) as an exact integer."""
    g = math.gcd(t % n, n)
    m = n // g  # zeta_n^t is a primitive m-th root
    return mobius(m) * phi(n) // phi(m)


def trace(n, a):
    return sum(c * trace_root(n, e) for e, c in a.items())


def to_complex(n, a):
    import cmath
    return sum(c * cmath.exp(2j * cmath.pi * e / n) for e, c in a.items())
