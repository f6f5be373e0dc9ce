"""Polynomial arithmetic and factorization over F_p, plus a small
extension-field helper used to identify eigenvalue exponents.

Polynomials are lists of ints in [0,p), ascending degree, no trailing zeros.
"""

import random


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return trim(out)


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def pdivmod(a, b, p):
    a = a[:]
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * binv % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return trim(q), trim(a)


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def pgcd(a, b, p):
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def ppow_mod(a, e, m, p):
    out = [1]
    a = pmod(a, m, p)
    while e:
        if e & 1:
            out = pmod(pmul(out, a, p), m, p)
        a = pmod(pmul(a, a, p), m, p)
        e >>= 1
    return out


def pderiv(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def squarefree_parts(f, p):
    """Yield (g, multiplicity) with g squarefree, f = prod g^mult."""
    out = []
    e = 1
    while len(f) > 1:
        d = pderiv(f, p)
        if not d:
            # f = g(x^p) = (g~(x))^p; in F_p the p-th root of a coefficient
            # is the coefficient itself
            f = trim([f[i] for i in range(0, len(f), p)])
            e *= p
            continue
        g = pgcd(f, d, p)
        w = pdivmod(f, g, p)[0]  # product of squarefree factors, mult 1 part
        i = 1
        while len(w) > 1:
            y = pgcd(w, g, p)
            z = pdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, e * i))
            w = y
            g = pdivmod(g, y, p)[0]
            i += 1
        f = g
    return out


def ddf(f, p):
    """Distinct-degree factorization of squarefree monic f.
    Returns list of (product_of_factors, degree)."""
    out = []
    x = [0, 1]
    h = x[:]
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        h = ppow_mod(h, p, f, p)
        g = pgcd(padd(h, [0, p - 1], p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = pdivmod(f, g, p)[0]
            h = pmod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def edf(f, d, p, rng):
    """Equal-degree factorization: f squarefree, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = trim(a)
        if len(a) <= 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = a[:]
            cur = a[:]
            for _ in range(d - 1):
                cur = pmod(pmul(cur, cur, p), f, p)
                t = padd(t, cur, p)
            g = pgcd(t, f, p)
        else:
            b = ppow_mod(a, (p ** d - 1) // 2, f, p)
            g = pgcd(padd(b, [p - 1], p), f, p)
        if 1 < len(g) < len(f):
            return edf(g, d, p, rng) + edf(pdivmod(f, g, p)[0], d, p, rng)


def factor(f, p, rng=None):
    """Full factorization; returns list of (monic irreducible, multiplicity)."""
    rng = rng or random.Random(7)
    inv = pow(f[-1], p - 2, p)
    f = [c * inv % p for c in f]
    out = []
    for g, mult in squarefree_parts(f, p):
        for h, d in ddf(g, p):
            for irr in edf(h, d, p, rng):
                out.append((irr, mult))
    return out


class GF:
    """F_p[x]/(m), elements are coefficient tuples."""

    def __init__(self, p, modulus):
        self.p = p
        self.m = modulus
        self.k = len(modulus) - 1

    def el(self, coeffs):
        return tuple(pmod(list(coeffs), self.m, self.p))

    def mul(self, a, b):
        return tuple(pmod(pmul(list(a), list(b), self.p), self.m, self.p))

    def pow(self, a, e):
        out = (1,)
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def eval_poly(self, f, a):
        """Evaluate an F_p polynomial at field element a."""
        acc = ()
        for c in reversed(f):
            acc = self.mul(acc, a) if acc else ()
            acc = tuple(padd(list(acc), [c], self.p))
        return acc

    def is_primitive(self, a, order_facs):
        q1 = self.p ** self.k - 1
        if self.pow(a, q1) != (1,):
            return False
        return all(self.pow(a, q1 // f) != (1,) for f in order_facs)


def find_irreducible(p, k, rng=None):
    """A monic irreducible polynomial of degree k over F_p."""
    rng = rng or random.Random(11)
    while True:
        f = [rng.randrange(p) for _ in range(k)] + [1]
        if f[0] == 0:
            continue
        if is_irreducible(f, p):
            return f


def is_irreducible(f, p):
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    h = ppow_mod(x, p ** k, f, p)
    if pmod(padd(h, [0, p - 1], p), f, p):
        return False
    facs = set()
    m = k
    d = 2
    while d * d <= m:
        if m % d == 0:
            facs.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        facs.add(m)
    for q in facs:
        h = ppow_mod(x, p ** (k // q), f, p)
        if len(pgcd(padd(h, [0, p - 1], p), f, p)) > 1:
            return False
    return True
