"""Ordinary character table of M22 via Dixon's method (structure constants,
eigenvectors over a prime field, Fourier lifting of root-of-unity sums)."""

import math
import random

from classes import GroupData, perm_pow
from group import perm_inv, perm_mul

EXP = 9240  # exponent of M22


def find_field(exp=EXP):
    q = exp + 1
    while True:
        if is_prime(q):
            return q
        q += exp


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primitive_root(q):
    fac = []
    m = q - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for z in range(2, q):
        if all(pow(z, (q - 1) // f, q) != 1 for f in fac):
            return z
    raise RuntimeError


def structure_constants(gd: GroupData):
    """n[i][j][k] = #{(x,y) in C_i x C_j : x*y = rep_k}."""
    ncl = len(gd.classes)
    members = [[] for _ in range(ncl)]
    for pos, e in enumerate(gd.elems):
        members[gd.table_of_raw[gd.class_of[pos]]].append(e)
    reps = [c["rep"] for c in gd.classes]
    n = [[[0] * ncl for _ in range(ncl)] for _ in range(ncl)]
    for i in range(ncl):
        for k in range(ncl):
            rk = reps[k]
            row = n[i]
            for x in members[i]:
                y = perm_mul(perm_inv(x), rk)
                j = gd.table_of_raw[gd.class_of[gd.index[y]]]
                row[j][k] += 1
    return n


def charpoly_mod(M, q):
    """Characteristic polynomial of a small matrix over F_q (Leverrier)."""
    n = len(M)
    I = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    A = [row[:] for row in M]
    B = I
    poly = [1]
    for k in range(1, n + 1):
        AB = mat_mul(A, B, q)
        tr = sum(AB[i][i] for i in range(n)) % q
        ck = (-tr * pow(k, q - 2, q)) % q
        poly.append(ck)
        B = [[(AB[i][j] + (ck if i == j else 0)) % q for j in range(n)]
             for i in range(n)]
    return poly  # poly[0] x^n + poly[1] x^(n-1) + ...


def mat_mul(A, B, q):
    n = len(A)
    m = len(B[0])
    K = len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for k in range(K):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(m):
                    oi[j] = (oi[j] + a * Bk[j]) % q
    return out


def poly_roots(poly, q):
    """All roots in F_q of a polynomial given by descending coefficients."""
    roots = []
    for x in range(q):
        acc = 0
        for c in poly:
            acc = (acc * x + c) % q
        if acc == 0:
            roots.append(x)
    return roots


def nullspace(M, q):
    n = len(M)
    m = len(M[0])
    A = [row[:] for row in M]
    piv_col = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if A[i][c] % q:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], q - 2, q)
        A[r] = [(v * inv) % q for v in A[r]]
        for i in range(n):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % q for a, b in zip(A[i], A[r])]
        piv_col.append(c)
        r += 1
    free = [c for c in range(m) if c not in piv_col]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for rr, pc in enumerate(piv_col):
            v[pc] = (-A[rr][fc]) % q
        basis.append(v)
    return basis


def compute_table(gd: GroupData, verbose=True):
    q = find_field()
    ncl = len(gd.classes)
    sizes = [c["size"] for c in gd.classes]
    orders = [c["order"] for c in gd.classes]
    sc = structure_constants(gd)
    Ms = []
    for i in range(ncl):
        # (M_i)[j][k] = n[i][j][k]; eigvec (omega(C_k))_k with eigval omega(C_i)
        Ms.append([[sc[i][j][k] % q for k in range(ncl)] for j in range(ncl)])

    rng = random.Random(12345)
    while True:
        coeffs = [rng.randrange(q) for _ in range(ncl)]
        M = [[sum(c * Ms[i][j][k] for i, c in enumerate(coeffs)) % q
              for k in range(ncl)] for j in range(ncl)]
        poly = charpoly_mod(M, q)
        roots = poly_roots(poly, q)
        if len(set(roots)) == ncl:
            break
    omegas = []
    for lam in roots:
        A = [[(M[j][k] - (lam if j == k else 0)) % q for k in range(ncl)]
             for j in range(ncl)]
        ns = nullspace(A, q)
        assert len(ns) == 1
        v = ns[0]
        inv0 = pow(v[0], q - 2, q)
        omegas.append([x * inv0 % q for x in v])

    # inverse classes
    inv_class = [gd.class_id(perm_inv(c["rep"])) for c in gd.classes]
    G = 443520
    chars_modq = []
    degrees = []
    for om in omegas:
        s = 0
        for k in range(ncl):
            s = (s + om[k] * om[inv_class[k]] * pow(sizes[k], q - 2, q)) % q
        d2 = G * pow(s, q - 2, q) % q
        d = tonelli(d2, q)
        d = min(d, q - d)
        degrees.append(d)
        vals = [d * om[k] % q * pow(sizes[k], q - 2, q) % q for k in range(ncl)]
        chars_modq.append(vals)
    assert sum(d * d for d in degrees) == G, degrees

    # lifting
    z = primitive_root(q)
    theta = pow(z, (q - 1) // EXP, q)
    table = []
    for d, vals in zip(degrees, chars_modq):
        lifted = []
        for k in range(ncl):
            m = orders[k]
            g = gd.classes[k]["rep"]
            th = pow(theta, EXP // m, q)
            # chi(g^s) mod q for s = 0..m-1
            chis = [vals[gd.class_id(perm_pow(g, s))] for s in range(m)]
            minv = pow(m, q - 2, q)
            coeffs_cyc = {}
            for t in range(m):
                acc = 0
                for s in range(m):
                    acc = (acc + chis[s] * pow(th, (-s * t) % (q - 1), q)) % q
                mt = acc * minv % q
                assert mt <= d, (mt, d)
                if mt:
                    coeffs_cyc[t] = mt
            lifted.append(coeffs_cyc)
        table.append({"degree": d, "values": lifted})
    table.sort(key=lambda c: c["degree"])
    return q, table


def tonelli(a, q):
    assert pow(a, (q - 1) // 2, q) == 1
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    # Tonelli-Shanks
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while pow(n, (q - 1) // 2, q) != q - 1:
        n += 1
    x = pow(a, (s + 1) // 2, q)
    b = pow(a, s, q)
    g = pow(n, s, q)
    r = e
    while True:
        t = b
        m = 0
        while t != 1:
            t = t * t % q
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), q)
        g = gs * gs % q
        x = x * gs % q
        b = b * g % q
        r = m


if __name__ == "__main__":
    gd = GroupData()
    q, table = compute_table(gd)
    print("field:", q)
    names = [c["name"] for c in gd.classes]
    print("classes:", names)
    for ch in table:
        print(ch["degree"], [ch["values"][k] for k in range(12)])
