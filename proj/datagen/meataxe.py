"""Dense MeatAxe over small prime fields: spin, chop, Brauer character
extraction via eigenvalue multiplicities.

Matrices are numpy int64 arrays with entries in [0,p). Module elements are
row vectors; the action matrix of a permutation g is mat(g).T where
mat(g)[g(j)][j] = 1, so applying g then h right-multiplies by R_g R_h.
"""

import math
import random
from functools import lru_cache

import numpy as np

import cyclo
import modp


def mmul(A, B, p):
    # entries < p <= 11 and inner dim < 5000 keep products exact in float64
    return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p


def perm_action(perm, p):
    n = len(perm)
    M = np.zeros((n, n), dtype=np.int64)
    for j, i in enumerate(perm):
        M[i][j] = 1
    return M.T.copy()


def word_action(word, gen_mats, p):
    """Action matrix of gens[w0] o gens[w1] o ... (function composition)."""
    n = gen_mats[0].shape[0]
    R = np.eye(n, dtype=np.int64)
    for w in reversed(word):
        R = mmul(R, gen_mats[w], p)
    return R


class Echelon:
    """Row space in reduced echelon form with recorded pivot columns."""

    def __init__(self, ncols, p):
        self.n = ncols
        self.p = p
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.piv = []

    def reduce(self, v):
        v = v % self.p
        if len(self.piv):
            c = v[self.piv] % self.p
            if c.any():
                v = (v - c @ self.rows) % self.p
        return v

    def insert(self, v):
        """Insert vector; returns reduced vector or None if dependent."""
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return None
        c = int(nz[0])
        v = v * pow(int(v[c]), self.p - 2, self.p) % self.p
        if len(self.piv):
            col = self.rows[:, c].copy()
            if col.any():
                self.rows = (self.rows - np.outer(col, v)) % self.p
        self.rows = np.vstack([self.rows, v])
        self.piv.append(c)
        return v

    @property
    def rank(self):
        return len(self.piv)


def spin(vectors, mats, p, stop_at=None):
    """Smallest invariant subspace containing the vectors."""
    n = mats[0].shape[0]
    E = Echelon(n, p)
    queue = []
    for v in vectors:
        r = E.insert(np.asarray(v, dtype=np.int64))
        if r is not None:
            queue.append(r)
    while queue:
        batch = np.vstack(queue)
        queue = []
        for M in mats:
            img = mmul(batch, M, p)
            for row in img:
                r = E.insert(row)
                if r is not None:
                    queue.append(r)
                    if stop_at and E.rank >= stop_at:
                        return E
    return E


def restrict(E, mats, p):
    """Action matrices on the invariant row space of E."""
    piv = E.piv
    out = []
    for M in mats:
        img = mmul(E.rows, M, p)
        out.append(img[:, piv].copy())
    return out


def quotient(E, mats, p):
    """Action matrices on the quotient by the invariant row space of E."""
    n = E.n
    rest = [c for c in range(n) if c not in set(E.piv)]
    out = []
    for M in mats:
        img = M[rest, :] % p  # images of the unit vectors e_c, c non-pivot
        red = np.vstack([E.reduce(row) for row in img])
        out.append(red[:, rest].copy())
    return out


def nullspace_rows(M, p):
    """Row vectors v with v M = 0 (left nullspace of M)."""
    A = M.T % p
    # columns of A correspond to coordinates of v; solve A v^T = 0
    rows, cols = A.shape
    A = A.copy()
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r][c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=np.int64)
        v[fc] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = (-int(A[rr][fc])) % p
        basis.append(v)
    return basis


def rank(M, p):
    A = M % p
    rows, cols = A.shape
    A = A.copy()
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r][c]), p - 2, p) % p
        col = A[r + 1:, c].copy()
        if col.any():
            A[r + 1:] = (A[r + 1:] - np.outer(col, A[r])) % p
        r += 1
    return r


def poly_of_matrix(f, A, p):
    """f(A) by Horner."""
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for c in reversed(f):
        out = mmul(out, A, p)
        if c:
            out = (out + c * np.eye(n, dtype=np.int64)) % p
    return out


def local_minpoly(A, v, p):
    """Minimal polynomial of A on the cyclic subspace generated by v."""
    n = A.shape[0]
    E = Echelon(n, p)
    combos = []  # combos[i] pairs with E.rows[i]: row i = sum combo[j]*v A^j
    cur = np.asarray(v, dtype=np.int64) % p
    deg = 0
    while True:
        w = cur % p
        combo = [0] * (deg + 1)
        combo[deg] = 1
        # reduce w against echelon rows, tracking the combination
        changed = True
        while changed:
            changed = False
            for i, pc in enumerate(E.piv):
                c = int(w[pc]) % p
                if c:
                    w = (w - c * E.rows[i]) % p
                    cb = combos[i]
                    for j, x in enumerate(cb):
                        combo[j] = (combo[j] - c * x) % p
                    changed = True
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return modp.trim([x % p for x in combo])
        c0 = int(nz[0])
        inv = pow(int(w[c0]), p - 2, p)
        w = w * inv % p
        combo = [x * inv % p for x in combo]
        # note: rows here are not kept fully reduced against each other,
        # reduction loop above handles it
        E.rows = np.vstack([E.rows, w]) if E.rank else w.reshape(1, -1)
        E.piv.append(c0)
        combos.append(combo)
        cur = mmul(cur.reshape(1, -1), A, p)[0]
        deg += 1


def rand_alg_elem(mats, p, rng):
    n = mats[0].shape[0]
    A = np.zeros((n, n), dtype=np.int64)
    for _ in range(rng.randrange(2, 4)):
        M = mats[rng.randrange(len(mats))]
        for _ in range(rng.randrange(0, 3)):
            M = mmul(M, mats[rng.randrange(len(mats))], p)
        A = (A + rng.randrange(1, p) * M) % p
    return A


def chop(mats, p, rng, max_tries=24):
    """Split a module into irreducible constituents (list of mats-lists)."""
    n = mats[0].shape[0]
    if n == 1:
        return [mats]
    certified = False
    for attempt in range(max_tries):
        A = rand_alg_elem(mats, p, rng)
        v = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        mp = local_minpoly(A, v, p)
        if len(mp) <= 1:
            continue
        for f, _ in modp.factor(mp, p, rng):
            fA = poly_of_matrix(f, A, p)
            ker = nullspace_rows(fA, p)
            for w in ker[:2]:
                E = spin([w], mats, p)
                if 0 < E.rank < n:
                    sub = restrict(E, mats, p)
                    quo = quotient(E, mats, p)
                    return chop(sub, p, rng) + chop(quo, p, rng)
            # Norton: multiplicity-one factor with full spin in both the
            # module and its transpose certifies irreducibility
            tmats = [M.T.copy() for M in mats]
            kert = nullspace_rows(fA.T, p)
            split = None
            for w in kert[:2]:
                Et = spin([w], tmats, p)
                if Et.rank < n:
                    split = Et
                    break
            if split is not None:
                # annihilator of the transpose-invariant space is invariant
                ann = nullspace_rows(split.rows.T, p)
                E = spin(ann, mats, p)
                assert 0 < E.rank < n
                sub = restrict(E, mats, p)
                quo = quotient(E, mats, p)
                return chop(sub, p, rng) + chop(quo, p, rng)
            if len(ker) == len(f) - 1:
                certified = True
        if certified:
            break
    return [mats]


def mat_inv(M, p):
    n = M.shape[0]
    A = np.concatenate([M % p, np.eye(n, dtype=np.int64)], axis=1)
    r = 0
    for c in range(n):
        nz = np.nonzero(A[r:, c])[0]
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r][c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        r += 1
    return A[:, n:].copy()


def spin_with_words(v, mats, p):
    """Spin keeping the unreduced basis vectors plus provenance (parent
    index, generator index); returns (basis matrix, provenance, rank)."""
    n = mats[0].shape[0]
    E = Echelon(n, p)
    basis, prov = [], []

    def try_add(w, pr):
        if E.insert(w.copy()) is not None:
            basis.append(w % p)
            prov.append(pr)

    try_add(np.asarray(v, dtype=np.int64), None)
    i = 0
    while i < len(basis) and E.rank < n:
        for gi, M in enumerate(mats):
            try_add(mmul(basis[i].reshape(1, -1), M, p)[0], (i, gi))
            if E.rank == n:
                break
        i += 1
    return np.vstack(basis), prov, E.rank


def endomorphism(v1, v2, mats, p):
    """Module endomorphism sending v1 to v2, or None if the extension of
    the assignment along a spinning basis is not well defined as a hom."""
    n = mats[0].shape[0]
    B, prov, rk = spin_with_words(v1, mats, p)
    if rk != n:
        return None
    C = np.zeros((n, n), dtype=np.int64)
    C[0] = np.asarray(v2, dtype=np.int64) % p
    for i in range(1, n):
        par, gi = prov[i]
        C[i] = mmul(C[par].reshape(1, -1), mats[gi], p)[0]
    return mmul(mat_inv(B, p), C, p)


def end_field(mats, p, rng, max_tries=40):
    """Degree of the endomorphism field of an irreducible module over F_p.

    Returns (1, None, None) for an absolutely irreducible module, or
    (2, theta, g) where theta generates End = F_{p^2} and g is its monic
    irreducible quadratic minimal polynomial."""
    n = mats[0].shape[0]
    if n == 1:
        return 1, None, None
    for _ in range(max_tries):
        A = rand_alg_elem(mats, p, rng)
        v = np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
        mp = local_minpoly(A, v, p)
        if len(mp) <= 1:
            continue
        for f, _ in sorted(modp.factor(mp, p, rng), key=lambda t: len(t[0])):
            degf = len(f) - 1
            if degf > 2:
                continue
            fA = poly_of_matrix(f, A, p)
            ker = nullspace_rows(fA, p)
            if len(ker) != degf:
                continue  # need a multiplicity-one factor
            if degf == 1:
                # End embeds into the 1-dimensional kernel, so End = F_p
                return 1, None, None
            th = endomorphism(ker[0], ker[1], mats, p)
            if th is None:
                continue
            if not all(np.array_equal(mmul(th, M, p), mmul(M, th, p))
                       for M in mats):
                # the kernel is bigger than End . v, so End = F_p
                return 1, None, None
            for _ in range(8):
                w = np.array([rng.randrange(p) for _ in range(n)],
                             dtype=np.int64)
                g = local_minpoly(th, w, p)
                if len(g) == 3:
                    assert modp.is_irreducible(g, p)
                    return 2, th, g
            raise RuntimeError("endomorphism has no quadratic minimal poly")
    raise RuntimeError("end_field: could not resolve endomorphism ring")


class ExtField:
    """F_p[y]/(h) with elements stored as length-k int64 coefficient
    vectors, geared towards vectorized row reduction."""

    def __init__(self, p, h):
        self.p = p
        self.h = [c % p for c in h]
        self.k = len(h) - 1

    def mulmat(self, a):
        """k x k matrix M over F_p with (e @ M) = coefficients of e*a."""
        k, p = self.k, self.p
        cur = [int(x) % p for x in list(a)[:k]]
        cur += [0] * (k - len(cur))
        M = np.zeros((k, k), dtype=np.int64)
        for j in range(k):
            M[j] = cur
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(c - lead * hc) % p for c, hc in zip(cur, self.h)]
        return M


def rank_ext(Mt, Fs):
    """Rank of a matrix over ExtField Fs; Mt has shape (rows, cols, k).
    Fraction-free row elimination (rows scale by the pivot, rank is
    unaffected); inner products stay exact in float64."""
    p, k = Fs.p, Fs.k
    A = Mt % p
    rows, cols = A.shape[0], A.shape[1]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if A[i, c].any()]
        if not nz:
            continue
        if nz[0] != r:
            A[[r, nz[0]]] = A[[nz[0], r]]
        below = [i for i in range(r + 1, rows) if A[i, c].any()]
        if below:
            piv = Fs.mulmat(A[r, c]).astype(np.float64)
            m = len(below)
            B = A[below].astype(np.float64)       # (m, cols, k)
            fac = A[below, c].astype(np.float64)  # (m, k)
            scaled = np.rint(B.reshape(m * cols, k) @ piv) \
                .astype(np.int64).reshape(m, cols, k)
            mults = np.stack([Fs.mulmat(A[r, cc]) for cc in range(cols)]) \
                .astype(np.float64)               # (cols, k, k)
            sub = np.rint(np.matmul(fac[None, :, :], mults)).astype(np.int64)
            A[below] = (scaled - sub.transpose(1, 0, 2)) % p
        r += 1
    return r


def minpoly_subfield(lift, z):
    """Monic minimal polynomial over F_p of an element of lift.F."""
    K, p = lift.F.k, lift.p
    pows = [(1,)]
    while True:
        r = len(pows)
        pows.append(lift.F.mul(pows[-1], z))
        A = np.zeros((r + 1, K), dtype=np.int64)
        for i, pw in enumerate(pows):
            A[i, :len(pw)] = pw
        ns = nullspace_rows(A, p)
        if ns:
            c = ns[0]
            inv = pow(int(c[r]), p - 2, p)
            return [int(x) * inv % p for x in c[:r + 1]]


def split_merged(mats, theta, g, pregs, p, lift):
    """Brauer character pair of an F_p-irreducible module whose
    endomorphism ring is F_{p^2} = F_p[theta].

    Over the algebraic closure the module is N + N^frob; the multiplicity
    of an eigenvalue lambda of a class representative R on N is the
    dimension of the joint left kernel of (R - lambda) and (theta - omega),
    where omega is a fixed root of g. Roots of unity are identified with
    powers of lift.theta throughout, so the values are coherent with the
    characters computed via lift.brauer_value."""
    n = mats[0].shape[0]
    half = n // 2
    M = lift.M
    # smallest d with F_p(zeta_d) = F_{p^2}; zeta_d anchors omega in every
    # working subfield
    d = next(dd for dd in range(2, M + 1)
             if M % dd == 0 and pow(p, 2, dd) == 1 % dd and p % dd != 1 % dd)
    mu_big = lift.F.pow(lift.theta, M // d)
    root = None
    for c0 in range(p):
        for c1 in range(1, p):
            cand = tuple(modp.padd([c0], [c1 * x % p for x in mu_big], p))
            if lift.F.eval_poly(g, cand) == ():
                root = (c0, c1)
                break
        if root:
            break
    assert root is not None, "no root of g in F_p(zeta_d)"
    c0, c1 = root

    vals, vals_tw = [], []
    for cl in pregs:
        e = cl["order"]
        if e == 1:
            vals.append({0: half})
            vals_tw.append({0: half})
            continue
        L = e * d // math.gcd(e, d)
        z = lift.F.pow(lift.theta, M // L)
        h = minpoly_subfield(lift, z)
        Fs = ExtField(p, h)
        k = Fs.k
        R = word_action(cl["word"], mats, p)
        mus = modp.ppow_mod([0, 1], L // d, h, p)
        om = modp.padd([c0], [c1 * x % p for x in mus], p)
        Tth = np.zeros((n, n, k), dtype=np.int64)
        Tth[:, :, 0] = theta % p
        TR = np.zeros((n, n, k), dtype=np.int64)
        TR[:, :, 0] = R % p
        idx = np.arange(n)
        acc = {}
        total = 0
        for t in range(e):
            lam = modp.ppow_mod([0, 1], (L // e) * t, h, p)
            A1 = TR.copy()
            A2 = Tth.copy()
            for vec, A in ((lam, A1), (om, A2)):
                sv = np.zeros(k, dtype=np.int64)
                sv[:len(vec)] = vec
                A[idx, idx] = (A[idx, idx] - sv) % p
            S = np.concatenate([A1, A2], axis=1)  # left kernel is the joint one
            mult = n - rank_ext(S, Fs)
            if mult:
                acc[t] = mult
                total += mult
        assert total == half, (cl["name"], total, half)
        vals.append(cyclo.reduce_dict(e, acc))
        tw = {}
        for t, c in acc.items():
            tw[t * p % e] = tw.get(t * p % e, 0) + c
        vals_tw.append(cyclo.reduce_dict(e, tw))
    return vals, vals_tw


class RootLift:
    """Fixed correspondence between roots of unity in char p and complex
    roots of unity, consistent across all element orders involved."""

    def __init__(self, p, orders, rng=None):
        rng = rng or random.Random(2024)
        self.p = p
        M = 1
        for e in orders:
            M = M * e // math.gcd(M, e)
        self.M = M
        k = 1
        while pow(p, k, M) != 1:
            k += 1
        self.k = k
        self.F = modp.GF(p, modp.find_irreducible(p, k, rng))
        q1 = p ** k - 1
        fac = set()
        m = M
        d = 2
        while d * d <= m:
            if m % d == 0:
                fac.add(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.add(m)
        while True:
            a = self.F.el([rng.randrange(p) for _ in range(k)])
            b = self.F.pow(a, q1 // M)
            if b != (1,) and all(self.F.pow(b, M // f) != (1,) for f in fac):
                self.theta = b
                break
        self._factors = {}

    def factors_of_order(self, d):
        """Irreducible factors of Phi_d mod p, each with the exponent t of a
        root theta^(M/d * t); returns list of (poly, t)."""
        if d in self._factors:
            return self._factors[d]
        assert self.M % d == 0
        phi_d = [c % self.p for c in cyclo.cyclotomic_poly(d)]
        eps = self.F.pow(self.theta, self.M // d)
        out = []
        for f, mult in modp.factor(list(phi_d), self.p):
            assert mult == 1
            t = next(t for t in range(d) if math.gcd(t, d) == 1
                     and self.F.eval_poly(f, self.F.pow(eps, t)) == ())
            out.append((f, t))
        self._factors[d] = out
        return out

    def brauer_value(self, R, e, p):
        """Brauer character value of the action matrix R of an element of
        order e, as a sparse cyclotomic dict at conductor e."""
        n = R.shape[0]
        total = 0
        acc = {}
        for d in [d for d in range(1, e + 1) if e % d == 0]:
            for f, t in self.factors_of_order(d):
                degf = len(f) - 1
                nullity = n - rank(poly_of_matrix(f, R, p), p)
                assert nullity % degf == 0
                mult = nullity // degf
                total += nullity
                if mult:
                    tt = t
                    for _ in range(degf):
                        ee = tt * (e // d) % e
                        acc[ee] = acc.get(ee, 0) + mult
                        tt = tt * p % d if d > 1 else 0
        assert total == n, (total, n)
        return cyclo.reduce_dict(e, acc)
