"""Brauer character tables of M22 for p in {2,3,5,7,11}.

Irreducible modules are found by chopping the natural 22-point permutation
module over F_p and tensor products of constituents; characters of defect
zero are restrictions of ordinary characters and need no module. Results
are validated by decomposing every ordinary character into a non-negative
integer combination of the Brauer characters found.
"""

import itertools
import json
import math
import os
import random
from fractions import Fraction

import numpy as np

import cyclo
import meataxe as mx
from classes import class_summary, generators

OUT = os.path.join(os.path.dirname(__file__), "brauer_tables.json")
ORD = os.path.join(os.path.dirname(__file__), "ordinary_table.json")

GROUP_ORDER = 443520
PRIMES = (2, 3, 5, 7, 11)

DIM_CAP = 6000


def char_key(values):
    return tuple(tuple(sorted(v.items())) for v in values)


def module_char(mats, pregs, p, lift):
    vals = []
    for c in pregs:
        R = mx.word_action(c["word"], mats, p)
        vals.append(lift.brauer_value(R, c["order"], p))
    return vals


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


def dual_module(mats, p):
    return [mat_inv(M, p).T.copy() for M in mats]


def conj_values(values, pregs):
    return [cyclo.conj(c["order"], v) for c, v in zip(pregs, values)]


def restrict_ordinary(ch, classes, preg_idx):
    return [{int(e): c for e, c in ch["values"][i].items()} for i in preg_idx]


def compute_prime(p, cs, ordinary, rng):
    classes = cs["classes"]
    preg_idx = [i for i, c in enumerate(classes) if c["order"] % p]
    pregs = [classes[i] for i in preg_idx]
    target = len(pregs)
    lift = mx.RootLift(p, [c["order"] for c in pregs])

    found = {}  # key -> dict(degree, values, mats or None)

    def add(values, mats):
        key = char_key(values)
        if key in found:
            # a module may realize a character first seen as a defect-zero
            # restriction; keep its matrices for tensor escalation
            if mats is not None and found[key]["mats"] is None:
                found[key]["mats"] = mats
                cv = conj_values(values, pregs)
                ck = char_key(cv)
                if ck in found and found[ck]["mats"] is None and ck != key:
                    found[ck]["mats"] = dual_module(mats, p)
            return False
        deg = values[0][0]
        found[key] = {"degree": deg, "values": values, "mats": mats}
        # Galois-conjugate character comes for free via the dual module
        cv = conj_values(values, pregs)
        ck = char_key(cv)
        if ck not in found:
            found[ck] = {"degree": deg, "values": cv,
                         "mats": dual_module(mats, p) if mats else None}
        return True

    # defect zero: ordinary characters of degree divisible by |G|_p restrict
    # to irreducible Brauer characters
    gp = p ** max(k for k in range(1, 8) if GROUP_ORDER % p ** k == 0)
    for ch in ordinary:
        if ch["degree"] % gp == 0:
            add(restrict_ordinary(ch, classes, preg_idx), None)

    def add_module(irr):
        """Emit the Brauer character(s) of an F_p-irreducible module; a
        module with endomorphism field F_{p^2} carries two of them."""
        s, th, g = mx.end_field(irr, p, rng)
        if s == 1:
            return add(module_char(irr, pregs, p, lift), irr)
        v1, v2 = mx.split_merged(irr, th, g, pregs, p, lift)
        new = False
        for vals, mats_ in ((v1, irr), (v2, None)):
            key = char_key(vals)
            if key not in found:
                found[key] = {"degree": vals[0][0], "values": vals,
                              "mats": mats_}
                new = True
            elif mats_ is not None and found[key]["mats"] is None:
                found[key]["mats"] = mats_
            cv = conj_values(vals, pregs)
            ck = char_key(cv)
            if ck not in found:
                found[ck] = {"degree": vals[0][0], "values": cv, "mats": None}
                new = True
        return new

    gens = generators()
    seeds = [[mx.perm_action(g, p) for g in gens]]
    for mats in seeds:
        for irr in mx.chop(mats, p, rng):
            add_module(irr)

    tried = set()
    while len(found) < target:
        mods = sorted((f["degree"], k) for k, f in found.items() if f["mats"])
        pair = None
        for (d1, k1), (d2, k2) in itertools.combinations_with_replacement(
                mods, 2):
            if d1 * d2 > DIM_CAP or d1 == 1:
                continue
            if (k1, k2) in tried:
                continue
            pair = (k1, k2)
            break
        if pair is None:
            raise RuntimeError(f"p={p}: ran out of tensor candidates "
                               f"({len(found)}/{target})")
        tried.add(pair)
        m1, m2 = found[pair[0]]["mats"], found[pair[1]]["mats"]
        tens = [np.kron(a, b) % p for a, b in zip(m1, m2)]
        print(f"  p={p}: chopping tensor "
              f"{m1[0].shape[0]}x{m2[0].shape[0]}", flush=True)
        for irr in mx.chop(tens, p, rng):
            if add_module(irr):
                print(f"  p={p}: new constituent dim {irr[0].shape[0]} "
                      f"({len(found)}/{target})", flush=True)

    chars = sorted(found.values(),
                   key=lambda f: sort_key(f, [c["order"] for c in pregs]))
    validate_decomposition(p, chars, pregs, preg_idx, ordinary)
    return {
        "classes": [c["name"] for c in pregs],
        "characters": [
            {"degree": f["degree"],
             "values": [{str(e): c for e, c in v.items()}
                        for v in f["values"]]}
            for f in chars
        ],
    }


def sort_key(f, orders):
    flat = []
    for v, m in zip(f["values"], orders):
        t = -sum(c * cyclo.trace_root(m, e - 1) for e, c in v.items())
        flat.append((t, sorted(v.items())))
    return (f["degree"], flat)


def validate_decomposition(p, chars, pregs, preg_idx, ordinary):
    """Each ordinary character restricted to p-regular classes must be a
    non-negative integer combination of the Brauer characters."""
    orders = [c["order"] for c in pregs]
    # coordinate map: per class, power-basis coefficient vector
    def coords(values):
        out = []
        for m, v in zip(orders, values):
            row = [0] * cyclo.phi(m)
            for e, c in v.items():
                row[e] = c
            out.extend(row)
        return out

    basis = [coords(f["values"]) for f in chars]
    ncols = len(chars)
    for ch in ordinary:
        targ = coords([{int(e): c for e, c in ch["values"][i].items()}
                       for i in preg_idx])
        # exact least-structure solve: gaussian elimination over Q
        A = [[Fraction(basis[j][r]) for j in range(ncols)] + [Fraction(targ[r])]
             for r in range(len(targ))]
        sol = solve_exact(A, ncols)
        assert sol is not None, (p, ch["id"])
        assert all(x.denominator == 1 and x >= 0 for x in sol), \
            (p, ch["id"], sol)


def solve_exact(A, ncols):
    """Solve an overdetermined consistent system; returns unique solution or
    None."""
    rows = len(A)
    r = 0
    piv = []
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = A[r][c]
        A[r] = [x / inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
    if len(piv) != ncols:
        return None
    for i in range(r, rows):
        if A[i][ncols] != 0:
            return None
    return [A[i][ncols] for i in range(ncols)]


def build():
    with open(ORD) as f:
        od = json.load(f)
    cs = class_summary()
    rng = random.Random(424242)
    partial = OUT + ".partial"
    out = {}
    if os.path.exists(partial):
        with open(partial) as f:
            out = json.load(f)
    for p in PRIMES:
        if str(p) in out:
            print(f"p = {p} (cached)", flush=True)
            continue
        print(f"p = {p}", flush=True)
        out[str(p)] = compute_prime(p, cs, od["ordinary"], rng)
        degs = [c["degree"] for c in out[str(p)]["characters"]]
        print(f"  degrees: {degs}", flush=True)
        with open(partial, "w") as f:
            json.dump(out, f, indent=1)
    with open(OUT, "w") as f:
        json.dump(out, f, indent=1)
    os.remove(partial)
    print("wrote", OUT)


if __name__ == "__main__":
    build()
