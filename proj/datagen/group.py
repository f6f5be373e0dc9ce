"""Construction of the Mathieu group M22 as a permutation group on 22 points.

Route: PG(2,4) -> PSL(3,4) acting on the 21 projective points -> extend the
point set by a 22nd point, build the Steiner system S(3,6,22) from lines and
one PSL(3,4)-orbit of hyperovals, then find an automorphism of the design
moving the new point.  The resulting group is verified to have order 443520.
"""

import itertools
from functools import lru_cache

# ---------------------------------------------------------------------------
# GF(4) arithmetic: elements 0,1,2,3 with 2 = w, 3 = w^2, w^2 + w + 1 = 0.

GF4_ADD = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
GF4_INV = [None, 1, 3, 2]


def vec_add(u, v):
    return tuple(GF4_ADD[a][b] for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(GF4_MUL[c][a] for a in u)


def normalize(v):
    """Scale a nonzero vector of GF(4)^3 so its first nonzero entry is 1."""
    for a in v:
        if a:
            c = GF4_INV[a]
            return vec_scale(c, v)
    raise ValueError("zero vector")


def build_projective_plane():
    """Return (points, point_index) for PG(2,4): 21 normalized vectors."""
    pts = []
    for v in itertools.product(range(4), repeat=3):
        if v == (0, 0, 0):
            continue
        n = normalize(v)
        if n not in pts:
            pts.append(n)
    assert len(pts) == 21
    return pts, {p: i for i, p in enumerate(pts)}


def mat_apply(m, v):
    out = []
    for row in m:
        acc = 0
        for a, b in zip(row, v):
            acc = GF4_ADD[acc][GF4_MUL[a][b]]
        out.append(acc)
    return tuple(out)


def matrix_to_perm(m, pts, idx):
    return tuple(idx[normalize(mat_apply(m, p))] for p in pts)


def perm_mul(a, b):
    """(a*b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(b)))


def perm_inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def bfs_group(gens):
    """Enumerate the group generated by gens; returns list of permutations
    plus, for each element, (parent_index, generator_index) for word
    reconstruction (identity has parent None)."""
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    trace = [None]
    seen = {ident: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            e = elems[ei]
            for gi, g in enumerate(gens):
                p = perm_mul(g, e)
                if p not in seen:
                    seen[p] = len(elems)
                    elems.append(p)
                    trace.append((ei, gi))
                    nxt.append(seen[p])
        frontier = nxt
    return elems, seen, trace


def psl34_perms():
    pts, idx = build_projective_plane()
    gens_m = [
        ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 2, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ]
    gens = [matrix_to_perm(m, pts, idx) for m in gens_m]
    return pts, idx, gens


def lines_of_plane(pts, idx):
    lines = set()
    for i, j in itertools.combinations(range(21), 2):
        line = set()
        u, v = pts[i], pts[j]
        for a in range(4):
            line.add(idx[normalize(vec_add(u, vec_scale(a, v)))])
        line.add(idx[normalize(v)])
        lines.add(frozenset(line))
    lines = sorted(lines, key=sorted)
    assert len(lines) == 21 and all(len(l) == 5 for l in lines)
    return lines


def hyperovals(pts, idx, lines):
    """All 6-point sets meeting every line in 0 or 2 points."""
    line_through = {}
    for l in lines:
        for a, b in itertools.combinations(sorted(l), 2):
            line_through[(a, b)] = l

    def collinear(a, b, c):
        return c in line_through[(min(a, b), max(a, b))]

    ovals = set()

    def extend(arc, start):
        if len(arc) == 6:
            ovals.add(frozenset(arc))
            return
        for nxt in range(start, 21):
            ok = True
            for a, b in itertools.combinations(arc, 2):
                if collinear(a, b, nxt):
                    ok = False
                    break
            if ok:
                arc.append(nxt)
                extend(arc, nxt + 1)
                arc.pop()

    extend([], 0)
    assert len(ovals) == 168, len(ovals)
    return ovals


def orbit_of_set(s, gens):
    orb = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                img = frozenset(g[x] for x in t)
                if img not in orb:
                    orb.add(img)
                    nxt.append(img)
        frontier = nxt
    return orb


def steiner_blocks():
    """Blocks of S(3,6,22) on points 0..21 (21 = the added point)."""
    pts, idx, gens = psl34_perms()
    lines = lines_of_plane(pts, idx)
    ovals = hyperovals(pts, idx, lines)
    remaining = set(ovals)
    orbits = []
    while remaining:
        o = orbit_of_set(next(iter(remaining)), gens)
        assert len(o) == 56
        orbits.append(o)
        remaining -= o
    blocks = [frozenset(l | {21}) for l in lines] + sorted(orbits[0], key=sorted)
    assert len(blocks) == 77
    # Steiner property: every 3-subset of the 22 points in exactly one block
    cover = {}
    for b in blocks:
        for t in itertools.combinations(sorted(b), 3):
            assert t not in cover, t
            cover[t] = b
    assert len(cover) == 1540
    return blocks, gens, cover


def find_design_automorphism(blocks, cover, move_point=21):
    """Backtracking search for an automorphism of S(3,6,22) with
    image(move_point) != move_point."""
    blocks_at = [[] for _ in range(22)]
    for b in blocks:
        for x in b:
            blocks_at[x].append(b)
    block_set = set(blocks)

    found = []

    def search(img, used):
        i = len(img)
        if i == 22:
            found.append(tuple(img))
            return len(found) >= 8
        for cand in range(22):
            if cand in used:
                continue
            if i == move_point and cand == move_point:
                continue
            img.append(cand)
            used.add(cand)
            ok = True
            # any block with >=3 assigned points must map into a block
            for b in blocks_at[i]:
                assigned = [img[x] for x in b if x < len(img)]
                if len(assigned) >= 3:
                    t = tuple(sorted(assigned[:3]))
                    tgt = cover.get(t)
                    if tgt is None or not set(assigned) <= tgt:
                        ok = False
                        break
            if ok and search(img, used):
                return True
            img.pop()
            used.discard(cand)
        return False

    search([], set())
    assert found
    for perm in found:
        for b in blocks:
            assert frozenset(perm[x] for x in b) in block_set
    return found


def m22_generators():
    """Generators of M22 itself: the design automorphism group is M22:2, so
    candidate extra generators are filtered by the generated group order."""
    blocks, psl_gens, cover = steiner_blocks()
    ext = [g + (21,) for g in psl_gens]
    autos = find_design_automorphism(blocks, cover)
    # products of two coset representatives fall back into M22 when both are
    # outer, so include them among the candidates
    cands = list(autos)
    for a, b in itertools.combinations(autos, 2):
        for mid in [None] + ext:
            p = perm_mul(a, b) if mid is None else perm_mul(a, perm_mul(mid, b))
            if p[21] != 21:
                cands.append(p)
    for tau in cands:
        gens = ext + [tau]
        elems, _, _ = bfs_group(gens)
        if len(elems) == 443520:
            return gens
    raise RuntimeError("no index-2 candidate found")


if __name__ == "__main__":
    gens = m22_generators()
    elems, seen, trace = bfs_group(gens)
    print("group order:", len(elems))
    assert len(elems) == 443520
