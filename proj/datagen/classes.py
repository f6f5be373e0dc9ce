"""Conjugacy classes, class labels and power maps for M22."""

import json
import os

from group import bfs_group, m22_generators, perm_inv, perm_mul

CACHE = os.path.join(os.path.dirname(__file__), "m22_gens.json")


def generators():
    if os.path.exists(CACHE):
        with open(CACHE) as f:
            return [tuple(g) for g in json.load(f)]
    gens = m22_generators()
    with open(CACHE, "w") as f:
        json.dump([list(g) for g in gens], f)
    return gens


def perm_order(p):
    n = len(p)
    seen = [False] * n
    import math
    o = 1
    for i in range(n):
        if not seen[i]:
            l = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                l += 1
            o = o * l // math.gcd(o, l)
    return o


def perm_pow(p, e):
    out = tuple(range(len(p)))
    base = p
    while e:
        if e & 1:
            out = perm_mul(base, out)
        base = perm_mul(base, base)
        e >>= 1
    return out


class GroupData:
    """Enumerated M22 with conjugacy class structure.

    Attributes:
      gens: generator permutations
      elems: all group elements
      index: element -> position in elems
      trace: BFS parent links (for expressing elements as generator words)
      class_of: position -> class id
      classes: list of dicts {name, order, size, rep} in table order
      power_maps: prime -> list of class ids
    """

    def __init__(self):
        self.gens = generators()
        self.elems, self.index, self.trace = bfs_group(self.gens)
        assert len(self.elems) == 443520
        self._compute_classes()
        self._name_classes()
        self._power_maps()

    def _compute_classes(self):
        n = len(self.elems)
        class_of = [-1] * n
        gens_with_inv = [(g, perm_inv(g)) for g in self.gens]
        raw = []  # one representative position per class, discovery order
        for start in range(n):
            if class_of[start] != -1:
                continue
            cid = len(raw)
            raw.append(start)
            class_of[start] = cid
            frontier = [self.elems[start]]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in gens_with_inv:
                        y = perm_mul(g, perm_mul(x, gi))
                        yi = self.index[y]
                        if class_of[yi] == -1:
                            class_of[yi] = cid
                            nxt.append(y)
                frontier = nxt
        self.class_of = class_of
        self._raw_reps = raw
        assert len(raw) == 12

    def _name_classes(self):
        sizes = {}
        for cid in self.class_of:
            sizes[cid] = sizes.get(cid, 0) + 1
        info = []
        for cid, pos in enumerate(self._raw_reps):
            rep = self.elems[pos]
            info.append({"raw": cid, "order": perm_order(rep),
                         "size": sizes[cid], "rep": rep})
        # table order: ascending element order, then descending centralizer
        # (i.e. ascending class size); pairs like 7a/7b resolved below.
        info.sort(key=lambda c: (c["order"], c["size"]))
        # power-consistent representatives for the a/b pairs: the partner
        # class is hit by an explicit power of the chosen representative
        by_order = {}
        for c in info:
            by_order.setdefault(c["order"], []).append(c)
        for o, group_cs in by_order.items():
            if len(group_cs) == 1:
                group_cs[0]["name"] = f"{o}a"
            elif o == 4:
                # distinguished by class size (13860 vs 27720)
                group_cs[0]["name"], group_cs[1]["name"] = "4a", "4b"
            else:
                # order 7: squares stay, cubes swap; order 11: squares swap
                e = 3 if o == 7 else 2
                a = group_cs[0]
                b_rep = perm_pow(a["rep"], e)
                b_raw = self.class_of[self.index[b_rep]]
                assert b_raw != a["raw"]
                a["name"] = f"{o}a"
                partner = next(c for c in group_cs if c["raw"] == b_raw)
                partner["name"] = f"{o}b"
                partner["rep"] = b_rep
        info.sort(key=lambda c: (c["order"], c["name"]))
        self.classes = info
        self.table_of_raw = {c["raw"]: i for i, c in enumerate(info)}

    def class_id(self, perm):
        """Table-order class id of a permutation."""
        return self.table_of_raw[self.class_of[self.index[perm]]]

    def _power_maps(self):
        self.power_maps = {}
        for p in (2, 3, 5, 7, 11):
            self.power_maps[p] = [self.class_id(perm_pow(c["rep"], p))
                                  for c in self.classes]

    def word_of(self, perm):
        """Express an element as a generator word: perm = gens[w0] o gens[w1]
        o ... o gens[wk] as function composition."""
        pos = self.index[perm]
        word = []
        while self.trace[pos] is not None:
            parent, gi = self.trace[pos]
            word.append(gi)
            pos = parent
        return word


SUMMARY = os.path.join(os.path.dirname(__file__), "m22_classes.json")


def class_summary():
    """Class data with generator words for representatives, cached so later
    stages avoid re-enumerating the group."""
    if os.path.exists(SUMMARY):
        with open(SUMMARY) as f:
            return json.load(f)
    gd = GroupData()
    data = {
        "classes": [{"name": c["name"], "order": c["order"],
                     "size": c["size"], "word": gd.word_of(c["rep"])}
                    for c in gd.classes],
        "power_maps": {str(p): m for p, m in gd.power_maps.items()},
    }
    with open(SUMMARY, "w") as f:
        json.dump(data, f)
    return data


if __name__ == "__main__":
    gd = GroupData()
    for c in gd.classes:
        print(c["name"], c["order"], c["size"])
    print("power maps:")
    for p, m in gd.power_maps.items():
        print(p, [gd.classes[i]["name"] for i in m])
    # sanity: word reconstruction
    from functools import reduce
    for c in gd.classes:
        w = gd.word_of(c["rep"])
        acc = tuple(range(22))
        for gi in reversed(w):
            acc = perm_mul(gd.gens[gi], acc)
        assert acc == c["rep"]
    print("word reconstruction ok")
