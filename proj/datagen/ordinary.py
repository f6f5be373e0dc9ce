"""Assemble, label and validate the ordinary character table of M22."""

import json
import math
import os

import cyclo
from classes import GroupData
from dixon import compute_table

OUT = os.path.join(os.path.dirname(__file__), "ordinary_table.json")


def reduced_table(gd, table):
    """Reduce every lifted value into the power basis of Q(zeta_m) with m the
    element order of its class."""
    out = []
    for ch in table:
        vals = []
        for k, c in enumerate(gd.classes):
            m = c["order"]
            vals.append(cyclo.reduce_dict(m, ch["values"][k]))
        out.append({"degree": ch["degree"], "values": vals})
    return out


def sort_key(ch, orders):
    # ties between Galois-conjugate characters are broken by descending
    # Tr(value * zeta^-1) at the first class where they differ, so the
    # variant with the positive mu_1 numerator coefficient sorts first
    flat = []
    for v, m in zip(ch["values"], orders):
        t = -sum(c * cyclo.trace_root(m, e - 1) for e, c in v.items())
        flat.append((t, sorted(v.items())))
    return (ch["degree"], flat)


def check_orthogonality(gd, chars):
    E = 9240
    sizes = [c["size"] for c in gd.classes]
    orders = [c["order"] for c in gd.classes]
    for i, chi in enumerate(chars):
        for j, psi in enumerate(chars):
            if j > i:
                continue
            acc = {}
            for k in range(12):
                prod = cyclo.mul(orders[k], chi["values"][k],
                                 cyclo.conj(orders[k], psi["values"][k]))
                emb = cyclo.embed(orders[k], prod, E)
                for e, c in emb.items():
                    acc[e] = acc.get(e, 0) + sizes[k] * c
            acc = cyclo.reduce_dict(E, acc)
            want = 443520 if i == j else 0
            assert acc == ({0: want} if want else {}), (i, j, acc)


def build():
    gd = GroupData()
    q, raw = compute_table(gd)
    chars = reduced_table(gd, raw)
    orders = [c["order"] for c in gd.classes]
    chars.sort(key=lambda ch: sort_key(ch, orders))
    check_orthogonality(gd, chars)
    # degree list sanity
    degs = [c["degree"] for c in chars]
    assert degs == [1, 21, 45, 45, 55, 99, 154, 210, 231, 280, 280, 385]
    data = {
        "classes": [{"name": c["name"], "order": c["order"], "size": c["size"]}
                    for c in gd.classes],
        "power_maps": {str(p): m for p, m in gd.power_maps.items()},
        "ordinary": [
            {"id": f"chi_{i+1}", "degree": ch["degree"],
             "values": [{str(e): c for e, c in v.items()}
                        for v in ch["values"]]}
            for i, ch in enumerate(chars)
        ],
    }
    with open(OUT, "w") as f:
        json.dump(data, f, indent=1)
    print("wrote", OUT)
    return gd, data


if __name__ == "__main__":
    build()
