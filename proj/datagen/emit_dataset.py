"""Assemble the final dataset file data/m22.json from the generated
ordinary and Brauer tables."""

import json
import math
import os

HERE = os.path.dirname(__file__)
OUT = os.path.join(HERE, "..", "data", "m22.json")

GROUP = {"name": "M22", "order": 443520, "exponent": 9240}


def enc_value(order, d):
    """Dict {exponent: coeff} -> bare int or {"n": m, "coeffs": {...}}."""
    d = {int(e): int(c) for e, c in d.items() if c}
    if not d:
        return 0
    if set(d) == {0}:
        return d[0]
    return {"n": order, "coeffs": {str(e): c for e, c in sorted(d.items())}}


def main():
    with open(os.path.join(HERE, "ordinary_table.json")) as f:
        od = json.load(f)
    with open(os.path.join(HERE, "brauer_tables.json")) as f:
        bt = json.load(f)

    classes = od["classes"]
    orders = {c["name"]: c["order"] for c in classes}
    cond = {c["name"]: c["order"] for c in classes}

    out = {
        "group": GROUP,
        "classes": classes,
        "power_maps": od["power_maps"],
        "ordinary": [
            {
                "id": f"chi_{i + 1}",
                "degree": ch["degree"],
                "values": [
                    enc_value(cond[c["name"]], v)
                    for c, v in zip(classes, ch["values"])
                ],
            }
            for i, ch in enumerate(od["ordinary"])
        ],
        "brauer": {},
    }

    for p, tab in sorted(bt.items(), key=lambda kv: int(kv[0])):
        out["brauer"][p] = {
            "classes": tab["classes"],
            "characters": [
                {
                    "id": f"chi_{i + 1}",
                    "degree": ch["degree"],
                    "values": [
                        enc_value(orders[name], v)
                        for name, v in zip(tab["classes"], ch["values"])
                    ],
                }
                for i, ch in enumerate(tab["characters"])
            ],
        }

    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as f:
        json.dump(out, f, indent=1)
    print("wrote", OUT)


if __name__ == "__main__":
    main()
