"""Regenerate src/multisym/data/appendix/*.json from the ASCII transcriptions.

The transcriptions in tools/appendix/ are hand-converted from the printed
worked examples (n = 2).  Expansion is done by sympy, so the golden files do
not depend on multisym's own arithmetic.

    python tools/make_goldens.py [--check]
"""

import argparse
import json
import sys
from pathlib import Path

import sympy

HERE = Path(__file__).resolve().parent
OUT = HERE.parent / "src" / "multisym" / "data" / "appendix"

# name -> (m, n, k, variables in flat order)
GOLDENS = {
    "van11": (1, 2, 1, "X1 Y11 Y12"),
    "spoly11": (1, 2, 1, "X1 Y11 Y12"),
    "van21": (2, 2, 1, "X1 X2 Y11 Y12 Y21 Y22"),
    "spoly21": (2, 2, 1, "X1 X2 Y11 Y12 Y21 Y22"),
    "van12": (1, 2, 2, "X1 Y11 Y12 Z111 Z112 Z121 Z122"),
    "spoly12": (1, 2, 2, "X1 Y11 Y12 Z111 Z112 Z121 Z122"),
}


def render(name):
    m, n, k, names = GOLDENS[name]
    gens = sympy.symbols(names)
    expr = sympy.sympify((HERE / "appendix" / f"{name}.txt").read_text(), locals={str(g): g for g in gens})
    poly = sympy.Poly(sympy.expand(expr), *gens)
    terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), tuple(t[0])), reverse=True)
    doc = {
        "context": {"m": m, "n": n, "k": k},
        "terms": [{"coeff": str(int(c)), "exp": list(e)} for e, c in terms],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    OUT.mkdir(parents=True, exist_ok=True)
    stale = []
    for name in GOLDENS:
        text = render(name)
        path = OUT / f"{name}.json"
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
    if stale:
        print("stale golden files:", ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
