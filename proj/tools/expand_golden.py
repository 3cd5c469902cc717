#!/usr/bin/env python3
"""Expand the published factored MoM polynomials into exact coefficient lists.

Writes data/golden_table.json in the polynomial JSON format used by the
library and CLI: ascending coefficients as canonical "p/q" strings.
"""
import json
import sys
from pathlib import Path

import sympy as sp

N = sp.symbols("N")

FACTORED = {
    ("sp", 1, 1): sp.Rational(1, 2) * (N + 1) * (N + 2),
    ("sp", 1, 2): sp.Rational(1, 181440) * (N + 1) * (N + 2) * (N + 3) * (N + 4) * (2 * N + 5)
    * (23 * N**4 + 230 * N**3 + 905 * N**2 + 1650 * N + 1512),
    ("sp", 1, 3): sp.Rational(1, 405483668029440000)
    * (N + 1) * (N + 2) * (N + 3) * (N + 4) * (N + 5) * (N + 6)
    * (10253349 * N**14 + 502414101 * N**13 + 11401640999 * N**12 + 158831139621 * N**11
       + 1517607151837 * N**10 + 10524657547803 * N**9 + 54662663279397 * N**8
       + 216189375784263 * N**7 + 655178814761674 * N**6 + 1517469287314596 * N**5
       + 2654161159219304 * N**4 + 3424171976788416 * N**3 + 3125457664755840 * N**2
       + 1856618315596800 * N + 563171761152000),
    ("sp", 2, 1): sp.Rational(1, 10080) * (N + 1) * (N + 2) * (N + 3) * (N + 4)
    * (3 * N**4 + 30 * N**3 + 127 * N**2 + 260 * N + 420),
    ("sp", 3, 1): sp.Rational(1, 133382785536000)
    * (N + 1) * (N + 2) * (N + 3) * (N + 4) * (N + 5) * (N + 6)
    * (5810 * N**12 + 244020 * N**11 + 4746259 * N**10 + 56513415 * N**9
       + 459233580 * N**8 + 2688408450 * N**7 + 11665223647 * N**6 + 38004428175 * N**5
       + 93222284960 * N**4 + 171600705780 * N**3 + 236485094544 * N**2
       + 239758263360 * N + 185253868800),
    ("so", 1, 1): 2 * (N + 1),
    ("so", 1, 2): sp.Rational(1, 60) * (N + 1) * (N + 2) * (2 * N + 3) * (13 * N**2 + 39 * N + 20),
    ("so", 1, 3): sp.Rational(1, 43589145600) * (N + 1) * (N + 2) * (N + 3) * (N + 4)
    * (677127 * N**10 + 16928175 * N**9 + 188303800 * N**8 + 1226849750 * N**7
       + 5186281891 * N**6 + 14881334615 * N**5 + 29392642150 * N**4 + 39443286500 * N**3
       + 34230199032 * N**2 + 17098220160 * N + 3632428800),
    ("so", 2, 1): sp.Rational(1, 2) * (N + 1) ** 2 * (N + 2) ** 2,
    ("so", 3, 1): sp.Rational(1, 1360800) * (N + 1) * (N + 2) ** 2 * (N + 3) ** 2 * (N + 4)
    * (N**2 + 5 * N + 9) * (31 * N**4 + 310 * N**3 + 1163 * N**2 + 1940 * N + 2100),
}


def entry(group, k, beta, expr):
    poly = sp.Poly(sp.expand(expr), N)
    coeffs = list(reversed(poly.all_coeffs()))
    return {
        "group": group,
        "k": k,
        "beta": beta,
        "degree": poly.degree(),
        "coefficients": [str(sp.Rational(c)) for c in coeffs],
    }


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "golden_table.json"
    entries = [entry(g, k, b, e) for (g, k, b), e in FACTORED.items()]
    out.write_text(json.dumps({"entries": entries}, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
