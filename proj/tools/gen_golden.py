#!/usr/bin/env python3
"""Regenerates data/golden/*.txt from an independent sympy transcription.

The files hold the expanded coefficients of the diagonal three-term operator
and the expanded numerator/denominator of the telescoping certificate, in the
canonical polynomial text used by qroot::MultiPoly::to_string (graded-lex
descending over the variable order a, q, L, K).

Usage: tools/gen_golden.py [output-dir]   (default: data/golden)
"""
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

a, q, L, K = sp.symbols("a q L K")
VARS = (a, q, L, K)
NAMES = ("a", "q", "L", "K")


def canonical(expr):
    poly = sp.Poly(sp.expand(expr), *VARS)
    if poly.is_zero:
        return "0"
    terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    out = []
    for i, (exps, coeff) in enumerate(terms):
        c = Fraction(int(sp.numer(coeff)), int(sp.denom(coeff)))
        mag = abs(c)
        sign = c < 0
        if i == 0:
            out.append("-" if sign else "")
        else:
            out.append(" - " if sign else " + ")
        out.append(str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}")
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(NAMES, exps) if e)
        if mono:
            out.append(" * " + mono)
    return "".join(out)


def operator():
    c2 = -q * L**2 * (1 + L) * (1 + 4 * L + L**2) * (1 - q * L) ** 3 * (1 - L * a) ** 2 * (1 - q * L * a) ** 2
    octic = (1 + 5 * (1 + q) * L + (5 + 16 * q + 5 * q**2) * L**2 + (1 + q) * (1 - 5 * q + q**2) * L**3
             - 2 * q * (3 + 25 * q + 3 * q**2) * L**4 + q * (1 + q) * (1 - 5 * q + q**2) * L**5
             + q**2 * (5 + 16 * q + 5 * q**2) * L**6 + 5 * q**3 * (1 + q) * L**7 + q**4 * L**8)
    c1 = (1 - q * L**2) * octic * (1 - L * a) ** 2 * (a - q * L) ** 2
    c0 = -q * L**2 * (1 - L) ** 3 * (1 + q * L) * (1 + 4 * q * L + q**2 * L**2) * (a - L) ** 2 * (a - q * L) ** 2
    return c2, c1, c0


def certificate():
    prefactor = q * (1 + L) * (1 + q * L) * (1 - q * L**2) * (a - L) ** 2 * (a - q * L) ** 2 * L**2 * (1 - K) ** 4
    cofactor = (K * (1 + q**3 * L**6) + 4 * K * (1 + q) * (1 + q**2 * L**4) * L
                - (4 * q**2 - K - 13 * q * K - q**2 * K + 4 * K**2) * (1 + q * L**2) * L**2
                - 2 * (q**3 + 7 * q * (q + K**2) + K**2) * L**3)
    return prefactor * cofactor, K * (K - q * L) ** 2 * (K - L) ** 2


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    c2, c1, c0 = operator()
    (out / "lq_operator.txt").write_text(f"c2: {canonical(c2)}\nc1: {canonical(c1)}\nc0: {canonical(c0)}\n")
    num, den = certificate()
    (out / "certificate_s.txt").write_text(f"num: {canonical(num)}\nden: {canonical(den)}\n")


if __name__ == "__main__":
    main()
