#!/usr/bin/env python3
"""Independent reference values for the C++ test suite.

Builds the parabolic word as a plain sympy matrix product (no recurrence),
counts real roots with sympy, and prints a JSON table. The output is frozen
into tools/oracle/frozen.json and tests/oracle_values.hpp (--emit-header);
--check compares a fresh run against the frozen JSON.
"""
import argparse
import json
import math

import sympy as sp

x, t = sp.symbols("x t")


def letter_sign(p, q, m):
    return 1 if ((m * q) // p) % 2 == 0 else -1


def word(p, q, tt):
    n = (p - 1) // 2
    a = sp.Matrix([[tt, 1], [0, 1 / tt]])
    b = sp.Matrix([[tt, 0], [x, 1 / tt]])
    W = sp.eye(2)
    for i in range(1, n + 1):
        e, h = letter_sign(p, q, 2 * i - 1), letter_sign(p, q, 2 * i)
        W = W * (a if e > 0 else a.inv()) * (b if h > 0 else b.inv())
    sigma = sum(letter_sign(p, q, m) for m in range(1, 2 * n + 1))
    return W.applyfunc(sp.expand), sigma


def padd(f, g):
    r = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        r[i] += c
    for i, c in enumerate(g):
        r[i] += c
    return r


def pmul(f, g):
    r = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            r[i + j] += a * b
    return r


def mmul(A, B):
    return [[padd(pmul(A[i][0], B[0][j]), pmul(A[i][1], B[1][j])) for j in range(2)] for i in range(2)]


def parabolic_word(p, q):
    # Integer polynomial matrices in x at t = 1.
    a, a_inv = [[[1], [1]], [[0], [1]]], [[[1], [-1]], [[0], [1]]]
    b, b_inv = [[[1], [0]], [[0, 1], [1]]], [[[1], [0]], [[0, -1], [1]]]
    W = [[[1], [0]], [[0], [1]]]
    for i in range(1, (p - 1) // 2 + 1):
        W = mmul(W, a if letter_sign(p, q, 2 * i - 1) > 0 else a_inv)
        W = mmul(W, b if letter_sign(p, q, 2 * i) > 0 else b_inv)
    return W


def entry(p, q):
    W = parabolic_word(p, q)
    n = (p - 1) // 2
    sigma = sum(letter_sign(p, q, m) for m in range(1, 2 * n + 1))
    coeffs = list(W[0][0])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lam = sp.Poly(list(reversed(coeffs)), x)
    real = lam.count_roots()
    sqf = sp.degree(sp.gcd(lam, lam.diff(x)), x) == 0
    return {"p": p, "q": q, "lambda": coeffs, "sigma": sigma, "real_roots": int(real), "squarefree": bool(sqf)}


def trefoil_psi():
    W, _ = word(3, 1, t)
    phi = sp.expand(W[0, 0] + (1 / t - t) * W[0, 1])
    return str(phi)


FRACTIONS = [(3, 1), (3, -1), (5, 1), (5, 3), (5, -3), (7, 1), (7, 3), (7, -3), (9, 5), (11, 3), (13, 5), (15, 7),
             (69, 29)]


def emit_header(table):
    out = ["// Generated by tools/oracle/riley_oracle.py --emit-header. Do not edit.", "", "#pragma once", "",
           "#include <cstdint>", "#include <string>", "#include <vector>", "", "namespace oracle {", "",
           "struct Knot {", "  std::int64_t p, q;", "  std::vector<std::string> lambda;", "  int sigma;",
           "  int real_roots;", "  bool squarefree;", "};", "", "inline const std::vector<Knot>& knots() {",
           "  static const std::vector<Knot> table = {"]
    for k in table["knots"]:
        coeffs = ", ".join('"%d"' % c for c in k["lambda"])
        out.append("      {%d, %d, {%s}, %d, %d, %s}," % (k["p"], k["q"], coeffs, k["sigma"], k["real_roots"],
                                                       "true" if k["squarefree"] else "false"))
    out += ["  };", "  return table;", "}", "", "}  // namespace oracle", ""]
    return "\n".join(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", help="JSON file with previously frozen values")
    ap.add_argument("--emit-header", action="store_true")
    args = ap.parse_args()
    table = {"knots": [entry(p, q) for p, q in FRACTIONS], "trefoil_phi": trefoil_psi()}
    x6 = 3 - (2 * math.cos(2 * math.pi / 6)) ** 2
    table["trefoil_x6"] = x6
    if args.check:
        with open(args.check) as fh:
            frozen = json.load(fh)
        raise SystemExit(0 if frozen == table else 1)
    if args.emit_header:
        print(emit_header(table), end="")
        return
    print(json.dumps(table, indent=1))


if __name__ == "__main__":
    main()
