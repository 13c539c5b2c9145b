"""Independent reference values for the C++ test-suite.

Everything here is recomputed from first principles with sympy / fractions
and written to oracle_values.json, which the C++ tests read. Re-run only when
deliberately refreezing:

    python3 tests/oracles/gen_oracles.py > tests/oracles/oracle_values.json
"""

import json
import math
from fractions import Fraction

import sympy as sp


def inter(g, s):
    # theta^s x^{d-s} = s! C(g, s)
    return 0 if s > g else math.factorial(s) * math.comb(g, s)


def rk(g, d, m):
    return min(m, d - m, g)


def gram(g, d, m):
    n = rk(g, d, m) + 1
    return sp.Matrix(n, n, lambda i, j: inter(g, i + j))


def pairings(g, d, m, poly):
    # poly: {theta_exp: coeff}, codim m; pair with x^{d-m-j} theta^j
    n = rk(g, d, m) + 1
    return sp.Matrix([sum(sp.Rational(c) * inter(g, b + j) for b, c in poly.items() if b + j <= d)
                      for j in range(n)])


def normal_form(g, d, m, poly):
    poly = {b: c for b, c in poly.items() if b <= g}
    return list(gram(g, d, m).LUsolve(pairings(g, d, m, poly)))


def frac(q):
    q = sp.Rational(q)
    return f"{q.p}" if q.q == 1 else f"{q.p}/{q.q}"


def gbin(upper, k):
    out = Fraction(1)
    for t in range(k):
        out *= Fraction(upper - t)
    return out / math.factorial(k)


def poly_json(poly):
    return {str(b): str(Fraction(c)) for b, c in sorted(poly.items()) if c != 0}


def coords_of_monomials(g, d, m, exps):
    return [normal_form(g, d, m, {b: 1}) for b in exps]


def theta_codim(g, d, m, i):
    exps = [b for b in range(i, min(m, g) + 1)]
    dim = rk(g, d, m) + 1
    if not exps:
        return dim
    mat = sp.Matrix(coords_of_monomials(g, d, m, exps))
    return dim - mat.rank()


def theta_piece_rows(g, d, m, i):
    exps = [b for b in range(max(i, 0), min(m, g) + 1)]
    if not exps:
        return sp.zeros(0, rk(g, d, m) + 1)
    return sp.Matrix(coords_of_monomials(g, d, m, exps))


def span_equal(a, b):
    if a.rows == 0 or b.rows == 0:
        return (a.rank() if a.rows else 0) == (b.rank() if b.rows else 0)
    return a.rank() == b.rank() == a.col_join(b).rank()


def perp(g, d, m, i):
    s = theta_piece_rows(g, d, m, i)
    n = rk(g, d, m) + 1
    if s.rows == 0:
        return sp.eye(n)
    ker = (s * gram(g, d, m)).nullspace()
    if not ker:
        return sp.zeros(0, n)
    return sp.Matrix.hstack(*ker).T


def multiply(p, q):
    out = {}
    for b1, c1 in p.items():
        for b2, c2 in q.items():
            out[b1 + b2] = out.get(b1 + b2, 0) + c1 * c2
    return out


def is_zero(g, d, m, poly):
    return all(v == 0 for v in pairings(g, d, m, {b: c for b, c in poly.items() if b <= g}))


def contractibility(g, d, m, poly):
    k = d - m
    for j in range(0, k + 1):
        if is_zero(g, d, m + j, multiply(poly, {j: 1})):
            return k + 1 - j
    return 0


# --- closed-form families (theta exponent -> coefficient) -------------------

def cdr(g, d, r):
    k = g - d + r
    codim = r * k
    pre = Fraction(1)
    for i in range(r + 1):
        pre *= Fraction(math.factorial(i), math.factorial(k + i - 1))
    out = {}
    for a in range(r + 1):
        c = Fraction((-1) ** a * math.factorial(k + a - 1), math.factorial(a) * math.factorial(r - a))
        out[codim - a] = pre * c
    return codim, out


def series(upper, top, shift):
    # sum_k C(upper, k) x^{k+shift} theta^{top-k}/(top-k)!  -> codim top+shift
    return top + shift, {top - k: gbin(upper, k) / math.factorial(top - k) for k in range(top + 1)}


def main():
    out = {}

    out["intersection"] = [{"g": g, "d": d, "s": s, "value": str(inter(g, s))}
                           for g in range(0, 11) for d in range(1, 15) for s in range(0, d + 1)]

    out["gram"] = [{"g": g, "d": d, "m": m, "rows": [[str(v) for v in gram(g, d, m).row(i)]
                                                     for i in range(rk(g, d, m) + 1)],
                    "det": str(gram(g, d, m).det())}
                   for g in range(0, 6) for d in range(1, 9) for m in range(0, d + 1)]

    nf = []
    for g in range(0, 5):
        for d in range(1, 8):
            for m in range(0, d + 1):
                for b in range(0, min(m, g) + 1):
                    nf.append({"g": g, "d": d, "m": m, "theta": b,
                               "coords": [frac(c) for c in normal_form(g, d, m, {b: 1})]})
    out["monomial_normal_forms"] = nf

    codims = []
    for g in range(0, 6):
        for d in range(1, 11):
            for m in range(0, d + 1):
                for i in range(0, g + 2):
                    p = perp(g, d, m, i)
                    q = theta_piece_rows(g, d, d - m, g + 1 - i)
                    codims.append({"g": g, "d": d, "m": m, "i": i,
                                   "codim": theta_codim(g, d, m, i),
                                   "perp_dim": p.rows,
                                   "perp_equal": bool(span_equal(p, q))})
    out["filtration"] = codims

    classes = []
    for g in range(2, 7):
        for d in range(1, 2 * g - 1):
            for r in range(max(1, d - g + 1), d + 1):
                codim, poly = cdr(g, d, r)
                if codim > d:
                    continue
                classes.append({"family": "cdr", "g": g, "d": d, "r": r, "codim": codim,
                                "terms": poly_json(poly),
                                "contr": contractibility(g, d, codim, {b: c for b, c in poly.items() if b <= g})})
    for g in range(1, 6):
        for d in range(1, 9):
            for l in range(d, d + 3):
                for s in range(0, d + 1):
                    codim, poly = series(l - g - s, d - s, 0)
                    classes.append({"family": "subordinate", "g": g, "d": d, "l": l, "s": s, "codim": codim,
                                    "terms": poly_json(poly)})
    for g in range(2, 7):
        for d in range(g, 2 * g - 1):
            for i in range(0, d - g + 1):
                codim, poly = series(-1, d - g + 1 - i, i)
                classes.append({"family": "upsilon", "g": g, "d": d, "i": i, "codim": codim,
                                "terms": poly_json(poly),
                                "contr": contractibility(g, d, codim, {b: c for b, c in poly.items() if b <= g})})
    out["classes"] = classes

    counts = []
    for g in range(0, 9):
        for r in range(0, g + 1):
            for d in range(0, 2 * g + 2):
                if g - (r + 1) * (g - d + r) != 0:
                    continue
                k = g - d + r
                one = Fraction(math.factorial(g))
                for i in range(1, r + 1):
                    one *= Fraction(math.factorial(i), math.factorial(k + i))
                zero = Fraction(math.factorial(g))
                for i in range(0, r + 1):
                    zero *= Fraction(math.factorial(i), math.factorial(k + i))
                counts.append({"g": g, "r": r, "d": d, "from_one": str(one), "from_zero": str(zero)})
    out["castelnuovo"] = counts

    out["gamma"] = [{"g": g, "r": r, "value": -((-r * g) // (r + 1)) + r}
                    for g in range(0, 12) for r in range(1, 12)]

    json.dump(out, __import__("sys").stdout, indent=1)


if __name__ == "__main__":
    main()
