"""Slow, obviously-correct reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def laplace_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * laplace_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(n)
        if rows[0][j]
    )


def determinantal_divisors(rows):
    """Invariant factors from gcds of k x k minors."""
    nr, nc = len(rows), len(rows[0])
    out, prev = [], 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                g = gcd(g, laplace_det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def closure_mod1(gens, n):
    """Subgroup of (Q/Z)^n generated by gens, by breadth-first closure."""
    zero = tuple(Fraction(0) for _ in range(n))
    seen = {zero}
    frontier = [zero]
    gens = [tuple(Fraction(x) % 1 for x in g) for g in gens]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % 1 for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def box(n, lo, hi):
    return product(range(lo, hi + 1), repeat=n)


def in_span(basis, v):
    """Integer membership by solving with Fractions (independent of lgdual)."""
    import sympy

    m = sympy.Matrix([[sympy.Rational(str(b[i])) for b in basis] for i in range(len(v))])
    sol = m.solve(sympy.Matrix([sympy.Rational(str(x)) for x in v]))
    return all(x.is_integer for x in sol)
