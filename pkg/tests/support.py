"""Shared test helpers: random polynomial generators and sympy oracles.

The oracles here are intentionally independent of the package code paths
they check: gcds come from sympy's factorization, quotient dimensions from
a Groebner basis, determinants from a direct 2x2 expansion.
"""

from fractions import Fraction
from random import Random

import sympy

from bidisk.poly import Poly2

X, Y = sympy.symbols("z1 z2")


def rand_coeff(rng: Random) -> Fraction:
    num = rng.randint(-6, 6)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def rand_poly(rng: Random, max_deg: int, max_terms: int = 5, nonzero: bool = False) -> Poly2:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, max_deg)
        j = rng.randint(0, max_deg - i)
        terms[(i, j)] = rand_coeff(rng)
    p = Poly2(terms)
    if nonzero and p.is_zero():
        return Poly2.monomial(rng.randint(0, max_deg), 0, rng.randint(1, 4))
    return p


def to_sympy(p: Poly2):
    expr = sympy.Integer(0)
    for (i, j), c in p.terms_desc():
        expr += sympy.Rational(c.numerator, c.denominator) * X**i * Y**j
    return sympy.expand(expr)


def from_sympy(expr) -> Poly2:
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    terms = {}
    for (i, j), c in poly.terms():
        terms[(i, j)] = Fraction(c.p, c.q)
    return Poly2(terms)


def factor_multiset(p: Poly2):
    """Monic irreducible factors of p over Q with multiplicities."""
    _, factors = sympy.factor_list(to_sympy(p), X, Y)
    out = {}
    for base, mult in factors:
        monic = sympy.expand(base / sympy.LC(sympy.Poly(base, X, Y)))
        key = sympy.srepr(monic)
        out[key] = (monic, out.get(key, (None, 0))[1] + mult)
    return out


def oracle_gcd3(a: Poly2, b: Poly2, c: Poly2) -> Poly2:
    """Gcd by factoring each nonzero input and intersecting the factor
    multisets, the long way round."""
    multisets = [factor_multiset(p) for p in (a, b, c) if not p.is_zero()]
    common = multisets[0]
    for other in multisets[1:]:
        common = {
            k: (expr, min(mult, other[k][1]))
            for k, (expr, mult) in common.items()
            if k in other
        }
    g = sympy.Integer(1)
    for expr, mult in common.values():
        g *= expr**mult
    result = from_sympy(g)
    return result.monic()


def oracle_colength(beta: Poly2, gamma: Poly2):
    """Quotient dimension from a Groebner basis; None if not zero-dimensional."""
    gb = sympy.groebner([to_sympy(beta), to_sympy(gamma)], X, Y, order="grevlex")
    lead = [sympy.Poly(g, X, Y).LM(order="grevlex") for g in gb.exprs]
    lead_exps = [tuple(m.exponents) for m in lead]
    bound_x = bound_y = None
    for (i, j) in lead_exps:
        if j == 0:
            bound_x = i if bound_x is None else min(bound_x, i)
        if i == 0:
            bound_y = j if bound_y is None else min(bound_y, j)
    if bound_x is None or bound_y is None:
        return None
    count = 0
    for i in range(bound_x):
        for j in range(bound_y):
            if not any(i >= a and j >= b for (a, b) in lead_exps):
                count += 1
    return count
