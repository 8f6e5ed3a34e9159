"""Exact polynomial layer: gcds, square roots, substitution, colength,
the literal syntax, and the quadratic scalar extension."""

from fractions import Fraction
from random import Random

import pytest

from bidisk.poly import (
    DegenerateInputError,
    ExtPoly2,
    Poly2,
    PolyParseError,
    SqrtExt,
    Z1,
    Z2,
    colength,
    format_poly,
    gcd3,
    parse_poly,
    poly_gcd,
    poly_sqrt,
    rational_sqrt,
    substitute,
)
from support import oracle_colength, oracle_gcd3, rand_poly


# ---------------------------------------------------------------------------
# basic ring structure


def test_zero_and_constant_handling():
    assert Poly2.zero().is_zero()
    assert Poly2.constant(Fraction(3, 2)).constant_value() == Fraction(3, 2)
    assert (Z1 - Z1).is_zero()
    assert Poly2({(1, 0): Fraction(0)}).is_zero()


def test_arithmetic_agrees_with_evaluation():
    rng = Random(7)
    for _ in range(50):
        p = rand_poly(rng, 4)
        q = rand_poly(rng, 4)
        x, y = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3), 2)
        assert (p + q).evaluate(x, y) == p.evaluate(x, y) + q.evaluate(x, y)
        assert (p * q).evaluate(x, y) == p.evaluate(x, y) * q.evaluate(x, y)
        assert (p - q).evaluate(x, y) == p.evaluate(x, y) - q.evaluate(x, y)


def test_exact_division_roundtrip():
    rng = Random(11)
    for _ in range(40):
        p = rand_poly(rng, 3, nonzero=True)
        q = rand_poly(rng, 3, nonzero=True)
        assert (p * q).exact_div(q) == p
    assert (Z1 * Z2 + 1).exact_div(Z1) is None


def test_leading_term_order_is_graded_lex():
    p = Z1 * Z2 + Z2**2 + Z1  # degree 2 terms: z1*z2 and z2^2; z1*z2 wins on z1 exponent
    assert p.leading_monomial() == (1, 1)
    assert (Z2**2 + Z1).leading_monomial() == (0, 2)


# ---------------------------------------------------------------------------
# gcd


def test_gcd3_spec_cases():
    assert gcd3(Z1 * Z2, -(Z1**2), Z2**2) == Poly2.one()
    assert gcd3(Z1, Z1**2, Z1 * Z2) == Z1
    assert gcd3(Poly2.constant(5), Poly2.zero(), Poly2.zero()) == Poly2.one()


def test_gcd3_all_zero_rejected():
    with pytest.raises(DegenerateInputError):
        gcd3(Poly2.zero(), Poly2.zero(), Poly2.zero())


def test_gcd3_divides_inputs_and_matches_factoring_oracle():
    rng = Random(23)
    for _ in range(40):
        delta = rand_poly(rng, 2, nonzero=True)
        triple = [delta * rand_poly(rng, 2, nonzero=True) for _ in range(3)]
        g = gcd3(*triple)
        for p in triple:
            assert p.exact_div(g) is not None
        assert g == oracle_gcd3(*triple)
        assert g.leading_coefficient() == 1


def test_gcd_pairwise_random_against_oracle():
    rng = Random(29)
    for _ in range(30):
        f = rand_poly(rng, 3, nonzero=True)
        g = rand_poly(rng, 3, nonzero=True)
        ours = poly_gcd(f, g)
        assert f.exact_div(ours) is not None
        assert g.exact_div(ours) is not None
        assert ours == oracle_gcd3(f, g, f)


def test_gcd_with_univariate_and_content():
    # a pure-z1 input must see only the z1 content of the other
    f = Z1**2
    g = Z1 * (Z2 + 1) * (Z2 - Z1)
    assert poly_gcd(f, g) == Z1


# ---------------------------------------------------------------------------
# square roots


def test_poly_sqrt_spec_cases():
    assert poly_sqrt(Z1**2) == Z1
    assert poly_sqrt(Z1**2 + 2 * Z1 * Z2 + Z2**2) == Z1 + Z2
    assert poly_sqrt(Z1 * Z2) is None
    assert poly_sqrt(Poly2.zero()) == Poly2.zero()
    assert poly_sqrt(Poly2.constant(Fraction(9, 4))) == Poly2.constant(Fraction(3, 2))
    assert poly_sqrt(Poly2.constant(2)) is None
    assert poly_sqrt(-(Z1**2)) is None


def test_poly_sqrt_of_squares_200_random():
    rng = Random(41)
    for _ in range(200):
        p = rand_poly(rng, 3, nonzero=True)  # square has degree up to 6
        q = poly_sqrt(p * p)
        expected = p if p.leading_coefficient() > 0 else -p
        assert q == expected


def test_poly_sqrt_rejects_non_squares():
    rng = Random(43)
    rejected = 0
    for _ in range(100):
        p = rand_poly(rng, 4, nonzero=True)
        square = poly_sqrt(p)
        if square is None:
            rejected += 1
        else:
            assert square * square == p
    assert rejected > 50  # random polynomials are rarely perfect squares


# ---------------------------------------------------------------------------
# substitution


def test_substitute_spec_cases():
    assert substitute(Z2, Z1, Z1 * Z2) == Z1 * Z2
    p = Z1**2 + Z2
    assert substitute(p, Z1, Z2) == p
    assert substitute(Z1 * Z2, Z1 + Z2, Z1 - Z2) == Z1**2 - Z2**2


def test_substitute_is_ring_homomorphism():
    rng = Random(47)
    for _ in range(30):
        p = rand_poly(rng, 3)
        q = rand_poly(rng, 3)
        e1 = rand_poly(rng, 2)
        e2 = rand_poly(rng, 2)
        assert substitute(p * q, e1, e2) == substitute(p, e1, e2) * substitute(q, e1, e2)
        assert substitute(p + q, e1, e2) == substitute(p, e1, e2) + substitute(q, e1, e2)


def test_substitute_degree_bound():
    rng = Random(53)
    for _ in range(20):
        p = rand_poly(rng, 3, nonzero=True)
        e1 = rand_poly(rng, 2, nonzero=True)
        e2 = rand_poly(rng, 2, nonzero=True)
        out = substitute(p, e1, e2)
        bound = p.total_degree() * max(e1.total_degree(), e2.total_degree())
        assert out.total_degree() <= max(bound, 0)


# ---------------------------------------------------------------------------
# colength


def test_colength_spec_cases():
    assert colength(Z1, Z2) == 1
    assert colength(Z1**2, Z2) == 2
    assert colength(Z1, Z1) is None
    assert colength(Poly2.zero(), Poly2.one()) == 0
    assert colength(Poly2.zero(), Z2) is None
    with pytest.raises(DegenerateInputError):
        colength(Poly2.zero(), Poly2.zero())


def test_colength_bezout_on_monomials():
    for a in range(1, 5):
        for b in range(1, 5):
            assert colength(Z1**a, Z2**b) == a * b


def test_colength_with_intersection_at_infinity():
    # z1*z2 + 1 and z1^2 + z2 meet once at infinity: affine answer is 3, not 4
    beta = Z1 * Z2 + 1
    gamma = Z1**2 + Z2
    assert colength(beta, gamma) == 3
    assert oracle_colength(beta, gamma) == 3


def test_colength_random_against_groebner_oracle():
    rng = Random(59)
    checked = 0
    while checked < 25:
        beta = rand_poly(rng, 2, max_terms=3, nonzero=True)
        gamma = rand_poly(rng, 2, max_terms=3, nonzero=True)
        if beta.is_constant() or gamma.is_constant():
            continue
        assert colength(beta, gamma) == oracle_colength(beta, gamma)
        checked += 1


def test_colength_transverse_lines_through_shifted_point():
    assert colength(Z1 - 1, Z2 + 2) == 1
    assert colength((Z1 - 1) * (Z1 + 1), Z2) == 2


# ---------------------------------------------------------------------------
# literal syntax


def test_parse_print_round_trip_fixed():
    cases = [
        "0",
        "1",
        "-1",
        "z1",
        "-z1 + z2",
        "3/2*z1^2*z2 - z1 + 5",
        "z1^3 - 2*z1*z2 + 7/3",
    ]
    for text in cases:
        p = parse_poly(text)
        assert format_poly(p) == text
        assert parse_poly(format_poly(p)) == p


def test_parse_is_whitespace_insensitive():
    assert parse_poly(" 3/2 * z1 ^ 2 * z2-z1+5 ") == parse_poly("3/2*z1^2*z2 - z1 + 5")


def test_parse_random_round_trip():
    rng = Random(61)
    for _ in range(60):
        p = rand_poly(rng, 5)
        assert parse_poly(format_poly(p)) == p


def test_parse_errors_carry_position():
    with pytest.raises(PolyParseError) as info:
        parse_poly("z1 + $")
    assert info.value.pos == 5
    with pytest.raises(PolyParseError):
        parse_poly("")
    with pytest.raises(PolyParseError):
        parse_poly("z1 z2")
    with pytest.raises(PolyParseError):
        parse_poly("1/0")
    with pytest.raises(PolyParseError):
        parse_poly("z1^")


# ---------------------------------------------------------------------------
# rational square roots and the quadratic extension


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == 0
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None


def test_sqrt_ext_arithmetic():
    d = Fraction(2)
    a = SqrtExt(Fraction(1), Fraction(1), d)   # 1 + sqrt(2)
    b = SqrtExt(Fraction(1), Fraction(-1), d)  # 1 - sqrt(2)
    assert a * b == SqrtExt(Fraction(-1), Fraction(0), d)
    assert a + b == SqrtExt(Fraction(2), Fraction(0), d)
    assert (a / a) == SqrtExt(Fraction(1), Fraction(0), d)
    assert a.square() == SqrtExt(Fraction(3), Fraction(2), d)


def test_sqrt_ext_sqrt_of():
    c = SqrtExt.sqrt_of(Fraction(9))
    assert c == SqrtExt(Fraction(3), Fraction(0), Fraction(9))
    i = SqrtExt.sqrt_of(Fraction(-1))
    assert i.square() == SqrtExt(Fraction(-1), Fraction(0), Fraction(-1))
    assert i.disc == Fraction(-1)


def test_sqrt_ext_field_closure_random():
    rng = Random(67)
    d = Fraction(-7)
    for _ in range(50):
        a = SqrtExt(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)), d)
        b = SqrtExt(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)), d)
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a * b) / b == a


def test_sqrt_ext_rejects_mixed_extensions():
    a = SqrtExt(Fraction(0), Fraction(1), Fraction(2))
    b = SqrtExt(Fraction(0), Fraction(1), Fraction(3))
    with pytest.raises(ValueError):
        a * b


def test_ext_poly_arithmetic():
    d = Fraction(-1)
    v = ExtPoly2(Z1, Poly2.one(), d)  # z1 + sqrt(-1)
    w = ExtPoly2(Z1, -Poly2.one(), d)
    prod = v * w
    assert prod == ExtPoly2.from_poly(Z1**2 + 1, d)
    assert v * SqrtExt(Fraction(0), Fraction(1), d) == ExtPoly2(-Poly2.one(), Z1, d)
