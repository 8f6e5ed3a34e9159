"""Exact arithmetic for local chart computations.

Everything downstream (the tensor calculus, blow-up transforms, colength
bookkeeping) reduces to identities between polynomials in two chart
coordinates z1, z2 with rational coefficients.  This module fixes the
computable coefficient ring once and for all: `fractions.Fraction` scalars
and `Poly2`, a sparse exponent-dict polynomial with a graded-lexicographic
term order (total degree first, then the z1 exponent).  All operations are
exact; nothing here touches floating point.

Beyond ring arithmetic the geometry needs:

* ``poly_gcd`` / ``gcd3``: greatest common divisors, normalized monic in the
  term order, computed with a primitive remainder sequence over Q[z1].
* ``poly_sqrt``: exact polynomial square root, or None when no square root
  exists over Q (the caller decides what partiality means).
* ``substitute``: exact composition p(e1, e2), the workhorse for coordinate
  changes such as the blow-up substitution y = u*x.
* ``colength``: dim_Q of Q[z1,z2]/(f, g) for a zero-dimensional pair, or
  None when the pair shares a nonconstant factor.
* a small literal syntax ("3/2*z1^2*z2 - z1 + 5") that round-trips exactly.

Scalars that live in a quadratic extension Q(sqrt(d)) are covered by
``SqrtExt``, and polynomials with such coefficients by ``ExtPoly2``; both
carry their discriminant along and only combine with matching ones.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

Exponent = tuple[int, int]


class DegenerateInputError(ValueError):
    """Input outside an operation's domain, e.g. a gcd of three zeros."""


class PolyParseError(ValueError):
    """Malformed polynomial literal; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _glex(e: Exponent) -> tuple[int, int]:
    """Graded-lex sort key: total degree first, then z1 exponent."""
    return (e[0] + e[1], e[0])


def rational_sqrt(c: Fraction) -> Optional[Fraction]:
    """Positive rational square root of c, or None if c is not a square."""
    if c < 0:
        return None
    rn = math.isqrt(c.numerator)
    rd = math.isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        return None
    return Fraction(rn, rd)


class Poly2:
    """Sparse polynomial in z1, z2 over Q.

    Terms map exponent pairs (i, j) to nonzero Fraction coefficients; the
    zero polynomial is the empty dict.  Construction strips zero terms, so
    dict equality is exact polynomial equality.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i}, {j})")
                c = Fraction(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean

    # construction helpers

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def one(cls) -> "Poly2":
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def constant(cls, c) -> "Poly2":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def variable(cls, which: int) -> "Poly2":
        if which == 1:
            return cls({(1, 0): Fraction(1)})
        if which == 2:
            return cls({(0, 1): Fraction(1)})
        raise ValueError("variable index must be 1 or 2")

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Poly2":
        return cls({(i, j): Fraction(c)})

    # inspection

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def value_at_origin(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def terms_desc(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order."""
        for e in sorted(self._terms, key=_glex, reverse=True):
            yield e, self._terms[e]

    def leading_monomial(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=_glex)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def monic(self) -> "Poly2":
        """Scale so the graded-lex leading coefficient is 1."""
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    def top_form(self) -> "Poly2":
        """Homogeneous part of top total degree."""
        d = self.total_degree()
        return Poly2({e: c for e, c in self._terms.items() if e[0] + e[1] == d})

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return total

    # ring operations

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "Poly2":
        return Poly2({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = Poly2.__new__(Poly2)
        p._terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.constant(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return (-self) + other

    def __mul__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly2.zero()
            return Poly2({e: k * c for e, k in self._terms.items()})
        if not isinstance(other, Poly2):
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = Poly2.__new__(Poly2)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly2":
        if k < 0:
            raise ValueError("negative power")
        result = Poly2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor: "Poly2") -> Optional["Poly2"]:
        """Exact quotient self/divisor, or None if the division is inexact.

        Leading-term elimination in graded-lex order; since the order is
        multiplicative this terminates and succeeds iff divisor | self.
        """
        if isinstance(divisor, (int, Fraction)):
            divisor = Poly2.constant(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly2.zero()
        d_lead = divisor.leading_monomial()
        d_lc = divisor.leading_coefficient()
        quo = Poly2.zero()
        rem = self
        while not rem.is_zero():
            (a, b) = rem.leading_monomial()
            ti, tj = a - d_lead[0], b - d_lead[1]
            if ti < 0 or tj < 0:
                return None
            t = Poly2.monomial(ti, tj, rem.leading_coefficient() / d_lc)
            quo = quo + t
            rem = rem - t * divisor
        return quo

    def divides(self, other: "Poly2") -> bool:
        return other.exact_div(self) is not None

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly2({format_poly(self)!r})"


Z1 = Poly2.variable(1)
Z2 = Poly2.variable(2)


# ---------------------------------------------------------------------------
# literal syntax


def format_poly(p: Poly2) -> str:
    """Canonical literal: terms in descending graded-lex order."""
    if p.is_zero():
        return "0"
    chunks = []
    for (i, j), c in p.terms_desc():
        mono = []
        if i == 1:
            mono.append("z1")
        elif i > 1:
            mono.append(f"z1^{i}")
        if j == 1:
            mono.append("z2")
        elif j > 1:
            mono.append(f"z2^{j}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(mag)] + mono)
        chunks.append((c < 0, body))
    neg, body = chunks[0]
    out = ("-" if neg else "") + body
    for neg, body in chunks[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TOKEN = re.compile(r"(\d+)|(z1)|(z2)|(\^)|(\*)|(/)|(\+)|(-)")
_NUM, _Z1, _Z2, _POW, _STAR, _SLASH, _PLUS, _MINUS = range(1, 9)


def _tokenize(text: str) -> list[tuple[Optional[int], str, int]]:
    toks = []
    pos, n = 0, len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        toks.append((m.lastindex, m.group(0), pos))
        pos = m.end()
    toks.append((None, "", n))
    return toks


def parse_poly(text: str) -> Poly2:
    """Parse the literal syntax: signed sum of terms c*z1^i*z2^j.

    Whitespace-insensitive; coefficients are integers or fractions p/q.
    Raises PolyParseError (with position) on malformed input.
    """
    toks = _tokenize(text)
    k = 0

    def peek():
        return toks[k]

    def take():
        nonlocal k
        t = toks[k]
        k += 1
        return t

    def parse_factor() -> tuple[Fraction, int, int]:
        kind, text_, pos = take()
        if kind == _NUM:
            num = int(text_)
            if peek()[0] == _SLASH:
                take()
                dk, dt, dp = take()
                if dk != _NUM:
                    raise PolyParseError("expected denominator after '/'", dp)
                den = int(dt)
                if den == 0:
                    raise PolyParseError("zero denominator", dp)
                return Fraction(num, den), 0, 0
            return Fraction(num), 0, 0
        if kind in (_Z1, _Z2):
            exp = 1
            if peek()[0] == _POW:
                take()
                ek, et, ep = take()
                if ek != _NUM:
                    raise PolyParseError("expected integer exponent after '^'", ep)
                exp = int(et)
            return (Fraction(1), exp, 0) if kind == _Z1 else (Fraction(1), 0, exp)
        raise PolyParseError("expected a coefficient or a variable", pos)

    def parse_term() -> Poly2:
        coeff, i, j = parse_factor()
        while peek()[0] == _STAR:
            take()
            c2, i2, j2 = parse_factor()
            coeff, i, j = coeff * c2, i + i2, j + j2
        return Poly2.monomial(i, j, coeff)

    result = Poly2.zero()
    sign = 1
    kind, _, pos = peek()
    if kind in (_PLUS, _MINUS):
        sign = -1 if kind == _MINUS else 1
        take()
    if peek()[0] is None:
        raise PolyParseError("empty polynomial", pos)
    result = result + sign * parse_term()
    while True:
        kind, text_, pos = peek()
        if kind is None:
            return result
        if kind == _PLUS:
            take()
            result = result + parse_term()
        elif kind == _MINUS:
            take()
            result = result - parse_term()
        else:
            raise PolyParseError(f"expected '+' or '-' before {text_!r}", pos)


# ---------------------------------------------------------------------------
# gcd via a primitive remainder sequence over Q[z1]
#
# A Poly2 is viewed recursively as an element of Q[z1][z2]: a list of dense
# univariate coefficient lists, indexed by the z2 power.

_Uni = list  # dense list of Fraction, no trailing zeros, [] is zero


def _u_trim(a: _Uni) -> _Uni:
    while a and not a[-1]:
        a.pop()
    return a

def _u_add(a: _Uni, b: _Uni) -> _Uni:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _u_trim(out)

def _u_scale(a: _Uni, c: Fraction) -> _Uni:
    if not c:
        return []
    return [x * c for x in a]

def _u_mul(a: _Uni, b: _Uni) -> _Uni:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _u_trim(out)

def _u_divmod(a: _Uni, b: _Uni) -> tuple[_Uni, _Uni]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    r = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    db, lc = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        f = r[-1] / lc
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        _u_trim(r)
    return _u_trim(q), r

def _u_gcd(a: _Uni, b: _Uni) -> _Uni:
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def _to_rows(p: Poly2) -> list[_Uni]:
    """Rows[j] is the z1-coefficient list of the z2^j slice."""
    if p.is_zero():
        return []
    dj = max(j for _, j in p._terms)
    rows: list[_Uni] = [[] for _ in range(dj + 1)]
    for (i, j), c in p._terms.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c
    for row in rows:
        _u_trim(row)
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _from_rows(rows: list[_Uni]) -> Poly2:
    terms = {}
    for j, row in enumerate(rows):
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return Poly2(terms)


def _rows_trim(rows):
    while rows and not rows[-1]:
        rows.pop()
    return rows

def _rows_scale(rows, u: _Uni):
    return _rows_trim([_u_mul(r, u) for r in rows])

def _rows_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        ra = a[k] if k < len(a) else []
        rb = b[k] if k < len(b) else []
        out.append(_u_add(ra, _u_scale(rb, Fraction(-1))))
    return _rows_trim(out)

def _rows_shift(rows, k: int):
    if not rows:
        return []
    return [[] for _ in range(k)] + [list(r) for r in rows]


def _prem(f, g):
    """Pseudo-remainder of f by g in Q[z1][z2]; needs deg_z2 f >= deg_z2 g."""
    dg = len(g) - 1
    lcg = g[-1]
    r = [list(row) for row in f]
    _rows_trim(r)
    while r and len(r) - 1 >= dg:
        dr = len(r) - 1
        lcr = r[-1]
        r = _rows_sub(_rows_scale(r, lcg), _rows_shift(_rows_scale(g, lcr), dr - dg))
    return r


def _content(rows) -> _Uni:
    c: _Uni = []
    for row in rows:
        c = _u_gcd(c, row)
        if c == [Fraction(1)]:
            break
    return c


def _primitive_part(rows):
    c = _content(rows)
    out = []
    for row in rows:
        q, r = _u_divmod(row, c)
        assert not r, "content division must be exact"
        out.append(q)
    return _rows_trim(out)


def poly_gcd(f: Poly2, g: Poly2) -> Poly2:
    """Monic gcd of two bivariate polynomials, not both zero."""
    if f.is_zero() and g.is_zero():
        raise DegenerateInputError("gcd of two zero polynomials")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return Poly2.one()
    F, G = _to_rows(f), _to_rows(g)
    if len(F) == 1 and len(G) == 1:
        return _from_rows([_u_gcd(F[0], G[0])])
    if len(F) == 1:
        return _from_rows([_u_gcd(F[0], _content(G))])
    if len(G) == 1:
        return _from_rows([_u_gcd(G[0], _content(F))])
    c = _u_gcd(_content(F), _content(G))
    A, B = _primitive_part(F), _primitive_part(G)
    if len(A) < len(B):
        A, B = B, A
    while True:
        if not B:
            prim = A
            break
        if len(B) == 1:
            prim = [[Fraction(1)]]
            break
        R = _prem(A, B)
        A, B = B, (_primitive_part(R) if R else [])
    return _from_rows(_rows_scale(prim, c)).monic()


def gcd3(a: Poly2, b: Poly2, c: Poly2) -> Poly2:
    """Monic gcd of three polynomials; rejects the all-zero triple."""
    nonzero = [p for p in (a, b, c) if not p.is_zero()]
    if not nonzero:
        raise DegenerateInputError("gcd3 of three zero polynomials")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
        if g.is_constant():
            return Poly2.one()
    return g


# ---------------------------------------------------------------------------
# square roots


def poly_sqrt(p: Poly2) -> Optional[Poly2]:
    """Exact square root with positive leading coefficient, or None.

    Successive leading-term corrections in graded-lex order: each step
    cancels the current leading term of p - q^2, which strictly decreases,
    so the loop terminates on squares and fails fast otherwise.
    """
    if p.is_zero():
        return Poly2.zero()
    i, j = p.leading_monomial()
    if i % 2 or j % 2:
        return None
    root_lc = rational_sqrt(p.leading_coefficient())
    if root_lc is None:
        return None
    li, lj = i // 2, j // 2
    q = Poly2.monomial(li, lj, root_lc)
    two_lc = 2 * root_lc
    rem = p - q * q
    budget = 2 * (len(p._terms) + 2) * (p.total_degree() + 2) ** 2
    while not rem.is_zero():
        budget -= 1
        if budget < 0:
            return None
        a, b = rem.leading_monomial()
        ti, tj = a - li, b - lj
        if ti < 0 or tj < 0:
            return None
        q = q + Poly2.monomial(ti, tj, rem.leading_coefficient() / two_lc)
        rem = p - q * q
    assert q.leading_coefficient() > 0
    return q


# ---------------------------------------------------------------------------
# substitution


def substitute(p: Poly2, e1: Poly2, e2: Poly2) -> Poly2:
    """Exact composition p(e1, e2)."""
    if p.is_zero():
        return Poly2.zero()
    max_i = max(i for i, _ in p._terms)
    max_j = max(j for _, j in p._terms)
    pow1 = [Poly2.one()]
    for _ in range(max_i):
        pow1.append(pow1[-1] * e1)
    pow2 = [Poly2.one()]
    for _ in range(max_j):
        pow2.append(pow2[-1] * e2)
    total = Poly2.zero()
    for (i, j), c in p._terms.items():
        total = total + pow1[i] * pow2[j] * c
    return total


# ---------------------------------------------------------------------------
# colength of a zero-dimensional pair


def _monomials_upto(n: int) -> list[Exponent]:
    return [(i, d - i) for d in range(n + 1) for i in range(d, -1, -1)]


def _truncated_quotient_dim(beta: Poly2, gamma: Poly2, n: int, bound: int) -> int:
    """dim V_n minus the part of (beta, gamma) seen with multipliers up to
    product degree `bound`, where V_n is the space of polynomials of total
    degree at most n.

    Columns are ordered with degrees above n first, so after elimination a
    pivot in the low block certifies a combination lying entirely in V_n.
    """
    high = sorted(
        (e for e in _monomials_upto(bound) if e[0] + e[1] > n),
        key=_glex, reverse=True,
    )
    low = sorted(_monomials_upto(n), key=_glex, reverse=True)
    cols = high + low
    if len(cols) > 3000:
        raise RuntimeError("colength: computation exceeds the supported desk scale")
    index = {e: k for k, e in enumerate(cols)}
    low_start = len(high)

    rows: list[list[Fraction]] = []
    for f in (beta, gamma):
        df = f.total_degree()
        for m in _monomials_upto(bound - df):
            prod = f * Poly2.monomial(*m)
            vec = [Fraction(0)] * len(cols)
            for e, c in prod._terms.items():
                vec[index[e]] = c
            rows.append(vec)

    ncols = len(cols)
    pivot_rows = 0
    low_pivots = 0
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(rows)):
            if rows[k][c]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivot_rows += 1
        if c >= low_start:
            low_pivots += 1
        r += 1
        if r == len(rows):
            break
    dim_vn = (n + 1) * (n + 2) // 2
    return dim_vn - low_pivots


def colength(beta: Poly2, gamma: Poly2) -> Optional[int]:
    """dim_Q of Q[z1,z2]/(beta, gamma); None when the quotient is infinite.

    The quotient is finite-dimensional exactly when the pair has no common
    nonconstant factor.  When the top-degree forms are also coprime every
    Bezout intersection point is affine and the answer is the product of
    the total degrees; otherwise the dimension is read off from a truncated
    multiplication matrix, evaluated at the Bezout bound with a safety
    margin and a stabilization check.
    """
    if beta.is_zero() and gamma.is_zero():
        raise DegenerateInputError("colength of the zero ideal")
    if beta.is_zero() or gamma.is_zero():
        f = gamma if beta.is_zero() else beta
        return 0 if f.is_constant() else None
    if beta.is_constant() or gamma.is_constant():
        return 0
    if not poly_gcd(beta, gamma).is_constant():
        return None
    if poly_gcd(beta.top_form(), gamma.top_form()).is_constant():
        return beta.total_degree() * gamma.total_degree()
    db, dg = beta.total_degree(), gamma.total_degree()
    n = db * dg
    bound = n + db + dg
    prev = _truncated_quotient_dim(beta, gamma, n, bound)
    for extra in range(1, 9):
        cur = _truncated_quotient_dim(beta, gamma, n, bound + extra)
        if cur == prev:
            return cur
        prev = cur
    raise RuntimeError("colength: truncation failed to stabilize")


# ---------------------------------------------------------------------------
# quadratic scalar extension Q(sqrt(d))


@dataclass(frozen=True)
class SqrtExt:
    """Scalar rat + rad*sqrt(disc), with componentwise equality."""

    rat: Fraction
    rad: Fraction
    disc: Fraction

    @classmethod
    def of(cls, value, disc) -> "SqrtExt":
        return cls(Fraction(value), Fraction(0), Fraction(disc))

    @classmethod
    def sqrt_of(cls, value) -> "SqrtExt":
        """A scalar whose square is `value`; rational when possible."""
        value = Fraction(value)
        r = rational_sqrt(value)
        if r is not None:
            return cls(r, Fraction(0), value)
        return cls(Fraction(0), Fraction(1), value)

    def _coerce(self, other) -> "SqrtExt":
        if isinstance(other, SqrtExt):
            if other.rad and self.rad and other.disc != self.disc:
                raise ValueError("mixing different quadratic extensions")
            return other
        return SqrtExt(Fraction(other), Fraction(0), self.disc)

    def is_zero(self) -> bool:
        return not self.rat and not self.rad

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SqrtExt(Fraction(other), Fraction(0), self.disc)
        if not isinstance(other, SqrtExt):
            return NotImplemented
        if self.rat != other.rat or self.rad != other.rad:
            return False
        return self.rad == 0 or self.disc == other.disc

    def __neg__(self) -> "SqrtExt":
        return SqrtExt(-self.rat, -self.rad, self.disc)

    def __add__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        d = self.disc if self.rad else o.disc
        return SqrtExt(self.rat + o.rat, self.rad + o.rad, d)

    __radd__ = __add__

    def __sub__(self, other) -> "SqrtExt":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "SqrtExt":
        o = self._coerce(other)
        d = self.disc if self.rad else o.disc
        return SqrtExt(
            self.rat * o.rat + self.rad * o.rad * d,
            self.rat * o.rad + self.rad * o.rat,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "SqrtExt":
        norm = self.rat * self.rat - self.disc * self.rad * self.rad
        if not norm:
            raise ZeroDivisionError("scalar has zero norm")
        return SqrtExt(self.rat / norm, -self.rad / norm, self.disc)

    def __truediv__(self, other) -> "SqrtExt":
        return self * self._coerce(other).inverse()

    def square(self) -> "SqrtExt":
        return self * self

    def __str__(self) -> str:
        if not self.rad:
            return str(self.rat)
        rad_part = f"sqrt({self.disc})" if abs(self.rad) == 1 else f"{abs(self.rad)}*sqrt({self.disc})"
        if not self.rat:
            return ("-" if self.rad < 0 else "") + rad_part
        sign = " - " if self.rad < 0 else " + "
        return f"{self.rat}{sign}{rad_part}"


@dataclass(frozen=True)
class ExtPoly2:
    """Polynomial with coefficients in Q(sqrt(disc)): rat + rad*sqrt(disc)."""

    rat: Poly2
    rad: Poly2
    disc: Fraction

    @classmethod
    def from_poly(cls, p: Poly2, disc) -> "ExtPoly2":
        return cls(p, Poly2.zero(), Fraction(disc))

    @classmethod
    def from_scalar(cls, s: SqrtExt) -> "ExtPoly2":
        return cls(Poly2.constant(s.rat), Poly2.constant(s.rad), s.disc)

    def is_zero(self) -> bool:
        return self.rat.is_zero() and self.rad.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtPoly2):
            return NotImplemented
        if self.rat != other.rat or self.rad != other.rad:
            return False
        return self.rad.is_zero() or self.disc == other.disc

    def __neg__(self) -> "ExtPoly2":
        return ExtPoly2(-self.rat, -self.rad, self.disc)

    def __add__(self, other) -> "ExtPoly2":
        o = self._coerce(other)
        return ExtPoly2(self.rat + o.rat, self.rad + o.rad, self._disc_with(o))

    def __sub__(self, other) -> "ExtPoly2":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "ExtPoly2":
        o = self._coerce(other)
        d = self._disc_with(o)
        return ExtPoly2(
            self.rat * o.rat + self.rad * o.rad * d,
            self.rat * o.rad + self.rad * o.rat,
            d,
        )

    def _coerce(self, other) -> "ExtPoly2":
        if isinstance(other, ExtPoly2):
            return other
        if isinstance(other, SqrtExt):
            return ExtPoly2.from_scalar(other)
        if isinstance(other, Poly2):
            return ExtPoly2.from_poly(other, self.disc)
        return ExtPoly2.from_poly(Poly2.constant(other), self.disc)

    def _disc_with(self, other: "ExtPoly2") -> Fraction:
        if self.rad and other.rad and self.disc != other.disc:
            raise ValueError("mixing different quadratic extensions")
        return self.disc if not self.rad.is_zero() else other.disc

    def __str__(self) -> str:
        if self.rad.is_zero():
            return format_poly(self.rat)
        return f"({format_poly(self.rat)}) + ({format_poly(self.rad)})*sqrt({self.disc})"
