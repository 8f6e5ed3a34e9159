"""Special-tensor calculus in a local chart.

A symmetric 2-tensor twisted by the anticanonical class,

    w = (a11 dz1 dz1 + a22 dz2 dz2 + a12 (dz1 dz2 + dz2 dz1)) / (dz1 ^ dz2),

corresponds to a trace-free endomorphism of the tangent sheaf; in the basis
(d/dz1, d/dz2) the matrix is

    [[-a12, -a22],
     [ a11,  a12]].

The determinant decides everything.  A nonzero constant determinant gives
two opposite eigenvalues and an eigenbundle splitting; an identically zero
determinant makes the endomorphism nilpotent of order two and it factors,
after pulling out the gcd of the entries, as

    e = delta * [[beta*gamma, -beta^2],
                 [gamma^2,    -beta*gamma]]

with kernel generated by (beta, gamma).  The pair (beta, gamma) cuts out a
zero-dimensional scheme whose colength enters the Chern-number bookkeeping
c2 = len(Z) + L.(L - Delta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .poly import (
    ExtPoly2,
    Poly2,
    SqrtExt,
    colength,
    format_poly,
    gcd3,
    poly_sqrt,
)


class NotASquareError(ValueError):
    """A coefficient that the factorization needs to be a square is not one
    over the rationals."""


class NotSpecialTensorError(ValueError):
    """The tensor's determinant is nonconstant, so the local data cannot be
    the restriction of a global special tensor."""


@dataclass(frozen=True)
class SymTensor:
    """Local special tensor: three polynomial coefficients (a21 = a12)."""

    a11: Poly2
    a22: Poly2
    a12: Poly2

    @classmethod
    def zero(cls) -> "SymTensor":
        return cls(Poly2.zero(), Poly2.zero(), Poly2.zero())

    @classmethod
    def from_quadratic_form(cls, a: Poly2, b: Poly2, c: Poly2) -> "SymTensor":
        """Build from the quadratic-form coefficients a dz1^2 + b dz2^2 + c dz1 dz2
        (the symmetric-algebra convention, so the cross tensor component is c/2)."""
        return cls(a, b, c * Fraction(1, 2))

    def quadratic_form(self) -> tuple[Poly2, Poly2, Poly2]:
        return self.a11, self.a22, self.a12 * 2

    def is_zero(self) -> bool:
        return self.a11.is_zero() and self.a22.is_zero() and self.a12.is_zero()

    def vanishes_at_origin(self) -> bool:
        return (
            self.a11.value_at_origin() == 0
            and self.a22.value_at_origin() == 0
            and self.a12.value_at_origin() == 0
        )

    def __str__(self) -> str:
        return (
            f"a11={format_poly(self.a11)}; "
            f"a22={format_poly(self.a22)}; "
            f"a12={format_poly(self.a12)}"
        )


@dataclass(frozen=True)
class TraceZeroEndo:
    """2x2 polynomial matrix with identically zero trace."""

    m11: Poly2
    m12: Poly2
    m21: Poly2
    m22: Poly2

    def __post_init__(self):
        if not (self.m11 + self.m22).is_zero():
            raise ValueError("matrix trace is not identically zero")

    def det(self) -> Poly2:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, v: tuple[Poly2, Poly2]) -> tuple[Poly2, Poly2]:
        return (self.m11 * v[0] + self.m12 * v[1], self.m21 * v[0] + self.m22 * v[1])

    def apply_ext(self, v: tuple[ExtPoly2, ExtPoly2]) -> tuple[ExtPoly2, ExtPoly2]:
        return (v[0] * self.m11 + v[1] * self.m12, v[0] * self.m21 + v[1] * self.m22)

    def entries(self) -> tuple[Poly2, Poly2, Poly2, Poly2]:
        return self.m11, self.m12, self.m21, self.m22


def endo_square(e: TraceZeroEndo) -> tuple[Poly2, Poly2, Poly2, Poly2]:
    """Entries of e*e (not trace-free in general, so returned raw)."""
    return (
        e.m11 * e.m11 + e.m12 * e.m21,
        e.m11 * e.m12 + e.m12 * e.m22,
        e.m21 * e.m11 + e.m22 * e.m21,
        e.m21 * e.m12 + e.m22 * e.m22,
    )


def tensor_to_endo(w: SymTensor) -> TraceZeroEndo:
    """The endomorphism [[-a12, -a22], [a11, a12]] attached to the tensor."""
    return TraceZeroEndo(-w.a12, -w.a22, w.a11, w.a12)


def endo_to_tensor(e: TraceZeroEndo) -> SymTensor:
    """Inverse of tensor_to_endo; the constructor enforces zero trace."""
    return SymTensor(a11=e.m21, a22=-e.m12, a12=-e.m11)


class DetResult(NamedTuple):
    det: Poly2
    is_constant: bool


def tensor_det(w: SymTensor) -> DetResult:
    """det = -a12^2 + a11*a22, with a flag for constancy.

    For the restriction of a global special tensor the determinant is forced
    constant; on raw local data the flag reports whether that holds.
    """
    d = w.a11 * w.a22 - w.a12 * w.a12
    return DetResult(d, d.is_constant())


@dataclass(frozen=True)
class EigenSplit:
    """Eigenvalue c (with c^2 = -det) and polynomial eigenvectors for +c, -c."""

    eigenvalue: SqrtExt
    vector_plus: tuple[ExtPoly2, ExtPoly2]
    vector_minus: tuple[ExtPoly2, ExtPoly2]


def _eigenvector(w: SymTensor, lam: SqrtExt, disc: Fraction) -> tuple[ExtPoly2, ExtPoly2]:
    # Rows of (e - lam*I) v = 0 give two candidate solutions; at least one
    # is nonzero because lam != 0.
    first = (
        ExtPoly2(-w.a22, Poly2.zero(), disc),
        ExtPoly2(w.a12 + Poly2.constant(lam.rat), Poly2.constant(lam.rad), disc),
    )
    if not (first[0].is_zero() and first[1].is_zero()):
        return first
    return (
        ExtPoly2(Poly2.constant(lam.rat) - w.a12, Poly2.constant(lam.rad), disc),
        ExtPoly2(w.a11, Poly2.zero(), disc),
    )


def eigen_split(w: SymTensor) -> EigenSplit:
    """Eigen decomposition for a tensor with nonzero constant determinant.

    The eigenvalue c satisfies c^2 = -det and may live in a quadratic
    extension; the returned vectors satisfy e.v = (+/-c).v as exact
    polynomial identities (asserted before returning).
    """
    det, is_const = tensor_det(w)
    if not is_const:
        raise NotSpecialTensorError(
            "determinant is nonconstant; not the restriction of a special tensor"
        )
    value = det.constant_value()
    if value == 0:
        raise ValueError("determinant vanishes identically; use nilpotent_decompose")
    disc = -value
    c = SqrtExt.sqrt_of(disc)
    e = tensor_to_endo(w)
    v_plus = _eigenvector(w, c, disc)
    v_minus = _eigenvector(w, -c, disc)
    for lam, v in ((c, v_plus), ((-c), v_minus)):
        image = e.apply_ext(v)
        assert image[0] == v[0] * lam and image[1] == v[1] * lam, "eigen identity failed"
    return EigenSplit(c, v_plus, v_minus)


@dataclass(frozen=True)
class NilpotentDecomposition:
    """Factorization e = delta * [[beta*gamma, -beta^2], [gamma^2, -beta*gamma]].

    delta cuts out the divisorial part, (beta, gamma) generates the kernel,
    and z_colength is dim Q[z1,z2]/(beta, gamma) (None when the pair still
    shares a factor, i.e. the scheme Z has a divisorial component).
    """

    delta: Poly2
    beta: Poly2
    gamma: Poly2
    z_colength: Optional[int]

    @property
    def kernel_generator(self) -> tuple[Poly2, Poly2]:
        return (self.beta, self.gamma)

    def reconstruct(self) -> TraceZeroEndo:
        bg = self.beta * self.gamma
        return TraceZeroEndo(
            self.delta * bg,
            -(self.delta * self.beta * self.beta),
            self.delta * self.gamma * self.gamma,
            -(self.delta * bg),
        )


def nilpotent_decompose(w: SymTensor) -> NilpotentDecomposition:
    """Factor a nonzero tensor with identically vanishing determinant.

    With (a, b, c) the matrix entries (m11, m12, m21), the common factor
    delta is the monic gcd rescaled by the leading coefficient of -b/gcd
    (of c/gcd when b is zero); the rescaling absorbs the scalar unit so the
    remaining -b/delta and c/delta are perfect squares whenever the
    factorization exists over Q at all.  beta takes the positive leading
    coefficient and the sign of gamma is fixed by a/delta = beta*gamma.
    """
    if w.is_zero():
        raise ValueError("cannot decompose the zero tensor")
    det, _ = tensor_det(w)
    if not det.is_zero():
        if det.is_constant():
            raise ValueError("determinant is a nonzero constant; use eigen_split")
        raise NotSpecialTensorError(
            "determinant is nonconstant; not the restriction of a special tensor"
        )
    e = tensor_to_endo(w)
    a, b, c = e.m11, e.m12, e.m21
    g = gcd3(a, b, c)

    def reduce(p: Poly2, divisor: Poly2) -> Poly2:
        q = p.exact_div(divisor)
        assert q is not None, "gcd must divide each entry"
        return q

    minus_b = reduce(-b, g)
    c_red = reduce(c, g)
    scale = (minus_b if not minus_b.is_zero() else c_red).leading_coefficient()
    delta = g * scale
    a_r = reduce(a, g) * (1 / scale)
    minus_b_r = minus_b * (1 / scale)
    c_r = c_red * (1 / scale)

    beta = poly_sqrt(minus_b_r)
    if beta is None:
        raise NotASquareError(
            f"-m12/delta = {format_poly(minus_b_r)} is not a square over Q"
        )
    gamma = poly_sqrt(c_r)
    if gamma is None:
        raise NotASquareError(
            f"m21/delta = {format_poly(c_r)} is not a square over Q"
        )
    if beta * gamma != a_r:
        gamma = -gamma
        assert beta * gamma == a_r, "sign resolution must succeed when the squares exist"
    return NilpotentDecomposition(delta, beta, gamma, colength(beta, gamma))


def chern_consistency(c2: int, z_len: int, l_self: int, l_dot_delta: int) -> bool:
    """The numerical identity c2 = len(Z) + L.(L - Delta)."""
    return c2 == z_len + l_self - l_dot_delta
