"""Model surfaces and their divisor arithmetic.

Hirzebruch surfaces F_n carry the rank-two Picard lattice spanned by the
negative section S (S^2 = -n) and the fibre F (S.F = 1, F^2 = 0); global
sections of a*S + b*F are counted two independent ways, by peeling S off
the base locus and by a closed-form fibre-degree sum.  Products of curves
contribute the split-tangent-bundle numerology (K^2 = 8*chi, c1^2 = 2*c2)
and the dimension of their twisted symmetric-tensor space via the Kuenneth
decomposition.  The odd canonical class of the projective plane supplies
the parity obstruction against nilpotent tensors there.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class HirzebruchDivisor:
    """Divisor class a*S + b*F on F_n, in the (section, fibre) basis."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Hirzebruch index must be nonnegative")

    def dot(self, other: "HirzebruchDivisor") -> int:
        if self.n != other.n:
            raise ValueError("divisors live on different surfaces")
        return -self.n * self.a * other.a + self.a * other.b + self.b * other.a

    def dot_section(self) -> int:
        """Intersection with S itself: -n*a + b."""
        return -self.n * self.a + self.b

    def __str__(self) -> str:
        return f"{self.a}*S + {self.b}*F on F_{self.n}"


def h0_lattice(d: HirzebruchDivisor) -> int:
    """Section count as a fibre-degree sum: sum_j max(0, b - j*n + 1).

    This is the lattice-point count behind the projection to the base, and
    serves as the closed-form oracle for the recursive reduction.
    """
    if d.a < 0:
        return 0
    return sum(max(0, d.b - j * d.n + 1) for j in range(d.a + 1))


def h0_reduction_steps(d: HirzebruchDivisor) -> list[tuple[HirzebruchDivisor, int]]:
    """The S-peeling reduction, step by step.

    Restricting to the section S contributes max(0, D.S + 1) sections and
    leaves D - S; the walk ends at a = 0 (fibre-class count max(0, b + 1))
    or below (nothing).  Each returned pair is (divisor visited, sections
    contributed at that step), so suffix sums give the h^0 of every
    intermediate divisor; when D.S < 0 throughout, the contributions vanish
    and the walk reproduces the vanishing chain
    h^0(2S-(n+2)F) = h^0(S-(n+2)F) = h^0(-(n+2)F) = 0.
    """
    steps = []
    cur = d
    while cur.a > 0:
        steps.append((cur, max(0, cur.dot_section() + 1)))
        cur = replace(cur, a=cur.a - 1)
    steps.append((cur, 0 if cur.a < 0 else max(0, cur.b + 1)))
    return steps


def h0_recursive(d: HirzebruchDivisor) -> int:
    """Section count via the S-peeling reduction."""
    return sum(contrib for _, contrib in h0_reduction_steps(d))


def p2_parity_obstruction(canonical_coeff: int) -> bool:
    """On a surface with Picard group Z*H and K = canonical_coeff * H, an
    odd coefficient leaves no divisor L with K = 2L (for the plane the
    coefficient is -3), ruling out the nilpotent factorization there."""
    return canonical_coeff % 2 != 0


@dataclass(frozen=True)
class ProductSurface:
    """Product of two smooth curves, recorded by their genera."""

    g1: int
    g2: int

    def __post_init__(self):
        if self.g1 < 0 or self.g2 < 0:
            raise ValueError("genera must be nonnegative")


@dataclass(frozen=True)
class NumericalProfile:
    """The numerical package (K^2, chi, c2, q, p_g) of a surface."""

    K2: int
    chi: int
    c2: int
    q: int
    pg: int

    def noether_consistent(self) -> bool:
        return self.c2 == 12 * self.chi - self.K2

    def chi_consistent(self) -> bool:
        return self.chi == 1 + self.pg - self.q


def product_invariants(p: ProductSurface) -> NumericalProfile:
    """Kuenneth invariants of C1 x C2."""
    chi = (p.g1 - 1) * (p.g2 - 1)
    return NumericalProfile(
        K2=8 * chi,
        chi=chi,
        c2=4 * chi,
        q=p.g1 + p.g2,
        pg=p.g1 * p.g2,
    )


def _h0_canonical(g: int) -> int:
    return g


def _h0_anticanonical(g: int) -> int:
    if g == 0:
        return 3
    if g == 1:
        return 1
    return 0


def product_special_tensor_dim(p: ProductSurface) -> int:
    """dim H^0(S^2 Omega^1 (-K)) on a product of curves.

    The Kuenneth decomposition leaves three summands: the trivial one and
    the two cross terms K_1 (-K_2) and (-K_1) K_2, whose section counts are
    determined by the genera alone.
    """
    return 1 + _h0_canonical(p.g1) * _h0_anticanonical(p.g2) + _h0_anticanonical(
        p.g1
    ) * _h0_canonical(p.g2)


def product_uniqueness_note(p: ProductSurface) -> Optional[str]:
    """Warning for the genus (1,2) product, where the computed section space
    is 3-dimensional although uniqueness is sometimes assumed for it."""
    if {p.g1, p.g2} == {1, 2}:
        dim = product_special_tensor_dim(p)
        return (
            f"uniqueness fails: the special-tensor space of the genus (1,2) "
            f"product has dimension {dim}, not 1; the computed value is "
            f"reported unchanged"
        )
    return None


def split_tangent_identities(prof: NumericalProfile) -> bool:
    """The numerical conditions K^2 = 8*chi and K^2 = 2*c2 forced by a
    split tangent bundle."""
    return prof.K2 == 8 * prof.chi and prof.K2 == 2 * prof.c2
