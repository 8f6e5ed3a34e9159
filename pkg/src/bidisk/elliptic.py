"""Divisor arithmetic on minimal properly elliptic surfaces.

Kodaira's canonical bundle formula writes K as the multiple-fibre
contribution plus the pullback of a base divisor of degree chi - 2 + 2b
(b the base genus); for a non-product fibration the irregularity equals b,
which puts the twisted base divisor deciding the existence of a nilpotent
special tensor in degree 3b - 3 - p_g.  A degree at least b is effective
on any genus-b curve, so the window b <= p_g <= 2b - 3 (nonempty once
b >= 3) guarantees a tensor; outside the window nothing is claimed either
way.

The fibrewise input to the pushforward argument is the claim that neither
twice the non-multiple critical divisor nor the multiple-fibre part
dominates a full fibre; ``multiple_fibre_claim_check`` verifies it against
the shipped component-multiplicity table of Kodaira's classification.

The hyperelliptic construction pins a concrete family: genus b = 6h + 1
with the twisting divisor a multiple of the hyperelliptic pencil, making
the deciding divisor class trivial of degree zero, hence one section.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

_FIXTURE_NAME = "kodaira_fibres.txt"


@dataclass(frozen=True)
class KodairaFibre:
    """A singular fibre: type tag and component multiplicity vector."""

    tag: str
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.multiplicities:
            raise ValueError(f"fibre {self.tag}: empty multiplicity vector")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError(f"fibre {self.tag}: multiplicities must be positive")

    @property
    def n_p(self) -> int:
        """The fibre multiplicity: gcd of the component multiplicities."""
        return math.gcd(*self.multiplicities)

    @property
    def is_multiple(self) -> bool:
        return self.n_p >= 2

    def __str__(self) -> str:
        return f"{self.tag}: {','.join(map(str, self.multiplicities))}"


def multiple_fibre_claim_check(f: KodairaFibre) -> bool:
    """Fibrewise input to f_* O(2*Shat + S_m) = O_B.

    For a multiple fibre the critical part is (n_p - 1) times the reduced
    fibre, strictly below the fibre itself, and all components must share
    the multiplicity n_p.  For a non-multiple fibre the doubled critical
    divisor 2(m_i - 1) C_i fails to dominate the fibre exactly when some
    component is reduced, so the check scans for an entry 1.
    """
    if f.is_multiple:
        n = f.n_p
        return all(m == n for m in f.multiplicities) and (n - 1) < n
    return any(m == 1 for m in f.multiplicities)


def parse_fibre_table(text: str, source: str = "<string>") -> list[KodairaFibre]:
    fibres = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'tag: multiplicities'")
        tag, _, rest = line.partition(":")
        try:
            mults = tuple(int(part) for part in rest.split(","))
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: bad multiplicity vector") from exc
        fibres.append(KodairaFibre(tag.strip(), mults))
    if not fibres:
        raise ValueError(f"{source}: no fibres found")
    return fibres


def load_fibre_table(path: Optional[str | Path] = None) -> list[KodairaFibre]:
    """Load the fibre table from `path`, or the packaged table by default."""
    if path is None:
        ref = resources.files("bidisk").joinpath("data", _FIXTURE_NAME)
        return parse_fibre_table(ref.read_text(), source=_FIXTURE_NAME)
    p = Path(path)
    return parse_fibre_table(p.read_text(), source=str(p))


def fibre_by_tag(tag: str, table: Optional[Sequence[KodairaFibre]] = None) -> KodairaFibre:
    table = load_fibre_table() if table is None else table
    for f in table:
        if f.tag == tag:
            return f
    raise KeyError(f"unknown fibre type {tag!r}")


# ---------------------------------------------------------------------------
# degree arithmetic on the base curve


def delta_degree(chi: int, b: int) -> int:
    """Degree of the base divisor in the canonical bundle formula: chi - 2 + 2b."""
    if chi < 1:
        raise ValueError("a properly elliptic surface has chi >= 1")
    if b < 0:
        raise ValueError("base genus must be nonnegative")
    return chi - 2 + 2 * b


def special_tensor_degree(b: int, pg: int) -> int:
    """Degree of the deciding base divisor 2K_B - delta: 3b - 3 - p_g.

    Only meaningful for non-product fibrations, where q = b forces
    chi = 1 + p_g - b >= 1, i.e. p_g >= b.
    """
    if b < 0 or pg < 0:
        raise ValueError("b and p_g must be nonnegative")
    if pg < b:
        raise ValueError("invalid descriptor: p_g >= b is forced by chi >= 1")
    return 3 * b - 3 - pg


@dataclass(frozen=True)
class TensorExistence:
    exists: bool
    reason: str


def exists_nilpotent_special_tensor(b: int, pg: int) -> TensorExistence:
    """Sufficient effectiveness test for a nilpotent special tensor.

    Guaranteed exactly on the window b >= 3, b <= p_g <= 2b - 3, where the
    deciding divisor has degree >= b.  Outside it the answer records that
    effectiveness is merely not guaranteed, never that no tensor exists.
    """
    degree = special_tensor_degree(b, pg)
    if b < 3:
        return TensorExistence(False, f"window empty: b = {b} < 3")
    if pg > 2 * b - 3:
        return TensorExistence(
            False,
            f"not guaranteed: degree {degree} < b = {b}, so effectiveness "
            f"does not follow from the degree alone",
        )
    return TensorExistence(True, f"degree {degree} >= b = {b}: effective divisor exists")


@dataclass(frozen=True)
class EllipticDescriptor:
    """Numerical data of a minimal properly elliptic surface over a genus-b base."""

    b: int
    chi: int
    pg: int
    q: int
    multiple_fibre_orders: tuple[int, ...] = ()
    singular_fibres: tuple[KodairaFibre, ...] = ()

    def __post_init__(self):
        if self.b < 0 or self.pg < 0 or self.q < 0:
            raise ValueError("b, p_g, q must be nonnegative")
        if self.chi != 1 + self.pg - self.q:
            raise ValueError("chi must equal 1 + p_g - q")
        if self.chi < 1:
            raise ValueError("a properly elliptic surface has chi >= 1")
        if any(n < 2 for n in self.multiple_fibre_orders):
            raise ValueError("multiple fibre orders must be at least 2")

    @property
    def q_equals_base_genus(self) -> bool:
        """Holds whenever the fibration is not (birationally) a product."""
        return self.q == self.b


def canonical_bundle_degree(d: EllipticDescriptor) -> Fraction:
    """Base degree of the canonical Q-divisor class:
    (chi - 2 + 2b) + sum (n_i - 1)/n_i.

    Positive exactly for properly elliptic fibrations; zero or negative
    values flag that the descriptor is not properly elliptic.
    """
    total = Fraction(delta_degree(d.chi, d.b))
    for n in d.multiple_fibre_orders:
        total += Fraction(n - 1, n)
    return total


@dataclass(frozen=True)
class WeierstrassFamily:
    """Hyperelliptic base of genus 6h + 1 with twisting divisor h times the
    hyperelliptic pencil (degree 2h)."""

    h: int
    b: int
    m_degree: int
    h0: int

    @property
    def canonical_degree(self) -> int:
        return 2 * self.b - 2

    @property
    def sixfold_twist_degree(self) -> int:
        return 6 * self.m_degree

    @property
    def residual_degree(self) -> int:
        return self.canonical_degree - self.sixfold_twist_degree


def weierstrass_example(h: int) -> WeierstrassFamily:
    """The genus 6h+1 hyperelliptic family, h >= 1.

    deg K_B = 12h equals deg 6M, and the construction chooses K_B linearly
    equivalent to 6M, so the deciding class is trivial and has exactly one
    section.  Whether the surface carries any further special tensors is
    left open.
    """
    if h < 1:
        raise ValueError("the hyperelliptic family needs h >= 1")
    fam = WeierstrassFamily(h=h, b=6 * h + 1, m_degree=2 * h, h0=1)
    assert fam.residual_degree == 0
    return fam
