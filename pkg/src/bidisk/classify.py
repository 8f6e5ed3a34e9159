"""The uniformization decision procedure.

Input is the numerical package of a compact complex surface (K^2, and when
known chi, P2, q) together with what is known about its twisted symmetric
tensors.  The verdicts follow the theorem chain:

* a (semi)special tensor with K^2 > 0 puts the surface in the strict
  alternative quadric / bidisk quotient, separated by the bigenus:
  P2 = 0 means the quadric (numerical profile K^2 = 8, chi = 1, q = 0),
  P2 >= 2 means a bidisk quotient (numerical check K^2 = 8*chi), and
  P2 = 1 is impossible; an unknown P2 leaves the two-way dichotomy;
* the Miyaoka-Yau equality K^2 = 9*chi (with chi >= 1) together with
  P2 >= 1 characterizes ball quotients;
* everything else is outside the implemented criteria and is reported as
  not covered, never guessed.

Each classification carries an evidence list naming every rule and
consistency check that fired; impossible inputs downgrade to Contradiction
rather than silently passing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional


@dataclass(frozen=True)
class TensorStatus:
    """What is known about twisted symmetric tensors on the surface.

    kind is one of "none", "semi-special" (a semi special tensor exists),
    "unique-semi-special" (the section space is one dimensional), or
    "special-dim" with the exact dimension of the special-tensor space.
    """

    kind: str
    dim: Optional[int] = None

    _KINDS = ("none", "semi-special", "unique-semi-special", "special-dim")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown tensor status {self.kind!r}")
        if self.kind == "special-dim":
            if self.dim is None or self.dim < 0:
                raise ValueError("special-dim needs a nonnegative dimension")
        elif self.dim is not None:
            raise ValueError("only special-dim carries a dimension")

    def present(self) -> bool:
        if self.kind in ("semi-special", "unique-semi-special"):
            return True
        return self.kind == "special-dim" and (self.dim or 0) >= 1

    def __str__(self) -> str:
        if self.kind == "special-dim":
            return f"special-dim({self.dim})"
        return self.kind


NO_TENSOR = TensorStatus("none")
SEMI_SPECIAL_EXISTS = TensorStatus("semi-special")
SEMI_SPECIAL_UNIQUE = TensorStatus("unique-semi-special")


def special_dim(d: int) -> TensorStatus:
    return TensorStatus("special-dim", d)


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical profile fed to the classifier; None marks unknown fields."""

    K2: int
    chi: Optional[int] = None
    P2: Optional[int] = None
    q: Optional[int] = None
    tensor: TensorStatus = NO_TENSOR

    def __post_init__(self):
        if self.P2 is not None and self.P2 < 0:
            raise ValueError("P2 must be nonnegative")
        if self.q is not None and self.q < 0:
            raise ValueError("q must be nonnegative")


class Verdict(Enum):
    BIDISK = "Bidisk"
    QUADRIC = "Quadric"
    BALL = "Ball"
    DICHOTOMY = "Dichotomy"
    NOT_COVERED = "NotCovered"
    CONTRADICTION = "Contradiction"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    evidence: tuple[str, ...]
    reason: str = ""


def _contradiction(evidence: list[str], reason: str) -> Classification:
    evidence.append(f"contradiction: {reason}")
    return Classification(Verdict.CONTRADICTION, tuple(evidence), reason)


def classify(inv: SurfaceInvariants) -> Classification:
    """Apply the decision rules in order; see the module docstring."""
    ev: list[str] = []

    if inv.tensor.present() and inv.K2 > 0:
        ev.append(
            f"tensor {inv.tensor} with K2 = {inv.K2} > 0: "
            "quadric-or-bidisk alternative applies"
        )
        if inv.P2 is None:
            ev.append("P2 unknown: cannot separate quadric (P2 = 0) from bidisk (P2 >= 2)")
            return Classification(Verdict.DICHOTOMY, tuple(ev))
        if inv.P2 == 0:
            ev.append("P2 = 0: quadric branch")
            if inv.K2 != 8:
                return _contradiction(ev, f"quadric profile needs K2 = 8, got {inv.K2}")
            if inv.chi is not None and inv.chi != 1:
                return _contradiction(ev, f"quadric profile needs chi = 1, got {inv.chi}")
            if inv.q is not None and inv.q != 0:
                return _contradiction(ev, f"quadric profile needs q = 0, got {inv.q}")
            ev.append("quadric profile check (K2 = 8, chi = 1, q = 0): pass")
            return Classification(Verdict.QUADRIC, tuple(ev))
        if inv.P2 == 1:
            return _contradiction(
                ev,
                "P2 = 1 is impossible here: the quadric has P2 = 0 and a "
                "bidisk quotient has P2 = chi + K2 >= 2",
            )
        ev.append(f"P2 = {inv.P2} >= 2: bidisk branch")
        if inv.tensor.kind == "special-dim" and (inv.tensor.dim or 0) >= 2:
            return _contradiction(
                ev,
                f"a special-tensor space of dimension {inv.tensor.dim} >= 2 "
                "contains a tensor with vanishing determinant, which the "
                "bidisk case excludes",
            )
        if inv.chi is not None:
            if inv.K2 != 8 * inv.chi:
                return _contradiction(
                    ev, f"bidisk quotient needs K2 = 8*chi, got K2 = {inv.K2}, chi = {inv.chi}"
                )
            ev.append(f"consistency K2 = 8*chi: pass ({inv.K2} = 8*{inv.chi})")
        else:
            ev.append("chi unknown: K2 = 8*chi not checkable")
        return Classification(Verdict.BIDISK, tuple(ev))

    if (
        inv.chi is not None
        and inv.chi >= 1
        and inv.K2 == 9 * inv.chi
        and inv.P2 is not None
        and inv.P2 >= 1
    ):
        ev.append(
            f"Miyaoka-Yau: K2 = 9*chi ({inv.K2} = 9*{inv.chi}), chi >= 1, "
            f"P2 = {inv.P2} >= 1: ball quotient"
        )
        return Classification(Verdict.BALL, tuple(ev))

    ev.append(
        "no criterion applies: need a (semi)special tensor with K2 > 0, or "
        "K2 = 9*chi with chi >= 1 and P2 >= 1"
    )
    if inv.K2 <= 0 and inv.tensor.present():
        ev.append(
            "note: K2 <= 0 with a tensor present is outside the implemented "
            "criteria; no verdict is inferred for this range"
        )
    return Classification(Verdict.NOT_COVERED, tuple(ev))


def min_bigenus(chi: int, K2: int) -> int:
    """P2 of a minimal surface with ample canonical class: chi + K2 (>= 2)."""
    if chi < 1 or K2 < 1:
        raise ValueError("needs chi >= 1 and K2 >= 1")
    return chi + K2


def double_cover_dims(dim_special: int, dim_twisted: int) -> int:
    """Special-tensor dimension upstairs on the connected etale double cover:
    the section space splits as the untwisted part plus the twisted part."""
    if dim_special < 0 or dim_twisted < 0:
        raise ValueError("dimensions must be nonnegative")
    return dim_special + dim_twisted


def polydisk_necessary_profile(n: int) -> Callable[[SurfaceInvariants], bool]:
    """Necessary conditions for a polydisk quotient; only n = 2 is supported.

    A surface covered by the bidisk carries a semi special tensor and has
    ample canonical class, so in particular K^2 > 0.
    """
    if n != 2:
        raise ValueError("only the surface case n = 2 is supported")

    def predicate(inv: SurfaceInvariants) -> bool:
        return inv.tensor.present() and inv.K2 > 0

    return predicate
