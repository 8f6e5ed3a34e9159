"""Blow-up transform for special tensors.

Blowing up the origin of a chart (x, y) and working in the chart (x, u)
with y = u*x turns the tensor

    (a dx^2 + b dy^2 + c dx dy) / (dx ^ dy)

into

    (dx^2 (a + b u^2 + c u) + b x^2 du^2 + (2 b u x + c x) dx du) / (x dx ^ du),

so the pullback is regular exactly when x divides the substituted
a + b u^2 + c u, which happens exactly when a, b, c all vanish at the
blow-up point.  Pushing a regular chart tensor back down along u = y/x
recovers the original coefficients as rational identities (Hartogs).

The blow-up center is always the origin of the supplied coordinates;
callers translate their chart first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .poly import Poly2, Z1, Z2, substitute
from .tensor import SymTensor

_X = Z1
_U = Z2


@dataclass(frozen=True)
class BlowupChartTensor:
    """A pulled-back tensor on the (x, u) chart; the exceptional curve is
    x = 0 and the center was the origin of the source chart."""

    tensor: SymTensor


def regularity_criterion(w: SymTensor) -> bool:
    """True iff the tensor vanishes at the center, i.e. lifts to the blow-up."""
    return w.vanishes_at_origin()


def pullback(w: SymTensor) -> Optional[BlowupChartTensor]:
    """Pull the tensor back to the (x, u) chart, or None when not regular.

    Substitutes y = u*x, cancels the single power of x coming from the
    anticanonical twist, and reports NonRegular (None) when that
    cancellation is impossible.  Agrees with regularity_criterion on every
    input.
    """
    sub = lambda p: substitute(p, _X, _X * _U)
    a11, a22, a12 = sub(w.a11), sub(w.a22), sub(w.a12)
    dx_dx = a11 + a22 * _U**2 + 2 * a12 * _U
    new_a11 = dx_dx.exact_div(_X)
    if new_a11 is None:
        return None
    new_a22 = _X * a22
    new_a12 = a22 * _U + a12
    return BlowupChartTensor(SymTensor(new_a11, new_a22, new_a12))
