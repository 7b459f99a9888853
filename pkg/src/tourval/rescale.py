"""Min-max rescaling of crisp values and triangular fuzzy numbers.

``rescale_crisp`` maps a value from a source range [x, y] onto a target
range [m, M] with the affine min-max transform.  ``rescale_tfn`` lifts the
same transform to TFNs through fuzzy arithmetic; it provably coincides with
applying the crisp transform to each endpoint, and the test suite checks
that identity on randomized inputs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from . import fuzzy
from .errors import OutOfRangeError
from .fuzzy import TFN

__all__ = ["SourceRange", "TargetRange", "rescale_crisp", "rescale_tfn"]

log = logging.getLogger(__name__)

_COMPONENTS = ("lo", "mode", "hi")


@dataclass(frozen=True)
class SourceRange:
    """Inventoried range [x, y] of a factor, x < y.

    A factor scored on a descending scale must be encoded by negating its
    values (e.g. damages scored in [-5, 0]), never by swapping x and y:
    rescaling stays strictly increasing that way.
    """

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"source range must be finite, got [{self.x}, {self.y}]")
        if not self.x < self.y:
            raise ValueError(
                f"source range requires x < y, got [{self.x}, {self.y}] "
                "(encode descending scales by negating the values)"
            )

    @property
    def span(self) -> float:
        return self.y - self.x


@dataclass(frozen=True)
class TargetRange:
    """Common dimensionless range [m, M] that all factors are mapped onto."""

    m: float
    M: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and math.isfinite(self.M)):
            raise ValueError(f"target range must be finite, got [{self.m}, {self.M}]")
        if not self.m < self.M:
            raise ValueError(f"target range requires m < M, got [{self.m}, {self.M}]")

    @property
    def span(self) -> float:
        return self.M - self.m


def _admit(a: float, src: SourceRange, policy: str, label: str | None, component: str | None) -> float:
    """Apply the out-of-range policy to one raw value."""
    if policy not in ("strict", "clamp"):
        raise ValueError(
            f"unknown out-of-range policy {policy!r} (expected 'strict' or 'clamp')")
    if src.x <= a <= src.y:
        return a
    where = f"{label}: " if label else ""
    part = f"{component}=" if component else "value "
    if policy == "strict":
        raise OutOfRangeError(
            f"{where}{part}{a} outside source range [{src.x}, {src.y}]"
        )
    clamped = min(max(a, src.x), src.y)
    log.warning("%s%s%s clamped to %s (source range [%s, %s])",
                where, part, a, clamped, src.x, src.y)
    return clamped


def rescale_crisp(a: float, src: SourceRange, tgt: TargetRange,
                  policy: str = "strict", label: str | None = None) -> float:
    """Min-max rescale one value: M - (M - m) * (y - a) / (y - x).

    Maps x to m and y to M and is strictly increasing in between.  ``a``
    must lie in [x, y]; under the ``clamp`` policy an outside value is
    saturated to the range with a logged warning instead of raising.
    """
    a = _admit(a, src, policy, label, None)
    r = tgt.M - tgt.span * ((src.y - a) / src.span)
    # anchor rounding can exit [m, M] by a few ulp
    return min(max(r, tgt.m), tgt.M)


def rescale_tfn(t: TFN, src: SourceRange, tgt: TargetRange,
                policy: str = "strict", label: str | None = None) -> TFN:
    """Min-max rescale a TFN onto the target range.

    Computed through fuzzy arithmetic on the whole triplet: subtracting the
    TFN from y reflects it (endpoints swap), and multiplying by the negated
    target span reflects it back, so the min/max bookkeeping lands each
    endpoint in order.  The result equals endpoint-wise ``rescale_crisp``
    and stays inside [m, M].
    """
    checked = [
        _admit(v, src, policy, label, name)
        for name, v in zip(_COMPONENTS, t.as_tuple())
    ]
    a = TFN(*checked)
    reflected = fuzzy.add(TFN.crisp(src.y), fuzzy.scale(-1.0, a))       # y - a
    unit = fuzzy.scale(1.0 / src.span, reflected)                       # (y - a) / (y - x)
    r = fuzzy.add(TFN.crisp(tgt.M), fuzzy.scale(-tgt.span, unit))       # M - (M - m)(...)
    return TFN(
        min(max(r.lo, tgt.m), tgt.M),
        min(max(r.mode, tgt.m), tgt.M),
        min(max(r.hi, tgt.m), tgt.M),
    )
