"""Strictly dominating sequences that witness a pointwise dominance.

Given RAFs ``upper`` and ``lower`` with ``upper(x) >= lower(x)`` everywhere,
the construction produces sequences converging to the pair whose terms are
strictly ordered at every coordinate.  Tied coordinates are resolved by a
rule depending on where the tie sits:

* tied at 1: the lower term drops by ``1/(2n)``;
* tied at 0: the upper term rises by ``1/(2n)``;
* tied strictly inside (0, 1): the lower term drops by ``margin/(2n)``,
  where the margin is half the smallest tied interior value, so the term
  stays strictly positive;
* a strict gap already: both terms stay put.

Every term is then a valid RAF, the upper term strictly dominates the lower
one, and both terms stay within sup distance ``1/(2n)`` of their limits.
The last guarantee is delicate at double precision: subtracting a small step
from a coordinate can round to a point slightly *further* than the step, so
the subtraction is clamped by one representable-float nudge when needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DominanceHypothesisError, ValidationError
from .raf import Raf, pointwise_dominates, _require_same_alts

__all__ = ["PerturbationSequences", "perturbation_sequences", "sequence_term"]


def _shrink(value: float, delta: float) -> float:
    """Largest representable point below ``value`` within ``delta`` of it.

    Guarantees ``result < value`` and ``value - result <= delta`` whenever
    ``delta`` is at least one ulp of ``value``; for smaller deltas it falls
    back to the predecessor float, whose distance still sits far below any
    ``1/(2n)`` bound.
    """
    out = value - delta
    if value - out > delta:  # subtraction rounded past the step
        out = math.nextafter(out, value)
    if out >= value:  # delta below float resolution at value
        out = math.nextafter(value, 0.0)
    return out


@dataclass(frozen=True)
class PerturbationSequences:
    """The coordinate partition and margin behind a perturbation pair.

    ``at_one``, ``at_zero`` and ``tied_interior`` list the tied coordinates
    by where the tie sits; coordinates in none of them carry a strict gap
    already.  ``interior_margin`` is the shrink scale used on interior ties
    (half the smallest tied interior value; the placeholder 0.5 when there
    are none).
    """

    upper: Raf
    lower: Raf
    at_one: tuple[str, ...]
    at_zero: tuple[str, ...]
    tied_interior: tuple[str, ...]
    interior_margin: float

    def term(self, n: int) -> tuple[Raf, Raf]:
        """The n-th strictly dominating pair, ``n`` counted from 1."""
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ValidationError(f"term index must be a positive integer, got {n!r}")
        step = 1.0 / (2.0 * n)
        at_one = set(self.at_one)
        at_zero = set(self.at_zero)
        tied_interior = set(self.tied_interior)
        upper_values = []
        lower_values = []
        for label, uv, lv in zip(self.upper.alts.labels, self.upper.values, self.lower.values):
            if label in at_one:
                uv2, lv2 = uv, _shrink(lv, step)
            elif label in at_zero:
                uv2, lv2 = uv + step, lv
            elif label in tied_interior:
                uv2, lv2 = uv, _shrink(lv, self.interior_margin * step)
            else:
                uv2, lv2 = uv, lv
            upper_values.append(uv2)
            lower_values.append(lv2)
        return Raf(self.upper.alts, tuple(upper_values)), Raf(self.lower.alts, tuple(lower_values))


def perturbation_sequences(upper: Raf, lower: Raf) -> PerturbationSequences:
    """Partition the tied coordinates of a pointwise dominating pair.

    Raises :class:`DominanceHypothesisError`, naming the first offending
    coordinate, when ``upper`` does not pointwise dominate ``lower``.  The
    two RAFs may be equal; every coordinate is then a tie.
    """
    _require_same_alts(upper, lower)
    if not pointwise_dominates(upper, lower):
        label, uv, lv = next(
            (l, x, y)
            for l, x, y in zip(upper.alts.labels, upper.values, lower.values)
            if x < y
        )
        raise DominanceHypothesisError(
            f"pointwise dominance fails at {label!r}: {uv!r} < {lv!r}"
        )
    at_one = []
    at_zero = []
    tied_interior = []
    for label, uv, lv in zip(upper.alts.labels, upper.values, lower.values):
        if uv == lv == 1.0:
            at_one.append(label)
        elif uv == lv == 0.0:
            at_zero.append(label)
        elif uv == lv:
            tied_interior.append(label)
    if tied_interior:
        margin = 0.5 * min(lower.value(label) for label in tied_interior)
    else:
        margin = 0.5
    return PerturbationSequences(
        upper=upper,
        lower=lower,
        at_one=tuple(at_one),
        at_zero=tuple(at_zero),
        tied_interior=tuple(tied_interior),
        interior_margin=margin,
    )


def sequence_term(sequences: PerturbationSequences, n: int) -> tuple[Raf, Raf]:
    """The n-th term of a perturbation pair; see :meth:`PerturbationSequences.term`."""
    return sequences.term(n)
