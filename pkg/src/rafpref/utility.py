"""Utility construction along the diagonal ray, with certified brackets.

For an oracle satisfying weak dominance and weak continuity, the set of
diagonal parameters ``{t : scale_top(t) is weakly preferred to A}`` is a
closed up-set of [0, 1] containing 1, so its greatest lower bound ``u(A)``
is well defined and represents the preference: ``A`` is weakly preferred to
``B`` exactly when ``u(A) >= u(B)``.  :func:`compute_u` locates that bound by
bisection on the membership predicate and returns it together with the
bracket that certifies it.

Nothing here assumes the hypotheses silently.  The bisection always probes
both ends of the ray and raises :class:`DiagonalMonotonicityError` when the
full-availability point fails the membership test, and
:func:`validate_representation` measures how well the computed utilities
reproduce the oracle's answers on sampled pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DiagonalMonotonicityError, ValidationError
from .preference import PreferenceOracle
from .raf import Raf, scale_top
from .sampling import RafSampler

__all__ = [
    "membership",
    "UtilityResult",
    "compute_u",
    "check_certificate",
    "RepresentationViolation",
    "RepresentationReport",
    "validate_representation",
]


def membership(oracle: PreferenceOracle, raf: Raf, t: float) -> bool:
    """Is the constant RAF at level ``t`` weakly preferred to ``raf``?"""
    if isinstance(t, bool) or not isinstance(t, (int, float)) or not 0.0 <= t <= 1.0:
        raise ValidationError(f"diagonal parameter out of [0, 1]: {t!r}")
    return oracle.weak_prefers(scale_top(t, oracle.alts), raf)


@dataclass(frozen=True)
class UtilityResult:
    """A utility value together with the bracket that certifies it.

    ``membership`` held at ``hi`` and failed at ``lo`` when the result was
    produced (except at an exact boundary, where ``lo == hi``), ``u`` is the
    bracket midpoint and the bracket is no wider than ``2 * tol``.
    """

    u: float
    lo: float
    hi: float
    tol: float
    oracle_calls: int

    def __post_init__(self) -> None:
        if not 0.0 < self.tol <= 0.5:
            raise ValidationError(f"tolerance must lie in (0, 0.5], got {self.tol!r}")
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValidationError(f"bracket out of order: lo={self.lo!r}, hi={self.hi!r}")
        if self.u != 0.5 * (self.lo + self.hi):
            raise ValidationError(f"u={self.u!r} is not the midpoint of [{self.lo!r}, {self.hi!r}]")
        if self.hi - self.lo > 2.0 * self.tol:
            raise ValidationError(
                f"bracket wider than 2*tol: {self.hi - self.lo!r} > {2.0 * self.tol!r}"
            )
        if isinstance(self.oracle_calls, bool) or not isinstance(self.oracle_calls, int):
            raise ValidationError(f"oracle_calls must be an integer, got {self.oracle_calls!r}")
        if self.oracle_calls < 0:
            raise ValidationError(f"oracle_calls must be nonnegative, got {self.oracle_calls!r}")

    @property
    def exact(self) -> bool:
        """True at the cube boundary, where the bracket has collapsed."""
        return self.lo == self.hi

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "lo": self.lo,
            "hi": self.hi,
            "tol": self.tol,
            "oracle_calls": self.oracle_calls,
        }


def compute_u(oracle: PreferenceOracle, raf: Raf, tol: float) -> UtilityResult:
    """Bisect the diagonal membership predicate down to a ``2 * tol`` bracket.

    Both ends of the ray are probed first.  If level 0 is already a member
    the answer is exactly 0; if the target is the all-ones RAF the answer is
    exactly 1 (membership at 1 holds by reflexivity and no interior level
    can be certified against it).  Failure of membership at 1 contradicts
    the weak-dominance hypothesis and raises
    :class:`DiagonalMonotonicityError` with the probed parameters.

    The total number of membership queries is at most
    ``2 + ceil(log2(1/tol))``.
    """
    if isinstance(tol, bool) or not isinstance(tol, (int, float)) or not 0.0 < tol <= 0.5:
        raise ValidationError(f"tolerance must lie in (0, 0.5], got {tol!r}")
    tol = float(tol)
    calls = 0

    def member(t: float) -> bool:
        nonlocal calls
        calls += 1
        return membership(oracle, raf, t)

    member_at_zero = member(0.0)
    if not member(1.0):
        seen = f"membership(0.0)={member_at_zero}, membership(1.0)=False"
        raise DiagonalMonotonicityError(
            "oracle violates weak dominance on the diagonal ray: full availability "
            f"is not weakly preferred to the target ({seen})",
            raf=raf,
            t_member=0.0 if member_at_zero else None,
            t_nonmember=1.0,
        )
    if member_at_zero:
        return UtilityResult(u=0.0, lo=0.0, hi=0.0, tol=tol, oracle_calls=calls)
    if all(v == 1.0 for v in raf.values):
        return UtilityResult(u=1.0, lo=1.0, hi=1.0, tol=tol, oracle_calls=calls)

    lo, hi = 0.0, 1.0
    while hi - lo > 2.0 * tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # float resolution exhausted
            break
        if member(mid):
            hi = mid
        else:
            lo = mid
    return UtilityResult(u=0.5 * (lo + hi), lo=lo, hi=hi, tol=tol, oracle_calls=calls)


def check_certificate(oracle: PreferenceOracle, raf: Raf, result: UtilityResult) -> bool:
    """Re-query the bracket endpoints of a previously computed result.

    Returns ``True`` when membership still holds at ``hi`` and still fails
    at ``lo``; for an exact boundary result the collapsed bracket must sit at
    a cube corner and membership must hold at it.  A ``False`` answer means
    the oracle no longer stands behind the certificate.
    """
    if result.lo == result.hi:
        at_boundary = result.lo == 0.0 or result.hi == 1.0
        return at_boundary and membership(oracle, raf, result.hi)
    return membership(oracle, raf, result.hi) and not membership(oracle, raf, result.lo)


@dataclass(frozen=True)
class RepresentationViolation:
    """A sampled pair on which utilities and the oracle disagree outright."""

    first: Raf
    second: Raf
    u_first: float
    u_second: float
    weak_first_second: bool
    weak_second_first: bool

    def to_dict(self) -> dict:
        return {
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "u_first": self.u_first,
            "u_second": self.u_second,
            "weak_first_second": self.weak_first_second,
            "weak_second_first": self.weak_second_first,
        }


@dataclass(frozen=True)
class RepresentationReport:
    """Outcome counts of a sampled representation check.

    Pairs whose utilities differ by more than ``2 * tol`` are classified as
    confirmed or violated by comparing the sign of the difference with the
    oracle's answers.  Pairs inside the band are indeterminate: the brackets
    cannot separate them.  ``indeterminate_strict`` counts the indeterminate
    pairs on which the oracle nevertheless expresses a strict preference,
    the signature of an order that no single utility can represent.
    """

    oracle: str
    seed: int | None
    tol: float
    pairs_tested: int
    confirmed: int
    indeterminate: int
    indeterminate_strict: int
    violations: tuple[RepresentationViolation, ...]

    def __post_init__(self) -> None:
        if self.confirmed + self.indeterminate + len(self.violations) != self.pairs_tested:
            raise ValidationError(
                "representation report does not partition its pairs: "
                f"{self.confirmed} + {self.indeterminate} + {len(self.violations)} "
                f"!= {self.pairs_tested}"
            )
        if self.indeterminate_strict > self.indeterminate:
            raise ValidationError(
                "indeterminate_strict cannot exceed indeterminate: "
                f"{self.indeterminate_strict} > {self.indeterminate}"
            )

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle,
            "seed": self.seed,
            "tol": self.tol,
            "pairs_tested": self.pairs_tested,
            "confirmed": self.confirmed,
            "indeterminate": self.indeterminate,
            "indeterminate_strict": self.indeterminate_strict,
            "violations": [v.to_dict() for v in self.violations],
        }


def validate_representation(
    oracle: PreferenceOracle,
    sampler: RafSampler,
    n_pairs: int,
    tol: float,
) -> RepresentationReport:
    """Compare computed utilities with direct oracle answers on sampled pairs.

    Each pair costs two bisections plus two preference queries.  A pair is
    confirmed when the utilities are separated by more than ``2 * tol`` and
    the oracle's two answers match the sign of the separation exactly; any
    mismatch is recorded as a violation with full data.  ``n_pairs`` may be
    zero, yielding an empty report.  A diagonal-monotonicity failure inside
    a bisection propagates, with the offending pair named.
    """
    if isinstance(n_pairs, bool) or not isinstance(n_pairs, int) or n_pairs < 0:
        raise ValidationError(f"n_pairs must be a nonnegative integer, got {n_pairs!r}")
    if isinstance(tol, bool) or not isinstance(tol, (int, float)) or not 0.0 < tol <= 0.5:
        raise ValidationError(f"tolerance must lie in (0, 0.5], got {tol!r}")
    confirmed = 0
    indeterminate = 0
    indeterminate_strict = 0
    violations = []
    for _ in range(n_pairs):
        a, b = sampler.raf(), sampler.raf()
        try:
            u_a = compute_u(oracle, a, tol).u
            u_b = compute_u(oracle, b, tol).u
        except DiagonalMonotonicityError as exc:
            raise DiagonalMonotonicityError(
                f"{exc} (raised while validating the pair {a.to_dict()} vs {b.to_dict()})",
                raf=exc.raf,
                t_member=exc.t_member,
                t_nonmember=exc.t_nonmember,
            ) from exc
        weak_ab = oracle.weak_prefers(a, b)
        weak_ba = oracle.weak_prefers(b, a)
        if abs(u_a - u_b) <= 2.0 * tol:
            indeterminate += 1
            if weak_ab != weak_ba:
                indeterminate_strict += 1
        elif (u_a > u_b) == (weak_ab and not weak_ba) and (u_b > u_a) == (
            weak_ba and not weak_ab
        ):
            confirmed += 1
        else:
            violations.append(
                RepresentationViolation(a, b, u_a, u_b, weak_ab, weak_ba)
            )
    return RepresentationReport(
        oracle=oracle.name,
        seed=sampler.seed,
        tol=float(tol),
        pairs_tested=n_pairs,
        confirmed=confirmed,
        indeterminate=indeterminate,
        indeterminate_strict=indeterminate_strict,
        violations=tuple(violations),
    )
