"""Sampled checks and falsifiers for the order and regularity axioms.

The axioms quantify over an uncountable space, so nothing here proves
anything.  A clean outcome is reported as ``"passed_sampled"``; a dirty one
is ``"falsified"`` and carries a concrete witness that has been replayed
through the public predicates before being reported, so a report is never
wrong about a falsification.  Continuity falsification is additionally only
semi-decidable: the fixed family library either exhibits a witness or says
"not falsified at this depth", never "verified".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import ValidationError
from .preference import PreferenceOracle, strictly_prefers
from .raf import AlternativeSet, Raf, bottom, scale_top, strictly_dominates, top
from .sampling import RafSampler

__all__ = [
    "PASSED_SAMPLED",
    "FALSIFIED",
    "AxiomCheck",
    "AxiomReport",
    "check_order_axioms",
    "falsify_weak_dominance",
    "SequenceFamily",
    "ContinuityWitness",
    "builtin_families",
    "falsify_weak_continuity",
]

PASSED_SAMPLED = "passed_sampled"
FALSIFIED = "falsified"


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom's sampled check."""

    axiom: str
    verdict: str
    samples: int
    witness: dict | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASSED_SAMPLED

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "verdict": self.verdict,
            "samples": self.samples,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts for one oracle, plus the seed that produced them."""

    oracle: str
    seed: int | None
    checks: tuple[AxiomCheck, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise ValidationError(f"no check recorded for axiom {axiom!r}")

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle,
            "seed": self.seed,
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _positive_count(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValidationError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_order_axioms(
    oracle: PreferenceOracle,
    sampler: RafSampler,
    n_pairs: int,
    n_triples: int,
) -> AxiomReport:
    """Probe reflexivity, connectedness and transitivity on random draws.

    Reflexivity and connectedness each use ``n_pairs`` draws, transitivity
    uses ``n_triples`` triples with all six ordered queries cached.  The
    first violation of each axiom is re-queried before it is reported.
    """
    _positive_count("n_pairs", n_pairs)
    _positive_count("n_triples", n_triples)
    checks = []

    verdict, samples, witness = PASSED_SAMPLED, n_pairs, None
    for i in range(n_pairs):
        a = sampler.raf()
        if oracle.weak_prefers(a, a):
            continue
        if not oracle.weak_prefers(a, a):  # replay before reporting
            verdict, samples = FALSIFIED, i + 1
            witness = {"raf": a.to_dict()}
            break
    checks.append(AxiomCheck("reflexivity", verdict, samples, witness))

    verdict, samples, witness = PASSED_SAMPLED, n_pairs, None
    for i in range(n_pairs):
        a, b = sampler.raf(), sampler.raf()
        if oracle.weak_prefers(a, b) or oracle.weak_prefers(b, a):
            continue
        if not oracle.weak_prefers(a, b) and not oracle.weak_prefers(b, a):  # replay
            verdict, samples = FALSIFIED, i + 1
            witness = {"first": a.to_dict(), "second": b.to_dict()}
            break
    checks.append(AxiomCheck("connectedness", verdict, samples, witness))

    verdict, samples, witness = PASSED_SAMPLED, n_triples, None
    for i in range(n_triples):
        triple = (sampler.raf(), sampler.raf(), sampler.raf())
        rel = {
            (x, y): oracle.weak_prefers(triple[x], triple[y])
            for x in range(3)
            for y in range(3)
            if x != y
        }
        broken = next(
            (
                (x, y, z)
                for x in range(3)
                for y in range(3)
                for z in range(3)
                if len({x, y, z}) == 3 and rel[(x, y)] and rel[(y, z)] and not rel[(x, z)]
            ),
            None,
        )
        if broken is not None:
            x, y, z = broken
            replay = (
                oracle.weak_prefers(triple[x], triple[y])
                and oracle.weak_prefers(triple[y], triple[z])
                and not oracle.weak_prefers(triple[x], triple[z])
            )
            if replay:
                verdict, samples = FALSIFIED, i + 1
                witness = {
                    "first": triple[x].to_dict(),
                    "second": triple[y].to_dict(),
                    "third": triple[z].to_dict(),
                }
                break
    checks.append(AxiomCheck("transitivity", verdict, samples, witness))

    return AxiomReport(oracle.name, sampler.seed, tuple(checks))


def falsify_weak_dominance(
    oracle: PreferenceOracle,
    sampler: RafSampler,
    n_pairs: int,
) -> tuple[Raf, Raf] | None:
    """Search for a strictly dominating pair that is not strictly preferred.

    The canonical pair (everything available, nothing available) is always
    probed first; ``n_pairs`` sampled strictly dominating pairs follow.
    Returns the witnessing pair, or ``None`` when no violation was seen.
    """
    _positive_count("n_pairs", n_pairs)
    candidates: Iterable[tuple[Raf, Raf]] = (
        sampler.strictly_dominating_pair() for _ in range(n_pairs)
    )
    canonical = (top(oracle.alts), bottom(oracle.alts))
    for a, b in (canonical, *candidates):
        if not strictly_dominates(a, b):  # pragma: no cover - sampler guarantees this
            continue
        if strictly_prefers(oracle, a, b):
            continue
        if not strictly_prefers(oracle, a, b):  # replay before reporting
            return (a, b)
    return None


@dataclass(frozen=True)
class SequenceFamily:
    """A parametric pair of RAF sequences with known limits.

    ``term(n)`` (``n`` from 1) yields the n-th pair; both components converge
    to the corresponding entry of ``limits``.  Families are the probes of the
    continuity falsifier: a witness is a family whose terms are all strictly
    preferred one way while the limits are strictly preferred the other way.
    """

    description: str
    term: Callable[[int], tuple[Raf, Raf]]
    limits: tuple[Raf, Raf]

    def swapped(self) -> "SequenceFamily":
        """The same family with the two sides exchanged."""
        term = self.term

        def swapped_term(n: int) -> tuple[Raf, Raf]:
            a, b = term(n)
            return b, a

        return SequenceFamily(
            f"{self.description} (swapped)", swapped_term, (self.limits[1], self.limits[0])
        )


@dataclass(frozen=True)
class ContinuityWitness:
    """A family whose termwise strict preference reverses in the limit."""

    family: SequenceFamily
    depth: int

    def to_dict(self) -> dict:
        first_term = self.family.term(1)
        return {
            "family": self.family.description,
            "depth": self.depth,
            "term_1": {"first": first_term[0].to_dict(), "second": first_term[1].to_dict()},
            "limit_first": self.family.limits[0].to_dict(),
            "limit_second": self.family.limits[1].to_dict(),
        }


def builtin_families(
    alts: AlternativeSet, loci: Sequence[float] = (0.5,)
) -> list[SequenceFamily]:
    """The fixed library of convergent sequence pairs, in both orientations.

    Three shapes are generated: approaches to a point of the diagonal from
    above, straddles of a diagonal locus (a constant anchor on one side of
    the locus against a ray converging to it from the other side, in both
    the low and high variants), and single-coordinate bumps against a
    constant that differs elsewhere.  ``loci`` extends the straddled points;
    oracles with a declared discontinuity (a threshold cutoff, say) should
    have it included here.
    """
    families = []

    for t0 in (0.25, 0.5, 0.75):
        def term(n: int, _t0: float = t0) -> tuple[Raf, Raf]:
            return scale_top(_t0 + 1.0 / (4.0 * n), alts), scale_top(_t0, alts)

        families.append(
            SequenceFamily(
                f"diagonal approach to {t0} from above",
                term,
                (scale_top(t0, alts), scale_top(t0, alts)),
            )
        )

    seen = set()
    for locus in loci:
        c = float(locus)
        if not 0.0 < c < 1.0:
            raise ValidationError(f"straddle locus must lie strictly inside (0, 1), got {locus!r}")
        if c in seen:
            continue
        seen.add(c)

        def below_term(n: int, _c: float = c) -> tuple[Raf, Raf]:
            return scale_top(_c / 4.0, alts), scale_top(_c * (1.0 - 1.0 / (2.0 * n)), alts)

        families.append(
            SequenceFamily(
                f"low anchor against a ray rising to {c}",
                below_term,
                (scale_top(c / 4.0, alts), scale_top(c, alts)),
            )
        )

        def above_term(n: int, _c: float = c) -> tuple[Raf, Raf]:
            high = _c + 3.0 * (1.0 - _c) / 4.0
            return scale_top(high, alts), scale_top(_c + (1.0 - _c) / (2.0 * n), alts)

        families.append(
            SequenceFamily(
                f"high anchor against a ray falling to {c}",
                above_term,
                (scale_top(c + 3.0 * (1.0 - c) / 4.0, alts), scale_top(c, alts)),
            )
        )

    k = len(alts)
    for i, label in enumerate(alts.labels):
        def bump_term(n: int, _i: int = i) -> tuple[Raf, Raf]:
            moving = tuple(
                (0.5 + 1.0 / (4.0 * n)) if j == _i else 0.0 for j in range(k)
            )
            anchor = tuple(0.5 if j == _i else 1.0 for j in range(k))
            return Raf(alts, moving), Raf(alts, anchor)

        families.append(
            SequenceFamily(
                f"bump on {label} against a constant that is better elsewhere",
                bump_term,
                (
                    Raf(alts, tuple(0.5 if j == i else 0.0 for j in range(k))),
                    Raf(alts, tuple(0.5 if j == i else 1.0 for j in range(k))),
                ),
            )
        )

    return families + [f.swapped() for f in families]


def falsify_weak_continuity(
    oracle: PreferenceOracle,
    families: Iterable[SequenceFamily],
    depth: int,
) -> ContinuityWitness | None:
    """Search the family library for a continuity violation.

    A witness requires strict preference of the first side at every term up
    to ``depth`` together with strict preference of the *second* side in the
    limit.  ``None`` means "not falsified at this depth" and must not be read
    as a verification: the library is a fixed net, not a dense one.
    """
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 1:
        raise ValidationError(f"depth must be a positive integer, got {depth!r}")
    for family in families:
        limit_first, limit_second = family.limits
        if not strictly_prefers(oracle, limit_second, limit_first):
            continue
        if all(strictly_prefers(oracle, *family.term(n)) for n in range(1, depth + 1)):
            # Replay the whole witness before reporting it.
            replay = strictly_prefers(oracle, limit_second, limit_first) and all(
                strictly_prefers(oracle, *family.term(n)) for n in range(1, depth + 1)
            )
            if replay:
                return ContinuityWitness(family, depth)
    return None
