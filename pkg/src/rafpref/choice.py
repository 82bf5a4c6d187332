"""Choice from finite menus, by tournament and by computed utility.

:func:`maximal_set` asks the oracle directly: an item is chosen when it is
weakly preferred to every item on the menu.  For a reflexive, connected,
transitive oracle that set is never empty; when it comes back empty the
function hunts down a witness (an incomparable pair or a strict-preference
cycle) and raises :class:`MenuAxiomError` with it.

:func:`choose_by_utility` goes through the constructed utility instead and
returns every item within ``2 * tol`` of the best one, the resolution the
brackets can actually certify.  :func:`cross_validate_choice` runs both and
checks containment: tournament winners must land inside the utility band.
The band may legitimately contain more (items a lexicographic-style oracle
separates but utilities cannot); those are reported as band artifacts, not
failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import MenuAxiomError, ValidationError
from .preference import PreferenceOracle
from .raf import AlternativeSet, Raf
from .utility import compute_u

__all__ = [
    "Menu",
    "ChoiceResult",
    "ChoiceCrossReport",
    "maximal_set",
    "choose_by_utility",
    "cross_validate_choice",
]


@dataclass(frozen=True)
class Menu:
    """A nonempty list of labeled RAFs over a common alternative set."""

    alts: AlternativeSet
    labels: tuple[str, ...]
    items: tuple[Raf, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        items = tuple(self.items)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "items", items)
        if not items:
            raise ValidationError("a menu needs at least one item")
        if len(labels) != len(items):
            raise ValidationError(
                f"got {len(labels)} labels for {len(items)} menu items"
            )
        seen: set[str] = set()
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"menu labels must be nonempty strings, got {label!r}")
            if label in seen:
                raise ValidationError(f"duplicate menu label: {label!r}")
            seen.add(label)
        for label, item in zip(labels, items):
            if item.alts is not self.alts and item.alts != self.alts:
                raise ValidationError(
                    f"menu item {label!r} uses alternative set {item.alts.labels}, "
                    f"expected {self.alts.labels}"
                )

    def __len__(self) -> int:
        return len(self.items)

    def pairs(self) -> Iterator[tuple[str, Raf]]:
        return iter(zip(self.labels, self.items))

    def to_dict(self) -> dict:
        return {
            "alts": list(self.alts.labels),
            "items": [
                {"label": label, "values": list(item.values)} for label, item in self.pairs()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Menu":
        try:
            alts = AlternativeSet(tuple(data["alts"]))
            entries = list(data["items"])
            labels = tuple(entry["label"] for entry in entries)
            items = tuple(Raf(alts, tuple(entry["values"])) for entry in entries)
        except (KeyError, TypeError):
            raise ValidationError(
                "a menu document needs 'alts' and 'items' (each with 'label' and 'values')"
            ) from None
        return cls(alts, labels, items)


@dataclass(frozen=True)
class ChoiceResult:
    """Chosen labels in menu order, plus how they were chosen."""

    chosen: tuple[str, ...]
    method: str
    utilities: Mapping[str, float] | None = None

    def __post_init__(self) -> None:
        if not self.chosen:
            raise ValidationError("a choice result cannot be empty")
        if self.method not in ("tournament", "utility"):
            raise ValidationError(f"unknown choice method {self.method!r}")

    def to_dict(self) -> dict:
        out: dict = {"chosen": list(self.chosen), "method": self.method}
        if self.utilities is not None:
            out["utilities"] = dict(self.utilities)
        return out


def _witness_hunt(oracle: PreferenceOracle, menu: Menu) -> MenuAxiomError:
    # An empty maximal set on a finite menu proves an axiom violation; find
    # one to report.  First look for an incomparable pair (connectedness,
    # including an item incomparable with itself), then follow strict
    # improvements until they loop (transitivity).
    n = len(menu)

    def weak(i: int, j: int) -> bool:
        return oracle.weak_prefers(menu.items[i], menu.items[j])

    for i in range(n):
        for j in range(i, n):
            if not weak(i, j) and not weak(j, i):
                return MenuAxiomError(
                    "oracle violates connectedness or transitivity on this menu: "
                    f"items {menu.labels[i]!r} and {menu.labels[j]!r} are incomparable",
                    kind="connectedness",
                    witness=(menu.labels[i], menu.labels[j]),
                )

    def improver(i: int) -> int:
        # Some strictly better item exists, else i would have been maximal.
        for j in range(n):
            if weak(j, i) and not weak(i, j):
                return j
        raise AssertionError("unreachable: item was not maximal yet nothing beats it")

    seen: dict[int, int] = {}
    path = [0]
    seen[0] = 0
    while True:
        nxt = improver(path[-1])
        if nxt in seen:
            cycle = path[seen[nxt]:] + [nxt]
            labels = tuple(menu.labels[i] for i in cycle)
            return MenuAxiomError(
                "oracle violates connectedness or transitivity on this menu: "
                f"strict preference cycle {' -> '.join(labels)}",
                kind="transitivity",
                witness=labels,
            )
        seen[nxt] = len(path)
        path.append(nxt)


def maximal_set(oracle: PreferenceOracle, menu: Menu) -> ChoiceResult:
    """Items weakly preferred to every menu item, by direct tournament.

    A champion sweep finds one plausible winner; only items weakly preferred
    to the champion can be maximal, and each of those is verified against
    the whole menu.  Cost is linear in the menu for well-behaved oracles,
    quadratic at worst.  Raises :class:`MenuAxiomError` when no item
    survives, with a witness of the violated axiom.
    """
    items = menu.items
    champion = 0
    for i in range(1, len(items)):
        if oracle.weak_prefers(items[i], items[champion]):
            champion = i
    candidates = [
        i for i in range(len(items)) if oracle.weak_prefers(items[i], items[champion])
    ]
    chosen = [
        menu.labels[i]
        for i in candidates
        if all(oracle.weak_prefers(items[i], b) for b in items)
    ]
    if not chosen:
        raise _witness_hunt(oracle, menu)
    return ChoiceResult(tuple(chosen), "tournament")


def choose_by_utility(oracle: PreferenceOracle, menu: Menu, tol: float) -> ChoiceResult:
    """Items whose computed utility is within ``2 * tol`` of the menu's best."""
    results = {label: compute_u(oracle, item, tol) for label, item in menu.pairs()}
    utilities = {label: r.u for label, r in results.items()}
    best = max(utilities.values())
    chosen = tuple(label for label in menu.labels if utilities[label] >= best - 2.0 * tol)
    return ChoiceResult(chosen, "utility", utilities=utilities)


@dataclass(frozen=True)
class ChoiceCrossReport:
    """Comparison of tournament choice against utility-band choice."""

    tournament: tuple[str, ...]
    utility_band: tuple[str, ...]
    escaped: tuple[str, ...]
    band_artifacts: tuple[str, ...]
    utilities: Mapping[str, float]
    tol: float

    @property
    def agreed(self) -> bool:
        """Containment holds: every tournament winner sits in the band."""
        return not self.escaped

    def to_dict(self) -> dict:
        return {
            "tournament": list(self.tournament),
            "utility_band": list(self.utility_band),
            "escaped": list(self.escaped),
            "band_artifacts": list(self.band_artifacts),
            "utilities": dict(self.utilities),
            "tol": self.tol,
            "agreed": self.agreed,
        }


def cross_validate_choice(
    oracle: PreferenceOracle, menu: Menu, tol: float
) -> tuple[bool, ChoiceCrossReport]:
    """Run both choice routes and check the tournament sits inside the band.

    Band items missing from the tournament are reported as artifacts of the
    band's ``2 * tol`` resolution, not failures; a tournament winner outside
    the band (an escapee) is a genuine disagreement.
    """
    tournament = maximal_set(oracle, menu)
    by_utility = choose_by_utility(oracle, menu, tol)
    band = set(by_utility.chosen)
    escaped = tuple(label for label in tournament.chosen if label not in band)
    artifacts = tuple(
        label for label in by_utility.chosen if label not in set(tournament.chosen)
    )
    report = ChoiceCrossReport(
        tournament=tournament.chosen,
        utility_band=by_utility.chosen,
        escaped=escaped,
        band_artifacts=artifacts,
        utilities=dict(by_utility.utilities or {}),
        tol=float(tol),
    )
    return report.agreed, report
