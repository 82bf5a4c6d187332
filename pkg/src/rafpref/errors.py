"""Exception hierarchy shared across the package.

Every error raised by this package derives from :class:`RafPrefError`, so
callers can catch the whole family with one clause.  Errors that signal bad
inputs additionally derive from :class:`ValueError`; errors that signal a
property failure discovered at run time derive from :class:`RuntimeError`
and carry the witnessing data.
"""

from __future__ import annotations

from typing import Any


class RafPrefError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RafPrefError, ValueError):
    """An input violates a constructor or operation contract."""


class AlternativeSetMismatchError(RafPrefError, ValueError):
    """Operands are defined over different alternative sets."""


class DominanceHypothesisError(RafPrefError, ValueError):
    """The perturbation construction requires pointwise dominance and it fails."""


class DiagonalMonotonicityError(RafPrefError, RuntimeError):
    """Membership along the diagonal ray is not monotone.

    Raised by the bisection when the full-availability point fails to be
    weakly preferred to the target, which contradicts the weak-dominance
    hypothesis the construction relies on.  ``t_member`` and ``t_nonmember``
    hold the probed parameters that witness the failure (``t_member`` is
    ``None`` when no member was seen before the failure).
    """

    def __init__(
        self,
        message: str,
        *,
        raf: Any = None,
        t_member: float | None = None,
        t_nonmember: float | None = None,
    ) -> None:
        super().__init__(message)
        self.raf = raf
        self.t_member = t_member
        self.t_nonmember = t_nonmember


class MenuAxiomError(RafPrefError, RuntimeError):
    """No menu item is weakly preferred to every other item.

    For a reflexive, connected, transitive oracle a finite menu always has a
    maximal item, so an empty maximal set proves an axiom violation.  ``kind``
    names the violated axiom (``"connectedness"`` or ``"transitivity"``) and
    ``witness`` carries the offending pair or strict-preference cycle as a
    tuple of menu labels.
    """

    def __init__(self, message: str, *, kind: str, witness: tuple[str, ...]) -> None:
        super().__init__(message)
        self.kind = kind
        self.witness = witness
