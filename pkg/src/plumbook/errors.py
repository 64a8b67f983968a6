"""Exception types and structured diagnostics shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One validation finding: a short machine-readable code plus detail text."""

    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class InvalidPresentationError(ValueError):
    """Raised when an operation needs a valid polygon presentation but got violations."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class UnknownPairError(KeyError):
    """An arc word references a glued pair absent from its surface."""


class MixedSurfacesError(ValueError):
    """Two arcs from different surfaces were combined."""


class NoSharedStartError(ValueError):
    """first_divergence needs both arcs to leave the same boundary point."""


class InvalidOpenBookError(ValueError):
    """Raised when an operation needs a valid partial open book but got violations."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class SiteObstructedError(ValueError):
    """The requested stabilization site is not a free boundary segment."""


class NotABasisError(ValueError):
    """A product-disk system does not cut its supporting subsurface into disks."""


class OddTwistError(ValueError):
    """Twisted annuli need an even number of half twists to be orientable."""


class ZeroTwistError(ValueError):
    """A zero-twist band is not an annulus summand; the construction is undefined there."""


class HopfOnlyWarning(UserWarning):
    """A non-leading summand is a bare Hopf band, outside the surveyed family."""


class DocumentError(ValueError):
    """A document failed to parse or had an unsupported kind/version."""
