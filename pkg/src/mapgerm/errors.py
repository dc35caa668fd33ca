"""Exception types shared across the package."""


class MapGermError(Exception):
    """Base class for all domain errors."""


class ParseError(MapGermError):
    """Syntax error in a polynomial expression, with byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
        self.message = message


class SpecError(MapGermError):
    """Invalid germ specification document."""


class ColengthUndecided(MapGermError):
    """Truncation ceiling reached without stabilization or a positive
    dimension certificate; a configuration problem, not a verdict."""

    def __init__(self, ceiling):
        super().__init__(f"colength undecided at ceiling {ceiling}")
        self.ceiling = ceiling


class NotACurve(MapGermError):
    """The double point locus is not a curve (finite determinacy fails)."""


class CorankPathUnavailable(MapGermError):
    """Corank-1 construction requested for a germ it does not apply to."""


class TripleSchemeAnomaly(MapGermError):
    """Triple-point scheme colength not divisible by 6."""


class CrossCheckMismatch(MapGermError):
    """Two independent computations of the same invariant disagree."""

    def __init__(self, name, primary, secondary):
        super().__init__(
            f"{name}: primary path gives {primary}, cross-check gives {secondary}"
        )
        self.primary = primary
        self.secondary = secondary


class DegenerateProjections(MapGermError):
    """All sampled linear projections were degenerate."""


class NotFinitelyDetermined(MapGermError):
    """A family member (special or generic) fails the finiteness proxy."""


class PoleAtSample(MapGermError):
    """A coefficient denominator vanishes at the requested parameter value."""


class InternalContradiction(MapGermError):
    """Conditions that are provably equivalent evaluated differently;
    carries the full evidence."""

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence or {}
