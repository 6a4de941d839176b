"""Exception types shared across the package."""


class SameOrderError(Exception):
    """Base class for every error raised by this package."""


class NotAGroup(SameOrderError):
    """A multiplication table violates one of the group axioms."""


class BadParameter(SameOrderError):
    """A constructor or CLI parameter is outside its supported range."""


class InvalidAction(SameOrderError):
    """An action table is not a homomorphism into the automorphisms of the factor it acts on."""


class NotASubgroup(SameOrderError):
    """A subset passed where a subgroup is required is not closed."""


class NotNormal(SameOrderError):
    """A subgroup passed where a normal subgroup is required is not conjugation-invariant."""


class AmbiguousCenter(SameOrderError):
    """A central-product factor has no, or more than one, central involution."""


class InternalInconsistency(SameOrderError):
    """Two independent computations of the same quantity disagree; signals an engine bug."""


class TheoremViolation(SameOrderError):
    """A structural fact the engine re-checks failed on a group; carries the offending record."""

    def __init__(self, theorem: str, label: str, record=None):
        super().__init__(f"{theorem} violated on {label}")
        self.theorem = theorem
        self.label = label
        self.record = record


class ParseError(SameOrderError):
    """A Cayley-table file does not match the text format."""


class ExprSyntaxError(ParseError):
    """A group expression does not match the grammar; knows where it went wrong."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SuiteFailure(SameOrderError):
    """A verification suite found failures; carries the full report."""

    def __init__(self, report):
        super().__init__(
            f"suite {report.suite!r} failed with {len(report.failures)} failure(s)"
        )
        self.report = report
