"""Shared models and enums used across simplexembed modules."""

from enum import Enum, IntEnum


class Verdict(str, Enum):
    """Outcome of the Van Kampen test for EMBED(k, 2k)."""

    EMBEDDABLE = "Embeddable"
    NOT_EMBEDDABLE = "NotEmbeddable"
    INCONCLUSIVE_VANISHING = "InconclusiveVanishing"


class Embed22Verdict(str, Enum):
    """Outcome of the plane embeddability decision for 2-complexes."""

    YES = "YES"
    NO = "NO"


class Embed22Reason(str, Enum):
    """Stage of the plane pipeline that produced a NO answer."""

    PLANARITY_FAILURE = "PlanarityFailure"
    LINK_FAILURE = "LinkFailure"
    HOMOLOGICAL_CYCLE = "HomologicalCycle"
    NONE = "None"


class DecisionMode(str, Enum):
    """Decision procedure selected on the command line."""

    VANKAMPEN = "vankampen"
    PLANE = "plane"


class OutputFormat(str, Enum):
    """Report format for CLI output."""

    TEXT = "text"
    JSON = "json"


class Parity(str, Enum):
    """Parity of an intersection count."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls.ODD if value % 2 else cls.EVEN


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""

    OK = 0
    USAGE = 1
    PRECONDITION = 2
    INTERNAL = 3
    NEGATIVE = 10
    INCONCLUSIVE = 11
