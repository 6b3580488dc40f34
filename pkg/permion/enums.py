"""Enums for permion."""

from enum import Enum


class RepresentationKind(str, Enum):
    """Named representations of the symmetric group."""

    TRIVIAL = "trivial"
    ALTERNATING = "alternating"
    NATURAL = "natural"
    REGULAR = "regular"
    STANDARD = "standard"
    CUSTOM = "custom"


class Statistics(str, Enum):
    """Exchange statistics of identical particles."""

    FERMION = "fermion"
    BOSON = "boson"


class LadderKind(str, Enum):
    """Direction of a ladder operator."""

    CREATE = "create"
    ANNIHILATE = "annihilate"


class Symmetry(str, Enum):
    """Behaviour of a first-quantized tensor under particle exchange."""

    BOSONIC = "bosonic"
    FERMIONIC = "fermionic"
    NEITHER = "neither"


class OperatorOrder(str, Enum):
    """Factor order of a Young operator."""

    COLUMNS_FIRST = "columns-first"
    ROWS_FIRST = "rows-first"


class CommandStatus(str, Enum):
    """Outcome of a CLI command."""

    OK = "ok"
    VERIFICATION_FAILED = "verification_failed"
    USAGE_ERROR = "usage_error"

    @property
    def exit_code(self) -> int:
        return {"ok": 0, "verification_failed": 1, "usage_error": 2}[self.value]


class OutputFormat(str, Enum):
    """CLI rendering format."""

    JSON = "json"
    TEXT = "text"
