"""Data models for permion."""

import os
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .enums import CommandStatus
from .exceptions import CapacityError, ConfigurationError

MAX_N_ENV = "PERMION_MAX_N"

# Caps lowered by PERMION_MAX_N; basis-size caps are left alone.
_DEGREE_CAPS = (
    "max_enumerate_n",
    "max_table_n",
    "max_classes_n",
    "max_axioms_n",
    "max_regular_n",
    "max_homomorphism_n",
    "max_symmetrizer_n",
    "max_standard_n",
    "max_partition_n",
    "max_tableaux_n",
    "max_tensor_particles",
    "max_fermion_modes",
    "max_car_modes",
    "max_majorana_modes",
    "max_schur_weyl_n",
    "max_schur_weyl_d",
)


@dataclass(frozen=True)
class Limits:
    """Desk-scale caps guarding factorial and exponential constructions."""

    max_enumerate_n: int = 8
    max_table_n: int = 6
    max_classes_n: int = 7
    max_axioms_n: int = 5
    max_regular_n: int = 4
    max_homomorphism_n: int = 4
    max_symmetrizer_n: int = 5
    max_standard_n: int = 6
    max_partition_n: int = 10
    max_tableaux_n: int = 8
    max_tensor_particles: int = 6
    max_tensor_size: int = 10**6
    max_fermion_modes: int = 12
    max_car_modes: int = 8
    max_majorana_modes: int = 6
    max_boson_states: int = 10**5
    max_ccr_states: int = 10**4
    max_schur_weyl_n: int = 3
    max_schur_weyl_d: int = 3

    @classmethod
    def from_env(cls, environ: Optional[Dict[str, str]] = None) -> "Limits":
        """
        Build limits, applying the PERMION_MAX_N override if present.

        Args:
            environ: Mapping to read instead of os.environ

        Returns:
            Limits with every degree cap lowered to the override

        Raises:
            ConfigurationError: If the override is not a positive integer
        """
        env = os.environ if environ is None else environ
        raw = env.get(MAX_N_ENV)
        limits = cls()
        if raw is None or raw.strip() == "":
            return limits
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{MAX_N_ENV} must be an integer, got {raw!r}")
        if value < 1:
            raise ConfigurationError(f"{MAX_N_ENV} must be positive, got {value}")
        return limits.lowered_to(value)

    def lowered_to(self, value: int) -> "Limits":
        """Return a copy with every degree cap lowered to at most value."""
        changes = {name: min(getattr(self, name), value) for name in _DEGREE_CAPS}
        return replace(self, **changes)

    def check(self, cap: str, requested: int) -> None:
        """
        Enforce one cap.

        Args:
            cap: Field name of the cap
            requested: Requested size

        Raises:
            CapacityError: If requested exceeds the cap
        """
        limit = getattr(self, cap)
        if requested > limit:
            raise CapacityError(cap, requested, limit)

    def to_dict(self) -> Dict[str, int]:
        """Convert to dictionary for JSON serialization."""
        return {f.name: getattr(self, f.name) for f in fields(self)}


def resolve_limits(limits: Optional[Limits]) -> Limits:
    """Use the given limits or read them from the environment."""
    return limits if limits is not None else Limits.from_env()


@dataclass
class GroupAxiomReport:
    """Outcome of checking the group axioms on S_n."""

    n: int
    order: int
    closure: bool
    identity: bool
    inverses: bool
    associativity: bool
    latin_square: bool
    triples_checked: int = 0

    @property
    def ok(self) -> bool:
        return all(
            (self.closure, self.identity, self.inverses, self.associativity, self.latin_square)
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n": self.n,
            "order": self.order,
            "closure": self.closure,
            "identity": self.identity,
            "inverses": self.inverses,
            "associativity": self.associativity,
            "latin_square": self.latin_square,
            "triples_checked": self.triples_checked,
            "ok": self.ok,
        }


@dataclass
class HomomorphismReport:
    """Outcome of the exhaustive D(a)D(b) = D(a*b) check."""

    ok: bool
    pairs_checked: int
    first_failure: Optional[Tuple[str, str]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "first_failure": list(self.first_failure) if self.first_failure else None,
        }


@dataclass
class RegularDecompositionReport:
    """Dimension bookkeeping of the regular representation."""

    n: int
    irrep_dims: List[int]
    sum_of_squares: int
    group_order: int
    regular_identity_trace: Optional[int] = None

    @property
    def identity_trace_measured(self) -> bool:
        return self.regular_identity_trace is not None

    @property
    def ok(self) -> bool:
        if self.sum_of_squares != self.group_order:
            return False
        return not self.identity_trace_measured or self.regular_identity_trace == self.group_order

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n": self.n,
            "irrep_dims": list(self.irrep_dims),
            "sum_of_squares": self.sum_of_squares,
            "group_order": self.group_order,
            "regular_identity_trace": self.regular_identity_trace,
            "identity_trace_measured": self.identity_trace_measured,
            "ok": self.ok,
        }


@dataclass
class CharacterDecompositionReport:
    """Class-by-class comparison of a character with a weighted sum of characters."""

    target: Dict[str, Fraction]
    expected: Dict[str, Fraction]
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "target": {k: str(v) for k, v in self.target.items()},
            "expected": {k: str(v) for k, v in self.expected.items()},
            "mismatches": list(self.mismatches),
            "ok": self.ok,
        }


@dataclass
class SchurWeylReport:
    """Largest commutator norm seen between permutations and u^{⊗n}."""

    n: int
    d: int
    trials: int
    max_norm: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.max_norm < self.tol

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n": self.n,
            "d": self.d,
            "trials": self.trials,
            "max_norm": self.max_norm,
            "tol": self.tol,
            "ok": self.ok,
        }


@dataclass
class IdempotencyReport:
    """Whether x² = c·x for a single rational c."""

    is_proportional: bool
    constant: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "is_proportional": self.is_proportional,
            "constant": None if self.constant is None else str(self.constant),
        }


@dataclass
class CarReport:
    """Exact deviation from the canonical anticommutation relations."""

    d: int
    pairs_checked: int
    max_violation: int
    failures: List[Tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.max_violation == 0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "d": self.d,
            "pairs_checked": self.pairs_checked,
            "max_violation": self.max_violation,
            "failures": [list(f) for f in self.failures],
            "ok": self.ok,
        }


@dataclass
class CcrReport:
    """Deviation from the canonical commutation relations under truncation."""

    d: int
    truncation: int
    max_violation_on_safe_subspace: float
    truncation_artifact: float
    tol: float = 1e-12

    @property
    def ok(self) -> bool:
        return self.max_violation_on_safe_subspace < self.tol

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "d": self.d,
            "truncation": self.truncation,
            "max_violation_on_safe_subspace": self.max_violation_on_safe_subspace,
            "truncation_artifact": self.truncation_artifact,
            "ok": self.ok,
        }


@dataclass
class GeneralizedCarReport:
    """Measured S matrix of a family α with α_i α_j + α_j α_i = S_ij·1."""

    is_fermionic: bool
    s_matrix: Optional[List[List[Fraction]]] = None
    failure: Optional[Tuple[int, int]] = None

    @property
    def is_symmetric(self) -> bool:
        if self.s_matrix is None:
            return False
        size = len(self.s_matrix)
        return all(
            self.s_matrix[i][j] == self.s_matrix[j][i] for i in range(size) for j in range(size)
        )

    @property
    def is_diagonal(self) -> bool:
        if self.s_matrix is None:
            return False
        return all(
            value == 0
            for i, row in enumerate(self.s_matrix)
            for j, value in enumerate(row)
            if i != j
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "is_fermionic": self.is_fermionic,
            "s_matrix": (
                None
                if self.s_matrix is None
                else [[str(v) for v in row] for row in self.s_matrix]
            ),
            "is_symmetric": self.is_symmetric,
            "is_diagonal": self.is_diagonal,
            "failure": list(self.failure) if self.failure else None,
        }


@dataclass
class CommandResult:
    """
    Outcome of one CLI invocation.

    payload is the JSON-ready result, output its rendering for stdout, and
    message the diagnostic text for stderr. kind selects the text layout.
    """

    status: CommandStatus
    payload: Any = None
    message: str = ""
    kind: str = ""
    output: str = ""

    @property
    def exit_code(self) -> int:
        return self.status.exit_code
