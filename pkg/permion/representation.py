"""Matrix representations of S_n, their characters, and the checks run on them."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .enums import RepresentationKind
from .exceptions import ClassFunctionError, DimensionMismatchError, OrderingError, PermionError
from .linalg import (
    RationalMatrix,
    Scalar,
    apply,
    direct_sum,
    mat_inverse,
    mat_mul,
    matrix_sum,
    scale,
    trace,
)
from .models import (
    CharacterDecompositionReport,
    HomomorphismReport,
    Limits,
    RegularDecompositionReport,
    SchurWeylReport,
    resolve_limits,
)
from .permutation import (
    CycleType,
    Permutation,
    compose,
    cycle_type,
    enumerate_group,
    format_cycles,
    identity,
    sign,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """
    A homomorphism candidate g -> D^g from S_n to d x d rational matrices.

    Matrices are stored eagerly for every group element. Construction checks
    shapes, completeness and D^e = 1; the product law is checked by
    verify_homomorphism.
    """

    n: int
    dim: int
    kind: RepresentationKind
    matrices: Mapping[Permutation, RationalMatrix]

    def __post_init__(self) -> None:
        expected = math.factorial(self.n)
        if len(self.matrices) != expected:
            raise PermionError(
                f"{self.kind.value} representation of S_{self.n} has {len(self.matrices)} "
                f"matrices, expected {expected}"
            )
        for g, matrix in self.matrices.items():
            if g.n != self.n:
                raise PermionError(f"element {g} has degree {g.n}, expected {self.n}")
            if matrix.shape != (self.dim, self.dim):
                raise DimensionMismatchError(
                    f"D^{g} has shape {matrix.shape}, expected {(self.dim, self.dim)}"
                )
        if not self.matrices[identity(self.n)].is_identity():
            raise PermionError("the identity element must map to the identity matrix")

    @property
    def group_order(self) -> int:
        return len(self.matrices)

    def __getitem__(self, g: Permutation) -> RationalMatrix:
        return self.matrices[g]

    def elements(self) -> List[Permutation]:
        """Group elements in lexicographic one-line order."""
        return sorted(self.matrices)

    def to_dict(self) -> Dict[str, object]:
        """Convert to dictionary for JSON serialization."""
        return {
            "label": self.kind.value,
            "n": self.n,
            "dim": self.dim,
            "matrices": {format_cycles(g): self.matrices[g].to_dict() for g in self.elements()},
        }


def _elements(n: int, cap: str, limits: Optional[Limits]) -> List[Permutation]:
    resolved = resolve_limits(limits)
    resolved.check(cap, n)
    return enumerate_group(n, resolved)


def permutation_matrix(sigma: Permutation) -> RationalMatrix:
    """Natural-representation matrix: entry 1 at (sigma(k), k)."""
    n = sigma.n
    return RationalMatrix(
        n, n, tuple(tuple(int(sigma(k) == i) for k in range(1, n + 1)) for i in range(1, n + 1))
    )


def one_dim_rep(
    n: int, kind: RepresentationKind, limits: Optional[Limits] = None
) -> Representation:
    """
    Trivial (D^g = [1]) or alternating (D^g = [sign(g)]) representation.

    Raises:
        PermionError: If kind is not trivial or alternating
    """
    kind = RepresentationKind(kind)
    if kind not in (RepresentationKind.TRIVIAL, RepresentationKind.ALTERNATING):
        raise PermionError(f"{kind.value} is not a one-dimensional representation")
    elements = _elements(n, "max_enumerate_n", limits)
    if kind == RepresentationKind.TRIVIAL:
        matrices = {g: RationalMatrix.from_rows([[1]]) for g in elements}
    else:
        matrices = {g: RationalMatrix.from_rows([[sign(g)]]) for g in elements}
    return Representation(n=n, dim=1, kind=kind, matrices=matrices)


def natural_rep(n: int, limits: Optional[Limits] = None) -> Representation:
    """Permutation matrices acting on the n basis vectors."""
    elements = _elements(n, "max_enumerate_n", limits)
    matrices = {g: permutation_matrix(g) for g in elements}
    return Representation(n=n, dim=n, kind=RepresentationKind.NATURAL, matrices=matrices)


def regular_rep(
    n: int, ordering: Optional[Sequence[Permutation]] = None, limits: Optional[Limits] = None
) -> Representation:
    """
    Left-regular representation: D^g sends basis vector g' to g*g'.

    Args:
        n: Degree
        ordering: Basis order of the h group elements; defaults to lexicographic

    Raises:
        OrderingError: If ordering does not list every element exactly once
    """
    elements = _elements(n, "max_regular_n", limits)
    basis = list(ordering) if ordering is not None else elements
    if len(basis) != len(elements) or set(basis) != set(elements):
        raise OrderingError(
            f"ordering must list each of the {len(elements)} elements of S_{n} once"
        )
    index = {g: i for i, g in enumerate(basis)}
    h = len(basis)
    matrices = {}
    for g in elements:
        grid = [[0] * h for _ in range(h)]
        for col, g_prime in enumerate(basis):
            grid[index[compose(g, g_prime)]][col] = 1
        matrices[g] = RationalMatrix.from_rows(grid)
    logger.debug("[Permion] built regular representation of S_%d (dim %d)", n, h)
    return Representation(n=n, dim=h, kind=RepresentationKind.REGULAR, matrices=matrices)


def verify_homomorphism(r: Representation, limits: Optional[Limits] = None) -> HomomorphismReport:
    """
    Check D^a D^b = D^{a*b} on all pairs.

    Pairs run in lexicographic order of (a, b); the first failing pair is
    reported as cycle strings.
    """
    resolve_limits(limits).check("max_homomorphism_n", r.n)
    elements = r.elements()
    checked = 0
    for a, b in product(elements, repeat=2):
        checked += 1
        if mat_mul(r[a], r[b]) != r[compose(a, b)]:
            logger.debug("[Permion] homomorphism fails at (%s, %s)", a, b)
            return HomomorphismReport(
                ok=False, pairs_checked=checked, first_failure=(format_cycles(a), format_cycles(b))
            )
    return HomomorphismReport(ok=True, pairs_checked=checked)


def character(r: Representation) -> Dict[CycleType, Fraction]:
    """
    Trace of D^g, one value per cycle type.

    Raises:
        ClassFunctionError: If two elements of one class have different traces
    """
    values: Dict[CycleType, Fraction] = {}
    witnesses: Dict[CycleType, Permutation] = {}
    for g in r.elements():
        key = cycle_type(g)
        chi = trace(r[g])
        if key not in values:
            values[key] = chi
            witnesses[key] = g
        elif values[key] != chi:
            raise ClassFunctionError(
                f"trace {chi} at {g} differs from {values[key]} at {witnesses[key]} in class {key}"
            )
    return values


def symmetrizer_image(r: Representation, limits: Optional[Limits] = None) -> RationalMatrix:
    """S = sum of D^g over the group; S² = h·S."""
    resolve_limits(limits).check("max_symmetrizer_n", r.n)
    return matrix_sum((r[g] for g in r.elements()), r.dim, r.dim)


def antisymmetrizer_image(r: Representation, limits: Optional[Limits] = None) -> RationalMatrix:
    """A = sum of sign(g)·D^g over the group; A² = h·A."""
    resolve_limits(limits).check("max_symmetrizer_n", r.n)
    return matrix_sum((scale(r[g], sign(g)) for g in r.elements()), r.dim, r.dim)


def uniform_vector(n: int) -> List[Fraction]:
    return [Fraction(1)] * n


def standard_basis_change(n: int) -> RationalMatrix:
    """
    Columns u, e_1 - e_2, ..., e_{n-1} - e_n.

    The first column spans the invariant uniform line; the rest span the
    sum-zero complement in a rational, non-orthogonal basis.
    """
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        grid[i][0] = Fraction(1)
    for k in range(1, n):
        grid[k - 1][k] = Fraction(1)
        grid[k][k] = Fraction(-1)
    return RationalMatrix.from_rows(grid)


def standard_rep(n: int, limits: Optional[Limits] = None) -> Representation:
    """
    The (n-1)-dimensional remainder of the natural representation.

    B⁻¹·D^g(nat)·B is block diagonal 1 ⊕ D^g(std) for the basis change B of
    standard_basis_change; the lower block is returned.
    """
    resolve_limits(limits).check("max_standard_n", n)
    nat = natural_rep(n, limits)
    basis = standard_basis_change(n)
    basis_inv = mat_inverse(basis)
    matrices = {}
    for g in nat.elements():
        block = mat_mul(mat_mul(basis_inv, nat[g]), basis)
        off_diagonal = [block[0, j] for j in range(1, n)] + [block[i, 0] for i in range(1, n)]
        if block[0, 0] != 1 or any(v != 0 for v in off_diagonal):
            raise PermionError(f"uniform line not split off for {g}")
        matrices[g] = RationalMatrix.from_rows(
            [[block[i, j] for j in range(1, n)] for i in range(1, n)]
        )
    return Representation(n=n, dim=n - 1, kind=RepresentationKind.STANDARD, matrices=matrices)


def direct_sum_rep(a: Representation, b: Representation) -> Representation:
    """g -> D^g(a) ⊕ D^g(b)."""
    if a.n != b.n:
        raise PermionError(f"cannot add representations of S_{a.n} and S_{b.n}")
    matrices = {g: direct_sum(a[g], b[g]) for g in a.elements()}
    return Representation(
        n=a.n, dim=a.dim + b.dim, kind=RepresentationKind.CUSTOM, matrices=matrices
    )


def act(r: Representation, g: Permutation, vector: Sequence[Scalar]) -> List[Fraction]:
    """Group action on a carrier vector: D^g·v."""
    return apply(r[g], vector)


def is_faithful(r: Representation) -> bool:
    """Distinct elements map to distinct matrices."""
    return len(set(r.matrices.values())) == r.group_order


def verify_character_decomposition(
    target: Representation, components: Sequence[Tuple[Representation, int]]
) -> CharacterDecompositionReport:
    """
    Compare χ(target) with Σ multiplicity·χ(component), class by class.

    Args:
        target: Representation to decompose
        components: Pairs of representation and multiplicity
    """
    chi_target = character(target)
    expected = {key: Fraction(0) for key in chi_target}
    for component, multiplicity in components:
        if component.n != target.n:
            raise PermionError(f"component of S_{component.n} for a target of S_{target.n}")
        for key, value in character(component).items():
            expected[key] += multiplicity * value
    mismatches = [str(key) for key in chi_target if chi_target[key] != expected[key]]
    return CharacterDecompositionReport(
        target={str(k): v for k, v in chi_target.items()},
        expected={str(k): v for k, v in expected.items()},
        mismatches=mismatches,
    )


def verify_regular_decomposition(
    n: int, irrep_dims: Sequence[int], limits: Optional[Limits] = None
) -> RegularDecompositionReport:
    """
    Check Σ d(λ)² = n! and χ_e(reg) = Σ d(λ)·d(λ).

    The identity trace of the regular representation is measured only when
    n is within max_regular_n; above that it is left as None and the report
    rests on Σ d(λ)² = n! alone.
    """
    resolved = resolve_limits(limits)
    h = math.factorial(n)
    if n <= resolved.max_regular_n:
        reg = regular_rep(n, limits=resolved)
        identity_trace: Optional[int] = int(trace(reg[identity(n)]))
    else:
        identity_trace = None
    sum_of_squares = sum(d * d for d in irrep_dims)
    report = RegularDecompositionReport(
        n=n,
        irrep_dims=list(irrep_dims),
        sum_of_squares=sum_of_squares,
        group_order=h,
        regular_identity_trace=identity_trace,
    )
    logger.debug("[Permion] regular decomposition of S_%d: ok=%s", n, report.ok)
    return report


def random_unitary(d: int, rng: np.random.Generator) -> "np.ndarray":
    """Haar-distributed unitary from the QR factorization of a complex Gaussian matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def tensor_permutation_matrix(sigma: Permutation, d: int) -> "np.ndarray":
    """P^σ on (C^d)^{⊗n}: the factor in slot k moves to slot σ(k)."""
    n = sigma.n
    size = d**n
    matrix = np.zeros((size, size))
    shape = (d,) * n
    for source in range(size):
        digits = np.unravel_index(source, shape)
        target_digits = [0] * n
        for k in range(n):
            target_digits[sigma(k + 1) - 1] = digits[k]
        matrix[np.ravel_multi_index(tuple(target_digits), shape), source] = 1.0
    return matrix


def schur_weyl_commutation_check(
    n: int,
    d: int,
    trials: int,
    tol: float = 1e-10,
    seed: Optional[int] = None,
    unitaries: Optional[Sequence["np.ndarray"]] = None,
    limits: Optional[Limits] = None,
) -> SchurWeylReport:
    """
    Largest entry of P^σ·u^{⊗n} - u^{⊗n}·P^σ over σ in S_n and the trials.

    Args:
        n: Number of tensor copies
        d: Local dimension
        trials: Number of random unitaries drawn when unitaries is not given
        tol: Threshold for the report's ok flag
        seed: Seed of the random generator
        unitaries: Explicit local unitaries to test instead of random draws
    """
    if n < 1 or d < 1:
        raise PermionError(f"Schur-Weyl check needs n >= 1 and d >= 1, got n={n}, d={d}")
    if unitaries is None and trials < 1:
        raise PermionError(f"Schur-Weyl check needs at least one trial, got {trials}")
    resolved = resolve_limits(limits)
    resolved.check("max_schur_weyl_n", n)
    resolved.check("max_schur_weyl_d", d)
    permutations = [tensor_permutation_matrix(g, d) for g in enumerate_group(n, resolved)]
    if unitaries is None:
        rng = np.random.default_rng(seed)
        locals_ = [random_unitary(d, rng) for _ in range(trials)]
    else:
        locals_ = list(unitaries)

    max_norm = 0.0
    for u in locals_:
        big = u
        for _ in range(n - 1):
            big = np.kron(big, u)
        for p in permutations:
            max_norm = max(max_norm, float(np.max(np.abs(p @ big - big @ p))))
    logger.debug("[Permion] Schur-Weyl n=%d d=%d: max commutator %.3e", n, d, max_norm)
    return SchurWeylReport(n=n, d=d, trials=len(locals_), max_norm=max_norm, tol=tol)
