"""Fock spaces, sparse ladder operators and the (anti)commutation relations they obey."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.sparse as sp

from .enums import LadderKind, Statistics
from .exceptions import DimensionMismatchError, ModeError
from .first_quant import NBodyTensor, antisymmetrize, basis_tensor
from .models import CarReport, CcrReport, GeneralizedCarReport, Limits, resolve_limits

logger = logging.getLogger(__name__)

CCR_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OccupationString:
    """Occupations (K_1, ..., K_d) of d modes."""

    occupations: Tuple[int, ...]
    statistics: Statistics = Statistics.FERMION

    def __post_init__(self) -> None:
        occupations = tuple(int(k) for k in self.occupations)
        object.__setattr__(self, "occupations", occupations)
        object.__setattr__(self, "statistics", Statistics(self.statistics))
        if not occupations:
            raise ModeError("occupation string needs at least one mode")
        if any(k < 0 for k in occupations):
            raise ModeError(f"negative occupation in {list(occupations)}")
        if self.statistics == Statistics.FERMION and any(k > 1 for k in occupations):
            raise ModeError(f"fermionic occupations must be 0 or 1, got {list(occupations)}")

    @property
    def d(self) -> int:
        return len(self.occupations)

    @property
    def particle_count(self) -> int:
        return sum(self.occupations)

    def __getitem__(self, j: int) -> int:
        """Occupation of mode j (1-based)."""
        return self.occupations[j - 1]

    def __str__(self) -> str:
        sep = "" if max(self.occupations) < 10 else ","
        return "|" + sep.join(str(k) for k in self.occupations) + "⟩"


@dataclass(frozen=True)
class FockBasis:
    """
    Occupation-number basis of d modes.

    State x has occupations given by the base-(M+1) digits of x with mode 1
    as the lowest digit (bitstring order for fermions, where M = 1), so the
    vacuum sits at index 0.
    """

    d: int
    statistics: Statistics
    M: int
    states: Tuple[OccupationString, ...] = field(repr=False)
    index: Dict[OccupationString, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {k: i for i, k in enumerate(self.states)})

    @property
    def size(self) -> int:
        return len(self.states)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[OccupationString]:
        return iter(self.states)

    def index_of(self, K: Union[OccupationString, Sequence[int]]) -> int:
        """
        Position of an occupation string.

        Raises:
            ModeError: If K has the wrong length or exceeds the truncation
        """
        if not isinstance(K, OccupationString):
            K = OccupationString(tuple(K), self.statistics)
        try:
            return self.index[K]
        except KeyError:
            raise ModeError(
                f"{K} is not a state of the {self.d}-mode {self.statistics.value} basis"
            )


def _check_mode(j: int, d: int) -> None:
    if not 1 <= j <= d:
        raise ModeError(f"mode {j} out of range 1..{d}")


def _digits(x: int, base: int, d: int) -> Tuple[int, ...]:
    out = []
    for _ in range(d):
        x, digit = divmod(x, base)
        out.append(digit)
    return tuple(out)


def fock_basis(
    d: int,
    statistics: Statistics = Statistics.FERMION,
    M: int = 1,
    limits: Optional[Limits] = None,
) -> FockBasis:
    """
    Build the occupation basis for d modes.

    Args:
        d: Number of modes
        statistics: Fermion (2^d states) or boson ((M+1)^d states)
        M: Boson truncation, ignored for fermions
        limits: Size caps

    Raises:
        ModeError: If d < 1 or M < 1
        CapacityError: If the basis would exceed its cap
    """
    statistics = Statistics(statistics)
    resolved = resolve_limits(limits)
    if d < 1:
        raise ModeError(f"a Fock space needs at least one mode, got d={d}")
    if statistics == Statistics.FERMION:
        resolved.check("max_fermion_modes", d)
        M = 1
    else:
        if M < 1:
            raise ModeError(f"boson truncation must be at least 1, got M={M}")
        resolved.check("max_boson_states", (M + 1) ** d)
    base = M + 1
    states = tuple(
        OccupationString(_digits(x, base, d), statistics) for x in range(base**d)
    )
    return FockBasis(d, statistics, M, states)


def sector_dimension(d: int, N: int, statistics: Statistics = Statistics.FERMION) -> int:
    """
    Number of N-particle states on d modes.

    C(d, N) for fermions, C(N+d-1, d-1) for bosons.

    Raises:
        ModeError: If N < 0, d < 1, or N > d for fermions
    """
    statistics = Statistics(statistics)
    if d < 1 or N < 0:
        raise ModeError(f"sector needs d >= 1 and N >= 0, got d={d}, N={N}")
    if statistics == Statistics.FERMION:
        if N > d:
            raise ModeError(f"{N} fermions do not fit in {d} modes")
        return math.comb(d, N)
    return math.comb(N + d - 1, d - 1)


def sector_states(
    d: int,
    N: int,
    statistics: Statistics = Statistics.FERMION,
    M: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> List[OccupationString]:
    """
    All occupation strings with N particles, in basis order.

    Bosons default to M = N, which keeps every state of the sector.
    """
    statistics = Statistics(statistics)
    sector_dimension(d, N, statistics)
    basis = fock_basis(d, statistics, M if M is not None else max(N, 1), limits)
    return [K for K in basis if K.particle_count == N]


@dataclass(frozen=True, eq=False)
class FockOperator:
    """
    Sparse operator on a Fock basis, equal to unit·matrix.

    Fermion matrices hold int64 entries, boson matrices float64. The unit is
    1 or 1j and keeps Majorana matrices integer.
    """

    basis: FockBasis
    matrix: sp.csr_matrix
    unit: complex = 1
    label: str = ""

    def __post_init__(self) -> None:
        matrix = sp.csr_matrix(self.matrix)
        if matrix.shape != (self.basis.size, self.basis.size):
            raise DimensionMismatchError(
                f"operator of shape {matrix.shape} on a basis of {self.basis.size} states"
            )
        matrix.eliminate_zeros()
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.basis.size

    @property
    def is_exact(self) -> bool:
        return np.issubdtype(self.matrix.dtype, np.integer)

    def adjoint(self) -> "FockOperator":
        """Conjugate transpose; the matrices are real."""
        label = self.label[:-1] if self.label.endswith("†") else self.label + "†"
        unit = self.unit if self.unit == 1 else complex(self.unit).conjugate()
        return FockOperator(self.basis, self.matrix.transpose().tocsr(), unit, label)

    def to_dict(self) -> Dict[str, object]:
        """Convert to dictionary for JSON serialization."""
        coo = self.matrix.tocoo()
        entries = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
        result: Dict[str, object] = {
            "dim": self.dim,
            "triplets": [[r, c, _format_entry(v, self.is_exact)] for r, c, v in entries],
        }
        if self.unit != 1:
            result["unit"] = "i" if self.unit == 1j else str(self.unit)
        if self.label:
            result["label"] = self.label
        return result


def _format_entry(value: float, exact: bool) -> str:
    return str(int(value)) if exact else repr(float(value))


def _jordan_wigner_sign(state: int, j: int) -> int:
    """(-1)^(number of occupied modes below j)."""
    mask = (1 << (j - 1)) - 1
    return -1 if bin(state & mask).count("1") % 2 else 1


def fermion_ladder(
    j: int,
    d: int,
    kind: LadderKind = LadderKind.CREATE,
    jordan_wigner: bool = True,
    limits: Optional[Limits] = None,
) -> FockOperator:
    """
    Fermionic a†_j or a_j as a 2^d x 2^d integer matrix.

    a†_j|K⟩ = (-1)^(K_1+...+K_{j-1})|K + e_j⟩ when K_j = 0, else 0, and a_j is
    its transpose. With jordan_wigner=False the sign string is dropped, which
    breaks the anticommutation of different modes.

    Raises:
        ModeError: If j is not in 1..d
    """
    kind = LadderKind(kind)
    basis = fock_basis(d, Statistics.FERMION, limits=limits)
    _check_mode(j, d)
    bit = 1 << (j - 1)
    rows, cols, data = [], [], []
    for state in range(basis.size):
        if state & bit:
            continue
        rows.append(state | bit)
        cols.append(state)
        data.append(_jordan_wigner_sign(state, j) if jordan_wigner else 1)
    create = sp.csr_matrix(
        (np.array(data, dtype=np.int64), (rows, cols)), shape=(basis.size, basis.size)
    )
    matrix = create if kind == LadderKind.CREATE else create.transpose().tocsr()
    label = f"a{j}†" if kind == LadderKind.CREATE else f"a{j}"
    return FockOperator(basis, matrix, label=label)


def boson_ladder(
    j: int,
    d: int,
    M: int,
    kind: LadderKind = LadderKind.CREATE,
    limits: Optional[Limits] = None,
) -> FockOperator:
    """
    Truncated bosonic a†_j or a_j.

    a†_j|..K_j..⟩ = √(K_j+1)|..K_j+1..⟩ for K_j < M and 0 at K_j = M;
    a_j is its transpose.

    Raises:
        ModeError: If j is not in 1..d or M < 1
    """
    kind = LadderKind(kind)
    basis = fock_basis(d, Statistics.BOSON, M, limits)
    _check_mode(j, d)
    stride = (M + 1) ** (j - 1)
    rows, cols, data = [], [], []
    for x in range(basis.size):
        k = (x // stride) % (M + 1)
        if k == M:
            continue
        rows.append(x + stride)
        cols.append(x)
        data.append(math.sqrt(k + 1))
    create = sp.csr_matrix(
        (np.array(data, dtype=np.float64), (rows, cols)), shape=(basis.size, basis.size)
    )
    matrix = create if kind == LadderKind.CREATE else create.transpose().tocsr()
    label = f"b{j}†" if kind == LadderKind.CREATE else f"b{j}"
    return FockOperator(basis, matrix, label=label)


def _ladder(
    j: int, basis: FockBasis, kind: LadderKind, limits: Optional[Limits]
) -> FockOperator:
    if basis.statistics == Statistics.FERMION:
        return fermion_ladder(j, basis.d, kind, limits=limits)
    return boson_ladder(j, basis.d, basis.M, kind, limits=limits)


def _max_abs(matrix: sp.spmatrix) -> float:
    matrix = sp.csr_matrix(matrix)
    matrix.eliminate_zeros()
    return abs(matrix.data).max() if matrix.nnz else 0


def verify_car(
    d: int, jordan_wigner: bool = True, limits: Optional[Limits] = None
) -> CarReport:
    """
    Check {a_p, a_q} = 0 and {a_p, a†_q} = δ_pq·1 for every pair of modes.

    Integer arithmetic throughout, so the violation is exact.
    """
    if d < 1:
        raise ModeError(f"a Fock space needs at least one mode, got d={d}")
    resolved = resolve_limits(limits)
    resolved.check("max_car_modes", d)
    annihilators = [
        fermion_ladder(j, d, LadderKind.ANNIHILATE, jordan_wigner, resolved).matrix
        for j in range(1, d + 1)
    ]
    creators = [a.transpose().tocsr() for a in annihilators]
    one = sp.identity(2**d, dtype=np.int64, format="csr")
    worst = 0
    failures: List[Tuple[str, int, int]] = []
    for p in range(d):
        for q in range(d):
            same = annihilators[p] @ annihilators[q] + annihilators[q] @ annihilators[p]
            mixed = annihilators[p] @ creators[q] + creators[q] @ annihilators[p]
            if p == q:
                mixed = mixed - one
            for relation, residual in (("{a_p,a_q}", same), ("{a_p,a_q†}", mixed)):
                violation = int(_max_abs(residual))
                if violation:
                    failures.append((relation, p + 1, q + 1))
                worst = max(worst, violation)
    logger.debug("[Permion] CAR check d=%d: max violation %d", d, worst)
    return CarReport(d=d, pairs_checked=d * d, max_violation=worst, failures=failures)


def verify_ccr(
    d: int, M: int, tol: float = CCR_TOLERANCE, limits: Optional[Limits] = None
) -> CcrReport:
    """
    Check [a_p, a_q] = 0 and [a_p, a†_q] = δ_pq·1 on states with every K_j < M.

    The truncation forces a†|M⟩ = 0, so [a_j, a†_j] = -M on states with
    K_j = M; that value is reported as truncation_artifact.
    """
    resolved = resolve_limits(limits)
    if M < 1:
        raise ModeError(f"boson truncation must be at least 1, got M={M}")
    resolved.check("max_ccr_states", (M + 1) ** d)
    basis = fock_basis(d, Statistics.BOSON, M, resolved)
    annihilators = [
        boson_ladder(j, d, M, LadderKind.ANNIHILATE, resolved).matrix for j in range(1, d + 1)
    ]
    creators = [a.transpose().tocsr() for a in annihilators]
    one = sp.identity(basis.size, dtype=np.float64, format="csr")
    safe = [i for i, K in enumerate(basis) if max(K.occupations) < M]
    worst = 0.0
    artifact = 0.0
    for p in range(d):
        for q in range(d):
            same = annihilators[p] @ annihilators[q] - annihilators[q] @ annihilators[p]
            mixed = annihilators[p] @ creators[q] - creators[q] @ annihilators[p]
            if p == q:
                top = [i for i, K in enumerate(basis) if K.occupations[p] == M]
                artifact = min(artifact, float(mixed.diagonal()[top].min()))
                mixed = mixed - one
            for residual in (same, mixed):
                worst = max(worst, float(_max_abs(residual[:, safe])))
    logger.debug(
        "[Permion] CCR check d=%d M=%d: safe violation %.3g, artifact %.3g", d, M, worst, artifact
    )
    return CcrReport(
        d=d,
        truncation=M,
        max_violation_on_safe_subspace=worst,
        truncation_artifact=artifact,
        tol=tol,
    )


def fock_state(
    K: OccupationString,
    order: Optional[Sequence[int]] = None,
    M: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> Tuple[int, Union[int, float]]:
    """
    Apply a product of creation operators to the vacuum.

    Args:
        K: Target occupations
        order: Modes of the written product, left to right; the rightmost
            factor acts first. Defaults to ascending modes, each repeated K_j
            times, which gives sign +1 for fermions.
        M: Boson truncation, at least max(K); defaults to max(K)
        limits: Size caps

    Returns:
        (basis index of K, amplitude)

    Raises:
        ModeError: If order does not create exactly the occupations K
    """
    if order is None:
        order = [j for j in range(1, K.d + 1) for _ in range(K[j])]
    order = list(order)
    if sorted(order) != [j for j in range(1, K.d + 1) for _ in range(K[j])]:
        raise ModeError(f"operator string {order} does not create {K}")
    if K.statistics == Statistics.FERMION:
        basis = fock_basis(K.d, Statistics.FERMION, limits=limits)
    else:
        basis = fock_basis(K.d, Statistics.BOSON, M or max(max(K.occupations), 1), limits)
    creators: Dict[int, FockOperator] = {}
    exact = basis.statistics == Statistics.FERMION
    vector = np.zeros(basis.size, dtype=np.int64 if exact else np.float64)
    vector[0] = 1
    for j in reversed(order):
        if j not in creators:
            creators[j] = _ladder(j, basis, LadderKind.CREATE, limits)
        vector = creators[j].matrix @ vector
    index = basis.index_of(K)
    amplitude = vector[index]
    return index, int(amplitude) if exact else float(amplitude)


def majorana_ops(d: int, limits: Optional[Limits] = None) -> List[FockOperator]:
    """
    Majorana family α_1, ..., α_2d.

    α_{2j-1} = a_j + a†_j and α_{2j} = i(a†_j - a_j); the second is stored as
    the integer matrix a†_j - a_j with unit i.
    """
    resolved = resolve_limits(limits)
    resolved.check("max_majorana_modes", d)
    family: List[FockOperator] = []
    for j in range(1, d + 1):
        a = fermion_ladder(j, d, LadderKind.ANNIHILATE, limits=resolved)
        create = a.matrix.transpose().tocsr()
        family.append(FockOperator(a.basis, a.matrix + create, 1, f"α{2 * j - 1}"))
        family.append(FockOperator(a.basis, create - a.matrix, 1j, f"α{2 * j}"))
    return family


def dirac_ops(d: int, limits: Optional[Limits] = None) -> List[FockOperator]:
    """(a_1, ..., a_d, a†_1, ..., a†_d)."""
    annihilators = [
        fermion_ladder(j, d, LadderKind.ANNIHILATE, limits=limits) for j in range(1, d + 1)
    ]
    return annihilators + [a.adjoint() for a in annihilators]


def _identity_multiple(matrix: sp.spmatrix, exact: bool) -> Optional[float]:
    """c when matrix = c·1, else None."""
    matrix = sp.csr_matrix(matrix)
    diagonal = matrix.diagonal()
    off_diagonal = matrix - sp.diags(diagonal, format="csr")
    tol = 0 if exact else CCR_TOLERANCE
    if _max_abs(off_diagonal) > tol:
        return None
    if diagonal.size and abs(diagonal - diagonal[0]).max() > tol:
        return None
    return diagonal[0] if diagonal.size else 0


def verify_generalized_car(ops: Sequence[FockOperator]) -> GeneralizedCarReport:
    """
    Measure S in α_i α_j + α_j α_i = S_ij·1 over every ordered pair.

    The family is fermionic when every anticommutator is a real multiple of
    the identity and S = Sᵀ. The first failing pair is reported 1-based.

    Raises:
        DimensionMismatchError: If the operators live on different bases
    """
    if ops and any(op.basis != ops[0].basis for op in ops):
        raise DimensionMismatchError("generalized CAR needs every operator on one basis")
    exact = all(op.is_exact for op in ops)
    size = len(ops)
    s_matrix: List[List[Fraction]] = [[Fraction(0)] * size for _ in range(size)]
    for i, left in enumerate(ops):
        for j, right in enumerate(ops):
            anticommutator = left.matrix @ right.matrix + right.matrix @ left.matrix
            multiple = _identity_multiple(anticommutator, exact)
            if multiple is None:
                logger.debug("[Permion] {α%d, α%d} is not a multiple of 1", i + 1, j + 1)
                return GeneralizedCarReport(is_fermionic=False, failure=(i + 1, j + 1))
            value = complex(left.unit) * complex(right.unit) * complex(multiple)
            if abs(value.imag) > CCR_TOLERANCE:
                return GeneralizedCarReport(is_fermionic=False, failure=(i + 1, j + 1))
            s_matrix[i][j] = (
                Fraction(round(value.real))
                if exact
                else Fraction(value.real).limit_denominator(10**9)
            )
    report = GeneralizedCarReport(is_fermionic=True, s_matrix=s_matrix)
    if not report.is_symmetric:
        return GeneralizedCarReport(is_fermionic=False, s_matrix=s_matrix)
    return report


def number_operator(
    j: int,
    d: int,
    statistics: Statistics = Statistics.FERMION,
    M: int = 1,
    limits: Optional[Limits] = None,
) -> FockOperator:
    """n̂_j = a†_j a_j, diagonal with entry K_j."""
    basis = fock_basis(d, statistics, M, limits)
    a = _ladder(j, basis, LadderKind.ANNIHILATE, limits)
    return FockOperator(basis, a.matrix.transpose().tocsr() @ a.matrix, label=f"n{j}")


def total_number_operator(
    d: int,
    statistics: Statistics = Statistics.FERMION,
    M: int = 1,
    limits: Optional[Limits] = None,
) -> FockOperator:
    """Σ_j n̂_j, diagonal with entry K_1 + ... + K_d."""
    terms = [number_operator(j, d, statistics, M, limits) for j in range(1, d + 1)]
    total = terms[0].matrix
    for term in terms[1:]:
        total = total + term.matrix
    return FockOperator(terms[0].basis, total, label="N")


def apply(op: FockOperator, vector: Sequence[complex]) -> "np.ndarray":
    """
    op·v for a dense amplitude vector.

    Raises:
        DimensionMismatchError: If len(vector) differs from the basis size
    """
    v = np.asarray(vector)
    if v.shape != (op.dim,):
        raise DimensionMismatchError(f"vector of shape {v.shape} on a basis of {op.dim} states")
    result = op.matrix @ v
    return result if op.unit == 1 else op.unit * result


def slater_to_first_quantized(
    K: OccupationString, limits: Optional[Limits] = None
) -> NBodyTensor:
    """
    First-quantized tensor of a fermionic occupation string.

    Antisymmetrizes e_{k_1} ⊗ ... ⊗ e_{k_N} over the occupied modes
    k_1 < ... < k_N and normalizes to unit 2-norm (float amplitudes).

    Raises:
        ModeError: If K is not fermionic or holds no particles
        CapacityError: If d^N exceeds the tensor cap
    """
    if K.statistics != Statistics.FERMION:
        raise ModeError("Slater tensors need a fermionic occupation string")
    if K.particle_count == 0:
        raise ModeError("the vacuum has no first-quantized tensor")
    resolved = resolve_limits(limits)
    occupied = [j for j in range(1, K.d + 1) if K[j]]
    psi = antisymmetrize(basis_tensor(occupied, K.d, resolved), resolved)
    amplitudes = psi.amplitudes.astype(float)
    norm = math.sqrt(float((amplitudes**2).sum()))
    return NBodyTensor(K.d, K.particle_count, amplitudes / norm)
