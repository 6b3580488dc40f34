"""First-quantized N-particle states as N-index tensors over d single-particle states."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from .enums import Symmetry
from .exceptions import DegreeMismatchError, DimensionMismatchError, PermionError
from .linalg import RationalMatrix, rank
from .models import Limits, resolve_limits
from .permutation import Permutation, enumerate_group, inverse, sign, transposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NBodyTensor:
    """
    Amplitudes Ψ[x_1, ..., x_N] with every x_j in 1..d.

    Stored as a numpy array of shape (d,)*N indexed from 0, row-major in
    (x_1, ..., x_N). Entries are exact Fractions unless built from floats.
    """

    d: int
    N: int
    amplitudes: "np.ndarray"

    def __post_init__(self) -> None:
        if self.d < 1 or self.N < 1:
            raise PermionError(f"tensor needs d >= 1 and N >= 1, got d={self.d}, N={self.N}")
        array = np.array(self.amplitudes, dtype=object)
        if array.size != self.d**self.N:
            raise DimensionMismatchError(
                f"{array.size} amplitudes for d={self.d}, N={self.N} (need {self.d ** self.N})"
            )
        array = array.reshape((self.d,) * self.N)
        if any(isinstance(v, (float, np.floating)) for v in array.flat):
            array = array.astype(float)
        else:
            array = np.vectorize(Fraction, otypes=[object])(array)
        array.setflags(write=False)
        object.__setattr__(self, "amplitudes", array)

    @classmethod
    def from_flat(cls, values: Sequence[Any], d: int, N: int) -> "NBodyTensor":
        return cls(d, N, np.array(list(values), dtype=object))

    @property
    def is_exact(self) -> bool:
        return self.amplitudes.dtype == object

    def __getitem__(self, index: Tuple[int, ...]) -> Any:
        """Amplitude at 1-based coordinates (x_1, ..., x_N)."""
        return self.amplitudes[tuple(x - 1 for x in index)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NBodyTensor):
            return NotImplemented
        return (self.d, self.N) == (other.d, other.N) and bool(
            np.all(self.amplitudes == other.amplitudes)
        )

    def __add__(self, other: "NBodyTensor") -> "NBodyTensor":
        _check_same_space(self, other)
        return NBodyTensor(self.d, self.N, self.amplitudes + other.amplitudes)

    def __neg__(self) -> "NBodyTensor":
        return NBodyTensor(self.d, self.N, -self.amplitudes)

    def scaled(self, factor: Any) -> "NBodyTensor":
        return NBodyTensor(self.d, self.N, self.amplitudes * factor)

    def is_zero(self) -> bool:
        return bool(np.all(self.amplitudes == 0))

    def flat(self) -> list:
        return list(self.amplitudes.ravel())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "d": self.d,
            "N": self.N,
            "amplitudes": [str(v) if self.is_exact else float(v) for v in self.flat()],
        }


def _check_same_space(a: NBodyTensor, b: NBodyTensor) -> None:
    if (a.d, a.N) != (b.d, b.N):
        raise DimensionMismatchError(f"tensors on (d={a.d}, N={a.N}) and (d={b.d}, N={b.N})")


def _check_size(d: int, N: int, limits: Optional[Limits]) -> Limits:
    resolved = resolve_limits(limits)
    resolved.check("max_tensor_particles", N)
    resolved.check("max_tensor_size", d**N)
    return resolved


def basis_tensor(
    indices: Sequence[int], d: int, limits: Optional[Limits] = None
) -> NBodyTensor:
    """e_{k_1} ⊗ ... ⊗ e_{k_N} for 1-based indices."""
    N = len(indices)
    _check_size(d, N, limits)
    values = np.full((d,) * N, Fraction(0), dtype=object)
    values[tuple(k - 1 for k in indices)] = Fraction(1)
    return NBodyTensor(d, N, values)


def from_matrix(rows: Sequence[Sequence[Any]]) -> NBodyTensor:
    """Two-particle tensor A[i][j] = Ψ[i, j]."""
    d = len(rows)
    if any(len(row) != d for row in rows):
        raise DimensionMismatchError("two-particle amplitudes must form a square matrix")
    return NBodyTensor(d, 2, np.array([list(row) for row in rows], dtype=object))


def as_matrix(psi: NBodyTensor) -> RationalMatrix:
    """Exact two-particle tensor as its d x d amplitude matrix."""
    if psi.N != 2 or not psi.is_exact:
        raise PermionError("only exact two-particle tensors have a rational matrix form")
    return RationalMatrix.from_rows(psi.amplitudes.tolist())


def inner_product(a: NBodyTensor, b: NBodyTensor) -> Any:
    """Σ_x a[x]·b[x] (amplitudes are real)."""
    _check_same_space(a, b)
    return np.sum(a.amplitudes * b.amplitudes)


def permute_particles(psi: NBodyTensor, sigma: Permutation) -> NBodyTensor:
    """
    Act on particle slots: out[x_1..x_N] = in[x_σ(1)..x_σ(N)].

    permute_particles(permute_particles(Ψ, τ), σ) = permute_particles(Ψ, σ*τ).

    Raises:
        DegreeMismatchError: If σ does not act on N points
    """
    if sigma.n != psi.N:
        raise DegreeMismatchError(f"permutation of degree {sigma.n} on {psi.N} particles")
    sigma_inv = inverse(sigma)
    axes = tuple(sigma_inv(m) - 1 for m in range(1, psi.N + 1))
    return NBodyTensor(psi.d, psi.N, np.transpose(psi.amplitudes, axes))


def _project(psi: NBodyTensor, signed: bool, limits: Optional[Limits]) -> NBodyTensor:
    resolved = _check_size(psi.d, psi.N, limits)
    total: Any = None
    for sigma in enumerate_group(psi.N, resolved):
        term = permute_particles(psi, sigma).amplitudes
        if signed and sign(sigma) < 0:
            term = -term
        total = term if total is None else total + term
    norm = math.factorial(psi.N)
    return NBodyTensor(psi.d, psi.N, total / (Fraction(norm) if psi.is_exact else norm))


def symmetrize(psi: NBodyTensor, limits: Optional[Limits] = None) -> NBodyTensor:
    """(1/N!) Σ_σ permute_particles(Ψ, σ)."""
    return _project(psi, signed=False, limits=limits)


def antisymmetrize(psi: NBodyTensor, limits: Optional[Limits] = None) -> NBodyTensor:
    """(1/N!) Σ_σ sign(σ)·permute_particles(Ψ, σ)."""
    return _project(psi, signed=True, limits=limits)


def is_fermionic(psi: NBodyTensor) -> bool:
    """Ψ picks up -1 under every adjacent transposition."""
    return all(
        permute_particles(psi, transposition(k, k + 1, psi.N)) == -psi for k in range(1, psi.N)
    )


def is_bosonic(psi: NBodyTensor) -> bool:
    """Ψ is unchanged by every adjacent transposition."""
    return all(
        permute_particles(psi, transposition(k, k + 1, psi.N)) == psi for k in range(1, psi.N)
    )


def classify_symmetry(psi: NBodyTensor) -> Symmetry:
    """
    Exchange symmetry, checked on the adjacent transpositions that generate S_N.

    A tensor passing both checks (one particle, or the zero tensor) is reported
    fermionic.
    """
    if is_fermionic(psi):
        return Symmetry.FERMIONIC
    if is_bosonic(psi):
        return Symmetry.BOSONIC
    return Symmetry.NEITHER


def projector_rank(
    d: int, N: int, symmetry: Symmetry, limits: Optional[Limits] = None
) -> int:
    """
    Rank of the symmetrizer or antisymmetrizer on (d, N) tensors.

    Equals C(N+d-1, N) for bosons and C(d, N) for fermions.
    """
    symmetry = Symmetry(symmetry)
    if symmetry == Symmetry.NEITHER:
        raise PermionError("projector rank needs bosonic or fermionic symmetry")
    if d < 1 or N < 1:
        raise PermionError(f"projector rank needs d >= 1 and N >= 1, got d={d}, N={N}")
    resolved = _check_size(d, N, limits)
    project = symmetrize if symmetry == Symmetry.BOSONIC else antisymmetrize
    rows = [
        project(basis_tensor(indices, d, resolved), resolved).flat()
        for indices in product(range(1, d + 1), repeat=N)
    ]
    return rank(RationalMatrix.from_rows(rows))

