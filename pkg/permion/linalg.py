"""Exact rational dense matrices and the small elimination kernel behind them."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from .exceptions import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str]


def to_fraction(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction in lowest terms."""
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not an exact matrix entry")
    return Fraction(value)


def format_fraction(value: Fraction) -> str:
    """Lowest-term string form: "3", "-1/2"."""
    return str(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(to_fraction(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise DimensionMismatchError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        """Build from a nested sequence; an empty sequence gives a 0x0 matrix."""
        grid = [list(row) for row in rows]
        width = len(grid[0]) if grid else 0
        return cls(len(grid), width, tuple(tuple(row) for row in grid))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return add(self, other)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return subtract(self, other)

    def __neg__(self) -> "RationalMatrix":
        return scale(self, -1)

    def to_float_array(self) -> "np.ndarray":
        return np.array([[float(v) for v in row] for row in self.entries], dtype=float).reshape(
            self.rows, self.cols
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def is_identity(self) -> bool:
        return self.is_square and self == identity_matrix(self.rows)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_fraction(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RationalMatrix":
        """
        Inverse of to_dict.

        Raises:
            DimensionMismatchError: If the declared shape does not match the entries
        """
        return cls(int(data["rows"]), int(data["cols"]), tuple(tuple(r) for r in data["entries"]))


def identity_matrix(n: int) -> RationalMatrix:
    return RationalMatrix(
        n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    )


def zero_matrix(rows: int, cols: int) -> RationalMatrix:
    zeros = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
    return RationalMatrix(rows, cols, zeros)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """
    Exact product a·b.

    Raises:
        DimensionMismatchError: If a.cols != b.rows
    """
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.cols == 0 or a.rows == 0 or b.cols == 0:
        return zero_matrix(a.rows, b.cols)
    grid_a, den_a = _integer_grid(a)
    grid_b, den_b = _integer_grid(b)
    product = np.array(grid_a, dtype=object).dot(np.array(grid_b, dtype=object))
    denominator = den_a * den_b
    return RationalMatrix(
        a.rows,
        b.cols,
        tuple(tuple(Fraction(int(v), denominator) for v in row) for row in product),
    )


def apply(a: RationalMatrix, vector: Sequence[Scalar]) -> List[Fraction]:
    """Matrix-vector product a·v."""
    if len(vector) != a.cols:
        raise DimensionMismatchError(f"vector of length {len(vector)} for {a.cols} columns")
    v = [to_fraction(x) for x in vector]
    return [sum((row[j] * v[j] for j in range(a.cols)), Fraction(0)) for row in a.entries]


def add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot add {a.shape} and {b.shape}")
    return RationalMatrix(
        a.rows,
        a.cols,
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
    )


def subtract(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot subtract {b.shape} from {a.shape}")
    return RationalMatrix(
        a.rows,
        a.cols,
        tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)),
    )


def scale(a: RationalMatrix, factor: Scalar) -> RationalMatrix:
    c = to_fraction(factor)
    return RationalMatrix(a.rows, a.cols, tuple(tuple(c * v for v in row) for row in a.entries))


def transpose(a: RationalMatrix) -> RationalMatrix:
    return RationalMatrix(
        a.cols, a.rows, tuple(tuple(a.entries[i][j] for i in range(a.rows)) for j in range(a.cols))
    )


def matrix_sum(terms: Iterable[RationalMatrix], rows: int, cols: int) -> RationalMatrix:
    """Sum of matrices of one shape; the zero matrix when terms is empty."""
    return reduce(add, terms, zero_matrix(rows, cols))


def trace(a: RationalMatrix) -> Fraction:
    """
    Sum of the diagonal.

    Raises:
        DimensionMismatchError: If a is not square
    """
    if not a.is_square:
        raise DimensionMismatchError(f"trace of non-square {a.rows}x{a.cols} matrix")
    return sum((a.entries[i][i] for i in range(a.rows)), Fraction(0))


def direct_sum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Block-diagonal [[a, 0], [0, b]] of shape (n+m)x(n'+m')."""
    rows = [list(row) + [Fraction(0)] * b.cols for row in a.entries]
    rows += [[Fraction(0)] * a.cols + list(row) for row in b.entries]
    return RationalMatrix(a.rows + b.rows, a.cols + b.cols, tuple(tuple(r) for r in rows))


def is_orthogonal(a: RationalMatrix) -> bool:
    """a·aᵀ = I exactly."""
    return a.is_square and mat_mul(a, transpose(a)).is_identity()


def _integer_grid(a: RationalMatrix) -> Tuple[List[List[int]], int]:
    """Scale a to an integer grid; returns the grid and the common denominator."""
    denominator = 1
    for row in a.entries:
        for value in row:
            denominator = math.lcm(denominator, value.denominator)
    grid = [[int(value * denominator) for value in row] for row in a.entries]
    return grid, denominator


def _fraction_free_echelon(grid: List[List[int]], width: int) -> Tuple[List[int], int]:
    """
    Bareiss elimination in place on the first width columns of grid.

    Every division is exact, so intermediate entries stay integers (minors of
    the input). Returns the pivot columns and the sign of the row swaps.
    """
    nrows = len(grid)
    ncols = len(grid[0]) if grid else 0
    pivots: List[int] = []
    swap_sign = 1
    previous = 1
    r = 0
    for c in range(width):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if grid[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            grid[r], grid[pivot] = grid[pivot], grid[r]
            swap_sign = -swap_sign
        head = grid[r][c]
        for i in range(r + 1, nrows):
            factor = grid[i][c]
            for j in range(c + 1, ncols):
                grid[i][j] = (grid[i][j] * head - factor * grid[r][j]) // previous
            grid[i][c] = 0
        previous = head
        pivots.append(c)
        r += 1
    return pivots, swap_sign


def determinant(a: RationalMatrix) -> Fraction:
    if not a.is_square:
        raise DimensionMismatchError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    if a.rows == 0:
        return Fraction(1)
    grid, denominator = _integer_grid(a)
    pivots, swap_sign = _fraction_free_echelon(grid, a.cols)
    if len(pivots) < a.rows:
        return Fraction(0)
    return Fraction(swap_sign * grid[-1][-1], denominator**a.rows)


def rank(a: RationalMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    grid, _ = _integer_grid(a)
    pivots, _ = _fraction_free_echelon(grid, a.cols)
    return len(pivots)


def mat_inverse(a: RationalMatrix) -> RationalMatrix:
    """
    Exact inverse through fraction-free elimination and back substitution.

    Raises:
        DimensionMismatchError: If a is not square
        SingularMatrixError: If a is singular
    """
    if not a.is_square:
        raise DimensionMismatchError(f"inverse of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    grid, denominator = _integer_grid(a)
    for i, row in enumerate(grid):
        row.extend(int(i == j) for j in range(n))
    pivots, _ = _fraction_free_echelon(grid, n)
    if len(pivots) < n:
        raise SingularMatrixError(f"{n}x{n} matrix is singular (rank {len(pivots)})")

    # back substitution on U·X = B, U the left block of grid
    solution: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        head = grid[i][i]
        for j in range(n):
            acc = Fraction(grid[i][n + j])
            for k in range(i + 1, n):
                acc -= grid[i][k] * solution[k][j]
            solution[i][j] = acc / head
    logger.debug("[Permion] inverted %dx%d rational matrix", n, n)
    return RationalMatrix(n, n, tuple(tuple(v * denominator for v in row) for row in solution))
