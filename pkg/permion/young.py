"""Young frames and tableaux, the rational group algebra of S_n, and Young operators."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import permutations
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .enums import OperatorOrder, RepresentationKind
from .exceptions import DegreeMismatchError, TableauError
from .linalg import (
    RationalMatrix,
    Scalar,
    apply,
    mat_inverse,
    matrix_sum,
    rank,
    scale,
    to_fraction,
    transpose,
)
from .models import IdempotencyReport, Limits, resolve_limits
from .permutation import Permutation, compose, enumerate_group, format_cycles, identity, sign
from .representation import Representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class YoungFrame:
    """Partition of n drawn as left-justified rows of boxes."""

    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise TableauError("a frame needs at least one row")
        if any(r <= 0 for r in rows) or list(rows) != sorted(rows, reverse=True):
            raise TableauError(f"frame {list(rows)} must be positive and weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.rows)

    def conjugate(self) -> "YoungFrame":
        """Frame with rows and columns exchanged."""
        return YoungFrame(tuple(sum(1 for r in self.rows if r > c) for c in range(self.rows[0])))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for i, length in enumerate(self.rows):
            for j in range(length):
                yield (i, j)

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self.rows) + "]"


@dataclass(frozen=True, order=True)
class YoungTableau:
    """A frame whose boxes hold 1..n, each exactly once."""

    filling: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        filling = tuple(tuple(row) for row in self.filling)
        object.__setattr__(self, "filling", filling)
        YoungFrame(tuple(len(row) for row in filling))
        n = sum(len(row) for row in filling)
        entries = sorted(v for row in filling for v in row)
        if entries != list(range(1, n + 1)):
            raise TableauError(f"tableau {format_tableau(self)} must hold 1..{n} exactly once")

    @property
    def frame(self) -> YoungFrame:
        return YoungFrame(tuple(len(row) for row in self.filling))

    @property
    def n(self) -> int:
        return self.frame.n

    def columns(self) -> List[Tuple[int, ...]]:
        width = len(self.filling[0])
        return [tuple(row[c] for row in self.filling if len(row) > c) for c in range(width)]

    @property
    def is_standard(self) -> bool:
        """Rows increase left to right and columns increase top to bottom."""
        rows_ok = all(list(row) == sorted(row) for row in self.filling)
        cols_ok = all(list(col) == sorted(col) for col in self.columns())
        return rows_ok and cols_ok

    def reading_word(self) -> Tuple[int, ...]:
        return tuple(v for row in self.filling for v in row)

    def __str__(self) -> str:
        return format_tableau(self)


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """Finite rational combination of permutations of one degree."""

    n: int
    terms: Mapping[Permutation, Fraction]

    def __post_init__(self) -> None:
        cleaned: Dict[Permutation, Fraction] = {}
        for p, coefficient in self.terms.items():
            if p.n != self.n:
                raise DegreeMismatchError(f"term {p} has degree {p.n}, expected {self.n}")
            value = to_fraction(coefficient)
            if value != 0:
                cleaned[p] = value
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    @classmethod
    def from_permutation(cls, p: Permutation, coefficient: Scalar = 1) -> "GroupAlgebraElement":
        return cls(p.n, {p: to_fraction(coefficient)})

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "GroupAlgebraElement":
        return cls.from_permutation(identity(n))

    def coefficient(self, p: Permutation) -> Fraction:
        return self.terms.get(p, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        _check_same_degree(self, other)
        merged = dict(self.terms)
        for p, c in other.terms.items():
            merged[p] = merged.get(p, Fraction(0)) + c
        return GroupAlgebraElement(self.n, merged)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scaled(-1)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return ga_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))

    def scaled(self, factor: Scalar) -> "GroupAlgebraElement":
        c = to_fraction(factor)
        return GroupAlgebraElement(self.n, {p: c * v for p, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for p, c in self.terms.items():
            magnitude = abs(c)
            label = format_cycles(p) if magnitude == 1 else f"{magnitude}{format_cycles(p)}"
            pieces.append(("-" if c < 0 else "+", label))
        head_sign, head = pieces[0]
        text = head if head_sign == "+" else f"-{head}"
        for s, label in pieces[1:]:
            text += f" {s} {label}"
        return text

    def to_dict(self) -> Dict[str, object]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n": self.n,
            "terms": {format_cycles(p): str(c) for p, c in self.terms.items()},
        }


def _check_same_degree(a: GroupAlgebraElement, b: GroupAlgebraElement) -> None:
    if a.n != b.n:
        raise DegreeMismatchError(f"group algebra elements of degree {a.n} and {b.n}")


def parse_frame(text: str) -> YoungFrame:
    """Frame from a comma list such as "2,1"."""
    try:
        rows = tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError:
        raise TableauError(f"malformed frame {text!r}")
    return YoungFrame(rows)


def parse_tableau(text: str) -> YoungTableau:
    """Tableau from rows separated by ";" and entries by ",", e.g. "1,2;3"."""
    try:
        filling = tuple(
            tuple(int(v) for v in row.split(",")) for row in text.replace(" ", "").split(";")
        )
    except ValueError:
        raise TableauError(f"malformed tableau {text!r}")
    return YoungTableau(filling)


def format_tableau(t: YoungTableau) -> str:
    return ";".join(",".join(str(v) for v in row) for row in t.filling)


def partitions(n: int, limits: Optional[Limits] = None) -> List[YoungFrame]:
    """All frames with n boxes in reverse-lexicographic order: [n] first, [1,...,1] last."""
    if n < 1:
        raise TableauError(f"frames need a positive box count, got {n}")
    resolve_limits(limits).check("max_partition_n", n)

    def build(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - part, part):
                yield (part,) + rest

    return [YoungFrame(rows) for rows in build(n, n)]


def hook_lengths(f: YoungFrame) -> List[List[int]]:
    """Hook length of every box: arm + leg + 1."""
    conj = f.conjugate().rows
    return [
        [(length - j - 1) + (conj[j] - i - 1) + 1 for j in range(length)]
        for i, length in enumerate(f.rows)
    ]


def tableau_count_hook(f: YoungFrame, limits: Optional[Limits] = None) -> int:
    """Number of standard tableaux, n! divided by the product of hook lengths."""
    resolve_limits(limits).check("max_partition_n", f.n)
    product = reduce(lambda acc, h: acc * h, (h for row in hook_lengths(f) for h in row), 1)
    return math.factorial(f.n) // product


def irrep_dimensions(n: int, limits: Optional[Limits] = None) -> Dict[YoungFrame, int]:
    """Dimension of the irreducible representation labelled by each frame."""
    return {f: tableau_count_hook(f, limits) for f in partitions(n, limits)}


def standard_tableaux(f: YoungFrame, limits: Optional[Limits] = None) -> List[YoungTableau]:
    """
    Every standard filling of f, sorted by row-reading word.

    Numbers are placed in increasing order, each at the end of a row whose
    length stays within the frame and does not exceed the row above.
    """
    resolve_limits(limits).check("max_tableaux_n", f.n)
    results: List[YoungTableau] = []
    rows: List[List[int]] = [[] for _ in f.rows]

    def place(value: int) -> None:
        if value > f.n:
            results.append(YoungTableau(tuple(tuple(r) for r in rows)))
            return
        for i, target in enumerate(f.rows):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(value)
                place(value + 1)
                rows[i].pop()

    place(1)
    results.sort(key=lambda t: t.reading_word())
    logger.debug("[Permion] frame %s has %d standard tableaux", f, len(results))
    return results


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """
    Convolution product: bilinear extension of compose.

    Raises:
        DegreeMismatchError: If the degrees differ
    """
    _check_same_degree(a, b)
    product: Dict[Permutation, Fraction] = {}
    for p, x in a.terms.items():
        for q, y in b.terms.items():
            key = compose(p, q)
            product[key] = product.get(key, Fraction(0)) + x * y
    return GroupAlgebraElement(a.n, product)


def _block_sum(points: Sequence[int], n: int, signed: bool) -> GroupAlgebraElement:
    """Sum over all rearrangements of points, optionally weighted by sign."""
    terms: Dict[Permutation, Fraction] = {}
    for arrangement in permutations(points):
        images = list(range(1, n + 1))
        for source, target in zip(points, arrangement):
            images[source - 1] = target
        p = Permutation(tuple(images))
        terms[p] = Fraction(sign(p) if signed else 1)
    return GroupAlgebraElement(n, terms)


def row_symmetrizer(t: YoungTableau) -> GroupAlgebraElement:
    """Product over rows of the sum of all permutations of that row's entries."""
    factors = [_block_sum(row, t.n, signed=False) for row in t.filling]
    return reduce(ga_multiply, factors, GroupAlgebraElement.one(t.n))


def col_antisymmetrizer(t: YoungTableau) -> GroupAlgebraElement:
    """Product over columns of the signed sum of permutations of that column's entries."""
    factors = [_block_sum(col, t.n, signed=True) for col in t.columns()]
    return reduce(ga_multiply, factors, GroupAlgebraElement.one(t.n))


def young_operator(
    t: YoungTableau, order: OperatorOrder = OperatorOrder.COLUMNS_FIRST
) -> GroupAlgebraElement:
    """
    Young operator of a standard tableau.

    COLUMNS_FIRST gives A·S (column antisymmetrizer on the left), matching
    (e-(13))(e+(12)) for the tableau 1,2;3. ROWS_FIRST gives S·A.

    Raises:
        TableauError: If t is not standard
    """
    if not t.is_standard:
        raise TableauError(f"tableau {format_tableau(t)} is not standard")
    rows = row_symmetrizer(t)
    cols = col_antisymmetrizer(t)
    if OperatorOrder(order) == OperatorOrder.COLUMNS_FIRST:
        return ga_multiply(cols, rows)
    return ga_multiply(rows, cols)


def verify_idempotent(x: GroupAlgebraElement) -> IdempotencyReport:
    """Compute x·x and report whether it equals c·x for one rational c."""
    square = ga_multiply(x, x)
    if x.is_zero():
        return IdempotencyReport(is_proportional=True, constant=Fraction(0))
    pivot, coefficient = next(iter(x.terms.items()))
    c = square.coefficient(pivot) / coefficient
    proportional = square == x.scaled(c)
    logger.debug("[Permion] x^2 = c x: %s (c = %s)", proportional, c)
    return IdempotencyReport(is_proportional=proportional, constant=c if proportional else None)


def transfer_permutation(ta: YoungTableau, tb: YoungTableau) -> Permutation:
    """
    Permutation sending the entry of tb in each box to the entry of ta in that box.

    Raises:
        TableauError: If the frames differ
    """
    if ta.frame != tb.frame:
        raise TableauError(f"frames {ta.frame} and {tb.frame} differ")
    images = [0] * ta.n
    for row_a, row_b in zip(ta.filling, tb.filling):
        for a, b in zip(row_a, row_b):
            images[b - 1] = a
    return Permutation(tuple(images))


def transfer_operator(
    ta: YoungTableau, tb: YoungTableau, order: OperatorOrder = OperatorOrder.COLUMNS_FIRST
) -> GroupAlgebraElement:
    """E_AB = E_AA · P(ta <- tb)."""
    carrier = GroupAlgebraElement.from_permutation(transfer_permutation(ta, tb))
    return ga_multiply(young_operator(ta, order), carrier)


def ga_to_matrix(x: GroupAlgebraElement, r: Representation) -> RationalMatrix:
    """
    Realize x in r: the sum of coefficient times D^g.

    Raises:
        DegreeMismatchError: If x and r act on different degrees
    """
    if x.n != r.n:
        raise DegreeMismatchError(f"element of degree {x.n} in a representation of S_{r.n}")
    return matrix_sum((scale(r[p], c) for p, c in x.terms.items()), r.dim, r.dim)


def full_symmetrizer(n: int) -> GroupAlgebraElement:
    """Σ_g g over S_n."""
    return _block_sum(tuple(range(1, n + 1)), n, signed=False)


def full_antisymmetrizer(n: int) -> GroupAlgebraElement:
    """Σ_g sign(g)·g over S_n."""
    return _block_sum(tuple(range(1, n + 1)), n, signed=True)


def _independent_rows(rows: Sequence[Sequence[Fraction]]) -> List[int]:
    """Indices of a greedily chosen maximal independent subset, in order."""
    chosen: List[int] = []
    for index in range(len(rows)):
        trial = [rows[i] for i in chosen] + [rows[index]]
        if rank(RationalMatrix.from_rows(trial)) == len(trial):
            chosen.append(index)
    return chosen


def young_ideal_rep(
    f: YoungFrame,
    order: OperatorOrder = OperatorOrder.COLUMNS_FIRST,
    limits: Optional[Limits] = None,
) -> Representation:
    """
    S_n acting by left multiplication on the left ideal of a Young operator.

    The ideal is spanned by g·E_T for the first standard tableau T of the
    frame. Its basis is P(T_j <- T)·E_T = E_{T_j}·P(T_j <- T) over the standard
    tableaux T_j, topped up from the other g·E_T if those are dependent. The
    dimension equals the number of standard tableaux of the frame.

    Raises:
        CapacityError: If n exceeds max_regular_n
    """
    resolved = resolve_limits(limits)
    resolved.check("max_regular_n", f.n)
    group = enumerate_group(f.n, resolved)
    tableaux = standard_tableaux(f, resolved)
    anchor = tableaux[0]
    generator = young_operator(anchor, order)

    def left(g: Permutation, x: GroupAlgebraElement) -> GroupAlgebraElement:
        return ga_multiply(GroupAlgebraElement.from_permutation(g), x)

    def coordinates(x: GroupAlgebraElement) -> List[Fraction]:
        return [x.coefficient(p) for p in group]

    candidates = [left(transfer_permutation(t, anchor), generator) for t in tableaux]
    candidates += [left(g, generator) for g in group]
    vectors = [coordinates(x) for x in candidates]
    basis = [candidates[i] for i in _independent_rows(vectors)]
    dim = len(basis)

    # Solve in dim independent coordinates of the group algebra.
    basis_rows = [coordinates(b) for b in basis]
    pivots = _independent_rows([list(column) for column in zip(*basis_rows)])
    restricted = RationalMatrix.from_rows([[row[p] for p in pivots] for row in basis_rows])
    solver = transpose(mat_inverse(restricted))

    matrices: Dict[Permutation, RationalMatrix] = {}
    for g in group:
        columns: List[List[Fraction]] = []
        for b in basis:
            image = coordinates(left(g, b))
            columns.append(apply(solver, [image[p] for p in pivots]))
        matrices[g] = RationalMatrix.from_rows([list(row) for row in zip(*columns)])
    logger.debug("[Permion] left ideal of %s: dimension %d", format_tableau(anchor), dim)
    return Representation(n=f.n, dim=dim, kind=RepresentationKind.CUSTOM, matrices=matrices)
