"""Permutations of {1..n}: cycle notation, composition, and the structure of S_n."""

import itertools
import logging
import math
import re
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import CycleParseError, DegreeMismatchError, PermionError
from .models import GroupAxiomReport, Limits, resolve_limits

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Bijection on {1..n} in one-line form.

    images[i - 1] is the image of point i. Products compose right to left:
    (a * b)(i) = a(b(i)).
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise PermionError("permutation degree must be positive")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PermionError(f"images {list(images)} are not a permutation of 1..{len(images)}")

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(images))

    @property
    def n(self) -> int:
        """Degree."""
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={self.n})"

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """All orbits including fixed points, each starting at its smallest point."""
        seen = set()
        orbits = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                orbit.append(point)
                seen.add(point)
                point = self(point)
            orbits.append(tuple(orbit))
        return orbits


@dataclass(frozen=True, order=True)
class CycleType:
    """Orbit lengths of a permutation in descending order, fixed points included."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise PermionError(f"cycle type {list(parts)} must be positive and descending")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class MultiplicationTable:
    """Cayley table of S_n over a fixed element ordering."""

    elements: Tuple[Permutation, ...]
    table: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_latin_square(self) -> bool:
        """Every row and every column is a permutation of the indices."""
        indices = list(range(self.order))
        rows_ok = all(sorted(row) == indices for row in self.table)
        cols_ok = all(
            sorted(row[j] for row in self.table) == indices for j in range(self.order)
        )
        return rows_ok and cols_ok

    def to_dict(self) -> Dict[str, object]:
        """Convert to dictionary for JSON serialization."""
        return {
            "elements": [format_cycles(p) for p in self.elements],
            "table": [list(row) for row in self.table],
        }


def identity(n: int) -> Permutation:
    """Identity permutation of degree n."""
    return Permutation(tuple(range(1, n + 1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    """The transposition (i j) of degree n."""
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def parse_cycles(text: str, n: int) -> Permutation:
    """
    Parse cycle notation.

    Single-digit points may be juxtaposed, "(134)"; multi-digit points need
    commas, "(1,13)". The empty string and "e" denote the identity.

    Args:
        text: Cycle-notation string
        n: Degree

    Returns:
        Permutation whose orbits are the given cycles

    Raises:
        CycleParseError: On malformed syntax, repeated points or points > n
    """
    if n < 1:
        raise CycleParseError(f"degree must be positive, got {n}")
    for raw in re.findall(r"\(([^()]*)\)", text):
        if "," in raw and any(re.search(r"\d\s+\d", piece) for piece in raw.split(",")):
            raise CycleParseError(f"whitespace inside a point of ({raw.strip()}) in {text!r}")
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "e"):
        return identity(n)

    cycles: List[List[int]] = []
    position = 0
    for match in _CYCLE_RE.finditer(compact):
        if match.start() != position:
            stray = compact[position : match.start()]
            raise CycleParseError(f"unexpected text {stray!r} in {text!r}")
        position = match.end()
        body = match.group(1)
        if not body:
            raise CycleParseError(f"empty cycle in {text!r}")
        if "," in body:
            tokens = body.split(",")
            if any(not token.isdigit() for token in tokens):
                raise CycleParseError(f"malformed cycle ({body}) in {text!r}")
            cycles.append([int(token) for token in tokens])
        else:
            if not body.isdigit():
                raise CycleParseError(f"malformed cycle ({body}) in {text!r}")
            cycles.append([int(ch) for ch in body])
    if position != len(compact):
        raise CycleParseError(f"unexpected text {compact[position:]!r} in {text!r}")

    images = list(range(1, n + 1))
    used = set()
    for cycle in cycles:
        for point in cycle:
            if point < 1 or point > n:
                raise CycleParseError(f"point {point} outside 1..{n} in {text!r}")
            if point in used:
                raise CycleParseError(f"point {point} repeated in {text!r}")
            used.add(point)
        for k, point in enumerate(cycle):
            images[point - 1] = cycle[(k + 1) % len(cycle)]
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """
    Canonical cycle notation.

    Each cycle starts at its smallest point, cycles are sorted by that point
    and fixed points are omitted. The identity prints as "e". A cycle holding
    a multi-digit point is written with commas.
    """
    parts = []
    for orbit in p.cycles():
        if len(orbit) == 1:
            continue
        if any(point > 9 for point in orbit):
            parts.append("(" + ",".join(str(point) for point in orbit) + ")")
        else:
            parts.append("(" + "".join(str(point) for point in orbit) + ")")
    return "".join(parts) if parts else "e"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """
    Product a*b, acting as a(b(i)).

    Raises:
        DegreeMismatchError: If the degrees differ
    """
    if a.n != b.n:
        raise DegreeMismatchError(f"cannot compose degree {a.n} with degree {b.n}")
    return Permutation(tuple(a.images[image - 1] for image in b.images))


def compose_all(factors: Sequence[Permutation], n: Optional[int] = None) -> Permutation:
    """Right-to-left product of factors; identity of degree n when empty."""
    if not factors:
        if n is None:
            raise PermionError("degree required for an empty product")
        return identity(n)
    return reduce(compose, factors)


def inverse(p: Permutation) -> Permutation:
    """Inverse permutation."""
    images = [0] * p.n
    for point, image in enumerate(p.images, start=1):
        images[image - 1] = point
    return Permutation(tuple(images))


def sign(p: Permutation) -> int:
    """+1 for even permutations, -1 for odd ones."""
    return -1 if (p.n - len(p.cycles())) % 2 else 1


def cycle_type(p: Permutation) -> CycleType:
    """Descending orbit lengths, fixed points included."""
    return CycleType(tuple(sorted((len(orbit) for orbit in p.cycles()), reverse=True)))


def order(p: Permutation) -> int:
    """Smallest k >= 1 with p^k = e."""
    return reduce(lambda acc, length: acc * length // math.gcd(acc, length), cycle_type(p).parts, 1)


def transposition_decomposition(p: Permutation) -> List[Permutation]:
    """
    Transpositions whose right-to-left product is p.

    The cycle (c1 c2 ... ck) is written (c1 ck)*...*(c1 c3)*(c1 c2); the count
    has the parity of sign(p).
    """
    factors: List[Permutation] = []
    for orbit in p.cycles():
        head = orbit[0]
        for point in reversed(orbit[1:]):
            factors.append(transposition(head, point, p.n))
    return factors


def standard_generators(n: int) -> List[Permutation]:
    """The transposition (12) and the n-cycle (12...n), which generate S_n."""
    if n < 2:
        return []
    return [transposition(1, 2, n), Permutation(tuple(range(2, n + 1)) + (1,))]


def _check_degree(n: int, cap: str, limits: Optional[Limits]) -> None:
    if n < 1:
        raise PermionError(f"degree must be positive, got {n}")
    resolve_limits(limits).check(cap, n)


def enumerate_group(n: int, limits: Optional[Limits] = None) -> List[Permutation]:
    """
    All n! permutations in lexicographic one-line order, identity first.

    Raises:
        CapacityError: If n exceeds the enumeration cap
    """
    _check_degree(n, "max_enumerate_n", limits)
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


def generate_from(
    gens: Sequence[Permutation], n: Optional[int] = None, limits: Optional[Limits] = None
) -> FrozenSet[Permutation]:
    """
    Subgroup generated by gens.

    Args:
        gens: Generators, all of one degree
        n: Degree, required only when gens is empty

    Returns:
        Closure of gens under composition and inversion; always holds e

    Raises:
        DegreeMismatchError: If generators disagree on the degree
    """
    if gens:
        degree = gens[0].n
        for g in gens:
            if g.n != degree:
                raise DegreeMismatchError(f"generator {g} has degree {g.n}, expected {degree}")
        if n is not None and n != degree:
            raise DegreeMismatchError(f"generators have degree {degree}, expected {n}")
    elif n is None:
        raise PermionError("degree required for an empty generating set")
    else:
        degree = n
    _check_degree(degree, "max_enumerate_n", limits)

    # finite group: closing under products also closes under inverses
    start = identity(degree)
    found = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in gens:
            product = compose(g, current)
            if product not in found:
                found.add(product)
                queue.append(product)
    logger.debug(
        "[Permion] generated subgroup of order %d from %d generators", len(found), len(gens)
    )
    return frozenset(found)


def multiplication_table(
    n: int, elements: Optional[Sequence[Permutation]] = None, limits: Optional[Limits] = None
) -> MultiplicationTable:
    """
    Cayley table of S_n: table[i][j] is the index of elements[i] * elements[j].

    Args:
        n: Degree
        elements: Ordering to use; defaults to enumerate_group(n)
    """
    _check_degree(n, "max_table_n", limits)
    ordered = tuple(elements) if elements is not None else tuple(enumerate_group(n, limits))
    index = {p: i for i, p in enumerate(ordered)}
    table = tuple(tuple(index[compose(a, b)] for b in ordered) for a in ordered)
    return MultiplicationTable(elements=ordered, table=table)


def conjugacy_classes(
    n: int, limits: Optional[Limits] = None
) -> Dict[CycleType, List[Permutation]]:
    """
    Partition S_n by cycle type.

    Classes are keyed in order of first appearance in enumerate_group(n). Each
    class is checked to be closed under conjugation by the generators (12) and
    (12...n), which is enough for closure under the whole group.
    """
    _check_degree(n, "max_classes_n", limits)
    classes: Dict[CycleType, List[Permutation]] = {}
    for p in enumerate_group(n, limits):
        classes.setdefault(cycle_type(p), []).append(p)

    for key, members in classes.items():
        member_set = set(members)
        for g in standard_generators(n):
            g_inv = inverse(g)
            for b in members:
                if compose(compose(g, b), g_inv) not in member_set:
                    raise PermionError(f"class {key} not closed under conjugation by {g}")
    logger.debug("[Permion] S_%d has %d conjugacy classes", n, len(classes))
    return classes


def verify_group_axioms(n: int, limits: Optional[Limits] = None) -> GroupAxiomReport:
    """
    Check closure, identity, inverses and associativity on S_n through its table.

    Associativity runs over all triples up to n = 4 and over triples with a
    generator in the middle above that.
    """
    _check_degree(n, "max_axioms_n", limits)
    table = multiplication_table(n, limits=limits)
    h = table.order
    rows = table.table
    e = 0  # enumerate_group puts the identity first

    closure = all(0 <= value < h for row in rows for value in row)
    identity_ok = all(rows[e][j] == j and rows[j][e] == j for j in range(h))
    identity_ok = identity_ok and sum(
        1 for i in range(h) if all(rows[i][j] == j for j in range(h))
    ) == 1
    inverses = all(
        sum(1 for j in range(h) if rows[i][j] == e) == 1
        and all((rows[i][j] == e) == (rows[j][i] == e) for j in range(h))
        for i in range(h)
    )

    if n <= 4:
        middles = list(range(h))
    else:
        middles = sorted(table.elements.index(g) for g in standard_generators(n))
    associativity = all(
        rows[rows[i][j]][k] == rows[i][rows[j][k]]
        for i in range(h)
        for j in middles
        for k in range(h)
    )
    report = GroupAxiomReport(
        n=n,
        order=h,
        closure=closure,
        identity=identity_ok,
        inverses=inverses,
        associativity=associativity,
        latin_square=table.is_latin_square(),
        triples_checked=h * len(middles) * h,
    )
    logger.debug("[Permion] group axioms on S_%d: ok=%s", n, report.ok)
    return report


def s3_display_ordering() -> List[Permutation]:
    """S_3 ordered as e, (12), (13)*(12), (13), (12)*(13), (23)."""
    t12 = parse_cycles("(12)", 3)
    t13 = parse_cycles("(13)", 3)
    t23 = parse_cycles("(23)", 3)
    return [identity(3), t12, compose(t13, t12), t13, compose(t12, t13), t23]
