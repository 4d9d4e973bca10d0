"""
Partitions, skew shapes, semistandard tableaux and tableau tuples.

All value types here are frozen dataclasses: they can be hashed, shared
between threads and pickled into worker processes.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import partitions as _sympy_partitions

from .interfaces import InvalidPartitionError, InvalidTableauError

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise InvalidPartitionError(f"Partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise InvalidPartitionError(f"Partition parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """Return part ``i`` (0-indexed), or 0 past the end."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def double(self) -> "Partition":
        return double(self)

    def contains(self, other: "Partition") -> bool:
        """True if ``other`` fits inside this diagram cellwise."""
        return len(other) <= len(self) and all(o <= self.parts[i] for i, o in enumerate(other))

    def cells(self) -> List[Cell]:
        return [(r, c) for r, p in enumerate(self.parts) for c in range(p)]


@dataclass(frozen=True)
class Composition:
    """Letter multiplicities: entry ``i`` counts the letter ``i + 1``.

    Internal zeros are kept; trailing zeros are stripped so that
    compositions compare up to trailing zeros.
    """
    counts: Tuple[int, ...] = ()

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise InvalidPartitionError(f"Composition entries must be nonnegative: {counts}")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, *counts: int) -> "Composition":
        return cls(tuple(counts))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Composition":
        tally = Counter(letters)
        top = max(tally, default=0)
        return cls(tuple(tally.get(i, 0) for i in range(1, top + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __add__(self, other: "Composition") -> "Composition":
        n = max(len(self), len(other))
        return Composition(tuple(self.count(i) + other.count(i) for i in range(1, n + 1)))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)

    def count(self, letter: int) -> int:
        """Multiplicity of ``letter`` (1-indexed)."""
        return self.counts[letter - 1] if 1 <= letter <= len(self.counts) else 0

    @property
    def size(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class SkewShape:
    """The diagram of ``outer`` with the cells of ``inner`` removed."""
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidPartitionError(f"Inner shape {self.inner.parts} is not contained in {self.outer.parts}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return len(self.inner) == 0

    def cells(self) -> List[Cell]:
        """Cells of the skew diagram in row-reading order (top row first)."""
        return [(r, c) for r, p in enumerate(self.outer)
                for c in range(self.inner.part(r), p)]

    def __str__(self) -> str:
        if self.is_straight:
            return f"({self.outer})"
        return f"({self.outer})/({self.inner})"


@dataclass(frozen=True)
class Tableau:
    """A (possibly skew) filling of a diagram with positive integers.

    ``rows[i]`` lists the entries of row ``i`` left to right, skipping the
    ``inner[i]`` empty cells. The semistandard condition is not enforced
    here because conjugate tableaux reuse this type; see
    :func:`is_semistandard` and :func:`is_conjugate_semistandard`.
    """
    rows: Tuple[Tuple[int, ...], ...] = ()
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        inner = self.inner if isinstance(self.inner, Partition) else Partition(tuple(self.inner))
        rows = [tuple(int(x) for x in row) for row in self.rows]
        while len(rows) < len(inner):
            rows.append(())
        while rows and not rows[-1] and inner.part(len(rows) - 1) == 0:
            rows.pop()
        for row in rows:
            if any(x < 1 for x in row):
                raise InvalidTableauError(f"Tableau entries must be positive: {row}")
        outer = [inner.part(i) + len(row) for i, row in enumerate(rows)]
        for i in range(1, len(outer)):
            if outer[i] > outer[i - 1]:
                raise InvalidTableauError(f"Rows do not form a skew diagram: inner {inner.parts}, lengths {outer}")
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "inner", inner)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows), Partition(tuple(inner)))

    @classmethod
    def from_cells(cls, cells: Dict[Cell, int], inner: Partition = Partition()) -> "Tableau":
        """Build a tableau from a ``{(row, col): entry}`` map."""
        if not cells:
            return cls((), inner)
        height = max(max(r for r, _ in cells) + 1, len(inner))
        rows = []
        for r in range(height):
            start = inner.part(r)
            row = []
            c = start
            while (r, c) in cells:
                row.append(cells[(r, c)])
                c += 1
            rows.append(tuple(row))
        t = cls(tuple(rows), inner)
        if t.size != len(cells):
            raise InvalidTableauError("Cells do not form a skew diagram over the given inner shape")
        return t

    @property
    def outer(self) -> Partition:
        return Partition(tuple(self.inner.part(i) + len(row) for i, row in enumerate(self.rows)))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def is_straight(self) -> bool:
        return len(self.inner) == 0

    def entry(self, r: int, c: int) -> Optional[int]:
        """Entry at ``(r, c)``; None for empty inner cells and cells outside."""
        if r < 0 or r >= len(self.rows):
            return None
        start = self.inner.part(r)
        if c < start or c >= start + len(self.rows[r]):
            return None
        return self.rows[r][c - start]

    def cells(self) -> Dict[Cell, int]:
        return {(r, self.inner.part(r) + k): x
                for r, row in enumerate(self.rows) for k, x in enumerate(row)}

    def entries(self) -> List[int]:
        return [x for row in self.rows for x in row]

    def __str__(self) -> str:
        lines = []
        for r, row in enumerate(self.rows):
            lines.append(" " * (2 * self.inner.part(r)) + " ".join(str(x) for x in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class TableauTuple:
    """A tuple of one-row (``kind="row"``) or one-column tableaux.

    ``profile[i]`` is the number of cells of member ``i``.
    """
    members: Tuple[Tableau, ...]
    kind: str = "row"

    def __post_init__(self):
        if self.kind not in ("row", "column"):
            raise InvalidTableauError(f"Unknown tuple kind: {self.kind}")
        for t in self.members:
            if not t.is_straight:
                raise InvalidTableauError("Tuple members must have straight shape")
            if self.kind == "row" and len(t.rows) > 1:
                raise InvalidTableauError(f"Row tuple member has {len(t.rows)} rows")
            if self.kind == "column" and any(len(row) > 1 for row in t.rows):
                raise InvalidTableauError("Column tuple member has a row longer than one")
        Partition(tuple(t.size for t in self.members))

    @classmethod
    def rows_of(cls, words: Sequence[Sequence[int]]) -> "TableauTuple":
        """Row tuple from one weakly increasing word per member."""
        return cls(tuple(Tableau(((tuple(w),) if w else ())) for w in words), "row")

    @classmethod
    def columns_of(cls, columns: Sequence[Sequence[int]]) -> "TableauTuple":
        """Column tuple from the entries of each column, top to bottom."""
        return cls(tuple(Tableau(tuple((x,) for x in col)) for col in columns), "column")

    @property
    def profile(self) -> Partition:
        return Partition(tuple(t.size for t in self.members))

    def words(self) -> List[List[int]]:
        """Entries of each member in reading order."""
        return [reading_word(t) for t in self.members]

    def __len__(self) -> int:
        return len(self.members)


def conjugate(p: Partition) -> Partition:
    """Transpose the diagram of ``p``."""
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p if x > i) for i in range(p.parts[0])))


def double(p: Partition) -> Partition:
    """Repeat every part twice: (2, 1) -> (2, 2, 1, 1)."""
    return Partition(tuple(x for x in p for _ in range(2)))


def content(t: Union[Tableau, TableauTuple]) -> Composition:
    if isinstance(t, TableauTuple):
        total = Composition()
        for member in t.members:
            total = total + content(member)
        return total
    return Composition.from_letters(t.entries())


def reading_word(t: Union[Tableau, TableauTuple]) -> List[int]:
    """Read rows left to right, bottom row first; members in order."""
    if isinstance(t, TableauTuple):
        return [x for member in t.members for x in reading_word(member)]
    return [x for row in reversed(t.rows) for x in row]


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase (across the skew boundary)."""
    cells = t.cells()
    for (r, c), x in cells.items():
        right = cells.get((r, c + 1))
        if right is not None and right < x:
            return False
        below = cells.get((r + 1, c))
        if below is not None and below <= x:
            return False
    return True


def transpose(t: Tableau) -> Tableau:
    """Reflect a (skew) tableau along its main diagonal."""
    return Tableau.from_cells({(c, r): x for (r, c), x in t.cells().items()}, conjugate(t.inner))


def is_conjugate_semistandard(t: Tableau) -> bool:
    """Rows strictly increase and columns weakly increase."""
    return is_semistandard(transpose(t))


def require_semistandard(t: Tableau) -> Tableau:
    if not is_semistandard(t):
        raise InvalidTableauError(f"Tableau is not semistandard:\n{t}")
    return t


def enumerate_ssyt(shape: Union[SkewShape, Partition], weight: Composition) -> List[Tableau]:
    """All semistandard fillings of ``shape`` with content ``weight``.

    Cells are filled one by one in row-reading order, smallest admissible
    letter first, so the result is sorted lexicographically by the
    row-reading word.
    """
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    if not isinstance(weight, Composition):
        weight = Composition(tuple(weight))
    cells = shape.cells()
    if len(cells) != weight.size:
        return []
    if not cells:
        return [Tableau((), shape.inner)]

    outer, inner = shape.outer, shape.inner
    letters = len(weight)
    remaining = [0] + list(weight.counts)
    # cells strictly below (r, c) in the same column; all of them are filled
    depth = {}
    for r, c in cells:
        d = 0
        while outer.part(r + d + 1) > c:
            d += 1
        depth[(r, c)] = d
    grid: Dict[Cell, int] = {}
    results: List[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            results.append(Tableau.from_cells(dict(grid), inner))
            return
        r, c = cells[k]
        low = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        high = letters - depth[(r, c)]
        for v in range(low, high + 1):
            if not remaining[v]:
                continue
            remaining[v] -= 1
            grid[(r, c)] = v
            fill(k + 1)
            del grid[(r, c)]
            remaining[v] += 1

    fill(0)
    logger.debug("enumerate_ssyt %s content %s: %d tableaux", shape, weight, len(results))
    return results


def _strips_below(outer: Tuple[int, ...], floor: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Partitions rho with floor <= rho <= outer and outer/rho a horizontal strip of ``size`` cells."""
    n = len(outer)

    def walk(i: int, left: int, acc: List[int]) -> Iterator[Tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield tuple(acc)
            return
        lo = max(outer[i + 1] if i + 1 < n else 0, floor[i] if i < len(floor) else 0)
        for rho in range(outer[i], lo - 1, -1):
            removed = outer[i] - rho
            if removed > left:
                break
            acc.append(rho)
            yield from walk(i + 1, left - removed, acc)
            acc.pop()

    yield from walk(0, size, [])


@lru_cache(maxsize=None)
def _kostka(outer: Tuple[int, ...], inner: Tuple[int, ...], counts: Tuple[int, ...]) -> int:
    if not counts:
        return 1 if sum(outer) == sum(inner) else 0
    total = 0
    for rho in _strips_below(outer, inner, counts[-1]):
        total += _kostka(tuple(x for x in rho if x), inner, counts[:-1])
    return total


def kostka(shape: Union[Partition, SkewShape], weight: Composition) -> int:
    """Number of semistandard tableaux of ``shape`` and content ``weight``.

    Counted by peeling horizontal strips, largest letter first; equals
    ``len(enumerate_ssyt(shape, weight))``.
    """
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    if not isinstance(weight, Composition):
        weight = Composition(tuple(weight))
    if shape.size != weight.size:
        return 0
    return _kostka(shape.outer.parts, shape.inner.parts, weight.counts)


def count_standard(shape: Partition) -> int:
    """f^shape, the number of standard tableaux."""
    return kostka(shape, Composition((1,) * shape.size))


def partitions_of(n: int) -> List[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    if n == 0:
        return [Partition()]
    found = []
    for mult in _sympy_partitions(n):
        found.append(Partition(tuple(sorted((p for p, m in mult.items() for _ in range(m)), reverse=True))))
    return sorted(found, reverse=True)


def horizontal_strip_extensions(p: Partition, n: int) -> List[Partition]:
    """Partitions obtained by adding ``n`` cells to ``p``, no two in one column."""
    found = []
    for nu in partitions_of(p.size + n):
        if nu.contains(p) and all(nu.part(i + 1) <= p.part(i) for i in range(len(nu))):
            found.append(nu)
    return found


def vertical_strip_extensions(p: Partition, n: int) -> List[Partition]:
    """Partitions obtained by adding ``n`` cells to ``p``, no two in one row."""
    return sorted((conjugate(nu) for nu in horizontal_strip_extensions(conjugate(p), n)), reverse=True)


def enumerate_row_tuples(profile: Partition, alphabet: int) -> Iterator[TableauTuple]:
    """Every tuple of one-row tableaux of sizes ``profile`` over letters 1..alphabet."""
    choices = [list(combinations_with_replacement(range(1, alphabet + 1), k)) for k in profile]
    for pick in product(*choices):
        yield TableauTuple.rows_of(pick)


def enumerate_column_tuples(profile: Partition, alphabet: int) -> Iterator[TableauTuple]:
    """Every tuple of one-column tableaux of heights ``profile`` over letters 1..alphabet."""
    choices = [list(combinations(range(1, alphabet + 1), k)) for k in profile]
    for pick in product(*choices):
        yield TableauTuple.columns_of(pick)
