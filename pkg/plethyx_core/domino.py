"""
Domino tableaux on two-row and two-column rectangles: Yamanouchi
enumeration, cospin, and the closed forms recovered from cospin parity.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .interfaces import InvalidTableauError
from .partitions import Cell, Composition, Partition
from .plethysm_sign import Counts, SignedKostkaTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Domino:
    cells: Tuple[Cell, Cell]
    entry: int

    @property
    def orientation(self) -> str:
        (r1, _), (r2, _) = self.cells
        return "vertical" if r1 != r2 else "horizontal"


@dataclass(frozen=True)
class DominoWord:
    letters: Tuple[int, ...]

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class DominoTableau:
    """A tiling of ``shape`` by dominoes, each carrying one entry."""
    shape: Partition
    dominoes: Tuple[Domino, ...]

    def __post_init__(self):
        covered = [cell for d in self.dominoes for cell in d.cells]
        if len(covered) != len(set(covered)) or set(covered) != set(self.shape.cells()):
            raise InvalidTableauError(f"Dominoes do not tile ({self.shape})")

    def grid(self) -> Dict[Cell, int]:
        return {cell: d.entry for d in self.dominoes for cell in d.cells}

    def owner(self) -> Dict[Cell, int]:
        return {cell: k for k, d in enumerate(self.dominoes) for cell in d.cells}

    @property
    def vertical_count(self) -> int:
        return sum(1 for d in self.dominoes if d.orientation == "vertical")

    @property
    def horizontal_count(self) -> int:
        return len(self.dominoes) - self.vertical_count

    def weight(self) -> Composition:
        return Composition.from_letters(d.entry for d in self.dominoes)

    def is_semistandard(self) -> bool:
        return _filling_ok(self.grid(), self.owner())


def _filling_ok(grid: Dict[Cell, int], owner: Dict[Cell, int]) -> bool:
    """Rows weakly increase; vertical neighbours in distinct dominoes strictly increase."""
    for (r, c), x in grid.items():
        right = grid.get((r, c + 1))
        if right is not None and right < x:
            return False
        below = grid.get((r + 1, c))
        if below is not None and owner[(r + 1, c)] != owner[(r, c)] and below <= x:
            return False
    return True


def _tilings(shape: Partition) -> Iterator[List[Tuple[Cell, Cell]]]:
    cells = shape.cells()
    inside = set(cells)
    used: Dict[Cell, bool] = {}
    placed: List[Tuple[Cell, Cell]] = []

    def walk(k: int) -> Iterator[List[Tuple[Cell, Cell]]]:
        while k < len(cells) and cells[k] in used:
            k += 1
        if k == len(cells):
            yield list(placed)
            return
        r, c = cells[k]
        for other in ((r, c + 1), (r + 1, c)):
            if other in inside and other not in used:
                used[(r, c)] = used[other] = True
                placed.append(((r, c), other))
                yield from walk(k + 1)
                placed.pop()
                del used[(r, c)], used[other]

    if shape.size % 2:
        return
    yield from walk(0)


@lru_cache(maxsize=None)
def max_vertical(shape: Partition) -> int:
    """Largest number of vertical dominoes over all tilings of ``shape``."""
    best = -1
    for tiling in _tilings(shape):
        best = max(best, sum(1 for (a, b) in tiling if a[0] != b[0]))
    if best < 0:
        raise InvalidTableauError(f"Shape ({shape}) has no domino tiling")
    return best


def _reading_order(tiling: List[Tuple[Cell, Cell]], shape: Partition) -> List[int]:
    owner = {cell: k for k, pair in enumerate(tiling) for cell in pair}
    seen: List[int] = []
    for r in range(len(shape) - 1, -1, -1):
        for c in range(shape[r]):
            k = owner[(r, c)]
            if k not in seen:
                seen.append(k)
    return seen


def enumerate_domino_tableaux(shape: Partition, max_entry: Optional[int] = None,
                              yamanouchi_only: bool = False) -> List[DominoTableau]:
    """Every tiling of ``shape`` with every semistandard filling by 1..max_entry.

    With ``yamanouchi_only`` dominoes are filled in reverse reading order
    and any suffix whose content stops being a partition is cut off.
    """
    if max_entry is None:
        max_entry = shape.size // 2
    results: List[DominoTableau] = []
    for tiling in _tilings(shape):
        order = list(reversed(_reading_order(tiling, shape)))
        owner = {cell: k for k, pair in enumerate(tiling) for cell in pair}
        entries: Dict[int, int] = {}
        counts = Counter()

        def fits(k: int, x: int) -> bool:
            for r, c in tiling[k]:
                for (rr, cc), before in (((r, c - 1), True), ((r, c + 1), False),
                                         ((r - 1, c), True), ((r + 1, c), False)):
                    j = owner.get((rr, cc))
                    if j is None or j == k or j not in entries:
                        continue
                    y = entries[j]
                    horizontal = rr == r
                    if horizontal and (y > x if before else y < x):
                        return False
                    if not horizontal and (y >= x if before else y <= x):
                        return False
            return True

        def fill(i: int) -> None:
            if i == len(order):
                dominoes = tuple(Domino(pair, entries[k]) for k, pair in enumerate(tiling))
                results.append(DominoTableau(shape, dominoes))
                return
            k = order[i]
            for x in range(1, max_entry + 1):
                if yamanouchi_only and x > 1 and counts[x] >= counts[x - 1]:
                    continue
                if not fits(k, x):
                    continue
                entries[k] = x
                counts[x] += 1
                fill(i + 1)
                counts[x] -= 1
                del entries[k]

        fill(0)
    logger.debug("enumerate_domino_tableaux (%s): %d tableaux", shape, len(results))
    return results


def domino_reading_word(d: DominoTableau) -> DominoWord:
    """Rows bottom to top, left to right; each domino read when first met."""
    grid = d.grid()
    owner = d.owner()
    seen = set()
    letters = []
    for r in range(len(d.shape) - 1, -1, -1):
        for c in range(d.shape[r]):
            k = owner[(r, c)]
            if k not in seen:
                seen.add(k)
                letters.append(grid[(r, c)])
    return DominoWord(tuple(letters))


def is_yamanouchi(w: DominoWord) -> bool:
    counts = Counter()
    for x in reversed(w.letters):
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def cospin(d: DominoTableau) -> int:
    """(max vertical dominoes over tilings of the shape - vertical dominoes used) / 2."""
    gap = max_vertical(d.shape) - d.vertical_count
    if gap % 2:
        raise InvalidTableauError(f"Odd vertical-domino gap {gap} on ({d.shape})")
    return gap // 2


def family_shape(n: int, basis: str) -> Partition:
    if basis == "h":
        return Partition((2 * n, 2 * n))
    if basis == "e":
        return Partition((2,) * (2 * n))
    raise ValueError(f"Unknown basis '{basis}'")


def domino_families(n: int, basis: str = "h") -> List[DominoTableau]:
    """The explicit Yamanouchi tableaux, j = 0..n, with cospin j.

    h: 2n-2j vertical ones, then j stacked horizontal pairs (1 above 2).
    e: n-j pairs of vertical dominoes filled 1..n-j, then 2j horizontal
    dominoes filled n-j+1..n+j from the top.
    """
    shape = family_shape(n, basis)
    out = []
    for j in range(n + 1):
        dominoes: List[Domino] = []
        if basis == "h":
            for c in range(2 * n - 2 * j):
                dominoes.append(Domino(((0, c), (1, c)), 1))
            for k in range(j):
                c = 2 * n - 2 * j + 2 * k
                dominoes.append(Domino(((0, c), (0, c + 1)), 1))
                dominoes.append(Domino(((1, c), (1, c + 1)), 2))
        else:
            for k in range(n - j):
                for c in (0, 1):
                    dominoes.append(Domino(((2 * k, c), (2 * k + 1, c)), k + 1))
            for k in range(2 * j):
                r = 2 * (n - j) + k
                dominoes.append(Domino(((r, 0), (r, 1)), n - j + 1 + k))
        out.append(DominoTableau(shape, tuple(dominoes)))
    return out


def littlewood_via_domino(n: int, basis: str = "h") -> SignedKostkaTable:
    """Bucket Yamanouchi domino tableaux by weight; even cospin is symmetric."""
    buckets: Dict[Partition, List[int]] = {}
    for d in enumerate_domino_tableaux(family_shape(n, basis), yamanouchi_only=True):
        weight = Partition(d.weight().counts)
        slot = buckets.setdefault(weight, [0, 0])
        slot[cospin(d) % 2] += 1
    entries: Dict[Partition, Counts] = {nu: (kp, km) for nu, (kp, km) in sorted(buckets.items(), reverse=True)}
    return SignedKostkaTable(entries, Partition((n,)), basis)


def render_domino(d: DominoTableau) -> str:
    """ASCII drawing; borders are omitted inside a domino."""
    owner = d.owner()
    grid = d.grid()
    width = max(len(str(x)) for x in grid.values()) if grid else 1
    rows = len(d.shape)

    def split(a: Cell, b: Cell) -> bool:
        return owner.get(a) is None or owner.get(b) is None or owner[a] != owner[b]

    lines = []
    for r in range(rows + 1):
        span = max(d.shape.part(r - 1) if r else 0, d.shape.part(r))
        border = "+"
        for c in range(span):
            border += ("-" * (width + 2) if split((r - 1, c), (r, c)) else " " * (width + 2)) + "+"
        lines.append(border)
        if r == rows:
            break
        line = "|"
        for c in range(d.shape[r]):
            line += f" {grid[(r, c)]:>{width}} " + ("|" if split((r, c), (r, c + 1)) else " ")
        lines.append(line)
    return "\n".join(lines)
