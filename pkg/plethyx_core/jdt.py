"""
Jeu de taquin slides, rectification and the tableau product.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .interfaces import InvalidCornerError
from .partitions import Cell, Partition, SkewShape, Tableau

logger = logging.getLogger(__name__)

CornerChooser = Callable[[List[Cell]], Cell]


@dataclass(frozen=True)
class SlideTrace:
    """One slide: the inner corner it started from, the cells the hole
    visited, and the tableau left behind."""
    start_corner: Cell
    path: Tuple[Cell, ...]
    result: Tableau


class _Grid:
    """Mutable working copy of a skew tableau; ``None`` marks empty inner cells."""

    def __init__(self, t: Tableau):
        self.inner = list(t.inner.parts)
        self.rows: List[List[Optional[int]]] = [
            [None] * t.inner.part(r) + list(row) for r, row in enumerate(t.rows)
        ]

    def corners(self) -> List[Cell]:
        found = []
        for r, k in enumerate(self.inner):
            below = self.inner[r + 1] if r + 1 < len(self.inner) else 0
            if k > below:
                found.append((r, k - 1))
        return found

    def slide(self, r: int, c: int) -> List[Cell]:
        self.inner[r] -= 1
        while self.inner and self.inner[-1] == 0:
            self.inner.pop()
        path = [(r, c)]
        rows = self.rows
        while True:
            right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
            below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
            if right is None and below is None:
                break
            if below is not None and (right is None or below <= right):
                rows[r][c] = below
                r += 1
            else:
                rows[r][c] = right
                c += 1
            path.append((r, c))
        rows[r].pop()
        while rows and not rows[-1]:
            rows.pop()
        return path

    def to_tableau(self) -> Tableau:
        return Tableau(tuple(tuple(x for x in row if x is not None) for row in self.rows),
                       Partition(tuple(self.inner)))


def inner_corners(s: SkewShape) -> List[Cell]:
    """Cells of the inner shape whose east and south neighbours are not inner cells."""
    inner = s.inner
    return [(r, inner[r] - 1) for r in range(len(inner)) if inner[r] > inner.part(r + 1)]


def jdt_slide_trace(t: Tableau, corner: Cell) -> SlideTrace:
    grid = _Grid(t)
    if tuple(corner) not in grid.corners():
        raise InvalidCornerError(f"{tuple(corner)} is not an inner corner of {t.shape}")
    path = grid.slide(*corner)
    return SlideTrace(tuple(corner), tuple(path), grid.to_tableau())


def jdt_slide(t: Tableau, corner: Cell) -> Tableau:
    """Slide the empty inner corner ``corner`` out to the outer border."""
    return jdt_slide_trace(t, corner).result


def _last_corner(corners: List[Cell]) -> Cell:
    return max(corners)


def rectify(t: Tableau, choose: Optional[CornerChooser] = None) -> Tableau:
    """Rectify ``t`` by jeu de taquin.

    By default the inner corner with the largest row index slides first;
    ``choose`` picks among the current corners instead.
    """
    if t.is_straight:
        return t
    choose = choose or _last_corner
    grid = _Grid(t)
    corners = grid.corners()
    while corners:
        grid.slide(*choose(corners))
        corners = grid.corners()
    return grid.to_tableau()


def rectify_trace(t: Tableau, choose: Optional[CornerChooser] = None) -> List[SlideTrace]:
    """Rectify ``t`` one slide at a time, keeping every intermediate frame."""
    choose = choose or _last_corner
    frames = []
    current = t
    while not current.is_straight:
        corner = choose(inner_corners(current.shape))
        trace = jdt_slide_trace(current, corner)
        frames.append(trace)
        current = trace.result
    return frames


def star_product(t1: Tableau, t2: Tableau) -> Tableau:
    """Place ``t1`` below and left of ``t2``.

    With ``t1`` of shape mu and ``t2`` of shape nu (length l) the result has
    shape (mu1+nu1, ..., mu1+nu_l, mu1, ..., mu_k) / (mu1^l).
    """
    if not t1.rows:
        return t2
    if not t2.rows:
        return t1
    width = len(t1.rows[0])
    rows = tuple(t2.rows) + tuple(t1.rows)
    return Tableau(rows, Partition((width,) * len(t2.rows)))


def product(t1: Tableau, t2: Tableau) -> Tableau:
    """The tableau product: Rect(t1 * t2)."""
    if not t1.rows:
        return t2
    if not t2.rows:
        return t1
    return rectify(star_product(t1, t2))


def product_all(tableaux: Sequence[Tableau]) -> Tableau:
    """Rect(t1 * t2 * ... * tk), rectified left to right."""
    result = Tableau()
    for t in tableaux:
        result = product(result, t)
    return result
