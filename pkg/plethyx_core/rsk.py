"""
RSK and RSK~ correspondences, tuple/biword encodings and recording-tableau
dissection.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import groupby
from typing import Dict, List, Sequence, Tuple

from .interfaces import InvalidTableauError, MalformedBiwordError
from .partitions import Cell, Partition, Tableau, TableauTuple

logger = logging.getLogger(__name__)

BiLetter = Tuple[int, int]


@dataclass(frozen=True)
class Biword:
    """Bi-letters (u, v) in lexicographic order: u weakly increases and
    v weakly increases within equal u."""
    pairs: Tuple[BiLetter, ...] = ()

    @classmethod
    def from_words(cls, top: Sequence[int], bottom: Sequence[int]) -> "Biword":
        if len(top) != len(bottom):
            raise MalformedBiwordError(f"Top and bottom words differ in length: {len(top)} != {len(bottom)}")
        return cls(tuple(zip((int(u) for u in top), (int(v) for v in bottom))))

    @property
    def top(self) -> List[int]:
        return [u for u, _ in self.pairs]

    @property
    def bottom(self) -> List[int]:
        return [v for _, v in self.pairs]

    def is_ordered(self) -> bool:
        return all(a <= b for a, b in zip(self.pairs, self.pairs[1:]))

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class BurgeWord:
    """Distinct bi-letters with u weakly increasing and v strictly
    decreasing within equal u."""
    pairs: Tuple[BiLetter, ...] = ()

    @classmethod
    def from_words(cls, top: Sequence[int], bottom: Sequence[int]) -> "BurgeWord":
        if len(top) != len(bottom):
            raise MalformedBiwordError(f"Top and bottom words differ in length: {len(top)} != {len(bottom)}")
        return cls(tuple(zip((int(u) for u in top), (int(v) for v in bottom))))

    @property
    def top(self) -> List[int]:
        return [u for u, _ in self.pairs]

    @property
    def bottom(self) -> List[int]:
        return [v for _, v in self.pairs]

    def is_ordered(self) -> bool:
        for (u1, v1), (u2, v2) in zip(self.pairs, self.pairs[1:]):
            if u1 > u2 or (u1 == u2 and v1 <= v2):
                return False
        return True

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class RskPair:
    """Insertion tableau ``p`` and recording tableau ``q`` of the same shape."""
    p: Tableau
    q: Tableau


def _check_letters(pairs: Sequence[BiLetter]) -> None:
    for u, v in pairs:
        if u < 1 or v < 1:
            raise MalformedBiwordError(f"Bi-letter ({u};{v}) has a non-positive letter")


def _insert(p_rows: List[List[int]], x: int) -> Cell:
    """Row-insert ``x``, bumping the leftmost entry strictly greater; return the new cell."""
    r = 0
    while True:
        if r == len(p_rows):
            p_rows.append([x])
            return r, 0
        row = p_rows[r]
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return r, k
        row[k], x = x, row[k]
        r += 1


def _record(q_rows: List[List[int]], cell: Cell, u: int) -> None:
    r, _ = cell
    if r == len(q_rows):
        q_rows.append([])
    q_rows[r].append(u)


def _insert_all(pairs: Sequence[BiLetter]) -> RskPair:
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for u, v in pairs:
        _record(q_rows, _insert(p_rows, v), u)
    return RskPair(Tableau(tuple(map(tuple, p_rows))), Tableau(tuple(map(tuple, q_rows))))


def rsk(w: Biword) -> RskPair:
    """Insert the bottom word, recording each new cell with its top letter."""
    _check_letters(w.pairs)
    if not w.is_ordered():
        raise MalformedBiwordError(f"Bi-letters are not in lexicographic order: {list(w.pairs)}")
    return _insert_all(w.pairs)


def rsk_tilde(w: BurgeWord) -> RskPair:
    """RSK on a Burge word; the recording tableau is conjugate-semistandard."""
    _check_letters(w.pairs)
    if not w.is_ordered():
        raise MalformedBiwordError(f"Bi-letters are not in Burge order: {list(w.pairs)}")
    return _insert_all(w.pairs)


def insert_word(word: Sequence[int]) -> RskPair:
    """Insert a plain word; the recording tableau is standard."""
    return rsk(Biword(tuple((k + 1, int(v)) for k, v in enumerate(word))))


def _uninsert(pair: RskPair, lowest: bool) -> List[BiLetter]:
    p_rows = [list(row) for row in pair.p.rows]
    q_rows = [list(row) for row in pair.q.rows]
    if [len(r) for r in p_rows] != [len(r) for r in q_rows]:
        raise InvalidTableauError("P and Q must have the same shape")
    out: List[BiLetter] = []
    while q_rows:
        top = max(max(row) for row in q_rows)
        cells = [(r, c) for r, row in enumerate(q_rows) for c, x in enumerate(row) if x == top]
        # last insertion among equal top letters: rightmost for RSK, lowest for RSK~
        r, c = max(cells) if lowest else max(cells, key=lambda rc: (rc[1], rc[0]))
        if c != len(q_rows[r]) - 1 or (r + 1 < len(q_rows) and len(q_rows[r + 1]) > c):
            raise InvalidTableauError(f"Recording tableau cell {(r, c)} is not an outer corner")
        q_rows[r].pop()
        x = p_rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = p_rows[rr]
            k = bisect_left(row, x) - 1
            row[k], x = x, row[k]
        if not q_rows[r]:
            q_rows.pop()
            p_rows.pop()
        out.append((top, x))
    out.reverse()
    return out


def rsk_inverse(pair: RskPair) -> Biword:
    return Biword(tuple(_uninsert(pair, lowest=False)))


def rsk_tilde_inverse(pair: RskPair) -> BurgeWord:
    return BurgeWord(tuple(_uninsert(pair, lowest=True)))


def row_tuple_to_biword(t: TableauTuple) -> Biword:
    """Top word 1^l1 2^l2 ..., bottom word the reading word of ``t``."""
    if t.kind != "row":
        raise InvalidTableauError("Expected a tuple of row tableaux")
    return Biword(tuple((i + 1, x) for i, word in enumerate(t.words()) for x in word))


def column_tuple_to_burge(t: TableauTuple) -> BurgeWord:
    """Top word 1^l1 2^l2 ..., bottom word the columns read bottom to top."""
    if t.kind != "column":
        raise InvalidTableauError("Expected a tuple of column tableaux")
    return BurgeWord(tuple((i + 1, x) for i, word in enumerate(t.words()) for x in word))


def _segments(pairs: Sequence[BiLetter]) -> List[List[int]]:
    grouped: Dict[int, List[int]] = {u: [v for _, v in group] for u, group in groupby(pairs, key=lambda p: p[0])}
    top = max(grouped, default=0)
    return [grouped.get(u, []) for u in range(1, top + 1)]


def biword_to_row_tuple(w: Biword) -> TableauTuple:
    return TableauTuple.rows_of(_segments(w.pairs))


def burge_to_column_tuple(w: BurgeWord) -> TableauTuple:
    return TableauTuple.columns_of([list(reversed(seg)) for seg in _segments(w.pairs)])


def subtableau(q: Tableau, i: int) -> Tableau:
    """The skew piece of ``q`` holding the entries 2i-1 and 2i.

    Its inner shape is the set of cells holding smaller entries.
    """
    low, high = 2 * i - 1, 2 * i
    cells = q.cells()
    inner_rows = [q.inner.part(r) for r in range(len(q.rows))]
    for (r, _), x in cells.items():
        if x < low:
            inner_rows[r] += 1
    if any(a < b for a, b in zip(inner_rows, inner_rows[1:])):
        raise InvalidTableauError(f"Entries below {low} do not form a partition shape in\n{q}")
    picked = {rc: x for rc, x in cells.items() if low <= x <= high}
    return Tableau.from_cells(picked, Partition(tuple(inner_rows)))


def _pair_members(t: TableauTuple, i: int) -> Tuple[List[int], List[int]]:
    if i < 1 or 2 * i > len(t.members):
        raise InvalidTableauError(f"Tuple of {len(t.members)} members has no pair {i}")
    words = t.words()
    return words[2 * i - 2], words[2 * i - 1]


def sub_biword_rsk(t: TableauTuple, i: int) -> RskPair:
    """RSK of the sub-biword on top letters 2i-1, 2i of a row tuple."""
    first, second = _pair_members(t, i)
    pairs = tuple((2 * i - 1, x) for x in first) + tuple((2 * i, x) for x in second)
    return rsk(Biword(pairs))


def sub_burge_rsk_tilde(t: TableauTuple, i: int) -> RskPair:
    """RSK~ of the sub-Burge word on top letters 2i-1, 2i of a column tuple."""
    first, second = _pair_members(t, i)
    pairs = tuple((2 * i - 1, x) for x in first) + tuple((2 * i, x) for x in second)
    return rsk_tilde(BurgeWord(pairs))
