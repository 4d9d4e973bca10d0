#!/usr/bin/env python3
"""
Tests for partitions, tableaux, tuples and Kostka numbers.
"""

import sys
from itertools import permutations
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import pytest

from plethyx_core.interfaces import InvalidPartitionError, InvalidTableauError
from plethyx_core.partitions import (
    Composition,
    Partition,
    SkewShape,
    Tableau,
    TableauTuple,
    conjugate,
    content,
    count_standard,
    double,
    enumerate_column_tuples,
    enumerate_row_tuples,
    enumerate_ssyt,
    horizontal_strip_extensions,
    is_conjugate_semistandard,
    is_semistandard,
    kostka,
    partitions_of,
    reading_word,
    transpose,
    vertical_strip_extensions,
)

EXAMPLE_SKEW = Tableau.from_rows([[1, 1, 2, 2, 3, 4], [1, 2, 2, 3, 3], [2, 3, 3, 3]], inner=[3, 2])


def test_partition_canonical_form():
    assert Partition((2, 1, 0, 0)) == Partition.of(2, 1)
    assert str(Partition.of(3, 1)) == "3,1"
    assert Partition().size == 0
    with pytest.raises(InvalidPartitionError):
        Partition.of(1, 2)
    with pytest.raises(InvalidPartitionError):
        Partition.of(2, -1)


@pytest.mark.parametrize("parts, expected", [
    ((3, 1), (2, 1, 1)),
    ((), ()),
    ((9, 7, 4), (3, 3, 3, 3, 2, 2, 2, 1, 1)),
])
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)) == Partition(expected)


def test_conjugate_is_involution():
    for n in range(13):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_double():
    assert double(Partition.of(2, 1)) == Partition.of(2, 2, 1, 1)
    assert double(Partition.of(4, 3)) == Partition.of(4, 4, 3, 3)
    assert double(Partition()) == Partition()
    lam = Partition.of(3, 2, 2)
    assert double(lam).size == 2 * lam.size
    # every column of the doubled diagram is twice as tall
    assert conjugate(double(lam)) == Partition(tuple(2 * x for x in conjugate(lam)))


def test_composition_ignores_trailing_zeros():
    assert Composition.of(4, 5, 2, 0, 0) == Composition.of(4, 5, 2)
    assert Composition.of(1, 0, 2).count(2) == 0
    assert Composition.of(1, 2) + Composition.of(0, 1, 3) == Composition.of(1, 3, 3)


def test_content_of_skew_example():
    assert EXAMPLE_SKEW.outer == Partition.of(9, 7, 4)
    assert content(EXAMPLE_SKEW) == Composition.of(3, 5, 6, 1)
    assert content(Tableau()) == Composition()
    assert is_semistandard(EXAMPLE_SKEW)


def test_column_tuple_reading_word_and_content():
    t = TableauTuple.columns_of([[1, 3, 4, 5], [2, 4, 7, 8], [1, 2, 3], [1, 3, 7]])
    assert "".join(map(str, reading_word(t))) == "54318742321731"
    assert content(t) == Composition.of(3, 2, 3, 2, 1, 0, 2, 1)
    assert t.profile == Partition.of(4, 4, 3, 3)


def test_row_reading_word():
    assert reading_word(Tableau.from_rows([[1, 2, 3]])) == [1, 2, 3]
    assert reading_word(Tableau.from_rows([[1, 1, 2], [2, 3]])) == [2, 3, 1, 1, 2]


def test_tableau_rejects_non_skew_rows():
    with pytest.raises(InvalidTableauError):
        Tableau.from_rows([[1], [2, 3]])
    with pytest.raises(InvalidTableauError):
        Tableau.from_rows([[0, 1]])


def test_tuple_members_must_match_kind():
    with pytest.raises(InvalidTableauError):
        TableauTuple((Tableau.from_rows([[1], [2]]),), "row")


def test_conjugate_semistandard():
    q = Tableau.from_rows([[1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3], [1, 2], [1, 2], [4]])
    assert is_conjugate_semistandard(q)
    assert is_conjugate_semistandard(Tableau.from_rows([[1, 2], [3]]))
    assert not is_conjugate_semistandard(Tableau.from_rows([[1, 1]]))
    assert transpose(transpose(q)) == q


def test_enumerate_ssyt_worked_example():
    found = enumerate_ssyt(Partition.of(3, 2, 1), Composition.of(2, 2, 1, 1))
    assert [t.rows for t in found] == [
        ((1, 1, 2), (2, 3), (4,)),
        ((1, 1, 2), (2, 4), (3,)),
        ((1, 1, 3), (2, 2), (4,)),
        ((1, 1, 4), (2, 2), (3,)),
    ]
    assert enumerate_ssyt(Partition.of(2), Composition.of(2)) == [Tableau.from_rows([[1, 1]])]


def _brute_force_count(shape, weight):
    cells = shape.cells()
    letters = [i + 1 for i, c in enumerate(weight.counts) for _ in range(c)]
    seen = set()
    for perm in set(permutations(letters)):
        t = Tableau.from_cells(dict(zip(cells, perm)), shape.inner)
        if is_semistandard(t):
            seen.add(t)
    return seen


def test_enumerate_ssyt_matches_brute_force():
    shape = SkewShape(Partition.of(4, 2))
    weight = Composition.of(2, 2, 1, 1)
    found = enumerate_ssyt(shape, weight)
    assert set(found) == _brute_force_count(shape, weight)
    assert len(found) == len(set(found))
    assert all(is_semistandard(t) for t in found)
    assert found == enumerate_ssyt(shape, weight)


def test_enumerate_skew_ssyt():
    shape = SkewShape(Partition.of(3, 2), Partition.of(1))
    weight = Composition.of(2, 1, 1)
    found = enumerate_ssyt(shape, weight)
    assert set(found) == _brute_force_count(shape, weight)
    assert kostka(shape, weight) == len(found)


def test_kostka_values():
    assert kostka(Partition.of(3, 2, 1), Composition.of(2, 2, 1, 1)) == 4
    assert kostka(Partition.of(2, 1), Composition.of(1, 1, 1)) == 2
    for nu in partitions_of(6):
        assert kostka(nu, Composition(nu.parts)) == 1
    assert kostka(Partition.of(2), Composition.of(1, 1, 1)) == 0


def test_kostka_symmetric_in_content():
    for n in range(1, 9):
        for nu in partitions_of(n):
            for mu in partitions_of(n):
                if len(mu) < 2:
                    continue
                swapped = list(mu.parts)
                swapped[0], swapped[1] = swapped[1], swapped[0]
                assert kostka(nu, Composition(mu.parts)) == kostka(nu, Composition(tuple(swapped)))


def test_count_standard():
    assert count_standard(Partition.of(3, 2, 1)) == 16
    assert count_standard(Partition.of(2, 2)) == 2


def test_partitions_of_order():
    assert partitions_of(4) == [Partition.of(4), Partition.of(3, 1), Partition.of(2, 2),
                                Partition.of(2, 1, 1), Partition.of(1, 1, 1, 1)]
    assert partitions_of(0) == [Partition()]
    assert len(partitions_of(10)) == 42


def test_strip_extensions():
    assert horizontal_strip_extensions(Partition.of(1), 2) == [Partition.of(3), Partition.of(2, 1)]
    assert vertical_strip_extensions(Partition.of(1), 2) == [Partition.of(2, 1), Partition.of(1, 1, 1)]


def test_tuple_enumerators_count():
    rows = list(enumerate_row_tuples(Partition.of(2, 1), 3))
    assert len(rows) == 6 * 3
    columns = list(enumerate_column_tuples(Partition.of(2, 1), 3))
    assert len(columns) == 3 * 3
    assert all(t.kind == "column" for t in columns)
