#!/usr/bin/env python3
"""
Tests for RSK, RSK~ and recording-tableau dissection.
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import pytest

from plethyx_core.interfaces import MalformedBiwordError
from plethyx_core.jdt import product_all, rectify
from plethyx_core.partitions import (
    Partition,
    Tableau,
    TableauTuple,
    enumerate_column_tuples,
    enumerate_row_tuples,
    is_conjugate_semistandard,
    is_semistandard,
    transpose,
)
from plethyx_core.rsk import (
    Biword,
    BurgeWord,
    biword_to_row_tuple,
    burge_to_column_tuple,
    column_tuple_to_burge,
    insert_word,
    row_tuple_to_biword,
    rsk,
    rsk_inverse,
    rsk_tilde,
    rsk_tilde_inverse,
    sub_biword_rsk,
    sub_burge_rsk_tilde,
    subtableau,
)

ROW_TUPLE = TableauTuple.rows_of([[1, 2, 3, 4], [1, 2, 3, 3], [1, 1, 2], [1, 2, 3]])
COLUMN_TUPLE = TableauTuple.columns_of([[1, 2, 3, 5, 7], [1, 3, 4, 6, 8], [2, 3, 5], [1, 2, 4]])


def test_single_letter():
    pair = rsk(Biword(((1, 5),)))
    assert pair.p == Tableau.from_rows([[5]])
    assert pair.q == Tableau.from_rows([[1]])
    assert rsk(Biword()).p == Tableau()


def test_insertion_bumps_leftmost_strictly_greater():
    assert insert_word([1, 2, 2, 1]).p == Tableau.from_rows([[1, 1, 2], [2]])
    assert insert_word([3, 2, 1]).p == Tableau.from_rows([[1], [2], [3]])


def test_rsk_worked_example():
    w = Biword.from_words([1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4],
                          [1, 2, 3, 4, 1, 2, 3, 3, 1, 1, 2, 1, 2, 3])
    assert row_tuple_to_biword(ROW_TUPLE) == w
    pair = rsk(w)
    assert pair.p.rows == ((1, 1, 1, 1, 1, 2, 3), (2, 2, 2, 3), (3, 3), (4,))
    assert pair.q.rows == ((1, 1, 1, 1, 2, 4, 4), (2, 2, 2, 3), (3, 3), (4,))
    assert rsk_inverse(pair) == w
    assert biword_to_row_tuple(rsk_inverse(pair)) == ROW_TUPLE


def test_burge_worked_example():
    w = column_tuple_to_burge(COLUMN_TUPLE)
    assert w == BurgeWord.from_words([1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4],
                                     [7, 5, 3, 2, 1, 8, 6, 4, 3, 1, 5, 3, 2, 4, 2, 1])
    assert w.is_ordered()
    pair = rsk_tilde(w)
    assert pair.p.rows == ((1, 1, 1, 2), (2, 2, 3, 4), (3, 3, 5), (4, 6), (5, 8), (7,))
    assert pair.q.rows == ((1, 2, 3, 4), (1, 2, 3, 4), (1, 2, 3), (1, 2), (1, 2), (4,))
    assert is_conjugate_semistandard(pair.q)
    assert rsk_tilde_inverse(pair) == w
    assert burge_to_column_tuple(w) == COLUMN_TUPLE


def test_rsk_rejects_unordered_biword():
    with pytest.raises(MalformedBiwordError):
        rsk(Biword(((2, 1), (1, 1))))
    with pytest.raises(MalformedBiwordError):
        rsk(Biword(((1, 0),)))
    with pytest.raises(MalformedBiwordError):
        Biword.from_words([1, 2], [1])


def test_rsk_tilde_rejects_repeated_letters():
    with pytest.raises(MalformedBiwordError):
        rsk_tilde(BurgeWord(((1, 1), (1, 1))))
    with pytest.raises(MalformedBiwordError):
        rsk_tilde(BurgeWord(((1, 1), (1, 2))))


def test_rsk_is_a_bijection_on_small_tuples():
    seen = set()
    for t in enumerate_row_tuples(Partition.of(2, 2, 1), 3):
        pair = rsk(row_tuple_to_biword(t))
        assert is_semistandard(pair.p) and is_semistandard(pair.q)
        assert biword_to_row_tuple(rsk_inverse(pair)) == t
        seen.add((pair.p, pair.q))
    assert len(seen) == 6 * 6 * 3


def test_rsk_tilde_is_a_bijection_on_small_tuples():
    seen = set()
    for t in enumerate_column_tuples(Partition.of(2, 2, 1), 4):
        pair = rsk_tilde(column_tuple_to_burge(t))
        assert is_semistandard(pair.p) and is_conjugate_semistandard(pair.q)
        assert burge_to_column_tuple(rsk_tilde_inverse(pair)) == t
        seen.add((pair.p, pair.q))
    assert len(seen) == 6 * 6 * 4


def test_subtableau_keeps_skew_position():
    q = Tableau.from_rows([[1, 1, 2], [2, 3], [4]])
    first = subtableau(q, 1)
    assert first == Tableau.from_rows([[1, 1, 2], [2]])
    second = subtableau(q, 2)
    assert second.inner == Partition.of(3, 1)
    assert second.rows == ((), (3,), (4,))
    assert rectify(second) == Tableau.from_rows([[3], [4]])


def test_recording_pieces_match_sub_biwords():
    for t in enumerate_row_tuples(Partition.of(2, 2, 1, 1), 3):
        q = rsk(row_tuple_to_biword(t)).q
        for i in (1, 2):
            assert sub_biword_rsk(t, i).q == rectify(subtableau(q, i))


def test_recording_pieces_match_sub_burge_words():
    for t in enumerate_column_tuples(Partition.of(2, 2, 1, 1), 4):
        q = rsk_tilde(column_tuple_to_burge(t)).q
        for i in (1, 2):
            expected = transpose(rectify(transpose(subtableau(q, i))))
            assert sub_burge_rsk_tilde(t, i).q == expected


@pytest.mark.parametrize("profile", [(2, 1), (2, 2, 1, 1), (3, 1, 1)])
def test_insertion_tableau_is_the_product_of_the_rows(profile):
    """P of a row tuple's biword equals the product of its members."""
    for t in enumerate_row_tuples(Partition(profile), 3):
        assert rsk(row_tuple_to_biword(t)).p == product_all(t.members)
