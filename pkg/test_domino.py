#!/usr/bin/env python3
"""
Tests for domino tableaux, cospin and the Yamanouchi families.
"""

import sys
from itertools import combinations, product
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import pytest

from plethyx_core.domino import (
    Domino,
    DominoTableau,
    DominoWord,
    cospin,
    domino_families,
    domino_reading_word,
    enumerate_domino_tableaux,
    family_shape,
    is_yamanouchi,
    littlewood_via_domino,
    max_vertical,
    render_domino,
)
from plethyx_core.formats import domino_from_json, domino_to_json
from plethyx_core.interfaces import InvalidTableauError
from plethyx_core.partitions import Partition
from plethyx_core.plethysm_sign import littlewood_table

SQUARE = Partition.of(2, 2)
STACKED = DominoTableau(SQUARE, (Domino(((0, 0), (0, 1)), 1), Domino(((1, 0), (1, 1)), 2)))
SIDE_BY_SIDE = DominoTableau(SQUARE, (Domino(((0, 0), (1, 0)), 1), Domino(((0, 1), (1, 1)), 1)))


def test_orientation_and_counts():
    assert STACKED.vertical_count == 0
    assert STACKED.horizontal_count == 2
    assert SIDE_BY_SIDE.vertical_count == 2
    assert SIDE_BY_SIDE.dominoes[0].orientation == "vertical"


def test_tiling_is_validated():
    with pytest.raises(InvalidTableauError):
        DominoTableau(SQUARE, (Domino(((0, 0), (0, 1)), 1),))


def test_semistandard_filling():
    assert STACKED.is_semistandard()
    assert SIDE_BY_SIDE.is_semistandard()
    bad = DominoTableau(SQUARE, (Domino(((0, 0), (0, 1)), 2), Domino(((1, 0), (1, 1)), 2)))
    assert not bad.is_semistandard()


def test_enumerate_square():
    found = enumerate_domino_tableaux(SQUARE, max_entry=2)
    assert len(found) == 4
    assert all(d.is_semistandard() for d in found)
    yamanouchi = enumerate_domino_tableaux(SQUARE, max_entry=2, yamanouchi_only=True)
    assert len(yamanouchi) == 2


def test_reading_word():
    assert str(domino_reading_word(STACKED)) == "21"
    assert domino_reading_word(SIDE_BY_SIDE) == DominoWord((1, 1))


@pytest.mark.parametrize("letters, expected", [
    ((1, 1, 2, 1), True),
    ((2, 1), True),
    ((2,), False),
    ((1, 2), False),
    ((), True),
])
def test_is_yamanouchi(letters, expected):
    assert is_yamanouchi(DominoWord(letters)) is expected


def test_max_vertical():
    assert max_vertical(Partition.of(4, 4)) == 4
    assert max_vertical(Partition.of(2, 2, 2, 2)) == 4
    with pytest.raises(InvalidTableauError):
        max_vertical(Partition.of(3))


def test_cospin_of_square():
    assert cospin(SIDE_BY_SIDE) == 0
    assert cospin(STACKED) == 1


@pytest.mark.parametrize("basis", ["h", "e"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_families_are_the_yamanouchi_tableaux(n, basis):
    family = domino_families(n, basis)
    assert [cospin(d) for d in family] == list(range(n + 1))
    assert all(d.is_semistandard() and is_yamanouchi(domino_reading_word(d)) for d in family)
    found = enumerate_domino_tableaux(family_shape(n, basis), yamanouchi_only=True)
    key = lambda d: frozenset((frozenset(dom.cells), dom.entry) for dom in d.dominoes)
    assert {key(d) for d in found} == {key(d) for d in family}


def test_family_weights():
    weights = [Partition(d.weight().counts) for d in domino_families(2, "h")]
    assert weights == [Partition.of(4), Partition.of(3, 1), Partition.of(2, 2)]
    weights = [Partition(d.weight().counts) for d in domino_families(2, "e")]
    assert weights == [Partition.of(2, 2), Partition.of(2, 1, 1), Partition.of(1, 1, 1, 1)]


@pytest.mark.parametrize("basis", ["h", "e"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cospin_parity_recovers_closed_form(n, basis):
    assert littlewood_via_domino(n, basis).entries == littlewood_table(n, basis).entries


def test_render_and_json():
    drawing = render_domino(STACKED)
    assert drawing.splitlines()[0] == "+---+---+"
    assert "| 1   1 |" in drawing
    data = domino_to_json(STACKED)
    assert data["word"] == [2, 1]
    assert domino_from_json(data) == STACKED


def test_unknown_family_basis():
    with pytest.raises(ValueError):
        family_shape(2, "p")


def brute_force_domino_tableaux(shape, max_entry):
    """Every set of adjacent pairs covering ``shape`` once, with every semistandard labelling."""
    cells = shape.cells()
    inside = set(cells)
    pairs = [((r, c), other) for r, c in cells for other in ((r, c + 1), (r + 1, c)) if other in inside]
    found = set()
    for tiling in combinations(pairs, len(cells) // 2):
        if len({cell for pair in tiling for cell in pair}) != len(cells):
            continue
        for entries in product(range(1, max_entry + 1), repeat=len(tiling)):
            d = DominoTableau(shape, tuple(Domino(pair, x) for pair, x in zip(tiling, entries)))
            if d.is_semistandard():
                found.add(d)
    return found


def domino_key(d):
    return frozenset((frozenset(dom.cells), dom.entry) for dom in d.dominoes)


@pytest.mark.parametrize("shape", [(2, 2), (3, 3), (4, 2), (2, 2, 2), (3, 1)])
def test_enumeration_matches_tilings_times_fillings(shape):
    shape = Partition(shape)
    max_entry = max(1, shape.size // 2)
    expected = brute_force_domino_tableaux(shape, max_entry)
    found = enumerate_domino_tableaux(shape, max_entry=max_entry)
    assert len(found) == len(expected)
    assert {domino_key(d) for d in found} == {domino_key(d) for d in expected}
    yamanouchi = enumerate_domino_tableaux(shape, max_entry=max_entry, yamanouchi_only=True)
    expected_yamanouchi = {domino_key(d) for d in expected if is_yamanouchi(domino_reading_word(d))}
    assert {domino_key(d) for d in yamanouchi} == expected_yamanouchi
