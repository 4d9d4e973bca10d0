#!/usr/bin/env python3
"""
Tests for the power-sum symmetric function engine.
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import pytest

from plethyx_core.interfaces import FormatError, OracleError
from plethyx_core.partitions import Partition, partitions_of
from plethyx_core.symfunc import (
    SymFunc,
    from_records,
    from_terms,
    generators,
    monomial_expand,
    multiply,
    plethysm,
    power_decomposition,
    schur_expand,
    split_square,
    to_records,
    verify_symantisym,
)

P = Partition.of
HALF = Fraction(1, 2)


def test_complete_and_elementary_in_power_sums():
    assert generators("h", P(2)).p_terms == {P(1, 1): HALF, P(2): HALF}
    assert generators("e", P(2)).p_terms == {P(1, 1): HALF, P(2): -HALF}
    assert generators("h", P(1)) == generators("p", P(1))
    assert generators("h", P()) == SymFunc.one()


def test_monomial_generator():
    assert generators("m", P(1, 1)) == generators("e", P(2))
    assert generators("m", P(2)) == generators("p", P(2))


def test_schur_generators_expand_to_themselves():
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert schur_expand(generators("s", lam)) == {lam: 1}


def test_schur_of_power_sum():
    assert schur_expand(generators("p", P(2))) == {P(2): 1, P(1, 1): -1}
    assert schur_expand(generators("p", P(3))) == {P(3): 1, P(2, 1): -1, P(1, 1, 1): 1}


def test_monomial_expand_counts_row_tuples():
    assert monomial_expand(generators("h", P(2, 1))) == {P(3): 1, P(2, 1): 2, P(1, 1, 1): 3}


def test_pieri_rule():
    f = generators("s", P(1)) * generators("h", P(2))
    assert schur_expand(f) == {P(3): 1, P(2, 1): 1}


def test_arithmetic():
    a = generators("p", P(1))
    b = generators("p", P(2))
    assert (a + b) - b == a
    assert (a * 3) / 3 == a
    assert 2 * a == a + a
    assert a ** 2 == generators("p", P(1, 1))
    assert (a - a).is_zero()
    assert -a + a == SymFunc.zero()
    assert (a + SymFunc.one()).degrees() == [0, 1]
    assert (a * b).degree == 3
    assert multiply(a, b) == a * b


def test_homogeneous_part():
    f = generators("h", P(2)) + generators("p", P(1))
    assert f.homogeneous(1) == generators("p", P(1))
    assert f.homogeneous(2) == generators("h", P(2))


def test_to_basis():
    f = generators("h", P(2))
    assert f.to_basis("s") == {P(2): 1}
    assert f.to_basis("m") == {P(2): 1, P(1, 1): 1}
    assert f.to_basis("p") == {P(1, 1): HALF, P(2): HALF}


def test_unknown_basis():
    with pytest.raises(OracleError):
        generators("q", P(1))


def test_split_square_of_h2():
    sym, antisym = split_square(generators("h", P(2)))
    assert schur_expand(sym) == {P(4): 1, P(2, 2): 1}
    assert schur_expand(antisym) == {P(3, 1): 1}
    assert sym + antisym == generators("h", P(2)) ** 2


def test_split_square_of_e2():
    sym, antisym = split_square(generators("e", P(2)))
    assert schur_expand(sym) == {P(2, 2): 1, P(1, 1, 1, 1): 1}
    assert schur_expand(antisym) == {P(2, 1, 1): 1}


def test_plethysm_matches_split_square():
    g = generators("h", P(2, 1))
    sym, antisym = split_square(g)
    assert plethysm(generators("s", P(2)), g) == sym
    assert plethysm(generators("s", P(1, 1)), g) == antisym
    assert plethysm(generators("p", P(1)), g) == g


@pytest.mark.parametrize("n", [1, 2, 3])
def test_plethysm_of_complete_alternates(n):
    g = generators("h", P(n))
    s2 = schur_expand(plethysm(generators("h", P(2)), g))
    s11 = schur_expand(plethysm(generators("e", P(2)), g))
    assert s2 == {P(2 * n - j, j): 1 for j in range(0, n + 1, 2)}
    assert s11 == {P(2 * n - j, j): 1 for j in range(1, n + 1, 2)}


def test_product_rule_for_s2_and_s11():
    h1, h2, e2 = generators("h", P(1)), generators("h", P(2)), generators("e", P(2))
    assert verify_symantisym([h1, h1])
    assert verify_symantisym([h2, e2])
    assert verify_symantisym([h1, h2, e2])


def test_power_decomposition_degree_three():
    pieces = power_decomposition(generators("h", P(1)), 3)
    assert set(pieces) == {P(3), P(2, 1), P(1, 1, 1)}
    assert schur_expand(pieces[P(2, 1)]) == {P(2, 1): 1}


def test_records_round_trip():
    f = from_terms("s", {P(2, 1): 3, P(3): Fraction(-1, 2)})
    records = to_records(f, "s")
    assert records[0] == {"basis": "s", "partition": [3], "numerator": -1, "denominator": 2}
    assert from_records(records) == f


def test_from_records_rejects_missing_fields():
    with pytest.raises(FormatError):
        from_records([{"basis": "s", "partition": [1]}])
