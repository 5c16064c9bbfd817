import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repzeta.census import DegreeCensus
from repzeta.symmetric import (
    ak_zeta,
    an_degrees,
    build_partition_table,
    conjugate_partition,
    hook_degree,
    partitions,
    power_zeta,
    rbound_check,
    sn_degrees,
)


def test_partition_enumeration_counts():
    # p(n) for n = 1..10
    expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(list(partitions(n))) for n in range(1, 11)] == expected


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=18))
def test_conjugation_involution_and_degree_equality(k):
    for lam in partitions(k):
        conj = conjugate_partition(lam)
        assert conjugate_partition(conj) == lam
        assert hook_degree(conj) == hook_degree(lam)


def test_sn_census_examples():
    assert sn_degrees(4).entries == ((1, 2), (2, 1), (3, 2))
    assert sn_degrees(5).entries == ((1, 2), (4, 2), (5, 2), (6, 1))
    assert sn_degrees(1).entries == ((1, 1),)


def test_an_census_examples():
    assert an_degrees(4).entries == ((1, 3), (3, 1))
    assert an_degrees(5).entries == ((1, 1), (3, 2), (4, 1), (5, 1))
    assert an_degrees(2).entries == ((1, 1),)
    with pytest.raises(ValueError):
        an_degrees(1)


def test_mass_identities_up_to_30():
    for k in range(1, 31):
        assert sn_degrees(k).mass == math.factorial(k)
        if k >= 2:
            assert 2 * an_degrees(k).mass == math.factorial(k)


def test_an_count_identity():
    for k in range(2, 25):
        table = build_partition_table(k)
        selfconj = len(table.self_conjugate)
        pairs = (table.partition_count - selfconj) // 2
        assert an_degrees(k).total_count == pairs + 2 * selfconj


def test_ak_zeta_values_and_preconditions():
    assert ak_zeta(5, 1.0) == pytest.approx(1 + 2 / 3 + 1 / 4 + 1 / 5)
    assert ak_zeta(12, 50.0) == pytest.approx(1.0, abs=1e-9)
    assert ak_zeta(12, 1.0) < ak_zeta(6, 1.0)
    with pytest.raises(ValueError):
        ak_zeta(4, 1.0)
    with pytest.raises(ValueError):
        ak_zeta(6, 0.0)


def test_trend_toward_one():
    values = [ak_zeta(k, 1.0) for k in range(8, 31)]
    assert all(a > b for a, b in zip(values, values[1:]))
    # frozen value: 1 + 1/29 + 1/405 + 1/406 + smaller terms
    assert values[-1] == pytest.approx(1.0402730951, abs=1e-8)


def test_minimal_nontrivial_degree():
    for k in range(9, 31):
        census = an_degrees(k)
        nontrivial = [d for d, _ in census.entries if d > 1]
        assert min(nontrivial) == k - 1


def test_rbound_check():
    for k in (5, 10, 20):
        census = an_degrees(k)
        for s in (0.5, 0.9):
            assert rbound_check(census, s)
            # recompute both sides independently at every census degree
            c = sum(m * d ** (-s) for d, m in census.entries) - 1.0
            running = 0
            for deg, mult in census.entries:
                running += mult
                assert running <= c * deg ** s + 1.0 + 1e-9
    assert rbound_check(DegreeCensus(entries=((1, 1),), bound=1), 0.5)
    with pytest.raises(ValueError):
        rbound_check(an_degrees(5), 1.0)


def test_power_zeta():
    z = ak_zeta(9, 1.0)
    assert power_zeta(z, 3) == pytest.approx(z ** 3)
    assert power_zeta(z, 0) == 1.0
    with pytest.raises(ValueError):
        power_zeta(z, -1)
