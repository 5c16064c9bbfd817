from itertools import product

import pytest

from repzeta.census import DegreeCensus
from repzeta.errors import BudgetExceededError
from repzeta.rootsys import build_root_datum, weyl_dimension
from repzeta.witten import (
    abscissa_estimate,
    dyadic_block_sum,
    enumerate_dimensions,
    witten_partial_sum,
)


def naive_census(datum, bound, cap):
    """Independent oracle: scan the full cube a_i < cap.

    Valid because dim >= 1 + max(a_i) in every type (each simple coroot
    contributes a factor a_i + 1 and all factors are >= 1), so cap = bound
    suffices; the oracle asserts that inequality as it goes.
    """
    counts = {}
    for coeffs in product(range(cap), repeat=datum.rank):
        d = weyl_dimension(datum, coeffs)
        assert d >= 1 + max(coeffs)
        if d <= bound:
            counts[d] = counts.get(d, 0) + 1
    return DegreeCensus.from_pairs(counts.items(), bound)


def test_bound_validation():
    a1 = build_root_datum("A", 1)
    with pytest.raises(ValueError):
        enumerate_dimensions(a1, 0)


def test_trivial_census():
    for series, rank in [("A", 1), ("A", 2), ("C", 3)]:
        census = enumerate_dimensions(build_root_datum(series, rank), 1)
        assert census.entries == ((1, 1),)


def test_a1_census_is_initial_segment():
    census = enumerate_dimensions(build_root_datum("A", 1), 5000)
    assert census.entries == tuple((n, 1) for n in range(1, 5001))


def test_a2_small_census():
    census = enumerate_dimensions(build_root_datum("A", 2), 3)
    assert census.entries == ((1, 1), (3, 2))


@pytest.mark.parametrize(
    "series,rank,bound",
    [("A", 1, 10_000), ("A", 2, 500), ("B", 2, 500), ("G", 2, 500), ("A", 3, 60), ("C", 3, 60)],
)
def test_enumeration_matches_naive_cube_oracle(series, rank, bound):
    datum = build_root_datum(series, rank)
    assert enumerate_dimensions(datum, bound).entries == naive_census(datum, bound, bound).entries


def test_partial_sum_against_direct_oracles():
    a1 = build_root_datum("A", 1)
    census = enumerate_dimensions(a1, 1000)
    harmonic = sum(1.0 / n for n in range(1000, 0, -1))
    assert witten_partial_sum(census, 1.0) == pytest.approx(harmonic, abs=1e-12)
    census4 = enumerate_dimensions(a1, 10_000)
    basel = sum(1.0 / (n * n) for n in range(10_000, 0, -1))
    assert witten_partial_sum(census4, 2.0) == pytest.approx(basel, abs=1e-13)
    assert witten_partial_sum(DegreeCensus(entries=((1, 1),), bound=1), 7.3) == 1.0


def test_abscissa_needs_enough_degrees():
    census = DegreeCensus(entries=((1, 1), (2, 1), (3, 1)), bound=3)
    with pytest.raises(ValueError, match="8"):
        abscissa_estimate(census)


def test_abscissa_a1_exact_line():
    census = enumerate_dimensions(build_root_datum("A", 1), 10_000)
    est = abscissa_estimate(census)
    assert est.slope == pytest.approx(1.0, abs=1e-9)
    assert est.standard_error == pytest.approx(0.0, abs=1e-9)
    assert len(est.sample_points) == 16


def test_dyadic_blocks_against_direct_sums():
    a1 = build_root_datum("A", 1)
    # block j: 2^j < a <= 2^(j+1), dim = a + 1
    for j, s in [(5, 1.0), (8, 2.0), (0, 1.0)]:
        direct = sum((a + 1.0) ** (-s) for a in range(2 ** j + 1, 2 ** (j + 1) + 1))
        assert dyadic_block_sum(a1, s, j) == pytest.approx(direct, rel=1e-12)
    assert dyadic_block_sum(a1, 1.0, 0) == pytest.approx(1.0 / 3.0)
    assert dyadic_block_sum(a1, 2.0, 8) < 0.004


def test_dyadic_block_budget_and_range():
    a2 = build_root_datum("A", 2)
    with pytest.raises(BudgetExceededError):
        dyadic_block_sum(a2, 1.0, 12, budget=1000)
    with pytest.raises(ValueError):
        dyadic_block_sum(a2, 1.0, 13)


def test_divergence_blocks_at_abscissa():
    a1 = build_root_datum("A", 1)
    values = [dyadic_block_sum(a1, 1.0, j) for j in range(11)]
    assert all(v >= 0.3 for v in values)


def test_tail_fraction_above_abscissa_shrinks():
    """At s = r/kappa + 0.25 the upper-half tail is light and shrinks with N."""
    for series, rank in [("A", 1), ("A", 2)]:
        datum = build_root_datum(series, rank)
        s = datum.rank / datum.kappa + 0.25
        fractions = []
        for bound in (1000, 10_000, 100_000):
            census = enumerate_dimensions(datum, bound)
            total = witten_partial_sum(census, s)
            tail = sum(m * float(d) ** (-s) for d, m in census.entries if d > bound // 2)
            fractions.append(tail / total)
        assert fractions[-1] < 0.15
        assert fractions[0] > fractions[1] > fractions[2]


def test_census_cumulative_counts():
    census = enumerate_dimensions(build_root_datum("A", 2), 100)
    cum = census.cumulative()
    assert cum[0] == (1, 1)
    assert cum[-1][1] == census.total_count
    assert census.count_upto(3) == 3  # trivial + two copies of degree 3
