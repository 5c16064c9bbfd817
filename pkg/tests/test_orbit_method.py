import random
from itertools import product

import pytest

from repzeta.errors import BudgetExceededError
from repzeta.linalg import valuation
from repzeta.orbit_method import (
    census_vs_bound,
    centralizer_index_oracle,
    chain_count_bound,
    kernel_cokernel_size,
    make_orbit_datum,
    orbit_dimension,
    psi_chain,
)


def random_datum(rng, d=None, p=None, k=None):
    d = d or rng.choice((2, 3))
    p = p or rng.choice((3, 5, 7))
    k = k or rng.randint(1, 3)
    mod = p ** (k + 2)
    eigs = [rng.randrange(mod) for _ in range(d - 1)]
    eigs.append((-sum(eigs)) % mod)
    return make_orbit_datum(d, p, k, eigs)


def test_psi_chain_examples():
    # unit difference: empty until the last stage
    assert psi_chain((1, -1), 2, 3, 2) == ((0, 0), (1, 1))
    # i = k always captures everything
    assert psi_chain((1, 2), 2, 3, 1) == ((1, 1),)
    # (0, 5, -5) over p=5: every difference has valuation 1, so all roots
    # enter at stage i = 2 (val >= k - i with k = 3)
    assert psi_chain((0, 5, -5), 3, 5, 3) == ((0, 0), (2, 3), (2, 3))


def test_psi_chain_validation():
    with pytest.raises(ValueError):
        psi_chain((1, 1), 2, 3, 1)  # nonzero trace
    with pytest.raises(ValueError):
        psi_chain((1, -1, 0), 2, 3, 1)  # wrong length


def test_psi_chain_monotone_and_entry_stage():
    rng = random.Random(5)
    for _ in range(60):
        datum = random_datum(rng)
        kappas = [kappa for _, kappa in datum.chain]
        assert kappas == sorted(kappas)
        assert datum.chain[-1] == (datum.d - 1, datum.d * (datum.d - 1) // 2)
        # every root enters exactly at stage max(1, k - val(difference))
        for s in range(datum.d):
            for t in range(s + 1, datum.d):
                val = valuation(datum.eigenvalues[s] - datum.eigenvalues[t], datum.p, datum.k)
                entry = max(1, datum.k - val)
                present = [kappa for _, kappa in datum.chain]
                for i in range(1, datum.k + 1):
                    in_stage = val >= datum.k - i
                    assert in_stage == (i >= entry)


def test_orbit_dimension_examples():
    assert orbit_dimension(make_orbit_datum(2, 3, 1, (1, -1))) == 1
    datum = make_orbit_datum(2, 3, 2, (1, -1))
    assert orbit_dimension(datum) == 3
    assert centralizer_index_oracle(datum) == 9
    # val_5(2 - (-3)) = 1, so the deficiency sum is 2, not 3
    datum2 = make_orbit_datum(3, 5, 2, (1, 2, -3))
    assert orbit_dimension(datum2) == 25
    assert centralizer_index_oracle(datum2) == 5 ** 4


def test_a1_closed_form():
    """For d = 2 the exponent is max(0, k - 1 - val(difference))."""
    rng = random.Random(11)
    for _ in range(80):
        p = rng.choice((3, 5))
        k = rng.randint(1, 4)
        mod = p ** (k + 2)
        a = rng.randrange(mod)
        datum = make_orbit_datum(2, p, k, (a, (-a) % mod))
        val = valuation(2 * a, p, k)
        assert orbit_dimension(datum) == p ** max(0, k - 1 - val)


def test_dimension_formula_oracle_equality_50_random():
    rng = random.Random(6)
    for _ in range(50):
        datum = random_datum(rng)
        dim = orbit_dimension(datum)
        index = centralizer_index_oracle(datum)
        assert dim * dim == index
        # equivalent statement: dim^2 * |ker| = p^((d^2-1) k)
        full = datum.p ** ((datum.d ** 2 - 1) * datum.k)
        assert dim * dim * (full // index) == full


def test_oracle_budget():
    datum = make_orbit_datum(5, 3, 1, (1, 2, 3, 4, (-10) % 27))
    with pytest.raises(BudgetExceededError):
        centralizer_index_oracle(datum)


def test_chain_count_bound_examples():
    assert chain_count_bound(((0, 0), (1, 1)), 2, 3) == 3
    assert chain_count_bound(((1, 1), (1, 1)), 2, 5) == 1
    assert chain_count_bound(((1, 1), (2, 3)), 3, 3) == 3


def test_kernel_cokernel_examples():
    p = 5
    assert kernel_cokernel_size([[p, 0], [0, p * p]], p, 3) == (p ** 3, p ** 3)
    assert kernel_cokernel_size([[1, 0], [0, 1]], p, 4) == (1, 1)
    with pytest.raises(ValueError):
        kernel_cokernel_size([[1, 1], [1, 1]], p, 2)


def test_kernel_cokernel_random_and_brute():
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 6)
        p = rng.choice((2, 3, 5))
        r = rng.randint(1, 5)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        try:
            ker, cok = kernel_cokernel_size(mat, p, r)
        except ValueError:
            continue
        assert ker == cok
        checked += 1
        # brute-force the kernel count when the ring is small enough
        mod = p ** r
        if mod ** n <= 700:
            brute = sum(
                1
                for vec in product(range(mod), repeat=n)
                if all(sum(a * v for a, v in zip(row, vec)) % mod == 0 for row in mat)
            )
            assert brute == ker


def test_census_examples():
    rep = census_vs_bound(2, 3, 2)
    assert rep.vector_count == 9
    assert rep.all_within
    summaries = {g.stages[1:] for g in rep.groups}
    assert ((0, 0), (1, 1)) in summaries and ((1, 1), (1, 1)) in summaries
    rep1 = census_vs_bound(2, 3, 1)
    assert rep1.all_within
    # the nonzero vectors share the chain with stage-0 empty; bound q = 3
    nonzero = next(g for g in rep1.groups if g.stages[0] == (0, 0))
    assert nonzero.size == 2 and nonzero.bound == 3
    rep3 = census_vs_bound(3, 3, 1)
    assert rep3.all_within
    # p | d: the all-congruent group is trace-degenerate and needs the exact bound
    degen = [g for g in rep3.groups if g.trace_degenerate]
    assert degen and all(g.size <= g.bound for g in degen)
    assert any(g.size > g.bound_rank_only for g in degen)


def test_census_budget_and_range():
    with pytest.raises(ValueError):
        census_vs_bound(4, 3, 1)
    with pytest.raises(BudgetExceededError):
        census_vs_bound(3, 5, 3, budget=100)


def test_census_grid_all_within():
    grid = [
        (2, 3, 1), (2, 3, 2), (2, 3, 3), (2, 5, 2), (2, 7, 2),
        (3, 3, 1), (3, 3, 2), (3, 5, 1), (3, 5, 2), (3, 7, 1),
    ]
    for d, p, k in grid:
        report = census_vs_bound(d, p, k)
        assert report.all_within, (d, p, k)
        assert sum(g.size for g in report.groups) == report.vector_count
