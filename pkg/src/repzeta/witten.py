"""Witten zeta data: degree censuses of G(C), partial sums, abscissa fits.

The census enumerator walks highest-weight vectors depth-first and cuts a
branch as soon as the dimension exceeds the bound; this is complete
because the Weyl dimension is strictly increasing in every coordinate.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .census import DegreeCensus
from .errors import BudgetExceededError
from .rootsys import RootDatum, weyl_dimension

DYADIC_BLOCK_BUDGET = 1 << 21


@dataclass(frozen=True)
class AbscissaEstimate:
    """Least-squares slope of log R_n against log n, with its standard error."""

    slope: float
    standard_error: float
    sample_points: tuple[tuple[float, float], ...]
    window: str


def kahan_sum(values: Iterable[float]) -> float:
    """Compensated summation; order of the iterable is the summation order."""
    total = 0.0
    comp = 0.0
    for v in values:
        y = v - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def enumerate_dimensions(datum: RootDatum, bound: int) -> DegreeCensus:
    """Census of all irreducible degrees <= bound, with multiplicities.

    Depth-first over coefficient vectors; a prefix is abandoned once its
    zero-padded dimension exceeds the bound (monotone pruning), so no
    a-priori box is needed.
    """
    if bound < 1:
        raise ValueError("census bound must be >= 1")
    rank = datum.rank
    rows = [tuple(r) for r in datum.positive_roots]
    den = 1
    for v in datum.rho_values:
        den *= v
    counts: dict[int, int] = {}

    shifted = [1] * rank  # a_i + 1

    def dim_current() -> int:
        num = 1
        for row in rows:
            s = 0
            for c, x in zip(row, shifted):
                s += c * x
            num *= s
        return num // den

    def walk(pos: int) -> None:
        value = 1
        while True:
            shifted[pos] = value
            d = dim_current()
            if d > bound:
                break
            if pos + 1 == rank:
                counts[d] = counts.get(d, 0) + 1
            else:
                walk(pos + 1)
            value += 1
        shifted[pos] = 1

    walk(0)
    return DegreeCensus.from_pairs(counts.items(), bound)


def witten_partial_sum(census: DegreeCensus, s: float) -> float:
    """Truncated zeta value: sum of multiplicity * degree^(-s), Kahan-summed.

    Terms are added from the largest degree down so the small terms
    accumulate first.
    """
    return kahan_sum(m * float(d) ** (-s) for d, m in reversed(census.entries))


def abscissa_estimate(
    census: DegreeCensus, points: int = 16, min_distinct: int = 8
) -> AbscissaEstimate:
    """Fit log R_n ~ slope * log n at geometric sample points in [sqrt(N), N].

    Upper-half sampling damps the constants visible at small n; the lim-sup
    definition itself is not computable from a truncation, so this is an
    estimator with a reported standard error.
    """
    if len(census.entries) < min_distinct:
        raise ValueError(
            f"census has {len(census.entries)} distinct degrees; need >= {min_distinct}"
        )
    n_hi = census.bound
    n_lo = max(1.0, math.sqrt(n_hi))
    degrees = [d for d, _ in census.entries]
    cumulative = []
    running = 0
    for _, m in census.entries:
        running += m
        cumulative.append(running)

    samples: list[tuple[float, float]] = []
    for i in range(points):
        frac = i / (points - 1) if points > 1 else 1.0
        n = max(1, round(n_lo * (n_hi / n_lo) ** frac))
        idx = bisect.bisect_right(degrees, n)
        r_n = cumulative[idx - 1] if idx else 0
        if r_n == 0:
            continue
        samples.append((math.log(n), math.log(r_n)))
    if len(samples) < 3:
        raise ValueError("too few usable sample points for a slope fit")

    m = len(samples)
    mean_x = sum(x for x, _ in samples) / m
    mean_y = sum(y for _, y in samples) / m
    sxx = sum((x - mean_x) ** 2 for x, _ in samples)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in samples)
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ssr = sum((y - (slope * x + intercept)) ** 2 for x, y in samples)
    stderr = math.sqrt(ssr / (m - 2) / sxx) if m > 2 else 0.0
    return AbscissaEstimate(
        slope=slope,
        standard_error=stderr,
        sample_points=tuple(samples),
        window=f"{points} geometric points in [{n_lo:.6g}, {n_hi}]",
    )


def dyadic_block_sum(
    datum: RootDatum, s: float, j: int, budget: int = DYADIC_BLOCK_BUDGET
) -> float:
    """Sum of dim^(-s) over the dyadic block 2^j < a_i <= 2^(j+1) (all i)."""
    if j < 0 or j > 12:
        raise ValueError("dyadic block index must satisfy 0 <= j <= 12")
    size = (2 ** j) ** datum.rank
    if size > budget:
        raise BudgetExceededError(
            f"dyadic block has {size} terms; budget is {budget}"
        )
    lo, hi = 2 ** j + 1, 2 ** (j + 1)
    terms = []
    for coeffs in product(range(lo, hi + 1), repeat=datum.rank):
        d = weyl_dimension(datum, coeffs)
        terms.append(float(d) ** (-s))
    terms.sort()
    return kahan_sum(terms)
