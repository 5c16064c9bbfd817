"""Degree censuses: exact multisets of irreducible degrees.

A DegreeCensus is the common currency between closed formulas and the
brute-force side: both produce one, and tests compare them entry by
entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class DegreeCensus:
    """Sorted (degree, multiplicity) pairs, complete up to `bound`.

    `bound` is the guarantee: every irreducible of degree <= bound is
    counted.  For a full census of a finite group, bound is the largest
    degree.
    """

    entries: tuple[tuple[int, int], ...]
    bound: int

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError("census bound must be >= 1")
        prev = 0
        for deg, mult in self.entries:
            if deg <= prev:
                raise ValueError("census degrees must be strictly increasing")
            if mult < 1:
                raise ValueError("census multiplicities must be >= 1")
            prev = deg

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], bound: int) -> "DegreeCensus":
        merged: dict[int, int] = {}
        for deg, mult in pairs:
            if mult == 0:
                continue
            merged[deg] = merged.get(deg, 0) + mult
        return cls(entries=tuple(sorted(merged.items())), bound=bound)

    @property
    def total_count(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def mass(self) -> int:
        """Sum of multiplicity * degree^2 (the |G| mass for a full census)."""
        return sum(m * d * d for d, m in self.entries)

    def count_upto(self, n: int) -> int:
        """R_n: number of irreducibles of degree <= n."""
        total = 0
        for deg, mult in self.entries:
            if deg > n:
                break
            total += mult
        return total

    def cumulative(self) -> list[tuple[int, int]]:
        """(degree, R_degree) pairs in degree order."""
        out = []
        running = 0
        for deg, mult in self.entries:
            running += mult
            out.append((deg, running))
        return out
