"""Exact root-system data for the simple types A-G.

A RootDatum stores, for each positive coroot, the row of its values on
the fundamental weights.  Those rows are exactly the coefficients of the
coroot in the simple-coroot basis, so they are enumerated by root-string
closure on the dual Cartan matrix.  Everything downstream (the Weyl
dimension formula, Levi filters, the rank/kappa ratio) works from these
integer rows alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

SERIES = ("A", "B", "C", "D", "E", "F", "G")

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 3,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}

_RANK_RULE = {
    "A": "rank >= 1",
    "B": "rank >= 2",
    "C": "rank >= 3",
    "D": "rank >= 4",
    "E": "rank in {6, 7, 8}",
    "F": "rank == 4",
    "G": "rank == 2",
}


def group_dimension(series: str, rank: int) -> int:
    """dim of the simply connected group, from the standard table."""
    if series == "A":
        return rank * (rank + 2)
    if series in ("B", "C"):
        return rank * (2 * rank + 1)
    if series == "D":
        return rank * (2 * rank - 1)
    if series == "E":
        return {6: 78, 7: 133, 8: 248}[rank]
    if series == "F":
        return 52
    return 14  # G2


def coxeter_number(series: str, rank: int) -> int:
    if series == "A":
        return rank + 1
    if series in ("B", "C"):
        return 2 * rank
    if series == "D":
        return 2 * rank - 2
    if series == "E":
        return {6: 12, 7: 18, 8: 30}[rank]
    if series == "F":
        return 12
    return 6  # G2


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entries M[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering."""
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def join(i: int, j: int, a: int = -1, b: int = -1) -> None:
        m[i][j] = a
        m[j][i] = b

    if series in ("A", "B", "C"):
        for i in range(rank - 1):
            join(i, i + 1)
        if series == "B" and rank >= 2:
            join(rank - 2, rank - 1, -2, -1)  # alpha_rank short
        if series == "C":
            join(rank - 2, rank - 1, -1, -2)  # alpha_rank long
    elif series == "D":
        for i in range(rank - 3):
            join(i, i + 1)
        join(rank - 3, rank - 2)
        join(rank - 3, rank - 1)
    elif series == "E":
        edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
        for i, j in edges:
            join(i, j)
    elif series == "F":
        join(0, 1)
        join(1, 2, -2, -1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        join(2, 3)
    elif series == "G":
        join(0, 1, -1, -3)  # alpha_1 short
    return m


def positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All positive roots as coefficient vectors over the simple roots.

    Root-string closure level by level: beta + alpha_i is a root iff
    q = p - <beta, alpha_i^vee> >= 1, where p counts how far the string
    extends below beta.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known = set(simple)
    level = list(simple)
    out = list(simple)
    while level:
        nxt: list[tuple[int, ...]] = []
        for beta in level:
            for i in range(rank):
                pairing = sum(beta[j] * cartan[j][i] for j in range(rank))
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in known:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
                        out.append(cand)
        level = nxt
    return out


@dataclass(frozen=True)
class RootDatum:
    """Positive-coroot rows for one irreducible simply connected type.

    positive_roots[j] is the vector (alpha^vee(w_1), ..., alpha^vee(w_r))
    for one positive coroot alpha^vee evaluated on the fundamental
    weights; rho_values[j] is its sum, alpha^vee(rho).
    """

    series: str
    rank: int
    positive_roots: tuple[tuple[int, ...], ...]
    rho_values: tuple[int, ...]
    kappa: int
    coxeter_number: int

    @property
    def dimension(self) -> int:
        return 2 * self.kappa + self.rank


def build_root_datum(series: str, rank: int) -> RootDatum:
    """Construct the root datum for (series, rank); rejects invalid pairs."""
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}; expected one of {SERIES}")
    if not isinstance(rank, int) or not _VALID_RANKS[series](rank):
        raise ValueError(f"invalid rank {rank} for series {series}: need {_RANK_RULE[series]}")

    cartan = cartan_matrix(series, rank)
    # coroots of Phi = roots of the dual system (transposed Cartan matrix)
    dual = [list(col) for col in zip(*cartan)]
    rows = positive_roots_from_cartan(dual)
    rows.sort(key=lambda r: (sum(r), r))

    kappa = len(rows)
    dim = group_dimension(series, rank)
    h = coxeter_number(series, rank)
    if kappa != (dim - rank) // 2 or (dim - rank) % 2:
        raise AssertionError(f"{series}{rank}: closure produced kappa={kappa}, table expects {(dim - rank) / 2}")
    if Fraction(rank, kappa) != Fraction(2, h):
        raise AssertionError(f"{series}{rank}: r/kappa != 2/h")
    for row in rows:
        if min(row) < 0 or max(row) == 0:
            raise AssertionError(f"{series}{rank}: bad coroot row {row}")

    return RootDatum(
        series=series,
        rank=rank,
        positive_roots=tuple(rows),
        rho_values=tuple(sum(r) for r in rows),
        kappa=kappa,
        coxeter_number=h,
    )


def weyl_dimension(datum: RootDatum, weight: Sequence[int]) -> int:
    """Exact dimension of the irreducible with the given highest weight.

    Product over positive coroots of alpha^vee(lambda + rho) / alpha^vee(rho),
    computed as one exact integer division at the end.
    """
    if len(weight) != datum.rank:
        raise ValueError(f"weight length {len(weight)} != rank {datum.rank}")
    shifted = []
    for a in weight:
        if not isinstance(a, int) or a < 0:
            raise ValueError("weight coefficients must be nonnegative integers")
        shifted.append(a + 1)
    num = 1
    for row in datum.positive_roots:
        num *= sum(c * s for c, s in zip(row, shifted))
    den = 1
    for v in datum.rho_values:
        den *= v
    if num % den:
        raise AssertionError("Weyl dimension did not come out integral")
    return num // den


def rank_kappa_ratio(datum: RootDatum) -> Fraction:
    """r/kappa in lowest terms; always equals 2/h."""
    ratio = Fraction(datum.rank, datum.kappa)
    if ratio != Fraction(2, datum.coxeter_number):
        raise AssertionError("r/kappa != 2/h")
    return ratio


def levi_subsystem(datum: RootDatum, simple_subset: Iterable[int]) -> tuple[int, int]:
    """(rank, kappa) of the Levi subsystem spanned by a subset of simple roots.

    Indices are 1-based.  A positive root lies in the Levi iff its support
    is contained in the subset; the subset's simple roots stay independent,
    so the rank is just the subset size.
    """
    subset = set(simple_subset)
    for i in subset:
        if not isinstance(i, int) or i < 1 or i > datum.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{datum.rank}")
    if not subset:
        return (0, 0)
    allowed = {i - 1 for i in subset}
    count = 0
    for row in datum.positive_roots:
        if all(j in allowed for j, c in enumerate(row) if c):
            count += 1
    return (len(subset), count)


def all_irreducible_types(max_rank: int = 8) -> list[tuple[str, int]]:
    """Every valid (series, rank) pair with rank <= max_rank."""
    out: list[tuple[str, int]] = []
    for series in SERIES:
        for rank in range(1, max_rank + 1):
            if _VALID_RANKS[series](rank):
                out.append((series, rank))
    return out
