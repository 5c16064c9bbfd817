"""Brute-force ground truth for finite matrix groups over Z/m.

generate_group enumerates the group by breadth-first closure from the
identity; conjugacy classes come from generator-conjugation orbit sweeps
(the orbit of an element under conjugation by the generators is its full
class); character degrees come from the Burnside-Dixon algorithm run
modulo a prime l = 1 (mod exponent(G)) with l > 2*sqrt(|G|), so every
step is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .census import DegreeCensus
from .errors import BudgetExceededError
from .linalg import (
    charpoly_mod_p,
    det_int,
    kernel_mod_p,
    mat_inv_mod,
    poly_roots_mod_p,
    rref_mod_p,
)

GROUP_BUDGET = 200_000
CLASS_BUDGET = 400

Flat = tuple[int, ...]


def _to_flat(rows: Sequence[Sequence[int]], m: int) -> Flat:
    return tuple(x % m for row in rows for x in row)


def _to_rows(flat: Flat, n: int) -> list[list[int]]:
    return [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def _mul(a: Flat, b: Flat, n: int, m: int) -> Flat:
    out = []
    for i in range(n):
        base = i * n
        for j in range(n):
            s = 0
            for k in range(n):
                s += a[base + k] * b[k * n + j]
            out.append(s % m)
    return tuple(out)


def _inv(a: Flat, n: int, m: int) -> Flat:
    return _to_flat(mat_inv_mod(_to_rows(a, n), m), m)


def _identity(n: int) -> Flat:
    return tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))


@dataclass(frozen=True)
class FiniteMatrixGroup:
    """Fully enumerated matrix group over Z/m, elements in BFS order."""

    modulus: int
    n: int
    generators: tuple[Flat, ...]
    elements: tuple[Flat, ...]
    index: dict[Flat, int] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes: representatives (BFS order), sizes, count."""

    representatives: tuple[Flat, ...]
    sizes: tuple[int, ...]
    count: int
    class_of: dict[Flat, int] = field(repr=False, compare=False)


def generate_group(
    modulus: int,
    n: int,
    generators: Sequence[Sequence[Sequence[int]]],
    budget: int = GROUP_BUDGET,
) -> FiniteMatrixGroup:
    """Breadth-first closure from the identity under right multiplication."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    gens = []
    for g in generators:
        flat = _to_flat(g, modulus)
        d = det_int(_to_rows(flat, n)) % modulus
        if math.gcd(d, modulus) != 1:
            raise ValueError(f"generator with determinant {d} is not invertible mod {modulus}")
        gens.append(flat)
    ident = _identity(n)
    seen = {ident: 0}
    order_list = [ident]
    queue = [ident]
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for g in gens:
            nxt = _mul(cur, g, n, modulus)
            if nxt not in seen:
                if len(order_list) >= budget:
                    raise BudgetExceededError(
                        f"group enumeration exceeded budget {budget}; "
                        f"reached {len(order_list)} elements"
                    )
                seen[nxt] = len(order_list)
                order_list.append(nxt)
                queue.append(nxt)
    return FiniteMatrixGroup(
        modulus=modulus,
        n=n,
        generators=tuple(gens),
        elements=tuple(order_list),
        index=seen,
    )


def sl2_generators(modulus: int) -> list[list[list[int]]]:
    """S and T, which generate SL2(Z/m) for every m."""
    return [[[0, modulus - 1], [1, 0]], [[1, 1], [0, 1]]]


def sl2_group(modulus: int, budget: int = GROUP_BUDGET) -> FiniteMatrixGroup:
    return generate_group(modulus, 2, sl2_generators(modulus), budget=budget)


def conjugacy_classes(group: FiniteMatrixGroup) -> ClassData:
    """Orbit sweeps: class of x = orbit of x under conjugation by generators."""
    n, m = group.n, group.modulus
    gen_pairs = [(g, _inv(g, n, m)) for g in group.generators]
    class_of: dict[Flat, int] = {}
    reps: list[Flat] = []
    sizes: list[int] = []
    for x in group.elements:
        if x in class_of:
            continue
        cid = len(reps)
        reps.append(x)
        class_of[x] = cid
        orbit = [x]
        head = 0
        while head < len(orbit):
            y = orbit[head]
            head += 1
            for g, ginv in gen_pairs:
                z = _mul(_mul(ginv, y, n, m), g, n, m)
                if z not in class_of:
                    class_of[z] = cid
                    orbit.append(z)
        sizes.append(len(orbit))
    if sum(sizes) != group.order:
        raise AssertionError("class sizes do not sum to the group order")
    return ClassData(
        representatives=tuple(reps), sizes=tuple(sizes), count=len(reps), class_of=class_of
    )


def element_order(group: FiniteMatrixGroup, x: Flat) -> int:
    ident = _identity(group.n)
    y = x
    k = 1
    while y != ident:
        y = _mul(y, x, group.n, group.modulus)
        k += 1
    return k


def group_exponent(group: FiniteMatrixGroup, classes: ClassData) -> int:
    """lcm of element orders; order is a class function, so reps suffice."""
    e = 1
    for rep in classes.representatives:
        e = math.lcm(e, element_order(group, rep))
    return e


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime l = 1 (mod exponent) with l > 2*sqrt(order)."""
    floor = 2 * math.isqrt(order)
    ell = exponent + 1
    while ell <= floor or not _is_prime(ell):
        ell += exponent
    return ell


def _class_matrix(
    group: FiniteMatrixGroup,
    classes: ClassData,
    members: list[list[Flat]],
    i: int,
    ell: int,
) -> list[list[int]]:
    """M_i with (M_i)[j][k] = #{(x, y) in C_i x C_j : x*y = rep_k}, mod l."""
    c = classes.count
    n, m = group.n, group.modulus
    mat = [[0] * c for _ in range(c)]
    inv_members = [_inv(x, n, m) for x in members[i]]
    for k, z in enumerate(classes.representatives):
        for xinv in inv_members:
            y = _mul(xinv, z, n, m)
            j = classes.class_of[y]
            mat[j][k] += 1
    return [[v % ell for v in row] for row in mat]


def _coords_in_echelon(
    vec: list[int], basis: list[list[int]], pivots: list[int], ell: int
) -> list[int]:
    """Coordinates of vec in a reduced-echelon basis; vec must lie in the span."""
    v = vec[:]
    coords = []
    for row, piv in zip(basis, pivots):
        c = v[piv] % ell
        coords.append(c)
        if c:
            v = [(a - c * b) % ell for a, b in zip(v, row)]
    if any(v):
        raise AssertionError("vector not in subspace (class matrices should stabilize it)")
    return coords


def character_degrees(group: FiniteMatrixGroup, class_budget: int = CLASS_BUDGET) -> DegreeCensus:
    """Burnside-Dixon character degrees, exact.

    1. split the class algebra over F_l into 1-dim common eigenspaces of
       the class matrices,
    2. read each normalized eigenvector as the central character
       (omega_i = h_i chi(g_i)/d),
    3. recover d from d^2 = |G| / sum_i omega_i omega_{i*} / h_i, unique
       below sqrt(|G|) because l > 2*sqrt(|G|).
    """
    classes = conjugacy_classes(group)
    c = classes.count
    if c > class_budget:
        raise BudgetExceededError(f"{c} conjugacy classes exceed the Dixon budget {class_budget}")
    order = group.order
    exponent = group_exponent(group, classes)
    ell = dixon_prime(order, exponent)

    members: list[list[Flat]] = [[] for _ in range(c)]
    for x in group.elements:
        members[classes.class_of[x]].append(x)

    # split subspaces; each is (reduced-echelon basis rows, pivot columns)
    start = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    subspaces: list[tuple[list[list[int]], list[int]]] = [(start, list(range(c)))]
    by_size = sorted(range(1, c), key=lambda i: (classes.sizes[i], i))
    for i in by_size:
        if all(len(b) == 1 for b, _ in subspaces):
            break
        mat = _class_matrix(group, classes, members, i, ell)
        new_subspaces = []
        for basis, pivots in subspaces:
            dim = len(basis)
            if dim == 1:
                new_subspaces.append((basis, pivots))
                continue
            images = []
            for b in basis:
                img = [sum(mat[r][k] * b[k] for k in range(c)) % ell for r in range(c)]
                images.append(_coords_in_echelon(img, basis, pivots, ell))
            # action matrix: column t = coordinates of the image of basis[t]
            act = [[images[t][r] for t in range(dim)] for r in range(dim)]
            roots = poly_roots_mod_p(charpoly_mod_p(act, ell), ell)
            split_dim = 0
            for lam in roots:
                shifted = [[(act[r][t] - (lam if r == t else 0)) % ell for t in range(dim)]
                           for r in range(dim)]
                ambient = []
                for kvec in kernel_mod_p(shifted, ell):
                    amb = [0] * c
                    for t, coef in enumerate(kvec):
                        if coef:
                            for idx in range(c):
                                amb[idx] = (amb[idx] + coef * basis[t][idx]) % ell
                    ambient.append(amb)
                if not ambient:
                    continue
                eig_basis, eig_pivots = rref_mod_p(ambient, ell)
                if len(eig_basis) != len(ambient):
                    raise AssertionError("eigenspace basis degenerated")
                new_subspaces.append((eig_basis, eig_pivots))
                split_dim += len(eig_basis)
            if split_dim != dim:
                raise AssertionError("class matrix failed to diagonalize over F_l")
        subspaces = new_subspaces
    if any(len(b) != 1 for b, _ in subspaces):
        raise AssertionError("class algebra did not split into 1-dim eigenspaces")

    inverse_class = [
        classes.class_of[_inv(rep, group.n, group.modulus)] for rep in classes.representatives
    ]
    degrees: list[int] = []
    isq = math.isqrt(order)
    for basis, _ in subspaces:
        v = basis[0]
        if v[0] % ell == 0:
            raise AssertionError("eigenvector vanishes on the identity class")
        norm = pow(v[0], -1, ell)
        omega = [(x * norm) % ell for x in v]
        total = 0
        for i in range(c):
            hi_inv = pow(classes.sizes[i] % ell, -1, ell)
            total = (total + omega[i] * omega[inverse_class[i]] % ell * hi_inv) % ell
        t = order % ell * pow(total, -1, ell) % ell
        deg = next((d for d in range(1, isq + 1) if d * d % ell == t), None)
        if deg is None:
            raise AssertionError("no admissible degree for an eigenvector")
        degrees.append(deg)

    if len(degrees) != c:
        raise AssertionError("degree count != class count")
    if sum(d * d for d in degrees) != order:
        raise AssertionError("sum of squared degrees != group order")
    pairs: dict[int, int] = {}
    for d in degrees:
        pairs[d] = pairs.get(d, 0) + 1
    return DegreeCensus.from_pairs(pairs.items(), max(degrees))


def abelianization_order(group: FiniteMatrixGroup) -> int:
    """|G / [G,G]| via the normal closure of the generator commutators.

    Cross-validates the Dixon output: the number of degree-1 characters
    equals the abelianization order.
    """
    n, m = group.n, group.modulus
    gens = list(group.generators)
    comms = []
    for a in gens:
        for b in gens:
            word = _mul(_mul(_inv(a, n, m), _inv(b, n, m), n, m), _mul(a, b, n, m), n, m)
            comms.append(word)
    normal_gens = list(dict.fromkeys(comms))
    while True:
        # subgroup closure of the current generating set
        ident = _identity(n)
        seen = {ident}
        queue = [ident]
        head = 0
        while head < len(queue):
            cur = queue[head]
            head += 1
            for g in normal_gens:
                nxt = _mul(cur, g, n, m)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        # normality under the ambient generators
        new = []
        for g in gens:
            ginv = _inv(g, n, m)
            for x in list(seen):
                conj = _mul(_mul(ginv, x, n, m), g, n, m)
                if conj not in seen:
                    new.append(conj)
        if not new:
            if group.order % len(seen):
                raise AssertionError("commutator subgroup order does not divide |G|")
            return group.order // len(seen)
        normal_gens.extend(dict.fromkeys(new))
