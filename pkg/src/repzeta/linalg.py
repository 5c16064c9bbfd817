"""Exact linear algebra over Z, Z/m, F_p and Z/p^M.

Everything here is pure-integer arithmetic.  The local Smith form
(`smith_local`) is the workhorse shared by the centralizer oracle, the
base-change kernel/cokernel counts and the intertwiner-module solver:
over the local ring Z/p^M every matrix diagonalizes to diag(p^e1, ...)
by invertible row/column operations, with nondecreasing exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Matrix = list[list[int]]


def valuation(x: int, p: int, cap: int) -> int:
    """p-adic valuation of x, with val(0) reported as `cap`."""
    x = abs(x)
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul_mod(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], mod: int) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row_a = a[i]
        out.append([sum(row_a[t] * b[t][j] for t in range(k)) % mod for j in range(m)])
    return out


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _minor(rows: Sequence[Sequence[int]], i: int, j: int) -> list[list[int]]:
    return [[rows[r][c] for c in range(len(rows)) if c != j] for r in range(len(rows)) if r != i]


def mat_inv_mod(rows: Sequence[Sequence[int]], mod: int) -> Matrix:
    """Inverse of a square matrix over Z/m via adjugate; det must be a unit."""
    n = len(rows)
    d = det_int(rows) % mod
    dinv = pow(d, -1, mod)  # raises ValueError when det is not invertible
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det_int(_minor(rows, i, j))
            if (i + j) % 2:
                c = -c
            adj[j][i] = c % mod
    return [[(adj[i][j] * dinv) % mod for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# prime-field linear algebra
# ---------------------------------------------------------------------------

def rref_mod_p(rows: Iterable[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def kernel_mod_p(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of a matrix over F_p."""
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref_mod_p(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r][fc]) % p
        basis.append(vec)
    return basis


def charpoly_mod_p(a: Sequence[Sequence[int]], p: int) -> list[int]:
    """Coefficients of det(xI - A) over F_p, ascending order, monic.

    Hessenberg reduction by similarity, then the standard leading-minor
    recurrence; O(n^3) field operations.
    """
    n = len(a)
    h = [[x % p for x in row] for row in a]
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if h[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[j + 1], h[pivot] = h[pivot], h[j + 1]
            for row in h:
                row[j + 1], row[pivot] = row[pivot], row[j + 1]
        inv = pow(h[j + 1][j], -1, p)
        for i in range(j + 2, n):
            f = (h[i][j] * inv) % p
            if f:
                hi, hj1 = h[i], h[j + 1]
                for c in range(n):
                    hi[c] = (hi[c] - f * hj1[c]) % p
                for row in h:
                    row[j + 1] = (row[j + 1] + f * row[i]) % p
    # charp[m] = det(xI - H_m) for the leading m x m block
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        hmm = h[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [0] + prev  # x * prev
        for idx, coef in enumerate(prev):
            cur[idx] = (cur[idx] - hmm * coef) % p
        sub = 1
        for i in range(1, m):
            sub = (sub * h[m - i][m - i - 1]) % p
            if sub == 0:
                break
            coef = (h[m - 1 - i][m - 1] * sub) % p
            if coef:
                low = polys[m - 1 - i]
                for idx, c0 in enumerate(low):
                    cur[idx] = (cur[idx] - coef * c0) % p
        cur = [c % p for c in cur]
        polys.append(cur)
    return polys[n]


def poly_roots_mod_p(coeffs: Sequence[int], p: int) -> list[int]:
    """All roots in F_p of a polynomial given in ascending coefficients."""
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


# ---------------------------------------------------------------------------
# local Smith form over Z/p^M
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithLocal:
    """U*A*V = diag(p^e_0, ..., p^e_{n-1}) mod p^M, exponents nondecreasing.

    Exponent M is a cap: it means the true elementary divisor is divisible
    by p^M (possibly the entry is 0 over Z).
    """

    p: int
    precision: int
    exponents: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


def smith_local(rows: Sequence[Sequence[int]], p: int, precision: int) -> SmithLocal:
    """Diagonalize a square matrix over the local ring Z/p^M.

    Pivots are chosen with minimal valuation (first in row-major order on
    ties), which makes the exponent sequence nondecreasing and the whole
    procedure deterministic.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("smith_local expects a square matrix")
    pm = p ** precision
    a = [[x % pm for x in row] for row in rows]
    u = identity_matrix(n)
    v = identity_matrix(n)
    exps = [precision] * n
    for t in range(n):
        best = None
        best_val = precision
        for i in range(t, n):
            for j in range(t, n):
                x = a[i][j]
                if x == 0:
                    continue
                val = valuation(x, p, precision)
                if val < best_val:
                    best, best_val = (i, j), val
        if best is None:
            break
        i0, j0 = best
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
            for row in v:
                row[t], row[j0] = row[j0], row[t]
        pv = p ** best_val
        unit = a[t][t] // pv
        w = pow(unit, -1, pm)
        a[t] = [(x * w) % pm for x in a[t]]
        u[t] = [(x * w) % pm for x in u[t]]
        for i in range(t + 1, n):
            x = a[i][t]
            if x:
                q = x // pv
                at, ut = a[t], u[t]
                a[i] = [(y - q * z) % pm for y, z in zip(a[i], at)]
                u[i] = [(y - q * z) % pm for y, z in zip(u[i], ut)]
        for j in range(t + 1, n):
            x = a[t][j]
            if x:
                q = x // pv
                for row in a:
                    row[j] = (row[j] - q * row[t]) % pm
                for row in v:
                    row[j] = (row[j] - q * row[t]) % pm
        exps[t] = best_val
    if any(exps[i] > exps[i + 1] for i in range(n - 1)):
        raise AssertionError("local Smith exponents not sorted")
    return SmithLocal(
        p=p,
        precision=precision,
        exponents=tuple(exps),
        left=tuple(tuple(r) for r in u),
        right=tuple(tuple(r) for r in v),
    )


def kernel_generators_local(
    rows: Sequence[Sequence[int]], p: int, precision: int
) -> list[tuple[int, tuple[int, ...]]]:
    """Generators of ker(A mod p^M) as pairs (order exponent e, vector).

    The generator has additive order p^e; vectors with e = 0 are omitted.
    Together the generators present the kernel as a direct sum of cyclic
    modules Z/p^e.
    """
    smith = smith_local(rows, p, precision)
    pm = p ** precision
    gens = []
    n = len(smith.exponents)
    for t in range(n):
        e = smith.exponents[t]
        if e == 0:
            continue
        scale = p ** (precision - e)
        vec = tuple((smith.right[i][t] * scale) % pm for i in range(n))
        gens.append((e, vec))
    return gens
