"""Minors, compound submatrices and the shifting matrices U(w), R(w)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .fields import Field
from .hypergraphs import KSet, UniformHypergraph, all_ksets
from .matrix import Matrix
from .permutations import Permutation, inversions, permutation_matrix
from .polyring import PolyRing


def minor_det(g: Matrix, sigma: Sequence[int], tau: Sequence[int], memo: dict | None = None):
    """``det(g[i, j] for i in sigma, j in tau)`` with 1-based indices.

    Division-free Laplace expansion along the sparsest remaining row or
    column; sub-minors are memoized in ``memo`` (keyed by 0-based index
    tuples), which callers may share across many minors of the same matrix.
    """
    if len(sigma) != len(tau):
        raise ValueError("minor needs as many rows as columns")
    n, m = g.shape
    if any(not 1 <= i <= n for i in sigma) or any(not 1 <= j <= m for j in tau):
        raise IndexError(f"minor index out of range for {n}x{m} matrix")
    if memo is None:
        memo = {}
    return _det(g, tuple(i - 1 for i in sigma), tuple(j - 1 for j in tau), memo)


def _det(g: Matrix, rows: tuple, cols: tuple, memo: dict):
    D = g.domain
    k = len(rows)
    if k == 0:
        return D.one
    a = g.rows
    if k == 1:
        return a[rows[0]][cols[0]]
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    is_zero = D.is_zero
    # sparsest row vs sparsest column
    best_count, best_is_row, best_pos = k + 1, True, 0
    for p, i in enumerate(rows):
        cnt = sum(1 for j in cols if not is_zero(a[i][j]))
        if cnt < best_count:
            best_count, best_is_row, best_pos = cnt, True, p
            if cnt <= 1:
                break
    if best_count > 1:
        for p, j in enumerate(cols):
            cnt = sum(1 for i in rows if not is_zero(a[i][j]))
            if cnt < best_count:
                best_count, best_is_row, best_pos = cnt, False, p
                if cnt <= 1:
                    break
    total = D.zero
    if best_count:
        if best_is_row:
            i = rows[best_pos]
            sub_rows = rows[:best_pos] + rows[best_pos + 1:]
            for q, j in enumerate(cols):
                x = a[i][j]
                if is_zero(x):
                    continue
                d = _det(g, sub_rows, cols[:q] + cols[q + 1:], memo)
                if is_zero(d):
                    continue
                t = D.mul(x, d)
                total = D.sub(total, t) if (best_pos + q) % 2 else D.add(total, t)
        else:
            j = cols[best_pos]
            sub_cols = cols[:best_pos] + cols[best_pos + 1:]
            for q, i in enumerate(rows):
                x = a[i][j]
                if is_zero(x):
                    continue
                d = _det(g, rows[:q] + rows[q + 1:], sub_cols, memo)
                if is_zero(d):
                    continue
                t = D.mul(x, d)
                total = D.sub(total, t) if (best_pos + q) % 2 else D.add(total, t)
    memo[key] = total
    return total


def bareiss_det(g: Matrix, sigma: Sequence[int] | None = None, tau: Sequence[int] | None = None):
    """Fraction-free Bareiss determinant of a (sub)matrix, 1-based indices."""
    D = g.domain
    if sigma is None:
        sigma = range(1, g.nrows + 1)
    if tau is None:
        tau = range(1, g.ncols + 1)
    a = [[g.rows[i - 1][j - 1] for j in tau] for i in sigma]
    k = len(a)
    if k == 0:
        return D.one
    if any(len(r) != k for r in a):
        raise ValueError("square minor required")
    sign = False
    prev = D.one
    div = D.div if D.is_field else D.exact_div
    for c in range(k - 1):
        if D.is_zero(a[c][c]):
            for r in range(c + 1, k):
                if not D.is_zero(a[r][c]):
                    a[c], a[r] = a[r], a[c]
                    sign = not sign
                    break
            else:
                return D.zero
        piv = a[c][c]
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                num = D.sub(D.mul(piv, a[r][j]), D.mul(a[r][c], a[c][j]))
                a[r][j] = div(num, prev)
            a[r][c] = D.zero
        prev = piv
    det = a[k - 1][k - 1]
    return D.neg(det) if sign else det


@dataclass
class CompoundSubmatrix:
    """Rows indexed by ``row_sets``, columns by ``col_sets`` (both k-sets)."""

    row_sets: list[KSet]
    col_sets: list[KSet]
    matrix: Matrix

    def entry(self, sigma: KSet, tau: KSet):
        return self.matrix.rows[self.row_sets.index(tuple(sigma))][self.col_sets.index(tuple(tau))]


def compound_submatrix(
    g: Matrix,
    S: UniformHypergraph | Iterable[KSet],
    T: Iterable[KSet] | None = None,
    memo: dict | None = None,
) -> CompoundSubmatrix:
    """The submatrix of the k-th compound of ``g`` with rows ``S``, columns ``T``.

    ``T`` defaults to all k-subsets; columns are always in ascending lex
    order, rows in the iteration order of ``S``.
    """
    n = g.nrows
    if g.ncols != n:
        raise ValueError("compound matrices need a square matrix")
    rows = [tuple(s) for s in S]
    if not rows:
        raise ValueError("empty row family")
    k = len(rows[0])
    if any(len(r) != k for r in rows):
        raise ValueError("row family is not uniform")
    if T is None:
        cols = all_ksets(n, k)
    else:
        cols = sorted(tuple(t) for t in T)
        if any(len(t) != k for t in cols):
            raise ValueError(f"column family must consist of {k}-sets")
    if memo is None:
        memo = {}
    zero_based_cols = [tuple(j - 1 for j in t) for t in cols]
    entries = []
    for s in rows:
        r0 = tuple(i - 1 for i in s)
        entries.append([_det(g, r0, c0, memo) for c0 in zero_based_cols])
    return CompoundSubmatrix(rows, cols, Matrix(g.domain, entries))


def compound_matrix(g: Matrix, k: int) -> Matrix:
    return compound_submatrix(g, all_ksets(g.nrows, k)).matrix


def poly_ring_for(w: Permutation, field: Field) -> PolyRing:
    return PolyRing(field, inversions(w))


def build_U(w: Permutation, field: Field, ring: PolyRing | None = None) -> Matrix:
    """Unipotent upper triangular matrix with ``x_ij`` at each inversion of ``w``."""
    ring = ring or poly_ring_for(w, field)
    U = Matrix.identity(ring, w.n)
    for i, j in inversions(w):
        U.rows[i - 1][j - 1] = ring.gen((i, j))
    return U


def build_R(w: Permutation, field: Field, ring: PolyRing | None = None) -> Matrix:
    """``U(w) P(w)``; column ``j`` is column ``w^{-1}(j)`` of ``U(w)``."""
    U = build_U(w, field, ring)
    return U @ permutation_matrix(w, U.domain)


def generic_matrix(n: int, field: Field) -> Matrix:
    """The matrix ``(x_ij)`` with ``n**2`` independent indeterminates."""
    ring = PolyRing(field, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)])
    return Matrix(ring, [[ring.gen((i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)])


def build_U_numeric(w: Permutation, v: Mapping[tuple[int, int], object], field: Field) -> Matrix:
    """``U(w)`` with ``v[(i, j)]`` substituted for ``x_ij``."""
    inv = inversions(w)
    missing = [p for p in inv if p not in v]
    if missing:
        raise KeyError(f"no value for inversion pairs {missing}")
    extra = set(v) - set(inv)
    if extra:
        raise ValueError(f"pairs {sorted(extra)} are not inversions of {w}")
    U = Matrix.identity(field, w.n)
    for i, j in inv:
        U.rows[i - 1][j - 1] = v[(i, j)]
    return U


def random_assignment(w: Permutation, field: Field, rng: random.Random) -> dict:
    return {p: field.random(rng) for p in inversions(w)}


def random_unipotent(w: Permutation, field: Field, rng: random.Random) -> Matrix:
    return build_U_numeric(w, random_assignment(w, field, rng), field)


def evaluate_matrix(M: Matrix, assignment: Mapping, field: Field) -> Matrix:
    """Substitute an assignment into every polynomial entry of ``M``."""
    return M.map(lambda p: p.evaluate(assignment, field), field)
