"""Pivot columns (``ind m``) of a matrix over a field or a polynomial ring.

Two engines compute the same set of pivot columns:

* :func:`ind_eager` brings the whole matrix into row echelon form;
* :func:`ind_lazy` walks the columns left to right, keeps only the
  accumulated row operations ``v`` and evaluates ``v @ m[:, j]`` for the rows
  that do not yet hold a pivot.

Over a polynomial ring both engines stay fraction free: to clear ``c_i``
against the pivot ``c_1`` they use ``g = gcd(c_i, c_1)`` and replace row ``i``
by ``(c_1/g) row_i - (c_i/g) row_1``, then divide the row by the gcd of its
entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .matrix import Matrix

ENGINES = ("eager", "lazy")


@dataclass
class EliminationStats:
    """Operation counters and entry-size maxima of one elimination."""

    mults: int = 0
    gcds: int = 0
    divisions: int = 0
    max_len: int = 0
    max_deg: int = 0

    def see(self, domain, x) -> None:
        ln = domain.length(x)
        if ln > self.max_len:
            self.max_len = ln
        d = domain.degree(x)
        if d > self.max_deg:
            self.max_deg = d

    def merge(self, other: "EliminationStats") -> None:
        self.mults += other.mults
        self.gcds += other.gcds
        self.divisions += other.divisions
        self.max_len = max(self.max_len, other.max_len)
        self.max_deg = max(self.max_deg, other.max_deg)


@dataclass
class EchelonResult:
    pivot_columns: tuple[int, ...]
    transform: Matrix | None = None
    stats: EliminationStats = field(default_factory=EliminationStats)

    @property
    def rank(self) -> int:
        return len(self.pivot_columns)


def pivot_select(column: Sequence, domain) -> int:
    """Index of the nonzero entry of minimal length, lowest index on ties."""
    best, best_len = -1, None
    for i, x in enumerate(column):
        if domain.is_zero(x):
            continue
        ln = domain.length(x)
        if best_len is None or ln < best_len:
            best, best_len = i, ln
            if ln == 1:
                break
    if best < 0:
        raise ValueError("pivot requested for an all-zero column")
    return best


def _sparse_rows(m: Matrix) -> list[dict]:
    is_zero = m.domain.is_zero
    return [{j: x for j, x in enumerate(r) if not is_zero(x)} for r in m.rows]


def _dense(domain, rows: list[dict], ncols: int) -> Matrix:
    z = domain.zero
    return Matrix(domain, [[r.get(j, z) for j in range(ncols)] for r in rows])


class _Reducer:
    """Row operations shared by both engines."""

    def __init__(self, domain, stats: EliminationStats):
        self.D = domain
        self.stats = stats

    def pivot_index(self, entries: list) -> int:
        return pivot_select(entries, self.D)

    def eliminate(self, target: dict, pivot_row: dict, c_t, c_p, skip_below: int = -1) -> dict:
        """Return a row ``alpha * target - beta * pivot_row`` in which the
        combination ``alpha * c_t - beta * c_p`` vanishes."""
        D, st = self.D, self.stats
        if D.is_field:
            f = D.div(c_t, c_p)
            st.divisions += 1
            out = dict(target)
            for j, y in pivot_row.items():
                if j <= skip_below:
                    continue
                st.mults += 1
                val = D.sub(out.get(j, D.zero), D.mul(f, y))
                if D.is_zero(val):
                    out.pop(j, None)
                else:
                    out[j] = val
            return out
        g = D.gcd(c_t, c_p)
        st.gcds += 1
        if g.is_constant():
            alpha, beta = c_p, c_t
        else:
            alpha, beta = D.exact_div(c_p, g), D.exact_div(c_t, g)
            st.divisions += 2
        out = {}
        for j, x in target.items():
            if j <= skip_below:
                continue
            st.mults += 1
            out[j] = alpha * x
        for j, y in pivot_row.items():
            if j <= skip_below:
                continue
            st.mults += 1
            t = beta * y
            if j in out:
                val = out[j] - t
                if val.terms:
                    out[j] = val
                else:
                    del out[j]
            else:
                out[j] = -t
        return self.remove_content(out)

    def remove_content(self, row: dict) -> dict:
        D, st = self.D, self.stats
        if len(row) == 0:
            return row
        st.gcds += 1
        g = D.gcd_many(row.values())
        if g.is_constant():
            return row
        st.divisions += len(row)
        return {j: D.exact_div(x, g) for j, x in row.items()}


def ind_eager(m: Matrix, early_exit: bool = True) -> EchelonResult:
    """Pivot columns via a full (fraction-free) row echelon form."""
    D = m.domain
    stats = EliminationStats()
    l, ncols = m.nrows, m.ncols
    if l == 0 or ncols == 0:
        return EchelonResult((), Matrix(D, m.rows), stats)
    rows = _sparse_rows(m)
    for r in rows:
        for x in r.values():
            stats.see(D, x)
    red = _Reducer(D, stats)
    pivots: list[int] = []
    r = 0
    for j in range(ncols):
        if r == l and early_exit:
            break
        cand = [i for i in range(r, l) if j in rows[i]]
        if not cand:
            continue
        pivots.append(j)
        entries = [rows[i].get(j, D.zero) for i in range(r, l)]
        p = red.pivot_index(entries) + r
        rows[r], rows[p] = rows[p], rows[r]
        piv_row, c_p = rows[r], rows[r][j]
        for i in range(r + 1, l):
            c_t = rows[i].get(j)
            if c_t is None:
                continue
            new = red.eliminate(rows[i], piv_row, c_t, c_p, skip_below=j)
            for x in new.values():
                stats.see(D, x)
            rows[i] = new
        r += 1
    return EchelonResult(tuple(pivots), _dense(D, rows, ncols), stats)


def ind_lazy(m: Matrix, early_exit: bool = True) -> EchelonResult:
    """Pivot columns via lazy, column-oriented row reduction.

    Only the accumulated transform ``v`` is updated; column ``j`` of the
    reduced matrix is evaluated as ``v @ m[:, j]`` on the rows below the
    current step.  Stops once every row holds a pivot.
    """
    D = m.domain
    stats = EliminationStats()
    l, ncols = m.nrows, m.ncols
    if l == 0 or ncols == 0:
        return EchelonResult((), Matrix.identity(D, l), stats)
    for r in m.rows:
        for x in r:
            if not D.is_zero(x):
                stats.see(D, x)
    cols = [{k: m.rows[k][j] for k in range(l) if not D.is_zero(m.rows[k][j])} for j in range(ncols)]
    v: list[dict] = [{i: D.one} for i in range(l)]
    red = _Reducer(D, stats)
    pivots: list[int] = []
    for j in range(ncols):
        r = len(pivots)
        if r == l:
            if early_exit:
                break
            continue
        col = cols[j]
        if not col:
            continue
        c = []
        for i in range(r, l):
            vi = v[i]
            acc = D.zero
            small, big = (vi, col) if len(vi) <= len(col) else (col, vi)
            for k in small:
                if k in big:
                    stats.mults += 1
                    acc = D.add(acc, D.mul(vi[k], col[k]))
            c.append(acc)
        if all(D.is_zero(x) for x in c):
            continue
        for x in c:
            if not D.is_zero(x):
                stats.see(D, x)
        pivots.append(j)
        if len(pivots) == l and early_exit:
            break
        p = red.pivot_index(c)
        if p:
            c[0], c[p] = c[p], c[0]
            v[r], v[r + p] = v[r + p], v[r]
        c_p = c[0]
        for t in range(1, l - r):
            c_t = c[t]
            if D.is_zero(c_t):
                continue
            new = red.eliminate(v[r + t], v[r], c_t, c_p)
            for x in new.values():
                stats.see(D, x)
            v[r + t] = new
    return EchelonResult(tuple(pivots), _dense(D, v, l), stats)


def ind(m: Matrix, engine: str = "lazy", early_exit: bool = True) -> EchelonResult:
    if engine == "eager":
        return ind_eager(m, early_exit)
    if engine == "lazy":
        return ind_lazy(m, early_exit)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
