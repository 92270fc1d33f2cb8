"""Small dense matrices over a field or a polynomial ring."""

from __future__ import annotations

from typing import Callable, Sequence


class Matrix:
    """A dense rectangular matrix; entries are raw values of ``domain``."""

    __slots__ = ("domain", "rows")

    def __init__(self, domain, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.domain = domain
        self.rows = rows

    @classmethod
    def identity(cls, domain, n: int) -> "Matrix":
        z, o = domain.zero, domain.one
        return cls(domain, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, domain, nrows: int, ncols: int) -> "Matrix":
        return cls(domain, [[domain.zero] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(self.domain, [list(c) for c in zip(*self.rows)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.domain, [[self.rows[i][j] for j in cols] for i in rows])

    def map(self, fn: Callable, domain=None) -> "Matrix":
        return Matrix(domain or self.domain, [[fn(x) for x in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        D = self.domain
        add, mul, is_zero = D.add, D.mul, D.is_zero
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = D.zero
                for a, b in zip(r, c):
                    if not is_zero(a) and not is_zero(b):
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(D, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix) or self.shape != other.shape:
            return False
        eq = self.domain.eq
        return all(eq(a, b) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def is_upper_unipotent(self) -> bool:
        D = self.domain
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if j < i and not D.is_zero(x):
                    return False
                if j == i and not D.eq(x, D.one):
                    return False
        return True

    def __repr__(self) -> str:
        fmt = self.domain.format
        body = "\n".join("  [" + ", ".join(fmt(x) for x in r) + "]" for r in self.rows)
        return f"Matrix over {self.domain}:\n{body}"
