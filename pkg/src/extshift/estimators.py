"""scikit-learn style front end.

Each "sample" is a hypergraph (or simplicial complex); ``transform`` maps a
collection of them to their shifts.  ``fit`` only validates parameters, since
shifting learns nothing from data.
"""

from __future__ import annotations

from typing import Iterable

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .fields import Field, FieldError
from .hypergraphs import SimplicialComplex, UniformHypergraph, combinatorial_shift
from .elimination import ENGINES
from .permutations import Permutation, longest_element, parse_permutation
from .shifting import METHODS, as_field, shift, shift_complex_detailed


def check_field(field) -> Field:
    """Resolve a field argument (object, characteristic or spec string)."""
    try:
        return as_field(field)
    except (FieldError, ValueError, TypeError) as e:
        raise ValueError(f"invalid field {field!r}: {e}") from None


def check_hypergraph(X, n: int | None = None) -> UniformHypergraph:
    if isinstance(X, UniformHypergraph):
        if n is not None and n != X.n:
            return X.with_n(n)
        return X
    if isinstance(X, SimplicialComplex):
        raise TypeError("expected a uniform hypergraph, got a simplicial complex")
    try:
        faces = [tuple(f) for f in X]
    except TypeError:
        raise TypeError(f"cannot interpret {type(X).__name__} as a hypergraph") from None
    return UniformHypergraph(faces, n=n)


def check_permutation(w, n: int) -> Permutation:
    """``None`` means the longest permutation; strings use one-line notation."""
    if w is None:
        return longest_element(n)
    if isinstance(w, str):
        w = parse_permutation(w, n)
    elif not isinstance(w, Permutation):
        w = Permutation(w)
    if w.n != n:
        raise ValueError(f"permutation acts on {w.n} points, expected {n}")
    return w


def _as_collection(X) -> list:
    if isinstance(X, (UniformHypergraph, SimplicialComplex)):
        return [X]
    return list(X)


class ExteriorShift(TransformerMixin, BaseEstimator):
    """Exterior algebraic (partial) shifting.

    Parameters
    ----------
    method : {"las-vegas", "deterministic", "monte-carlo", "generic"}
    field : field spec, e.g. ``"q"``, ``"2"``, ``"2^4"``, or a Field.
    perm : permutation for partial shifts (one-line string, sequence or
        Permutation); ``None`` gives the full shift.
    engine : {"lazy", "eager"}
    samples, max_rounds : Las Vegas sampling parameters.
    random_state : int seed or None.
    """

    def __init__(self, method="las-vegas", field="q", perm=None, engine="lazy",
                 samples=None, max_rounds=1, random_state=None):
        self.method = method
        self.field = field
        self.perm = perm
        self.engine = engine
        self.samples = samples
        self.max_rounds = max_rounds
        self.random_state = random_state

    def fit(self, X=None, y=None):
        if self.method not in METHODS or self.method == "combinatorial":
            raise ValueError(f"unknown method {self.method!r}")
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.samples is not None and int(self.samples) < 1:
            raise ValueError("samples must be positive")
        if int(self.max_rounds) < 1:
            raise ValueError("max_rounds must be positive")
        self.field_ = check_field(self.field)
        return self

    def _shift_one(self, X, seed):
        if isinstance(X, SimplicialComplex):
            w = check_permutation(self.perm, X.n)
            res = shift_complex_detailed(X, self.method, self.field_, w, self.engine,
                                         self.samples, self.max_rounds, seed)
            return res.complex, res
        S = check_hypergraph(X)
        w = check_permutation(self.perm, S.n)
        res = shift(S, w, self.method, self.field_, self.engine, self.samples, self.max_rounds, seed)
        return res.family, res

    def transform(self, X: Iterable):
        if not hasattr(self, "field_"):
            raise NotFittedError("call fit before transform")
        out, self.results_ = [], []
        for i, item in enumerate(_as_collection(X)):
            seed = None if self.random_state is None else int(self.random_state) + i
            fam, res = self._shift_one(item, seed)
            out.append(fam)
            self.results_.append(res)
        return out


class CombinatorialShift(TransformerMixin, BaseEstimator):
    """Erdos-Ko-Rado compression along a transposition ``(i, j)``."""

    def __init__(self, pair=(1, 2)):
        self.pair = pair

    def fit(self, X=None, y=None):
        i, j = sorted(int(v) for v in self.pair)
        if i < 1 or i == j:
            raise ValueError(f"invalid transposition {self.pair!r}")
        self.pair_ = (i, j)
        return self

    def transform(self, X):
        if not hasattr(self, "pair_"):
            raise NotFittedError("call fit before transform")
        return [combinatorial_shift(check_hypergraph(S), self.pair_) for S in _as_collection(X)]


__all__ = ["ExteriorShift", "CombinatorialShift", "check_field", "check_hypergraph", "check_permutation"]
