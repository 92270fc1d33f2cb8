"""Uniform hypergraphs, the orders on k-sets, and simplicial complexes.

A k-set is stored as a strictly increasing tuple of positive integers.  For
k-sets of equal size the lexicographic order (``S < T`` iff the minimum of the
symmetric difference lies in ``S``) coincides with Python tuple comparison, so
sorting a family of tuples sorts it lexicographically.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

KSet = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def kset(vertices: Iterable[int], n: int | None = None) -> KSet:
    """Validate and canonicalize ``vertices`` into a k-set."""
    vs = tuple(sorted(int(v) for v in vertices))
    if any(v < 1 for v in vs):
        raise ValueError(f"vertices must be positive integers: {vs}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex in {vs}")
    if n is not None and vs and vs[-1] > n:
        raise ValueError(f"vertex {vs[-1]} exceeds n={n}")
    return vs


def _check_same_size(a: KSet, b: KSet) -> None:
    if len(a) != len(b):
        raise ValueError(f"cardinality mismatch: {a} vs {b}")


def lex_compare(sigma: KSet, tau: KSet) -> int:
    """Compare two k-sets in lex order; returns -1, 0 or 1."""
    _check_same_size(sigma, tau)
    return (sigma > tau) - (sigma < tau)


def dominates_leq(rho: KSet, sigma: KSet) -> bool:
    """True iff ``rho <= sigma`` in the domination (componentwise) order."""
    _check_same_size(rho, sigma)
    return all(a <= b for a, b in zip(rho, sigma))


def replace_vertex(sigma: KSet, i: int, j: int) -> KSet:
    """Replace ``i`` by ``j`` in ``sigma``; no-op when ``i`` is absent."""
    if i not in sigma:
        return sigma
    if i == j:
        return sigma
    if j in sigma:
        raise ValueError(f"cannot replace {i} by {j} in {sigma}: {j} already present")
    return tuple(sorted(j if v == i else v for v in sigma))


def all_ksets(n: int, k: int) -> list[KSet]:
    """All k-subsets of [n] in ascending lex order."""
    return list(combinations(range(1, n + 1), k))


class UniformHypergraph:
    """A nonempty family of k-subsets of [n], kept sorted in lex order.

    Instances are immutable and hashable.  ``n`` defaults to the largest
    vertex that occurs.
    """

    __slots__ = ("n", "k", "faces", "_members")

    def __init__(self, faces: Iterable[Iterable[int]], n: int | None = None):
        fs = [kset(f) for f in faces]
        if not fs:
            raise ValueError("a hypergraph needs at least one face")
        k = len(fs[0])
        if any(len(f) != k for f in fs):
            raise ValueError("faces of a uniform hypergraph must have equal size")
        top = max((f[-1] for f in fs if f), default=0)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"vertex {top} exceeds n={n}")
        members = frozenset(fs)
        if len(members) != len(fs):
            raise ValueError("duplicate faces")
        self.n = int(n)
        self.k = k
        self.faces: tuple[KSet, ...] = tuple(sorted(members))
        self._members = members

    @classmethod
    def _trusted(cls, faces: Iterable[KSet], n: int, k: int) -> "UniformHypergraph":
        obj = object.__new__(cls)
        members = frozenset(faces)
        obj.n, obj.k = n, k
        obj.faces = tuple(sorted(members))
        obj._members = members
        return obj

    def __contains__(self, sigma) -> bool:
        return tuple(sorted(sigma)) in self._members

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        return self.n == other.n and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.n, self.faces))

    def __repr__(self) -> str:
        return f"UniformHypergraph({format_family(self.faces)}, n={self.n})"

    def with_n(self, n: int) -> "UniformHypergraph":
        return UniformHypergraph(self.faces, n=n)


def format_family(faces: Iterable[KSet]) -> str:
    """Compact notation used in the literature, e.g. ``{12, 13, 24}``.

    Vertices above 9 are separated by commas to stay unambiguous.
    """
    parts = []
    for f in faces:
        if all(v < 10 for v in f):
            parts.append("".join(map(str, f)))
        else:
            parts.append("(" + ",".join(map(str, f)) + ")")
    return "{" + ", ".join(parts) + "}"


def is_shifted(S: UniformHypergraph) -> bool:
    """Decide shiftedness by checking every one-step down-replacement."""
    members = S._members
    for sigma in S.faces:
        for i in sigma:
            if i > 1 and i - 1 not in sigma:
                if replace_vertex(sigma, i, i - 1) not in members:
                    return False
    return True


def _transposition_pair(t) -> tuple[int, int]:
    # accepts a pair (i, j) or a Permutation that is a transposition
    if hasattr(t, "images"):
        moved = [i for i, x in enumerate(t.images, 1) if x != i]
        if len(moved) != 2:
            raise ValueError(f"{t} is not a transposition")
        return moved[0], moved[1]
    i, j = sorted(int(x) for x in t)
    if i == j or i < 1:
        raise ValueError(f"({i} {j}) is not a transposition")
    return i, j


def combinatorial_shift(S: UniformHypergraph, t) -> UniformHypergraph:
    """The Erdos-Ko-Rado compression of ``S`` along the transposition ``t``.

    A face containing the larger moved point but not the smaller one is
    replaced by its image unless that image is already in ``S``.
    """
    i, j = _transposition_pair(t)
    if j > S.n:
        raise ValueError(f"transposition ({i} {j}) exceeds n={S.n}")
    members = S._members
    out = []
    for sigma in S.faces:
        if j in sigma and i not in sigma:
            image = replace_vertex(sigma, j, i)
            out.append(sigma if image in members else image)
        else:
            out.append(sigma)
    return UniformHypergraph._trusted(out, S.n, S.k)


def family_lex_compare(S: Iterable[KSet], T: Iterable[KSet]) -> int:
    """Compare two equal-size families by their lex-sorted face sequences."""
    a = sorted(tuple(f) for f in S)
    b = sorted(tuple(f) for f in T)
    if len(a) != len(b):
        raise ValueError(f"cardinality mismatch: {len(a)} vs {len(b)}")
    if a and len(a[0]) != len(b[0]):
        raise ValueError("face size mismatch")
    return (a > b) - (a < b)


class SimplicialComplex:
    """A simplicial complex on [n] given by its facets."""

    __slots__ = ("n", "facets")

    def __init__(self, faces: Iterable[Iterable[int]], n: int | None = None):
        fs = {kset(f) for f in faces}
        fs.discard(())
        if not fs:
            raise ValueError("a complex needs at least one nonempty face")
        maximal = [f for f in fs if not any(f != g and set(f) <= set(g) for g in fs)]
        top = max(f[-1] for f in maximal)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"vertex {top} exceeds n={n}")
        self.n = int(n)
        self.facets: tuple[KSet, ...] = tuple(sorted(maximal, key=lambda f: (len(f), f)))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces(self, d: int) -> list[KSet]:
        """All d-dimensional faces in lex order."""
        out = set()
        for f in self.facets:
            if len(f) > d:
                out.update(combinations(f, d + 1))
        return sorted(out)

    def facet_dimensions(self) -> list[int]:
        return sorted({len(f) - 1 for f in self.facets})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(facets={format_family(self.facets)}, n={self.n})"


def skeleton(K: SimplicialComplex, d: int) -> UniformHypergraph:
    """The d-dimensional faces of ``K`` as a (d+1)-uniform hypergraph."""
    if d < 0 or d > K.dim:
        raise ValueError(f"dimension {d} outside 0..{K.dim}")
    return UniformHypergraph._trusted(K.faces(d), K.n, d + 1)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(K.faces(d)) for d in range(K.dim + 1))


def complex_from_levels(levels: Sequence[UniformHypergraph], n: int) -> SimplicialComplex:
    """The complex generated by the faces of all given levels."""
    faces = [f for S in levels for f in S]
    return SimplicialComplex(faces, n=n)
