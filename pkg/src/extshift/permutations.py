"""Permutations of [n] in one-line notation.

Products are read left to right: ``(v * w)(i) = w(v(i))``.  With the
permutation matrix ``P(w)[i, w(i)] = 1`` this makes ``P(v * w) = P(v) P(w)``,
and right multiplication by a simple transposition ``s_a`` swaps the values
``a`` and ``a + 1`` in the one-line word.  Under this convention a saturated
chain in the right weak order has nested inversion sets.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Sequence

Pair = tuple[int, int]


class Permutation:
    """An element of the symmetric group on [n], stored as ``(w(1), ..., w(n))``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({' '.join(map(str, self.images))})"

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def inversions(self) -> list[Pair]:
        return inversions(self)

    def length(self) -> int:
        return length(self)

    def inverse(self) -> "Permutation":
        return inverse(self)


def inversions(w: Permutation) -> list[Pair]:
    """Pairs ``(i, j)`` with ``i < j`` and ``w(i) > w(j)``, row-major ascending."""
    im = w.images
    n = len(im)
    return [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if im[i] > im[j]]


def length(w: Permutation) -> int:
    im = w.images
    n = len(im)
    return sum(1 for i in range(n) for j in range(i + 1, n) if im[i] > im[j])


def compose(v: Permutation, w: Permutation) -> Permutation:
    """The product ``v * w``: apply ``v`` first, then ``w``."""
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} vs S_{w.n}")
    wi = w.images
    return Permutation(wi[x - 1] for x in v.images)


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, x in enumerate(w.images, 1):
        out[x - 1] = i
    return Permutation(out)


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation(range(n, 0, -1))


def simple_transposition(n: int, a: int) -> Permutation:
    """``s_a``, exchanging ``a`` and ``a + 1``."""
    return transposition(n, a, a + 1)


def transposition(n: int, i: int, j: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"invalid transposition ({i} {j}) in S_{n}")
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[j - 1] = j, i
    return Permutation(imgs)


def _swap_values(images: tuple[int, ...], a: int) -> tuple[int, ...]:
    return tuple(a + 1 if x == a else a if x == a + 1 else x for x in images)


def _descents(images: tuple[int, ...]) -> list[int]:
    # values a for which multiplying by s_a on the right lowers the length
    pos = {x: i for i, x in enumerate(images)}
    return [a for a in range(1, len(images)) if pos[a + 1] < pos[a]]


@lru_cache(maxsize=None)
def _reduced_word_count(images: tuple[int, ...]) -> int:
    ds = _descents(images)
    if not ds:
        return 1
    return sum(_reduced_word_count(_swap_values(images, a)) for a in ds)


def right_weak_chain(w: Permutation, rng: random.Random | int | None = None) -> list[Permutation]:
    """A saturated chain ``id = v_0 < v_1 < ... < v_m = w`` in right weak order.

    Each step multiplies by a simple transposition on the right.  The chain
    is drawn uniformly among the reduced words of ``w`` by weighting each
    last letter with the number of reduced words of the remainder.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    chain = [w.images]
    cur = w.images
    while True:
        ds = _descents(cur)
        if not ds:
            break
        weights = [_reduced_word_count(_swap_values(cur, a)) for a in ds]
        a = rng.choices(ds, weights=weights)[0]
        cur = _swap_values(cur, a)
        chain.append(cur)
    return [Permutation(c) for c in reversed(chain)]


def permutation_matrix(w: Permutation, domain):
    """The matrix with ``P[i, w(i)] = 1`` over ``domain``."""
    from .matrix import Matrix

    n = w.n
    zero, one = domain.zero, domain.one
    rows = [[zero] * n for _ in range(n)]
    for i, x in enumerate(w.images):
        rows[i][x - 1] = one
    return Matrix(domain, rows)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse one-line notation, or the keywords ``id`` and ``w0`` (which need ``n``).

    Cycle notation is not accepted.
    """
    s = text.strip()
    if s in ("id", "w0"):
        if n is None:
            raise ValueError(f"'{s}' needs the ground-set size n")
        return Permutation.identity(n) if s == "id" else longest_element(n)
    tokens = s.replace(",", " ").replace("(", " ").replace(")", " ").split()
    try:
        w = Permutation(int(t) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None
    if n is not None and w.n < n:
        w = Permutation(w.images + tuple(range(w.n + 1, n + 1)))
    elif n is not None and w.n > n:
        raise ValueError(f"permutation of size {w.n} exceeds n={n}")
    return w


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations

    return [Permutation(p) for p in permutations(range(1, n + 1))]


def reduced_word(w: Permutation) -> Sequence[int]:
    """The lexicographically smallest reduced word, as a list of letters ``a``."""
    word = []
    cur = w.images
    while True:
        ds = _descents(cur)
        if not ds:
            break
        a = ds[-1]
        word.append(a)
        cur = _swap_values(cur, a)
    return word[::-1]
