"""Exterior algebraic shifting of uniform hypergraphs and simplicial complexes.

The partial shift of ``S`` by an invertible ``g`` is the set of lex-first
pivot columns of ``g^S`` (the rows of the k-th compound of ``g`` indexed by
``S``).  Shifting by the symbolic matrix ``R(w) = U(w) P(w)`` gives the partial
shift by a permutation ``w``; ``w = w0`` gives the full shift.

The Las Vegas method shifts by random numeric matrices ``u P(w)`` and then
certifies the answer: only the columns lex-below the largest face of the
candidate need to be reduced symbolically, and this is skipped entirely when
the candidate is a lex-initial segment.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterable

from .elimination import EliminationStats, ind
from .exterior import (
    bareiss_det,
    build_R,
    build_U_numeric,
    compound_submatrix,
    generic_matrix,
    random_unipotent,
)
from .fields import QQ, Field, PrimeField, RationalField
from .hypergraphs import (
    KSet,
    SimplicialComplex,
    UniformHypergraph,
    all_ksets,
    combinatorial_shift,
    family_lex_compare,
    skeleton,
)
from .matrix import Matrix
from .permutations import Permutation, inversions, longest_element, permutation_matrix

log = logging.getLogger(__name__)

METHODS = ("deterministic", "las-vegas", "monte-carlo", "generic", "combinatorial")


class ShiftError(RuntimeError):
    pass


class FieldTooSmallError(ShiftError):
    """No sampled matrix over the chosen field produced a certified shift."""

    def __init__(self, field: Field, rounds: int, samples: int):
        self.field = field
        self.rounds = rounds
        self.samples = samples
        super().__init__(
            f"no certified shift after {rounds} round(s) of {samples} sample(s) over {field}; "
            "field may be too small; try an extension"
        )


@dataclass
class ShiftResult:
    family: UniformHypergraph
    method: str
    certified: bool
    field: str = ""
    trials: int = 0
    rounds: int = 0
    short_circuit: bool = False
    timings: dict = dc_field(default_factory=dict)
    stats: EliminationStats | None = None


# --- helpers ---------------------------------------------------------------


def as_field(f) -> Field:
    """Accept a field, a characteristic (0 or a prime) or a field spec string."""
    if isinstance(f, Field):
        return f
    if isinstance(f, str):
        from .fields import parse_field

        return parse_field(f)
    if f is None or int(f) == 0:
        return QQ
    return PrimeField(int(f))


def base_field(E: Field) -> Field:
    """The prime field of ``E`` (QQ in characteristic zero)."""
    return E.prime_field


def _check_perm(S: UniformHypergraph, w: Permutation) -> None:
    if w.n != S.n:
        raise ValueError(f"permutation acts on {w.n} points but the hypergraph lives on n={S.n}")


def _seed_base(rng) -> int:
    if isinstance(rng, random.Random):
        return rng.getrandbits(63)
    if rng is None:
        return random.SystemRandom().getrandbits(63)
    return int(rng)


def _sample_rng(base: int, round_: int, index: int) -> random.Random:
    # independent stream per sample, so results do not depend on evaluation order
    return random.Random(f"{base}:{round_}:{index}")


def _pivot_family(S: UniformHypergraph, cols: list[KSet], pivots: Iterable[int]) -> UniformHypergraph:
    return UniformHypergraph._trusted([cols[j] for j in pivots], S.n, S.k)


# --- partial shifts ---------------------------------------------------------


def delta_matrix_detailed(S: UniformHypergraph, g: Matrix, engine: str = "lazy", check: bool = True):
    """``(Delta_g(S), EchelonResult)``."""
    if g.nrows != g.ncols or g.nrows != S.n:
        raise ValueError(f"need an {S.n}x{S.n} matrix, got {g.nrows}x{g.ncols}")
    if check and g.domain.is_field and g.domain.is_zero(bareiss_det(g)):
        raise ShiftError("matrix is singular")
    cm = compound_submatrix(g, S)
    res = ind(cm.matrix, engine)
    if len(res.pivot_columns) != len(S):
        raise ShiftError("compound submatrix does not have full row rank; is g invertible?")
    return _pivot_family(S, cm.col_sets, res.pivot_columns), res


def delta_matrix(S: UniformHypergraph, g: Matrix, engine: str = "lazy") -> UniformHypergraph:
    """The partial shift of ``S`` by an invertible matrix ``g``."""
    return delta_matrix_detailed(S, g, engine)[0]


def numeric_shift(S: UniformHypergraph, w: Permutation, u: Matrix, engine: str = "lazy") -> UniformHypergraph:
    """``Delta_{u P(w)}(S)`` for a numeric unipotent ``u``."""
    g = u @ permutation_matrix(w, u.domain)
    return delta_matrix_detailed(S, g, engine, check=False)[0]


def delta_partial(S: UniformHypergraph, w: Permutation, field=QQ, engine: str = "lazy") -> ShiftResult:
    """Deterministic partial shift by ``w`` over ``field[x_ij : (i,j) in inv w]``."""
    _check_perm(S, w)
    F = base_field(as_field(field))
    t0 = time.perf_counter()
    fam, res = delta_matrix_detailed(S, build_R(w, F), engine, check=False)
    dt = time.perf_counter() - t0
    return ShiftResult(
        fam, "deterministic", True, field=F.spec, stats=res.stats,
        timings={"total": dt, "phase_a": 0.0, "phase_b": dt},
    )


def delta_full(S: UniformHypergraph, field=QQ, engine: str = "lazy") -> ShiftResult:
    """The full shift, as the partial shift by the longest permutation."""
    return delta_partial(S, longest_element(S.n), field, engine)


def delta_generic(S: UniformHypergraph, field=QQ, engine: str = "lazy") -> ShiftResult:
    """The full shift by the matrix of ``n**2`` independent indeterminates."""
    F = base_field(as_field(field))
    t0 = time.perf_counter()
    fam, res = delta_matrix_detailed(S, generic_matrix(S.n, F), engine, check=False)
    dt = time.perf_counter() - t0
    return ShiftResult(
        fam, "generic", True, field=F.spec, stats=res.stats,
        timings={"total": dt, "phase_a": 0.0, "phase_b": dt},
    )


# --- verification ------------------------------------------------------------


@dataclass
class Verification:
    ok: bool
    short_circuit: bool
    candidate: UniformHypergraph
    pivots: tuple[KSet, ...] | None = None
    stats: EliminationStats | None = None


def check_candidate(
    S: UniformHypergraph,
    w: Permutation,
    candidate: UniformHypergraph,
    F: Field,
    engine: str = "lazy",
    strict: bool = True,
) -> Verification:
    """Decide ``candidate == Delta_{R(w)}(S)`` over ``F[x_ij]``.

    With ``strict=True`` the candidate must come from a numeric matrix
    ``u P(w)`` with ``u`` supported on the inversions of ``w``; then the true
    shift is lex-below it, so only columns strictly below its largest face are
    reduced.  Without that guarantee (``strict=False``) the largest face's
    column is included.
    """
    top = candidate.faces[-1]
    cols = [t for t in all_ksets(S.n, S.k) if (t < top if strict else t <= top)]
    if strict and len(candidate) == len(cols) + 1:
        return Verification(True, True, candidate)
    expected = set(candidate.faces[:-1]) if strict else set(candidate.faces)
    if not cols:
        return Verification(not expected, False, candidate, ())
    cm = compound_submatrix(build_R(w, F), S, cols)
    res = ind(cm.matrix, engine)
    found = tuple(cols[j] for j in res.pivot_columns)
    return Verification(set(found) == expected, False, candidate, found, res.stats)


def _check_unipotent(u: Matrix, w: Permutation) -> None:
    if not u.is_upper_unipotent():
        raise ValueError("u must be upper triangular unipotent")
    inv = set(inversions(w))
    D = u.domain
    for i, row in enumerate(u.rows, 1):
        for j, x in enumerate(row, 1):
            if i < j and not D.is_zero(x) and (i, j) not in inv:
                raise ValueError(f"u has support at ({i}, {j}), which is not an inversion of {w}")


def verify_shift(S: UniformHypergraph, w: Permutation, u: Matrix, engine: str = "lazy") -> bool:
    """True iff the numeric unipotent ``u`` realizes the partial shift by ``w``.

    The symbolic check runs over the prime field of ``u``'s field.
    """
    return verify_shift_detailed(S, w, u, engine).ok


def verify_shift_detailed(S: UniformHypergraph, w: Permutation, u: Matrix, engine: str = "lazy") -> Verification:
    _check_perm(S, w)
    if u.shape != (S.n, S.n):
        raise ValueError("u has the wrong size")
    _check_unipotent(u, w)
    candidate = numeric_shift(S, w, u, engine)
    return check_candidate(S, w, candidate, base_field(u.domain), engine, strict=True)


def verify_claimed(
    S: UniformHypergraph, w: Permutation, U: UniformHypergraph, field=QQ, engine: str = "lazy"
) -> bool:
    """True iff ``U`` is the partial shift of ``S`` by ``w`` (over ``field``)."""
    _check_perm(S, w)
    if len(U) != len(S):
        raise ValueError(f"claimed family has {len(U)} faces, expected {len(S)}")
    if U.k != S.k:
        raise ValueError("claimed family has the wrong face size")
    U = UniformHypergraph._trusted(U.faces, S.n, S.k)
    F = base_field(as_field(field))
    return check_candidate(S, w, U, F, engine, strict=False).ok


# --- randomized shifts ------------------------------------------------------


def default_samples(E: Field) -> int:
    return 1 if isinstance(E, RationalField) else 100


def delta_las_vegas(
    S: UniformHypergraph,
    w: Permutation,
    field=QQ,
    samples: int | None = None,
    max_rounds: int = 1,
    rng=None,
    engine: str = "lazy",
) -> ShiftResult:
    """Certified partial shift by sampling unipotent matrices over ``field``.

    Each round draws ``samples`` matrices, keeps the one whose shift is
    lex-smallest (earliest on ties) and certifies it.  Raises
    :class:`FieldTooSmallError` when ``max_rounds`` rounds all fail.
    """
    _check_perm(S, w)
    E = as_field(field)
    F = base_field(E)
    N = default_samples(E) if samples is None else int(samples)
    if N < 1:
        raise ValueError("need at least one sample per round")
    base = _seed_base(rng)
    phase_a = phase_b = 0.0
    t_start = time.perf_counter()
    for rnd in range(max_rounds):
        t0 = time.perf_counter()
        best, best_idx = None, -1
        for i in range(N):
            u = random_unipotent(w, E, _sample_rng(base, rnd, i))
            cand = numeric_shift(S, w, u, engine)
            if best is None or family_lex_compare(cand.faces, best.faces) < 0:
                best, best_idx = cand, i
        t1 = time.perf_counter()
        ver = check_candidate(S, w, best, F, engine, strict=True)
        t2 = time.perf_counter()
        phase_a += t1 - t0
        phase_b += t2 - t1
        if ver.ok:
            return ShiftResult(
                best, "las-vegas", True, field=E.spec, trials=best_idx + 1, rounds=rnd + 1,
                short_circuit=ver.short_circuit, stats=ver.stats,
                timings={"total": time.perf_counter() - t_start, "phase_a": phase_a, "phase_b": phase_b},
            )
        log.info("round %d: candidate %s not certified", rnd + 1, best)
    raise FieldTooSmallError(E, max_rounds, N)


def delta_monte_carlo(
    S: UniformHypergraph, w: Permutation, field=QQ, rng=None, engine: str = "lazy"
) -> ShiftResult:
    """Shift by one random unipotent matrix; lex-above or equal to the true shift."""
    _check_perm(S, w)
    E = as_field(field)
    t0 = time.perf_counter()
    u = random_unipotent(w, E, _sample_rng(_seed_base(rng), 0, 0))
    fam = numeric_shift(S, w, u, engine)
    dt = time.perf_counter() - t0
    return ShiftResult(
        fam, "monte-carlo", False, field=E.spec, trials=1, rounds=1,
        timings={"total": dt, "phase_a": dt, "phase_b": 0.0},
    )


def shift(
    S: UniformHypergraph,
    w: Permutation | None = None,
    method: str = "las-vegas",
    field=QQ,
    engine: str = "lazy",
    samples: int | None = None,
    max_rounds: int = 1,
    rng=None,
) -> ShiftResult:
    """Dispatch on ``method``; ``w`` defaults to the longest permutation."""
    if w is None:
        w = longest_element(S.n)
    if method == "deterministic":
        return delta_partial(S, w, field, engine)
    if method == "las-vegas":
        return delta_las_vegas(S, w, field, samples, max_rounds, rng, engine)
    if method == "monte-carlo":
        return delta_monte_carlo(S, w, field, rng, engine)
    if method == "generic":
        if w != longest_element(S.n):
            raise ValueError("the generic-matrix method only computes full shifts")
        return delta_generic(S, field, engine)
    if method == "combinatorial":
        moved = [i for i, x in enumerate(w.images, 1) if x != i]
        if len(moved) != 2:
            raise ValueError("combinatorial shifting needs a transposition")
        t0 = time.perf_counter()
        fam = combinatorial_shift(S, w)
        dt = time.perf_counter() - t0
        return ShiftResult(fam, "combinatorial", True, timings={"total": dt, "phase_a": 0.0, "phase_b": 0.0})
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


# --- simplicial complexes ---------------------------------------------------


@dataclass
class ComplexShift:
    complex: SimplicialComplex
    levels: dict[int, ShiftResult]


def shift_complex_detailed(
    K: SimplicialComplex,
    method: str = "deterministic",
    field=QQ,
    w: Permutation | None = None,
    engine: str = "lazy",
    samples: int | None = None,
    max_rounds: int = 1,
    rng=None,
) -> ComplexShift:
    """Shift every level of ``K`` separately and collect the results.

    All levels are needed: the shift of a lower level is usually not
    generated by the boundaries of the shifted faces above it.  Monte Carlo uses one random matrix for all levels; the certified methods
    produce the unique partial shift of each level independently.
    """
    if w is None:
        w = longest_element(K.n)
    if w.n != K.n:
        raise ValueError("permutation size does not match the complex")
    dims = range(K.dim + 1)
    levels: dict[int, ShiftResult] = {}
    if method == "monte-carlo":
        E = as_field(field)
        u = random_unipotent(w, E, _sample_rng(_seed_base(rng), 0, 0))
        for d in dims:
            S = skeleton(K, d)
            t0 = time.perf_counter()
            fam = numeric_shift(S, w, u, engine)
            dt = time.perf_counter() - t0
            levels[d] = ShiftResult(fam, "monte-carlo", False, field=E.spec, trials=1, rounds=1,
                                    timings={"total": dt, "phase_a": dt, "phase_b": 0.0})
    else:
        base = _seed_base(rng) if method == "las-vegas" else 0
        for d in dims:
            levels[d] = shift(skeleton(K, d), w, method, field, engine, samples, max_rounds, base + d)
    out = SimplicialComplex([f for r in levels.values() for f in r.family], n=K.n)
    for d, r in levels.items():
        if set(out.faces(d)) != set(r.family.faces):
            raise ShiftError(f"shifted levels are inconsistent in dimension {d}")
    return ComplexShift(out, levels)


def shift_complex(K: SimplicialComplex, method: str = "deterministic", field=QQ, **kwargs) -> SimplicialComplex:
    return shift_complex_detailed(K, method, field, **kwargs).complex


# --- exhaustive genericity scan --------------------------------------------


@dataclass
class GenericityScan:
    target: UniformHypergraph
    count: int
    total: int
    witnesses: list[dict]


def scan_assignments(
    S: UniformHypergraph, w: Permutation, field, engine: str = "lazy", keep: int = 5
) -> GenericityScan:
    """Count the ``v`` in ``field^{inv w}`` with ``Delta_{U(w)(v) P(w)}(S)`` equal
    to the symbolic partial shift."""
    _check_perm(S, w)
    E = as_field(field)
    if E.order is None:
        raise ValueError("exhaustive scan needs a finite field")
    target = delta_partial(S, w, base_field(E), engine).family
    inv = inversions(w)
    count, total, witnesses = 0, 0, []
    P = permutation_matrix(w, E)
    for values in product(range(E.order), repeat=len(inv)):
        v = dict(zip(inv, values))
        g = build_U_numeric(w, v, E) @ P
        total += 1
        if delta_matrix_detailed(S, g, engine, check=False)[0] == target:
            count += 1
            if len(witnesses) < keep:
                witnesses.append(v)
    return GenericityScan(target, count, total, witnesses)
