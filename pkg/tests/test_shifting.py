import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extshift.exterior import build_U_numeric, random_unipotent
from extshift.fields import GF, QQ
from extshift.hypergraphs import (
    SimplicialComplex,
    UniformHypergraph,
    all_ksets,
    combinatorial_shift,
    f_vector,
    family_lex_compare,
    is_shifted,
    skeleton,
)
from extshift.matrix import Matrix
from extshift.permutations import (
    Permutation,
    all_permutations,
    longest_element,
    permutation_matrix,
    right_weak_chain,
    simple_transposition,
    transposition,
)
from extshift.polyring import PolyRing
from extshift.shifting import (
    FieldTooSmallError,
    ShiftError,
    check_candidate,
    delta_full,
    delta_generic,
    delta_las_vegas,
    delta_matrix,
    delta_monte_carlo,
    delta_partial,
    numeric_shift,
    scan_assignments,
    shift,
    shift_complex,
    shift_complex_detailed,
    verify_claimed,
    verify_shift,
    verify_shift_detailed,
)

from conftest import hypergraphs, random_hypergraph

H = UniformHypergraph
FOUR_CYCLE = Permutation([2, 3, 4, 1])
C4 = H([(1, 3), (1, 4), (2, 3), (2, 4)])
EX45 = H([(1, 2), (1, 4), (2, 3), (2, 6), (3, 5)])
T24 = transposition(6, 2, 4)
T25 = transposition(6, 2, 5)


def u_from(pairs, F=GF(2), w=FOUR_CYCLE):
    from extshift.permutations import inversions

    return build_U_numeric(w, {p: (1 if p in pairs else 0) for p in inversions(w)}, F)


class TestWorkedExample:
    def test_symbolic_partial_shift(self):
        assert delta_partial(C4, FOUR_CYCLE, GF(2)).family == H([(1, 2), (1, 3), (1, 4), (2, 4)])

    def test_u_prime_verifies(self):
        u2 = u_from({(2, 4), (3, 4)})
        assert numeric_shift(C4, FOUR_CYCLE, u2) == H([(1, 2), (1, 3), (1, 4), (2, 4)])
        assert verify_shift(C4, FOUR_CYCLE, u2)

    def test_u_does_not_verify(self):
        u = u_from({(3, 4)})
        v = verify_shift_detailed(C4, FOUR_CYCLE, u)
        assert not v.ok and not v.short_circuit
        assert set(v.pivots) == {(1, 2), (1, 3), (1, 4), (2, 4)}

    def test_u_shift_value(self):
        # recomputed from the displayed symbolic matrix with x14 = x24 = 0:
        # column 14 vanishes, so 14 cannot be a pivot
        u = u_from({(3, 4)})
        assert numeric_shift(C4, FOUR_CYCLE, u) == H([(1, 2), (1, 3), (2, 4), (3, 4)])

    def test_shift_with_x14_set(self):
        # the assignment that does produce {12, 13, 14, 34}
        u = u_from({(1, 4)})
        assert numeric_shift(C4, FOUR_CYCLE, u) == H([(1, 2), (1, 3), (1, 4), (3, 4)])
        assert not verify_shift(C4, FOUR_CYCLE, u)

    def test_verify_claimed(self):
        assert verify_claimed(C4, FOUR_CYCLE, H([(1, 2), (1, 3), (1, 4), (2, 4)]), GF(2))
        assert not verify_claimed(C4, FOUR_CYCLE, H([(1, 2), (1, 3), (1, 4), (3, 4)]), GF(2))
        assert verify_claimed(C4, Permutation.identity(4), C4)
        with pytest.raises(ValueError):
            verify_claimed(C4, FOUR_CYCLE, H([(1, 2)], n=4))


class TestSmallFieldExample:
    def test_partial_shift_by_2_4(self):
        assert delta_partial(EX45, T24, GF(2)).family == H([(1, 2), (1, 3), (2, 3), (2, 5), (2, 6)])

    def test_scan_2_4(self):
        s2 = scan_assignments(EX45, T24, GF(2))
        assert (s2.count, s2.total) == (0, 8)
        s4 = scan_assignments(EX45, T24, GF(4))
        assert (s4.count, s4.total) == (18, 64)
        assert len(s4.witnesses) == 5

    def test_partial_shift_by_2_5(self):
        # frozen regression values for the transposition (2 5)
        assert delta_partial(EX45, T25, GF(2)).family == H([(1, 2), (1, 3), (2, 3), (2, 4), (2, 6)])
        s2 = scan_assignments(EX45, T25, GF(2))
        assert (s2.count, s2.total) == (1, 32)

    def test_las_vegas_gives_up_over_gf2(self):
        with pytest.raises(FieldTooSmallError, match="field may be too small"):
            delta_las_vegas(EX45, T24, GF(2), samples=50, max_rounds=3, rng=1)

    def test_las_vegas_succeeds_over_gf4(self):
        r = delta_las_vegas(EX45, T24, GF(4), rng=1)
        assert r.certified
        assert r.family == delta_partial(EX45, T24, GF(2)).family

    def test_scan_needs_finite_field(self):
        with pytest.raises(ValueError):
            scan_assignments(EX45, T24, QQ)


class TestFullShift:
    def test_c4(self):
        for F in (QQ, GF(2)):
            for engine in ("eager", "lazy"):
                assert delta_full(C4, F, engine).family == H([(1, 2), (1, 3), (1, 4), (2, 3)])

    def test_initial_segment_is_fixed(self):
        for n, k, m in ((5, 2, 4), (5, 3, 7), (4, 1, 2)):
            S = H(all_ksets(n, k)[:m], n=n)
            assert delta_full(S).family == S

    def test_identity(self):
        S = random_hypergraph(random.Random(1), 5, 2)
        assert delta_partial(S, Permutation.identity(5)).family == S
        assert delta_matrix(S, Matrix.identity(QQ, 5)) == S

    def test_generic_matrix_agrees(self):
        assert delta_generic(C4).family == delta_full(C4).family

    def test_singular_matrix(self):
        with pytest.raises(ShiftError):
            delta_matrix(C4, Matrix.zeros(QQ, 4, 4))
        with pytest.raises(ValueError):
            delta_matrix(C4, Matrix.identity(QQ, 3))

    def test_small_graphs_agree_across_characteristics(self):
        # small graphs shift the same way in characteristic 0 and 3
        rng = random.Random(0)
        for _ in range(20):
            S = random_hypergraph(rng, 5, 2, rng.randint(1, 5))
            assert delta_full(S, QQ).family == delta_full(S, GF(3)).family

    def test_projective_plane_depends_on_characteristic(self):
        # 6-vertex RP^2: top-dimensional faces avoiding vertex 1 count the top
        # Betti number, which is 1 over GF(2) and 0 otherwise
        K = SimplicialComplex([(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
                               (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)])
        S = skeleton(K, 2)
        avoid = {F.spec: [f for f in delta_full(S, F).family if 1 not in f] for F in (QQ, GF(2), GF(3))}
        assert avoid == {"q": [], "2": [(2, 3, 4)], "3": []}

    @settings(max_examples=40)
    @given(hypergraphs(max_n=5))
    def test_shifted_and_cardinality(self, S):
        T = delta_full(S).family
        assert is_shifted(T)
        assert len(T) == len(S)
        assert family_lex_compare(T, S) <= 0


class TestVerification:
    @settings(max_examples=60)
    @given(hypergraphs(max_n=5), st.integers(0, 10**6))
    def test_verify_decides_correctly(self, S, seed):
        rng = random.Random(seed)
        w = rng.choice(all_permutations(S.n))
        F = rng.choice([GF(2), GF(3), GF(4)])
        u = random_unipotent(w, F, rng)
        truth = delta_partial(S, w, F.prime_field).family
        assert verify_shift(S, w, u) == (numeric_shift(S, w, u) == truth)

    @settings(max_examples=40)
    @given(hypergraphs(max_n=5), st.integers(0, 10**6))
    def test_verify_claimed_decides_correctly(self, S, seed):
        rng = random.Random(seed)
        w = rng.choice(all_permutations(S.n))
        truth = delta_partial(S, w).family
        candidates = [truth, S, random_hypergraph(rng, S.n, S.k, len(S))]
        for U in candidates:
            assert verify_claimed(S, w, U) == (U == truth)

    def test_short_circuit(self):
        S = H([(1, 2)], n=4)
        u = random_unipotent(FOUR_CYCLE, GF(2), random.Random(0))
        v = verify_shift_detailed(S, FOUR_CYCLE, u)
        assert v.ok and v.short_circuit

    def test_rejects_bad_u(self):
        with pytest.raises(ValueError):
            verify_shift(C4, FOUR_CYCLE, Matrix.zeros(GF(2), 4, 4))
        u = Matrix.identity(GF(2), 4)
        u.rows[0][1] = 1
        with pytest.raises(ValueError, match="not an inversion"):
            verify_shift(C4, FOUR_CYCLE, u)

    def test_strict_bound_is_needed_for_arbitrary_candidates(self):
        truth = delta_partial(C4, FOUR_CYCLE).family
        assert check_candidate(C4, FOUR_CYCLE, truth, QQ, strict=False).ok


class TestRandomized:
    def test_las_vegas_over_rationals(self):
        for seed in range(20):
            r = delta_las_vegas(C4, longest_element(4), QQ, samples=1, rng=seed)
            assert r.certified and r.trials == 1 and r.rounds == 1
            assert r.family == H([(1, 2), (1, 3), (1, 4), (2, 3)])

    def test_las_vegas_is_reproducible(self):
        a = delta_las_vegas(EX45, T24, GF(4), rng=7)
        b = delta_las_vegas(EX45, T24, GF(4), rng=7)
        assert (a.family, a.trials) == (b.family, b.trials)

    def test_las_vegas_bad_samples(self):
        with pytest.raises(ValueError):
            delta_las_vegas(C4, FOUR_CYCLE, GF(2), samples=0)

    def test_las_vegas_accepts_random_instance(self):
        r = delta_las_vegas(C4, FOUR_CYCLE, GF(8), rng=random.Random(3))
        assert r.family == delta_partial(C4, FOUR_CYCLE).family

    def test_timings(self):
        r = delta_las_vegas(C4, longest_element(4), GF(5), rng=0)
        t = r.timings
        assert t["phase_a"] + t["phase_b"] <= t["total"] + 1e-9

    @settings(max_examples=40)
    @given(hypergraphs(max_n=5), st.integers(0, 10**6))
    def test_monte_carlo_is_an_upper_bound(self, S, seed):
        rng = random.Random(seed)
        w = rng.choice(all_permutations(S.n))
        F = rng.choice([GF(2), GF(3), QQ])
        r = delta_monte_carlo(S, w, F, rng=seed)
        assert not r.certified
        assert family_lex_compare(delta_partial(S, w, F.prime_field).family, r.family) <= 0

    def test_monte_carlo_identity(self):
        assert delta_monte_carlo(C4, Permutation.identity(4), rng=0).family == C4


class TestMonotonicity:
    @settings(max_examples=30)
    @given(hypergraphs(max_n=5), st.integers(0, 10**6))
    def test_shifts_weakly_decrease_along_chains(self, S, seed):
        # Delta_R(id)(S) = S and Delta_R(w0)(S) is lex-below S, so along a
        # chain towards w0 the values can only go down
        chain = right_weak_chain(longest_element(S.n), random.Random(seed))
        values = [delta_partial(S, w).family for w in chain]
        for a, b in zip(values, values[1:]):
            assert family_lex_compare(a, b) >= 0

    def test_endpoints(self):
        S = H([(2,)], n=3)
        assert delta_partial(S, Permutation.identity(3)).family == S
        assert delta_full(S).family == H([(1,)], n=3)


class TestCombinatorial:
    @settings(max_examples=40)
    @given(hypergraphs(max_n=6), st.data())
    def test_adjacent_transpositions_agree(self, S, data):
        if S.n < 2:
            return
        a = data.draw(st.integers(1, S.n - 1))
        t = simple_transposition(S.n, a)
        assert combinatorial_shift(S, t) == delta_partial(S, t).family

    @settings(max_examples=40)
    @given(hypergraphs(max_n=6), st.data())
    def test_single_variable_realization(self, S, data):
        # (I + x e_ij) P(t) realizes the compression for every transposition
        if S.n < 2:
            return
        i = data.draw(st.integers(1, S.n - 1))
        j = data.draw(st.integers(i + 1, S.n))
        t = transposition(S.n, i, j)
        ring = PolyRing(QQ, [(i, j)])
        U = Matrix.identity(ring, S.n)
        U.rows[i - 1][j - 1] = ring.gen((i, j))
        assert delta_matrix(S, U @ permutation_matrix(t, ring)) == combinatorial_shift(S, t)

    def test_non_adjacent_transposition_can_differ(self):
        # in S_3 the transposition (1 3) is the longest element
        S = H([(2,)], n=3)
        t = transposition(3, 1, 3)
        assert combinatorial_shift(S, t) == S
        assert delta_partial(S, t).family == H([(1,)], n=3)

    def test_dispatch(self):
        t = transposition(4, 3, 4)
        assert shift(C4, t, "combinatorial").family == combinatorial_shift(C4, (3, 4))
        with pytest.raises(ValueError):
            shift(C4, FOUR_CYCLE, "combinatorial")


class TestDispatch:
    def test_methods(self):
        w0 = longest_element(4)
        expected = delta_full(C4).family
        for method in ("deterministic", "las-vegas", "generic"):
            assert shift(C4, None, method, QQ, rng=0).family == expected
        assert shift(C4, w0, "monte-carlo", QQ, rng=0).family == expected
        with pytest.raises(ValueError):
            shift(C4, None, "nope")
        with pytest.raises(ValueError):
            shift(C4, FOUR_CYCLE, "generic")

    def test_wrong_size_perm(self):
        with pytest.raises(ValueError):
            delta_partial(C4, Permutation.identity(3))


class TestComplexes:
    def test_hollow_triangle(self):
        K = SimplicialComplex([(1, 2), (1, 3), (2, 3)])
        L = shift_complex(K)
        assert f_vector(L) == f_vector(K)
        assert L == K  # already shifted

    def test_octahedron_boundary_f_vector(self):
        K = SimplicialComplex([
            (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5),
            (6, 2, 3), (6, 3, 4), (6, 4, 5), (6, 2, 5),
        ])
        for method in ("deterministic", "las-vegas", "monte-carlo"):
            res = shift_complex_detailed(K, method, QQ, rng=1)
            assert f_vector(res.complex) == f_vector(K)
            for d, r in res.levels.items():
                assert is_shifted(r.family)

    def test_lower_levels_are_shifted_too(self):
        # the edges of the shift are not the boundary of the shifted triangles
        K = SimplicialComplex([(1, 2, 5), (1, 3, 5), (1, 5, 6), (2, 4, 6)])
        res = shift_complex_detailed(K)
        assert sorted(res.levels) == [0, 1, 2]
        assert f_vector(res.complex) == (6, 10, 4)

    def test_random_complexes_preserve_f_vector(self):
        rng = random.Random(8)
        for _ in range(10):
            n = rng.randint(3, 6)
            tri = all_ksets(n, 3)
            facets = rng.sample(tri, rng.randint(1, min(4, len(tri)))) + rng.sample(all_ksets(n, 2), 2)
            K = SimplicialComplex(facets, n=n)
            L = shift_complex(K, "las-vegas", QQ, rng=rng.randint(0, 99))
            assert f_vector(L) == f_vector(K)
