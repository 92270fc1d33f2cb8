import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extshift.hypergraphs import (
    SimplicialComplex,
    UniformHypergraph,
    all_ksets,
    combinatorial_shift,
    complex_from_levels,
    dominates_leq,
    f_vector,
    family_lex_compare,
    format_family,
    is_shifted,
    kset,
    lex_compare,
    replace_vertex,
    skeleton,
)

from conftest import hypergraphs


def brute_shifted(S):
    # closed downward under domination, checked against every k-set
    members = set(S.faces)
    return all(
        rho in members
        for sigma in S.faces
        for rho in all_ksets(S.n, S.k)
        if dominates_leq(rho, sigma)
    )


def gen_lex_leq(a, b):
    # glossary definition: min of the symmetric difference lies in a
    d = set(a) ^ set(b)
    return not d or min(d) in a


class TestOrders:
    def test_lex_examples(self):
        assert lex_compare((1, 2), (1, 3)) == -1
        assert lex_compare((2, 4), (3, 4)) == -1
        assert lex_compare((1, 4), (2, 3)) == -1
        assert lex_compare((1, 3), (1, 3)) == 0

    @given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.data())
    def test_lex_matches_symmetric_difference(self, nk, data):
        n, k = nk
        a = data.draw(st.sampled_from(all_ksets(n, k)))
        b = data.draw(st.sampled_from(all_ksets(n, k)))
        assert (lex_compare(a, b) <= 0) == gen_lex_leq(a, b)

    def test_domination(self):
        assert dominates_leq((1, 3), (2, 4))
        assert not dominates_leq((1, 4), (2, 3))
        assert dominates_leq((2, 5), (2, 5))
        with pytest.raises(ValueError):
            dominates_leq((1,), (1, 2))

    def test_domination_refined_by_lex(self):
        for a, b in itertools.product(all_ksets(6, 3), repeat=2):
            if dominates_leq(a, b):
                assert lex_compare(a, b) <= 0

    def test_all_ksets_is_lex_sorted(self):
        sets = all_ksets(5, 2)
        assert len(sets) == 10
        assert sets == sorted(sets)
        assert sets[0] == (1, 2) and sets[-1] == (4, 5)


class TestReplaceVertex:
    def test_examples(self):
        assert replace_vertex((2, 4), 2, 1) == (1, 4)
        assert replace_vertex((2, 4), 3, 1) == (2, 4)
        assert replace_vertex((2, 4), 4, 4) == (2, 4)

    def test_duplicate(self):
        with pytest.raises(ValueError):
            replace_vertex((1, 2), 2, 1)


class TestHypergraph:
    def test_construction(self):
        S = UniformHypergraph([(3, 1), [2, 1]])
        assert S.faces == ((1, 2), (1, 3))
        assert S.n == 3 and S.k == 2
        assert (1, 3) in S and [3, 1] in S
        assert len(S) == 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            UniformHypergraph([(1, 2), (1, 2, 3)])
        with pytest.raises(ValueError):
            UniformHypergraph([(1, 1)])
        with pytest.raises(ValueError):
            UniformHypergraph([(1, 5)], n=4)
        with pytest.raises(ValueError):
            UniformHypergraph([(0, 1)])
        with pytest.raises(ValueError):
            UniformHypergraph([])

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            UniformHypergraph([(1, 2), (2, 1)])

    def test_kset(self):
        assert kset([3, 1, 2]) == (1, 2, 3)
        with pytest.raises(ValueError):
            kset([1, 2], n=1)

    def test_format(self):
        assert format_family([(1, 2), (2, 4)]) == "{12, 24}"
        assert format_family([(1, 10)]) == "{(1,10)}"


class TestIsShifted:
    def test_examples(self):
        assert is_shifted(UniformHypergraph([(1, 2), (1, 3), (1, 4), (2, 3)]))
        assert not is_shifted(UniformHypergraph([(2, 4)], n=4))
        assert not is_shifted(UniformHypergraph([(1, 3), (1, 4), (2, 3), (2, 4)]))
        assert is_shifted(UniformHypergraph([(1,)], n=5))

    def test_exhaustive_small(self):
        # every family of 2-subsets of [4] and 3-subsets of [5] of size <= 4
        for n, k in ((4, 2), (5, 3), (4, 1)):
            pool = all_ksets(n, k)
            for size in range(1, min(len(pool), 4) + 1):
                for faces in itertools.combinations(pool, size):
                    S = UniformHypergraph(faces, n=n)
                    assert is_shifted(S) == brute_shifted(S), S

    @given(hypergraphs())
    def test_matches_brute_force(self, S):
        assert is_shifted(S) == brute_shifted(S)


class TestCombinatorialShift:
    def test_examples(self):
        S = UniformHypergraph([(1, 3), (2, 3)])
        assert combinatorial_shift(S, (1, 2)) == S
        S = UniformHypergraph([(2, 3)], n=3)
        assert combinatorial_shift(S, (1, 2)).faces == ((1, 3),)

    @given(hypergraphs(), st.data())
    def test_cardinality_and_idempotence(self, S, data):
        if S.n < 2:
            return
        i = data.draw(st.integers(1, S.n - 1))
        j = data.draw(st.integers(i + 1, S.n))
        T = combinatorial_shift(S, (i, j))
        assert len(T) == len(S)
        assert combinatorial_shift(T, (i, j)) == T
        assert family_lex_compare(T, S) <= 0

    def test_shifted_families_are_fixed(self):
        S = UniformHypergraph([(1, 2), (1, 3), (1, 4), (2, 3)])
        for i, j in itertools.combinations(range(1, 5), 2):
            assert combinatorial_shift(S, (i, j)) == S

    def test_repeated_compression_reaches_shifted(self):
        rng = random.Random(3)
        for _ in range(30):
            pool = all_ksets(6, 3)
            S = UniformHypergraph(rng.sample(pool, rng.randint(1, 12)), n=6)
            while True:
                T = S
                for i, j in itertools.combinations(range(1, 7), 2):
                    T = combinatorial_shift(T, (i, j))
                if T == S:
                    break
                S = T
            assert is_shifted(S)

    def test_linear_operation_count(self):
        # one membership probe per face: time is O(|S|)
        class Counting(set):
            probes = 0

            def __contains__(self, x):
                Counting.probes += 1
                return super().__contains__(x)

        counts = []
        for size in (10, 20, 40, 80):
            S = UniformHypergraph(all_ksets(12, 3)[:size], n=12)
            S._members = Counting(S._members)
            Counting.probes = 0
            combinatorial_shift(S, (1, 12))
            counts.append(Counting.probes)
        assert all(c <= s for c, s in zip(counts, (10, 20, 40, 80)))

    def test_bad_pair(self):
        with pytest.raises(ValueError):
            combinatorial_shift(UniformHypergraph([(1, 2)]), (1, 5))


class TestFamilyLex:
    def test_examples(self):
        assert family_lex_compare([(1, 2), (1, 3)], [(1, 2), (1, 3)]) == 0
        assert family_lex_compare([(1, 2), (1, 3), (1, 4), (2, 4)], [(1, 2), (1, 3), (1, 4), (3, 4)]) == -1
        assert family_lex_compare([(1, 2), (2, 3)], [(1, 3), (1, 4)]) == -1

    def test_mismatch(self):
        with pytest.raises(ValueError):
            family_lex_compare([(1, 2)], [(1, 2), (1, 3)])

    @given(hypergraphs(max_n=5))
    def test_lex_initial_segment_is_minimum(self, S):
        init = all_ksets(S.n, S.k)[: len(S)]
        assert family_lex_compare(init, S) <= 0


class TestComplexes:
    def test_facets_and_skeleta(self):
        K = SimplicialComplex([(1, 2, 3), (3, 4), (2, 3)])
        assert K.facets == ((3, 4), (1, 2, 3))
        assert K.dim == 2 and not K.is_pure()
        assert skeleton(K, 1).faces == ((1, 2), (1, 3), (2, 3), (3, 4))
        assert f_vector(K) == (4, 4, 1)

    def test_hollow_triangle(self):
        K = SimplicialComplex([(1, 2), (1, 3), (2, 3)])
        assert f_vector(K) == (3, 3)
        assert K.is_pure()

    def test_from_levels(self):
        K = complex_from_levels([UniformHypergraph([(1, 2), (1, 3)], n=3)], n=3)
        assert f_vector(K) == (3, 2)

    def test_skeleton_range(self):
        with pytest.raises(ValueError):
            skeleton(SimplicialComplex([(1, 2)]), 2)
