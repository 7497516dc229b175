"""Oracle-level tests for the four matroid classes.

Derived expectations are computed here by independent brute force (subset
enumeration over small ground sets), never by the operations under test.
"""

import random
from itertools import chain, combinations

import pytest

from rainbowmat import Matroid, MatroidError
from rainbowmat.verify import random_small_matroid


def powerset(iterable):
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


TRIANGLE = Matroid.graphic(3, [(0, 1), (1, 2), (2, 0)])


def brute_min_spanning_subsets(matroid, i, x):
    """All minimal subsets of i spanning x, by exhaustive search."""
    minimal = []
    for size in range(len(i) + 1):
        for combo in combinations(sorted(i), size):
            s = frozenset(combo)
            if matroid.spans(s, x) and not any(m <= s for m in minimal):
                minimal.append(s)
    return minimal


class TestIndependent:
    def test_uniform_over_rank(self):
        m = Matroid.uniform(2, 4)
        assert not m.independent({0, 1, 2})
        assert m.independent({0, 1})

    def test_graphic_cycle_vs_forest(self):
        assert not TRIANGLE.independent({0, 1, 2})
        assert TRIANGLE.independent({0, 1})

    def test_linear_three_vectors_in_dim_two(self):
        m = Matroid.linear(2, [[1, 0], [0, 1], [1, 1]])
        assert not m.independent({0, 1, 2})
        assert m.independent({0, 2})

    def test_partition_capacity(self):
        m = Matroid.partition([[0, 1], [2, 3]], [1, 2], 4)
        assert m.independent({0, 2, 3})
        assert not m.independent({0, 1})

    def test_out_of_range_rejected(self):
        with pytest.raises(MatroidError):
            Matroid.uniform(2, 4).independent({0, 7})


class TestRank:
    def test_uniform_caps(self):
        assert Matroid.uniform(2, 4).rank({0, 1, 2, 3}) == 2

    def test_triangle_spanning_tree(self):
        assert TRIANGLE.rank({0, 1, 2}) == 2

    def test_empty(self):
        for m in (TRIANGLE, Matroid.uniform(2, 4),
                  Matroid.linear(3, [[1], [2]])):
            assert m.rank(frozenset()) == 0

    def test_rank_monotone_and_submodular_exhaustive(self):
        rng = random.Random(5)
        for _ in range(15):
            m = random_small_matroid(rng, max_ground=6)
            subsets = [frozenset(s) for s in powerset(range(m.ground_size))]
            ranks = {s: m.rank(s) for s in subsets}
            for a in subsets:
                for b in subsets:
                    if a <= b:
                        assert ranks[a] <= ranks[b]
                    assert ranks[a | b] + ranks[a & b] <= ranks[a] + ranks[b]


class TestSpans:
    def test_uniform_full_rank_spans_everything(self):
        assert Matroid.uniform(2, 4).spans({0, 1}, 2)

    def test_triangle_two_edges_not_spanned(self):
        assert not TRIANGLE.spans({0}, 1)
        assert TRIANGLE.spans({0, 1}, 2)

    def test_partition_block_mate(self):
        m = Matroid.partition([[0, 1]], [1], 2)
        assert m.spans({0}, 1)

    def test_member_is_spanned(self):
        assert TRIANGLE.spans({0}, 0)


class TestCircuitSupport:
    def test_uniform_full_base(self):
        assert Matroid.uniform(2, 4).circuit_support({0, 1}, 2) == {0, 1}

    def test_partition_block_mate_only(self):
        m = Matroid.partition([[0, 1], [2]], [1, 1], 3)
        assert m.circuit_support({0, 2}, 1) == {0}

    def test_graphic_chord_derived_by_brute_force(self):
        # path 0-1-2-3 with chord (0,2); the chord closes the cycle {0,1}
        m = Matroid.graphic(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
        i = frozenset({0, 1, 2})
        minimal = brute_min_spanning_subsets(m, i, 3)
        assert minimal == [frozenset({0, 1})]
        assert m.circuit_support(i, 3) == {0, 1}

    def test_matches_unique_minimal_spanning_subset(self):
        rng = random.Random(11)
        done = 0
        while done < 40:
            m = random_small_matroid(rng, max_ground=7)
            i = m.basis_of(range(m.ground_size))
            xs = [x for x in range(m.ground_size)
                  if x not in i and m.spans(i, x)]
            if not xs:
                continue
            x = rng.choice(xs)
            minimal = brute_min_spanning_subsets(m, i, x)
            assert len(minimal) == 1
            assert m.circuit_support(i, x) == minimal[0]
            done += 1

    def test_precondition_errors(self):
        with pytest.raises(MatroidError):
            TRIANGLE.circuit_support({0}, 1)  # not spanned
        with pytest.raises(MatroidError):
            TRIANGLE.circuit_support({0, 1, 2}, 0)  # base dependent / x inside


class TestAugment:
    def test_uniform_ascending_order(self):
        assert Matroid.uniform(3, 5).augment({0}, {1, 2, 3}) == {1, 2}

    def test_triangle_ascending_order(self):
        assert TRIANGLE.augment({0}, {1, 2}) == {1}

    def test_linear_derived(self):
        m = Matroid.linear(2, [[1, 0], [0, 1], [1, 1]])
        added = m.augment({2}, {0, 1})
        assert added == {0}
        assert m.independent({2, 0})
        assert len(added) == 1

    def test_precondition(self):
        with pytest.raises(MatroidError):
            TRIANGLE.augment({0, 1}, {2})

    def test_fact4_randomized(self):
        rng = random.Random(3)
        done = 0
        while done < 60:
            m = random_small_matroid(rng)
            i = m.basis_of(rng.sample(range(m.ground_size),
                                      rng.randint(0, m.ground_size)))
            j = m.basis_of(range(m.ground_size))
            if len(i) >= len(j):
                continue
            added = m.augment(i, j)
            assert added <= j - i
            assert m.independent(i | added)
            assert len(i | added) == len(j)
            done += 1


class TestMinRemoval:
    def test_uniform_rank_filled(self):
        assert Matroid.uniform(2, 4).min_removal({0, 1}, {2, 3}) == {0, 1}

    def test_empty_add(self):
        assert TRIANGLE.min_removal({0, 1}, frozenset()) == frozenset()

    def test_triangle_derived_by_enumeration(self):
        # greedy keeps edge 0 (ascending scan), so edge 1 is removed; brute
        # enumeration confirms one removal is the minimum
        m = TRIANGLE
        base, add = frozenset({0, 1}), frozenset({2})
        candidates = [frozenset(k) for k in powerset(sorted(base))
                      if m.independent((base - frozenset(k)) | add)]
        assert min(len(k) for k in candidates) == 1
        assert frozenset({1}) in candidates
        assert m.min_removal(base, add) == {1}

    def test_minimality_randomized(self):
        rng = random.Random(17)
        done = 0
        while done < 40:
            m = random_small_matroid(rng, max_ground=7)
            base = m.basis_of(rng.sample(range(m.ground_size),
                                         rng.randint(0, m.ground_size)))
            add = m.basis_of(rng.sample(range(m.ground_size),
                                        rng.randint(0, m.ground_size)))
            if not m.independent(add):
                continue
            k = m.min_removal(base, add)
            assert k <= base
            assert m.independent((base - k) | add)
            sizes = [len(kk) for kk in map(frozenset, powerset(sorted(base)))
                     if m.independent((base - kk) | add)]
            assert len(k) == min(sizes)
            done += 1


class TestAxioms:
    def test_hereditary_and_augmentation_exhaustive(self):
        rng = random.Random(23)
        for _ in range(12):
            m = random_small_matroid(rng, max_ground=6)
            indep = [frozenset(s) for s in powerset(range(m.ground_size))
                     if m.independent(s)]
            indep_set = set(indep)
            for a in indep:
                for e in a:
                    assert a - {e} in indep_set  # hereditary
            for a in indep:
                for b in indep:
                    if len(b) > len(a):
                        assert any(a | {x} in indep_set for x in b - a)

    def test_validation_errors(self):
        with pytest.raises(MatroidError):
            Matroid.partition([[0, 1], [1, 2]], [1, 1], 3)  # overlap
        with pytest.raises(MatroidError):
            Matroid.partition([[0]], [1], 2)  # not covering
        with pytest.raises(MatroidError):
            Matroid.linear(4, [[1], [2]])  # 4 not prime
        with pytest.raises(MatroidError):
            Matroid.graphic(2, [(0, 5)])  # endpoint out of range
