import itertools
import math

import pytest

from gradedentropy.errors import ResourceLimitError, ValidationError
from gradedentropy.extremal import build_G, build_special
from gradedentropy.graph import Digraph
from gradedentropy.search import (_combinations_from, is_permutation_similar,
                                  max_spectral_radius, unrank_combination)
from gradedentropy.spectral import spectral_radius

from oracles import numpy_rho

TOL = 1e-9


def brute_max(k, d):
    """Float eigenvalues over every placement; oracle independent of the search."""
    best = 0.0
    for cells in itertools.combinations(range(d * d), k):
        m = [[0] * d for _ in range(d)]
        for c in cells:
            m[c // d][c % d] = 1
        best = max(best, numpy_rho(m))
    return best


class TestEnumeration:
    @pytest.mark.parametrize("n, k", [(6, 3), (9, 5), (4, 4), (5, 1)])
    def test_successors_match_itertools(self, n, k):
        expected = list(itertools.combinations(range(n), k))
        assert list(_combinations_from(0, len(expected), n, k)) == expected
        for rank, combo in enumerate(expected):
            assert unrank_combination(rank, n, k) == combo

    def test_split_ranges_cover_everything(self):
        expected = list(itertools.combinations(range(9), 4))
        parts = []
        for start in range(0, 126, 40):
            parts.extend(_combinations_from(start, min(start + 40, 126), 9, 4))
        assert parts == expected


class TestMaxSpectralRadius:
    def test_k4_d2(self):
        r = max_spectral_radius(4, 2, TOL)
        assert r.max_rho == 2.0
        assert [w.row_strings() for w in r.witnesses] == [["11", "11"]]

    def test_k5_d3(self):
        r = max_spectral_radius(5, 3, TOL)
        assert r.matrices_examined == 126
        assert r.max_rho == pytest.approx(2.0, abs=TOL)
        assert any(is_permutation_similar(w, build_G(2, 0, 1)) for w in r.witnesses)

    def test_k12_d4(self):
        r = max_spectral_radius(12, 4, TOL)
        assert r.matrices_examined == 1820
        assert r.max_rho == pytest.approx(1 + math.sqrt(5), abs=TOL)
        assert any(is_permutation_similar(w, build_special(3)) for w in r.witnesses)
        assert not any(is_permutation_similar(w, build_G(3, 1, 2)) for w in r.witnesses)

    @pytest.mark.parametrize("k, d", [(3, 2), (5, 3), (6, 3), (7, 3), (4, 3)])
    def test_matches_float_brute_force(self, k, d):
        assert max_spectral_radius(k, d, TOL).max_rho == pytest.approx(brute_max(k, d), abs=1e-7)

    @pytest.mark.parametrize("k, d", [(k, d) for d in (2, 3) for k in range(1, min(6, d * d) + 1)])
    def test_pruning_invisible(self, k, d):
        on = max_spectral_radius(k, d, TOL, prune=True)
        off = max_spectral_radius(k, d, TOL, prune=False)
        assert on.max_rho == off.max_rho
        assert off.pruned == 0
        # every unpruned witness is similar to a pruned one and vice versa
        for w in off.witnesses:
            assert any(is_permutation_similar(w, v) for v in on.witnesses)
        for v in on.witnesses:
            assert any(v == w for w in off.witnesses)

    @pytest.mark.parametrize("k", range(1, 10))
    def test_invariants(self, k):
        prev = 0.0
        for d in range(math.isqrt(k - 1) + 1 if k > 1 else 1, 4):
            if k > d * d:
                continue
            r = max_spectral_radius(k, d, TOL)
            assert r.max_rho <= math.sqrt(k) + TOL
            assert r.max_rho >= prev - TOL
            prev = r.max_rho
            for w in r.witnesses:
                assert w.edge_count == k
                assert abs(spectral_radius(w, TOL).value - r.max_rho) <= TOL
            m = math.isqrt(k)
            ell = k - m * m
            if 1 <= ell and m + 1 <= d:
                g = build_G(m, ell // 2, (ell + 1) // 2)
                assert r.max_rho >= spectral_radius(g, TOL).value - TOL

    def test_witnesses_sorted(self):
        r = max_spectral_radius(5, 3, TOL, prune=False)
        keys = ["".join(w.row_strings()) for w in r.witnesses]
        assert keys == sorted(keys)

    def test_parallel_is_deterministic(self):
        serial = max_spectral_radius(12, 4, TOL, workers=1)
        parallel = max_spectral_radius(12, 4, TOL, workers=3)
        assert serial == parallel
        assert serial.to_dict() == parallel.to_dict()

    def test_budget(self):
        with pytest.raises(ResourceLimitError, match="C\\(16, 8\\) = 12870"):
            max_spectral_radius(8, 4, TOL, budget=1000)

    @pytest.mark.parametrize("k, d", [(0, 2), (5, 2), (2, 0)])
    def test_invalid(self, k, d):
        with pytest.raises(ValidationError):
            max_spectral_radius(k, d, TOL)


class TestPermutationSimilar:
    def test_self(self):
        g = build_special(3)
        assert is_permutation_similar(g, g)

    def test_cycle_reversal(self):
        c = Digraph.cycle(3)
        assert is_permutation_similar(c, c.transpose())

    def test_different_out_degrees(self):
        assert not is_permutation_similar(build_G(2, 0, 1), build_G(2, 1, 0))

    def test_relabelled(self):
        g = build_G(3, 1, 2)
        assert is_permutation_similar(g, g.relabel([4, 2, 1, 3]))

    def test_same_degrees_not_similar(self):
        # two 3-cycles vs one 6-cycle: identical degree data
        two = Digraph.from_edges(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
        assert not is_permutation_similar(two, Digraph.cycle(6))

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            is_permutation_similar(Digraph.cycle(2), Digraph.cycle(3))
