from fractions import Fraction

import pytest

from helpers import free, triangle, uniform, worked_bipartite
from matroidlab.bruteforce import (
    EnumerationConfig,
    brute_max_common_independent,
    brute_max_matching,
    brute_max_weight_basis,
    brute_max_weight_independent,
    brute_min_rank_sum,
    brute_rank_quotient,
    brute_spanning_forests,
    brute_spanning_trees_at,
    enumerate_systems,
)
from matroidlab.core import ExplicitSetSystem, rank_quotient
from matroidlab.errors import ContractError, InputError
from matroidlab.intersect import DoubleMatroid

S = frozenset


def count(n, kind="independence_systems"):
    return sum(1 for _ in enumerate_systems(EnumerationConfig(n, kind)))


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,kind,expected",
        [
            (0, "independence_systems", 1),
            (1, "independence_systems", 2),
            (2, "independence_systems", 5),
            (3, "independence_systems", 19),
            (2, "matroids", 5),
            (3, "matroids", 16),
            (2, "all", 16),
            (3, "all", 256),
        ],
    )
    def test_counts(self, n, kind, expected):
        # independence systems on n labelled elements are the downsets of the
        # boolean lattice that contain the empty set; all families: 2^(2^n)
        assert count(n, kind) == expected

    def test_n1_families(self):
        got = [s.family for s in enumerate_systems(EnumerationConfig(1))]
        assert got == [((),), ((), ("a",))]

    @pytest.mark.parametrize("cfg", [(-1,), (6,), (5, "all"), (5, "greedoids"), (2, "weird")])
    def test_bounds(self, cfg):
        with pytest.raises(InputError):
            EnumerationConfig(*cfg)

    def test_deterministic_and_unique(self):
        a = list(enumerate_systems(EnumerationConfig(3, "greedoids")))
        b = list(enumerate_systems(EnumerationConfig(3, "greedoids")))
        assert a == b and len(set(a)) == len(a)

    def test_inclusion_chain(self):
        for n in range(4):
            mats = set(enumerate_systems(EnumerationConfig(n, "matroids")))
            ind = set(enumerate_systems(EnumerationConfig(n)))
            greed = set(enumerate_systems(EnumerationConfig(n, "greedoids")))
            anti = set(enumerate_systems(EnumerationConfig(n, "antimatroids")))
            every = set(enumerate_systems(EnumerationConfig(n, "all")))
            assert mats <= ind <= every
            assert mats <= greed <= every
            assert anti <= greed


class TestBruteOracles:
    def test_weighted(self, worked):
        cost = {"1": 3, "2": 2, "3": 2}
        assert brute_max_weight_independent(worked, cost) == (S({"2", "3"}), Fraction(4))
        assert brute_max_weight_basis(worked, {"1": 3, "2": 1, "3": 1}) == (S({"1"}), Fraction(3))

    def test_ties_prefer_small_then_lex(self, worked):
        assert brute_max_weight_independent(worked, {"1": 0, "2": 0, "3": 0}) == (S(), 0)
        assert brute_max_weight_basis(worked, {"1": 2, "2": 1, "3": 1}) == (S({"1"}), 2)

    def test_rank_quotient(self, worked):
        assert brute_rank_quotient(worked) == Fraction(1, 2)
        assert brute_rank_quotient(uniform(2, "abc")) == 1

    def test_rank_quotient_rejects(self):
        with pytest.raises(ContractError):
            brute_rank_quotient(ExplicitSetSystem(("a", "b"), [(), ("a", "b")]))

    def test_rank_quotient_agrees_with_tables(self):
        for n in range(5):
            for s in enumerate_systems(EnumerationConfig(n)):
                assert brute_rank_quotient(s) == rank_quotient(s)

    def test_common_independent(self):
        u = uniform(1, "ab")
        assert brute_max_common_independent(DoubleMatroid(u, u)) == (S("a"), 1)

    def test_min_rank_sum_degenerate(self):
        only_empty = ExplicitSetSystem(("a",), [()])
        assert brute_min_rank_sum(DoubleMatroid(only_empty, free("a"))) == (S("a"), 0)
        assert brute_max_common_independent(DoubleMatroid(only_empty, free("a"))) == (S(), 0)

    def test_spanning(self):
        assert len(brute_spanning_forests(triangle())) == 3
        assert brute_spanning_trees_at(triangle(), "u") == brute_spanning_forests(triangle())

    def test_matching(self):
        assert brute_max_matching(worked_bipartite()) == (S({"l1r2", "l2r1"}), 2)

    def test_size_limit(self):
        big = uniform(1, [f"e{i:02d}" for i in range(13)])
        with pytest.raises(InputError):
            brute_rank_quotient(big)
