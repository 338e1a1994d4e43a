import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import free, uniform
from matroidlab.bruteforce import EnumerationConfig, brute_max_weight_independent, enumerate_systems
from matroidlab.core import ExplicitSetSystem, OracleSystem, bases_of, rank_quotient
from matroidlab.errors import ContractError, InputError
from matroidlab.greedy import best_in_greedy, set_cost, sort_desc, tightness_witness


def small_systems(n_max=3):
    for n in range(n_max + 1):
        yield from enumerate_systems(EnumerationConfig(n))


def grids(carrier, values=range(4)):
    for ws in itertools.product(values, repeat=len(carrier)):
        yield dict(zip(carrier, ws))


class TestSortDesc:
    def test_basic(self):
        assert sort_desc({"a": 1, "b": 3, "c": 2}, ["a", "b", "c"]) == ("b", "c", "a")

    def test_stable_on_ties(self):
        assert sort_desc({"x": 5, "y": 5, "z": 5}, ["x", "y", "z"]) == ("x", "y", "z")
        assert sort_desc({"1": 1, "2": 1, "3": 1}, ["1", "2", "3"]) == ("1", "2", "3")

    def test_rejects_duplicates(self):
        with pytest.raises(InputError):
            sort_desc({"a": 1, "b": 1}, ["a", "a", "b"])

    def test_rejects_missing(self):
        with pytest.raises(InputError):
            sort_desc({"a": 1, "b": 1}, ["a"])

    @given(st.lists(st.integers(0, 3), min_size=0, max_size=8), st.randoms(use_true_random=False))
    def test_permutation_nonincreasing_stable(self, ws, rnd):
        names = [f"e{i}" for i in range(len(ws))]
        cost = dict(zip(names, ws))
        order = names[:]
        rnd.shuffle(order)
        out = sort_desc(cost, order)
        assert sorted(out) == sorted(names)
        assert all(cost[a] >= cost[b] for a, b in zip(out, out[1:]))
        pos = {e: i for i, e in enumerate(order)}
        for a, b in zip(out, out[1:]):
            if cost[a] == cost[b]:
                assert pos[a] < pos[b]


class TestBestInGreedy:
    def test_worked_unit_costs(self, worked):
        run = best_in_greedy(worked, {"1": 1, "2": 1, "3": 1}, ["1", "2", "3"])
        assert run.result == {"1"}
        assert run.weight({"1": 1, "2": 1, "3": 1}) == 1
        # equality case of the cost bound: 1 = 1/2 * 2
        assert run.weight({"1": 1, "2": 1, "3": 1}) == rank_quotient(worked) * 2

    def test_empty_carrier(self):
        assert best_in_greedy(ExplicitSetSystem((), [()]), {}).result == frozenset()

    def test_uniform_rank_two(self):
        u = uniform(2, "abc")
        cost = {"a": 3, "b": 2, "c": 1}
        run = best_in_greedy(u, cost)
        assert run.result == {"a", "b"} and run.weight(cost) == 5
        assert brute_max_weight_independent(u, cost) == (frozenset("ab"), Fraction(5))

    def test_trace(self, worked):
        run = best_in_greedy(worked, {"1": 0, "2": 2, "3": 1})
        assert run.sorted_order == ("2", "3", "1")
        assert run.steps == (("2", True), ("3", True), ("1", False))
        assert run.prefix(2) == (frozenset("23"), frozenset("23"))

    def test_negative_cost(self, worked):
        with pytest.raises(InputError):
            best_in_greedy(worked, {"1": -1, "2": 1, "3": 1})

    def test_float_cost(self, worked):
        with pytest.raises(InputError):
            best_in_greedy(worked, {"1": 0.5, "2": 1, "3": 1})

    def test_missing_cost(self, worked):
        with pytest.raises(InputError):
            best_in_greedy(worked, {"1": 1})

    def test_bad_order(self, worked):
        with pytest.raises(InputError):
            best_in_greedy(worked, {"1": 1, "2": 1, "3": 1}, ["1", "2"])

    def test_weak_needs_weak_oracle(self):
        o = OracleSystem(("a",), lambda X: True)
        with pytest.raises(ContractError):
            best_in_greedy(o, {"a": 1}, weak=True)

    def test_run_invariants_and_weak_equivalence(self):
        for s in small_systems(3):
            for cost in grids(s.carrier, range(3)):
                for order in itertools.permutations(s.carrier):
                    run = best_in_greedy(s, cost, order)
                    assert run.result == {e for e, ok in run.steps if ok}
                    assert sorted(run.sorted_order) == list(s.carrier)
                    assert all(cost[a] >= cost[b] for a, b in zip(run.sorted_order, run.sorted_order[1:]))
                    assert s.indep(run.result)
                    assert best_in_greedy(s, cost, order, weak=True) == run

    def test_prefix_is_basis(self):
        for s in small_systems(3):
            for cost in grids(s.carrier, range(3)):
                run = best_in_greedy(s, cost)
                for j in range(len(s.carrier) + 1):
                    head, got = run.prefix(j)
                    assert got in bases_of(s, head)

    def test_cost_bound_small(self):
        for s in small_systems(3):
            q = rank_quotient(s)
            for cost in grids(s.carrier):
                for order in itertools.permutations(s.carrier):
                    g = best_in_greedy(s, cost, order).weight(cost)
                    assert all(g >= q * set_cost(cost, X) for X in s.members)


class TestTightnessWitness:
    def test_worked(self, worked):
        w = tightness_witness(worked)
        assert w.cost == {"1": 1, "2": 1, "3": 1}
        assert w.order == ("1", "2", "3")
        assert w.X == {"2", "3"}
        g = best_in_greedy(worked, w.cost, w.order).weight(w.cost)
        assert g == 1 and set_cost(w.cost, w.X) == 2
        assert g == w.quotient * set_cost(w.cost, w.X)

    @pytest.mark.parametrize("s", [uniform(2, "abc"), free("ab"), uniform(1, "ab")], ids=["U23", "free", "U12"])
    def test_matroids_reach_ratio_one(self, s):
        w = tightness_witness(s)
        assert w.quotient == 1
        # smallest subset attaining the minimum is the empty set
        assert w.subset == frozenset() and w.X == frozenset()
        assert best_in_greedy(s, w.cost, w.order).weight(w.cost) == set_cost(w.cost, w.X)

    def test_equality_small(self):
        for s in small_systems(3):
            w = tightness_witness(s)
            assert s.indep(w.X)
            assert set(w.cost.values()) <= {0, 1}
            g = best_in_greedy(s, w.cost, w.order).weight(w.cost)
            assert g == rank_quotient(s) * set_cost(w.cost, w.X)
