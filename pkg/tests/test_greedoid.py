import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import rooted_triangle, uniform
from matroidlab.bruteforce import EnumerationConfig, brute_max_weight_basis, enumerate_systems
from matroidlab.core import ExplicitSetSystem, check_axioms, materialize
from matroidlab.errors import ContractError, InputError
from matroidlab.greedoid import accessible_ordering, classify_greedoid, find_best_candidate, greedoid_greedy
from matroidlab.greedy import set_cost
from matroidlab.instances import arborescence_greedoid

S = frozenset
PATH = ExplicitSetSystem(("a", "b"), [(), ("a",), ("a", "b")])


def families(kind, n_max):
    for n in range(n_max + 1):
        yield from enumerate_systems(EnumerationConfig(n, kind))


class TestClassify:
    def test_path_greedoid(self):
        r = classify_greedoid(PATH)
        assert r.is_greedoid and r.is_accessible and r.is_antimatroid and r.has_sep
        assert r.violation is None
        assert not check_axioms(PATH).is_independence_system

    def test_worked_example(self, worked):
        r = classify_greedoid(worked)
        assert not r.is_greedoid and not r.has_m3
        assert r.is_accessible and not r.is_antimatroid
        assert r.has_sep is None
        assert r.violation == ("m3", (S({"2", "3"}), S({"1"})))

    def test_missing_empty_set(self):
        r = classify_greedoid(ExplicitSetSystem(("a",), [("a",)]))
        assert not r.is_greedoid and not r.is_accessible
        assert r.violation == ("m1", (S(), S()))

    def test_arborescences_have_sep(self):
        r = classify_greedoid(materialize(arborescence_greedoid(rooted_triangle(), "r")))
        assert r.is_greedoid and r.has_sep
        # {ra, rb} | {ra, ab} closes the triangle
        assert not r.is_antimatroid

    def test_sep_violation_is_genuine(self):
        for s in families("greedoids", 3):
            r = classify_greedoid(s)
            if r.has_sep:
                continue
            label, (A, B, x) = r.violation
            assert label == "sep" and A <= B and len(x) == 1 and not x & B
            assert s.indep(A | x)
            assert not any(s.indep(A | {y}) and s.indep((B - {y}) | x) for y in B - A)

    def test_inclusions(self):
        for s in families("matroids", 4):
            assert classify_greedoid(s).is_greedoid
        for s in families("antimatroids", 3):
            assert classify_greedoid(s).is_greedoid
        for s in families("greedoids", 3):
            r = classify_greedoid(s)
            assert r.is_greedoid and r.is_accessible

    def test_antimatroid_flag_matches_filter(self):
        anti = set(families("antimatroids", 3))
        for s in families("all", 3):
            assert classify_greedoid(s).is_antimatroid == (s in anti)


class TestAccessibleOrdering:
    def test_path(self):
        assert accessible_ordering(PATH, {"a", "b"}) == ("a", "b")
        assert accessible_ordering(PATH, ()) == ()

    def test_lexicographically_smallest(self):
        assert accessible_ordering(uniform(3, "cab"), "abc") == ("a", "b", "c")

    def test_backtracks(self):
        s = ExplicitSetSystem(("a", "b", "c"), [(), ("a",), ("b",), ("b", "c"), ("a", "b", "c")])
        assert accessible_ordering(s, "abc") == ("b", "c", "a")

    def test_not_a_member(self):
        with pytest.raises(InputError):
            accessible_ordering(PATH, {"b"})

    def test_inaccessible(self):
        with pytest.raises(ContractError):
            accessible_ordering(ExplicitSetSystem(("a", "b"), [(), ("a", "b")]), "ab")

    def test_prefixes_feasible(self):
        for s in families("greedoids", 3):
            for X in s.members:
                seq = accessible_ordering(s, X)
                assert S(seq) == X
                assert all(s.indep(seq[:i]) for i in range(len(seq) + 1))


class TestGreedoidGreedy:
    def test_rooted_triangle(self):
        g = rooted_triangle()
        ag = arborescence_greedoid(g, "r")
        w = g.weights()
        assert find_best_candidate(ag, w, g.edge_ids, ()) == "ra"
        assert find_best_candidate(ag, w, g.edge_ids, {"ra"}) == "rb"
        assert greedoid_greedy(ag, w) == {"ra", "rb"}
        assert set_cost(w, {"ra", "rb"}) == 5

    def test_ties_go_to_first_in_order(self):
        u = uniform(1, "ab")
        assert find_best_candidate(u, {"a": 1, "b": 1}, ["b", "a"], ()) == "b"
        assert find_best_candidate(u, {"a": 1, "b": 1}, ["a", "b"], ()) == "a"

    def test_no_candidate(self):
        assert find_best_candidate(uniform(1, "ab"), {"a": 1, "b": 1}, "ab", {"a"}) is None

    def test_empty_carrier(self):
        assert greedoid_greedy(ExplicitSetSystem((), [()]), {}) == frozenset()

    def test_uniform_rank_one(self):
        assert greedoid_greedy(uniform(1, "ab"), {"a": 0, "b": 7}) == {"b"}

    def test_negative_weights_still_reach_a_basis(self):
        assert greedoid_greedy(uniform(1, "ab"), {"a": -1, "b": -2}) == {"a"}

    def test_bad_order(self):
        with pytest.raises(InputError):
            greedoid_greedy(PATH, {"a": 1, "b": 1}, ["a"])

    def test_weak_matches_full(self):
        g = rooted_triangle()
        ag = arborescence_greedoid(g, "r")
        for order in itertools.permutations(g.edge_ids):
            assert greedoid_greedy(ag, g.weights(), order, weak=True) == greedoid_greedy(ag, g.weights(), order)

    def test_result_is_basis(self):
        for s in families("greedoids", 3):
            maximal = {X for X in s.members if not any(X < Y for Y in s.members)}
            for ws in itertools.product(range(-1, 2), repeat=len(s.carrier)):
                assert greedoid_greedy(s, dict(zip(s.carrier, ws))) in maximal

    def test_optimal_on_sep_greedoids_small(self):
        for s in families("greedoids", 3):
            if not classify_greedoid(s).has_sep:
                continue
            for ws in itertools.product(range(-1, 3), repeat=len(s.carrier)):
                cost = dict(zip(s.carrier, ws))
                best = brute_max_weight_basis(s, cost)[1]
                for order in itertools.permutations(s.carrier):
                    assert set_cost(cost, greedoid_greedy(s, cost, order)) == best


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.permutations(["ab", "ra", "rb"]))
def test_arborescence_greedy_is_optimal(ws, order):
    g = rooted_triangle()
    ag = materialize(arborescence_greedoid(g, "r"))
    cost = dict(zip(g.edge_ids, ws))
    got = greedoid_greedy(ag, cost, order)
    assert set_cost(cost, got) == brute_max_weight_basis(ag, cost)[1]
