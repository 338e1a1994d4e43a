"""Small builders shared by the test modules."""

from itertools import combinations

from matroidlab.core import ExplicitSetSystem
from matroidlab.instances import BipartiteGraph, UndirectedGraph


def worked_system() -> ExplicitSetSystem:
    return ExplicitSetSystem(("1", "2", "3"), [(), ("1",), ("2",), ("3",), ("2", "3")])


def uniform(k: int, elements) -> ExplicitSetSystem:
    elements = tuple(elements)
    fam = [c for r in range(k + 1) for c in combinations(elements, r)]
    return ExplicitSetSystem(elements, fam)


def free(elements) -> ExplicitSetSystem:
    return uniform(len(tuple(elements)), elements)


def triangle(w_uv=1, w_vw=1, w_wu=1) -> UndirectedGraph:
    return UndirectedGraph.from_tuples([("uv", "u", "v", w_uv), ("vw", "v", "w", w_vw), ("wu", "w", "u", w_wu)])


def rooted_triangle() -> UndirectedGraph:
    return UndirectedGraph.from_tuples([("ra", "r", "a", 3), ("rb", "r", "b", 2), ("ab", "a", "b", 1)])


def worked_bipartite() -> BipartiteGraph:
    return BipartiteGraph(("l1", "l2"), ("r1", "r2"), (("l1r1", "l1", "r1"), ("l1r2", "l1", "r2"), ("l2r1", "l2", "r1")))


def subsets(elements):
    elements = sorted(elements)
    for r in range(len(elements) + 1):
        for c in combinations(elements, r):
            yield frozenset(c)
