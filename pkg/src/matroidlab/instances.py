"""Concrete instances: graphic matroids (Kruskal), arborescence greedoids (Prim)
and the two partition matroids behind bipartite matching."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from .core import OracleSystem, check_element
from .errors import ContractError, InputError
from .greedoid import greedoid_greedy
from .greedy import best_in_greedy
from .intersect import DoubleMatroid, matroid_intersection

Direction = Literal["max", "min"]
Side = Literal["left", "right"]


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    weight: Fraction = Fraction(1)


@dataclass(frozen=True)
class UndirectedGraph:
    """Multigraph whose edges are identified by id; parallel edges and loops allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        verts = set(check_element(v) for v in self.vertices)
        by_id = {}
        for e in self.edges:
            check_element(e.id)
            if e.id in by_id:
                raise InputError(f"duplicate edge id {e.id!r}")
            if not isinstance(e.weight, (int, Fraction)):
                raise InputError(f"weight of edge {e.id!r} must be an exact rational")
            verts.add(check_element(e.u))
            verts.add(check_element(e.v))
            by_id[e.id] = e
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_tuples(cls, edges: Iterable[tuple], vertices: Iterable[str] = ()) -> "UndirectedGraph":
        """Build from ``(id, u, v)`` or ``(id, u, v, weight)`` tuples."""
        es = []
        for t in edges:
            w = Fraction(t[3]) if len(t) > 3 else Fraction(1)
            es.append(Edge(t[0], t[1], t[2], w))
        return cls(tuple(vertices), tuple(es))

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: str) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid!r}") from None

    def weights(self) -> dict[str, Fraction]:
        return {e.id: Fraction(e.weight) for e in self.edges}


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        L = set(check_element(v) for v in self.left)
        R = set(check_element(v) for v in self.right)
        if L & R:
            raise InputError(f"vertices on both sides: {sorted(L & R)}")
        by_id = {}
        for eid, l, r in self.edges:
            check_element(eid)
            if eid in by_id:
                raise InputError(f"duplicate edge id {eid!r}")
            if l not in L or r not in R:
                raise InputError(f"edge {eid!r} must join a left vertex to a right vertex")
            by_id[eid] = (l, r)
        object.__setattr__(self, "left", tuple(sorted(L)))
        object.__setattr__(self, "right", tuple(sorted(R)))
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))
        object.__setattr__(self, "_by_id", by_id)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    def endpoint(self, eid: str, side: Side) -> str:
        try:
            l, r = self._by_id[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid!r}") from None
        if side == "left":
            return l
        if side == "right":
            return r
        raise InputError(f"side must be 'left' or 'right', not {side!r}")


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        root = x
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent.get(x, x)
        return root

    def union(self, a: str, b: str) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_acyclic(g: UndirectedGraph, X: Iterable[str]) -> bool:
    uf = _UnionFind()
    for eid in X:
        e = g.edge(eid)
        if not uf.union(e.u, e.v):
            return False
    return True


def _tree_path(g: UndirectedGraph, X: Iterable[str], src: str, dst: str) -> Optional[list[str]]:
    """Edge ids of a path from src to dst using only edges of X (DFS)."""
    adj: dict[str, list[tuple[str, str]]] = {}
    for eid in X:
        e = g.edge(eid)
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))
    stack = [(src, [])]
    seen = {src}
    while stack:
        v, path = stack.pop()
        if v == dst:
            return path
        for w, eid in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append((w, path + [eid]))
    return None


def graphic_weak_oracle(g: UndirectedGraph, X: Iterable[str], e: str, *, debug: bool = False) -> bool:
    """Does adding edge e to the forest X keep it acyclic?

    True iff the endpoints of e are in different components of (V, X); self
    loops are never independent.
    """
    X = frozenset(X)
    if debug and not is_acyclic(g, X):
        raise ContractError("graphic weak oracle called on a cyclic edge set")
    edge = g.edge(e)
    if edge.u == edge.v:
        return False
    return _tree_path(g, X, edge.u, edge.v) is None


def graphic_circuit_oracle(g: UndirectedGraph, X: Iterable[str], e: str) -> frozenset:
    """The cycle closed by e in the forest X, without e."""
    edge = g.edge(e)
    if edge.u == edge.v:
        return frozenset()
    path = _tree_path(g, frozenset(X), edge.u, edge.v)
    if path is None:
        raise ContractError(f"edge {e!r} does not close a cycle in X")
    return frozenset(path)


def graphic_matroid(g: UndirectedGraph) -> OracleSystem:
    """Edge sets independent iff acyclic."""
    return OracleSystem(
        g.edge_ids,
        lambda X: is_acyclic(g, X),
        weak_indep=lambda X, e: graphic_weak_oracle(g, X, e),
        circuit_minus=lambda X, e: graphic_circuit_oracle(g, X, e),
    )


def _components(g: UndirectedGraph, X: Iterable[str]) -> dict[str, str]:
    uf = _UnionFind()
    for eid in X:
        e = g.edge(eid)
        uf.union(e.u, e.v)
    return {v: uf.find(v) for v in g.vertices}


def _same_partition(a: dict[str, str], b: dict[str, str]) -> bool:
    pairs = {(a[v], b[v]) for v in a}
    return len(pairs) == len(set(a.values())) == len(set(b.values()))


def is_spanning_forest(g: UndirectedGraph, X: Iterable[str]) -> bool:
    """Acyclic, and connects every pair of vertices that the whole edge set connects."""
    X = frozenset(X)
    for eid in X:
        g.edge(eid)
    if not is_acyclic(g, X):
        return False
    return _same_partition(_components(g, X), _components(g, g.edge_ids))


def _adapted_weights(g: UndirectedGraph, direction: Direction, *, nonneg_max: bool) -> dict[str, Fraction]:
    w = g.weights()
    if direction == "max":
        if nonneg_max and any(x < 0 for x in w.values()):
            raise InputError("maximisation needs nonnegative weights")
        return w
    if direction == "min":
        top = max(w.values(), default=Fraction(0))
        return {k: top - x for k, x in w.items()}
    raise InputError(f"direction must be 'max' or 'min', not {direction!r}")


def _check_order(g: UndirectedGraph, order: Optional[Sequence[str]]) -> tuple[str, ...]:
    if order is None:
        return g.edge_ids
    order = tuple(order)
    for eid in order:
        g.edge(eid)
    if sorted(order) != sorted(g.edge_ids):
        raise InputError("order must list every edge exactly once")
    return order


def kruskal(g: UndirectedGraph, direction: Direction = "max", order: Optional[Sequence[str]] = None) -> frozenset:
    """Optimal spanning forest by Best-In-Greedy over the graphic matroid.

    ``direction="min"`` replaces each weight w by W - w, where W is the
    largest weight, which keeps costs nonnegative.
    """
    order = _check_order(g, order)
    cost = _adapted_weights(g, direction, nonneg_max=True)
    return best_in_greedy(graphic_matroid(g), cost, order, weak=True).result


def _tree_vertices(g: UndirectedGraph, X: Iterable[str]) -> set[str]:
    vs = set()
    for eid in X:
        e = g.edge(eid)
        vs.add(e.u)
        vs.add(e.v)
    return vs


def arborescence_weak_oracle(g: UndirectedGraph, root: str, X: Iterable[str], e: str) -> bool:
    """Does e extend the tree X around root to a larger tree around root?"""
    if root not in g.vertices:
        raise InputError(f"root {root!r} is not a vertex")
    edge = g.edge(e)
    if edge.u == edge.v:
        return False
    X = frozenset(X)
    inside = _tree_vertices(g, X) if X else {root}
    return (edge.u in inside) != (edge.v in inside)


def is_arborescence(g: UndirectedGraph, root: str, X: Iterable[str]) -> bool:
    """Empty, or an acyclic connected edge set touching root."""
    X = frozenset(X)
    if not X:
        return True
    vs = _tree_vertices(g, X)
    return root in vs and is_acyclic(g, X) and len(X) == len(vs) - 1


def arborescence_greedoid(g: UndirectedGraph, root: str) -> OracleSystem:
    if root not in g.vertices:
        raise InputError(f"root {root!r} is not a vertex")
    return OracleSystem(
        g.edge_ids,
        lambda X: is_arborescence(g, root, X),
        weak_indep=lambda X, e: arborescence_weak_oracle(g, root, X, e),
    )


def prim(
    g: UndirectedGraph,
    root: str,
    direction: Direction = "max",
    order: Optional[Sequence[str]] = None,
) -> frozenset:
    """Optimal spanning tree of root's component by the greedoid greedy algorithm.

    Candidates are found by a linear scan, not a priority queue.
    """
    if root not in g.vertices:
        raise InputError(f"root {root!r} is not a vertex")
    order = _check_order(g, order)
    cost = _adapted_weights(g, direction, nonneg_max=False)
    return greedoid_greedy(arborescence_greedoid(g, root), cost, order, weak=True)


@dataclass(frozen=True)
class MatchingMaps:
    """Matched left/right vertex -> edge id, for a matching M."""

    m_left: dict
    m_right: dict


def matching_maps(b: BipartiteGraph, M: Iterable[str]) -> MatchingMaps:
    ml, mr = {}, {}
    for eid in sorted(M):
        ml.setdefault(b.endpoint(eid, "left"), eid)
        mr.setdefault(b.endpoint(eid, "right"), eid)
    return MatchingMaps(ml, mr)


def _side_map(b: BipartiteGraph, side: Side, M: Iterable[str]) -> dict:
    maps = matching_maps(b, M)
    if side == "left":
        return maps.m_left
    if side == "right":
        return maps.m_right
    raise InputError(f"side must be 'left' or 'right', not {side!r}")


def side_independent(b: BipartiteGraph, side: Side, M: Iterable[str]) -> bool:
    """No two edges of M share an endpoint on ``side``."""
    ends = [b.endpoint(eid, side) for eid in M]
    return len(ends) == len(set(ends))


def matching_weak_oracle(b: BipartiteGraph, side: Side, M: Iterable[str], e: str, *, debug: bool = False) -> bool:
    """Is e's endpoint on ``side`` still unmatched in M?"""
    M = frozenset(M)
    if debug and not side_independent(b, side, M):
        raise ContractError(f"M is not independent w.r.t. the {side} side")
    return b.endpoint(e, side) not in _side_map(b, side, M)


def matching_circuit_oracle(b: BipartiteGraph, side: Side, M: Iterable[str], e: str) -> frozenset:
    """The edge of M sharing e's endpoint on ``side``, as a singleton."""
    d = _side_map(b, side, frozenset(M)).get(b.endpoint(e, side))
    if d is None or d == e:
        raise ContractError(f"M + {e!r} is independent w.r.t. the {side} side")
    return frozenset({d})


def partition_matroid(b: BipartiteGraph, side: Side) -> OracleSystem:
    return OracleSystem(
        b.edge_ids,
        lambda M: side_independent(b, side, M),
        weak_indep=lambda M, e: matching_weak_oracle(b, side, M, e),
        circuit_minus=lambda M, e: matching_circuit_oracle(b, side, M, e),
    )


def matching_double_matroid(b: BipartiteGraph) -> DoubleMatroid:
    return DoubleMatroid(partition_matroid(b, "left"), partition_matroid(b, "right"))


def max_bipartite_matching(b: BipartiteGraph) -> frozenset:
    """Maximum-cardinality matching via matroid intersection with circuit oracles."""
    return matroid_intersection(matching_double_matroid(b), "circuit")
