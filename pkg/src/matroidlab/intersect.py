"""Maximum-cardinality matroid intersection via shortest augmenting paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from .core import AnySystem, OracleSystem, as_oracle, fundamental_circuit, greedy_rank
from .errors import ContractError, InputError

Method = Literal["auto", "weak", "circuit"]


@dataclass(frozen=True)
class DoubleMatroid:
    """Two matroids on the same carrier."""

    m1: AnySystem
    m2: AnySystem
    carrier: tuple[str, ...] = field(init=False)
    o1: OracleSystem = field(init=False, repr=False, compare=False)
    o2: OracleSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        o1, o2 = as_oracle(self.m1), as_oracle(self.m2)
        if o1.carrier != o2.carrier:
            raise InputError("the two matroids must share the same carrier")
        object.__setattr__(self, "carrier", o1.carrier)
        object.__setattr__(self, "o1", o1)
        object.__setattr__(self, "o2", o2)

    def common_indep(self, X: frozenset) -> bool:
        return self.o1.indep(X) and self.o2.indep(X)


@dataclass(frozen=True)
class ExchangeGraph:
    """Directed exchange graph of a common independent set X.

    Arcs (x, y) with x in X come from the first matroid, arcs (y, x) with y
    outside X from the second, so the graph is bipartite between X and E - X.
    """

    x_set: frozenset
    s_set: frozenset
    t_set: frozenset
    arcs: frozenset

    @property
    def a1(self) -> frozenset:
        return frozenset(a for a in self.arcs if a[0] in self.x_set)

    @property
    def a2(self) -> frozenset:
        return frozenset(a for a in self.arcs if a[0] not in self.x_set)

    def successors(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {}
        for u, v in self.arcs:
            adj.setdefault(u, []).append(v)
        for vs in adj.values():
            vs.sort()
        return adj


@dataclass(frozen=True)
class IntersectionState:
    sol: frozenset
    history: tuple[tuple[str, ...], ...] = ()


def _extends(o: OracleSystem, X: frozenset, y: str) -> bool:
    if o.weak_indep is not None:
        return o.weak_indep(X, y)
    return o.indep(X | {y})


def _resolve(dm: DoubleMatroid, method: Method) -> str:
    if method == "auto":
        both = dm.o1.circuit_minus is not None and dm.o2.circuit_minus is not None
        return "circuit" if both else "weak"
    if method not in ("weak", "circuit"):
        raise InputError(f"unknown graph construction method {method!r}")
    return method


def _exchangeable(o: OracleSystem, X: frozenset, y: str, method: str) -> frozenset:
    """Elements x of X such that X - x + y is independent (X + y dependent)."""
    if method == "circuit":
        if o.circuit_minus is not None:
            c = frozenset(o.circuit_minus(X, y))
        else:
            c = fundamental_circuit(o, X, y) - {y}
        if not c <= X:
            raise ContractError(f"circuit oracle returned elements outside X for {y!r}")
        return c
    out = []
    for x in sorted(X):
        rest = X - {x}
        if _extends(o, rest, y):
            out.append(x)
    return frozenset(out)


def build_exchange_graph(dm: DoubleMatroid, X: Iterable[str], method: Method = "auto") -> ExchangeGraph:
    """Sources, sinks and arcs of the exchange graph for a common independent X.

    ``method="weak"`` probes every swap X - x + y with the oracles;
    ``method="circuit"`` reads the arcs off the fundamental circuits (the
    system's circuit oracle when present).  Both give the same graph.
    """
    method = _resolve(dm, method)
    X = frozenset(X)
    if not X <= set(dm.carrier):
        raise ContractError("X is not a subset of the carrier")
    if not dm.o1.indep(X):
        raise ContractError("indep_invar violated: X is dependent in the first matroid")
    if not dm.o2.indep(X):
        raise ContractError("indep_invar violated: X is dependent in the second matroid")

    S, T, arcs = set(), set(), set()
    for y in dm.carrier:
        if y in X:
            continue
        if _extends(dm.o1, X, y):
            S.add(y)
        else:
            arcs.update((x, y) for x in _exchangeable(dm.o1, X, y, method))
        if _extends(dm.o2, X, y):
            T.add(y)
        else:
            arcs.update((y, x) for x in _exchangeable(dm.o2, X, y, method))
    return ExchangeGraph(X, frozenset(S), frozenset(T), frozenset(arcs))


def find_augmenting_path(g: ExchangeGraph) -> Optional[tuple[str, ...]]:
    """Shortest S-T path as a vertex sequence, or None when T is unreachable.

    A vertex in both S and T is a path by itself.  Among shortest paths the
    lexicographically smallest vertex sequence is returned: distances to T
    come from a backwards BFS, then the path is walked forward always taking
    the smallest vertex one step closer to T.
    """
    common = g.s_set & g.t_set
    if common:
        return (min(common),)

    preds: dict[str, list[str]] = {}
    for u, v in g.arcs:
        preds.setdefault(v, []).append(u)
    dist = {t: 0 for t in g.t_set}
    queue = deque(sorted(g.t_set))
    while queue:
        v = queue.popleft()
        for u in preds.get(v, ()):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)

    reachable = [s for s in g.s_set if s in dist]
    if not reachable:
        return None
    length = min(dist[s] for s in reachable)
    v = min(s for s in reachable if dist[s] == length)
    succ = g.successors()
    path = [v]
    while dist[v] > 0:
        v = min(w for w in succ[v] if dist.get(w) == dist[v] - 1)
        path.append(v)
    return tuple(path)


def augment(X: Iterable[str], path: Sequence[str]) -> frozenset:
    """Swap along an alternating path: add even positions, drop odd positions."""
    X = frozenset(X)
    if len(path) % 2 != 1:
        raise ContractError("augmenting path must have an odd number of vertices")
    if len(set(path)) != len(path):
        raise ContractError("augmenting path repeats a vertex")
    added = frozenset(path[0::2])
    removed = frozenset(path[1::2])
    if added & X:
        raise ContractError("even-position path vertices must lie outside X")
    if not removed <= X:
        raise ContractError("odd-position path vertices must lie in X")
    return (X | added) - removed


def run_matroid_intersection(
    dm: DoubleMatroid,
    method: Method = "auto",
    *,
    check_invariants: bool = False,
) -> IntersectionState:
    """Augment from ∅ until the exchange graph has no S-T path.

    ``method="auto"`` uses circuit oracles when both matroids provide one.
    ``check_invariants`` re-checks after each augmentation that the solution
    is still independent in both matroids and grew by exactly one.
    """
    X: frozenset = frozenset()
    history = []
    for _ in range(len(dm.carrier) + 1):
        g = build_exchange_graph(dm, X, method)
        path = find_augmenting_path(g)
        if path is None:
            return IntersectionState(X, tuple(history))
        nxt = augment(X, path)
        if check_invariants:
            if not dm.common_indep(nxt):
                raise ContractError("indep_invar violated: augmented set is not independent in both matroids")
            if len(nxt) != len(X) + 1:
                raise ContractError("cardinality invariant violated: augmentation must add one element")
        X = nxt
        history.append(path)
    raise ContractError("matroid intersection did not terminate within |E| augmentations")


def matroid_intersection(dm: DoubleMatroid, method: Method = "auto", *, check_invariants: bool = False) -> frozenset:
    """A maximum-cardinality set independent in both matroids."""
    return run_matroid_intersection(dm, method, check_invariants=check_invariants).sol


def rank_sum(dm: DoubleMatroid, Q: Iterable[str]) -> int:
    """r1(Q) + r2(E - Q)."""
    Q = frozenset(Q)
    return greedy_rank(dm.o1, Q) + greedy_rank(dm.o2, set(dm.carrier) - Q)


def optimality_certificate(dm: DoubleMatroid, X: Iterable[str], method: Method = "auto") -> frozenset:
    """Q with r1(Q) + r2(E - Q) = |X|, proving X has maximum cardinality.

    Q is the complement of the set of vertices reachable from S in the
    exchange graph of X.
    """
    X = frozenset(X)
    g = build_exchange_graph(dm, X, method)
    if find_augmenting_path(g) is not None:
        raise ContractError("X is not maximum: the exchange graph has an S-T path")
    succ = g.successors()
    reached = set(g.s_set)
    queue = deque(sorted(g.s_set))
    while queue:
        v = queue.popleft()
        for w in succ.get(v, ()):
            if w not in reached:
                reached.add(w)
                queue.append(w)
    Q = frozenset(dm.carrier) - reached
    if rank_sum(dm, Q) != len(X):
        raise ContractError("certificate check failed; the oracles do not describe matroids")
    return Q


def verify_min_max(dm: DoubleMatroid) -> bool:
    """Brute-force check that max |X| over common independent sets equals min r1(Q) + r2(E - Q)."""
    from .bruteforce import brute_max_common_independent, brute_min_rank_sum

    return brute_max_common_independent(dm)[1] == brute_min_rank_sum(dm)[1]
