"""Exhaustive reference oracles.

Everything here is deliberately naive: enumerate all subsets (or all set
families) and test definitions directly.  The rest of the package is checked
against these functions, so they share as little code with it as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Literal

from .core import ExplicitSetSystem, greedy_rank, set_key
from .errors import ContractError, InputError
from .greedy import Weights
from .instances import BipartiteGraph, UndirectedGraph
from .intersect import DoubleMatroid

Filter = Literal["all", "independence_systems", "matroids", "greedoids", "antimatroids"]

ELEMENT_NAMES = "abcde"
MAX_BRUTE_CARRIER = 12
_MAX_N = {"all": 4, "independence_systems": 5, "matroids": 5, "greedoids": 4, "antimatroids": 4}


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    filter: Filter = "independence_systems"

    def __post_init__(self) -> None:
        if self.filter not in _MAX_N:
            raise InputError(f"unknown filter {self.filter!r}")
        if not isinstance(self.n, int) or not 0 <= self.n <= _MAX_N[self.filter]:
            raise InputError(f"n={self.n!r} out of bounds for filter {self.filter!r} (max {_MAX_N[self.filter]})")


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _grow(n: int, admissible: Callable[[set, int], bool]) -> Iterator[list[int]]:
    """Families containing ∅ built subset by subset in (size, mask) order.

    A subset may only join if ``admissible(chosen, subset)`` holds; since all
    smaller subsets have already been decided this prunes early.
    """
    subsets = sorted(range(1, 1 << n), key=lambda m: (_popcount(m), m))
    chosen = {0}

    def rec(i: int) -> Iterator[list[int]]:
        if i == len(subsets):
            yield sorted(chosen)
            return
        yield from rec(i + 1)
        S = subsets[i]
        if admissible(chosen, S):
            chosen.add(S)
            yield from rec(i + 1)
            chosen.remove(S)

    yield from rec(0)


def _one_smaller(S: int) -> list[int]:
    return [S & ~(1 << i) for i in range(S.bit_length()) if S >> i & 1]


def _downward(chosen: set, S: int) -> bool:
    return all(T in chosen for T in _one_smaller(S))


def _accessible(chosen: set, S: int) -> bool:
    return any(T in chosen for T in _one_smaller(S))


def _augmentable(fam: list[int]) -> bool:
    fs = set(fam)
    for X in fam:
        for Y in fam:
            if _popcount(X) > _popcount(Y):
                d = X & ~Y
                if not any((Y | (1 << i)) in fs for i in range(d.bit_length()) if d >> i & 1):
                    return False
    return True


def _union_closed(fam: list[int]) -> bool:
    fs = set(fam)
    return all((X | Y) in fs for X in fam for Y in fam)


def _mask_families(cfg: EnumerationConfig) -> Iterator[list[int]]:
    n = cfg.n
    if cfg.filter == "all":
        size = 1 << n
        for code in range(1 << size):
            yield [m for m in range(size) if code >> m & 1]
    elif cfg.filter == "independence_systems":
        yield from _grow(n, _downward)
    elif cfg.filter == "matroids":
        yield from (f for f in _grow(n, _downward) if _augmentable(f))
    elif cfg.filter == "greedoids":
        yield from (f for f in _grow(n, _accessible) if _augmentable(f))
    else:
        yield from (f for f in _grow(n, _accessible) if _union_closed(f))


def enumerate_systems(cfg: EnumerationConfig) -> Iterator[ExplicitSetSystem]:
    """Every set family over the carrier ``a, b, ...`` (n elements) that passes the filter.

    Each family is produced exactly once and the order is deterministic.
    """
    names = ELEMENT_NAMES[: cfg.n]
    for fam in _mask_families(cfg):
        members = [[names[i] for i in range(cfg.n) if m >> i & 1] for m in fam]
        yield ExplicitSetSystem(tuple(names), members)


def _subsets(elements) -> Iterator[frozenset]:
    elements = sorted(elements)
    for k in range(len(elements) + 1):
        for c in combinations(elements, k):
            yield frozenset(c)


def _best(candidates, score) -> tuple[frozenset, object]:
    """Maximum score; ties go to the smaller set, then the lexicographically smaller one."""
    best = min(candidates, key=lambda S: (-score(S), set_key(S)))
    return best, score(best)


def _cost(cost: Weights, S) -> Fraction:
    return sum((Fraction(cost[e]) for e in S), Fraction(0))


def brute_max_weight_independent(sys: ExplicitSetSystem, cost: Weights) -> tuple[frozenset, Fraction]:
    """Most expensive independent set by scanning the whole family."""
    members = [frozenset(m) for m in sys.family]
    if not members:
        raise ContractError("the family is empty")
    return _best(members, lambda S: _cost(cost, S))


def brute_max_weight_basis(sys: ExplicitSetSystem, cost: Weights) -> tuple[frozenset, Fraction]:
    """Most expensive inclusion-maximal member of the family."""
    members = [frozenset(m) for m in sys.family]
    maximal = [A for A in members if not any(A < B for B in members)]
    if not maximal:
        raise ContractError("the family is empty")
    return _best(maximal, lambda S: _cost(cost, S))


def _check_small(carrier) -> None:
    if len(carrier) > MAX_BRUTE_CARRIER:
        raise InputError(f"carrier of size {len(carrier)} exceeds the brute-force limit {MAX_BRUTE_CARRIER}")


def brute_max_common_independent(dm: DoubleMatroid) -> tuple[frozenset, int]:
    """Largest set independent in both matroids, by trying every subset."""
    _check_small(dm.carrier)
    common = [S for S in _subsets(dm.carrier) if dm.o1.indep(S) and dm.o2.indep(S)]
    return _best(common, len)


def brute_min_rank_sum(dm: DoubleMatroid) -> tuple[frozenset, int]:
    """Minimum of r1(Q) + r2(E - Q) over all Q ⊆ E."""
    _check_small(dm.carrier)
    E = frozenset(dm.carrier)
    value = lambda Q: greedy_rank(dm.o1, Q) + greedy_rank(dm.o2, E - Q)
    Q = min(_subsets(E), key=lambda Q: (value(Q), set_key(Q)))
    return Q, value(Q)


def brute_rank_quotient(sys: ExplicitSetSystem) -> Fraction:
    """min over X of lower_rank(X) / rank(X), with equal ranks counting as 1.

    Bases are found by listing all independent subsets of X and keeping the
    ones no other independent subset of X strictly contains.
    """
    _check_small(sys.carrier)
    fam = {frozenset(m) for m in sys.family}
    if frozenset() not in fam or any(T not in fam for S in fam for T in _subsets(S)):
        raise ContractError("rank quotient needs an independence system")
    best = None
    for X in _subsets(sys.carrier):
        inside = [S for S in _subsets(X) if S in fam]
        sizes = [len(S) for S in inside if not any(S < T for T in inside)]
        lo, hi = min(sizes), max(sizes)
        q = Fraction(1) if lo == hi else Fraction(lo, hi)
        best = q if best is None else min(best, q)
    return best


def _count_components(vertices, edges) -> int:
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, count = set(), 0
    for s in vertices:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def brute_spanning_forests(g: UndirectedGraph) -> list[frozenset]:
    """All spanning forests of g.

    X is acyclic iff |X| = |V| - components(V, X), and spanning iff it has
    as many components as the whole graph.
    """
    _check_small(g.edge_ids)
    ends = {e.id: (e.u, e.v) for e in g.edges}
    target = _count_components(g.vertices, ends.values())
    out = []
    for X in _subsets(ends):
        c = _count_components(g.vertices, [ends[e] for e in X])
        if len(X) == len(g.vertices) - c and c == target:
            out.append(X)
    return out


def brute_spanning_trees_at(g: UndirectedGraph, root: str) -> list[frozenset]:
    """All spanning trees of root's connected component."""
    _check_small(g.edge_ids)
    ends = {e.id: (e.u, e.v) for e in g.edges}
    comp = {root}
    grown = True
    while grown:
        grown = False
        for u, v in ends.values():
            if (u in comp) != (v in comp):
                comp |= {u, v}
                grown = True
    inner = [e for e, (u, v) in ends.items() if u in comp]
    out = []
    for X in _subsets(inner):
        if len(X) == len(comp) - 1 and _count_components(comp, [ends[e] for e in X]) == 1:
            out.append(X)
    return out


def brute_max_matching(b: BipartiteGraph) -> tuple[frozenset, int]:
    """Largest set of pairwise vertex-disjoint edges."""
    _check_small(b.edge_ids)
    ends = {eid: (l, r) for eid, l, r in b.edges}

    def is_matching(M) -> bool:
        used = [v for e in M for v in ends[e]]
        return len(used) == len(set(used))

    return _best([M for M in _subsets(ends) if is_matching(M)], len)
