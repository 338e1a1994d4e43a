"""Greedoids: classification, accessible orderings and the greedoid greedy algorithm."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import AnySystem, ExplicitSetSystem, _m3_violation, as_oracle
from .errors import ContractError, InputError
from .greedy import Weights, check_weights


@dataclass(frozen=True)
class GreedoidReport:
    """Exhaustive classification of an explicit set system.

    ``has_sep`` (strong exchange property) is only evaluated for greedoids and
    is ``None`` otherwise.  ``violation`` names the first failed property as
    ``(label, sets)``, e.g. ``("m3", (X, Y))`` or ``("sep", (A, B, {x}))``.
    """

    is_set_system: bool
    has_empty: bool
    has_m3: bool
    is_accessible: bool
    is_antimatroid: bool
    has_sep: Optional[bool]
    violation: Optional[tuple[str, tuple[frozenset, ...]]] = None

    @property
    def is_greedoid(self) -> bool:
        return self.is_set_system and self.has_empty and self.has_m3


def _bits(m: int):
    while m:
        low = m & -m
        yield low
        m &= m - 1


def _accessibility_violation(sys: ExplicitSetSystem) -> Optional[int]:
    for X in sys.masks:
        if X and not any(sys.has_mask(X & ~b) for b in _bits(X)):
            return X
    return None


def _union_violation(sys: ExplicitSetSystem) -> Optional[tuple[int, int]]:
    ms = sys.masks
    for i, X in enumerate(ms):
        for Y in ms[i + 1:]:
            if not sys.has_mask(X | Y):
                return X, Y
    return None


def _maximal(sys: ExplicitSetSystem) -> list[int]:
    ms = sys.masks
    return [F for F in ms if not any(F != G and F & ~G == 0 for G in ms)]


def _sep_violation(sys: ExplicitSetSystem) -> Optional[tuple[int, int, int]]:
    full = (1 << sys.n) - 1
    for B in _maximal(sys):
        for A in sys.masks:
            if A & ~B:
                continue
            for x in _bits(full & ~B):
                if not sys.has_mask(A | x):
                    continue
                if not any(
                    sys.has_mask(A | y) and sys.has_mask((B & ~y) | x) for y in _bits(B & ~A)
                ):
                    return A, B, x
    return None


def classify_greedoid(sys: ExplicitSetSystem) -> GreedoidReport:
    """Check greedoid axioms, accessibility, antimatroid and strong exchange properties."""
    # the constructor already rejects members outside the carrier
    is_set_system = all(set(m) <= set(sys.carrier) for m in sys.family)
    has_empty = sys.has_mask(0)
    v3 = _m3_violation(sys)
    va = _accessibility_violation(sys)
    vu = _union_violation(sys)
    is_accessible = has_empty and va is None
    is_antimatroid = is_accessible and vu is None

    violation = None
    if not has_empty:
        violation = ("m1", (frozenset(), frozenset()))
    elif v3 is not None:
        violation = ("m3", (sys.set_of(v3[0]), sys.set_of(v3[1])))

    has_sep = None
    if is_set_system and has_empty and v3 is None:
        vs = _sep_violation(sys)
        has_sep = vs is None
        if vs is not None:
            violation = ("sep", tuple(sys.set_of(m) for m in vs))
    return GreedoidReport(is_set_system, has_empty, v3 is None, is_accessible, is_antimatroid, has_sep, violation)


def accessible_ordering(sys: ExplicitSetSystem, X: Iterable[str]) -> tuple[str, ...]:
    """Order X as x1..xk so that every prefix {x1..xi} is feasible.

    Builds up from the empty set, always trying the lexicographically smallest
    extension first and backtracking out of dead ends, so the result is the
    lexicographically smallest valid ordering.
    """
    target = sys.mask_of(X)
    if not sys.has_mask(target):
        raise InputError("X is not a member of the family")
    dead: set[int] = set()

    def search(cur: int) -> Optional[list[int]]:
        if cur == target:
            return []
        if cur in dead:
            return None
        for b in _bits(target & ~cur):
            if sys.has_mask(cur | b):
                rest = search(cur | b)
                if rest is not None:
                    return [b] + rest
        dead.add(cur)
        return None

    if not sys.has_mask(0):
        raise ContractError("no accessible ordering: the empty set is infeasible")
    found = search(0)
    if found is None:
        raise ContractError("no accessible ordering exists for X; the system is not accessible")
    return tuple(sys.carrier[b.bit_length() - 1] for b in found)


def find_best_candidate(
    sys: AnySystem,
    cost: Weights,
    order: Sequence[str],
    X: Iterable[str],
    *,
    weak: bool = False,
) -> Optional[str]:
    """First element of ``order`` with maximal cost among those that extend X feasibly.

    Members of X are skipped without asking the oracle.
    """
    oracle = as_oracle(sys)
    X = frozenset(X)
    best = None
    best_cost = None
    for e in order:
        if e in X:
            continue
        ok = oracle.weak_indep(X, e) if weak else oracle.indep(X | {e})
        if ok and (best is None or cost[e] > best_cost):
            best, best_cost = e, cost[e]
    return best


def greedoid_greedy(
    sys: AnySystem,
    cost: Weights,
    order: Optional[Sequence[str]] = None,
    *,
    weak: bool = False,
) -> frozenset:
    """Grow a feasible set from ∅ by the best candidate until none is left.

    Returns a basis of the greedoid.  On greedoids with the strong exchange
    property it has maximum modular weight for every order and every weights.
    """
    oracle = as_oracle(sys)
    if order is None:
        order = oracle.carrier
    elif sorted(order) != list(oracle.carrier):
        raise InputError("order must list every carrier element exactly once")
    weights = check_weights(cost, oracle.carrier)
    if weak and oracle.weak_indep is None:
        raise ContractError("weak-oracle run requested but the system has no weak oracle")

    X: frozenset = frozenset()
    for _ in range(len(oracle.carrier) + 1):
        e = find_best_candidate(oracle, weights, order, X, weak=weak)
        if e is None:
            return X
        X = X | {e}
    raise ContractError("greedoid greedy did not terminate within |E| insertions")
