"""Best-In-Greedy for independence systems and its tightness witness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .core import AnySystem, ExplicitSetSystem, as_oracle, bases_of, frac, rank_tables, set_key
from .errors import ContractError, InputError

Number = Union[int, Fraction]
Weights = Mapping[str, Number]


def check_weights(cost: Weights, carrier: Iterable[str], *, nonnegative: bool = False) -> dict:
    """Validate a weight map against a carrier and return it restricted to the carrier.

    Weights must be exact (int or Fraction); floats are rejected.
    """
    out = {}
    for e in carrier:
        if e not in cost:
            raise InputError(f"no cost given for element {e!r}")
        w = cost[e]
        if not isinstance(w, (int, Fraction)):
            raise InputError(f"cost of {e!r} must be an exact rational, got {type(w).__name__}")
        if nonnegative and w < 0:
            raise InputError(f"cost of {e!r} is negative ({w})")
        out[e] = w
    return out


def set_cost(cost: Weights, S: Iterable[str]) -> Fraction:
    """Modular cost c(S), the sum of the element costs."""
    return sum((Fraction(cost[e]) for e in S), Fraction(0))


def sort_desc(cost: Weights, order: Sequence[str]) -> tuple[str, ...]:
    """Stable sort of ``order`` by non-increasing cost.

    Elements of equal cost keep their relative position from ``order``.
    ``order`` has to list every key of ``cost`` exactly once.
    """
    order = tuple(order)
    if len(set(order)) != len(order):
        raise InputError("order lists an element more than once")
    if set(order) != set(cost):
        missing = sorted(set(cost) - set(order))
        unknown = sorted(set(order) - set(cost))
        raise InputError(f"order does not match the carrier (missing {missing}, unknown {unknown})")
    # sorted() is guaranteed stable
    return tuple(sorted(order, key=lambda e: -cost[e]))


@dataclass(frozen=True)
class GreedyRun:
    """Trace of one Best-In-Greedy execution.

    ``steps`` records, in processing order, each element and whether it was
    accepted; ``result`` is the set of accepted elements.
    """

    sorted_order: tuple[str, ...]
    result: frozenset
    steps: tuple[tuple[str, bool], ...]

    def prefix(self, j: int) -> tuple[frozenset, frozenset]:
        """The first j processed elements and the part of the result among them."""
        head = frozenset(self.sorted_order[:j])
        return head, self.result & head

    def weight(self, cost: Weights) -> Fraction:
        return set_cost(cost, self.result)


def best_in_greedy(
    sys: AnySystem,
    cost: Weights,
    order: Optional[Sequence[str]] = None,
    *,
    weak: bool = False,
) -> GreedyRun:
    """Run Best-In-Greedy on an independence system.

    Elements are processed in the stable non-increasing cost order derived
    from ``order`` (lexicographic when omitted) and kept whenever the current
    result stays independent.  With ``weak=True`` the system's weak oracle is
    asked instead of the full one.
    """
    oracle = as_oracle(sys)
    if order is None:
        order = oracle.carrier
    elif sorted(order) != list(oracle.carrier):
        raise InputError("order must list every carrier element exactly once")
    weights = check_weights(cost, oracle.carrier, nonnegative=True)
    if weak and oracle.weak_indep is None:
        raise ContractError("weak-oracle run requested but the system has no weak oracle")

    sorted_order = sort_desc(weights, order)
    result: frozenset = frozenset()
    steps = []
    for e in sorted_order:
        if weak:
            ok = oracle.weak_indep(result, e)
        else:
            ok = oracle.indep(result | {e})
        if ok:
            result = result | {e}
        steps.append((e, bool(ok)))
    return GreedyRun(sorted_order, result, tuple(steps))


class TightnessWitness(NamedTuple):
    cost: dict
    order: tuple[str, ...]
    X: frozenset
    subset: frozenset
    quotient: Fraction


def tightness_witness(sys: ExplicitSetSystem) -> TightnessWitness:
    """Cost function, order and independent X on which greedy hits the rank quotient exactly.

    Picks the subset F attaining the rank quotient that is smallest by
    (cardinality, lexicographic) order, a smallest basis B1 and a largest
    basis B2 of F (each lexicographically first), sets c = 1 on F and 0
    elsewhere, and orders B1 before F - B1 before E - F.  Greedy then returns
    weight |B1| while c(B2) = |B2|.
    """
    lower, upper = rank_tables(sys)
    q = min(frac(lo, hi) for lo, hi in zip(lower, upper))
    F_mask = min(
        (m for m in range(1 << sys.n) if frac(lower[m], upper[m]) == q),
        key=lambda m: set_key(sys.set_of(m)),
    )
    F = sys.set_of(F_mask)
    bs = bases_of(sys, F)
    B1 = min((B for B in bs if len(B) == lower[F_mask]), key=set_key)
    B2 = min((B for B in bs if len(B) == upper[F_mask]), key=set_key)
    order = tuple(sorted(B1)) + tuple(sorted(F - B1)) + tuple(sorted(set(sys.carrier) - F))
    cost = {e: (1 if e in F else 0) for e in sys.carrier}
    return TightnessWitness(cost, order, B2, F, q)
