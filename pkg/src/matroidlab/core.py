"""Set systems: axiom checks, bases, circuits, ranks, rank quotient and duals.

Two representations are used throughout the package:

* :class:`ExplicitSetSystem` lists every independent set.  Exhaustive
  operations (axiom checks, rank quotient, duals) need this form.
* :class:`OracleSystem` only knows how to answer independence queries, plus
  optionally a weak oracle and a circuit oracle.  The algorithms work on this
  form; an explicit system converts with :meth:`ExplicitSetSystem.to_oracle`.

Subsets are ``frozenset`` objects of element ids (non-empty strings without
whitespace).  Wherever an iteration order matters, elements are visited in
lexicographic order of their ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .errors import ContractError, InputError

Element = str
Subset = frozenset

IndepFn = Callable[[frozenset], bool]
WeakIndepFn = Callable[[frozenset, str], bool]
CircuitFn = Callable[[frozenset, str], frozenset]

#: Exhaustive operations refuse larger carriers.
MAX_EXPLICIT_CARRIER = 20


def check_element(e: object) -> str:
    if not isinstance(e, str) or not e or any(ch.isspace() for ch in e):
        raise InputError(f"invalid element id {e!r}: need a non-empty string without whitespace")
    return e


def set_key(s: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Sort key ordering sets by cardinality, then lexicographically."""
    t = tuple(sorted(s))
    return len(t), t


def format_set(s: Iterable[str]) -> str:
    """Space separated sorted elements, ``-`` for the empty set."""
    t = sorted(s)
    return " ".join(t) if t else "-"


@dataclass(frozen=True)
class OracleSystem:
    """A set system known only through an independence oracle.

    ``weak_indep(X, x)`` may only be asked when X is independent and x is not
    in X; it answers whether X + x is independent.  ``circuit_minus(X, y)`` may
    only be asked when X is independent and X + y is dependent; it returns the
    unique circuit of X + y without y.
    """

    carrier: tuple[str, ...]
    indep: IndepFn
    weak_indep: Optional[WeakIndepFn] = None
    circuit_minus: Optional[CircuitFn] = None

    def __post_init__(self) -> None:
        elements = [check_element(e) for e in self.carrier]
        if len(set(elements)) != len(elements):
            raise InputError("duplicate element in carrier")
        object.__setattr__(self, "carrier", tuple(sorted(elements)))


@dataclass(frozen=True)
class ExplicitSetSystem:
    """A finite carrier together with the full list of its independent sets.

    The constructor canonicalises its input: ``carrier`` becomes a sorted
    tuple and ``family`` a deduplicated tuple of sorted tuples, ordered by
    cardinality and then lexicographically.  Equality is structural.

    >>> s = ExplicitSetSystem(["2", "1"], [[], ["1"], ["2", "1"], ["1", "2"]])
    >>> s.family
    ((), ('1',), ('1', '2'))
    """

    carrier: tuple[str, ...]
    family: tuple[tuple[str, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)
    _order: tuple = field(init=False, repr=False, compare=False)
    _maskset: frozenset = field(init=False, repr=False, compare=False)
    _oracle: Optional[OracleSystem] = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        if isinstance(self.carrier, str):
            raise InputError("carrier must be a collection of element ids, not a string")
        elements = sorted({check_element(e) for e in self.carrier})
        index = {e: i for i, e in enumerate(elements)}
        masks = set()
        for member in self.family:
            if isinstance(member, str):
                raise InputError(f"family member {member!r} must be a collection, not a string")
            m = 0
            for e in member:
                if e not in index:
                    raise InputError(
                        f"family member {format_set(map(str, member))!r} is not a subset of the carrier"
                    )
                m |= 1 << index[e]
            masks.add(m)
        ordered = sorted(masks, key=lambda m: (bin(m).count("1"), _mask_tuple(elements, m)))
        object.__setattr__(self, "carrier", tuple(elements))
        object.__setattr__(self, "family", tuple(_mask_tuple(elements, m) for m in ordered))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_order", tuple(ordered))
        object.__setattr__(self, "_maskset", frozenset(masks))

    # bitmask view, bit i <-> carrier[i]

    @property
    def n(self) -> int:
        return len(self.carrier)

    @property
    def masks(self) -> tuple[int, ...]:
        """Independent sets as bitmasks, in family order."""
        return self._order

    def has_mask(self, m: int) -> bool:
        return m in self._maskset

    def mask_of(self, X: Iterable[str]) -> int:
        m = 0
        for e in X:
            try:
                m |= 1 << self._index[e]
            except KeyError:
                raise InputError(f"element {e!r} is not in the carrier") from None
        return m

    def set_of(self, m: int) -> frozenset:
        return frozenset(self.carrier[i] for i in range(self.n) if m >> i & 1)

    # set view

    @property
    def members(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(t) for t in self.family)

    def indep(self, X: Iterable[str]) -> bool:
        m = 0
        for e in X:
            i = self._index.get(e)
            if i is None:
                return False
            m |= 1 << i
        return m in self._maskset

    def to_oracle(self) -> OracleSystem:
        """Oracle view of this system; built once and reused."""
        if self._oracle is None:
            o = OracleSystem(self.carrier, self.indep, weak_indep=lambda X, x: self.indep(X | {x}))
            object.__setattr__(self, "_oracle", o)
        return self._oracle


AnySystem = Union[ExplicitSetSystem, OracleSystem]


def _mask_tuple(elements, m: int) -> tuple[str, ...]:
    return tuple(elements[i] for i in range(len(elements)) if m >> i & 1)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def as_oracle(sys: AnySystem) -> OracleSystem:
    if isinstance(sys, OracleSystem):
        return sys
    if isinstance(sys, ExplicitSetSystem):
        return sys.to_oracle()
    raise TypeError(f"expected a set system, got {type(sys).__name__}")


def materialize(sys: AnySystem, limit: int = 16) -> ExplicitSetSystem:
    """Query the oracle on every subset of the carrier and list the independent ones."""
    if isinstance(sys, ExplicitSetSystem):
        return sys
    E = sys.carrier
    if len(E) > limit:
        raise InputError(f"carrier of size {len(E)} is too large to materialise (limit {limit})")
    family = []
    for m in range(1 << len(E)):
        X = frozenset(E[i] for i in range(len(E)) if m >> i & 1)
        if sys.indep(X):
            family.append(X)
    return ExplicitSetSystem(E, family)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`check_axioms`.

    ``witness_violation`` is a pair ``(X, Y)`` falsifying the first failed
    axiom: for (M1) ``(∅, ∅)``; for (M2) a member X with a missing subset Y;
    for (M3) members with ``|X| > |Y|`` and no augmenting element.
    """

    m1: bool
    m2: bool
    m3: bool
    witness_violation: Optional[tuple[frozenset, frozenset]] = None

    @property
    def is_independence_system(self) -> bool:
        return self.m1 and self.m2

    @property
    def is_matroid(self) -> bool:
        return self.m1 and self.m2 and self.m3


def _m2_violation(sys: ExplicitSetSystem) -> Optional[tuple[int, int]]:
    # one-element removals suffice: downward closure then follows by induction
    for X in sys.masks:
        b = X
        while b:
            low = b & -b
            if not sys.has_mask(X & ~low):
                return X, X & ~low
            b &= b - 1
    return None


def _m3_violation(sys: ExplicitSetSystem) -> Optional[tuple[int, int]]:
    for X in sys.masks:
        cx = _popcount(X)
        for Y in sys.masks:
            if cx <= _popcount(Y):
                continue
            d = X & ~Y
            while d:
                low = d & -d
                if sys.has_mask(Y | low):
                    break
                d &= d - 1
            else:
                return X, Y
    return None


def check_axioms(sys: ExplicitSetSystem) -> AxiomReport:
    """Exhaustively test (M1) ∅ ∈ F, (M2) downward closure and (M3) augmentation."""
    m1 = sys.has_mask(0)
    v2 = _m2_violation(sys)
    v3 = _m3_violation(sys)
    witness = None
    if not m1:
        witness = (frozenset(), frozenset())
    elif v2 is not None:
        witness = (sys.set_of(v2[0]), sys.set_of(v2[1]))
    elif v3 is not None:
        witness = (sys.set_of(v3[0]), sys.set_of(v3[1]))
    return AxiomReport(m1, v2 is None, v3 is None, witness)


def is_independence_system(sys: ExplicitSetSystem) -> bool:
    return sys.has_mask(0) and _m2_violation(sys) is None


def _require_independence_system(sys: ExplicitSetSystem) -> None:
    if not is_independence_system(sys):
        raise ContractError("set system is not an independence system (M1/M2 fail)")


def bases_of(sys: ExplicitSetSystem, X: Iterable[str]) -> frozenset:
    """Inclusion-maximal independent subsets of X."""
    xm = sys.mask_of(X)
    inside = [F for F in sys.masks if F & ~xm == 0]
    return frozenset(
        sys.set_of(F) for F in inside if not any(F != G and F & ~G == 0 for G in inside)
    )


def bases(sys: ExplicitSetSystem) -> frozenset:
    return bases_of(sys, sys.carrier)


def circuits_of(sys: ExplicitSetSystem) -> frozenset:
    """Inclusion-minimal dependent subsets of the carrier."""
    if sys.n > MAX_EXPLICIT_CARRIER:
        raise InputError(f"carrier too large for exhaustive circuit search ({sys.n})")
    found: list[int] = []
    for m in sorted(range(1 << sys.n), key=_popcount):
        if sys.has_mask(m):
            continue
        if not any(c & ~m == 0 for c in found):
            found.append(m)
    return frozenset(sys.set_of(c) for c in found)


def rank_pair(sys: ExplicitSetSystem, X: Iterable[str]) -> tuple[int, int]:
    """Return ``(lower rank, rank)``: sizes of the smallest and largest bases of X."""
    sizes = [len(B) for B in bases_of(sys, X)]
    if not sizes:
        raise ContractError("X has no basis; the empty set is not independent")
    return min(sizes), max(sizes)


def frac(a: int, b: int) -> Fraction:
    """``a / b`` with the convention that equal arguments give 1 (so 0/0 = 1).

    Raises ZeroDivisionError for ``b == 0 != a``.
    """
    if a == b:
        return Fraction(1)
    return Fraction(a, b)


def _extensions(sys: ExplicitSetSystem) -> dict[int, int]:
    """For each independent F, the mask of elements e with F + e independent."""
    ext = {}
    for F in sys.masks:
        free = ~F & ((1 << sys.n) - 1)
        e = 0
        while free:
            low = free & -free
            if sys.has_mask(F | low):
                e |= low
            free &= free - 1
        ext[F] = e
    return ext


def rank_tables(sys: ExplicitSetSystem) -> tuple[list[int], list[int]]:
    """Lower and upper rank of every subset, indexed by bitmask.

    F is a basis of X iff F ⊆ X and no element of X extends F.  Checking
    single-element extensions is enough because the system is downward closed.
    """
    _require_independence_system(sys)
    if sys.n > MAX_EXPLICIT_CARRIER:
        raise InputError(f"carrier too large for exhaustive ranks ({sys.n})")
    ext = _extensions(sys)
    size = 1 << sys.n
    lower = [0] * size
    upper = [0] * size
    for X in range(size):
        lo, hi = sys.n + 1, -1
        for F, e in ext.items():
            if F & ~X == 0 and e & X == 0:
                c = _popcount(F)
                lo = min(lo, c)
                hi = max(hi, c)
        lower[X], upper[X] = lo, hi
    return lower, upper


def rank_quotient(sys: ExplicitSetSystem) -> Fraction:
    """Minimum over all X ⊆ E of frac(lower rank, rank); equals 1 exactly for matroids."""
    lower, upper = rank_tables(sys)
    return min(frac(lo, hi) for lo, hi in zip(lower, upper))


def dual(sys: ExplicitSetSystem) -> ExplicitSetSystem:
    """The system whose independent sets avoid at least one basis of ``sys``."""
    _require_independence_system(sys)
    ext = _extensions(sys)
    maximal = [F for F, e in ext.items() if e == 0]
    family = [m for m in range(1 << sys.n) if any(m & B == 0 for B in maximal)]
    return ExplicitSetSystem(sys.carrier, [sys.set_of(m) for m in family])


def fundamental_circuit(sys: AnySystem, X: Iterable[str], y: str) -> frozenset:
    """The unique circuit inside X + y, for independent X and dependent X + y.

    An element z lies on the circuit iff deleting it from X + y restores
    independence.
    """
    oracle = as_oracle(sys)
    X = frozenset(X)
    if y not in oracle.carrier or not X <= set(oracle.carrier):
        raise ContractError("X and y must lie in the carrier")
    if y in X:
        raise ContractError(f"{y!r} is already in X")
    if not oracle.indep(X):
        raise ContractError("X is not independent")
    Xy = X | {y}
    if oracle.indep(Xy):
        raise ContractError(f"X + {y!r} is independent, there is no circuit")
    return frozenset(z for z in Xy if oracle.indep(Xy - {z}))


def greedy_rank(sys: AnySystem, Q: Iterable[str]) -> int:
    """Rank of Q in a matroid, by one insertion pass over Q in sorted order."""
    oracle = as_oracle(sys)
    current: frozenset = frozenset()
    for e in sorted(Q):
        if oracle.indep(current | {e}):
            current = current | {e}
    return len(current)
