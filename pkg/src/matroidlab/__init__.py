"""Matroids, greedoids and the greedy / intersection algorithms on them."""

from .core import (
    AxiomReport,
    ExplicitSetSystem,
    OracleSystem,
    bases,
    bases_of,
    check_axioms,
    circuits_of,
    dual,
    frac,
    fundamental_circuit,
    greedy_rank,
    materialize,
    rank_pair,
    rank_quotient,
)
from .errors import ContractError, InputError, MatroidError, ParseError
from .greedoid import GreedoidReport, accessible_ordering, classify_greedoid, find_best_candidate, greedoid_greedy
from .greedy import GreedyRun, best_in_greedy, set_cost, sort_desc, tightness_witness
from .intersect import (
    DoubleMatroid,
    ExchangeGraph,
    augment,
    build_exchange_graph,
    find_augmenting_path,
    matroid_intersection,
    optimality_certificate,
    verify_min_max,
)

__version__ = "0.1.0"
