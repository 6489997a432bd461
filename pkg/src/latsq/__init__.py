"""Latin square transversal toolkit.

Constructions (cyclic, half-sum, Bose, Steiner, lifting, prolongation), an
exact transversal-counting engine with an independent brute-force oracle,
and a bounds module that certifies the counting lemma and the closed-form
lower bound by explicit computation at small orders.
"""

from .bounds import (
    BoundReport,
    PartialParallelClass,
    Prop2Record,
    bound_report,
    greedy_step_counts,
    p0,
    partial_parallel_classes,
    s_p,
    steiner_transversal_family,
    theorem1_bound,
    verify_prop2,
)
from .constructions import (
    BosePoint,
    bose_sts,
    cyclic_square,
    half_sum_square,
    known_sts,
    lift_transversal,
    prolongation,
    shifted_diagonal_family,
    square_with_transversal,
    steiner_square,
)
from .core import (
    LatinSquare,
    OrderedTriple,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    extract_subsquare,
    is_transversal,
    validate_latin_square,
    validate_sts,
)
from .engine import (
    AvoidanceMask,
    CountResult,
    brute_force_count,
    count_avoiding,
    count_transversals,
    enumerate_transversals,
    find_disjoint_family,
)
from .errors import LatsqError

__version__ = "0.1.0"

__all__ = [
    "AvoidanceMask",
    "BosePoint",
    "BoundReport",
    "CountResult",
    "LatinSquare",
    "LatsqError",
    "OrderedTriple",
    "PartialParallelClass",
    "Prop2Record",
    "SteinerTripleSystem",
    "Transversal",
    "TransversalFamily",
    "bose_sts",
    "bound_report",
    "brute_force_count",
    "count_avoiding",
    "count_transversals",
    "cyclic_square",
    "enumerate_transversals",
    "extract_subsquare",
    "find_disjoint_family",
    "greedy_step_counts",
    "half_sum_square",
    "is_transversal",
    "known_sts",
    "lift_transversal",
    "p0",
    "partial_parallel_classes",
    "prolongation",
    "s_p",
    "shifted_diagonal_family",
    "square_with_transversal",
    "steiner_square",
    "steiner_transversal_family",
    "theorem1_bound",
    "validate_latin_square",
    "validate_sts",
    "verify_prop2",
]
