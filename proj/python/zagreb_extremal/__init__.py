"""Exact extremal values and bounds for the sum of squared degrees of graphs.

f(n, m) is the maximum of the first Zagreb index (the sum of squared vertex
degrees) over all simple graphs with n vertices and m edges. All values and
inequality checks are computed in exact integer arithmetic.
"""

from zagreb_extremal._core import (
    Graph,
    OracleResult,
    Surd,
    binom2,
    brute_force_max,
    brute_force_sweep,
    check_bo1,
    check_bo2,
    check_bo3,
    check_bo4,
    check_lemma_pro1,
    check_lemma_pro3,
    check_prop2,
    check_prop_pr0,
    co_decompose,
    complement,
    complement_transfer,
    de_caen_D,
    extremal_graph,
    f_exact,
    from_edge_list,
    isqrt,
    nikiforov_F,
    quasi_complete,
    quasi_star,
    ratio_D_over_f_exceeds,
    theorem1_bounds,
    triangular_decompose,
    value_C,
    value_S,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "OracleResult",
    "Surd",
    "binom2",
    "brute_force_max",
    "brute_force_sweep",
    "check_bo1",
    "check_bo2",
    "check_bo3",
    "check_bo4",
    "check_lemma_pro1",
    "check_lemma_pro3",
    "check_prop2",
    "check_prop_pr0",
    "co_decompose",
    "complement",
    "complement_transfer",
    "de_caen_D",
    "extremal_graph",
    "f_exact",
    "from_edge_list",
    "isqrt",
    "nikiforov_F",
    "quasi_complete",
    "quasi_star",
    "ratio_D_over_f_exceeds",
    "theorem1_bounds",
    "triangular_decompose",
    "value_C",
    "value_S",
]
