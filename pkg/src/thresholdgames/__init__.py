"""Exact critical threshold values of simple games.

A simple game splits coalitions into winning and losing sets; its critical
threshold value is the least worst-case ratio of a losing coalition's
payoff to a winning coalition's payoff over nonnegative payoffs.  The
package computes this value exactly at desk scale, constructs the payoff
certificates behind the n/4, 2n/7 and sqrt(n)*ln(n) bounds, decomposes
graphs (Gallai-Edmonds, well-spread bipartite parts), and decides fixed
thresholds for graphic games, everything cross-checked against brute-force
oracles.
"""

from .alpha import (
    AlphaResult,
    alpha_bipartite_cg,
    alpha_brute,
    alpha_exact,
    alpha_from_independent_sets,
    alpha_of_graph,
)
from .decide import ThresholdDecision, decide_alpha_le
from .errors import InvalidInputError, PreconditionError
from .games import (
    Coalition,
    DesirabilityOrder,
    PayoffVector,
    Preprocessed,
    SimpleGame,
    classify,
    critical_ratio,
    desirability_order,
    game_from_edges,
    maximal_losing,
    preprocess,
)
from .generators import (
    Lcg,
    cycle_game,
    random_bipartite_matchable,
    random_graph,
    random_monotone_game,
    strong_product_game,
    weighted_voting_game,
)
from .graphs import (
    BipartiteGraph,
    BipartiteMatching,
    GEDecomposition,
    Graph,
    enumerate_mis,
    find_induced_kp2,
    gallai_edmonds,
    max_independent_set_exact,
    max_matching_bipartite,
    max_matching_general,
    mwis_bipartite,
    strong_product_p2,
)
from .payoffs import (
    Certificate,
    ContractionPipeline,
    Verdict,
    contraction_pipeline,
    payoff_all_size3,
    payoff_bipartite_quarter,
    payoff_complete,
    payoff_graph_quarter,
    payoff_no_size3,
    payoff_two_sevenths,
    verify_certificate,
)
from .simplex import LinearProgram, LpResult, solve_lp_exact
from .wellspread import (
    WellSpreadDecomposition,
    WellSpreadPart,
    decompose,
    is_well_spread,
    max_ratio_subset,
)

__version__ = "0.1.0"
