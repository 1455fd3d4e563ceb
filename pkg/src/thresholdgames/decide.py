"""Fixed-threshold decision for graphic games: is the threshold value <= a?

Uses the smallest k with k/2 > a.  If the graph contains k independent
induced edges, picking the better endpoint of each yields an independent
set worth at least k/2 > a, so the answer is no with that witness.
Otherwise the graph is kP2-free, its maximal independent sets are few
enough to enumerate, and the threshold program over them settles the
question exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alpha import AlphaResult, alpha_from_independent_sets
from .errors import InvalidInputError, PreconditionError
from .graphs import Graph, enumerate_mis, find_induced_kp2


@dataclass(frozen=True)
class ThresholdDecision:
    """Outcome of the decision procedure.

    ``witness`` carries the induced independent edges when those alone
    refute the bound; ``alpha`` carries the exact value when the linear
    program ran.  ``strict`` records which comparison was asked for.
    """

    holds: bool
    k: int
    strict: bool
    alpha: Fraction | None = None
    witness: tuple[tuple[int, int], ...] | None = None
    lp_result: AlphaResult | None = None


def decide_alpha_le(
    g: Graph,
    a: Fraction,
    *,
    strict: bool = False,
    max_k: int = 10,
) -> ThresholdDecision:
    """Decide threshold <= a (or < a with ``strict``) for the graphic game.

    Requires a > 0 and no isolated vertices; refuses k beyond ``max_k``.
    """
    if a <= 0:
        raise InvalidInputError(f"the threshold a must be positive, got {a}")
    isolated = g.isolated_vertices()
    if isolated:
        raise PreconditionError(
            f"isolated vertices {sorted(isolated)}: preprocess the game first"
        )
    two_a = 2 * Fraction(a)
    k = int(two_a) + 1  # smallest integer with k/2 > a
    if k > max_k:
        raise PreconditionError(
            f"deciding a = {a} needs k = {k} independent edges, above the guard {max_k}"
        )
    witness = find_induced_kp2(g, k, max_k=max_k)
    if witness is not None:
        # One endpoint of each induced edge carries >= 1/2, so the k chosen
        # endpoints form an independent set worth >= k/2 > a.
        return ThresholdDecision(
            holds=False,
            k=k,
            strict=strict,
            witness=tuple(witness),
        )
    result = alpha_from_independent_sets(g.n, sorted(g.edges), enumerate_mis(g))
    holds = result.alpha < a if strict else result.alpha <= a
    return ThresholdDecision(
        holds=holds,
        k=k,
        strict=strict,
        alpha=result.alpha,
        lp_result=result,
    )
