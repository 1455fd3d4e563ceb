"""Constructive payoff certificates for the threshold-value bounds.

Every scheme returns a `Certificate`: a nonnegative exact payoff, a claimed
bound, and how the bound is normalized (either "every minimal winning
coalition reaches 1, bound caps the losing values", or a plain ratio
bound).  `verify_certificate` re-checks a certificate from scratch against
the game by exact enumeration.

The graph schemes share one pipeline: take the graph of the size-2 winning
pairs, compute its Gallai-Edmonds decomposition, contract each odd
component of G - A to a single vertex, and decompose the resulting
bipartite graph (Tutte set vs. contracted components) into well-spread
parts.  Vertices isolated in the pair graph surface as neighborless
singleton components and land in the final degenerate part.  Per-part
values on the A and B sides vary by scheme; players inside even components
or odd components of size >= 3 always get 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, PreconditionError
from .games import (
    Coalition,
    DesirabilityOrder,
    PayoffVector,
    Preprocessed,
    SimpleGame,
    critical_ratio,
    desirability_geq,
    game_from_edges,
    maximal_losing,
    payoff_total,
    preprocess,
    validate_payoff,
)
from .graphs import BipartiteGraph, GEDecomposition, Graph, gallai_edmonds
from .wellspread import WellSpreadDecomposition, decompose

MIN_WINNING_GE_1 = "min_winning_ge_1"
RATIO = "ratio"

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Certificate:
    """A payoff vector with a claimed exact bound."""

    scheme: str
    payoff: PayoffVector
    claimed_bound: Fraction
    normalization: str

    def __post_init__(self) -> None:
        if self.normalization not in (MIN_WINNING_GE_1, RATIO):
            raise InvalidInputError(f"unknown normalization {self.normalization!r}")
        if self.claimed_bound < 0:
            raise InvalidInputError("claimed bound is negative")
        for v in self.payoff:
            if v < 0:
                raise InvalidInputError("certificate payoff has a negative entry")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    witness: Coalition | None = None


def lambda_shift(lam: Fraction) -> Fraction:
    """The raised B-side value 1/(4(1-lam)); equals 1/4 at lam = 0 and
    satisfies (1-lam) * lambda_shift(lam) = 1/4 exactly."""
    return 1 / (4 * (1 - lam))


# ---------------------------------------------------------------------------
# Shared pipeline.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContractionPipeline:
    ge: GEDecomposition
    gbar: BipartiteGraph
    component_of: dict[int, frozenset[int]]
    decomposition: WellSpreadDecomposition
    interior: frozenset[int]


def contraction_pipeline(g2: Graph) -> ContractionPipeline:
    """Gallai-Edmonds plus contraction of odd components to single vertices.

    Contracted vertices are labeled by the negated minimum original vertex,
    keeping all labels integers.  Even components are left out of the
    bipartite graph entirely.
    """
    ge = gallai_edmonds(g2)
    adj = g2.adjacency()
    component_of = {-min(c): c for c in ge.odd_components}
    edges = set()
    for lbl, comp in component_of.items():
        for a in ge.tutte_set:
            if adj[a] & comp:
                edges.add((a, lbl))
    gbar = BipartiteGraph(
        a_side=frozenset(ge.tutte_set),
        b_side=frozenset(component_of),
        edges=frozenset(edges),
    )
    interior = frozenset(
        v
        for c in ge.even_components
        for v in c
    ) | frozenset(v for c in ge.odd_components if len(c) > 1 for v in c)
    return ContractionPipeline(
        ge=ge,
        gbar=gbar,
        component_of=component_of,
        decomposition=decompose(gbar),
        interior=interior,
    )


def _assemble(pipeline: ContractionPipeline, n: int, part_rule) -> dict[int, Fraction]:
    """Player payoffs from per-part (A-value, B-value) = part_rule(lam).

    B-side values reach players only through singleton components; interiors
    are pinned at 1/2.
    """
    p: dict[int, Fraction] = {}
    for part in pipeline.decomposition.parts:
        a_val, b_val = part_rule(part.lam)
        for a in part.a_part:
            p[a] = a_val
        for lbl in part.b_part:
            comp = pipeline.component_of[lbl]
            if len(comp) == 1:
                (v,) = comp
                p[v] = b_val
    for v in pipeline.interior:
        p[v] = HALF
    assert len(p) == n, "pipeline payoff does not cover every vertex"
    return p


def _pair_graph(game: SimpleGame) -> Graph:
    edges = frozenset(tuple(sorted(c)) for c in game.min_winning if len(c) == 2)
    return Graph(n=game.n, edges=edges)


def _assert_feasible(game: SimpleGame, payoff: PayoffVector) -> None:
    for w in game.min_winning:
        assert payoff_total(payoff, w) >= 1, f"winning coalition {sorted(w)} underpaid"


def _merged(pre: Preprocessed, reduced_p: dict[int, Fraction]) -> PayoffVector:
    vector = tuple(reduced_p[i] for i in range(1, pre.reduced.n + 1))
    return pre.expand_payoff(vector)


# ---------------------------------------------------------------------------
# Schemes.
# ---------------------------------------------------------------------------


def bipartite_quarter_weights(g: BipartiteGraph) -> dict:
    """Well-spread payoff on a bipartite graph: 1 - lam on each A part, lam
    on each B part (0 on isolated vertices, which form the degenerate part).

    Guarantees p(u) + p(v) >= 1 on edges, p >= 1/2 on A, and p(L) <= n/4
    for every independent set L.
    """
    weights: dict = {}
    for part in decompose(g).parts:
        for a in part.a_part:
            weights[a] = 1 - part.lam
        for b in part.b_part:
            weights[b] = part.lam
    return weights


def payoff_bipartite_quarter(g: BipartiteGraph) -> Certificate:
    """Certificate form of `bipartite_quarter_weights` for vertices 1..n."""
    n = g.order()
    if (g.a_side | g.b_side) != set(range(1, n + 1)):
        raise InvalidInputError("certificates need vertices labeled 1..n")
    weights = bipartite_quarter_weights(g)
    payoff = tuple(weights[v] for v in range(1, n + 1))
    cert = Certificate(
        scheme="bipartite-quarter",
        payoff=payoff,
        claimed_bound=Fraction(n, 4),
        normalization=MIN_WINNING_GE_1,
    )
    _assert_feasible(game_from_edges(n, g.edges), payoff)
    return cert


def payoff_graph_quarter(g: Graph) -> Certificate:
    """The n/4 certificate for an arbitrary graph without isolated vertices.

    Tutte-set vertices and singleton odd components carry the well-spread
    bipartite payoff of the contracted graph; everything else gets 1/2.
    """
    isolated = g.isolated_vertices()
    if isolated:
        raise PreconditionError(
            f"isolated vertices {sorted(isolated)}: preprocess the game first"
        )
    if g.n == 0:
        raise PreconditionError("empty graph")
    pipeline = contraction_pipeline(g)
    p = _assemble(pipeline, g.n, lambda lam: (1 - lam, lam))
    payoff = tuple(p[v] for v in range(1, g.n + 1))
    _assert_feasible(game_from_edges(g.n, g.edges), payoff)
    return Certificate(
        scheme="graph-quarter",
        payoff=payoff,
        claimed_bound=Fraction(g.n, 4),
        normalization=MIN_WINNING_GE_1,
    )


def payoff_no_size3(game: SimpleGame) -> Certificate:
    """The n/4 certificate for games without size-3 minimal winners.

    The pair graph gets the shifted well-spread payoff (the B side raised to
    1/(4(1-lam)), the A side lowered to match); the shift puts 1/4 on
    vertices in no winning pair, so coalitions of size >= 4 stay satisfied.
    """
    bad = [c for c in game.min_winning if len(c) == 3]
    if bad:
        raise PreconditionError(
            f"minimal winning coalition {sorted(bad[0])} has size 3"
        )
    pre = preprocess(game)
    bound = Fraction(game.n, 4)
    if pre.reduced.n == 0:
        payoff = pre.expand_payoff(())
        return Certificate("no-size3-quarter", payoff, bound, MIN_WINNING_GE_1)
    pipeline = contraction_pipeline(_pair_graph(pre.reduced))
    p = _assemble(
        pipeline,
        pre.reduced.n,
        lambda lam: (1 - lambda_shift(lam), lambda_shift(lam)),
    )
    payoff = _merged(pre, p)
    _assert_feasible(game, payoff)
    return Certificate("no-size3-quarter", payoff, bound, MIN_WINNING_GE_1)


def payoff_all_size3(game: SimpleGame) -> Certificate:
    """The n/4 certificate for games whose minimal winners all have size 3.

    Tries the uniform payoff 1/3; when some losing coalition is larger than
    3n/4 that fails, and the indicator payoff of the complement of a largest
    losing coalition takes over (its bound |N \\ L| is then below n/4).
    """
    pre = preprocess(game)
    reduced = pre.reduced
    bad = [c for c in reduced.min_winning if len(c) != 3]
    if bad or reduced.n == 0:
        offender = sorted(pre.expand_coalition(bad[0])) if bad else "none"
        raise PreconditionError(
            f"a size-3 scheme needs every minimal winner of size 3; offender: {offender}"
        )
    losers = maximal_losing(reduced)
    biggest = max(losers, key=lambda c: (len(c), [-i for i in sorted(c)]))
    if 4 * len(biggest) <= 3 * reduced.n:
        p = {v: Fraction(1, 3) for v in reduced.players}
        payoff = _merged(pre, p)
        _assert_feasible(game, payoff)
        return Certificate("all-size3-third", payoff, Fraction(game.n, 4), MIN_WINNING_GE_1)
    p = {v: Fraction(1) if v not in biggest else Fraction(0) for v in reduced.players}
    payoff = _merged(pre, p)
    _assert_feasible(game, payoff)
    bound = Fraction(reduced.n - len(biggest))
    assert bound < Fraction(game.n, 4)
    return Certificate("all-size3-indicator", payoff, bound, MIN_WINNING_GE_1)


def payoff_two_sevenths(game: SimpleGame) -> Certificate:
    """The general 2n/7 certificate.

    Blends a base payoff (shifted well-spread values for parts with
    lam >= 1/4, the pair (2/3, 1/3) below) with an alternative that raises
    B-side vertices outside a worst losing coalition to 1/2 and pins the A
    side at 1 - shift or 3/4; the 3:4 mix keeps every minimal winner at 1
    while capping losing coalitions at 2n/7.
    """
    pre = preprocess(game)
    reduced = pre.reduced
    bound = Fraction(2 * game.n, 7)
    if reduced.n == 0:
        payoff = pre.expand_payoff(())
        return Certificate("two-sevenths", payoff, bound, MIN_WINNING_GE_1)
    pipeline = contraction_pipeline(_pair_graph(reduced))

    def base_rule(lam: Fraction) -> tuple[Fraction, Fraction]:
        if lam >= QUARTER:
            return 1 - lambda_shift(lam), lambda_shift(lam)
        return Fraction(2, 3), Fraction(1, 3)

    p_base = _assemble(pipeline, reduced.n, base_rule)
    assert all(v >= Fraction(1, 3) for v in p_base.values()), "base payoff dips below 1/3"

    losers = maximal_losing(reduced)
    base_vector = tuple(p_base[i] for i in range(1, reduced.n + 1))
    best_value = None
    worst: Coalition | None = None
    for c in losers:  # canonical order; first strict improvement keeps ties lexicographic
        value = payoff_total(base_vector, c)
        if best_value is None or value > best_value:
            best_value = value
            worst = c
    assert worst is not None and not reduced.is_winning(worst)

    p_alt: dict[int, Fraction] = {}
    for part in pipeline.decomposition.parts:
        raised = part.lam >= QUARTER
        a_val = 1 - lambda_shift(part.lam) if raised else Fraction(3, 4)
        b_in = lambda_shift(part.lam) if raised else QUARTER
        for a in part.a_part:
            p_alt[a] = a_val
        for lbl in part.b_part:
            comp = pipeline.component_of[lbl]
            if len(comp) == 1:
                (v,) = comp
                p_alt[v] = b_in if v in worst else HALF
    for v in pipeline.interior:
        p_alt[v] = HALF

    p = {v: Fraction(3, 7) * p_base[v] + Fraction(4, 7) * p_alt[v] for v in reduced.players}
    payoff = _merged(pre, p)
    _assert_feasible(game, payoff)
    return Certificate("two-sevenths", payoff, bound, MIN_WINNING_GE_1)


def payoff_complete(game: SimpleGame, order: DesirabilityOrder) -> Certificate:
    """The sqrt(n) * ln(n) ratio certificate for complete games.

    With players listed most desirable first, position i of the first k
    positions (k = last position whose suffix is winning) receives 1/s_i,
    where s_i is the smallest winning-coalition size inside the suffix from
    i; later positions repeat 1/s_k.  The certificate stores the exact
    achieved ratio; the irrational bound comparison belongs to the caller.
    """
    if sorted(order.order) != list(game.players):
        raise InvalidInputError("order is not a permutation of the players")
    pre = preprocess(game)
    reduced = pre.reduced
    if reduced.n == 0:
        payoff = pre.expand_payoff(())
        ratio = critical_ratio(game, payoff)
        assert isinstance(ratio, Fraction)
        return Certificate("complete-sqrt-log", payoff, ratio, RATIO)
    new_of_old = {old: new for new, old in enumerate(pre.old_of_new, start=1)}
    seq = [new_of_old[i] for i in order.order if i in new_of_old]
    for x, y in zip(seq, seq[1:]):
        if not desirability_geq(reduced, x, y):
            raise PreconditionError(
                f"players {pre.old_of_new[x - 1]} and {pre.old_of_new[y - 1]} "
                "are not ordered by desirability"
            )
    pos_of = {player: idx for idx, player in enumerate(seq, start=1)}
    m = reduced.n
    min_pos = {w: min(pos_of[v] for v in w) for w in reduced.min_winning}
    k = max(min_pos.values())  # suffix at a winner's first player is winning
    smallest_size: list[int] = []
    for i in range(1, k + 1):
        sizes = [len(w) for w, mp in min_pos.items() if mp >= i]
        smallest_size.append(min(sizes))
    by_pos = [Fraction(1, s) for s in smallest_size]
    by_pos += [by_pos[k - 1]] * (m - k)
    p = {player: by_pos[pos_of[player] - 1] for player in reduced.players}
    payoff = _merged(pre, p)
    ratio = critical_ratio(game, payoff)
    assert isinstance(ratio, Fraction)
    return Certificate("complete-sqrt-log", payoff, ratio, RATIO)


# ---------------------------------------------------------------------------
# Verification.
# ---------------------------------------------------------------------------


def verify_certificate(game: SimpleGame, cert: Certificate, max_n: int | None = None) -> Verdict:
    """Exact re-check of a certificate against the game.

    For the min-winning normalization: every minimal winner must reach 1 and
    no maximal losing coalition may exceed the bound.  For ratio
    certificates the critical ratio must not exceed the bound.  The verdict
    carries the first offending coalition in canonical order.
    """
    validate_payoff(cert.payoff, game.n)
    if cert.normalization == MIN_WINNING_GE_1:
        for w in game.min_winning:
            value = payoff_total(cert.payoff, w)
            if value < 1:
                return Verdict(
                    ok=False,
                    reason=f"winning coalition {sorted(w)} has value {value} < 1",
                    witness=w,
                )
        worst_value = Fraction(0)
        worst: Coalition | None = None
        for c in maximal_losing(game, max_n=max_n):
            value = payoff_total(cert.payoff, c)
            if value > worst_value:
                worst_value = value
                worst = c
        if worst_value > cert.claimed_bound:
            return Verdict(
                ok=False,
                reason=(
                    f"losing coalition {sorted(worst)} has value {worst_value} "
                    f"> bound {cert.claimed_bound}"
                ),
                witness=worst,
            )
        return Verdict(ok=True)
    ratio = critical_ratio(game, cert.payoff, max_n=max_n)
    if ratio > cert.claimed_bound:
        worst = None
        worst_value = Fraction(0)
        for c in maximal_losing(game, max_n=max_n):
            value = payoff_total(cert.payoff, c)
            if value > worst_value:
                worst_value = value
                worst = c
        return Verdict(
            ok=False,
            reason=f"achieved ratio {ratio} exceeds bound {cert.claimed_bound}",
            witness=worst,
        )
    return Verdict(ok=True)
