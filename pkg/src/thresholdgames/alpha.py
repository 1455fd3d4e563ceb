"""Exact critical threshold values of simple games.

The threshold value is the optimum of

    min a   s.t.  p(W) >= 1 for winning W,   p(L) <= a for losing L,   p >= 0,

restricted to minimal winning and maximal losing coalitions, which is
enough by monotonicity.  Three routes are provided: ``alpha_exact``
(minimal winners plus enumerated maximal losing coalitions),
``alpha_brute`` (every winning and every losing coalition, no maximality
reasoning; the independent oracle), and ``alpha_bipartite_cg`` (graphic
bipartite games with a maximum-weight-independent-set separation oracle
instead of coalition enumeration).

All three share one driver: solve the program restricted to an active set,
ask a separator for violated constraints, repeat until none exist; the
final basic solution is then optimal for the full program.  Small pools are
installed upfront so the loop is only exercised when enumeration is large.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InvalidInputError, PreconditionError
from .games import (
    Coalition,
    PayoffVector,
    SimpleGame,
    coalition_key,
    coalition_of,
    game_from_edges,
    mask_of,
    maximal_losing,
    preprocess,
    winning_table,
)
from .graphs import BipartiteGraph, Graph, mwis_bipartite
from .simplex import (
    GREATER_EQUAL,
    LESS_EQUAL,
    OPTIMAL,
    LinearProgram,
    LpResult,
    solve_lp_exact,
)

#: Abort enumeration-backed solving beyond this many maximal losing
#: coalitions; the TG_MAX_COALITIONS environment variable overrides it.
DEFAULT_MAX_COALITIONS = 200_000

#: Pools at most this large skip constraint generation entirely.
_UPFRONT_LIMIT = 64

_BATCH = 8


def coalition_cap() -> int:
    raw = os.environ.get("TG_MAX_COALITIONS")
    if raw is None:
        return DEFAULT_MAX_COALITIONS
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"TG_MAX_COALITIONS is not an integer: {raw!r}") from exc


@dataclass(frozen=True)
class AlphaResult:
    """Exact threshold value, an attaining payoff, and tight constraints."""

    alpha: Fraction
    payoff: PayoffVector
    binding_losing: tuple[Coalition, ...]
    binding_winning: tuple[Coalition, ...]


Separator = Callable[[Sequence[Fraction], Fraction], tuple[list[int], list[int]]]


def _threshold_lp(n: int, winning: Iterable[int], losing: Iterable[int]) -> LinearProgram:
    zero, one = Fraction(0), Fraction(1)
    constraints = []
    for w in winning:
        coeffs = tuple(one if w >> i & 1 else zero for i in range(n)) + (zero,)
        constraints.append((coeffs, GREATER_EQUAL, one))
    for l in losing:
        coeffs = tuple(one if l >> i & 1 else zero for i in range(n)) + (-one,)
        constraints.append((coeffs, LESS_EQUAL, zero))
    return LinearProgram(
        objective=(zero,) * n + (one,),
        constraints=tuple(constraints),
        nonneg=(True,) * (n + 1),
    )


def _mask_value(payoff: Sequence[Fraction], mask: int) -> Fraction:
    total = Fraction(0)
    i = 0
    while mask:
        if mask & 1:
            total += payoff[i]
        mask >>= 1
        i += 1
    return total


def _solve_threshold(
    n: int,
    winning_init: Iterable[int],
    losing_init: Iterable[int],
    separate: Separator | None,
) -> tuple[Fraction, tuple[Fraction, ...], list[int], list[int]]:
    """Constraint-generation driver; returns (alpha, payoff, active pools)."""
    active_w = sorted(set(winning_init))
    active_l = sorted(set(losing_init))
    seen_w = set(active_w)
    seen_l = set(active_l)
    while True:
        result: LpResult = solve_lp_exact(_threshold_lp(n, active_w, active_l))
        assert result.status == OPTIMAL, f"threshold program reported {result.status}"
        payoff = result.x[:n]
        alpha = result.x[n]
        if separate is None:
            return alpha, payoff, active_w, active_l
        new_w, new_l = separate(payoff, alpha)
        new_w = [w for w in new_w if w not in seen_w]
        new_l = [l for l in new_l if l not in seen_l]
        if not new_w and not new_l:
            return alpha, payoff, active_w, active_l
        active_w.extend(new_w)
        seen_w.update(new_w)
        active_l.extend(new_l)
        seen_l.update(new_l)


def _top_violations(scored: list[tuple[Fraction, int]]) -> list[int]:
    scored.sort(key=lambda t: (-t[0], t[1]))
    return [mask for _, mask in scored[:_BATCH]]


def _tight_losing(pool: Iterable[int], payoff: Sequence[Fraction], alpha: Fraction) -> list[int]:
    return [m for m in pool if _mask_value(payoff, m) == alpha]


def _tight_winning(pool: Iterable[int], payoff: Sequence[Fraction]) -> list[int]:
    return [m for m in pool if _mask_value(payoff, m) == 1]


def _coalitions(masks: Iterable[int]) -> tuple[Coalition, ...]:
    return tuple(sorted((coalition_of(m) for m in set(masks)), key=coalition_key))


def _solve_with_pool(
    n: int, winning_pool: list[int], losing_pool: list[int]
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Solve with fully known constraint pools, generating constraints
    lazily from any side large enough to bloat the tableau."""
    w_lazy = len(winning_pool) > _UPFRONT_LIMIT
    l_lazy = len(losing_pool) > _UPFRONT_LIMIT
    if not w_lazy and not l_lazy:
        alpha, payoff, _, _ = _solve_threshold(n, winning_pool, losing_pool, None)
        return alpha, payoff
    w_sorted = sorted(winning_pool)
    l_sorted = sorted(losing_pool)
    members = {
        m: [i for i in range(n) if m >> i & 1] for m in w_sorted + l_sorted
    }

    def separate(p: Sequence[Fraction], a: Fraction) -> tuple[list[int], list[int]]:
        bad_w: list[tuple[Fraction, int]] = []
        if w_lazy:
            for m in w_sorted:
                value = sum(p[i] for i in members[m])
                if value < 1:
                    bad_w.append((1 - value, m))
        bad_l: list[tuple[Fraction, int]] = []
        if l_lazy:
            for m in l_sorted:
                value = sum(p[i] for i in members[m])
                if value > a:
                    bad_l.append((value - a, m))
        return _top_violations(bad_w), _top_violations(bad_l)

    alpha, payoff, _, _ = _solve_threshold(
        n,
        [] if w_lazy else winning_pool,
        [] if l_lazy else losing_pool,
        separate,
    )
    return alpha, payoff


def alpha_exact(
    game: SimpleGame,
    *,
    max_losing: int | None = None,
    max_n: int | None = None,
) -> AlphaResult:
    """Exact threshold value from minimal winners and maximal losers.

    The game is preprocessed first (forced payoffs 1 and 0 are merged back
    into the reported payoff); the empty reduced game has value 0.  Refuses
    to enumerate more maximal losing coalitions than the cap allows.
    """
    pre = preprocess(game)
    reduced = pre.reduced
    if reduced.n == 0:
        return AlphaResult(
            alpha=Fraction(0),
            payoff=pre.expand_payoff(()),
            binding_losing=(),
            binding_winning=(),
        )
    pool = [mask_of(c) for c in maximal_losing(reduced, max_n=max_n)]
    cap = coalition_cap() if max_losing is None else max_losing
    if len(pool) > cap:
        raise PreconditionError(
            f"{len(pool)} maximal losing coalitions exceed the cap {cap}; "
            "raise TG_MAX_COALITIONS to proceed"
        )
    winning = list(reduced.winning_masks())
    alpha, payoff = _solve_with_pool(reduced.n, winning, pool)
    binding_l = _tight_losing(pool, payoff, alpha)
    binding_w = _tight_winning(winning, payoff)
    return AlphaResult(
        alpha=alpha,
        payoff=pre.expand_payoff(payoff),
        binding_losing=tuple(
            sorted((pre.expand_coalition(coalition_of(m)) for m in binding_l), key=coalition_key)
        ),
        binding_winning=tuple(
            sorted((pre.expand_coalition(coalition_of(m)) for m in binding_w), key=coalition_key)
        ),
    )


def _inclusion_maximal(masks: list[int]) -> list[int]:
    return [m for m in masks if not any(m != o and m & o == m for o in masks)]


def _inclusion_minimal(masks: list[int]) -> list[int]:
    return [m for m in masks if not any(m != o and m & o == o for o in masks)]


def alpha_brute(game: SimpleGame, *, max_players: int = 12) -> AlphaResult:
    """Independent oracle: one constraint per coalition, no preprocessing.

    Every winning and every losing coalition of the raw game contributes a
    constraint; the separation scans plain subset sums.  Guarded to small n.
    """
    if game.n > max_players:
        raise PreconditionError(
            f"alpha_brute enumerates all 2^n coalitions and is guarded at "
            f"n <= {max_players}; got n = {game.n}"
        )
    if game.n == 0:
        return AlphaResult(Fraction(0), (), (), ())
    n = game.n
    table = winning_table(game)
    winning_pool = [m for m in range(1 << n) if table >> m & 1]
    losing_pool = [m for m in range(1 << n) if not table >> m & 1]

    def separate(p: Sequence[Fraction], a: Fraction) -> tuple[list[int], list[int]]:
        values = [Fraction(0)] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            values[m] = values[m ^ low] + p[low.bit_length() - 1]
        bad_w = [(1 - values[m], m) for m in winning_pool if values[m] < 1]
        bad_l = [(values[m] - a, m) for m in losing_pool if values[m] > a]
        return _top_violations(bad_w), _top_violations(bad_l)

    alpha, payoff, _, _ = _solve_threshold(n, [], [], separate)
    binding_l = _inclusion_maximal(_tight_losing(losing_pool, payoff, alpha))
    binding_w = _inclusion_minimal(_tight_winning(winning_pool, payoff))
    return AlphaResult(
        alpha=alpha,
        payoff=tuple(payoff),
        binding_losing=_coalitions(binding_l),
        binding_winning=_coalitions(binding_w),
    )


def _as_graphic_bipartite(g: BipartiteGraph) -> tuple[int, list[tuple[int, int]]]:
    vertices = g.a_side | g.b_side
    n = len(vertices)
    if vertices != set(range(1, n + 1)):
        raise InvalidInputError("graphic bipartite games need vertices labeled 1..n")
    touched = {x for e in g.edges for x in e}
    isolated = sorted(vertices - touched)
    if isolated:
        raise PreconditionError(f"isolated vertices {isolated}; preprocess the game first")
    return n, sorted((min(e), max(e)) for e in g.edges)


def alpha_bipartite_cg(g: BipartiteGraph) -> AlphaResult:
    """Threshold value of a bipartite graphic game by constraint generation.

    Starts from the edge constraints; each round solves the restricted
    program and asks an exact maximum-weight independent set for a losing
    coalition with p(L) > a, until the oracle certifies none exists.
    """
    n, edges = _as_graphic_bipartite(g)
    adjacency: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    winning = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]

    def separate(p: Sequence[Fraction], a: Fraction) -> tuple[list[int], list[int]]:
        weights = {v: p[v - 1] for v in range(1, n + 1)}
        independent, value = mwis_bipartite(g, weights)
        if value <= a:
            return [], []
        chosen = set(independent)
        for v in range(1, n + 1):  # extend to a maximal independent set
            if v not in chosen and not adjacency[v] & chosen:
                chosen.add(v)
        return [], [sum(1 << (v - 1) for v in chosen)]

    alpha, payoff, _, active_l = _solve_threshold(n, winning, [], separate)
    binding_l = _inclusion_maximal(_tight_losing(active_l, payoff, alpha))
    binding_w = _tight_winning(winning, payoff)
    return AlphaResult(
        alpha=alpha,
        payoff=tuple(payoff),
        binding_losing=_coalitions(binding_l),
        binding_winning=_coalitions(binding_w),
    )


def alpha_of_graph(g: Graph, **kwargs) -> AlphaResult:
    """Threshold value of the graphic game whose winners are the edges."""
    return alpha_exact(game_from_edges(g.n, g.edges), **kwargs)


def alpha_from_independent_sets(
    n: int,
    edges: Iterable[tuple[int, int]],
    independent_sets: Iterable[Coalition],
) -> AlphaResult:
    """Threshold program built from an explicit list of independent sets.

    Used by the fixed-threshold decision procedure, where the maximal
    independent sets of a kP2-free graph are enumerated directly.
    """
    winning = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]
    losing = [mask_of(s) for s in independent_sets]
    alpha, payoff = _solve_with_pool(n, winning, losing)
    binding_l = _tight_losing(losing, payoff, alpha)
    binding_w = _tight_winning(winning, payoff)
    return AlphaResult(
        alpha=alpha,
        payoff=tuple(payoff),
        binding_losing=_coalitions(binding_l),
        binding_winning=_coalitions(binding_w),
    )
