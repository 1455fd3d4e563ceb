"""Reproducible instance generators.

Randomness comes from a self-contained 64-bit linear congruential generator
so that instances are identical across runs, platforms and languages:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

seeded with ``state = seed mod 2^64`` and stepped once before the first
draw.  Each draw exposes the top 32 bits; ``randint(lo, hi)`` reduces a
draw modulo the span, and subset masks take the low n bits of a full
64-bit state.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .errors import InvalidInputError, PreconditionError
from .games import Coalition, SimpleGame, game_from_edges
from .graphs import Graph, BipartiteGraph, max_independent_set_exact, strong_product_p2

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """Deterministic 64-bit linear congruential generator."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64
        self._step()

    def _step(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK64
        return self.state

    def next_u32(self) -> int:
        return self._step() >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction, documented)."""
        if hi < lo:
            raise InvalidInputError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u32() % (hi - lo + 1)

    def subset_mask(self, n: int) -> int:
        return self._step() & ((1 << n) - 1)

    def chance(self, percent: int) -> bool:
        return self.randint(0, 99) < percent


def cycle_game(n: int) -> SimpleGame:
    """The graphic game on the n-cycle (even n >= 4); its threshold value
    is n/4."""
    if n < 4 or n % 2 != 0:
        raise InvalidInputError(f"cycle games need an even n >= 4, got {n}")
    return SimpleGame(
        n=n,
        min_winning=tuple(frozenset({i, i % n + 1}) for i in range(1, n + 1)),
    )


def strong_product_game(g: Graph, max_n: int = 10) -> tuple[SimpleGame, Fraction]:
    """The graphic game on the strong product of g with a single edge, plus
    its known threshold value: half the independence number of g."""
    if g.n > max_n:
        raise PreconditionError(f"strong product games are guarded at n <= {max_n}")
    product = strong_product_p2(g)
    _, k = max_independent_set_exact(g)
    return game_from_edges(product.n, product.edges), Fraction(k, 2)


def random_monotone_game(n: int, count: int, seed: int, budget_factor: int = 200) -> SimpleGame:
    """A seeded random antichain of ``count`` minimal winning coalitions.

    Coalitions are sampled as uniform nonempty subsets; a sample is kept
    only if it neither contains nor is contained in a kept one.  When the
    sampling budget runs out before reaching ``count``, the smaller
    antichain is returned with a warning.
    """
    if n < 1 or n > 16:
        raise PreconditionError(f"random games are guarded at 1 <= n <= 16, got {n}")
    if count < 1:
        raise InvalidInputError("count must be positive")
    rng = Lcg(seed)
    kept: list[int] = []
    budget = budget_factor * count
    while len(kept) < count and budget > 0:
        budget -= 1
        mask = rng.subset_mask(n)
        if mask == 0:
            continue
        if any(m & mask == m or m & mask == mask for m in kept):
            continue
        kept.append(mask)
    if not kept:
        kept = [(1 << n) - 1]
    if len(kept) < count:
        warnings.warn(
            f"antichain capacity exhausted: built {len(kept)} of {count} coalitions",
            stacklevel=2,
        )
    coalitions = tuple(
        frozenset(i + 1 for i in range(n) if mask >> i & 1) for mask in kept
    )
    return SimpleGame(n=n, min_winning=coalitions)


def weighted_voting_game(weights: list[Fraction], quota: Fraction) -> SimpleGame:
    """The simple game of nonnegative weights and a positive quota.

    A coalition wins exactly when its weight reaches the quota; minimal
    winners are extracted exhaustively (guarded at 16 players).  The result
    always has threshold value below 1.
    """
    n = len(weights)
    if n < 1 or n > 16:
        raise PreconditionError(f"weighted games are guarded at 1 <= n <= 16, got {n}")
    if any(w < 0 for w in weights):
        raise InvalidInputError("weights must be nonnegative")
    if quota <= 0:
        raise InvalidInputError("the quota must be positive")
    minimal: list[Coalition] = []
    for mask in range(1, 1 << n):
        total = sum(
            (weights[i] for i in range(n) if mask >> i & 1), Fraction(0)
        )
        if total < quota:
            continue
        if all(
            total - weights[i] < quota for i in range(n) if mask >> i & 1
        ):
            minimal.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    if not minimal:
        raise InvalidInputError("no coalition reaches the quota")
    return SimpleGame(n=n, min_winning=tuple(minimal))


def random_graph(n: int, edge_percent: int, seed: int, ensure_no_isolated: bool = False) -> Graph:
    """Seeded Erdos-Renyi-style graph; optionally repairs isolated vertices
    by joining each to its cyclic successor."""
    if n < 1:
        raise InvalidInputError("need at least one vertex")
    rng = Lcg(seed)
    edges: set[tuple[int, int]] = set()
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.chance(edge_percent):
                edges.add((u, v))
    if ensure_no_isolated:
        if n < 2:
            raise InvalidInputError("cannot de-isolate a single vertex")
        touched = {x for e in edges for x in e}
        for v in range(1, n + 1):
            if v not in touched:
                u = v % n + 1
                edges.add((min(u, v), max(u, v)))
                touched.update((u, v))
    return Graph(n=n, edges=frozenset(edges))


def random_bipartite_matchable(
    a_size: int, b_size: int, extra_percent: int, seed: int
) -> BipartiteGraph:
    """Seeded bipartite graph with A matchable into B by construction.

    Vertices are 1..a_size on the A side and a_size+1..a_size+b_size on the
    B side; a perfect matching skeleton (i, a_size + i) is always present
    and random extra edges are added on top.
    """
    if a_size < 1 or b_size < a_size:
        raise InvalidInputError(
            f"need 1 <= |A| <= |B|, got |A| = {a_size}, |B| = {b_size}"
        )
    rng = Lcg(seed)
    edges = {(i, a_size + i) for i in range(1, a_size + 1)}
    for a in range(1, a_size + 1):
        for b in range(a_size + 1, a_size + b_size + 1):
            if rng.chance(extra_percent):
                edges.add((a, b))
    return BipartiteGraph(
        a_side=frozenset(range(1, a_size + 1)),
        b_side=frozenset(range(a_size + 1, a_size + b_size + 1)),
        edges=frozenset(edges),
    )
