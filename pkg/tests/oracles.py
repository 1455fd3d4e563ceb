"""Brute-force reference implementations the tests check against.

Everything here enumerates subsets directly and stays independent of the
package's algorithmic paths.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from thresholdgames.games import SimpleGame, coalition_key
from thresholdgames.graphs import BipartiteGraph, Graph


def brute_maximal_losing(game: SimpleGame) -> list[frozenset[int]]:
    out = []
    for r in range(game.n + 1):
        for c in combinations(game.players, r):
            s = frozenset(c)
            if game.is_winning(s):
                continue
            if all(game.is_winning(s | {i}) for i in game.players if i not in s):
                out.append(s)
    return sorted(out, key=coalition_key)


def brute_matching_size(g: Graph) -> int:
    adj = g.adjacency()

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length()
        result = best(mask & ~(1 << (v - 1)))
        for u in adj[v]:
            if mask >> (u - 1) & 1:
                result = max(result, 1 + best(mask & ~(1 << (v - 1)) & ~(1 << (u - 1))))
        return result

    return best((1 << g.n) - 1)


def brute_mwis_value(g: BipartiteGraph, weights) -> Fraction:
    vertices = sorted(g.a_side | g.b_side, key=repr)
    best = Fraction(0)
    for r in range(len(vertices) + 1):
        for c in combinations(vertices, r):
            chosen = set(c)
            if any(a in chosen and b in chosen for a, b in g.edges):
                continue
            best = max(best, sum((weights[v] for v in c), Fraction(0)))
    return best


def independent_sets(g: Graph) -> set[frozenset[int]]:
    adj = g.adjacency()
    out = set()
    for r in range(g.n + 1):
        for c in combinations(g.vertices(), r):
            chosen = set(c)
            if any(u in chosen for v in chosen for u in adj[v]):
                continue
            out.add(frozenset(chosen))
    return out


def brute_maximal_independent_sets(g: Graph) -> list[frozenset[int]]:
    sets = independent_sets(g)
    out = [s for s in sets if not any(s < t for t in sets)]
    return sorted(out, key=lambda s: tuple(sorted(s)))


def brute_max_ratio(g: BipartiteGraph) -> tuple[Fraction, frozenset]:
    """Maximum |S|/|N(S)| with a maximum-cardinality witness, by enumeration."""
    a_list = sorted(g.a_side, key=repr)
    masks = {a: g.neighborhood(frozenset({a})) for a in a_list}
    best: Fraction | None = None
    witness: frozenset | None = None
    for r in range(1, len(a_list) + 1):
        for c in combinations(a_list, r):
            nbhd: set = set()
            for a in c:
                nbhd |= masks[a]
            ratio = Fraction(len(c), len(nbhd))
            if best is None or ratio > best or (ratio == best and len(c) > len(witness)):
                best = ratio
                witness = frozenset(c)
    return best, witness


def brute_desirability_geq(game: SimpleGame, i: int, j: int) -> bool:
    rest = [p for p in game.players if p not in (i, j)]
    for r in range(len(rest) + 1):
        for c in combinations(rest, r):
            s = frozenset(c)
            if game.value(s | {j}) > game.value(s | {i}):
                return False
    return True


def two_tier_game(n: int, strong: int, need_strong: int, size_needed: int) -> SimpleGame:
    """Complete game: win iff the coalition has at least ``need_strong`` of
    players 1..strong and at least ``size_needed`` players in total."""
    coals = []
    for picked in range(need_strong, strong + 1):
        rest = size_needed - picked
        if rest < 0 or rest > n - strong:
            continue
        for s_pick in combinations(range(1, strong + 1), picked):
            for w_pick in combinations(range(strong + 1, n + 1), rest):
                coals.append(frozenset(s_pick + w_pick))
    minimal = [c for c in coals if not any(d < c for d in coals)]
    return SimpleGame(n, tuple(minimal))


def random_antichain(rng, n: int, count: int) -> SimpleGame:
    """Random monotone game via rejection sampling (test-local randomness)."""
    kept: list[frozenset[int]] = []
    tries = 0
    while len(kept) < count and tries < 400:
        tries += 1
        size = rng.randint(1, n)
        c = frozenset(rng.sample(range(1, n + 1), size))
        if any(c <= d or d <= c for d in kept):
            continue
        kept.append(c)
    if not kept:
        kept = [frozenset(range(1, n + 1))]
    return SimpleGame(n, tuple(kept))
