"""Simple games given by their minimal winning coalitions.

A simple game on players 1..n is a monotone 0/1 value function; it is stored
canonically as the antichain of minimal winning coalitions.  Coalitions are
plain frozensets of 1-based player indices.  All payoff arithmetic is exact
(`fractions.Fraction`).

Enumerative queries (maximal losing coalitions, desirability) run on a bit
table holding v(S) for every S, encoded as one big integer whose bit at
position m is v of the coalition with member mask m.  Player i corresponds
to index bit 1 << (i - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

from .errors import InvalidInputError, PreconditionError

Coalition = frozenset[int]
PayoffVector = tuple[Fraction, ...]

WEIGHTED = "weighted"
ROUGHLY_WEIGHTED = "roughly_weighted"
ABOVE_ROUGH = "above_rough"

#: Largest player count for which exhaustive coalition enumeration is
#: attempted by default.  Overridable per call.
DEFAULT_ENUMERATION_LIMIT = 24


def coalition_key(c: Coalition) -> tuple[int, ...]:
    """Canonical sort key: the ascending member tuple."""
    return tuple(sorted(c))


def mask_of(c: Coalition) -> int:
    return sum(1 << (i - 1) for i in c)


def coalition_of(mask: int) -> Coalition:
    members = []
    i = 1
    while mask:
        if mask & 1:
            members.append(i)
        mask >>= 1
        i += 1
    return frozenset(members)


def _check_coalition(c: Coalition, n: int, what: str = "coalition") -> None:
    for i in c:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n:
            raise InvalidInputError(f"{what} {sorted(c)} has player {i!r} outside 1..{n}")


@dataclass(frozen=True)
class SimpleGame:
    """A simple game: player count and the minimal-winning antichain.

    The coalition list is canonicalized (sorted by member tuple) on
    construction.  The one degenerate value allowed is the empty game
    (n=0, no coalitions), which preprocessing can produce; it has no
    winning coalitions at all.
    """

    n: int
    min_winning: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError(f"player count {self.n} is negative")
        coalitions = tuple(frozenset(c) for c in self.min_winning)
        if not coalitions:
            if self.n != 0:
                raise InvalidInputError("a nonempty game needs at least one minimal winning coalition")
            object.__setattr__(self, "min_winning", ())
            return
        if self.n == 0:
            raise InvalidInputError("an empty game cannot have winning coalitions")
        for c in coalitions:
            if not c:
                raise InvalidInputError("the empty coalition cannot be winning")
            _check_coalition(c, self.n, "minimal winning coalition")
        coalitions = tuple(sorted(coalitions, key=coalition_key))
        for i, c in enumerate(coalitions):
            for d in coalitions[i + 1:]:
                if c <= d or d <= c:
                    small, big = (c, d) if c <= d else (d, c)
                    raise InvalidInputError(
                        "minimal winning coalitions must form an antichain: "
                        f"{sorted(small)} is contained in {sorted(big)}"
                    )
        object.__setattr__(self, "min_winning", coalitions)

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    def is_winning(self, coalition: Coalition) -> bool:
        """True iff the coalition contains some minimal winning coalition."""
        c = frozenset(coalition)
        _check_coalition(c, self.n)
        return any(w <= c for w in self.min_winning)

    def value(self, coalition: Coalition) -> int:
        return 1 if self.is_winning(coalition) else 0

    def winning_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(c) for c in self.min_winning)


@dataclass(frozen=True)
class DesirabilityOrder:
    """Total order of players, most desirable first."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class Preprocessed:
    """Result of stripping singleton winners and uncovered players.

    ``fixed`` maps removed original players to their forced payoff (1 for a
    player forming a singleton winning coalition, 0 for a player in no
    minimal winning coalition).  ``old_of_new`` maps 1-based reduced player
    indices to original indices.
    """

    reduced: SimpleGame
    fixed: dict[int, Fraction]
    old_of_new: tuple[int, ...]

    def expand_payoff(self, reduced_payoff: PayoffVector) -> PayoffVector:
        """Merge a payoff on the reduced game back to original indexing."""
        if len(reduced_payoff) != self.reduced.n:
            raise InvalidInputError(
                f"payoff length {len(reduced_payoff)} != reduced player count {self.reduced.n}"
            )
        n = self.reduced.n + len(self.fixed)
        out: list[Fraction] = [Fraction(0)] * n
        for old, val in self.fixed.items():
            out[old - 1] = val
        for new_idx, old in enumerate(self.old_of_new, start=1):
            out[old - 1] = reduced_payoff[new_idx - 1]
        return tuple(out)

    def expand_coalition(self, reduced_coalition: Coalition) -> Coalition:
        return frozenset(self.old_of_new[i - 1] for i in reduced_coalition)


# ---------------------------------------------------------------------------
# Bit-table machinery.
#
# ``_masks_without_bit(n, b)`` is the constant whose bit at position m is set
# iff coalition-mask m has index bit b clear; it lets the up-closure and
# desirability scans run as a handful of big-integer operations instead of
# Python loops over all 2^n coalitions.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _masks_without_bit(n: int, b: int) -> int:
    span = 1 << b              # run length of masks sharing bit b
    period = span << 1
    block = (1 << span) - 1    # `span` ones
    count = (1 << n) // period
    return block * (((1 << (period * count)) - 1) // ((1 << period) - 1))


@lru_cache(maxsize=128)
def winning_table(game: SimpleGame) -> int:
    """Big-int table: bit m is 1 iff the coalition with mask m is winning."""
    table = 0
    for w in game.winning_masks():
        table |= 1 << w
    for b in range(game.n):
        zero_positions = _masks_without_bit(game.n, b)
        table |= (table & zero_positions) << (1 << b)
    return table


def maximal_losing(game: SimpleGame, max_n: int | None = None) -> list[Coalition]:
    """All inclusion-maximal losing coalitions, canonically sorted.

    Enumerates the complement of the up-closure of the winning antichain,
    so it is exponential in n; refuses n beyond the limit unless raised.
    """
    limit = DEFAULT_ENUMERATION_LIMIT if max_n is None else max_n
    if game.n > limit:
        raise PreconditionError(
            f"maximal-losing enumeration needs n <= {limit}, got n = {game.n}; "
            "pass max_n to override"
        )
    if game.n == 0:
        return []
    full = (1 << (1 << game.n)) - 1
    table = winning_table(game)
    # L is maximal losing iff L is losing and L + {i} is winning for every
    # absent player i: candidates[m] &= winning[m + 2^b] whenever bit b of m
    # is clear.
    candidates = full & ~table
    for b in range(game.n):
        zero_positions = _masks_without_bit(game.n, b)
        ok_if_absent = (table >> (1 << b)) & zero_positions
        candidates &= ok_if_absent | ~zero_positions
    out = []
    m = candidates
    while m:
        low = m & -m
        out.append(coalition_of(low.bit_length() - 1))
        m ^= low
    return sorted(out, key=coalition_key)


def preprocess(game: SimpleGame) -> Preprocessed:
    """Strip singleton winners (payoff 1) and uncovered players (payoff 0).

    The surviving game has every minimal winning coalition of size >= 2 and
    every remaining player covered by one.  If nothing survives, the reduced
    game is the empty game (its critical threshold value is taken to be 0).
    """
    fixed: dict[int, Fraction] = {}
    for c in game.min_winning:
        if len(c) == 1:
            (i,) = c
            fixed[i] = Fraction(1)
    remaining = [c for c in game.min_winning if not (c & fixed.keys())]
    covered: set[int] = set()
    for c in remaining:
        covered |= c
    for i in game.players:
        if i not in covered and i not in fixed:
            fixed[i] = Fraction(0)
    survivors = sorted(covered)
    new_of_old = {old: new for new, old in enumerate(survivors, start=1)}
    reduced = SimpleGame(
        n=len(survivors),
        min_winning=tuple(frozenset(new_of_old[i] for i in c) for c in remaining),
    )
    return Preprocessed(reduced=reduced, fixed=fixed, old_of_new=tuple(survivors))


def payoff_total(payoff: PayoffVector, coalition: Coalition) -> Fraction:
    return sum((payoff[i - 1] for i in coalition), Fraction(0))


def validate_payoff(payoff: PayoffVector, n: int) -> None:
    if len(payoff) != n:
        raise InvalidInputError(f"payoff length {len(payoff)} != player count {n}")
    for i, v in enumerate(payoff, start=1):
        if v < 0:
            raise InvalidInputError(f"payoff of player {i} is negative: {v}")


def critical_ratio(game: SimpleGame, payoff: PayoffVector, max_n: int | None = None) -> Fraction | float:
    """max p(L)/p(W) over losing L and winning W, for a nonnegative payoff.

    With p >= 0 the maximum is attained at a maximal losing coalition and a
    minimal winning one, so only those are scanned.  Returns ``math.inf``
    when some winning coalition has value 0 while a losing one has positive
    value, and 0 when every losing coalition has value 0.
    """
    validate_payoff(payoff, game.n)
    if game.n == 0:
        return Fraction(0)
    max_losing = max(
        (payoff_total(payoff, c) for c in maximal_losing(game, max_n=max_n)),
        default=Fraction(0),
    )
    min_winning = min(payoff_total(payoff, c) for c in game.min_winning)
    if max_losing == 0:
        return Fraction(0)
    if min_winning == 0:
        return math.inf
    return max_losing / min_winning


def desirability_geq(game: SimpleGame, i: int, j: int) -> bool:
    """True iff v(S + i) >= v(S + j) for every S avoiding both players."""
    table = winning_table(game)
    free = _masks_without_bit(game.n, i - 1) & _masks_without_bit(game.n, j - 1)
    wins_with_i = (table >> (1 << (i - 1))) & free
    wins_with_j = (table >> (1 << (j - 1))) & free
    return wins_with_j & ~wins_with_i == 0


def desirability_order(game: SimpleGame) -> DesirabilityOrder | None:
    """Total desirability order, or None when two players are incomparable.

    The pairwise relation is checked exhaustively over all coalitions, so
    this is intended for n up to ~20.  Equally desirable players are ordered
    by index.
    """
    n = game.n
    geq = [[True] * (n + 1) for _ in range(n + 1)]
    for i in game.players:
        for j in game.players:
            if i != j:
                geq[i][j] = desirability_geq(game, i, j)
    for i in game.players:
        for j in game.players:
            if i < j and not geq[i][j] and not geq[j][i]:
                return None
    # In a total preorder the count of strictly dominated players sorts
    # consistently; ties fall back to the player index.
    strictly_below = {
        i: sum(1 for j in game.players if j != i and geq[i][j] and not geq[j][i])
        for i in game.players
    }
    order = tuple(sorted(game.players, key=lambda i: (-strictly_below[i], i)))
    for a, b in zip(order, order[1:]):
        assert geq[a][b], "desirability order is not consistent with the relation"
    return DesirabilityOrder(order=order)


def classify(alpha: Fraction) -> str:
    """Weighted (alpha < 1), roughly weighted (= 1), or neither (> 1)."""
    if alpha < 1:
        return WEIGHTED
    if alpha == 1:
        return ROUGHLY_WEIGHTED
    return ABOVE_ROUGH


def game_from_edges(n: int, edges) -> SimpleGame:
    """The graphic simple game whose minimal winning coalitions are the edges."""
    coalitions = []
    for e in edges:
        u, v = e
        coalitions.append(frozenset((u, v)))
    return SimpleGame(n=n, min_winning=tuple(coalitions))
