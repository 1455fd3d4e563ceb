"""Ratio maximization |S|/|N(S)| and decomposition into well-spread subgraphs.

A bipartite graph (A u B, E) with |A| <= |B| is well-spread with parameter
lam = |A|/(|A|+|B|) when every S inside A satisfies |S|/|N(S)| <= |A|/|B|.
The maximizer of |S|/|N(S)| is found exactly by binary search over the
O(n^2) candidate fractions p/q; the test "some S has ratio > p/q" is a
Hall-condition check on the blow-up graph made of q copies of A and p
copies of B.  The blow-up never has to be materialized: its maximum
matching equals the max flow of a small network whose capacities count the
copies, and a maximum Hall violator falls out of the min cut.  A literal
blow-up builder is kept for cross-checks.

Peeling maximizers repeatedly yields the decomposition into well-spread
induced subgraphs with non-increasing parameters; isolated B vertices left
at the end form a final degenerate part with an empty A side and lam = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, PreconditionError
from .graphs import BipartiteGraph, MaxFlow, max_matching_bipartite, _vkey


@dataclass(frozen=True)
class WellSpreadPart:
    """One induced subgraph of the decomposition and its parameter."""

    a_part: frozenset
    b_part: frozenset
    lam: Fraction

    def __post_init__(self) -> None:
        total = len(self.a_part) + len(self.b_part)
        if self.a_part:
            if self.lam != Fraction(len(self.a_part), total):
                raise InvalidInputError(
                    f"parameter {self.lam} does not match |A|={len(self.a_part)}, |B|={len(self.b_part)}"
                )
            if self.lam > Fraction(1, 2):
                raise InvalidInputError(f"parameter {self.lam} exceeds 1/2")
        elif self.lam != 0:
            raise InvalidInputError("a degenerate part (empty A) must have parameter 0")


@dataclass(frozen=True)
class WellSpreadDecomposition:
    parts: tuple[WellSpreadPart, ...]


def _require_matchable(g: BipartiteGraph) -> None:
    if max_matching_bipartite(g).size != len(g.a_side):
        raise PreconditionError("the A side cannot be matched into B")


def blowup_graph(g: BipartiteGraph, p: int, q: int) -> BipartiteGraph:
    """The literal blow-up: q copies of each A vertex, p copies of each B
    vertex, copies adjacent exactly as their originals are."""
    a = frozenset((v, i) for v in g.a_side for i in range(q))
    b = frozenset((v, j) for v in g.b_side for j in range(p))
    edges = frozenset(
        ((x, i), (y, j)) for x, y in g.edges for i in range(q) for j in range(p)
    )
    return BipartiteGraph(a_side=a, b_side=b, edges=edges)


def blowup_hall_violator(g: BipartiteGraph, p: int, q: int) -> frozenset | None:
    """Largest S inside A with q|S| > p|N(S)|, or None when none exists.

    Equivalent to a Hall violator in the blow-up graph that is closed under
    taking all copies of a vertex.  The blow-up matching is computed as a
    max flow with copy-counting capacities (q at each A vertex, p at each B
    vertex), and the maximal min cut gives the largest violator.
    """
    if p < 1 or q < 1:
        raise InvalidInputError(f"copy counts must be positive, got p={p}, q={q}")
    flow = MaxFlow()
    flow.node("s")
    flow.node("t")
    unbounded = q + p
    for a in sorted(g.a_side, key=_vkey):
        flow.add_edge("s", ("a", a), q)
    for b in sorted(g.b_side, key=_vkey):
        flow.add_edge(("b", b), "t", p)
    for a, b in sorted(g.edges, key=_vkey):
        flow.add_edge(("a", a), ("b", b), unbounded)
    value = flow.max_flow("s", "t")
    if value == q * len(g.a_side):
        return None
    # Vertices with no residual path to t form the largest min-cut source
    # side; its A part maximizes the deficiency q|S| - p|N(S)|.
    to_sink = flow.sink_side("t")
    violator = frozenset(a for a in g.a_side if ("a", a) not in to_sink)
    deficiency = q * len(violator) - p * len(g.neighborhood(violator))
    assert deficiency == q * len(g.a_side) - value > 0, "violator does not realize the deficiency"
    return violator


def max_ratio_subset(g: BipartiteGraph) -> tuple[frozenset, Fraction]:
    """Maximum of |S|/|N(S)| over nonempty S inside A, with a witness.

    Requires A nonempty and matchable into B.  Binary search over the sorted
    distinct fractions p/q with p, q in 1..(|A|+|B|); each probe asks the
    blow-up Hall test whether some S beats p/q.  The witness is the largest
    maximizer, and its cardinality is maximum among maximizers.
    """
    if not g.a_side:
        raise PreconditionError("the A side is empty")
    _require_matchable(g)
    n = g.order()
    fractions = sorted({Fraction(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if p <= q})
    # T(r) = "some S has ratio > r" is monotone decreasing; the optimum is
    # the smallest fraction with T false.  T(1) is false by Hall, and any
    # singleton beats 1/n, so the boundary is interior.
    lo, hi = -1, len(fractions) - 1
    assert blowup_hall_violator(g, fractions[hi].numerator, fractions[hi].denominator) is None
    while hi - lo > 1:
        mid = (lo + hi) // 2
        r = fractions[mid]
        if blowup_hall_violator(g, r.numerator, r.denominator) is None:
            hi = mid
        else:
            lo = mid
    if lo < 0:
        raise AssertionError("no probe succeeded although A is nonempty")
    r_below = fractions[lo]
    witness = blowup_hall_violator(g, r_below.numerator, r_below.denominator)
    assert witness, "losing probe vanished on re-run"
    ratio = Fraction(len(witness), len(g.neighborhood(witness)))
    assert ratio == fractions[hi], "witness ratio disagrees with the search boundary"
    return witness, ratio


def exists_ratio_above(g: BipartiteGraph, r: Fraction) -> bool:
    """Direct test: does some nonempty S inside A have |S|/|N(S)| > r?

    Decided through the same blow-up machinery; the brute-force counterpart
    lives in the test suite.
    """
    return blowup_hall_violator(g, r.numerator, r.denominator) is not None


def is_well_spread(g: BipartiteGraph) -> bool:
    """Definitional check: every S inside A has |S|/|N(S)| <= |A|/|B|."""
    if not g.a_side:
        raise PreconditionError("the A side is empty")
    if not g.b_side:
        return False
    if max_matching_bipartite(g).size != len(g.a_side):
        # Some S already violates Hall, so its ratio exceeds 1 >= |A|/|B|.
        return False
    _, ratio = max_ratio_subset(g)
    return ratio <= Fraction(len(g.a_side), len(g.b_side))


def decompose(g: BipartiteGraph) -> WellSpreadDecomposition:
    """Split g into well-spread induced subgraphs with non-increasing lam.

    Repeatedly peels a maximum-cardinality maximizer S of |S|/|N(S)|
    together with its neighborhood.  B vertices surviving every peel are
    isolated in g and form a final degenerate part (empty A side, lam = 0).
    Requires A matchable into B and isolated vertices only in B.
    """
    isolated = g.isolated()
    if isolated & g.a_side:
        raise PreconditionError(
            f"isolated A-side vertices: {sorted(isolated & g.a_side, key=_vkey)}"
        )
    _require_matchable(g)
    parts: list[WellSpreadPart] = []
    a_left = set(g.a_side)
    b_left = set(g.b_side)
    while a_left:
        current = BipartiteGraph(
            a_side=frozenset(a_left),
            b_side=frozenset(b_left),
            edges=frozenset((a, b) for a, b in g.edges if a in a_left and b in b_left),
        )
        witness, ratio = max_ratio_subset(current)
        nbhd = current.neighborhood(witness)
        parts.append(
            WellSpreadPart(
                a_part=witness,
                b_part=nbhd,
                lam=Fraction(len(witness), len(witness) + len(nbhd)),
            )
        )
        a_left -= witness
        b_left -= nbhd
    if b_left:
        parts.append(WellSpreadPart(a_part=frozenset(), b_part=frozenset(b_left), lam=Fraction(0)))
    result = WellSpreadDecomposition(parts=tuple(parts))
    _check_decomposition(g, result)
    return result


def _check_decomposition(g: BipartiteGraph, d: WellSpreadDecomposition) -> None:
    parts = d.parts
    lams = [p.lam for p in parts]
    assert all(x >= y for x, y in zip(lams, lams[1:])), "parameters are not non-increasing"
    seen_a: set = set()
    seen_b: set = set()
    for p in parts:
        assert not (p.a_part & seen_a) and not (p.b_part & seen_b), "parts overlap"
        seen_a |= p.a_part
        seen_b |= p.b_part
    assert seen_a == set(g.a_side) and seen_b == set(g.b_side), "parts do not partition the graph"
    for i, p in enumerate(parts):
        later_b = set()
        for q in parts[i + 1:]:
            later_b |= q.b_part
        for a, b in g.edges:
            assert not (a in p.a_part and b in later_b), (
                f"edge ({a!r},{b!r}) joins part {i} to a later B part"
            )
        if not p.a_part:
            for a, b in g.edges:
                assert b not in p.b_part, f"degenerate part contains non-isolated vertex {b!r}"
