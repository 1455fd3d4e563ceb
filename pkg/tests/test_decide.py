import random
from fractions import Fraction
from itertools import combinations

import pytest

from thresholdgames.alpha import alpha_of_graph
from thresholdgames.decide import decide_alpha_le
from thresholdgames.errors import InvalidInputError, PreconditionError
from thresholdgames.graphs import Graph

F = Fraction


def cycle_graph(n):
    return Graph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def matching_graph(k):
    return Graph(2 * k, frozenset((2 * i + 1, 2 * i + 2) for i in range(k)))


def test_c8_examples():
    yes = decide_alpha_le(cycle_graph(8), F(3))
    assert yes.holds and yes.alpha == 2
    no = decide_alpha_le(cycle_graph(8), F(1))
    assert not no.holds and no.k == 3
    assert no.witness is None  # C8 has no induced 3P2; the program decides
    assert no.alpha == 2


def test_triangle_quarter():
    decision = decide_alpha_le(Graph(3, frozenset({(1, 2), (2, 3), (1, 3)})), F(1, 4))
    assert not decision.holds and decision.k == 1
    assert decision.witness is not None and len(decision.witness) == 1


@pytest.mark.parametrize(
    "a,k", [(F(1, 2), 2), (F(1), 3), (F(3, 2), 4), (F(2), 5), (F(1, 4), 1), (F(7, 3), 5)]
)
def test_k_is_smallest_with_half_k_above_a(a, k):
    decision = decide_alpha_le(matching_graph(k), a)
    assert decision.k == k
    assert F(k, 2) > a >= F(k - 1, 2)


def test_witness_branch_fires_and_validates():
    for a, k in [(F(1, 2), 2), (F(1), 3), (F(3, 2), 4), (F(2), 5)]:
        g = matching_graph(k)
        decision = decide_alpha_le(g, a)
        assert not decision.holds and decision.witness is not None
        vertices = {v for e in decision.witness for v in e}
        assert len(vertices) == 2 * decision.k
        induced = [e for e in g.edges if e[0] in vertices and e[1] in vertices]
        assert sorted(induced) == sorted(decision.witness)
        assert F(decision.k, 2) > a


def test_agrees_with_exact_alpha():
    rng = random.Random(51)
    for _ in range(12):
        n = rng.randint(4, 9)
        edges = {e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.35}
        touched = {v for e in edges for v in e}
        for v in range(1, n + 1):
            if v not in touched:
                u = v % n + 1
                edges.add((min(u, v), max(u, v)))
        g = Graph(n, frozenset(edges))
        value = alpha_of_graph(g).alpha
        for a in (F(1, 2), F(1), F(3, 2), F(2)):
            assert decide_alpha_le(g, a).holds == (value <= a)
            assert decide_alpha_le(g, a, strict=True).holds == (value < a)


def test_lp_branch_matches_exact():
    g = cycle_graph(6)
    decision = decide_alpha_le(g, F(1))
    assert decision.alpha == alpha_of_graph(g).alpha == F(3, 2)


def test_guards():
    with pytest.raises(InvalidInputError):
        decide_alpha_le(matching_graph(2), F(0))
    with pytest.raises(PreconditionError, match="guard"):
        decide_alpha_le(matching_graph(2), F(99))
    with pytest.raises(PreconditionError, match="isolated"):
        decide_alpha_le(Graph(3, frozenset({(1, 2)})), F(1))
