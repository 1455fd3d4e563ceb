import random
from fractions import Fraction
from itertools import combinations

import pytest

from thresholdgames.errors import InvalidInputError, PreconditionError
from thresholdgames.graphs import (
    BipartiteGraph,
    Graph,
    bipartition_of,
    enumerate_mis,
    find_induced_kp2,
    gallai_edmonds,
    max_independent_set_exact,
    max_matching_bipartite,
    max_matching_general,
    mwis_bipartite,
    strong_product_p2,
)
from oracles import (
    brute_matching_size,
    brute_maximal_independent_sets,
    brute_mwis_value,
    independent_sets,
)

F = Fraction


def G(n, *edges):
    return Graph(n=n, edges=frozenset(edges))


TRIANGLE = G(3, (1, 2), (2, 3), (1, 3))
P3 = G(3, (1, 2), (2, 3))
C4 = G(4, (1, 2), (2, 3), (3, 4), (1, 4))
C5 = G(5, (1, 2), (2, 3), (3, 4), (4, 5), (5, 1))
C6 = G(6, *[(i, i % 6 + 1) for i in range(1, 7)])
C8 = G(8, *[(i, i % 8 + 1) for i in range(1, 9)])
PETERSEN = Graph(
    n=10,
    edges=frozenset(
        [(i, i % 5 + 1) for i in range(1, 6)]
        + [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
        + [(i, i + 5) for i in range(1, 6)]
    ),
)


def random_graph(rng, n, p=0.35):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph(n=n, edges=frozenset(edges))


def test_graph_validation():
    with pytest.raises(InvalidInputError):
        G(3, (1, 1))
    with pytest.raises(InvalidInputError):
        G(2, (1, 3))
    assert G(3, (2, 1)).edges == frozenset({(1, 2)})


def test_bipartite_validation():
    with pytest.raises(InvalidInputError):
        BipartiteGraph(frozenset({1}), frozenset({1}), frozenset())
    with pytest.raises(InvalidInputError):
        BipartiteGraph(frozenset({1}), frozenset({2}), frozenset({(2, 1)}))


# --- bipartite matching -------------------------------------------------


def test_bipartite_matching_examples():
    k33 = BipartiteGraph(
        frozenset({1, 2, 3}),
        frozenset({4, 5, 6}),
        frozenset((a, b) for a in (1, 2, 3) for b in (4, 5, 6)),
    )
    assert max_matching_bipartite(k33).size == 3
    star = BipartiteGraph(
        frozenset({"a"}), frozenset({"b1", "b2", "b3"}),
        frozenset(("a", b) for b in ("b1", "b2", "b3")),
    )
    assert max_matching_bipartite(star).size == 1
    c4 = BipartiteGraph(
        frozenset({1, 3}), frozenset({2, 4}),
        frozenset({(1, 2), (1, 4), (3, 2), (3, 4)}),
    )
    assert max_matching_bipartite(c4).size == 2


def test_koenig_certificate_on_randoms():
    rng = random.Random(11)
    for _ in range(60):
        na, nb = rng.randint(0, 5), rng.randint(0, 5)
        a = frozenset(range(1, na + 1))
        b = frozenset(range(101, 101 + nb))
        edges = frozenset((x, y) for x in a for y in b if rng.random() < 0.4)
        result = max_matching_bipartite(BipartiteGraph(a, b, edges))
        assert len(result.cover) == result.size
        assert all(x in result.cover or y in result.cover for x, y in edges)


# --- general matching ---------------------------------------------------


def test_general_matching_examples():
    assert len(max_matching_general(TRIANGLE)) == 1
    assert len(max_matching_general(P3)) == 1
    assert len(max_matching_general(C5)) == 2
    assert len(max_matching_general(PETERSEN)) == 5


def test_general_matching_matches_subset_dp():
    rng = random.Random(12)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9), 0.4)
        matching = max_matching_general(g)
        used = [v for e in matching for v in e]
        assert len(set(used)) == len(used)
        assert all(e in g.edges for e in matching)
        assert len(matching) == brute_matching_size(g)


# --- Gallai-Edmonds -----------------------------------------------------


def test_gallai_edmonds_examples():
    ge = gallai_edmonds(P3)
    assert ge.exposed_set == frozenset({1, 3})
    assert ge.tutte_set == frozenset({2})
    assert set(ge.odd_components) == {frozenset({1}), frozenset({3})}
    assert ge.even_components == ()

    ge = gallai_edmonds(TRIANGLE)
    assert ge.exposed_set == frozenset({1, 2, 3})
    assert ge.tutte_set == frozenset()
    assert ge.odd_components == (frozenset({1, 2, 3}),)

    ge = gallai_edmonds(G(2, (1, 2)))
    assert ge.exposed_set == frozenset()
    assert ge.even_components == (frozenset({1, 2}),)


def test_gallai_edmonds_structure_on_randoms():
    # the three structural facts are asserted inside; re-check the partition
    # and the matching-size bookkeeping here
    rng = random.Random(13)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 11), 0.3)
        ge = gallai_edmonds(g)
        pieces = [ge.tutte_set, *ge.odd_components, *ge.even_components]
        assert sum(len(p) for p in pieces) == g.n
        assert frozenset().union(*pieces) == frozenset(g.vertices()) if pieces else g.n == 0
        size = len(max_matching_general(g))
        assert size == len(ge.tutte_set) + sum(
            (len(c) - 1) // 2 for c in ge.odd_components
        ) + sum(len(c) // 2 for c in ge.even_components)
        # D is exactly the set of vertices missed by some maximum matching
        for v in g.vertices():
            sub = Graph(
                n=g.n,
                edges=frozenset(e for e in g.edges if v not in e),
            )
            missed = brute_matching_size(sub) == size  # removing v keeps the size
            assert missed == (v in ge.exposed_set)


# --- weighted independent sets ------------------------------------------


def test_mwis_examples():
    c4 = BipartiteGraph(
        frozenset({1, 3}), frozenset({2, 4}),
        frozenset({(1, 2), (1, 4), (3, 2), (3, 4)}),
    )
    ones = {v: F(1) for v in range(1, 5)}
    picked, value = mwis_bipartite(c4, ones)
    assert value == 2 and len(picked) == 2
    edge = BipartiteGraph(frozenset({1}), frozenset({2}), frozenset({(1, 2)}))
    _, value = mwis_bipartite(edge, {1: F(3, 2), 2: F(1)})
    assert value == F(3, 2)
    p4 = BipartiteGraph(
        frozenset({1, 3}), frozenset({2, 4}), frozenset({(1, 2), (3, 2), (3, 4)})
    )
    _, value = mwis_bipartite(p4, {1: F(1), 2: F(2), 3: F(2), 4: F(1)})
    assert value == 3


def test_mwis_matches_brute_force():
    rng = random.Random(14)
    for _ in range(60):
        na, nb = rng.randint(0, 4), rng.randint(0, 4)
        a = frozenset(range(1, na + 1))
        b = frozenset(range(101, 101 + nb))
        edges = frozenset((x, y) for x in a for y in b if rng.random() < 0.45)
        g = BipartiteGraph(a, b, edges)
        weights = {v: F(rng.randint(0, 8), rng.randint(1, 5)) for v in a | b}
        picked, value = mwis_bipartite(g, weights)
        assert value == brute_mwis_value(g, weights)
        assert sum((weights[v] for v in picked), F(0)) == value


def test_mwis_validation():
    edge = BipartiteGraph(frozenset({1}), frozenset({2}), frozenset({(1, 2)}))
    with pytest.raises(InvalidInputError):
        mwis_bipartite(edge, {1: F(1)})
    with pytest.raises(InvalidInputError):
        mwis_bipartite(edge, {1: F(1), 2: F(-1)})


# --- independent set enumeration ----------------------------------------


def test_enumerate_mis_examples():
    assert list(enumerate_mis(TRIANGLE)) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert list(enumerate_mis(C4)) == [frozenset({1, 3}), frozenset({2, 4})]
    five = list(enumerate_mis(C5))
    assert len(five) == 5 and all(len(s) == 2 for s in five)


def test_enumerate_mis_matches_subset_filtering():
    rng = random.Random(15)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), 0.35)
        assert list(enumerate_mis(g)) == brute_maximal_independent_sets(g)


def test_max_independent_set_examples():
    assert max_independent_set_exact(C5)[1] == 2
    assert max_independent_set_exact(G(4))[1] == 4
    assert max_independent_set_exact(PETERSEN)[1] == 4


# --- induced kP2 --------------------------------------------------------


def test_find_induced_kp2_examples():
    assert find_induced_kp2(C6, 2) == [(1, 2), (4, 5)]
    assert find_induced_kp2(C8, 4) is None
    assert find_induced_kp2(TRIANGLE, 2) is None


def test_find_induced_kp2_witness_is_induced():
    rng = random.Random(16)
    hits = 0
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 10), 0.3)
        for k in (2, 3):
            witness = find_induced_kp2(g, k)
            if witness is None:
                continue
            hits += 1
            vertices = {v for e in witness for v in e}
            assert len(vertices) == 2 * k
            induced = [e for e in g.edges if e[0] in vertices and e[1] in vertices]
            assert sorted(induced) == sorted(witness)
    assert hits > 5


def test_find_induced_kp2_guard():
    with pytest.raises(PreconditionError):
        find_induced_kp2(C8, 6)
    with pytest.raises(InvalidInputError):
        find_induced_kp2(C8, 0)


# --- strong product -----------------------------------------------------


def test_strong_product_examples():
    k4 = strong_product_p2(G(2, (1, 2)))
    assert k4.n == 4 and len(k4.edges) == 6
    assert strong_product_p2(G(1)).edges == frozenset({(1, 2)})
    assert len(strong_product_p2(C5).edges) == 25


def test_strong_product_independent_sets_are_splits():
    rng = random.Random(17)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 6), 0.4)
        product = strong_product_p2(g)
        got = independent_sets(product)
        want = set()
        for base in independent_sets(g):
            for r in range(len(base) + 1):
                for part in combinations(sorted(base), r):
                    want.add(frozenset(part) | frozenset(v + g.n for v in base - set(part)))
        assert got == want


def test_bipartition():
    bp = bipartition_of(C6)
    assert bp.a_side == frozenset({1, 3, 5})
    assert bipartition_of(TRIANGLE) is None
    lonely = bipartition_of(G(3, (1, 2)))
    assert 3 in lonely.b_side
