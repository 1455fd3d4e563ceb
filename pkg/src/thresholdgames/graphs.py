"""Graph machinery behind graphic simple games.

Graphs over players 1..n model games whose minimal winning coalitions all
have size 2; losing coalitions are then exactly the independent sets.  This
module supplies the matching structure (bipartite matching with a Koenig
cover certificate, general matching via blossom contraction, the
Gallai-Edmonds decomposition), exact maximum-weight independent sets in
bipartite graphs via min-cut duality, maximal-independent-set enumeration,
induced kP2 search, and the strong product with P2.

Bipartite graphs carry arbitrary hashable vertex labels so that contracted
components and vertex copies can be represented directly; deterministic
iteration is by ``repr`` of the label.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterator, Mapping

from .errors import InvalidInputError, PreconditionError

Vertex = Hashable
WeightedVertexSet = Mapping[Vertex, Fraction]


def _vkey(v: Vertex) -> str:
    return repr(v)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 1..n, edges normalized to (min, max)."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError(f"vertex count {self.n} is negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidInputError(f"edge ({u},{v}) outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nb) for v, nb in adj.items()}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def isolated_vertices(self) -> frozenset[int]:
        adj = self.adjacency()
        return frozenset(v for v in self.vertices() if not adj[v])


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with designated sides; edges are (a, b) pairs."""

    a_side: frozenset
    b_side: frozenset
    edges: frozenset[tuple]

    def __post_init__(self) -> None:
        a = frozenset(self.a_side)
        b = frozenset(self.b_side)
        if a & b:
            raise InvalidInputError(f"sides are not disjoint: {sorted(a & b, key=_vkey)}")
        edges = frozenset(tuple(e) for e in self.edges)
        for x, y in edges:
            if x not in a or y not in b:
                raise InvalidInputError(f"edge ({x!r},{y!r}) does not cross from A to B")
        object.__setattr__(self, "a_side", a)
        object.__setattr__(self, "b_side", b)
        object.__setattr__(self, "edges", edges)

    def order(self) -> int:
        return len(self.a_side) + len(self.b_side)

    def a_adjacency(self) -> dict:
        adj = {a: set() for a in self.a_side}
        for a, b in self.edges:
            adj[a].add(b)
        return adj

    def neighborhood(self, subset) -> frozenset:
        """N(S) in B for S a subset of the A side."""
        adj = self.a_adjacency()
        out: set = set()
        for a in subset:
            if a not in adj:
                raise InvalidInputError(f"{a!r} is not an A-side vertex")
            out |= adj[a]
        return frozenset(out)

    def isolated(self) -> frozenset:
        touched = {x for e in self.edges for x in e}
        return frozenset(v for v in self.a_side | self.b_side if v not in touched)


@dataclass(frozen=True)
class BipartiteMatching:
    """A maximum matching plus its Koenig vertex-cover certificate."""

    pairs: frozenset[tuple]
    cover: frozenset

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class GEDecomposition:
    """Gallai-Edmonds structure: Tutte set, odd/even components, exposed set."""

    tutte_set: frozenset[int]
    odd_components: tuple[frozenset[int], ...]
    even_components: tuple[frozenset[int], ...]
    exposed_set: frozenset[int]


# ---------------------------------------------------------------------------
# Bipartite matching (Kuhn augmenting paths) with Koenig cover.
# ---------------------------------------------------------------------------


def max_matching_bipartite(g: BipartiteGraph) -> BipartiteMatching:
    """Maximum-cardinality matching with a checked vertex cover of equal size."""
    adj = {a: sorted(bs, key=_vkey) for a, bs in g.a_adjacency().items()}
    a_order = sorted(g.a_side, key=_vkey)
    match_of_a: dict = {}
    match_of_b: dict = {}

    def augment(a, seen: set) -> bool:
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_of_b or augment(match_of_b[b], seen):
                match_of_a[a] = b
                match_of_b[b] = a
                return True
        return False

    for a in a_order:
        augment(a, set())

    # Koenig: alternate from unmatched A vertices; cover = (A \ Z) U (B n Z).
    za = {a for a in a_order if a not in match_of_a}
    zb: set = set()
    frontier = sorted(za, key=_vkey)
    while frontier:
        new = []
        for a in frontier:
            for b in adj[a]:
                if b in zb or match_of_a.get(a) == b:
                    continue
                zb.add(b)
                a2 = match_of_b.get(b)
                if a2 is not None and a2 not in za:
                    za.add(a2)
                    new.append(a2)
        frontier = sorted(new, key=_vkey)
    cover = frozenset((g.a_side - za) | zb)
    pairs = frozenset(match_of_a.items())
    assert len(cover) == len(pairs), "Koenig certificate size mismatch"
    assert all(a in cover or b in cover for a, b in g.edges), "cover misses an edge"
    return BipartiteMatching(pairs=pairs, cover=cover)


# ---------------------------------------------------------------------------
# General matching: blossom contraction, O(V^3).
# ---------------------------------------------------------------------------


def _blossom_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum matching on vertices 0..n-1; returns the mate array (-1 free)."""
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def find_path(root: int) -> bool:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle: contract the blossom down to the LCA.
                    cur = lca(v, to)
                    in_blossom = [False] * n

                    def mark(x: int, child: int) -> None:
                        while base[x] != cur:
                            in_blossom[base[x]] = True
                            in_blossom[base[match[x]]] = True
                            parent[x] = child
                            child = match[x]
                            x = parent[match[x]]

                    mark(v, to)
                    mark(to, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return match


def _matching_size_on(vertices: list[int], adj: Mapping[int, frozenset[int]]) -> int:
    """Maximum matching size of the induced subgraph on ``vertices``."""
    index = {v: i for i, v in enumerate(vertices)}
    local = [[index[u] for u in sorted(adj[v]) if u in index] for v in vertices]
    mate = _blossom_matching(len(vertices), local)
    return sum(1 for i, m in enumerate(mate) if m > i)


def max_matching_general(g: Graph) -> frozenset[tuple[int, int]]:
    """Maximum-cardinality matching of a general graph (blossom contraction)."""
    adj = g.adjacency()
    local = [[u - 1 for u in sorted(adj[v + 1])] for v in range(g.n)]
    mate = _blossom_matching(g.n, local)
    return frozenset((i + 1, m + 1) for i, m in enumerate(mate) if m > i)


def _components(vertices: set[int], adj: Mapping[int, frozenset[int]]) -> list[frozenset[int]]:
    out = []
    todo = set(vertices)
    while todo:
        start = min(todo)
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u in todo and u not in comp:
                    comp.add(u)
                    queue.append(u)
        todo -= comp
        out.append(frozenset(comp))
    return sorted(out, key=lambda c: min(c))


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Gallai-Edmonds decomposition of a graph.

    The exposed set D holds the vertices missed by some maximum matching
    (detected by comparing matching sizes of g and g - v), the Tutte set A
    is N(D) \\ D, and the components of g - A are split into odd ones
    (factor-critical, meeting D) and even ones (perfectly matchable).  All
    three structural facts are asserted before returning.
    """
    adj = g.adjacency()
    all_vertices = list(g.vertices())
    m = _matching_size_on(all_vertices, adj)
    exposed = frozenset(
        v for v in all_vertices
        if _matching_size_on([u for u in all_vertices if u != v], adj) == m
    )
    tutte = frozenset(
        v for v in all_vertices if v not in exposed and adj[v] & exposed
    )
    rest = set(all_vertices) - tutte
    comps = _components(rest, adj)
    odd = tuple(c for c in comps if c & exposed)
    even = tuple(c for c in comps if not (c & exposed))

    for c in odd:
        assert c <= exposed, f"component {sorted(c)} is only partly exposed"
        assert len(c) % 2 == 1, f"component {sorted(c)} meets D but has even size"
        for v in c:
            others = [u for u in sorted(c) if u != v]
            assert _matching_size_on(others, adj) * 2 == len(c) - 1, (
                f"odd component {sorted(c)} is not factor-critical at {v}"
            )
    for c in even:
        assert len(c) % 2 == 0, f"even component {sorted(c)} has odd size"
        assert _matching_size_on(sorted(c), adj) * 2 == len(c), (
            f"even component {sorted(c)} has no perfect matching"
        )
    # The Tutte set must be matchable into pairwise distinct odd components.
    contact = BipartiteGraph(
        a_side=frozenset(tutte),
        b_side=frozenset(("odd", idx) for idx in range(len(odd))),
        edges=frozenset(
            (a, ("odd", idx)) for a in tutte for idx, c in enumerate(odd) if adj[a] & c
        ),
    )
    assert max_matching_bipartite(contact).size == len(tutte), (
        "Tutte set is not matchable into the odd components"
    )
    assert len(tutte) + sum((len(c) - 1) // 2 for c in odd) + sum(len(c) // 2 for c in even) == m, (
        "decomposition size bookkeeping does not match the maximum matching"
    )
    return GEDecomposition(
        tutte_set=tutte,
        odd_components=odd,
        even_components=even,
        exposed_set=exposed,
    )


# ---------------------------------------------------------------------------
# Exact max flow (Dinic) over any exact numeric type; used for weighted
# independent sets and the blow-up Hall tests.
# ---------------------------------------------------------------------------


class MaxFlow:
    """Dinic's algorithm with exact capacities (ints or Fractions)."""

    def __init__(self) -> None:
        self._id: dict = {}
        self.adj: list[list[list]] = []  # entries [to, cap, rev_index]

    def node(self, v) -> int:
        if v not in self._id:
            self._id[v] = len(self.adj)
            self.adj.append([])
        return self._id[v]

    def add_edge(self, u, v, cap) -> None:
        ui, vi = self.node(u), self.node(v)
        self.adj[ui].append([vi, cap, len(self.adj[vi])])
        self.adj[vi].append([ui, cap * 0, len(self.adj[ui]) - 1])

    def max_flow(self, s, t):
        si, ti = self.node(s), self.node(t)
        # Residual capacities only move between paired edges, so the total is
        # a push-invariant upper bound on any bottleneck.
        infinity = sum(cap for edges in self.adj for _, cap, _ in edges) + 1
        total = 0
        while True:
            level = [-1] * len(self.adj)
            level[si] = 0
            queue = deque([si])
            while queue:
                v = queue.popleft()
                for to, cap, _ in self.adj[v]:
                    if cap > 0 and level[to] < 0:
                        level[to] = level[v] + 1
                        queue.append(to)
            if level[ti] < 0:
                return total
            it = [0] * len(self.adj)

            def dfs(v: int, pushed):
                if v == ti:
                    return pushed
                while it[v] < len(self.adj[v]):
                    e = self.adj[v][it[v]]
                    to, cap, rev = e
                    if cap > 0 and level[to] == level[v] + 1:
                        d = dfs(to, pushed if pushed < cap else cap)
                        if d > 0:
                            e[1] -= d
                            self.adj[to][rev][1] += d
                            return d
                    it[v] += 1
                return 0

            while True:
                pushed = dfs(si, infinity)
                if pushed <= 0:
                    break
                total += pushed

    def source_side(self, s) -> set:
        """Labels reachable from s in the residual graph."""
        si = self.node(s)
        seen = {si}
        queue = deque([si])
        while queue:
            v = queue.popleft()
            for to, cap, _ in self.adj[v]:
                if cap > 0 and to not in seen:
                    seen.add(to)
                    queue.append(to)
        back = {i: lbl for lbl, i in self._id.items()}
        return {back[i] for i in seen}

    def sink_side(self, t) -> set:
        """Labels with a residual path to t."""
        ti = self.node(t)
        seen = {ti}
        queue = deque([ti])
        while queue:
            w = queue.popleft()
            for to, _, rev in self.adj[w]:
                # The paired entry is the edge (to -> w); positive residual
                # capacity there means `to` can step toward t.
                if self.adj[to][rev][1] > 0 and to not in seen:
                    seen.add(to)
                    queue.append(to)
        back = {i: lbl for lbl, i in self._id.items()}
        return {back[i] for i in seen}


def mwis_bipartite(g: BipartiteGraph, weights: WeightedVertexSet) -> tuple[frozenset, Fraction]:
    """Exact maximum-weight independent set in a bipartite graph.

    Computed as total weight minus a minimum-weight vertex cover, which is a
    minimum s-t cut; capacities stay exact rationals throughout.
    """
    vertices = g.a_side | g.b_side
    for v in vertices:
        if v not in weights:
            raise InvalidInputError(f"missing weight for vertex {v!r}")
        if weights[v] < 0:
            raise InvalidInputError(f"negative weight at vertex {v!r}")
    total = sum((weights[v] for v in vertices), Fraction(0))
    flow = MaxFlow()
    flow.node("s")
    flow.node("t")
    big = total + 1
    for a in sorted(g.a_side, key=_vkey):
        flow.add_edge("s", ("a", a), Fraction(weights[a]))
    for b in sorted(g.b_side, key=_vkey):
        flow.add_edge(("b", b), "t", Fraction(weights[b]))
    for a, b in sorted(g.edges, key=_vkey):
        flow.add_edge(("a", a), ("b", b), big)
    cut = flow.max_flow("s", "t")
    reach = flow.source_side("s")
    pick = frozenset(
        {a for a in g.a_side if ("a", a) in reach}
        | {b for b in g.b_side if ("b", b) not in reach}
    )
    value = total - cut
    got = sum((weights[v] for v in pick), Fraction(0))
    assert got == value, "cut value does not match the extracted set"
    assert not any(a in pick and b in pick for a, b in g.edges), "extracted set is not independent"
    return pick, value


# ---------------------------------------------------------------------------
# Independent sets.
# ---------------------------------------------------------------------------


def enumerate_mis(g: Graph) -> Iterator[frozenset[int]]:
    """Every maximal independent set exactly once, canonically ordered.

    Bron-Kerbosch with pivoting on the complement graph (maximal cliques of
    the complement are exactly the maximal independent sets).
    """
    vertices = set(g.vertices())
    adj = g.adjacency()
    co_adj = {v: vertices - adj[v] - {v} for v in vertices}
    found: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = min(p | x, key=lambda u: (-len(co_adj[u] & p), u))
        for v in sorted(p - co_adj[pivot]):
            expand(r | {v}, p & co_adj[v], x & co_adj[v])
            p.remove(v)
            x.add(v)

    if vertices:
        expand(set(), set(vertices), set())
    yield from sorted(found, key=lambda c: tuple(sorted(c)))


def max_independent_set_exact(g: Graph) -> tuple[frozenset[int], int]:
    """A maximum-cardinality independent set (first canonical witness)."""
    best: frozenset[int] = frozenset()
    for s in enumerate_mis(g):
        if len(s) > len(best):
            best = s
    return best, len(best)


def find_induced_kp2(g: Graph, k: int, max_k: int = 5) -> list[tuple[int, int]] | None:
    """k edges whose 2k endpoints induce exactly those k disjoint edges.

    Enumerates k-tuples of edges in canonical order and returns the first
    witness, or None.  ``max_k`` guards the O(m^k) search.
    """
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if k > max_k:
        raise PreconditionError(f"induced kP2 search is guarded at k <= {max_k}, got k = {k}")
    edges = sorted(g.edges)
    if len(edges) < k or 2 * k > g.n:
        return None
    adj_mask = [0] * (g.n + 1)
    for u, v in edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    edge_mask = [(1 << u) | (1 << v) for u, v in edges]
    for combo in combinations(range(len(edges)), k):
        union = 0
        for idx in combo:
            union |= edge_mask[idx]
        if union.bit_count() != 2 * k:
            continue
        inside = 0
        v = union >> 1
        vertex = 1
        while v:
            if v & 1:
                inside += (adj_mask[vertex] & union).bit_count()
            v >>= 1
            vertex += 1
        if inside == 2 * k:  # each of the k edges counted from both ends
            return [edges[idx] for idx in combo]
    return None


def strong_product_p2(g: Graph) -> Graph:
    """Strong product with a single edge: two copies of g, cross edges for
    equal or adjacent originals.  Copy two of vertex i is vertex n + i."""
    n = g.n
    edges: set[tuple[int, int]] = set()
    for u, v in g.edges:
        edges.add((u, v))
        edges.add((u + n, v + n))
        edges.add((u, v + n))
        edges.add((v, u + n))
    for i in range(1, n + 1):
        edges.add((i, i + n))
    return Graph(n=2 * n, edges=frozenset(edges))


def bipartition_of(g: Graph) -> BipartiteGraph | None:
    """Two-color g if possible; side A holds each component's smallest vertex.

    Isolated vertices land on the B side.  Returns None when g has an odd
    cycle.
    """
    adj = g.adjacency()
    color: dict[int, int] = {}
    for start in g.vertices():
        if start in color:
            continue
        color[start] = 0 if adj[start] else 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    a = frozenset(v for v, c in color.items() if c == 0)
    b = frozenset(v for v, c in color.items() if c == 1)
    return BipartiteGraph(
        a_side=a,
        b_side=b,
        edges=frozenset((u if u in a else v, v if u in a else u) for u, v in g.edges),
    )
