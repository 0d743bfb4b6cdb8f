"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (triple enumeration, permutation
search, recursive contraction, exhaustive cuts) and shares no code with the
search routines it checks.
"""

from __future__ import annotations

import itertools

from triminor.canon import canonical_cert
from triminor.graphs import Graph, contract_edge, from_rows, make_graph


def triangles_on_edge_brute(g: Graph, u: int, v: int) -> int:
    """Count triangles through uv by enumerating all vertex triples."""
    count = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        if {u, v} <= {a, b, c}:
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
                count += 1
    return count


def total_triangles_brute(g: Graph) -> int:
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


def isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Permutation search with degree-sequence prefilter."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]

    def extend(mapping: list[int], used: int) -> bool:
        i = len(mapping)
        if i == g.n:
            return True
        for w in range(h.n):
            if used >> w & 1 or gdeg[i] != hdeg[w]:
                continue
            if all((g.adj[i] >> j & 1) == (h.adj[w] >> mapping[j] & 1) for j in range(i)):
                mapping.append(w)
                if extend(mapping, used | 1 << w):
                    return True
                mapping.pop()
        return False

    return extend([], 0)


def kr_minor_brute(g: Graph, r: int, memo: dict | None = None) -> bool:
    """Complete-minor test by recursion over single edge contractions:
    a clique on r vertices appears as a subgraph of some contraction."""
    if memo is None:
        memo = {}
    if g.n < r or g.edge_count < r * (r - 1) // 2:
        return False
    key = (canonical_cert(g), r)
    if key in memo:
        return memo[key]
    if _has_clique_brute(g, r):
        memo[key] = True
        return True
    result = any(
        kr_minor_brute(contract_edge(g, u, v)[0], r, memo) for u, v in g.edges()
    )
    memo[key] = result
    return result


def _has_clique_brute(g: Graph, r: int) -> bool:
    return any(
        all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2))
        for sub in itertools.combinations(range(g.n), r)
    )


def two_disjoint_paths_brute(g, s1, t1, s2, t2):
    """Enumerate all simple path pairs."""

    def paths(a, b, banned):
        stack = [[a]]
        while stack:
            path = stack.pop()
            if path[-1] == b:
                yield path
                continue
            for w in range(g.n):
                if g.has_edge(path[-1], w) and w not in path and w not in banned:
                    stack.append(path + [w])

    for p1 in paths(s1, t1, {s2, t2}):
        for p2 in paths(s2, t2, set(p1)):
            return p1, p2
    return None


def vertex_connectivity_brute(g: Graph) -> int:
    """Smallest vertex cut by exhaustive subset enumeration."""
    if not g.is_connected():
        return 0
    full = (1 << g.n) - 1
    if all(g.adj[v] == full ^ (1 << v) for v in range(g.n)):
        return g.n - 1
    for k in range(g.n - 1):
        for cut in itertools.combinations(range(g.n), k):
            remaining = [v for v in range(g.n) if v not in cut]
            sub_rows = []
            pos = {v: i for i, v in enumerate(remaining)}
            for v in remaining:
                row = 0
                for w in remaining:
                    if g.has_edge(v, w):
                        row |= 1 << pos[w]
                sub_rows.append(row)
            sub = from_rows(len(remaining), sub_rows)
            if len(remaining) > 1 and not sub.is_connected():
                return k
    return g.n - 1


def is_split_brute(g: Graph) -> bool:
    """Try every vertex bipartition into a clique and an independent set."""
    for mask in range(1 << g.n):
        clique = [v for v in range(g.n) if mask >> v & 1]
        stable = [v for v in range(g.n) if not mask >> v & 1]
        if all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2)) and all(
            not g.has_edge(a, b) for a, b in itertools.combinations(stable, 2)
        ):
            return True
    return False


def independence_number_brute(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(not g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
            best = max(best, len(vs))
    return best


def chromatic_brute(g: Graph) -> int:
    """Smallest k admitting a proper colouring, by exhaustive assignment."""
    for k in range(1, g.n + 1):
        if _colorable_brute(g, k, [None] * g.n, 0):
            return k
    raise AssertionError("unreachable")


def _colorable_brute(g, k, colors, v):
    if v == g.n:
        return True
    for c in range(k):
        if all(colors[w] != c for w in range(v) if g.has_edge(v, w)):
            colors[v] = c
            if _colorable_brute(g, k, colors, v + 1):
                return True
    colors[v] = None
    return False


def random_graph_for_tests(n: int, rng, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return make_graph(n, edges)


def all_graphs_on(n: int):
    """Every labeled graph on n vertices (n <= 6 in practice)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield from_rows(n, rows)


def orbit_classes_on(n: int):
    """Isomorphism classes of n-vertex graphs by explicit permutation orbits.

    Returns (class_count, labels) where labels maps each upper-triangle bit
    encoding to its class id.
    """
    pairs = list(itertools.combinations(range(n), 2))
    npairs = len(pairs)
    index = {pair: k for k, pair in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append(
            [index[tuple(sorted((perm[i], perm[j])))] for (i, j) in pairs]
        )
    labels = [-1] * (1 << npairs)
    classes = 0
    for code in range(1 << npairs):
        if labels[code] != -1:
            continue
        for pm in perm_maps:
            image = 0
            for k in range(npairs):
                if code >> k & 1:
                    image |= 1 << pm[k]
            labels[image] = classes
        classes += 1
    return classes, labels


def graph_from_code(n: int, code: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if code >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return from_rows(n, rows)
