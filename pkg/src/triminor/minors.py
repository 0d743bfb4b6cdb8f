"""Exact minor containment by branch-set backtracking, plus the structural
subroutines built on it: rooted triangle minors, two disjoint paths, apex
augmentations and vertex connectivity.

A minor model of h in g assigns to every vertex of h a branch set: the sets
are disjoint, each induces a connected subgraph of g, and every edge of h is
realised by at least one host edge between the corresponding sets.  The
search places branch sets one pattern vertex at a time, enumerating candidate
connected subsets of the unused vertices and pruning on vertex budget and on
required adjacency to already-placed sets.  Hosts stay at or below 16
vertices, where this exhaustive search is fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_cert
from .cliques import has_clique
from .graphs import Graph, bits, complete, from_rows

EXHAUSTIVE_HOST_LIMIT = 16


@dataclass(frozen=True)
class MinorWitness:
    """Branch-set model: branch_sets[i] realises pattern vertex i."""

    pattern: Graph
    branch_sets: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class RootedK3Outcome:
    """Either a triangle minor rooted at (a, b, c) or a separating vertex."""

    witness: MinorWitness | None
    separator: int | None


def validate_minor_witness(g: Graph, w: MinorWitness) -> None:
    """Independently re-check a witness against the model invariants.

    Deliberately shares nothing with the search: plain set/BFS arithmetic.
    """
    sets = [set(s) for s in w.branch_sets]
    assert len(sets) == w.pattern.n, "one branch set per pattern vertex"
    seen: set[int] = set()
    for s in sets:
        assert s, "branch sets are non-empty"
        assert all(0 <= v < g.n for v in s), "branch set outside host"
        assert not (s & seen), "branch sets overlap"
        seen |= s
        # connectivity by BFS over explicit neighbour lists
        todo = [next(iter(s))]
        reached = {todo[0]}
        while todo:
            u = todo.pop()
            for v in s:
                if v not in reached and g.has_edge(u, v):
                    reached.add(v)
                    todo.append(v)
        assert reached == s, "branch set not connected"
    for i in range(w.pattern.n):
        for j in range(i + 1, w.pattern.n):
            if w.pattern.has_edge(i, j):
                assert any(
                    g.has_edge(u, v) for u in sets[i] for v in sets[j]
                ), f"pattern edge ({i},{j}) not realised"


def _search_model(
    g: Graph,
    h: Graph,
    roots: tuple[int, ...] | None = None,
    symmetric: bool = False,
) -> list[int] | None:
    """Branch-set masks realising h in g, or None.

    roots: when given, branch set i must contain roots[i].
    symmetric: break symmetry by strictly increasing branch-set minima
    (sound only when every pattern-vertex permutation is an automorphism,
    e.g. complete patterns).

    Pruning: per-set growth budget from the remaining vertex pool, required
    adjacency to placed sets checked during growth, and placed sets that
    future pattern vertices must attach to keep a live frontier.
    """
    n, p = g.n, h.n
    if p > n or h.edge_count > g.edge_count:
        return None
    adj = g.adj
    order = sorted(range(p), key=lambda v: -h.adj[v].bit_count())
    if roots is not None:
        order = list(range(p))
    req = [
        tuple(j for j in range(i) if h.adj[order[i]] >> order[j] & 1)
        for i in range(p)
    ]
    # attach_after[i][j]: bags at positions >= i that pattern-attach to bag j.
    # Remaining bags are disjoint vertex sets, so a placed bag j must keep at
    # least that many distinct free vertices in its host neighbourhood.
    attach_after = [[0] * p for _ in range(p + 1)]
    for i in range(p - 1, -1, -1):
        row_i = h.adj[order[i]]
        for j in range(p):
            attach_after[i][j] = attach_after[i + 1][j] + (
                1 if row_i >> order[j] & 1 else 0
            )
    sets: list[int] = [0] * p
    zones: list[int] = [0] * p  # host neighbourhood of each placed set
    root_mask = 0
    if roots is not None:
        root_mask = sum(1 << r for r in roots)

    def place(i: int, free: int, prev_min: int) -> bool:
        if i == p:
            return True
        spare = free.bit_count() - (p - i)
        if spare < 0:
            return False
        cap_row = attach_after[i]
        for j in range(i):
            if (zones[j] & free).bit_count() < cap_row[j]:
                return False
        needed = [zones[j] for j in req[i]]
        cap_next = attach_after[i + 1]

        def grow(s_mask: int, nbhd: int, allowed: int, budget: int) -> bool:
            unmet = 0
            for z in needed:
                if not s_mask & z:
                    if not allowed & z:
                        return False
                    unmet += 1
            if not unmet:
                rest = free & ~s_mask
                ok = True
                for j in range(i):
                    if cap_next[j] and (zones[j] & rest).bit_count() < cap_next[j]:
                        # zones[j] is fixed and rest only shrinks: dead branch
                        return False
                zone_i = nbhd & ~s_mask
                if cap_next[i] and (zone_i & rest).bit_count() < cap_next[i]:
                    ok = False  # growing s may still enlarge its zone
                if ok:
                    sets[i] = s_mask
                    zones[i] = zone_i
                    start = s_mask & -s_mask
                    if place(i + 1, rest, start.bit_length() - 1):
                        return True
            if not budget:
                return False
            ext = nbhd & allowed & ~s_mask
            local = allowed
            while ext:
                low = ext & -ext
                ext ^= low
                local &= ~low
                x = low.bit_length() - 1
                if grow(s_mask | low, nbhd | adj[x], local, budget - 1):
                    return True
            return False

        if roots is not None:
            r = roots[order[i]]
            if not free >> r & 1:
                return False
            later_roots = root_mask & ~(1 << r) & free
            return grow(1 << r, adj[r], free & ~(1 << r) & ~later_roots, spare)
        starts = free
        if symmetric:
            starts &= ~((1 << (prev_min + 1)) - 1)
        while starts:
            low = starts & -starts
            starts ^= low
            s = low.bit_length() - 1
            higher = free & ~((1 << (s + 1)) - 1)
            if grow(low, adj[s], higher, spare):
                return True
        return False

    if place(0, (1 << n) - 1, -1):
        out = [0] * p
        for i in range(p):
            out[order[i]] = sets[i]
        return out
    return None


def _masks_to_witness(pattern: Graph, masks: list[int]) -> MinorWitness:
    return MinorWitness(pattern, tuple(frozenset(bits(m)) for m in masks))


def has_minor(g: Graph, h: Graph) -> MinorWitness | None:
    """Exhaustive exact test for h as a minor of g, with witness."""
    if g.n > EXHAUSTIVE_HOST_LIMIT:
        raise ValueError(f"host has {g.n} > {EXHAUSTIVE_HOST_LIMIT} vertices")
    # complete / empty patterns admit full branch-set interchange
    symmetric = h.edge_count in (0, h.n * (h.n - 1) // 2)
    masks = _search_model(g, h, symmetric=symmetric)
    return None if masks is None else _masks_to_witness(h, masks)


# Verdict cache for clique minors, keyed by (certificate, r).  Verdicts are
# isomorphism-invariant; witnesses are not, so only booleans are stored.
_KR_MEMO: dict[tuple[bytes, int], bool] = {}
_KR_MEMO_CAP = 1 << 16


def _remember(key: tuple[bytes, int], verdict: bool) -> bool:
    if len(_KR_MEMO) >= _KR_MEMO_CAP:
        _KR_MEMO.clear()
    _KR_MEMO[key] = verdict
    return verdict


def _component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    comps = []
    left = alive
    while left:
        comp = left & -left
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def _peel_for_clique(g: Graph, r: int) -> Graph:
    """Shrink g without changing whether it has a complete minor on r vertices.

    Degree <= 1 vertices never help (their set could attach to at most one
    other, but r - 1 >= 2 attachments are needed); for r >= 4 a degree-2
    vertex can be contracted into a neighbour, since a branch set reduced to
    that single vertex could attach to at most two others.
    """
    rows = list(g.adj)
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        m = alive
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            row = rows[v] & alive
            d = row.bit_count()
            if d <= 1:
                alive ^= low
                changed = True
            elif d == 2 and r >= 4:
                a = (row & -row).bit_length() - 1
                b = row.bit_length() - 1
                alive ^= low
                rows[a] |= 1 << b
                rows[b] |= 1 << a
                changed = True
    keep = bits(alive)
    pos = {v: i for i, v in enumerate(keep)}
    out = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in bits(rows[v] & alive & ~(1 << v)):
            out[i] |= 1 << pos[w]
    return from_rows(len(keep), out)


def _kr_search(g: Graph, r: int) -> bool:
    """Exact clique-minor decision on one connected, pre-bounded graph."""
    if g.n < r or g.edge_count < r * (r - 1) // 2:
        return False
    if r <= 7 and g.n >= r and g.edge_count > (r - 2) * g.n - comb2(r - 1):
        return True  # over the minor-free edge cap, a model must exist
    if has_clique(g, r) is not None:
        return True
    return _search_model(g, complete(r), symmetric=True) is not None


def comb2(k: int) -> int:
    return k * (k - 1) // 2


def kr_minor_verdict(g: Graph, r: int) -> bool:
    """Memoized boolean: does g have a complete minor on r vertices?"""
    if r <= 1:
        return g.n >= r
    if r == 2:
        return g.edge_count >= 1
    if g.n < r or g.edge_count < comb2(r):
        return False
    if r == 3:  # a triangle minor is exactly a cycle
        comps = _component_masks(g.adj, (1 << g.n) - 1)
        return g.edge_count > g.n - len(comps)
    if r <= 7 and g.n >= r and g.edge_count > (r - 2) * g.n - comb2(r - 1):
        return True  # over the minor-free edge cap
    key = (canonical_cert(g), r)
    hit = _KR_MEMO.get(key)
    if hit is not None:
        return hit
    peeled = _peel_for_clique(g, r)
    for comp in _component_masks(peeled.adj, (1 << peeled.n) - 1):
        part = peeled if comp == (1 << peeled.n) - 1 else _induced_mask(peeled, comp)
        if _kr_search(part, r):
            return _remember(key, True)
    return _remember(key, False)


def _induced_mask(g: Graph, mask: int) -> Graph:
    keep = bits(mask)
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in bits(g.adj[v] & mask):
            rows[i] |= 1 << pos[w]
    return from_rows(len(keep), rows)


def has_clique_minor(g: Graph, r: int) -> MinorWitness | None:
    """K_r-minor witness with branch sets ordered by minimum element."""
    if g.n > EXHAUSTIVE_HOST_LIMIT:
        raise ValueError(f"host has {g.n} > {EXHAUSTIVE_HOST_LIMIT} vertices")
    if r >= 1 and not kr_minor_verdict(g, r):
        return None
    clique = has_clique(g, r)
    if clique is not None:
        masks = [1 << v for v in sorted(clique)]
    else:
        masks = _search_model(g, complete(r), symmetric=True)
        assert masks is not None, "verdict and witness search disagree"
        masks.sort(key=lambda m: m & -m)
    return _masks_to_witness(complete(r), masks)


def rooted_k3(g: Graph, a: int, b: int, c: int) -> RootedK3Outcome:
    """Triangle minor rooted at {a, b, c}, or a vertex separating the roots.

    Exactly one alternative applies: a rooted model survives every single
    vertex deletion, and conversely.
    """
    if len({a, b, c}) != 3:
        raise ValueError(f"roots {a},{b},{c} must be distinct")
    masks = _search_model(g, complete(3), roots=(a, b, c))
    if masks is not None:
        return RootedK3Outcome(_masks_to_witness(complete(3), masks), None)
    for v in range(g.n):
        if _separates_roots(g, v, (a, b, c)):
            return RootedK3Outcome(None, v)
    raise RuntimeError("rooted-K3 dichotomy violated")  # unreachable


def _separates_roots(g: Graph, v: int, roots: tuple[int, ...]) -> bool:
    alive = (1 << g.n) - 1 & ~(1 << v)
    seen_root = 0
    visited = 0
    for r in roots:
        if r == v or visited >> r & 1:
            continue
        comp = 1 << r
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & alive & ~comp
            comp |= frontier
        visited |= comp
        hit = sum(1 for s in roots if s != v and comp >> s & 1)
        if hit > 1:
            return False
    return True


def two_disjoint_paths(
    g: Graph, s1: int, t1: int, s2: int, t2: int
) -> tuple[list[int], list[int]] | None:
    """Vertex-disjoint paths s1->t1 and s2->t2, or None.  Brute force."""
    terminals = (s1, t1, s2, t2)
    if len(set(terminals)) != 4:
        raise ValueError(f"terminals {terminals} must be distinct")
    if g.n > EXHAUSTIVE_HOST_LIMIT:
        raise ValueError(f"host has {g.n} > {EXHAUSTIVE_HOST_LIMIT} vertices")
    banned = 1 << s2 | 1 << t2
    result: tuple[list[int], list[int]] | None = None

    def second_path(used: int) -> list[int] | None:
        avoid = used & ~banned  # the first path blocks; s2/t2 stay usable
        parent = {s2: -1}
        queue = [s2]
        while queue:
            u = queue.pop(0)
            if u == t2:
                path = [u]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            for v in bits(g.adj[u] & ~avoid):
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        return None

    def extend(path: list[int], used: int) -> bool:
        nonlocal result
        u = path[-1]
        if u == t1:
            other = second_path(used)
            if other is not None:
                result = (path[:], other)
                return True
            return False
        for v in bits(g.adj[u] & ~used):
            if extend(path + [v], used | 1 << v):
                return True
        return False

    # s2 and t2 count as used from the start, so the first path avoids them.
    extend([s1], 1 << s1 | banned)
    return result


def attach_vertex(g: Graph, neighbourhood) -> Graph:
    """g plus one new vertex (label n) joined to the given vertices."""
    rows = list(g.adj) + [0]
    for v in neighbourhood:
        rows[v] |= 1 << g.n
        rows[g.n] |= 1 << v
    return from_rows(g.n + 1, rows)


def apex_augment_check(
    g: Graph, k_max: int, r: int, candidates: tuple[int, ...] | None = None
):
    """Subsets S (|S| <= k_max) for which g plus a new vertex joined to S has
    no complete minor on r vertices.

    candidates restricts the universe the subsets are drawn from (default:
    all vertices of g).
    """
    if g.n + 1 > EXHAUSTIVE_HOST_LIMIT:
        raise ValueError(f"augmented host would exceed {EXHAUSTIVE_HOST_LIMIT} vertices")
    universe = tuple(range(g.n)) if candidates is None else tuple(candidates)
    survivors: dict[int, list[tuple[int, ...]]] = {}
    for k in range(1, k_max + 1):
        for subset in combinations(universe, k):
            aug = attach_vertex(g, subset)
            if not kr_minor_verdict(aug, r):
                survivors.setdefault(k, []).append(subset)
    return survivors


def double_apex_check(h: Graph, r: int = 8) -> bool:
    """True iff for every 7-subset Y of V(h), adding a vertex joined to all of
    h and a second vertex joined to Y yields a complete minor on r vertices."""
    if h.n + 2 > EXHAUSTIVE_HOST_LIMIT:
        raise ValueError(f"augmented host would exceed {EXHAUSTIVE_HOST_LIMIT} vertices")
    if h.n < 7:
        return True
    for y in combinations(range(h.n), 7):
        if len(y) == h.n:
            continue  # Y must be a proper subset
        aug = attach_vertex(attach_vertex(h, range(h.n)), y)
        if not kr_minor_verdict(aug, r):
            return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs, 0 if disconnected."""
    if g.n == 1:
        return 0
    if not g.is_connected():
        return 0
    full = (1 << g.n) - 1
    if all(g.adj[v] == full & ~(1 << v) for v in range(g.n)):
        return g.n - 1
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _max_vertex_flow(g, s, t, best))
    return best


def _max_vertex_flow(g: Graph, s: int, t: int, cap: int) -> int:
    """Internally disjoint s-t paths by unit-capacity augmentation on the
    split digraph (v_in = v, v_out = v + n)."""
    n = g.n
    arcs: dict[tuple[int, int], int] = {}
    for v in range(n):
        if v != s and v != t:
            arcs[(v, v + n)] = 1
    for u in range(n):
        for v in bits(g.adj[u]):
            arcs[(u + n, v)] = 1
            arcs[(v + n, u)] = 1
    arcs[(s, s + n)] = g.n
    arcs[(t, t + n)] = g.n
    flow = 0
    while flow < cap:
        parent: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = [s]
        reached = False
        while queue and not reached:
            u = queue.pop(0)
            for (a, b), c in arcs.items():
                if a == u and c > 0 and b not in parent:
                    parent[b] = (a, b)
                    if b == t + n:
                        reached = True
                        break
                    queue.append(b)
        if t + n not in parent:
            break
        node = t + n
        while node != s:
            a, b = parent[node]
            arcs[(a, b)] -= 1
            arcs[(b, a)] = arcs.get((b, a), 0) + 1
            node = a
        flow += 1
    return flow
