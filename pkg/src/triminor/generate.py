"""Isomorph-free exhaustive generation by canonical edge augmentation.

Graphs on n vertices grow edge by edge from the empty graph.  A child is
accepted only when the edge just added lies in the automorphism orbit of the
child's canonical deletion edge (the orbit minimising an invariant key), so
every isomorphism class is produced exactly once with no global seen-set.
Hereditary pruning cuts whole subtrees: a predicate that can never be
repaired by further edge additions (degree caps, edge caps, forbidden clique
minors) rejects a graph together with all its supergraphs.

Generation under a minimum-degree constraint runs on the complement side
when that is cheaper: graphs with min degree >= d on n vertices are exactly
the complements of graphs with max degree <= n-1-d, and the latter class is
usually far smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .canon import pair_cert
from .graphs import Graph, complement, from_rows, mader_edge_cap
from .minors import EXHAUSTIVE_HOST_LIMIT, kr_minor_verdict

PRUNE_IDS = ("none", "K4", "K5", "K6", "K7", "K8")


@dataclass(frozen=True)
class GenSpec:
    """Declarative enumeration job.

    min_degree applies to completed (emitted) graphs; prune is a hereditary
    predicate id; max_edges an optional cap on emitted edge counts.
    """

    n: int
    min_degree: int = 0
    prune: str = "none"
    max_edges: int | None = None

    def __post_init__(self):
        if self.prune not in PRUNE_IDS:
            raise ValueError(f"unknown prune id {self.prune!r}, have {PRUNE_IDS}")
        if not 1 <= self.n <= 64:
            raise ValueError(f"n={self.n} outside 1..64")
        if self.min_degree >= self.n:
            raise ValueError(f"min_degree {self.min_degree} infeasible for n={self.n}")
        if self.prune != "none" and self.n > EXHAUSTIVE_HOST_LIMIT:
            raise ValueError(
                f"minor-pruned generation capped at n={EXHAUSTIVE_HOST_LIMIT}"
            )
        if self.prune == "none" and self.max_edges is None and self.n > 10:
            if self.min_degree < self.n - 5:
                raise ValueError(
                    "unconstrained generation beyond n=10 needs an edge cap"
                )

    def prune_order(self) -> int | None:
        return None if self.prune == "none" else int(self.prune[1:])


def _edge_invariant(g: Graph, u: int, v: int) -> tuple[int, int, int]:
    du, dv = g.adj[u].bit_count(), g.adj[v].bit_count()
    if du > dv:
        du, dv = dv, du
    return du, dv, (g.adj[u] & g.adj[v]).bit_count()


def _orbit_reps(g: Graph, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One representative per automorphism orbit of the given vertex pairs."""
    by_inv: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
    for u, v in pairs:
        by_inv.setdefault(_edge_invariant(g, u, v), []).append((u, v))
    reps = []
    for group in by_inv.values():
        if len(group) == 1:
            reps.append(group[0])
            continue
        seen: dict[bytes, tuple[int, int]] = {}
        for u, v in group:
            c = pair_cert(g, u, v)
            if c not in seen:
                seen[c] = (u, v)
        reps.extend(seen.values())
    return sorted(reps)


def _is_canonical_child(g: Graph, added: tuple[int, int]) -> bool:
    """Accept g iff the added edge lies in the canonical deletion orbit.

    The canonical deletion edge minimises (invariant, pair certificate),
    an isomorphism-invariant key, so exactly one augmentation orbit leading
    to each child class is ever accepted.
    """
    edges = g.edges()
    if len(edges) == 1:
        return True
    inv_added = _edge_invariant(g, *added)
    cheapest = min(_edge_invariant(g, u, v) for u, v in edges)
    if inv_added != cheapest:
        return False
    cert_added = pair_cert(g, *added)
    for u, v in edges:
        if (u, v) == added or _edge_invariant(g, u, v) != cheapest:
            continue
        if pair_cert(g, u, v) < cert_added:
            return False
    return True


def _with_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows), g.edge_count + 1)


def orderly_stream(n: int, keep: Callable[[Graph], bool]) -> Iterator[Graph]:
    """All graphs on n vertices passing the hereditary predicate `keep`,
    one per isomorphism class, in deterministic level (edge count) order."""
    empty = from_rows(n, [0] * n)
    if not keep(empty):
        return
    level = [empty]
    yield empty
    while level:
        nxt: list[Graph] = []
        for parent in level:
            non_edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if not parent.adj[u] >> v & 1
            ]
            for u, v in _orbit_reps(parent, non_edges):
                child = _with_edge(parent, u, v)
                if keep(child) and _is_canonical_child(child, (u, v)):
                    nxt.append(child)
        level = nxt
        yield from level


def generate(spec: GenSpec) -> Iterator[Graph]:
    """One representative per isomorphism class meeting the GenSpec."""
    r = spec.prune_order()
    n = spec.n
    comp_cap = n - 1 - spec.min_degree
    comp_budget = n * comp_cap // 2
    if spec.max_edges is not None:
        direct_budget = spec.max_edges
    elif r is not None and r <= 7:
        direct_budget = max(mader_edge_cap(n, r), 0)
    elif r == 8:
        direct_budget = max(6 * n - 20, 0)
    else:
        direct_budget = n * (n - 1) // 2

    def emits(g: Graph) -> bool:
        if spec.max_edges is not None and g.edge_count > spec.max_edges:
            return False
        return r is None or not kr_minor_verdict(g, r)

    if comp_budget < direct_budget:
        # complement side: max-degree cap is the hereditary prune
        def keep(s: Graph) -> bool:
            return all(row.bit_count() <= comp_cap for row in s.adj)

        for s in orderly_stream(n, keep):
            g = complement(s)
            if emits(g):
                yield g
    else:
        def keep(g: Graph) -> bool:
            if spec.max_edges is not None and g.edge_count > spec.max_edges:
                return False
            return r is None or not kr_minor_verdict(g, r)

        for g in orderly_stream(n, keep):
            if g.min_degree() >= spec.min_degree or g.n == 1:
                yield g


def generate_count(spec: GenSpec) -> int:
    return sum(1 for _ in generate(spec))
