"""Canonical certificates deciding isomorphism for small graphs.

The certificate is the lexicographically minimal row-major upper triangle
over all vertex orderings compatible with iterated neighbourhood
refinement: refine an ordered partition to stability, branch on every
vertex of the first non-singleton cell, and keep the minimal leaf.  The
minimum ranges over a full coset of the automorphism group, so equal
certificates are exactly isomorphic graphs.  Graphs stay tiny here (the
hot paths are at most 16 vertices), which keeps full branching affordable
and auditable.
"""

from __future__ import annotations

from math import comb

from .graphs import Graph


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by per-cell neighbour counts until stable, keeping order."""
    while True:
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _triangle_key(adj: tuple[int, ...], lab: list[int]) -> int:
    """Row-major upper-triangle bits of the relabelled matrix, as one integer."""
    key = 0
    for i, vi in enumerate(lab):
        row = adj[vi]
        for vj in lab[i + 1:]:
            key = key << 1 | (row >> vj & 1)
    return key


def _min_key(g: Graph, cells: list[list[int]]) -> int:
    """Minimal triangle key over all refinement-compatible orderings."""
    nbits = comb(g.n, 2)
    if g.edge_count == 0:
        return 0
    if g.edge_count == nbits:
        return (1 << nbits) - 1
    adj = g.adj
    best: int | None = None

    def rec(cells: list[list[int]]) -> None:
        nonlocal best
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            key = _triangle_key(adj, [c[0] for c in cells])
            if best is None or key < best:
                best = key
            return
        rest = cells[idx]
        tail = cells[idx + 1:]
        head = cells[:idx]
        # twins are exchanged by an automorphism (equal open neighbourhoods,
        # or equal closed neighbourhoods when adjacent), so one branch per
        # twin class still reaches every minimal leaf
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in rest:
            open_sig = adj[v]
            closed_sig = adj[v] | 1 << v
            if open_sig in seen_open or closed_sig in seen_closed:
                continue
            seen_open.add(open_sig)
            seen_closed.add(closed_sig)
            other = [w for w in rest if w != v]
            rec(_refine(adj, head + [[v], other] + tail))

    rec(_refine(adj, cells))
    assert best is not None
    return best


def canonical_cert(g: Graph) -> bytes:
    """Relabelling-invariant certificate: n, then the minimal triangle bits."""
    key = _min_key(g, [list(range(g.n))])
    nbytes = (comb(g.n, 2) + 7) // 8
    return bytes([g.n]) + key.to_bytes(nbytes, "big")


def pair_cert(g: Graph, u: int, v: int) -> bytes:
    """Certificate of g with the pair {u, v} distinguished.

    Equal results for pairs {u,v} and {x,y} of the same graph mean some
    automorphism maps one pair onto the other, so this groups edges (or
    non-edges) into automorphism orbits.
    """
    rest = [w for w in range(g.n) if w != u and w != v]
    cells = [[u, v]] + ([rest] if rest else [])
    key = _min_key(g, cells)
    nbytes = (comb(g.n, 2) + 7) // 8
    return key.to_bytes(nbytes, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_cert(g) == canonical_cert(h)
