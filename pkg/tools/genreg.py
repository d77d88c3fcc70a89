#!/usr/bin/env python3
"""Exhaustive generation of r-regular graphs on n vertices up to isomorphism.

Vertex-saturation search: a state is a graph in which every edge addition so
far went through a vertex that was topped up to full degree r.  From each
isomorphism class we saturate one chosen deficient vertex in every possible
way and deduplicate globally.  Every r-regular graph on n vertices is
reachable: for any target G and saturated set S, the subgraph of edges
meeting S is a state, and topping up any deficient vertex stays inside G.

Output counts are cross-checked against the published censuses before the
fixture files are trusted.
"""

from __future__ import annotations

import sys
from itertools import combinations

import networkx as nx


def _invariant(adj: tuple[int, ...]) -> tuple:
    """Iso-invariant bucket key: Weisfeiler-Lehman colouring run to
    stability, summarized as the sorted colour multiset plus edge profile."""
    n = len(adj)
    colors = [bin(a).count("1") for a in adj]
    for _ in range(n):
        new = []
        for v in range(n):
            nb = tuple(sorted(colors[u] for u in range(n) if adj[v] >> u & 1))
            new.append((colors[v], nb))
        lut = {c: i for i, c in enumerate(sorted(set(new)))}
        refined = [lut[c] for c in new]
        if len(set(refined)) == len(set(colors)):
            colors = refined
            break
        colors = refined
    edge_profile = sorted(
        (min(colors[v], colors[u]), max(colors[v], colors[u]))
        for v in range(n) for u in range(v + 1, n) if adj[v] >> u & 1
    )
    return (tuple(sorted(colors)), tuple(edge_profile))


def _to_nx(adj: tuple[int, ...]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(len(adj)))
    for v, mask in enumerate(adj):
        m = mask >> (v + 1) << (v + 1)
        while m:
            u = (m & -m).bit_length() - 1
            g.add_edge(v, u)
            m &= m - 1
    return g


def generate_regular(n: int, r: int, progress: bool = False):
    """Yield all r-regular graphs on n vertices (connected or not), one per
    isomorphism class, as adjacency-bitmask tuples."""
    if n * r % 2 != 0 or r >= n or n <= 0:
        return
    if r == 0:
        yield tuple([0] * n)
        return
    start = tuple([0] * n)
    buckets: dict[tuple, list[tuple[tuple[int, ...], nx.Graph]]] = {}
    buckets[_invariant(start)] = [(start, _to_nx(start))]
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        next_frontier = []
        for g in frontier:
            deg = [bin(a).count("1") for a in g]
            deficient = [u for u in range(n) if deg[u] < r]
            if not deficient:
                yield g
                continue
            # most-saturated deficient vertex: fewest edges still to add
            v = min(deficient, key=lambda u: (r - deg[u], u))
            need = r - deg[v]
            cands = [u for u in deficient
                     if u != v and not (g[v] >> u & 1)]
            if len(cands) < need:
                continue
            for pick in combinations(cands, need):
                child = list(g)
                for u in pick:
                    child[v] |= 1 << u
                    child[u] |= 1 << v
                child_t = tuple(child)
                key = _invariant(child_t)
                bucket = buckets.setdefault(key, [])
                gx = None
                fresh = True
                for _, ox in bucket:
                    if gx is None:
                        gx = _to_nx(child_t)
                    if nx.is_isomorphic(gx, ox):
                        fresh = False
                        break
                if fresh:
                    bucket.append((child_t, gx if gx is not None else _to_nx(child_t)))
                    next_frontier.append(child_t)
        frontier = next_frontier
        if progress:
            print(f"  level {level}: {len(frontier)} new classes",
                  file=sys.stderr)


def edges_of(adj: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    for v, mask in enumerate(adj):
        m = mask >> (v + 1) << (v + 1)
        while m:
            u = (m & -m).bit_length() - 1
            out.append((v, u))
            m &= m - 1
    return out


def is_connected(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        m = adj[v] & ~seen
        while m:
            u = (m & -m).bit_length() - 1
            seen |= 1 << u
            stack.append(u)
            m &= m - 1
    return seen == (1 << n) - 1


if __name__ == "__main__":
    n, r = int(sys.argv[1]), int(sys.argv[2])
    conn_only = "--connected" in sys.argv
    total = 0
    conn = 0
    for g in generate_regular(n, r, progress="-v" in sys.argv):
        total += 1
        c = is_connected(g)
        conn += c
        if conn_only and not c:
            continue
        print(" ".join(f"{a}:{b}" for a, b in edges_of(g)))
    print(f"# n={n} r={r}: {total} total, {conn} connected", file=sys.stderr)
