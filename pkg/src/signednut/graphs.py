"""Signed graphs: construction, switching, balance and switching classes.

A signed graph is a simple undirected graph together with a total edge-sign
map into {+1, -1}.  Vertices are 0-based integers; edges are stored as
lexicographically sorted (min, max) pairs so that enumeration and
serialization are deterministic.  All values are immutable and the
operations are pure functions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

__all__ = [
    "GraphError",
    "DisconnectedGraphError",
    "SignedGraph",
    "SwitchingSet",
    "SpanningTree",
    "spanning_tree",
    "tree_positive_representative",
    "is_traditional",
    "switching_equivalent",
    "enumerate_class_representatives",
]


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-domain operations."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation requires a connected graph."""


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph with a total edge-sign map.

    ``edges[i]`` is the i-th edge in lexicographic (min, max) order and
    ``signs[i]`` its sign.  The underlying graph is (order, edges) with the
    sign data erased.
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise GraphError("graph must have at least one vertex")
        if len(self.signs) != len(self.edges):
            raise GraphError("signs must have exactly one entry per edge")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.order):
                raise GraphError(f"bad edge ({u}, {v}) for order {self.order}")
            if prev is not None and (u, v) <= prev:
                raise GraphError("edges must be strictly sorted (no multi-edges)")
            prev = (u, v)
        if any(s not in (-1, 1) for s in self.signs):
            raise GraphError("signs must be +1 or -1")

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[tuple[int, int]],
        negative: Iterable[tuple[int, int]] = (),
    ) -> "SignedGraph":
        """Build from an edge list and a set of negative edges."""
        norm = sorted((min(u, v), max(u, v)) for u, v in edges)
        neg = {(min(u, v), max(u, v)) for u, v in negative}
        stray = neg - set(norm)
        if stray:
            raise GraphError(f"negative edges not in edge set: {sorted(stray)}")
        signs = tuple(-1 if e in neg else 1 for e in norm)
        return cls(order, tuple(norm), signs)

    @classmethod
    def from_sign_map(
        cls, order: int, signs: Mapping[tuple[int, int], int]
    ) -> "SignedGraph":
        edges = list(signs)
        neg = [e for e, s in signs.items() if s == -1]
        return cls.from_edges(order, edges, neg)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def negative_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, s in zip(self.edges, self.signs) if s == -1)

    def sign(self, u: int, v: int) -> int:
        e = (min(u, v), max(u, v))
        try:
            return self.signs[self.edges.index(e)]
        except ValueError:
            raise GraphError(f"no edge {e}") from None

    def underlying(self) -> "SignedGraph":
        """The same graph with all signs erased (set to +1)."""
        return SignedGraph(self.order, self.edges, (1,) * len(self.edges))

    def adjacency_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_matrix(self) -> list[list[int]]:
        """Symmetric integer matrix with entry (u, v) = sign of edge uv."""
        n = self.order
        a = [[0] * n for _ in range(n)]
        for (u, v), s in zip(self.edges, self.signs):
            a[u][v] = s
            a[v][u] = s
        return a

    def is_connected(self) -> bool:
        if self.order == 1:
            return True
        adj = self.adjacency_lists()
        seen = [False] * self.order
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    queue.append(u)
        return count == self.order

    def switch(self, u: "SwitchingSet | Iterable[int]") -> "SignedGraph":
        """Flip the sign of every edge with exactly one endpoint in u."""
        members = u.members if isinstance(u, SwitchingSet) else frozenset(u)
        if any(not (0 <= v < self.order) for v in members):
            raise GraphError("switching set contains a vertex out of range")
        signs = tuple(
            -s if (a in members) != (b in members) else s
            for (a, b), s in zip(self.edges, self.signs)
        )
        return SignedGraph(self.order, self.edges, signs)


@dataclass(frozen=True)
class SwitchingSet:
    """A vertex subset defining a switching; identified with its complement.

    The canonical form is the side not containing vertex 0.
    """

    order: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if any(not (0 <= v < self.order) for v in self.members):
            raise GraphError("switching set contains a vertex out of range")

    def canonical(self) -> "SwitchingSet":
        if 0 in self.members:
            return SwitchingSet(
                self.order, frozenset(range(self.order)) - self.members
            )
        return self

    def complement(self) -> "SwitchingSet":
        return SwitchingSet(self.order, frozenset(range(self.order)) - self.members)


@dataclass(frozen=True)
class SpanningTree:
    """BFS spanning tree rooted at vertex 0 with parent links."""

    parent: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def spanning_tree(g: SignedGraph) -> SpanningTree:
    """Deterministic spanning tree: BFS from vertex 0, neighbors explored
    in ascending vertex order."""
    adj = g.adjacency_lists()
    parent = [-1] * g.order
    seen = [False] * g.order
    seen[0] = True
    queue = deque([0])
    edges = []
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                edges.append((min(u, v), max(u, v)))
                queue.append(u)
    if not all(seen):
        raise DisconnectedGraphError("graph has no spanning tree")
    return SpanningTree(tuple(parent), tuple(sorted(edges)))


def tree_positive_representative(
    g: SignedGraph,
) -> tuple[SignedGraph, SwitchingSet]:
    """The unique member of g's switching class whose spanning-tree edges
    are all positive, with the switching set realizing it.

    The switching set collects the vertices whose root path in the tree
    carries an even number of negative edges (complemented to canonical
    form).  Idempotent: a tree-positive graph maps to itself with the
    empty switching.
    """
    tree = spanning_tree(g)
    tree_set = set(tree.edges)
    # parity[v] = number of negative tree edges on the 0..v path, mod 2
    parity = [0] * g.order
    order_bfs = sorted(range(1, g.order), key=lambda v: _depth(tree.parent, v))
    for v in order_bfs:
        p = tree.parent[v]
        s = g.sign(p, v)
        parity[v] = parity[p] ^ (s == -1)
    even = frozenset(v for v in range(g.order) if parity[v] == 0)
    u = SwitchingSet(g.order, even).canonical()
    rep = g.switch(u)
    assert all(
        s == 1 for e, s in zip(rep.edges, rep.signs) if e in tree_set
    ), "switching failed to make the tree positive"
    return rep, u


def _depth(parent: tuple[int, ...], v: int) -> int:
    d = 0
    while parent[v] != -1:
        v = parent[v]
        d += 1
    return d


def is_traditional(g: SignedGraph) -> bool:
    """True iff g is switching equivalent to the all-positive signing
    (balanced); False means proper (unbalanced)."""
    rep, _ = tree_positive_representative(g)
    return not rep.negative_edges


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> bool:
    """True iff some switching maps a to b.

    Decided by checking that the edgewise sign-product graph is
    traditional: a switching flips the product signs on a cut, so the
    product class is balanced exactly when such a cut exists.
    """
    if a.order != b.order or a.edges != b.edges:
        raise GraphError("switching equivalence requires the same underlying graph")
    prod = SignedGraph(
        a.order, a.edges, tuple(x * y for x, y in zip(a.signs, b.signs))
    )
    return is_traditional(prod)


def enumerate_class_representatives(g: SignedGraph) -> Iterator[SignedGraph]:
    """One tree-positive representative per switching class of g's
    underlying graph.

    Yields exactly 2^(m - n + 1) signed graphs: tree edges positive, the
    non-tree edge signs running through all subsets in binary-counter
    order over the lexicographically sorted non-tree edges (the last
    non-tree edge toggles fastest).
    """
    tree = spanning_tree(g)
    tree_set = set(tree.edges)
    non_tree = [e for e in g.edges if e not in tree_set]
    t = len(non_tree)
    for counter in range(1 << t):
        neg = [
            non_tree[i] for i in range(t) if (counter >> (t - 1 - i)) & 1
        ]
        yield SignedGraph.from_edges(g.order, g.edges, neg)
