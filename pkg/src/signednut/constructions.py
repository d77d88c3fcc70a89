"""Constructions of signed nut graphs.

Two explicit constructions: a vertex expansion that replaces the star at a
degree-rho vertex by a bipartite gadget on 2*rho new vertices while
preserving nullity, and a complete-graph signed nut on 4k+1 vertices built
from k disjoint all-negative paths P4 plus an apex.  Both come with exact
eigenvector transport and a closed-form spectrum check for the latter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import GraphError, SignedGraph

__all__ = [
    "FowlerExpansion",
    "CompleteNut",
    "fowler",
    "transport_eigenvector",
    "complete_nut",
    "complete_nut_spectrum",
    "EquivLabelingVerdict",
    "check_equiv_labeling",
]


@dataclass(frozen=True)
class FowlerExpansion:
    """A vertex expansion of a signed graph about a pivot of degree rho.

    New vertices q_1..q_rho and p_1..p_rho are aligned with the pivot's
    neighbors u_1..u_rho in ascending vertex order; q_i are numbered
    n..n+rho-1 and p_i are n+rho..n+2*rho-1.
    """

    source: SignedGraph
    pivot: int
    result: SignedGraph
    u_vertices: tuple[int, ...]
    q_vertices: tuple[int, ...]
    p_vertices: tuple[int, ...]


def fowler(g: SignedGraph, v: int) -> FowlerExpansion:
    """Expand g about vertex v of degree rho >= 2.

    The star edges v-u_i are deleted and replaced by v-q_i (positive),
    q_i-p_j for i != j (positive) and p_i-u_i carrying the old sign of
    v-u_i; all other edges keep their signs.  A rho-regular input yields a
    rho-regular result of order n + 2*rho.
    """
    if not (0 <= v < g.order):
        raise GraphError(f"pivot {v} out of range")
    nbrs = tuple(sorted(g.adjacency_lists()[v]))
    rho = len(nbrs)
    if rho < 2:
        raise GraphError("pivot degree must be at least 2")
    n = g.order
    q = tuple(range(n, n + rho))
    p = tuple(range(n + rho, n + 2 * rho))
    signs: dict[tuple[int, int], int] = {}
    star = {(min(v, u), max(v, u)) for u in nbrs}
    for e, s in zip(g.edges, g.signs):
        if e not in star:
            signs[e] = s
    for i in range(rho):
        signs[(min(v, q[i]), max(v, q[i]))] = 1
        signs[(min(p[i], nbrs[i]), max(p[i], nbrs[i]))] = g.sign(v, nbrs[i])
        for j in range(rho):
            if i != j:
                signs[(min(q[i], p[j]), max(q[i], p[j]))] = 1
    result = SignedGraph.from_sign_map(n + 2 * rho, signs)
    return FowlerExpansion(g, v, result, nbrs, q, p)


def transport_eigenvector(
    e: FowlerExpansion, x: Sequence
) -> tuple[Fraction, ...]:
    """Map a kernel vector of the source onto one of the expansion.

    The pivot entry becomes -(rho - 1) times its old value, q_i takes the
    sign-weighted neighbor entry, p_i copies the pivot entry and all other
    entries are unchanged.  Both the input and the output are verified to
    lie in the respective kernels, exactly.
    """
    g = e.source
    xs = [Fraction(t) for t in x]
    if len(xs) != g.order:
        raise GraphError("vector length does not match source order")
    _check_kernel(g, xs)
    rho = len(e.u_vertices)
    out = xs + [Fraction(0)] * (2 * rho)
    out[e.pivot] = -(rho - 1) * xs[e.pivot]
    for i in range(rho):
        u = e.u_vertices[i]
        out[e.q_vertices[i]] = g.sign(e.pivot, u) * xs[u]
        out[e.p_vertices[i]] = xs[e.pivot]
    _check_kernel(e.result, out)
    return tuple(out)


def _check_kernel(g: SignedGraph, x: Sequence[Fraction]) -> None:
    a = g.adjacency_matrix()
    for v in range(g.order):
        if sum(a[v][u] * x[u] for u in range(g.order) if a[v][u]) != 0:
            raise GraphError(f"vector is not in the kernel (fails at vertex {v})")


@dataclass(frozen=True)
class CompleteNut:
    """Signed nut graph over the complete graph on 4k+1 vertices.

    Vertex 0 is the apex; the j-th path block occupies vertices
    4j+1..4j+4.  The negative edges are exactly the 3k internal edges of
    the k disjoint paths P4, and the kernel eigenvector is +1 on the apex
    and (-1, +1, +1, -1) on each block.
    """

    k: int
    result: SignedGraph
    eigenvector: tuple[int, ...]


def complete_nut(k: int) -> CompleteNut:
    """The complete-graph signed nut of order 4k+1."""
    if k < 1:
        raise GraphError("k must be a positive integer")
    n = 4 * k + 1
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    negative = []
    for j in range(k):
        b = 4 * j + 1
        negative += [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]
    g = SignedGraph.from_edges(n, edges, negative)
    x = [1] + [-1, 1, 1, -1] * k
    return CompleteNut(k, g, tuple(x))


def complete_nut_spectrum(k: int) -> list[tuple[float, int]]:
    """Closed-form adjacency spectrum of complete_nut(k) as a sorted list
    of (eigenvalue, multiplicity) pairs, coincident branches merged.

    The multiset is {2(k-1) +/- sqrt(4k(k-1)+5)} once each, +/-sqrt(5)
    k times each, +/-sqrt(5)-2 (k-1) times each, and 0 once; the
    multiplicities always sum to 4k+1.
    """
    if k < 1:
        raise GraphError("k must be a positive integer")
    s5 = math.sqrt(5.0)
    disc = math.sqrt(4 * k * (k - 1) + 5)
    raw = [
        (2 * (k - 1) + disc, 1),
        (2 * (k - 1) - disc, 1),
        (s5, k),
        (-s5, k),
        (s5 - 2, k - 1),
        (-s5 - 2, k - 1),
        (0.0, 1),
    ]
    merged: list[tuple[float, int]] = []
    for value, mult in sorted(raw):
        if mult == 0:
            continue
        if merged and abs(merged[-1][0] - value) < 1e-12:
            merged[-1] = (merged[-1][0], merged[-1][1] + mult)
        else:
            merged.append((value, mult))
    return merged


@dataclass(frozen=True)
class EquivLabelingVerdict:
    """Outcome of the shared-neighborhood eigenvector comparison."""

    passed: bool
    x_u_prime: Fraction
    x_v_prime: Fraction
    sign_uu_prime: int
    sign_vv_prime: int

    @property
    def abs_equal(self) -> bool:
        return abs(self.x_u_prime) == abs(self.x_v_prime)

    @property
    def sign_law_holds(self) -> bool:
        return (self.x_u_prime == self.x_v_prime) == (
            self.sign_uu_prime == self.sign_vv_prime
        )


def check_equiv_labeling(
    g: SignedGraph,
    x: Sequence,
    u: int,
    v: int,
    u_prime: int,
    v_prime: int,
) -> EquivLabelingVerdict:
    """Verify the forced eigenvector relation between the private
    neighbors of two twin-like vertices.

    Hypotheses (each checked, with the failing clause named): u and v are
    non-adjacent, have equal degree rho, share exactly rho - 1 neighbors,
    u' and v' are their private neighbors, and the signs towards every
    shared neighbor agree.  Then |x(u')| = |x(v')|, with equality of the
    values themselves exactly when sign(uu') = sign(vv')."""
    xs = [Fraction(t) for t in x]
    _check_kernel(g, xs)
    adj = g.adjacency_lists()
    nu, nv = set(adj[u]), set(adj[v])
    if v in nu:
        raise GraphError("precondition failed: u and v are adjacent")
    if len(nu) != len(nv):
        raise GraphError("precondition failed: u and v have different degrees")
    shared = nu & nv
    if len(shared) != len(nu) - 1:
        raise GraphError(
            "precondition failed: u and v must share all but one neighbor"
        )
    if nu - shared != {u_prime}:
        raise GraphError("precondition failed: u' is not the private neighbor of u")
    if nv - shared != {v_prime}:
        raise GraphError("precondition failed: v' is not the private neighbor of v")
    for w in shared:
        if g.sign(u, w) != g.sign(w, v):
            raise GraphError(
                f"precondition failed: signs towards shared neighbor {w} differ"
            )
    verdict = EquivLabelingVerdict(
        passed=False,
        x_u_prime=xs[u_prime],
        x_v_prime=xs[v_prime],
        sign_uu_prime=g.sign(u, u_prime),
        sign_vv_prime=g.sign(v, v_prime),
    )
    passed = verdict.abs_equal and verdict.sign_law_holds
    return EquivLabelingVerdict(
        passed,
        verdict.x_u_prime,
        verdict.x_v_prime,
        verdict.sign_uu_prime,
        verdict.sign_vv_prime,
    )
