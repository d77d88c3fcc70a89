"""Semantic predicates over signed graphs: singular, core, nut.

A signed graph is singular when its adjacency matrix has a nontrivial
kernel, a core graph when the union of kernel-vector supports covers every
vertex, and a nut graph when the nullity is one and the kernel eigenvector
is nowhere zero.  All decisions are made with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphError, SignedGraph, SwitchingSet, is_traditional
from . import linalg

__all__ = ["NutReport", "classify", "positive_representative", "is_unsigned_nut"]

ALL_POSITIVE_INPUT = "all-positive-input"
TRADITIONAL = "traditional"
PROPER = "proper"


@dataclass(frozen=True)
class NutReport:
    """Classification verdict for one signed graph."""

    order: int
    degree_profile: tuple[int, ...]
    nullity: int
    is_singular: bool
    is_core: bool
    is_nut: bool
    kernel_vector: tuple[int, ...] | None
    signed_class: str | None

    def __post_init__(self):
        if self.is_nut and not self.is_core:
            raise ValueError("nut implies core")
        if self.is_core and not self.is_singular:
            raise ValueError("core implies singular")


def classify(g: SignedGraph) -> NutReport:
    """Full exact classification of a signed graph.

    The kernel vector is present exactly when the nullity is 1, scaled to
    coprime integers with positive leading entry.  ``signed_class`` is
    'all-positive-input' for an unsigned input, else traditional/proper;
    it is None for disconnected graphs, where balance is undefined.
    """
    if g.order < 2:
        raise GraphError("classification requires at least 2 vertices")
    basis = linalg.kernel_basis(g.adjacency_matrix())
    nullity = basis.nullity
    is_singular = nullity > 0
    support = set()
    for vec in basis.vectors:
        support.update(i for i, x in enumerate(vec) if x != 0)
    is_core = is_singular and len(support) == g.order
    kernel_vector = (
        linalg.canonical_eigenvector(basis) if nullity == 1 else None
    )
    is_nut = (
        nullity == 1
        and all(x != 0 for x in kernel_vector)
        and g.is_connected()
    )
    if all(s == 1 for s in g.signs):
        signed_class = ALL_POSITIVE_INPUT
    elif g.is_connected():
        signed_class = TRADITIONAL if is_traditional(g) else PROPER
    else:
        signed_class = None
    return NutReport(
        order=g.order,
        degree_profile=tuple(sorted(g.degrees())),
        nullity=nullity,
        is_singular=is_singular,
        is_core=is_core,
        is_nut=is_nut,
        kernel_vector=kernel_vector,
        signed_class=signed_class,
    )


def positive_representative(
    g: SignedGraph,
) -> tuple[SignedGraph, SwitchingSet]:
    """The unique switching-equivalent signed nut graph whose kernel
    eigenvector is entrywise positive.

    Switches at the set of vertices where the eigenvector is negative; the
    new eigenvector is the entrywise absolute value of the old one.
    """
    report = classify(g)
    if not report.is_nut:
        raise GraphError("positive representative is defined for nut graphs only")
    x = report.kernel_vector
    u = SwitchingSet(
        g.order, frozenset(v for v in range(g.order) if x[v] < 0)
    ).canonical()
    return g.switch(u), u


def is_unsigned_nut(g: SignedGraph) -> bool:
    """Whether the underlying (all-positive) graph is a nut graph."""
    return classify(g.underlying()).is_nut
