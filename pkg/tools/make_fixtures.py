#!/usr/bin/env python3
"""Build the bundled connected regular-graph catalogues.

Runs the exhaustive generator for each (rho, n) cell, keeps the connected
graphs, verifies the census count against the published values, and writes
fixtures/reg/<rho>/<n>.g6 sorted by graph6 string.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from genreg import edges_of, generate_regular, is_connected  # noqa: E402
from signednut import SignedGraph, emit_graph6  # noqa: E402

# connected census counts; see e.g. the House of Graphs / OEIS A002851,
# A006820, A006821, A006822
EXPECTED = {
    (3, 8): 5,
    (3, 10): 19,
    (3, 12): 85,
    (3, 14): 509,
    (4, 5): 1,
    (4, 6): 1,
    (4, 7): 2,
    (4, 8): 6,
    (5, 8): 3,
    (5, 10): 60,
    (6, 8): 1,
}


def build_cell(rho: int, n: int, out_dir: str) -> None:
    lines = []
    for adj in generate_regular(n, rho):
        if not is_connected(adj):
            continue
        g = SignedGraph.from_edges(n, edges_of(adj))
        lines.append(emit_graph6(g))
    lines.sort()
    expected = EXPECTED[(rho, n)]
    if len(lines) != expected:
        raise SystemExit(
            f"census mismatch for rho={rho}, n={n}: got {len(lines)}, "
            f"expected {expected}"
        )
    path = os.path.join(out_dir, "reg", str(rho), f"{n}.g6")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {path}: {len(lines)} graphs")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    cells = [tuple(map(int, c.split(","))) for c in sys.argv[2:]] or sorted(EXPECTED)
    for rho, n in cells:
        build_cell(rho, n, out)
