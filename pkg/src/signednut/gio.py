"""Bit-exact serialization: graph6, signed records and JSON reports.

A signed record is "<graph6> <hexmask>": the standard graph6 string of the
underlying graph plus a hexadecimal sign mask with one bit per edge in
lexicographic (min, max) edge order, most significant bit first, bit 1
meaning negative, zero-padded to whole hex digits.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

from .graphs import GraphError, SignedGraph

if TYPE_CHECKING:
    from .classify import NutReport
    from .search import SearchOutcome

__all__ = [
    "ParseError",
    "parse_graph6",
    "emit_graph6",
    "parse_signed",
    "emit_signed",
    "emit_report",
]

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Malformed graph6 or signed record input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise ParseError("8-byte graph6 order form not supported", 0)
    if len(data) < 4:
        raise ParseError("truncated extended graph6 order", len(data))
    n = 0
    for i in (1, 2, 3):
        b = data[i]
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", i)
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(line: str) -> SignedGraph:
    """Decode one graph6 line into an all-positive signed graph."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError("non-ASCII byte in graph6 input") from exc
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", i)
    n, start = _decode_order(data)
    if n < 1:
        raise ParseError("graphs on zero vertices are unsupported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - start != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - start}",
            start,
        )
    bits = []
    for i in range(start, len(data)):
        v = data[i] - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise ParseError("nonzero padding bits", start + k // 6)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return SignedGraph.from_edges(n, edges)


def emit_graph6(g: SignedGraph) -> str:
    """Encode the underlying graph of g as a graph6 string."""
    n = g.order
    if n < 1:
        raise GraphError("graphs on zero vertices are unsupported")
    if n <= 62:
        header = bytes([n + 63])
    elif n <= 258047:
        header = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise GraphError("order too large for the supported graph6 forms")
    present = set(g.edges)
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + sum(bits[i + k] << (5 - k) for k in range(6))
        for i in range(0, len(bits), 6)
    )
    return (header + body).decode("ascii")


def _mask_digits(m: int) -> int:
    return max(1, (m + 3) // 4)


def emit_signed(g: SignedGraph) -> str:
    """Encode a signed graph as "<graph6> <hexmask>"."""
    m = len(g.edges)
    value = 0
    for i, s in enumerate(g.signs):
        if s == -1:
            value |= 1 << (4 * _mask_digits(m) - 1 - i)
    mask = format(value, "0{}X".format(_mask_digits(m)))
    return f"{emit_graph6(g)} {mask}"


def parse_signed(line: str) -> SignedGraph:
    """Decode a signed record; a bare graph6 string is read as an
    all-positive signing."""
    parts = line.strip().split()
    if not parts:
        raise ParseError("empty signed record")
    if len(parts) > 2:
        raise ParseError("signed record must be 'graph6 hexmask'")
    g = parse_graph6(parts[0])
    if len(parts) == 1:
        return g
    mask = parts[1]
    m = len(g.edges)
    if len(mask) < _mask_digits(m):
        raise ParseError(
            f"sign mask too short: {len(mask)} hex digits for {m} edges"
        )
    try:
        value = int(mask, 16)
    except ValueError as exc:
        raise ParseError(f"invalid hex mask {mask!r}") from exc
    total_bits = 4 * len(mask)
    negative = []
    for i in range(total_bits):
        if (value >> (total_bits - 1 - i)) & 1:
            if i >= m:
                raise ParseError(
                    f"stray sign bit {i} beyond the {m} edges of the graph"
                )
            negative.append(g.edges[i])
    return SignedGraph.from_edges(g.order, g.edges, negative)


def report_to_dict(r: "NutReport", record: str | None = None) -> dict:
    out: dict = {"schema": SCHEMA_VERSION, "kind": "nut-report"}
    if record is not None:
        out["record"] = record
    out.update(
        order=r.order,
        degree_profile=list(r.degree_profile),
        nullity=r.nullity,
        is_singular=r.is_singular,
        is_core=r.is_core,
        is_nut=r.is_nut,
    )
    if r.kernel_vector is not None:
        out["kernel_vector"] = list(r.kernel_vector)
    out["signed_class"] = r.signed_class
    return out


def outcome_to_dict(o: "SearchOutcome") -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "search-outcome",
        "parameters": {
            "n": o.parameters[0] if o.parameters else None,
            "rho": o.parameters[1] if o.parameters else None,
        },
        "graphs_scanned": o.graphs_scanned,
        "signings_tested": o.signings_tested,
        "verdict": o.verdict,
        "exhaustive": o.exhaustive,
        "witnesses": [
            {
                "record": emit_signed(g),
                "report": report_to_dict(rep),
            }
            for g, rep in o.witnesses
        ],
        "errors": list(o.errors),
    }


def emit_report(r) -> str:
    """Serialize a NutReport or SearchOutcome as JSON with stable key
    order; kernel vectors stay exact integer arrays."""
    from .classify import NutReport

    if isinstance(r, NutReport):
        payload = report_to_dict(r)
    else:
        payload = outcome_to_dict(r)
    return json.dumps(payload)
