"""Exact integer/rational linear algebra for adjacency kernels.

Rank, nullity and kernel bases are computed over the rationals with no
floating point anywhere: fraction-free (Bareiss) elimination on integer
matrices for rank, and rational reduced row echelon form for kernel bases.
Nullity-1 versus nullity-2 near-degeneracies make floating classification
unsound, so everything downstream of these routines is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = [
    "RationalMatrix",
    "KernelBasis",
    "rank_nullity",
    "kernel_basis",
    "fullify_basis",
    "canonical_eigenvector",
    "normalize_integer_vector",
]

#: Word-sized prime for the modular determinant pre-filter.  A nonzero
#: determinant mod p certifies a nonsingular matrix; a zero one proves
#: nothing and callers must fall back to the exact path.
_FILTER_PRIME = (1 << 31) - 1


class LinalgError(ValueError):
    """Raised when a linear algebra precondition is violated."""


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "RationalMatrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise LinalgError("ragged rows in matrix")
        return cls(data)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class KernelBasis:
    """Exact basis of a matrix kernel.

    ``vectors`` are linearly independent, each satisfies A·x = 0 exactly,
    and ``nullity`` equals their number (= cols − rank of A).
    """

    vectors: tuple[tuple[Fraction, ...], ...]
    nullity: int
    is_full: bool
    is_integer: bool

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence]) -> "KernelBasis":
        vecs = tuple(tuple(Fraction(x) for x in v) for v in vectors)
        full = all(all(x != 0 for x in v) for v in vecs) if vecs else True
        integer = all(x.denominator == 1 for v in vecs for x in v)
        return cls(vecs, len(vecs), full, integer)


def _coerce_int_rows(m) -> list[list[int]]:
    """Integer rows with the same rank/kernel structure as the input.

    Rational rows are scaled by the lcm of their denominators; row scaling
    changes neither rank nor kernel.
    """
    rows = m.entries if isinstance(m, RationalMatrix) else m
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * scale) for x in fr])
    return out


def _bareiss_echelon(a: list[list[int]]) -> tuple[int, list[int]]:
    """In-place fraction-free elimination.

    Returns (rank, pivot column list).  Pivot choice: largest absolute
    value in the column, lowest row index on ties.
    """
    nr = len(a)
    nc = len(a[0]) if nr else 0
    prev = 1
    r = 0
    piv_cols: list[int] = []
    for c in range(nc):
        if r == nr:
            break
        best = 0
        piv = -1
        for i in range(r, nr):
            v = a[i][c]
            if v and abs(v) > best:
                best = abs(v)
                piv = i
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        ar = a[r]
        arc = ar[c]
        for i in range(r + 1, nr):
            ai = a[i]
            aic = ai[c]
            if aic == 0 and arc == prev:
                # update would multiply by arc/prev = 1; skipping keeps the
                # exact-division invariant intact
                continue
            for j in range(c + 1, nc):
                ai[j] = (arc * ai[j] - aic * ar[j]) // prev
            ai[c] = 0
        prev = arc
        piv_cols.append(c)
        r += 1
    return r, piv_cols


def rank_nullity(m) -> tuple[int, int]:
    """Exact rank over the rationals and nullity = cols − rank."""
    rows = _coerce_int_rows(m)
    nc = len(rows[0]) if rows else 0
    rank, _ = _bareiss_echelon(rows)
    return rank, nc - rank


def det_filter_nonsingular(rows: Sequence[Sequence[int]]) -> bool:
    """True if the square integer matrix is certified nonsingular by a
    determinant computed modulo a fixed prime.

    One-sided accelerator: a zero result proves nothing (the caller must
    run the exact path), a nonzero result is a sound nonsingularity proof
    because rank mod p never exceeds the rational rank.
    """
    p = _FILTER_PRIME
    a = [[x % p for x in row] for row in rows]
    n = len(a)
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            return False
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
        ac = a[c]
        acc = ac[c]
        for i in range(c + 1, n):
            ai = a[i]
            aic = ai[c]
            if aic:
                # cross-multiplication scales rows by nonzero factors mod p,
                # which cannot change singularity
                for j in range(c + 1, n):
                    ai[j] = (acc * ai[j] - aic * ac[j]) % p
    return True


def _rref(rows: list[list[Fraction]]) -> tuple[int, list[int]]:
    """In-place reduced row echelon form over the rationals."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    r = 0
    piv_cols = []
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), -1)
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    return r, piv_cols


def kernel_basis(m) -> KernelBasis:
    """Exact kernel basis, echelon-normalized for determinism.

    The RREF of a matrix is unique, so the resulting basis (one vector per
    free column, unit entry at the free column) does not depend on any
    pivoting strategy.
    """
    rows = (
        [list(r) for r in m.entries]
        if isinstance(m, RationalMatrix)
        else [[Fraction(x) for x in row] for row in m]
    )
    nc = len(rows[0]) if rows else 0
    rank, piv_cols = _rref(rows)
    free_cols = [c for c in range(nc) if c not in piv_cols]
    vectors = []
    for f in free_cols:
        x = [Fraction(0)] * nc
        x[f] = Fraction(1)
        for i, p in enumerate(piv_cols):
            x[p] = -rows[i][f]
        vectors.append(tuple(x))
    basis = KernelBasis.from_vectors(vectors)
    _verify_in_kernel(m, basis.vectors)
    return basis


def _verify_in_kernel(m, vectors) -> None:
    rows = m.entries if isinstance(m, RationalMatrix) else m
    for x in vectors:
        for row in rows:
            if sum(Fraction(a) * b for a, b in zip(row, x)) != 0:
                raise LinalgError("kernel verification failed")


def normalize_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry
    positive."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    scale = lcm(*(x.denominator for x in fr))
    ints = [int(x * scale) for x in fr]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _integerize(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a vector by a positive rational to coprime integers."""
    fr = [Fraction(x) for x in v]
    scale = lcm(*(x.denominator for x in fr))
    ints = [int(x * scale) for x in fr]
    nz = [abs(x) for x in ints if x]
    if nz:
        g = gcd(*nz)
        ints = [x // g for x in ints]
    return tuple(ints)


def fullify_basis(b: KernelBasis) -> KernelBasis:
    """Rebuild a kernel basis so that every vector is nowhere-zero.

    Requires the span to have full support ("core" kernel).  Repeatedly
    replaces the first vector with a zero at the lowest such coordinate by
    itself plus an integer multiple of the first vector nonzero there; the
    multiplier is the smallest integer exceeding every ratio |x_l(i)|/|x_k(i)|,
    so no new zeros appear and the total zero count strictly drops.
    """
    if b.nullity == 0:
        return b
    vecs = [list(_integerize(v)) for v in b.vectors]
    n = len(vecs[0])
    for i in range(n):
        if all(v[i] == 0 for v in vecs):
            raise LinalgError("not a core kernel: support misses coordinate %d" % i)
    while True:
        iota = next(
            (i for i in range(n) if any(v[i] == 0 for v in vecs)), None
        )
        if iota is None:
            break
        ell = next(j for j, v in enumerate(vecs) if v[iota] == 0)
        k = next(j for j, v in enumerate(vecs) if v[iota] != 0)
        xl, xk = vecs[ell], vecs[k]
        ratios = [
            abs(xl[i]) // abs(xk[i])
            for i in range(n)
            if i != iota and xk[i] != 0
        ]
        alpha = (max(ratios) if ratios else 0) + 1
        vecs[ell] = [a + alpha * c for a, c in zip(xl, xk)]
    return KernelBasis.from_vectors(vecs)


def canonical_eigenvector(b: KernelBasis) -> tuple[int, ...]:
    """The nullity-1 basis vector as coprime integers with positive lead."""
    if b.nullity != 1:
        raise LinalgError("canonical eigenvector requires nullity 1, got %d" % b.nullity)
    return normalize_integer_vector(b.vectors[0])


def nullity_and_unit_kernel(rows: Sequence[Sequence[int]]):
    """Fast classification primitive for integer matrices.

    Returns (nullity, vector) where vector is the canonical integer kernel
    eigenvector when the nullity is exactly 1 and None otherwise.  The
    elimination is fraction-free; rationals appear only in the final
    back-substitution of the single free column.
    """
    a = [list(r) for r in rows]
    nc = len(a[0]) if a else 0
    rank, piv_cols = _bareiss_echelon(a)
    nullity = nc - rank
    if nullity != 1:
        return nullity, None
    free = next(c for c in range(nc) if c not in piv_cols)
    x = [Fraction(0)] * nc
    x[free] = Fraction(1)
    for i in range(rank - 1, -1, -1):
        p = piv_cols[i]
        s = sum(a[i][c] * x[c] for c in range(p + 1, nc) if x[c])
        x[p] = Fraction(-s, 1) / a[i][p]
    return 1, normalize_integer_vector(x)
