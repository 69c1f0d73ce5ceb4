"""Polynomial matrices: products, determinants, minors and reduced minors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .polyring import Polynomial, PolyRing, gcd


class PolyMatrix:
    """Dense ``l x m`` matrix of :class:`Polynomial` entries (immutable)."""

    __slots__ = ("ring", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]], ring: PolyRing | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ring is None:
            if not rows or not rows[0]:
                raise ValueError("ring is required for an empty matrix")
            ring = rows[0][0].ring
        width = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix")
            for p in r:
                if p.ring != ring:
                    raise ValueError("entries in different rings")
        self.ring = ring
        self.rows = rows

    @classmethod
    def zeros(cls, l: int, m: int, ring: PolyRing) -> "PolyMatrix":
        z = ring.zero()
        return cls([[z] * m for _ in range(l)], ring)

    @classmethod
    def identity(cls, n: int, ring: PolyRing) -> "PolyMatrix":
        z, o = ring.zero(), ring.one()
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], ring)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self.rows)), self.ring) if self.rows else self

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows], self.ring)

    def with_ring(self, ring: PolyRing) -> "PolyMatrix":
        return PolyMatrix([[p.with_ring(ring) for p in r] for r in self.rows], ring)

    def to_strings(self) -> list:
        return [[str(p) for p in r] for r in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()!r})"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    ring = a.ring
    cols = list(zip(*b.rows))
    out = []
    for row in a.rows:
        out_row = []
        for col in cols:
            acc = ring.zero()
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return PolyMatrix(out, ring)


def _det_rows(rows, ring, cols=None, memo=None) -> Polynomial:
    """Laplace expansion along rows, memoized on the remaining column set.

    ``cols`` selects the columns of ``rows`` to use; sharing ``memo`` between
    calls over the same rows reuses sub-determinants across column sets.
    """
    n = len(rows)
    if memo is None:
        memo = {}
    if cols is None:
        cols = tuple(range(len(rows[0]) if rows else 0))

    def rec(i, cols):
        if i == n:
            return ring.one()
        hit = memo.get((i, cols))
        if hit is not None:
            return hit
        acc = ring.zero()
        for k, j in enumerate(cols):
            a = rows[i][j]
            if not a:
                continue
            sub = rec(i + 1, cols[:k] + cols[k + 1:])
            if sub:
                term = a * sub
                acc = acc - term if k % 2 else acc + term
        memo[(i, cols)] = acc
        return acc

    return rec(0, tuple(cols))


def det(m: PolyMatrix) -> Polynomial:
    l, c = m.shape
    if l != c:
        raise ValueError(f"determinant of a non-square {l}x{c} matrix")
    if l == 0:
        return m.ring.one()
    return _det_rows(m.rows, m.ring)


def minors(m: PolyMatrix, i: int) -> list:
    """All ``i x i`` minors, row index sets outer, column index sets inner, both lexicographic."""
    l, c = m.shape
    if not 1 <= i <= min(l, c):
        raise ValueError(f"minor size {i} out of range for a {l}x{c} matrix")
    out = []
    for rs in combinations(range(l), i):
        sub = [m.rows[r] for r in rs]
        memo: dict = {}
        for cs in combinations(range(c), i):
            out.append(_det_rows(sub, m.ring, cs, memo))
    return out


def rank(m: PolyMatrix) -> int:
    """Rank over the fraction field: the largest size of a nonzero minor."""
    l, c = m.shape
    r = 0
    for i in range(1, min(l, c) + 1):
        if any(minors(m, i)):
            r = i
        else:
            break
    return r


def rank_bareiss(m: PolyMatrix) -> int:
    """Rank by fraction-free Gaussian elimination (cross-check for :func:`rank`)."""
    rows = [list(r) for r in m.rows]
    l, c = m.shape
    ring = m.ring
    prev = ring.one()
    r = 0
    for col in range(c):
        if r == l:
            break
        piv = next((i for i in range(r, l) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, l):
            for j in range(col + 1, c):
                rows[i][j] = (p * rows[i][j] - rows[i][col] * rows[r][j]).exquo(prev)
            rows[i][col] = ring.zero()
        prev = p
        r += 1
    return r


def d_i(m: PolyMatrix, i: int) -> Polynomial:
    """Monic gcd of all ``i x i`` minors."""
    ms = minors(m, i)
    if not any(ms):
        raise ValueError(f"all {i}x{i} minors vanish (i exceeds the rank)")
    return gcd(ms)


@dataclass(frozen=True)
class MinorReport:
    level: int
    minors: tuple
    d: Polynomial
    reduced: tuple


def reduced_minors(m: PolyMatrix, i: int) -> MinorReport:
    ms = minors(m, i)
    if not any(ms):
        raise ValueError(f"all {i}x{i} minors vanish (i exceeds the rank)")
    d = gcd(ms)
    return MinorReport(i, tuple(ms), d, tuple(a.exquo(d) for a in ms))


@dataclass(frozen=True)
class ColumnReducedMinors:
    r: int
    columns: tuple
    values: tuple


def full_column_rank_subsets(m: PolyMatrix, r: int) -> list:
    """All column index sets whose ``l x r`` submatrix has rank ``r``."""
    return [
        cs for cs in combinations(range(m.ncols), r)
        if any(minors(m.submatrix(range(m.nrows), cs), r))
    ]


def column_reduced_minors(m: PolyMatrix, r: int, columns: Sequence[int] | None = None) -> ColumnReducedMinors:
    """The ``r x r`` reduced minors of the first full-column-rank ``l x r`` submatrix.

    ``r == l`` is accepted and yields the single value 1.
    """
    l = m.nrows
    if r > l:
        raise ValueError(f"r = {r} exceeds the row count {l}")
    if columns is None:
        for cs in combinations(range(m.ncols), r):
            ms = minors(m.submatrix(range(l), cs), r)
            if any(ms):
                columns = cs
                break
        else:
            raise ValueError(f"no full-column-rank {l}x{r} submatrix")
    else:
        columns = tuple(columns)
        ms = minors(m.submatrix(range(l), columns), r)
        if not any(ms):
            raise ValueError(f"columns {columns} do not have rank {r}")
    d = gcd(ms)
    return ColumnReducedMinors(r, tuple(columns), tuple(a.exquo(d) for a in ms))
