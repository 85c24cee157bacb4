"""Exact linear algebra over Q: row echelon forms and nullspaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .poly import Scalar, scaled_ints


@dataclass(frozen=True)
class RatMatrix:
    """Row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> RatMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: list[Fraction] = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
            entries.extend(Fraction(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def iter_rows(self):
        for i in range(self.rows):
            yield self.row(i)

    def __matmul__(self, vec: Sequence[Scalar]) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, vec)), Fraction(0)) for r in self.iter_rows()]


def _bitsize(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


class RowEchelon:
    """Reduced row echelon form maintained one row at a time.

    Useful for tall systems: once the rank reaches the column count the
    nullspace is known to be trivial and the remaining rows can be skipped.
    The pivot in each new row is its entry of smallest bit size, which
    keeps the stored rows small; the result never depends on this choice.
    """

    def __init__(self, ncols: int, pivot_limit: int | None = None):
        self.ncols = ncols
        # pivots are only taken from the first ``pivot_limit`` columns
        self.pivot_limit = ncols if pivot_limit is None else pivot_limit
        self._rows: list[tuple[int, list[Fraction]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def full(self) -> bool:
        return len(self._rows) == self.pivot_limit

    @property
    def pivots(self) -> list[int]:
        return [p for p, _ in self._rows]

    def add(self, row: Iterable[Scalar]) -> bool:
        """Insert a row; return True when it increased the rank."""
        r = [x if isinstance(x, Fraction) else Fraction(x) for x in row]
        if len(r) != self.ncols:
            raise ValueError("row length mismatch")
        for p, prow in self._rows:
            c = r[p]
            if c:
                for j, x in enumerate(prow):
                    if x:
                        r[j] -= c * x
        best = None
        for j in range(self.pivot_limit):
            x = r[j]
            if x and (best is None or _bitsize(x) < _bitsize(r[best])):
                best = j
        if best is None:
            return False
        inv = 1 / r[best]
        r = [x * inv for x in r]
        for _, prow in self._rows:
            c = prow[best]
            if c:
                for j, x in enumerate(r):
                    if x:
                        prow[j] -= c * x
        self._rows.append((best, r))
        return True

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel, one vector per free column, integer-primitive."""
        pivot_cols = {p for p, _ in self._rows}
        basis = []
        for free in range(self.ncols):
            if free in pivot_cols:
                continue
            v = [Fraction(0)] * self.ncols
            v[free] = Fraction(1)
            for p, prow in self._rows:
                v[p] = -prow[free]
            basis.append(primitive_vector(v))
        return basis

    def reduce(self, row: Iterable[Scalar]) -> list[Fraction]:
        """Remainder of ``row`` after elimination against the stored rows."""
        r = [Fraction(x) for x in row]
        for p, prow in self._rows:
            c = r[p]
            if c:
                for j, x in enumerate(prow):
                    if x:
                        r[j] -= c * x
        return r

    def coordinates(self, row: Iterable[Scalar]) -> list[Fraction] | None:
        """Coefficients ``c`` with ``row == sum(c[i] * stored_row[i])``, or None if outside the span."""
        r = [Fraction(x) for x in row]
        coords = []
        for p, prow in self._rows:
            c = r[p]
            coords.append(c)
            if c:
                for j, x in enumerate(prow):
                    if x:
                        r[j] -= c * x
        if any(r):
            return None
        return coords

    def rows(self) -> list[tuple[int, list[Fraction]]]:
        return [(p, list(r)) for p, r in self._rows]


def primitive_vector(v: Sequence[Fraction]) -> list[Fraction]:
    """Scale to coprime integers with the first nonzero entry positive."""
    ints, _ = scaled_ints(list(v))
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return [Fraction(0)] * len(v)
    sign = 1
    for x in ints:
        if x:
            sign = 1 if x > 0 else -1
            break
    return [Fraction(sign * x // g) for x in ints]


def nullspace(m, ncols: int | None = None, stop_when_full: bool = True) -> list[list[Fraction]]:
    """Exact basis of ``{x : M x = 0}`` for a RatMatrix or an iterable of rows.

    ``ncols`` is required when ``m`` is a (possibly lazy) iterable of rows
    that may be empty. Rows are consumed one at a time; with
    ``stop_when_full`` the scan ends as soon as the rank is full.
    """
    if isinstance(m, RatMatrix):
        rows, cols = list(m.iter_rows()), m.cols
    else:
        rows, cols = m, ncols
        if cols is None:
            rows = list(rows)
            cols = len(rows[0]) if rows else 0
    ech = RowEchelon(cols)
    for r in rows:
        ech.add(r)
        if stop_when_full and ech.full:
            return []
    return ech.nullspace()


def rank(m, ncols: int | None = None) -> int:
    if isinstance(m, RatMatrix):
        rows, cols = list(m.iter_rows()), m.cols
    else:
        rows = list(m)
        cols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    ech = RowEchelon(cols)
    for r in rows:
        ech.add(r)
        if ech.full:
            break
    return ech.rank


def rref_vectors(vectors: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Canonical basis of a span: reduced echelon rows ordered by leading index.

    Unlike :class:`RowEchelon`, the pivot of each row is its leftmost
    nonzero entry, so equal spans give identical output.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return []
    ncols = len(rows[0])
    col = 0
    r0 = 0
    while r0 < len(rows) and col < ncols:
        pivot_row = next((i for i in range(r0, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        rows[r0], rows[pivot_row] = rows[pivot_row], rows[r0]
        inv = 1 / rows[r0][col]
        rows[r0] = [x * inv for x in rows[r0]]
        for i in range(len(rows)):
            if i != r0 and rows[i][col]:
                c = rows[i][col]
                pr = rows[r0]
                rows[i] = [a - c * b for a, b in zip(rows[i], pr)]
        r0 += 1
        col += 1
    return rows[:r0]
