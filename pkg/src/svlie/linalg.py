"""Sparse exact linear algebra over the rationals.

Rows are dicts mapping integer column labels to integer coefficients
(fraction rows are cleared of denominators first).  Elimination is
fraction-free: a row combination multiplies through by the pivot leading
coefficient and the result is gcd-normalized, so no floating error and no
rational blowup.  The pivot of a stored row is its lowest column label;
rows are inserted in the caller's deterministic order, which makes ranks,
kernels and certificates reproducible.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional

__all__ = ["RowEchelon", "int_row", "rank_of"]

_NORMALIZE_EVERY = 8


def int_row(row: dict) -> dict[int, int]:
    """Clear denominators; accepts int or Fraction values."""
    denom = 1
    for v in row.values():
        if isinstance(v, Fraction):
            denom = lcm(denom, v.denominator)
    out = {}
    for k, v in row.items():
        iv = int(v * denom) if denom != 1 or isinstance(v, Fraction) else v
        if iv:
            out[k] = iv
    return out


def _normalize(row: dict[int, int], lead: int) -> list[tuple[int, int]]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[lead] < 0:
        g = -g
    items = sorted(row.items())
    if g not in (0, 1):
        items = [(k, v // g) for k, v in items]
    return items


class RowEchelon:
    """Incremental row echelon form with deterministic reduction.

    Stored pivot rows are immutable sorted (column, coeff) lists keyed by
    their pivot column; copies therefore share row storage.
    """

    def __init__(self) -> None:
        self._pivots: dict[int, list[tuple[int, int]]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def copy(self) -> "RowEchelon":
        dup = RowEchelon()
        dup._pivots = dict(self._pivots)
        return dup

    def insert(self, row: dict[int, int]) -> Optional[int]:
        """Reduce a row against the stored pivots and keep the remainder.

        Returns the new pivot column, or None when the row is dependent.
        The input dict is consumed.
        """
        row = dict(row)
        heap = list(row)
        heapq.heapify(heap)
        steps = 0
        while heap:
            col = heapq.heappop(heap)
            val = row.get(col, 0)
            if not val:
                row.pop(col, None)
                continue
            pivot = self._pivots.get(col)
            if pivot is None:
                self._pivots[col] = _normalize(row, col)
                return col
            # row := lead(pivot) * row - val * pivot; fill columns are all
            # greater than col because pivot rows are sorted.
            lead = pivot[0][1]
            if lead != 1:
                for k in row:
                    row[k] *= lead
            del row[col]
            for k, pv in pivot[1:]:
                cur = row.get(k)
                if cur is None:
                    nv = -val * pv
                    if nv:
                        row[k] = nv
                        heapq.heappush(heap, k)
                else:
                    nv = cur - val * pv
                    if nv:
                        row[k] = nv
                    else:
                        del row[k]
            steps += 1
            if steps % _NORMALIZE_EVERY == 0 and row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    for k in row:
                        row[k] //= g
        return None

    def kernel_basis(self, n_cols: int) -> list[dict[int, Fraction]]:
        """One exact kernel vector per free column, unit at that column.

        Intended for small systems (certificates, tests); cost grows with
        the number of pivot rows times their fill.
        """
        rows = sorted(self._pivots.items(), reverse=True)
        free = [c for c in range(n_cols) if c not in self._pivots]
        basis = []
        for f in free:
            vec: dict[int, Fraction] = {f: Fraction(1)}
            for piv, items in rows:
                if piv > f:
                    continue
                s = Fraction(0)
                for col, coeff in items[1:]:
                    xv = vec.get(col)
                    if xv is not None:
                        s += coeff * xv
                if s:
                    vec[piv] = -s / items[0][1]
            basis.append(vec)
        return basis

    def residual_is_zero(self, vec: dict[int, Fraction], rows: Iterable[dict[int, int]]) -> bool:
        """Exact check that every given row annihilates the vector."""
        for row in rows:
            s = Fraction(0)
            for col, coeff in row.items():
                xv = vec.get(col)
                if xv is not None:
                    s += coeff * xv
            if s:
                return False
        return True


def rank_of(rows: Iterable[dict]) -> int:
    ech = RowEchelon()
    for row in rows:
        ech.insert(int_row(row))
    return ech.rank
