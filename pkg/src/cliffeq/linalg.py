"""Exact linear algebra over the rationals (and any exact field).

Dense routines work on lists of rows.  Fraction-free Bareiss elimination
is used for nullspaces and determinants of rational matrices; a generic
Gauss-Jordan reduction handles other exact fields (Gaussian rationals).
Sparse vectors are plain ``dict[int, value]`` maps with no stored zeros.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import BasisError, NotInSpanError

SparseVec = Dict[int, Fraction]


def _integer_rows(rows: Sequence[Sequence]) -> Tuple[List[List[int]], List[int]]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the scale factor used for each.
    """
    out, scales = [], []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in fr])
        scales.append(den)
    return out, scales


def bareiss_echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Pivot choice is the first row (top to bottom) with a nonzero entry in
    the current column, columns scanned left to right.  Works in place on
    ``rows`` and returns ``(rows[:rank], pivot_columns)``.
    """
    m = len(rows)
    rank = 0
    prev = 1
    pivots: List[int] = []
    for col in range(ncols):
        if rank == m:
            break
        sel = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if sel is None:
            continue
        if sel != rank:
            rows[rank], rows[sel] = rows[sel], rows[rank]
        piv = rows[rank]
        p = piv[col]
        for i in range(rank + 1, m):
            row = rows[i]
            a = row[col]
            if a == 0 and p == prev:
                continue
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - a * piv[c]) // prev
            row[col] = 0
        prev = p
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[Fraction]]:
    """Basis of ``{x : A x = 0}`` for a rational matrix ``A``.

    One vector per free column, in increasing column order; the free
    variable is 1, the other free variables 0.  This is the reduced-echelon
    nullspace basis and therefore independent of the elimination path.
    """
    int_rows, _ = _integer_rows([r for r in rows if any(r)])
    echelon, pivots = bareiss_echelon(int_rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            acc = Fraction(0)
            for c in range(pc + 1, ncols):
                if row[c] and x[c]:
                    acc += row[c] * x[c]
            x[pc] = -acc / row[pc]
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    int_rows, _ = _integer_rows([r for r in rows if any(r)])
    return len(bareiss_echelon(int_rows, ncols)[1])


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    int_rows, scales = _integer_rows(matrix)
    rows = [list(r) for r in int_rows]
    sign = 1
    prev = 1
    for col in range(n):
        sel = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            rows[col], rows[sel] = rows[sel], rows[col]
            sign = -sign
        p = rows[col][col]
        for i in range(col + 1, n):
            for c in range(col + 1, n):
                rows[i][c] = (p * rows[i][c] - rows[i][col] * rows[col][c]) // prev
            rows[i][col] = 0
        prev = p
    return Fraction(sign * rows[n - 1][n - 1], math.prod(scales))


def row_reduce(rows: Sequence[Sequence], zero=Fraction(0)) -> Tuple[list, List[int]]:
    """Reduced row echelon form over any exact field.

    Entries only need ``+ - * /``, equality with ``zero`` and truthiness.
    Zero rows are dropped.  Returns ``(rref_rows, pivot_columns)``.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    out: list = []
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, len(work)) if work[i][col]), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = work[r][col]
        work[r] = [v / inv if v else zero for v in work[r]]
        piv = work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b if b else a for a, b in zip(work[i], piv)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    out = work[:r]
    return out, pivots


def _axpy(target: dict, coeff, source: Mapping) -> None:
    """target -= coeff * source, pruning zeros."""
    for k, v in source.items():
        nv = target.get(k, 0) - coeff * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class SpanSolver:
    """Express sparse vectors as combinations of fixed independent columns.

    Columns are reduced incrementally; each stored echelon vector has a
    pivot row (its smallest nonzero row after reduction) and records which
    combination of the original columns produced it.  Raises
    :class:`BasisError` if the columns are linearly dependent.
    """

    def __init__(self, columns: Sequence[Mapping[int, Fraction]]):
        self._echelon: List[Tuple[int, dict, dict]] = []
        self.size = len(columns)
        for idx, col in enumerate(columns):
            vec = dict(col)
            combo: dict = {idx: Fraction(1)}
            self._reduce(vec, combo)
            if not vec:
                raise BasisError(f"column {idx} is a combination of the preceding columns")
            p = min(vec)
            c = vec[p]
            vec = {k: v / c for k, v in vec.items()}
            combo = {k: v / c for k, v in combo.items()}
            self._echelon.append((p, vec, combo))

    def _reduce(self, vec: dict, combo: dict) -> None:
        for p, pv, pc in self._echelon:
            c = vec.get(p)
            if c:
                _axpy(vec, c, pv)
                _axpy(combo, c, pc)

    def solve(self, target: Mapping[int, Fraction]) -> List[Fraction]:
        """Coefficients a with target = sum a_i col_i, or NotInSpanError."""
        vec = dict(target)
        acc: dict = {}
        for p, pv, pc in self._echelon:
            c = vec.get(p)
            if c:
                _axpy(vec, c, pv)
                for k, v in pc.items():
                    nv = acc.get(k, 0) + c * v
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)
        if vec:
            raise NotInSpanError("vector is not in the span of the columns")
        return [Fraction(acc.get(i, 0)) for i in range(self.size)]

    def contains(self, target: Mapping[int, Fraction]) -> bool:
        try:
            self.solve(target)
        except NotInSpanError:
            return False
        return True


def sparse_dense(vec: Mapping[int, Fraction], dim: int) -> List[Fraction]:
    out = [Fraction(0)] * dim
    for k, v in vec.items():
        out[k] = Fraction(v)
    return out


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """Unique solution of a square rational system, or None if singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red, piv = row_reduce(aug)
    if piv != list(range(n)):
        return None
    return [row[n] for row in red]
