"""so(r, s) generators acting on Cl(r, s) as derivations, and sparse operators.

The generator L_jk (j < k) acts on vectors by

    L_jk e_j = -eps_j e_k,   L_jk e_k = eps_k e_j,   L_jk e_l = 0 otherwise,

and on products through the Leibniz rule.  On a blade the result is zero
or a single signed blade.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .algebra import (
    Multivector,
    OrthogonalMap,
    Signature,
    blade_indices,
    blade_mul,
    check_blade,
)
from .errors import InvalidBladeError, SignatureMismatchError


@dataclass(frozen=True)
class LieGenerator:
    j: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.j, int) and isinstance(self.k, int)) or not 1 <= self.j < self.k:
            raise InvalidBladeError(f"need 1 <= j < k, got j={self.j}, k={self.k}")

    def check(self, sig: Signature) -> None:
        if self.k > sig.n:
            raise InvalidBladeError(f"L_{self.j}{self.k} needs n >= {self.k}, {sig} has n={sig.n}")

    def __str__(self):
        return f"L[{self.j},{self.k}]"


def generators(sig: Signature) -> List[LieGenerator]:
    return [LieGenerator(j, k) for j, k in combinations(range(1, sig.n + 1), 2)]


def _vector_image(sig: Signature, L: LieGenerator, i: int) -> Tuple[int, int]:
    """(coefficient, index) of L e_i; coefficient 0 means L e_i = 0."""
    if i == L.j:
        return -sig.eps(L.j), L.k
    if i == L.k:
        return sig.eps(L.k), L.j
    return 0, 0


def act_on_vector(sig: Signature, L: LieGenerator, i: int) -> Multivector:
    L.check(sig)
    if not 1 <= i <= sig.n:
        raise InvalidBladeError(f"index {i} out of range 1..{sig.n}")
    c, t = _vector_image(sig, L, i)
    if c == 0:
        return sig.zero()
    return Multivector.from_blade(sig, 1 << (t - 1), c)


def _blade_action(sig: Signature, L: LieGenerator, mask: int) -> Dict[int, int]:
    # Leibniz expansion over the factors e_{i_1} ... e_{i_m}
    idx = blade_indices(mask)
    out: Dict[int, int] = {}
    for pos, i in enumerate(idx):
        c, t = _vector_image(sig, L, i)
        if c == 0:
            continue
        sign, acc = c, 0
        for q, f in enumerate(idx):
            factor = 1 << ((t if q == pos else f) - 1)
            sg, acc = blade_mul(sig, acc, factor)
            sign *= sg
        out[acc] = out.get(acc, 0) + sign
    return {m: v for m, v in out.items() if v}


def act_on_blade(sig: Signature, L: LieGenerator, mask: int) -> Multivector:
    L.check(sig)
    check_blade(sig, mask)
    return Multivector(sig, _blade_action(sig, L, mask))


def act_on_multivector(sig: Signature, L: LieGenerator, x: Multivector) -> Multivector:
    if x.sig != sig:
        raise SignatureMismatchError(f"{sig} vs {x.sig}")
    L.check(sig)
    out: Dict[int, Fraction] = {}
    for mask, c in x.items():
        for m, v in _blade_action(sig, L, mask).items():
            out[m] = out.get(m, 0) + c * v
    return Multivector(sig, out)


class LinearOperator:
    """Sparse square matrix on the blade basis, stored column by column.

    ``cols[c]`` maps row -> nonzero Fraction; empty columns are omitted.
    Treat instances as immutable.
    """

    __slots__ = ("dim", "_cols")

    def __init__(self, dim: int, cols: Mapping[int, Mapping[int, Fraction]]):
        self.dim = dim
        clean: Dict[int, Dict[int, Fraction]] = {}
        for c, col in cols.items():
            if not 0 <= c < dim:
                raise ValueError(f"column {c} out of range for dim {dim}")
            entries = {}
            for r, v in col.items():
                if not 0 <= r < dim:
                    raise ValueError(f"row {r} out of range for dim {dim}")
                v = Fraction(v)
                if v:
                    entries[r] = v
            if entries:
                clean[c] = dict(sorted(entries.items()))
        self._cols = dict(sorted(clean.items()))

    @classmethod
    def identity(cls, dim: int) -> "LinearOperator":
        return cls(dim, {c: {c: 1} for c in range(dim)})

    def column(self, c: int) -> Mapping[int, Fraction]:
        return self._cols.get(c, {})

    def columns(self) -> Iterable[Tuple[int, Mapping[int, Fraction]]]:
        return self._cols.items()

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def apply(self, vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for c, v in vec.items():
            for r, a in self._cols.get(c, {}).items():
                out[r] = out.get(r, 0) + a * v
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return LinearOperator(self.dim, {c: self.apply(col) for c, col in other._cols.items()})

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, k) -> "LinearOperator":
        k = Fraction(k)
        return LinearOperator(self.dim, {c: {r: k * v for r, v in col.items()} for c, col in self._cols.items()})

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dim == other.dim and self._cols == other._cols

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._cols

    def to_dense(self) -> List[List[Fraction]]:
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for c, col in self._cols.items():
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "cols": {str(c): [[r, str(v)] for r, v in col.items()] for c, col in self._cols.items()},
        }

    @classmethod
    def from_json(cls, data) -> "LinearOperator":
        if isinstance(data, str):
            data = json.loads(data)
        cols = {int(c): {int(r): Fraction(v) for r, v in entries} for c, entries in data["cols"].items()}
        return cls(int(data["dim"]), cols)

    def __repr__(self):
        return f"LinearOperator(dim={self.dim}, nnz={self.nnz()})"


def action_matrix(sig: Signature, L: LieGenerator) -> LinearOperator:
    L.check(sig)
    return LinearOperator(sig.dim, {c: _blade_action(sig, L, c) for c in sig.blades()})


def left_mul_operator(x: Multivector) -> LinearOperator:
    """Column c is x * e_c."""
    sig = x.sig
    return LinearOperator(
        sig.dim, {c: (x * Multivector.from_blade(sig, c)).terms for c in sig.blades()}
    )


def right_mul_operator(x: Multivector) -> LinearOperator:
    """Column c is e_c * x."""
    sig = x.sig
    return LinearOperator(
        sig.dim, {c: (Multivector.from_blade(sig, c) * x).terms for c in sig.blades()}
    )


def generator_matrix(sig: Signature, L: LieGenerator) -> List[List[Fraction]]:
    """The n x n matrix of L_jk on R^n (column i is the image of e_i)."""
    L.check(sig)
    n = sig.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        c, t = _vector_image(sig, L, i)
        if c:
            m[t - 1][i - 1] = Fraction(c)
    return m


def check_so_membership(sig: Signature, M: Sequence[Sequence]) -> bool:
    """True iff q M is antisymmetric."""
    n = sig.n
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError(f"expected a {n}x{n} matrix")
    q = sig.metric()
    qm = [[q[a] * Fraction(M[a][b]) for b in range(n)] for a in range(n)]
    return all(qm[a][b] == -qm[b][a] for a in range(n) for b in range(n))


def _embed(n: int, block: Dict[Tuple[int, int], Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
    rows = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    for (a, b), v in block.items():
        rows[a][b] = Fraction(v)
    return tuple(tuple(r) for r in rows)


def _plane_map(sig: Signature, a: int, b: int, c, s_, t, u) -> OrthogonalMap:
    """Identity except for the 2x2 block ((c, s_), (t, u)) on axes a < b (0-based)."""
    n = sig.n
    return OrthogonalMap(sig, _embed(n, {(a, a): c, (a, b): s_, (b, a): t, (b, b): u}))


def sample_so_elements(sig: Signature) -> List[OrthogonalMap]:
    """Exact determinant-one elements of O(r, s) for group-level testing.

    Pythagorean rotations on like-sign planes, rational boosts on mixed
    planes, quarter turns and double sign flips, 3-cycles on like-sign
    triples, plus one composite of all rotations and boosts.
    """
    n = sig.n
    if n < 2:
        return []
    q = sig.metric()
    f = Fraction
    out: List[OrthogonalMap] = []
    for a, b in combinations(range(n), 2):
        if q[a] == q[b]:
            out.append(_plane_map(sig, a, b, f(3, 5), f(-4, 5), f(4, 5), f(3, 5)))
            out.append(_plane_map(sig, a, b, 0, -1, 1, 0))
        else:
            out.append(_plane_map(sig, a, b, f(5, 3), f(4, 3), f(4, 3), f(5, 3)))
        out.append(_plane_map(sig, a, b, -1, 0, 0, -1))
    for a, b, c in combinations(range(n), 3):
        if q[a] == q[b] == q[c]:
            # e_a -> e_b -> e_c -> e_a
            out.append(OrthogonalMap(sig, _embed(n, {(a, a): 0, (b, b): 0, (c, c): 0, (b, a): 1, (c, b): 1, (a, c): 1})))
    composite = OrthogonalMap.identity(sig)
    for a in range(n - 1):
        b = a + 1
        if q[a] == q[b]:
            g = _plane_map(sig, a, b, f(3, 5), f(-4, 5), f(4, 5), f(3, 5))
        else:
            g = _plane_map(sig, a, b, f(5, 3), f(4, 3), f(4, 3), f(5, 3))
        composite = composite.compose(g)
    out.append(composite)
    return out


def sample_improper_elements(sig: Signature) -> List[OrthogonalMap]:
    """Exact determinant -1 elements (single-axis reflections and composites)."""
    n = sig.n
    if n < 1:
        return []
    out = []
    for a in range(n):
        out.append(OrthogonalMap(sig, _embed(n, {(a, a): -1})))
    reflect = out[0]
    for g in sample_so_elements(sig)[:4]:
        out.append(g.compose(reflect))
    return out
