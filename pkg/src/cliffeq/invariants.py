"""SO(r, s)-invariant subspace, equivariant complex structures and idempotents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import linalg
from .algebra import Multivector, Signature, apply_orthogonal, volume_element
from .errors import DimensionCapError, InternalInconsistency
from .lie import act_on_multivector, action_matrix, generators, sample_so_elements

BRUTE_FORCE_MAX_N = 6


@dataclass(frozen=True)
class InvariantBasis:
    sig: Signature
    vectors: Tuple[Multivector, ...]

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def invariant_subspace(sig: Signature) -> InvariantBasis:
    """Joint kernel of all L_jk, by set logic on blades.

    L_jk kills e_I exactly when I contains both or neither of j, k, and
    otherwise sends distinct blades to distinct blades.  So the kernel is
    spanned by the blades that meet every pair {j, k} in 0 or 2 points.
    """
    n = sig.n
    keep = []
    for mask in sig.blades():
        ok = True
        for j in range(n):
            for k in range(j + 1, n):
                if ((mask >> j) & 1) != ((mask >> k) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.append(mask)
    return InvariantBasis(sig, tuple(Multivector.from_blade(sig, m) for m in keep))


def constraint_rows(sig: Signature) -> List[List[Fraction]]:
    """All action matrices stacked into one dense matrix (zero rows dropped)."""
    rows = []
    for L in generators(sig):
        dense = action_matrix(sig, L).to_dense()
        rows.extend(r for r in dense if any(r))
    return rows


def brute_force_invariants(sig: Signature) -> InvariantBasis:
    """Dense nullspace of the stacked action matrices (independent oracle)."""
    if sig.n > BRUTE_FORCE_MAX_N:
        raise DimensionCapError(f"brute-force oracle is limited to n <= {BRUTE_FORCE_MAX_N}")
    basis = linalg.nullspace(constraint_rows(sig), sig.dim)
    return InvariantBasis(
        sig, tuple(Multivector(sig, {i: v for i, v in enumerate(vec)}) for vec in basis)
    )


def is_equivariant(x: Multivector, group_check: bool = True) -> bool:
    """True iff every L_jk annihilates x.

    With ``group_check`` the answer is cross-checked against the sampled
    exact SO(r, s) elements; disagreement is an internal error.
    """
    sig = x.sig
    infinitesimal = all(act_on_multivector(sig, L, x).is_zero() for L in generators(sig))
    if group_check:
        fixed = all(apply_orthogonal(g, x) == x for g in sample_so_elements(sig))
        if infinitesimal and not fixed:
            raise InternalInconsistency(f"{x} is killed by so({sig.r},{sig.s}) but moved by a group element")
        return infinitesimal and fixed
    return infinitesimal


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of a rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _solve_plane(unit: Multivector, u: Optional[Multivector], alpha: int, beta: int) -> List[Multivector]:
    """All x = c + d*u with x*x = alpha*x + beta*1.

    ``u`` must square to a scalar (computed here, not assumed); ``u=None``
    restricts to x = c.  Writing u*u = lam, the equation splits into
    c^2 + lam d^2 = alpha c + beta and 2cd = alpha d.
    """
    sols: List[Tuple[Fraction, Fraction]] = []
    # d = 0: c^2 - alpha c - beta = 0
    disc = rational_sqrt(Fraction(alpha * alpha + 4 * beta))
    if disc is not None:
        for c in {(alpha + disc) / 2, (alpha - disc) / 2}:
            sols.append((Fraction(c), Fraction(0)))
    if u is not None:
        sq = u * u
        if not sq.is_scalar():
            raise InternalInconsistency(f"{u} does not square to a scalar")
        lam = sq.coeff(0)
        # d != 0 forces c = alpha / 2; then lam d^2 = alpha^2/4 + beta
        c = Fraction(alpha, 2)
        rhs = c * c + beta
        if lam != 0:
            d = rational_sqrt(rhs / lam)
            if d:
                sols.extend([(c, d), (c, -d)])
    sols = sorted(set(sols))
    out = [unit.scale(c) + (u.scale(d) if d else unit.scale(0)) for c, d in sols]
    target_check = [x * x == x.scale(alpha) + beta for x in out]
    if not all(target_check):
        raise InternalInconsistency("quadratic solve produced a non-solution")
    return out


def _invariant_plane(sig: Signature) -> Tuple[Multivector, Optional[Multivector]]:
    """(1, second basis vector or None) of the invariant subspace.

    For n >= 2 the invariant subspace is span{1, omega}; for n <= 1 it is
    the whole algebra, of dimension 1 or 2.
    """
    basis = invariant_subspace(sig)
    vecs = list(basis.vectors)
    unit = sig.scalar(1)
    if vecs[0] != unit or len(vecs) > 2:
        raise InternalInconsistency(f"unexpected invariant basis for {sig}: {vecs}")
    return unit, (vecs[1] if len(vecs) == 2 else None)


def find_equivariant_complex_structures(sig: Signature) -> List[Multivector]:
    """All invariant x with x*x = -1, sorted by (scalar coeff, omega coeff)."""
    unit, u = _invariant_plane(sig)
    return _solve_plane(unit, u, 0, -1)


def find_equivariant_idempotents(sig: Signature) -> List[Multivector]:
    """All invariant x with x*x = x, sorted by (scalar coeff, omega coeff)."""
    unit, u = _invariant_plane(sig)
    return _solve_plane(unit, u, 1, 0)


def sort_key(sig: Signature, x: Multivector) -> Tuple[Fraction, Fraction]:
    return (x.coeff(0), x.coeff(volume_element(sig)))
