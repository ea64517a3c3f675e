"""Cl(r, s) as a complex module over itself, projections and gamma matrices.

The complex scalar ``i`` acts by RIGHT multiplication by J(1); Clifford
elements act by LEFT multiplication.  The two commute, so left
multiplication is complex-linear and yields complex matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .algebra import (
    Multivector,
    Signature,
    blade_indices,
    blade_mul,
    grade,
    omega_squared,
    volume_element,
)
from .errors import (
    BasisError,
    ClosureError,
    InternalInconsistency,
    NotComplexStructureError,
    NotIdempotentError,
    NotInSpanError,
)
from .gaussian import ZERO, ComplexMatrix, GaussianRational
from .lie import LinearOperator, left_mul_operator, right_mul_operator


@dataclass(frozen=True)
class ComplexStructure:
    """A validated J(1): right multiplication by ``value`` squares to -1."""

    value: Multivector

    @property
    def sig(self) -> Signature:
        return self.value.sig

    def is_omega(self) -> bool:
        w = self.sig.omega
        return self.value == w or self.value == -w

    def times_i(self, x: Multivector) -> Multivector:
        return x * self.value

    def operator(self) -> LinearOperator:
        return right_mul_operator(self.value)


def make_complex_structure(j: Multivector) -> ComplexStructure:
    """Validate j as J(1) and check J^2 = -I and J(xy) = x J(y) as operators."""
    sig = j.sig
    if j * j != -1:
        raise NotComplexStructureError(f"J(1) = {j} squares to {j * j}, not -1")
    R = right_mul_operator(j)
    if R @ R != -LinearOperator.identity(sig.dim):
        raise InternalInconsistency("right multiplication by J(1) does not square to -I")
    for a in range(1, sig.n + 1):
        La = left_mul_operator(sig.e(a))
        if La @ R != R @ La:
            raise InternalInconsistency(f"J fails to commute with left multiplication by e{a}")
    return ComplexStructure(j)


@dataclass(frozen=True)
class ComplexBasis:
    """Elements b_k whose complex span (i = right mult by J) is the target.

    Construction fails with :class:`BasisError` unless the real vectors
    b_0, b_0 J, b_1, b_1 J, ... are linearly independent.
    """

    structure: ComplexStructure
    elements: Tuple[Multivector, ...]
    _solver: linalg.SpanSolver = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        cols = []
        for b in self.elements:
            if b.sig != self.structure.sig:
                raise BasisError(f"basis element {b} is not in {self.structure.sig}")
            cols.append(b.terms)
            cols.append(self.structure.times_i(b).terms)
        try:
            solver = linalg.SpanSolver(cols)
        except BasisError as exc:
            raise BasisError(f"basis is not complex-independent: {exc}") from None
        object.__setattr__(self, "_solver", solver)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def coordinates(self, x: Multivector) -> List[GaussianRational]:
        """Coefficients z_k = a_k + i b_k with x = sum a_k b_k + b_k (b_k J)."""
        try:
            real = self._solver.solve(x.terms)
        except NotInSpanError:
            raise NotInSpanError(f"{x} is not in the complex span of the basis") from None
        return [GaussianRational(real[2 * k], real[2 * k + 1]) for k in range(len(self.elements))]

    def combine(self, coords: Sequence) -> Multivector:
        """Inverse of :meth:`coordinates`."""
        out = self.structure.sig.zero()
        for z, b in zip(coords, self.elements):
            z = GaussianRational.coerce(z)
            if z.re:
                out = out + b.scale(z.re)
            if z.im:
                out = out + self.structure.times_i(b).scale(z.im)
        return out


def complex_coordinates(basis: ComplexBasis, x: Multivector) -> List[GaussianRational]:
    return basis.coordinates(x)


def _canonical_rep(n: int, mask: int) -> bool:
    g = grade(mask)
    return 2 * g < n or (2 * g == n and mask & 1 == 1)


def canonical_complex_basis(J: ComplexStructure) -> ComplexBasis:
    """One blade per complementary pair {I, I^c}, for J = +-omega.

    Prefer the smaller grade; at half grade prefer the blade containing
    e_1.  Ordered by grade, then by index tuple.
    """
    sig = J.sig
    if omega_squared(sig) != -1 or not J.is_omega():
        raise NotComplexStructureError("canonical complex basis needs omega^2 = -1 and J(1) = +-omega")
    masks = [m for m in sig.blades() if _canonical_rep(sig.n, m)]
    masks.sort(key=lambda m: (grade(m), blade_indices(m)))
    return ComplexBasis(J, tuple(Multivector.from_blade(sig, m) for m in masks))


def ambient_complex_basis(J: ComplexStructure) -> ComplexBasis:
    """Canonical basis for J = +-omega; otherwise greedy over blades in mask order."""
    if J.is_omega():
        return canonical_complex_basis(J)
    sig = J.sig
    chosen: List[Multivector] = []
    cols: List = []
    for m in sig.blades():
        b = Multivector.from_blade(sig, m)
        trial = cols + [b.terms, J.times_i(b).terms]
        try:
            linalg.SpanSolver(trial)
        except BasisError:
            continue
        chosen.append(b)
        cols = trial
        if 2 * len(chosen) == sig.dim:
            break
    return ComplexBasis(J, tuple(chosen))


def complex_rep_matrix(basis: ComplexBasis, x: Multivector) -> ComplexMatrix:
    """Matrix of left multiplication by x; column k = coordinates of x b_k."""
    cols = [basis.coordinates(x * b) for b in basis.elements]
    return ComplexMatrix.from_columns(cols)


@dataclass(frozen=True)
class Projection:
    """An idempotent p; right multiplication by p projects onto Cl p."""

    p: Multivector

    @property
    def sig(self) -> Signature:
        return self.p.sig

    def contains(self, x: Multivector) -> bool:
        return x * self.p == x

    def complement(self) -> "Projection":
        return Projection(1 - self.p)


def make_idempotent(p: Multivector) -> Projection:
    defect = p * p - p
    if not defect.is_zero():
        raise NotIdempotentError(f"{p} is not idempotent: p*p - p = {defect}", defect)
    return Projection(p)


def _image_generators(P: Projection) -> List[Multivector]:
    sig = P.sig
    seen = set()
    gens = []
    for m in sig.blades():
        g = Multivector.from_blade(sig, m) * P.p
        if g and g not in seen:
            seen.add(g)
            gens.append(g)
    return gens


def check_closure(J: ComplexStructure, P: Projection) -> None:
    """Raise ClosureError unless im(P) = Cl p is stable under right mult by J(1)."""
    for g in _image_generators(P):
        gj = J.times_i(g)
        if not P.contains(gj):
            raise ClosureError(f"{g} lies in im(P) but {g} * J(1) = {gj} does not")


def image_basis(J: ComplexStructure, P: Projection) -> ComplexBasis:
    """Reduced echelon complex basis of im(P), in ambient complex coordinates."""
    if J.sig != P.sig:
        raise BasisError("structure and projection live in different algebras")
    check_closure(J, P)
    ambient = ambient_complex_basis(J)
    if P.p.is_zero():
        return ComplexBasis(J, ())
    if P.p == 1:
        return ambient
    rows = [ambient.coordinates(g) for g in _image_generators(P)]
    reduced, _ = linalg.row_reduce(rows, zero=ZERO)
    return ComplexBasis(J, tuple(ambient.combine(r) for r in reduced))


def complex_dimension(J: ComplexStructure, P: Projection) -> int:
    return len(image_basis(J, P))


def gamma_matrices(
    J: ComplexStructure, P: Projection, basis: Optional[ComplexBasis] = None
) -> List[ComplexMatrix]:
    """Left multiplication by e_1..e_n restricted to im(P), as complex matrices."""
    sig = J.sig
    default = image_basis(J, P)
    if basis is None:
        basis = default
    else:
        if basis.structure != J:
            raise BasisError("basis was built for a different complex structure")
        for b in basis.elements:
            if not P.contains(b):
                raise BasisError(f"basis element {b} is not in the image of P")
        if len(basis) != len(default):
            raise BasisError(
                f"basis has {len(basis)} elements but im(P) has complex dimension {len(default)}"
            )
    return [complex_rep_matrix(basis, sig.e(a)) for a in range(1, sig.n + 1)]


def verify_clifford_relations(sig: Signature, matrices: Sequence[ComplexMatrix]) -> bool:
    """True iff g_a g_b + g_b g_a = -2 q_ab I for all a, b."""
    if len(matrices) != sig.n:
        raise ValueError(f"expected {sig.n} matrices, got {len(matrices)}")
    if not matrices:
        return True
    m = matrices[0].m
    if any(g.m != m for g in matrices):
        raise ValueError("matrices have different sizes")
    q = sig.metric()
    ident = ComplexMatrix.identity(m)
    zero = ComplexMatrix.zeros(m)
    for a in range(sig.n):
        for b in range(a, sig.n):
            ab = matrices[a] @ matrices[b]
            anti = ab + ab if a == b else ab + matrices[b] @ matrices[a]
            want = ident.scale(-2 * q[a]) if a == b else zero
            if anti != want:
                return False
    return True


def idempotent_family(sig: Signature) -> List[Multivector]:
    """(1 +- e_I)/2 over blades with e_I^2 = +1, the scalar blade giving 1 and 0."""
    out = []
    for m in sig.blades():
        if blade_mul(sig, m, m)[0] != 1:
            continue
        e = Multivector.from_blade(sig, m)
        for sign in (1, -1):
            p = (1 + e.scale(sign)) / 2
            if p not in out:
                out.append(p)
    return out


# Keyed on (s - r) mod 8: generators e_j with j > r square to +1.
_CLASSIFICATION = {
    0: ("R", False),
    1: ("R", True),
    2: ("R", False),
    3: ("C", False),
    4: ("H", False),
    5: ("H", True),
    6: ("H", False),
    7: ("C", False),
}
_REAL_DIM = {"R": 1, "C": 2, "H": 4}


def _tag(division: str, split: bool) -> str:
    return f"{division}⊕{division}" if split else division


def classify_matrix_algebra(r: int, s: int) -> Tuple[str, int]:
    """(tag, m) with Cl(r, s) isomorphic to M_m(D), or M_m(D) + M_m(D) for split tags."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    division, split = _CLASSIFICATION[(s - r) % 8]
    blocks = 2 if split else 1
    total = 1 << (r + s)
    m2, rem = divmod(total, _REAL_DIM[division] * blocks)
    m = math.isqrt(m2)
    if rem or m * m != m2:
        raise InternalInconsistency(f"classification of Cl({r},{s}) has wrong dimension")
    return _tag(division, split), m


def algebra_dimension(tag: str, m: int) -> int:
    split = "⊕" in tag
    division = tag[0]
    return _REAL_DIM[division] * m * m * (2 if split else 1)


def trace_form_classification(sig: Signature) -> Tuple[str, int]:
    """Classify Cl(r, s) from the scalar-part trace form and the centre.

    Independent of the mod-8 table.  For M_m(R), M_m(C), M_m(H) the form
    x -> <x x>_0 has signature m, 0, -2m; split algebras double it.  The
    centre is spanned by the central blades.
    """
    n = sig.n
    sig_form = sum(blade_mul(sig, m, m)[0] for m in sig.blades())
    central = [
        m
        for m in sig.blades()
        if all(blade_mul(sig, m, 1 << j) == blade_mul(sig, 1 << j, m) for j in range(n))
    ]
    total = sig.dim
    if len(central) == 1:
        if sig_form > 0:
            division, m, split = "R", sig_form, False
        else:
            division, m, split = "H", -sig_form // 2, False
    elif len(central) == 2:
        w = volume_element(sig)
        if blade_mul(sig, w, w)[0] == -1:
            division, m, split = "C", math.isqrt(total // 2), False
        elif sig_form > 0:
            division, m, split = "R", sig_form // 2, True
        else:
            division, m, split = "H", -sig_form // 4, True
    else:
        raise InternalInconsistency(f"centre of {sig} has dimension {len(central)}")
    if algebra_dimension(_tag(division, split), m) != total:
        raise InternalInconsistency(f"trace form of {sig} is inconsistent with its dimension")
    return _tag(division, split), m
