"""Exact arithmetic in the real Clifford algebra Cl(r, s).

Conventions: generators e_1..e_n (n = r + s) satisfy ``e_j**2 = -eps_j``
with ``eps_j = +1`` for ``j <= r`` and ``-1`` otherwise, and distinct
generators anticommute.  So the first ``r`` generators square to -1.

Blades are stored as bitmasks: bit ``j - 1`` set means ``e_j`` is a factor.
The blade basis is ordered by the integer value of the mask, scalar first.
Coefficients are :class:`fractions.Fraction`; no floats anywhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from . import linalg
from .errors import (
    DimensionCapError,
    InternalInconsistency,
    InvalidBladeError,
    NotOrthogonalError,
    SignatureMismatchError,
)

DEFAULT_MAX_N = 12

Scalar = Union[int, Fraction]


def max_dimension() -> int:
    """Current cap on n = r + s; ``CLIFFEQ_MAX_N`` overrides the default."""
    raw = os.environ.get("CLIFFEQ_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise DimensionCapError(f"CLIFFEQ_MAX_N must be an integer, got {raw!r}") from None
    if value < 0:
        raise DimensionCapError("CLIFFEQ_MAX_N must be nonnegative")
    return value


@dataclass(frozen=True)
class Signature:
    r: int
    s: int

    def __post_init__(self):
        for name in ("r", "s"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {type(v).__name__}")
            if v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")
        cap = max_dimension()
        if self.r + self.s > cap:
            raise DimensionCapError(
                f"Cl({self.r},{self.s}) has n={self.r + self.s} > cap {cap}; set CLIFFEQ_MAX_N to raise it"
            )

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def negative_mask(self) -> int:
        """Mask of generators squaring to -1 (the first r)."""
        return (1 << self.r) - 1

    def eps(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise InvalidBladeError(f"index {j} out of range 1..{self.n}")
        return 1 if j <= self.r else -1

    def metric(self) -> Tuple[int, ...]:
        """Diagonal of q."""
        return tuple(1 if j <= self.r else -1 for j in range(1, self.n + 1))

    def blades(self) -> range:
        return range(self.dim)

    def e(self, *indices: int) -> "Multivector":
        """The blade e_{i1 i2 ...} for strictly increasing indices."""
        return Multivector.from_blade(self, blade(self, indices))

    def scalar(self, value: Scalar = 1) -> "Multivector":
        return Multivector(self, {0: value})

    def zero(self) -> "Multivector":
        return Multivector(self)

    @property
    def omega(self) -> "Multivector":
        return Multivector.from_blade(self, volume_element(self))

    def __str__(self) -> str:
        return f"Cl({self.r},{self.s})"


def blade(sig: Signature, indices: Iterable[int]) -> int:
    """Bitmask of a strictly increasing index sequence (empty = scalar)."""
    mask = 0
    last = 0
    for j in indices:
        if not 1 <= j <= sig.n:
            raise InvalidBladeError(f"index {j} out of range 1..{sig.n}")
        if j <= last:
            raise InvalidBladeError("blade indices must be strictly increasing")
        mask |= 1 << (j - 1)
        last = j
    return mask


def blade_indices(mask: int) -> Tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def grade(mask: int) -> int:
    return bin(mask).count("1")


def check_blade(sig: Signature, mask: int) -> None:
    if isinstance(mask, bool) or not isinstance(mask, int) or mask < 0 or mask >= sig.dim:
        raise InvalidBladeError(f"blade mask {mask!r} invalid for {sig}")


def _reorder_sign(a: int, b: int) -> int:
    """Sign from moving the factors of b past the higher factors of a."""
    swaps = 0
    a >>= 1
    while a:
        swaps += grade(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_mul(sig: Signature, a: int, b: int) -> Tuple[int, int]:
    """e_a * e_b = sign * e_(a xor b).  Returns ``(sign, mask)``."""
    sign = _reorder_sign(a, b)
    if grade(a & b & sig.negative_mask) & 1:
        sign = -sign
    return sign, a ^ b


def volume_element(sig: Signature) -> int:
    return sig.dim - 1


def _omega_squared_rule(r: int, s: int) -> int:
    n = r + s
    if s % 2 == 1:
        return -1 if n % 4 in (0, 3) else 1
    return -1 if n % 4 in (1, 2) else 1


def omega_squared(sig: Signature) -> int:
    """omega**2 as +1/-1, computed by blade product and by the mod-4 rule."""
    w = volume_element(sig)
    direct, rest = blade_mul(sig, w, w)
    assert rest == 0
    rule = _omega_squared_rule(sig.r, sig.s)
    if direct != rule:
        raise InternalInconsistency(f"omega^2 for {sig}: product gives {direct}, rule gives {rule}")
    return direct


class Multivector:
    """Immutable element of Cl(r, s): a finite map blade mask -> Fraction.

    Supports ``+ - *`` with other multivectors of the same signature and with
    rational scalars, ``/`` by a scalar, and equality (also against scalars).
    """

    __slots__ = ("sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[int, Scalar] | None = None):
        clean: Dict[int, Fraction] = {}
        for mask, c in (terms or {}).items():
            check_blade(sig, mask)
            if not isinstance(c, Rational):
                raise TypeError(f"coefficient must be rational, got {type(c).__name__}")
            c = Fraction(c)
            if c:
                clean[mask] = c
        self.sig = sig
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, sig: Signature, terms: Dict[int, Fraction]) -> "Multivector":
        obj = cls.__new__(cls)
        obj.sig = sig
        obj._terms = dict(sorted((k, v) for k, v in terms.items() if v))
        obj._hash = None
        return obj

    @classmethod
    def from_blade(cls, sig: Signature, mask: int, coeff: Scalar = 1) -> "Multivector":
        return cls(sig, {mask: coeff})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coeff(self, mask: int) -> Fraction:
        return self._terms.get(mask, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self._terms)

    def _coerce(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureMismatchError(f"{self.sig} vs {other.sig}")
            return other
        if isinstance(other, Rational):
            return Multivector._raw(self.sig, {0: Fraction(other)})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in o._terms.items():
            out[k] = out.get(k, 0) + v
        return Multivector._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: Scalar) -> "Multivector":
        c = Fraction(c)
        return Multivector._raw(self.sig, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sig = self.sig
        neg = sig.negative_mask
        out: Dict[int, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in o._terms.items():
                sign = _reorder_sign(a, b)
                if grade(a & b & neg) & 1:
                    sign = -sign
                m = a ^ b
                v = out.get(m, 0) + (ca * cb if sign > 0 else -(ca * cb))
                out[m] = v
        return Multivector._raw(sig, out)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.sig.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and self._terms == other._terms
        if isinstance(other, Rational):
            c = Fraction(other)
            return self._terms == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, tuple(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        from .expr import format_multivector

        return format_multivector(self)

    def __repr__(self):
        return f"Multivector({self.sig}, {str(self)!r})"


def mv_mul(x: Multivector, y: Multivector) -> Multivector:
    return x * y


def mv_add(x: Multivector, y: Multivector) -> Multivector:
    return x + y


def mv_scale(c: Scalar, x: Multivector) -> Multivector:
    return x.scale(c)


@dataclass(frozen=True)
class OrthogonalMap:
    """An exact element of O(r, s): ``entries`` is n x n with L^T q L = q.

    Column j holds the image of e_j.
    """

    sig: Signature
    entries: Tuple[Tuple[Fraction, ...], ...]
    det: int = field(init=False)

    def __post_init__(self):
        n = self.sig.n
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise NotOrthogonalError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "entries", rows)
        q = self.sig.metric()
        for a in range(n):
            for b in range(a, n):
                v = sum(rows[k][a] * q[k] * rows[k][b] for k in range(n))
                want = q[a] if a == b else 0
                if v != want:
                    raise NotOrthogonalError(
                        f"(L^T q L)[{a + 1},{b + 1}] = {v}, expected {want}"
                    )
        d = linalg.determinant(rows)
        if d not in (1, -1):
            raise InternalInconsistency(f"orthogonal map with determinant {d}")
        object.__setattr__(self, "det", int(d))

    @classmethod
    def identity(cls, sig: Signature) -> "OrthogonalMap":
        n = sig.n
        return cls(sig, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def image(self, j: int) -> Multivector:
        """Image of the generator e_j (1-based)."""
        col = j - 1
        return Multivector(self.sig, {1 << k: self.entries[k][col] for k in range(self.sig.n)})

    def compose(self, other: "OrthogonalMap") -> "OrthogonalMap":
        n = self.sig.n
        a, b = self.entries, other.entries
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
        )
        return OrthogonalMap(self.sig, prod)


def apply_orthogonal(lam: OrthogonalMap, x: Multivector) -> Multivector:
    """Extend lam multiplicatively to the whole algebra and apply it to x."""
    if lam.sig != x.sig:
        raise SignatureMismatchError(f"{lam.sig} vs {x.sig}")
    sig = x.sig
    images = [lam.image(j) for j in range(1, sig.n + 1)]
    out = sig.zero()
    cache: Dict[int, Multivector] = {0: sig.scalar(1)}
    for mask, c in x.items():
        if mask not in cache:
            img = sig.scalar(1)
            for j in blade_indices(mask):
                img = img * images[j - 1]
            cache[mask] = img
        out = out + cache[mask].scale(c)
    return out


def blade_square(sig: Signature, mask: int) -> int:
    """e_I * e_I as +1/-1."""
    return blade_mul(sig, mask, mask)[0]
