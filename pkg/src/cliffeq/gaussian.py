"""Gaussian rationals a + bi and square matrices over them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import List, Sequence, Tuple

from .expr import format_fraction


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, Rational):
            return GaussianRational(Fraction(v))
        if isinstance(v, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot convert {type(v).__name__} to GaussianRational")

    def __add__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussianRational.coerce(o) - self

    def __mul__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, o):
        return GaussianRational.coerce(o) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        if isinstance(o, GaussianRational):
            return self.re == o.re and self.im == o.im
        if isinstance(o, Rational):
            return self.im == 0 and self.re == o
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def format(self, style: str = "text") -> str:
        re_, im_ = self.re, self.im
        if not im_:
            return format_fraction(re_, style)
        if abs(im_) == 1:
            imag = "i"
        elif style == "latex":
            imag = format_fraction(abs(im_), style) + "i"
        elif im_.denominator == 1:
            imag = f"{abs(im_)}i"
        else:
            imag = f"({abs(im_)})i"
        if not re_:
            return ("-" if im_ < 0 else "") + imag
        return f"{format_fraction(re_, style)}{'-' if im_ < 0 else '+'}{imag}"

    def __str__(self):
        return self.format()

    def to_json(self) -> List[str]:
        return [str(self.re), str(self.im)]

    @classmethod
    def from_json(cls, pair) -> "GaussianRational":
        return cls(Fraction(pair[0]), Fraction(pair[1]))


I = GaussianRational(0, 1)
ZERO = GaussianRational()
ONE = GaussianRational(1)


class ComplexMatrix:
    """Square m x m matrix of Gaussian rationals (immutable)."""

    __slots__ = ("m", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in entries)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("matrix must be square")
        self.m = m
        self.entries = rows

    @classmethod
    def identity(cls, m: int) -> "ComplexMatrix":
        return cls([[ONE if i == j else ZERO for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, m: int) -> "ComplexMatrix":
        return cls([[ZERO] * m for _ in range(m)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "ComplexMatrix":
        m = len(cols)
        return cls([[cols[j][i] for j in range(m)] for i in range(m)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ComplexMatrix"]]) -> "ComplexMatrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].m):
                rows.append([v for b in brow for v in b.entries[i]])
        return cls(rows)

    def __getitem__(self, ij: Tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if other.m != self.m:
            raise ValueError("dimension mismatch")
        m = self.m
        # sparse-aware: gamma matrices are mostly zero
        right = [[(j, v) for j, v in enumerate(row) if v] for row in other.entries]
        out = []
        for row in self.entries:
            acc = [ZERO] * m
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in right[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return ComplexMatrix(out)

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k) -> "ComplexMatrix":
        k = GaussianRational.coerce(k)
        return ComplexMatrix([[k * v for v in r] for r in self.entries])

    def apply(self, vec: Sequence) -> List[GaussianRational]:
        return [sum((a * GaussianRational.coerce(v) for a, v in zip(row, vec)), ZERO) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_identity(self) -> bool:
        return self == ComplexMatrix.identity(self.m)

    def to_json(self) -> dict:
        return {"m": self.m, "entries": [[v.to_json() for v in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data) -> "ComplexMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        mat = cls([[GaussianRational.from_json(p) for p in row] for row in data["entries"]])
        if mat.m != data["m"]:
            raise ValueError(f"declared size {data['m']} but found {mat.m}")
        return mat

    def to_latex(self) -> str:
        body = " \\\\\n".join(" & ".join(v.format("latex") for v in row) for row in self.entries)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"

    def to_text(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"ComplexMatrix({[[str(v) for v in row] for row in self.entries]})"


def pauli() -> Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """The standard Pauli matrices sigma_1, sigma_2, sigma_3."""
    return (
        ComplexMatrix([[0, 1], [1, 0]]),
        ComplexMatrix([[ZERO, -I], [I, ZERO]]),
        ComplexMatrix([[1, 0], [0, -1]]),
    )
