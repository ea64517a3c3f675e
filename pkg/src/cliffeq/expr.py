"""Text grammar for multivectors.

::

    expr     := [sign] term (sign term)*
    term     := factor ('*' factor)*
    factor   := rational | blade | 'omega' | 'i' (complex form only)
    rational := integer ['/' positive-integer]
    blade    := 'e' digit+                 (one digit per index; n <= 9)
              | 'e[' index (',' index)* ']'

Indices inside a blade must be strictly increasing.  ``omega`` is the
volume blade of the ambient signature.  In the complex form (used for
basis elements of complex modules) the factor ``i`` means right
multiplication by J(1); it may be written directly before a blade, as in
``e12 - ie13``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import Multivector, Signature, blade_indices, volume_element
from .errors import ExprSyntaxError, IndexOutOfRangeError

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<bracket>e\[)
  | (?P<compact>e\d+)
  | (?P<omega>omega\b)
  | (?P<imag>i)
  | (?P<op>[-+*/,\]])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, sig: Signature, text: str, j: Optional[Multivector]):
        self.sig = sig
        self.text = text
        self.j = j
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise ExprSyntaxError(msg, pos, self.text)

    def expect(self, value):
        kind, v, pos = self.peek()
        if v != value:
            self.fail(f"expected {value!r}, found {v or 'end of input'!r}")
        return self.take()

    def parse(self) -> Multivector:
        total = self.sig.zero()
        kind, v, pos = self.peek()
        sign = 1
        if v in "+-" and kind == "op":
            self.take()
            sign = -1 if v == "-" else 1
        total = total + self.term().scale(sign)
        while True:
            kind, v, pos = self.peek()
            if kind == "end":
                return total
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                total = total + (t if v == "+" else -t)
            else:
                self.fail(f"expected '+' or '-', found {v!r}")

    def term(self) -> Multivector:
        coeff = Fraction(1)
        value = self.sig.scalar(1)
        imag = 0
        first = True
        prev_imag = False
        while True:
            kind, v, pos = self.peek()
            if not first:
                if kind == "op" and v == "*":
                    self.take()
                    kind, v, pos = self.peek()
                elif not (prev_imag and kind in ("compact", "bracket", "omega")):
                    break
            prev_imag = False
            if kind == "int":
                coeff *= self.rational()
            elif kind in ("compact", "bracket"):
                value = value * self.blade()
            elif kind == "omega":
                self.take()
                value = value * Multivector.from_blade(self.sig, volume_element(self.sig))
            elif kind == "imag":
                if self.j is None:
                    self.fail("'i' is only allowed in complex expressions")
                self.take()
                imag += 1
                prev_imag = True
            else:
                self.fail(f"expected a number, blade or 'omega', found {v or 'end of input'!r}")
            first = False
        out = value.scale(coeff)
        for _ in range(imag):
            out = out * self.j
        return out

    def rational(self) -> Fraction:
        _, num, _ = self.take()
        kind, v, pos = self.peek()
        if kind == "op" and v == "/":
            self.take()
            kind, den, pos = self.peek()
            if kind != "int":
                self.fail("expected a positive integer denominator")
            self.take()
            if int(den) == 0:
                self.fail("zero denominator", pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def _check_index(self, idx: int, pos: int):
        if not 1 <= idx <= self.sig.n:
            raise IndexOutOfRangeError(idx, self.sig.n, pos, self.text)

    def blade(self) -> Multivector:
        kind, v, pos = self.take()
        indices = []
        if kind == "compact":
            if self.sig.n > 9:
                self.fail(f"compact blade {v!r} is ambiguous for n={self.sig.n}; use e[...]", pos)
            for off, ch in enumerate(v[1:], start=1):
                idx = int(ch)
                self._check_index(idx, pos + off)
                indices.append((idx, pos + off))
        else:
            while True:
                k, num, p = self.peek()
                if k != "int":
                    self.fail("expected an index")
                self.take()
                idx = int(num)
                self._check_index(idx, p)
                indices.append((idx, p))
                k, sep, p = self.peek()
                if sep == ",":
                    self.take()
                    continue
                self.expect("]")
                break
        mask = 0
        last = 0
        for idx, p in indices:
            if idx <= last:
                self.fail("blade indices must be strictly increasing", p)
            last = idx
            mask |= 1 << (idx - 1)
        return Multivector.from_blade(self.sig, mask)


def parse_multivector(sig: Signature, text: str) -> Multivector:
    return _Parser(sig, text, None).parse()


def parse_complex_element(sig: Signature, text: str, j: Multivector) -> Multivector:
    """Like :func:`parse_multivector`, but ``i`` multiplies on the right by j."""
    return _Parser(sig, text, j).parse()


def split_expressions(text: str) -> List[str]:
    """Split a comma-separated list of expressions, ignoring commas in e[...]."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


def blade_name(sig: Signature, mask: int, style: str = "text") -> str:
    idx = blade_indices(mask)
    if style == "latex":
        sep = "," if sig.n > 9 else ""
        return "e_{" + sep.join(map(str, idx)) + "}"
    if sig.n > 9:
        return "e[" + ",".join(map(str, idx)) + "]"
    return "e" + "".join(map(str, idx))


def format_fraction(c: Fraction, style: str = "text") -> str:
    if style == "latex" and c.denominator != 1:
        sign = "-" if c < 0 else ""
        return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return str(c)


def format_multivector(x: Multivector, style: str = "text") -> str:
    """Render x; the text style re-parses to an equal multivector."""
    if style not in ("text", "latex"):
        raise ValueError(f"unknown style {style!r}")
    if x.is_zero():
        return "0"
    pieces = []
    for mask, c in x.items():
        neg = c < 0
        a = -c if neg else c
        if mask == 0:
            body = format_fraction(a, style)
        elif a == 1:
            body = blade_name(x.sig, mask, style)
        else:
            joiner = " " if style == "latex" else "*"
            body = format_fraction(a, style) + joiner + blade_name(x.sig, mask, style)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def multivector_to_json(x: Multivector) -> dict:
    """``{"expr": text, "terms": [[indices, "p/q"], ...]}``; either field re-parses."""
    return {
        "expr": format_multivector(x),
        "terms": [[list(blade_indices(m)), str(c)] for m, c in x.items()],
    }


def multivector_from_json(sig: Signature, data) -> Multivector:
    if "terms" in data:
        terms = {}
        for idx, c in data["terms"]:
            mask = 0
            for j in idx:
                if not 1 <= j <= sig.n:
                    raise IndexOutOfRangeError(j, sig.n, 0)
                mask |= 1 << (j - 1)
            terms[mask] = Fraction(c)
        return Multivector(sig, terms)
    return parse_multivector(sig, data["expr"])
