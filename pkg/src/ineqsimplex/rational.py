"""Exact rational scalars and lexicographic vector comparison.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision numerator,
positive denominator, always reduced, zero stored as ``0/1``.
"""

from __future__ import annotations

import enum
import operator
import re
from fractions import Fraction
from typing import Sequence

Rational = Fraction
RationalVector = tuple  # tuple[Fraction, ...]

_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)\s*/\s*([+-]?\d+)")
_DEC_RE = re.compile(r"([+-]?)(\d*)[.,](\d+)|([+-]?)(\d+)[.,]")


class RationalParseError(ValueError):
    pass


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat_make(p: int, q: int = 1) -> Fraction:
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise TypeError("rat_make expects integers")
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(op: str, a: Fraction, b: Fraction | None = None) -> Fraction:
    """Apply ``op`` (add, sub, mul, div, neg) exactly. ``neg`` ignores ``b``."""
    if op == "neg":
        return -Fraction(a)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero")
    return fn(Fraction(a), Fraction(b))


def rat_parse(text: str) -> Fraction:
    """Parse an integer, ``p/q``, or a finite decimal using ``.`` or ``,``.

    Decimals are converted exactly: ``"3,125"`` is ``25/8``.
    """
    if not isinstance(text, str):
        raise RationalParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if _INT_RE.fullmatch(s):
        return Fraction(int(s))
    m = _FRAC_RE.fullmatch(s)
    if m:
        q = int(m.group(2))
        if q == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), q)
    m = _DEC_RE.fullmatch(s)
    if m:
        if m.group(3) is not None:
            sign, whole, frac = m.group(1), m.group(2) or "0", m.group(3)
        else:
            sign, whole, frac = m.group(4), m.group(5), ""
        value = Fraction(int(whole + frac), 10 ** len(frac))
        return -value if sign == "-" else value
    raise RationalParseError(f"not a rational number: {text!r}")


def render(x: Fraction) -> str:
    """Canonical text form: ``p`` for integers, ``p/q`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def render_decimal(x: Fraction, places: int, sep: str = ".") -> str:
    """Round half away from zero to ``places`` digits; trailing zeros dropped."""
    x = Fraction(x)
    scale = 10**places
    scaled = abs(x) * scale
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    if q == 0:
        return "0"
    digits = str(q).rjust(places + 1, "0")
    whole, frac = digits[: len(digits) - places], digits[len(digits) - places :]
    frac = frac.rstrip("0")
    out = whole + (sep + frac if frac else "")
    return "-" + out if x < 0 else out


def vector(values) -> tuple:
    """Coerce an iterable of ints, Fractions or strings into a rational vector."""
    return tuple(v if isinstance(v, Fraction) else _coerce(v) for v in values)


def _coerce(v) -> Fraction:
    if isinstance(v, str):
        return rat_parse(v)
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"refusing inexact or boolean value {v!r}")
    return Fraction(v)


def lex_compare(u: Sequence[Fraction], v: Sequence[Fraction]) -> Ordering:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    for a, b in zip(u, v):
        if a < b:
            return Ordering.LESS
        if a > b:
            return Ordering.GREATER
    return Ordering.EQUAL


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
