"""Exact rational scalars and their text wire format.

Every scalar in this library is a ``fractions.Fraction``: arbitrary
precision, always in lowest terms with a positive denominator, and with
zero represented uniquely as 0/1.  Equality is therefore structural and
exact; no float ever enters an identity computation.

Wire syntax (used by the CLI, JSON node files, and CSV matrices):
an optional sign followed by digits, optionally followed by ``/`` and an
unsigned nonzero denominator.  No whitespace.  Rendering emits ``n`` when
the denominator is 1 and ``n/d`` otherwise, so parse/render round-trips
bit-exactly.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

Rational = Fraction

_WIRE_RE = re.compile(r"[+-]?[0-9]+(?:/([0-9]+))?")

_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class RationalParseError(ValueError):
    """Text does not denote a rational in wire syntax."""

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(f"invalid rational {text!r} at position {position}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason


def parse_rational(text: str) -> Rational:
    """Parse wire-syntax text ("-3", "5/6") into a canonical rational.

    Raises RationalParseError, carrying the offending position, on bad
    syntax or a zero denominator.
    """
    match = _WIRE_RE.match(text)
    if match is None or match.end() != len(text):
        position = match.end() if match is not None else 0
        raise RationalParseError(text, position, "expected integer or numerator/denominator")
    denominator = match.group(1)
    if denominator is not None and int(denominator) == 0:
        raise RationalParseError(text, match.start(1), "denominator is zero")
    return Fraction(text)


def render_rational(value: Rational) -> str:
    """Canonical wire text: "n" for integers, "n/d" otherwise."""
    return str(Fraction(value))


def rat_arith(op: str, a: Rational, b: Rational) -> Rational:
    """Apply field arithmetic by name: op in {add, sub, mul, div}.

    Division by zero raises ZeroDivisionError; an unknown op name raises
    ValueError.
    """
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown arithmetic op {op!r}; expected one of {sorted(_ARITH)}") from None
    return fn(a, b)
