"""Elementary symmetric kernels: e_k values, leave-one-out tables, and
dense univariate polynomials.

Indexing convention, used everywhere downstream: node lists are 0-based,
and column j of a leave-one-out grid describes the multiset with node j
omitted.  Polynomial coefficients are stored in ascending degree; the
empty tuple is the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .rational import Rational


@dataclass(frozen=True)
class NodeSet:
    """Ordered rational nodes; at least one node, duplicates allowed."""

    nodes: tuple[Rational, ...]

    def __post_init__(self):
        coerced = tuple(Fraction(v) for v in self.nodes)
        if not coerced:
            raise ValueError("a node set needs at least one node")
        object.__setattr__(self, "nodes", coerced)

    @classmethod
    def of(cls, *values) -> "NodeSet":
        """Convenience constructor accepting ints, strings, or Fractions."""
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.nodes)

    def __getitem__(self, index: int) -> Rational:
        return self.nodes[index]

    def without(self, index: int) -> tuple[Rational, ...]:
        """All nodes except the one at `index`, order preserved."""
        return self.nodes[:index] + self.nodes[index + 1:]


@dataclass(frozen=True)
class DensePolynomial:
    """Univariate polynomial with exact coefficients, ascending degree.

    Trailing zeros are trimmed at construction, so a nonzero polynomial
    always has a nonzero leading coefficient and the zero polynomial is
    uniquely the empty tuple.
    """

    coefficients: tuple[Rational, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients) -> "DensePolynomial":
        return cls(tuple(Fraction(c) for c in coefficients))

    @classmethod
    def zero(cls) -> "DensePolynomial":
        return cls(())

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Rational) -> Rational:
        """Evaluate at x by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            a, b = self.coefficients, other.coefficients
            if not a or not b:
                return DensePolynomial.zero()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return DensePolynomial(tuple(out))
        if isinstance(other, (int, Fraction)):
            return DensePolynomial(tuple(Fraction(other) * c for c in self.coefficients))
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self) -> "DensePolynomial":
        """First formal derivative."""
        return DensePolynomial(tuple(k * c for k, c in enumerate(self.coefficients) if k > 0))


@dataclass(frozen=True)
class LeaveOneOutTable:
    """Grid entries[k][j] = e_k of the nodes with node j removed.

    Row 0 is all ones (empty products); column j, read with alternating
    signs, lists the coefficients of the monic polynomial whose roots are
    the other nodes.
    """

    entries: tuple[tuple[Rational, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> tuple[Rational, ...]:
        return tuple(row[j] for row in self.entries)


def elem_sym_all(ns: NodeSet) -> list[Rational]:
    """All elementary symmetric values [e_0, e_1, ..., e_n] of the nodes.

    Computed by multiplying the running generating polynomial by (1 + a*t)
    once per node: O(n^2) exact multiplications, no divisions.
    """
    e = [Fraction(1)]
    for a in ns:
        e.append(Fraction(0))
        for k in range(len(e) - 1, 0, -1):
            e[k] += a * e[k - 1]
    return e


def leave_one_out_table(ns: NodeSet) -> LeaveOneOutTable:
    """The e_k grid over every leave-one-out multiset of the nodes.

    Column j is the coefficient convolution of prod_{i<j}(1 + a_i t) with
    prod_{i>j}(1 + a_i t).  Division-free, so repeated or zero nodes need
    no special casing.
    """
    n = len(ns)
    prefix = [[Fraction(1)]]
    for a in ns.nodes[: n - 1]:
        prefix.append(_times_one_plus_at(prefix[-1], a))
    suffix = [[Fraction(1)]]
    for a in reversed(ns.nodes[1:]):
        suffix.append(_times_one_plus_at(suffix[-1], a))
    suffix.reverse()
    columns = [_convolve(prefix[j], suffix[j]) for j in range(n)]
    entries = tuple(tuple(columns[j][k] for j in range(n)) for k in range(n))
    return LeaveOneOutTable(entries)


def poly_from_roots(ns: NodeSet) -> DensePolynomial:
    """Monic prod_i (x - a_i); the coefficient of x^{n-k} is (-1)^k e_k."""
    return monic_from_roots(ns.nodes)


def monic_from_roots(roots: Iterable[Rational]) -> DensePolynomial:
    """Monic polynomial with the given roots; the empty product is 1."""
    coeffs = [Fraction(1)]
    for a in roots:
        coeffs.insert(0, Fraction(0))
        for k in range(len(coeffs) - 1):
            coeffs[k] -= a * coeffs[k + 1]
    return DensePolynomial(tuple(coeffs))


def _times_one_plus_at(coeffs: list[Rational], a: Rational) -> list[Rational]:
    out = list(coeffs) + [Fraction(0)]
    for k in range(len(out) - 1, 0, -1):
        out[k] += a * out[k - 1]
    return out


def _convolve(a: list[Rational], b: list[Rational]) -> list[Rational]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out
