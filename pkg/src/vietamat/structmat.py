"""Structured matrix builders and their closed-form determinants.

The central object is the matrix whose column j stacks e_0..e_{n-1} of
the node multiset with node j removed; its determinant has the closed
product form prod_{i<k} (a_i - a_k).  The classic power matrix is built
alongside as a cross-check: its determinant uses the opposite orientation
prod_{k>i} (a_k - a_i), and the two products differ exactly by the sign
(-1)^{n(n-1)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rational import Rational
from .sympoly import DensePolynomial, NodeSet, leave_one_out_table, poly_from_roots


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of exact rationals, row-major, dimensions >= 1.

    Construction permits rectangular shapes; the determinant routines
    reject anything non-square.
    """

    entries: tuple[tuple[Rational, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(e) for e in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be at least 1x1")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Rational]]) -> "ExactMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def row(self, i: int) -> tuple[Rational, ...]:
        return self.entries[i]


def build_vieta(ns: NodeSet) -> ExactMatrix:
    """n x n matrix with entry (r, j) = e_r of the nodes omitting node j.

    Row 0 is all ones; a single node gives [[1]].
    """
    return ExactMatrix(leave_one_out_table(ns).entries)


def vieta_det_closed(ns: NodeSet) -> Rational:
    """Closed-form determinant of `build_vieta`: prod_{i<k} (a_i - a_k).

    The empty product (n = 1) is 1; any repeated node zeroes a factor.
    """
    nodes = ns.nodes
    det = Fraction(1)
    for i in range(len(nodes)):
        for k in range(i + 1, len(nodes)):
            det *= nodes[i] - nodes[k]
    return det


def build_vandermonde(ns: NodeSet) -> ExactMatrix:
    """n x n power matrix with entry (r, j) = a_j ** r, r = 0..n-1."""
    n = len(ns)
    rows = [[Fraction(1)] * n]
    for _ in range(1, n):
        rows.append([p * a for p, a in zip(rows[-1], ns.nodes)])
    return ExactMatrix(tuple(tuple(row) for row in rows))


def vandermonde_det_closed(ns: NodeSet) -> Rational:
    """Closed-form determinant of `build_vandermonde`: prod_{k>i} (a_k - a_i)."""
    nodes = ns.nodes
    det = Fraction(1)
    for i in range(len(nodes)):
        for k in range(i + 1, len(nodes)):
            det *= nodes[k] - nodes[i]
    return det


def shift_nodes(ns: NodeSet, c: Rational) -> NodeSet:
    """Subtract c from every node, preserving order.

    The closed-form determinant is invariant under this shift even though
    the matrix entries all change.
    """
    return NodeSet(tuple(a - c for a in ns.nodes))


def vieta_extension_poly(ns: NodeSet) -> DensePolynomial:
    """The determinant of the (n+1)-node matrix over nodes + [x], as a
    polynomial in x.

    Closed form: (-1)^n * vieta_det_closed(ns) * prod_i (x - a_i), of
    degree n.  Repeated nodes zero the leading constant, and the zero
    polynomial is returned.
    """
    lead = vieta_det_closed(ns)
    if lead == 0:
        return DensePolynomial.zero()
    if len(ns) % 2:
        lead = -lead
    return poly_from_roots(ns) * lead
