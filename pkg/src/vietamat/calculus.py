"""Two applications of the leave-one-out structure: the Wronskian of the
nodal polynomial family and the Jacobian of the elementary symmetric map.

Both determinants reduce to the same closed product form.  The Wronskian
picks up an extra prod_{k<n} k! factor and is independent of the
evaluation point (each nodal polynomial solves y^(n) = 0, so the
Wronskian is constant); the Jacobian matrix of (e_1, ..., e_n) is
literally the leave-one-out grid, entry for entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .rational import Rational
from .structmat import ExactMatrix, vieta_det_closed
from .sympoly import DensePolynomial, NodeSet, leave_one_out_table, monic_from_roots


@dataclass(frozen=True)
class NodalBasis:
    """polys[j] = monic prod_{i != j} (x - a_i), each of degree n - 1.

    With distinct nodes, polys[j] vanishes at every node except node j.
    """

    polys: tuple[DensePolynomial, ...]

    def __post_init__(self):
        if not self.polys:
            raise ValueError("a nodal basis needs at least one polynomial")

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[DensePolynomial]:
        return iter(self.polys)

    def __getitem__(self, index: int) -> DensePolynomial:
        return self.polys[index]


def nodal_basis(ns: NodeSet) -> NodalBasis:
    """Monic leave-one-out polynomials of the nodes.

    For a single node the basis is the constant polynomial 1 (empty
    product).  The coefficient of x^{n-1-k} in polys[j] equals (-1)^k
    times entry (k, j) of the leave-one-out table.
    """
    return NodalBasis(tuple(monic_from_roots(ns.without(j)) for j in range(len(ns))))


def poly_derivative(p: DensePolynomial, order: int = 1) -> DensePolynomial:
    """Formal derivative iterated `order` times; order 0 returns p."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    for _ in range(order):
        p = p.derivative()
    return p


def wronskian_matrix(basis: NodalBasis, x0: Rational) -> ExactMatrix:
    """Matrix with entry (r, j) = r-th derivative of polys[j] at x0."""
    n = len(basis)
    rows = []
    current = list(basis.polys)
    for r in range(n):
        rows.append(tuple(p(x0) for p in current))
        if r < n - 1:
            current = [p.derivative() for p in current]
    return ExactMatrix(tuple(rows))


def wronskian_closed(ns: NodeSet) -> Rational:
    """Closed-form Wronskian of the nodal basis: prod_{k<n} k! times the
    node-difference product.  Independent of the evaluation point."""
    scale = math.prod(math.factorial(k) for k in range(len(ns)))
    return scale * vieta_det_closed(ns)


def jacobian_matrix(point: NodeSet) -> ExactMatrix:
    """Partials of the elementary symmetric map (e_1, ..., e_n) at a point.

    d e_{r+1} / d x_{c+1} is e_r of the other coordinates, so the matrix
    is exactly the leave-one-out grid (identical to `build_vieta`).
    """
    return ExactMatrix(leave_one_out_table(point).entries)


def jacobian_det_closed(point: NodeSet) -> Rational:
    """Closed-form Jacobian determinant: prod_{i<k} (x_i - x_k)."""
    return vieta_det_closed(point)
