"""Independent exact determinant oracles.

Two deliberately different algorithms validate every closed form in this
library: cofactor expansion (no elimination ideas at all) and
fraction-free elimination.  A bug would have to strike both the product
formula and two unrelated determinant routes identically to go unnoticed.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .rational import Rational
from .structmat import ExactMatrix

LAPLACE_MAX_ENV = "VIETA_LAPLACE_MAX"
DEFAULT_LAPLACE_MAX = 8


class LaplaceSizeError(ValueError):
    """Cofactor expansion requested beyond its size guard."""


def laplace_size_limit() -> int:
    """Current cofactor-expansion guard; VIETA_LAPLACE_MAX overrides 8."""
    raw = os.environ.get(LAPLACE_MAX_ENV)
    if raw is None:
        return DEFAULT_LAPLACE_MAX
    return int(raw)


def det_laplace(m: ExactMatrix, *, max_size: int | None = None) -> Rational:
    """Determinant by recursive cofactor expansion along the first row.

    Minors repeat across branches, so they are memoized by their column
    set; the arithmetic is the textbook expansion, term for term.  Sizes
    beyond the guard (default 8, env-overridable) raise LaplaceSizeError
    rather than silently switching algorithm.
    """
    _require_square(m, "det_laplace")
    limit = laplace_size_limit() if max_size is None else max_size
    n = m.n_rows
    if n > limit:
        raise LaplaceSizeError(
            f"det_laplace is limited to {limit}x{limit}, got {n}x{n}; "
            f"set {LAPLACE_MAX_ENV} to raise the guard"
        )
    rows = m.entries
    memo: dict[tuple[int, ...], Fraction] = {}

    def expand(depth: int, cols: tuple[int, ...]) -> Fraction:
        if len(cols) == 1:
            return rows[depth][cols[0]]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = rows[depth]
        total = Fraction(0)
        negate = False
        for pos, j in enumerate(cols):
            coeff = row[j]
            if coeff:
                term = coeff * expand(depth + 1, cols[:pos] + cols[pos + 1:])
                total = total - term if negate else total + term
            negate = not negate
        memo[cols] = total
        return total

    return expand(0, tuple(range(n)))


def det_bareiss(m: ExactMatrix) -> Rational:
    """Determinant by fraction-free elimination with row pivoting.

    Pivots on the first nonzero entry in each column, counting swaps for
    the sign.  Every intermediate division is exact by construction: on
    integer input all intermediates stay integral (asserted in debug
    runs).
    """
    _require_square(m, "det_bareiss")
    a = [list(row) for row in m.entries]
    n = len(a)
    integral = __debug__ and all(e.denominator == 1 for row in a for e in row)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            head = row_i[k]
            for j in range(k + 1, n):
                value = (pivot * row_i[j] - head * row_k[j]) / prev
                if integral:
                    assert value.denominator == 1, "fraction-free step divided unevenly"
                row_i[j] = value
            row_i[k] = Fraction(0)
        prev = pivot
    result = a[n - 1][n - 1]
    return result if sign > 0 else -result


def _require_square(m: ExactMatrix, where: str) -> None:
    if not m.is_square:
        raise ValueError(f"{where} needs a square matrix, got {m.n_rows}x{m.n_cols}")
