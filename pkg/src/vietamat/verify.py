"""Randomized verification of the library's identities.

Every identity is checked on independently generated random inputs.
Seeding is splittable and documented: trial t of identity I under master
seed S derives its own RNG from the 64-bit big-endian value of
blake2b("S:I:t", digest_size=8).  Trials are therefore order-independent,
parallelizable, and bit-exactly reproducible for a given seed.

Random node sets draw numerators uniformly from [-B, B] and denominators
from [1, B] (B = coeff_bound), then canonicalize.  Identities that need
distinct nodes resample each collision up to 100 times before giving up.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .calculus import jacobian_det_closed, jacobian_matrix, nodal_basis, wronskian_closed, wronskian_matrix
from .exactdet import det_bareiss, det_laplace, laplace_size_limit
from .matio import serialize_nodes
from .rational import Rational, parse_rational, render_rational
from .structmat import (
    ExactMatrix,
    build_vandermonde,
    build_vieta,
    shift_nodes,
    vandermonde_det_closed,
    vieta_det_closed,
    vieta_extension_poly,
)
from .sympoly import DensePolynomial, NodeSet, elem_sym_all, leave_one_out_table, poly_from_roots

MAX_SEED = 2**64 - 1


class UnknownIdentityError(ValueError):
    """A verify suite was asked for an identity that does not exist."""


class NodeGenerationError(ValueError):
    """Could not draw distinct nodes within the resampling budget."""


@dataclass(frozen=True)
class VerifyConfig:
    """Shared knobs for random input generation."""

    n_lo: int = 1
    n_hi: int = 6
    coeff_bound: int = 50

    def __post_init__(self):
        if not (1 <= self.n_lo <= self.n_hi <= 10):
            raise ValueError(f"n range must satisfy 1 <= lo <= hi <= 10, got {self.n_lo}..{self.n_hi}")
        if self.coeff_bound < 1:
            raise ValueError("coeff bound must be at least 1")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity's randomized trials."""

    identity: str
    trials: int
    failures: int
    seed: int
    first_counterexample: tuple[str, ...] | None
    elapsed_ms: int

    def json_line(self) -> str:
        """Deterministic JSON projection; timing is excluded so reruns
        with the same seed match byte for byte."""
        payload = {
            "identity": self.identity,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
            "first_counterexample": (
                list(self.first_counterexample) if self.first_counterexample is not None else None
            ),
        }
        return json.dumps(payload)


def trial_rng(seed: int, identity: str, trial: int) -> random.Random:
    """Per-trial RNG from the documented counter-splitting rule."""
    digest = hashlib.blake2b(f"{seed}:{identity}:{trial}".encode("ascii"), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def random_rational(rng: random.Random, bound: int) -> Rational:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_node_set(
    rng: random.Random,
    cfg: VerifyConfig,
    *,
    min_n: int = 1,
    cap: int | None = None,
    distinct: bool = False,
) -> NodeSet:
    """Draw a random node set within the config's ranges.

    `min_n` raises the low end for identities that need it (e.g. swaps
    need two nodes); `cap` lowers the high end for expensive oracles.
    """
    hi = cfg.n_hi if cap is None else min(cfg.n_hi, cap)
    lo = max(min_n, min(cfg.n_lo, hi))
    hi = max(lo, hi)
    n = rng.randint(lo, hi)
    if not distinct:
        return NodeSet(tuple(random_rational(rng, cfg.coeff_bound) for _ in range(n)))
    values: list[Rational] = []
    for _ in range(n):
        value = random_rational(rng, cfg.coeff_bound)
        attempts = 0
        while value in values:
            attempts += 1
            if attempts > 100:
                raise NodeGenerationError(
                    f"could not draw {n} distinct nodes with coeff bound {cfg.coeff_bound}"
                )
            value = random_rational(rng, cfg.coeff_bound)
        values.append(value)
    return NodeSet(tuple(values))


def _random_matrix(rng: random.Random, n: int, bound: int) -> ExactMatrix:
    return ExactMatrix(
        tuple(tuple(random_rational(rng, bound) for _ in range(n)) for _ in range(n))
    )


def _distinct_pair(rng: random.Random, n: int) -> tuple[int, int]:
    i = rng.randrange(n)
    j = rng.randrange(n - 1)
    if j >= i:
        j += 1
    return (i, j) if i < j else (j, i)


def _esp_bruteforce(values: tuple[Rational, ...], k: int) -> Rational:
    """Sum over all k-subsets of the product of their elements."""
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for combo in itertools.combinations(values, k):
        term = Fraction(1)
        for v in combo:
            term *= v
        total += term
    return total


def _column_polynomial(table, j: int) -> DensePolynomial:
    """Monic polynomial read off column j with alternating signs."""
    n = table.size
    coeffs = [Fraction(0)] * n
    for k in range(n):
        value = table.entries[k][j]
        coeffs[n - 1 - k] = -value if k % 2 else value
    return DensePolynomial(tuple(coeffs))


# --- identity checks ------------------------------------------------------
# Each check draws its inputs from `rng`, returns None on success, and the
# offending input serialized as rational strings on failure.


def _check_theorem1(rng, cfg):
    """Closed product formula equals both determinant oracles."""
    ns = random_node_set(rng, cfg)
    closed = vieta_det_closed(ns)
    matrix = build_vieta(ns)
    if det_bareiss(matrix) != closed:
        return serialize_nodes(ns)
    if len(ns) <= laplace_size_limit() and det_laplace(matrix) != closed:
        return serialize_nodes(ns)
    return None


def _check_corollary1(rng, cfg):
    """Determinant is invariant under shifting every node by c."""
    ns = random_node_set(rng, cfg)
    c = random_rational(rng, cfg.coeff_bound)
    shifted = shift_nodes(ns, c)
    if vieta_det_closed(shifted) != vieta_det_closed(ns):
        return serialize_nodes(ns)
    if det_bareiss(build_vieta(shifted)) != det_bareiss(build_vieta(ns)):
        return serialize_nodes(ns)
    return None


def _check_sign_bridge(rng, cfg):
    """The two product orientations differ by (-1)^{n(n-1)/2}."""
    ns = random_node_set(rng, cfg)
    n = len(ns)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if vieta_det_closed(ns) != sign * vandermonde_det_closed(ns):
        return serialize_nodes(ns)
    return None


def _check_antisymmetry(rng, cfg):
    """Swapping two nodes negates the determinant and swaps two columns."""
    ns = random_node_set(rng, cfg, min_n=2)
    i, j = _distinct_pair(rng, len(ns))
    swapped_nodes = list(ns.nodes)
    swapped_nodes[i], swapped_nodes[j] = swapped_nodes[j], swapped_nodes[i]
    swapped = NodeSet(tuple(swapped_nodes))
    if vieta_det_closed(swapped) != -vieta_det_closed(ns):
        return serialize_nodes(ns)
    matrix = build_vieta(ns)
    swapped_matrix = build_vieta(swapped)
    for row, srow in zip(matrix.entries, swapped_matrix.entries):
        permuted = list(row)
        permuted[i], permuted[j] = permuted[j], permuted[i]
        if tuple(permuted) != srow:
            return serialize_nodes(ns)
    if det_bareiss(swapped_matrix) != -det_bareiss(matrix):
        return serialize_nodes(ns)
    return None


def _check_extension(rng, cfg):
    """Appending a probe node matches the degree-n extension polynomial."""
    ns = random_node_set(rng, cfg, cap=6, distinct=True)
    f = vieta_extension_poly(ns)
    for _ in range(3):
        x0 = random_rational(rng, cfg.coeff_bound)
        extended = NodeSet(ns.nodes + (x0,))
        if det_bareiss(build_vieta(extended)) != f(x0):
            return serialize_nodes(ns)
    return None


def _check_degenerate(rng, cfg):
    """Repeated nodes force determinant 0; two zeros zero the last row."""
    ns = random_node_set(rng, cfg, min_n=2)
    nodes = list(ns.nodes)
    i, j = _distinct_pair(rng, len(nodes))
    if rng.random() < 0.5:
        nodes[j] = nodes[i]
    else:
        nodes[i] = Fraction(0)
        nodes[j] = Fraction(0)
    degenerate = NodeSet(tuple(nodes))
    matrix = build_vieta(degenerate)
    if vieta_det_closed(degenerate) != 0 or det_bareiss(matrix) != 0:
        return serialize_nodes(degenerate)
    if nodes.count(Fraction(0)) >= 2 and any(e != 0 for e in matrix.entries[-1]):
        return serialize_nodes(degenerate)
    return None


def _check_recombination(rng, cfg):
    """Column j times (x - a_j) rebuilds the full root polynomial."""
    ns = random_node_set(rng, cfg, distinct=True)
    table = leave_one_out_table(ns)
    full = poly_from_roots(ns)
    for j in range(len(ns)):
        factor = DensePolynomial.of(-ns[j], 1)
        if _column_polynomial(table, j) * factor != full:
            return serialize_nodes(ns)
    return None


def _check_permutation(rng, cfg):
    """Permuting nodes permutes table columns and fixes all e_k."""
    ns = random_node_set(rng, cfg)
    n = len(ns)
    sigma = list(range(n))
    rng.shuffle(sigma)
    permuted = NodeSet(tuple(ns[sigma[j]] for j in range(n)))
    if elem_sym_all(permuted) != elem_sym_all(ns):
        return serialize_nodes(ns)
    table = leave_one_out_table(ns)
    permuted_table = leave_one_out_table(permuted)
    for j in range(n):
        if permuted_table.column(j) != table.column(sigma[j]):
            return serialize_nodes(ns)
    return None


def _check_leave_one_out(rng, cfg):
    """Table entries equal brute-force sums over k-subsets."""
    ns = random_node_set(rng, cfg, cap=8)
    table = leave_one_out_table(ns)
    for j in range(len(ns)):
        rest = ns.without(j)
        for k in range(len(ns)):
            if table.entries[k][j] != _esp_bruteforce(rest, k):
                return serialize_nodes(ns)
    return None


def _check_wronskian(rng, cfg):
    """Wronskian determinant is probe-independent and matches the
    factorial-scaled closed form."""
    ns = random_node_set(rng, cfg, cap=6, distinct=True)
    basis = nodal_basis(ns)
    closed = wronskian_closed(ns)
    for _ in range(3):
        x0 = random_rational(rng, cfg.coeff_bound)
        if det_bareiss(wronskian_matrix(basis, x0)) != closed:
            return serialize_nodes(ns)
    return None


def _check_jacobian(rng, cfg):
    """Jacobian matrix is the e_k grid; determinant matches the closed
    form; every partial equals its symmetric difference quotient."""
    point = random_node_set(rng, cfg, cap=8)
    n = len(point)
    matrix = jacobian_matrix(point)
    if matrix.entries != build_vieta(point).entries:
        return serialize_nodes(point)
    if det_bareiss(matrix) != jacobian_det_closed(point):
        return serialize_nodes(point)
    h = Fraction(1, 7)
    for c in range(n):
        plus = list(point.nodes)
        minus = list(point.nodes)
        plus[c] += h
        minus[c] -= h
        e_plus = elem_sym_all(NodeSet(tuple(plus)))
        e_minus = elem_sym_all(NodeSet(tuple(minus)))
        for r in range(1, n + 1):
            # e_r is degree <= 1 in each coordinate, so the symmetric
            # quotient is the exact partial, not an approximation
            if (e_plus[r] - e_minus[r]) / (2 * h) != matrix.entries[r - 1][c]:
                return serialize_nodes(point)
    return None


def _check_oracle_agreement(rng, cfg):
    """Cofactor expansion and fraction-free elimination agree on random
    matrices.  Counterexamples serialize the entries row-major."""
    hi = max(1, min(cfg.n_hi, 6))
    n = rng.randint(min(cfg.n_lo, hi), hi)
    matrix = _random_matrix(rng, n, cfg.coeff_bound)
    if det_laplace(matrix) != det_bareiss(matrix):
        return tuple(render_rational(e) for row in matrix.entries for e in row)
    return None


def _check_multilinearity(rng, cfg):
    """Row scaling scales, row swaps negate, det(I) = 1, duplicate rows
    give 0 — for both oracles.  Counterexamples serialize row-major."""
    hi = max(2, min(cfg.n_hi, 6))
    n = rng.randint(max(2, min(cfg.n_lo, hi)), hi)
    matrix = _random_matrix(rng, n, cfg.coeff_bound)
    flat = tuple(render_rational(e) for row in matrix.entries for e in row)
    base_l, base_b = det_laplace(matrix), det_bareiss(matrix)

    s = random_rational(rng, cfg.coeff_bound)
    r = rng.randrange(n)
    scaled = ExactMatrix(
        tuple(tuple(s * e for e in row) if idx == r else row for idx, row in enumerate(matrix.entries))
    )
    if det_laplace(scaled) != s * base_l or det_bareiss(scaled) != s * base_b:
        return flat

    i, j = _distinct_pair(rng, n)
    rows = list(matrix.entries)
    rows[i], rows[j] = rows[j], rows[i]
    swapped = ExactMatrix(tuple(rows))
    if det_laplace(swapped) != -base_l or det_bareiss(swapped) != -base_b:
        return flat

    eye = ExactMatrix(tuple(tuple(Fraction(int(p == q)) for q in range(n)) for p in range(n)))
    if det_laplace(eye) != 1 or det_bareiss(eye) != 1:
        return flat

    rows = list(matrix.entries)
    rows[j] = rows[i]
    duplicated = ExactMatrix(tuple(rows))
    if det_laplace(duplicated) != 0 or det_bareiss(duplicated) != 0:
        return flat
    return None


def _check_roundtrip(rng, cfg):
    """parse(render(r)) is the identity, at small and huge magnitudes."""
    for _ in range(4):
        r = random_rational(rng, cfg.coeff_bound)
        if parse_rational(render_rational(r)) != r:
            return (render_rational(r),)
    for _ in range(4):
        numerator = rng.getrandbits(128) * rng.choice((-1, 1))
        denominator = rng.getrandbits(96) + 1
        r = Fraction(numerator, denominator)
        if parse_rational(render_rational(r)) != r:
            return (render_rational(r),)
    return None


IDENTITIES = {
    "theorem1": _check_theorem1,
    "corollary1": _check_corollary1,
    "sign_bridge": _check_sign_bridge,
    "antisymmetry": _check_antisymmetry,
    "extension": _check_extension,
    "degenerate": _check_degenerate,
    "recombination": _check_recombination,
    "permutation": _check_permutation,
    "leave_one_out": _check_leave_one_out,
    "wronskian": _check_wronskian,
    "jacobian": _check_jacobian,
    "oracle_agreement": _check_oracle_agreement,
    "multilinearity": _check_multilinearity,
    "roundtrip": _check_roundtrip,
}


def identity_names() -> tuple[str, ...]:
    return tuple(IDENTITIES)


def run_identity(name: str, trials: int, seed: int, cfg: VerifyConfig) -> VerifyReport:
    """Run one identity's randomized trials and aggregate a report."""
    try:
        check = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}"
        ) from None
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not (0 <= seed <= MAX_SEED):
        raise ValueError("seed must be an unsigned 64-bit integer")
    failures = 0
    first_counterexample: tuple[str, ...] | None = None
    start = time.perf_counter()
    for trial in range(trials):
        counterexample = check(trial_rng(seed, name, trial), cfg)
        if counterexample is not None:
            failures += 1
            if first_counterexample is None:
                first_counterexample = counterexample
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return VerifyReport(name, trials, failures, seed, first_counterexample, elapsed_ms)


def run_suite(names, trials: int, seed: int, cfg: VerifyConfig) -> list[VerifyReport]:
    """Run a list of identities, or every identity for "all"."""
    if names == "all" or names == ["all"]:
        selected = list(IDENTITIES)
    else:
        selected = list(names)
        for name in selected:
            if name not in IDENTITIES:
                raise UnknownIdentityError(
                    f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}"
                )
    return [run_identity(name, trials, seed, cfg) for name in selected]
