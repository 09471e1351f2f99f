"""Wall-clock comparison of determinant routes on seeded random inputs.

For each size n, one node set is drawn (entry magnitudes controlled by a
bit length) and its e_k matrix built once, outside any timer.  Each
requested method then computes the same determinant; records carry a
digest of the canonical result string, so agreement across methods is a
one-line check downstream.

Timings are raw wall-clock per repeat; statistics stay in downstream
tooling.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from fractions import Fraction

from .exactdet import det_bareiss, det_laplace
from .rational import render_rational
from .structmat import ExactMatrix, build_vieta, vieta_det_closed
from .sympoly import NodeSet
from .verify import trial_rng

METHODS = ("closed", "bareiss", "laplace")

CSV_FIELDS = ("method", "n", "entry_bits", "wall_time_ns", "result_hash")


@dataclass(frozen=True)
class BenchRecord:
    """One timed determinant evaluation."""

    method: str
    n: int
    entry_bits: int
    wall_time_ns: int
    result_hash: str

    def csv_row(self) -> str:
        return f"{self.method},{self.n},{self.entry_bits},{self.wall_time_ns},{self.result_hash}"


def result_hash(value) -> str:
    """Digest of the canonical rational text of a determinant."""
    return hashlib.sha256(render_rational(value).encode("ascii")).hexdigest()


def bench_node_set(seed: int, n: int, entry_bits: int) -> NodeSet:
    """Deterministic node set for size n with entry_bits-sized parts."""
    rng = trial_rng(seed, "bench", n)
    top = 2**entry_bits - 1
    return NodeSet(
        tuple(
            Fraction(rng.randint(-top, top), rng.randint(1, top))
            for _ in range(n)
        )
    )


def _evaluate(method: str, ns: NodeSet, matrix: ExactMatrix):
    if method == "closed":
        return vieta_det_closed(ns)
    if method == "bareiss":
        return det_bareiss(matrix)
    if method == "laplace":
        return det_laplace(matrix)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def run_bench(
    n_values: list[int],
    methods: list[str],
    repeats: int = 1,
    entry_bits: int = 16,
    seed: int = 0,
) -> list[BenchRecord]:
    """One record per (n, method, repeat), in that nesting order."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    if entry_bits < 1:
        raise ValueError("entry bits must be at least 1")
    for n in n_values:
        if n < 1:
            raise ValueError("benchmark sizes must be at least 1")
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    records = []
    for n in n_values:
        ns = bench_node_set(seed, n, entry_bits)
        matrix = build_vieta(ns)
        for method in methods:
            for _ in range(repeats):
                start = time.perf_counter_ns()
                value = _evaluate(method, ns, matrix)
                elapsed = time.perf_counter_ns() - start
                records.append(BenchRecord(method, n, entry_bits, elapsed, result_hash(value)))
    return records
