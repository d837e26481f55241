"""Exact minimum distance by exhaustive codeword enumeration.

Ground truth for every d(C) claim.  Binary codes walk the information-word
space in Gray order over packed generator rows; the hot loop runs in the
compiled extension when available and in a pure-Python twin otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import CyclicCode
from .polyring import QuotientPoly

try:
    from . import _graywalk as _kernel
    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _graywalk_py as _kernel
    HAVE_COMPILED_KERNEL = False

from . import _graywalk_py as _pykernel

DEFAULT_CAP = 1 << 30


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    witness: tuple  # coefficient vector over GF(q), length n
    enumerated: int
    exhaustive: bool


def generator_rows(code: CyclicCode):
    """k shift-rows of the generator polynomial, as prime-field int vectors."""
    g = code.generator.int_coeffs()
    n, k = code.n, code.dimension
    rows = []
    for i in range(k):
        row = [0] * n
        for j, c in enumerate(g):
            row[(i + j) % n] = c
        rows.append(row)
    return rows


def min_distance(code: CyclicCode, cap: int = DEFAULT_CAP,
                 stop_at: int = 0, force_python: bool = False) -> DistanceResult:
    """Enumerate all q^k - 1 nonzero codewords, tracking minimum weight.

    When q^k - 1 exceeds the cap the walk is truncated and the result is an
    upper bound only (exhaustive=False).  A nonzero stop_at ends the walk as
    soon as a codeword of weight <= stop_at is found; this is exact whenever
    stop_at is a proven lower bound such as the BCH bound.
    """
    n, k, q = code.n, code.dimension, code.q
    if k < 1:
        raise ValueError("dimension must be >= 1")
    if q == 2:
        return _min_distance_binary(code, cap, stop_at, force_python)
    return _min_distance_generic(code, cap, stop_at)


def _min_distance_binary(code, cap, stop_at, force_python):
    n, k = code.n, code.dimension
    rows = [sum(c << i for i, c in enumerate(row)) for row in generator_rows(code)]
    total = (1 << k) - 1
    limit = min(total, cap)
    kernel = _pykernel if (force_python or n > 63) else _kernel
    best, word, visited = kernel.gray_min_weight(rows, limit, stop_at)
    witness = tuple((word >> i) & 1 for i in range(n))
    exhaustive = visited >= total or (stop_at and best <= stop_at)
    return DistanceResult(best, witness, visited, bool(exhaustive))


def _min_distance_generic(code, cap, stop_at):
    n, k, q = code.n, code.dimension, code.q
    rows = generator_rows(code)
    best = n + 1
    witness = None
    visited = 0
    exhaustive = True
    for info in itertools.product(range(q), repeat=k):
        if not any(info):
            continue
        if visited >= cap:
            exhaustive = False
            break
        visited += 1
        word = [0] * n
        for coef, row in zip(info, rows):
            if coef:
                for i, c in enumerate(row):
                    word[i] = (word[i] + coef * c) % q
        w = sum(1 for c in word if c)
        if w < best:
            best = w
            witness = tuple(word)
            if stop_at and w <= stop_at:
                break
    return DistanceResult(best, witness, visited,
                          exhaustive or bool(stop_at and best <= stop_at))


def witness_in_code(code: CyclicCode, result: DistanceResult) -> bool:
    """Sanity check: the witness is a codeword (spectrum support avoids D)."""
    qp = QuotientPoly.from_ints(code.spec, code.n, result.witness)
    return code.contains(qp)
