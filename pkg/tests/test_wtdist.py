import random

import pytest

from bchbound import wtdist
from bchbound.codes import code_from_defining_set
from bchbound.galois import build_field, nth_root
from bchbound.modring import coset_closure, cyclotomic_cosets
from bchbound.wtdist import generator_rows, min_distance, witness_in_code


def _code(n, q, reps, m):
    root = nth_root(build_field(q, m), n)
    d = coset_closure(reps, n, q)
    return code_from_defining_set(n, q, root, d)


def test_known_binary_distances():
    # classical parameters: Hamming, punctured RM, BCH
    cases = [
        ((7, 2, [1], 3), (4, 3)),     # [7,4,3] Hamming
        ((7, 2, [0, 1], 3), (3, 4)),  # even-weight subcode
        ((15, 2, [1, 3], 4), (7, 5)), # two-error-correcting BCH
        ((15, 2, [1], 4), (11, 3)),
        ((23, 2, [1], 11), (12, 7)),  # binary Golay
    ]
    for (n, q, reps, m), (dim, dist) in cases:
        code = _code(n, q, reps, m)
        res = min_distance(code)
        assert (code.dimension, res.distance) == (dim, dist)
        assert res.exhaustive


def test_ternary_golay():
    code = _code(11, 3, [1], 5)
    res = min_distance(code)
    assert (code.dimension, res.distance) == (6, 5)
    assert res.exhaustive
    assert witness_in_code(code, res)


def test_witness_membership_random():
    rng = random.Random(88)
    for n, m in [(15, 4), (21, 6)]:
        reps = cyclotomic_cosets(n, 2).representatives
        for _ in range(8):
            chosen = [r for r in reps if rng.random() < 0.5]
            d = coset_closure(chosen, n, 2)
            if not d or len(d) == n:
                continue
            code = _code(n, 2, chosen, m)
            res = min_distance(code)
            assert witness_in_code(code, res)
            assert sum(1 for c in res.witness if c) == res.distance


def test_kernel_and_python_agree():
    rng = random.Random(89)
    for n, m in [(15, 4), (17, 8), (21, 6)]:
        reps = cyclotomic_cosets(n, 2).representatives
        for _ in range(5):
            chosen = [r for r in reps if rng.random() < 0.5]
            d = coset_closure(chosen, n, 2)
            if not d or len(d) == n:
                continue
            code = _code(n, 2, chosen, m)
            fast = min_distance(code)
            slow = min_distance(code, force_python=True)
            assert fast.distance == slow.distance
            assert fast.enumerated == slow.enumerated


def test_generator_rows_shape():
    code = _code(15, 2, [1, 3], 4)
    rows = generator_rows(code)
    assert len(rows) == code.dimension


def test_stop_at_early_exit_is_consistent():
    code = _code(15, 2, [0, 5, 7], 4)   # dim 7 code with d = 5
    full = min_distance(code)
    early = min_distance(code, stop_at=full.distance)
    assert early.distance == full.distance
    assert early.enumerated <= full.enumerated
    assert early.exhaustive


def test_cap_limits_enumeration():
    code = _code(23, 2, [1], 11)        # 2^12 codewords
    res = min_distance(code, cap=100)
    assert not res.exhaustive
    assert res.enumerated <= 100
    assert res.distance >= 7            # an upper-bound estimate, never below d


def test_compiled_kernel_flag_is_bool():
    assert isinstance(wtdist.HAVE_COMPILED_KERNEL, bool)
