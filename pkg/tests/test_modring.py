import math
import random

import pytest

from bchbound.errors import NotCoprime
from bchbound.modring import (
    coset_closure,
    cyclotomic_coset,
    cyclotomic_cosets,
    is_coset_closed,
    multiplicative_order,
    representative_set,
    solve_linear_congruence,
    totient,
)


def test_cosets_n21_q2():
    part = cyclotomic_cosets(21, 2)
    assert [list(c) for c in part.cosets] == [
        [0], [1, 2, 4, 8, 11, 16], [3, 6, 12], [5, 10, 13, 17, 19, 20],
        [7, 14], [9, 15, 18],
    ]
    assert part.representatives == (0, 1, 3, 5, 7, 9)
    assert part.coset_of(11) == (1, 2, 4, 8, 11, 16)


def test_cosets_partition_zn():
    for n, q in [(15, 2), (21, 2), (11, 3), (26, 5), (31, 2)]:
        part = cyclotomic_cosets(n, q)
        union = [i for c in part.cosets for i in c]
        assert sorted(union) == list(range(n))


def test_coset_regenerates_from_any_member():
    for n, q in [(21, 2), (11, 3)]:
        for c in cyclotomic_cosets(n, q).cosets:
            for a in c:
                assert cyclotomic_coset(a, n, q) == c


def test_representative_set_n21():
    reps = representative_set(cyclotomic_cosets(21, 2))
    assert sorted(reps.members) == [1, 5]
    assert reps.order == 6
    assert len(reps.members) * reps.order == totient(21)


def test_representative_set_counts():
    # phi(n) / ord_n(q) representatives coprime to n
    for n, q in [(15, 2), (31, 2), (45, 2), (11, 3)]:
        reps = representative_set(cyclotomic_cosets(n, q))
        assert len(reps.members) * reps.order == totient(n)
        assert all(math.gcd(a, n) == 1 for a in reps.members)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 15) == 4
    assert multiplicative_order(2, 41) == 20
    assert multiplicative_order(3, 11) == 5
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 12)


def test_totient():
    known = {1: 1, 2: 1, 9: 6, 15: 8, 21: 12, 45: 24, 97: 96}
    for n, value in known.items():
        assert totient(n) == value


def test_closure_and_closedness():
    d = coset_closure([1, 3, 7], 21, 2)
    assert d == frozenset({1, 2, 3, 4, 6, 7, 8, 11, 12, 14, 16})
    assert is_coset_closed(d, 21, 2)
    assert not is_coset_closed({1, 2}, 21, 2)
    assert is_coset_closed(frozenset(), 21, 2)


def test_solve_linear_congruence_random():
    rng = random.Random(901)
    for _ in range(300):
        m = rng.randrange(2, 60)
        a = rng.randrange(m)
        b = rng.randrange(m)
        x = solve_linear_congruence(a, b, m)
        brute = [y for y in range(m) if (a * y - b) % m == 0]
        if x is None:
            assert brute == []
        else:
            assert x in brute
            assert x == min(brute)
