import pytest

from bchbound.codes import bose_distance
from bchbound.errors import NotIrreducible, NotRational
from bchbound.forge import (
    congruence_construct,
    construct_from_divisor,
    extend_to_bch,
    find_shift,
    primitive_family,
    record_for_bch,
)
from bchbound.modring import totient
from bchbound.polyring import Poly, factor_xn
from bchbound.wtdist import min_distance


def _quotients(root, n):
    factors = factor_xn(n, root)
    xn1 = Poly.xn_minus_1(root.spec, n)
    return factors, xn1


def test_n15_divisor_table(root15):
    factors, xn1 = _quotients(root15, 15)
    expected = {
        5: (1, 10, 2, {5, 10}),
        1: (1, 8, 4, {7, 11, 13, 14}),
        7: (3, 8, 4, {1, 2, 4, 8}),
    }
    for rep, (k, dim, delta, word) in expected.items():
        g = xn1 // factors.factor_for_coset_rep(rep)
        assert find_shift(g, root15) == k
        rec = construct_from_divisor(g, k, root15).verify()
        assert (rec.dimension, rec.bch_bound) == (dim, delta)
        assert rec.generator_word.support() == word
        assert rec.verified
    # the factor with coset C(3) admits no rational shift at all
    g5 = xn1 // factors.factor_for_coset_rep(3)
    assert find_shift(g5, root15) is None
    with pytest.raises(NotRational):
        construct_from_divisor(g5, 0, root15)


def test_n15_product_divisor(root15):
    factors, _ = _quotients(root15, 15)
    h = (factors.factor_for_coset_rep(5) * factors.factor_for_coset_rep(1)
         * factors.factor_for_coset_rep(3))
    rec = construct_from_divisor(h, 0, root15).verify()
    assert (rec.dimension, rec.bch_bound) == (7, 5)


def test_n21_divisor_table(root21):
    factors, xn1 = _quotients(root21, 21)
    expected = [(7, 1, 14, 2), (3, 0, 12, 3), (9, 3, 12, 3),
                (5, 1, 8, 6), (1, 5, 8, 6)]
    for rep, k, dim, delta in expected:
        g = xn1 // factors.factor_for_coset_rep(rep)
        assert find_shift(g, root21) == k
        rec = construct_from_divisor(g, k, root21).verify()
        assert (rec.dimension, rec.bch_bound) == (dim, delta)


def test_congruence_route(root15):
    factors, _ = _quotients(root15, 15)
    # h = x^2 + x + 1 (coset C(5)) satisfies the congruence at j = 5
    h = factors.factor_for_coset_rep(5)
    rec = congruence_construct(h, 5, root15)
    assert rec is not None
    assert rec.source == "congruence"
    assert rec.verify().verified
    # the degree-4 factor with coset C(3) fails the divisibility condition
    assert congruence_construct(factors.factor_for_coset_rep(3), 3,
                                root15) is None


def test_congruence_rejects_non_factor(root15):
    bad = Poly.from_ints(root15.spec, [1, 1, 0, 1])  # irreducible, not | x^15-1
    with pytest.raises(NotIrreducible):
        congruence_construct(bad, 1, root15)


def test_primitive_family_counts():
    for m, want in [(2, 1), (4, 2), (5, 6)]:
        records = primitive_family(m)
        n = (1 << m) - 1
        assert len(records) == want == totient(n) // m
        for rec in records:
            assert rec.bch_bound == n - rec.divisor.degree
            assert rec.verify().verified


def test_extend_to_bch_n15(root15):
    factors, xn1 = _quotients(root15, 15)
    g3 = xn1 // factors.factor_for_coset_rep(1)
    specs = extend_to_bch(g3, 1, root15)
    assert [(s.b, s.delta, s.code.dimension) for s in specs] == [(13, 4, 10)]
    g4 = xn1 // factors.factor_for_coset_rep(7)
    specs = extend_to_bch(g4, 3, root15)
    assert [(s.b, s.delta, s.code.dimension) for s in specs] == [(0, 4, 10)]
    g2 = xn1 // factors.factor_for_coset_rep(5)
    specs = extend_to_bch(g2, 1, root15)
    assert [(s.b, s.delta, s.code.dimension) for s in specs] == [
        (0, 2, 14), (3, 2, 11)]


def test_extend_to_bch_n33():
    from bchbound.galois import build_field, root_from_x
    from bchbound.polyring import minimal_polynomial

    root = root_from_x(build_field(2, 10, (1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1)),
                       33)
    g = (minimal_polynomial(root, 1) * minimal_polynomial(root, 3)
         * minimal_polynomial(root, 5))
    base = construct_from_divisor(g, 0, root)
    assert sorted(base.generator_word.support()) == [0, 11, 22]
    specs = extend_to_bch(g, 0, root)
    first = specs[0]
    assert (first.b, first.delta, first.code.dimension) == (31, 3, 23)
    rec = record_for_bch(first)
    assert rec.source == "extension"
    assert min_distance(first.code, stop_at=3).distance == 3


def test_extension_codes_are_bch(root15):
    factors, xn1 = _quotients(root15, 15)
    g = xn1 // factors.factor_for_coset_rep(1)
    for spec in extend_to_bch(g, 1, root15):
        assert bose_distance(spec.code) >= spec.delta
