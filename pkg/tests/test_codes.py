import json

import pytest

from bchbound.codes import (
    bch_code,
    bose_distance,
    code_from_defining_set,
    idempotent_generator,
)
from bchbound.errors import ImproperCode, NotCosetClosed
from bchbound.modring import coset_closure
from bchbound.polyring import QuotientPoly
from bchbound.spectral import dft


def _example_code(root21):
    d = coset_closure([1, 3, 7], 21, 2)
    return code_from_defining_set(21, 2, root21, d)


def test_code_basics(root21):
    code = _example_code(root21)
    assert code.n == 21 and code.q == 2
    assert code.dimension == 10
    assert code.generator.exponents() == [0, 2, 7, 8, 11]
    assert code.generator.degree == len(code.defining_set)
    assert code.complement() == frozenset({0, 5, 9, 10, 13, 15, 17, 18, 19, 20})


def test_generator_defines_the_code(root21):
    code = _example_code(root21)
    gen = QuotientPoly.from_poly(code.generator, 21)
    assert code.contains(gen)
    # shifting and adding keeps membership; the all-ones word is outside
    from bchbound.polyring import cyclic_shift
    assert code.contains(gen + cyclic_shift(gen, 4))
    # a weight-1 word cannot vanish anywhere, so it sits outside the code
    monomial = QuotientPoly.from_ints(code.spec, 21, [1])
    assert not code.contains(monomial)


def test_idempotent_generator(root21):
    code = _example_code(root21)
    e = idempotent_generator(code)
    assert e * e == e
    assert code.contains(e)
    s = dft(e, root21)
    assert s.zero_set() == code.defining_set


def test_defining_set_must_be_closed(root21):
    with pytest.raises(NotCosetClosed):
        code_from_defining_set(21, 2, root21, {1, 2})


def test_improper_code_rejected(root21):
    with pytest.raises(ImproperCode):
        code_from_defining_set(21, 2, root21, frozenset(range(21)))


def test_zero_defining_set_gives_full_space(root21):
    code = code_from_defining_set(21, 2, root21, frozenset())
    assert code.dimension == 21
    assert code.generator.exponents() == [0]


def test_bch_code_window(root15):
    spec = bch_code(root15, 7, 1)
    assert spec.window() == (1, 2, 3, 4, 5, 6)
    assert spec.code.defining_set == coset_closure([1, 3, 5], 15, 2)
    assert spec.code.dimension == 5


def test_bch_code_rejects_bad_delta(root15):
    with pytest.raises(ValueError):
        bch_code(root15, 1, 0)


def test_bose_distance_bch(root15):
    spec = bch_code(root15, 5, 1)
    assert bose_distance(spec.code) >= 5


def test_bose_distance_example(root21):
    # the window {7, 8} closes up to the full defining set, and no longer
    # window does, for either representative
    code = _example_code(root21)
    assert bose_distance(code) == 4


def test_bose_distance_none_for_non_bch(root21):
    d = coset_closure([0, 1, 3, 7, 9], 21, 2)
    code = code_from_defining_set(21, 2, root21, d)
    assert bose_distance(code) is None


def test_json_record_round_trips(root21):
    code = _example_code(root21)
    rec = code.json_record()
    text = json.dumps(rec, indent=2, sort_keys=True)
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) == text
    assert rec["dimension"] == 10
    assert rec["defining_set"] == sorted(code.defining_set)
