"""Cyclic-code model: defining sets, generators, idempotents, BCH windows.

A CyclicCode is immutable and caches its generator polynomial, idempotent
generator and dimension eagerly, so instances can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ImproperCode, NotCosetClosed
from .galois import RootOfUnity
from .modring import coset_closure, cyclotomic_cosets, is_coset_closed, representative_set
from .polyring import Poly, QuotientPoly, minimal_polynomial
from .spectral import idft, indicator_spectrum


@dataclass(frozen=True)
class CyclicCode:
    """A cyclic code of length n over GF(q), fixed by its defining set."""

    n: int
    q: int
    root: RootOfUnity
    defining_set: frozenset
    generator: Poly = field(compare=False)
    idempotent: QuotientPoly = field(compare=False)

    @property
    def dimension(self):
        return self.n - len(self.defining_set)

    @property
    def spec(self):
        return self.root.spec

    def complement(self):
        return frozenset(range(self.n)) - self.defining_set

    def contains(self, c: QuotientPoly) -> bool:
        """Membership via zeros: c(alpha^i) = 0 for every i in the set."""
        poly = c.to_poly()
        return all(poly.eval(self.root.pow(i)).val == 0 for i in self.defining_set)

    def json_record(self):
        rec = {
            "n": self.n,
            "q": self.q,
            "field_poly": sorted((i for i, c in enumerate(self.spec.modulus) if c),
                                 reverse=True),
            "defining_set": sorted(self.defining_set),
            "dimension": self.dimension,
            "generator_poly": self.generator.exponents(),
            "idempotent": sorted(self.idempotent.support()),
        }
        return rec


@dataclass(frozen=True)
class BchSpec:
    """A BCH code B_q(alpha, delta, b) together with its window parameters."""

    root: RootOfUnity
    delta: int
    b: int
    code: CyclicCode

    def window(self):
        n = self.code.n
        return tuple((self.b + j) % n for j in range(self.delta - 1))


def code_from_defining_set(n: int, q: int, root: RootOfUnity, d_set) -> CyclicCode:
    """Build the code with D_alpha(C) = d_set, caching generator and idempotent."""
    d = frozenset(i % n for i in d_set)
    if not is_coset_closed(d, n, q):
        raise NotCosetClosed(f"{sorted(d)} is not a union of {q}-cosets mod {n}")
    if len(d) == n:
        raise ImproperCode("defining set is all of Z_n")
    spec = root.spec
    gen = Poly.one(spec)
    for coset in cyclotomic_cosets(n, q).cosets:
        if coset[0] in d:
            gen = gen * minimal_polynomial(root, coset[0], q)
    e = idft(indicator_spectrum(n, d, root, q))
    e.int_coeffs()  # the idempotent must land in the base field
    return CyclicCode(n, q, root, d, gen, e)


def idempotent_generator(code: CyclicCode) -> QuotientPoly:
    return code.idempotent


def bch_code(root: RootOfUnity, delta: int, b: int, q: int | None = None) -> BchSpec:
    """B_q(alpha, delta, b): closure of the window {b, ..., b + delta - 2}."""
    n = root.n
    if q is None:
        q = root.spec.p
    if not 2 <= delta <= n:
        raise ValueError("designed distance must satisfy 2 <= delta <= n")
    window = [(b + j) % n for j in range(delta - 1)]
    d = coset_closure(window, n, q)
    code = code_from_defining_set(n, q, root, d)
    return BchSpec(root, delta, b % n, code)


def bose_distance(code: CyclicCode):
    """Largest delta' with C = B_q(alpha', delta', b'); None when not BCH.

    Scans every representative a in A(n) (root change alpha -> beta with
    beta^a = alpha maps D to a*D) and every window start b.
    """
    n, q = code.n, code.q
    reps = representative_set(cyclotomic_cosets(n, q)).members
    best = None
    for a in reps:
        d_a = frozenset(a * i % n for i in code.defining_set)
        for b in range(n):
            length = 0
            window = []
            while length < n and (b + length) % n in d_a:
                window.append((b + length) % n)
                length += 1
                if coset_closure(window, n, q) == d_a:
                    if best is None or length + 1 > best:
                        best = length + 1
    return best
