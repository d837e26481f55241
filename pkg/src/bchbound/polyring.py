"""Polynomials over an extension field and the quotient ring F[x]/(x^n - 1).

Everything is computed with coefficients in the big field L; base-field or
intermediate-field polynomials are recognized through the Frobenius-fixed
subfield test rather than by carrying separate coefficient types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    CoefficientLeak,
    NotCoprime,
    ZeroPolynomial,
)
from .galois import FieldElement, FieldSpec, RootOfUnity, in_subfield
from .modring import cyclotomic_cosets


class Poly:
    """Dense polynomial over a FieldSpec, little-endian, no trailing zeros."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        # plain ints are packed field values, not prime-field integers
        vals = [c.val if isinstance(c, FieldElement) else c for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.spec = spec
        self.coeffs = tuple(vals)

    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def one(cls, spec):
        return cls(spec, (1,))

    @classmethod
    def from_ints(cls, spec, ints):
        """Coefficients given as prime-field integers."""
        return cls(spec, [i % spec.p for i in ints])

    @classmethod
    def xn_minus_1(cls, spec, n):
        c = [0] * (n + 1)
        c[0] = spec.neg(1)
        c[n] = 1
        return cls(spec, c)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        return FieldElement(self.spec, self.coeffs[i] if i < len(self.coeffs) else 0)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.spec.p, self.spec.m))

    def __add__(self, other):
        s = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(s, [s.add(self.coeffs[i] if i < len(self.coeffs) else 0,
                              other.coeffs[i] if i < len(other.coeffs) else 0)
                        for i in range(n)])

    def __sub__(self, other):
        s = self.spec
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(s, [s.sub(self.coeffs[i] if i < len(self.coeffs) else 0,
                              other.coeffs[i] if i < len(other.coeffs) else 0)
                        for i in range(n)])

    def __mul__(self, other):
        s = self.spec
        if self.is_zero() or other.is_zero():
            return Poly.zero(s)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = s.add(out[i + j], s.mul(a, b))
        return Poly(s, out)

    def scale(self, c: int):
        s = self.spec
        return Poly(s, [s.mul(a, c) for a in self.coeffs])

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        s = self.spec
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = s.inv(other.coeffs[-1])
        quot = [0] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and rem:
            c = s.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - dd
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                rem[i + shift] = s.sub(rem[i + shift], s.mul(c, oc))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(s, quot), Poly(s, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.spec.inv(self.coeffs[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, point: FieldElement) -> FieldElement:
        s = self.spec
        acc = 0
        for c in reversed(self.coeffs):
            acc = s.add(s.mul(acc, point.val), c)
        return FieldElement(s, acc)

    def support(self):
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def weight(self):
        return sum(1 for c in self.coeffs if c)

    def int_coeffs(self):
        """Coefficients as prime-field integers; CoefficientLeak otherwise."""
        out = []
        for c in self.coeffs:
            e = FieldElement(self.spec, c)
            if not in_subfield(e, 1):
                raise CoefficientLeak(f"coefficient {e!r} outside the prime field")
            out.append(_prime_value(e))
        return out

    def exponents(self):
        """Ascending exponents of the nonzero terms (CLI serialization)."""
        return sorted(self.support())

    def __repr__(self):
        from .galois import poly_str
        try:
            return f"Poly({poly_str(self.int_coeffs())})"
        except CoefficientLeak:
            return f"Poly(deg {self.degree} over GF({self.spec.p}^{self.spec.m}))"


def _prime_value(e: FieldElement) -> int:
    # A prime-field constant packs as its own integer value for any p.
    return e.val % e.spec.p if e.spec.m >= 1 else e.val


@dataclass(frozen=True)
class QuotientPoly:
    """Element of L[x]/(x^n - 1): a fixed-length coefficient vector."""

    n: int
    spec: FieldSpec
    coeffs: tuple  # length n, packed int values

    @classmethod
    def from_poly(cls, p: Poly, n: int):
        if p.degree >= n:
            p = p % Poly.xn_minus_1(p.spec, n)
        c = list(p.coeffs) + [0] * (n - len(p.coeffs))
        return cls(n, p.spec, tuple(c))

    @classmethod
    def from_ints(cls, spec, n, ints):
        c = [i % spec.p for i in ints] + [0] * (n - len(ints))
        return cls(n, spec, tuple(c[:n]))

    def to_poly(self) -> Poly:
        return Poly(self.spec, self.coeffs)

    def support(self):
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def weight(self):
        return sum(1 for c in self.coeffs if c)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        s = self.spec
        return QuotientPoly(self.n, s, tuple(
            s.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        prod = self.to_poly() * other.to_poly()
        return QuotientPoly.from_poly(prod, self.n)

    def int_coeffs(self):
        return QuotientPoly._int_coeffs(self)

    @staticmethod
    def _int_coeffs(qp):
        out = []
        for c in qp.coeffs:
            e = FieldElement(qp.spec, c)
            if not in_subfield(e, 1):
                raise CoefficientLeak(f"coefficient {e!r} outside the prime field")
            out.append(_prime_value(e))
        return out


def cyclic_shift(f: QuotientPoly, h: int) -> QuotientPoly:
    """Residue of x^h * f modulo x^n - 1 (coefficient rotation)."""
    n = f.n
    h %= n
    c = f.coeffs
    return QuotientPoly(n, f.spec, c[n - h:] + c[:n - h])


def gcd_with_xn(f: QuotientPoly) -> Poly:
    """m_f = gcd(f, x^n - 1), monic; invariant under cyclic shifts of f."""
    if f.is_zero():
        raise ZeroPolynomial("gcd_with_xn of the zero polynomial")
    return f.to_poly().gcd(Poly.xn_minus_1(f.spec, f.n))


def minimal_polynomial(root: RootOfUnity, s: int, q: int | None = None) -> Poly:
    """min_q(alpha^s) = prod over the q-coset of s of (x - alpha^j).

    Computed in L; every coefficient is verified to lie in GF(q) (q prime).
    """
    spec = root.spec
    if q is None:
        q = spec.p
    from .modring import cyclotomic_coset
    coset = cyclotomic_coset(s, root.n, q)
    out = Poly.one(spec)
    for j in coset:
        aj = root.pow(j)
        out = out * Poly(spec, [spec.neg(aj.val), 1])
    out.int_coeffs()  # raises CoefficientLeak on a wrong field setup
    return out


@dataclass(frozen=True)
class FactorList:
    """Irreducible factors of x^n - 1 over GF(p^d), with their root cosets."""

    n: int
    spec: FieldSpec
    subfield_degree: int
    factors: tuple  # tuple of (Poly, frozenset root-exponent coset)

    def full_product(self) -> Poly:
        out = Poly.one(self.spec)
        for f, _ in self.factors:
            out = out * f
        return out

    def factor_for_coset_rep(self, rep: int) -> Poly:
        for f, coset in self.factors:
            if rep % self.n in coset:
                return f
        raise KeyError(rep)


def factor_xn(n: int, root: RootOfUnity, subfield_degree: int = 1) -> FactorList:
    """Factor x^n - 1 over GF(p^d) via root-coset grouping, d | m."""
    spec = root.spec
    p = spec.p
    if n % p == 0:
        raise NotCoprime(f"gcd({n}, {p}) > 1")
    if spec.m % subfield_degree != 0:
        from .errors import InvalidSubfield
        raise InvalidSubfield(f"{subfield_degree} does not divide {spec.m}")
    qd = p ** subfield_degree
    part = cyclotomic_cosets(n, qd)
    factors = []
    for coset in part.cosets:
        f = Poly.one(spec)
        for j in coset:
            aj = root.pow(j)
            f = f * Poly(spec, [spec.neg(aj.val), 1])
        for c in f.coeffs:
            if not in_subfield(FieldElement(spec, c), subfield_degree):
                raise CoefficientLeak(
                    f"factor coefficient escapes GF({p}^{subfield_degree})")
        factors.append((f, frozenset(coset)))
    factors.sort(key=lambda fc: min(fc[1]))
    return FactorList(n, spec, subfield_degree, tuple(factors))


def divisor_enumerate(factors: FactorList, target_degree: int | None = None,
                      budget: int | None = None):
    """All monic divisors of x^n - 1 as subset products of the factor list.

    Deterministic order: subsets by ascending size, then lexicographic factor
    indices.  Divisors of degree n (x^n - 1 itself) are never emitted.  When
    a budget is given, raises BudgetExceeded after that many emissions.
    """
    n = factors.n
    degs = [f.degree for f, _ in factors.factors]
    count = 0
    for r in range(len(degs) + 1):
        for idxs in itertools.combinations(range(len(degs)), r):
            d = sum(degs[i] for i in idxs)
            if d >= n:
                continue
            if target_degree is not None and d != target_degree:
                continue
            if budget is not None and count >= budget:
                raise BudgetExceeded(f"divisor budget {budget} exhausted")
            count += 1
            prod = Poly.one(factors.spec)
            roots = set()
            for i in idxs:
                prod = prod * factors.factors[i][0]
                roots.update(factors.factors[i][1])
            yield prod, frozenset(roots)
