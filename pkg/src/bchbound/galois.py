"""Finite-field tower arithmetic GF(p) <= GF(p^d) <= GF(p^m).

Elements live in a fixed extension GF(p^m) described by a FieldSpec and are
encoded as base-p packed integers (for p = 2 this is simply the coefficient
bitmask).  Arithmetic is plain polynomial-basis arithmetic modulo the field
modulus; no log tables are built, so memory stays bounded for m up to 20.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    InvalidSubfield,
    NoDefaultPolynomial,
    OrderUnavailable,
    RejectedModulus,
)

# Fields bigger than this are outside the design envelope (see README).
MAX_FIELD_ORDER = 1 << 24


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on little-endian int lists (used for modulus validation).
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _polmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        shift = len(a) - 1 - df
        c = a[-1] * inv_lead % p
        for i, fi in enumerate(f):
            a[i + shift] = (a[i + shift] - c * fi) % p
        _trim(a)
    return a


def _polgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _polmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _polpowmod(base, e, f, p):
    result = [1]
    base = _polmod(base, f, p)
    while e:
        if e & 1:
            result = _polmod(_polmul(result, base, p), f, p)
        base = _polmod(_polmul(base, base, p), f, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polsub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _trim(out)


def is_irreducible(modulus, p) -> bool:
    """Distinct-degree test: x^(p^m) = x mod f, no factor of degree m/r."""
    f = _trim(list(modulus))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _polsub(_polpowmod(x, p ** m, f, p), x, p):
        return False
    for r in _prime_factors(m):
        d = _polsub(_polpowmod(x, p ** (m // r), f, p), x, p)
        if len(_polgcd(d, f, p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# FieldSpec and elements.
# ---------------------------------------------------------------------------

class FieldSpec:
    """An explicit GF(p^m) given by a monic irreducible modulus over GF(p).

    Immutable after construction; shareable across threads.  Element values
    are base-p packed integers in [0, p^m).
    """

    __slots__ = ("p", "m", "modulus", "order", "_mod_mask", "_group_factors",
                 "_generator_val", "x_is_primitive", "_inv_cache")

    def __init__(self, p: int, m: int, modulus):
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] == 0:
            raise RejectedModulus(f"modulus must be monic of degree {m}")
        if modulus[-1] != 1:
            inv = pow(modulus[-1], -1, p)
            modulus = tuple(c * inv % p for c in modulus)
        if m > 1 and not is_irreducible(modulus, p):
            raise RejectedModulus(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p ** m
        if p == 2:
            self._mod_mask = sum(c << i for i, c in enumerate(modulus))
        else:
            self._mod_mask = None
        self._group_factors = _prime_factors(self.order - 1) if self.order > 2 else []
        self._generator_val = None
        x_val = self.encode([0, 1]) if m > 1 else (-modulus[0]) % p
        self.x_is_primitive = self.order == 2 or self._has_full_order(x_val)
        self._inv_cache = {}

    # -- encoding ----------------------------------------------------------

    def encode(self, coeffs) -> int:
        """Pack a little-endian coefficient sequence into an element value."""
        val = 0
        for c in reversed(list(coeffs)):
            val = val * self.p + (int(c) % self.p)
        return val

    def decode(self, val: int):
        """Unpack an element value into m coefficients, little-endian."""
        out = []
        for _ in range(self.m):
            out.append(val % self.p)
            val //= self.p
        return tuple(out)

    # -- raw arithmetic on packed values ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.encode(x + y for x, y in zip(self.decode(a), self.decode(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.encode(-x for x in self.decode(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            while a:
                if a & 1:
                    r ^= b
                a >>= 1
                b <<= 1
            mod, m = self._mod_mask, self.m
            bl = r.bit_length()
            while bl > m:
                r ^= mod << (bl - 1 - m)
                bl = r.bit_length()
            return r
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        prod = [c % self.p for c in prod]
        red = _polmod(_trim(prod), list(self.modulus), self.p)
        return self.encode(red + [0] * (self.m - len(red)))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        cached = self._inv_cache.get(a)
        if cached is None:
            cached = self.power(a, self.order - 2)
            if len(self._inv_cache) < 4096:
                self._inv_cache[a] = cached
        return cached

    def _has_full_order(self, val) -> bool:
        if val in (None, 0):
            return False
        for r in self._group_factors:
            if self.power(val, (self.order - 1) // r) == 1:
                return False
        return True

    def generator_value(self) -> int:
        """A verified primitive element (packed value); x-bar when possible."""
        if self._generator_val is None:
            if self.order == 2:
                self._generator_val = 1
            else:
                for cand in range(self.p, self.order):
                    if self._has_full_order(cand):
                        self._generator_val = cand
                        break
                else:  # pragma: no cover - every finite field has a generator
                    raise RejectedModulus("no primitive element found")
        return self._generator_val

    # -- element construction ------------------------------------------------

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, self.encode(coeffs))

    def from_int(self, c: int) -> "FieldElement":
        """Embed an integer as a prime-field constant."""
        return FieldElement(self, c % self.p)

    def x(self) -> "FieldElement":
        """The residue of x, as a field element."""
        if self.m == 1:
            # x reduces to a constant: -modulus[0]
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.encode([0, 1]))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={poly_str(self.modulus)})"


class FieldElement:
    """Value-type element of a FieldSpec."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self):
        return self.spec.decode(self.val)

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.val, other.val))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.val))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.val, other.val))

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.val, self.spec.inv(other.val)))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.power(self.val, e))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.val))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.val == other.val and self.spec == other.spec)

    def __hash__(self):
        return hash((self.val, self.spec.p, self.spec.m))

    def __repr__(self):
        return f"<{self.coeffs} in GF({self.spec.p}^{self.spec.m})>"


@dataclass(frozen=True)
class RootOfUnity:
    """A verified primitive n-th root of unity in its field."""

    element: FieldElement
    n: int

    @property
    def spec(self) -> FieldSpec:
        return self.element.spec

    def pow(self, e: int) -> FieldElement:
        return self.element ** (e % self.n)


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def default_modulus(p: int, m: int):
    """The lexicographically-smallest primitive polynomial for GF(p^m).

    Deterministic replacement for a hardcoded table; cached per (p, m).
    """
    if p ** m > MAX_FIELD_ORDER:
        raise NoDefaultPolynomial(f"p^m = {p ** m} exceeds the {MAX_FIELD_ORDER} cap")
    if m == 1:
        return (1, 1) if p == 2 else ((-_primitive_root_mod_p(p)) % p, 1)
    for packed in range(p ** m, 2 * p ** m):
        coeffs = []
        v = packed
        for _ in range(m + 1):
            coeffs.append(v % p)
            v //= p
        if coeffs[0] == 0:
            continue
        if not is_irreducible(coeffs, p):
            continue
        spec = FieldSpec(p, m, coeffs)
        if spec.x_is_primitive:
            return tuple(coeffs)
    raise NoDefaultPolynomial(f"no primitive polynomial found for ({p}, {m})")


def _primitive_root_mod_p(p):
    facs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in facs):
            return g
    return 1


@functools.lru_cache(maxsize=None)
def _cached_spec(p, m, modulus):
    return FieldSpec(p, m, modulus)


def build_field(p: int, m: int, modulus=None) -> FieldSpec:
    """Validate and build GF(p^m); use the default modulus table when omitted."""
    if m < 1:
        raise RejectedModulus("extension degree must be >= 1")
    if modulus is None:
        modulus = default_modulus(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    return _cached_spec(p, m, modulus)


def nth_root(spec: FieldSpec, n: int) -> RootOfUnity:
    """A primitive n-th root of unity, derived from a primitive field element."""
    if n < 1 or (spec.order - 1) % n != 0:
        raise OrderUnavailable(f"{n} does not divide {spec.order - 1}")
    g = spec.generator_value()
    z = spec.power(g, (spec.order - 1) // n)
    root = RootOfUnity(FieldElement(spec, z), n)
    _check_order(root)
    return root


def root_from_x(spec: FieldSpec, n: int) -> RootOfUnity:
    """Take the residue of x as a primitive n-th root of unity.

    This is how a root with a prescribed minimal polynomial is fixed: build
    the field with that polynomial as modulus, then x-bar is the root.
    """
    root = RootOfUnity(spec.x(), n)
    _check_order(root)
    return root


def _check_order(root: RootOfUnity):
    z, n = root.element, root.n
    if z.val == 0 or (z ** n).val != 1:
        raise OrderUnavailable(f"element is not an n-th root for n={n}")
    for r in _prime_factors(n):
        if (z ** (n // r)).val == 1:
            raise OrderUnavailable(f"element order properly divides {n}")


def in_subfield(a: FieldElement, d: int) -> bool:
    """True iff a lies in GF(p^d), for d dividing m (Frobenius-fixed test)."""
    if d < 1 or a.spec.m % d != 0:
        raise InvalidSubfield(f"{d} does not divide {a.spec.m}")
    return (a ** (a.spec.p ** d)).val == a.val


def poly_str(coeffs) -> str:
    """Render little-endian GF(p) coefficients as a readable polynomial."""
    terms = []
    for i in reversed(range(len(coeffs))):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return " + ".join(terms) if terms else "0"
