"""Discrete Fourier (Mattson-Solomon) transform over the splitting field.

Spectra are length-n vectors over L; index i holds f(alpha^i).  Transforms
are direct O(n^2) evaluations, which is exact and fast enough for n <= 2^16.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCosetClosed, RootMismatch
from .galois import FieldElement, RootOfUnity
from .modring import is_coset_closed
from .polyring import Poly, QuotientPoly


@dataclass(frozen=True)
class Spectrum:
    """Evaluation vector of a polynomial at 1, alpha, ..., alpha^(n-1)."""

    n: int
    root: RootOfUnity
    values: tuple  # packed field values, length n

    def support(self):
        return frozenset(i for i, v in enumerate(self.values) if v)

    def zero_set(self):
        return frozenset(i for i, v in enumerate(self.values) if not v)

    def star(self, other: "Spectrum") -> "Spectrum":
        """Coordinatewise product (the transform-side ring multiplication)."""
        if self.root != other.root:
            raise RootMismatch("spectra over different roots")
        spec = self.root.spec
        return Spectrum(self.n, self.root, tuple(
            spec.mul(a, b) for a, b in zip(self.values, other.values)))

    def is_idempotent(self):
        spec = self.root.spec
        return all(spec.mul(v, v) == v for v in self.values)

    def __str__(self):
        if all(v in (0, 1) for v in self.values):
            return "( " + " ".join(str(v) for v in self.values) + " )"
        return "[" + ", ".join(f"a^{_dlog(self.root, v)}" if v else "0"
                               for v in self.values) + "]"


def _dlog(root: RootOfUnity, val: int):
    acc = root.spec.one().val
    for t in range(root.n):
        if acc == val:
            return t
        acc = root.spec.mul(acc, root.element.val)
    return None


def dft(f: QuotientPoly | Poly, root: RootOfUnity) -> Spectrum:
    """values[i] = f(alpha^i), by Horner evaluation per index."""
    n = root.n
    poly = f.to_poly() if isinstance(f, QuotientPoly) else f
    vals = [poly.eval(root.pow(i)).val for i in range(n)]
    return Spectrum(n, root, tuple(vals))


def idft(s: Spectrum) -> QuotientPoly:
    """The unique preimage: coeff_i = (1/n) * s(alpha^-i)."""
    spec = s.root.spec
    n = s.n
    n_inv = spec.inv(n % spec.p)
    as_poly = Poly(spec, s.values)
    coeffs = [spec.mul(n_inv, as_poly.eval(s.root.pow(-i % n)).val) for i in range(n)]
    return QuotientPoly(n, spec, tuple(coeffs))


def is_rational(s: Spectrum, q: int | None = None) -> bool:
    """True iff idft(s) lands in F_q(n): values[q*i mod n] = values[i]^q."""
    spec = s.root.spec
    if q is None:
        q = spec.p
    n = s.n
    return all(s.values[q * i % n] == spec.power(v, q)
               for i, v in enumerate(s.values))


def indicator_spectrum(n: int, defining_set, root: RootOfUnity,
                       q: int | None = None) -> Spectrum:
    """F_D: 0 at indices in D, 1 elsewhere; the dft of the code idempotent."""
    if q is None:
        q = root.spec.p
    d = {i % n for i in defining_set}
    if not is_coset_closed(d, n, q):
        raise NotCosetClosed(f"{sorted(d)} is not a union of {q}-cosets mod {n}")
    return Spectrum(n, root, tuple(0 if i in d else 1 for i in range(n)))
