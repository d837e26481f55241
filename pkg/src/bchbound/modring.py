"""Arithmetic in Z_n: q-cyclotomic cosets, representative sets, orders.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprime

# Generous sanity cap: keeps accidental huge inputs from allocating forever.
MAX_N = 1 << 16


@dataclass(frozen=True)
class CosetPartition:
    """The q-cyclotomic cosets modulo n, keyed by minimum representative."""

    n: int
    q: int
    cosets: tuple  # tuple of sorted tuples, ordered by representative

    @property
    def representatives(self):
        return tuple(c[0] for c in self.cosets)

    def coset_of(self, a: int):
        a %= self.n
        for c in self.cosets:
            if a in c:
                return c
        raise KeyError(a)


@dataclass(frozen=True)
class RepresentativeSet:
    """A(n): coset representatives coprime to n, plus the shared coset size."""

    n: int
    q: int
    members: tuple
    order: int  # ord_n(q) = |C_q(a)| for every member


def _check(n: int, q: int):
    if n < 1:
        raise NotCoprime("n must be positive")
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) > 1")
    if n > MAX_N:
        raise NotCoprime(f"n > {MAX_N} is outside the configured range")


def cyclotomic_coset(a: int, n: int, q: int) -> tuple:
    """The orbit of a under multiplication by q modulo n, sorted."""
    a %= n
    out = {a}
    b = a * q % n
    while b != a:
        out.add(b)
        b = b * q % n
    return tuple(sorted(out))


def cyclotomic_cosets(n: int, q: int) -> CosetPartition:
    """Full partition of Z_n into q-cyclotomic cosets."""
    _check(n, q)
    seen = set()
    cosets = []
    for a in range(n):
        if a in seen:
            continue
        c = cyclotomic_coset(a, n, q)
        seen.update(c)
        cosets.append(c)
    return CosetPartition(n, q, tuple(cosets))


def multiplicative_order(q: int, n: int) -> int:
    """Least k >= 1 with q^k = 1 (mod n)."""
    _check(n, q)
    if n == 1:
        return 1
    k, v = 1, q % n
    while v != 1:
        v = v * q % n
        k += 1
    return k


def totient(n: int) -> int:
    result = n
    d, m = 2, n
    while d * d <= m:
        if m % d == 0:
            result -= result // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        result -= result // m
    return result


def representative_set(partition: CosetPartition) -> RepresentativeSet:
    """A(n): minima of the cosets whose elements are coprime to n."""
    n, q = partition.n, partition.q
    members = tuple(r for r in partition.representatives if math.gcd(r, n) == 1)
    order = multiplicative_order(q, n)
    return RepresentativeSet(n, q, members, order)


def coset_closure(indices, n: int, q: int) -> frozenset:
    """The smallest union of q-cyclotomic cosets containing the given indices."""
    out = set()
    for a in indices:
        out.update(cyclotomic_coset(a, n, q))
    return frozenset(out)


def is_coset_closed(indices, n: int, q: int) -> bool:
    s = {i % n for i in indices}
    return all(a * q % n in s for a in s)


def solve_linear_congruence(a: int, b: int, m: int):
    """Least nonnegative k with a*k = b (mod m), or None when unsolvable."""
    if m < 1:
        raise ValueError("modulus must be positive")
    a %= m
    b %= m
    g = math.gcd(a, m)
    if b % g != 0:
        return None
    mm = m // g
    if mm == 1:
        return 0
    k = (b // g) * pow(a // g, -1, mm) % mm
    return k
