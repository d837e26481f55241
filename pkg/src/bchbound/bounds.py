"""Apparent distance, the BCH bound of a code, and equality certificates.

The apparent distance of a vector is its longest cyclic run of zero entries
plus one; maximized over the representative root changes a in A(n) it gives
the BCH bound of the code.  certify_equality searches shifted divisors of
x^n - 1 for a machine-checkable witness that the minimum distance actually
meets that bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CyclicCode
from .errors import BudgetExceeded
from .modring import cyclotomic_cosets, is_coset_closed, representative_set
from .polyring import Poly, cyclic_shift, divisor_enumerate, factor_xn
from .spectral import Spectrum, is_rational

DEFAULT_DIVISOR_BUDGET = 10 ** 6


def apparent_distance_vec(coeffs) -> int:
    """Longest cyclic run of zeros plus one; 0 for the zero vector."""
    vals = [1 if c else 0 for c in coeffs]
    n = len(vals)
    if not any(vals):
        return 0
    best = 0
    run = 0
    for v in vals + vals:  # doubling handles wraparound runs
        if v:
            run = 0
        else:
            run += 1
            if run > best:
                best = run
    return min(best, n - 1) + 1


def zero_runs(coeffs, length: int):
    """Start indices of maximal cyclic zero-runs of exactly the given length."""
    vals = [1 if c else 0 for c in coeffs]
    n = len(vals)
    if not any(vals):
        return []
    out = []
    for b in range(n):
        if vals[b]:
            continue
        if not vals[(b - 1) % n]:  # previous index is zero too: not a run start
            continue
        run = 0
        while not vals[(b + run) % n]:
            run += 1
        if run == length:
            out.append(b)
    return out


@dataclass(frozen=True)
class ApparentDistanceReport:
    """Per-representative apparent distances and the overall BCH bound."""

    per_representative: dict  # a -> (defining set a*D, d*, run starts)
    overall: int
    optimal_reps: tuple


def code_apparent_distance(code: CyclicCode) -> ApparentDistanceReport:
    """The BCH bound Delta(C) = d*(C), maximized over A(n) root changes."""
    n = code.n
    reps = representative_set(cyclotomic_cosets(n, code.q)).members
    per = {}
    overall = 0
    for a in reps:
        d_a = frozenset(a * i % n for i in code.defining_set)
        vec = [0 if i in d_a else 1 for i in range(n)]
        dstar = apparent_distance_vec(vec)
        per[a] = (d_a, dstar, ())
        overall = max(overall, dstar)
    # record the runs achieving the overall value
    for a, (d_a, dstar, _) in per.items():
        runs = tuple(zero_runs([0 if i in d_a else 1 for i in range(n)],
                               overall - 1)) if dstar == overall else ()
        per[a] = (d_a, dstar, runs)
    optimal = tuple(a for a, (_, dstar, _) in per.items() if dstar == overall)
    return ApparentDistanceReport(per, overall, optimal)


@dataclass(frozen=True)
class Certificate:
    """Witness that d(C) = Delta(C): a shifted divisor meeting Corollary terms."""

    divisor: Poly
    k: int
    representative: int

    def codeword_spectrum(self, n):
        from .polyring import QuotientPoly
        f = QuotientPoly.from_poly(self.divisor, n)
        return cyclic_shift(f, self.k)


def certify_equality(code: CyclicCode, budget: int = DEFAULT_DIVISOR_BUDGET,
                     subfield_degrees=(1,)):
    """Search for (g, k, a) certifying d(C) = Delta(C); None if none exists.

    Divisors g | x^n - 1 of degree n - Delta are scanned over GF(q) first,
    then over the requested subfields of L; for each, every shift k and every
    optimal representative a is checked for support containment in
    Z_n \\ a*D and base-field rationality of the shifted spectrum.
    Raises BudgetExceeded when the scan is truncated rather than finished.
    """
    report = code_apparent_distance(code)
    delta = report.overall
    n, q = code.n, code.q
    target_deg = n - delta
    allowed = {a: frozenset(range(n)) - d_a
               for a, (d_a, dstar, _) in report.per_representative.items()
               if a in report.optimal_reps}
    spent = 0
    for d in sorted(subfield_degrees):
        factors = factor_xn(n, code.root, subfield_degree=d)
        remaining = budget - spent
        if remaining <= 0:
            raise BudgetExceeded(f"divisor budget {budget} exhausted")
        try:
            for g, _roots in divisor_enumerate(factors, target_deg, budget=remaining):
                spent += 1
                cert = _check_divisor(code, g, allowed, q)
                if cert is not None:
                    return cert
        except BudgetExceeded:
            raise BudgetExceeded(
                f"divisor budget {budget} exhausted after {spent} candidates")
    return None


def _check_divisor(code: CyclicCode, g: Poly, allowed, q):
    n = code.n
    supp = sorted(g.support())
    for a in sorted(allowed):
        ok_set = allowed[a]
        for k in range(n):
            shifted = frozenset((i + k) % n for i in supp)
            if not shifted <= ok_set:
                continue
            if not _shift_is_rational(g, k, code, q):
                continue
            return Certificate(g, k, a)
    return None


def _shift_is_rational(g: Poly, k: int, code: CyclicCode, q) -> bool:
    n = code.n
    spec = code.spec
    if q == 2 and spec.p == 2 and all(c in (0, 1) for c in g.coeffs):
        # binary divisor: rationality reduces to coset-closure of the support
        shifted = {(i + k) % n for i in g.support()}
        return is_coset_closed(shifted, n, q)
    from .polyring import QuotientPoly
    f = cyclic_shift(QuotientPoly.from_poly(g, n), k)
    s = Spectrum(n, code.root, f.coeffs)
    return is_rational(s, q)
