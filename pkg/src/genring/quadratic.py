"""Exact root-finding for monic quadratics t^2 - mu t + lam over local rings.

Four routes, kept deliberately redundant so they can cross-check each other:

* :func:`solve_brute`    -- full enumeration (finite rings; the oracle),
* :func:`newton_lift`    -- Hensel refinement of a simple residue root,
* :func:`series_lift`    -- coefficientwise lift through t-adic layers,
* :func:`solve_rational` -- complete rational-root decision over localized
  integers (monic over Z after clearing denominators, so the divisor
  enumeration of the rational root theorem is exhaustive).

:func:`solve_split` is the entry point used by the classification theory: in
its regime (mu a unit, lam in the radical) the residue equation factors as
t(t - mu) with two distinct simple roots, hence over a finite ring a
unit/radical root pair always exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import InternalCheckFailed, NotLiftable, PreconditionViolated
from .localring import LocalizedInt, Quotient, RingElement, innermost_base


@dataclass(frozen=True)
class QuadraticProblem:
    """Coefficients of t^2 - mu t + lam over a common ring."""

    mu: RingElement
    lam: RingElement

    def __post_init__(self):
        if self.mu.ring != self.lam.ring:
            raise PreconditionViolated("mu and lam must share a ring")

    @property
    def ring(self):
        return self.mu.ring

    def value_at(self, t: RingElement) -> RingElement:
        return t * t - self.mu * t + self.lam

    def is_root(self, t: RingElement) -> bool:
        return self.value_at(t) == self.ring.zero


@dataclass(frozen=True)
class RootPair:
    """A radical root and a unit root of the same quadratic."""

    root_j: RingElement
    root_u: RingElement

    def verify(self, problem: QuadraticProblem):
        ring = problem.ring
        ok = (
            problem.is_root(self.root_j)
            and problem.is_root(self.root_u)
            and self.root_j.in_jacobson()
            and self.root_u.is_unit()
            and self.root_j + self.root_u == problem.mu
            and self.root_j * self.root_u == problem.lam
        )
        if not ok:
            raise InternalCheckFailed(
                f"root pair ({self.root_j}, {self.root_u}) fails verification over {ring}"
            )


def solve_brute(problem: QuadraticProblem) -> list[RingElement]:
    """All roots, by full enumeration, in the ring's canonical order."""
    ring = problem.ring
    return [t for t in ring.elements() if problem.is_root(t)]


def newton_lift(problem: QuadraticProblem, start: RingElement) -> RingElement:
    """Refine a simple residue root to an exact root.

    Needs f(start) in the radical, f'(start) a unit, and a nilpotent radical
    (finite rings here); each step at least doubles the radical-adic accuracy,
    so the iteration reaches an exact root.
    """
    ring = problem.ring
    bound = ring.jacobson_nilpotency_index()
    if bound is None:
        raise PreconditionViolated(f"Newton lifting needs a nilpotent radical, not {ring}")
    if not problem.value_at(start).in_jacobson():
        raise PreconditionViolated("start is not a residue root")
    t = start
    for _ in range(bound + 2):
        ft = problem.value_at(t)
        if ft == ring.zero:
            return t
        t = t - ft * (t + t - problem.mu).inverse()
    raise InternalCheckFailed("Newton iteration failed to terminate exactly")


def series_lift(base_root: RingElement, problem: QuadraticProblem) -> RingElement:
    """Lift a constant-layer root through the t-adic layers of a quotient.

    Writing the unknown as sum(b_i t^i), layer m pins b_m down to a division
    by the fixed pivot 2 b_0 - mu_0 (the difference of the two base roots),
    so the lift is unique once b_0 is chosen.
    """
    ring = problem.ring
    if not isinstance(ring, Quotient):
        raise PreconditionViolated(f"series lift expects a quotient ring, not {ring}")
    base, n = ring.base, ring.n
    mu_c, lam_c = problem.mu.payload, problem.lam.payload
    b0 = base.element(base_root)
    if b0 * b0 - mu_c[0] * b0 + lam_c[0] != base.zero:
        raise PreconditionViolated("base_root does not solve the constant layer")
    pivot = (b0 + b0 - mu_c[0]).try_inverse()
    if pivot is None:
        raise NotLiftable("2*base_root - mu_0 is not a unit (double residue root)")
    coeffs = [b0]
    for m in range(1, n):
        acc = lam_c[m]
        for i in range(1, m):
            acc = acc + coeffs[i] * coeffs[m - i]
        for j in range(m):
            acc = acc - mu_c[m - j] * coeffs[j]
        coeffs.append(-(acc * pivot))
    root = ring.element(coeffs)
    if not problem.is_root(root):
        raise InternalCheckFailed("series lift produced a non-root")
    return root


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def solve_rational(problem: QuadraticProblem) -> list[RingElement]:
    """All roots lying in the localization, decided exactly.

    Clears denominators to an integer quadratic A t^2 + B t + C and runs the
    rational root theorem: every rational root is r/q in lowest terms with
    r | C and q | A. Roots whose reduced denominator is divisible by p are
    discarded (they exist in Q but not in the ring).
    """
    ring = problem.ring
    if not isinstance(ring, LocalizedInt):
        raise PreconditionViolated(f"rational solver expects a localization, not {ring}")
    mu: Fraction = problem.mu.payload
    lam: Fraction = problem.lam.payload
    scale = mu.denominator * lam.denominator // gcd(mu.denominator, lam.denominator)
    a = scale
    b = -mu * scale
    c = lam * scale
    assert b.denominator == 1 and c.denominator == 1
    b, c = b.numerator, c.numerator

    candidates: set[Fraction] = set()
    if c == 0:
        candidates.add(Fraction(0))
        candidates.add(Fraction(-b, a))
    else:
        for r in _divisors(c):
            for q in _divisors(a):
                candidates.add(Fraction(r, q))
                candidates.add(Fraction(-r, q))
    roots = []
    for cand in sorted(candidates):
        if a * cand * cand + b * cand + c == 0 and cand.denominator % ring.p != 0:
            roots.append(ring.element(cand))
    return roots


def solve_split(problem: QuadraticProblem) -> RootPair | None:
    """The unit/radical root pair, or None when the quadratic has no roots.

    Demands mu a unit and lam in the radical; outside that regime the
    classification theory never needs a root pair, so the input is rejected
    rather than guessed at. Over finite rings the result is always present.
    """
    mu, lam = problem.mu, problem.lam
    ring = problem.ring
    if not mu.is_unit():
        raise PreconditionViolated(f"mu = {mu} must be a unit")
    if lam.is_unit():
        raise PreconditionViolated(f"lam = {lam} must lie in the radical")

    if ring.is_finite():
        root_j = newton_lift(problem, ring.zero)
        root_u = newton_lift(problem, mu)
        pair = RootPair(root_j, root_u)
    elif isinstance(ring, LocalizedInt):
        roots = solve_rational(problem)
        if not roots:
            return None
        j_roots = [r for r in roots if r.in_jacobson()]
        u_roots = [r for r in roots if r.is_unit()]
        if len(j_roots) != 1 or len(u_roots) != 1:
            raise InternalCheckFailed(f"root set {roots} does not split into unit/radical")
        pair = RootPair(j_roots[0], u_roots[0])
    elif isinstance(ring, Quotient):
        base_pair = solve_split(QuadraticProblem(mu.payload[0], lam.payload[0]))
        if base_pair is None:
            return None
        pair = RootPair(
            series_lift(base_pair.root_j, problem),
            series_lift(base_pair.root_u, problem),
        )
    else:  # pragma: no cover - no other ring families exist
        raise PreconditionViolated(f"unsupported ring {ring}")
    pair.verify(problem)
    return pair


def unsolvable_reason(ring) -> str:
    """Why solve_split can come back empty over this ring."""
    if isinstance(innermost_base(ring), LocalizedInt):
        return "rational-root-exhausted"
    return "residue-unsolvable"
