"""Twisted 2x2 matrix rings over a commutative ring.

For a central multiplier s, the product of two matrices picks up s in the
corner terms::

    [a b] [a' b']   [a a' + s b c'   a b' + b d']
    [c d] [c' d'] = [c a' + d c'     s c b' + d d']

With s = 1 this is the ordinary 2x2 matrix ring; other multipliers give
genuinely different rings. The twisted determinant det = a d - s b c is
multiplicative and detects units, and every matrix satisfies its
characteristic identity A^2 - tr(A) A + det(A) I = 0.
"""

from __future__ import annotations

from .errors import ContextMismatch, MultiplierMismatch, NotAUnit
from .localring import Ring, RingElement


class GenMatrix:
    """An element of the twisted matrix ring with multiplier ``s``.

    The multiplier is part of the ring: binary operations demand equal s.
    Instances are immutable and hashable.
    """

    __slots__ = ("a11", "a12", "a21", "a22", "s", "ring")

    def __init__(self, a11, a12, a21, a22, s: RingElement):
        ring = s.ring
        for name, entry in (("a11", a11), ("a12", a12), ("a21", a21), ("a22", a22)):
            if not isinstance(entry, RingElement):
                entry = ring.from_int(entry)
            elif entry.ring != ring:
                raise ContextMismatch(f"entry {name} lives in {entry.ring}, not {ring}")
            object.__setattr__(self, name, entry)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("GenMatrix is immutable")

    @classmethod
    def from_rows(cls, ring: Ring, s, rows) -> "GenMatrix":
        if not isinstance(s, RingElement):
            s = ring.from_int(s)
        (a11, a12), (a21, a22) = rows
        mk = lambda v: v if isinstance(v, RingElement) else ring.from_int(v)
        return cls(mk(a11), mk(a12), mk(a21), mk(a22), s)

    @classmethod
    def identity(cls, ring: Ring, s) -> "GenMatrix":
        if not isinstance(s, RingElement):
            s = ring.from_int(s)
        return cls(ring.one, ring.zero, ring.zero, ring.one, s)

    @classmethod
    def zero(cls, ring: Ring, s) -> "GenMatrix":
        if not isinstance(s, RingElement):
            s = ring.from_int(s)
        z = ring.zero
        return cls(z, z, z, z, s)

    @property
    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def _check_compatible(self, other: "GenMatrix"):
        if not isinstance(other, GenMatrix):
            raise TypeError(f"expected GenMatrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextMismatch(f"{self.ring} vs {other.ring}")
        if other.s != self.s:
            raise MultiplierMismatch(f"multiplier {self.s} vs {other.s}")

    def __add__(self, other):
        self._check_compatible(other)
        return GenMatrix(
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
            self.s,
        )

    def __sub__(self, other):
        self._check_compatible(other)
        return GenMatrix(
            self.a11 - other.a11,
            self.a12 - other.a12,
            self.a21 - other.a21,
            self.a22 - other.a22,
            self.s,
        )

    def __neg__(self):
        return GenMatrix(-self.a11, -self.a12, -self.a21, -self.a22, self.s)

    def __mul__(self, other):
        if isinstance(other, (RingElement, int)):
            return self.scaled(other)
        self._check_compatible(other)
        a, b, c, d = self.entries
        a2, b2, c2, d2 = other.entries
        s = self.s
        return GenMatrix(
            a * a2 + s * b * c2,
            a * b2 + b * d2,
            c * a2 + d * c2,
            s * c * b2 + d * d2,
            s,
        )

    def __rmul__(self, other):
        if isinstance(other, (RingElement, int)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, r) -> "GenMatrix":
        """Entrywise multiple r * A."""
        if not isinstance(r, RingElement):
            r = self.ring.from_int(r)
        return GenMatrix(r * self.a11, r * self.a12, r * self.a21, r * self.a22, self.s)

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative powers: use try_inverse")
        result = GenMatrix.identity(self.ring, self.s)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GenMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.s == other.s
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.s, self.entries))

    def __repr__(self):
        e = self.ring.format_element
        return (
            f"[[{e(self.a11)},{e(self.a12)}],[{e(self.a21)},{e(self.a22)}]]"
            f" (s={e(self.s)} over {self.ring})"
        )

    def det(self) -> RingElement:
        """Twisted determinant a11 a22 - s a12 a21."""
        return self.a11 * self.a22 - self.s * self.a12 * self.a21

    def trace(self) -> RingElement:
        return self.a11 + self.a22

    def is_unit(self) -> bool:
        return self.det().is_unit()

    def try_inverse(self) -> "GenMatrix | None":
        det_inv = self.det().try_inverse()
        if det_inv is None:
            return None
        return GenMatrix(
            det_inv * self.a22,
            -(det_inv * self.a12),
            -(det_inv * self.a21),
            det_inv * self.a11,
            self.s,
        )

    def inverse(self) -> "GenMatrix":
        inv = self.try_inverse()
        if inv is None:
            raise NotAUnit(f"matrix with determinant {self.det()} is not a unit")
        return inv

    def swap(self) -> "GenMatrix":
        """The ring automorphism exchanging the two diagonal corners."""
        return GenMatrix(self.a22, self.a21, self.a12, self.a11, self.s)

    def conjugate_by(self, p: "GenMatrix") -> "GenMatrix":
        """Similarity p^-1 * self * p (this orientation everywhere)."""
        self._check_compatible(p)
        p_inv = p.try_inverse()
        if p_inv is None:
            raise NotAUnit("conjugator is not a unit")
        return p_inv * self * p

    def is_idempotent(self) -> bool:
        return self * self == self

    def cayley_hamilton_residual(self) -> "GenMatrix":
        """A^2 - tr(A) A + det(A) I; identically zero, kept as a checkable."""
        ident = GenMatrix.identity(self.ring, self.s)
        return self * self - self.scaled(self.trace()) + ident.scaled(self.det())

    def commutes_with(self, other: "GenMatrix") -> bool:
        self._check_compatible(other)
        return self * other == other * self


def identity(ring: Ring, s) -> GenMatrix:
    return GenMatrix.identity(ring, s)


def zero_matrix(ring: Ring, s) -> GenMatrix:
    return GenMatrix.zero(ring, s)


def scalar_matrix(r: RingElement, s) -> GenMatrix:
    ring = r.ring
    if not isinstance(s, RingElement):
        s = ring.from_int(s)
    return GenMatrix(r, ring.zero, ring.zero, r, s)


def conjugate(p: GenMatrix, a: GenMatrix) -> GenMatrix:
    """p^-1 * a * p, raising NotAUnit when p is not invertible."""
    return a.conjugate_by(p)
