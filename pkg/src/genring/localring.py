"""Exact commutative local rings with decidable unit/radical/nilpotence tests.

Three concrete families are provided, all commutative and local (the
non-units form an ideal, so every element is either a unit or lies in the
Jacobson radical):

* ``ZMod(p, k)``        -- integers modulo p**k,
* ``LocalizedInt(p)``   -- rationals whose denominator is coprime to p,
* ``Quotient(base, n)`` -- base[t]/(t**n), truncated polynomials.

``PrimeField(p)`` is an alias for ``ZMod(p, 1)``.

Elements are immutable, canonical and structural: two elements are equal
exactly when their rings and canonical payloads are equal, so they are safe
as dict keys and across threads.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator

from .errors import ContextMismatch, NotAUnit, NotEnumerable

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RingElement:
    """A canonical value inside a fixed ring context.

    Arithmetic delegates to the ring; plain ints are promoted with
    ``ring.from_int``. Mixing elements of different rings raises
    :class:`ContextMismatch`.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ContextMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.payload))

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative powers: use try_inverse")
        result = self.ring.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return self != self.ring.zero

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.payload)

    def in_jacobson(self) -> bool:
        """True exactly when the element is a non-unit (the ring is local)."""
        return not self.ring._is_unit(self.payload)

    def is_nilpotent(self) -> bool:
        return self.ring._is_nilpotent(self.payload)

    def try_inverse(self) -> "RingElement | None":
        inv = self.ring._try_inverse(self.payload)
        return None if inv is None else RingElement(self.ring, inv)

    def inverse(self) -> "RingElement":
        inv = self.try_inverse()
        if inv is None:
            raise NotAUnit(f"{self} is not a unit of {self.ring}")
        return inv

    def residue(self) -> "RingElement":
        """Image in the residue field; the kernel of this map is the radical."""
        return self.ring._residue(self.payload)

    def __repr__(self):
        return f"{self.ring.format_element(self)} in {self.ring}"

    def __str__(self):
        return self.ring.format_element(self)


class Ring:
    """Common interface of the concrete ring families."""

    # subclasses set these in __init__
    _zero = None
    _one = None

    @property
    def zero(self) -> RingElement:
        if self._zero is None:
            self._zero = self.from_int(0)
        return self._zero

    @property
    def one(self) -> RingElement:
        if self._one is None:
            self._one = self.from_int(1)
        return self._one

    def from_int(self, z: int) -> RingElement:
        raise NotImplementedError

    def element(self, value) -> RingElement:
        """Canonicalize an arbitrary payload-like value into this ring."""
        raise NotImplementedError

    def is_finite(self) -> bool:
        raise NotImplementedError

    def cardinality(self) -> int | None:
        return None

    def elements(self) -> Iterator[RingElement]:
        """Every element exactly once, in a fixed lexicographic order."""
        raise NotEnumerable(f"{self} is not enumerable")

    def residue_field(self) -> "ZMod":
        raise NotImplementedError

    def jacobson_nilpotency_index(self) -> int | None:
        """Smallest known m with J(R)**m = 0, or None when J is not nilpotent."""
        raise NotImplementedError

    def format_element(self, a: RingElement) -> str:
        raise NotImplementedError

    # payload-level arithmetic
    def _add(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _is_unit(self, x) -> bool:
        raise NotImplementedError

    def _is_nilpotent(self, x) -> bool:
        raise NotImplementedError

    def _try_inverse(self, x):
        raise NotImplementedError

    def _residue(self, x) -> RingElement:
        raise NotImplementedError


class ZMod(Ring):
    """Integers modulo p**k, residues stored in [0, p**k)."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"modulus base {p} is not prime")
        if k < 1:
            raise ValueError("exponent must be at least 1")
        self.p = p
        self.k = k
        self.modulus = p**k
        self._zero = None
        self._one = None

    def __eq__(self, other):
        return isinstance(other, ZMod) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("ZMod", self.p, self.k))

    def __repr__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"Z/{self.modulus}"

    def from_int(self, z: int) -> RingElement:
        return RingElement(self, z % self.modulus)

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise ContextMismatch(f"{value.ring} vs {self}")
            return value
        return self.from_int(int(value))

    def is_finite(self) -> bool:
        return True

    def cardinality(self) -> int:
        return self.modulus

    def elements(self) -> Iterator[RingElement]:
        for r in range(self.modulus):
            yield RingElement(self, r)

    def residue_field(self) -> "ZMod":
        return self if self.k == 1 else ZMod(self.p, 1)

    def jacobson_nilpotency_index(self) -> int:
        return self.k

    def format_element(self, a: RingElement) -> str:
        return str(a.payload)

    def _add(self, x, y):
        return (x + y) % self.modulus

    def _neg(self, x):
        return -x % self.modulus

    def _mul(self, x, y):
        return x * y % self.modulus

    def _is_unit(self, x) -> bool:
        return x % self.p != 0

    def _is_nilpotent(self, x) -> bool:
        return x % self.p == 0

    def _try_inverse(self, x):
        try:
            return pow(x, -1, self.modulus)
        except ValueError:
            return None

    def _residue(self, x) -> RingElement:
        return RingElement(self.residue_field(), x % self.p)


def PrimeField(p: int) -> ZMod:
    """The field with p elements, as ZMod(p, 1)."""
    return ZMod(p, 1)


class LocalizedInt(Ring):
    """Rationals with denominator coprime to p (the localization of Z at p).

    Payloads are reduced ``fractions.Fraction`` values, which already carry
    the canonical form: positive denominator, gcd(num, den) = 1.
    """

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"localization prime {p} is not prime")
        self.p = p
        self._zero = None
        self._one = None

    def __eq__(self, other):
        return isinstance(other, LocalizedInt) and self.p == other.p

    def __hash__(self):
        return hash(("LocalizedInt", self.p))

    def __repr__(self):
        return f"Zloc({self.p})"

    def from_int(self, z: int) -> RingElement:
        return RingElement(self, Fraction(z))

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise ContextMismatch(f"{value.ring} vs {self}")
            return value
        f = Fraction(value)
        if f.denominator % self.p == 0:
            raise ValueError(f"{f} has denominator divisible by {self.p}")
        return RingElement(self, f)

    def is_finite(self) -> bool:
        return False

    def residue_field(self) -> ZMod:
        return ZMod(self.p, 1)

    def jacobson_nilpotency_index(self) -> None:
        return None

    def format_element(self, a: RingElement) -> str:
        f = a.payload
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def _add(self, x, y):
        return x + y

    def _neg(self, x):
        return -x

    def _mul(self, x, y):
        return x * y

    def _is_unit(self, x) -> bool:
        return x.numerator % self.p != 0

    def _is_nilpotent(self, x) -> bool:
        return x == 0

    def _try_inverse(self, x):
        if x.numerator % self.p == 0:
            return None
        return 1 / x

    def _residue(self, x) -> RingElement:
        field = self.residue_field()
        num = x.numerator % self.p
        den_inv = pow(x.denominator % self.p, -1, self.p)
        return RingElement(field, num * den_inv % self.p)


class Quotient(Ring):
    """base[t]/(t**n): coefficient vectors of exact length n over the base.

    t is nilpotent, so the quotient stays local whenever the base is; an
    element is a unit exactly when its constant coefficient is.
    """

    def __init__(self, base: Ring, n: int):
        if n < 1:
            raise ValueError("truncation order must be at least 1")
        if not isinstance(base, Ring):
            raise TypeError("base must be a Ring")
        self.base = base
        self.n = n
        self._zero = None
        self._one = None

    def __eq__(self, other):
        return isinstance(other, Quotient) and self.n == other.n and self.base == other.base

    def __hash__(self):
        return hash(("Quotient", self.base, self.n))

    def __repr__(self):
        return f"{self.base}[t]/t^{self.n}"

    def from_int(self, z: int) -> RingElement:
        coeffs = (self.base.from_int(z),) + (self.base.zero,) * (self.n - 1)
        return RingElement(self, coeffs)

    def element(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring == self:
                return value
            value = [value]
        if isinstance(value, int):
            return self.from_int(value)
        coeffs = [self.base.element(c) for c in value]
        if len(coeffs) > self.n:
            coeffs = coeffs[: self.n]  # higher powers of t vanish
        coeffs += [self.base.zero] * (self.n - len(coeffs))
        return RingElement(self, tuple(coeffs))

    @property
    def gen(self) -> RingElement:
        """The image of t (zero when n = 1)."""
        coeffs = [self.base.zero] * self.n
        if self.n > 1:
            coeffs[1] = self.base.one
        return RingElement(self, tuple(coeffs))

    def constant_term(self, a: RingElement) -> RingElement:
        return a.payload[0]

    def is_finite(self) -> bool:
        return self.base.is_finite()

    def cardinality(self) -> int | None:
        c = self.base.cardinality()
        return None if c is None else c**self.n

    def elements(self) -> Iterator[RingElement]:
        if not self.is_finite():
            raise NotEnumerable(f"{self} is not enumerable")
        base_elems = list(self.base.elements())
        for combo in itertools.product(base_elems, repeat=self.n):
            yield RingElement(self, combo)

    def residue_field(self) -> ZMod:
        return self.base.residue_field()

    def jacobson_nilpotency_index(self) -> int | None:
        b = self.base.jacobson_nilpotency_index()
        return None if b is None else b + self.n - 1

    def format_element(self, a: RingElement) -> str:
        return "[" + ",".join(self.base.format_element(c) for c in a.payload) + "]"

    def _add(self, x, y):
        return tuple(cx + cy for cx, cy in zip(x, y))

    def _neg(self, x):
        return tuple(-c for c in x)

    def _mul(self, x, y):
        zero = self.base.zero
        out = [zero] * self.n
        for i, cx in enumerate(x):
            if cx == zero:
                continue
            for j in range(self.n - i):
                out[i + j] = out[i + j] + cx * y[j]
        return tuple(out)

    def _is_unit(self, x) -> bool:
        return x[0].is_unit()

    def _is_nilpotent(self, x) -> bool:
        return x[0].is_nilpotent()

    def _try_inverse(self, x):
        c0_inv = x[0].try_inverse()
        if c0_inv is None:
            return None
        # Newton refinement y <- y(2 - xy); the error is a multiple of t,
        # so it reaches an exact inverse in finitely many steps.
        a = RingElement(self, x)
        y = self.element([c0_inv])
        for _ in range(self.n + 1):
            prod = self._mul(x, y.payload)
            if prod == self.one.payload:
                return y.payload
            y = y * (self.from_int(2) - a * y)
        raise AssertionError("inverse refinement failed to terminate")

    def _residue(self, x) -> RingElement:
        return x[0].residue()


def innermost_base(ring: Ring) -> Ring:
    """Unwrap Quotient layers down to the ZMod or LocalizedInt core."""
    while isinstance(ring, Quotient):
        ring = ring.base
    return ring
