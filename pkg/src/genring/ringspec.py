"""Text grammar for rings, element literals and matrix literals.

Ring specs::

    ring   := atom suffix*
    atom   := "Z/" INT          (prime power, e.g. Z/8)
            | "F" PRIME         (prime field, e.g. F3)
            | "Zloc(" PRIME ")" (integers localized at a prime)
    suffix := "[t]/t^" INT      (truncated polynomial quotient)

Element literals are integers (``6``), fractions (``3/5``) or coefficient
lists (``[1,0,2]``, constant coefficient first); matrix literals are
``[[e11,e12],[e21,e22]]``. Formatting round-trips: parsing the printed form
reproduces the value.
"""

from __future__ import annotations

from .errors import ParseError
from .genmat import GenMatrix
from .localring import LocalizedInt, Quotient, Ring, RingElement, ZMod, is_prime


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (n, 1)


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.peek() in (" ", "\t"):
            self.pos += 1

    def expect(self, token: str):
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos == len(self.text)


def parse_ring(spec: str) -> Ring:
    cur = _Cursor(spec)
    ring = _parse_ring_at(cur)
    if not cur.done():
        raise cur.error("trailing characters after ring spec")
    return ring


def _parse_ring_at(cur: _Cursor) -> Ring:
    cur.skip_ws()
    if cur.accept("Z/"):
        n = cur.integer()
        pk = _prime_power(n)
        if pk is None:
            raise cur.error(f"{n} is not a prime power, so Z/{n} is not local")
        ring: Ring = ZMod(*pk)
    elif cur.accept("Zloc("):
        p = cur.integer()
        if not is_prime(p):
            raise cur.error(f"{p} is not prime")
        cur.expect(")")
        ring = LocalizedInt(p)
    elif cur.accept("F"):
        p = cur.integer()
        if not is_prime(p):
            raise cur.error(f"{p} is not prime")
        ring = ZMod(p, 1)
    else:
        raise cur.error("expected 'Z/', 'F' or 'Zloc('")
    while cur.accept("[t]/t^"):
        n = cur.integer()
        if n < 1:
            raise cur.error("truncation order must be positive")
        ring = Quotient(ring, n)
    return ring


def format_ring(ring: Ring) -> str:
    return repr(ring)


def parse_element(ring: Ring, text: str) -> RingElement:
    cur = _Cursor(text)
    elem = _parse_element_at(cur, ring)
    if not cur.done():
        raise cur.error("trailing characters after element literal")
    return elem


def _parse_element_at(cur: _Cursor, ring: Ring) -> RingElement:
    cur.skip_ws()
    if cur.peek() == "[":
        if not isinstance(ring, Quotient):
            raise cur.error(f"coefficient list literal is invalid in {ring}")
        cur.expect("[")
        coeffs = [_parse_element_at(cur, ring.base)]
        cur.skip_ws()
        while cur.accept(","):
            coeffs.append(_parse_element_at(cur, ring.base))
            cur.skip_ws()
        cur.expect("]")
        if len(coeffs) > ring.n:
            raise cur.error(f"more than {ring.n} coefficients for {ring}")
        return ring.element(coeffs)
    num = cur.integer()
    if cur.accept("/"):
        den = cur.integer()
        if den == 0:
            raise cur.error("zero denominator")
        base = ring
        while isinstance(base, Quotient):
            base = base.base
        if not isinstance(base, LocalizedInt):
            raise cur.error(f"fraction literal is invalid in {ring}")
        from fractions import Fraction

        frac = Fraction(num, den)
        if frac.denominator % base.p == 0:
            raise cur.error(f"denominator of {frac} is divisible by {base.p}")
        if isinstance(ring, Quotient):
            return ring.element([base.element(frac)])
        return ring.element(frac)
    return ring.from_int(num)


def format_element(a: RingElement) -> str:
    return a.ring.format_element(a)


def parse_matrix(ring: Ring, s, text: str) -> GenMatrix:
    """Parse ``[[e11,e12],[e21,e22]]`` over the given ring and multiplier."""
    if not isinstance(s, RingElement):
        s = parse_element(ring, str(s))
    cur = _Cursor(text)
    cur.skip_ws()
    cur.expect("[")
    rows = [_parse_row(cur, ring)]
    cur.skip_ws()
    cur.expect(",")
    rows.append(_parse_row(cur, ring))
    cur.skip_ws()
    cur.expect("]")
    if not cur.done():
        raise cur.error("trailing characters after matrix literal")
    (a11, a12), (a21, a22) = rows
    return GenMatrix(a11, a12, a21, a22, s)


def _parse_row(cur: _Cursor, ring: Ring) -> tuple[RingElement, RingElement]:
    cur.skip_ws()
    cur.expect("[")
    first = _parse_element_at(cur, ring)
    cur.skip_ws()
    cur.expect(",")
    second = _parse_element_at(cur, ring)
    cur.skip_ws()
    cur.expect("]")
    return first, second


def format_matrix(m: GenMatrix) -> str:
    e = m.ring.format_element
    return f"[[{e(m.a11)},{e(m.a12)}],[{e(m.a21)},{e(m.a22)}]]"


def matrix_to_json(m: GenMatrix) -> dict:
    """The wire form {"s": ..., "m": [[..],[..]]} with literal strings."""
    e = m.ring.format_element
    return {"s": e(m.s), "m": [[e(m.a11), e(m.a12)], [e(m.a21), e(m.a22)]]}


def matrix_from_json(ring: Ring, obj: dict) -> GenMatrix:
    s = parse_element(ring, obj["s"])
    (e11, e12), (e21, e22) = obj["m"]
    return GenMatrix(
        parse_element(ring, e11),
        parse_element(ring, e12),
        parse_element(ring, e21),
        parse_element(ring, e22),
        s,
    )
