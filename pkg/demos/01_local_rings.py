"""Tour of the concrete commutative local rings.

Every ring here is local: each element is either a unit or lies in the
Jacobson radical, and both predicates are decidable exactly.
"""

from fractions import Fraction

from genring import LocalizedInt, Quotient, ZMod, parse_ring

print("== integers modulo a prime power ==")
z8 = ZMod(2, 3)
a, b = z8.from_int(6), z8.from_int(3)
print(f"in {z8}: 6 + 3 = {a + b}, 6 * 3 = {a * b}")
print(f"3 is a unit with inverse {b.inverse()}; 6 is a unit: {a.is_unit()}")
print(f"2 is nilpotent: {z8.from_int(2).is_nilpotent()}  (2^3 = 8 = 0)")

print()
print("== rationals with odd denominators (localization at 2) ==")
zl2 = LocalizedInt(2)
x = zl2.element(Fraction(1, 3))
y = zl2.element(Fraction(3, 5))
print(f"in {zl2}: 1/3 * 3/5 = {x * y}")
print(f"3/5 is a unit: {y.is_unit()}; 2 lies in the radical: {zl2.from_int(2).in_jacobson()}")
print(f"2 is nilpotent here: {zl2.from_int(2).is_nilpotent()}  (a domain: only 0 is)")

print()
print("== truncated polynomials ==")
r = Quotient(ZMod(2, 2), 2)  # Z/4[t]/t^2
t = r.gen
print(f"in {r}: t * t = {t * t}")
u = r.one + t
print(f"(1 + t)^-1 = {u.inverse()}  since (1+t)(1-t) = 1 - t^2 = 1")

print()
print("== the residue field sees only the radical ==")
for spec in ("Z/8", "Zloc(3)", "Z/9[t]/t^2"):
    ring = parse_ring(spec)
    probe = ring.from_int(4)
    print(f"{spec}: residue field {ring.residue_field()}, residue(4) = {probe.residue()}")

print()
print("== finite rings enumerate canonically ==")
small = parse_ring("Z/2[t]/t^2")
print(f"{small} has {small.cardinality()} elements: {[str(e) for e in small.elements()]}")
bound = small.jacobson_nilpotency_index()
print(f"radical vanishes at power {bound}:",
      all((e ** bound == small.zero) for e in small.elements() if e.in_jacobson()))

assert (z8.from_int(6) + 3) == z8.from_int(1)
assert t * t == r.zero
print()
print("ok: local ring arithmetic behaves")
