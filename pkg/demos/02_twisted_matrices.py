"""The twisted 2x2 matrix ring and its determinant calculus.

The multiplier s enters the corner products: with s = 0 cross terms vanish,
with s = 1 we recover the ordinary matrix ring, and a radical s produces a
genuinely different ring on the same underlying set.
"""

from random import Random

from genring import (
    GenMatrix,
    format_matrix,
    identity,
    parse_matrix,
    parse_ring,
    random_matrix,
    zero_matrix,
)

z4 = parse_ring("Z/4")
m = parse_matrix(z4, "2", "[[0,1],[1,0]]")
print(f"over {z4} with s=2: {format_matrix(m)} squared = {format_matrix(m * m)}")
print("  (both corners pick up the multiplier: s*1*1 = 2)")

z8 = parse_ring("Z/8")
n = parse_matrix(z8, "0", "[[0,1],[0,0]]")
print(f"with s=0: {format_matrix(n)} squared = {format_matrix(n * n)} (cross term killed)")

print()
print("== determinant and trace ==")
a = parse_matrix(z8, "1", "[[1,1],[2,0]]")
print(f"A = {format_matrix(a)}: det = {a.det()} (= 0 - 1*1*2 mod 8), tr = {a.trace()}")
print(f"A is a unit: {a.is_unit()}  (det 6 is even)")

b = parse_matrix(parse_ring("Z/9"), "2", "[[1,1],[1,1]]")
print(f"over Z/9 with s=2: det {format_matrix(b)} = {b.det()}, inverse = {format_matrix(b.inverse())}")
assert b * b.inverse() == identity(b.ring, b.s)

print()
print("== det is multiplicative; every matrix satisfies its characteristic identity ==")
rng = Random(1)
z9 = parse_ring("Z/9")
s = z9.from_int(3)
for _ in range(300):
    x, y = random_matrix(z9, s, rng), random_matrix(z9, s, rng)
    assert (x * y).det() == x.det() * y.det()
    assert x.cayley_hamilton_residual() == zero_matrix(z9, s)
print("300 random pairs over Z/9, s=3: det(XY) = det(X)det(Y) and X^2 - tr X + det I = 0")

print()
print("== the corner swap is a ring automorphism ==")
sw = a.swap()
print(f"swap({format_matrix(a)}) = {format_matrix(sw)}; det/tr preserved:",
      sw.det() == a.det() and sw.trace() == a.trace())
for _ in range(200):
    x, y = random_matrix(z8, z8.one, rng), random_matrix(z8, z8.one, rng)
    assert (x * y).swap() == x.swap() * y.swap()
    assert x.swap().swap() == x
print("200 random pairs: swap(XY) = swap(X)swap(Y), swap is an involution")

print()
print("ok: twisted matrix arithmetic behaves")
