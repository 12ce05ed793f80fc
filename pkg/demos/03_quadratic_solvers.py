"""Root-finding for t^2 - mu t + lambda over each ring family.

The split regime (mu a unit, lambda in the radical) is the one the
classification theory needs: the residue equation factors as t(t - mu), and
its two simple roots lift exactly. Three independent routes are compared.
"""

from random import Random

from genring import (
    QuadraticProblem,
    newton_lift,
    parse_ring,
    random_jacobson,
    random_unit,
    series_lift,
    solve_brute,
    solve_rational,
    solve_split,
)

print("== brute force is the oracle on finite rings ==")
z8 = parse_ring("Z/8")
prob = QuadraticProblem(z8.from_int(1), z8.from_int(2))
roots = solve_brute(prob)
print(f"t^2 - t + 2 over {z8}: all roots by enumeration = {[str(r) for r in roots]}")

pair = solve_split(prob)
print(f"split solver: radical root {pair.root_j}, unit root {pair.root_u}")
assert {pair.root_j, pair.root_u} == set(roots)

print()
print("== Hensel refinement vs coefficientwise lifting ==")
ring = parse_ring("Z/8[t]/t^2")
prob = QuadraticProblem(ring.from_int(1), ring.element([2, 4]))
lifted = series_lift(parse_ring("Z/8").from_int(6), prob)
print(f"over {ring}, lambda = 2 + 4t: layer-by-layer lift of the base root 6 -> {lifted}")
newton = newton_lift(prob, ring.zero)
print(f"Newton iteration from the residue root 0 -> {newton}")
assert lifted == newton

rng = Random(5)
q = parse_ring("Z/4[t]/t^2")
for _ in range(300):
    p = QuadraticProblem(random_unit(q, rng), random_jacobson(q, rng))
    sp = solve_split(p)
    assert series_lift(sp.root_j.payload[0], p) == newton_lift(p, q.zero) == sp.root_j
print("300 random split problems over Z/4[t]/t^2: both lifts agree exactly")

print()
print("== rational decisions are complete ==")
zl2 = parse_ring("Zloc(2)")
unsat = QuadraticProblem(zl2.from_int(1), zl2.from_int(2))
print(f"t^2 - t + 2 over {zl2}: roots = {solve_rational(unsat)} "
      "(integer candidates +-1, +-2 all fail, and monic => rational roots are integers)")
assert solve_split(unsat) is None

sat = QuadraticProblem(zl2.from_int(3), zl2.from_int(2))
roots = solve_rational(sat)
print(f"t^2 - 3t + 2 over {zl2}: roots = {[str(r) for r in roots]}")

print()
print("== lifting through a rational base ==")
ring = parse_ring("Zloc(2)[t]/t^2")
prob = QuadraticProblem(ring.from_int(1), ring.element(["-2", "-1"][0:1]) - ring.gen)
pair = solve_split(prob)
print(f"t^2 - t + (-2 - t) over {ring}: radical root {pair.root_j}, unit root {pair.root_u}")
assert str(pair.root_j) == "[2,1/3]"

print()
print("ok: all solver routes agree where they overlap")
