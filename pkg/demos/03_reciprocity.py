"""What a counting polynomial says at negative arguments.

Each of the four polynomials counts nowhere-zero solutions mod k when
k is a positive integer.  Evaluated at -k and given the right sign it
still counts something: pairs of a solution that may use zeros together
with an orientation of the map left after removing the solution's
support.  The removal and the orientation class depend on the kind:

  tension        delete the support, count acyclic orientations
  flow           contract the support abstractly, count totally cyclic
  local tension  remove the support edge by edge (delete unless the edge
                 is a coloop at that moment, contract if it is), count
                 boundary acyclic
  balanced flow  contract the support, count totally bi-walkable

The integral variant does the same with integer values of magnitude
less than k, and its value at k = 0 is the size of an orientation class
on the original map.
"""

from surfgraph import (
    OrientationClass,
    build,
    count_class,
    count_integral_local_tensions,
    euler_data,
    integral_local_tension_reciprocity_pairs,
    poly_eval,
    poly_local_tension,
    poly_tension,
    reciprocity_pairs_local_tension,
    reciprocity_pairs_tension,
)

bridge = build(2, [0, 1], [(0, 1)])
torus = build(4, [[0, 2, 1, 3]], [(0, 1), (2, 3)])

print("tension reciprocity on the single bridge")
p = poly_tension(bridge)
d = euler_data(bridge)
for k in range(1, 5):
    signed = (-1) ** (d.v_count - d.c) * poly_eval(p, -k)
    pairs = reciprocity_pairs_tension(bridge, k)
    assert signed == pairs
    print(f"  k={k}: (-1)^(V-c) p(-k) = {signed} = pairs of (tension mod k, acyclic orientation)")
print("  (k+1 pairs: each of the k-1 nonzero tensions pairs with the one")
print("  empty orientation once its edge is deleted, and the zero tension")
print("  pairs with both acyclic orientations of the intact bridge)")
print()

print("local tension reciprocity on the torus")
p = poly_local_tension(torus)
d = euler_data(torus)
for k in range(1, 5):
    signed = (-1) ** (d.e_count - d.f_count + d.c) * poly_eval(p, -k)
    pairs = reciprocity_pairs_local_tension(torus, k)
    assert signed == pairs == (k + 1) ** 2
    print(f"  k={k}: signed p(-k) = {signed} = pairs, and (k+1)^2 = {(k + 1) ** 2}")
print()

print("integral local tensions on the torus (values in -k+1 .. k-1, no zeros)")
for k in range(1, 5):
    n = count_integral_local_tensions(torus, k)
    print(f"  k={k}: {n} nowhere-zero integral local tensions ((2k-2)^2)")
print()

print("integral reciprocity: pairs of (integral local tension with |values| <= k,")
print("boundary acyclic orientation compatible with its sign pattern)")
for k in range(5):
    pairs = integral_local_tension_reciprocity_pairs(torus, k)
    print(f"  k={k}: {pairs} pairs ((2k+2)^2)")
bao = count_class(torus, OrientationClass.BAO)
assert integral_local_tension_reciprocity_pairs(torus, 0) == bao
print()
print(f"At k=0 only the zero tension survives and every boundary acyclic")
print(f"orientation is compatible with it, so the constant term is |BAO| = {bao}.")
