"""Certificates: why an orientation is boundary acyclic.

An orientation is boundary acyclic exactly when some strictly positive
edge weighting, reoriented by the orientation's signs, is killed by the
face boundary map.  That weighting is a checkable certificate: rational,
nowhere zero, signs matching the orientation, and in the kernel of the
signed boundary matrix.  bao_witness_vector produces one for every
boundary acyclic orientation and refuses anything else.
"""

from fractions import Fraction

from surfgraph import (
    NotBoundaryAcyclic,
    OrientationClass,
    bao_witness_vector,
    build,
    enumerate_class,
    orientation_from_string,
    orientation_to_string,
)

triangle = build(6, [5, 2, 1, 4, 3, 0], [(0, 1), (2, 3), (4, 5)])
torus = build(4, [[0, 2, 1, 3]], [(0, 1), (2, 3)])
loop = build(2, [1, 0], [(0, 1)])

print("witnesses for every boundary acyclic orientation of the torus map:")
for o in enumerate_class(torus, OrientationClass.BAO):
    w = bao_witness_vector(torus, o)
    pretty = ", ".join(str(x) for x in w)
    print(f"  {orientation_to_string(o)}  ->  ({pretty})")
print()

print("witnesses on the triangle (planar, so boundary acyclic = acyclic):")
for o in enumerate_class(triangle, OrientationClass.BAO):
    w = bao_witness_vector(triangle, o)
    pretty = ", ".join(str(x) for x in w)
    print(f"  {orientation_to_string(o)}  ->  ({pretty})")
print()

# The witness components are Fractions, and signs line up edge by edge.
o = orientation_from_string(triangle, "++-")
w = bao_witness_vector(triangle, o)
assert all(isinstance(x, Fraction) for x in w)
assert all((x > 0) == (s > 0) for x, s in zip(w, o.signs))
print(f"sign check for ++-: witness ({', '.join(str(x) for x in w)}) matches (+, +, -)")
print()

# A single loop bounds its own face, so no orientation of it can be
# boundary acyclic and no certificate exists.
for text in ("+", "-"):
    o = orientation_from_string(loop, text)
    try:
        bao_witness_vector(loop, o)
    except NotBoundaryAcyclic as exc:
        print(f"loop oriented {text}: {exc}")
