"""Cohomology, depth and Cohen-Macaulayness can depend on the field.

The 6-vertex projective plane has torsion: its middle cohomology
vanishes over Q but not over GF(2).  Feeding its minimal non-faces in
as a square-free monomial ideal turns that into a ring-theoretic
statement about depth.
"""

from monolc import (
    FieldSpec,
    SimplicialComplex,
    depth_and_dim,
    parse_ideal,
    reduced_cohomology_dims,
)

Q = FieldSpec.rationals()
F2 = FieldSpec.gf(2)

facets = [
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6),
]
rp2 = SimplicialComplex.from_facets(6, facets)
print("projective plane, reduced cohomology:")
print("  over Q    :", reduced_cohomology_dims(rp2, Q))
print("  over GF(2):", reduced_cohomology_dims(rp2, F2))

# generators are the minimal non-faces of the triangulation
ideal = parse_ideal(
    "vars a b c d e f\n"
    "gens a*b*c, a*b*e, a*c*f, a*d*e, a*d*f, b*c*d, b*d*f, b*e*f,"
    " c*d*e, c*e*f\n"
)
for name, field in [("Q", Q), ("GF(2)", F2)]:
    dd = depth_and_dim(ideal, field)
    print(
        f"face ring over {name}: depth {dd.depth}, dim {dd.dim},"
        f" cohen_macaulay {dd.is_cohen_macaulay}"
    )

assert depth_and_dim(ideal, Q).is_cohen_macaulay
assert not depth_and_dim(ideal, F2).is_cohen_macaulay
