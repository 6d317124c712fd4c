"""Faces, vertex curvature, and the global count that always equals 2.

A rotation system (clockwise neighbor order at each vertex) determines the
faces of an embedding. When the Euler characteristic comes out to 2 the
embedding is spherical, each vertex gets phi = 1 - deg/2 + sum 1/|face|,
and the phi values over any such embedding always total exactly 2.
"""

from fractions import Fraction

from riccikit import families
from riccikit.curvature import combinatorial_curvature
from riccikit.graphs import trace_faces, validate_embedding


def describe(label, g, rot):
    faces = trace_faces(g, rot)
    check = validate_embedding(g, faces)
    sizes = sorted(f.size for f in faces)
    total = sum(
        (combinatorial_curvature(g, faces, v) for v in g.vertices), start=Fraction(0)
    )
    phis = sorted({str(combinatorial_curvature(g, faces, v)) for v in g.vertices})
    print(f"{label}:")
    print(f"  V - E + F = {g.vertex_count} - {g.edge_count} + {check.face_count} "
          f"= {check.euler_characteristic}")
    print(f"  face sizes: {sizes}")
    print(f"  distinct phi values: {phis}")
    print(f"  sum of phi = {total}\n")


def main():
    describe("cube (prism over a square)", *families.prism(4))
    describe("icosahedron", *families.icosahedron())
    describe("wheel on 6 rim vertices", *families.wheel(6))

    print("prisms have phi = 1/n at every vertex:")
    for n in (3, 5, 8, 12):
        g, rot = families.prism(n)
        faces = trace_faces(g, rot)
        phi = combinatorial_curvature(g, faces, 0)
        print(f"  prism({n:>2}): phi = {phi}")


if __name__ == "__main__":
    main()
