from collections import Counter

import pytest

from riccikit import families
from riccikit.families import FamilySpec
from riccikit.graphs import to_edgelist_text, to_rotation_text, trace_faces, validate_embedding


def test_figure1_shape(figure1_pair):
    g, rot = figure1_pair
    assert g.vertex_count == 17
    assert g.edge_count == 44  # 16 spokes + 16 rim + 8 short chords + 4 long chords
    assert g.degree(16) == 16
    for j in range(16):
        expected = 7 if j % 4 == 0 else (5 if j % 2 == 0 else 3)
        assert g.degree(j) == expected
    assert (g.max_degree, g.min_degree) == (16, 3)
    faces = trace_faces(g, rot)
    assert validate_embedding(g, faces).is_sphere
    assert Counter(f.size for f in faces) == {3: 28, 4: 1}


def test_prism_is_cube_for_n4():
    g, rot = families.prism(4)
    assert g.vertex_count == 8 and g.edge_count == 12
    assert all(g.degree(v) == 3 for v in g.vertices)
    faces = trace_faces(g, rot)
    assert sorted(f.size for f in faces) == [4] * 6


def test_prism_face_sizes():
    for n in (3, 5, 8):
        g, rot = families.prism(n)
        sizes = Counter(f.size for f in trace_faces(g, rot))
        assert sizes[4] == n and sizes[n] == (2 if n != 4 else sizes[n])
        assert validate_embedding(g, trace_faces(g, rot)).is_sphere


def test_antiprism_3_is_octahedron():
    g, rot = families.antiprism(3)
    assert g.vertex_count == 6 and g.edge_count == 12
    assert all(g.degree(v) == 4 for v in g.vertices)
    sizes = Counter(f.size for f in trace_faces(g, rot))
    assert sizes == {3: 8}


def test_antiprism_faces():
    for n in (4, 5, 7):
        g, rot = families.antiprism(n)
        sizes = Counter(f.size for f in trace_faces(g, rot))
        assert sizes[3] == 2 * n and sizes[n] == 2
        assert validate_embedding(g, trace_faces(g, rot)).is_sphere


def test_cycle_complete_wheel_hypercube():
    g, rot = families.cycle(5)
    assert g.edge_count == 5 and rot is not None

    g, rot = families.complete(4)
    assert g.edge_count == 6
    assert sorted(f.size for f in trace_faces(g, rot)) == [3, 3, 3, 3]

    g, rot = families.complete(6)
    assert g.edge_count == 15 and rot is None

    g, rot = families.wheel(5)
    assert g.vertex_count == 6 and g.degree(5) == 5
    assert validate_embedding(g, trace_faces(g, rot)).is_sphere

    g, rot = families.hypercube(4)
    assert g.vertex_count == 16 and all(g.degree(v) == 4 for v in g.vertices)
    assert rot is None

    g, rot = families.hypercube(2)
    assert sorted(f.size for f in trace_faces(g, rot)) == [4, 4]

    g, rot = families.hypercube(1)
    assert g.edge_count == 1 and rot is not None


def test_icosahedron_shape():
    g, rot = families.icosahedron()
    assert g.vertex_count == 12 and g.edge_count == 30
    assert all(g.degree(v) == 5 for v in g.vertices)
    sizes = Counter(f.size for f in trace_faces(g, rot))
    assert sizes == {3: 20}


def test_every_emitted_rotation_is_spherical():
    cases = [
        families.figure1(),
        families.icosahedron(),
        families.cycle(7),
        families.complete(2),
        families.complete(3),
        families.complete(4),
        families.wheel(8),
        families.prism(6),
        families.antiprism(6),
        families.hypercube(1),
        families.hypercube(2),
        families.hypercube(3),
    ]
    for g, rot in cases:
        assert rot is not None
        check = validate_embedding(g, trace_faces(g, rot))
        assert check.is_sphere, f"{g!r} traced to characteristic {check.euler_characteristic}"


def test_generators_are_deterministic():
    for spec in [FamilySpec("figure1"), FamilySpec("prism", 7), FamilySpec("antiprism", 4)]:
        g1, r1 = spec.build()
        g2, r2 = spec.build()
        assert to_edgelist_text(g1) == to_edgelist_text(g2)
        assert to_rotation_text(r1) == to_rotation_text(r2)


def test_parameter_validation():
    for name, bad in [("cycle", 2), ("complete", 1), ("wheel", 2),
                      ("prism", 2), ("antiprism", 2), ("hypercube", 0)]:
        with pytest.raises(ValueError):
            FamilySpec(name, bad).build()
    with pytest.raises(ValueError, match="needs a parameter"):
        FamilySpec("prism").build()
    with pytest.raises(ValueError, match="takes no parameter"):
        FamilySpec("figure1", 3).build()
    with pytest.raises(ValueError, match="unknown family"):
        FamilySpec("petersen").build()
    assert FamilySpec("prism", 5).label() == "prism_5"
