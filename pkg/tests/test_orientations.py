"""Orientation classes: predicates, censuses, duality, cw-face statistics."""

import itertools

import pytest

from surfgraph import (
    CorpusSpec,
    GraphMismatch,
    Orientation,
    OrientationClass,
    TooLarge,
    all_orientations,
    build,
    count_class,
    cw_faces,
    dual,
    dual_orientation,
    enumerate_class,
    generate,
    is_acyclic,
    is_boundary_acyclic,
    is_totally_biwalkable,
    is_totally_cyclic,
    orientation_from_string,
    orientation_to_string,
    tbo_generating_poly_formula,
    tbo_generating_polynomial,
    tbo_histogram,
)
from mapzoo import KITE, LOOP, NAMED, TORUS, TRIANGLE, directed_walk_tbo

# (ao, tco, bao, tbo) per zoo map; frozen by brute force over 2^E orientations
CENSUS = {
    "edgeless": (1, 1, 1, 1),
    "bridge": (2, 0, 2, 0),
    "loop": (0, 2, 0, 2),
    "triangle": (6, 2, 6, 2),
    "theta": (2, 6, 2, 6),
    "torus": (0, 4, 4, 0),
    "kite": (0, 56, 24, 24),
}

_CLASSES = (
    OrientationClass.AO,
    OrientationClass.TCO,
    OrientationClass.BAO,
    OrientationClass.TBO,
)


def test_census_table():
    for name, g in NAMED.items():
        assert tuple(count_class(g, c) for c in _CLASSES) == CENSUS[name], name


def test_class_inclusions():
    for g in NAMED.values():
        for o in all_orientations(g):
            if is_acyclic(g, o):
                assert is_boundary_acyclic(g, o)
            if is_totally_biwalkable(g, o):
                assert is_totally_cyclic(g, o)


def test_planar_collapse_on_the_zoo():
    for name, g in NAMED.items():
        if g.euler.g != 0:
            continue
        for o in all_orientations(g):
            assert is_acyclic(g, o) == is_boundary_acyclic(g, o), name
            assert is_totally_cyclic(g, o) == is_totally_biwalkable(g, o), name


def test_torus_map_separates_the_classes():
    # on the torus every orientation is totally cyclic and boundary
    # acyclic, none is acyclic or totally bi-walkable
    for o in all_orientations(TORUS):
        assert is_totally_cyclic(TORUS, o)
        assert is_boundary_acyclic(TORUS, o)
        assert not is_acyclic(TORUS, o)
        assert not is_totally_biwalkable(TORUS, o)


def test_predicates_match_walk_definition():
    # definitional oracle: every edge on a closed directed walk that no
    # cocycle meets coherently
    for m in range(0, 4):
        for g in generate(CorpusSpec(edges=m)):
            for o in all_orientations(g):
                assert directed_walk_tbo(g, o.signs) == is_totally_biwalkable(
                    g, o
                )


def test_specific_triangle_orientations():
    cyclic = orientation_from_string(TRIANGLE, "+++")
    assert is_totally_cyclic(TRIANGLE, cyclic)
    assert not is_acyclic(TRIANGLE, cyclic)
    flipped = orientation_from_string(TRIANGLE, "++-")
    assert is_acyclic(TRIANGLE, flipped)
    assert not is_totally_cyclic(TRIANGLE, flipped)


def test_orientation_validation():
    with pytest.raises(GraphMismatch):
        Orientation(TRIANGLE, (1, 1))
    with pytest.raises(GraphMismatch):
        Orientation(TRIANGLE, (1, 0, 1))
    with pytest.raises(GraphMismatch):
        orientation_from_string(TRIANGLE, "++")
    with pytest.raises(GraphMismatch):
        orientation_from_string(TRIANGLE, "+x+")
    with pytest.raises(GraphMismatch):
        is_acyclic(TORUS, Orientation(TRIANGLE, (1, 1, 1)))


def test_orientation_strings():
    o = orientation_from_string(TRIANGLE, "+-+")
    assert o.signs == (1, -1, 1)
    assert orientation_to_string(o) == "+-+"
    # unicode minus is accepted on input, never emitted
    assert orientation_from_string(TRIANGLE, "+−+").signs == (1, -1, 1)


def test_reverse_and_endpoints():
    o = orientation_from_string(TRIANGLE, "+-+")
    assert o.reverse().signs == (-1, 1, -1)
    t, h = TRIANGLE.edge_tail_vertex(1), TRIANGLE.edge_head_vertex(1)
    assert o.edge_endpoints(1) == (h, t)
    assert o.edge_endpoints(0) == (
        TRIANGLE.edge_tail_vertex(0),
        TRIANGLE.edge_head_vertex(0),
    )


def test_dual_orientation_double_application_is_identity():
    for g in NAMED.values():
        gd = dual(g)
        for o in all_orientations(g):
            od = dual_orientation(g, o)
            assert od.graph == gd
            assert dual_orientation(gd, od).signs == o.signs


def test_elementwise_duality_bijections():
    for g in NAMED.values():
        gd = dual(g)
        for cls, dual_cls in (
            (OrientationClass.BAO, OrientationClass.TCO),
            (OrientationClass.AO, OrientationClass.TBO),
        ):
            image = {
                dual_orientation(g, o).signs for o in enumerate_class(g, cls)
            }
            assert image == {o.signs for o in enumerate_class(gd, dual_cls)}


def test_cw_faces_of_the_cyclic_triangle():
    seen = set()
    for o in enumerate_class(TRIANGLE, OrientationClass.TBO):
        faces = cw_faces(TRIANGLE, o)
        assert len(faces) == 1
        seen |= faces
    assert seen == {0, 1}


def test_cw_faces_never_contain_a_tail_dart():
    for g in (TRIANGLE, TORUS, KITE):
        for o in all_orientations(g):
            for f in cw_faces(g, o):
                orbit = g.faces[f]
                tails = {
                    (t if s == 1 else h)
                    for (t, h), s in zip(g.edge_pairs, o.signs)
                }
                assert not (set(orbit) & tails)


def test_tbo_histograms():
    assert tbo_histogram(TRIANGLE) == {1: 2}
    assert tbo_histogram(TORUS) == {}
    assert tbo_histogram(KITE) == {1: 24}


def test_histogram_matches_formula_on_zoo():
    for name, g in NAMED.items():
        assert tbo_generating_polynomial(g) == tbo_generating_poly_formula(
            g
        ), name


def test_enumeration_guard():
    big = build(
        42,
        [tuple(range(42))],
        [(2 * i, 2 * i + 1) for i in range(21)],
    )
    with pytest.raises(TooLarge):
        count_class(big, OrientationClass.AO)
