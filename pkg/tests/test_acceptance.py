"""Acceptance gate.

Nine criteria, each asserted by one test that also prints a PASS/FAIL
line on the unredirected stderr stream so the verdicts appear in every
run log, captured or not.  The corpus criteria sweep every connected
map with at most four edges, up to isomorphism (135 maps).
"""

import itertools
import sys
import time

import pytest

import surfgraph as sg
from surfgraph import (
    CorpusSpec,
    OrientationClass,
    all_orientations,
    bao_witness_vector,
    boundary,
    count_class,
    cw_faces,
    dual,
    dual_orientation,
    enumerate_class,
    face_matrix,
    generate,
    is_acyclic,
    is_boundary_acyclic,
    is_totally_biwalkable,
    is_totally_cyclic,
    poly_eval,
    signed_boundary,
    tbo_generating_poly_formula,
    tbo_generating_polynomial,
)
from mapzoo import (
    FACE_MATRIX_PRIMAL,
    KITE,
    KITE_ANCHOR_BOUNDARY,
    KITE_ANCHOR_FACES,
    KITE_ANCHOR_SIGNED,
    TORUS,
    proper_colorings,
)

_POLY_FN = {
    "tension": sg.poly_tension,
    "flow": sg.poly_flow,
    "local-tension": sg.poly_local_tension,
    "balanced-flow": sg.poly_balanced_flow,
}

_PAIR_FN = {
    "tension": sg.reciprocity_pairs_tension,
    "flow": sg.reciprocity_pairs_flow,
    "local-tension": sg.reciprocity_pairs_local_tension,
    "balanced-flow": sg.reciprocity_pairs_balanced_flow,
}

_SIGN_EXP = {
    "tension": lambda d: d.v_count - d.c,
    "flow": lambda d: d.e_count - d.v_count + d.c,
    "local-tension": lambda d: d.e_count - d.f_count + d.c,
    "balanced-flow": lambda d: d.f_count - d.c,
}

_CLASS_OF = {
    "tension": OrientationClass.AO,
    "flow": OrientationClass.TCO,
    "local-tension": OrientationClass.BAO,
    "balanced-flow": OrientationClass.TBO,
}


def _verdict(name: str, ok: bool) -> None:
    import conftest

    line = f"{'PASS' if ok else 'FAIL'}: {name}"
    print(line, file=sys.__stderr__, flush=True)
    conftest.ACCEPTANCE_LINES.append(line)
    assert ok, name


@pytest.fixture(scope="module")
def corpus():
    maps = []
    for m in range(5):
        maps.extend(generate(CorpusSpec(edges=m)))
    return maps


@pytest.fixture(scope="module")
def corpus_polys(corpus):
    return [
        {kind: fn(g) for kind, fn in _POLY_FN.items()} for g in corpus
    ]


def test_criterion_1_published_anchors():
    t0 = time.perf_counter()
    ok = all(sg.count_nz_tensions(TORUS, k) == 0 for k in range(1, 7))
    ok = ok and all(
        sg.count_nz_flows(dual(TORUS), k) == (k - 1) ** 2 for k in range(1, 7)
    )
    ok = ok and boundary(KITE, KITE_ANCHOR_FACES) == KITE_ANCHOR_BOUNDARY
    ok = ok and signed_boundary(KITE, KITE_ANCHOR_FACES) == KITE_ANCHOR_SIGNED
    # documented face matrix, up to relabeling and a global sign: two
    # rows, negatives of each other, each two 1s and two 0s
    mat = face_matrix(dual(FACE_MATRIX_PRIMAL))
    ok = ok and len(mat) == 2
    ok = ok and mat[0] == tuple(-x for x in mat[1])
    ok = ok and sorted(abs(x) for x in mat[0]) == [0, 0, 1, 1]
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1.0
    _verdict(
        "criterion 1: published anchors (torus polynomials, boundary "
        f"vectors, face matrix) in {elapsed:.3f}s < 1s",
        ok,
    )


def test_criterion_2_corpus_dualities(corpus):
    t0 = time.perf_counter()
    ok = len(corpus) == 135
    for g in corpus:
        gd = dual(g)
        for cls, dual_cls in (
            (OrientationClass.BAO, OrientationClass.TCO),
            (OrientationClass.AO, OrientationClass.TBO),
        ):
            image = {
                dual_orientation(g, o).signs for o in enumerate_class(g, cls)
            }
            ok = ok and image == {
                o.signs for o in enumerate_class(gd, dual_cls)
            }
        for k in range(1, 6):
            ok = ok and sg.count_nz_tensions(g, k) == sg.count_nz_balanced_flows(
                gd, k
            )
            ok = ok and sg.count_nz_local_tensions(g, k) == sg.count_nz_flows(
                gd, k
            )
        if not ok:
            break
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 300.0
    _verdict(
        "criterion 2: duality bijections and polynomial dualities over all "
        f"135 connected maps with <=4 edges in {elapsed:.1f}s < 300s",
        ok,
    )


def test_criterion_3_minus_one_identities(corpus, corpus_polys):
    ok = True
    for g, polys in zip(corpus, corpus_polys):
        for kind, cls in _CLASS_OF.items():
            ok = ok and abs(poly_eval(polys[kind], -1)) == count_class(g, cls)
        if not ok:
            break
    _verdict(
        "criterion 3: |polynomial(-1)| counts the matching orientation "
        "class, all four kinds, whole corpus",
        ok,
    )


def test_criterion_4_reciprocity(corpus, corpus_polys):
    ok = True
    for g, polys in zip(corpus, corpus_polys):
        d = g.euler
        for kind in _POLY_FN:
            sign = (-1) ** _SIGN_EXP[kind](d)
            for k in range(1, 4):
                ok = ok and sign * poly_eval(polys[kind], -k) == _PAIR_FN[
                    kind
                ](g, k)
        if not ok:
            break
    for k in range(1, 5):
        ok = ok and sg.reciprocity_pairs_local_tension(TORUS, k) == (k + 1) ** 2
    _verdict(
        "criterion 4: signed reciprocity for all four polynomials (k=1..3, "
        "whole corpus) and the torus pair counts (k+1)^2 for k=1..4",
        ok,
    )


def test_criterion_5_integral_reciprocity(corpus):
    ok = True
    for g in corpus:
        quasi = sg.quasi_integral_local_tensions(g)
        pairs = [
            sg.integral_local_tension_reciprocity_pairs(g, k) for k in range(4)
        ]
        ok = ok and pairs[0] == count_class(g, OrientationClass.BAO)
        ok = ok and all(
            abs(quasi.evaluate(-k)) == pairs[k] for k in range(4)
        )
        if not ok:
            break
    _verdict(
        "criterion 5: integral local-tension reciprocity (k=0..3, whole "
        "corpus), constant term counting boundary acyclic orientations",
        ok,
    )


def test_criterion_6_planar_collapse(corpus):
    ok = True
    for g in corpus:
        if g.euler.g != 0:
            continue
        ao = {o.signs for o in enumerate_class(g, OrientationClass.AO)}
        bao = {o.signs for o in enumerate_class(g, OrientationClass.BAO)}
        tco = {o.signs for o in enumerate_class(g, OrientationClass.TCO)}
        tbo = {o.signs for o in enumerate_class(g, OrientationClass.TBO)}
        ok = ok and ao == bao and tco == tbo
        if not ok:
            break
    _verdict(
        "criterion 6: on planar corpus maps the surface classes collapse "
        "(BAO = AO and TBO = TCO as sets)",
        ok,
    )


def test_criterion_7_oracle_agreement(corpus):
    # every predicate runs its independent routes and raises on any
    # disagreement, so a clean sweep is the agreement proof
    ok = True
    try:
        for g in corpus:
            for o in all_orientations(g):
                is_acyclic(g, o)
                is_totally_cyclic(g, o)
                is_boundary_acyclic(g, o)
                is_totally_biwalkable(g, o)
            for k in range(1, 5):
                # tension counts re-derive the cycle condition from every
                # simple cycle at this size, and must match colorings
                ok = ok and proper_colorings(g, k) == k ** g.euler.c * (
                    sg.count_nz_tensions(g, k)
                )
            if not ok:
                break
    except AssertionError:
        ok = False
    _verdict(
        "criterion 7: independent predicate routes agree on every "
        "orientation, and k^c * tension count equals proper colorings",
        ok,
    )


def test_criterion_8_witness_vectors(corpus):
    ok = True
    try:
        for g in corpus:
            for o in enumerate_class(g, OrientationClass.BAO):
                vec = bao_witness_vector(g, o)
                ok = ok and len(vec) == g.num_edges
            if not ok:
                break
    except AssertionError:
        ok = False
    _verdict(
        "criterion 8: a kernel witness vector with matching signs exists "
        "for every boundary acyclic orientation in the corpus",
        ok,
    )


def test_criterion_9_cw_face_counts(corpus):
    ok = True
    for g in corpus:
        dual_tension = sg.poly_tension(dual(g))
        tbos = enumerate_class(g, OrientationClass.TBO)
        ok = ok and abs(poly_eval(dual_tension, -1)) == len(tbos)
        const = abs(dual_tension[0]) if dual_tension else 0
        for f in range(g.num_faces):
            unique = sum(1 for o in tbos if cw_faces(g, o) == {f})
            ok = ok and unique == const
        ok = ok and tbo_generating_polynomial(g) == tbo_generating_poly_formula(g)
        if not ok:
            break
    _verdict(
        "criterion 9: dual tension evaluations count totally bi-walkable "
        "orientations, per-face unique-cw counts, and the histogram formula",
        ok,
    )
