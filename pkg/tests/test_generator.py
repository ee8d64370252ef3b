"""Exhaustive map generation and its censuses."""

import pytest

from surfgraph import (
    CorpusSpec,
    SurfGraphError,
    TooLarge,
    canonical_code,
    corpus_stats,
    dual,
    generate,
)

# connected maps up to isomorphism by edge count, checked against an
# independent hand count for m <= 2
CONNECTED_CENSUS = {0: 1, 1: 2, 2: 5, 3: 20, 4: 107}


def test_connected_census():
    for m, expect in CONNECTED_CENSUS.items():
        assert sum(1 for _ in generate(CorpusSpec(edges=m))) == expect


def test_two_edge_stratification():
    stats = corpus_stats(generate(CorpusSpec(edges=2)))
    assert stats == {
        (1, 2, 1, 1, 1): 1,  # interleaved loops: the torus map
        (1, 2, 3, 1, 0): 1,  # nested loops
        (2, 2, 2, 1, 0): 2,  # double edge; loop with a pendant edge
        (3, 2, 1, 1, 0): 1,  # path
    }


def test_zero_edges():
    maps = list(generate(CorpusSpec(edges=0)))
    assert len(maps) == 1
    assert maps[0].num_vertices == 1
    assert maps[0].num_edges == 0


def test_surface_filters():
    planar = list(generate(CorpusSpec(edges=2, planar=True)))
    twisted = list(generate(CorpusSpec(edges=2, planar=False)))
    genus1 = list(generate(CorpusSpec(edges=2, genus=1)))
    assert len(planar) == 4
    assert len(twisted) == 1
    assert len(genus1) == 1
    assert canonical_code(twisted[0]) == canonical_code(genus1[0])


def test_no_dedupe_counts_labeled_maps():
    assert sum(1 for _ in generate(CorpusSpec(edges=2, dedupe=False))) == 20


def test_output_is_sorted_and_duplicate_free():
    codes = [canonical_code(g) for g in generate(CorpusSpec(edges=3))]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)


def test_corpus_is_closed_under_duality():
    codes = {canonical_code(g) for g in generate(CorpusSpec(edges=3))}
    assert {canonical_code(dual(g)) for g in generate(CorpusSpec(edges=3))} == codes


def test_spec_validation():
    with pytest.raises(SurfGraphError):
        CorpusSpec(edges=-1)
    with pytest.raises(SurfGraphError):
        CorpusSpec(edges=2, genus=-3)


def test_generator_guard():
    with pytest.raises(TooLarge):
        next(generate(CorpusSpec(edges=6)))
