import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import corpus_graphs, cycle_graph, grid_graph, prism_graph
from halfmono.errors import (
    EulerViolation,
    InconsistentRotation,
    NotConnected,
    OddCycleFound,
)
from halfmono.plane_graph import (
    BLACK,
    FACE_NOT_CYCLE,
    ODD_FACE,
    WHITE,
    build_plane_graph,
    compute_bipartition,
    validate_even_polygonal,
)

C4_ROTATIONS = [[1, 3], [2, 0], [3, 1], [0, 2]]
# K4 drawn with vertex 0 in the middle of triangle 1-2-3
K4_ROTATIONS = [[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]]

CORPUS = corpus_graphs()


def test_build_c4():
    g = build_plane_graph(4, C4_ROTATIONS)
    assert (g.n, g.num_edges, g.num_faces) == (4, 4, 2)
    assert [f.degree for f in g.faces] == [4, 4]


def test_build_grid_2x3():
    g = grid_graph(2, 3)
    assert (g.n, g.num_edges, g.num_faces) == (6, 7, 3)
    assert sorted(f.degree for f in g.faces) == [4, 4, 6]
    assert g.n - g.num_edges + g.num_faces == 2


def test_path_builds_with_one_degenerate_face():
    g = build_plane_graph(3, [[1], [0, 2], [1]])
    assert g.num_faces == 1
    assert g.faces[0].degree == 4
    report = validate_even_polygonal(g)
    assert not report.ok
    assert report.defects[0].kind == FACE_NOT_CYCLE


@pytest.mark.parametrize(
    "n,rotations",
    [
        (2, [[1], []]),  # 0 lists 1 but not vice versa
        (2, [[1, 1], [0]]),  # repeated neighbour
        (2, [[0], [0]]),  # self loop
        (2, [[2], [0]]),  # out of range
        (3, [[1], [0]]),  # wrong number of rotation lists
        (0, []),  # empty graph
    ],
)
def test_inconsistent_rotations_rejected(n, rotations):
    with pytest.raises(InconsistentRotation):
        build_plane_graph(n, rotations)


def test_disconnected_rejected():
    two_squares = [[1, 3], [2, 0], [3, 1], [0, 2], [5, 7], [6, 4], [7, 5], [4, 6]]
    with pytest.raises(NotConnected):
        build_plane_graph(8, two_squares)


def test_nonplanar_rotation_violates_euler():
    k5 = [[v for v in range(5) if v != u] for u in range(5)]
    with pytest.raises(EulerViolation):
        build_plane_graph(5, k5)


def test_validate_c4_ok():
    assert validate_even_polygonal(build_plane_graph(4, C4_ROTATIONS)).ok


def test_validate_k4_odd_faces():
    g = build_plane_graph(4, K4_ROTATIONS)
    report = validate_even_polygonal(g)
    assert not report.ok
    assert {d.face for d in report.defects} == {0, 1, 2, 3}
    assert all(d.kind == ODD_FACE for d in report.defects)


def test_validate_p3_face_not_cycle():
    g = build_plane_graph(3, [[1], [0, 2], [1]])
    report = validate_even_polygonal(g)
    assert [d.kind for d in report.defects] == [FACE_NOT_CYCLE]


def test_bipartition_c4():
    g = build_plane_graph(4, C4_ROTATIONS)
    b = compute_bipartition(g)
    assert b.side == (BLACK, WHITE, BLACK, WHITE)
    assert b.black == (0, 2)
    assert b.white == (1, 3)


def test_bipartition_sizes():
    assert len(compute_bipartition(grid_graph(2, 3)).black) == 3
    cube = prism_graph(4)
    b = compute_bipartition(cube)
    assert len(b.black) == len(b.white) == 4


def test_bipartition_on_odd_faces_raises():
    g = build_plane_graph(4, K4_ROTATIONS)  # deliberately skips validation
    with pytest.raises(OddCycleFound):
        compute_bipartition(g)


@pytest.mark.parametrize("name,g", CORPUS)
def test_corpus_valid_and_euler(name, g):
    assert validate_even_polygonal(g).ok
    assert g.n - g.num_edges + g.num_faces == 2
    assert all(f.degree % 2 == 0 and f.degree >= 4 for f in g.faces)


@pytest.mark.parametrize("name,g", CORPUS)
def test_every_dart_in_exactly_one_face(name, g):
    seen = [0] * g.num_darts
    for f in g.faces:
        for d in f.darts:
            seen[d] += 1
            assert g.dart_face[d] == f.id
    assert seen == [1] * g.num_darts


@pytest.mark.parametrize("name,g", CORPUS)
def test_face_walks_closed_and_canonical(name, g):
    for f in g.faces:
        for i, d in enumerate(f.darts):
            nxt = f.darts[(i + 1) % f.degree]
            assert g.dart_head[d] == g.dart_tail[nxt]
        start = min(f.darts, key=lambda d: (g.dart_tail[d], g.dart_head[d]))
        assert f.darts[0] == start


@given(g=st.sampled_from([g for _, g in CORPUS]))
def test_rebuild_is_deterministic(g):
    again = build_plane_graph(g.n, g.rotations, g.coords)
    assert again.faces == g.faces
    assert again.edges == g.edges
    assert again.dart_next == g.dart_next


@given(g=st.sampled_from([g for _, g in CORPUS]))
def test_bipartition_alternates_around_faces(g):
    b = compute_bipartition(g)
    for f in g.faces:
        sides = [b.side[v] for v in f.vertices]
        assert all(sides[i] != sides[(i + 1) % len(sides)] for i in range(len(sides)))
