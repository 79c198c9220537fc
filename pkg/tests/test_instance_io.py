import math

import pytest

from corpus import corpus_instances, random_subdivided_instance
from halfmono.coloring import Coloring
from halfmono.errors import BadParameter, FaceStructureError, ParseError
from halfmono.instance_io import (
    InstanceFile,
    RenderSpec,
    build,
    cycle_instance,
    generate_instance,
    grid_instance,
    parse_instance,
    parse_instance_text,
    prism_instance,
    render_svg,
    serialize_instance,
    subdivide_edge,
    tutte_embedding,
)
from halfmono.plane_graph import validate_even_polygonal

K4_TEXT = """\
name k4
vertices 4
rotation 0 1 2 3
rotation 1 2 0 3
rotation 2 3 0 1
rotation 3 1 0 2
"""


@pytest.mark.parametrize("inst", corpus_instances(), ids=lambda i: i.name)
def test_round_trip(inst):
    again = parse_instance_text(serialize_instance(inst))
    assert again == inst
    g1, g2 = build(inst), build(again)
    assert g1.faces == g2.faces
    assert g1.edges == g2.edges


def test_parse_reports_every_defect():
    text = """\
name broken
vertices 3
rotation 0 1
rotation 1 0 2
rotation 2 x
coord 0 1.0
wobble 3
"""
    with pytest.raises(ParseError) as err:
        parse_instance_text(text)
    messages = [msg for _, msg in err.value.defects]
    assert len(messages) >= 3  # bad rotation, bad coord, unknown directive
    lines = [line for line, _ in err.value.defects]
    assert 5 in lines and 6 in lines and 7 in lines
    assert any("missing rotation" in msg for msg in messages)


def test_parse_missing_rotation():
    with pytest.raises(ParseError) as err:
        parse_instance_text("vertices 2\nrotation 0 1\n")
    assert any("missing rotation" in msg for _, msg in err.value.defects)


def test_parse_instance_surfaces_face_defects():
    with pytest.raises(FaceStructureError) as err:
        parse_instance(K4_TEXT)
    assert {d.face for d in err.value.report.defects} == {0, 1, 2, 3}


def test_generate_families():
    assert build(generate_instance("cycle", [4])).num_faces == 2
    g23 = build(generate_instance("grid", [2, 3]))
    assert (g23.n, g23.num_faces) == (6, 3)
    cube = build(generate_instance("prism", [4]))
    assert (cube.n, cube.num_faces) == (8, 6)
    assert all(f.degree == 4 for f in cube.faces)


@pytest.mark.parametrize(
    "family,params",
    [
        ("cycle", [5]),
        ("cycle", [2]),
        ("grid", [1, 3]),
        ("prism", [3]),
        ("prism", [2]),
        ("grid", [3]),
        ("triangle", [3]),
    ],
)
def test_generator_bad_parameters(family, params):
    with pytest.raises(BadParameter):
        generate_instance(family, params)


@pytest.mark.parametrize("inst", corpus_instances(), ids=lambda i: i.name)
def test_generated_instances_validate(inst):
    assert validate_even_polygonal(build(inst)).ok


def test_subdivide_keeps_faces_even():
    inst = grid_instance(2, 2)
    sub = subdivide_edge(inst, 0, 1, times=2)
    assert sub.n == 6
    g = build(sub)
    assert validate_even_polygonal(g).ok
    assert sorted(f.degree for f in g.faces) == [6, 6]
    assert sub.coords is not None and len(sub.coords) == 6


def test_random_subdivided_corpus_is_valid():
    for seed in range(25):
        inst = random_subdivided_instance(seed)
        assert inst.n <= 10
        assert validate_even_polygonal(build(inst)).ok


def _proper_crossing(p1, p2, p3, p4):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1, d2 = orient(p3, p4, p1), orient(p3, p4, p2)
    d3, d4 = orient(p1, p2, p3), orient(p1, p2, p4)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def _count_crossings(g, coords):
    count = 0
    for i, (u1, v1) in enumerate(g.edges):
        for u2, v2 in g.edges[i + 1 :]:
            if {u1, v1} & {u2, v2}:
                continue
            if _proper_crossing(coords[u1], coords[v1], coords[u2], coords[v2]):
                count += 1
    return count


def test_tutte_cube_layout():
    g = build(prism_instance(4))
    coords = tutte_embedding(g)
    assert _count_crossings(g, coords) == 0
    for v in range(g.n):
        for w in range(v + 1, g.n):
            assert math.dist(coords[v], coords[w]) > 1e-6


def test_tutte_c4_pins_everything():
    g = build(cycle_instance(4))
    coords = tutte_embedding(g)
    assert all(abs(math.hypot(x, y) - 1.0) < 1e-12 for x, y in coords)


def test_tutte_grid_layout():
    g = build(grid_instance(2, 3))
    coords = tutte_embedding(g)
    assert _count_crossings(g, coords) == 0


def test_render_is_deterministic():
    g = build(cycle_instance(4))
    spec = RenderSpec(graph=g, parities=(0, 0), coloring=Coloring((0, 1, 0, 2), 3))
    first = render_svg(spec)
    assert render_svg(spec) == first
    rebuilt = build(parse_instance_text(serialize_instance(cycle_instance(4))))
    assert (
        render_svg(
            RenderSpec(
                graph=rebuilt, parities=(0, 0), coloring=Coloring((0, 1, 0, 2), 3)
            )
        )
        == first
    )


def test_render_structure():
    g = build(cycle_instance(4))
    svg = render_svg(RenderSpec(graph=g, parities=(0, 0)))
    assert svg.count("<path ") == 2  # one closed curve per digon
    assert svg.count("<circle ") == 4
    plain = render_svg(RenderSpec(graph=g))
    assert "<path " not in plain


def test_render_rejects_wrong_parity_length():
    g = build(cycle_instance(4))
    with pytest.raises(BadParameter):
        render_svg(RenderSpec(graph=g, parities=(0,)))
    with pytest.raises(BadParameter):
        render_svg(RenderSpec(graph=g, coloring=Coloring((0, 1, 0), 2)))


def test_render_uses_tutte_when_no_coords():
    inst = prism_instance(4)
    bare = InstanceFile(inst.name, inst.n, inst.rotations, None)
    svg = render_svg(RenderSpec(graph=build(bare)))
    assert svg.count("<circle ") == 8
