"""Instance files, corpus generators, Tutte layout and SVG rendering.

Instance format (line oriented, ``#`` starts a comment)::

    name grid2x3
    vertices 6
    rotation 0 1 3          # vertex id, then neighbours counterclockwise
    ...
    coord 0 0.0 0.0         # optional; all vertices or none

Rotations are the authoritative embedding; coordinates only drive drawing.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass, field

import numpy as np

from .coloring import Coloring
from .dividing import Cycle, assemble_dividing_system, extract_cycles
from .errors import BadParameter, DegenerateLayout, ParseError
from .medial import build_medial_graph
from .plane_graph import PlaneGraph, build_plane_graph, require_even_polygonal


@dataclass(frozen=True)
class InstanceFile:
    name: str
    n: int
    rotations: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[float, float], ...] | None = None


def build(inst: InstanceFile) -> PlaneGraph:
    """Build the plane graph an instance describes (without face validation)."""
    return build_plane_graph(inst.n, inst.rotations, inst.coords)


def parse_instance_text(text: str) -> InstanceFile:
    """Parse instance text, collecting every defect before failing."""
    defects: list[tuple[int, str]] = []
    name: str | None = None
    n: int | None = None
    rotations: dict[int, tuple[int, tuple[int, ...]]] = {}
    coords: dict[int, tuple[int, tuple[float, float]]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "name":
            if len(parts) < 2:
                defects.append((line_no, "name requires a value"))
            elif name is not None:
                defects.append((line_no, "duplicate name"))
            else:
                name = " ".join(parts[1:])
        elif key == "vertices":
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                defects.append((line_no, "vertices requires one integer"))
            elif n is not None:
                defects.append((line_no, "duplicate vertices"))
            elif int(parts[1]) <= 0:
                defects.append((line_no, "vertex count must be positive"))
            else:
                n = int(parts[1])
        elif key == "rotation":
            if len(parts) < 2 or any(not p.lstrip("-").isdigit() for p in parts[1:]):
                defects.append((line_no, "rotation requires integer ids"))
                continue
            v = int(parts[1])
            if v in rotations:
                defects.append((line_no, f"duplicate rotation for vertex {v}"))
            else:
                rotations[v] = (line_no, tuple(int(p) for p in parts[2:]))
        elif key == "coord":
            if len(parts) != 4 or not parts[1].lstrip("-").isdigit():
                defects.append((line_no, "coord requires: vertex id, x, y"))
                continue
            v = int(parts[1])
            try:
                xy = (float(parts[2]), float(parts[3]))
            except ValueError:
                defects.append((line_no, "coord values must be numbers"))
                continue
            if v in coords:
                defects.append((line_no, f"duplicate coord for vertex {v}"))
            else:
                coords[v] = (line_no, xy)
        else:
            defects.append((line_no, f"unknown directive {key!r}"))

    if n is None:
        defects.append((0, "missing 'vertices' line"))
    else:
        for v, (line_no, _) in sorted(rotations.items()):
            if not 0 <= v < n:
                defects.append((line_no, f"rotation for out-of-range vertex {v}"))
        for v, (line_no, _) in sorted(coords.items()):
            if not 0 <= v < n:
                defects.append((line_no, f"coord for out-of-range vertex {v}"))
        missing = [v for v in range(n) if v not in rotations]
        if missing:
            defects.append((0, f"missing rotation for vertices {missing}"))
        if coords:
            missing_xy = [v for v in range(n) if v not in coords]
            if missing_xy:
                defects.append((0, f"missing coord for vertices {missing_xy}"))

    if defects:
        raise ParseError(sorted(defects))
    assert n is not None
    return InstanceFile(
        name=name if name is not None else "unnamed",
        n=n,
        rotations=tuple(rotations[v][1] for v in range(n)),
        coords=tuple(coords[v][1] for v in range(n)) if coords else None,
    )


def parse_instance(text: str) -> PlaneGraph:
    """Parse, build and validate; any face defect is raised with face ids."""
    g = build(parse_instance_text(text))
    require_even_polygonal(g)
    return g


def serialize_instance(inst: InstanceFile) -> str:
    lines = [f"name {inst.name}", f"vertices {inst.n}"]
    for v, neigh in enumerate(inst.rotations):
        lines.append("rotation " + " ".join(str(x) for x in (v, *neigh)))
    if inst.coords is not None:
        for v, (x, y) in enumerate(inst.coords):
            lines.append(f"coord {v} {x!r} {y!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Corpus generators
# ---------------------------------------------------------------------------


def cycle_instance(length: int) -> InstanceFile:
    """A cycle drawn on a circle; its two faces are the inside and outside."""
    if length < 4 or length % 2 != 0:
        raise BadParameter("cycle length must be an even number >= 4")
    rotations = tuple(
        ((v + 1) % length, (v - 1) % length) for v in range(length)
    )
    coords = tuple(
        (math.cos(2 * math.pi * v / length), math.sin(2 * math.pi * v / length))
        for v in range(length)
    )
    return InstanceFile(f"cycle{length}", length, rotations, coords)


def grid_instance(rows: int, cols: int) -> InstanceFile:
    """A rows x cols lattice; neighbours listed counterclockwise (E, N, W, S)."""
    if rows < 2 or cols < 2:
        raise BadParameter("grid requires rows >= 2 and cols >= 2")
    n = rows * cols
    rotations = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            neigh = []
            if j + 1 < cols:
                neigh.append(v + 1)
            if i + 1 < rows:
                neigh.append(v + cols)
            if j - 1 >= 0:
                neigh.append(v - 1)
            if i - 1 >= 0:
                neigh.append(v - cols)
            rotations.append(tuple(neigh))
    coords = tuple(
        (float(v % cols), float(v // cols)) for v in range(n)
    )
    return InstanceFile(f"grid{rows}x{cols}", n, tuple(rotations), coords)


def prism_instance(cycle_len: int) -> InstanceFile:
    """Two concentric even cycles joined by spokes (cycle_len 4 is the cube)."""
    if cycle_len < 4 or cycle_len % 2 != 0:
        raise BadParameter("prism cycle length must be an even number >= 4")
    m = cycle_len
    rotations = []
    for i in range(m):  # outer ring
        rotations.append(((i + 1) % m, m + i, (i - 1) % m))
    for i in range(m):  # inner ring
        rotations.append((i, m + (i + 1) % m, m + (i - 1) % m))
    coords = []
    for radius in (2.0, 1.0):
        for i in range(m):
            ang = 2 * math.pi * i / m
            coords.append((radius * math.cos(ang), radius * math.sin(ang)))
    return InstanceFile(f"prism{m}", 2 * m, tuple(rotations), tuple(coords))


_FAMILIES = {"cycle": 1, "grid": 2, "prism": 1}


def generate_instance(family: str, params) -> InstanceFile:
    """Dispatch to a corpus family: cycle LEN, grid ROWS COLS, prism LEN."""
    params = tuple(params)
    if family not in _FAMILIES:
        raise BadParameter(f"unknown family {family!r}; know {sorted(_FAMILIES)}")
    if len(params) != _FAMILIES[family]:
        raise BadParameter(
            f"family {family!r} takes {_FAMILIES[family]} parameter(s)"
        )
    if family == "cycle":
        return cycle_instance(params[0])
    if family == "grid":
        return grid_instance(params[0], params[1])
    return prism_instance(params[0])


def subdivide_edge(inst: InstanceFile, u: int, v: int, times: int = 2) -> InstanceFile:
    """Replace edge {u, v} by a path through `times` fresh vertices.

    Subdividing an even number of times keeps every face degree even.  The
    fresh vertices take ids n, n+1, ... and are spaced along the segment
    when the instance carries coordinates.
    """
    if times < 1:
        raise BadParameter("times must be >= 1")
    rotations = [list(r) for r in inst.rotations]
    if not (0 <= u < inst.n and 0 <= v < inst.n) or v not in rotations[u]:
        raise BadParameter(f"no edge {u}-{v} to subdivide")
    chain = list(range(inst.n, inst.n + times))
    rotations[u][rotations[u].index(v)] = chain[0]
    rotations[v][rotations[v].index(u)] = chain[-1]
    path = [u, *chain, v]
    for k, w in enumerate(chain, start=1):
        rotations.append([path[k - 1], path[k + 1]])

    coords = None
    if inst.coords is not None:
        coords = list(inst.coords)
        (x0, y0), (x1, y1) = inst.coords[u], inst.coords[v]
        for k in range(1, times + 1):
            t = k / (times + 1)
            coords.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
        coords = tuple(coords)
    return InstanceFile(
        name=f"{inst.name}-sub{u}-{v}",
        n=inst.n + times,
        rotations=tuple(tuple(r) for r in rotations),
        coords=coords,
    )


# ---------------------------------------------------------------------------
# Layout and rendering
# ---------------------------------------------------------------------------


def tutte_embedding(
    g: PlaneGraph, outer_face: int | None = None
) -> tuple[tuple[float, float], ...]:
    """Barycentric layout: pin one face to a regular polygon, average the rest.

    Defaults to pinning a face of maximum degree.  Interior positions solve
    the linear system "every vertex sits at the mean of its neighbours" by
    direct elimination; a residual above 1e-9 or two vertices closer than
    1e-6 raise DegenerateLayout (expected when the graph is not
    3-connected), in which case callers should supply explicit coords.
    """
    if outer_face is None:
        outer_face = max(g.faces, key=lambda f: (f.degree, -f.id)).id
    boundary = g.faces[outer_face].vertices
    ring = len(boundary)
    pos: dict[int, tuple[float, float]] = {}
    for k, v in enumerate(boundary):
        ang = math.pi / 2 - 2 * math.pi * k / ring
        pos[v] = (math.cos(ang), math.sin(ang))

    interior = [v for v in range(g.n) if v not in pos]
    if interior:
        idx = {v: i for i, v in enumerate(interior)}
        a = np.zeros((len(interior), len(interior)))
        rhs = np.zeros((len(interior), 2))
        for v, i in idx.items():
            a[i, i] = g.degree(v)
            for u in g.rotations[v]:
                if u in idx:
                    a[i, idx[u]] -= 1.0
                else:
                    rhs[i, 0] += pos[u][0]
                    rhs[i, 1] += pos[u][1]
        try:
            sol = np.linalg.solve(a, rhs)
        except np.linalg.LinAlgError as exc:
            raise DegenerateLayout("barycentric system is singular") from exc
        for v, i in idx.items():
            pos[v] = (float(sol[i, 0]), float(sol[i, 1]))

    coords = tuple(pos[v] for v in range(g.n))
    for v in interior:
        mx = sum(coords[u][0] for u in g.rotations[v]) / g.degree(v)
        my = sum(coords[u][1] for u in g.rotations[v]) / g.degree(v)
        if math.hypot(coords[v][0] - mx, coords[v][1] - my) >= 1e-9:
            raise DegenerateLayout(f"residual too large at vertex {v}")
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if math.dist(coords[v], coords[w]) < 1e-6:
                raise DegenerateLayout(f"vertices {v} and {w} coincide")
    return coords


@dataclass(frozen=True)
class StyleOptions:
    scale: float = 70.0
    margin: float = 40.0
    vertex_radius: float = 7.0
    edge_width: float = 1.6
    curve_width: float = 2.4
    corner_pull: float = 0.45
    show_labels: bool = True


@dataclass(frozen=True)
class RenderSpec:
    graph: PlaneGraph
    parities: tuple[int, ...] | None = None
    coloring: Coloring | None = None
    style: StyleOptions = field(default_factory=StyleOptions)


def _hex_color(h: float, s: float, v: float) -> str:
    r, g, b = colorsys.hsv_to_rgb(h % 1.0, s, v)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _corner_control(
    g: PlaneGraph,
    coords: tuple[tuple[float, float], ...],
    me,
    pull: float,
) -> tuple[float, float]:
    """Quadratic control point: into the face wedge at the cut-off corner."""
    darts = g.faces[me.face].darts
    d_in = darts[me.position]
    d_out = darts[(me.position + 1) % len(darts)]
    a, v, b = g.dart_tail[d_in], g.dart_head[d_in], g.dart_head[d_out]
    pa, pv, pb = coords[a], coords[v], coords[b]
    theta_a = math.atan2(pa[1] - pv[1], pa[0] - pv[0])
    theta_b = math.atan2(pb[1] - pv[1], pb[0] - pv[0])
    spread = (theta_b - theta_a) % (2 * math.pi)
    bis = theta_a + spread / 2
    reach = pull * 0.5 * min(math.dist(pa, pv), math.dist(pb, pv))
    return (pv[0] + reach * math.cos(bis), pv[1] + reach * math.sin(bis))


def render_svg(spec: RenderSpec) -> str:
    """Deterministic SVG: base edges, one colored path per closed curve,
    vertices filled by the coloring when given."""
    g = spec.graph
    style = spec.style
    if spec.parities is not None and len(spec.parities) != g.num_faces:
        raise BadParameter(
            f"expected {g.num_faces} parity bits, got {len(spec.parities)}"
        )
    if spec.coloring is not None and len(spec.coloring.colors) != g.n:
        raise BadParameter("coloring does not cover every vertex")

    coords = g.coords if g.coords is not None else tutte_embedding(g)
    xs = [x for x, _ in coords]
    ys = [y for _, y in coords]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0

    def tx(p: tuple[float, float]) -> tuple[float, float]:
        return (
            style.margin + (p[0] - min(xs)) * style.scale,
            style.margin + (max(ys) - p[1]) * style.scale,  # y grows downward
        )

    width = 2 * style.margin + span_x * style.scale
    height = 2 * style.margin + span_y * style.scale

    cycles: tuple[Cycle, ...] = ()
    if spec.parities is not None:
        m = build_medial_graph(g)
        cycles = extract_cycles(assemble_dividing_system(m, spec.parities))

    def midpoint(edge_id: int) -> tuple[float, float]:
        u, v = g.edges[edge_id]
        return (
            (coords[u][0] + coords[v][0]) / 2,
            (coords[u][1] + coords[v][1]) / 2,
        )

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
        f'<g stroke="#555555" stroke-width="{_fmt(style.edge_width)}">',
    ]
    for u, v in g.edges:
        (x1, y1), (x2, y2) = tx(coords[u]), tx(coords[v])
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    out.append("</g>")

    if cycles:
        out.append(f'<g fill="none" stroke-width="{_fmt(style.curve_width)}">')
        for j, cyc in enumerate(cycles):
            x0, y0 = tx(midpoint(cyc.vertices[0]))
            path = [f"M {_fmt(x0)} {_fmt(y0)}"]
            for i, me in enumerate(cyc.edges):
                cx, cy = tx(_corner_control(g, coords, me, style.corner_pull))
                nx_, ny_ = tx(midpoint(cyc.vertices[(i + 1) % len(cyc.vertices)]))
                path.append(
                    f"Q {_fmt(cx)} {_fmt(cy)} {_fmt(nx_)} {_fmt(ny_)}"
                )
            path.append("Z")
            stroke = _hex_color(j / max(len(cycles), 1) + 0.08, 0.85, 0.72)
            out.append(f'<path d="{" ".join(path)}" stroke="{stroke}"/>')
        out.append("</g>")

    out.append('<g stroke="#000000" stroke-width="1.000000">')
    for v in range(g.n):
        x, y = tx(coords[v])
        if spec.coloring is not None:
            k = spec.coloring.num_colors
            fill = _hex_color(spec.coloring.colors[v] / max(k, 1), 0.45, 0.95)
        else:
            fill = "#ffffff"
        out.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
            f'r="{_fmt(style.vertex_radius)}" fill="{fill}"/>'
        )
    out.append("</g>")

    if style.show_labels:
        size = style.vertex_radius * 1.1
        out.append(
            f'<g font-family="Helvetica" font-size="{_fmt(size)}" '
            f'text-anchor="middle">'
        )
        for v in range(g.n):
            x, y = tx(coords[v])
            out.append(
                f'<text x="{_fmt(x)}" y="{_fmt(y + size * 0.35)}">{v}</text>'
            )
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"
