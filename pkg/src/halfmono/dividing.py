"""Dividing systems: per-face matchings, their closed curves and regions.

A dividing system picks, in every face, one of the two perfect matchings of
that face's medial cycle.  The union of the selected edges is a disjoint
collection of closed curves.  Regions are computed without any geometry:
the faces of the medial graph are one cell per base vertex plus one cell
per base face, two cells sharing a non-selected medial edge lie in the same
region, and a union-find over the cells yields the region partition.  The
classical fact "k closed curves cut the sphere into k + 1 regions" becomes
a verified law rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParameter,
    InternalDegreeViolation,
    InternalInvariantError,
    NotATree,
    RegionCycleMismatch,
)
from .medial import MedialEdge, MedialGraph


@dataclass(frozen=True)
class DividingSystem:
    parities: tuple[int, ...]  # one matching-selection bit per face
    edges: tuple[MedialEdge, ...]
    cut_count: tuple[int, ...]  # selected edges cutting each base vertex


@dataclass(frozen=True)
class Cycle:
    """One closed curve; edges[i] joins vertices[i] to vertices[(i+1) % len]."""

    vertices: tuple[int, ...]
    edges: tuple[MedialEdge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class RegionDecomposition:
    n: int  # base vertex count; cells 0..n-1 are vertex cells, then face cells
    num_regions: int
    region_of_cell: tuple[int, ...]
    regions: tuple[tuple[int, ...], ...]  # base vertices per region, sorted
    cycles: tuple[Cycle, ...]

    def region_of_vertex(self, v: int) -> int:
        return self.region_of_cell[v]

    def region_of_face(self, f: int) -> int:
        return self.region_of_cell[self.n + f]


@dataclass(frozen=True)
class DivisionTree:
    """One node per region, one edge per closed curve between its two sides."""

    num_nodes: int
    edges: tuple[tuple[int, int], ...]  # aligned with the decomposition cycles
    edge_set: frozenset[tuple[int, int]]
    degrees: tuple[int, ...]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edge_set

    def degree_classes(self) -> dict[int, tuple[int, ...]]:
        classes: dict[int, list[int]] = {}
        for node, deg in enumerate(self.degrees):
            classes.setdefault(deg, []).append(node)
        return {deg: tuple(nodes) for deg, nodes in sorted(classes.items())}


def assemble_dividing_system(
    m: MedialGraph, parities
) -> DividingSystem:
    """Select one matching per face and verify the degree-two law.

    Every midpoint lies on exactly two face cycles and receives one matching
    edge from each, so the selected edges form vertex-disjoint closed curves.
    """
    bits = tuple(parities)
    if len(bits) != len(m.face_edges):
        raise BadParameter(
            f"expected {len(m.face_edges)} parity bits, got {len(bits)}"
        )
    if any(b not in (0, 1) for b in bits):
        raise BadParameter("parity bits must be 0 or 1")

    selected: list[MedialEdge] = []
    for f, bit in enumerate(bits):
        selected.extend(m.face_edges[f][bit::2])

    degree = [0] * m.num_vertices
    cut_count = [0] * m.graph.n
    for e in selected:
        degree[e.a] += 1
        degree[e.b] += 1
        cut_count[e.corner] += 1
    bad = [v for v, d in enumerate(degree) if d != 2]
    if bad:
        raise InternalDegreeViolation(
            f"midpoint {bad[0]} has degree {degree[bad[0]]}, expected 2"
        )
    return DividingSystem(
        parities=bits, edges=tuple(selected), cut_count=tuple(cut_count)
    )


def extract_cycles(d: DividingSystem) -> tuple[Cycle, ...]:
    """Split the selected edges into closed curves, ordered by smallest midpoint."""
    incident: dict[int, list[MedialEdge]] = {}
    for e in d.edges:
        incident.setdefault(e.a, []).append(e)
        incident.setdefault(e.b, []).append(e)
    for edges in incident.values():
        edges.sort(key=lambda e: e.key)

    visited: set[int] = set()
    cycles: list[Cycle] = []
    for start in sorted(incident):
        if start in visited:
            continue
        verts = [start]
        edges: list[MedialEdge] = []
        visited.add(start)
        current = start
        edge = incident[start][0]
        while True:
            edges.append(edge)
            nxt = edge.b if edge.a == current else edge.a
            if nxt == start:
                break
            verts.append(nxt)
            visited.add(nxt)
            first, second = incident[nxt]
            edge = second if first.key == edge.key else first
            current = nxt
        cycles.append(Cycle(vertices=tuple(verts), edges=tuple(edges)))
    return tuple(cycles)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def decompose_regions(m: MedialGraph, d: DividingSystem) -> RegionDecomposition:
    """Union-find the medial cells into regions of the dividing system.

    A non-selected medial edge tagged (face f, corner v) is an open border
    between the cell of v and the cell of f; cells joined through such
    borders form one region.  Verifies that the region count exceeds the
    curve count by exactly one.
    """
    g = m.graph
    num_cells = g.n + g.num_faces
    parent = list(range(num_cells))
    for f, bit in enumerate(d.parities):
        for e in m.face_edges[f][1 - bit :: 2]:
            ra = _find(parent, e.corner)
            rb = _find(parent, g.n + e.face)
            if ra != rb:
                parent[ra] = rb

    roots: dict[int, list[int]] = {}
    for cell in range(num_cells):
        roots.setdefault(_find(parent, cell), []).append(cell)
    ordered = sorted(roots.values(), key=lambda cells: cells[0])

    region_of_cell = [-1] * num_cells
    regions: list[tuple[int, ...]] = []
    for rid, cells in enumerate(ordered):
        for cell in cells:
            region_of_cell[cell] = rid
        regions.append(tuple(v for v in cells if v < g.n))

    if any(not r for r in regions):
        raise InternalInvariantError("region without any base vertex")

    cycles = extract_cycles(d)
    if len(ordered) != len(cycles) + 1:
        raise RegionCycleMismatch(
            f"{len(ordered)} regions but {len(cycles)} curves"
        )
    return RegionDecomposition(
        n=g.n,
        num_regions=len(ordered),
        region_of_cell=tuple(region_of_cell),
        regions=tuple(regions),
        cycles=cycles,
    )


def build_division_tree(r: RegionDecomposition) -> DivisionTree:
    """Join, for every curve, the two regions on its sides; verify treeness.

    Every edge of one curve separates the same two regions, so the edge with
    the smallest (face, position) tag is used as the deterministic witness.
    """
    tree_edges: list[tuple[int, int]] = []
    for cyc in r.cycles:
        e = min(cyc.edges, key=lambda me: me.key)
        a = r.region_of_cell[e.corner]
        b = r.region_of_cell[r.n + e.face]
        if a == b:
            raise NotATree(f"curve through midpoint {e.a} borders a single region")
        tree_edges.append((min(a, b), max(a, b)))

    parent = list(range(r.num_regions))
    degrees = [0] * r.num_regions
    for a, b in tree_edges:
        degrees[a] += 1
        degrees[b] += 1
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            raise NotATree(f"regions {a} and {b} are joined by two curve paths")
        parent[ra] = rb
    # num_regions nodes with num_regions - 1 acyclic edges are connected.
    if len(tree_edges) != r.num_regions - 1:
        raise NotATree(
            f"{len(tree_edges)} edges on {r.num_regions} regions"
        )
    return DivisionTree(
        num_nodes=r.num_regions,
        edges=tuple(tree_edges),
        edge_set=frozenset(tree_edges),
        degrees=tuple(degrees),
    )
