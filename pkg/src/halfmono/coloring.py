"""Vertex colorings and the two checks that define admissibility.

A coloring is admissible when it is proper and, on every face of degree 2k,
some color class covers at least k of the boundary vertices.  Under a
proper coloring a class on an even cycle reaches half only as one of the
two alternation classes, so the count-based check below is equivalent to
"one alternation class of each face is monochromatic".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dividing import RegionDecomposition
from .plane_graph import BLACK, Bipartition, PlaneGraph


@dataclass(frozen=True)
class Coloring:
    """Dense surjective coloring: every color in 0..num_colors-1 is used."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        if set(self.colors) != set(range(self.num_colors)):
            raise ValueError("colors must be exactly 0..num_colors-1, all used")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Coloring":
        return cls(colors=tuple(labels), num_colors=max(labels) + 1)


def proper_labels(g: PlaneGraph, labels: Sequence[int]) -> bool:
    """True iff no edge joins two equal labels."""
    for u, v in g.edges:
        if labels[u] == labels[v]:
            return False
    return True


def half_monochromatic_labels(g: PlaneGraph, labels: Sequence[int]) -> bool:
    """True iff on every face some label covers at least half the boundary."""
    for f in g.faces:
        counts: dict[int, int] = {}
        best = 0
        for v in f.vertices:
            c = labels[v]
            k = counts.get(c, 0) + 1
            counts[c] = k
            if k > best:
                best = k
        if 2 * best < f.degree:
            return False
    return True


def check_proper(g: PlaneGraph, c: Coloring) -> bool:
    return proper_labels(g, c.colors)


def check_half_monochromatic(g: PlaneGraph, c: Coloring) -> bool:
    return half_monochromatic_labels(g, c.colors)


def coloring_from_regions(r: RegionDecomposition) -> Coloring:
    """Color every vertex by its region id.

    Regions are independent sets and adjacent vertices always fall into
    distinct neighbouring regions, so the result is proper; the uncut
    alternation class of each face shares one region, so it is also
    half-monochromatic.
    """
    return Coloring(
        colors=tuple(r.region_of_cell[v] for v in range(r.n)),
        num_colors=r.num_regions,
    )


def baseline_coloring(g: PlaneGraph, b: Bipartition) -> Coloring:
    """Give each vertex of the larger side its own color, one shared color
    for the rest.

    Boundary vertices of every face alternate sides, so the shared side is
    monochromatic on half of each face.  Uses max(|sides|) + 1 colors, at
    least ceil(n/2) + 1; ties go to the side of vertex 0.
    """
    black, white = b.black, b.white
    if len(white) > len(black):
        fresh = white
    elif len(black) > len(white):
        fresh = black
    else:
        fresh = black if b.side[0] == BLACK else white
    shared_color = len(fresh)
    colors = [shared_color] * g.n
    for i, v in enumerate(fresh):
        colors[v] = i
    return Coloring(colors=tuple(colors), num_colors=shared_color + 1)
