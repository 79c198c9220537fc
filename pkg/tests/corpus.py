"""Shared instances and small math helpers for the test suite."""

from __future__ import annotations

import random
from dataclasses import replace
from math import comb

from halfmono.instance_io import (
    InstanceFile,
    build,
    cycle_instance,
    grid_instance,
    prism_instance,
    subdivide_edge,
)
from halfmono.plane_graph import PlaneGraph


def bell(n: int) -> int:
    """Number of set partitions of an n-element set."""
    b = [1]
    for m in range(n):
        b.append(sum(comb(m, k) * b[k] for k in range(m + 1)))
    return b[n]


def cycle_graph(length: int) -> PlaneGraph:
    return build(cycle_instance(length))


def grid_graph(rows: int, cols: int) -> PlaneGraph:
    return build(grid_instance(rows, cols))


def prism_graph(cycle_len: int) -> PlaneGraph:
    return build(prism_instance(cycle_len))


def instance_edges(inst: InstanceFile) -> list[tuple[int, int]]:
    return sorted(
        {(min(u, v), max(u, v)) for u, neigh in enumerate(inst.rotations) for v in neigh}
    )


def random_subdivided_instance(seed: int, max_vertices: int = 10) -> InstanceFile:
    """A seeded quadrangulation-like instance: a small grid with random
    edges each subdivided twice (which keeps every face degree even)."""
    rng = random.Random(seed)
    rows, cols = rng.choice([(2, 2), (2, 3), (2, 4)])
    inst = grid_instance(rows, cols)
    max_pairs = (max_vertices - inst.n) // 2
    for _ in range(rng.randint(1, max_pairs)):
        u, v = rng.choice(instance_edges(inst))
        inst = subdivide_edge(inst, u, v, times=2)
    return replace(inst, name=f"subgrid{rows}x{cols}-s{seed}")


def corpus_instances() -> list[InstanceFile]:
    """The full verification corpus: even cycles, grids, even prisms."""
    out = [cycle_instance(m) for m in (4, 6, 8, 10, 12)]
    out += [grid_instance(r, c) for r, c in ((2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (4, 5))]
    out += [prism_instance(m) for m in (4, 6, 8)]
    return out


def corpus_graphs() -> list[tuple[str, PlaneGraph]]:
    return [(inst.name, build(inst)) for inst in corpus_instances()]


def oracle_corpus_graphs() -> list[tuple[str, PlaneGraph]]:
    """Instances small enough for the partition-scan oracle (<= 10 vertices)."""
    named = [
        cycle_instance(4),
        cycle_instance(6),
        cycle_instance(8),
        grid_instance(2, 3),
        grid_instance(2, 4),
    ]
    named += [random_subdivided_instance(seed) for seed in range(25)]
    return [(inst.name, build(inst)) for inst in named]
