"""Brute-force maximum color count by scanning all vertex partitions.

This is the anti-circularity instrument of the test suite: it shares the
admissibility checks with the coloring module but deliberately never
touches the medial/region machinery, so agreeing answers from here and
from the region-based solver confirm each other through independent
search paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coloring import (
    Coloring,
    check_half_monochromatic,
    check_proper,
    half_monochromatic_labels,
    proper_labels,
)
from .errors import InternalInvariantError, SizeCapExceeded
from .plane_graph import PlaneGraph, require_even_polygonal


@dataclass(frozen=True)
class OracleResult:
    chi_f: int
    witness: Coloring
    partitions_scanned: int


def _set_partitions(n: int) -> Iterator[list[int]]:
    """All set partitions of 0..n-1 as restricted-growth strings, ascending.

    Yields one mutable list reused across iterations; callers must copy
    anything they keep.
    """
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i]) for i >= 1
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        grown = b[i] + 1 if a[i] == b[i] else b[i]
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = grown


def chi_f_bruteforce(g: PlaneGraph, vertex_cap: int = 12) -> OracleResult:
    """Scan every partition of the vertices and keep the best admissible one.

    Partitions stand for colorings up to renaming, so nothing is lost by
    enumerating them instead of raw colorings.  The witness is the first
    maximizer in restricted-growth order.
    """
    require_even_polygonal(g)
    if g.n > vertex_cap:
        raise SizeCapExceeded(f"{g.n} vertices exceeds oracle cap {vertex_cap}")

    best_k = 0
    best: list[int] | None = None
    scanned = 0
    for labels in _set_partitions(g.n):
        scanned += 1
        if not proper_labels(g, labels):
            continue
        if not half_monochromatic_labels(g, labels):
            continue
        k = max(labels) + 1
        if k > best_k:
            best_k = k
            best = list(labels)

    if best is None:
        raise InternalInvariantError(
            "no admissible partition found on a validated instance"
        )
    witness = Coloring.from_labels(best)
    if not (
        witness.num_colors == best_k
        and check_proper(g, witness)
        and check_half_monochromatic(g, witness)
    ):
        raise InternalInvariantError("oracle witness failed its own checks")
    return OracleResult(chi_f=best_k, witness=witness, partitions_scanned=scanned)
