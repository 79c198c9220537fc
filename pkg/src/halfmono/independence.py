"""Independence number of the (always bipartite) input graph.

The fast path is augmenting-path matching plus the matching = cover duality
of bipartite graphs, giving alpha = n - matching size together with a
checkable cover certificate.  A subset brute force serves as cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, SizeCapExceeded
from .plane_graph import BLACK, Bipartition, PlaneGraph


@dataclass(frozen=True)
class MatchingResult:
    n: int
    edges: tuple[tuple[int, int], ...]  # matched pairs, disjoint
    size: int
    cover: tuple[int, ...]  # minimum vertex cover, |cover| == size

    @property
    def independent_set(self) -> tuple[int, ...]:
        covered = set(self.cover)
        return tuple(v for v in range(self.n) if v not in covered)


def maximum_matching(g: PlaneGraph, b: Bipartition) -> MatchingResult:
    """Maximum matching by augmenting paths, with a minimum-cover witness."""
    left = [v for v in range(g.n) if b.side[v] == BLACK]
    match = [-1] * g.n

    def augment(u: int, seen: set[int]) -> bool:
        for v in g.rotations[u]:
            if v in seen:
                continue
            seen.add(v)
            if match[v] == -1 or augment(match[v], seen):
                match[v] = u
                match[u] = v
                return True
        return False

    size = 0
    for u in left:
        if augment(u, set()):
            size += 1

    # Alternating reachability from unmatched left vertices: the cover is
    # (left not reached) plus (right reached).
    reached: set[int] = set()
    stack = [u for u in left if match[u] == -1]
    reached.update(stack)
    while stack:
        u = stack.pop()
        for v in g.rotations[u]:
            if v in reached:
                continue
            reached.add(v)
            w = match[v]
            if w != -1 and w not in reached:
                reached.add(w)
                stack.append(w)
    left_set = set(left)
    cover = sorted(
        [u for u in left if u not in reached]
        + [v for v in range(g.n) if v not in left_set and v in reached]
    )

    pairs = tuple(
        (u, match[u]) for u in left if match[u] != -1
    )
    if len(cover) != size:
        raise InternalInvariantError(
            f"cover size {len(cover)} != matching size {size}"
        )
    cover_set = set(cover)
    for u, v in g.edges:
        if u not in cover_set and v not in cover_set:
            raise InternalInvariantError(f"edge {u}-{v} not covered")
    matched_vertices = [x for uv in pairs for x in uv]
    if len(set(matched_vertices)) != 2 * size:
        raise InternalInvariantError("matching edges are not disjoint")
    return MatchingResult(n=g.n, edges=pairs, size=size, cover=tuple(cover))


def alpha_via_konig(g: PlaneGraph, b: Bipartition) -> int:
    """Independence number as n minus the maximum matching size."""
    result = maximum_matching(g, b)
    alpha = g.n - result.size
    # Bipartite inputs always satisfy alpha >= n / 2.
    assert 2 * alpha >= g.n
    return alpha


def alpha_bruteforce(g: PlaneGraph, vertex_cap: int = 24) -> int:
    """Maximum independent set by subset enumeration with adjacency pruning."""
    if g.n > vertex_cap:
        raise SizeCapExceeded(f"{g.n} vertices exceeds brute-force cap {vertex_cap}")
    closed = [1 << v for v in range(g.n)]
    for u, v in g.edges:
        closed[u] |= 1 << v
        closed[v] |= 1 << u

    best = 0

    def grow(candidates: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if candidates == 0 or size + candidates.bit_count() <= best:
            return
        v = (candidates & -candidates).bit_length() - 1
        grow(candidates & ~closed[v], size + 1)
        grow(candidates & ~(1 << v), size)

    grow((1 << g.n) - 1, 0)
    return best
