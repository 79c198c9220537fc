"""Rotation-system plane graphs with traced faces and validation.

A graph drawn in the plane is encoded combinatorially: every vertex carries
the counterclockwise cyclic order of its neighbours.  Faces are the orbits
of the next-dart rule ``next(u -> v) = (v -> w)`` where ``w`` immediately
follows ``u`` in the rotation at ``v``.  Euler's formula then certifies
that the rotation system really describes a sphere embedding.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .errors import (
    EulerViolation,
    FaceStructureError,
    InconsistentRotation,
    NotConnected,
    OddCycleFound,
)

BLACK = 0
WHITE = 1

FACE_NOT_CYCLE = "face_not_cycle"
ODD_FACE = "odd_face"


@dataclass(frozen=True)
class Face:
    """One traced face; the walk starts at its smallest (tail, head) dart."""

    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]  # dart tails, in walk order

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable embedded graph; all derived links are precomputed tuples."""

    n: int
    rotations: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]  # canonical (u, v) with u < v, sorted
    faces: tuple[Face, ...]
    dart_tail: tuple[int, ...]
    dart_head: tuple[int, ...]
    dart_twin: tuple[int, ...]
    dart_next: tuple[int, ...]
    dart_face: tuple[int, ...]
    dart_edge: tuple[int, ...]
    coords: tuple[tuple[float, float], ...] | None = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def num_darts(self) -> int:
        return len(self.dart_tail)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]


@dataclass(frozen=True)
class FaceDefect:
    face: int
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    defects: tuple[FaceDefect, ...]

    def __str__(self) -> str:
        if self.ok:
            return "valid: every face is a simple cycle of even length"
        lines = [f"face {d.face}: {d.kind} ({d.detail})" for d in self.defects]
        return "\n".join(lines)


def _check_rotations(n: int, rotations: tuple[tuple[int, ...], ...]) -> None:
    if n <= 0:
        raise InconsistentRotation("vertex count must be positive")
    if len(rotations) != n:
        raise InconsistentRotation(
            f"expected {n} rotation lists, got {len(rotations)}"
        )
    neighbor_sets: list[set[int]] = []
    for u, neigh in enumerate(rotations):
        seen: set[int] = set()
        for v in neigh:
            if not 0 <= v < n:
                raise InconsistentRotation(
                    f"vertex {u} lists out-of-range neighbour {v}"
                )
            if v == u:
                raise InconsistentRotation(f"vertex {u} lists itself (loop)")
            if v in seen:
                raise InconsistentRotation(f"vertex {u} lists neighbour {v} twice")
            seen.add(v)
        neighbor_sets.append(seen)
    for u in range(n):
        for v in neighbor_sets[u]:
            if u not in neighbor_sets[v]:
                raise InconsistentRotation(
                    f"vertex {u} lists {v} but {v} does not list {u}"
                )


def _check_connected(n: int, rotations: tuple[tuple[int, ...], ...]) -> None:
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for v in rotations[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                queue.append(v)
    if reached != n:
        raise NotConnected(f"only {reached} of {n} vertices reachable from 0")


def build_plane_graph(
    n: int,
    rotations,
    coords=None,
) -> PlaneGraph:
    """Build the dart structure and trace all faces of a rotation system.

    Args:
        n: number of vertices, labelled 0..n-1.
        rotations: per vertex, its neighbours in counterclockwise order.
        coords: optional per-vertex (x, y) positions, only used for drawing.

    Raises:
        InconsistentRotation: ids out of range, loops, repeats or asymmetry.
        NotConnected: the underlying graph is not connected.
        EulerViolation: the traced embedding does not satisfy V - E + F = 2,
            which signals a non-planar or multiply-embedded input.
    """
    rot = tuple(tuple(r) for r in rotations)
    _check_rotations(n, rot)
    _check_connected(n, rot)

    tails: list[int] = []
    heads: list[int] = []
    index: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in rot[u]:
            index[(u, v)] = len(tails)
            tails.append(u)
            heads.append(v)
    num_darts = len(tails)

    slot = {
        (v, u): i for v in range(n) for i, u in enumerate(rot[v])
    }
    twin = tuple(index[(heads[d], tails[d])] for d in range(num_darts))
    nxt = []
    for d in range(num_darts):
        u, v = tails[d], heads[d]
        w = rot[v][(slot[(v, u)] + 1) % len(rot[v])]
        nxt.append(index[(v, w)])

    # Scanning darts by (tail, head) makes each face start at its smallest
    # dart and orders face ids canonically.
    face_of = [-1] * num_darts
    faces: list[Face] = []
    for d0 in sorted(range(num_darts), key=lambda d: (tails[d], heads[d])):
        if face_of[d0] != -1:
            continue
        walk = []
        d = d0
        while True:
            face_of[d] = len(faces)
            walk.append(d)
            d = nxt[d]
            if d == d0:
                break
        faces.append(
            Face(len(faces), tuple(walk), tuple(tails[x] for x in walk))
        )

    num_edges = num_darts // 2
    if n - num_edges + len(faces) != 2:
        raise EulerViolation(
            f"V - E + F = {n} - {num_edges} + {len(faces)} != 2"
        )

    edge_list = sorted({(min(u, v), max(u, v)) for u, v in zip(tails, heads)})
    edge_id = {e: i for i, e in enumerate(edge_list)}
    dart_edge = tuple(
        edge_id[(min(tails[d], heads[d]), max(tails[d], heads[d]))]
        for d in range(num_darts)
    )

    return PlaneGraph(
        n=n,
        rotations=rot,
        edges=tuple(edge_list),
        faces=tuple(faces),
        dart_tail=tuple(tails),
        dart_head=tuple(heads),
        dart_twin=twin,
        dart_next=tuple(nxt),
        dart_face=tuple(face_of),
        dart_edge=dart_edge,
        coords=tuple((float(x), float(y)) for x, y in coords) if coords else None,
    )


def validate_even_polygonal(g: PlaneGraph) -> ValidationReport:
    """Check that every face boundary is a simple cycle of even length."""
    defects: list[FaceDefect] = []
    for f in g.faces:
        if f.degree < 3 or len(set(f.vertices)) != f.degree:
            if f.degree < 3:
                detail = f"walk of length {f.degree} is not a cycle"
            else:
                repeated = [v for v, c in Counter(f.vertices).items() if c > 1]
                detail = f"vertex {min(repeated)} appears more than once"
            defects.append(FaceDefect(f.id, FACE_NOT_CYCLE, detail))
        elif f.degree % 2 != 0:
            defects.append(FaceDefect(f.id, ODD_FACE, f"degree {f.degree} is odd"))
    return ValidationReport(ok=not defects, defects=tuple(defects))


def require_even_polygonal(g: PlaneGraph) -> None:
    """Raise FaceStructureError unless validate_even_polygonal passes."""
    report = validate_even_polygonal(g)
    if not report.ok:
        raise FaceStructureError(report)


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side labels; every edge joins a black and a white vertex."""

    side: tuple[int, ...]

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == BLACK)

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == WHITE)


def compute_bipartition(g: PlaneGraph) -> Bipartition:
    """Two-color the graph by BFS with vertex 0 black.

    Only valid after validate_even_polygonal: a graph whose faces are all
    even cycles is bipartite, so OddCycleFound here means a broken caller.
    """
    side = [-1] * g.n
    side[0] = BLACK
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.rotations[u]:
            if side[v] == -1:
                side[v] = BLACK if side[u] == WHITE else WHITE
                queue.append(v)
            elif side[v] == side[u]:
                raise OddCycleFound(f"edge {u}-{v} joins two same-side vertices")
    return Bipartition(side=tuple(side))
