"""Exact maximum color count via exhaustive search over dividing systems.

The maximum number of colors of an admissible coloring equals the maximum
number of regions over all dividing systems, so the solver enumerates all
2^F per-face parity vectors, keeps the lexicographically smallest maximizer
as witness, derives the witness coloring from its regions, and certifies
2 * chiF <= 3 * alpha in exact integer arithmetic.

Enumeration is deliberately plain: the parity space may be split into
blocks evaluated on several threads, and the (max regions, min vector)
reduction makes the result schedule-independent.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

from .coloring import (
    Coloring,
    baseline_coloring,
    check_half_monochromatic,
    check_proper,
    coloring_from_regions,
)
from .dividing import (
    DivisionTree,
    RegionDecomposition,
    assemble_dividing_system,
    build_division_tree,
    decompose_regions,
)
from .errors import (
    BoundViolated,
    ClaimViolated,
    FaceCapExceeded,
    InternalInvariantError,
)
from .independence import alpha_via_konig
from .medial import MedialGraph, build_medial_graph
from .plane_graph import PlaneGraph, compute_bipartition, require_even_polygonal

DEFAULT_FACE_CAP = 24


@dataclass(frozen=True)
class AuditReport:
    """Outcome of the structural checks run on a computed optimum."""

    claim1_ok: bool  # no face boundary carries exactly two colors
    claim2_ok: bool  # every base edge joins adjacent tree regions
    claim3_ok: bool  # tree nodes of degree >= 2 hold >= 2 vertices
    degree_census: tuple[tuple[int, int], ...]  # (tree degree, node count)
    case: str  # "i" when 3*|degree-1 nodes| >= 2*chiF, else "ii"


@dataclass(frozen=True)
class SearchResult:
    chi_f: int
    witness_parities: tuple[int, ...]
    witness_coloring: Coloring
    alpha: int
    bound_satisfied: bool
    audit: AuditReport
    systems_explored: int


@dataclass(frozen=True)
class SweepReport:
    num_faces: int
    systems_explored: int
    max_regions: int


def _decode(index: int, num_faces: int) -> tuple[int, ...]:
    # Face 0 in the most significant bit: integer order == vector order.
    return tuple((index >> (num_faces - 1 - f)) & 1 for f in range(num_faces))


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    bounds = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def _check_structural_claims(
    g: PlaneGraph, r: RegionDecomposition, tree: DivisionTree
) -> None:
    """Region independence plus the two tree laws; raises ClaimViolated."""
    for u, v in g.edges:
        ru = r.region_of_cell[u]
        rv = r.region_of_cell[v]
        if ru == rv:
            raise ClaimViolated(
                "independent_regions", f"edge {u}-{v} inside region {ru}"
            )
        if not tree.has_edge(ru, rv):
            raise ClaimViolated(
                "claim2", f"edge {u}-{v} spans non-adjacent regions {ru},{rv}"
            )
    for node, deg in enumerate(tree.degrees):
        if deg >= 2 and len(r.regions[node]) < 2:
            raise ClaimViolated(
                "claim3", f"region {node} has degree {deg} but one vertex"
            )


def _audit_witness(
    g: PlaneGraph,
    r: RegionDecomposition,
    tree: DivisionTree,
    coloring: Coloring,
    chi_f: int,
) -> AuditReport:
    for f in g.faces:
        if len({coloring.colors[v] for v in f.vertices}) == 2:
            raise ClaimViolated(
                "claim1", f"face {f.id} carries exactly two colors"
            )
    _check_structural_claims(g, r, tree)

    census: dict[int, int] = {}
    for deg in tree.degrees:
        census[deg] = census.get(deg, 0) + 1
    leaves = census.get(1, 0)
    case = "i" if 3 * leaves >= 2 * chi_f else "ii"
    return AuditReport(
        claim1_ok=True,
        claim2_ok=True,
        claim3_ok=True,
        degree_census=tuple(sorted(census.items())),
        case=case,
    )


def _witness_structures(
    m: MedialGraph, parities: tuple[int, ...]
) -> tuple[RegionDecomposition, DivisionTree]:
    r = decompose_regions(m, assemble_dividing_system(m, parities))
    return r, build_division_tree(r)


def exact_chi_f(
    g: PlaneGraph, face_cap: int = DEFAULT_FACE_CAP, jobs: int = 1
) -> SearchResult:
    """Maximize the region count over all 2^F dividing systems.

    Args:
        g: a validated even-polygonal plane graph.
        face_cap: refuse instances with more faces than this (the search
            cost doubles per face).
        jobs: worker threads; any value returns the same result.

    Raises:
        FaceCapExceeded: too many faces for exhaustive enumeration.
        BoundViolated, ClaimViolated: a certified law failed, meaning a bug.
    """
    require_even_polygonal(g)
    nf = g.num_faces
    if nf > face_cap:
        raise FaceCapExceeded(f"{nf} faces exceeds cap {face_cap}")
    m = build_medial_graph(g)
    total = 1 << nf

    def best_in(lo: int, hi: int) -> tuple[int, int]:
        best_lam, best_idx = -1, -1
        for idx in range(lo, hi):
            r = decompose_regions(m, assemble_dividing_system(m, _decode(idx, nf)))
            if r.num_regions > best_lam:
                best_lam, best_idx = r.num_regions, idx
        return best_lam, best_idx

    if jobs <= 1 or total < 64:
        best_lam, best_idx = best_in(0, total)
    else:
        best_lam, best_idx = -1, -1
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(best_in, lo, hi) for lo, hi in _chunks(total, jobs * 4)]
            for fut in as_completed(futures):
                lam, idx = fut.result()
                if lam > best_lam or (lam == best_lam and idx < best_idx):
                    best_lam, best_idx = lam, idx

    parities = _decode(best_idx, nf)
    r, tree = _witness_structures(m, parities)
    coloring = coloring_from_regions(r)
    audit = _audit_witness(g, r, tree, coloring, best_lam)

    b = compute_bipartition(g)
    alpha = alpha_via_konig(g, b)
    if 2 * best_lam > 3 * alpha:
        raise BoundViolated(f"2*{best_lam} > 3*{alpha}")

    baseline = baseline_coloring(g, b)
    if best_lam < baseline.num_colors or 2 * best_lam < g.n:
        raise InternalInvariantError(
            f"optimum {best_lam} below the guaranteed lower bound"
        )
    if coloring.num_colors != best_lam or not (
        check_proper(g, coloring) and check_half_monochromatic(g, coloring)
    ):
        raise InternalInvariantError("witness coloring failed its checks")

    return SearchResult(
        chi_f=best_lam,
        witness_parities=parities,
        witness_coloring=coloring,
        alpha=alpha,
        bound_satisfied=True,
        audit=audit,
        systems_explored=total,
    )


def verify_theorem_bound(result: SearchResult) -> bool:
    """Exact integer check of 2 * chiF <= 3 * alpha."""
    return 2 * result.chi_f <= 3 * result.alpha


def audit_claims(g: PlaneGraph, result: SearchResult) -> AuditReport:
    """Re-run the structural checks on a result's witness from scratch."""
    m = build_medial_graph(g)
    r, tree = _witness_structures(m, result.witness_parities)
    return _audit_witness(g, r, tree, result.witness_coloring, result.chi_f)


def sweep_dividing_systems(
    g: PlaneGraph, face_cap: int = 16, check_colorings: bool = False
) -> SweepReport:
    """Verify the region, tree and claim laws on every dividing system.

    Exhaustive over all 2^F parity vectors; every violation raises.  With
    check_colorings, additionally verifies that the region coloring of each
    system is proper and half-monochromatic with one color per region.
    """
    require_even_polygonal(g)
    nf = g.num_faces
    if nf > face_cap:
        raise FaceCapExceeded(f"{nf} faces exceeds sweep cap {face_cap}")
    m = build_medial_graph(g)
    max_regions = 0
    for idx in range(1 << nf):
        r, tree = _witness_structures(m, _decode(idx, nf))
        _check_structural_claims(g, r, tree)
        if check_colorings:
            c = coloring_from_regions(r)
            if c.num_colors != r.num_regions or not (
                check_proper(g, c) and check_half_monochromatic(g, c)
            ):
                raise InternalInvariantError(
                    f"region coloring failed for parity index {idx}"
                )
        max_regions = max(max_regions, r.num_regions)
    return SweepReport(
        num_faces=nf, systems_explored=1 << nf, max_regions=max_regions
    )
