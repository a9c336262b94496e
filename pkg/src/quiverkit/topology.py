"""The 2-complex underlying a translation quiver and its surface type.

Every arrow y -> x whose target has a translate contributes one triangular
2-cell on the corners (tau x, y, x).  The 1-skeleton keeps one edge cell per
arrow and one translation edge per vertex with a translate: cells are
indexed by the arrow or vertex they come from, not by their endpoint sets,
so short translation orbits produce honest parallel edges instead of
collapsing (the complex is a Delta-complex rather than a simplicial one).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import TranslationQuiver, VertexLabel, validate

# An edge cell is ("arrow", src, dst) for an arrow, or ("tau", tau_x, x) for
# the translation edge attached to x.  Injectivity of tau keeps the latter
# unique per vertex even when endpoint pairs repeat.
EdgeCell = tuple[str, VertexLabel, VertexLabel]
# A triangle cell is the ordered corner triple (tau_x, y, x) of an arrow y -> x.
TriangleCell = tuple[VertexLabel, VertexLabel, VertexLabel]


@dataclass
class MeshComplex:
    """Delta-complex of a translation quiver: vertices, edge cells, triangles."""

    vertices: tuple[VertexLabel, ...]
    edges: tuple[EdgeCell, ...]
    triangles: tuple[TriangleCell, ...]

    @property
    def arrow_edges(self) -> list[EdgeCell]:
        return [e for e in self.edges if e[0] == "arrow"]

    @property
    def tau_edges(self) -> list[EdgeCell]:
        return [e for e in self.edges if e[0] == "tau"]

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.triangles)


def _triangle_sides(tri: TriangleCell) -> list[tuple[EdgeCell, int]]:
    """Boundary of a triangle as (edge cell, traversal direction) pairs.

    The boundary loop runs tau_x -> y -> x -> tau_x; the closing translation
    edge is traversed against its canonical direction (tau_x -> x), hence
    direction -1.
    """
    tx, y, x = tri
    return [
        (("arrow", tx, y), 1),
        (("arrow", y, x), 1),
        (("tau", tx, x), -1),
    ]


def mesh_complex(q: TranslationQuiver) -> MeshComplex:
    """Build the 2-complex of a valid translation quiver."""
    report = validate(q)
    if not report.is_translation_quiver:
        raise ValueError(f"mesh condition fails at {report.mesh_offenders[:3]}")
    vertices = tuple(q.sorted_vertices())
    edges: list[EdgeCell] = [("arrow", s, d) for s, d in q.sorted_arrows()]
    for x in vertices:
        tx = q.tau_of(x)
        if tx is not None:
            edges.append(("tau", tx, x))
    triangles: list[TriangleCell] = []
    for y, x in q.sorted_arrows():
        tx = q.tau_of(x)
        if tx is not None:
            triangles.append((tx, y, x))
    complex_ = MeshComplex(vertices, tuple(edges), tuple(triangles))
    edge_set = set(complex_.edges)
    for tri in triangles:
        for cell, _ in _triangle_sides(tri):
            if cell not in edge_set:  # pragma: no cover - guarded by validate
                raise AssertionError(f"triangle side {cell} missing from complex")
    return complex_


@dataclass
class SurfaceReport:
    """Surface classification of a 2-complex."""

    is_surface: bool
    euler_characteristic: int
    orientable: bool | None
    boundary_components: int
    classification: str
    offender: object | None = None


def _edge_incidences(c: MeshComplex) -> dict[EdgeCell, list[tuple[int, int]]]:
    uses: dict[EdgeCell, list[tuple[int, int]]] = defaultdict(list)
    for t_idx, tri in enumerate(c.triangles):
        for s_idx, (cell, _) in enumerate(_triangle_sides(tri)):
            uses[cell].append((t_idx, s_idx))
    for e in c.edges:
        uses.setdefault(e, [])
    return dict(uses)


def _link_is_circle_or_interval(c: MeshComplex, v: VertexLabel, uses: dict[EdgeCell, list[tuple[int, int]]]) -> bool:
    """Check that the link of a vertex is a single cycle or a single path.

    Link nodes are the edge cells touching v; each triangle corner at v
    joins the two edge cells meeting there.  A manifold point has a
    connected link in which every node has degree 2 (interior) or exactly
    two nodes have degree 1 (boundary).
    """
    incident = [e for e in c.edges if v in (e[1], e[2])]
    if not incident:
        return False
    degree: dict[EdgeCell, int] = {e: 0 for e in incident}
    adjacency: dict[EdgeCell, list[EdgeCell]] = {e: [] for e in incident}
    for tri in c.triangles:
        tx, y, x = tri
        corners = [c2 for c2 in (tx, y, x) if c2 == v]
        if len(corners) > 1:
            return False  # degenerate triangle pinched at v
        if not corners:
            continue
        sides = [cell for cell, _ in _triangle_sides(tri)]
        at_v = [cell for cell in sides if v in (cell[1], cell[2])]
        if len(at_v) != 2:
            return False
        a, b = at_v
        adjacency[a].append(b)
        adjacency[b].append(a)
        degree[a] += 1
        degree[b] += 1
    if any(d > 2 for d in degree.values()):
        return False
    ones = sum(1 for d in degree.values() if d == 1)
    zeros = sum(1 for d in degree.values() if d == 0)
    if zeros or ones not in (0, 2):
        return False
    # connectivity of the link
    start = incident[0]
    seen = {start}
    stack = [start]
    while stack:
        e = stack.pop()
        for nb in adjacency[e]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(incident)


def _count_boundary_cycles(c: MeshComplex, boundary: list[EdgeCell]) -> int:
    if not boundary:
        return 0
    touch: dict[VertexLabel, list[int]] = defaultdict(list)
    for idx, e in enumerate(boundary):
        touch[e[1]].append(idx)
        touch[e[2]].append(idx)
    seen: set[int] = set()
    components = 0
    for idx in range(len(boundary)):
        if idx in seen:
            continue
        components += 1
        stack = [idx]
        seen.add(idx)
        while stack:
            cur = stack.pop()
            for v in (boundary[cur][1], boundary[cur][2]):
                for other in touch[v]:
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
    return components


def _orientable(c: MeshComplex, uses: dict[EdgeCell, list[tuple[int, int]]]) -> bool | None:
    """Propagate triangle orientations across shared edges; None if no triangles.

    Two triangles induce opposite traversal directions on a shared edge of
    an oriented surface, so neighbours through a same-direction edge must
    receive opposite signs.  A parity conflict means non-orientable.  The
    result does not depend on the seed triangle of each component.
    """
    if not c.triangles:
        return None
    dirs: dict[tuple[int, int], int] = {}
    for t_idx, tri in enumerate(c.triangles):
        for s_idx, (_, direction) in enumerate(_triangle_sides(tri)):
            dirs[(t_idx, s_idx)] = direction
    neighbors: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for cell, incs in uses.items():
        if len(incs) != 2:
            continue
        (t1, s1), (t2, s2) = incs
        same_direction = dirs[(t1, s1)] == dirs[(t2, s2)]
        flip = 1 if same_direction else 0  # same direction forces opposite signs
        neighbors[t1].append((t2, flip))
        neighbors[t2].append((t1, flip))
    sign: dict[int, int] = {}
    for seed in range(len(c.triangles)):
        if seed in sign:
            continue
        sign[seed] = 0
        stack = [seed]
        while stack:
            t = stack.pop()
            for other, flip in neighbors[t]:
                expected = sign[t] ^ flip
                if other not in sign:
                    sign[other] = expected
                    stack.append(other)
                elif sign[other] != expected:
                    return False
    return True


def classify_surface(c: MeshComplex) -> SurfaceReport:
    """Decide whether a complex is a surface and name its homeomorphism type."""
    chi = c.euler_characteristic()
    uses = _edge_incidences(c)
    offender: object | None = None
    is_surface = bool(c.triangles)
    for cell in c.edges:
        if len(uses[cell]) > 2:
            is_surface = False
            offender = cell
            break
    if is_surface:
        for v in c.vertices:
            if not _link_is_circle_or_interval(c, v, uses):
                is_surface = False
                offender = v
                break
    boundary = [cell for cell in c.edges if len(uses[cell]) == 1]
    boundary_components = _count_boundary_cycles(c, boundary)
    orientable = _orientable(c, uses) if c.triangles else None
    if not is_surface:
        return SurfaceReport(False, chi, None, boundary_components, "not-a-surface", offender)
    if boundary_components == 0:
        if orientable:
            if chi == 2:
                name = "sphere"
            elif chi == 0:
                name = "torus"
            else:
                name = f"genus-{(2 - chi) // 2} orientable"
        else:
            name = f"non-orientable genus-{2 - chi}"
    else:
        if orientable and chi == 1 and boundary_components == 1:
            name = "disc"
        elif orientable and chi == 0 and boundary_components == 2:
            name = "annulus"
        elif not orientable and chi == 0 and boundary_components == 1:
            name = "moebius"
        else:
            name = "other-with-boundary"
    return SurfaceReport(True, chi, orientable, boundary_components, name, None)
