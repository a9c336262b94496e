"""Tagged arcs in a once-punctured polygon and the quiver of elementary moves.

Boundary vertices are labelled 1..N clockwise.  An arc either joins two
distinct boundary vertices (running clockwise from its first endpoint, up to
homotopy) or is a loop at one vertex around the puncture carrying a plus or
minus tag.  Everything is combinatorial: an arc is determined by its
endpoints, tag and the clockwise winding convention, so no planar geometry
is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ROW_ZERO, ROW_ZERO_BAR, RowLabel, TranslationQuiver, VertexLabel

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class PuncturedPolygon:
    """Regular polygon with N boundary vertices and one interior puncture."""

    N: int

    def __post_init__(self) -> None:
        if self.N < 3:
            raise ValueError(f"need at least 3 boundary vertices, got {self.N}")

    def wrap(self, v: int) -> int:
        return (v - 1) % self.N + 1

    def clockwise_steps(self, i: int, j: int) -> int:
        return (j - i) % self.N


@dataclass(frozen=True)
class BoundarySpec:
    """A boundary walk: clockwise i..j, the whole boundary, or the trivial path."""

    i: int
    j: int
    kind: str  # "path" (i != j), "whole" (all the way round), "trivial"

    def __post_init__(self) -> None:
        if self.kind not in ("path", "whole", "trivial"):
            raise ValueError(f"unknown boundary kind {self.kind!r}")
        if self.kind == "path" and self.i == self.j:
            raise ValueError("a proper boundary path needs distinct endpoints")
        if self.kind in ("whole", "trivial") and self.i != self.j:
            raise ValueError("whole/trivial boundary paths start and end at the same vertex")

    @classmethod
    def path(cls, i: int, j: int) -> "BoundarySpec":
        return cls(i, j, "path")

    @classmethod
    def whole(cls, i: int) -> "BoundarySpec":
        return cls(i, i, "whole")

    @classmethod
    def trivial(cls, i: int) -> "BoundarySpec":
        return cls(i, i, "trivial")


def boundary_length(polygon: PuncturedPolygon, b: BoundarySpec) -> int:
    """Number of vertices a boundary walk runs through, both endpoints counted."""
    for v in (b.i, b.j):
        if not 1 <= v <= polygon.N:
            raise ValueError(f"vertex label {v} out of range 1..{polygon.N}")
    if b.kind == "trivial":
        return 1
    if b.kind == "whole":
        return polygon.N + 1
    return polygon.clockwise_steps(b.i, b.j) + 1


@dataclass(frozen=True)
class TaggedArc:
    """Arc between boundary vertices i and j, tagged when it is a loop.

    For i != j the arc runs clockwise from i to j (homotopic to that
    boundary walk) and carries no tag; for i == j it wraps the puncture and
    carries "+" or "-".
    """

    i: int
    j: int
    tag: str | None = None

    def __post_init__(self) -> None:
        if self.i == self.j:
            if self.tag not in (PLUS, MINUS):
                raise ValueError("a loop arc must be tagged '+' or '-'")
        else:
            if self.tag is not None:
                raise ValueError("only loop arcs carry tags")

    @property
    def is_loop(self) -> bool:
        return self.i == self.j

    def sort_key(self) -> tuple[int, int, int]:
        return (1 if self.is_loop else 0, self.i, self.j if not self.is_loop else (0 if self.tag == PLUS else 1))

    def __str__(self) -> str:
        if self.is_loop:
            return f"D({self.i},{self.j}){self.tag}"
        return f"D({self.i},{self.j})"

    @classmethod
    def parse(cls, text: str) -> "TaggedArc":
        body = text.strip()
        tag = None
        if body.endswith((PLUS, MINUS)):
            tag = body[-1]
            body = body[:-1]
        if not (body.startswith("D(") and body.endswith(")")):
            raise ValueError(f"cannot parse arc label: {text!r}")
        parts = body[2:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"cannot parse arc label: {text!r}")
        i, j = int(parts[0]), int(parts[1])
        return cls(i, j, tag)


def _check_arc(polygon: PuncturedPolygon, arc: TaggedArc) -> None:
    for v in (arc.i, arc.j):
        if not 1 <= v <= polygon.N:
            raise ValueError(f"vertex label {v} out of range 1..{polygon.N}")
    if not arc.is_loop and arc.j == polygon.wrap(arc.i + 1):
        raise ValueError(f"{arc} would coincide with a boundary edge")


def is_m_arc(polygon: PuncturedPolygon, m: int, arc: TaggedArc) -> bool:
    """Divisibility test for an arc's two complementary regions.

    A non-loop arc qualifies when the region on its clockwise side has
    k*m + 2 vertices (k >= 1) and the other region l*m + 1 vertices
    (l >= 1).  A tagged loop qualifies when the full boundary together with
    the loop closes up into a degenerate region of k*m + 2 sides, i.e. when
    m divides N - 1.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    _check_arc(polygon, arc)
    if arc.is_loop:
        remainder = polygon.N + 1 - 2
        return remainder >= m and remainder % m == 0
    near = boundary_length(polygon, BoundarySpec.path(arc.i, arc.j))
    far = boundary_length(polygon, BoundarySpec.path(arc.j, arc.i))
    k_ok = near - 2 >= m and (near - 2) % m == 0
    l_ok = far - 1 >= m and (far - 1) % m == 0
    return k_ok and l_ok


def arc_span(polygon: PuncturedPolygon, m: int, arc: TaggedArc) -> int:
    """For a non-loop m-arc D(i, i + k*m + 1), the winding parameter k."""
    if arc.is_loop:
        raise ValueError("loop arcs have no span")
    if not is_m_arc(polygon, m, arc):
        raise ValueError(f"{arc} is not an m-arc for m={m}")
    return (polygon.clockwise_steps(arc.i, arc.j) - 1) // m


def enumerate_m_arcs(n: int, m: int) -> list[TaggedArc]:
    """All tagged m-arcs of the punctured (n*m - m + 1)-gon, by exhaustive filter."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    polygon = PuncturedPolygon(n * m - m + 1)
    arcs: list[TaggedArc] = []
    for i in range(1, polygon.N + 1):
        for j in range(1, polygon.N + 1):
            if j == i or j == polygon.wrap(i + 1):
                continue
            arc = TaggedArc(i, j)
            if is_m_arc(polygon, m, arc):
                arcs.append(arc)
    for i in range(1, polygon.N + 1):
        for tag in (PLUS, MINUS):
            loop = TaggedArc(i, i, tag)
            if is_m_arc(polygon, m, loop):
                arcs.append(loop)
    arcs.sort(key=TaggedArc.sort_key)
    return arcs


def m_moves(n: int, m: int, arc: TaggedArc) -> list[TaggedArc]:
    """Arcs reachable from a given m-arc by one elementary move.

    A move slides one endpoint of the arc m boundary steps clockwise, so
    that old arc, new arc and the traversed boundary bound an unpunctured
    (m + 2)-gon; when the moving endpoint lands on the fixed one the result
    degenerates to the two tagged loops, and a tagged loop unwinds to the
    long arc back to its basepoint.  Candidate results that are not m-arcs
    (e.g. boundary edges) are discarded.
    """
    polygon = PuncturedPolygon(n * m - m + 1)
    if not is_m_arc(polygon, m, arc):
        raise ValueError(f"{arc} is not an m-arc for m={m}")
    if arc.is_loop:
        target = TaggedArc(polygon.wrap(arc.i + m), arc.i)
        return [target] if is_m_arc(polygon, m, target) else []
    moves: list[TaggedArc] = []
    far = polygon.wrap(arc.j + m)
    if far == arc.i:
        loops = [TaggedArc(arc.i, arc.i, PLUS), TaggedArc(arc.i, arc.i, MINUS)]
        moves.extend(loop for loop in loops if is_m_arc(polygon, m, loop))
    elif far != polygon.wrap(arc.i + 1):
        candidate = TaggedArc(arc.i, far)
        if is_m_arc(polygon, m, candidate):
            moves.append(candidate)
    near = polygon.wrap(arc.i + m)
    if near != arc.j and polygon.wrap(near + 1) != arc.j:
        candidate = TaggedArc(near, arc.j)
        if is_m_arc(polygon, m, candidate):
            moves.append(candidate)
    moves.sort(key=TaggedArc.sort_key)
    return moves


def tau_m_arc(n: int, m: int, arc: TaggedArc) -> TaggedArc:
    """Rotate a tagged m-arc anticlockwise by m boundary steps.

    Loop arcs swap their tag when m is odd; everything else keeps its tag.
    """
    polygon = PuncturedPolygon(n * m - m + 1)
    if not is_m_arc(polygon, m, arc):
        raise ValueError(f"{arc} is not an m-arc for m={m}")
    i = polygon.wrap(arc.i - m)
    j = polygon.wrap(arc.j - m)
    if arc.is_loop and m % 2 == 1:
        return TaggedArc(i, j, MINUS if arc.tag == PLUS else PLUS)
    return TaggedArc(i, j, arc.tag)


def arc_vertex_label(n: int, m: int, arc: TaggedArc) -> VertexLabel:
    """Deterministic vertex label used for an arc inside the move quiver.

    Column is the arc's basepoint minus one; the row records the winding
    parameter of a non-loop arc, or distinguishes the two loop tags.  This
    labelling is bookkeeping only; the quiver structure comes entirely from
    the moves and the rotation.
    """
    polygon = PuncturedPolygon(n * m - m + 1)
    if arc.is_loop:
        row = ROW_ZERO if arc.tag == PLUS else ROW_ZERO_BAR
        return VertexLabel(arc.i - 1, row)
    return VertexLabel(arc.i - 1, RowLabel(arc_span(polygon, m, arc)))


def build_gamma_odot(n: int, m: int) -> TranslationQuiver:
    """Quiver of tagged m-arcs with elementary moves as arrows.

    The translation is the anticlockwise rotation by m steps.  The metadata
    keeps the vertex-label -> arc correspondence.
    """
    arcs = enumerate_m_arcs(n, m)
    period = n * m - m + 1
    label = {arc: arc_vertex_label(n, m, arc) for arc in arcs}
    if len(set(label.values())) != len(arcs):
        raise AssertionError("arc labelling collided")
    arrows = []
    for arc in arcs:
        for target in m_moves(n, m, arc):
            arrows.append((label[arc], label[target]))
    tau = {label[arc]: label[tau_m_arc(n, m, arc)] for arc in arcs}
    metadata = {
        "family": "odot",
        "n": n,
        "m": m,
        "arcs": {str(label[arc]): str(arc) for arc in arcs},
    }
    return TranslationQuiver(period, label.values(), arrows, tau, metadata)


def rho(n: int, m: int, arc: TaggedArc) -> VertexLabel:
    """Vertex of the scaled image corresponding to a tagged m-arc.

    A non-loop arc winding k times lands in column (i - 1) mod N at numeric
    row (n - 1 - k) * m; a tagged loop lands in one of the two fork rows,
    with the tag <-> row pairing decided by the parity of its basepoint.
    """
    polygon = PuncturedPolygon(n * m - m + 1)
    if not is_m_arc(polygon, m, arc):
        raise ValueError(f"{arc} is not an m-arc for m={m}")
    col = (arc.i - 1) % polygon.N
    if not arc.is_loop:
        k = arc_span(polygon, m, arc)
        return VertexLabel(col, RowLabel((n - 1 - k) * m))
    odd = arc.i % 2 == 1
    if arc.tag == PLUS:
        return VertexLabel(col, ROW_ZERO if odd else ROW_ZERO_BAR)
    return VertexLabel(col, ROW_ZERO_BAR if odd else ROW_ZERO)
