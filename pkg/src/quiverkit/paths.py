"""Sectional paths, the fork-crossing restriction, and quiver powers.

A path is sectional when no step doubles straight back through a mesh:
``tau(x[i+1]) != x[i-1]`` at every interior index.  The restricted variant
additionally forbids paths that hop from one fork row to the other through a
row-1 vertex.  Powers of a quiver keep the vertices and take the (restricted)
sectional paths of a fixed length as arrows, with the iterated translation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TranslationQuiver, VertexLabel, translate


@dataclass(frozen=True)
class QPath:
    """A directed path given by its vertex sequence (length = #arrows)."""

    vertices: tuple[VertexLabel, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path needs at least one vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> VertexLabel:
        return self.vertices[0]

    @property
    def target(self) -> VertexLabel:
        return self.vertices[-1]

    def __str__(self) -> str:
        return " -> ".join(str(v) for v in self.vertices)


def _check_path(q: TranslationQuiver, p: QPath) -> None:
    for v in p.vertices:
        if not q.is_vertex(v):
            raise ValueError(f"{v} is not a vertex of the quiver")
    for a, b in zip(p.vertices, p.vertices[1:]):
        if not q.has_arrow(a, b):
            raise ValueError(f"not an arrow of the quiver: {a} -> {b}")


def is_sectional(q: TranslationQuiver, p: QPath) -> bool:
    """True when tau(x[i+1]) differs from x[i-1] at every interior index.

    Indices where tau is undefined are skipped.  Paths of length <= 1 are
    always sectional.
    """
    _check_path(q, p)
    vs = p.vertices
    for i in range(1, len(vs) - 1):
        t = q.tau_of(vs[i + 1])
        if t is not None and t == vs[i - 1]:
            return False
    return True


def is_restricted(q: TranslationQuiver, p: QPath) -> bool:
    """True when the path never crosses between the two fork rows.

    The forbidden shape is a two-step segment whose outer vertices both lie
    in rows {0, 0bar} and which does not immediately fold back through the
    mesh (i.e. tau(x[i+1]) != x[i-1]).  Phrasing the test through tau keeps
    it correct across the seam of the cyclic column group, where the fork
    rows are identified with a twist whenever the period is odd.  Defined on
    arbitrary paths; on non-sectional ones the fork test is still applied
    literally.
    """
    _check_path(q, p)
    vs = p.vertices
    for i in range(1, len(vs) - 1):
        before, after = vs[i - 1], vs[i + 1]
        if not (before.row.is_fork and after.row.is_fork):
            continue
        t = q.tau_of(after)
        if t is None or t != before:
            return False
    return True


def enumerate_sectional_paths(
    q: TranslationQuiver,
    start: VertexLabel,
    m: int,
    restricted: bool,
) -> list[QPath]:
    """All (restricted) sectional paths of length m starting at a vertex.

    Depth-first search with children in label order (row, then column), so
    the output order is the lexicographic order of vertex sequences.
    """
    if not q.is_vertex(start):
        raise ValueError(f"{start} is not a vertex of the quiver")
    if m < 1:
        raise ValueError(f"need path length >= 1, got {m}")
    found: list[QPath] = []
    path: list[VertexLabel] = [start]

    def grow() -> None:
        if len(path) - 1 == m:
            found.append(QPath(tuple(path)))
            return
        tail = path[-1]
        for nxt in q.out_neighbors(tail):
            if len(path) >= 2:
                prev = path[-2]
                t = q.tau_of(nxt)
                if t is not None and t == prev:
                    continue  # not sectional
                if restricted and prev.row.is_fork and nxt.row.is_fork:
                    continue  # fork crossing
            path.append(nxt)
            grow()
            path.pop()

    grow()
    return found


def power(q: TranslationQuiver, m: int, restricted: bool) -> TranslationQuiver:
    """Quiver on the same vertices whose arrows are the length-m sectional paths.

    Parallel paths with the same endpoints collapse to a single arrow; the
    translation of the result is the m-fold iterate of the input's.  Requires
    a stable input so that the iterate is total.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if any(q.tau_of(v) is None for v in q.vertices):
        raise ValueError("power requires a stable quiver (total translation)")
    arrows = set()
    for v in q.sorted_vertices():
        for p in enumerate_sectional_paths(q, v, m, restricted):
            arrows.add((v, p.target))
    tau = {v: translate(q, v, m) for v in q.vertices}
    metadata = {
        "family": "power",
        "m": m,
        "restricted": restricted,
        "base": dict(q.metadata),
    }
    return TranslationQuiver(q.period, q.vertices, arrows, tau, metadata)
