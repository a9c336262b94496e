"""Flat-file formats: JSON documents, Graphviz DOT, and SVG arc diagrams.

All exports are deterministic byte-for-byte for a given input.  JSON
documents round-trip losslessly; the importer rejects anything that does
not satisfy the schema with an error naming the offending piece.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable

from .arcs import PLUS, PuncturedPolygon, TaggedArc, enumerate_m_arcs, is_m_arc
from .core import RowLabel, TranslationQuiver, VertexLabel

SCHEMA_VERSION = "1.0"


class ParseError(ValueError):
    """A quiver document violated the schema."""


def export_json(q: TranslationQuiver) -> dict:
    """Serialise a quiver to a plain-dict document with dense integer ids."""
    order = q.sorted_vertices()
    ids = {v: i for i, v in enumerate(order)}
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"period": q.period, **q.metadata},
        "vertices": [{"id": ids[v], "col": v.col, "row": str(v.row)} for v in order],
        "arrows": sorted([ids[s], ids[d]] for s, d in q.arrows),
        "tau": sorted([ids[v], ids[w]] for v, w in q.tau.items()),
    }


def document_text(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def import_json(doc: dict) -> TranslationQuiver:
    """Rebuild a quiver from a document, checking the schema as we go."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("schema_version")
    if not isinstance(version, str) or "." not in version:
        raise ParseError(f"missing or malformed schema_version: {version!r}")
    major = version.split(".", 1)[0]
    if major != SCHEMA_VERSION.split(".", 1)[0]:
        raise ParseError(f"unsupported schema major version: {version}")
    params = doc.get("params")
    if not isinstance(params, dict) or "period" not in params:
        raise ParseError("params.period is required")
    period = params["period"]
    if not isinstance(period, int) or period < 1:
        raise ParseError(f"params.period must be a positive integer, got {period!r}")
    metadata = {k: v for k, v in params.items() if k != "period"}
    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, list):
        raise ParseError("vertices must be a list")
    by_id: dict[int, VertexLabel] = {}
    for rec in raw_vertices:
        if not isinstance(rec, dict) or not {"id", "col", "row"} <= set(rec):
            raise ParseError(f"malformed vertex record: {rec!r}")
        vid, col, row_text = rec["id"], rec["col"], rec["row"]
        if not isinstance(vid, int) or vid in by_id:
            raise ParseError(f"bad or duplicate vertex id: {vid!r}")
        if not isinstance(col, int) or not 0 <= col < period:
            raise ParseError(f"vertex {vid}: column {col!r} out of range [0, {period})")
        try:
            row = RowLabel.parse(str(row_text))
        except ValueError as exc:
            raise ParseError(f"vertex {vid}: {exc}") from None
        by_id[vid] = VertexLabel(col, row)
    if len(set(by_id.values())) != len(by_id):
        raise ParseError("duplicate vertex labels")

    def resolve(vid: object, where: str) -> VertexLabel:
        if not isinstance(vid, int) or vid not in by_id:
            raise ParseError(f"{where} references unknown vertex id {vid!r}")
        return by_id[vid]

    raw_arrows = doc.get("arrows")
    if not isinstance(raw_arrows, list):
        raise ParseError("arrows must be a list")
    arrows = []
    for rec in raw_arrows:
        if not isinstance(rec, list) or len(rec) != 2:
            raise ParseError(f"malformed arrow record: {rec!r}")
        arrows.append((resolve(rec[0], "arrow"), resolve(rec[1], "arrow")))
    raw_tau = doc.get("tau")
    if not isinstance(raw_tau, list):
        raise ParseError("tau must be a list")
    tau = {}
    for rec in raw_tau:
        if not isinstance(rec, list) or len(rec) != 2:
            raise ParseError(f"malformed tau record: {rec!r}")
        src = resolve(rec[0], "tau")
        if src in tau:
            raise ParseError(f"duplicate tau entry for vertex id {rec[0]}")
        tau[src] = resolve(rec[1], "tau")
    try:
        return TranslationQuiver(period, by_id.values(), arrows, tau, metadata)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def save_quiver(q: TranslationQuiver, path: str | Path) -> None:
    Path(path).write_text(document_text(export_json(q)), encoding="utf-8")


def load_quiver(path: str | Path) -> TranslationQuiver:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return import_json(doc)


# -- DOT -----------------------------------------------------------------


def _dot_name(v: VertexLabel) -> str:
    return f"v_{v.col}_{v.row}"


def export_dot(q: TranslationQuiver, show_tau: bool = True) -> str:
    """Graphviz digraph; translation edges are drawn dashed when requested."""
    lines = ["digraph quiver {"]
    for v in q.sorted_vertices():
        lines.append(f'  {_dot_name(v)} [label="{v}"];')
    for s, d in q.sorted_arrows():
        lines.append(f"  {_dot_name(s)} -> {_dot_name(d)};")
    if show_tau:
        for v in q.sorted_vertices():
            t = q.tau_of(v)
            if t is not None:
                lines.append(f"  {_dot_name(v)} -> {_dot_name(t)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- SVG arc diagrams ------------------------------------------------------

_SIZE = 520.0
_RADIUS = 220.0


def _vertex_xy(N: int, label: int) -> tuple[float, float]:
    # label 1 at the top, labels increasing clockwise on screen
    theta = math.pi / 2 - 2.0 * math.pi * (label - 1) / N
    cx = cy = _SIZE / 2
    return (cx + _RADIUS * math.cos(theta), cy - _RADIUS * math.sin(theta))


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _arc_path(N: int, arc: TaggedArc) -> str:
    cx = cy = _SIZE / 2
    if arc.is_loop:
        x, y = _vertex_xy(N, arc.i)
        # teardrop around the centre: two symmetric cubic segments
        ux, uy = (cx - x), (cy - y)
        norm = math.hypot(ux, uy) or 1.0
        ux, uy = ux / norm, uy / norm
        px, py = -uy, ux
        depth = norm * 1.45
        spread = norm * 0.55
        c1 = (x + ux * depth + px * spread, y + uy * depth + py * spread)
        c2 = (x + ux * depth - px * spread, y + uy * depth - py * spread)
        return (
            f"M {_fmt(x)} {_fmt(y)} "
            f"C {_fmt(c1[0])} {_fmt(c1[1])}, {_fmt(c2[0])} {_fmt(c2[1])}, {_fmt(x)} {_fmt(y)}"
        )
    x1, y1 = _vertex_xy(N, arc.i)
    x2, y2 = _vertex_xy(N, arc.j)
    steps = (arc.j - arc.i) % N
    # control point halfway along the clockwise side; it slides past the
    # centre when the arc has to wrap around the puncture
    mid_label = arc.i + steps / 2.0
    theta = math.pi / 2 - 2.0 * math.pi * (mid_label - 1) / N
    c_r = _RADIUS * (1.0 - 2.0 * steps / N) * 0.92
    cxp = cx + c_r * math.cos(theta)
    cyp = cy - c_r * math.sin(theta)
    return f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cxp)} {_fmt(cyp)}, {_fmt(x2)} {_fmt(y2)}"


def _tag_marks(N: int, arc: TaggedArc) -> list[str]:
    x, y = _vertex_xy(N, arc.i)
    cx = cy = _SIZE / 2
    ux, uy = (cx - x), (cy - y)
    norm = math.hypot(ux, uy) or 1.0
    ux, uy = ux / norm, uy / norm
    px, py = -uy, ux
    bx, by = x + ux * 26, y + uy * 26
    size = 7.0
    marks = [
        f'<line class="tag" x1="{_fmt(bx - px * size)}" y1="{_fmt(by - py * size)}" '
        f'x2="{_fmt(bx + px * size)}" y2="{_fmt(by + py * size)}" />'
    ]
    if arc.tag == PLUS:
        marks.append(
            f'<line class="tag" x1="{_fmt(bx - ux * size)}" y1="{_fmt(by - uy * size)}" '
            f'x2="{_fmt(bx + ux * size)}" y2="{_fmt(by + uy * size)}" />'
        )
    return marks


def export_arcs_svg(n: int, m: int, highlight: Iterable[TaggedArc] | None = None) -> str:
    """SVG of the punctured polygon with all tagged m-arcs, or only highlights."""
    polygon = PuncturedPolygon(n * m - m + 1)
    N = polygon.N
    if highlight is not None:
        chosen = list(highlight)
        bad = [arc for arc in chosen if not is_m_arc(polygon, m, arc)]
        if bad:
            raise ValueError(f"not m-arcs for m={m}: " + ", ".join(str(a) for a in bad))
    else:
        chosen = enumerate_m_arcs(n, m)
    cx = cy = _SIZE / 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_SIZE)}" height="{int(_SIZE)}" '
        f'viewBox="0 0 {int(_SIZE)} {int(_SIZE)}">',
        "<style>"
        ".boundary{fill:none;stroke:#999;stroke-width:1.5}"
        ".arc{fill:none;stroke:#1f6fb2;stroke-width:1.6}"
        ".tag{stroke:#b23a1f;stroke-width:2}"
        ".vertex{fill:#333}"
        ".puncture{fill:#000}"
        "text{font:12px sans-serif;fill:#333}"
        "</style>",
    ]
    boundary_pts = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (_vertex_xy(N, k) for k in range(1, N + 1))
    )
    parts.append(f'<polygon class="boundary" points="{boundary_pts}" />')
    parts.append(f'<circle class="puncture" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" />')
    for k in range(1, N + 1):
        x, y = _vertex_xy(N, k)
        parts.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" />')
        lx = cx + (x - cx) * 1.12
        ly = cy + (y - cy) * 1.12
        parts.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle">{k}</text>')
    for arc in chosen:
        parts.append(f'<path class="arc" d="{_arc_path(N, arc)}"><title>{arc}</title></path>')
        if arc.is_loop:
            parts.extend(_tag_marks(N, arc))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
