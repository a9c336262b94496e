"""Finite stable translation quivers indexed over a cyclic column group.

The quivers built here come in three families: the type-D mesh quiver with a
fork of two bottom rows, its generalisation with an enlarged column period,
and a tube-shaped quotient of a type-A mesh quiver.  All of them carry a
translation map ``tau`` whose defining property (the mesh condition) can be
checked mechanically with :func:`validate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass(frozen=True)
class RowLabel:
    """Row of a vertex: a non-negative integer, or the barred twin of row 0.

    Rows 0 and 0bar are the two fork rows; ``bar()`` swaps them and fixes
    every numeric row >= 1.
    """

    index: int
    barred: bool = False

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"row index must be >= 0, got {self.index}")
        if self.barred and self.index != 0:
            raise ValueError("only row 0 has a barred twin")

    @property
    def is_fork(self) -> bool:
        return self.index == 0

    def bar(self) -> "RowLabel":
        """Swap 0 <-> 0bar; numeric rows >= 1 are fixed."""
        if self.index == 0:
            return RowLabel(0, not self.barred)
        return self

    def sort_key(self) -> tuple[int, int]:
        # Row order: 0 < 0bar < 1 < 2 < ...
        return (self.index, 1 if self.barred else 0)

    def __str__(self) -> str:
        return "0bar" if self.barred else str(self.index)

    @classmethod
    def parse(cls, text: str) -> "RowLabel":
        if text == "0bar":
            return cls(0, True)
        try:
            return cls(int(text))
        except ValueError:
            raise ValueError(f"not a row label: {text!r}") from None


ROW_ZERO = RowLabel(0)
ROW_ZERO_BAR = RowLabel(0, True)


@dataclass(frozen=True)
class VertexLabel:
    """Vertex of a translation quiver: a column residue and a row label.

    Columns are always stored canonically in ``[0, period)``; the builders
    below take care of the reduction.
    """

    col: int
    row: RowLabel

    def sort_key(self) -> tuple[tuple[int, int], int]:
        return (self.row.sort_key(), self.col)

    def __str__(self) -> str:
        return f"({self.col},{self.row})"


def make_vertex(period: int, col: int, row: RowLabel) -> VertexLabel:
    """Vertex with the column reduced into canonical residue form."""
    return VertexLabel(col % period, row)


Arrow = tuple[VertexLabel, VertexLabel]


class TranslationQuiver:
    """A finite quiver with a (possibly partial) injective translation map.

    Instances are treated as immutable once built: all operations in this
    package return new quivers instead of mutating.  Equality compares
    period, vertex set, arrow set and translation map; ``metadata`` is
    provenance only and never takes part in comparisons.
    """

    def __init__(
        self,
        period: int,
        vertices: Iterable[VertexLabel],
        arrows: Iterable[Arrow],
        tau: Mapping[VertexLabel, VertexLabel],
        metadata: Mapping[str, object] | None = None,
    ) -> None:
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        self.period = period
        self.vertices = frozenset(vertices)
        self.arrows = frozenset(arrows)
        self.tau = dict(tau)
        self.metadata = dict(metadata or {})
        self._check_integrity()
        out: dict[VertexLabel, list[VertexLabel]] = {v: [] for v in self.vertices}
        inc: dict[VertexLabel, list[VertexLabel]] = {v: [] for v in self.vertices}
        for src, dst in self.arrows:
            out[src].append(dst)
            inc[dst].append(src)
        self._out = {v: tuple(sorted(ws, key=VertexLabel.sort_key)) for v, ws in out.items()}
        self._in = {v: tuple(sorted(ws, key=VertexLabel.sort_key)) for v, ws in inc.items()}
        self._tau_inv: dict[VertexLabel, VertexLabel] | None = None

    def _check_integrity(self) -> None:
        for src, dst in self.arrows:
            if src not in self.vertices or dst not in self.vertices:
                raise ValueError(f"arrow endpoint outside vertex set: {src} -> {dst}")
        for v, w in self.tau.items():
            if v not in self.vertices or w not in self.vertices:
                raise ValueError(f"translation entry outside vertex set: {v} -> {w}")
        if len(set(self.tau.values())) != len(self.tau):
            raise ValueError("translation map is not injective")
        for v in self.vertices:
            if not (0 <= v.col < self.period):
                raise ValueError(f"column of {v} not reduced modulo period {self.period}")

    # -- basic queries -------------------------------------------------

    def is_vertex(self, v: VertexLabel) -> bool:
        return v in self.vertices

    def has_arrow(self, src: VertexLabel, dst: VertexLabel) -> bool:
        return (src, dst) in self.arrows

    def out_neighbors(self, v: VertexLabel) -> tuple[VertexLabel, ...]:
        return self._out[v]

    def in_neighbors(self, v: VertexLabel) -> tuple[VertexLabel, ...]:
        return self._in[v]

    def tau_of(self, v: VertexLabel) -> VertexLabel | None:
        return self.tau.get(v)

    def tau_inverse_of(self, v: VertexLabel) -> VertexLabel | None:
        if self._tau_inv is None:
            self._tau_inv = {w: u for u, w in self.tau.items()}
        return self._tau_inv.get(v)

    def sorted_vertices(self) -> list[VertexLabel]:
        return sorted(self.vertices, key=VertexLabel.sort_key)

    def sorted_arrows(self) -> list[Arrow]:
        return sorted(self.arrows, key=lambda a: (a[0].sort_key(), a[1].sort_key()))

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TranslationQuiver):
            return NotImplemented
        return (
            self.period == other.period
            and self.vertices == other.vertices
            and self.arrows == other.arrows
            and self.tau == other.tau
        )

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # type: ignore[assignment]  # mutable mapping inside

    def __repr__(self) -> str:
        fam = self.metadata.get("family", "quiver")
        return (
            f"TranslationQuiver({fam}, period={self.period}, "
            f"|V|={len(self.vertices)}, |A|={len(self.arrows)})"
        )


# -- constructors ------------------------------------------------------


def _fork_rows(top: int) -> list[RowLabel]:
    return [ROW_ZERO, ROW_ZERO_BAR] + [RowLabel(j) for j in range(1, top + 1)]


def _build_fork_quiver(
    period: int,
    top: int,
    seam_swap: bool,
    metadata: Mapping[str, object],
) -> TranslationQuiver:
    """Mesh quiver with rows {0, 0bar, 1..top} on the given column period.

    ``seam_swap`` turns on the bar swap of the translation at the column 0
    seam, which identifies the two fork rows with a twist when going once
    around the cylinder.
    """
    rows = _fork_rows(top)
    vertices = [VertexLabel(i, r) for i in range(period) for r in rows]
    arrows: list[Arrow] = []
    for i in range(period):
        for j in range(1, top + 1):
            arrows.append((VertexLabel(i, RowLabel(j)), VertexLabel(i, RowLabel(j - 1))))
            arrows.append((VertexLabel(i, RowLabel(j - 1)), make_vertex(period, i + 1, RowLabel(j))))
        arrows.append((VertexLabel(i, RowLabel(1)), VertexLabel(i, ROW_ZERO_BAR)))
        arrows.append((VertexLabel(i, ROW_ZERO_BAR), make_vertex(period, i + 1, RowLabel(1))))
    tau: dict[VertexLabel, VertexLabel] = {}
    for v in vertices:
        if seam_swap and v.col == 0 and v.row.is_fork:
            tau[v] = make_vertex(period, v.col - 1, v.row.bar())
        else:
            tau[v] = make_vertex(period, v.col - 1, v.row)
    return TranslationQuiver(period, vertices, arrows, tau, metadata)


def build_gamma_d(n: int) -> TranslationQuiver:
    """Type-D mesh quiver on n columns with rows {0, 0bar, 1..n-2}.

    The translation shifts columns to the left and bar-swaps the fork rows
    at the seam exactly when n is odd.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return _build_fork_quiver(
        period=n,
        top=n - 2,
        seam_swap=(n % 2 == 1),
        metadata={"family": "d", "n": n},
    )


def build_gamma_d_m(n: int, m: int) -> TranslationQuiver:
    """Type-D mesh quiver with rows {0, 0bar, 1..n-2} on n*m - m + 1 columns.

    For m = 1 this coincides with :func:`build_gamma_d` vertex for vertex,
    arrow for arrow and tau for tau.  The seam bar swap occurs exactly when
    n*m is odd.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return _build_fork_quiver(
        period=n * m - m + 1,
        top=n - 2,
        seam_swap=(n * m % 2 == 1),
        metadata={"family": "dm", "n": n, "m": m},
    )


def build_za_quotient(rows: int, period: int) -> TranslationQuiver:
    """Tube-shaped quiver: rows 1..rows on a cyclic column group.

    Arrows run down one row within a column and up-right one row to the next
    column; the translation is the plain column shift.
    """
    if rows < 1:
        raise ValueError(f"need rows >= 1, got {rows}")
    if period < 1:
        raise ValueError(f"need period >= 1, got {period}")
    vertices = [VertexLabel(i, RowLabel(j)) for i in range(period) for j in range(1, rows + 1)]
    arrows: list[Arrow] = []
    for i in range(period):
        for j in range(1, rows + 1):
            if j > 1:
                arrows.append((VertexLabel(i, RowLabel(j)), VertexLabel(i, RowLabel(j - 1))))
            if j < rows:
                arrows.append((VertexLabel(i, RowLabel(j)), make_vertex(period, i + 1, RowLabel(j + 1))))
    tau = {v: make_vertex(period, v.col - 1, v.row) for v in vertices}
    return TranslationQuiver(period, vertices, arrows, tau, {"family": "za", "rows": rows, "period": period})


# -- operations --------------------------------------------------------


def translate(q: TranslationQuiver, v: VertexLabel, k: int) -> VertexLabel:
    """Apply the translation k times (k < 0 walks the inverse)."""
    if not q.is_vertex(v):
        raise ValueError(f"{v} is not a vertex of the quiver")
    cur = v
    if k >= 0:
        for _ in range(k):
            nxt = q.tau_of(cur)
            if nxt is None:
                raise ValueError(f"translation undefined at {cur}")
            cur = nxt
    else:
        for _ in range(-k):
            nxt = q.tau_inverse_of(cur)
            if nxt is None:
                raise ValueError(f"inverse translation undefined at {cur}")
            cur = nxt
    return cur


def full_subquiver(q: TranslationQuiver, subset: Iterable[VertexLabel], metadata: Mapping[str, object] | None = None) -> TranslationQuiver:
    """Full subquiver on a vertex subset; tau entries leaving it are dropped."""
    keep = frozenset(subset)
    missing = keep - q.vertices
    if missing:
        raise ValueError(f"not vertices of the quiver: {sorted(missing, key=VertexLabel.sort_key)[:3]}")
    arrows = [(s, d) for s, d in q.arrows if s in keep and d in keep]
    tau = {v: w for v, w in q.tau.items() if v in keep and w in keep}
    meta = dict(metadata) if metadata is not None else dict(q.metadata)
    return TranslationQuiver(q.period, keep, arrows, tau, meta)


@dataclass
class ValidationReport:
    """Outcome of the structural checks on a translation quiver."""

    is_translation_quiver: bool
    is_stable: bool
    mesh_offenders: list[VertexLabel] = field(default_factory=list)
    stability_offenders: list[VertexLabel] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_translation_quiver and self.is_stable


def validate(q: TranslationQuiver) -> ValidationReport:
    """Check the mesh condition and stability; problems are reported, not raised.

    The mesh condition at a vertex x with tau defined asks that the arrows
    into x correspond exactly to the arrows out of tau(x).  Stability asks
    that tau be total and bijective.
    """
    mesh_offenders: list[VertexLabel] = []
    for x in q.sorted_vertices():
        tx = q.tau_of(x)
        if tx is None:
            continue
        if set(q.in_neighbors(x)) != set(q.out_neighbors(tx)):
            mesh_offenders.append(x)
    # A total injective self-map of a finite set is bijective, so vertices
    # without a tau value and vertices missing from the image are the only
    # two ways stability can fail.
    image = set(q.tau.values())
    no_tau = [v for v in q.sorted_vertices() if q.tau_of(v) is None]
    not_hit = [v for v in q.sorted_vertices() if v not in image]
    stability = not no_tau and not not_hit
    offenders = sorted(set(no_tau) | set(not_hit), key=VertexLabel.sort_key)
    return ValidationReport(
        is_translation_quiver=not mesh_offenders,
        is_stable=stability,
        mesh_offenders=mesh_offenders,
        stability_offenders=offenders if not stability else [],
    )
