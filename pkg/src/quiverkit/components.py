"""Connected components, translation-quiver isomorphism, and the component
structure of restricted powers.

The central facts verified through this module: the fork-rowed quiver on
n*m - m + 1 columns embeds via a column-scaling map as one connected
component of the restricted m-th power, and the remaining components are
tubes of n - 1 rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import (
    ROW_ZERO,
    ROW_ZERO_BAR,
    RowLabel,
    TranslationQuiver,
    VertexLabel,
    build_gamma_d,
    build_gamma_d_m,
    build_za_quotient,
    full_subquiver,
)
from .paths import power


@dataclass
class VertexMapping:
    """A bijective assignment of vertices of one quiver to another's."""

    pairs: dict[VertexLabel, VertexLabel]

    def apply(self, v: VertexLabel) -> VertexLabel:
        return self.pairs[v]

    def inverse(self) -> "VertexMapping":
        if not self.is_bijective():
            raise ValueError("mapping is not bijective")
        return VertexMapping({w: v for v, w in self.pairs.items()})

    def is_bijective(self) -> bool:
        return len(set(self.pairs.values())) == len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def is_translation_iso(a: TranslationQuiver, b: TranslationQuiver, mapping: VertexMapping) -> bool:
    """Check that a mapping is an isomorphism of translation quivers.

    Requires a bijection on vertices that matches arrow sets in both
    directions and commutes with the translations (including agreement of
    their domains).
    """
    pairs = mapping.pairs
    if set(pairs) != a.vertices or not mapping.is_bijective():
        return False
    if set(pairs.values()) != b.vertices:
        return False
    if len(a.arrows) != len(b.arrows):
        return False
    for src, dst in a.arrows:
        if not b.has_arrow(pairs[src], pairs[dst]):
            return False
    for v in a.vertices:
        ta = a.tau_of(v)
        tb = b.tau_of(pairs[v])
        if ta is None:
            if tb is not None:
                return False
        else:
            if tb is None or pairs[ta] != tb:
                return False
    return True


def connected_components(q: TranslationQuiver) -> list[TranslationQuiver]:
    """Components of the underlying undirected arrow graph, as full subquivers.

    Translation entries whose endpoints fall in different components are
    dropped from the restriction; for restricted powers this never happens,
    but e.g. isolated vertices of an unrestricted square do lose theirs.
    Components are ordered by their smallest vertex.
    """
    seen: set[VertexLabel] = set()
    classes: list[list[VertexLabel]] = []
    for start in q.sorted_vertices():
        if start in seen:
            continue
        group: list[VertexLabel] = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            group.append(v)
            for w in q.out_neighbors(v) + q.in_neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        classes.append(group)
    out = []
    for idx, group in enumerate(classes):
        meta = dict(q.metadata)
        meta["component_index"] = idx
        out.append(full_subquiver(q, group, meta))
    return out


# -- the column-scaling embedding ---------------------------------------


def _fork_image_row(row: RowLabel, flip: bool) -> RowLabel:
    return row.bar() if flip else row


def sigma(n: int, m: int) -> VertexMapping:
    """Column-scaling map from the n-row fork quiver into the big one-step quiver.

    A vertex (i, j) goes to (i*m, j*m) on the n*m - m + 1 column group; on
    the fork rows the image row is bar-swapped whenever floor(i*m / period)
    is odd, except in the case (m odd, n even) where no adjustment is needed.
    Columns use canonical representatives i in [0, period) and the product
    i*m is taken over the integers before reduction.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    period = n * m - m + 1
    plain_forks = (m % 2 == 1) and (n % 2 == 0)
    pairs: dict[VertexLabel, VertexLabel] = {}
    rows = [ROW_ZERO, ROW_ZERO_BAR] + [RowLabel(j) for j in range(1, n - 1)]
    for i in range(period):
        scaled = i * m
        col = scaled % period
        flip = (scaled // period) % 2 == 1
        for row in rows:
            src = VertexLabel(i, row)
            if row.is_fork and not plain_forks:
                pairs[src] = VertexLabel(col, _fork_image_row(row, flip))
            elif row.is_fork:
                pairs[src] = VertexLabel(col, row)
            else:
                pairs[src] = VertexLabel(col, RowLabel(row.index * m))
    return VertexMapping(pairs)


def sigma_image(n: int, m: int) -> frozenset[VertexLabel]:
    """Image of :func:`sigma`: fork rows plus the numeric rows divisible by m."""
    return frozenset(sigma(n, m).pairs.values())


# -- generic isomorphism search ------------------------------------------


def _refined_colors(a: TranslationQuiver, b: TranslationQuiver, rounds: int = 6):
    """Joint colour refinement over both quivers (degree/translation aware)."""
    color: dict[tuple[int, VertexLabel], int] = {}
    interned: dict[object, int] = {}

    def intern(sig: object) -> int:
        if sig not in interned:
            interned[sig] = len(interned)
        return interned[sig]

    quivers = (a, b)
    for side, q in enumerate(quivers):
        for v in q.vertices:
            sig = (
                len(q.in_neighbors(v)),
                len(q.out_neighbors(v)),
                q.tau_of(v) is not None,
                q.tau_inverse_of(v) is not None,
            )
            color[(side, v)] = intern(sig)
    for _ in range(rounds):
        nxt: dict[tuple[int, VertexLabel], int] = {}
        fresh: dict[object, int] = {}

        def intern2(sig: object) -> int:
            if sig not in fresh:
                fresh[sig] = len(fresh)
            return fresh[sig]

        for side, q in enumerate(quivers):
            for v in q.vertices:
                t = q.tau_of(v)
                ti = q.tau_inverse_of(v)
                sig = (
                    color[(side, v)],
                    tuple(sorted(color[(side, w)] for w in q.out_neighbors(v))),
                    tuple(sorted(color[(side, w)] for w in q.in_neighbors(v))),
                    -1 if t is None else color[(side, t)],
                    -1 if ti is None else color[(side, ti)],
                )
                nxt[(side, v)] = intern2(sig)
        if len(set(nxt.values())) == len(set(color.values())):
            color = nxt
            break
        color = nxt
    ca = {v: color[(0, v)] for v in a.vertices}
    cb = {v: color[(1, v)] for v in b.vertices}
    return ca, cb


def _search_order(a: TranslationQuiver, colors: dict[VertexLabel, int]) -> list[VertexLabel]:
    """Vertices of ``a`` ordered so each one touches the previously chosen ones."""
    class_size: dict[int, int] = {}
    for c in colors.values():
        class_size[c] = class_size.get(c, 0) + 1
    remaining = set(a.vertices)
    order: list[VertexLabel] = []
    frontier: list[VertexLabel] = []
    while remaining:
        if not frontier:
            seed = min(remaining, key=lambda v: (class_size[colors[v]], v.sort_key()))
            frontier = [seed]
        frontier.sort(key=lambda v: (class_size[colors[v]], v.sort_key()))
        v = frontier.pop(0)
        if v not in remaining:
            continue
        remaining.discard(v)
        order.append(v)
        neigh = list(a.out_neighbors(v)) + list(a.in_neighbors(v))
        t = a.tau_of(v)
        ti = a.tau_inverse_of(v)
        neigh += [w for w in (t, ti) if w is not None]
        frontier.extend(w for w in neigh if w in remaining)
    return order


def find_isomorphism(a: TranslationQuiver, b: TranslationQuiver) -> VertexMapping | None:
    """Search for an isomorphism of translation quivers; None when there is none.

    Backtracking over vertex assignments inside colour-refinement classes.
    Assigning one vertex immediately forces the whole translation orbit, so
    the branching happens once per orbit; every returned witness is fully
    re-verified before being handed back.
    """
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return None
    if len(a.tau) != len(b.tau):
        return None
    ca, cb = _refined_colors(a, b)
    if sorted(ca.values()) != sorted(cb.values()):
        return None
    by_color: dict[int, list[VertexLabel]] = {}
    for v in b.sorted_vertices():
        by_color.setdefault(cb[v], []).append(v)
    order = _search_order(a, ca)

    mapping: dict[VertexLabel, VertexLabel] = {}
    used: set[VertexLabel] = set()

    def assign(x: VertexLabel, y: VertexLabel, trail: list[VertexLabel]) -> bool:
        """Map x to y, propagating along translation orbits; False on clash."""
        queue = deque([(x, y)])
        while queue:
            u, w = queue.popleft()
            if u in mapping:
                if mapping[u] != w:
                    return False
                continue
            if w in used or ca[u] != cb[w]:
                return False
            for z in a.out_neighbors(u):
                if z in mapping and not b.has_arrow(w, mapping[z]):
                    return False
            for z in a.in_neighbors(u):
                if z in mapping and not b.has_arrow(mapping[z], w):
                    return False
            mapping[u] = w
            used.add(w)
            trail.append(u)
            ta, tb = a.tau_of(u), b.tau_of(w)
            if (ta is None) != (tb is None):
                return False
            if ta is not None:
                queue.append((ta, tb))
            ia, ib = a.tau_inverse_of(u), b.tau_inverse_of(w)
            if (ia is None) != (ib is None):
                return False
            if ia is not None:
                queue.append((ia, ib))
        return True

    def undo(trail: list[VertexLabel]) -> None:
        for u in trail:
            used.discard(mapping.pop(u))

    def solve(idx: int) -> bool:
        while idx < len(order) and order[idx] in mapping:
            idx += 1
        if idx == len(order):
            return True
        x = order[idx]
        for y in by_color[ca[x]]:
            if y in used:
                continue
            trail: list[VertexLabel] = []
            if assign(x, y, trail) and solve(idx + 1):
                return True
            undo(trail)
        return False

    if not solve(0):
        return None
    witness = VertexMapping(dict(mapping))
    if not is_translation_iso(a, b, witness):  # pragma: no cover - safety net
        raise AssertionError("search produced an invalid witness")
    return witness


# -- the distinguished component and the full decomposition ---------------


def d_component(n: int, m: int) -> tuple[TranslationQuiver, VertexMapping]:
    """Extract the fork component of the restricted m-th power, with witness.

    Builds the restricted m-th power of the one-step quiver on n*m - m + 1
    columns, takes the full subquiver on the image of :func:`sigma`, and
    checks that it is a single arrow- and translation-closed component
    isomorphic (via sigma) to the n-row fork quiver.
    """
    smap = sigma(n, m)
    image = frozenset(smap.pairs.values())
    period = n * m - m + 1
    ambient = power(build_gamma_d(period), m, restricted=True)
    meta = {"family": "d-component", "n": n, "m": m}
    sub = full_subquiver(ambient, image, meta)
    for src, dst in ambient.arrows:
        if (src in image) != (dst in image):
            raise AssertionError(f"image is not arrow-closed at {src} -> {dst}")
    for v in image:
        tv = ambient.tau_of(v)
        if tv not in image:
            raise AssertionError(f"image is not translation-closed at {v}")
    if not _is_connected(sub):
        raise AssertionError("image induces more than one component")
    model = build_gamma_d_m(n, m)
    if not is_translation_iso(model, sub, smap):
        raise AssertionError("column-scaling map is not an isomorphism onto the component")
    return sub, smap


def _is_connected(q: TranslationQuiver) -> bool:
    if not q.vertices:
        return True
    seen = {next(iter(q.vertices))}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in q.out_neighbors(v) + q.in_neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(q.vertices)


D_TAG = "D-component"
UNIDENTIFIED_TAG = "unidentified"


def a_tag(k: int) -> str:
    return f"A-component({k})"


@dataclass
class ComponentEntry:
    """One component of a decomposition with its classification."""

    quiver: TranslationQuiver
    tag: str
    witness: VertexMapping | None = None


@dataclass
class DecompositionReport:
    """Classified components of a restricted m-th power."""

    components: list[ComponentEntry] = field(default_factory=list)

    def sizes(self) -> list[int]:
        return [len(entry.quiver.vertices) for entry in self.components]

    def tags(self) -> list[str]:
        return [entry.tag for entry in self.components]


def x_k_vertices(n: int, m: int, k: int) -> frozenset[VertexLabel]:
    """Numeric rows congruent to k mod m in the quiver on n*m - m + 1 columns."""
    period = n * m - m + 1
    rows = [k + t * m for t in range(n - 1)]
    return frozenset(VertexLabel(i, RowLabel(j)) for i in range(period) for j in rows)


def decompose(n: int, m: int) -> DecompositionReport:
    """Classify every component of the restricted m-th power.

    Exactly one fork component of n * period vertices (witnessed by sigma)
    and m - 1 tube components of (n - 1) * period vertices, witnessed by an
    isomorphism onto :func:`build_za_quotient`.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    period = n * m - m + 1
    ambient = power(build_gamma_d(period), m, restricted=True)
    comps = connected_components(ambient)
    if len(comps) != m:
        raise AssertionError(f"expected {m} components, found {len(comps)}")
    fork_size = n * period
    tube_size = (n - 1) * period
    tube_model = build_za_quotient(n - 1, period) if m > 1 else None
    image = sigma_image(n, m)
    entries: list[ComponentEntry] = []
    seen_k: set[int] = set()
    for comp in comps:
        size = len(comp.vertices)
        if size == fork_size:
            if comp.vertices != image:
                raise AssertionError("fork-sized component does not match the scaling image")
            sub, smap = d_component(n, m)
            if sub != comp:
                raise AssertionError("fork component mismatch")
            entries.append(ComponentEntry(comp, D_TAG, smap))
        elif size == tube_size:
            sample = next(iter(comp.vertices))
            k = sample.row.index % m
            if not (1 <= k <= m - 1):
                raise AssertionError(f"unexpected row class {k}")
            if comp.vertices != x_k_vertices(n, m, k):
                raise AssertionError(f"component is not the row class {k}")
            assert tube_model is not None
            witness = find_isomorphism(tube_model, comp)
            if witness is None:
                raise AssertionError(f"row class {k} is not a tube of {n - 1} rows")
            seen_k.add(k)
            entries.append(ComponentEntry(comp, a_tag(k), witness))
        else:
            raise AssertionError(f"component of unexpected size {size}")
    if len([e for e in entries if e.tag == D_TAG]) != 1:
        raise AssertionError("expected exactly one fork component")
    if seen_k != set(range(1, m)):
        raise AssertionError(f"missing row classes: {set(range(1, m)) - seen_k}")
    return DecompositionReport(entries)
