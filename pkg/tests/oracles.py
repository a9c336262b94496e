"""Independent brute-force oracles used to cross-check the fast paths."""

from __future__ import annotations

from itertools import permutations

from quiverkit import QPath, TranslationQuiver, VertexLabel, is_restricted, is_sectional


def all_paths(q: TranslationQuiver, start: VertexLabel, length: int) -> list[QPath]:
    """Every directed path of the given length, no sectional pruning at all."""
    found: list[QPath] = []
    stack: list[list[VertexLabel]] = [[start]]
    while stack:
        path = stack.pop()
        if len(path) - 1 == length:
            found.append(QPath(tuple(path)))
            continue
        for nxt in q.out_neighbors(path[-1]):
            stack.append(path + [nxt])
    return found


def brute_sectional_paths(
    q: TranslationQuiver, start: VertexLabel, length: int, restricted: bool
) -> set[tuple[VertexLabel, ...]]:
    """Enumerate-then-filter reference for the sectional path enumerator."""
    keep = set()
    for p in all_paths(q, start, length):
        if not is_sectional(q, p):
            continue
        if restricted and not is_restricted(q, p):
            continue
        keep.add(p.vertices)
    return keep


def brute_isomorphic(a: TranslationQuiver, b: TranslationQuiver) -> bool:
    """Exhaustive assignment search over all vertex bijections.

    Fixed vertex order, no invariant classes and no translation-orbit
    propagation; feasibility of the partial assignment is checked at each
    extension so the full factorial space is pruned but never skipped.
    """
    if len(a.vertices) != len(b.vertices) or len(a.arrows) != len(b.arrows):
        return False
    order = a.sorted_vertices()
    targets = b.sorted_vertices()

    def consistent(mapping: dict[VertexLabel, VertexLabel], x: VertexLabel, y: VertexLabel) -> bool:
        for z, w in mapping.items():
            if a.has_arrow(x, z) != b.has_arrow(y, w):
                return False
            if a.has_arrow(z, x) != b.has_arrow(w, y):
                return False
        tx, ty = a.tau_of(x), b.tau_of(y)
        if (tx is None) != (ty is None):
            return False
        if tx is not None:
            if tx == x and ty != y:
                return False
            if tx in mapping and mapping[tx] != ty:
                return False
        for z, w in mapping.items():
            tz = a.tau_of(z)
            if tz == x and b.tau_of(w) != y:
                return False
        return True

    def extend(idx: int, mapping: dict[VertexLabel, VertexLabel], used: set[VertexLabel]) -> bool:
        if idx == len(order):
            return True
        x = order[idx]
        for y in targets:
            if y in used or not consistent(mapping, x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(idx + 1, mapping, used):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return extend(0, {}, set())


def tiny_brute_isomorphic(a: TranslationQuiver, b: TranslationQuiver) -> bool:
    """Literal walk over every permutation; only usable for <= 8 vertices."""
    if len(a.vertices) != len(b.vertices):
        return False
    order = a.sorted_vertices()
    for perm in permutations(b.sorted_vertices()):
        mapping = dict(zip(order, perm))
        if any(not b.has_arrow(mapping[s], mapping[d]) for s, d in a.arrows):
            continue
        if any(b.has_arrow(mapping[s], mapping[d]) != a.has_arrow(s, d) for s in order for d in order):
            continue
        good = True
        for v in order:
            tv = a.tau_of(v)
            tw = b.tau_of(mapping[v])
            if (tv is None) != (tw is None) or (tv is not None and mapping[tv] != tw):
                good = False
                break
        if good:
            return True
    return False
