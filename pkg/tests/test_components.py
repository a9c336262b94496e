from __future__ import annotations

import pytest

from conftest import vl
from oracles import brute_isomorphic, tiny_brute_isomorphic
from quiverkit import (
    TranslationQuiver,
    VertexMapping,
    build_gamma_d,
    build_gamma_d_m,
    build_za_quotient,
    connected_components,
    d_component,
    decompose,
    find_isomorphism,
    full_subquiver,
    is_translation_iso,
    power,
    sigma,
    sigma_image,
    translate,
    x_k_vertices,
)


def test_whole_quiver_is_one_component():
    assert len(connected_components(build_gamma_d(7))) == 1


def test_restricted_square_splits_in_two():
    comps = connected_components(power(build_gamma_d(7), 2, True))
    assert sorted(len(c.vertices) for c in comps) == [21, 28]


def test_unrestricted_square_of_d4_has_isolated_row_one():
    comps = connected_components(power(build_gamma_d(4), 2, False))
    sizes = sorted(len(c.vertices) for c in comps)
    assert sizes == [1, 1, 1, 1, 12]
    singles = {next(iter(c.vertices)) for c in comps if len(c.vertices) == 1}
    assert singles == {vl(i, 1) for i in range(4)}
    # the isolated vertices lose their translation entry in the restriction
    for c in comps:
        if len(c.vertices) == 1:
            assert not c.tau


def test_components_inherit_tau_on_closed_classes():
    comps = connected_components(power(build_gamma_d(7), 2, True))
    for comp in comps:
        assert set(comp.tau) == comp.vertices
        assert set(comp.tau.values()) == comp.vertices


def test_sigma_values():
    s = sigma(4, 2)
    assert s.apply(vl(1, 1)) == vl(2, 2)
    assert s.apply(vl(0, 0)) == vl(0, 0)
    assert s.apply(vl(5, 0)) == vl(3, "0bar")


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_sigma_is_bijective_onto_divisible_rows(n, m):
    s = sigma(n, m)
    period = n * m - m + 1
    image = set(s.pairs.values())
    assert len(image) == len(s.pairs) == n * period
    want = {
        v
        for v in build_gamma_d(period).vertices
        if v.row.is_fork or v.row.index % m == 0
    }
    assert image == want
    assert sigma_image(n, m) == want


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_sigma_intertwines_translations(n, m):
    s = sigma(n, m)
    small = build_gamma_d_m(n, m)
    big = build_gamma_d(n * m - m + 1)
    for v in small.sorted_vertices():
        assert s.apply(small.tau_of(v)) == translate(big, s.apply(v), m)


def test_d_component_examples():
    sub, witness = d_component(4, 2)
    assert len(sub.vertices) == 28
    assert is_translation_iso(build_gamma_d_m(4, 2), sub, witness)

    sub32, _ = d_component(3, 2)
    assert len(sub32.vertices) == 15
    assert len(power(build_gamma_d(5), 2, True).vertices) == 25

    whole, ident = d_component(5, 1)
    assert whole == build_gamma_d(5)
    assert all(v == w for v, w in ident.pairs.items())


def test_find_isomorphism_positive():
    sub, _ = d_component(4, 2)
    witness = find_isomorphism(build_gamma_d_m(4, 2), sub)
    assert witness is not None
    assert is_translation_iso(build_gamma_d_m(4, 2), sub, witness)


def test_find_isomorphism_size_mismatch():
    assert find_isomorphism(build_gamma_d_m(4, 2), build_za_quotient(3, 7)) is None


def test_unrestricted_square_subquiver_is_not_the_fork_quiver():
    plain = power(build_gamma_d(7), 2, False)
    sub = full_subquiver(plain, sigma_image(4, 2))
    assert find_isomorphism(build_gamma_d_m(4, 2), sub) is None
    # the extra fork-crossing arrows raise the fork out-degrees to 2
    out_degrees = sorted(len(sub.out_neighbors(v)) for v in sub.vertices if v.row.is_fork)
    assert set(out_degrees) == {2}


def test_find_isomorphism_is_symmetric():
    a = build_gamma_d_m(4, 2)
    sub, _ = d_component(4, 2)
    assert find_isomorphism(a, sub) is not None
    assert find_isomorphism(sub, a) is not None
    b = build_za_quotient(3, 7)
    assert find_isomorphism(a, b) is None
    assert find_isomorphism(b, a) is None


def test_find_isomorphism_invariant_under_relabelling():
    base = build_za_quotient(2, 5)
    shift = {v: vl((v.col + 2) % 5, v.row.index) for v in base.vertices}
    relabelled = TranslationQuiver(
        base.period,
        shift.values(),
        [(shift[s], shift[d]) for s, d in base.arrows],
        {shift[v]: shift[w] for v, w in base.tau.items()},
    )
    witness = find_isomorphism(base, relabelled)
    assert witness is not None
    assert is_translation_iso(base, relabelled, witness)
    back = witness.inverse()
    assert is_translation_iso(relabelled, base, back)


@pytest.mark.parametrize(
    "make_a,make_b,expected",
    [
        (lambda: build_gamma_d(3), lambda: build_gamma_d(3), True),
        (lambda: build_gamma_d(3), lambda: build_za_quotient(3, 3), False),
        (lambda: build_za_quotient(3, 4), lambda: build_za_quotient(4, 3), False),
        (lambda: build_za_quotient(2, 6), lambda: build_za_quotient(3, 4), False),
        (lambda: build_za_quotient(2, 5), lambda: build_za_quotient(2, 5), True),
    ],
)
def test_search_agrees_with_naive_permutation_oracle(make_a, make_b, expected):
    a, b = make_a(), make_b()
    assert len(a.vertices) <= 12 and len(b.vertices) <= 12
    found = find_isomorphism(a, b) is not None
    assert found is expected
    assert brute_isomorphic(a, b) is expected


def test_search_agrees_with_literal_permutation_walk():
    a = build_za_quotient(2, 3)
    b = build_za_quotient(3, 2)
    assert tiny_brute_isomorphic(a, a)
    assert (find_isomorphism(a, b) is not None) == tiny_brute_isomorphic(a, b)


def test_mapping_helpers():
    m = VertexMapping({vl(0, 0): vl(1, 0)})
    assert m.apply(vl(0, 0)) == vl(1, 0)
    assert len(m) == 1
    assert m.inverse().apply(vl(1, 0)) == vl(0, 0)


def test_decompose_examples():
    rep = decompose(4, 2)
    assert rep.tags() == ["D-component", "A-component(1)"]
    assert rep.sizes() == [28, 21]

    rep43 = decompose(4, 3)
    assert sorted(rep43.sizes(), reverse=True) == [40, 30, 30]
    assert sum(rep43.sizes()) == 100

    rep_m1 = decompose(5, 1)
    assert rep_m1.tags() == ["D-component"]
    assert rep_m1.sizes() == [25]


def test_decompose_a_components_are_row_classes_with_witnesses():
    rep = decompose(3, 3)
    period = 7
    tubes = [e for e in rep.components if e.tag != "D-component"]
    assert len(tubes) == 2
    model = build_za_quotient(2, period)
    for entry in tubes:
        k = int(entry.tag[len("A-component(") : -1])
        assert entry.quiver.vertices == x_k_vertices(3, 3, k)
        assert entry.witness is not None
        assert is_translation_iso(model, entry.quiver, entry.witness)


def test_x_k_closure_under_restricted_paths():
    from quiverkit import enumerate_sectional_paths

    n, m = 4, 3
    q = build_gamma_d(n * m - m + 1)
    for k in range(1, m):
        xs = x_k_vertices(n, m, k)
        for v in sorted(xs, key=lambda v: v.sort_key()):
            for p in enumerate_sectional_paths(q, v, m, restricted=True):
                assert p.target in xs
