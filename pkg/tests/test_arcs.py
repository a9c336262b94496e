from __future__ import annotations

import pytest

from conftest import vl
from quiverkit import (
    BoundarySpec,
    PuncturedPolygon,
    TaggedArc,
    boundary_length,
    build_gamma_d,
    build_gamma_d_m,
    build_gamma_odot,
    enumerate_m_arcs,
    find_isomorphism,
    full_subquiver,
    is_m_arc,
    m_moves,
    power,
    rho,
    sigma_image,
    tau_m_arc,
    translate,
    validate,
)

D = TaggedArc


def test_boundary_lengths():
    p7 = PuncturedPolygon(7)
    assert boundary_length(p7, BoundarySpec.path(6, 2)) == 4
    assert boundary_length(p7, BoundarySpec.whole(3)) == 8
    assert boundary_length(p7, BoundarySpec.trivial(3)) == 1
    assert boundary_length(PuncturedPolygon(11), BoundarySpec.whole(1)) == 12


def test_boundary_rejects_out_of_range():
    with pytest.raises(ValueError):
        boundary_length(PuncturedPolygon(7), BoundarySpec.path(0, 2))


def test_arc_construction_rules():
    with pytest.raises(ValueError):
        D(3, 3)  # loops need a tag
    with pytest.raises(ValueError):
        D(3, 5, "+")  # chords carry none
    assert str(D(6, 2)) == "D(6,2)"
    assert str(D(6, 6, "-")) == "D(6,6)-"
    assert D.parse("D(6,6)-") == D(6, 6, "-")
    assert D.parse("D(6,2)") == D(6, 2)


def test_is_m_arc_examples():
    p7 = PuncturedPolygon(7)
    assert is_m_arc(p7, 2, D(6, 2))
    assert is_m_arc(p7, 2, D(6, 6, "+"))
    assert is_m_arc(p7, 2, D(6, 6, "-"))
    assert not is_m_arc(p7, 2, D(1, 3))


def test_is_m_arc_rejects_boundary_edge():
    with pytest.raises(ValueError):
        is_m_arc(PuncturedPolygon(7), 2, D(1, 2))


def test_loops_are_m_arcs_iff_m_divides_period_minus_one():
    assert is_m_arc(PuncturedPolygon(7), 2, D(1, 1, "+"))  # 6 = 3*2
    assert is_m_arc(PuncturedPolygon(7), 3, D(1, 1, "+"))  # 6 = 2*3
    assert not is_m_arc(PuncturedPolygon(8), 3, D(1, 1, "+"))  # 7 not divisible


def test_enumerate_m_arcs_counts():
    arcs = enumerate_m_arcs(4, 2)
    plain = [a for a in arcs if not a.is_loop]
    loops = [a for a in arcs if a.is_loop]
    assert len(arcs) == 28
    assert len(plain) == 14
    assert len(loops) == 14
    assert len(enumerate_m_arcs(3, 1)) == 9


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 3), (6, 4)])
def test_plain_m_arcs_have_the_expected_form(n, m):
    period = n * m - m + 1
    arcs = enumerate_m_arcs(n, m)
    plain = {(a.i, a.j) for a in arcs if not a.is_loop}
    # the chords are exactly those whose far endpoint sits k*m + 1 steps
    # clockwise from the near one, k = 1..n-2
    want = {
        (i, (i - 1 + k * m + 1) % period + 1)
        for i in range(1, period + 1)
        for k in range(1, n - 1)
    }
    assert plain == want
    assert len(arcs) == n * period


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_both_divisibility_conditions_agree(n, m):
    # for the matched polygon size, the clockwise-side condition holds
    # exactly when the far-side condition does
    polygon = PuncturedPolygon(n * m - m + 1)
    for i in range(1, polygon.N + 1):
        for j in range(1, polygon.N + 1):
            if j in (i, polygon.wrap(i + 1)):
                continue
            near = boundary_length(polygon, BoundarySpec.path(i, j))
            far = boundary_length(polygon, BoundarySpec.path(j, i))
            near_ok = near - 2 >= m and (near - 2) % m == 0
            far_ok = far - 1 >= m and (far - 1) % m == 0
            assert near_ok == far_ok


def test_m_moves_examples():
    assert m_moves(4, 2, D(6, 2)) == [D(6, 4)]
    assert set(m_moves(4, 2, D(1, 6))) == {D(3, 6), D(1, 1, "+"), D(1, 1, "-")}
    assert m_moves(4, 2, D(1, 1, "+")) == [D(3, 1)]
    assert m_moves(4, 2, D(1, 1, "-")) == [D(3, 1)]


def test_m_moves_rejects_non_arc():
    with pytest.raises(ValueError):
        m_moves(4, 2, D(1, 3))


def test_tau_m_arc_examples():
    assert tau_m_arc(4, 2, D(1, 4)) == D(6, 2)
    assert tau_m_arc(4, 2, D(6, 6, "+")) == D(4, 4, "+")
    assert tau_m_arc(5, 1, D(1, 1, "+")) == D(5, 5, "-")


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (4, 3), (5, 2)])
def test_tau_m_arc_is_a_bijection_with_known_period(n, m):
    period = n * m - m + 1
    arcs = enumerate_m_arcs(n, m)
    images = [tau_m_arc(n, m, a) for a in arcs]
    assert len(set(images)) == len(arcs)
    assert set(images) == set(arcs)
    for a in arcs:
        cur = a
        for _ in range(period):
            cur = tau_m_arc(n, m, cur)
        if m * period % 2 == 0:
            assert cur == a
        else:
            if a.is_loop:
                assert (cur.i, cur.j) == (a.i, a.j) and cur.tag != a.tag
            else:
                assert cur == a
        for _ in range(period):
            cur = tau_m_arc(n, m, cur)
        assert cur == a


def test_build_gamma_odot_counts_and_validity():
    odot = build_gamma_odot(4, 2)
    assert len(odot.vertices) == 28
    assert validate(odot).ok
    odot31 = build_gamma_odot(3, 1)
    assert len(odot31.vertices) == 9
    assert find_isomorphism(odot31, build_gamma_d(3)) is not None
    assert find_isomorphism(odot, build_gamma_d_m(4, 2)) is not None


def test_odot_metadata_names_every_arc():
    odot = build_gamma_odot(3, 2)
    assert len(odot.metadata["arcs"]) == len(odot.vertices)


def test_rho_examples():
    assert rho(4, 2, D(1, 4)) == vl(0, 4)
    assert rho(4, 2, D(1, 1, "+")) == vl(0, 0)
    assert rho(4, 2, D(2, 2, "+")) == vl(1, "0bar")


def test_rho_rejects_non_arc():
    with pytest.raises(ValueError):
        rho(4, 2, D(1, 3))


@pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_rho_is_an_isomorphism_onto_the_scaled_component(n, m):
    period = n * m - m + 1
    arcs = enumerate_m_arcs(n, m)
    images = {a: rho(n, m, a) for a in arcs}
    assert set(images.values()) == sigma_image(n, m)
    assert len(set(images.values())) == len(arcs)
    ambient = power(build_gamma_d(period), m, restricted=True)
    sub = full_subquiver(ambient, sigma_image(n, m))
    big = build_gamma_d(period)
    for a in arcs:
        assert {images[b] for b in m_moves(n, m, a)} == set(sub.out_neighbors(images[a]))
        assert images[tau_m_arc(n, m, a)] == translate(big, images[a], m)
