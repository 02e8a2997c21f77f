import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kissfabric.fabric import (
    ComplexRootsError,
    FrameCircle,
    WindowMissError,
    build_fabric,
    chain_closed_form,
    chain_recurrence_step,
    check_integral_premise,
    descartes_fourth,
    descartes_residual,
    frame_delta,
    frame_kappa,
    make_chain,
    region_bends,
    shared_circle,
    tangency_circle,
    verify_integral,
)
from kissfabric.grid import GridSpec, Orientation, cell_circle
from kissfabric.inversive import Circle, Line, Point, circle_through, curvature, distance_to, invert_point, sample_points

V, H = Orientation.VERTICAL, Orientation.HORIZONTAL


def image_by_points(spec, k, m):
    """Oracle: invert three points of cell circle (k, m) and fit through them."""
    pts = [invert_point(spec.inversion, p) for p in sample_points(cell_circle(spec, k, m), 3)]
    return circle_through(*pts, tol=1e-9)


# -- frames ---------------------------------------------------------------


def test_frame_delta_examples():
    assert frame_delta(GridSpec(d=1, r=1)) == 2
    assert frame_delta(GridSpec(d=2, r=1)) == 4
    assert frame_delta(GridSpec(d=1, r=2)) == 0.5


def test_frame_kappa_examples():
    assert frame_kappa(GridSpec(ax=0.5), V, 1) == 1
    assert frame_kappa(GridSpec(ay=0), H, 0) == 0
    assert frame_kappa(GridSpec(ay=0), H, 2) == 4


def test_example_frames(example_fabric):
    assert [f.kappa for f in example_fabric.v_frame] == [2 * k - 1 for k in range(-5, 6)]
    assert [f.kappa for f in example_fabric.h_frame] == [2 * m for m in range(-5, 6)]
    assert example_fabric.delta == 2
    assert isinstance(example_fabric.h_frame[5].shape, Line)


@settings(max_examples=50)
@given(st.floats(0.1, 10), st.floats(0, 0.999), st.floats(0.1, 10))
def test_signed_frame_differences(d, u, r):
    spec = GridSpec(d=d, ax=u * d, ay=0.0, r=r)
    f = build_fabric(spec, (-4, 4), (0, 0))
    for frames in (f.v_frame, f.h_frame):
        for a, b in zip(frames, frames[1:]):
            assert b.kappa - a.kappa == pytest.approx(f.delta, rel=1e-9)


# -- chains ---------------------------------------------------------------


def test_example_chain_strip_one(example_fabric):
    ch = example_fabric.chain(V, 1)
    assert [ch.kappas[n] for n in range(-4, 4)] == pytest.approx([26, 14, 6, 2, 2, 6, 14, 26], abs=1e-9)
    for n in (-4, 0, 3):
        assert curvature(image_by_points(example_fabric.spec, 1, n)) == pytest.approx(ch.kappas[n], abs=1e-8)


def test_example_middle_chain(example_fabric):
    ch = example_fabric.chain(V, 0)
    assert [ch.kappas[n] for n in range(-3, 3)] == pytest.approx([12, 4, 0, 0, 4, 12], abs=1e-9)
    assert isinstance(ch.members[0], Line) and isinstance(ch.members[-1], Line)


def test_closed_form_examples():
    assert chain_closed_form(2, 2, 2, 4) == 26
    assert chain_closed_form(3.5, 9.1, 0.7, 0) == 3.5
    assert chain_closed_form(2, 2, 2, -1) == 6


def test_recurrence_examples():
    assert chain_recurrence_step(2, 2, 2) == 6
    assert chain_recurrence_step(5.5, 5.5, 0) == 5.5
    assert chain_recurrence_step(6, 14, 2) == 26


@given(st.floats(-50, 50), st.floats(-50, 50), st.floats(0, 10), st.integers(-15, 15))
def test_recurrence_matches_closed_form(k0, k1, delta, n):
    a, b = chain_closed_form(k0, k1, delta, n - 1), chain_closed_form(k0, k1, delta, n)
    expected = chain_closed_form(k0, k1, delta, n + 1)
    assert chain_recurrence_step(a, b, delta) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_negative_bend_when_carrier_inside_cell_circle():
    f = build_fabric(GridSpec(d=1, ax=0.5, ay=0.5, r=1), (-2, 2))
    ch = f.chain(V, 0)
    assert ch.bends[0] == pytest.approx(-0.5)
    assert ch.kappas[0] == pytest.approx(0.5)
    assert ch.bends[1] + ch.bends[-1] == pytest.approx(2 * (ch.bends[0] + f.delta))


# -- Descartes ------------------------------------------------------------


def _inner_circle_between_two_unit_circles_and_line():
    # oracle: bisection on the tangency condition, circle centred at (0, rho)
    lo, hi = 1e-6, 1.0
    for _ in range(200):
        mid = (lo + hi) / 2
        if math.hypot(1.0, 1.0 - mid) - (1.0 + mid) > 0:
            lo = mid
        else:
            hi = mid
    return 1 / lo


def test_descartes_fourth_examples():
    assert descartes_fourth(-1, 3, 2) == (2, 6)
    for k in (2, 6):
        assert descartes_residual((-1, 3, 2, k)) == 0
    assert descartes_fourth(0, 0, 1) == (1, 1)
    lo, hi = descartes_fourth(1, 1, 0)
    assert lo == 0
    assert hi == pytest.approx(_inner_circle_between_two_unit_circles_and_line(), rel=1e-12)


def test_descartes_fourth_complex():
    with pytest.raises(ComplexRootsError):
        descartes_fourth(-1, -1, 1)


@given(st.floats(0, 100), st.floats(0, 100), st.floats(0, 100))
def test_descartes_sum_rule(k1, k2, k3):
    a, b = descartes_fourth(k1, k2, k3)
    assert a + b == pytest.approx(2 * (k1 + k2 + k3), rel=1e-15, abs=1e-300)
    scale = (k1 + k2 + k3 + max(abs(a), abs(b))) ** 2
    for k in (a, b):
        assert abs(descartes_residual((k1, k2, k3, k))) <= 1e-9 * max(scale, 1e-300)


def test_region_bends_outer_frame_is_negative(example_fabric):
    ch = example_fabric.chain(V, 1)
    q = region_bends(example_fabric, ch, -1)
    assert q.bends == pytest.approx((-1, 3, 2, 2), abs=1e-12)
    assert abs(q.residual) < 1e-12
    # geometric oracle: the unit frame circle really contains the member
    outer, member = ch.bounding[0].shape, ch.members[-1]
    assert all(p.dist(outer.center) < outer.radius for p in sample_points(member, 16))


def test_region_bends_middle_chain(example_fabric):
    q = region_bends(example_fabric, example_fabric.chain(V, 0), -1)
    # both unit frame circles touch the two lines from the same side: no enclosure
    assert q.bends == (1, 1, 0, 0)
    assert q.residual == 0
    assert descartes_residual((-1, 1, 0, 0)) == -4


def test_region_bends_parallel_strip():
    bounding = (
        FrameCircle(H, 0, Line.horizontal(-0.5), 0.0),
        FrameCircle(H, 1, Line.horizontal(0.5), 0.0),
    )
    chain = make_chain(H, 0, {n: Circle(Point(n, 0), 0.5) for n in range(-3, 4)}, bounding, Point(0, 10))
    q = region_bends(None, chain, 0)
    assert q.bends == (0, 0, 2, 2) and q.residual == 0
    with pytest.raises(WindowMissError):
        region_bends(None, chain, 3)


# -- integrality ----------------------------------------------------------


def test_integral_premise_examples():
    assert check_integral_premise((1, 3, 2, 2, 6, 6), 1e-9)
    assert not check_integral_premise((1, 3, 2, 2.5, 6, 6), 1e-9)
    assert check_integral_premise((0, 2, 4, 4, 12, 12), 1e-9)
    with pytest.raises(ValueError):
        check_integral_premise((1, 2, 3), 1e-9)


def test_verify_integral_examples(example_spec):
    assert verify_integral(build_fabric(example_spec, (-5, 5)), 1e-6).integral
    assert not verify_integral(build_fabric(GridSpec(ax=0.3), (-5, 5)), 1e-6).integral


def test_vertex_carrier_needs_smaller_reference_circle():
    # carrier at a vertex: cell (0, 0) maps to curvature 1/2 when r = 1
    spec = GridSpec(d=1, ax=0, ay=0, r=1)
    assert curvature(image_by_points(spec, 0, 0)) == pytest.approx(0.5, abs=1e-9)
    assert not verify_integral(build_fabric(spec, (-5, 5)), 1e-6).integral
    # r = 1/sqrt(2) doubles every curvature
    spec = GridSpec(d=1, ax=0, ay=0, r=math.sqrt(0.5))
    assert curvature(image_by_points(spec, 0, 0)) == pytest.approx(1.0, abs=1e-9)
    assert verify_integral(build_fabric(spec, (-5, 5)), 1e-6).integral


def test_integral_report_text(example_fabric):
    text = verify_integral(example_fabric).to_text()
    assert text.splitlines()[-1].startswith("integral: True")


# -- tangency circle, shared circle --------------------------------------


def test_tangency_circle_through_carrier(example_fabric):
    fit = tangency_circle(example_fabric.chain(V, 1))
    assert isinstance(fit, Circle)
    assert distance_to(fit, Point(0, 0)) < 1e-12
    fit = tangency_circle(example_fabric.chain(H, 0))
    # source touch points lie on y = 1/2, whose image is this circle
    assert fit.center.dist(Point(0, 1)) < 1e-12 and fit.radius == pytest.approx(1)


def test_tangency_circle_middle_chain_is_line(example_fabric):
    fit = tangency_circle(example_fabric.chain(V, 0))
    assert isinstance(fit, Line) and distance_to(fit, Point(0, 0)) < 1e-12


def test_tangency_circle_parallel_strip():
    bounding = (
        FrameCircle(H, 0, Line.horizontal(-0.5), 0.0),
        FrameCircle(H, 1, Line.horizontal(0.5), 0.0),
    )
    chain = make_chain(H, 0, {n: Circle(Point(n, 0), 0.5) for n in range(5)}, bounding, Point(0, 10))
    fit = tangency_circle(chain)
    assert isinstance(fit, Line) and abs(fit.offset) < 1e-12


def test_shared_circle(example_fabric):
    g = shared_circle(example_fabric.chain(V, 1), example_fabric.chain(H, 0))
    assert curvature(g) == pytest.approx(2)
    g = shared_circle(example_fabric.chain(V, 0), example_fabric.chain(H, 0))
    assert isinstance(g, Line)
    narrow = build_fabric(example_fabric.spec, (-2, 2), (-1, 1))
    with pytest.raises(WindowMissError):
        shared_circle(narrow.chain(V, 2), narrow.chain(H, 0))


def test_empty_window():
    f = build_fabric(GridSpec(), (1, 0))
    assert not f.v_frame and not f.all_chains()
