import csv
import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kissfabric.fabric import chain_closed_form, region_bends
from kissfabric.sangaku import (
    CSV_FIELDS,
    construct_menuma_geometry,
    menuma_closed_form,
    verify_gumma,
    verify_menuma,
)


def test_gumma_examples():
    rep = verify_gumma(2, 2)
    assert (rep.quantities["kappa1"], rep.quantities["kappa4"], rep.quantities["kappa7"]) == (2, 26, 86)
    assert rep.lhs == 182 and rep.rhs == 182 and rep.passed
    assert verify_gumma(1, 0).passed


def test_gumma_requires_congruent_pair():
    rep = verify_gumma(1, 1, kappa1=2)
    assert not rep.passed
    assert rep.residual == pytest.approx(9 * 1)
    assert "congruent" in rep.diagnostic


@given(st.floats(0, 1e3), st.floats(0, 1e3))
def test_gumma_parameter_free(k0, delta):
    assert verify_gumma(k0, delta).passed


def test_menuma_examples():
    rep = verify_menuma(1)
    assert rep.passed and rep.lhs == pytest.approx(7)
    assert rep.quantities["kappa0"] == pytest.approx(7 / 6)
    assert verify_menuma(2).lhs == pytest.approx(3.5)


@pytest.mark.parametrize("r", [0.5, 1.0, 3.0])
def test_menuma_geometry_matches_closed_form(r):
    ch = construct_menuma_geometry(r, 8)
    q = menuma_closed_form(r)
    assert ch.kappas[7] * r == pytest.approx(7, rel=1e-8)
    for n in ch.indices:
        expected = chain_closed_form(q["kappa0"], q["kappa1"], q["delta"], n)
        assert ch.kappas[n] == pytest.approx(expected, rel=1e-8)
    # the configuration itself: bounding radii 3r and 2r, chain radius r
    outer, inner = ch.bounding
    assert outer.shape.radius == pytest.approx(3 * r) and inner.shape.radius == pytest.approx(2 * r)
    assert ch.members[1].radius == pytest.approx(r)


def test_menuma_geometry_symmetric():
    ch = construct_menuma_geometry(1.0, 10)
    assert ch.kappas[0] == pytest.approx(7 / 6, rel=1e-8)
    for n in ch.indices:
        if 2 - n in ch.members:
            assert ch.kappas[n] == pytest.approx(ch.kappas[2 - n], rel=1e-8)


def test_menuma_geometry_descartes():
    ch = construct_menuma_geometry(1.0, 8)
    q = region_bends(None, ch, 0)
    assert q.bends[0] == pytest.approx(-1 / 3)
    assert abs(q.residual) <= 1e-9 * q.scale


def test_menuma_count_check():
    with pytest.raises(ValueError):
        construct_menuma_geometry(1.0, 7)
    with pytest.raises(ValueError):
        verify_menuma(0)


def test_report_serialization():
    rep = verify_menuma(1)
    assert rep.to_text().splitlines()[-1].strip() == "pass"
    rows = list(csv.reader(io.StringIO(rep.to_csv_row(header=True))))
    assert rows[0] == CSV_FIELDS
    assert rows[1][0] == "menuma" and rows[1][4] == "true"
    assert float(rows[1][1]) == pytest.approx(7)
