import pathlib

import pytest

import knotmosaic as km

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "data" / "fixtures"
TREFOIL = "0 2 1 0\n2 8 9 1\n3 9 10 4\n0 3 4 0\n"


@pytest.fixture(scope="module")
def table():
    return km.load_table()


def test_parse_and_serialize():
    m = km.Mosaic.parse(TREFOIL)
    assert m.size == 4
    assert str(m) == TREFOIL
    assert m.at(1, 1) == "8"
    assert m.non_blank_count() == 12
    assert m.crossing_count() == 3
    assert m.is_suitably_connected()
    assert m.components() == 1
    with pytest.raises(ValueError):
        km.Mosaic.parse("0 0\n0")


def test_violation():
    m = km.Mosaic.parse("2 1\n3 0")
    assert not m.is_suitably_connected()
    assert m.violation()[:2] == (0, 1)


def test_invariants_and_identify(table):
    m = km.Mosaic.parse(TREFOIL)
    inv = km.invariants(m)
    assert inv["determinant"] == 3
    assert inv["alexander"] == "1:0;-1:1;1:2"
    assert table.identify(m) == ["3_1"]
    assert len(table) == 280
    assert table.identify(km.Mosaic.parse((FIXTURES / "table" / "13a4304.txt").read_text())) == ["13a4304"]


def test_reduce():
    m = km.Mosaic.parse((FIXTURES / "5_1_19.txt").read_text())
    result, steps, exhausted = km.reduce(m)
    assert result.non_blank_count() == 17
    assert len(steps) == 2
    assert not exhausted
    assert km.invariants(result)["fingerprint"] == km.invariants(m)["fingerprint"]


def test_prune_and_render():
    assert km.prune(km.Mosaic.parse((FIXTURES / "composite_kink.txt").read_text()))[0] in ("composite", "reducible")
    m = km.Mosaic.parse(TREFOIL)
    assert km.render_svg(m).count('class="strand"') == 16
    assert len(km.render_ascii(m).splitlines()) == 12


def test_layouts_and_bounds():
    assert km.tile_bounds(7) == (27, 41)
    ids = [(i, n) for i, _, n in km.layouts()]
    assert [n for _, n in ids].count(27) == 3


def test_small_survey(table):
    results = km.survey(table, layouts=[1], min_crossings=12, exclusion=[])
    assert results
    assert all(r["tiles"] == 27 for r in results)
    assert all(r["layout"] == 1 for r in results)
