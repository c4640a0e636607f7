import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sheetcalc import walg
from sheetcalc.orbits import orbit
from sheetcalc.rootdata import build_root_datum
from sheetcalc.slodowy import sl2_from_orbit

levels = st.fractions(min_value=-7, max_value=7, max_denominator=6)


def c_of(o, k):
    return walg.central_charge(walg.WParams(sl2_from_orbit(o), k))


@given(levels)
def test_virasoro_from_sl2(k):
    if k == -2:
        return
    assert c_of(orbit("A", 1, [2]), k) == 1 - 6 * (k + 1) ** 2 / (k + 2)


@given(levels)
def test_w3_from_sl3(k):
    if k == -3:
        return
    assert c_of(orbit("A", 2, [3]), k) == 2 * (1 - 12 * (k + 2) ** 2 / (k + 3))


def minimal_c(d, k):
    # central charge of the minimal W-algebra
    hv = d.dual_coxeter
    return k * d.dimension / (k + hv) - 6 * k + hv - 4


@pytest.mark.parametrize("o", [orbit("A", 3, [2, 1, 1]), orbit("A", 5, [2, 1, 1, 1, 1]),
                               orbit("D", 4, [2, 2, 1, 1, 1, 1]), orbit("D", 5, [2, 2] + [1] * 6)])
@pytest.mark.parametrize("k", [F(-1), F(1, 2), F(3), F(-7, 3)])
def test_minimal_central_charge(o, k):
    d = build_root_datum(o.type_label, o.rank)
    assert c_of(o, k) == minimal_c(d, k)


@pytest.mark.parametrize("n", range(4, 9))
def test_heisenberg_point(n):
    assert c_of(orbit("A", n - 1, [2] + [1] * (n - 2)), -1) == 1


@pytest.mark.parametrize("m", [2, 3])
def test_rectangular_point(m):
    assert c_of(orbit("A", 2 * m - 1, [2] * m), -m) == 1


def test_critical_level_rejected():
    t = sl2_from_orbit(orbit("A", 2, [3]))
    with pytest.raises(ValueError):
        walg.WParams(t, -3)


def test_admissible_levels():
    sl2 = build_root_datum("A", 1)
    assert walg.is_admissible(sl2, F(-1, 2)) == 2
    assert walg.is_admissible(sl2, F(-4, 3)) == 3
    assert walg.is_admissible(sl2, F(-3, 2)) is None
    assert walg.is_admissible(sl2, 0) == 1
    g2 = build_root_datum("G", 2)
    assert walg.is_admissible(g2, F(-5, 3)) == 3
    assert walg.is_admissible(g2, F(-4, 3)) == 3
    assert walg.is_admissible(g2, F(-3, 2)) == 2
    assert walg.is_admissible(g2, -2) is None
    # q divisible by the lacing number needs p >= h = 6
    assert walg.is_admissible(g2, F(5, 3) - 4) is None
    for m in (2, 3, 4):
        assert walg.is_admissible(build_root_datum("A", 2 * m - 1), -m) is None


def test_g2_lisse():
    for k in (F(-5, 3), F(-4, 3), F(-1), F(0), F(1)):
        assert walg.minimal_lisse("G", 2, k)
    for k in (F(-3, 2), F(-2)):
        assert not walg.minimal_lisse("G", 2, k)


def test_lisse_errors():
    with pytest.raises(ValueError):
        walg.minimal_lisse("A", 3, -1)
    with pytest.raises(KeyError):
        walg.minimal_lisse("E", 6, -1)


def test_table_override(tmp_path, monkeypatch):
    path = tmp_path / "levels.json"
    path.write_text(json.dumps({"schema": "natural-levels/1", "rows": [
        {"g_type": "G", "rank_spec": "2", "component_index": 1, "a": "1", "b": "1/2", "source_note": "test"}]}))
    table = walg.NaturalLevelTable.load(str(path))
    assert walg.natural_levels("G", 2, 1, table) == [(1, F(3, 2))]
    assert not walg.minimal_lisse("G", 2, 0, table)
    monkeypatch.setenv("SHEETCALC_NATURAL_LEVELS", str(path))
    assert not walg.minimal_lisse("G", 2, 0)


def test_packaged_table_rows_have_notes():
    table = walg.NaturalLevelTable.load()
    assert all(r["source_note"] for r in table.rows)
    assert [(i, v) for i, v in walg.natural_levels("G", 2, F(-5, 3), table)] == [(1, F(0))]
