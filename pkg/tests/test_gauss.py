import cmath
import math

import pytest

from sumprodlab.fields import make_field
from sumprodlab.gauss import (GAUSS_CSV_HEADER, MAX_DIRECT_Q, GaussReport,
                              gauss_bounds_report, gauss_sum,
                              gauss_sum_by_subgroup, subgroup_character_sum)
from sumprodlab.sets import ESet
from sumprodlab.subgroups import nth_power_subgroup, subgroup_of_order


def test_quadratic_gauss_sum_frozen():
    f5 = make_field(5)
    s = gauss_sum(f5, 2, 1)
    assert math.isclose(s.real, math.sqrt(5), rel_tol=1e-12)
    assert abs(s.imag) < 1e-9
    rep = gauss_bounds_report(f5, 2, 1)
    assert math.isclose(rep.magnitude, math.sqrt(5), rel_tol=1e-12)
    assert rep.weil == math.sqrt(5)
    assert math.isclose(rep.subgroup_sum.real, (math.sqrt(5) - 1) / 2,
                        rel_tol=1e-12)
    assert rep.group_energy == 6  # E+({1, 4}) in GF(5)
    assert math.isclose(rep.konyagin, 5 ** 0.125 * 6 ** 0.25, rel_tol=1e-12)
    assert math.isclose(rep.ratio_weil, 1.0, rel_tol=1e-9)
    assert 0.0 < rep.ratio_paper < 1.0
    assert math.isclose(rep.nontrivial_cutoff, 5 ** (29 / 57))


def test_trivial_power_sum_vanishes():
    f5 = make_field(5)
    for a in range(1, 5):
        assert abs(gauss_sum(f5, 1, a)) < 1e-9


def test_extension_field_frozen():
    f9 = make_field(3, 2)
    v = gauss_sum_by_subgroup(f9, 4, 5)
    assert math.isclose(v.real, -3.0, abs_tol=1e-9)
    assert abs(v.imag) < 1e-9
    rep = gauss_bounds_report(f9, 4, 5)
    assert math.isclose(rep.magnitude, 3.0, abs_tol=1e-9)
    assert (rep.p, rep.m, rep.q, rep.n, rep.a) == (3, 2, 9, 4, 5)


def test_full_unit_group_and_singleton():
    f7 = make_field(7)
    units = nth_power_subgroup(f7, 1)
    assert units.order == 6
    for a in (1, 6):
        s = subgroup_character_sum(f7, units, a)
        assert cmath.isclose(s, -1.0, abs_tol=1e-9)
    one = subgroup_of_order(f7, 1)
    assert cmath.isclose(subgroup_character_sum(f7, one, 3),
                         f7.additive_char(3, 1), abs_tol=1e-12)
    # plain ESet input works too
    g = ESet(f7, [1, 2, 4])
    expect = sum(f7.additive_char(1, x) for x in (1, 2, 4))
    assert cmath.isclose(subgroup_character_sum(f7, g, 1), expect,
                         abs_tol=1e-12)


def test_agreement_direct_vs_subgroup():
    for p, m in [(13, 1), (5, 2), (2, 4)]:
        ctx = make_field(p, m)
        for n in (2, 3):
            if (ctx.q - 1) % n:
                continue
            for a in (1, ctx.q - 1):
                v = gauss_sum_by_subgroup(ctx, n, a)
                assert cmath.isclose(v, gauss_sum(ctx, n, a), abs_tol=1e-8)


def test_report_serialization():
    rep = gauss_bounds_report(make_field(13), 3, 2)
    row = rep.csv_row()
    assert len(row) == len(GAUSS_CSV_HEADER) == 13
    assert row[0] == "13" and row[3] == "3" and row[4] == "2"
    assert float(row[7]) == rep.magnitude
    assert float(row[11]) == rep.ratio_weil
    d = rep.as_dict()
    for k in GAUSS_CSV_HEADER:
        assert k in d
    assert d["group_energy"] == rep.group_energy
    assert isinstance(rep, GaussReport)


def test_power_cache_eviction_keeps_answers():
    f5 = make_field(5)
    before = gauss_sum(f5, 2, 1)
    for n in range(1, 20):
        gauss_sum(f5, n, 1)
    assert gauss_sum(f5, 2, 1) == before


def test_validation():
    f7 = make_field(7)
    with pytest.raises(ValueError, match="nonzero"):
        gauss_sum(f7, 2, 0)
    with pytest.raises(ValueError, match="positive"):
        gauss_sum(f7, 0, 1)
    with pytest.raises(ValueError, match="positive"):
        gauss_sum(f7, -2, 1)
    with pytest.raises(ValueError, match="divide"):
        gauss_sum_by_subgroup(f7, 4, 1)
    with pytest.raises(ValueError, match="n >= 2"):
        gauss_bounds_report(f7, 1, 1)
    with pytest.raises(ValueError, match="does not live"):
        subgroup_character_sum(f7, ESet(make_field(11), [1]), 1)
    big = make_field(1000003)
    assert big.q > MAX_DIRECT_Q
    with pytest.raises(ValueError, match="guard"):
        gauss_sum(big, 2, 1)
