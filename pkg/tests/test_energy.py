import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumprodlab import oracle
from sumprodlab.energy import (EnergyReport, cauchy_schwarz_chain, energy,
                               growth_chain_report, make_triple_witness,
                               pair_energy_bound_ratio, plunnecke_ruzsa_check,
                               product_shift_identity, shifted_subgroup_ratio,
                               triple_cover_count, triple_cover_totals)
from sumprodlab.fields import make_field
from sumprodlab.sets import ESet


def S(ctx, codes):
    return ESet(ctx, codes)


def test_energy_frozen_values():
    f5 = make_field(5)
    rep = energy(S(f5, [0, 1]))
    assert isinstance(rep, EnergyReport)
    assert rep.value == 6
    assert rep.histogram == {0: 1, 1: 2, 2: 1}
    assert rep.support_size == 3
    assert rep.as_dict() == {"kind": "additive", "value": 6, "support": 3}

    assert energy(S(f5, [0, 1]), kind="multiplicative").value == 10

    f7 = make_field(7)
    assert energy(S(f7, [1, 2, 3]), kind="multiplicative").value == 19
    assert energy(S(f7, [1, 2, 4]), kind="multiplicative").value == 27
    assert energy(S(f7, [1, 2, 4]), kind="multiplicative").histogram == \
        {1: 3, 2: 3, 4: 3}


def test_energy_two_sets_and_empty():
    f7 = make_field(7)
    rep = energy(S(f7, [1, 2]), S(f7, [3]))
    assert rep.value == 2 and rep.support_size == 2
    assert energy(S(f7, []), S(f7, [1])).value == 0
    with pytest.raises(ValueError):
        energy(S(f7, [1]), kind="odd")
    with pytest.raises(ValueError):
        energy(S(f7, [1]), S(make_field(11), [1]))


def test_energy_extension_field_paths():
    # additive path uses digit matrices, multiplicative goes through dlog tables
    ctx = make_field(3, 2)
    sub = ctx.subfield(1)
    assert energy(sub, kind="additive").value == \
        oracle.energy_brute(sub, sub, "additive")
    nz = S(ctx, [1, 2])
    assert energy(nz, kind="multiplicative").value == \
        oracle.energy_brute(nz, nz, "multiplicative")
    withzero = S(ctx, [0, 1, 4])
    assert energy(withzero, kind="multiplicative").value == \
        oracle.energy_brute(withzero, withzero, "multiplicative")


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(5, 1), (13, 1), (2, 3), (3, 2)]),
       st.sampled_from(["additive", "multiplicative"]), st.data())
def test_energy_matches_oracle(pm, kind, data):
    ctx = make_field(*pm)
    pool = st.lists(st.integers(0, ctx.q - 1), min_size=1, max_size=7)
    A = S(ctx, data.draw(pool))
    B = S(ctx, data.draw(pool))
    assert energy(A, B, kind=kind).value == oracle.energy_brute(A, B, kind)


def test_shifted_subgroup_ratio_frozen():
    f7 = make_field(7)
    got = shifted_subgroup_ratio(S(f7, [1, 2, 4]), 1)
    assert math.isclose(got, 17 / (9 * math.log(3)), rel_tol=1e-12)


def test_shifted_subgroup_ratio_validation():
    f7 = make_field(7)
    g = S(f7, [1, 2, 4])
    with pytest.raises(ValueError, match="nonzero"):
        shifted_subgroup_ratio(g, 0)
    with pytest.raises(ValueError):
        shifted_subgroup_ratio(S(f7, [1]), 1)
    with pytest.raises(ValueError):
        shifted_subgroup_ratio(S(f7, [0, 1]), 1)
    with pytest.raises(ValueError):
        shifted_subgroup_ratio(S(f7, [2, 4]), 1)  # no 1
    with pytest.raises(ValueError, match="closed"):
        shifted_subgroup_ratio(S(f7, [1, 2]), 1)


def test_triple_cover_frozen():
    f7 = make_field(7)
    aprime = S(f7, [1, 2])
    c = S(f7, [1, 3])
    assert triple_cover_count(aprime, c, 1, 2, 2) == 1
    assert triple_cover_count(aprime, c, 1, 3, 1) == 0
    with pytest.raises(ValueError):
        triple_cover_count(aprime, S(f7, [0, 1]), 1, 1, 1)


def test_triple_cover_matches_oracle():
    ctx = make_field(3, 2)
    aprime = S(ctx, [0, 2, 5])
    c = S(ctx, [1, 4, 7])
    for ys in [(1, 2, 3), (4, 4, 4), (0, 5, 8)]:
        assert triple_cover_count(aprime, c, *ys) == \
            oracle.triple_cover_brute(aprime, c, *ys)


def test_triple_cover_totals():
    f7 = make_field(7)
    total, diag = triple_cover_totals(S(f7, [1]), S(f7, [3]))
    assert (total, diag) == (1, 1)
    aprime, c = S(f7, [2, 3, 5]), S(f7, [1, 2, 4])
    total, diag = triple_cover_totals(aprime, c)
    assert total == 3 * 27
    assert diag == 3 * (3 * 9 - 2 * 3)  # N_c = |A'| for every c here
    with pytest.raises(ValueError):
        triple_cover_totals(S(f7, []), c)


def test_product_shift_identity_frozen_and_bulk():
    f7 = make_field(7)
    assert product_shift_identity(f7, 1, 2, 4, 1, 1, 1) is True
    ctx = make_field(2, 4)
    for a3 in range(2, 10):
        assert product_shift_identity(ctx, 0, 1, a3, 5, 9, 3)
    with pytest.raises(ValueError):
        product_shift_identity(f7, 1, 1, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        product_shift_identity(f7, 1, 2, 3, 0, 1, 1)
    with pytest.raises(ValueError):
        product_shift_identity(f7, 1, 2, 3, 1, 1, 0)


def test_witness_and_chain_frozen():
    f7 = make_field(7)
    g = S(f7, [1, 2, 4])
    # A = B = C = {1,2,4}, d = 1, A' = {2,3,5}; picking the y_i inside A'
    # makes c = 1 a cover, and alpha = 3/2 = 5, beta = -1/2 = 3 in GF(7)
    w = make_triple_witness(g, g, 1, 2, 3, 5)
    assert (w.y1, w.y2, w.y3) == (2, 3, 5)
    assert (w.alpha, w.beta) == (5, 3)
    assert w.cover == 1
    assert w.cover == triple_cover_count(S(f7, [2, 3, 5]), g, 2, 3, 5)
    rec = cauchy_schwarz_chain(g, g, g, 1, w)
    assert rec.ab_size == 3
    assert rec.pair_count_lower == 3
    assert rec.pair_count == 6
    assert rec.cross_energy == 15 and rec.base_energy == 15
    assert rec.cross_energy * rec.ab_size >= rec.pair_count ** 2


def test_chain_validation():
    f7 = make_field(7)
    g = S(f7, [1, 2, 4])
    w = make_triple_witness(g, g, 1, 2, 3, 5)
    with pytest.raises(ValueError, match="nonzero"):
        cauchy_schwarz_chain(g, g, g, 0, w)
    with pytest.raises(ValueError, match=r"\|A\| = \|B\|"):
        cauchy_schwarz_chain(g, S(f7, [1, 2]), g, 1, w)
    with pytest.raises(ValueError, match="0 in"):
        cauchy_schwarz_chain(g, g, S(f7, [0, 1, 2]), 1, w)
    with pytest.raises(ValueError, match="0 in"):
        # -3 = 4 lies in A, so 0 lands in A + 3
        cauchy_schwarz_chain(g, g, g, 3, w)
    with pytest.raises(ValueError):
        make_triple_witness(g, g, 1, 1, 1, 3)
    with pytest.raises(ValueError):
        make_triple_witness(g, g, 0, 1, 2, 3)


def test_growth_chain_report_frozen():
    f7 = make_field(7)
    g = S(f7, [1, 2, 4])
    rep = growth_chain_report(g, g, g, 1)
    assert rep.a_size == 3
    assert rep.K == Fraction(1) and rep.ab_size == 3
    assert rep.L == Fraction(2) and rep.shifted_product_size == 6
    assert rep.energy_ab == 15
    assert math.isclose(rep.ratio_energy_lb, 15 * 64 / 27)
    assert math.isclose(rep.ratio_k14_l12, 4096 / 3)
    assert len(rep.inequalities) == 1
    ineq = rep.inequalities[0]
    assert ineq.name == "ruzsa_product_AA" and ineq.holds
    assert ineq.lhs == 3 * 3 and ineq.rhs == 9
    d = rep.as_dict()
    assert d["sizes"] == {"A": 3, "AB": 3, "A_d_C": 6}
    assert d["K"] == 1.0 and d["L"] == 2.0


def test_growth_chain_validation():
    f7 = make_field(7)
    g = S(f7, [1, 2, 4])
    with pytest.raises(ValueError):
        growth_chain_report(g, S(f7, [1, 2]), g, 1)
    with pytest.raises(ValueError, match="0 in C"):
        growth_chain_report(g, g, S(f7, [0, 1, 2]), 1)
    with pytest.raises(ValueError, match=r"0 in A \+ d"):
        growth_chain_report(g, g, g, 3)
    with pytest.raises(ValueError):
        growth_chain_report(S(f7, [1]), S(f7, [1]), S(f7, [1]), 1)


def test_plunnecke_frozen_and_validation():
    f11 = make_field(11)
    y = S(f11, [0, 1])
    xs = [S(f11, [0, 2]), S(f11, [0, 2])]
    assert plunnecke_ruzsa_check(y, xs, "additive") is True
    g7 = S(make_field(7), [1, 2, 4])
    assert plunnecke_ruzsa_check(g7, [g7, g7, g7], "multiplicative") is True
    with pytest.raises(ValueError, match="0-free"):
        plunnecke_ruzsa_check(y, xs, "multiplicative")
    with pytest.raises(ValueError):
        plunnecke_ruzsa_check(y, [], "additive")
    with pytest.raises(ValueError):
        plunnecke_ruzsa_check(y, [y] * 4, "additive")
    with pytest.raises(ValueError):
        plunnecke_ruzsa_check(S(f11, []), xs, "additive")
    with pytest.raises(ValueError):
        plunnecke_ruzsa_check(y, xs, "mixed")


def test_pair_energy_bound_frozen():
    f5 = make_field(5)
    rep = pair_energy_bound_ratio(S(f5, [1, 2]), S(f5, [1]), S(f5, [1, 3]))
    assert rep.energy == 4
    assert math.isclose(rep.bound, 16.0)
    assert math.isclose(rep.ratio, 0.25)
    assert rep.hypothesis_ok is True
    assert rep.as_dict()["value"] == 4
    big = S(f5, list(range(5)))
    assert pair_energy_bound_ratio(big, big, big).hypothesis_ok is False
    with pytest.raises(ValueError, match="prime"):
        pair_energy_bound_ratio(S(make_field(2, 2), [1]),
                                S(make_field(2, 2), [1]),
                                S(make_field(2, 2), [1]))
    with pytest.raises(ValueError):
        pair_energy_bound_ratio(S(f5, []), S(f5, [1]), S(f5, [1]))
