import math

import pytest

from diagmon.diagrams import EvaluationMap, Flavor
from diagmon.dims import cell_dim
from diagmon.monoid import build_diagram_monoid, simple_dimensions
from diagmon.nonss import (DELTA_TO_L, FusionRuleSet, InvalidOrder, asymptotic_ratio, b_sum, fusion_table,
                           mo_recurrence, motzkin_scaling_report, planar_rook_zero_indecomposable,
                           simple_dims_mo, simple_dims_tl, tilting_dims, tl_bounds_report, tl_l2_recurrence,
                           tl_l3_recurrence)
from oracles import MO_SIMPLE, PRO_GENERATOR_ACTION, TILTING_DIMS_L3, TL_FUSION

# loops evaluate to delta; Motzkin singleton paths stay at 1
DELTA_MAP = {
    "TL": {0: EvaluationMap.zero(), 1: EvaluationMap.classical()},
    "Mo": {0: EvaluationMap.from_values(1, 0), 1: EvaluationMap.classical()},
}


def test_invalid_order():
    with pytest.raises(InvalidOrder):
        FusionRuleSet(1, "TL")


@pytest.mark.parametrize("key,want", sorted(TL_FUSION.items()))
def test_tl_fusion_oracle(key, want):
    n, l = key
    assert simple_dims_tl(n, l) == want


def test_tilting_dims():
    assert tilting_dims(3, 9) == TILTING_DIMS_L3
    # l = 2: every odd T(m) is a Weyl module
    assert tilting_dims(2, 7)[1::2] == [2, 4, 6, 8]


@pytest.mark.parametrize("family,dim_v", [("TL", 2), ("Mo", 3)])
@pytest.mark.parametrize("l", [2, 3, 5])
def test_dimension_conservation(family, dim_v, l):
    T = tilting_dims(l, 21, family)
    for n, row in enumerate(fusion_table(family, l, 20)):
        assert sum(c * T[k] for k, c in row.items()) == dim_v ** n


def test_mo_oracle():
    for (n, l), want in MO_SIMPLE.items():
        assert simple_dims_mo(n, l) == want


@pytest.mark.parametrize("family,flavor", [("TL", Flavor.TEMPERLEY_LIEB), ("Mo", Flavor.MOTZKIN)])
def test_fusion_matches_gram_ranks(family, flavor):
    fn = simple_dims_tl if family == "TL" else simple_dims_mo
    for delta, l in DELTA_TO_L[family].items():
        for n in range(1, 5 if family == "Mo" else 7):
            m = build_diagram_monoid(flavor, n)
            got = simple_dimensions(m, DELTA_MAP[family][delta])
            assert got == fn(n, l), (family, delta, n)


def test_tl_l2_recurrence():
    for n in range(1, 15):
        assert tl_l2_recurrence(n) == simple_dims_tl(n, 2)


def test_tl_l3_recurrence_variants():
    for n in range(1, 13):
        assert tl_l3_recurrence(n) == simple_dims_tl(n, 3)
    # the b[n-1,k] reading already disagrees at n = 1 (k = 0 picks up a spurious 1)
    assert tl_l3_recurrence(1, "stated") != simple_dims_tl(1, 3)


@pytest.mark.parametrize("l", [2, 3, 5])
def test_mo_recurrence(l):
    for n in range(1, 13):
        assert mo_recurrence(n, l) == simple_dims_mo(n, l)


def test_semisimple_limit():
    # far above n the fusion rules never fire
    for n in range(1, 8):
        assert simple_dims_tl(n, 50) == {k: cell_dim(Flavor.TEMPERLEY_LIEB, n, k) for k in range(n % 2, n + 1, 2)}


def test_asymptotic_ratio_l2_l3():
    assert abs(asymptotic_ratio("TL", 512, 2)["ratio"] - 1) < 0.01
    assert asymptotic_ratio("TL", 512, 3)["bounds_ok"]
    with pytest.raises(ValueError):
        asymptotic_ratio("TL", 64, 5)


def test_bounds_report_consistent_with_b_sum():
    rep = tl_bounds_report(100, 3)
    upper = math.sqrt(6 / (8 * math.pi)) / 10
    assert rep["ratio"] == pytest.approx(b_sum("TL", 100, 3) / 2 ** 100 / upper)


def test_motzkin_scaling_report_shape():
    rep = motzkin_scaling_report(3, [64, 128, 256])
    assert len(rep["ratio"]) == 3 and math.isfinite(rep["drift_exponent"])


def test_planar_rook_witness():
    rep = planar_rook_zero_indecomposable(2)
    assert rep["generator_action"] == PRO_GENERATOR_ACTION
    assert rep["commutant_dim"] == 2 and rep["local"] and rep["square_is_basis"]
    for n in (3, 4):
        assert planar_rook_zero_indecomposable(n)["indecomposable"]
