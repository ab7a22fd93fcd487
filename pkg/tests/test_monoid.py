from fractions import Fraction

import numpy as np
import pytest

from diagmon.diagrams import Diagram, EvaluationMap, Flavor
from diagmon.dims import cell_dim
from diagmon.monoid import (GENERIC, SYMBOLIC, EmptyWindow, FiniteMonoid, NontrivialHClass, ParameterAssignment,
                            Prime, apexes, build_diagram_monoid, dclass_rank_permutation_invariance,
                            derived_apexes, expected_apexes, gram, green, is_well_connected,
                            monoid_from_table, rank, repgap, simple_dimensions, truncate)
from oracles import TL4_GRAM_AT_ONE, TL4_GRAM_AT_ZERO, TL4_GRAM_SYMBOLIC, TL4_REPGAP, TL4_SIMPLE

TL = Flavor.TEMPERLEY_LIEB


@pytest.fixture(scope="module")
def tl4():
    m = build_diagram_monoid(TL, 4)
    return m, green(m)


@pytest.fixture(scope="module")
def tl4_zero():
    m = build_diagram_monoid(TL, 4, EvaluationMap.zero())
    return m, green(m)


def by_apex(m, g, f):
    return {m.strands(c[0]): f(gram(m, g, j)) for j, c in enumerate(g.j_classes)}


def test_identity_and_associativity(tl4):
    m, _ = tl4
    assert m.check_identity()
    assert m.check_associative()
    assert m.labels[m.identity] == Diagram.identity(4, TL)


def test_zero_adjoined_only_when_needed():
    assert build_diagram_monoid(TL, 3).zero is None
    mz = build_diagram_monoid(TL, 3, EvaluationMap.zero())
    assert mz.zero == mz.size - 1 == 5
    # planar rook has no loops, so killing loops changes nothing
    assert build_diagram_monoid(Flavor.PLANAR_ROOK, 2, EvaluationMap.from_values(1, 0)).zero is None


def test_green_classes_tl4(tl4):
    m, g = tl4
    sizes = sorted(len(c) for c in g.j_classes)
    assert sizes == [1, 4, 9]
    assert g.d_equals_j and g.h_trivial()
    top = g.j_index(m.identity)
    assert g.j_classes[top] == [m.identity]


def test_gram_matrices(tl4, tl4_zero):
    m, g = tl4
    assert by_apex(m, g, lambda gm: gm.display()) == TL4_GRAM_SYMBOLIC
    assert by_apex(m, g, lambda gm: [[int(x) for x in r] for r in gm.specialize()]) == TL4_GRAM_AT_ONE
    mz, gz = tl4_zero
    got = by_apex(mz, gz, lambda gm: [[int(x) for x in r] for r in gm.specialize()])
    assert got.pop(None) == [[0]]
    assert got == TL4_GRAM_AT_ZERO


def test_simple_dimensions_all_modes(tl4, tl4_zero):
    m, g = tl4
    assert simple_dimensions(m, g=g) == TL4_SIMPLE["classical"]
    assert simple_dimensions(m, GENERIC, g) == TL4_SIMPLE["generic"]
    assert simple_dimensions(m, SYMBOLIC, g) == TL4_SIMPLE["generic"]
    assert simple_dimensions(m, ParameterAssignment.uniform(0), g) == TL4_SIMPLE["zero"]
    assert simple_dimensions(m, EvaluationMap.zero(), g) == TL4_SIMPLE["zero"]
    mz, gz = tl4_zero
    assert simple_dimensions(mz, g=gz) == TL4_SIMPLE["zero"]


def test_rank_at_prime(tl4):
    m, g = tl4
    j2 = next(j for j, c in enumerate(g.j_classes) if m.strands(c[0]) == 2)
    gm = gram(m, g, j2)
    # det of [[x,1,0],[1,x,1],[0,1,x]] at x = 2 is 4, a unit over Q but zero mod 2
    assert rank(gm, ParameterAssignment.uniform(2)) == 3
    assert rank(gm, Prime(2, ParameterAssignment.uniform(2))) == 2
    assert rank(gm, Prime(3, ParameterAssignment.uniform(2))) == 3
    # roots of x^3 - 2x: x = 0 drops the rank to 2
    assert rank(gm, ParameterAssignment.uniform(Fraction(0))) == 2


def test_repgap(tl4, tl4_zero):
    m, g = tl4
    assert repgap(m, g=g) == TL4_REPGAP["classical"]
    mz, gz = tl4_zero
    assert repgap(mz, g=gz) == TL4_REPGAP["zero"]


def test_nontrivial_h_raises():
    m = build_diagram_monoid(Flavor.BRAUER, 3)
    with pytest.raises(NontrivialHClass):
        simple_dimensions(m)
    assert apexes(m) == {1, 3}


@pytest.mark.parametrize("flavor", [TL, Flavor.MOTZKIN, Flavor.PLANAR_ROOK, Flavor.PLANAR_PARTITION])
def test_generic_ranks_are_cell_dims(flavor):
    for n in range(1, 4):
        m = build_diagram_monoid(flavor, n)
        got = simple_dimensions(m, GENERIC)
        assert got == {k: cell_dim(flavor, n, k) for k in got}
        assert set(got) == apexes(m)


def test_expected_apexes_stated_cases():
    a1zero = EvaluationMap.from_values(1, 0)
    assert expected_apexes(TL, 4, a1zero) == {2, 4}
    assert expected_apexes(Flavor.PARTITION, 3, EvaluationMap.classical()) == {0, 1, 2, 3}
    assert expected_apexes(Flavor.PARTITION, 3, EvaluationMap.from_values(0, 1)) == {0, 1, 3}
    assert apexes(build_diagram_monoid(TL, 4, a1zero)) == {2, 4}


@pytest.mark.filterwarnings("ignore::diagmon.monoid.GenusSensitiveWarning")
@pytest.mark.parametrize("flavor", list(Flavor))
def test_derived_apexes_match_tables(flavor):
    for n in range(1, 4):
        for a in (EvaluationMap.classical(), EvaluationMap.zero(), EvaluationMap.from_values(0, 1),
                  EvaluationMap.from_values(1, 0, 1)):
            assert apexes(build_diagram_monoid(flavor, n, a)) == derived_apexes(flavor, n, a)


def test_connectedness_definitions():
    c5 = is_well_connected(build_diagram_monoid(TL, 5))
    assert c5.well_connected
    c4 = is_well_connected(build_diagram_monoid(TL, 4))
    assert c4.null_connected and not c4.right_connected
    grp = is_well_connected(build_diagram_monoid(Flavor.SYMMETRIC, 3))
    assert grp.is_group and grp.well_connected


def test_truncation(tl4):
    m, g = tl4
    t = truncate(m, g, 2, 4)
    assert t.size == 1 + 9 + 1       # k = 4, k = 2, zero
    assert t.check_associative() and t.check_identity()
    t2 = truncate(m, g, 0, 2)
    assert t2.size == 4 + 9 + 2      # unit adjoined
    assert t2.check_associative()
    with pytest.raises(EmptyWindow):
        truncate(m, g, 1, 1)


def test_from_table_and_json_round_trip():
    # two-element semilattice {1, 0}
    m = monoid_from_table([[0, 0], [0, 1]])
    assert m.identity == 1 and m.zero == 0
    g = green(m)
    assert len(g.j_classes) == 2
    tl = build_diagram_monoid(TL, 3)
    back = FiniteMonoid.from_json(tl.to_json())
    assert np.array_equal(back.table, tl.table) and back.identity == tl.identity


def test_gram_rank_permutation_invariance(tl4):
    m, g = tl4
    for j in range(len(g.j_classes)):
        assert dclass_rank_permutation_invariance(gram(m, g, j), trials=20)


def test_genus_sensitive_partition_parameters_warn():
    from diagmon.monoid import GenusSensitiveWarning
    a0zero = EvaluationMap.from_values(0, 1)
    with pytest.warns(GenusSensitiveWarning):
        m = build_diagram_monoid(Flavor.PLANAR_PARTITION, 2, a0zero)
    assert not m.check_associative()
    # constant parameters are fine
    assert build_diagram_monoid(Flavor.PARTITION, 2, EvaluationMap.zero()).check_associative()
    assert build_diagram_monoid(Flavor.MOTZKIN, 3, a0zero).check_associative()
