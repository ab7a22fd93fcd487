import numpy as np
import pytest

from diagmon.diagrams import Diagram, EvaluationMap, Flavor
from diagmon.monoid import build_diagram_monoid, green
from diagmon.twist import (CommutativeMonoid, EggGrid, HypothesisFailed, NotTight, Twisting, canonical_twisting,
                           dclass_equivalent, egg_grid,
                           is_tight, twisted_product, twisted_simple_dims, verify_green_product,
                           verify_idempotent_formula, verify_main_theorem, zero_twisted, idempotents)
from oracles import TL2_TWISTED_IDEMPOTENTS

TL = Flavor.TEMPERLEY_LIEB


def test_commutative_monoids():
    sat = CommutativeMonoid.saturating(3)
    assert sat.add[2, 2] == 3 and sat.times(1, 10) == 3
    assert sat.d_trivial
    cyc = CommutativeMonoid.cyclic(3)
    assert not cyc.d_trivial and cyc.idempotents() == {0}
    with pytest.raises(ValueError):
        CommutativeMonoid(np.array([[0, 1], [0, 1]]))


def test_canonical_twisting_is_cocycle():
    for flavor in (TL, Flavor.MOTZKIN, Flavor.PLANAR_PARTITION):
        t = canonical_twisting(flavor, 3)
        assert t.is_cocycle()


def test_tl_tight_everywhere():
    for n in range(1, 5):
        ok, witness = is_tight(canonical_twisting(TL, n))
        assert ok and witness is None


def test_loose_twisting_is_refused():
    t = canonical_twisting(Flavor.MOTZKIN, 2)
    ok, witness = is_tight(t)
    assert not ok and witness[0] in ("left", "right")
    tm = twisted_product(CommutativeMonoid.saturating(2), t, 1)
    with pytest.raises(NotTight):
        verify_green_product(tm)


def test_tl2_twisted_idempotents():
    t = canonical_twisting(TL, 2)
    assert t.base.labels[1] == Diagram.identity(2, TL)
    tm = twisted_product(CommutativeMonoid.saturating(2), t, 1)
    assert tm.size == 6 and tm.check_associative()
    got = {divmod(x, 2) for x in idempotents(tm)}
    assert got == TL2_TWISTED_IDEMPOTENTS
    assert verify_idempotent_formula(tm)["violations"] == []


@pytest.mark.parametrize("q", [0, 1, 2])
def test_tl3_theorems(q):
    tm = twisted_product(CommutativeMonoid.saturating(3), canonical_twisting(TL, 3), q)
    assert verify_green_product(tm)["violations"] == []
    assert verify_idempotent_formula(tm)["violations"] == []
    main = verify_main_theorem(tm)
    assert main["violations"] == [] and main["instances"]
    assert twisted_simple_dims(tm)["violations"] == []


def test_non_d_trivial_factor_is_rejected():
    tm = twisted_product(CommutativeMonoid.cyclic(2), canonical_twisting(TL, 2), 1)
    with pytest.raises(HypothesisFailed):
        verify_main_theorem(tm)


def test_zero_twist_matches_zero_monoid():
    t = canonical_twisting(TL, 4)
    z = zero_twisted(t)
    mz = build_diagram_monoid(TL, 4, EvaluationMap.zero())
    assert z.size == mz.size
    assert list(z.labels[:-1]) == list(mz.labels[:-1])
    assert np.array_equal(z.table, mz.table)
    assert len(green(z).j_classes) == len(green(mz).j_classes)


def test_rook_green_classes_factor():
    tm = twisted_product(CommutativeMonoid.saturating(2), canonical_twisting(Flavor.ROOK, 2), 1)
    assert verify_green_product(tm)["violations"] == []


def _direct_product_table(m, s):
    K, N = m.size, s.size
    return np.array([[m.add[j // N, k // N] * N + s.table[j % N, k % N] for k in range(K * N)]
                     for j in range(K * N)])


def test_neutral_q_and_zero_phi_are_direct_products():
    M = CommutativeMonoid.saturating(2)
    t = canonical_twisting(TL, 3)
    direct = _direct_product_table(M, t.base)
    assert np.array_equal(twisted_product(M, t, 0).table, direct)
    flat = Twisting(t.base, np.zeros_like(t.phi))
    assert np.array_equal(twisted_product(M, flat, 1).table, direct)
    tm = twisted_product(M, t, 0)
    want = {(i, e) for i in M.idempotents() for e in idempotents(t.base)}
    assert {divmod(x, t.base.size) for x in idempotents(tm)} == want


def test_dclass_equivalent_examples():
    m1 = build_diagram_monoid(TL, 4)
    m0 = build_diagram_monoid(TL, 4, EvaluationMap.zero())
    g1, g0 = green(m1), green(m0)
    j1 = next(j for j, c in enumerate(g1.j_classes) if m1.strands(c[0]) == 0)
    j0 = next(j for j, c in enumerate(g0.j_classes) if c[0] != m0.zero and m0.strands(c[0]) == 0)
    e1, e0 = egg_grid(m1, g1, j1), egg_grid(m0, g0, j0)
    assert dclass_equivalent(e1, e1)
    assert not dclass_equivalent(e1, e0)
    swapped = EggGrid(tuple(reversed(e1.marks)), e1.h_size)
    assert dclass_equivalent(e1, swapped)
