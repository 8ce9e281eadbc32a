"""Component labels, verdicts, counting, fibers, the mod-2 scan."""

import random
from fractions import Fraction

import pytest

import sp4higgs as sh
from sp4higgs import (
    CurveCtx, F2Vector, Hitchin, OutOfClassifiedRange, SW, ScanBudgetExceeded,
    Stability, Subgroup, ZeroSW, classify, count_components,
    count_components_sp2n, f2_image_scan, f2_pairing, f2_sw_map,
    fiber_geometry, irr_embed, quotient_roundtrip, reduction_verdict,
    sp2n_reduction_witness, stability_sp4, sw_invariants, toledo,
)

from builders import cover_shape, diagonal_shape, max_sl2, torsion_split

CTX2 = CurveCtx(2)
CTX3 = CurveCtx(3)


def e(ctx, k):
    return F2Vector.unit(ctx.two_g, k)


# -- classification ------------------------------------------------------------


def test_classify_zero_sw():
    assert classify(CTX3, diagonal_shape(CTX3, 0, b1=0, b2=0)) == ZeroSW(0)
    assert classify(CTX3, diagonal_shape(CTX3, 1)) == ZeroSW(1)


def test_classify_hitchin():
    spin = e(CTX3, 2)
    label = classify(CTX3, diagonal_shape(CTX3, CTX3.deg_k, torsion=spin))
    assert label == Hitchin(spin)


def test_classify_sw():
    label = classify(CTX3, torsion_split(CTX3, e(CTX3, 0), e(CTX3, 1)))
    assert label == SW(e(CTX3, 0) + e(CTX3, 1), 0)
    label = classify(CTX3, cover_shape(CTX3, w1=e(CTX3, 1), w2=1))
    assert label == SW(e(CTX3, 1), 1)


def test_classify_irr_embed_is_hitchin():
    spin = e(CTX3, 3)
    img = irr_embed(CTX3, max_sl2(CTX3, spin))
    assert classify(CTX3, img) == Hitchin(spin)
    assert reduction_verdict(classify(CTX3, img)).admits == {Subgroup.G_I}


def test_classify_equal_torsion_split_is_c0():
    t = e(CTX3, 1)
    assert classify(CTX3, torsion_split(CTX3, t, t)) == ZeroSW(0)


# -- verdicts ---------------------------------------------------------------------


def test_reduction_verdicts():
    assert reduction_verdict(Hitchin(e(CTX3, 0))).admits == {Subgroup.G_I}
    both = {Subgroup.G_DELTA, Subgroup.G_P}
    assert reduction_verdict(ZeroSW(0)).admits == both
    assert reduction_verdict(SW(e(CTX3, 0), 1)).admits == both
    v = reduction_verdict(ZeroSW(1))
    assert v.admits == frozenset() and v.zariski_dense_component


def test_verdict_invariant():
    with pytest.raises(ValueError):
        sh.ReductionVerdict(frozenset(), False)


# -- counting ---------------------------------------------------------------------


def test_counts_g2():
    c = count_components(CTX2)
    assert c.total == 48
    assert c.rep_variety_total == 99
    assert (c.grouped_hitchin, c.grouped_gdelta_gp,
            c.grouped_zariski_dense) == (16, 31, 1)


def test_counts_g3():
    assert count_components(CTX3).total == 194


def test_count_breakdowns_agree_up_to_g10():
    for g in range(2, 11):
        c = count_components(CurveCtx(g))
        assert c.sw + c.zero_sw + c.hitchin == c.total
        assert (c.grouped_hitchin + c.grouped_gdelta_gp
                + c.grouped_zariski_dense) == c.total
        assert c.total == 3 * 2 ** (2 * g) + 2 * g - 4


def test_sp2n_counts():
    assert count_components_sp2n(CTX2, 3) == 48
    assert count_components_sp2n(CTX3, 5) == 192
    for g in range(2, 8):
        ctx = CurveCtx(g)
        assert (count_components_sp2n(ctx, 4)
                == count_components(ctx).total - (2 * g - 4))
    with pytest.raises(ValueError):
        count_components_sp2n(CTX2, 2)


# -- fiber geometry -----------------------------------------------------------------


def test_fiber_values():
    geom = fiber_geometry(CurveCtx(4), 1)
    assert (geom.r, geom.s, geom.total_dim) == (11, 6, 30)
    geom = fiber_geometry(CTX3, 1)
    assert (geom.r, geom.s, geom.total_dim) == (8, 3, 20)


def test_fiber_dimension_identity_up_to_g50():
    for g in range(3, 51):
        ctx = CurveCtx(g)
        for c in range(1, g - 1):
            assert fiber_geometry(ctx, c).total_dim == 10 * g - 10


def test_fiber_rejects_boundary():
    with pytest.raises(OutOfClassifiedRange):
        fiber_geometry(CTX3, CTX3.genus - 1)
    with pytest.raises(OutOfClassifiedRange):
        fiber_geometry(CTX3, 0)


# -- quotient roundtrip ---------------------------------------------------------------


def test_quotient_roundtrip_zero_section():
    assert quotient_roundtrip([0, 0, 0], [1, 2])


def test_quotient_roundtrip_scaled_orbit():
    rng = random.Random(21)
    for _ in range(10):
        z = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(4)]
        w = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(3)]
        if all(x == 0 for x in w):
            w[0] = Fraction(1)
        assert quotient_roundtrip(z, w)
        t2 = Fraction(4)
        assert quotient_roundtrip([t2 * x for x in z],
                                  [x / t2 for x in w])


def test_quotient_roundtrip_rejects_zero_line():
    with pytest.raises(ValueError):
        quotient_roundtrip([1], [0, 0])


# -- mod-2 arithmetic -----------------------------------------------------------------


def test_pairing_examples():
    assert f2_pairing((1,), (0,), (0,), (1,)) == 1
    assert f2_pairing((1,), (1,), (1,), (1,)) == 0


def test_sw_map_examples():
    g1 = F2Vector((1, 0))
    assert f2_sw_map(g1, g1) == (F2Vector((0, 0)), 0)
    x = F2Vector((1, 0, 1, 1))
    zero = F2Vector.zero(4)
    assert f2_sw_map(x, zero) == (x, 0)


def test_scan_g1():
    image = f2_image_scan(1)
    assert len(image) == 7
    assert (F2Vector.zero(2), 1) not in image
    assert (F2Vector.zero(2), 0) in image


def test_scan_g2_and_g3_miss_only_zero_one():
    for g in (2, 3):
        image = f2_image_scan(g)
        two_g = 2 * g
        universe = {(v, w) for v in F2Vector.all_vectors(two_g)
                    for w in (0, 1)}
        assert universe - image == {(F2Vector.zero(two_g), 1)}


def test_scan_nonzero_w1_with_unit_pairing_always_present():
    image = f2_image_scan(2)
    for v in F2Vector.all_vectors(4):
        if not v.is_zero:
            assert (v, 1) in image


def test_scan_threaded_matches_serial(monkeypatch):
    serial = f2_image_scan(2)
    monkeypatch.setenv("HIGGS_SP4_THREADS", "4")
    assert f2_image_scan(2) == serial


def test_scan_sampled_g4():
    image = f2_image_scan(4, samples=20000, seed=5)
    assert (F2Vector.zero(8), 1) not in image
    assert len(image) <= 2 ** 9 - 1


def test_scan_budget():
    with pytest.raises(ScanBudgetExceeded):
        f2_image_scan(5)


# -- higher-rank witnesses --------------------------------------------------------------


def test_witness_plain_invariants():
    w1 = e(CTX3, 1) + e(CTX3, 4)
    for w2 in (0, 1):
        datum = sp2n_reduction_witness(CTX3, 3, w1, w2)
        inv = sw_invariants(CTX3, datum)
        assert inv.w1 == w1 and inv.w2 == w2
        assert toledo(CTX3, datum) == 3 * (CTX3.genus - 1)
        assert stability_sp4(CTX3, datum) == Stability.STRICTLY_POLYSTABLE


def test_witness_zero_zero():
    datum = sp2n_reduction_witness(CTX3, 3, CTX3.zero_torsion(), 0)
    inv = sw_invariants(CTX3, datum)
    assert inv.w1.is_zero and inv.w2 == 0


def test_witness_zero_one_uses_rank2_piece():
    for ctx in (CTX2, CTX3):
        datum = sp2n_reduction_witness(ctx, 3, ctx.zero_torsion(), 1)
        inv = sw_invariants(ctx, datum)
        assert inv.w1.is_zero and inv.w2 == 1
        assert toledo(ctx, datum) == 3 * (ctx.genus - 1)
        assert stability_sp4(ctx, datum) == Stability.STRICTLY_POLYSTABLE


def test_witness_every_invariant_pair_reducible():
    # every rank-3 maximal class has a strictly polystable product witness
    for v in F2Vector.all_vectors(CTX2.two_g):
        for w2 in (0, 1):
            datum = sp2n_reduction_witness(CTX2, 3, v, w2)
            inv = sw_invariants(CTX2, datum)
            assert (inv.w1, inv.w2) == (v, w2)
            assert stability_sp4(CTX2, datum).is_polystable


def test_witness_needs_n_at_least_3():
    with pytest.raises(ValueError):
        sp2n_reduction_witness(CTX2, 2, CTX2.zero_torsion(), 0)
