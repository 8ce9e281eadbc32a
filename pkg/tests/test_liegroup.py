"""The explicit embeddings, their differentials and the Cartan split."""

import random
from fractions import Fraction

import pytest

from sp4higgs.liegroup import (
    GOLDEN_E_MINUS_F, GOLDEN_E_PLUS_F, GOLDEN_H0, HT, HT_INV, SWAP,
    NotInAlgebra, SingularNormalization, cartan_split, gl1_torus,
    m_delta_element, m_delta_membership, m_field_matrix,
    normalizer_witness_check, phi, phi_star, rho1, rho13, rho13_star,
    rho_delta, rho_p, s_conjugate, sl2, in_sp4c,
)
from sp4higgs.matalg import (
    H_PERM, H_SYM3, H_SYM3_INV, I2, I4, J0, J12, J13,
    SqMatrix, is_symplectic, kron,
)
from sp4higgs.numfield import I_UNIT, ONE, ZERO, fe

E = SqMatrix([[0, 1], [0, 0]])
F = SqMatrix([[0, 0], [1, 0]])
H0 = SqMatrix([[1, 0], [0, -1]])


def rand_sl2(rng, bound=9):
    while True:
        a = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if a:
            break
    b = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    c = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return sl2(a, b, c, (1 + b * c) / a)


# -- rho1 ------------------------------------------------------------------


def test_rho1_identity():
    assert rho1(I2) == I4


def test_rho1_swap_is_the_permutation():
    w = rho1(SWAP)
    assert w == SqMatrix([[0, 0, 1, 0], [0, 0, 0, 1],
                          [1, 0, 0, 0], [0, 1, 0, 0]])
    assert w.det() == ONE


def test_rho1_diagonal():
    m = rho1(sl2(2, 0, 0, Fraction(1, 2)))
    assert m == SqMatrix.diag(8, 2, Fraction(1, 8), Fraction(1, 2))
    assert is_symplectic(m, J0)


def test_rho1_symplectic_for_j0():
    rng = random.Random(1)
    for _ in range(20):
        assert is_symplectic(rho1(rand_sl2(rng)), J0)


# -- rho13 -----------------------------------------------------------------


def test_rho13_identity():
    assert rho13(I2) == I4


def test_rho13_is_conjugate_of_rho1():
    rng = random.Random(2)
    for _ in range(20):
        a = rand_sl2(rng)
        assert rho13(a) == H_SYM3_INV * rho1(a) * H_SYM3


def test_rho13_symplectic_many_samples():
    rng = random.Random(3)
    for _ in range(50):
        assert is_symplectic(rho13(rand_sl2(rng)), J13)


def test_rho13_homomorphism():
    rng = random.Random(4)
    for _ in range(25):
        a, b = rand_sl2(rng), rand_sl2(rng)
        assert rho13(a * b) == rho13(a) * rho13(b)


def test_rho13_rotation_lands_in_compact_block_form():
    # image of a rotation has the [[A, B], [-B, A]] unitary block shape
    r = rho13(sl2(Fraction(3, 5), Fraction(-4, 5),
                  Fraction(4, 5), Fraction(3, 5)))
    a, b = r.block(0, 0), r.block(0, 1)
    assert r.block(1, 1) == a and r.block(1, 0) == -b
    assert a.T * a + b.T * b == I2
    assert a.T * b - b.T * a == SqMatrix.zeros(2)


# -- product and diagonal embeddings ---------------------------------------


def test_rho_p_identity_and_symplectic():
    assert rho_p(I2, I2) == I4
    rng = random.Random(5)
    for _ in range(20):
        a, b = rand_sl2(rng), rand_sl2(rng)
        assert is_symplectic(rho_p(a, b), J12)


def test_rho_delta_matches_perm_conjugation():
    rng = random.Random(6)
    for _ in range(20):
        a = rand_sl2(rng)
        assert rho_delta(a) == H_PERM * kron(I2, a) * H_PERM
        assert is_symplectic(rho_delta(a), J13)


# -- phi ---------------------------------------------------------------------


def test_phi_identity():
    assert phi(I2) == I4


def test_phi_rotation_is_diagonal():
    lam = fe(Fraction(3, 5)) + I_UNIT * Fraction(4, 5)
    got = phi(sl2(Fraction(3, 5), Fraction(-4, 5),
                  Fraction(4, 5), Fraction(3, 5)))
    assert got == SqMatrix.diag(lam ** 3, lam.inv(), lam ** -3, lam)


def test_phi_rational_torus():
    got = phi(gl1_torus(2))
    assert got == SqMatrix.diag(8, Fraction(1, 2), Fraction(1, 8), 2)


def test_phi_torus_exponents():
    rng = random.Random(7)
    for _ in range(10):
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        lf = fe(lam)
        assert phi(gl1_torus(lam)) == SqMatrix.diag(
            lf ** 3, lf ** -1, lf ** -3, lf)


def test_phi_homomorphism_and_torus_multiplicativity():
    assert gl1_torus(2).det() == ONE
    assert phi(gl1_torus(2) * gl1_torus(3)) == phi(gl1_torus(6))


def test_phi_is_symplectic():
    # the conjugating frames rescale J13, so the rescalings cancel and
    # the image stays exactly J13-symplectic
    rng = random.Random(17)
    for _ in range(15):
        assert is_symplectic(phi(rand_sl2(rng)), J13)


# -- differentials ------------------------------------------------------------


def test_golden_matrices_reproduced():
    assert phi_star(E - F) == GOLDEN_E_MINUS_F
    assert phi_star(E + F) == GOLDEN_E_PLUS_F
    assert phi_star(H0) == GOLDEN_H0


def test_phi_star_on_symmetric_traceless():
    rng = random.Random(8)
    for _ in range(10):
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        y = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        m = SqMatrix([[x, y], [y, -x]])
        beta = fe(x) + I_UNIT * y
        gamma = fe(x) - I_UNIT * y
        assert phi_star(m) == m_field_matrix(beta, gamma)


def test_rho13_star_linearity():
    rng = random.Random(9)
    for _ in range(10):
        x1 = SqMatrix([[1, rng.randint(-3, 3)], [rng.randint(-3, 3), -1]])
        x2 = SqMatrix([[0, rng.randint(-3, 3)], [rng.randint(-3, 3), 0]])
        assert rho13_star(x1 + x2) == rho13_star(x1) + rho13_star(x2)


def test_rho13_star_rejects_non_traceless():
    with pytest.raises(ValueError):
        rho13_star(I2)


def _rho13_raw(m):
    # evaluate the rho13 entry polynomials without the determinant check
    from sp4higgs.liegroup import _rho13_grid
    from sp4higgs.numfield import SQRT3
    (a, b), (c, d) = m.rows
    return SqMatrix(_rho13_grid(a, b, c, d, fe(2), fe(3), SQRT3))


def test_differential_matches_exact_finite_difference():
    # Every entry of rho13 is a cubic polynomial in the matrix
    # coordinates, so the cubic-exact stencil
    # (8(p(1) - p(-1)) - (p(2) - p(-2))) / 12 recovers the derivative at
    # 0 with no truncation error: an oracle independent of the
    # dual-number implementation.
    for x in (E, F, H0, E + F, E - F, SqMatrix([[2, 3], [5, -2]])):
        vals = {t: _rho13_raw(I2 + x.scale(t)) for t in (1, -1, 2, -2)}
        stencil = ((vals[1] - vals[-1]).scale(8)
                   - (vals[2] - vals[-2])).scale(Fraction(1, 12))
        assert rho13_star(x) == stencil


# -- S-conjugation -------------------------------------------------------------


def test_s_conjugate_beta_zero():
    got = s_conjugate(0, 1)
    assert got == SqMatrix([[0, 0, 0, 0], [0, 0, 0, 1],
                            [0, 1, 0, 0], [1, 0, 0, 0]])


def test_s_conjugate_unit_values():
    got = s_conjugate(1, 1)
    assert got == SqMatrix([[0, 0, 16, 5], [0, 0, 5, 1],
                            [0, 1, 0, 0], [1, 0, 0, 0]])


def test_s_conjugate_gamma_scaling():
    got = s_conjugate(1, 2)
    r = Fraction(1, 2)
    want = SqMatrix([[0, 0, 16 * r * r, 5 * r], [0, 0, 5 * r, 1],
                     [0, 1, 0, 0], [1, 0, 0, 0]]).scale(2)
    assert got == want
    assert got[0][2] == fe(8) and got[0][3] == fe(5)


def test_s_conjugate_gamma_zero_raises():
    with pytest.raises(SingularNormalization):
        s_conjugate(1, 0)


# -- Cartan split ---------------------------------------------------------------


def test_cartan_split_of_golden_h0():
    split = cartan_split(GOLDEN_H0)
    assert split.h_part == SqMatrix.zeros(4)
    assert split.m_part == GOLDEN_H0


def test_cartan_split_of_compact_element():
    z = SqMatrix([[1, 2], [3, 4]])
    x = SqMatrix([[1, 2, 0, 0], [3, 4, 0, 0],
                  [0, 0, -1, -3], [0, 0, -2, -4]])
    split = cartan_split(x)
    assert split.m_part == SqMatrix.zeros(4)
    assert split.z_block == z


def test_cartan_split_is_linear_and_orthogonal():
    x = GOLDEN_H0
    y = m_delta_element(1, 2)
    sx, sy, sxy = cartan_split(x), cartan_split(y), cartan_split(x + y)
    assert sxy.h_part == sx.h_part + sy.h_part
    assert sxy.m_part == sx.m_part + sy.m_part
    # trace-form orthogonality of the two parts
    assert (sx.h_part * sx.m_part).trace() == ZERO


def test_cartan_split_rejects_outside_algebra():
    # asymmetric upper-right block violates the algebra condition
    bad = SqMatrix([[0, 0, 1, 2], [0, 0, 0, 0],
                    [0, 0, 0, 0], [0, 0, 0, 0]])
    with pytest.raises(NotInAlgebra):
        cartan_split(bad)


def test_scalar_beta_block_is_in_delta_subspace():
    x = m_delta_element(1, 0)
    split = cartan_split(x)
    assert m_delta_membership(split.m_part) == (fe(2), fe(2))


# -- diagonal subalgebra ----------------------------------------------------------


def test_m_delta_frozen_convention():
    assert m_delta_membership(m_delta_element(1, 0)) == (fe(2), fe(2))
    bt, gt = m_delta_membership(m_delta_element(0, 1))
    assert bt == 2 * I_UNIT and gt == -2 * I_UNIT


def test_m_delta_zero_and_rejections():
    assert m_delta_membership(SqMatrix.zeros(4)) == (ZERO, ZERO)
    assert m_delta_membership(GOLDEN_H0) is None
    assert m_delta_membership(I4) is None


# -- normalizer --------------------------------------------------------------------


def test_normalizer_witness():
    rep = normalizer_witness_check()
    assert rep.det_ok and rep.det_value == ONE
    assert rep.normalizes_ok
    assert not rep.symplectic_for_j0
    assert rep.passed


# -- frame bookkeeping ---------------------------------------------------------------


def test_ht_inverse_is_exact():
    assert HT * HT_INV == I4


def test_conjugation_chain_stays_in_algebra():
    # phi_star outputs satisfy the frozen algebra condition
    assert in_sp4c(phi_star(H0))
    assert in_sp4c(phi_star(E + F))
    assert in_sp4c(rho13_star(E - F))
