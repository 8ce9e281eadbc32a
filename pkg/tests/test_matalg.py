"""Matrix algebra: kron, symplectic checks, fixed constants."""

import random
from fractions import Fraction

import pytest

from sp4higgs.matalg import (
    H_PERM, H_SYM3, H_SYM3_INV, HTILDE, I2, I4, J0, J12, J13, J2, T4,
    SingularMatrix, SqMatrix, conjugate, exp_nilpotent, is_symplectic,
    kron, kron_identities_check, preserves_symplectic_up_to_scalar,
)
from sp4higgs.numfield import I_UNIT, ONE, fe


def rand2(rng, bound=9):
    return SqMatrix([[Fraction(rng.randint(-bound, bound),
                               rng.randint(1, bound))
                      for _ in range(2)] for _ in range(2)])


def rand_sl2(rng, bound=9):
    while True:
        a = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if a:
            break
    b = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    c = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return SqMatrix([[a, b], [c, (1 + b * c) / a]])


def test_kron_gives_both_forms():
    assert kron(J2, I2) == J13
    assert kron(I2, J2) == J12
    assert kron(I2, I2) == I4


def test_is_symplectic_examples():
    assert is_symplectic(I4, J13)
    assert is_symplectic(SqMatrix.diag(2, 1, Fraction(1, 2), 1), J13)
    with pytest.raises(ValueError):
        is_symplectic(I4, I4)  # not antisymmetric


def test_symplectic_group_closure():
    rng = random.Random(3)
    for _ in range(20):
        a, b = rand_sl2(rng), rand_sl2(rng)
        g = kron(a, I2)       # symplectic for J13
        gp = kron(b, I2)
        assert is_symplectic(g, J13) and is_symplectic(gp, J13)
        assert is_symplectic(g * gp, J13)


def test_preserves_up_to_scalar():
    c = preserves_symplectic_up_to_scalar(T4, J13)
    assert c == -2 * I_UNIT
    c = preserves_symplectic_up_to_scalar(HTILDE, J13)
    assert c == -ONE
    rng = random.Random(4)
    generic = SqMatrix([[fe(rng.randint(1, 9)) for _ in range(4)]
                        for _ in range(4)])
    assert preserves_symplectic_up_to_scalar(generic, J13) is None


def test_conjugate_swaps_kron_factors():
    rng = random.Random(5)
    for _ in range(10):
        a, b = rand2(rng), rand2(rng)
        assert conjugate(kron(b, a), H_PERM) == kron(a, b)
    m = rand2(rng)
    assert conjugate(m, I2) == m


def test_h_perm_intertwines_the_forms():
    assert H_PERM * J12 == J13 * H_PERM
    assert H_PERM == H_PERM.T
    assert H_PERM * H_PERM == I4


def test_conjugate_by_singular_raises():
    with pytest.raises(SingularMatrix):
        conjugate(I4, SqMatrix.zeros(4))


def test_kron_identities():
    rng = random.Random(6)
    for _ in range(20):
        assert kron_identities_check(*(rand2(rng) for _ in range(4)))
    assert kron_identities_check(I2, rand2(rng), I2, rand2(rng))


def test_exp_nilpotent_two_term_series():
    up = SqMatrix([[0, 1], [0, 0]])
    low = SqMatrix([[0, 0], [1, 0]])
    lhs = exp_nilpotent(kron(up, I2) + kron(I2, low))
    assert lhs == kron(exp_nilpotent(up), exp_nilpotent(low))
    with pytest.raises(ValueError):
        exp_nilpotent(I2)


def test_det_of_kron():
    rng = random.Random(7)
    for _ in range(15):
        a, b = rand2(rng), rand2(rng)
        assert kron(a, b).det() == a.det() ** 2 * b.det() ** 2


def test_inverse_and_det():
    rng = random.Random(8)
    for _ in range(10):
        m = rand_sl2(rng)
        assert m * m.inv() == I2
        assert m.det() == ONE
    big = kron(rand_sl2(rng), rand_sl2(rng))
    assert big * big.inv() == I4


def test_h_sym3_relates_the_forms():
    assert H_SYM3.T * J0 * H_SYM3 == J13
    assert H_SYM3 * H_SYM3_INV == I4
    assert H_SYM3 == H_SYM3.T


def test_matrix_json_roundtrip():
    rng = random.Random(9)
    m = kron(rand2(rng), rand2(rng))
    assert SqMatrix.from_json(m.to_json()) == m


def test_block_access():
    m = kron(J2, I2)
    assert m.block(0, 1) == I2
    assert m.block(1, 0) == -I2
