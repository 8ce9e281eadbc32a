"""Explicit rank-2 symplectic embeddings and their Lie-algebra maps.

Implements the irreducible four-dimensional representation of the
2x2 special linear group in both the symmetric-power basis (``rho1``,
form ``J0``) and the ``J13`` basis (``rho13``), the product and diagonal
embeddings (``rho_p``, ``rho_delta``), the fully diagonalized embedding
``phi`` obtained by conjugating through ``HTILDE * T4``, and the exact
differential ``rho13_star`` / ``phi_star`` computed by symbolic
first-order (dual-number) evaluation -- no numerical limits anywhere.

Conventions are frozen once: the complexified symplectic algebra is
tested against the form ``J13`` in every frame along the conjugation
chain, which is legitimate because ``T4`` and ``HTILDE`` both preserve
``J13`` up to a nonzero scalar (-2i and -1 respectively; checked in the
test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .numfield import FieldElem, I_UNIT, ONE, SQRT3, ZERO, fe
from .matalg import (
    HTILDE, I2, J0, J13, T4, SqMatrix, is_symplectic, kron,
)

__all__ = [
    "NotInAlgebra",
    "SingularNormalization",
    "CartanSplit",
    "NormalizerReport",
    "sl2",
    "rho1",
    "rho13",
    "rho_p",
    "rho_delta",
    "phi",
    "gl1_torus",
    "rho13_star",
    "phi_star",
    "m_field_matrix",
    "s_matrix",
    "s_conjugate",
    "cartan_split",
    "m_delta_membership",
    "m_delta_element",
    "normalizer_witness_check",
    "HT", "HT_INV", "SWAP",
    "GOLDEN_E_MINUS_F", "GOLDEN_E_PLUS_F", "GOLDEN_H0",
]


class NotInAlgebra(ValueError):
    """Input matrix is not in the complexified symplectic algebra."""


class SingularNormalization(ValueError):
    """The normalizing conjugation needs a nonzero lower coefficient."""


HT = HTILDE * T4
HT_INV = HT.inv()

SWAP = SqMatrix([[0, 1], [1, 0]])  # determinant -1


def sl2(a, b, c, d) -> SqMatrix:
    """Build a 2x2 matrix and check determinant 1 exactly."""
    m = SqMatrix([[a, b], [c, d]])
    if m.det() != ONE:
        raise ValueError("determinant is %r, expected 1" % (m.det(),))
    return m


def _check_det(a: SqMatrix, allow_minus: bool):
    if a.dim != 2:
        raise ValueError("expected a 2x2 matrix")
    d = a.det()
    if d == ONE:
        return
    if allow_minus and d == -ONE:
        return
    raise ValueError("determinant is %r" % (d,))


def _rho1_grid(a, b, c, d, two, three):
    # Matrix of P(x, y) -> P(ax + cy, bx + dy) on cubics in the basis
    # {x^3, 3x^2y, y^3, 3xy^2}; entries are polynomials in a, b, c, d,
    # so the grid evaluates over any commutative ring element type.
    return (
        (a * a * a, three * a * a * b, b * b * b, three * a * b * b),
        (a * a * c, a * a * d + two * a * b * c, b * b * d, b * b * c + two * a * b * d),
        (c * c * c, three * c * c * d, d * d * d, three * c * d * d),
        (a * c * c, b * c * c + two * a * c * d, b * d * d, a * d * d + two * b * c * d),
    )


def _rho13_grid(a, b, c, d, two, three, s3):
    return (
        (a * a * a, s3 * a * b * b, b * b * b, s3 * a * a * b),
        (s3 * a * c * c, a * d * d + two * b * c * d, s3 * b * d * d, b * c * c + two * a * c * d),
        (c * c * c, s3 * c * d * d, d * d * d, s3 * c * c * d),
        (s3 * a * a * c, b * b * c + two * a * b * d, s3 * b * b * d, a * a * d + two * a * b * c),
    )


def rho1(a: SqMatrix) -> SqMatrix:
    """Irreducible embedding in the symmetric-power basis (form J0).

    Defined for determinant +-1; for determinant 1 the image satisfies
    g^t J0 g = J0.
    """
    _check_det(a, allow_minus=True)
    (p, q), (r, s) = a.rows
    return SqMatrix(_rho1_grid(p, q, r, s, fe(2), fe(3)))


def rho13(a: SqMatrix) -> SqMatrix:
    """Irreducible embedding in the J13 basis; equals the H_SYM3
    conjugate of rho1 and lands in the J13 symplectic group."""
    _check_det(a, allow_minus=False)
    (p, q), (r, s) = a.rows
    return SqMatrix(_rho13_grid(p, q, r, s, fe(2), fe(3), SQRT3))


def rho_p(a: SqMatrix, b: SqMatrix) -> SqMatrix:
    """Product embedding (A, B) -> blockdiag(A, B), symplectic for J12."""
    _check_det(a, allow_minus=False)
    _check_det(b, allow_minus=False)
    z = ZERO
    return SqMatrix([
        [a[0][0], a[0][1], z, z],
        [a[1][0], a[1][1], z, z],
        [z, z, b[0][0], b[0][1]],
        [z, z, b[1][0], b[1][1]]])


def rho_delta(a: SqMatrix) -> SqMatrix:
    """Diagonal embedding A -> A (x) I, symplectic for J13.

    Equals H_PERM * (I (x) A) * H_PERM, the J12-side diagonal picture.
    """
    _check_det(a, allow_minus=False)
    return kron(a, I2)


def phi(a: SqMatrix) -> SqMatrix:
    """The fully diagonalized irreducible embedding.

    phi(A) = (HTILDE T4) rho13(A) (HTILDE T4)^-1.  On the torus of
    gl1_torus elements it is exactly diag(l^3, l^-1, l^-3, l).
    """
    return HT * rho13(a) * HT_INV


def gl1_torus(lam) -> SqMatrix:
    """The rank-1 torus element with parameter ``lam`` inside SL2.

    This is the conjugate T2^-1 diag(lam, lam^-1) T2 of the diagonal
    torus by T2 = [[1, i], [1, -i]]: the "rotation form" matrix
    [[a, -c], [c, a]] with a + ic = lam.  phi maps it to the diagonal
    matrix with entries (lam^3, lam^-1, lam^-3, lam).
    """
    lam = fe(lam)
    if lam.is_zero:
        raise ValueError("torus parameter must be nonzero")
    lam_inv = lam.inv()
    half = Fraction(1, 2)
    a = (lam + lam_inv) * half
    c = -I_UNIT * (lam - lam_inv) * half
    return SqMatrix([[a, -c], [c, a]])


# -- exact differentials ------------------------------------------------------


class _Dual:
    """a + b*eps with eps^2 = 0; exact first-order arithmetic."""

    __slots__ = ("a", "b")

    def __init__(self, a: FieldElem, b: FieldElem):
        self.a = a
        self.b = b

    def __add__(self, other):
        return _Dual(self.a + other.a, self.b + other.b)

    def __mul__(self, other):
        if isinstance(other, _Dual):
            return _Dual(self.a * other.a, self.a * other.b + self.b * other.a)
        return _Dual(self.a * other, self.b * other)

    def __rmul__(self, other):
        return _Dual(fe(other) * self.a, fe(other) * self.b)


def rho13_star(x: SqMatrix) -> SqMatrix:
    """Exact differential of rho13 at the identity, on a traceless input.

    Computed symbolically: every entry of rho13 is a polynomial in the
    four matrix coordinates, so evaluating on dual numbers 1 + eps*x
    and reading off the eps coefficient is the exact derivative.
    """
    if x.dim != 2:
        raise ValueError("expected a 2x2 matrix")
    if not x.trace().is_zero:
        raise ValueError("input must be traceless")
    a = _Dual(ONE, x[0][0])
    b = _Dual(ZERO, x[0][1])
    c = _Dual(ZERO, x[1][0])
    d = _Dual(ONE, x[1][1])
    grid = _rho13_grid(a, b, c, d, _Dual(fe(2), ZERO), _Dual(fe(3), ZERO),
                       _Dual(SQRT3, ZERO))
    return SqMatrix(tuple(tuple(entry.b for entry in row) for row in grid))


def phi_star(x: SqMatrix) -> SqMatrix:
    """Differential of phi: the (HTILDE T4)-conjugate of rho13_star."""
    return HT * rho13_star(x) * HT_INV


# Frozen outputs of phi_star on the standard traceless generators
# e - f, e + f and h0; reproduced from scratch by the differential
# machinery in the verification suite.
GOLDEN_E_MINUS_F = SqMatrix.diag(-3 * I_UNIT, I_UNIT, 3 * I_UNIT, -I_UNIT)
GOLDEN_E_PLUS_F = SqMatrix([
    [ZERO, ZERO, ZERO, 3 * I_UNIT],
    [ZERO, ZERO, 3 * I_UNIT, -I_UNIT],
    [ZERO, -I_UNIT, ZERO, ZERO],
    [-I_UNIT, 4 * I_UNIT, ZERO, ZERO]])
GOLDEN_H0 = SqMatrix([
    [0, 0, 0, 3],
    [0, 0, 3, 1],
    [0, 1, 0, 0],
    [1, 4, 0, 0]])


def m_field_matrix(beta, gamma) -> SqMatrix:
    """The phi_star image of [[x, y], [y, -x]] written in terms of
    beta = x + iy and gamma = x - iy."""
    beta, gamma, z = fe(beta), fe(gamma), ZERO
    return SqMatrix([
        [z, z, z, 3 * beta],
        [z, z, 3 * beta, gamma],
        [z, gamma, z, z],
        [gamma, 4 * beta, z, z]])


def s_matrix(beta, gamma) -> SqMatrix:
    """Unipotent normalizer built from the ratio beta/gamma."""
    beta, gamma = fe(beta), fe(gamma)
    if gamma.is_zero:
        raise SingularNormalization("gamma must be nonzero")
    r = 2 * beta / gamma
    z, one = ZERO, ONE
    return SqMatrix([
        [one, r, z, z],
        [z, one, z, z],
        [z, z, one, z],
        [z, z, -r, one]])


def s_conjugate(beta, gamma) -> SqMatrix:
    """Conjugate the m-part matrix by S; the result is exactly

        gamma * [[0, 0, 16 (b/g)^2, 5 (b/g)],
                 [0, 0,  5 (b/g),   1      ],
                 [0, 1,  0,         0      ],
                 [1, 0,  0,         0      ]].
    """
    beta, gamma = fe(beta), fe(gamma)
    s = s_matrix(beta, gamma)
    return s * m_field_matrix(beta, gamma) * s.inv()


# -- Cartan decomposition in the post-T4 frame --------------------------------


@dataclass(frozen=True)
class CartanSplit:
    """Splitting X = h_part + m_part in the frame where the compact part
    is block-diagonal: h_part = blockdiag(Z, -Z^t) and m_part is
    block-off-diagonal with symmetric blocks."""

    h_part: SqMatrix
    m_part: SqMatrix

    @property
    def z_block(self) -> SqMatrix:
        return self.h_part.block(0, 0)

    @property
    def beta_block(self) -> SqMatrix:
        return self.m_part.block(0, 1)

    @property
    def gamma_block(self) -> SqMatrix:
        return self.m_part.block(1, 0)


def in_sp4c(x: SqMatrix) -> bool:
    """Membership in the complexified symplectic algebra, tested against
    the frozen form J13 (valid in every frame along the T4 / HTILDE
    conjugation chain, which rescale J13 by -2i and -1)."""
    return (x.T * J13 + J13 * x).is_zero


def cartan_split(x: SqMatrix) -> CartanSplit:
    """Unique split of an algebra element into compact and m parts.

    Membership forces the lower-right block to be minus the transpose of
    the upper-left one and the off-diagonal blocks to be symmetric, so
    the split is the block projection.
    """
    if x.dim != 4:
        raise ValueError("expected a 4x4 matrix")
    if not in_sp4c(x):
        raise NotInAlgebra("matrix fails X^t J + J X = 0 for the frozen form")
    z = x.block(0, 0)
    beta = x.block(0, 1)
    gamma = x.block(1, 0)
    zero2 = SqMatrix.zeros(2)
    h_part = _from_blocks(z, zero2, zero2, -z.T)
    m_part = _from_blocks(zero2, beta, gamma, zero2)
    return CartanSplit(h_part=h_part, m_part=m_part)


def _from_blocks(b00, b01, b10, b11) -> SqMatrix:
    rows = []
    for r in range(2):
        rows.append(tuple(b00[r]) + tuple(b01[r]))
    for r in range(2):
        rows.append(tuple(b10[r]) + tuple(b11[r]))
    return SqMatrix(tuple(rows))


def m_delta_membership(x: SqMatrix) -> Optional[Tuple[FieldElem, FieldElem]]:
    """(beta~, gamma~) if x = [[0, beta~ I], [gamma~ I, 0]], else None."""
    if x.dim != 4:
        raise ValueError("expected a 4x4 matrix")
    zero2 = SqMatrix.zeros(2)
    if x.block(0, 0) != zero2 or x.block(1, 1) != zero2:
        return None
    b, g = x.block(0, 1), x.block(1, 0)
    bt, gt = b[0][0], g[0][0]
    if b != SqMatrix.diag(bt, bt) or g != SqMatrix.diag(gt, gt):
        return None
    return (bt, gt)


def m_delta_element(a, b) -> SqMatrix:
    """Post-T4 form of the diagonal-subalgebra m-part with coordinates
    (a, b): off-diagonal scalar blocks beta~ = 2(a + ib) and
    gamma~ = 2(a - ib).  The factor 2 is part of the frozen convention
    relating the two coordinate systems."""
    a, b = fe(a), fe(b)
    bt = 2 * (a + I_UNIT * b)
    gt = 2 * (a - I_UNIT * b)
    zero2 = SqMatrix.zeros(2)
    return _from_blocks(zero2, SqMatrix.diag(bt, bt), SqMatrix.diag(gt, gt), zero2)


# -- normalizer facts ---------------------------------------------------------


@dataclass(frozen=True)
class NormalizerReport:
    det_value: FieldElem
    det_ok: bool
    normalizes_ok: bool
    symplectic_for_j0: bool
    passed: bool


def normalizer_witness_check() -> NormalizerReport:
    """Check the three facts about rho1 of the swap matrix: determinant 1,
    normalizing rho1 on sampled elements, and failure of the J0
    symplectic condition."""
    w = rho1(SWAP)
    det_value = w.det()
    det_ok = det_value == ONE

    samples = [
        sl2(1, 1, 0, 1),
        sl2(1, 0, 1, 1),
        sl2(2, 0, 0, Fraction(1, 2)),
        sl2(Fraction(3, 5), Fraction(-4, 5), Fraction(4, 5), Fraction(3, 5)),
        sl2(2, 3, 1, 2),
    ]
    w_inv = w.inv()
    normalizes_ok = all(
        w * rho1(a) * w_inv == rho1(SWAP * a * SWAP)
        for a in samples)

    symplectic_for_j0 = is_symplectic(w, J0)
    passed = det_ok and normalizes_ok and not symplectic_for_j0
    return NormalizerReport(
        det_value=det_value,
        det_ok=det_ok,
        normalizes_ok=normalizes_ok,
        symplectic_for_j0=symplectic_for_j0,
        passed=passed)
