"""Dense 2x2 / 4x4 matrix algebra over Q(i, sqrt2, sqrt3).

Everything is exact: determinants by cofactor expansion, inverses by
adjugate (dimensions are fixed and tiny, so no pivoting is needed), and
matrix exponentials only for nilpotent arguments, via the finite series.

Also defines the fixed symplectic forms and change-of-basis matrices
used throughout the symplectic rank-2 analysis:

* ``J13`` = J (x) I and ``J12`` = I (x) J, the two block conventions;
* ``J0``, the form induced on the third symmetric power basis;
* ``H_PERM``, the self-inverse permutation with A (x) B = h (B (x) A) h;
* ``H_SYM3``, the symmetrizer with 1/sqrt3 entries relating J0 to J13
  (a different matrix from H_PERM, despite both being called "h" in
  informal usage -- they are kept under distinct names on purpose);
* ``T4``, the complex change of frame to coordinates where the maximal
  compact acts block-diagonally;
* ``HTILDE``, the radical-entry matrix that diagonalizes the compact
  torus of the irreducible embedding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .numfield import FieldElem, I_UNIT, ONE, SQRT3, ZERO, fe, embed_u_v

__all__ = [
    "SingularMatrix",
    "SqMatrix",
    "kron",
    "conjugate",
    "is_symplectic",
    "preserves_symplectic_up_to_scalar",
    "exp_nilpotent",
    "kron_identities_check",
    "J2", "I2", "I4", "J13", "J12", "J0",
    "H_PERM", "H_SYM3", "H_SYM3_INV", "T4", "HTILDE",
]


class SingularMatrix(ValueError):
    """Raised when inverting a matrix with determinant zero."""


class SqMatrix:
    """Immutable square matrix (dimension 2 or 4) over FieldElem."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(fe(x) for x in row) for row in rows)
        n = len(rows)
        if n not in (2, 4) or any(len(row) != n for row in rows):
            raise ValueError("SqMatrix must be square of dimension 2 or 4")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SqMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "SqMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                         for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "SqMatrix":
        return cls(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    @classmethod
    def diag(cls, *entries) -> "SqMatrix":
        n = len(entries)
        return cls(tuple(tuple(fe(entries[i]) if i == j else ZERO
                               for j in range(n)) for i in range(n)))

    # -- accessors ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def block(self, i: int, j: int) -> "SqMatrix":
        """2x2 block (i, j) of a 4x4 matrix, blocks indexed 0/1."""
        if self.dim != 4:
            raise ValueError("block extraction needs a 4x4 matrix")
        return SqMatrix(tuple(self.rows[2 * i + r][2 * j:2 * j + 2]
                              for r in range(2)))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "SqMatrix") -> "SqMatrix":
        self._samedim(other)
        return SqMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                              for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "SqMatrix") -> "SqMatrix":
        self._samedim(other)
        return SqMatrix(tuple(tuple(a - b for a, b in zip(r1, r2))
                              for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self) -> "SqMatrix":
        return SqMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, SqMatrix):
            self._samedim(other)
            n = self.dim
            cols = tuple(zip(*other.rows))
            return SqMatrix(tuple(
                tuple(_dot(self.rows[i], cols[j]) for j in range(n))
                for i in range(n)))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SqMatrix":
        c = fe(c)
        return SqMatrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def transpose(self) -> "SqMatrix":
        return SqMatrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> "SqMatrix":
        return self.transpose()

    def trace(self) -> FieldElem:
        t = ZERO
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def det(self) -> FieldElem:
        return _det(self.rows)

    def inv(self) -> "SqMatrix":
        d = self.det()
        if d.is_zero:
            raise SingularMatrix("matrix is singular")
        dinv = d.inv()
        n = self.dim
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = tuple(tuple(self.rows[r][c] for c in range(n) if c != j)
                              for r in range(n) if r != i)
                sign = 1 if (i + j) % 2 == 0 else -1
                cof[i][j] = sign * _det(minor) * dinv
        return SqMatrix(tuple(zip(*cof)))  # adjugate is the cofactor transpose

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.rows for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SqMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ",\n  ".join("[%s]" % ", ".join(repr(a) for a in row)
                            for row in self.rows)
        return "SqMatrix(\n  %s)" % body

    def _samedim(self, other: "SqMatrix"):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, other.dim))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "entries": [[a.to_json() for a in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data) -> "SqMatrix":
        m = cls(tuple(tuple(FieldElem.from_json(e) for e in row)
                      for row in data["entries"]))
        if m.dim != data["dim"]:
            raise ValueError("matrix dim field disagrees with entry grid")
        return m


def _dot(row, col) -> FieldElem:
    acc = ZERO
    for a, b in zip(row, col):
        if not (a.is_zero or b.is_zero):
            acc = acc + a * b
    return acc


def _det(rows) -> FieldElem:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    for j, a in enumerate(rows[0]):
        if a.is_zero:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = a * _det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def kron(a: SqMatrix, b: SqMatrix) -> SqMatrix:
    """Kronecker product of two 2x2 matrices: block entries a[i][j] * b."""
    if a.dim != 2 or b.dim != 2:
        raise ValueError("kron is defined here for 2x2 factors only")
    rows = []
    for i in range(2):
        for r in range(2):
            rows.append(tuple(a[i][j] * b[r][c]
                              for j in range(2) for c in range(2)))
    return SqMatrix(tuple(rows))


def conjugate(m: SqMatrix, p: SqMatrix) -> SqMatrix:
    """p * m * p^-1; raises SingularMatrix if p is not invertible."""
    return p * m * p.inv()


def is_symplectic(g: SqMatrix, j: SqMatrix) -> bool:
    """Exact test of g^t j g == j for an invertible antisymmetric form j."""
    if (j + j.T) != SqMatrix.zeros(j.dim):
        raise ValueError("form must be antisymmetric")
    return g.T * j * g == j


def preserves_symplectic_up_to_scalar(m: SqMatrix, j: SqMatrix) -> Optional[FieldElem]:
    """The scalar c with m^t j m = c*j, or None if no such scalar exists."""
    p = m.T * j * m
    c = None
    for i in range(j.dim):
        for k in range(j.dim):
            if not j[i][k].is_zero:
                c = p[i][k] / j[i][k]
                break
        if c is not None:
            break
    if c is None:
        raise ValueError("form is zero")
    return c if p == j.scale(c) else None


def exp_nilpotent(m: SqMatrix) -> SqMatrix:
    """exp of a nilpotent matrix via the terminating series."""
    acc = SqMatrix.identity(m.dim)
    term = SqMatrix.identity(m.dim)
    for k in range(1, m.dim + 1):
        term = term * m.scale(Fraction(1, k))
        if term.is_zero:
            return acc
        acc = acc + term
    raise ValueError("matrix is not nilpotent")


def kron_identities_check(a: SqMatrix, b: SqMatrix, c: SqMatrix, d: SqMatrix) -> bool:
    """Mixed-product, transpose and nilpotent-exp identities for kron.

    The mixed-product and transpose identities are checked on the four
    given 2x2 matrices; the exp identity exp(A (x) I + I (x) B) =
    exp(A) (x) exp(B) is checked on the canonical nilpotent pair, where
    the series terminates and stays exact.
    """
    if not (kron(a, b) * kron(c, d) == kron(a * c, b * d)):
        return False
    if not (kron(a, b).T == kron(a.T, b.T)):
        return False
    up = SqMatrix([[0, 1], [0, 0]])
    low = SqMatrix([[0, 0], [1, 0]])
    lhs = exp_nilpotent(kron(up, I2) + kron(I2, low))
    rhs = kron(exp_nilpotent(up), exp_nilpotent(low))
    return lhs == rhs


# -- fixed matrices ---------------------------------------------------------

J2 = SqMatrix([[0, 1], [-1, 0]])
I2 = SqMatrix.identity(2)
I4 = SqMatrix.identity(4)

J13 = kron(J2, I2)  # [[0, I], [-I, 0]]
J12 = kron(I2, J2)  # [[J, 0], [0, J]]

# Symplectic form on the third symmetric power in the basis
# {x^3, 3x^2y, y^3, 3xy^2}.
J0 = SqMatrix([
    [0, 0, 1, 0],
    [0, 0, 0, -3],
    [-1, 0, 0, 0],
    [0, 3, 0, 0]])

# Self-inverse permutation swapping the middle coordinates; realizes
# A (x) B = h (B (x) A) h and h J12 = J13 h.
H_PERM = SqMatrix([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1]])

_ONE_OVER_SQRT3 = SQRT3 * Fraction(1, 3)

# Symmetric matrix with h^t J0 h = J13; note h^2 = diag(1, 1/3, 1, 1/3).
H_SYM3 = SqMatrix([
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, ZERO, ZERO, _ONE_OVER_SQRT3],
    [ZERO, ZERO, ONE, ZERO],
    [ZERO, _ONE_OVER_SQRT3, ZERO, ZERO]])

H_SYM3_INV = SqMatrix([
    [ONE, ZERO, ZERO, ZERO],
    [ZERO, ZERO, ZERO, SQRT3],
    [ZERO, ZERO, ONE, ZERO],
    [ZERO, SQRT3, ZERO, ZERO]])

# Complex change of frame [[I, iI], [I, -iI]].
T4 = SqMatrix([
    [ONE, ZERO, I_UNIT, ZERO],
    [ZERO, ONE, ZERO, I_UNIT],
    [ONE, ZERO, -I_UNIT, ZERO],
    [ZERO, ONE, ZERO, -I_UNIT]])


def _build_htilde() -> SqMatrix:
    u, v = embed_u_v()
    s3 = SQRT3
    eighth = Fraction(1, 8)
    uinv, vinv = u.inv(), v.inv()
    return SqMatrix([
        [ZERO, ZERO, (s3 - ONE) * eighth * u, (s3 - 3) * eighth * u],
        [ZERO, ZERO, -(s3 + 3) * eighth * v, -(s3 + ONE) * eighth * v],
        [(s3 + ONE) * uinv, -(s3 + 3) * uinv, ZERO, ZERO],
        [(s3 - 3) * vinv, -(s3 - ONE) * vinv, ZERO, ZERO]])


# Exact radical-entry matrix built from the denested u and v; conjugation
# by it (after T4) diagonalizes the compact torus of the irreducible
# embedding.  Satisfies HTILDE^t J13 HTILDE = -J13.
HTILDE = _build_htilde()
