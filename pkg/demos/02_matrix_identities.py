"""Kronecker products and the fixed symplectic forms.

The two block conventions for the rank-2 symplectic form are J13 =
J (x) I and J12 = I (x) J; the self-inverse permutation H_PERM swaps the
middle coordinates and intertwines them.  All identities here hold
exactly, not approximately.
"""

import random
from fractions import Fraction

from sp4higgs import (
    H_PERM, HTILDE, I2, J12, J13, J2, SqMatrix, T4, conjugate,
    is_symplectic, kron, kron_identities_check,
    preserves_symplectic_up_to_scalar,
)

rng = random.Random(0)


def rand2():
    return SqMatrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                      for _ in range(2)] for _ in range(2)])


print("== the forms as Kronecker products ==")
print("J13 == J (x) I :", kron(J2, I2) == J13)
print("J12 == I (x) J :", kron(I2, J2) == J12)
print("H_PERM J12 == J13 H_PERM :", H_PERM * J12 == J13 * H_PERM)

print()
print("== mixed product, transpose, swap conjugation ==")
a, b, c, d = rand2(), rand2(), rand2(), rand2()
print("(A(x)B)(C(x)D) == AC (x) BD :",
      kron(a, b) * kron(c, d) == kron(a * c, b * d))
print("(A(x)B)^t == A^t (x) B^t    :", kron(a, b).T == kron(a.T, b.T))
print("A(x)B == h (B(x)A) h        :", conjugate(kron(b, a), H_PERM) == kron(a, b))
print("full identity bundle        :", kron_identities_check(a, b, c, d))

print()
print("== symplectic membership is an exact equation ==")
g = kron(SqMatrix([[2, 3], [1, 2]]), I2)   # determinant-1 factor
print("g symplectic for J13:", is_symplectic(g, J13))
print("diag(2, 1, 1/2, 1) symplectic for J13:",
      is_symplectic(SqMatrix.diag(2, 1, Fraction(1, 2), 1), J13))

print()
print("== conformal constants of the frame changes ==")
print("T4^t J13 T4 = c J13 with c =",
      preserves_symplectic_up_to_scalar(T4, J13))
print("HTILDE^t J13 HTILDE = c J13 with c =",
      preserves_symplectic_up_to_scalar(HTILDE, J13))
