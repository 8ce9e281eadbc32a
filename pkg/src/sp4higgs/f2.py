"""Vectors over F2 with the standard symplectic pairing.

A vector of length 2g is written ((a_1..a_g), (b_1..b_g)); the pairing
of (a, b) with (a', b') is sum(a_i b'_i + a'_i b_i) mod 2, i.e. the mod-2
intersection form of a closed orientable surface in standard coordinates.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Tuple

__all__ = ["F2Vector"]


class F2Vector:
    __slots__ = ("bits",)

    def __init__(self, bits):
        bits = tuple(int(b) & 1 for b in bits)
        if len(bits) % 2 != 0:
            raise ValueError("length must be even (2g coordinates)")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("F2Vector is immutable")

    @classmethod
    def zero(cls, two_g: int) -> "F2Vector":
        return cls((0,) * two_g)

    @classmethod
    def unit(cls, two_g: int, k: int) -> "F2Vector":
        bits = [0] * two_g
        bits[k] = 1
        return cls(bits)

    @classmethod
    def from_string(cls, s: str) -> "F2Vector":
        if not set(s) <= {"0", "1"}:
            raise ValueError("bitstring must contain only 0 and 1")
        return cls(int(ch) for ch in s)

    @classmethod
    def all_vectors(cls, two_g: int) -> Iterator["F2Vector"]:
        for bits in product((0, 1), repeat=two_g):
            yield cls(bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def genus(self) -> int:
        return len(self.bits) // 2

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if len(self.bits) != len(other.bits):
            raise ValueError("length mismatch")
        return F2Vector(a ^ b for a, b in zip(self.bits, other.bits))

    def halves(self) -> Tuple[tuple, tuple]:
        g = self.genus
        return self.bits[:g], self.bits[g:]

    def pairing(self, other: "F2Vector") -> int:
        """sum a_i b'_i + a'_i b_i over F2."""
        if len(self.bits) != len(other.bits):
            raise ValueError("length mismatch")
        a, b = self.halves()
        ap, bp = other.halves()
        total = sum(x * y for x, y in zip(a, bp)) + \
            sum(x * y for x, y in zip(ap, b))
        return total % 2

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Vector):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self) -> str:
        return "F2Vector(%s)" % self.to_string()
