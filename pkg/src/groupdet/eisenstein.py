"""Eisenstein integers a + b*w with w = e^(2*pi*i/3), and the composite
ring Z[w, i] used for the quartic norm N2.

The norm N1(a + b*w) = a^2 - a*b + b^2 is always nonnegative.  Elements of
Z[w, i] are stored as a pair (re, im) of Eisenstein integers standing for
re + i*im; then N2(z) = N1(re^2 + im^2), all computed in rational integers.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinInt:
    a: int
    b: int

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self) -> EisensteinInt:
        # w -> w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w   since w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def times_omega(self) -> EisensteinInt:
        # w * (a + bw) = -b + (a - b) w
        return EisensteinInt(-self.b, self.a - self.b)


OMEGA = EisensteinInt(0, 1)
ONE = EisensteinInt(1, 0)
ONE_MINUS_OMEGA = EisensteinInt(1, -1)


def e_norm(a: int, b: int) -> int:
    """N1(a + b*w) on raw components (hot-path helper)."""
    return a * a - a * b + b * b


def e_mul(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    return a * c - b * d, a * d + b * c - b * d


def gaussian_eisenstein_norm(re: EisensteinInt, im: EisensteinInt) -> int:
    """N2(re + i*im) for re, im in Z[w]: equals N1(re^2 + im^2)."""
    return (re * re + im * im).norm()
