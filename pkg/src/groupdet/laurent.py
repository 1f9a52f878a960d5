"""Exact arithmetic in Z[x]/(x^n - 1).

Coefficients are plain Python ints, indexed by exponent mod n.  These
polynomials carry the f/g data of the dihedral, dicyclic and product-group
measures, and all witness templates are written in terms of them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatch


@dataclass(frozen=True)
class LaurentPoly:
    """A polynomial in Z[x]/(x^n - 1), stored as n dense coefficients."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ModulusMismatch(f"modulus must be positive, got {self.n}")
        if len(self.coeffs) != self.n:
            raise ModulusMismatch(
                f"need {self.n} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, int]) -> LaurentPoly:
        """Build from an {exponent: coefficient} mapping, exponents mod n."""
        c = [0] * n
        for e, a in terms.items():
            c[e % n] += a
        return cls(n, tuple(c))

    @classmethod
    def constant(cls, n: int, a: int) -> LaurentPoly:
        return cls(n, (a,) + (0,) * (n - 1))

    @classmethod
    def monomial(cls, n: int, e: int, a: int = 1) -> LaurentPoly:
        return cls.from_terms(n, {e: a})

    @classmethod
    def all_ones(cls, n: int) -> LaurentPoly:
        """(x^n - 1)/(x - 1) = 1 + x + ... + x^(n-1)."""
        return cls(n, (1,) * n)

    def _check(self, other: LaurentPoly) -> None:
        if self.n != other.n:
            raise ModulusMismatch(f"moduli differ: {self.n} vs {other.n}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        return LaurentPoly(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        return LaurentPoly(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.n, tuple(a * other for a in self.coeffs))
        self._check(other)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return LaurentPoly(n, tuple(out))

    __rmul__ = __mul__

    def conjugate(self) -> LaurentPoly:
        """Substitute x -> x^(-1) = x^(n-1)."""
        n = self.n
        return LaurentPoly(n, tuple(self.coeffs[(-i) % n] for i in range(n)))

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by x^e."""
        n = self.n
        return LaurentPoly(n, tuple(self.coeffs[(i - e) % n] for i in range(n)))

    def compose_power(self, k: int, m: int) -> LaurentPoly:
        """Substitute x -> x^k viewed in Z[x]/(x^m - 1)."""
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            out[(i * k) % m] += a
        return LaurentPoly(m, tuple(out))

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def eval_at_minus_one(self) -> int:
        return sum(a if i % 2 == 0 else -a for i, a in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)
