"""Finite group tables with frozen element orderings.

Element orderings are part of the public contract: coefficient vectors are
indexed against them, so they must never change between versions.  Dicyclic
groups use the ordering 1, a, ..., a^(2n-1), b, ba, ..., ba^(2n-1); the
alternating group on four letters uses the fixed twelve-element listing
recorded in A4_ELEMENTS; cyclic groups and abelian products are ordered
lexicographically by exponent tuple; dihedral groups are ordered
1, x, ..., x^(n-1), y, yx, ..., yx^(n-1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import LengthMismatch, UnsupportedGroup

CYCLIC = "cyclic"
ABELIAN = "abelian"
DIHEDRAL = "dihedral"
DICYCLIC = "dicyclic"
ALT4 = "a4"


@dataclass(frozen=True)
class GroupSpec:
    """A supported group family plus its parameters.

    family/params pairs:
      cyclic   (n,)           Z_n
      abelian  (n1, ..., nr)  Z_n1 x ... x Z_nr
      dihedral (2n,)          D_2n of order 2n, n >= 2
      dicyclic (4n,)          Q_4n of order 4n, n >= 2
      a4       ()             the alternating group on 4 letters
    """

    family: str
    params: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        if self.family in (CYCLIC, DIHEDRAL, DICYCLIC):
            return self.params[0]
        if self.family == ABELIAN:
            n = 1
            for m in self.params:
                n *= m
            return n
        if self.family == ALT4:
            return 12
        raise UnsupportedGroup(self.family)


def cyclic(n: int) -> GroupSpec:
    if n < 1:
        raise UnsupportedGroup(f"cyclic group needs n >= 1, got {n}")
    return GroupSpec(CYCLIC, (n,))


def abelian_product(*ns: int) -> GroupSpec:
    if not ns or any(m < 2 for m in ns):
        raise UnsupportedGroup(f"bad abelian product parameters {ns}")
    return GroupSpec(ABELIAN, tuple(ns))


def dihedral(order: int) -> GroupSpec:
    if order < 4 or order % 2:
        raise UnsupportedGroup(f"dihedral group needs even order >= 4, got {order}")
    return GroupSpec(DIHEDRAL, (order,))


def dicyclic(order: int) -> GroupSpec:
    if order < 8 or order % 4:
        raise UnsupportedGroup(f"dicyclic group needs order 4n >= 8, got {order}")
    return GroupSpec(DICYCLIC, (order,))


def alternating4() -> GroupSpec:
    return GroupSpec(ALT4, ())


# The twelve elements of A4 in the frozen order, as permutations of
# {0,1,2,3} (p[i] is the image of i; products compose right-to-left,
# so (u*v)(i) = u(v(i))).  In cycle notation on {1,2,3,4}:
# 1, (12)(34), (13)(24), (14)(23), (123), (243), (142), (134),
# (132), (143), (234), (124).
A4_ELEMENTS: tuple[tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
    (1, 2, 0, 3),
    (0, 3, 1, 2),
    (3, 0, 2, 1),
    (2, 1, 3, 0),
    (2, 0, 1, 3),
    (3, 1, 0, 2),
    (0, 2, 3, 1),
    (1, 3, 2, 0),
)


@dataclass(frozen=True)
class GroupTable:
    """A finite group as index tables over a frozen element ordering."""

    spec: GroupSpec
    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    ordering_label: str

    def validate(self) -> None:
        """Check the group axioms exhaustively (meant for order <= 16)."""
        n = self.order
        mul = self.mul
        for i in range(n):
            if mul[0][i] != i or mul[i][0] != i:
                raise AssertionError("index 0 is not a two-sided identity")
        for i in range(n):
            j = self.inv[i]
            if mul[i][j] != 0 or mul[j][i] != 0:
                raise AssertionError(f"inv[{i}] is not a two-sided inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if mul[mul[i][j]][k] != mul[i][mul[j][k]]:
                        raise AssertionError("multiplication is not associative")


def _table_from_mul(spec: GroupSpec, mul: list[list[int]], label: str) -> GroupTable:
    n = len(mul)
    inv = [0] * n
    for i in range(n):
        for j in range(n):
            if mul[i][j] == 0:
                inv[i] = j
                break
        else:
            raise AssertionError(f"element {i} has no right inverse")
    table = GroupTable(spec, n, tuple(tuple(r) for r in mul), tuple(inv), label)
    if n <= 16:
        table.validate()
    return table


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec) -> GroupTable:
    """Build the validated multiplication/inverse tables for a spec."""
    fam = spec.family
    if fam == CYCLIC:
        (n,) = spec.params
        mul = [[(i + j) % n for j in range(n)] for i in range(n)]
        return _table_from_mul(spec, mul, f"0..{n - 1} under addition mod {n}")

    if fam == ABELIAN:
        ns = spec.params
        elems = list(itertools.product(*(range(m) for m in ns)))
        index = {e: i for i, e in enumerate(elems)}
        mul = [
            [index[tuple((a + b) % m for a, b, m in zip(e, f, ns))] for f in elems]
            for e in elems
        ]
        return _table_from_mul(spec, mul, f"exponent tuples of {ns} in lex order")

    if fam == DIHEDRAL:
        n = spec.params[0] // 2
        # indices 0..n-1 are x^i, n..2n-1 are y x^i; relations
        # x^n = 1, y^2 = 1, x y = y x^(-1)
        def dmul(i, j):
            s, a = divmod(i, n)
            t, b = divmod(j, n)
            if s == 0 and t == 0:
                return (a + b) % n
            if s == 0 and t == 1:
                return n + (b - a) % n
            if s == 1 and t == 0:
                return n + (a + b) % n
            return (b - a) % n

        mul = [[dmul(i, j) for j in range(2 * n)] for i in range(2 * n)]
        return _table_from_mul(spec, mul, f"1..x^{n - 1}, y..yx^{n - 1}")

    if fam == DICYCLIC:
        m = spec.params[0] // 2  # m = 2n, relations a^m = 1, b^2 = a^(m/2)
        half = m // 2

        def qmul(i, j):
            s, a = divmod(i, m)
            t, b = divmod(j, m)
            if s == 0 and t == 0:
                return (a + b) % m
            if s == 0 and t == 1:
                return m + (b - a) % m
            if s == 1 and t == 0:
                return m + (a + b) % m
            return (half + b - a) % m

        mul = [[qmul(i, j) for j in range(2 * m)] for i in range(2 * m)]
        return _table_from_mul(spec, mul, f"1..a^{m - 1}, b..ba^{m - 1}")

    if fam == ALT4:
        elems = A4_ELEMENTS
        index = {e: i for i, e in enumerate(elems)}
        mul = [
            [index[tuple(u[v[x]] for x in range(4))] for v in elems]
            for u in elems
        ]
        return _table_from_mul(spec, mul, "A4 twelve-element frozen listing")

    raise UnsupportedGroup(fam)


def convolve(table: GroupTable, u, v):
    """Group-algebra product: c_g = sum over g1*g2 = g of u_g1 * v_g2."""
    n = table.order
    if len(u) != n or len(v) != n:
        raise LengthMismatch(f"need two vectors of length {n}")
    out = [0] * n
    mul = table.mul
    for i, a in enumerate(u):
        if a:
            row = mul[i]
            for j, b in enumerate(v):
                if b:
                    out[row[j]] += a * b
    return tuple(out)


def identity_vector(n: int) -> tuple[int, ...]:
    return (1,) + (0,) * (n - 1)
