"""Exact Lind-Mahler measures and the per-family factored forms.

Every function returns plain Python ints.  The generic route is always the
Cayley-table determinant (exactdet.group_determinant); the functions here
are the family-specific factored evaluations, and the test suite pins the
two routes against each other on random data.

Coefficient layouts (fixed by the group element orderings):
  dihedral D_2n   coeffs = f-coeffs (n) then g-coeffs (n), F = f + y g
  dicyclic Q_4n   coeffs = f-coeffs (2n) then g-coeffs (2n)
  Z_n x Z_2       coeffs interleave: index(t1, t2) = 2 t1 + t2, f_j = c[2j]
  Z_2^3           index(i, j, k) = 4i + 2j + k
  Z_3 x Z_3       index(t1, t2) = 3 t1 + t2
  Z_12 split      F(x) = f(x^2) + x g(x^2): f_j = c[2j], g_j = c[2j+1]
"""
from __future__ import annotations

from dataclasses import dataclass

from .eisenstein import EisensteinInt
from .errors import LengthMismatch, ModulusMismatch, UnsupportedGroup
from .exactdet import group_determinant, resultant_with_xn_minus_1
from .groups import (
    ABELIAN,
    ALT4,
    CYCLIC,
    DICYCLIC,
    DIHEDRAL,
    GroupSpec,
    build_group,
)
from .laurent import LaurentPoly


@dataclass(frozen=True)
class MeasureFactorization:
    """The integer factors named in a family's proof, with multiplicities.

    product of value**multiplicity over factors reconstitutes the group
    determinant of the same coefficient vector.
    """

    family: str
    factors: tuple[tuple[str, int, int], ...]  # (name, value, multiplicity)

    def value(self) -> int:
        out = 1
        for _, v, m in self.factors:
            out *= v**m
        return out

    def named(self) -> dict[str, int]:
        return {name: v for name, v, _ in self.factors}


# ---------------------------------------------------------------------------
# point evaluations used by the factored forms


def eval_at_omega(coeffs) -> EisensteinInt:
    """f(w) for any coefficient list, reduced into a + b*w."""
    r = [0, 0, 0]
    for j, c in enumerate(coeffs):
        r[j % 3] += c
    return EisensteinInt(r[0] - r[2], r[1] - r[2])


def eval_at_minus_omega(coeffs) -> EisensteinInt:
    r = [0, 0, 0]
    for j, c in enumerate(coeffs):
        r[j % 3] += -c if j % 2 else c
    return EisensteinInt(r[0] - r[2], r[1] - r[2])


def eval_at_i(coeffs) -> tuple[int, int]:
    """f(i) as a Gaussian pair (re, im)."""
    r = [0, 0, 0, 0]
    for j, c in enumerate(coeffs):
        r[j % 4] += c
    return r[0] - r[2], r[1] - r[3]


def _eval_pm_one(coeffs) -> tuple[int, int]:
    plus = sum(coeffs)
    minus = sum(c if j % 2 == 0 else -c for j, c in enumerate(coeffs))
    return plus, minus


# ---------------------------------------------------------------------------
# measures


def cyclic_measure(n: int, f: LaurentPoly) -> int:
    """M_{Z_n}(f): the n x n circulant determinant, exactly."""
    if f.n != n:
        raise ModulusMismatch(f"polynomial modulus {f.n}, group wants {n}")
    table = build_group(GroupSpec(CYCLIC, (n,)))
    return group_determinant(table, f.coeffs)


def cyclic_measure_resultant(n: int, f: LaurentPoly) -> int:
    """Same value as cyclic_measure via Res(x^n - 1, f); internal oracle."""
    if f.n != n:
        raise ModulusMismatch(f"polynomial modulus {f.n}, group wants {n}")
    return resultant_with_xn_minus_1(n, f.coeffs)


def dihedral_measure(n: int, f: LaurentPoly, g: LaurentPoly) -> int:
    """M_{D_2n}(f + y g) = M_{Z_n}(f f* - g g*)."""
    if f.n != n or g.n != n:
        raise ModulusMismatch(f"need two modulus-{n} polynomials")
    phi = f * f.conjugate() - g * g.conjugate()
    return cyclic_measure(n, phi)


def dicyclic_measure(n: int, f: LaurentPoly, g: LaurentPoly) -> int:
    """M_{Q_4n}(f + y g) = M_{Z_2n}(f f* - x^n g g*), moduli 2n."""
    m = 2 * n
    if f.n != m or g.n != m:
        raise ModulusMismatch(f"need two modulus-{m} polynomials")
    phi = f * f.conjugate() - LaurentPoly.monomial(m, n) * g * g.conjugate()
    return cyclic_measure(m, phi)


def zn_z2_measure(n: int, f: LaurentPoly, g: LaurentPoly) -> int:
    """M_{Z_n x Z_2}(f + y g) = M_{Z_n}(f + g) * M_{Z_n}(f - g)."""
    if f.n != n or g.n != n:
        raise ModulusMismatch(f"need two modulus-{n} polynomials")
    return cyclic_measure(n, f + g) * cyclic_measure(n, f - g)


def z2_cubed_measure(coeffs) -> int:
    """Product of the eight evaluations F(x,y,z), x,y,z = +-1."""
    if len(coeffs) != 8:
        raise LengthMismatch("Z_2^3 takes eight coefficients")
    out = 1
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                v = 0
                for idx in range(8):
                    i, j, k = idx >> 2 & 1, idx >> 1 & 1, idx & 1
                    v += coeffs[idx] * (sx**i) * (sy**j) * (sz**k)
                out *= v
    return out


def z3_z3_measure(coeffs) -> int:
    """M_{Z_3 x Z_3}: one rational point and four conjugate Eisenstein pairs."""
    if len(coeffs) != 9:
        raise LengthMismatch("Z_3 x Z_3 takes nine coefficients")

    def point(p: int, q: int) -> EisensteinInt:
        # F(w^p, w^q) collected into a + b*w
        r = [0, 0, 0]
        for idx, c in enumerate(coeffs):
            t1, t2 = divmod(idx, 3)
            r[(p * t1 + q * t2) % 3] += c
        return EisensteinInt(r[0] - r[2], r[1] - r[2])

    total = sum(coeffs)
    out = total
    for p, q in ((0, 1), (1, 0), (1, 1), (1, 2)):
        out *= point(p, q).norm()
    return out


def _a4_parts(coeffs):
    if len(coeffs) != 12:
        raise LengthMismatch("A4 takes twelve coefficients")
    a = sum(coeffs[0:4])
    b = sum(coeffs[4:8])
    c = sum(coeffs[8:12])
    l0 = a + b + c
    l1l2 = a * a + b * b + c * c - a * b - b * c - c * a
    c1, c2, c3, c4 = coeffs[0:4]
    c5, c6, c7, c8 = coeffs[4:8]
    c9, c10, c11, c12 = coeffs[8:12]
    m = (
        (c1 + c2 - c3 - c4, c9 + c10 - c11 - c12, c5 + c6 - c7 - c8),
        (c5 - c6 - c7 + c8, c1 - c2 - c3 + c4, c9 - c10 - c11 + c12),
        (c9 - c10 + c11 - c12, c5 - c6 + c7 - c8, c1 - c2 + c3 - c4),
    )
    d = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return l0, l1l2, d


def a4_determinant(coeffs) -> tuple[int, MeasureFactorization]:
    """l0 * (l1 l2) * D^3 plus the parts; equals the Cayley determinant."""
    l0, l1l2, d = _a4_parts(coeffs)
    parts = MeasureFactorization(
        "a4", (("l0", l0, 1), ("l1l2", l1l2, 1), ("D", d, 3))
    )
    return l0 * l1l2 * d**3, parts


def a4_measure(coeffs) -> int:
    l0, l1l2, d = _a4_parts(coeffs)
    return l0 * l1l2 * d**3


# ---------------------------------------------------------------------------
# factored profiles


def split_interleaved(coeffs):
    return tuple(coeffs[0::2]), tuple(coeffs[1::2])


def split_halves(coeffs):
    h = len(coeffs) // 2
    return tuple(coeffs[:h]), tuple(coeffs[h:])


def _order8_linears(f, g):
    f1, fm = _eval_pm_one(f)
    g1, gm = _eval_pm_one(g)
    return f1 + g1, f1 - g1, fm + gm, fm - gm


def _order8_profile(kind: str, f, g) -> MeasureFactorization:
    l1, l2, l3, l4 = _order8_linears(f, g)
    fa, fb = eval_at_i(f)
    ga, gb = eval_at_i(g)
    nf = fa * fa + fb * fb
    ng = ga * ga + gb * gb
    linears = (("l1", l1, 1), ("l2", l2, 1), ("l3", l3, 1), ("l4", l4, 1))
    if kind == "q8":
        return MeasureFactorization(kind, linears + (("q1", nf + ng, 2),))
    if kind == "d8":
        return MeasureFactorization(kind, linears + (("q2", nf - ng, 2),))
    q3 = (fa + ga) ** 2 + (fb + gb) ** 2
    q4 = (fa - ga) ** 2 + (fb - gb) ** 2
    return MeasureFactorization(kind, linears + (("q3", q3, 1), ("q4", q4, 1)))


def z8_profile(coeffs) -> MeasureFactorization:
    if len(coeffs) != 8:
        raise LengthMismatch("Z_8 takes eight coefficients")
    c = coeffs
    l1 = sum(c)
    l2 = sum(v if j % 2 == 0 else -v for j, v in enumerate(c))
    h = ((c[0] + c[4]) - (c[2] + c[6])) ** 2 + ((c[1] + c[5]) - (c[3] + c[7])) ** 2
    A, B, C, D = c[0] - c[4], c[1] - c[5], c[2] - c[6], c[3] - c[7]
    k = (A * A - C * C + 2 * B * D) ** 2 + (D * D - B * B + 2 * A * C) ** 2
    return MeasureFactorization(
        "z8", (("L1", l1, 1), ("L2", l2, 1), ("H", h, 1), ("K", k, 1))
    )


def _order12_fg_profile(kind: str, f, g) -> MeasureFactorization:
    f1, fm = _eval_pm_one(f)
    g1, gm = _eval_pm_one(g)
    a = f1 * f1 - g1 * g1
    fw, gw = eval_at_omega(f), eval_at_omega(g)
    fmw, gmw = eval_at_minus_omega(f), eval_at_minus_omega(g)
    if kind == "q12":
        b = fm * fm + gm * gm
        c = fw.norm() - gw.norm()
        d = fmw.norm() + gmw.norm()
        return MeasureFactorization(
            kind, (("a", a, 1), ("b", b, 1), ("c", c, 2), ("d", d, 2))
        )
    if kind == "d12":
        b1 = fm * fm - gm * gm
        c = fw.norm() - gw.norm()
        d1 = fmw.norm() - gmw.norm()
        return MeasureFactorization(
            kind, (("a", a, 1), ("b1", b1, 1), ("c", c, 2), ("d1", d1, 2))
        )
    b1 = fm * fm - gm * gm
    e1 = (fw + gw).norm()
    e2 = (fw - gw).norm()
    e3 = (fmw + gmw).norm()
    e4 = (fmw - gmw).norm()
    return MeasureFactorization(
        kind,
        (
            ("a", a, 1),
            ("b1", b1, 1),
            ("e1", e1, 1),
            ("e2", e2, 1),
            ("e3", e3, 1),
            ("e4", e4, 1),
        ),
    )


def z12_profile(coeffs) -> MeasureFactorization:
    if len(coeffs) != 12:
        raise LengthMismatch("Z_12 takes twelve coefficients")
    f, g = split_interleaved(coeffs)
    f1, fm = _eval_pm_one(f)
    g1, gm = _eval_pm_one(g)
    a = f1 * f1 - g1 * g1
    b = fm * fm + gm * gm
    fw, gw = eval_at_omega(f), eval_at_omega(g)
    fmw, gmw = eval_at_minus_omega(f), eval_at_minus_omega(g)
    s1 = (fw * fw - (gw * gw).times_omega()).norm()
    s2 = (fmw * fmw + (gmw * gmw).times_omega()).norm()
    return MeasureFactorization(
        "z12", (("a", a, 1), ("b", b, 1), ("s1", s1, 1), ("s2", s2, 1))
    )


def z2_cubed_profile(coeffs) -> MeasureFactorization:
    if len(coeffs) != 8:
        raise LengthMismatch("Z_2^3 takes eight coefficients")
    factors = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                v = 0
                for idx in range(8):
                    i, j, k = idx >> 2 & 1, idx >> 1 & 1, idx & 1
                    v += coeffs[idx] * (sx**i) * (sy**j) * (sz**k)
                factors.append((f"F({sx},{sy},{sz})", v, 1))
    return MeasureFactorization("z2^3", tuple(factors))


_PROFILE_KEYS = {
    (DICYCLIC, (8,)): "q8",
    (DIHEDRAL, (8,)): "d8",
    (ABELIAN, (4, 2)): "z4z2",
    (CYCLIC, (8,)): "z8",
    (ABELIAN, (2, 2, 2)): "z2^3",
    (DIHEDRAL, (12,)): "d12",
    (DICYCLIC, (12,)): "q12",
    (ABELIAN, (6, 2)): "z6z2",
    (CYCLIC, (12,)): "z12",
    (ALT4, ()): "a4",
}


def factored_profile(spec: GroupSpec, coeffs) -> MeasureFactorization:
    """The proof's named integer factors for one of the ten factored families."""
    kind = _PROFILE_KEYS.get((spec.family, spec.params))
    if kind is None:
        raise UnsupportedGroup(f"no factored profile for {spec}")
    if len(coeffs) != spec.order:
        raise LengthMismatch(f"need {spec.order} coefficients")
    if kind in ("q8", "d8"):
        f, g = split_halves(coeffs)
        return _order8_profile(kind, f, g)
    if kind == "z4z2":
        f, g = split_interleaved(coeffs)
        return _order8_profile(kind, f, g)
    if kind == "z8":
        return z8_profile(coeffs)
    if kind == "z2^3":
        return z2_cubed_profile(coeffs)
    if kind in ("q12", "d12"):
        f, g = split_halves(coeffs)
        return _order12_fg_profile(kind, f, g)
    if kind == "z6z2":
        f, g = split_interleaved(coeffs)
        return _order12_fg_profile("z6z2", f, g)
    if kind == "z12":
        return z12_profile(coeffs)
    _, parts = a4_determinant(coeffs)
    return parts


def measure_for_spec(spec: GroupSpec, coeffs) -> int:
    """Family-specific measure of a coefficient vector in group layout.

    Falls back to the Cayley determinant for families without a cheaper
    factored form (it is the definition either way).
    """
    fam, params = spec.family, spec.params
    if fam == CYCLIC:
        return cyclic_measure(params[0], LaurentPoly(params[0], tuple(coeffs)))
    if fam == DIHEDRAL:
        n = params[0] // 2
        f, g = split_halves(coeffs)
        return dihedral_measure(n, LaurentPoly(n, f), LaurentPoly(n, g))
    if fam == DICYCLIC:
        m = params[0] // 2
        f, g = split_halves(coeffs)
        return dicyclic_measure(params[0] // 4, LaurentPoly(m, f), LaurentPoly(m, g))
    if fam == ABELIAN:
        if params == (2, 2, 2):
            return z2_cubed_measure(coeffs)
        if params == (3, 3):
            return z3_z3_measure(coeffs)
        if len(params) == 2 and params[1] == 2:
            n = params[0]
            f, g = split_interleaved(coeffs)
            return zn_z2_measure(n, LaurentPoly(n, f), LaurentPoly(n, g))
        return group_determinant(build_group(spec), coeffs)
    if fam == ALT4:
        return a4_measure(coeffs)
    raise UnsupportedGroup(fam)
