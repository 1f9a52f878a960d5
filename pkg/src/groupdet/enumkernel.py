"""Enumeration kernels: evaluate family measures over boxes of vectors.

Two interchangeable implementations sit behind attained_block():

  * a compiled extension (groupdet._fastenum, Cython) for the hot loops,
  * the pure-Python evaluators in this module.

Both walk the same mixed-radix vector order (most-significant digit first,
digit d -> coefficient d - radius), so shard outputs are identical no
matter which kernel runs.  The compiled kernel works in int64 and is only
selected when a conservative magnitude bound clears 2^62; anything else
falls back to exact Python integers.
"""
from __future__ import annotations

from .groups import GroupSpec
from .measures import measure_for_spec

try:  # compiled kernel is optional
    from . import _fastenum  # type: ignore

    HAVE_FAST = True
except ImportError:  # pragma: no cover - depends on build environment
    _fastenum = None
    HAVE_FAST = False


# family codes shared with the compiled kernel
FAM_CYCLIC = 1
FAM_DIHEDRAL = 2
FAM_DICYCLIC = 3
FAM_AB_N2 = 4
FAM_Z2CUBE = 5
FAM_Z2Z2 = 6
FAM_Z3Z3 = 7
FAM_A4 = 8

_KERNEL_CYCLIC = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14}


def kernel_plan(spec: GroupSpec):
    """(fam_code, inner_n) when a closed-form kernel exists, else None."""
    fam, params = spec.family, spec.params
    if fam == "cyclic" and params[0] in _KERNEL_CYCLIC:
        return (FAM_CYCLIC, params[0])
    if fam == "dihedral" and params[0] // 2 in _KERNEL_CYCLIC:
        return (FAM_DIHEDRAL, params[0] // 2)
    if fam == "dicyclic" and params[0] // 2 in _KERNEL_CYCLIC:
        return (FAM_DICYCLIC, params[0] // 2)
    if fam == "abelian":
        if params == (2, 2):
            return (FAM_Z2Z2, 2)
        if params == (2, 2, 2):
            return (FAM_Z2CUBE, 2)
        if params == (3, 3):
            return (FAM_Z3Z3, 3)
        if len(params) == 2 and params[1] == 2 and params[0] in _KERNEL_CYCLIC:
            return (FAM_AB_N2, params[0])
    if fam == "a4":
        return (FAM_A4, 12)
    return None


# ---------------------------------------------------------------------------
# closed-form cyclic evaluation


def _n1(a: int, b: int) -> int:
    return a * a - a * b + b * b


def _n5(e0: int, e1: int, e2: int, e3: int) -> int:
    # norm of e0 + e1 z + e2 z^2 + e3 z^3 modulo the fifth cyclotomic
    return (
        e0**4 - e0**3 * e1 - e0**3 * e2 - e0**3 * e3
        + e0**2 * e1**2 + 2 * e0**2 * e1 * e2 + 2 * e0**2 * e1 * e3
        + e0**2 * e2**2 - 3 * e0**2 * e2 * e3 + e0**2 * e3**2
        - e0 * e1**3 - 3 * e0 * e1**2 * e2 + 2 * e0 * e1**2 * e3
        + 2 * e0 * e1 * e2**2 - e0 * e1 * e2 * e3 - 3 * e0 * e1 * e3**2
        - e0 * e2**3 + 2 * e0 * e2**2 * e3 + 2 * e0 * e2 * e3**2 - e0 * e3**3
        + e1**4 - e1**3 * e2 - e1**3 * e3 + e1**2 * e2**2
        + 2 * e1**2 * e2 * e3 + e1**2 * e3**2 - e1 * e2**3
        - 3 * e1 * e2**2 * e3 + 2 * e1 * e2 * e3**2 - e1 * e3**3
        + e2**4 - e2**3 * e3 + e2**2 * e3**2 - e2 * e3**3 + e3**4
    )


def _r3(a: int, b: int, c: int) -> int:
    # product of a + b t + c t^2 over the roots of t^3 + t^2 - 2t - 1
    return (
        a**3 - a**2 * b + 5 * a**2 * c - 2 * a * b**2 - a * b * c
        + 6 * a * c**2 + b**3 - b**2 * c - 2 * b * c**2 + c**3
    )


def _n7(r) -> int:
    """Norm over the primitive seventh roots of a 7-residue vector."""
    c0 = sum(x * x for x in r)
    c1 = sum(r[i] * r[(i + 1) % 7] for i in range(7))
    c2 = sum(r[i] * r[(i + 2) % 7] for i in range(7))
    c3 = sum(r[i] * r[(i + 3) % 7] for i in range(7))
    return _r3(c0 - 2 * c2 + c3, c1 - c3, c2 - c3)


def _n9(r) -> int:
    """Norm over the primitive ninth roots via the cube-root tower."""
    a0, a1 = r[0] - r[6], r[3] - r[6]
    b0, b1 = r[1] - r[7], r[4] - r[7]
    c0, c1 = r[2] - r[8], r[5] - r[8]

    def cube(p, q):
        pq = _mul(p, q, p, q)
        return _mul(pq[0], pq[1], p, q)

    a3 = cube(a0, a1)
    b3 = cube(b0, b1)
    c3 = cube(c0, c1)
    wb3 = (-b3[1], b3[0] - b3[1])
    w2c3 = (c3[1] - c3[0], -c3[0])
    ab = _mul(a0, a1, b0, b1)
    abc = _mul(ab[0], ab[1], c0, c1)
    wabc = (-abc[1], abc[0] - abc[1])
    re = a3[0] + wb3[0] + w2c3[0] - 3 * wabc[0]
    im = a3[1] + wb3[1] + w2c3[1] - 3 * wabc[1]
    return _n1(re, im)


def _mul(a, b, c, d):
    return a * c - b * d, a * d + b * c - b * d


def _fold(c, d, signed=False):
    r = [0] * d
    for i, x in enumerate(c):
        if signed and i % 2:
            r[i % d] -= x
        else:
            r[i % d] += x
    return r


def cyclic_value(n: int, c) -> int:
    """Closed-form cyclic measure for the kernel-supported moduli."""
    if n == 1:
        return c[0]
    f1 = sum(c)
    if n == 2:
        return f1 * (c[0] - c[1])
    if n == 3:
        return f1 * _n1(c[0] - c[2], c[1] - c[2])
    fm = sum(x if i % 2 == 0 else -x for i, x in enumerate(c))
    if n == 4:
        return f1 * fm * ((c[0] - c[2]) ** 2 + (c[1] - c[3]) ** 2)
    if n == 5:
        return f1 * _n5(c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4])
    if n == 6:
        r = _fold(c, 3)
        s = _fold(c, 3, signed=True)
        return f1 * fm * _n1(r[0] - r[2], r[1] - r[2]) * _n1(s[0] - s[2], s[1] - s[2])
    if n == 7:
        return f1 * _n7(c)
    if n == 8:
        h = ((c[0] + c[4]) - (c[2] + c[6])) ** 2 + ((c[1] + c[5]) - (c[3] + c[7])) ** 2
        A, B, C, D = c[0] - c[4], c[1] - c[5], c[2] - c[6], c[3] - c[7]
        k = (A * A - C * C + 2 * B * D) ** 2 + (D * D - B * B + 2 * A * C) ** 2
        return f1 * fm * h * k
    if n == 9:
        r = _fold(c, 3)
        return f1 * _n1(r[0] - r[2], r[1] - r[2]) * _n9(c)
    if n == 10:
        r = _fold(c, 5)
        s = _fold(c, 5, signed=True)
        return (
            f1 * fm
            * _n5(r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4])
            * _n5(s[0] - s[4], s[1] - s[4], s[2] - s[4], s[3] - s[4])
        )
    if n == 12:
        f = c[0::2]
        g = c[1::2]
        sf1, sg1 = sum(f), sum(g)
        smf = sum(x if i % 2 == 0 else -x for i, x in enumerate(f))
        smg = sum(x if i % 2 == 0 else -x for i, x in enumerate(g))
        a = sf1 * sf1 - sg1 * sg1
        b = smf * smf + smg * smg
        fw = _eis(f)
        gw = _eis(g)
        fmw = _eis_neg(f)
        gmw = _eis_neg(g)
        fw2 = _mul(*fw, *fw)
        gw2 = _mul(*gw, *gw)
        wgw2 = (-gw2[1], gw2[0] - gw2[1])
        s1 = _n1(fw2[0] - wgw2[0], fw2[1] - wgw2[1])
        fmw2 = _mul(*fmw, *fmw)
        gmw2 = _mul(*gmw, *gmw)
        wgmw2 = (-gmw2[1], gmw2[0] - gmw2[1])
        s2 = _n1(fmw2[0] + wgmw2[0], fmw2[1] + wgmw2[1])
        return a * b * s1 * s2
    if n == 14:
        r = _fold(c, 7)
        s = _fold(c, 7, signed=True)
        return f1 * fm * _n7(r) * _n7(s)
    raise ValueError(f"no closed cyclic form for modulus {n}")


def _eis(c):
    r = _fold(c, 3)
    return r[0] - r[2], r[1] - r[2]


def _eis_neg(c):
    r = _fold(c, 3, signed=True)
    return r[0] - r[2], r[1] - r[2]


def _phi_diff(f, g):
    """Cyclic correlation difference f f* - g g* as n coefficients."""
    n = len(f)
    return [
        sum(f[i] * f[(i + k) % n] for i in range(n))
        - sum(g[i] * g[(i + k) % n] for i in range(n))
        for k in range(n)
    ]


def family_value(plan, c) -> int:
    """Measure of one vector under a kernel plan (pure-Python path)."""
    fam, m = plan
    if fam == FAM_CYCLIC:
        return cyclic_value(m, c)
    if fam == FAM_DIHEDRAL:
        f, g = c[:m], c[m:]
        return cyclic_value(m, _phi_diff(f, g))
    if fam == FAM_DICYCLIC:
        half = m  # 2n coefficients per block, m = 2n
        f, g = c[:half], c[half:]
        n = half
        gg = [sum(g[i] * g[(i + k) % n] for i in range(n)) for k in range(n)]
        ff = [sum(f[i] * f[(i + k) % n] for i in range(n)) for k in range(n)]
        shift = half // 2
        phi = [ff[k] - gg[(k - shift) % n] for k in range(n)]
        return cyclic_value(n, phi)
    if fam == FAM_AB_N2:
        f, g = c[0::2], c[1::2]
        plus = [a + b for a, b in zip(f, g)]
        minus = [a - b for a, b in zip(f, g)]
        return cyclic_value(m, plus) * cyclic_value(m, minus)
    if fam == FAM_Z2Z2:
        return (
            (c[0] + c[1] + c[2] + c[3])
            * (c[0] - c[1] + c[2] - c[3])
            * (c[0] + c[1] - c[2] - c[3])
            * (c[0] - c[1] - c[2] + c[3])
        )
    if fam == FAM_Z2CUBE:
        out = 1
        for sx in (1, -1):
            for sy in (1, -1):
                for sz in (1, -1):
                    v = 0
                    for idx in range(8):
                        term = c[idx]
                        if sx < 0 and idx & 4:
                            term = -term
                        if sy < 0 and idx & 2:
                            term = -term
                        if sz < 0 and idx & 1:
                            term = -term
                        v += term
                    out *= v
        return out
    if fam == FAM_Z3Z3:
        total = sum(c)
        out = total
        for p, q in ((0, 1), (1, 0), (1, 1), (1, 2)):
            r = [0, 0, 0]
            for idx in range(9):
                t1, t2 = divmod(idx, 3)
                r[(p * t1 + q * t2) % 3] += c[idx]
            out *= _n1(r[0] - r[2], r[1] - r[2])
        return out
    if fam == FAM_A4:
        a = c[0] + c[1] + c[2] + c[3]
        b = c[4] + c[5] + c[6] + c[7]
        cc = c[8] + c[9] + c[10] + c[11]
        l0 = a + b + cc
        l1l2 = a * a + b * b + cc * cc - a * b - b * cc - cc * a
        m00 = c[0] + c[1] - c[2] - c[3]
        m01 = c[8] + c[9] - c[10] - c[11]
        m02 = c[4] + c[5] - c[6] - c[7]
        m10 = c[4] - c[5] - c[6] + c[7]
        m11 = c[0] - c[1] - c[2] + c[3]
        m12 = c[8] - c[9] - c[10] + c[11]
        m20 = c[8] - c[9] + c[10] - c[11]
        m21 = c[4] - c[5] + c[6] - c[7]
        m22 = c[0] - c[1] + c[2] - c[3]
        d = (
            m00 * (m11 * m22 - m12 * m21)
            - m01 * (m10 * m22 - m12 * m20)
            + m02 * (m10 * m21 - m11 * m20)
        )
        return l0 * l1l2 * d**3
    raise ValueError(f"unknown family code {fam}")


# ---------------------------------------------------------------------------
# block enumeration


def _decode(index: int, n: int, base: int, radius: int):
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, d = divmod(index, base)
        digits[i] = d - radius
    return digits


def attained_block_py(spec: GroupSpec, radius: int, bound: int,
                      start: int, stop: int) -> set[int]:
    """Pure-Python enumeration of one index block."""
    n = spec.order
    base = 2 * radius + 1
    plan = kernel_plan(spec)
    c = _decode(start, n, base, radius)
    out: set[int] = set()
    if plan is None:
        # generic fallback through the measure API
        idx = start
        while idx < stop:
            v = measure_for_spec(spec, tuple(c))
            if -bound <= v <= bound:
                out.add(v)
            idx += 1
            i = n - 1
            while i >= 0:
                if c[i] < radius:
                    c[i] += 1
                    break
                c[i] = -radius
                i -= 1
        return out
    value = family_value
    idx = start
    while idx < stop:
        v = value(plan, c)
        if -bound <= v <= bound:
            out.add(v)
        idx += 1
        i = n - 1
        while i >= 0:
            if c[i] < radius:
                c[i] += 1
                break
            c[i] = -radius
            i -= 1
    return out


def int64_safe(spec: GroupSpec, radius: int) -> bool:
    """Conservative check that the compiled kernel cannot overflow."""
    n = spec.order
    fam = spec.family
    cmax = radius
    if fam in ("cyclic", "abelian", "a4"):
        coeff_abs = n * cmax
    else:
        half = n // 2
        coeff_abs = 2 * (half * cmax) ** 2
    if coeff_abs > 500:
        return False
    # Hadamard bound on the full Cayley determinant
    total = (n * cmax * cmax) ** ((n + 1) // 2)
    return total < 2**62


def attained_block(spec: GroupSpec, radius: int, bound: int,
                   start: int, stop: int, force_pure: bool = False) -> set[int]:
    """Enumerate one block with the best available kernel."""
    plan = kernel_plan(spec)
    if (
        not force_pure
        and HAVE_FAST
        and plan is not None
        and int64_safe(spec, radius)
    ):
        fam, m = plan
        return _fastenum.attained_block(
            fam, m, spec.order, radius, bound, start, stop
        )
    return attained_block_py(spec, radius, bound, start, stop)
