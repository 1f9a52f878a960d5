# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: int64 mirror of enumkernel's evaluators.

The dispatcher only selects this kernel after checking that every
intermediate fits comfortably in 64 bits, so no overflow checks appear in
the hot loop.  Vector order matches the pure kernel exactly (mixed-radix,
most-significant digit first, digit d -> coefficient d - radius).
"""

from libc.stdint cimport int64_t


cdef inline int64_t n1(int64_t a, int64_t b) nogil:
    return a * a - a * b + b * b


cdef inline int64_t n5(int64_t e0, int64_t e1, int64_t e2, int64_t e3) nogil:
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


cdef inline int64_t r3(int64_t a, int64_t b, int64_t c) nogil:
    return (
        a**3 - a**2 * b + 5 * a**2 * c - 2 * a * b**2 - a * b * c
        + 6 * a * c**2 + b**3 - b**2 * c - 2 * b * c**2 + c**3
    )


cdef int64_t n7(int64_t* r) nogil:
    cdef int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0
    cdef int i
    for i in range(7):
        c0 += r[i] * r[i]
        c1 += r[i] * r[(i + 1) % 7]
        c2 += r[i] * r[(i + 2) % 7]
        c3 += r[i] * r[(i + 3) % 7]
    return r3(c0 - 2 * c2 + c3, c1 - c3, c2 - c3)


cdef inline void emul(int64_t a, int64_t b, int64_t c, int64_t d,
                      int64_t* out) nogil:
    out[0] = a * c - b * d
    out[1] = a * d + b * c - b * d


cdef int64_t n9(int64_t* r) nogil:
    cdef int64_t a0 = r[0] - r[6], a1 = r[3] - r[6]
    cdef int64_t b0 = r[1] - r[7], b1 = r[4] - r[7]
    cdef int64_t c0 = r[2] - r[8], c1 = r[5] - r[8]
    cdef int64_t t[2]
    cdef int64_t a3[2]
    cdef int64_t b3[2]
    cdef int64_t c3[2]
    cdef int64_t abc[2]
    emul(a0, a1, a0, a1, t); emul(t[0], t[1], a0, a1, a3)
    emul(b0, b1, b0, b1, t); emul(t[0], t[1], b0, b1, b3)
    emul(c0, c1, c0, c1, t); emul(t[0], t[1], c0, c1, c3)
    emul(a0, a1, b0, b1, t); emul(t[0], t[1], c0, c1, abc)
    cdef int64_t re = a3[0] + (-b3[1]) + (c3[1] - c3[0]) - 3 * (-abc[1])
    cdef int64_t im = a3[1] + (b3[0] - b3[1]) + (-c3[0]) - 3 * (abc[0] - abc[1])
    return n1(re, im)


cdef int64_t cyclic_value(int n, int64_t* c) nogil:
    cdef int64_t f1 = 0, fm = 0, h, k, A, B, C, D, s1v, s2v, a, b
    cdef int64_t r[16]
    cdef int64_t s[16]
    cdef int64_t f[8]
    cdef int64_t g[8]
    cdef int64_t fw[2]
    cdef int64_t gw[2]
    cdef int64_t t[2]
    cdef int64_t u[2]
    cdef int i
    if n == 1:
        return c[0]
    for i in range(n):
        f1 += c[i]
        fm += c[i] if i % 2 == 0 else -c[i]
    if n == 2:
        return f1 * fm
    if n == 3:
        return f1 * n1(c[0] - c[2], c[1] - c[2])
    if n == 4:
        return f1 * fm * ((c[0] - c[2]) * (c[0] - c[2]) + (c[1] - c[3]) * (c[1] - c[3]))
    if n == 5:
        return f1 * n5(c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4])
    if n == 6:
        for i in range(3):
            r[i] = 0
            s[i] = 0
        for i in range(6):
            r[i % 3] += c[i]
            s[i % 3] += c[i] if i % 2 == 0 else -c[i]
        return f1 * fm * n1(r[0] - r[2], r[1] - r[2]) * n1(s[0] - s[2], s[1] - s[2])
    if n == 7:
        return f1 * n7(c)
    if n == 8:
        h = ((c[0] + c[4]) - (c[2] + c[6])) ** 2 + ((c[1] + c[5]) - (c[3] + c[7])) ** 2
        A = c[0] - c[4]; B = c[1] - c[5]; C = c[2] - c[6]; D = c[3] - c[7]
        k = (A * A - C * C + 2 * B * D) ** 2 + (D * D - B * B + 2 * A * C) ** 2
        return f1 * fm * h * k
    if n == 9:
        for i in range(3):
            r[i] = 0
        for i in range(9):
            r[i % 3] += c[i]
        return f1 * n1(r[0] - r[2], r[1] - r[2]) * n9(c)
    if n == 10:
        for i in range(5):
            r[i] = 0
            s[i] = 0
        for i in range(10):
            r[i % 5] += c[i]
            s[i % 5] += c[i] if i % 2 == 0 else -c[i]
        return (f1 * fm
                * n5(r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4])
                * n5(s[0] - s[4], s[1] - s[4], s[2] - s[4], s[3] - s[4]))
    if n == 12:
        for i in range(6):
            f[i] = c[2 * i]
            g[i] = c[2 * i + 1]
        s1v = 0; s2v = 0; A = 0; B = 0
        for i in range(6):
            s1v += f[i]
            s2v += g[i]
            A += f[i] if i % 2 == 0 else -f[i]
            B += g[i] if i % 2 == 0 else -g[i]
        a = s1v * s1v - s2v * s2v
        b = A * A + B * B
        # f(w), g(w) and the twisted alternating versions
        for i in range(3):
            r[i] = 0; r[3 + i] = 0; s[i] = 0; s[3 + i] = 0
        for i in range(6):
            r[i % 3] += f[i]
            r[3 + i % 3] += g[i]
            s[i % 3] += f[i] if i % 2 == 0 else -f[i]
            s[3 + i % 3] += g[i] if i % 2 == 0 else -g[i]
        fw[0] = r[0] - r[2]; fw[1] = r[1] - r[2]
        gw[0] = r[3] - r[5]; gw[1] = r[4] - r[5]
        emul(fw[0], fw[1], fw[0], fw[1], t)
        emul(gw[0], gw[1], gw[0], gw[1], u)
        s1v = n1(t[0] - (-u[1]), t[1] - (u[0] - u[1]))
        fw[0] = s[0] - s[2]; fw[1] = s[1] - s[2]
        gw[0] = s[3] - s[5]; gw[1] = s[4] - s[5]
        emul(fw[0], fw[1], fw[0], fw[1], t)
        emul(gw[0], gw[1], gw[0], gw[1], u)
        s2v = n1(t[0] + (-u[1]), t[1] + (u[0] - u[1]))
        return a * b * s1v * s2v
    if n == 14:
        for i in range(7):
            r[i] = 0
            s[i] = 0
        for i in range(14):
            r[i % 7] += c[i]
            s[i % 7] += c[i] if i % 2 == 0 else -c[i]
        return f1 * fm * n7(r) * n7(s)
    return 0  # unreachable: dispatcher restricts moduli


cdef int64_t family_value(int fam, int m, int n, int64_t* c) nogil:
    cdef int64_t phi[16]
    cdef int64_t plus[16]
    cdef int64_t minus[16]
    cdef int64_t ff, gg, v, out, total
    cdef int64_t a, b, cc, l0, l1l2
    cdef int64_t m00, m01, m02, m10, m11, m12, m20, m21, m22, d
    cdef int i, kk, half, shift, idx, t1, t2, p, q, sx, sy, sz
    cdef int64_t r[3]
    if fam == 1:
        return cyclic_value(m, c)
    if fam == 2:
        for kk in range(m):
            ff = 0
            for i in range(m):
                ff += c[i] * c[(i + kk) % m] - c[m + i] * c[m + (i + kk) % m]
            phi[kk] = ff
        return cyclic_value(m, phi)
    if fam == 3:
        half = m
        shift = m // 2
        for kk in range(m):
            ff = 0
            gg = 0
            for i in range(m):
                ff += c[i] * c[(i + kk) % m]
                gg += c[m + i] * c[m + (i + kk) % m]
            plus[kk] = ff
            minus[kk] = gg
        for kk in range(m):
            phi[kk] = plus[kk] - minus[(kk - shift + m) % m]
        return cyclic_value(m, phi)
    if fam == 4:
        for i in range(m):
            plus[i] = c[2 * i] + c[2 * i + 1]
            minus[i] = c[2 * i] - c[2 * i + 1]
        return cyclic_value(m, plus) * cyclic_value(m, minus)
    if fam == 6:
        return ((c[0] + c[1] + c[2] + c[3])
                * (c[0] - c[1] + c[2] - c[3])
                * (c[0] + c[1] - c[2] - c[3])
                * (c[0] - c[1] - c[2] + c[3]))
    if fam == 5:
        out = 1
        for sx in range(2):
            for sy in range(2):
                for sz in range(2):
                    v = 0
                    for idx in range(8):
                        ff = c[idx]
                        if sx and (idx & 4):
                            ff = -ff
                        if sy and (idx & 2):
                            ff = -ff
                        if sz and (idx & 1):
                            ff = -ff
                        v += ff
                    out *= v
        return out
    if fam == 7:
        total = 0
        for i in range(9):
            total += c[i]
        out = total
        for p in range(2):
            for q in range(3):
                if p == 0 and q != 1:
                    continue
                r[0] = 0; r[1] = 0; r[2] = 0
                for idx in range(9):
                    t1 = idx // 3
                    t2 = idx % 3
                    r[(p * t1 + q * t2) % 3] += c[idx]
                out *= n1(r[0] - r[2], r[1] - r[2])
        return out
    if fam == 8:
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
        d = (m00 * (m11 * m22 - m12 * m21)
             - m01 * (m10 * m22 - m12 * m20)
             + m02 * (m10 * m21 - m11 * m20))
        return l0 * l1l2 * d * d * d
    return 0


def attained_block(int fam, int m, int n, int radius, object bound,
                   object start, object stop):
    """Enumerate indices [start, stop) and collect values within bound."""
    cdef int64_t c[32]
    cdef int64_t bnd = bound
    cdef long long idx = start
    cdef long long hi = stop
    cdef long long rem = idx
    cdef int base = 2 * radius + 1
    cdef int i
    cdef int64_t v
    out = set()
    for i in range(n - 1, -1, -1):
        c[i] = rem % base - radius
        rem //= base
    while idx < hi:
        v = family_value(fam, m, n, c)
        if -bnd <= v <= bnd:
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
