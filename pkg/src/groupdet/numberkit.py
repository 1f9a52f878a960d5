"""Integer factorization and the quadratic/quartic norm-form solvers.

The classification theorems need factorizations, the P1/P2 prime partition,
and explicit parameters for a handful of Eisenstein/Gaussian norm displays.
All solvers use bounded exhaustive search: existence is guaranteed by the
underlying lemmas, so a NoSolution inside the bound signals a defect rather
than a domain condition.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .eisenstein import (
    ONE_MINUS_OMEGA,
    EisensteinInt,
    gaussian_eisenstein_norm,
)
from .errors import NoSolution, NotPrime, TooLarge, ZeroInput

FACTOR_CAP = 1 << 96

_SIEVE_LIMIT = 20000


def _small_primes(limit=_SIEVE_LIMIT):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [p for p in range(limit) if sieve[p]]


SMALL_PRIMES = _small_primes()
_SMALL_PRIME_SET = set(SMALL_PRIMES)

# Miller-Rabin with these bases is deterministic below 3.317e24 (~2^81.5).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _miller_rabin(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base % n, d, n)
    if x in (0, 1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _lucas_strong(n: int) -> bool:
    # Strong Lucas test with Selfridge parameters; with a base-2
    # Miller-Rabin this is the usual BPSW combination, adequate far
    # beyond the 2^96 factorization cap.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0:
            return n == abs(d)
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = (k & -k).bit_length() - 1
    m = k >> s
    u, v, qk = 1, p, q
    for bit in bin(m)[3:]:
        u, v = (u * v) % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = ((p * u + v) * _HALF(n)) % n, ((d * u + p * v) * _HALF(n)) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _HALF(n: int) -> int:
    return (n + 1) // 2


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return 1 if n == 1 else 0 if n > 1 else result


def is_prime(n: int) -> bool:
    """Deterministic below ~2^81; BPSW above (adequate for the 2^96 cap)."""
    if n < 2:
        return False
    if n < _SIEVE_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return False
    if not all(_miller_rabin(n, b) for b in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    return _lucas_strong(n)


def _brent_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    sign: int
    prime_powers: tuple[tuple[int, int], ...]  # primes strictly increasing

    def value(self) -> int:
        out = self.sign
        for p, e in self.prime_powers:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    def valuation(self, p: int) -> int:
        for q, e in self.prime_powers:
            if q == p:
                return e
        return 0


def factorize(v: int, cap: int = FACTOR_CAP) -> Factorization:
    """Complete factorization of v != 0 with |v| <= cap."""
    if v == 0:
        raise ZeroInput("cannot factorize 0")
    if abs(v) > cap:
        raise TooLarge(f"|v| exceeds the factorization cap 2^{cap.bit_length() - 1}")
    sign = 1 if v > 0 else -1
    n = abs(v)
    powers: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    if n > 1:
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                powers[m] = powers.get(m, 0) + 1
                continue
            d = _brent_rho(m, rng)
            stack.append(d)
            stack.append(m // d)
    return Factorization(sign, tuple(sorted(powers.items())))


def valuation(v: int, p: int) -> int:
    """p-adic valuation of v != 0."""
    if v == 0:
        raise ZeroInput("valuation of 0 is undefined")
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e


# ---------------------------------------------------------------------------
# two squares and the P1/P2 partition


def _sqrt_minus_one_mod(p: int) -> int:
    for a in range(2, p):
        t = pow(a, (p - 1) // 4, p)
        if t * t % p == p - 1:
            return t
    raise NoSolution(f"no sqrt(-1) mod {p}")


def two_squares(p: int) -> tuple[int, int]:
    """p = even^2 + odd^2 for a prime p = 1 mod 4, both parts positive.

    Hermite-Serret descent; equivalent to the ascending search over the
    even part but fast enough for primes near the factorization cap.
    """
    if p == 2:
        return (1, 1)
    z = _sqrt_minus_one_mod(p)
    a, b = p, z
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    e, o = b, math.isqrt(p - b * b)
    if e * e + o * o != p:
        raise NoSolution(f"two-squares descent failed for {p}")
    if e % 2:
        e, o = o, e
    return e, o


@dataclass(frozen=True)
class PrimeClass:
    p: int
    residue_mod_12: int
    p1_p2: str | None  # "P1" | "P2" for p = 1 mod 12, else None
    two_square_parts: tuple[int, int] | None  # (even, odd)

    @property
    def in_p1(self) -> bool:
        return self.p1_p2 == "P1"

    @property
    def in_p2(self) -> bool:
        return self.p1_p2 == "P2"


@lru_cache(maxsize=None)
def classify_prime(p: int) -> PrimeClass:
    """Residue class mod 12 and, for p = 1 mod 12, the P1/P2 side.

    P1 holds exactly when 3 divides the odd part of p = even^2 + odd^2,
    P2 when 3 divides the even part; exactly one occurs.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    r = p % 12
    if r != 1:
        parts = two_squares(p) if p % 4 == 1 else None
        return PrimeClass(p, r, None, parts)
    e, o = two_squares(p)
    if o % 3 == 0:
        side = "P1"
    elif e % 3 == 0:
        side = "P2"
    else:  # p = e^2 + o^2 = 2 mod 3 would contradict p = 1 mod 3
        raise NoSolution(f"two-squares parts of {p} both coprime to 3")
    return PrimeClass(p, r, side, (e, o))


# ---------------------------------------------------------------------------
# four squares / doubled two squares


def four_squares_q8(p: int) -> tuple[int, int, int, int]:
    """p = a^2 + b^2 + c^2 + d^2 with a even (possibly 0), b, c, d odd."""
    if p % 4 != 3 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 3 mod 4")
    for a in range(0, math.isqrt(p) + 1, 2):
        r1 = p - a * a
        for b in range(1, math.isqrt(r1) + 1, 2):
            r2 = r1 - b * b
            for c in range(1, math.isqrt(r2) + 1, 2):
                d2 = r2 - c * c
                d = math.isqrt(d2)
                if d * d == d2 and d % 2 == 1:
                    b, c, d = sorted((b, c, d), reverse=True)
                    return a, b, c, d
    raise NoSolution(f"no four-square decomposition for {p}")


def two_squares_doubled(p: int) -> tuple[int, int]:
    """Integers (A, B) with 2p = (1 + 6A)^2 + (3 + 6B)^2, p = 5 mod 12."""
    if p % 12 != 5 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 5 mod 12")
    target = 2 * p
    bound = math.isqrt(target)
    a = -((bound + 1) // 6) - 1
    while 1 + 6 * a <= bound:
        r = target - (1 + 6 * a) ** 2
        if r >= 0:
            t = math.isqrt(r)
            if t * t == r and t % 6 == 3:
                return a, (t - 3) // 6
        a += 1
    raise NoSolution(f"no doubled two-square form for {p}")


# ---------------------------------------------------------------------------
# Eisenstein norm-form solvers


@dataclass(frozen=True)
class NormFormSolution:
    form_id: str
    parameters: tuple[int, ...]
    target: int

    def element(self) -> EisensteinInt:
        """Reconstruct the quadratic-form element (forms with N1 targets)."""
        rebuild = _FORM_BUILDERS.get(self.form_id)
        if rebuild is None:
            raise NoSolution(f"{self.form_id} has no single-element rebuild")
        return rebuild(*self.parameters)


def _form_odd(A: int, B: int) -> EisensteinInt:
    return EisensteinInt(-1, 0) + 2 * (EisensteinInt(A, B) * ONE_MINUS_OMEGA)


def _form_7mod12(A: int, B: int) -> EisensteinInt:
    return EisensteinInt(-1, 0) + 2 * (ONE_MINUS_OMEGA * EisensteinInt(2 * A + 1, B))


def _form_1mod12(A: int, B: int) -> EisensteinInt:
    return EisensteinInt(-1, 0) + 2 * (ONE_MINUS_OMEGA * EisensteinInt(2 * A, B))


def _form_sum_alpha(A: int, B: int) -> EisensteinInt:
    return _form_odd(A, B)


def _form_sum_beta(C: int, D: int) -> EisensteinInt:
    return EisensteinInt(-1, 0) + EisensteinInt(C, D) * ONE_MINUS_OMEGA


def _form_k(A: int, B: int) -> EisensteinInt:
    # -1 - 2w(1-w) + 4(A + Bw)(1-w): the shape carrying the composite k
    # cofactors of the order-12 theorems.
    base = EisensteinInt(-1, 0) - 2 * EisensteinInt(0, 1) * ONE_MINUS_OMEGA
    return base + 4 * (EisensteinInt(A, B) * ONE_MINUS_OMEGA)


def _form_7mod12_plus(A: int, B: int) -> EisensteinInt:
    # 1 + 2(A + Bw)(1-w): used by the 2^8/2^10 (5+12m)p displays.
    return EisensteinInt(1, 0) + 2 * (EisensteinInt(A, B) * ONE_MINUS_OMEGA)


def _form_7mod12_z2z6(A: int, B: int) -> EisensteinInt:
    # 1 - 2w + 4(A + Bw)(1-w): the case-(b) prime carrier.
    return EisensteinInt(1, -2) + 4 * (EisensteinInt(A, B) * ONE_MINUS_OMEGA)


def _form_12th_root(C: int, D: int) -> EisensteinInt:
    # 1 - w^2 + 4(C + Dw) = (2 + 4C) + (1 + 4D) w
    return EisensteinInt(2 + 4 * C, 1 + 4 * D)


_FORM_BUILDERS = {
    "NF1_odd": _form_odd,
    "NF_7mod12": _form_7mod12,
    "NF_1mod12": _form_1mod12,
    "NF_k_composite": _form_k,
    "NF_7mod12_plus": _form_7mod12_plus,
    "NF_7mod12_z2z6": _form_7mod12_z2z6,
    "NF_12th_root": _form_12th_root,
    "NormSumSplit_alpha": _form_sum_alpha,
    "NormSumSplit_beta": _form_sum_beta,
}


def _search_two_param(form_id, build, target, bound, parity_b=None):
    for A in range(-bound, bound + 1):
        for B in range(-bound, bound + 1):
            if parity_b is not None and B % 2 != parity_b:
                continue
            if build(A, B).norm() == target:
                return NormFormSolution(form_id, (A, B), target)
    return None


def normform_odd(n: int) -> NormFormSolution:
    """(A, B) with N1(-1 + 2(A + Bw)(1 - w)) = n, for gcd(n, 6) = 1.

    NoSolution means n is not an Eisenstein norm (e.g. it contains a prime
    = 2 mod 3 to an odd power).
    """
    if n <= 0 or math.gcd(n, 6) != 1:
        raise ZeroInput(f"target must be positive and coprime to 6, got {n}")
    bound = math.isqrt(n) + 2
    sol = _search_two_param("NF1_odd", _form_odd, n, bound)
    if sol is None:
        raise NoSolution(f"{n} is not representable in the odd canonical form")
    return sol


def normform_7mod12(p: int) -> NormFormSolution:
    """(A, B), B even, with N1(-1 + 2(1 - w)(2A + 1 + Bw)) = p."""
    if p % 12 != 7 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 7 mod 12")
    bound = math.isqrt(p) + 2
    sol = _search_two_param("NF_7mod12", _form_7mod12, p, bound, parity_b=0)
    if sol is None:
        raise NoSolution(f"no canonical form for {p}")
    return sol


def normform_1mod12(p: int, side: str | None = None) -> NormFormSolution:
    """(A, B) with N1(-1 + 2(1 - w)(2A + Bw)) = p; B odd iff p is in P1."""
    cls = classify_prime(p)
    if cls.residue_mod_12 != 1:
        raise NotPrime(f"{p} is not a prime = 1 mod 12")
    if side is not None and side != cls.p1_p2:
        raise NoSolution(f"{p} is in {cls.p1_p2}, not {side}")
    parity = 1 if cls.in_p1 else 0
    bound = math.isqrt(p) + 2
    sol = _search_two_param("NF_1mod12", _form_1mod12, p, bound, parity_b=parity)
    if sol is None:
        raise NoSolution(f"no canonical form for {p}")
    return sol


def normform_composite_k(k: int) -> NormFormSolution:
    """(A, B) with N1(-1 - 2w(1 - w) + 4(A + Bw)(1 - w)) = k.

    Valid targets are the composite cofactors of the order-12 theorems:
    k = p in P1, k = p^2 with p = 5 mod 12, or k = p1 p2 with both
    p_i = 7 mod 12.
    """
    bound = math.isqrt(k) // 2 + 3
    sol = _search_two_param("NF_k_composite", _form_k, k, bound)
    if sol is None:
        raise NoSolution(f"no composite-k form for {k}")
    return sol


def normform_7mod12_plus(p: int) -> NormFormSolution:
    """(A, B) with N1(1 + 2(A + Bw)(1 - w)) = p, for p = 7 mod 12."""
    if p % 12 != 7 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 7 mod 12")
    bound = math.isqrt(p) + 2
    sol = _search_two_param("NF_7mod12_plus", _form_7mod12_plus, p, bound)
    if sol is None:
        raise NoSolution(f"no plus form for {p}")
    return sol


def normform_7mod12_z2z6(p: int) -> NormFormSolution:
    """(A, B) with N1(1 - 2w + 4(A + Bw)(1 - w)) = p, for p = 7 mod 12."""
    if p % 12 != 7 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 7 mod 12")
    bound = math.isqrt(p) // 2 + 3
    sol = _search_two_param("NF_7mod12_z2z6", _form_7mod12_z2z6, p, bound)
    if sol is None:
        raise NoSolution(f"no case-(b) carrier form for {p}")
    return sol


def normform_12th_root(p: int) -> NormFormSolution:
    """(C, D) with N1((2 + 4C) + (1 + 4D)w) = p, for p = 7 mod 12."""
    if p % 12 != 7 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 7 mod 12")
    bound = math.isqrt(p) // 2 + 3
    sol = _search_two_param("NF_12th_root", _form_12th_root, p, bound)
    if sol is None:
        raise NoSolution(f"no twelfth-root form for {p}")
    return sol


def _n2_form1(A: int, B: int, C: int, D: int) -> tuple[EisensteinInt, EisensteinInt]:
    re = EisensteinInt(-1, 0) + EisensteinInt(2 * A, 2 * B) * ONE_MINUS_OMEGA
    im = EisensteinInt(2, 0) + EisensteinInt(C, 2 * D) * ONE_MINUS_OMEGA
    return re, im


def _n2_form2(A: int, B: int, C: int, D: int) -> tuple[EisensteinInt, EisensteinInt]:
    re = EisensteinInt(A + 1, 2 * B) * ONE_MINUS_OMEGA
    im = EisensteinInt(1, 0) + EisensteinInt(C, D) * ONE_MINUS_OMEGA
    return re, im


def n2_form_solutions(p: int) -> tuple[NormFormSolution, NormFormSolution]:
    """Both quartic-norm displays for p = 1 mod 12, with the side parities.

    form1: N2(-1 + (2A + 2Bw)(1 - w) + i(2 + (C + 2Dw)(1 - w))) = p,
           C even iff p in P1.
    form2: N2((A + 1 + 2Bw)(1 - w) + i(1 + (C + Dw)(1 - w))) = p,
           A, C, D all even iff p in P1 (all odd iff p in P2).
    """
    cls = classify_prime(p)
    if cls.residue_mod_12 != 1:
        raise NotPrime(f"{p} is not a prime = 1 mod 12")
    want_even = cls.in_p1
    sol1 = sol2 = None
    bound = max(3, math.isqrt(math.isqrt(p)) + 2)
    while bound <= math.isqrt(p) + 4 and (sol1 is None or sol2 is None):
        rng = range(-bound, bound + 1)
        if sol1 is None:
            for A in rng:
                for B in rng:
                    for C in rng:
                        if (C % 2 == 0) != want_even:
                            continue
                        for D in rng:
                            if gaussian_eisenstein_norm(*_n2_form1(A, B, C, D)) == p:
                                sol1 = NormFormSolution("NF_N2_form1", (A, B, C, D), p)
                                break
                        if sol1:
                            break
                    if sol1:
                        break
                if sol1:
                    break
        if sol2 is None:
            want = 0 if want_even else 1
            for A in rng:
                if A % 2 != want:
                    continue
                for B in rng:
                    for C in rng:
                        if C % 2 != want:
                            continue
                        for D in rng:
                            if D % 2 != want:
                                continue
                            if gaussian_eisenstein_norm(*_n2_form2(A, B, C, D)) == p:
                                sol2 = NormFormSolution("NF_N2_form2", (A, B, C, D), p)
                                break
                        if sol2:
                            break
                    if sol2:
                        break
                if sol2:
                    break
        bound *= 2
    if sol1 is None or sol2 is None:
        raise NoSolution(f"quartic norm search failed for {p}")
    return sol1, sol2


def n2_value(sol: NormFormSolution) -> int:
    """Re-evaluate a quartic-norm solution exactly."""
    build = _n2_form1 if sol.form_id == "NF_N2_form1" else _n2_form2
    return gaussian_eisenstein_norm(*build(*sol.parameters))


def norm_sum_split(p: int) -> tuple[NormFormSolution, NormFormSolution]:
    """p = N1(alpha) + 4 N1(beta) with alpha = -1 + 2(1-w)(A+Bw) and
    beta = -1 + (C+Dw)(1-w), for p = 5 mod 6; both norms are 1 mod 3."""
    if p % 6 != 5 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 5 mod 6")
    bound_a = math.isqrt(p // 12) + 2
    bound_b = math.isqrt(p // 3) + 2
    for A in range(-bound_a, bound_a + 1):
        for B in range(-bound_a, bound_a + 1):
            na = _form_sum_alpha(A, B).norm()
            rest = p - na
            if rest < 0 or rest % 4:
                continue
            nb = rest // 4
            for C in range(-bound_b, bound_b + 1):
                for D in range(-bound_b, bound_b + 1):
                    if _form_sum_beta(C, D).norm() == nb:
                        return (
                            NormFormSolution("NormSumSplit_alpha", (A, B), na),
                            NormFormSolution("NormSumSplit_beta", (C, D), nb),
                        )
    raise NoSolution(f"no norm-sum split for {p}")


def primes_in_class(limit: int, residue: int, modulus: int = 12):
    """Primes p < limit with p = residue mod modulus."""
    return [p for p in _primes_below(limit) if p % modulus == residue]


@lru_cache(maxsize=None)
def _primes_below(limit: int) -> tuple[int, ...]:
    if limit <= _SIEVE_LIMIT:
        return tuple(p for p in SMALL_PRIMES if p < limit)
    out = list(SMALL_PRIMES)
    for n in range(_SIEVE_LIMIT | 1, limit, 2):
        if is_prime(n):
            out.append(n)
    return tuple(p for p in out if p < limit)
