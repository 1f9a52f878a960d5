"""Decidable membership predicates for the characterized value sets S(G).

Each characterized family is compiled into valuation/residue clauses plus,
where the set description demands it, existential prime clauses resolved
through factorization.  The compilation is code, not ground truth: every
predicate is checked in the test suite against an independent generator
that enumerates the parameterized families directly, and against brute
force enumeration of actual determinants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import TooLarge, UndecidableAtScale, UnsupportedGroup
from .groups import (
    GroupSpec,
    abelian_product,
    alternating4,
    cyclic,
    dicyclic,
    dihedral,
)
from .numberkit import FACTOR_CAP, Factorization, classify_prime, factorize


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: bool
    branch: str | None
    params: dict = field(default_factory=dict)
    undecidable: bool = False

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "branch": self.branch,
            "params": {k: str(v) for k, v in self.params.items()},
            "undecidable": self.undecidable,
        }


def _nu(v: int, p: int) -> tuple[int, int]:
    """(valuation, cofactor) of v != 0 at p."""
    e = 0
    while v % p == 0:
        v //= p
        e += 1
    return e, v


def _odd_factor(w: int) -> Factorization:
    try:
        return factorize(w)
    except TooLarge as exc:
        raise UndecidableAtScale(
            f"membership needs the factorization of {w}, beyond the cap",
            MembershipCertificate(False, None, {"cofactor": w}, undecidable=True),
        ) from exc


def _has_prime_div(fac: Factorization, residue: int, modulus: int = 12,
                   min_power: int = 1):
    for p, e in fac.prime_powers:
        if p % modulus == residue and e >= min_power:
            return p
    return None


def _p1_prime_div(fac: Factorization):
    for p, _ in fac.prime_powers:
        if p % 12 == 1 and classify_prime(p).in_p1:
            return p
    return None


def _k_divisor(fac: Factorization):
    """The composite-k clause: p in P1, p^2 with p = 5 mod 12, or a product
    of two primes = 7 mod 12 (repetition allowed).  Returns (kind, primes)."""
    p = _p1_prime_div(fac)
    if p is not None:
        return "P1", (p,)
    p = _has_prime_div(fac, 5, min_power=2)
    if p is not None:
        return "p5^2", (p,)
    sevens = [p for p, _ in fac.prime_powers if p % 12 == 7]
    weight = sum(e for p, e in fac.prime_powers if p % 12 == 7)
    if weight >= 2:
        if len(sevens) >= 2:
            return "p7p7", (sevens[0], sevens[1])
        return "p7p7", (sevens[0], sevens[0])
    return None


# ---------------------------------------------------------------------------
# per-family predicates; each takes v != 0 and returns (verdict, branch, params)


def _pred_trivial(v):
    return True, "any-integer", {}


def _pred_nu_not_one(p):
    def pred(v):
        e, m = _nu(v, p)
        if e == 1:
            return False, None, {f"nu{p}": e}
        branch = "coprime" if e == 0 else f"{p}^a*m, a>=2"
        return True, branch, {f"nu{p}": e, "cofactor": m}

    return pred


def _pred_two_valuations(p, q, ok_p, ok_q):
    """Membership via independent valuation windows at two primes."""

    def pred(v):
        ep, _ = _nu(v, p)
        eq, _ = _nu(v, q)
        if ok_p(ep) and ok_q(eq):
            return True, f"nu{p}={ep},nu{q}={eq}", {f"nu{p}": ep, f"nu{q}": eq}
        return False, None, {f"nu{p}": ep, f"nu{q}": eq}

    return pred


def _pred_power_window(p, allowed_zero_or_min):
    def pred(v):
        e, m = _nu(v, p)
        if e == 0 or e >= allowed_zero_or_min:
            return True, f"nu{p}={e}", {f"nu{p}": e, "cofactor": m}
        return False, None, {f"nu{p}": e}

    return pred


def _pred_mod4_or_power(power):
    def pred(v):
        if v % 4 == 1:
            return True, "4m+1", {"residue4": 1}
        e, m = _nu(v, 2)
        if e >= power:
            return True, f"2^{power}m", {"nu2": e, "cofactor": m}
        return False, None, {"nu2": e, "residue4": v % 4}

    return pred


def _pred_z2z2(v):
    if v % 4 == 1:
        return True, "4m+1", {"residue4": 1}
    e, m = _nu(v, 2)
    if e == 4:
        return True, "2^4(2m+1)", {"nu2": e, "cofactor": m}
    if e >= 6:
        return True, "2^6m", {"nu2": e, "cofactor": m}
    return False, None, {"nu2": e, "residue4": v % 4}


def _pred_z4z2(v):
    if v % 8 == 1:
        return True, "8m+1", {"residue8": 1}
    e, m = _nu(v, 2)
    if e >= 8:
        return True, "2^8m", {"nu2": e, "cofactor": m}
    return False, None, {"nu2": e, "residue8": v % 8}


def _pred_q8(v):
    if v % 8 == 1:
        return True, "8m+1", {"residue8": 1}
    e, m = _nu(v, 2)
    if e >= 8:
        return True, "2^8m", {"nu2": e, "cofactor": m}
    if v % 8 == 5:
        fac = _odd_factor(v)
        for p, ex in fac.prime_powers:
            if p % 4 == 3 and ex >= 2:
                return True, "(8m-3)p^2", {"p": p, "m": (v // (p * p) + 3) // 8}
    return False, None, {"nu2": e, "residue8": v % 8}


def _pred_z2cubed(v):
    if v % 8 == 1:
        return True, "8m+1", {"residue8": 1}
    e, m = _nu(v, 2)
    if e == 8 and m % 4 == 1:
        return True, "2^8(4m+1)", {"nu2": e, "cofactor": m}
    if e >= 12:
        return True, "2^12m", {"nu2": e, "cofactor": m}
    return False, None, {"nu2": e, "residue8": v % 8}


def _pred_z3z3(v):
    r = v % 9
    if r in (1, 8):
        return True, "9m+-1", {"residue9": r}
    e, m = _nu(v, 3)
    if e >= 6:
        return True, "3^6m", {"nu3": e, "cofactor": m}
    return False, None, {"nu3": e, "residue9": r}


def _pred_a4(v):
    a, rest = _nu(v, 2)
    b, m = _nu(rest, 3)
    params = {"nu2": a, "nu3": b, "cofactor": m}
    if a == 0:
        if v % 4 == 1 and b != 1:
            return True, "odd:4m+1", params
        return False, None, {**params, "residue4": v % 4}
    if (a == 4 or a >= 8) and (b == 0 or b >= 2):
        return True, "even:2^a3^b", params
    return False, None, params


def _pred_d12(v):
    a, rest = _nu(v, 2)
    b, m = _nu(rest, 3)
    params = {"nu2": a, "nu3": b, "cofactor": m}
    if a == 0:
        if v % 4 == 1 and (b == 0 or b >= 3):
            return True, "odd:4m+1", params
        return False, None, {**params, "residue4": v % 4}
    if (a == 4 or a >= 6) and (b == 0 or b >= 3):
        return True, "even:2^a3^b", params
    return False, None, params


def _q12_k_clause(fac: Factorization):
    p = _has_prime_div(fac, 5)
    if p is not None:
        return "p5", p
    p = _has_prime_div(fac, 11, min_power=2)
    if p is not None:
        return "p11^2", p
    return None


def _pred_q12(v):
    a, rest = _nu(v, 2)
    b, m = _nu(rest, 3)
    params = {"nu2": a, "nu3": b, "cofactor": m}
    if (a in (0, 4) or a >= 6) and (b == 0 or b >= 3):
        return True, "2^a3^b*m6", params
    if a == 5:
        if b == 4 or b >= 6:
            return True, "2^5 3^b*m6", params
        if b in (0, 3, 5):
            hit = _q12_k_clause(_odd_factor(m))
            if hit is not None:
                kind, p = hit
                return True, f"2^5 3^b*m6*k[{kind}]", {**params, "p": p}
    return False, None, params


def _pred_z12(v):
    a, rest = _nu(v, 2)
    b, m = _nu(rest, 3)
    params = {"nu2": a, "nu3": b, "cofactor": m}
    if a == 0:
        if b == 0:
            return True, "odd:m6", params
        if b == 1:
            return False, None, params
        if b >= 3:
            return True, "odd:27m2", params
        fac = _odd_factor(m)
        p = (
            _has_prime_div(fac, 5)
            or _has_prime_div(fac, 7)
            or _p1_prime_div(fac)
        )
        if p is not None:
            return True, "odd:9*m6*p", {**params, "p": p}
        return False, None, params
    if b >= 1:
        if a >= 4 and b >= 2:
            return True, "even:2^4 3^2 m", params
        return False, None, params
    if a == 4 or a >= 6:
        return True, "even:2^a*m", params
    if a == 5:
        fac = _odd_factor(m)
        p = (
            _has_prime_div(fac, 5)
            or _has_prime_div(fac, 7)
            or _p1_prime_div(fac)
        )
        if p is not None:
            return True, "even:2^5*m6*p", {**params, "p": p}
    return False, None, params


def _pred_z6z2(v):
    a, rest = _nu(v, 2)
    b, w = _nu(rest, 3)
    params = {"nu2": a, "nu3": b, "cofactor": w}
    if b == 1:
        return False, None, params
    if b >= 3:
        if a == 0:
            if v % 4 == 1:
                return True, "27|v:odd 4m-1 shape", params
            return False, None, {**params, "residue4": v % 4}
        if a == 4 or a >= 6:
            return True, "27|v:even", params
        return False, None, params
    if b == 2:
        if a in (1, 2, 3, 5):
            return False, None, params
        if a == 0 and v % 4 != 1:
            return False, None, {**params, "residue4": v % 4}
        fac = _odd_factor(w)
        p = _has_prime_div(fac, 7)
        if p is not None:
            return True, "9|v:p=7mod12", {**params, "p": p}
        if a == 0 or a == 4:
            return False, None, params
        if a in (8, 10) and w % 4 == 3:
            return True, f"9|v:2^{a}(4m-1)", params
        if a == 12 or a >= 14:
            return True, f"9|v:2^{a}", params
        return False, None, params
    # b == 0
    if a == 0:
        r = v % 12
        if r == 1:
            return True, "12m+1", {**params, "residue12": 1}
        if r == 5:
            hit = _k_divisor(_odd_factor(w))
            if hit is not None:
                kind, ps = hit
                return True, f"(12m+5)k[{kind}]", {**params, "k_primes": ps}
        return False, None, {**params, "residue12": r}
    if a == 4:
        u = w  # odd, coprime to 3
        if u % 6 == 1:
            return True, "2^4(6m+1)", params
        hit = _k_divisor(_odd_factor(u))
        if hit is not None:
            kind, ps = hit
            return True, f"-2^4(6m+1)k[{kind}]", {**params, "k_primes": ps}
        return False, None, params
    if a == 5 or a in (1, 2, 3):
        return False, None, params
    # a >= 6
    eps = (w * (-1) ** a) % 3
    if eps == 1:
        return True, "2^6(3m+1)", params
    if a == 12 or a >= 14:
        return True, f"-2^{min(a, 14)}-family", params
    if a in (8, 10):
        if w % 12 == 5:
            return True, f"2^{a}(12m+5)", params
        if w % 12 == 11:
            fac = _odd_factor(w)
            p = _has_prime_div(fac, 7)
            if p is not None:
                return True, f"2^{a}(12m+5)p", {**params, "p": p}
            hit = _k_divisor(fac)
            if hit is not None:
                kind, ps = hit
                return True, f"-2^6(3m+1)k[{kind}]", {**params, "k_primes": ps}
            return False, None, params
    hit = _k_divisor(_odd_factor(w))
    if hit is not None:
        kind, ps = hit
        return True, f"-2^6(3m+1)k[{kind}]", {**params, "k_primes": ps}
    return False, None, params


@dataclass(frozen=True)
class CatalogEntry:
    spec: GroupSpec
    predicate_id: str
    description: str


def _build_catalog():
    entries: dict[GroupSpec, tuple[str, str, object]] = {}

    def add(spec, pid, desc, fn):
        entries[spec] = (pid, desc, fn)

    add(cyclic(1), "Z1", "every integer", _pred_trivial)
    for p in (2, 3, 5, 7, 11, 13):
        add(cyclic(p), f"Z{p}",
            f"values with {p}-adic valuation 0 or >= 2",
            _pred_nu_not_one(p))
    add(cyclic(4), "Z4", "odd values, or 2-adic valuation >= 4",
        _pred_power_window(2, 4))
    add(cyclic(8), "Z8", "odd values, or 2-adic valuation >= 5",
        _pred_power_window(2, 5))
    add(cyclic(9), "Z9", "values coprime to 3, or 3-adic valuation >= 3",
        _pred_power_window(3, 3))
    for p in (3, 5, 7):
        add(cyclic(2 * p), f"Z{2 * p}",
            f"2-adic valuation != 1 and {p}-adic valuation != 1",
            _pred_two_valuations(2, p,
                                 lambda a: a != 1,
                                 lambda b: b != 1))
    add(cyclic(12), "Z12", "split by parity and 3-adic valuation", _pred_z12)

    add(abelian_product(2, 2), "Z2xZ2", "4m+1, 2^4(2m+1), 2^6m", _pred_z2z2)
    add(dihedral(4), "Z2xZ2", "alias: D4 is Z2xZ2", _pred_z2z2)
    add(abelian_product(4, 2), "Z4xZ2", "8m+1 and 2^8m", _pred_z4z2)
    add(abelian_product(2, 2, 2), "Z2^3",
        "8m+1, 2^8(4m+1), 2^12m", _pred_z2cubed)
    add(abelian_product(3, 3), "Z3xZ3", "9m+-1 and 3^6m", _pred_z3z3)
    add(abelian_product(6, 2), "Z6xZ2",
        "split by 3-adic valuation with prime-class clauses", _pred_z6z2)

    for p in (3, 5, 7):
        add(dihedral(2 * p), f"D{2 * p}",
            f"2-adic valuation != 1, {p}-adic valuation 0 or >= 3",
            _pred_two_valuations(2, p,
                                 lambda a: a != 1,
                                 lambda b: b == 0 or b >= 3))
    add(dihedral(8), "D8", "4m+1 and 2^8m", _pred_mod4_or_power(8))
    add(dihedral(12), "D12", "odd 4m+1 with nu3 in {0, >=3}; even 2^a 3^b",
        _pred_d12)
    add(dihedral(16), "D16", "4m+1 and 2^10m", _pred_mod4_or_power(10))
    add(dihedral(18), "D18",
        "2-adic valuation != 1, 3-adic valuation 0 or >= 5",
        _pred_two_valuations(2, 3,
                             lambda a: a != 1,
                             lambda b: b == 0 or b >= 5))

    add(dicyclic(8), "Q8", "8m+1, 2^8m, and (8m-3)p^2 for p = 3 mod 4",
        _pred_q8)
    add(dicyclic(12), "Q12",
        "2^a 3^b m6 windows with prime-5-mod-12 clauses", _pred_q12)
    add(alternating4(), "A4", "odd 4m+1 with nu3 != 1; even 2^a 3^b", _pred_a4)
    return entries


_CATALOG = _build_catalog()

CATALOG: tuple[CatalogEntry, ...] = tuple(
    CatalogEntry(spec, pid, desc) for spec, (pid, desc, _) in _CATALOG.items()
)


def catalog_specs() -> tuple[GroupSpec, ...]:
    return tuple(_CATALOG.keys())


def member(spec: GroupSpec, v: int) -> MembershipCertificate:
    """Decide v in S(G) with a certificate naming the matched branch.

    Raises UnsupportedGroup for groups without a characterized set, and
    UndecidableAtScale when the verdict needs factorization past the cap.
    """
    entry = _CATALOG.get(spec)
    if entry is None:
        raise UnsupportedGroup(f"no characterized value set for {spec}")
    if v == 0:
        return MembershipCertificate(True, "zero-vector", {})
    _, _, fn = entry
    verdict, branch, params = fn(v)
    return MembershipCertificate(verdict, branch, params)


def lind_lehmer_constant(spec: GroupSpec) -> int:
    """Smallest |s| >= 2 with s (or -s) in S(G), scanned upward."""
    if spec not in _CATALOG:
        raise UnsupportedGroup(f"no characterized value set for {spec}")
    s = 2
    while True:
        if member(spec, s).verdict or member(spec, -s).verdict:
            return s
        s += 1


def set_window(spec: GroupSpec, bound: int) -> list[int]:
    """S(G) intersected with [-bound, bound], from the predicate."""
    if bound < 0 or bound > 10**6:
        raise ValueError("bound must lie in [0, 10^6]")
    return [v for v in range(-bound, bound + 1) if member(spec, v).verdict]
