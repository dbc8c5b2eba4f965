"""Local congruence densities and the limiting-measure integrals.

Residue-level counts over Z/64 and Z/243 (CRT-split, cached) feed the
coefficient functions and the box integrals of the limiting measures.  For
primes l >= 5 the carefree survivor set is "at most one coordinate divisible
by l" (the closed-form convention; the strict squarefree counterpart is also
computed since it is what actual sixth-power-free tuples satisfy).

Measure integrals come in variants:
  stated   -- the closed-form limit constant in its stated, non-density
              normalisation;
  volume   -- the volume-based form with the count normalised as a density
              (n_{i,j}/15552^3 instead of /6^6);
  discrete -- pair-based asymptotics with a discrete a3-sum (the form the
              exact lattice counts actually follow; see notes in the repo
              README about the 3d count lemma).
Each local flavor is 'loose' (mod-l^2 closed forms) or 'strict' (true local
densities of squarefree pairwise-coprime tuples).
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .field import factorize, is_prime
from .geometry import Box3
from .types import SexticType, a_case, b_case

Fr = Fraction


class InvalidPair(ValueError):
    pass


# ---------------------------------------------------------------------------
# Primes
# ---------------------------------------------------------------------------

def primes_up_to(n: int) -> np.ndarray:
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


# ---------------------------------------------------------------------------
# Omega_l for l >= 5
# ---------------------------------------------------------------------------

def omega_member(a: tuple[int, ...], l: int) -> bool:
    """At most one coordinate divisible by l."""
    return sum(1 for x in a if x % l == 0) <= 1


def omega_count(l: int) -> int:
    """(l^2-l)^5 + 5 l (l^2-l)^4 = l^10 (1-1/l)^4 (1+4/l)."""
    u = l * l - l
    return u ** 5 + 5 * l * u ** 4


def omega_count_exhaustive(l: int) -> int:
    """Full loop over (Z/l^2)^5 of the membership predicate."""
    div = (np.arange(l * l) % l == 0).astype(np.int8)
    s = div
    for _ in range(4):
        s = s[..., None] + div
    return int((s <= 1).sum())


def omega_count_strict(l: int) -> int:
    """At most one coordinate divisible by l AND that one not by l^2."""
    u = l * l - l
    return u ** 5 + 5 * (l - 1) * u ** 4


def local_pair_triple_counts(l: int, fixed_divisible: int, free: int) -> int:
    """Brute-force count over (Z/l^2)^free of survivor tuples with
    `fixed_divisible` of the remaining 5-free coordinates already divisible by l.

    Survivor rule: at most one of the five coordinates divisible by l.
    """
    budget = 1 - fixed_divisible
    if budget < 0:
        return 0
    div = (np.arange(l * l) % l == 0).astype(np.int8)
    s = div
    for _ in range(free - 1):
        s = s[..., None] + div
    return int((s <= budget).sum())


# ---------------------------------------------------------------------------
# Type residue sets and the 2/3-part counters
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _a_set(i: int) -> np.ndarray:
    out = np.zeros(64, dtype=bool)
    for r in range(64):
        if r % 64 != 0:
            out[r] = a_case(r) == i
    return out


@lru_cache(maxsize=None)
def _b_set(j: int) -> np.ndarray:
    out = np.zeros(243, dtype=bool)
    for r in range(243):
        out[r] = b_case(r) == j
    return out


def _free_masks(mod: int, p: int, psq: int) -> tuple[np.ndarray, np.ndarray]:
    """(admissible, divisible-by-p) masks for one residue coordinate.

    Admissible means v_p <= 1 (the pairwise p^2-free conditions force it).
    """
    r = np.arange(mod)
    adm = (r % psq) != 0
    div = (r % p) == 0
    return adm, div


def _count_free(mod: int, p: int, psq: int, powers: tuple[int, ...], const: int,
                in_set: np.ndarray, budget: int) -> int:
    """Count tuples (r_1..r_k) in (Z/mod)^k, each v_p <= 1, at most `budget`
    divisible by p, with const * prod r_i^powers[i] mod `mod` in `in_set`."""
    if budget < 0:
        return 0
    r = np.arange(mod, dtype=np.int64)
    adm, div = _free_masks(mod, p, psq)
    pw = []
    for e in powers:
        v = np.ones(mod, dtype=np.int64)
        base = r.copy()
        k = e
        while k:
            if k & 1:
                v = (v * base) % mod
            base = (base * base) % mod
            k >>= 1
        pw.append(v)
    if len(powers) == 3:
        t01 = np.mod(np.multiply.outer((const * pw[0]) % mod, pw[1]), mod)
        prod = np.mod(np.multiply.outer(t01, pw[2]), mod)
        ok = in_set[prod]
        d = (div[:, None, None].astype(np.int8) + div[None, :, None] + div[None, None, :])
        ok &= d <= budget
        ok &= adm[:, None, None] & adm[None, :, None] & adm[None, None, :]
        return int(ok.sum())
    if len(powers) == 2:
        prod = np.mod(np.multiply.outer((const * pw[0]) % mod, pw[1]), mod)
        ok = in_set[prod]
        d = div[:, None].astype(np.int8) + div[None, :]
        ok &= d <= budget
        ok &= adm[:, None] & adm[None, :]
        return int(ok.sum())
    raise ValueError("2 or 3 free coordinates")


def _fixed_part(mod: int, p: int, psq: int, residues: tuple[int, ...],
                weights: tuple[int, ...]) -> tuple[int, int] | None:
    """(combined constant, number of p-divisible fixed residues); None if inadmissible."""
    const = 1
    ndiv = 0
    for r, e in zip(residues, weights):
        r %= mod
        if r % psq == 0:
            return None
        if r % p == 0:
            ndiv += 1
        const = const * pow(r, e, mod) % mod
    return const, ndiv


def n2_count(i: int, sign: int, a2: int, a4: int) -> int:
    fixed = _fixed_part(64, 2, 4, (a2, a4), (2, 4))
    if fixed is None:
        return 0
    const, ndiv = fixed
    const = const * (sign % 64) % 64
    return _count_free(64, 2, 4, (1, 3, 5), const, _a_set(i), 1 - ndiv)


def n3_count(j: int, sign: int, a2: int, a4: int) -> int:
    fixed = _fixed_part(243, 3, 9, (a2, a4), (2, 4))
    if fixed is None:
        return 0
    const, ndiv = fixed
    const = const * (sign % 243) % 243
    return _count_free(243, 3, 9, (1, 3, 5), const, _b_set(j), 1 - ndiv)


def m2_count(i: int, sign: int, a2: int, a3: int, a4: int) -> int:
    fixed = _fixed_part(64, 2, 4, (a2, a3, a4), (2, 3, 4))
    if fixed is None:
        return 0
    const, ndiv = fixed
    const = const * (sign % 64) % 64
    return _count_free(64, 2, 4, (1, 5), const, _a_set(i), 1 - ndiv)


def m3_count(j: int, sign: int, a2: int, a3: int, a4: int) -> int:
    fixed = _fixed_part(243, 3, 9, (a2, a3, a4), (2, 3, 4))
    if fixed is None:
        return 0
    const, ndiv = fixed
    const = const * (sign % 243) % 243
    return _count_free(243, 3, 9, (1, 5), const, _b_set(j), 1 - ndiv)


# ---------------------------------------------------------------------------
# Cached tables (memory + optional disk)
# ---------------------------------------------------------------------------

_CACHE: dict[tuple, int] = {}
_cache_dir: str | None = os.environ.get("PURESEXTIC_CACHE")
_SCHEMA = 1


def set_cache_dir(path: str | None) -> None:
    global _cache_dir
    _cache_dir = path


def _disk_path(kind: str, case: int, sign: int) -> str | None:
    if not _cache_dir:
        return None
    s = "p" if sign > 0 else "m"
    return os.path.join(_cache_dir, f"{kind}_{case}_{s}.json")


def _load_disk(kind: str, case: int, sign: int, modulus: int) -> dict:
    path = _disk_path(kind, case, sign)
    if not path or not os.path.exists(path):
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema") != _SCHEMA or data.get("modulus") != modulus:
        return {}
    return {tuple(k): v for k, v in data.get("entries", [])}


def _store_disk(kind: str, case: int, sign: int, modulus: int, entries: dict) -> None:
    path = _disk_path(kind, case, sign)
    if not path:
        return
    os.makedirs(_cache_dir, exist_ok=True)
    payload = {"schema": _SCHEMA, "kind": kind, "case": case, "sign": sign,
               "modulus": modulus,
               "entries": sorted([list(k), v] for k, v in entries.items())}
    fd, tmp = tempfile.mkstemp(dir=_cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)  # interrupt-safe: temp then rename


_DISK_SYNCED: set = set()


def _cached(kind: str, case: int, sign: int, modulus: int, key: tuple[int, ...],
            compute) -> int:
    key = tuple(k % modulus for k in key)
    ck = (kind, case, sign, key)
    if ck in _CACHE:
        val = _CACHE[ck]
        if _cache_dir and ck not in _DISK_SYNCED:  # write-through for late-set cache dirs
            disk = _load_disk(kind, case, sign, modulus)
            if key not in disk:
                disk[key] = val
                _store_disk(kind, case, sign, modulus, disk)
            _DISK_SYNCED.add(ck)
        return val
    disk = _load_disk(kind, case, sign, modulus)
    if key in disk:
        val = disk[key]
    else:
        val = compute()
        disk[key] = val
        _store_disk(kind, case, sign, modulus, disk)
    _CACHE[ck] = val
    if _cache_dir:
        _DISK_SYNCED.add(ck)
    return val


def n_table(t: SexticType, sign: int, a2: int, a4: int) -> int:
    """#{(a1bar, a3bar, a5bar) in (Z/15552)^3} satisfying the survivor and Type
    conditions, as a product of the mod-64 and mod-243 counts (cached)."""
    from .field import is_squarefree
    if math.gcd(a2, a4) != 1 or not (is_squarefree(a2) and is_squarefree(a4)):
        raise InvalidPair(f"a2={a2}, a4={a4} must be coprime squarefree")
    c2 = _cached("n2", t.i, sign, 64, (a2, a4), lambda: n2_count(t.i, sign, a2, a4))
    c3 = _cached("n3", t.j, sign, 243, (a2, a4), lambda: n3_count(t.j, sign, a2, a4))
    return c2 * c3


def m_table(t: SexticType, sign: int, a2: int, a3: int, a4: int) -> int:
    """#{(a1bar, a5bar) in (Z/15552)^2} survivor pairs for fixed (a2, a3, a4)."""
    c2 = _cached("m2", t.i, sign, 64, (a2, a3, a4),
                 lambda: m2_count(t.i, sign, a2, a3, a4))
    c3 = _cached("m3", t.j, sign, 243, (a2, a3, a4),
                 lambda: m3_count(t.j, sign, a2, a3, a4))
    return c2 * c3


# ---------------------------------------------------------------------------
# Direct mod-15552 validation of the CRT factorization
# ---------------------------------------------------------------------------

_M6 = 15552  # 2^6 * 3^5


@lru_cache(maxsize=None)
def _type_set_15552(i: int, j: int) -> np.ndarray:
    r = np.arange(_M6)
    return _a_set(i)[r % 64] & _b_set(j)[r % 243]


def n_table_direct(t: SexticType, sign: int, a2: int, a4: int) -> int:
    """n_table recomputed in one sweep over (Z/15552)^3 without the CRT split.

    Iterates a1bar, splits a3bar into (2-div, 3-div) classes, and looks the
    a5bar-count up in precomputed tables g[(e2, e3)][t] = #{a5bar in class
    (e2, e3) : t * a5bar^5 in the Type set}.  A few seconds per key.
    """
    mod = _M6
    in_set = _type_set_15552(t.i, t.j)
    fixed2 = _fixed_part(64, 2, 4, (a2, a4), (2, 4))
    fixed3 = _fixed_part(243, 3, 9, (a2, a4), (2, 4))
    if fixed2 is None or fixed3 is None:
        return 0
    budget2, budget3 = 1 - fixed2[1], 1 - fixed3[1]
    const = (sign * pow(a2, 2, mod) * pow(a4, 4, mod)) % mod
    r = np.arange(mod, dtype=np.int64)
    p5 = np.array([pow(int(x), 5, mod) for x in range(mod)], dtype=np.int64)
    p3 = np.array([pow(int(x), 3, mod) for x in range(mod)], dtype=np.int64)
    adm = ((r % 4) != 0) & ((r % 9) != 0)
    d2 = (r % 2 == 0)
    d3 = (r % 3 == 0)
    classes = {(c2, c3): np.flatnonzero(adm & (d2 == bool(c2)) & (d3 == bool(c3)))
               for c2 in (0, 1) for c3 in (0, 1)}
    ts = np.arange(mod, dtype=np.int64)
    g = {}
    for cls, members in classes.items():
        acc = np.zeros(mod, dtype=np.int64)
        for r5 in members:
            acc += in_set[(ts * int(p5[r5])) % mod]
        g[cls] = acc
    # gsum[(me2, me3)] = a5bar-count table when classes up to (me2, me3) are allowed
    gsum = {}
    for me2 in (0, 1):
        for me3 in (0, 1):
            acc = g[(0, 0)].copy()
            if me2:
                acc += g[(1, 0)]
            if me3:
                acc += g[(0, 1)]
            if me2 and me3:
                acc += g[(1, 1)]
            gsum[(me2, me3)] = acc
    p3_class = {cls: p3[members] for cls, members in classes.items()}
    total = 0
    for r1 in np.flatnonzero(adm):
        b2 = budget2 - int(d2[r1])
        b3 = budget3 - int(d3[r1])
        if b2 < 0 or b3 < 0:
            continue
        k = const * int(r1) % mod
        for (c2, c3), pvals in p3_class.items():
            if c2 > b2 or c3 > b3:
                continue
            sel = gsum[(min(b2 - c2, 1), min(b3 - c3, 1))]
            tv = (k * pvals) % mod
            total += int(sel[tv].sum())
    return total


# ---------------------------------------------------------------------------
# Euler products over primes l != 2, 3
# ---------------------------------------------------------------------------

_EULER_KINDS = {
    # kind -> (log-factor fn on prime array, |x_l| bound coefficient c with x <= c/l^2)
    "carefree": (lambda l: np.log1p(-3.0 / l ** 2 + 2.0 / l ** 3), 3.0),
    "basic": (lambda l: np.log1p(-1.0 / l ** 2), 1.0),
    "carefree_strict": (lambda l: np.log1p(-6.0 / l ** 2 + 8.0 / l ** 3 - 3.0 / l ** 4), 6.0),
}


def euler_product(kind: str, prime_bound: int = 10 ** 6,
                  exclude: tuple[int, ...] = (2, 3)) -> tuple[float, float]:
    """(truncated product over primes <= prime_bound, rigorous tail bound).

    The true value lies in [value * exp(-tail), value]: each omitted factor is
    1 - x_l with 0 < x_l <= c/l^2, and sum_{n > B} (c/n^2 + c^2/n^4) < c/B + c^2/(3 B^3).
    """
    fn, c = _EULER_KINDS[kind]
    ps = primes_up_to(prime_bound)
    ps = ps[~np.isin(ps, exclude)]
    val = float(np.exp(fn(ps.astype(np.float64)).sum()))
    b = float(prime_bound)
    tail = c / b + c * c / (3 * b ** 3)
    return val, tail


# ---------------------------------------------------------------------------
# Coefficient functions alpha(n), beta(m, n)
# ---------------------------------------------------------------------------

def _squarefree_small(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values()) if n > 1 else n == 1


def alpha_terms(t: SexticType, sign: int, n: int) -> list[tuple[Fraction, int]]:
    """alpha(n) as exact terms [(coef, n1)] with value sum coef * n1^(-3/5);
    zero terms list when n is not squarefree."""
    if n < 1 or not _squarefree_small(n):
        return []
    w = Fr(1)
    for l in factorize(n):
        if l not in (2, 3):
            w *= Fr(l - 1, l + 2)
    out = []
    for n1 in sorted(_divisors(n)):
        n2 = n // n1
        cnt = n_table(t, sign, n1, n2)
        if cnt:
            out.append((w * Fr(cnt, n2), n1))
    return out


def alpha_value(t: SexticType, sign: int, n: int) -> float:
    return float(sum(float(c) * n1 ** -0.6 for c, n1 in alpha_terms(t, sign, n)))


def beta_value(t: SexticType, sign: int, m: int, n: int,
               stated_weight: bool = False) -> Fraction:
    """beta(m, n): the proof/definition weight (l-1)/(l+1) by default; pass
    stated_weight=True for the alternative (l-1)/(l+2) weighting."""
    if m < 1 or n < 1 or not _squarefree_small(m * n):
        return Fr(0)
    w = Fr(1)
    for l in factorize(m * n):
        if l not in (2, 3):
            w *= Fr(l - 1, l + 2) if stated_weight else Fr(l - 1, l + 1)
    total = Fr(0)
    for n1 in sorted(_divisors(n)):
        n2 = n // n1
        total += Fr(m_table(t, sign, n1, m, n2), n ** 4 * m ** 3)
    return w * total


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return out


# ---------------------------------------------------------------------------
# Box integrals of the limiting measures
# ---------------------------------------------------------------------------

_MOD3 = Fr(15552) ** 3
_MOD2 = Fr(15552) ** 2


def _sf_pairs_upto(lo: int, hi: int):
    """(a2, a4) with a2*a4 in [lo, hi], a2*a4 squarefree (hence coprime parts)."""
    from .field import is_squarefree
    for n in range(max(lo, 1), hi + 1):
        if not is_squarefree(n):
            continue
        for a2 in _divisors(n):
            yield a2, n // a2


def _weight(n_product: int, num, den) -> float:
    """prod over primes l >= 5 dividing n_product of (l + num)/(l + den)."""
    w = 1.0
    for l in factorize(n_product):
        if l not in (2, 3):
            w *= (l + num) / (l + den)
    return w


def mu_box_stated(t: SexticType, sign: int, box: Box3,
                 prime_bound: int = 10 ** 6) -> dict:
    """The stated closed-form constant: 25/124416 * prod(1-3/l^2+2/l^3)
    * (R1^(1/15)-R1'^(1/15)) * (R2'^(-2/15)-R2^(-2/15)) * sum alpha-style."""
    ep, tail = euler_product("carefree", prime_bound)
    i1 = float(box.r1) ** (1 / 15) - float(box.r1p) ** (1 / 15)
    i2 = float(box.r2p) ** (-2 / 15) - float(box.r2) ** (-2 / 15)
    s3 = 0.0
    for n in range(int(box.r3p), int(box.r3) + 1):
        if _squarefree_small(n):
            s3 += alpha_value(t, sign, n)
    val = float(Fr(25, 124416)) * ep * i1 * i2 * s3
    return {"value": val, "euler_tail": tail}


def mu_box_volume(t: SexticType, sign: int, box: Box3, strict: bool = False,
                  prime_bound: int = 10 ** 6) -> dict:
    """Volume-based form with the density normalisation n_{i,j}/15552^3.

    loose: local factors (1-3/l^2+2/l^3), weight (l-1)/(l+2) on l | a2 a4;
    strict: (1-1/l)^3 (1+3/l), weight l/(l+3) -- the true triple densities.
    """
    kind = "carefree_strict" if strict else "carefree"
    ep, tail = euler_product(kind, prime_bound)
    i1 = float(box.r1) ** (1 / 15) - float(box.r1p) ** (1 / 15)
    i2 = float(box.r2p) ** (-2 / 15) - float(box.r2) ** (-2 / 15)
    s = 0.0
    for a2, a4 in _sf_pairs_upto(int(box.r3p), int(box.r3)):
        cnt = n_table(t, sign, a2, a4)
        if not cnt:
            continue
        w = _weight(a2 * a4, 0, 3) if strict else _weight(a2 * a4, -1, 2)
        s += float(Fr(cnt) / _MOD3) * w / (a2 ** 0.6 * a4)
    val = (75 / 8) * ep * i1 * i2 * s
    return {"value": val, "euler_tail": tail}


def _mu_log_width(box: Box3, a2: int, a4: int, a3: int) -> float:
    """log(beta/alpha)_+ for the (a1, a5)-wedge cut out by the C-box at (a2, a4, a3)."""
    l1p = math.sqrt(float(box.r1p) * a2 / a4)
    l1 = math.sqrt(float(box.r1) * a2 / a4)
    lo = max(l1p, float(box.r2p) * a3 ** 3 * a4 / a2)
    hi = min(l1, float(box.r2) * a3 ** 3 * a4 / a2)
    return math.log(hi / lo) if hi > lo else 0.0


def mu_box_discrete(t: SexticType, sign: int, box: Box3, strict: bool = True,
                    prime_bound: int = 10 ** 6) -> dict:
    """Pair-based asymptotic constant lim #C_cf / N^(1/5) (discrete a3-sum).

    This is the form exact lattice counting follows; 'strict' uses the true
    pair densities of squarefree coprime tuples (note the strict pair density
    (1-1/l)^2(1+2/l) equals the loose triple density 1-3/l^2+2/l^3).
    """
    from .field import is_squarefree
    kind = "carefree" if strict else "basic"
    ep, tail = euler_product(kind, prime_bound)
    s = 0.0
    for a2, a4 in _sf_pairs_upto(int(box.r3p), int(box.r3)):
        a3 = 0
        while True:
            a3 += 1
            # beta > alpha needs R2' a3^3 a4/a2 < sqrt(R1 a2/a4), i.e.
            # a3^6 R2'^2 a4^3 < R1 a2^3
            if Fr(a3) ** 6 * box.r2p ** 2 * a4 ** 3 >= box.r1 * a2 ** 3:
                break
            if not is_squarefree(a3) or math.gcd(a3, a2 * a4) != 1:
                continue
            width = _mu_log_width(box, a2, a4, a3)
            if width <= 0:
                continue
            cnt = m_table(t, sign, a2, a3, a4)
            if not cnt:
                continue
            w = _weight(a2 * a3 * a4, 0, 2) if strict else _weight(a2 * a3 * a4, -1, 1)
            s += float(Fr(cnt) / _MOD2) * w * width / (a2 ** 0.8 * a3 ** 0.6 * a4 ** 0.8)
    val = 0.5 * ep * s
    return {"value": val, "euler_tail": tail}


def nu_box_linear(t: SexticType, sign: int, box: Box3, stated_weight: bool = False,
                 prime_bound: int = 10 ** 6) -> dict:
    """The stated linear-in-N closed form for the ratio-window family.

    sum of beta(a3, a2*a4) over the discrete box coordinates; default weight
    (l-1)/(l+1) per the beta definition and the proof, stated_weight=True for
    the alternative (l-1)/(l+2) weighting.
    """
    ep, tail = euler_product("basic", prime_bound)
    s = Fr(0)
    for n in range(int(box.r2p), int(box.r2) + 1):
        for m in range(int(box.r3p), int(box.r3) + 1):
            s += beta_value(t, sign, m, n, stated_weight=stated_weight)
    val = float(Fr(1, 2592)) * math.log(float(box.r1) / float(box.r1p)) * ep * float(s)
    return {"value": val, "euler_tail": tail}


def nu_box_discrete(t: SexticType, sign: int, box: Box3, strict: bool = True,
                    prime_bound: int = 10 ** 6) -> dict:
    """Pair-based asymptotic constant lim #T_cf / N^(1/5) for T-boxes."""
    from .field import is_squarefree
    kind = "carefree" if strict else "basic"
    ep, tail = euler_product(kind, prime_bound)
    s = 0.0
    for a2, a4 in _sf_pairs_upto(int(box.r2p), int(box.r2)):
        for a3 in range(int(box.r3p), int(box.r3) + 1):
            if not is_squarefree(a3) or math.gcd(a3, a2 * a4) != 1:
                continue
            cnt = m_table(t, sign, a2, a3, a4)
            if not cnt:
                continue
            w = _weight(a2 * a3 * a4, 0, 2) if strict else _weight(a2 * a3 * a4, -1, 1)
            s += float(Fr(cnt) / _MOD2) * w / (a2 ** 0.8 * a3 ** 0.6 * a4 ** 0.8)
    val = 0.5 * math.log(float(box.r1) / float(box.r1p)) * ep * s
    return {"value": val, "euler_tail": tail}


def integrate_measure(kind: str, t: SexticType, sign: int, box: Box3,
                      prime_bound: int = 10 ** 6) -> dict:
    """All prediction variants for one family and box.

    kind 'mu' (C-family, lambda windows) or 'nu' (T-family, ratio windows).
    """
    if kind == "mu":
        return {
            "stated": mu_box_stated(t, sign, box, prime_bound),
            "volume_loose": mu_box_volume(t, sign, box, False, prime_bound),
            "volume_strict": mu_box_volume(t, sign, box, True, prime_bound),
            "discrete_loose": mu_box_discrete(t, sign, box, False, prime_bound),
            "discrete_strict": mu_box_discrete(t, sign, box, True, prime_bound),
        }
    if kind == "nu":
        return {
            "linear_stated": nu_box_linear(t, sign, box, True, prime_bound),
            "linear_derived": nu_box_linear(t, sign, box, False, prime_bound),
            "discrete_loose": nu_box_discrete(t, sign, box, False, prime_bound),
            "discrete_strict": nu_box_discrete(t, sign, box, True, prime_bound),
        }
    raise ValueError("kind must be 'mu' or 'nu'")
