"""Classification of sixth-power-free radicands into the 20 congruence Types.

The A-case is a condition on m mod 64, the B-case on m mod 243 (one B1
sub-condition is usually stated mod 729, but on sixth-power-free
integers it collapses to "m = 0 mod 243", so the pair (m mod 64, m mod 243)
decides).  A flat lookup table keyed on m mod 46656 = 2^6 * 3^6 keeps the hot
enumeration loop branch-free; construction asserts constancy on classes mod
15552 = 2^6 * 3^5.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import is_irreducible_sextic, is_perfect_cube, is_perfect_square, factorize


class UnclassifiableInput(ValueError):
    """No row matches; m is not sixth-power-free (64 | m or 729 | m)."""


@dataclass(frozen=True, order=True)
class SexticType:
    i: int  # A-case, 1..5
    j: int  # B-case, 1..4

    def __post_init__(self):
        if not (1 <= self.i <= 5 and 1 <= self.j <= 4):
            raise ValueError(f"no such type ({self.i},{self.j})")

    def __str__(self) -> str:
        return f"A{self.i},B{self.j}"

    @staticmethod
    def parse(s: str) -> "SexticType":
        s = s.replace("(", "").replace(")", "").replace("A", "").replace("B", "")
        i, j = s.split(",")
        return SexticType(int(i), int(j))


ALL_TYPES = tuple(SexticType(i, j) for i in range(1, 6) for j in range(1, 5))


def a_case(m: int) -> int:
    """A-row from m mod 64 (None-equivalent: raises if 64 | m)."""
    r = m % 64
    if r == 0:
        raise UnclassifiableInput(f"64 | m (m={m} is not sixth-power-free)")
    if r % 2 == 1:
        return 2 if r % 4 == 1 else 1
    if r % 4 == 2:
        return 1
    r16 = r % 16
    if r16 == 4:
        return 2
    if r16 == 12:
        return 3
    if r16 == 8:
        return 1
    # here v_2(r) >= 4, r in {16, 32, 48}
    if r == 16:
        return 4
    if r == 48:
        return 5
    return 1  # r == 32


def b_case(m: int) -> int:
    """B-row from m mod 243.  m = 0 mod 243 forces v_3(m) = 5 on sixth-power-free m: B1."""
    r = m % 243
    r9 = r % 9
    if r9 != 0:
        return 2 if r9 in (1, 8) else 1
    r27 = r % 27
    if r27 in (9, 18):
        return 1
    # 27 | r
    if r in (27, 216):
        return 3
    if r in (54, 108, 135, 189):
        return 4
    if r in (81, 162):
        return 1
    return 1  # r == 0: v_3 = 5 exactly


def classify(m: int) -> SexticType:
    """The unique Type (Ai, Bj) of a sixth-power-free, non-square, non-cube m."""
    if m == 0:
        raise UnclassifiableInput("m = 0")
    return SexticType(a_case(m), b_case(m))


def classify_checked(m: int) -> SexticType:
    """classify() plus full validation of the preconditions on m."""
    if not is_irreducible_sextic(m):
        raise UnclassifiableInput(f"x^6 - ({m}) reducible")
    if any(e >= 6 for e in factorize(m).values()):
        raise UnclassifiableInput(f"m={m} is not sixth-power-free")
    return classify(m)


_MOD = 46656  # 2^6 * 3^6


@lru_cache(maxsize=1)
def lookup_tables() -> tuple[np.ndarray, np.ndarray]:
    """(a_table, b_table) indexed by m mod 46656; 0 marks unclassifiable residues.

    Built from the congruence rules, then checked to be constant on classes
    mod 15552 wherever both representatives admit sixth-power-free integers.
    """
    res = np.arange(_MOD, dtype=np.int64)
    a = np.zeros(_MOD, dtype=np.int8)
    b = np.zeros(_MOD, dtype=np.int8)
    for r in range(_MOD):
        if r % 64 != 0:
            a[r] = a_case(r)
        if r % 729 != 0:
            b[r] = b_case(r)
        elif r % 729 == 0:
            b[r] = 0  # 729 | m cannot happen for sixth-power-free m
    # residues 243, 486 mod 729 carry v_3 = 5 and must be B1 (mod-729 sub-condition)
    assert np.all(b[res % 729 == 243] == 1) and np.all(b[res % 729 == 486] == 1)
    # constancy on classes mod 15552 (where both lifts are admissible)
    for r in range(15552):
        vals_a = {a[r + k * 15552] for k in range(3) if a[r + k * 15552] != 0}
        vals_b = {b[r + k * 15552] for k in range(3) if b[r + k * 15552] != 0}
        assert len(vals_a) <= 1 and len(vals_b) <= 1, f"classification not constant mod 15552 at {r}"
    return a, b


def classify_array(ms: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized classification; returns (a_case, b_case) arrays with 0 = no match."""
    a, b = lookup_tables()
    idx = np.mod(ms, _MOD)
    return a[idx], b[idx]


def type_partition_check(lo: int, hi: int) -> dict:
    """Scan sixth-power-free non-square non-cube m in [lo, hi]; count per-Type matches.

    Every admissible m must match exactly one (Ai, Bj).  Returns a report with
    per-type counts and any violations (there should be none).
    """
    ms = np.arange(lo, hi + 1, dtype=np.int64)
    ms = ms[ms != 0]
    # sixth-power-free: only 2^6 and 3^6 can divide |m| <= ~10^6 candidates at
    # general scale; excluding p^6 | m for every prime p up to |m|^(1/6)
    keep = np.ones(ms.shape, dtype=bool)
    top = int(np.abs(ms).max())
    p = 2
    sixth = []
    while p ** 6 <= top:
        sixth.append(p ** 6)
        p = _next_prime(p)
    for q in sixth:
        keep &= (ms % q) != 0
    ms = ms[keep]
    # exclude perfect squares and cubes
    sq = np.zeros(ms.shape, dtype=bool)
    pos = ms > 0
    r = np.floor(np.sqrt(ms[pos].astype(np.float64))).astype(np.int64)
    for d in (-1, 0, 1):
        sq[pos] |= (r + d) ** 2 == ms[pos]
    cb = np.zeros(ms.shape, dtype=bool)
    rc = np.cbrt(np.abs(ms).astype(np.float64))
    rc = np.floor(rc).astype(np.int64)
    for d in (-1, 0, 1):
        cb |= np.sign(ms) * (rc + d) ** 3 == ms
    ms = ms[~sq & ~cb]
    acase, bcase = classify_array(ms)
    violations = ms[(acase == 0) | (bcase == 0)]
    counts: dict[str, int] = {}
    for t in ALL_TYPES:
        counts[str(t)] = int(np.count_nonzero((acase == t.i) & (bcase == t.j)))
    return {
        "range": [lo, hi],
        "scanned": int(ms.size),
        "violations": [int(v) for v in violations[:20]],
        "violation_count": int(violations.size),
        "counts": counts,
    }


def _next_prime(p: int) -> int:
    from .field import is_prime
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def smallest_m_of_type(t: SexticType, count: int = 25, start: int = 2) -> list[int]:
    """The `count` smallest positive sixth-power-free non-square non-cube m of Type t.

    Deterministic test corpus: scan m = 2, 3, ...
    """
    out = []
    m = start
    while len(out) < count:
        if m % 64 != 0 and a_case(m) == t.i and b_case(m) == t.j:
            if is_irreducible_sextic(m) and all(e < 6 for e in factorize(m).values()):
                out.append(m)
        m += 1
    return out
