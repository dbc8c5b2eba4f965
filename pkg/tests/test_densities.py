import math
from fractions import Fraction as Fr

import pytest

from puresextic import densities as D
from puresextic.geometry import Box3
from puresextic.types import SexticType


def test_omega_count_closed_form_l5():
    assert D.omega_count(5) == 7_200_000
    assert D.omega_count_exhaustive(5) == 7_200_000


def test_omega_closed_form_identity():
    for l in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
              67, 71, 73, 79, 83, 89, 97):
        u = l * l - l
        assert u ** 5 + 5 * l * u ** 4 == l ** 5 * (l - 1) ** 4 * (l + 4)


def test_omega_member():
    assert D.omega_member((1, 2, 3, 4, 10), 5)
    assert not D.omega_member((5, 2, 3, 4, 10), 5)
    assert D.omega_member((25, 2, 3, 4, 1), 5)  # loose convention: 25 counts as one slot


def test_strict_vs_loose():
    assert D.omega_count_strict(5) == 6_400_000
    assert D.omega_count_strict(5) < D.omega_count(5)


@pytest.mark.parametrize("l", [5, 7, 11, 13])
def test_ratio_laws(l):
    """(l-1)/(l+2) for three free coordinates, (l-1)/(l+1) for two."""
    c30 = D.local_pair_triple_counts(l, 0, 3)
    c31 = D.local_pair_triple_counts(l, 1, 3)
    assert Fr(c31, c30) == Fr(l - 1, l + 2)
    c20 = D.local_pair_triple_counts(l, 0, 2)
    c21 = D.local_pair_triple_counts(l, 1, 2)
    assert Fr(c21, c20) == Fr(l - 1, l + 1)


def test_n_table_residue_key_soundness():
    """Counts depend only on the residues of (a2, a4) mod 15552."""
    t = SexticType(1, 1)
    assert D.n2_count(1, 1, 1, 1) == D.n2_count(1, 1, 1 + 64, 1 + 64 * 3)
    assert D.n3_count(1, 1, 1, 1) == D.n3_count(1, 1, 1 + 243, 1 + 243 * 2)
    assert D.m2_count(1, 1, 1, 1, 2) == D.m2_count(1, 1, 65, 1, 2 + 128)


def test_n_table_pair_validation():
    with pytest.raises(D.InvalidPair):
        D.n_table(SexticType(1, 1), 1, 2, 2)
    with pytest.raises(D.InvalidPair):
        D.n_table(SexticType(1, 1), 1, 4, 1)


def test_n_table_zero_on_bad_residues():
    # 4 | a2*a4 at the residue level kills the count
    assert D.n2_count(1, 1, 4, 1) == 0
    assert D.n3_count(1, 1, 9, 1) == 0


def test_m_table_112_instance():
    """m = 112 = 7 * 2^4 is Type (5,1): the pair (a1bar, a5bar) = (7, 1) with
    (a2, a3, a4) = (1, 1, 2) satisfies the defining conditions."""
    from puresextic.types import classify
    t = SexticType(5, 1)
    assert classify(112) == t
    assert D.m_table(t, 1, 1, 1, 2) > 0
    # membership of the concrete pair: residue product reproduces 112's classes
    m_bar = 7 * 2 ** 4 * 1
    assert D._a_set(5)[m_bar % 64] and D._b_set(1)[m_bar % 243]


def test_crt_direct_one_key():
    t = SexticType(1, 1)
    assert D.n_table_direct(t, 1, 1, 1) == D.n_table(t, 1, 1, 1)


def test_type_marginal_identity():
    """Summing n2 over the A-cases recovers the type-free survivor count mod 64."""
    total = sum(D.n2_count(i, 1, 1, 1) for i in range(1, 6))
    # survivor triples (odd or singly-even coordinates, at most one even)
    odd = 32
    count = odd ** 3 + 3 * 16 * odd ** 2  # 16 residues with v_2 = 1
    assert total == count


def test_euler_basic_closed_form():
    val, tail = D.euler_product("basic", 10 ** 6)
    assert abs(val - 9 / math.pi ** 2) < 1e-6
    assert tail < 2e-6
    # without exclusions the product is 6/pi^2
    val_all, _ = D.euler_product("basic", 10 ** 6, exclude=())
    assert abs(val_all - 6 / math.pi ** 2) < 1e-6


def test_euler_carefree_stability():
    v1, _ = D.euler_product("carefree", 10 ** 5)
    v2, _ = D.euler_product("carefree", 10 ** 6)
    assert abs(v1 - v2) < 1e-5


def test_alpha_examples():
    t = SexticType(1, 1)
    assert D.alpha_terms(t, 1, 12) == []  # not squarefree
    terms1 = D.alpha_terms(t, 1, 1)
    assert len(terms1) == 1 and terms1[0][1] == 1
    assert terms1[0][0] == Fr(D.n_table(t, 1, 1, 1))
    terms5 = D.alpha_terms(t, 1, 5)
    assert {n1 for _, n1 in terms5} == {1, 5}
    for coef, n1 in terms5:
        n2 = 5 // n1
        assert coef == Fr(4, 7) * Fr(D.n_table(t, 1, n1, n2), n2)


def test_beta_zero_not_squarefree():
    t = SexticType(1, 1)
    assert D.beta_value(t, 1, 2, 2) == 0
    assert D.beta_value(t, 1, 4, 1) == 0


def test_measure_prefactor_identity():
    assert Fr(1, 559872) * 15 * Fr(15, 2) == Fr(25, 124416)


def test_measure_additivity_and_monotonicity():
    t = SexticType(1, 1)
    box = Box3(1, 8, Fr(1, 8), 8, 1, 6, kind="C")
    left = Box3(1, 4, Fr(1, 8), 8, 1, 6, kind="C")
    right = Box3(4, 8, Fr(1, 8), 8, 1, 6, kind="C")
    full = D.mu_box_stated(t, 1, box, 10 ** 4)["value"]
    a = D.mu_box_stated(t, 1, left, 10 ** 4)["value"]
    b = D.mu_box_stated(t, 1, right, 10 ** 4)["value"]
    assert abs(full - (a + b)) < 1e-9 * full
    smaller = Box3(1, 8, Fr(1, 8), 8, 1, 3, kind="C")
    assert D.mu_box_discrete(t, 1, smaller, prime_bound=10 ** 4)["value"] <= \
        D.mu_box_discrete(t, 1, box, prime_bound=10 ** 4)["value"]


def test_integrate_measure_variants_present():
    t = SexticType(1, 1)
    box = Box3(1, 8, Fr(1, 8), 8, 1, 2, kind="C")
    out = D.integrate_measure("mu", t, 1, box, 10 ** 4)
    assert set(out) == {"stated", "volume_loose", "volume_strict",
                        "discrete_loose", "discrete_strict"}
    boxt = Box3(1, 4, 1, 2, 1, 2, kind="T")
    outt = D.integrate_measure("nu", t, 1, boxt, 10 ** 4)
    assert set(outt) == {"linear_stated", "linear_derived",
                         "discrete_loose", "discrete_strict"}


def test_marginalization_m_over_a3_recovers_n():
    """Summing the pair counts over all a3-residues recovers the triple count."""
    t = SexticType(2, 2)
    for (a2, a4) in [(1, 1), (1, 2), (5, 1)]:
        s2 = sum(D.m2_count(t.i, 1, a2, r3, a4) for r3 in range(64))
        assert s2 == D.n2_count(t.i, 1, a2, a4)
        s3 = sum(D.m3_count(t.j, 1, a2, r3, a4) for r3 in range(243))
        assert s3 == D.n3_count(t.j, 1, a2, a4)


def test_double_counting_against_independent_grid():
    """Sum over a2-residues of the triple count equals an independent 4d grid count."""
    import numpy as np
    i, sign, a4 = 1, 1, 1
    lhs = sum(D.n2_count(i, sign, r2, a4) for r2 in range(64))
    r = np.arange(64, dtype=np.int64)
    adm = (r % 4) != 0
    div = (r % 2) == 0
    p2 = r ** 2 % 64
    p3 = r ** 3 % 64
    p5 = np.array([pow(int(x), 5, 64) for x in r], dtype=np.int64)
    in_set = D._a_set(i)
    g12 = r[:, None] * p2[None, :] % 64
    g123 = g12[:, :, None] * p3[None, None, :] % 64
    g1235 = g123[:, :, :, None] * p5[None, None, None, :] % 64
    m_bar = (sign % 64) * g1235 % 64 * pow(a4, 4, 64) % 64
    ok = in_set[m_bar]
    d = (div[:, None, None, None].astype(np.int8) + div[None, :, None, None]
         + div[None, None, :, None] + div[None, None, None, :])
    ok &= d + (a4 % 2 == 0) <= 1
    ok &= adm[:, None, None, None] & adm[None, :, None, None] & \
        adm[None, None, :, None] & adm[None, None, None, :]
    assert lhs == int(ok.sum())


def test_omega7_sampled_frequency():
    """Spot-check #Omega_7 = 239600592 by membership frequency on a seeded sample."""
    import numpy as np
    assert D.omega_count(7) == 239_600_592
    rng = np.random.default_rng(0)
    n = 200_000
    tup = rng.integers(0, 49, size=(n, 5))
    member = (np.sum(tup % 7 == 0, axis=1) <= 1)
    freq = member.mean()
    density = 239_600_592 / 49 ** 5
    assert abs(freq - density) < 4 * math.sqrt(density * (1 - density) / n)


def test_measure_empty_box_zero():
    t = SexticType(1, 1)
    degenerate = Box3(2, 2, Fr(1, 8), 8, 1, 6, kind="C")
    assert D.mu_box_stated(t, 1, degenerate, 10 ** 3)["value"] == 0.0
    assert D.mu_box_discrete(t, 1, degenerate, prime_bound=10 ** 3)["value"] == 0.0
