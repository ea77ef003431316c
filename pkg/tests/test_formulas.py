import pytest
from fractions import Fraction

from crossdimer.formulas import (
    FactoredCount, HypothesisViolated, NotInteger, alpha_fn, alpha_w,
    beta_fn, beta_w, factor_small, g_fn, phi, phi_value, psi, psi_value,
    q_fn, recurrence_check, reflection_check, tau_fn, thm_TA, thm_TB,
    thm_TR,
)


def test_g_q_examples():
    assert g_fn(9, 8, 2) == 10
    assert g_fn(9, 8, 3) == 7
    for a, b, c in ((4, 4, 3), (7, 3, -3), (2, 5, 3)):
        if a - b + c in (-1, 0, 1):
            assert q_fn(a, b, c) == 0
    assert q_fn(9, 8, 2) == 2


def test_alpha_beta_cases():
    assert alpha_fn(9, 8, 2) == 2 and beta_fn(9, 8, 2) == 3
    assert alpha_fn(5, 8, 4) == 2 and beta_fn(5, 8, 4) == 3
    assert alpha_fn(2, 2, 0) == 1 and beta_fn(2, 2, 0) == 1
    for a in range(10):
        for b in range(10):
            for c in range(10):
                al, be = alpha_fn(a, b, c), beta_fn(a, b, c)
                assert al * be in (1, 6)
                assert (al, be) in ((1, 1), (2, 3), (3, 2))


def test_tau_examples():
    assert tau_fn(4, 3) == 2
    assert tau_fn(1, 1) == 0
    assert tau_fn(2, 2) == 2
    assert tau_fn(1, 4) == 2


def test_phi_psi_examples():
    assert phi_value(1, 9, 8, 2) == 302_500_000_000
    assert psi_value(1, 5, 8, 4) == 48_000_000_000_000


def test_factored_count_negative_exponent():
    fc = phi(2, 0, 2, 0)
    if fc.has_negative:
        assert isinstance(fc.value(), Fraction)
    v = FactoredCount(1, -1).value()
    assert v == Fraction(1, 2)


def test_thm_tr_values():
    assert thm_TR(1, 2).value() == thm_TR(1, 9).value() == 100
    assert thm_TR(2, 4).value() == 10 ** 8 * 11 ** 2
    with pytest.raises(HypothesisViolated):
        thm_TR(2, 3)


def test_thm_ta_tb():
    fc = thm_TA(5, 7, 4, 3)
    assert fc.value() == 1_125_000_000
    fac = factor_small(fc.value())
    assert fac["cofactor"] == 1
    assert factor_small(thm_TB(5, 7, 4, 3).value())["cofactor"] == 1
    with pytest.raises(HypothesisViolated):
        thm_TA(5, 7, 1, 1)


def test_recurrences_small_box():
    fns = [lambda a, b, c, i=i: phi(i, a, b, c).value() for i in (1, 2, 3)]
    fns += [lambda a, b, c, i=i: psi(i, a, b, c).value() for i in (1, 2, 3)]
    for r in ("R1", "R2", "R4"):
        for fn in fns:
            for a in range(0, 9, 2):
                for b in range(0, 9, 2):
                    for c in range(0, 9, 2):
                        assert recurrence_check(r, fn, None, a, b, c)["equal"]


def test_recurrence_r3_r6():
    phi1 = lambda a, b, c: phi(1, a, b, c).value()
    psi1 = lambda a, b, c: psi(1, a, b, c).value()
    for a in range(0, 10):
        for b in range(0, 10):
            assert recurrence_check("R3", phi1, None, a, b, 0)["equal"]
            assert recurrence_check("R3", psi1, None, a, b, 0)["equal"]
    phi2 = lambda a, b, c: phi(2, a, b, c).value()
    phi3 = lambda a, b, c: phi(3, a, b, c).value()
    for a in range(0, 8):
        for b in range(0, 8):
            assert recurrence_check("R6", phi2, phi3, a, b, 0)["equal"]
            assert recurrence_check("R6", phi3, phi2, a, b, 0)["equal"]


def test_recurrence_r5_pairing():
    for i in (1, 2, 3):
        s = lambda a, b, c, i=i: phi(i, a, b, c).value()
        d = lambda a, b, c, i=i: psi(4 - i, a, b, c).value()
        assert recurrence_check("R5", s, d, 9, 8, 2)["equal"]
        assert recurrence_check("R5", d, s, 9, 8, 2)["equal"]


def test_recurrence_requires_pair():
    with pytest.raises(ValueError):
        recurrence_check("R5", lambda *t: 1, None, 1, 1, 1)


def test_reflection_examples():
    assert reflection_check("vertical", 1, 5, 8, 4)
    assert reflection_check("horizontal", 2, 9, 8, 2)
    assert reflection_check("switch", 2, 5, 8, 4)
    flat = ((2, 2, 0), (3, 4, 2), (5, 8, 4), (1, 2, 1))
    tall = ((9, 8, 2), (3, 2, 0), (2, 2, 1))
    for i in (1, 2, 3):
        for t in flat:
            assert reflection_check("vertical", i, *t), ("vertical", i, t)
        for t in tall:
            assert reflection_check("horizontal", i, *t), ("horizontal", i, t)
        for t in flat + tall:
            assert reflection_check("switch", i, *t), ("switch", i, t)


def test_phi1_shift_identity():
    for a in range(0, 12):
        for b in range(0, 12):
            assert phi_value(1, a - 2, b - 2, -1) \
                == phi_value(1, 3 * b - 2 * a, 2 * b - a, 1)


def test_factor_small():
    f = factor_small(12_100_000_000)
    assert (f["exp2"], f["exp5"], f["exp11"], f["cofactor"]) == (8, 8, 2, 1)
    f = factor_small(1)
    assert f["cofactor"] == 1 and f["exp2"] == 0
    f = factor_small(98)
    assert f["exp2"] == 1 and f["cofactor"] == 49
    with pytest.raises(NotInteger):
        factor_small(Fraction(1, 2))
    with pytest.raises(NotInteger):
        factor_small(0)


def test_weighted_prefactors_unit_point():
    for a in range(8):
        for b in range(8):
            for c in range(8):
                assert alpha_w(a, b, c, (1, 1, 1)) == alpha_fn(a, b, c)
                assert beta_w(a, b, c, (1, 1, 1)) == beta_fn(a, b, c)


def test_weighted_prefactor_forms():
    # residue 1 (mod 6): alpha_w = (x + yz)/x, beta_w = (x + 2yz)/yz
    a, b, c = 9, 8, 2
    assert (3 * b + a - c) % 6 == 1
    x, y, z = Fraction(2), Fraction(3), Fraction(5)
    assert alpha_w(a, b, c, (x, y, z)) == (x + y * z) / x
    assert beta_w(a, b, c, (x, y, z)) == (x + 2 * y * z) / (y * z)
