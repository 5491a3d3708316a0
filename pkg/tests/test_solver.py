import math
from fractions import Fraction

import pytest

from logpadic.errors import IndeterminateCase, SlopeTooLarge, Unsolvable
from logpadic.kernels import mul_trunc, omega_coeffs
from logpadic.logseries import LogSeries, Tail, constants, log_power, v_h, v_lower
from logpadic.operators import delta, phi_h
from logpadic.padic import PadicScalar
from logpadic.solver import (
    CrystalVector,
    ToyCrystal,
    a_exponent,
    decompose,
    solve_crystal,
    solve_scalar,
    truncation_order,
)

from conftest import make_rng, random_h_plus_series


def solve_by_recursion(F, lam, h, N=25):
    """Independent oracle (case A only): the coefficientwise forward solve
    Ftilde_k (1 - lam p^k) = F_k + lam * sum_{m<k} omega^m[k] Ftilde_m."""
    p = F.p
    D = F.D
    rows = [[1] + [0] * D]
    om = [0] + omega_coeffs(p)
    for m in range(1, D + 1):
        rows.append(mul_trunc(rows[-1], om, D + 1, p**400))
    one = PadicScalar.from_int(p, 1, 300)
    out = []
    for k in range(D + 1):
        rhs = F.coeffs[k]
        acc = PadicScalar.zero(p)
        for m in range(k):
            w = rows[m][k]
            if w:
                acc = acc + out[m].mul_int(w)
        rhs = rhs + lam * acc
        out.append(rhs * (one - lam.shift(k)).inv())
    return LogSeries(p, h, out, Tail.unknown())


# -- the growth-exponent helper ------------------------------------------------


def test_a_exponent_branches():
    assert a_exponent(3, 1, 3) == 3
    assert a_exponent(1, 3, 3) == Fraction(1, 9)
    for nu in (1, 2, 5):
        assert a_exponent(nu, nu, 5) == 1


def test_truncation_order_monotone_in_precision():
    n1 = truncation_order(10, 1, 3, D=60)
    n2 = truncation_order(30, 1, 3, D=60)
    assert n2 > n1 >= 1


# -- decomposition ---------------------------------------------------------------


def test_decompose_log():
    p = 3
    L = log_power(p, 1, 30, 1)
    F0, deltas = decompose(L, 1)
    assert deltas[0].is_zeroish or deltas[0].is_exact_zero
    assert deltas[1].agrees_with(PadicScalar.from_int(p, 1))
    assert F0.is_zero_mod(25)


def test_decompose_one_plus_x():
    # Delta_i(1+X) = 1 for all i; F_0 = (1+X) - 1 - log(1+X) starts at X^2
    p = 3
    F = LogSeries.binomial_power(p, 1, 10, 1, prec=96)
    F0, deltas = decompose(F, 1)
    assert deltas[0].agrees_with(PadicScalar.from_int(p, 1))
    assert deltas[1].agrees_with(PadicScalar.from_int(p, 1))
    assert F0.coeffs[0].is_exact_zero and F0.coeffs[1].is_exact_zero
    # X^2 coefficient of -log is +1/2
    assert F0.coeffs[2].agrees_with(PadicScalar.from_fraction(p, Fraction(1, 2)))


def test_decompose_high_order_monomial_untouched():
    r = make_rng("decomp-high")
    p, h = 5, 2
    F = random_h_plus_series(r, p, h, 20).mul_x_power(h + 1).truncate(20)
    F0, deltas = decompose(F, h)
    for d in deltas:
        assert d.is_zero_mod(25)
    assert F0.agrees_with(F)


# -- scalar solve: pinned examples ------------------------------------------------


def test_solve_constant_case():
    p = 3
    F = LogSeries.one(p, 0, 8, prec=96)
    lam = PadicScalar.from_int(p, 2, 96)
    Ft, cert = solve_scalar(F, lam, h=0, N=20)
    minus_one = LogSeries.one(p, 0, 8, prec=96).scale(PadicScalar.from_int(p, -1, 96))
    assert Ft.agrees_with(minus_one)
    assert cert.case_tag == "A"


def test_solve_log_eigenvector():
    # phi_H(log) = p log, so Ftilde = (1 - lam p)^{-1} log
    p = 3
    L = log_power(p, 1, 40, 1, prec=128)
    lam = PadicScalar.from_int(p, 2, 128)
    Ft, cert = solve_scalar(L, lam, h=1, N=25)
    w = (PadicScalar.from_int(p, 1, 128) - lam.shift(1)).inv()
    want = L.scale(w)
    for i in range(Ft.D + 1):
        assert (Ft.coeffs[i] - want.coeffs[i]).is_zero_mod(24), i


def test_solve_case_b_log():
    # lam = 1: case B(0); Delta_0(log) = 0, distinguished solution
    # (1-p)^{-1} log plus any constant; ours omits the constant
    p = 3
    L = log_power(p, 1, 40, 1, prec=128)
    lam = PadicScalar.from_int(p, 1, 128)
    Ft, cert = solve_scalar(L, lam, h=1, N=25)
    assert cert.case_tag == "B(0)"
    w = (PadicScalar.from_int(p, 1, 128) - lam.shift(1)).inv()
    want = L.scale(w)
    assert Ft.coeffs[0].is_zero_mod(24)
    for i in range(1, Ft.D + 1):
        assert (Ft.coeffs[i] - want.coeffs[i]).is_zero_mod(24), i


def test_solve_case_b_obstruction():
    p = 3
    F = LogSeries.one(p, 1, 8, prec=96)
    with pytest.raises(Unsolvable):
        solve_scalar(F, PadicScalar.from_int(p, 1, 96), h=1, N=20)


def test_solve_slope_too_large():
    p = 3
    F = LogSeries.one(p, 1, 8, prec=96)
    lam = PadicScalar.from_int(p, 1, 96).shift(-2)  # ord -2 > h = 1
    with pytest.raises(SlopeTooLarge):
        solve_scalar(F, lam, h=1, N=20)


def test_solve_indeterminate_resonance():
    p = 3
    F = LogSeries.one(p, 1, 8, prec=96)
    lam = PadicScalar.from_unit(p, 0, 1 + p**30, 40)
    with pytest.raises(IndeterminateCase):
        solve_scalar(F, lam, h=1, N=25)


# -- scalar solve: properties ------------------------------------------------------


def lam_grid(p):
    return [
        PadicScalar.from_int(p, 2, 160),
        PadicScalar.from_int(p, 1 + p, 160),
    ]


def test_residual_identity_random():
    for p in (3, 5):
        for h in (1, 2):
            r = make_rng(f"solver-resid-{p}-{h}")
            lams = lam_grid(p)
            if h == 2:
                lams.append(PadicScalar.from_int(p, 2, 160).shift(-1))
            for _ in range(4):
                F = random_h_plus_series(r, p, h, 30)
                for lam in lams:
                    Ft, cert = solve_scalar(F, lam, h=h, N=20)
                    R = Ft - phi_h(Ft).scale(lam) - F
                    assert R.is_zero_mod(cert.residual_prec)
                    c = constants(p, h)
                    assert v_h(Ft).value >= c.c_h
                    assert cert.denom_bound >= c.c_h


def test_solution_matches_recursion_oracle():
    r = make_rng("solver-oracle")
    for p in (3, 5):
        F = random_h_plus_series(r, p, 1, 25)
        lam = PadicScalar.from_int(p, 1 + p, 300)
        Ft, _ = solve_scalar(F, lam, h=1, N=22)
        oracle = solve_by_recursion(F, lam, 1)
        for i in range(Ft.D + 1):
            assert (Ft.coeffs[i] - oracle.coeffs[i]).is_zero_mod(20), i


def test_truncation_independence():
    r = make_rng("solver-trunc")
    p, h = 3, 2
    F = random_h_plus_series(r, p, h, 30)
    lam = PadicScalar.from_int(p, 2, 160).shift(-1)
    Ft1, cert = solve_scalar(F, lam, h=h, N=20)
    Ft2, _ = solve_scalar(F, lam, h=h, N=20, n_max=cert.n_max + 3)
    diff = Ft1 - Ft2
    assert diff.is_zero_mod(20)


def test_case_b_kernel_structure():
    # two case-B solutions differ by a multiple of log^j; Delta_i of the
    # difference vanishes for i != j
    p, h = 3, 1
    r = make_rng("solver-kernel")
    F = random_h_plus_series(r, p, h, 30)
    dl = delta(F, 0)
    F = F - LogSeries.one(p, h, 30, prec=160).scale(dl)  # force Delta_0 = 0
    lam = PadicScalar.from_int(p, 1, 160)
    Ft, cert = solve_scalar(F, lam, h=h, N=20)
    assert cert.case_tag == "B(0)"
    a = PadicScalar.from_int(p, 7, 160)
    other = Ft + log_power(p, 0, Ft.D, h).scale(a)
    R = other - phi_h(other).scale(lam) - F
    assert R.is_zero_mod(cert.residual_prec)
    diff = other - Ft
    for i in range(1, 6):
        assert delta(diff, i).is_zero_mod(18)


def test_per_term_valuation_grows_affinely():
    # head v_h of lambda^n phi^n(F_0) >= affine function of n with positive
    # slope (the truncated heads are exact, so the head minimum measures the
    # true per-term growth on degrees <= D)
    p, h = 3, 1
    r = make_rng("solver-affine")
    F = random_h_plus_series(r, p, h, 25)
    F0, _ = decompose(F, h)
    lam = PadicScalar.from_int(p, 1 + p, 200)
    term = F0
    vals = []
    for n in range(8):
        head = LogSeries(p, h, term.coeffs, Tail.zero())
        vals.append(v_h(head).value)
        term = phi_h(term).scale(lam)
    assert vals[-1] >= vals[0] + 4
    assert all(vals[k + 2] >= vals[k] + 1 for k in range(len(vals) - 2))


# -- the crystal wrapper --------------------------------------------------------------


def test_crystal_transport_constant():
    p = 3
    crystal = ToyCrystal("e", PadicScalar.from_int(p, 2, 96))
    xi = CrystalVector("e", LogSeries.one(p, 0, 8, prec=96))
    out, cert = solve_crystal(xi, crystal, h=0, N=20)
    assert out.label == "e"
    minus_one = LogSeries.one(p, 0, 8, prec=96).scale(PadicScalar.from_int(p, -1, 96))
    assert out.series.agrees_with(minus_one)


def test_crystal_denominator_bound():
    r = make_rng("crystal-denom")
    p, h = 3, 1
    crystal = ToyCrystal("e", PadicScalar.from_int(p, 1 + p, 160))
    F = random_h_plus_series(r, p, h, 30)
    out, cert = solve_crystal(F, crystal, h=h, N=20)
    c = constants(p, h)
    assert v_h(out.series).value >= c.c_h
    assert cert.denom_bound >= c.c_h
