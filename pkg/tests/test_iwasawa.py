import math
from fractions import Fraction

import pytest

from logpadic.errors import InvalidInput
from logpadic.iwasawa import (
    CycMeasure,
    big_omega,
    dlog_u,
    embed_measure,
    evaluate_on_grid,
    gamma_to_measure,
    grid_points,
    interpolate_on_grid,
    measure_to_gamma,
    omega_poly,
    omega_v_h,
    point_value,
    reduce_mod_omega,
    teichmuller_residue,
    twist_measure,
    unit_residues,
    zeta_level,
)
from logpadic.logseries import LogSeries, Tail, ls_mul, v_h
from logpadic.operators import d_cw, psi
from logpadic.padic import PadicScalar, ord_int

from conftest import make_rng, random_scalar


def random_measure(r, p, n, prec=128):
    vals = {}
    for a in unit_residues(p, n):
        vals[a] = random_scalar(r, p, zero_rate=0.2, vmin=0, vmax=4, prec=prec)
    return CycMeasure(p, n, vals)


def omega_vh_closed(p, n, j, h):
    """The three-case closed form for v_h(omega_n_j)."""
    if h == 0:
        return 0
    oj = math.inf if j == 0 else ord_int(j, p)
    if oj <= h:
        return n + oj
    return n + h


# -- embedding ---------------------------------------------------------------


def test_embed_dirac_one():
    p, n = 3, 2
    F = embed_measure(CycMeasure.dirac(p, n, 1))
    want = LogSeries.binomial_power(p, 1, F.D, 0, prec=96)
    assert F.agrees_with(want)
    assert F.tail.kind == "zero"


def test_embed_dirac_a():
    p, n = 3, 2
    for a in (2, 5, 8):
        F = embed_measure(CycMeasure.dirac(p, n, a))
        want = LogSeries.binomial_power(p, a, F.D, 0, prec=96)
        assert F.agrees_with(want)


def test_embedding_lands_in_psi_kernel():
    r = make_rng("iwa-psi0")
    for p, n in [(3, 1), (3, 2), (5, 1)]:
        for _ in range(6):
            mu = random_measure(r, p, n)
            F = embed_measure(mu)
            assert psi(F).is_zero_mod(40)


# -- twisting ---------------------------------------------------------------


def test_twist_dirac():
    p, n = 3, 2
    mu = CycMeasure.dirac(p, n, 5)
    t = twist_measure(mu, 1)
    assert t.values[5].agrees_with(PadicScalar.from_int(p, 5))
    for a in unit_residues(p, n):
        if a != 5:
            assert t.values[a].is_exact_zero


def test_twist_zero_and_inverse():
    r = make_rng("iwa-twist")
    p, n = 5, 1
    mu = random_measure(r, p, n)
    assert twist_measure(mu, 0) is mu
    back = twist_measure(twist_measure(mu, 3), -3)
    assert back.agrees_with(mu)


def test_twist_intertwines_dcw():
    # iota(twist(mu, 1)) = D_CW(iota(mu)) coefficientwise
    r = make_rng("iwa-dcw")
    for p, n in [(3, 2), (5, 1)]:
        mu = random_measure(r, p, n)
        lhs = embed_measure(twist_measure(mu, 1))
        rhs = d_cw(embed_measure(mu), 1)
        assert lhs.agrees_with(rhs)


# -- omega polynomials ----------------------------------------------------------


def test_omega_j0_is_binomial():
    p, n = 3, 1
    om = omega_poly(p, n, 0)
    assert om.degree == 3
    assert om.coeffs[0] == 0
    assert om.coeffs[1] % 3**50 == 3
    assert om.coeffs[2] % 3**50 == 3
    assert om.coeffs[3] == 1


def test_omega_vh_example():
    # brute force matches the closed form n + ord(j) on a pinned case
    assert omega_v_h(3, 2, 3, 1) == 3


def test_omega_vh_h0():
    for j in (0, 1, 5):
        assert omega_v_h(3, 2, j, 0) == 0


def test_omega_vh_closed_form_grid():
    for p in (3, 5):
        for n in (0, 1, 2):
            for h in (0, 1, 2):
                for j in range(0, 2 * p * p + 1):
                    got = omega_v_h(p, n, j, h)
                    want = omega_vh_closed(p, n, j, h)
                    assert got == want, (p, n, j, h)


def test_big_omega_valuation_diverges():
    # v_h(Omega) nondecreasing in n and exceeding any fixed bound
    p, h, l, l2 = 3, 1, 0, 2
    prev = -1
    for n in (1, 2, 3, 4):
        coeffs = big_omega(p, n, l, l2)
        vals = [
            ord_int(c, p) + h * __import__("logpadic.logseries", fromlist=["ell"]).ell(p, i)
            for i, c in enumerate(coeffs) if c
        ]
        v = min(vals)
        assert v >= prev
        prev = v
    assert prev >= 4


# -- reduction ----------------------------------------------------------------


def _poly_from_ints(p, ints, prec=96):
    return LogSeries.from_ints(p, 0, ints, Tail.zero(), prec=prec)


def test_reduce_divisor_itself_is_zero():
    p, n = 3, 1
    om = omega_poly(p, n, 0).as_series(0)
    got = reduce_mod_omega(om, n, 0, 0)
    assert got.is_zero_mod(60)


def test_reduce_low_degree_untouched():
    p, n = 3, 1
    Y = _poly_from_ints(p, [0, 1])
    got = reduce_mod_omega(Y, n, 0, 1)
    assert got.agrees_with(Y)


def test_reduce_reconstructs_remainder():
    r = make_rng("iwa-reduce")
    p, n, l, l2 = 3, 1, 0, 1
    deg = (l2 - l + 1) * p**n
    omega = _poly_from_ints(p, big_omega(p, n, l, l2), prec=200)
    for _ in range(8):
        Fq = _poly_from_ints(p, [r.randrange(-40, 40) for _ in range(5)], prec=200)
        R = _poly_from_ints(p, [r.randrange(-40, 40) for _ in range(deg)], prec=200)
        big = ls_mul(Fq, omega, out_deg=Fq.D + omega.D) + R.extend(Fq.D + omega.D)
        got = reduce_mod_omega(big, n, l, l2)
        diff = got - R
        assert diff.is_zero_mod(60)


# -- branches ---------------------------------------------------------------


def test_teichmuller_and_dlog():
    p, n = 3, 2
    assert teichmuller_residue(p, n, 1) == 1
    assert teichmuller_residue(p, n, 8) == 8
    assert dlog_u(p, n, 1) == 0
    assert dlog_u(p, n, 4) == 1
    assert dlog_u(p, n, 7) == 2


def test_measure_to_gamma_dirac():
    p, n = 3, 2
    branches = measure_to_gamma(CycMeasure.dirac(p, n, 1))
    one = branches[1]
    assert one.coeffs[0].agrees_with(PadicScalar.from_int(p, 1))
    for c in one.coeffs[1:]:
        assert c.is_exact_zero
    assert all(b.is_zeroish() for key, b in branches.items() if key != 1)


def test_branch_mass_consistency():
    r = make_rng("iwa-branches")
    for p, n in [(3, 2), (5, 2)]:
        mu = random_measure(r, p, n)
        branches = measure_to_gamma(mu)
        total = PadicScalar.zero(p)
        for b, poly in branches.items():
            # sum of group-basis masses equals the polynomial at Y = 0
            total = total + poly.coeffs[0]
        assert total.agrees_with(mu.mass())


def test_gamma_round_trip():
    r = make_rng("iwa-roundtrip")
    for p, n in [(3, 2), (3, 3), (5, 2)]:
        mu = random_measure(r, p, n)
        back = gamma_to_measure(measure_to_gamma(mu), p, n)
        assert back.agrees_with(mu)


# -- grid evaluation and interpolation ------------------------------------------


def test_zeta_level():
    p, n = 3, 2
    assert zeta_level(p, n, 0) == 0
    assert zeta_level(p, n, 3) == 1
    assert zeta_level(p, n, 1) == 2


def test_point_value_root_of_omega():
    # u^j zeta^e - 1 is a root of omega_n_j
    p, n, j = 3, 1, 2
    om = omega_poly(p, n, j).as_series(0)
    from logpadic.iwasawa import eval_at_cyclotomic

    for e in grid_points(p, n):
        pt = point_value(p, n, e, j)
        val = eval_at_cyclotomic(om, pt)
        assert val.is_zero_mod(60)


def test_interpolate_inverts_evaluate():
    r = make_rng("iwa-interp")
    p, n, l, l2 = 3, 1, 0, 1
    deg = (l2 - l + 1) * p**n
    for _ in range(4):
        F = _poly_from_ints(p, [r.randrange(-20, 20) for _ in range(deg)], prec=200)
        vals = evaluate_on_grid(F, n, l, l2)
        got = interpolate_on_grid(p, n, l, l2, vals)
        assert (got - F).is_zero_mod(40)


def test_interpolate_of_reduced_is_reduction():
    # the Amice-Velu vanishing shadow: interpolate . evaluate = reduce
    r = make_rng("iwa-av")
    p, n, l, l2 = 3, 1, 1, 2
    deg = (l2 - l + 1) * p**n
    F = _poly_from_ints(p, [r.randrange(-20, 20) for _ in range(deg + 5)], prec=200)
    vals = evaluate_on_grid(F, n, l, l2)
    got = interpolate_on_grid(p, n, l, l2, vals)
    want = reduce_mod_omega(F, n, l, l2)
    assert (got - want.extend(got.D)).is_zero_mod(40)


def test_vanishing_on_grid_means_zero_remainder():
    p, n, l, l2 = 3, 1, 0, 1
    zero_vals = {
        (j, e): __import__("logpadic.cyclotomic", fromlist=["CyclotomicNumber"]).CyclotomicNumber.zero(p, n)
        for j in range(l, l2 + 1)
        for e in grid_points(p, n)
    }
    got = interpolate_on_grid(p, n, l, l2, zero_vals)
    assert got.is_zero_mod(60)


def test_measure_json_round_trip():
    r = make_rng("iwa-json")
    mu = random_measure(r, 3, 2)
    assert CycMeasure.from_obj(mu.to_obj()).agrees_with(mu)
