"""Constructive solution of (1 - lambda*phi_H) Ftilde = F on H_h.

The solution splits along the canonical decomposition
    F = F_0 + sum_{i<=h} (i!)^(-1) Delta_i(F) log^i(1+X)
with F_0 in X^(h+1) H_h.  The log part inverts (1 - lambda p^i) termwise;
the F_0 part sums the geometric series sum_n lambda^n phi_H^n(F_0), which
converges because phi_H gains one unit of valuation per step beyond the
slope.  The returned certificate carries the case tag, the truncation order
of the geometric series, the certified denominator exponent and the
precision to which the residual was verified.

Solvability cases: (a) lambda p^i != 1 for every i in [0,h] (unique
solution); (b) lambda p^j = 1 for some j with Delta_j(F) = 0 (solution
unique modulo multiples of log^j; the distinguished representative returned
here omits the log^j term entirely).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import (
    IndeterminateCase,
    InvalidInput,
    PrecisionExhausted,
    SlopeTooLarge,
    Unsolvable,
)
from .logseries import (
    LogSeries,
    Tail,
    constants,
    ell,
    from_fixed_point,
    log_power,
    to_fixed_point,
    v_lower,
)
from .operators import delta, phi_h
from .padic import PadicScalar

INF = math.inf

#: extra geometric-series terms beyond the analytic estimate
SAFETY_TERMS = 5
#: extra tracked digits beyond the target precision inside the engine
PAD_DIGITS = 6


@dataclass(frozen=True)
class ToyCrystal:
    """Rank-one phi-eigenmodule: basis label and eigenvalue lambda = a_p."""

    label: str
    eigenvalue: PadicScalar

    @property
    def slope(self):
        return self.eigenvalue.ord()


@dataclass(frozen=True)
class CrystalVector:
    """An element  label (x) series  of the eigenmodule tensor H_h."""

    label: str
    series: LogSeries


@dataclass(frozen=True)
class SolveCertificate:
    case_tag: str          # "A" or "B(j)"
    n_max: int
    denom_bound: object    # certified v_h(Ftilde) >= denom_bound (None if
                           # the input carried no growth certificate)
    residual_prec: int

    @property
    def case_b_index(self):
        if self.case_tag.startswith("B("):
            return int(self.case_tag[2:-1])
        return None


def a_exponent(n: int, nu: int, p: int):
    """The two-branch growth exponent: n - nu + 1 if n >= nu, else p^(n-nu)."""
    if n >= nu:
        return n - nu + 1
    return Fraction(1, p ** (nu - n))


def truncation_order(N: int, h: int, p: int, d: int = None, D: int = 60,
                     ord_lambda: int = None, v_f0=0) -> int:
    """Smallest geometric truncation order guaranteeing the dropped terms
    are 0 mod p^N on every coefficient up to degree D, plus a safety margin.

    Per-term bound on coefficients up to D, for F_0 in X^d H_h with
    v_h(F_0) >= v_f0:  ord >= n*ord(lambda) + v_f0 + d*a(n, ell(D))
    - ell(d)*h - 1.  The default worst case takes ord(lambda) = -h, the
    extreme the solvability precondition allows.
    """
    if N < 1:
        raise InvalidInput("target precision must be >= 1")
    if d is None:
        d = h + 1
    if ord_lambda is None:
        ord_lambda = -h
    slope = ord_lambda + d
    if slope <= 0:
        raise SlopeTooLarge(
            f"geometric series does not converge: ord(lambda)={ord_lambda}, d={d}"
        )
    nu_bar = ell(p, max(D, 1))
    if v_f0 == INF:
        return nu_bar + SAFETY_TERMS
    # need n*ord_lambda + v_f0 + d*(n - nu_bar + 1) - ell(p,d)*h - 1 >= N
    need = N - v_f0 + ell(p, d) * h + 1 + d * (nu_bar - 1)
    n_max = max(nu_bar, math.ceil(need / slope))
    return n_max + SAFETY_TERMS


def decompose(F: LogSeries, h: int = None):
    """Split F = F_0 + sum (i!)^(-1) Delta_i(F) log^i with F_0 vanishing to
    order h+1.  Returns (F_0, [Delta_0(F), ..., Delta_h(F)]).

    The first h+1 coefficients of F_0 vanish identically (the linear forms
    Delta_0..Delta_h are triangular in the low coefficients with unit
    diagonal i!); after checking consistency they are snapped to exact
    zeros so downstream evaluation can rely on the vanishing.
    """
    if h is None:
        h = F.h
    if F.D < h + 2:
        raise InvalidInput("decomposition needs a head of degree >= h+2")
    p = F.p
    deltas = [delta(F, i) for i in range(h + 1)]
    F0 = F
    for i, dl in enumerate(deltas):
        if dl.is_exact_zero:
            continue
        coeff = dl * PadicScalar.from_fraction(p, Fraction(1, math.factorial(i)), 512)
        F0 = F0 - log_power(p, i, F.D, max(F.h, h)).scale(coeff)
    coeffs = list(F0.coeffs)
    for k in range(min(h, F0.D) + 1):
        c = coeffs[k]
        if c.unit != 0:
            raise PrecisionExhausted(
                f"low coefficient {k} of the decomposition failed to cancel"
            )
        coeffs[k] = PadicScalar.zero(p)
    F0 = LogSeries(p, F0.h, coeffs, F0.tail)
    return F0, deltas


def _resonance_case(lam: PadicScalar, h: int, N: int):
    """Detect lambda p^i = 1 for i in [0, h] at the tracked precision."""
    if lam.is_exact_zero or lam.unit == 0:
        return None
    for i in range(h + 1):
        if lam.val == -i:
            if lam.unit == 1:
                return i
            w = lam.unit - 1
            v = 0
            while w % lam.p == 0:
                w //= lam.p
                v += 1
            if v >= min(lam.prec, N):
                raise IndeterminateCase(
                    f"lambda p^{i} is within p^{v} of 1: resonant and "
                    "non-resonant branches are indistinguishable"
                )
    return None


def solve_scalar(F: LogSeries, lam: PadicScalar, h: int = None, N: int = 25,
                 n_max: int = None):
    """Solve (1 - lambda*phi_H) Ftilde = F.  Returns (Ftilde, certificate).

    The head of Ftilde is claimed to absolute precision N on every tracked
    coefficient; the tail certificate comes from the denominator theorem
    c(h) scaled by the certified v_h of F.
    """
    if h is None:
        h = F.h
    p = F.p
    if lam.p != p:
        raise InvalidInput("eigenvalue and series live over different primes")
    ord_lam = lam.ord_lower()
    if ord_lam == -INF or (lam.unit == 0 and not lam.is_exact_zero):
        raise PrecisionExhausted("eigenvalue indistinguishable from zero")
    if not lam.is_exact_zero and -ord_lam > h:
        raise SlopeTooLarge(f"need h >= {-ord_lam} = -ord(lambda), got {h}")
    j_res = _resonance_case(lam, h, N)

    F0, deltas = decompose(F, h)
    one = PadicScalar.from_int(p, 1, 512)

    # log part: sum over i != j_res of (i!)^{-1} Delta_i(F) (1-lambda p^i)^{-1} log^i
    log_part = LogSeries.zero(p, max(F.h, h), F.D)
    for i, dl in enumerate(deltas):
        if i == j_res:
            if dl.unit != 0:
                raise Unsolvable(
                    f"lambda p^{i} = 1 but Delta_{i}(F) has valuation "
                    f"{dl.val}: the obstruction does not vanish"
                )
            continue
        if dl.is_exact_zero:
            continue
        denom = one - lam.shift(i)
        if denom.is_zeroish:
            raise IndeterminateCase(
                f"1 - lambda p^{i} vanishes at the tracked precision"
            )
        coeff = dl * denom.inv() * PadicScalar.from_fraction(
            p, Fraction(1, math.factorial(i)), 512
        )
        log_part = log_part + log_power(p, i, F.D, max(F.h, h)).scale(coeff)

    # geometric part on F_0
    vf0 = v_lower(F0)
    if vf0 == -INF:
        raise PrecisionExhausted("F_0 carries no certified growth bound")
    t = max(0, -(lam.val if lam.unit != 0 else 0))
    if n_max is None:
        if lam.is_exact_zero:
            n_max = 0
        else:
            n_max = truncation_order(
                N, h, p, d=h + 1, D=F.D,
                ord_lambda=lam.val,
                v_f0=math.floor(vf0) if vf0 != INF else INF,
            )
    geo = _geometric_sum(F0, lam, n_max, N, t)

    Ftilde = geo + log_part
    # tail certificate from the denominator theorem, scaled by v_h(F)
    vF = v_lower(F)
    c = constants(p, h)
    if vF == -INF:
        tail = Tail.unknown()
        denom_bound = None
    else:
        m = 0 if vF == INF else math.floor(vF)
        denom_bound = c.c_h + m
        tail = Tail.certified(denom_bound)
    Ftilde = LogSeries(p, max(F.h, h), Ftilde.coeffs, tail)

    residual_prec = N - t
    _verify_residual(F, lam, Ftilde, residual_prec)
    cert = SolveCertificate(
        case_tag="A" if j_res is None else f"B({j_res})",
        n_max=n_max,
        denom_bound=denom_bound,
        residual_prec=residual_prec,
    )
    return Ftilde, cert


def _geometric_sum(F0: LogSeries, lam: PadicScalar, n_max: int, N: int, t: int):
    """sum_{n<=n_max} lambda^n phi_H^n(F_0) through the fixed-point engine.

    With lambda = u p^v (v possibly negative, t = max(0, -v)) the engine
    accumulates p^(t*n_max) * sum u^n p^((v+t)n) phi^n(F_0) over a fixed
    modulus and performs one exact division by p^(t*n_max) at the end.
    """
    p = F0.p
    if lam.is_exact_zero:
        return F0  # only the n = 0 term survives
    k_abs = N + t * n_max + PAD_DIGITS
    ints, s, k_eff = to_fixed_point(F0, k_abs)
    claim = k_eff - t * n_max
    if claim < N:
        raise PrecisionExhausted(
            f"inputs certify only p^{claim} on the geometric part, need p^{N}"
        )
    kw = k_eff + s
    mod = p**kw
    u = lam.unit % mod
    v = lam.val
    binom = kernels.omega_coeffs(p)
    out_len = F0.D + 1
    acc = [0] * out_len
    term = list(ints)
    fac = p ** (t * n_max)  # running u^n p^(vn + t*n_max), always integral
    for n in range(n_max + 1):
        kernels.axpy(acc, term, fac, mod)
        if n == n_max:
            break
        term = kernels.phi_subst(term, p, out_len, mod, binom)
        if v >= 0:
            fac = fac * u * p**v % mod
        else:
            fac = fac * u % mod
            if fac % p**t:
                raise PrecisionExhausted("eigenvalue scaling lost integrality")
            fac //= p**t
    div = p ** (t * n_max)
    lifted = []
    claim_mod = p ** (N + s)
    for x in acc:
        if x % div:
            raise PrecisionExhausted("geometric accumulation lost integrality")
        lifted.append(x // div % claim_mod)
    return from_fixed_point(p, F0.h, lifted, s, N, Tail.unknown())


def _verify_residual(F: LogSeries, lam: PadicScalar, Ftilde: LogSeries, k: int):
    if k < 1:
        raise PrecisionExhausted("no digits left to verify the residual")
    R = Ftilde - phi_h(Ftilde).scale(lam) - F
    for i, c in enumerate(R.coeffs):
        if not c.is_zero_mod(k):
            raise PrecisionExhausted(
                f"residual coefficient {i} fails to vanish mod p^{k}"
            )


def solve_crystal(xi, crystal: ToyCrystal, h: int = None, N: int = 25,
                  n_max: int = None):
    """Transport of solve_scalar through (D (x) H_h, phi_D (x) phi_H) ~=
    (H_h, lambda phi_H): solve (1 - phi_D (x) phi_H) XiTilde = Xi.

    xi may be a CrystalVector or a bare LogSeries (then the crystal's basis
    label is attached).  The denominator statement asserts membership of
    the series part in p^floor(c(h)) H_h+ scaled by v_h(Xi).
    """
    if isinstance(xi, CrystalVector):
        label, series = xi.label, xi.series
        if label != crystal.label:
            raise InvalidInput("element expressed in a different basis")
    elif isinstance(xi, LogSeries):
        label, series = crystal.label, xi
    else:
        raise InvalidInput("xi must be a CrystalVector or a LogSeries")
    Ftilde, cert = solve_scalar(series, crystal.eigenvalue, h=h, N=N, n_max=n_max)
    return CrystalVector(label, Ftilde), cert
