"""Operators on truncated series: the Frobenius substitution phi_H, its left
inverse psi, the multiplicative derivation D_CW = (1+X) d/dX and the linear
forms Delta_j = D_CW^j(.)(0).

phi_H substitutes X -> (1+X)^p - 1.  Because the substituted variable has no
constant term, the first D+1 output coefficients depend only on the first
D+1 input coefficients: truncated heads map exactly to truncated heads.

psi is computed from its two defining identities: first the averaged trace
G(X) = (1/p) * sum_{zeta^p = 1} F(zeta(1+X) - 1)  (this equals phi.psi(F)),
then the substitution inverse applied to G.  Each division by p consumes one
unit of tracked absolute precision, which the budget records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .cyclotomic import CyclotomicNumber
from .errors import InvalidInput, NotInImage, PrecisionExhausted
from .logseries import (
    EPS,
    LogSeries,
    Tail,
    constants,
    ell,
    from_fixed_point,
    to_fixed_point,
    v_lower,
)
from .padic import PadicScalar

INF = math.inf

#: Relative precision for exact helper constants built inside operators.
_WORK_PREC = 512


@dataclass(frozen=True)
class OperatorBudget:
    """Degree and precision bookkeeping for one operator application."""

    in_degree: int
    out_degree: int
    precision_cost: int


def phi_budget(D: int, p: int, expand: bool = False) -> OperatorBudget:
    return OperatorBudget(D, p * D if expand else D, 0)


def psi_budget(D: int, p: int) -> OperatorBudget:
    return OperatorBudget(D, D // p, 1 + D // p)


def dcw_budget(D: int, poly: bool, j: int = 1) -> OperatorBudget:
    return OperatorBudget(D, D if poly else D - j, 0)


# ---------------------------------------------------------------------------
# phi_H


def _phi_tail(F: LogSeries, out_poly: bool) -> Tail:
    """Tail certificate for phi_H(F) from the quantitative continuity bound
    v_h(phi F) >= v_h(F) + min(c3, -ell(d) h) - c2 on X^d H_h."""
    if F.tail.kind == "zero" and out_poly:
        return Tail.zero()
    v = v_lower(F)
    if v == -INF:
        return Tail.unknown()
    if v == INF:
        return Tail.zero()
    c = constants(F.p, F.h)
    d = min(F.lowest_nonzero(), F.D + 1)
    drop = min(c.c3 - EPS, -ell(F.p, d) * F.h) - c.c2
    return Tail.certified(Fraction(math.floor(float(v) + drop)))


def phi_h(F: LogSeries, expand: bool = False) -> LogSeries:
    """Substitute X -> (1+X)^p - 1.

    With expand=True the full image of the head polynomial is returned
    (degree p*D); otherwise the output is re-truncated to degree D, whose
    coefficients are exact images of the head.
    """
    p = F.p
    out_len = (p * F.D if expand else F.D) + 1
    tail = _phi_tail(F, expand)
    try:
        ints, s, k = to_fixed_point(F, 2 * F.D + _WORK_PREC)
    except PrecisionExhausted:
        ints = None
    if ints is not None:
        got = kernels.phi_subst(ints, p, out_len, p ** (k + s), kernels.omega_coeffs(p))
        return from_fixed_point(p, F.h, got, s, k, tail)
    # object path (inputs carrying inexact zeros)
    zero = PadicScalar.zero(p)
    binom = kernels.omega_coeffs(p)
    acc = [zero] * out_len
    for i in range(F.D, -1, -1):
        new = [zero] * out_len
        for m, cm in enumerate(acc):
            if cm.is_exact_zero:
                continue
            for t, b in enumerate(binom):
                if m + t + 1 < out_len:
                    new[m + t + 1] = new[m + t + 1] + cm.mul_int(b)
        ai = F.coeffs[i]
        if not ai.is_exact_zero:
            new[0] = new[0] + ai
        acc = new
    return LogSeries(p, F.h, acc, tail)


# ---------------------------------------------------------------------------
# the trace average (1/p) sum_{zeta^p=1} F(zeta(1+X)-1)


def _trace_fixed(F: LogSeries):
    """Fixed-point trace average; returns (g_ints, s, k-1) or None.

    T(X) = F(zeta(1+X)-1) is accumulated by Horner over Z[zeta_p] vectors in
    the basis 1..zeta^(p-2); the primitive trace is Tr(1) = p-1,
    Tr(zeta^k) = -1, and the final division by p costs one absolute digit.
    """
    p = F.p
    try:
        ints, s, k = to_fixed_point(F, 2 * F.D + _WORK_PREC)
    except PrecisionExhausted:
        return None
    if k < 2:
        return None
    kw = k + s
    mod = p**kw
    D = F.D
    width = p - 1
    T = [[0] * width for _ in range(D + 1)]
    for i in range(D, -1, -1):
        newT = []
        for j in range(D + 1):
            tz = T[j - 1] if j >= 1 else None
            tj = T[j]
            vec = [0] * width
            if tz is not None and any(tz):
                # + zeta * tz, folding zeta^(p-1) = -(1 + ... + zeta^(p-2))
                top = tz[width - 1]
                for t in range(width):
                    lower = tz[t - 1] if t >= 1 else 0
                    vec[t] = (lower - top) % mod
            if any(tj):
                # + (zeta - 1) * tj
                top = tj[width - 1]
                for t in range(width):
                    lower = tj[t - 1] if t >= 1 else 0
                    vec[t] = (vec[t] + lower - top - tj[t]) % mod
            newT.append(vec)
        newT[0][0] = (newT[0][0] + ints[i]) % mod
        T = newT
    g = []
    for j in range(D + 1):
        v = T[j]
        tr = ((p - 1) * v[0] - sum(v[1:])) % mod
        tot = (ints[j] + tr) % mod
        if tot % p:
            raise PrecisionExhausted("trace average not divisible by p")
        g.append(tot // p)
    return g, s, k - 1


def _trace_object(F: LogSeries):
    """Object-path trace average as a list of scalars."""
    p = F.p
    zeta = CyclotomicNumber.zeta(p, 1, _WORK_PREC)
    one = CyclotomicNumber.from_int(p, 1, 1, _WORK_PREC)
    lin1, lin0 = zeta, zeta - one  # T * (zeta X + (zeta - 1))
    D = F.D
    zero_c = CyclotomicNumber.zero(p, 1)
    T = [zero_c] * (D + 1)
    for i in range(D, -1, -1):
        newT = [zero_c] * (D + 1)
        for j in range(D + 1):
            acc = T[j] * lin0
            if j >= 1:
                acc = acc + T[j - 1] * lin1
            newT[j] = acc
        ai = F.coeffs[i]
        if not ai.is_exact_zero:
            newT[0] = newT[0] + CyclotomicNumber.from_scalar(ai, 1)
        T = newT
    pinv = PadicScalar.from_int(p, 1, _WORK_PREC).shift(-1)
    g = []
    for j in range(D + 1):
        v = T[j]
        tr = v.coeffs[0].mul_int(p - 1)
        for c in v.coeffs[1:]:
            tr = tr - c
        g.append((F.coeffs[j] + tr) * pinv)
    return g


def phi_psi_trace(F: LogSeries) -> LogSeries:
    """(1/p) sum_{zeta^p=1} F(zeta(1+X)-1) = phi_H(psi(F)), by direct
    cyclotomic evaluation: the independent oracle for the projector."""
    tail = Tail.zero() if F.tail.kind == "zero" else Tail.unknown()
    fast = _trace_fixed(F)
    if fast is not None:
        g, s, k_out = fast
        return from_fixed_point(F.p, F.h, g, s, k_out, tail)
    return LogSeries(F.p, F.h, _trace_object(F), tail)


# ---------------------------------------------------------------------------
# the substitution inverse


def _inverse_threshold(k: int, M: int, p: int) -> Fraction:
    """Any genuine image of phi_H supported in degrees > M has coefficient
    valuation >= (M+1) - (k-M-1)/(p-1) at degree k <= p(M+1)."""
    return Fraction(M + 1) - Fraction(k - M - 1, p - 1)


def phi_h_inverse(G: LogSeries, out_deg: int = None) -> LogSeries:
    """Solve phi_H(B) = G for B from the lowest coefficient up.

    The recursion exploits that the substituted variable is p*X + ...: the
    residual at degree m determines b_m after an exact division by p^m.
    Raises NotInImage when a leftover residual coefficient is certifiably
    too large to come from image terms of degree beyond the output.
    """
    p = G.p
    M = G.D // p if out_deg is None else out_deg
    if M > G.D:
        raise InvalidInput("cannot reconstruct beyond the tracked head")
    zero = PadicScalar.zero(p)
    binom = kernels.omega_coeffs(p)
    R = list(G.coeffs)
    W = [PadicScalar.from_int(p, 1, _WORK_PREC)] + [zero] * G.D  # omega^m
    b = []
    for m in range(M + 1):
        bm = R[m].shift(-m)
        b.append(bm)
        if not bm.is_exact_zero:
            for k in range(m, G.D + 1):
                wk = W[k]
                if not wk.is_exact_zero:
                    R[k] = R[k] - bm * wk
        if m < M:
            new = [zero] * (G.D + 1)
            for idx, cm in enumerate(W):
                if cm.is_exact_zero:
                    continue
                for t, bc in enumerate(binom):
                    if idx + t + 1 <= G.D:
                        new[idx + t + 1] = new[idx + t + 1] + cm.mul_int(bc)
            W = new
    for k in range(M + 1, G.D + 1):
        c = R[k]
        if c.unit != 0 and Fraction(c.val) < _inverse_threshold(k, M, p):
            raise NotInImage(
                f"residual at degree {k} has valuation {c.val}, below the "
                f"image threshold {_inverse_threshold(k, M, p)}"
            )
    tail = Tail.zero() if G.tail.kind == "zero" else Tail.unknown()
    return LogSeries(p, G.h, b, tail)


# ---------------------------------------------------------------------------
# psi


def psi(F: LogSeries) -> LogSeries:
    """The canonical left inverse of phi_H: trace average followed by the
    substitution inverse.  Output degree floor(D/p)."""
    p = F.p
    tail = Tail.zero() if F.tail.kind == "zero" else Tail.unknown()
    M = F.D // p
    fast = _trace_fixed(F)
    if fast is not None:
        g, s, k = fast
        if k > M:
            kw = k + s
            mod = p**kw
            R = [x % mod for x in g]
            W = [1] + [0] * F.D
            binom = kernels.omega_coeffs(p)
            b = []
            for m in range(M + 1):
                r = R[m]
                if r % p**m:
                    raise NotInImage(
                        "trace average is not an image at tracked precision"
                    )
                bm = r // p**m
                b.append(bm)
                if bm:
                    kernels.axpy(R, W, -bm, mod)
                if m < M:
                    W = kernels.mul_trunc(W, [0] + binom, F.D + 1, mod)
            k_out = k - M
            b = [x % p ** (k_out + s) for x in b]
            return from_fixed_point(p, F.h, b, s, k_out, tail)
    G = LogSeries(p, F.h, _trace_object(F), tail)
    return phi_h_inverse(G)


# ---------------------------------------------------------------------------
# the derivation and its linear forms


def d_cw(F: LogSeries, j: int = 1) -> LogSeries:
    """j-fold application of (1+X) d/dX.

    For a certified-zero tail the degree is preserved; otherwise each
    application drops the top coefficient, which a truncation alone cannot
    determine.
    """
    if j < 0:
        raise InvalidInput("the iteration count must be >= 0")
    out = F
    for _ in range(j):
        out = _d_cw_once(out)
    return out


def _d_cw_once(F: LogSeries) -> LogSeries:
    p = F.p
    poly = F.tail.kind == "zero"
    D_out = F.D if poly else F.D - 1
    if D_out < 0:
        raise InvalidInput("derivative of a head with no tracked coefficients")
    coeffs = []
    for k in range(D_out + 1):
        up = F.coeffs[k + 1].mul_int(k + 1) if k + 1 <= F.D else PadicScalar.zero(p)
        coeffs.append(up + F.coeffs[k].mul_int(k))
    if poly:
        tail = Tail.zero()
    elif F.tail.kind == "certified":
        # ell(i+1) <= ell(i) + 1, so the certified bound weakens by at most h
        tail = Tail.certified(F.tail.bound - F.h)
    else:
        tail = Tail.unknown()
    return LogSeries(p, F.h, coeffs, tail)


def delta(F: LogSeries, j: int) -> PadicScalar:
    """Delta_j(F) = D_CW^j(F)(0)."""
    if j > F.D:
        raise InvalidInput("Delta_j needs a head of degree at least j")
    return d_cw(F, j).coeffs[0]


def delta_via_exp(F: LogSeries, j: int) -> PadicScalar:
    """j! times the degree-j coefficient of F(exp(Z) - 1): the independent
    characterization of Delta_j, used as its oracle.

    The factorial denominators keep every digit when j < p; beyond that the
    valuation bookkeeping of the scalars absorbs ord_p(j!) per term.
    """
    if j > F.D:
        raise InvalidInput("needs a head of degree at least j")
    p = F.p
    zero = PadicScalar.zero(p)
    E = [zero] + [
        PadicScalar.from_fraction(p, Fraction(1, math.factorial(t)), _WORK_PREC)
        for t in range(1, j + 1)
    ]
    acc = [zero] * (j + 1)
    for i in range(j, -1, -1):
        new = [zero] * (j + 1)
        for m, cm in enumerate(acc):
            if cm.is_exact_zero:
                continue
            for t in range(1, j + 1 - m):
                new[m + t] = new[m + t] + cm * E[t]
        ai = F.coeffs[i]
        if not ai.is_exact_zero:
            new[0] = new[0] + ai
        acc = new
    return acc[j].mul_int(math.factorial(j))
