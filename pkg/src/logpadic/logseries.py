"""Truncated power series of logarithmic growth, with certified valuations.

A series F = sum a_i X^i has growth order h when ord(a_i) + h*ell(i) is
bounded below, where ell(i) is the smallest j with p^j > i.  The module
tracks the head a_0..a_D exactly and carries a tail certificate: a caller
supplied (or propagated) lower bound for inf_{i>D} (ord(a_i) + h*ell(i)).
Tail certificates are never inferred from a truncation alone.

v_h is the coefficientwise valuation min_i (ord(a_i) + h*ell(i)); v_h' is
the evaluation-based one, inf over disks of radius p^(-p^(-nu)).  Both are
computed exactly on the head (the inner infimum of v_h' via the Gauss-norm
identity) and combined with the tail certificate into a value plus an
exactness flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, OrderTooSmall, PrecisionExhausted
from .padic import DEFAULT_PREC, PadicScalar

INF = math.inf

#: Outward rounding applied to double-precision constants before floors
#: and comparisons.
EPS = 2.0**-40


def ell(p: int, i: int) -> int:
    """Smallest j with p^j > i (so ell(0) = 0 and ell(i) = floor(log_p i)+1)."""
    if i < 0:
        raise InvalidInput("ell is defined for non-negative indices")
    j = 0
    q = 1
    while q <= i:
        q *= p
        j += 1
    return j


def ord_factorial(h: int, p: int) -> int:
    """ord_p(h!) by Legendre's formula."""
    s = 0
    q = p
    while q <= h:
        s += h // q
        q *= p
    return s


# ---------------------------------------------------------------------------
# tails and valuation results


@dataclass(frozen=True)
class Tail:
    """Certificate for the untracked coefficients beyond the head.

    kind "zero": all higher coefficients are exactly 0.
    kind "certified": inf_{i>D} (ord(a_i) + h*ell(i)) >= bound.
    kind "unknown": no information.
    """

    kind: str
    bound: object = None  # Fraction, or INF for "zero"

    @classmethod
    def zero(cls):
        return cls("zero", INF)

    @classmethod
    def certified(cls, bound):
        if bound == INF:
            return cls.zero()
        return cls("certified", Fraction(bound))

    @classmethod
    def unknown(cls):
        return cls("unknown", None)

    def lower(self):
        """Lower bound usable in minima (-inf when unknown)."""
        if self.kind == "zero":
            return INF
        if self.kind == "certified":
            return self.bound
        return -INF

    def to_obj(self):
        if self.kind == "zero":
            return {"kind": "certified", "bound": "inf"}
        if self.kind == "certified":
            return {"kind": "certified", "bound": str(self.bound)}
        return {"kind": "unknown"}

    @classmethod
    def from_obj(cls, obj):
        kind = obj.get("kind")
        if kind == "unknown":
            return cls.unknown()
        if kind == "certified":
            b = obj.get("bound")
            if b == "inf":
                return cls.zero()
            return cls.certified(Fraction(b))
        raise InvalidInput(f"malformed tail object: {obj!r}")


@dataclass(frozen=True)
class ValBound:
    """A certified valuation statement.

    value is always a correct lower bound for the valuation of any series
    matching the tracked data; exact means it is attained by a tracked
    coefficient and cannot be undercut by the tail or by untracked digits.
    limited_by in {None, "tail", "precision"} names the obstruction.
    """

    value: object
    exact: bool
    limited_by: str = None


@dataclass(frozen=True)
class VPrimeBound(ValBound):
    """v_h' result; complete means enlarging nu_max cannot lower the value."""

    complete: bool = True


# ---------------------------------------------------------------------------
# the constants of the theory


@dataclass(frozen=True)
class GrowthConstants:
    """All explicit constants attached to (p, h).

    c1 <= 0 <= c2 bound v_h' - v_h; c3 and c4 control the Frobenius
    substitution; c_phi = c4 - c2 is the geometric-series denominator and
    c_h the certified exponent for solutions of the functional equation.
    Real-valued members carry a conservative outward rounding; the *_floor
    members are the sound integer weakenings actually consumed downstream.
    """

    p: int
    h: int
    c1: float
    c2: int
    c3: float
    c4: float
    c4_exact: object  # int when the integral branch wins, else None
    c_phi: float
    c_phi_floor: int
    c_h: int
    c_h_real: float


def constants(p: int, h: int) -> GrowthConstants:
    if h < 0:
        raise InvalidInput("growth order must be >= 0")
    lp = math.log(p)
    if h == 0:
        # degenerate branch: v_0 is the plain p-adic valuation
        c1, c3 = 0.0, 0.0
        c4_real, c4_exact = 0.0, 0
    else:
        c1 = min(0.0, -2 * h + (h / lp) * (1 + math.log(lp / h)))
        c3 = h - (h / lp) * math.log(h / lp)
        branch_a = -ell(p, h + 1) * h
        branch_b = (h / lp) * (1 + math.log(p / h))
        if branch_a <= branch_b + EPS:
            c4_real, c4_exact = float(branch_a), branch_a
        else:
            c4_real, c4_exact = branch_b, None
    c2 = max(0, p - h)
    c_phi = c4_real - c2
    if c4_exact is not None:
        c_phi_floor = c4_exact - c2
    else:
        c_phi_floor = math.floor(c_phi - EPS)
    base = h * (2 - ell(p, h)) - p - ord_factorial(h, p)
    c_h = base + min(0, c_phi_floor)
    c_h_real = base + min(0.0, c_phi)
    return GrowthConstants(
        p=p, h=h, c1=c1, c2=c2, c3=c3, c4=c4_real, c4_exact=c4_exact,
        c_phi=c_phi, c_phi_floor=c_phi_floor, c_h=c_h, c_h_real=c_h_real,
    )


# ---------------------------------------------------------------------------
# the series type


class LogSeries:
    """Head-tracked power series with a growth-order tag and tail certificate."""

    __slots__ = ("p", "h", "D", "coeffs", "tail")

    def __init__(self, p: int, h: int, coeffs, tail: Tail = None):
        if h < 0:
            raise InvalidInput("growth order must be >= 0")
        self.p = p
        self.h = h
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise InvalidInput("a series tracks at least its constant term")
        self.D = len(self.coeffs) - 1
        self.tail = tail if tail is not None else Tail.unknown()

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int, h: int, D: int) -> "LogSeries":
        z = PadicScalar.zero(p)
        return cls(p, h, [z] * (D + 1), Tail.zero())

    @classmethod
    def one(cls, p: int, h: int, D: int, prec: int = DEFAULT_PREC) -> "LogSeries":
        c = [PadicScalar.from_int(p, 1, prec)] + [PadicScalar.zero(p)] * D
        return cls(p, h, c, Tail.zero())

    @classmethod
    def monomial(cls, p: int, h: int, D: int, d: int, a: PadicScalar) -> "LogSeries":
        if d > D:
            raise InvalidInput("monomial degree beyond truncation")
        c = [PadicScalar.zero(p)] * (D + 1)
        c[d] = a
        return cls(p, h, c, Tail.zero())

    @classmethod
    def from_ints(cls, p, h, ints, tail=None, prec: int = DEFAULT_PREC):
        return cls(p, h, [PadicScalar.from_int(p, a, prec) for a in ints], tail)

    @classmethod
    def binomial_power(cls, p, a, D, h: int = 0, prec: int = DEFAULT_PREC):
        """(1+X)^a for an integer a >= 0, truncated at D.

        Exact (zero tail) when a <= D; otherwise the dropped binomial
        coefficients are integers, certified by the order-0 bound.
        """
        if a < 0:
            raise InvalidInput("negative binomial powers are not series here")
        coeffs = [
            PadicScalar.from_int(p, math.comb(a, k), prec) for k in range(D + 1)
        ]
        tail = Tail.zero() if a <= D else Tail.certified(0)
        return cls(p, h, coeffs, tail)

    @classmethod
    def from_fractions(cls, p, h, fracs, tail=None, prec: int = DEFAULT_PREC):
        return cls(p, h, [PadicScalar.from_fraction(p, q, prec) for q in fracs], tail)

    # -- simple structure -------------------------------------------------

    def coeff(self, i: int) -> PadicScalar:
        return self.coeffs[i]

    def truncate(self, D: int) -> "LogSeries":
        """Shorten the head; the dropped coefficients join the tail bound."""
        if D >= self.D:
            return self
        dropped = _head_lower(self, D + 1, self.D, self.h)
        bound = min(dropped, self.tail.lower())
        tail = Tail.zero() if bound == INF else (
            Tail.unknown() if bound == -INF else Tail.certified(bound)
        )
        return LogSeries(self.p, self.h, self.coeffs[: D + 1], tail)

    def extend(self, D: int) -> "LogSeries":
        """Lengthen the head with exact zeros; only sound for a zero tail."""
        if D <= self.D:
            return self
        if self.tail.kind != "zero":
            raise InvalidInput("cannot extend a head past an uncertified tail")
        z = PadicScalar.zero(self.p)
        return LogSeries(self.p, self.h, self.coeffs + [z] * (D - self.D), Tail.zero())

    def retag(self, h: int) -> "LogSeries":
        """Re-tag with a larger growth order (H_h embeds in H_h' for h' >= h)."""
        if h == self.h:
            return self
        if h < self.h:
            raise OrderTooSmall("cannot lower the growth order tag")
        # ord + h'*ell >= ord + h*ell, so the certified bound still holds
        return LogSeries(self.p, h, self.coeffs, self.tail)

    def is_zeroish(self) -> bool:
        return all(c.is_zeroish for c in self.coeffs)

    def lowest_nonzero(self):
        """Largest d with F certified to lie in X^d * Q_p[[X]]."""
        for i, c in enumerate(self.coeffs):
            if not c.is_exact_zero:
                return i
        return self.D + 1

    # -- linear operations -------------------------------------------------

    def _combine_tail(self, other: "LogSeries", D: int, h: int) -> Tail:
        b = min(_tail_beyond(self, D, h), _tail_beyond(other, D, h))
        if b == INF:
            return Tail.zero()
        if b == -INF:
            return Tail.unknown()
        return Tail.certified(b)

    def __add__(self, other: "LogSeries") -> "LogSeries":
        if self.p != other.p:
            raise InvalidInput("series live over different primes")
        h = max(self.h, other.h)
        D = min(self.D, other.D)
        coeffs = [self.coeffs[i] + other.coeffs[i] for i in range(D + 1)]
        return LogSeries(self.p, h, coeffs, self._combine_tail(other, D, h))

    def __neg__(self) -> "LogSeries":
        return LogSeries(self.p, self.h, [-c for c in self.coeffs], self.tail)

    def __sub__(self, other: "LogSeries") -> "LogSeries":
        return self + (-other)

    def scale(self, s: PadicScalar) -> "LogSeries":
        if s.is_exact_zero:
            return LogSeries.zero(self.p, self.h, self.D)
        coeffs = [c * s for c in self.coeffs]
        t = self.tail
        if t.kind == "certified":
            t = Tail.certified(t.bound + s.ord_lower())
        return LogSeries(self.p, self.h, coeffs, t)

    def shift_p(self, k: int) -> "LogSeries":
        """Multiply by p^k exactly."""
        t = self.tail
        if t.kind == "certified":
            t = Tail.certified(t.bound + k)
        return LogSeries(self.p, self.h, [c.shift(k) for c in self.coeffs], t)

    def mul_x_power(self, d: int) -> "LogSeries":
        """Multiply by X^d.  A polynomial head grows by d; otherwise the
        truncation degree is kept and the pushed-out coefficients join the
        tail bound."""
        if d == 0:
            return self
        z = [PadicScalar.zero(self.p)] * d
        if self.tail.kind == "zero":
            return LogSeries(self.p, self.h, z + self.coeffs, Tail.zero())
        coeffs = (z + self.coeffs)[: self.D + 1]
        t = self.tail
        if t.kind == "certified":
            # result coefficients beyond D come from old indices > D-d, and
            # ell only grows under the shift
            b = _tail_beyond(self, self.D - d, self.h)
            t = Tail.zero() if b == INF else Tail.certified(b)
        return LogSeries(self.p, self.h, coeffs, t)

    def agrees_with(self, other: "LogSeries") -> bool:
        """Heads indistinguishable on the shared range."""
        D = min(self.D, other.D)
        return all(
            self.coeffs[i].agrees_with(other.coeffs[i]) for i in range(D + 1)
        )

    def is_zero_mod(self, k) -> bool:
        return all(c.is_zero_mod(k) for c in self.coeffs)

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:4])
        return f"LogSeries(p={self.p}, h={self.h}, D={self.D}, [{head}, ...], {self.tail.kind})"

    # -- JSON ----------------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "p": self.p,
            "h": self.h,
            "D": self.D,
            "coeffs": [c.to_obj() for c in self.coeffs],
            "tail": self.tail.to_obj(),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "LogSeries":
        try:
            p, h, D = int(obj["p"]), int(obj["h"]), int(obj["D"])
            coeffs = [PadicScalar.from_obj(p, c) for c in obj["coeffs"]]
            tail = Tail.from_obj(obj["tail"]) if "tail" in obj else Tail.unknown()
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed series object: {obj!r}") from exc
        if len(coeffs) != D + 1:
            raise InvalidInput("coefficient count does not match D")
        return cls(p, h, coeffs, tail)


# ---------------------------------------------------------------------------
# valuations


def _head_lower(F: LogSeries, lo: int, hi: int, h: int):
    """Certified lower bound of ord(a_i) + h*ell(i) over tracked lo..hi."""
    p = F.p
    best = INF
    for i in range(lo, hi + 1):
        c = F.coeffs[i]
        b = c.ord_lower()
        if b == INF:
            continue
        best = min(best, b + h * ell(p, i))
    return best


def _tail_beyond(F: LogSeries, D: int, h: int):
    """Lower bound of ord(a_i) + h*ell(i) over all i > D (tracked or not)."""
    if h < F.h and F.tail.kind != "zero":
        # a certificate for order F.h does not descend to smaller h
        return -INF
    head_part = _head_lower(F, min(D + 1, F.D + 1), F.D, h)
    return min(head_part, F.tail.lower())


def v_h(F: LogSeries, h: int = None) -> ValBound:
    """Certified v_h: head minimum combined with the tail certificate.

    Exact when the head minimum is attained by a tracked unit coefficient
    and dominates both the inexact-zero bounds and the tail bound.  With a
    certified tail below the head the tail bound is returned (the best
    certified lower bound); with an unknown tail the head minimum is
    returned and flagged, since a truncation alone bounds nothing.
    """
    if h is None:
        h = F.h
    p = F.p
    head_exact = INF
    head_bound = INF
    for i, c in enumerate(F.coeffs):
        if c.is_exact_zero:
            continue
        w = h * ell(p, i)
        if c.unit != 0:
            head_exact = min(head_exact, c.val + w)
        else:
            head_bound = min(head_bound, c.val + w)
    tail_low = _tail_beyond(F, F.D, h)
    if head_exact <= min(head_bound, tail_low) and head_exact < INF:
        return ValBound(head_exact, True)
    head_min = min(head_exact, head_bound)
    if head_min == INF and tail_low == INF:
        return ValBound(INF, True)
    if tail_low == -INF:
        return ValBound(head_min, False, "tail")
    value = min(head_min, tail_low)
    limited = "precision" if head_bound < tail_low else "tail"
    return ValBound(value, False, limited)


def v_lower(F: LogSeries, h: int = None):
    """Plain number: certified lower bound for v_h(F) (may be -inf)."""
    if h is None:
        h = F.h
    return min(_head_lower(F, 0, F.D, h), _tail_beyond(F, F.D, h))


def _tail_q_bound(F: LogSeries, nu: int):
    """Lower bound of inf_{i>D} (ord(a_i) + i p^-nu) from the tail certificate.

    The certificate gives ord(a_i) >= bound - F.h*ell(i); on each block
    (p^(k-1), p^k] where ell is the constant k, the candidate is minimal at
    the block start, and beyond k ~ nu + ell(h) the candidates only grow.
    """
    tl = F.tail.lower()
    if tl == INF:
        return INF
    if tl == -INF:
        return -INF
    p, h = F.p, F.h
    w = Fraction(1, p**nu)
    best = INF
    kstart = ell(p, F.D + 1)
    kstop = nu + ell(p, h + 1) + 6
    for k in range(kstart, max(kstart, kstop) + 1):
        lo_block = p ** (k - 1) + 1 if k >= 1 else 1
        i0 = max(F.D + 1, lo_block)
        if ell(p, i0) != k:
            continue
        best = min(best, tl - h * k + i0 * w)
    return best


def v_h_prime(F: LogSeries, nu_max: int, h: int = None) -> VPrimeBound:
    """inf over 1 <= nu <= nu_max of (q_nu(F) + h*nu), with q_nu computed
    on the head by the Gauss-norm identity q_nu = min_i (ord(a_i) + i p^-nu).

    The value is the head infimum; the tail certificate and any inexact
    zeros enter as corrections: whenever they could undercut the head the
    result is flagged not-exact with the obstruction named.  `complete`
    certifies that enlarging nu_max cannot lower the head infimum.
    """
    if nu_max < 1:
        raise InvalidInput("nu_max must be >= 1")
    if h is None:
        h = F.h
    p = F.p
    head_inf = INF        # from tracked unit coefficients
    izero_inf = INF       # lower bounds from inexact zeros
    tail_inf = INF        # lower bounds from the tail certificate
    for nu in range(1, nu_max + 1):
        w = Fraction(1, p**nu)
        hnu = h * nu
        for i, c in enumerate(F.coeffs):
            if c.is_exact_zero:
                continue
            t = c.ord_lower() + i * w + hnu
            if c.unit != 0:
                head_inf = min(head_inf, t)
            else:
                izero_inf = min(izero_inf, t)
        tq = _tail_q_bound(F, nu)
        tail_inf = tq if tq == -INF else min(tail_inf, tq + hnu)
    if h == 0:
        # q_nu decreases towards the plain coefficient minimum as nu grows
        for c in F.coeffs:
            if c.is_exact_zero:
                continue
            if c.unit != 0:
                head_inf = min(head_inf, c.ord_lower())
            else:
                izero_inf = min(izero_inf, c.ord_lower())
        tail_inf = min(tail_inf, F.tail.lower())
        complete = True
    else:
        complete = p**nu_max * h >= F.D * math.log(p) * (1 + 4 * EPS)
    if head_inf == INF and izero_inf == INF and tail_inf == INF:
        return VPrimeBound(INF, True, None, True)
    exact = complete and head_inf <= min(izero_inf, tail_inf) and head_inf < INF
    if exact:
        return VPrimeBound(head_inf, True, None, True)
    value = min(head_inf, izero_inf)
    if value == INF:
        value = tail_inf
    limited = "precision" if izero_inf < min(head_inf, tail_inf) else "tail"
    if not complete and head_inf <= min(izero_inf, tail_inf):
        limited = "tail"
    return VPrimeBound(value, False, limited, complete)


# ---------------------------------------------------------------------------
# multiplication


def ls_mul(F: LogSeries, G: LogSeries, out_deg: int = None) -> LogSeries:
    """Cauchy product; the result has growth order F.h + G.h.

    The default output degree min(D_F, D_G) is the longest head determined
    by the tracked data alone; callers may request more when both tails are
    certified zero.  The returned tail certificate realizes
    v_{h+h'}(F*G) >= v_h(F) + v_{h'}(G).
    """
    if F.p != G.p:
        raise InvalidInput("series live over different primes")
    p = F.p
    h = F.h + G.h
    D = min(F.D, G.D) if out_deg is None else out_deg
    if D > min(F.D, G.D):
        if F.tail.kind != "zero" or G.tail.kind != "zero":
            raise InvalidInput(
                "output degree beyond the tracked heads needs zero tails"
            )
        D = min(D, F.D + G.D)
    z = PadicScalar.zero(p)
    out = [z] * (D + 1)
    for i, ci in enumerate(F.coeffs):
        if ci.is_exact_zero or i > D:
            continue
        for j, cj in enumerate(G.coeffs):
            if cj.is_exact_zero or i + j > D:
                continue
            out[i + j] = out[i + j] + ci * cj
    if F.tail.kind == "zero" and G.tail.kind == "zero" and D >= F.D + G.D:
        tail = Tail.zero()
    elif F.tail.kind == "unknown" or G.tail.kind == "unknown":
        tail = Tail.unknown()
    else:
        vf = min(v_lower(F), INF)
        vg = min(v_lower(G), INF)
        if vf == -INF or vg == -INF:
            tail = Tail.unknown()
        elif vf == INF or vg == INF:
            tail = Tail.zero()
        else:
            tail = Tail.certified(Fraction(vf) + Fraction(vg))
    return LogSeries(p, h, out, tail)


# ---------------------------------------------------------------------------
# logarithm powers


def log_series(p: int, D: int, prec: int = DEFAULT_PREC) -> LogSeries:
    """log(1+X) = -sum (-X)^i / i truncated at D, tagged with order 1.

    Closed-form tail certificate: ord(1/i) + ell(i) >= 1 for every i, and
    more generally >= (h-1)*ell(D+1) + 1 for the order-h retag.
    """
    coeffs = [PadicScalar.zero(p)]
    for i in range(1, D + 1):
        coeffs.append(PadicScalar.from_fraction(p, Fraction((-1) ** (i + 1), i), prec))
    return LogSeries(p, 1, coeffs, Tail.certified(1))


def log_power(p: int, d: int, D: int, h: int = None, prec: int = DEFAULT_PREC) -> LogSeries:
    """log(1+X)^d truncated at D, tagged with order h (default d).

    Raises OrderTooSmall when h < d: the d-th power has logarithmic order
    exactly d and does not live in any smaller space.
    """
    if d < 0:
        raise InvalidInput("the exponent must be >= 0")
    if h is None:
        h = d
    if h < d:
        raise OrderTooSmall(f"log^{d}(1+X) does not belong to order {h} < {d}")
    if d == 0:
        return LogSeries.one(p, h, D, prec)
    base = log_series(p, D, prec)
    if d == 1:
        out = base
    else:
        out = base
        for _ in range(d - 2):
            out = ls_mul(out, base)
        # give the last factor the leftover order so the tags add up to h
        last = base.retag(h - d + 1) if h - d + 1 > 1 else base
        # tail certificate for the retagged factor: (t-1)*ell(D+1)+1 >= t
        if h - d + 1 > 1:
            t = h - d + 1
            last = LogSeries(p, t, base.coeffs, Tail.certified((t - 1) * ell(p, D + 1) + 1))
        out = ls_mul(out, last)
    if d == 1 and h > 1:
        out = LogSeries(p, h, out.coeffs, Tail.certified((h - 1) * ell(p, D + 1) + 1))
    elif out.h != h:
        out = out.retag(h)
    return out


# ---------------------------------------------------------------------------
# fixed-point lowering (bridge to the kernels)


def to_fixed_point(F: LogSeries, k_abs: int):
    """Lower the head to ints c_i = a_i * p^s mod p^(k_abs + s).

    Returns (ints, s, k_eff) where k_eff <= k_abs is the absolute precision
    actually certified by the inputs.  Raises PrecisionExhausted when some
    coefficient carries no usable information at all.
    """
    p = F.p
    s = 0
    k_eff = k_abs
    for c in F.coeffs:
        b = c.ord_lower()
        if b == -INF:
            raise PrecisionExhausted("coefficient with unbounded denominator")
        if b != INF:
            s = max(s, -min(0, b if isinstance(b, int) else math.floor(b)))
        a = c.abs_prec()
        if a != INF:
            k_eff = min(k_eff, a)
    if k_eff < 1:
        raise PrecisionExhausted("inputs carry no absolute precision")
    kw = k_eff + s
    mod = p**kw
    ints = []
    for c in F.coeffs:
        if c.is_zeroish:
            ints.append(0)
        else:
            ints.append(c.unit * p ** (c.val + s) % mod)
    return ints, s, k_eff


def from_fixed_point(p, h, ints, s, k_eff, tail=None):
    """Lift kernel output back to scalars: value_i = ints[i] / p^s known
    to absolute precision k_eff."""
    kw = k_eff + s
    coeffs = []
    for c in ints:
        c %= p**kw
        if c == 0:
            coeffs.append(PadicScalar.inexact_zero(p, k_eff))
        else:
            w = 0
            t = c
            while t % p == 0:
                t //= p
                w += 1
            coeffs.append(PadicScalar(p, w - s, t % p ** (kw - w), kw - w))
    return LogSeries(p, h, coeffs, tail)
