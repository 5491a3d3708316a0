"""Finite-level measures on the cyclotomic Galois group and the polynomial
side of the interpolation machine.

A level-n measure assigns a scalar to every unit residue mod p^n.  It embeds
into series through iota(mu) = sum_a mu(a) (1+X)^a~ with lifts a~ in
[1, p^n]; the image satisfies psi = 0.  Twisting by the j-th power of the
cyclotomic character multiplies each mass by a~^j, matching the derivation
D_CW on the series side.

On the group-algebra side the variable is Y = gamma_0 - 1 with u = 1+p the
cyclotomic-character value of gamma_0.  The distinguished polynomials
    omega_n_j(Y) = (u^(-j)(1+Y))^(p^n) - 1,
    Omega(Y) = prod_{j=l}^{l'} omega_n_j(Y)
have the interpolation grid u^j zeta - 1 (zeta^(p^n) = 1) as their roots;
cutting modulo Omega realizes the finite-level projection, and values on
the grid are equivalent to the residue class modulo Omega (evaluate_on_grid
and interpolate_on_grid are mutually inverse).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, phi_pn
from .errors import InvalidInput, PrecisionExhausted
from .logseries import LogSeries, Tail, ell
from .padic import DEFAULT_PREC, PadicScalar, ord_int

#: working relative precision for exact integer data built here
_WORK_PREC = 256


def unit_residues(p: int, n: int):
    return [a for a in range(1, p**n) if a % p]


class CycMeasure:
    """Level-n measure: a map from (Z/p^n)^* to scalars."""

    __slots__ = ("p", "n", "values")

    def __init__(self, p: int, n: int, values: dict):
        if n < 1:
            raise InvalidInput("measures live at level n >= 1")
        keys = set(values)
        if keys != set(unit_residues(p, n)):
            raise InvalidInput("measure must assign a value to every unit residue")
        self.p = p
        self.n = n
        self.values = dict(values)

    @classmethod
    def zero(cls, p: int, n: int) -> "CycMeasure":
        z = PadicScalar.zero(p)
        return cls(p, n, {a: z for a in unit_residues(p, n)})

    @classmethod
    def dirac(cls, p: int, n: int, a: int, prec: int = DEFAULT_PREC) -> "CycMeasure":
        if a % p == 0:
            raise InvalidInput("the support must be a unit residue")
        vals = {b: PadicScalar.zero(p) for b in unit_residues(p, n)}
        vals[a % p**n] = PadicScalar.from_int(p, 1, prec)
        return cls(p, n, vals)

    def __add__(self, other: "CycMeasure") -> "CycMeasure":
        if (self.p, self.n) != (other.p, other.n):
            raise InvalidInput("measures live at different levels")
        return CycMeasure(
            self.p, self.n,
            {a: self.values[a] + other.values[a] for a in self.values},
        )

    def scale(self, s: PadicScalar) -> "CycMeasure":
        return CycMeasure(self.p, self.n, {a: v * s for a, v in self.values.items()})

    def mass(self) -> PadicScalar:
        out = PadicScalar.zero(self.p)
        for v in self.values.values():
            out = out + v
        return out

    def agrees_with(self, other: "CycMeasure") -> bool:
        return all(
            self.values[a].agrees_with(other.values[a]) for a in self.values
        )

    def to_obj(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "values": {str(a): v.to_obj() for a, v in sorted(self.values.items())},
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CycMeasure":
        try:
            p, n = int(obj["p"]), int(obj["n"])
            values = {
                int(a): PadicScalar.from_obj(p, v) for a, v in obj["values"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed measure object: {obj!r}") from exc
        return cls(p, n, values)


def embed_measure(mu: CycMeasure, D: int = None) -> LogSeries:
    """iota(mu) = sum_a mu(a) (1+X)^a~ with unit lifts a~ in [1, p^n].

    The default truncation p^n - 1 keeps the full polynomial (zero tail);
    the embedding lands in the psi = 0 submodule.
    """
    p, n = mu.p, mu.n
    if D is None:
        D = p**n - 1
    out = LogSeries.zero(p, 0, D)
    for a, v in mu.values.items():
        if v.is_exact_zero:
            continue
        out = out + LogSeries.binomial_power(p, a, D, 0, _WORK_PREC).scale(v)
    if D >= p**n - 1:
        out = LogSeries(p, 0, out.coeffs, Tail.zero())
    return out


def twist_measure(mu: CycMeasure, j: int) -> CycMeasure:
    """(chi^j mu)(a) = a~^j mu(a); inverse lifts handle negative j exactly."""
    if j == 0:
        return mu
    p, n = mu.p, mu.n
    out = {}
    for a, v in mu.values.items():
        w = PadicScalar.from_fraction(p, Fraction(a) ** j, _WORK_PREC)
        out[a] = v * w
    return CycMeasure(p, n, out)


# ---------------------------------------------------------------------------
# Teichmuller branches


def teichmuller_residue(p: int, n: int, a: int) -> int:
    """The (p-1)-torsion part of a in (Z/p^n)^*: a^(p^(n-1)) mod p^n."""
    return pow(a, p ** (n - 1), p**n)


def dlog_u(p: int, n: int, x: int, u: int = None) -> int:
    """Discrete log base u on 1 + pZ/p^n, digit by digit."""
    if u is None:
        u = 1 + p
    pn = p**n
    x %= pn
    if x % p == 0 or (x - 1) % p:
        raise InvalidInput("dlog_u expects an element of 1 + pZ/p^n")
    s = 0
    cur = 1
    for k in range(1, n):
        mod = p ** (k + 1)
        step = pow(u, p ** (k - 1), pn)
        d = 0
        acc = cur
        while acc % mod != x % mod:
            acc = acc * step % pn
            d += 1
            if d >= p:
                raise InvalidInput("discrete log failed: u is not a generator?")
        s += d * p ** (k - 1)
        cur = acc
    return s


def measure_to_gamma(mu: CycMeasure, u: int = None):
    """Split a level-n measure along the p-1 Teichmuller branches.

    Returns {b: polynomial in Y} where b runs over the Teichmuller residues
    mod p^n and the branch polynomial is sum_s mu(b u^s) (1+Y)^s of degree
    < p^(n-1) (Y = gamma_0 - 1, u = chi(gamma_0)).
    """
    p, n = mu.p, mu.n
    if u is None:
        u = 1 + p
    deg = p ** (n - 1) - 1
    branches = {}
    for a, v in mu.values.items():
        b = teichmuller_residue(p, n, a)
        s = dlog_u(p, n, a * pow(b, -1, p**n) % p**n, u)
        if b not in branches:
            branches[b] = LogSeries.zero(p, 0, deg)
        if not v.is_exact_zero:
            branches[b] = branches[b] + LogSeries.binomial_power(
                p, s, deg, 0, _WORK_PREC
            ).scale(v)
    for b in branches:
        branches[b] = LogSeries(p, 0, branches[b].coeffs, Tail.zero())
    return branches


def gamma_to_measure(branches: dict, p: int, n: int, u: int = None) -> CycMeasure:
    """Inverse assembly: monomial coefficients back to group masses.

    Y^k = sum_t C(k,t) (-1)^(k-t) (1+Y)^t converts the polynomial to the
    group basis, whose coefficient at (1+Y)^s is the mass at b u^s.
    """
    if u is None:
        u = 1 + p
    pn = p**n
    vals = {a: PadicScalar.zero(p) for a in unit_residues(p, n)}
    for b, poly in branches.items():
        masses = [PadicScalar.zero(p)] * (poly.D + 1)
        for k, c in enumerate(poly.coeffs):
            if c.is_exact_zero:
                continue
            for t in range(k + 1):
                masses[t] = masses[t] + c.mul_int(
                    (-1) ** (k - t) * math.comb(k, t)
                )
        for s, m in enumerate(masses):
            a = b * pow(u, s, pn) % pn
            vals[a] = vals[a] + m
    return CycMeasure(p, n, vals)


# ---------------------------------------------------------------------------
# the distinguished polynomials


@dataclass(frozen=True)
class OmegaPoly:
    """omega_n_j(Y) = (u^(-j)(1+Y))^(p^n) - 1 with exact integer
    coefficients to working precision (degree exactly p^n, unit leading
    coefficient u^(-j p^n))."""

    p: int
    n: int
    j: int
    u: int
    prec: int
    coeffs: tuple  # ints mod p^prec, length p^n + 1

    @property
    def degree(self) -> int:
        return self.p**self.n

    def as_series(self, h: int = 0) -> LogSeries:
        """Scalar lift; exact valuations need prec > n + ord(j)."""
        p = self.p
        out = []
        for c in self.coeffs:
            if c == 0:
                out.append(PadicScalar.zero(p))
            else:
                w = ord_int(c, p)
                out.append(PadicScalar(p, w, c // p**w % p ** (self.prec - w),
                                       self.prec - w))
        return LogSeries(p, h, out, Tail.zero())


def omega_poly(p: int, n: int, j: int, u: int = None,
               prec: int = _WORK_PREC) -> OmegaPoly:
    if u is None:
        u = 1 + p
    if n < 0:
        raise InvalidInput("level must be >= 0")
    pn = p**n
    mod = p**prec
    w = pow(u, -j * pn, mod)
    coeffs = [(w * math.comb(pn, i) - (1 if i == 0 else 0)) % mod
              for i in range(pn + 1)]
    if j != 0 and prec <= n + ord_int(j, p):
        raise InvalidInput("working precision too small for the constant term")
    return OmegaPoly(p, n, j, u, prec, tuple(coeffs))


def omega_v_h(p: int, n: int, j: int, h: int, u: int = None) -> Fraction:
    """Brute-force v_h of omega_n_j from its exact coefficients."""
    om = omega_poly(p, n, j, u)
    best = math.inf
    for i, c in enumerate(om.coeffs):
        if c == 0:
            continue
        best = min(best, ord_int(c, p) + h * ell(p, i))
    return best


def big_omega(p: int, n: int, l: int, l2: int, u: int = None,
              prec: int = _WORK_PREC):
    """Omega = prod_{j=l}^{l2} omega_n_j as an integer coefficient list."""
    if l > l2:
        raise InvalidInput("window must satisfy l <= l'")
    mod = p**prec
    out = [1]
    for j in range(l, l2 + 1):
        om = omega_poly(p, n, j, u, prec)
        new = [0] * (len(out) + om.degree)
        for i, a in enumerate(out):
            if a == 0:
                continue
            for k, b in enumerate(om.coeffs):
                if b:
                    new[i + k] = (new[i + k] + a * b) % mod
        out = new
    return out


def reduce_mod_omega(F: LogSeries, n: int, l: int, l2: int, u: int = None) -> LogSeries:
    """Remainder of the tracked head modulo Omega = prod omega_n_j.

    The divisor is distinguished up to its unit leading coefficient, so
    plain long division after normalizing the lead is exact at tracked
    precision.  The remainder has degree < (l'-l+1) p^n.
    """
    p = F.p
    omega = big_omega(p, n, l, l2, u)
    deg = len(omega) - 1
    if F.D < deg:
        return F
    lead = omega[-1]
    mod = p**_WORK_PREC
    inv_lead = pow(lead, -1, mod)
    monic = [c * inv_lead % mod for c in omega]
    div_scalars = []
    for c in monic:
        if c == 0:
            div_scalars.append(PadicScalar.zero(p))
        else:
            w = ord_int(c, p)
            div_scalars.append(
                PadicScalar(p, w, c // p**w % p ** (_WORK_PREC - w), _WORK_PREC - w)
            )
    R = list(F.coeffs)
    for k in range(F.D, deg - 1, -1):
        c = R[k]
        if c.is_exact_zero:
            continue
        # quotient coefficient c / 1 (monic); subtract c * monic * Y^(k-deg)
        R[k] = PadicScalar.zero(p)
        base = k - deg
        for i in range(deg):
            d = div_scalars[i]
            if not d.is_exact_zero:
                R[base + i] = R[base + i] - c * d
    return LogSeries(p, F.h, R[:deg], Tail.zero())


# ---------------------------------------------------------------------------
# the interpolation grid


def grid_points(p: int, n: int):
    """Exponents e mod p^n; zeta = zeta_{p^n}^e has exact level
    m(e) = n - ord(e) (level 0 for e = 0)."""
    return list(range(p**n))


def zeta_level(p: int, n: int, e: int) -> int:
    if e % p**n == 0:
        return 0
    return n - ord_int(e % p**n, p)


def point_value(p: int, n: int, e: int, j: int, u: int = None,
                prec: int = _WORK_PREC) -> CyclotomicNumber:
    """The grid point u^j zeta^e - 1 inside the level-n ring."""
    if u is None:
        u = 1 + p
    uj = PadicScalar.from_fraction(p, Fraction(u) ** j, prec)
    z = CyclotomicNumber.zeta_power(p, n, e, prec)
    return z.scale(uj) - CyclotomicNumber.from_int(p, 1, n, prec)


def eval_at_cyclotomic(F: LogSeries, z: CyclotomicNumber) -> CyclotomicNumber:
    """F(z) by Horner over the cyclotomic ring (head only; callers supply
    polynomial data)."""
    p = F.p
    out = CyclotomicNumber.zero(p, z.n)
    for i in range(F.D, -1, -1):
        out = out * z
        c = F.coeffs[i]
        if not c.is_exact_zero:
            out = out + CyclotomicNumber.from_scalar(c, z.n)
    return out


def evaluate_on_grid(F: LogSeries, n: int, l: int, l2: int, u: int = None):
    """Values {(j, e): F(u^j zeta^e - 1)} over the window and all levels."""
    p = F.p
    out = {}
    for j in range(l, l2 + 1):
        for e in grid_points(p, n):
            out[(j, e)] = eval_at_cyclotomic(F, point_value(p, n, e, j, u))
    return out


def _fourier_invert(p: int, n: int, values, prec: int = _WORK_PREC):
    """Given w(e) = R(zeta^e - 1) for all e mod p^n with deg R < p^n,
    recover the scalar coefficients of R in the (1+Z)^k basis:
    c_k = p^(-n) sum_e zeta^(-ke) w(e)."""
    pn = p**n
    pinv_n = PadicScalar.from_int(p, 1, prec).shift(-n)
    coeffs = []
    for k in range(pn):
        acc = CyclotomicNumber.zero(p, n)
        for e, w in values.items():
            rot = CyclotomicNumber.zeta_power(p, n, (-k * e) % pn, prec)
            acc = acc + rot * w.raise_level(n)
        c = acc.scalar_part(strict=False)
        for rest in acc.coeffs[1:]:
            if not rest.is_zeroish:
                raise PrecisionExhausted(
                    "grid values do not descend to the base field"
                )
        coeffs.append(c * pinv_n)
    return coeffs


def interpolate_on_grid(p: int, n: int, l: int, l2: int, values: dict,
                        u: int = None, prec: int = _WORK_PREC) -> LogSeries:
    """The unique Y-polynomial of degree < (l'-l+1) p^n with the given
    values at the points u^j zeta^e - 1.

    Per column j the values determine F mod omega_n_j by a finite Fourier
    inversion over Q_p(zeta_{p^n}) followed by descent to Q_p; the columns
    are glued by a Newton-style chinese remainder pass, entirely through
    evaluations."""
    from .logseries import ls_mul

    if u is None:
        u = 1 + p
    pn = p**n
    deg_total = (l2 - l + 1) * pn - 1
    F = LogSeries.zero(p, 0, deg_total)
    M = LogSeries.one(p, 0, 0, prec)  # running product of omega_n_j
    for j in range(l, l2 + 1):
        # residual values (v - F(pt)) / M(pt) on column j
        resid = {}
        for e in grid_points(p, n):
            pt = point_value(p, n, e, j, u, prec)
            num = values[(j, e)].raise_level(n) - eval_at_cyclotomic(F, pt)
            den = eval_at_cyclotomic(M, pt)
            resid[e] = num * den.inv()
        # the degree < p^n correction t with the residuals as grid values:
        # with 1+Y = u^j (1+Z) the column grid becomes the plain zeta grid
        binom_coeffs = _fourier_invert(p, n, resid, prec)
        # t(Y) = sum_k c_k u^(-jk) (1+Y)^k
        t = LogSeries.zero(p, 0, pn - 1)
        for k, c in enumerate(binom_coeffs):
            if c.is_exact_zero:
                continue
            w = c * PadicScalar.from_fraction(p, Fraction(u) ** (-j * k), prec)
            t = t + LogSeries.binomial_power(p, k, pn - 1, 0, prec).scale(w)
        F = F + ls_mul(M, t, out_deg=M.D + t.D).extend(deg_total)
        M = ls_mul(M, omega_poly(p, n, j, u, prec).as_series(0), out_deg=M.D + pn)
    return F
