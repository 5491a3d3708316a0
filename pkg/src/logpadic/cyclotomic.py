"""Arithmetic in Q_p(zeta_{p^n}) with exact precision tracking.

Elements are stored in the power basis 1, z, ..., z^(phi(p^n)-1) of the
canonical generator z = zeta_{p^n}, reduced modulo the p^n-th cyclotomic
polynomial  Phi(X) = sum_{k<p} X^{k*p^(n-1)}.  Level 0 is Q_p itself.
Lower-level roots are realized inside a level-n ring as
zeta_{p^m} = zeta_{p^n}^(p^(n-m)), which makes the fixed norm-compatible
system concrete.

The valuation is normalized by ord(p) = 1, so ord takes values in
(1/phi(p^n)) * Z; it is computed by repeated exact division by the
uniformizer pi = zeta - 1 with a precision guard.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZero,
    InvalidAutomorphism,
    InvalidInput,
    PrecisionExhausted,
)
from .padic import DEFAULT_PREC, PadicScalar


def phi_pn(p: int, n: int) -> int:
    """Degree of Q_p(zeta_{p^n}) over Q_p (1 when n = 0)."""
    return 1 if n == 0 else p ** (n - 1) * (p - 1)


def _reduce(p: int, n: int, work: list) -> list:
    """Fold an over-long coefficient list modulo Phi_{p^n} in place.

    Uses X^phi = -(1 + X^q + ... + X^((p-2)q)) with q = p^(n-1).
    """
    if n == 0:
        out = work[0]
        for c in work[1:]:
            out = out + c
        return [out]
    deg = phi_pn(p, n)
    q = p ** (n - 1)
    for d in range(len(work) - 1, deg - 1, -1):
        c = work[d]
        if c.is_exact_zero:
            continue
        work[d] = PadicScalar.zero(p)
        base = d - deg
        for k in range(p - 1):
            work[base + k * q] = work[base + k * q] - c
    return work[:deg]


class CyclotomicNumber:
    """Element of Q_p(zeta_{p^n}) as a reduced polynomial in zeta."""

    __slots__ = ("p", "n", "coeffs")

    def __init__(self, p: int, n: int, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) != phi_pn(p, n):
            raise InvalidInput(
                f"level-{n} element needs {phi_pn(p, n)} coefficients, got {len(coeffs)}"
            )
        self.p = p
        self.n = n
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_scalar(cls, s: PadicScalar, n: int = 0) -> "CyclotomicNumber":
        deg = phi_pn(s.p, n)
        coeffs = [s] + [PadicScalar.zero(s.p) for _ in range(deg - 1)]
        return cls(s.p, n, coeffs)

    @classmethod
    def from_int(cls, p: int, a: int, n: int = 0, prec: int = DEFAULT_PREC):
        return cls.from_scalar(PadicScalar.from_int(p, a, prec), n)

    @classmethod
    def zero(cls, p: int, n: int = 0) -> "CyclotomicNumber":
        return cls(p, n, [PadicScalar.zero(p) for _ in range(phi_pn(p, n))])

    @classmethod
    def zeta(cls, p: int, n: int, prec: int = DEFAULT_PREC) -> "CyclotomicNumber":
        """The canonical generator zeta_{p^n} (1 when n = 0)."""
        return cls.zeta_power(p, n, 1, prec)

    @classmethod
    def zeta_power(cls, p: int, n: int, e: int, prec: int = DEFAULT_PREC):
        """zeta_{p^n}^e, reduced."""
        if n == 0:
            return cls.from_int(p, 1, 0, prec)
        pn = p**n
        e %= pn
        work = [PadicScalar.zero(p) for _ in range(pn)]
        work[e] = PadicScalar.from_int(p, 1, prec)
        return cls(p, n, _reduce(p, n, work))

    # -- structure ------------------------------------------------------

    @property
    def is_zeroish(self) -> bool:
        return all(c.is_zeroish for c in self.coeffs)

    @property
    def is_exact_zero(self) -> bool:
        return all(c.is_exact_zero for c in self.coeffs)

    def scalar_part(self, strict: bool = True) -> PadicScalar:
        """The constant coefficient; with strict=True require the rest to be
        indistinguishable from zero."""
        if strict:
            for c in self.coeffs[1:]:
                if not c.is_zeroish:
                    raise InvalidInput("element does not descend to Q_p")
        return self.coeffs[0]

    def raise_level(self, m: int) -> "CyclotomicNumber":
        """Image under the canonical inclusion into the level-m ring."""
        if m < self.n:
            raise InvalidInput("cannot lower the level by inclusion")
        if m == self.n:
            return self
        p = self.p
        if self.n == 0:
            return CyclotomicNumber.from_scalar(self.coeffs[0], m)
        step = p ** (m - self.n)
        work = [PadicScalar.zero(p) for _ in range(p**m)]
        for i, c in enumerate(self.coeffs):
            work[i * step] = c
        return CyclotomicNumber(p, m, _reduce(p, m, work))

    @staticmethod
    def _unify(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        if a.p != b.p:
            raise InvalidInput("elements live over different primes")
        n = max(a.n, b.n)
        return a.raise_level(n), b.raise_level(n)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        a, b = self._unify(self, other)
        return CyclotomicNumber(a.p, a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.p, self.n, [-c for c in self.coeffs])

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self + (-other)

    def __mul__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        a, b = self._unify(self, other)
        p, n = a.p, a.n
        deg = phi_pn(p, n)
        if n == 0:
            return CyclotomicNumber(p, 0, [a.coeffs[0] * b.coeffs[0]])
        work = [PadicScalar.zero(p) for _ in range(2 * deg - 1)]
        for i, ci in enumerate(a.coeffs):
            if ci.is_exact_zero:
                continue
            for j, cj in enumerate(b.coeffs):
                if cj.is_exact_zero:
                    continue
                work[i + j] = work[i + j] + ci * cj
        return CyclotomicNumber(p, n, _reduce(p, n, work))

    def scale(self, s: PadicScalar) -> "CyclotomicNumber":
        return CyclotomicNumber(self.p, self.n, [c * s for c in self.coeffs])

    def shift(self, k: int) -> "CyclotomicNumber":
        """Multiply by p^k (exact, coefficientwise)."""
        return CyclotomicNumber(self.p, self.n, [c.shift(k) for c in self.coeffs])

    def inv(self) -> "CyclotomicNumber":
        """Inverse via the product of Galois conjugates over the norm."""
        if self.is_exact_zero:
            raise DivisionByZero("inverse of exact zero")
        p, n = self.p, self.n
        if n == 0:
            return CyclotomicNumber(p, 0, [self.coeffs[0].inv()])
        cofactor = None
        for c in range(2, p**n + 1):
            if c % p == 0:
                continue
            conj = galois_apply(c, self)
            cofactor = conj if cofactor is None else cofactor * conj
        norm = (self * cofactor).scalar_part(strict=False)
        if norm.is_zeroish:
            if norm.is_exact_zero:
                raise DivisionByZero("inverse of exact zero (vanishing norm)")
            raise PrecisionExhausted("norm indistinguishable from zero")
        return cofactor.scale(norm.inv())

    def __truediv__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        return self * other.inv()

    def pow_int(self, k: int) -> "CyclotomicNumber":
        if k < 0:
            return self.inv().pow_int(-k)
        out = CyclotomicNumber.from_int(self.p, 1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates -------------------------------------------------------

    def agrees_with(self, other: "CyclotomicNumber") -> bool:
        return (self - other).is_zeroish

    def is_zero_mod(self, k) -> bool:
        """Provably in p^k * Z_p[zeta] (coefficientwise)."""
        return all(c.is_zero_mod(k) for c in self.coeffs)

    def min_coeff_ord(self):
        """Smallest certified coefficient valuation; requires the minimum to
        be attained by a tracked (regular) coefficient."""
        bounds = [c.ord_lower() for c in self.coeffs]
        m = min(bounds)
        if m == float("inf"):
            return m
        for c in self.coeffs:
            if c.unit != 0 and c.val == m:
                return m
        raise PrecisionExhausted(
            "minimum coefficient valuation hidden below tracked digits"
        )

    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Cyc(p={self.p}, n={self.n}, {self.coeffs!r})"

    # -- JSON --------------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "coeffs": [c.to_obj() for c in self.coeffs],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CyclotomicNumber":
        try:
            p, n = int(obj["p"]), int(obj["n"])
            coeffs = [PadicScalar.from_obj(p, c) for c in obj["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed cyclotomic object: {obj!r}") from exc
        return cls(p, n, coeffs)


def galois_apply(c: int, z: CyclotomicNumber) -> CyclotomicNumber:
    """The automorphism determined by zeta -> zeta^c (c coprime to p)."""
    p, n = z.p, z.n
    if c % p == 0:
        raise InvalidAutomorphism(f"exponent {c} is divisible by {p}")
    if n == 0:
        return z
    pn = p**n
    c %= pn
    work = [PadicScalar.zero(p) for _ in range(pn)]
    for i, coeff in enumerate(z.coeffs):
        if coeff.is_exact_zero:
            continue
        pos = i * c % pn
        work[pos] = work[pos] + coeff
    return CyclotomicNumber(p, n, _reduce(p, n, work))


def _pi_inverse(p: int, n: int, prec: int = DEFAULT_PREC) -> CyclotomicNumber:
    """(zeta - 1)^(-1) in closed form.

    Phi(X) = (X - 1) Q(X) + p with integral Q, so (zeta-1)^(-1) = -Q(zeta)/p.
    """
    pn = p**n
    phi_coeffs = [0] * pn
    for k in range(p):
        phi_coeffs[k * p ** (n - 1)] = 1
    # synthetic division of Phi - p by (X - 1): quotient coefficient at
    # X^(d-1) is the sum of the coefficients of Phi above degree d-1
    q = [0] * (pn - 1)
    carry = 0
    for d in range(pn - 1, 0, -1):
        carry += phi_coeffs[d]
        q[d - 1] = carry
    work = [
        PadicScalar.from_int(p, -a, prec).shift(-1) if a else PadicScalar.zero(p)
        for a in q
    ]
    return CyclotomicNumber(p, n, _reduce(p, n, work))


_PI_INV_CACHE: dict = {}


def cyc_ord(z: CyclotomicNumber):
    """Valuation of z normalized so ord(p) = 1 (a Fraction, or +inf).

    Computed as ord = m + k/e where p^m clears the coefficients, e is the
    ramification degree and k < e counts exact divisions by pi = zeta - 1.
    """
    if z.is_exact_zero:
        return float("inf")
    if z.is_zeroish:
        raise PrecisionExhausted("element indistinguishable from zero")
    p, n = z.p, z.n
    if n == 0:
        return Fraction(z.coeffs[0].ord())
    m = z.min_coeff_ord()  # raises if hidden by inexact zeros
    w = z.shift(-m) if m else z
    e = phi_pn(p, n)
    key = (p, n)
    if key not in _PI_INV_CACHE:
        _PI_INV_CACHE[key] = _pi_inverse(p, n)
    pi_inv = _PI_INV_CACHE[key]
    k = 0
    while k < e:
        s = w.coeffs[0]
        for c in w.coeffs[1:]:
            s = s + c
        # w mod pi is the image of w(1) in F_p
        if s.is_zeroish:
            if s.val is not None and s.val < 1:
                raise PrecisionExhausted("residue mod pi not tracked")
            divisible = True
        else:
            divisible = s.val >= 1
        if not divisible:
            break
        w = w * pi_inv
        for c in w.coeffs:
            if c.ord_lower() < 0:
                raise PrecisionExhausted(
                    "division by the uniformizer left untracked digits"
                )
        k += 1
    return Fraction(m) + Fraction(k, e)


def cyc_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    """Dispatcher used by the CLI: op in {add, mul, inv} (inv ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    raise InvalidInput(f"unknown cyclotomic operation {op!r}")
