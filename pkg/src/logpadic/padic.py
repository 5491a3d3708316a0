"""Truncated p-adic scalars with certified relative precision.

A scalar over Q_p is one of three states:

* a regular value ``unit * p^val`` with ``unit`` an invertible residue
  modulo ``p^prec`` (so its valuation is *exactly* ``val``),
* the exact zero,
* an inexact zero: every tracked digit cancelled, all that remains is a
  certified bound ``ord >= abs_bound``.

Arithmetic never fabricates digits: the relative precision of a result is
the minimum of the inputs' precisions, further reduced by whatever
cancellation occurred in an addition.  The valuation is normalized by
ord(p) = 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, InvalidInput, PrecisionExhausted

#: Relative precision used by constructors when none is requested.
DEFAULT_PREC = 64

_INF = math.inf


def ord_int(a: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if a == 0:
        raise ValueError("ord of 0 is +infinity; handle zero before calling")
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


class PadicScalar:
    """Immutable element of Q_p known to finite relative precision."""

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val, unit: int, prec):
        # unit == 0 encodes the two zero states: val is None for the exact
        # zero, otherwise val is the certified lower bound for ord.
        self.p = p
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "PadicScalar":
        return cls(p, None, 0, 0)

    @classmethod
    def inexact_zero(cls, p: int, abs_bound: int) -> "PadicScalar":
        return cls(p, int(abs_bound), 0, 0)

    @classmethod
    def from_unit(cls, p: int, val: int, unit: int, prec: int) -> "PadicScalar":
        if prec < 1:
            raise InvalidInput("relative precision must be >= 1")
        m = p**prec
        unit %= m
        if unit % p == 0:
            raise InvalidInput("unit part must be invertible mod p")
        return cls(p, int(val), unit, prec)

    @classmethod
    def from_int(cls, p: int, a: int, prec: int = DEFAULT_PREC) -> "PadicScalar":
        if a == 0:
            return cls.zero(p)
        v = ord_int(a, p)
        return cls(p, v, (a // p**v) % p**prec, prec)

    @classmethod
    def from_fraction(cls, p: int, q, prec: int = DEFAULT_PREC) -> "PadicScalar":
        q = Fraction(q)
        if q == 0:
            return cls.zero(p)
        vn = ord_int(q.numerator, p)
        vd = ord_int(q.denominator, p)
        m = p**prec
        num = (q.numerator // p**vn) % m
        den = (q.denominator // p**vd) % m
        return cls(p, vn - vd, num * pow(den, -1, m) % m, prec)

    # -- state predicates ---------------------------------------------

    @property
    def is_exact_zero(self) -> bool:
        return self.unit == 0 and self.val is None

    @property
    def is_zeroish(self) -> bool:
        """Exact zero or indistinguishable from zero."""
        return self.unit == 0

    # -- valuation ----------------------------------------------------

    def ord(self):
        """Certified valuation.  +inf for the exact zero; raises when the
        value is indistinguishable from zero at the tracked precision."""
        if self.unit != 0:
            return self.val
        if self.val is None:
            return _INF
        raise PrecisionExhausted(
            f"value is 0 modulo p^{self.val}; its valuation is not certified"
        )

    def ord_lower(self):
        """Certified lower bound for the valuation (never raises)."""
        if self.unit != 0:
            return self.val
        return _INF if self.val is None else self.val

    def abs_prec(self):
        """The value is known modulo p^abs_prec (+inf for exact zero)."""
        if self.unit != 0:
            return self.val + self.prec
        return _INF if self.val is None else self.val

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "PadicScalar"):
        if self.p != other.p:
            raise InvalidInput("scalars live over different primes")

    def __add__(self, other: "PadicScalar") -> "PadicScalar":
        self._check(other)
        p = self.p
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        a = min(self.abs_prec(), other.abs_prec())
        if self.unit == 0 and other.unit == 0:
            return PadicScalar.inexact_zero(p, a)
        if self.unit == 0 or other.unit == 0:
            reg = self if self.unit != 0 else other
            if reg.val >= a:
                return PadicScalar.inexact_zero(p, a)
            n = a - reg.val
            return PadicScalar(p, reg.val, reg.unit % p**n, n)
        vmin = min(self.val, other.val)
        ndig = a - vmin
        if ndig <= 0:
            return PadicScalar.inexact_zero(p, a)
        m = p**ndig
        t = (self.unit * p ** (self.val - vmin) + other.unit * p ** (other.val - vmin)) % m
        if t == 0:
            return PadicScalar.inexact_zero(p, a)
        w = ord_int(t, p)
        return PadicScalar(p, vmin + w, t // p**w, ndig - w)

    def __neg__(self) -> "PadicScalar":
        if self.unit == 0:
            return self
        m = self.p**self.prec
        return PadicScalar(self.p, self.val, (-self.unit) % m, self.prec)

    def __sub__(self, other: "PadicScalar") -> "PadicScalar":
        return self + (-other)

    def __mul__(self, other: "PadicScalar") -> "PadicScalar":
        self._check(other)
        p = self.p
        if self.is_exact_zero or other.is_exact_zero:
            return PadicScalar.zero(p)
        if self.unit == 0 or other.unit == 0:
            return PadicScalar.inexact_zero(p, self.ord_lower() + other.ord_lower())
        n = min(self.prec, other.prec)
        return PadicScalar(p, self.val + other.val, self.unit * other.unit % p**n, n)

    def mul_int(self, m: int) -> "PadicScalar":
        """Multiply by an exact integer without losing relative precision."""
        if m == 0:
            return PadicScalar.zero(self.p)
        if self.is_exact_zero:
            return self
        w = ord_int(m, self.p)
        if self.unit == 0:
            return PadicScalar.inexact_zero(self.p, self.val + w)
        mod = self.p**self.prec
        return PadicScalar(
            self.p, self.val + w, self.unit * (m // self.p**w) % mod, self.prec
        )

    def inv(self) -> "PadicScalar":
        if self.is_exact_zero:
            raise DivisionByZero("inverse of exact zero")
        if self.unit == 0:
            raise PrecisionExhausted(
                "inverse of a value indistinguishable from zero"
            )
        m = self.p**self.prec
        return PadicScalar(self.p, -self.val, pow(self.unit, -1, m), self.prec)

    def __truediv__(self, other: "PadicScalar") -> "PadicScalar":
        return self * other.inv()

    def pow_int(self, k: int) -> "PadicScalar":
        if k < 0:
            return self.inv().pow_int(-k)
        out = PadicScalar.from_int(self.p, 1, self.prec if self.unit else DEFAULT_PREC)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "PadicScalar":
        """Multiply by p^k (exact)."""
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            return PadicScalar.inexact_zero(self.p, self.val + k)
        return PadicScalar(self.p, self.val + k, self.unit, self.prec)

    def reduce_prec(self, n: int) -> "PadicScalar":
        """Weaken the claimed relative precision to n digits."""
        if self.unit == 0:
            return self
        if n >= self.prec:
            return self
        if n < 1:
            return PadicScalar.inexact_zero(self.p, self.val + max(n, 0))
        return PadicScalar(self.p, self.val, self.unit % self.p**n, n)

    # -- predicates used throughout the test-suites --------------------

    def is_zero_mod(self, k) -> bool:
        """Provably congruent to 0 modulo p^k."""
        if self.is_exact_zero:
            return True
        if self.unit == 0:
            return self.val >= k
        return self.val >= k

    def residue(self, k: int) -> int:
        """The value modulo p^k as an integer in [0, p^k), when certified."""
        if self.is_exact_zero:
            return 0
        if self.unit == 0:
            if self.val >= k:
                return 0
            raise PrecisionExhausted(f"residue mod p^{k} not tracked")
        if self.val < 0 or self.abs_prec() < k:
            raise PrecisionExhausted(f"residue mod p^{k} not tracked")
        return self.unit * self.p**self.val % self.p**k

    def agrees_with(self, other: "PadicScalar") -> bool:
        """True when the difference is indistinguishable from zero."""
        return (self - other).unit == 0

    # -- dunder plumbing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return (
            self.p == other.p
            and self.val == other.val
            and self.unit == other.unit
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.p, self.val, self.unit, self.prec))

    def __repr__(self):
        if self.is_exact_zero:
            return f"0_({self.p})"
        if self.unit == 0:
            return f"O({self.p}^{self.val})"
        return f"{self.unit}*{self.p}^{self.val} + O({self.p}^{self.val + self.prec})"

    # -- JSON ----------------------------------------------------------

    def to_obj(self) -> dict:
        """Schema: {"v": int-or-null, "u": decimal digit string, "N": int}.

        null v encodes the exact zero; u == "0" with integer v encodes an
        inexact zero whose certified bound is v.
        """
        if self.is_exact_zero:
            return {"v": None, "u": "0", "N": 0}
        if self.unit == 0:
            return {"v": self.val, "u": "0", "N": 0}
        return {"v": self.val, "u": str(self.unit), "N": self.prec}

    @classmethod
    def from_obj(cls, p: int, obj: dict) -> "PadicScalar":
        try:
            v, u, n = obj["v"], int(obj["u"]), int(obj["N"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed scalar object: {obj!r}") from exc
        if u == 0:
            if v is None:
                return cls.zero(p)
            return cls.inexact_zero(p, int(v))
        return cls.from_unit(p, int(v), u, n)
