import os
import random

import pytest

from logpadic.padic import PadicScalar

#: All randomness in the suite flows through this seed.
SEED = int(os.environ.get("LOGP_SEED", "20240813"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def make_rng(tag: str) -> random.Random:
    """Independent deterministic stream per test family."""
    return random.Random(f"{SEED}:{tag}")


def random_unit_scalar(r: random.Random, p: int, vmin=-3, vmax=6, prec=48) -> PadicScalar:
    u = r.randrange(1, p**6)
    while u % p == 0:
        u = r.randrange(1, p**6)
    return PadicScalar.from_unit(p, r.randint(vmin, vmax), u, prec)


def random_scalar(r: random.Random, p: int, zero_rate=0.15, **kw) -> PadicScalar:
    if r.random() < zero_rate:
        return PadicScalar.zero(p)
    return random_unit_scalar(r, p, **kw)


def random_h_plus_series(r: random.Random, p: int, h: int, D: int,
                         prec: int = 128, zero_rate: float = 0.1):
    """Random element of H_h^+ with zero tail: ord(a_i) >= -h*ell(i) and
    at least one coefficient attaining valuation close to the floor."""
    from logpadic.logseries import LogSeries, Tail, ell

    coeffs = []
    for i in range(D + 1):
        if r.random() < zero_rate:
            coeffs.append(PadicScalar.zero(p))
            continue
        floor_v = -h * ell(p, i)
        v = floor_v + r.choice([0, 0, 1, 2, 3])
        u = r.randrange(1, p**5)
        while u % p == 0:
            u = r.randrange(1, p**5)
        coeffs.append(PadicScalar.from_unit(p, v, u, prec))
    if all(c.is_exact_zero for c in coeffs):
        coeffs[0] = PadicScalar.from_int(p, 1, prec)
    return LogSeries(p, h, coeffs, Tail.zero())
