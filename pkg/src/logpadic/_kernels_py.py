"""Pure-Python kernels for truncated series arithmetic mod p^K.

All functions operate on dense lists of Python ints already reduced into
[0, mod).  The compiled twin in _kernels_cy.pyx implements the same
signatures; logpadic.kernels selects the backend at import time.
"""

BACKEND = "python"


def mul_trunc(a, b, out_len, mod):
    """Truncated Cauchy product (a * b) mod (mod, X^out_len)."""
    out = [0] * out_len
    for i, ai in enumerate(a):
        if ai == 0 or i >= out_len:
            continue
        top = min(len(b), out_len - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] = (out[i + j] + ai * bj) % mod
    return out


def phi_subst(a, p, out_len, mod, binom):
    """Substitute X -> (1+X)^p - 1 into a, truncated to out_len.

    binom is the coefficient list of (1+X)^p - 1, i.e. binom[k] = C(p, k+1),
    so the substituted variable is  sum_k binom[k] X^(k+1).
    Horner from the top coefficient down; exact for the first out_len
    coefficients because the substituted variable has no constant term.
    """
    out = [0] * out_len
    for i in range(len(a) - 1, -1, -1):
        # out <- out * omega + a_i
        new = [0] * out_len
        for m, cm in enumerate(out):
            if cm == 0:
                continue
            top = min(len(binom), out_len - m - 1)
            for k in range(top):
                w = binom[k]
                if w:
                    new[m + k + 1] = (new[m + k + 1] + cm * w) % mod
        ai = a[i]
        if ai:
            new[0] = (new[0] + ai) % mod
        out = new
    return out


def axpy(acc, vec, c, mod):
    """acc[i] += c * vec[i] (mod), in place; returns acc."""
    if c == 0:
        return acc
    for i, v in enumerate(vec):
        if v:
            acc[i] = (acc[i] + c * v) % mod
    return acc


def cyc_mul(a, b, p, n, mod):
    """Product in Z[zeta_{p^n}]/(mod) on power-basis int vectors.

    Convolution followed by the fold X^phi = -(1 + X^q + ... + X^((p-2)q)).
    """
    deg = len(a)  # = phi(p^n)
    work = [0] * (2 * deg - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                work[i + j] = (work[i + j] + ai * bj) % mod
    q = p ** (n - 1)
    for d in range(len(work) - 1, deg - 1, -1):
        c = work[d]
        if c == 0:
            continue
        work[d] = 0
        base = d - deg
        for k in range(p - 1):
            idx = base + k * q
            work[idx] = (work[idx] - c) % mod
    return work[:deg]


def cyc_horner(coeffs, point, p, n, mod):
    """Evaluate sum_i coeffs[i] * point^i by Horner.

    coeffs are base-ring ints, point is a power-basis int vector in the
    level-n cyclotomic ring; returns a power-basis int vector.
    """
    deg = len(point)
    out = [0] * deg
    for i in range(len(coeffs) - 1, -1, -1):
        out = cyc_mul(out, point, p, n, mod)
        ci = coeffs[i]
        if ci:
            out[0] = (out[0] + ci) % mod
    return out
