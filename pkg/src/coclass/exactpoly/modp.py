"""Dense polynomial arithmetic and factorization over GF(p).

Polynomials are lists of ints in [0, p), ascending degree, trailing zeros
stripped.  Factorization is distinct-degree followed by Cantor-Zassenhaus
equal-degree splitting.
"""

from __future__ import annotations

import random


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    return trim(out)


def gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (out[i] - b[i]) % p
    return trim(out)


def gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("gf division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, p - 2, p)
    if len(a) - 1 < db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            qc = c * inv % p
            q[i - db] = qc
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - qc * b[j]) % p
        else:
            a[i] = 0
    return trim(q), trim(a)


def gf_rem(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def gf_gcd(a, b, p):
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_pow_mod(a, n, m, p):
    result = [1]
    a = gf_rem(a, m, p)
    while n:
        if n & 1:
            result = gf_rem(gf_mul(result, a, p), m, p)
        a = gf_rem(gf_mul(a, a, p), m, p)
        n >>= 1
    return result


def gf_deriv(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def gf_from_int_poly(coeffs, p):
    return trim([c % p for c in coeffs])


def gf_is_squarefree(a, p):
    d = gf_deriv(a, p)
    if not d:
        return False
    return len(gf_gcd(a, d, p)) == 1


def _distinct_degree(f, p):
    """Split monic squarefree f into [(product of irreducibles of degree d, d)]."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, f, p)
        g = gf_gcd(f, gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = gf_divmod(f, g, p)[0]
            h = gf_rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = trim(a)
        if len(a) < 2:
            continue
        g = gf_gcd(f, a, p)
        if len(g) > 1:
            break
        if p == 2:
            t = a
            for _ in range(d * 1 - 1):
                t = gf_add(t, gf_pow_mod(a, 2, f, p), p)
                a = gf_pow_mod(a, 2, f, p)
            g = gf_gcd(f, t, p)
        else:
            b = gf_pow_mod(a, (p ** d - 1) // 2, f, p)
            g = gf_gcd(f, gf_sub(b, [1], p), p)
        if 1 < len(g) < len(f):
            break
    left = _equal_degree(g, d, p, rng)
    right = _equal_degree(gf_divmod(f, g, p)[0], d, p, rng)
    return left + right


def gf_factor_squarefree(f, p, seed=0):
    """Factor monic squarefree f over GF(p) into monic irreducibles."""
    rng = random.Random(seed or (p * 1000003 + len(f)))
    factors = []
    for g, d in _distinct_degree(gf_monic(f, p), p):
        factors.extend(_equal_degree(g, d, p, rng))
    factors.sort(key=lambda a: (len(a), a))
    return factors
