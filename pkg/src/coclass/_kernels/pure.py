"""Pure-Python (numpy-assisted) fallbacks for the hot kernels.

Selected at import time by coclass._kernels when the compiled extension is
unavailable.  Semantics must match coclass._kernels._fast exactly; the
benchmark suite compares the two.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

BACKEND = "pure"


def perm_centralizer(n: int, gens):
    """All permutations of {0..n-1} commuting with every generator.

    Permutations are tuples of images; scans all n! elements.
    """
    gens = [tuple(g) for g in gens]
    out = []
    for q in permutations(range(n)):
        ok = True
        for g in gens:
            for i in range(n):
                if q[g[i]] != g[q[i]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(q)
    return out


def conic_search(a: int, b: int, p: int, k: int) -> bool:
    """Whether a*x^2 + b*y^2 = z^2 has a primitive solution mod p^k.

    Primitive means (x, y) not both divisible by p (a solution with
    x = y = 0 mod p cannot have a unit z when k >= 2).
    """
    m = p ** k
    zs = np.arange(m, dtype=np.int64)
    is_sq = np.zeros(m, dtype=bool)
    is_sq[(zs * zs) % m] = True
    xs = (a % m) * (zs * zs) % m
    ys = (b % m) * (zs * zs) % m
    unit = (zs % p) != 0
    # x unit, any y
    vals = (xs[unit][:, None] + ys[None, :]) % m
    if is_sq[vals].any():
        return True
    # x divisible by p, y unit
    vals = (xs[~unit][:, None] + ys[None, unit]) % m
    return bool(is_sq[vals].any())
