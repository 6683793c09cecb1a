# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Sym(n) centralizer scan and conic point search.

Must match coclass._kernels.pure semantics exactly.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


def perm_centralizer(int n, gens):
    """All permutations of {0..n-1} commuting with every generator."""
    cdef int ng = len(gens)
    cdef int i, j, gi
    cdef int* G = <int*> malloc(ng * n * sizeof(int))
    cdef int* q = <int*> malloc(n * sizeof(int))
    cdef int* c = <int*> malloc((n + 1) * sizeof(int))
    if G == NULL or q == NULL or c == NULL:
        raise MemoryError()
    out = []
    try:
        for gi in range(ng):
            g = gens[gi]
            for i in range(n):
                G[gi * n + i] = g[i]
        for i in range(n):
            q[i] = i
        for i in range(n + 1):
            c[i] = 0
        while True:
            if _commutes(q, G, ng, n):
                out.append(tuple([q[i] for i in range(n)]))
            # Heap's algorithm, iterative
            i = 1
            while i < n and c[i] >= i:
                c[i] = 0
                i += 1
            if i >= n:
                break
            if i % 2 == 0:
                q[0], q[i] = q[i], q[0]
            else:
                q[c[i]], q[i] = q[i], q[c[i]]
            c[i] += 1
        out.sort()
        return out
    finally:
        free(G)
        free(q)
        free(c)


cdef inline bint _commutes(int* q, int* G, int ng, int n):
    cdef int gi, i
    for gi in range(ng):
        for i in range(n):
            if q[G[gi * n + i]] != G[gi * n + q[i]]:
                return False
    return True


def conic_search(long long a, long long b, long long p, int k):
    """Whether a*x^2 + b*y^2 = z^2 has a primitive solution mod p^k.

    Primitive means (x, y) not both divisible by p.
    """
    cdef long long m = 1
    cdef int i
    for i in range(k):
        m *= p
    cdef long long am = a % m
    cdef long long bm = b % m
    if am < 0:
        am += m
    if bm < 0:
        bm += m
    cdef unsigned char* is_sq = <unsigned char*> malloc(m)
    cdef long long* ax2 = <long long*> malloc(m * sizeof(long long))
    cdef long long* by2 = <long long*> malloc(m * sizeof(long long))
    if is_sq == NULL or ax2 == NULL or by2 == NULL:
        raise MemoryError()
    cdef long long x, y, s
    cdef bint found = False
    cdef bint xu
    try:
        for x in range(m):
            is_sq[x] = 0
        for x in range(m):
            is_sq[(x * x) % m] = 1
            ax2[x] = (am * ((x * x) % m)) % m
            by2[x] = (bm * ((x * x) % m)) % m
        for x in range(m):
            xu = (x % p) != 0
            for y in range(m):
                if not xu and (y % p) == 0:
                    continue
                s = ax2[x] + by2[y]
                if s >= m:
                    s -= m
                if is_sq[s]:
                    found = True
                    break
            if found:
                break
        return bool(found)
    finally:
        free(is_sq)
        free(ax2)
        free(by2)
