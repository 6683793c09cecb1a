"""Group cohomology of finite modules in degrees 0-2: cochains,
coboundaries, Z/B/H via integer linear algebra (Smith normal form),
restriction/corestriction, the transfer identity check, cup products, and
the crossed-homomorphism <-> holomorph-homomorphism dictionary.
"""

from __future__ import annotations

import json
from itertools import product
from typing import Callable, Dict, Sequence

from .permstruct import (
    FiniteAbelian,
    HolomorphGroup,
    Perm,
    PermGroup,
    PermStructError,
    holomorph,
)

GROUP_CAP = 24
MODULE_CAP = 16


class GroupCohError(ValueError):
    pass


class UnsupportedSize(GroupCohError):
    pass


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form
# ---------------------------------------------------------------------------

def _identity_mat(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    Oi[j] += a * Bt[j]
    return out


def smith_normal_form(M):
    """Return (S, U, Uinv, V, Vinv) with S = U*M*V diagonal, s_i | s_{i+1},
    U, V unimodular."""
    S = [row[:] for row in M]
    rows = len(S)
    cols = len(S[0]) if rows else 0
    U, Uinv = _identity_mat(rows), _identity_mat(rows)
    V, Vinv = _identity_mat(cols), _identity_mat(cols)

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_add(i, j, c):  # row_i += c * row_j
        Si, Sj = S[i], S[j]
        for t in range(cols):
            Si[t] += c * Sj[t]
        Ui, Uj = U[i], U[j]
        for t in range(rows):
            Ui[t] += c * Uj[t]
        for r in Uinv:
            r[j] -= c * r[i]

    def col_add(i, j, c):  # col_i += c * col_j
        for r in S:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]
        Vi, Vj = Vinv[i], Vinv[j]
        for t in range(cols):
            Vj[t] -= c * Vi[t]

    def row_neg(i):
        S[i] = [-x for x in S[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    while t < rows and t < cols:
        # find a pivot
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = S[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            row_swap(t, i0)
        if j0 != t:
            col_swap(t, j0)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    row_add(i, t, -q)
                    if S[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    col_add(j, t, -q)
                    if S[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        if S[t][t] < 0:
            row_neg(t)
        t += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(min(rows, cols) - 1):
            a, b = S[i][i], S[i + 1][i + 1]
            if a and b % a != 0:
                col_add(i, i + 1, 1)
                # re-clear the 2x2 block
                while S[i + 1][i]:
                    q = S[i + 1][i] // S[i][i]
                    row_add(i + 1, i, -q)
                    if S[i + 1][i]:
                        row_swap(i, i + 1)
                while S[i][i + 1]:
                    q = S[i][i + 1] // S[i][i]
                    col_add(i + 1, i, -q)
                    if S[i][i + 1]:
                        col_swap(i, i + 1)
                if S[i][i] < 0:
                    row_neg(i)
                if S[i + 1][i + 1] < 0:
                    row_neg(i + 1)
                changed = True
    return S, U, Uinv, V, Vinv


def _diag(S):
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def kernel_basis(W):
    """Basis of the integer kernel of W, as a list of column vectors."""
    if not W or not W[0]:
        cols = len(W[0]) if W else 0
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    S, _, _, V, _ = smith_normal_form(W)
    d = _diag(S)
    r = sum(1 for x in d if x)
    cols = len(W[0])
    return [[V[i][j] for i in range(cols)] for j in range(r, cols)]


def lattice_basis(gens):
    """Basis of the lattice spanned by the given column vectors (each a list
    of length a); returns a list of basis columns."""
    if not gens:
        return []
    a = len(gens[0])
    M = [[g[i] for g in gens] for i in range(a)]
    S, _, Uinv, _, _ = smith_normal_form(M)
    d = _diag(S)
    out = []
    for j, s in enumerate(d):
        if s:
            out.append([Uinv[i][j] * s for i in range(a)])
    return out


class LatticeSolver:
    """Solves B y = z over the integers for a fixed full-column-rank basis
    matrix B (columns = basis vectors)."""

    def __init__(self, basis_cols):
        self.k = len(basis_cols)
        self.a = len(basis_cols[0]) if basis_cols else 0
        B = [[c[i] for c in basis_cols] for i in range(self.a)]
        self.S, self.U, _, self.V, _ = smith_normal_form(B)
        self.d = _diag(self.S)

    def solve(self, z):
        """Integer y with B y = z, or None."""
        w = [sum(self.U[i][t] * z[t] for t in range(self.a))
             for i in range(self.a)]
        y = [0] * self.k
        for i in range(self.a):
            if i < len(self.d) and self.d[i]:
                if w[i] % self.d[i]:
                    return None
                y[i] = w[i] // self.d[i]
            elif w[i]:
                return None
        return [sum(self.V[i][t] * y[t] for t in range(self.k))
                for i in range(self.k)]


# ---------------------------------------------------------------------------
# G-modules and cochains
# ---------------------------------------------------------------------------

class FiniteGModule:
    """A finite abelian module with an action of a finite (permutation)
    group, the action given as a dict Perm -> automorphism dict."""

    def __init__(self, group: PermGroup, module: FiniteAbelian, action: Dict):
        self.group = group
        self.module = module
        if group.order > GROUP_CAP or module.order > MODULE_CAP:
            raise UnsupportedSize("group/module size exceeds desk caps")
        self.action = dict(action)
        els = sorted(group.elements)
        ident = Perm.identity(group.n)
        if ident not in self.action:
            self.action[ident] = {m: m for m in module.elements}
        for g in els:
            if g not in self.action:
                raise GroupCohError(f"action missing for {g.to_cycles()}")
        # full table verification that the action is a homomorphism
        for g in els:
            for h in els:
                gh = self.action[g * h]
                for m in module.elements:
                    if gh[m] != self.action[g][self.action[h][m]]:
                        raise GroupCohError("action is not a homomorphism")
        self.elements = els

    @staticmethod
    def trivial(group: PermGroup, module: FiniteAbelian) -> "FiniteGModule":
        ident = {m: m for m in module.elements}
        return FiniteGModule(group, module,
                             {g: ident for g in group.elements})

    @staticmethod
    def from_generator_action(group: PermGroup, module: FiniteAbelian,
                              gen_action: Dict) -> "FiniteGModule":
        """Extend an action given on generators to the whole group."""
        ident = Perm.identity(group.n)
        action = {ident: {m: m for m in module.elements}}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g, phi in gen_action.items():
                    q = p * g
                    comp = {m: action[p][phi[m]] for m in module.elements}
                    if q in action:
                        if action[q] != comp:
                            raise GroupCohError("generator action inconsistent")
                    else:
                        action[q] = comp
                        nxt.append(q)
            frontier = nxt
        return FiniteGModule(group, module, action)

    def act(self, g: Perm, m):
        return self.action[g][m]

    def fixed_points(self):
        return [m for m in self.module.elements
                if all(self.act(g, m) == m for g in self.group.generators)]

    def action_matrix(self, g: Perm):
        """Integer matrix of the action of g w.r.t. the cyclic coordinates."""
        M = self.module
        k = len(M.cyclic_orders)
        cols = []
        for i in range(k):
            e = tuple(1 if j == i else 0 for j in range(k))
            cols.append(self.act(g, e))
        return [[cols[j][i] for j in range(k)] for i in range(k)]


class Cochain:
    """An n-cochain: a total map from n-tuples of group elements to module
    elements.  Arity 0 uses the single key ()."""

    def __init__(self, gm: FiniteGModule, arity: int, table: Dict):
        if arity not in (0, 1, 2, 3):
            raise GroupCohError("arity must be 0..3")
        self.gm = gm
        self.arity = arity
        keys = list(product(gm.elements, repeat=arity))
        tab = {}
        for key in keys:
            if key not in table:
                raise GroupCohError(f"cochain table missing {key}")
            tab[key] = tuple(table[key])
        self.table = tab

    @staticmethod
    def zero(gm: FiniteGModule, arity: int) -> "Cochain":
        z = gm.module.zero()
        return Cochain(gm, arity,
                       {k: z for k in product(gm.elements, repeat=arity)})

    def __call__(self, *args):
        return self.table[tuple(args)]

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.arity == other.arity
                and self.table == other.table)

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self.table.items()))))

    def __add__(self, other: "Cochain") -> "Cochain":
        M = self.gm.module
        return Cochain(self.gm, self.arity,
                       {k: M.add(v, other.table[k])
                        for k, v in self.table.items()})

    def __neg__(self) -> "Cochain":
        M = self.gm.module
        return Cochain(self.gm, self.arity,
                       {k: M.neg(v) for k, v in self.table.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def smul(self, c: int) -> "Cochain":
        M = self.gm.module
        return Cochain(self.gm, self.arity,
                       {k: M.smul(c, v) for k, v in self.table.items()})

    def is_zero(self) -> bool:
        z = self.gm.module.zero()
        return all(v == z for v in self.table.values())


def coboundary(c: Cochain) -> Cochain:
    """The differential: d0(u)(g) = g.u - u; d1(s)(g,h) = g.s(h) - s(gh) + s(g);
    d2(s)(g,h,k) = g.s(h,k) - s(gh,k) + s(g,hk) - s(g,h)."""
    gm = c.gm
    M = gm.module
    if c.arity == 0:
        u = c.table[()]
        return Cochain(gm, 1, {(g,): M.add(gm.act(g, u), M.neg(u))
                               for g in gm.elements})
    if c.arity == 1:
        out = {}
        for g in gm.elements:
            for h in gm.elements:
                v = gm.act(g, c(h))
                v = M.add(v, M.neg(c(g * h)))
                v = M.add(v, c(g))
                out[(g, h)] = v
        return Cochain(gm, 2, out)
    if c.arity == 2:
        out = {}
        for g in gm.elements:
            for h in gm.elements:
                for k in gm.elements:
                    v = gm.act(g, c(h, k))
                    v = M.add(v, M.neg(c(g * h, k)))
                    v = M.add(v, c(g, h * k))
                    v = M.add(v, M.neg(c(g, h)))
                    out[(g, h, k)] = v
        return Cochain(gm, 3, out)
    raise GroupCohError("coboundary defined for arity <= 2")


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).is_zero()


# ---------------------------------------------------------------------------
# cohomology via Smith normal form
# ---------------------------------------------------------------------------

def _tuples(gm, n):
    return list(product(gm.elements, repeat=n))


def _cochain_to_vector(c: Cochain):
    keys = _tuples(c.gm, c.arity)
    out = []
    for k in keys:
        out.extend(c.table[k])
    return out


def _vector_to_cochain(gm, n, vec):
    keys = _tuples(gm, n)
    k = len(gm.module.cyclic_orders)
    table = {}
    for i, key in enumerate(keys):
        table[key] = tuple(x % d for x, d in
                           zip(vec[i * k:(i + 1) * k], gm.module.cyclic_orders))
    return Cochain(gm, n, table)


def _boundary_matrix(gm: FiniteGModule, n: int):
    """Integer matrix of the coboundary C^n -> C^{n+1} in the cyclic
    coordinates (rows: C^{n+1} coords, cols: C^n coords)."""
    M = gm.module
    k = len(M.cyclic_orders)
    src = _tuples(gm, n)
    dst = _tuples(gm, n + 1)
    src_index = {t: i for i, t in enumerate(src)}
    rows = len(dst) * k
    cols = len(src) * k
    F = [[0] * cols for _ in range(rows)]

    def add_block(dst_i, src_t, mat_or_sign):
        j0 = src_index[src_t] * k
        i0 = dst_i * k
        if mat_or_sign in (1, -1):
            for t in range(k):
                F[i0 + t][j0 + t] += mat_or_sign
        else:
            A = mat_or_sign
            for r in range(k):
                for s in range(k):
                    F[i0 + r][j0 + s] += A[r][s]

    for di, key in enumerate(dst):
        if n == 0:
            (g,) = key
            add_block(di, (), gm.action_matrix(g))
            add_block(di, (), -1)
        elif n == 1:
            g, h = key
            add_block(di, (h,), gm.action_matrix(g))
            add_block(di, (g * h,), -1)
            add_block(di, (g,), 1)
        elif n == 2:
            g, h, kk = key
            add_block(di, (h, kk), gm.action_matrix(g))
            add_block(di, (g * h, kk), -1)
            add_block(di, (g, h * kk), 1)
            add_block(di, (g, h), -1)
        else:
            raise GroupCohError("degree must be 0..2")
    return F


class CoclassSet:
    """H^n(G, M): invariant factors, representatives, and coset reduction."""

    def __init__(self, gm: FiniteGModule, degree: int):
        if degree not in (0, 1, 2):
            raise GroupCohError("degree must be 0, 1, or 2")
        self.gm = gm
        self.degree = degree
        M = gm.module
        k = len(M.cyclic_orders)
        src = _tuples(gm, degree)
        a = len(src) * k
        mods = [M.cyclic_orders[i % k] for i in range(a)]
        # Z^n: lattice of integer vectors x with d^n(x) = 0 mod target moduli
        F = _boundary_matrix(gm, degree)
        b = len(F)
        W = [F[i] + [M.cyclic_orders[i % k] if j == i else 0
                     for j in range(b)]
             for i in range(b)]
        kb = kernel_basis(W)
        zgens = [v[:a] for v in kb]
        zgens += [[mods[i] if j == i else 0 for j in range(a)][:a]
                  for i in range(a)]
        self._zbasis = lattice_basis(zgens)
        if len(self._zbasis) != a:
            raise GroupCohError("cocycle lattice rank defect")
        # B^n: image lattice of d^{n-1} plus the modulus relations
        bgens = [[mods[i] if j == i else 0 for j in range(a)]
                 for i in range(a)]
        if degree > 0:
            Gmat = _boundary_matrix(gm, degree - 1)
            for j in range(len(Gmat[0])):
                bgens.append([Gmat[i][j] for i in range(a)])
        bbasis = lattice_basis(bgens)
        # express B-basis in Z-basis coordinates and take SNF
        zsolver = LatticeSolver(self._zbasis)
        C = []
        for col in bbasis:
            y = zsolver.solve(col)
            if y is None:
                raise GroupCohError("coboundary outside cocycle lattice")
            C.append(y)
        Cmat = [[C[j][i] for j in range(len(C))] for i in range(a)]
        S, _, Uinv, _, _ = smith_normal_form(Cmat)
        d = _diag(S)
        # new basis E of Z^n in which B^n is spanned by s_i * E_i
        ZB = [[self._zbasis[j][i] for j in range(a)] for i in range(a)]
        E = _matmul(ZB, Uinv)
        self._E_cols = [[E[i][j] for i in range(a)] for j in range(a)]
        self._esolver = LatticeSolver(self._E_cols)
        self.invariants = [d[i] if i < len(d) else 0 for i in range(a)]
        if any(s == 0 for s in self.invariants):
            raise GroupCohError("cohomology not finite (internal error)")
        self._a = a
        self._k = k
        live = [(i, s) for i, s in enumerate(self.invariants) if s > 1]
        self._live = live
        self.order = 1
        for _, s in live:
            self.order *= s
        self.representatives = []
        for combo in product(*(range(s) for _, s in live)):
            vec = [0] * a
            for (idx, _), c in zip(live, combo):
                col = self._E_cols[idx]
                for t in range(a):
                    vec[t] += c * col[t]
            self.representatives.append(_vector_to_cochain(gm, degree, vec))

    def reduce(self, c: Cochain) -> Cochain:
        """The canonical representative cohomologous to the cocycle c."""
        if c.arity != self.degree or c.gm is not self.gm and \
                (c.gm.elements != self.gm.elements):
            raise GroupCohError("cochain does not match this coclass set")
        if not coboundary(c).is_zero():
            raise GroupCohError("not a cocycle")
        vec = _cochain_to_vector(c)
        y = self._esolver.solve(vec)
        if y is None:
            raise GroupCohError("cocycle outside lattice (internal error)")
        out = [0] * self._a
        for (idx, s) in self._live:
            cc = y[idx] % s
            col = self._E_cols[idx]
            for t in range(self._a):
                out[t] += cc * col[t]
        return _vector_to_cochain(self.gm, self.degree, out)

    def same_class(self, c1: Cochain, c2: Cochain) -> bool:
        return self.reduce(c1) == self.reduce(c2)


def cohomology(gm: FiniteGModule, n: int) -> CoclassSet:
    return CoclassSet(gm, n)


def h0_fixed_points(gm: FiniteGModule):
    return gm.fixed_points()


# ---------------------------------------------------------------------------
# crossed homomorphisms and the holomorph dictionary
# ---------------------------------------------------------------------------

def crossed_to_hol(gm: FiniteGModule, z: Cochain):
    """The homomorphism psi: G -> Hol M, g -> lambda_{phi(g), z(g)}.

    Returns (hol, psi) with psi a dict Perm -> Perm (in Hol M)."""
    if z.arity != 1:
        raise GroupCohError("need a 1-cochain")
    if not coboundary(z).is_zero():
        raise GroupCohError("not a 1-cocycle")
    hol = holomorph(gm.module)
    psi = {}
    for g in gm.elements:
        psi[g] = hol.affine(gm.action[g], z(g))
    for g in gm.elements:
        for h in gm.elements:
            if psi[g * h] != psi[g] * psi[h]:
                raise GroupCohError("psi not a homomorphism (internal error)")
    return hol, psi


def holomorph_homs_over_phi(gm: FiniteGModule):
    """All homomorphisms psi: G -> Hol M lifting phi through Hol M -> Aut M,
    i.e. psi(g) = lambda_{phi(g), t(g)}; returned as the list of t-tables."""
    # such psi correspond exactly to crossed homomorphisms t: G -> M
    M = gm.module
    els = gm.elements
    out = []
    for combo in product(M.elements, repeat=len(els)):
        t = dict(zip(els, combo))
        ok = all(t[g * h] == M.add(gm.act(g, t[h]), t[g])
                 for g in els for h in els)
        if ok:
            out.append(t)
    return out


def h1_via_hol(gm: FiniteGModule):
    """H^1 via Hol M: homomorphisms over phi modulo M-postconjugation.

    Returns (classes, bijection) where classes is a list of t-tables (one
    per M-conjugacy class) and bijection maps each class index to the
    matching representative of cohomology(gm, 1); a GroupCohError is raised
    if the correspondence fails to be bijective."""
    M = gm.module
    homs = holomorph_homs_over_phi(gm)
    remaining = {tuple(sorted((k.images, v) for k, v in t.items())): t
                 for t in homs}
    classes = []
    while remaining:
        key = min(remaining)
        t = remaining.pop(key)
        classes.append(t)
        # conjugation by translation-by-u sends t(g) to u + t(g) - g.u
        for u in M.elements:
            tw = {g: M.add(u, M.add(t[g], M.neg(gm.act(g, u))))
                  for g in t}
            remaining.pop(tuple(sorted((k.images, v) for k, v in tw.items())),
                          None)
    h1 = cohomology(gm, 1)
    bij = {}
    reps = set()
    for i, t in enumerate(classes):
        z = Cochain(gm, 1, {(g,): t[g] for g in gm.elements})
        rep = h1.reduce(z)
        bij[i] = rep
        reps.add(tuple(sorted(rep.table.items())))
    if len(reps) != len(classes) or len(classes) != h1.order:
        raise GroupCohError("Hol-dictionary bijection failed")
    return classes, bij


# ---------------------------------------------------------------------------
# restriction and corestriction
# ---------------------------------------------------------------------------

def _check_subgroup(gm: FiniteGModule, H: PermGroup):
    if H.n != gm.group.n or not H.elements <= gm.group.elements:
        raise GroupCohError("H is not a subgroup of G")


def submodule_over(gm: FiniteGModule, H: PermGroup) -> FiniteGModule:
    """The same module viewed over the subgroup H."""
    _check_subgroup(gm, H)
    return FiniteGModule(H, gm.module,
                         {h: gm.action[h] for h in H.elements})


def _coset_reps(gm: FiniteGModule, H: PermGroup):
    """Deterministic (lex-min) left coset representatives of G/H."""
    reps = []
    seen = set()
    for g in sorted(gm.group.elements):
        if g not in seen:
            reps.append(g)
            for h in sorted(H.elements):
                seen.add(g * h)
    return reps


def res_cor(gm: FiniteGModule, H: PermGroup, c: Cochain, direction: str):
    """Restriction / corestriction in degrees 0 and 1.

    res: H^n(G, M) -> H^n(H, M) by table restriction.
    cor: H^n(H, M) -> H^n(G, M) by the coset-transfer formula.
    """
    _check_subgroup(gm, H)
    M = gm.module
    hm = submodule_over(gm, H)
    if direction == "res":
        if c.arity == 0:
            return Cochain(hm, 0, {(): c.table[()]})
        if c.arity == 1:
            return Cochain(hm, 1, {(h,): c(h) for h in hm.elements})
        raise GroupCohError("res implemented in degrees 0 and 1")
    if direction != "cor":
        raise GroupCohError("direction must be 'res' or 'cor'")
    reps = _coset_reps(gm, H)
    if c.arity == 0:
        u = c.table[()]
        acc = M.zero()
        for r in reps:
            acc = M.add(acc, gm.act(r, u))
        return Cochain(gm, 0, {(): acc})
    if c.arity == 1:
        helems = H.elements
        out = {}
        for g in gm.elements:
            acc = M.zero()
            for r in reps:
                gr = g * r
                # find r' in reps and h in H with g r = r' h
                for rp in reps:
                    h = rp.inverse() * gr
                    if h in helems:
                        acc = M.add(acc, gm.act(rp, c.table[(h,)]))
                        break
                else:
                    raise GroupCohError("coset decomposition failed")
            out[(g,)] = acc
        return Cochain(gm, 1, out)
    raise GroupCohError("cor implemented in degrees 0 and 1")


# ---------------------------------------------------------------------------
# Lemma 5.3 transfer identity
# ---------------------------------------------------------------------------

def _check_h_linear(X: FiniteGModule, Y: FiniteGModule, H: PermGroup, f: Dict):
    for m in X.module.elements:
        if f[m] not in Y.module.elements:
            raise GroupCohError("f does not map into Y")
    z = X.module.zero()
    for m in X.module.elements:
        for m2 in X.module.elements:
            if f[X.module.add(m, m2)] != Y.module.add(f[m], f[m2]):
                raise GroupCohError("f is not additive")
    for h in H.elements:
        for m in X.module.elements:
            if f[X.act(h, m)] != Y.act(h, f[m]):
                raise GroupCohError("f is not H-linear")
    assert f[z] == Y.module.zero()


def induced_map(X: FiniteGModule, Y: FiniteGModule, H: PermGroup, f: Dict):
    """f~(x) = sum over coset reps r of r.f(r^-1 x); G-linear when f is
    H-linear."""
    reps = _coset_reps(X, H)
    out = {}
    for m in X.module.elements:
        acc = Y.module.zero()
        for r in reps:
            acc = Y.module.add(acc, Y.act(r, f[X.act(r.inverse(), m)]))
        out[m] = acc
    return out


def pushforward(src: FiniteGModule, dst: FiniteGModule, f: Dict, c: Cochain):
    """Apply a module map to the values of a cochain (same group)."""
    return Cochain(dst, c.arity, {k: f[v] for k, v in c.table.items()})


def lemma53_check(X: FiniteGModule, Y: FiniteGModule, H: PermGroup,
                  f: Dict, n: int):
    """Check Cor(f_* Res sigma) ~ (f~)_* sigma on every class of H^n(G, X).

    Returns (True, None) or (False, offending class representative)."""
    if n not in (0, 1):
        raise GroupCohError("n must be 0 or 1")
    _check_subgroup(X, H)
    _check_h_linear(X, Y, H, f)
    ftilde = induced_map(X, Y, H, f)
    hx = submodule_over(X, H)
    hy = submodule_over(Y, H)
    hn_y = cohomology(Y, n)
    for sigma in cohomology(X, n).representatives:
        res = res_cor(X, H, sigma, "res")
        fres = pushforward(hx, hy, f, res)
        cor = res_cor(Y, H, fres, "cor")
        direct = pushforward(X, Y, ftilde, sigma)
        if not hn_y.same_class(cor, direct):
            return False, sigma
    return True, None


# ---------------------------------------------------------------------------
# cup products
# ---------------------------------------------------------------------------

def cup11(X: FiniteGModule, Y: FiniteGModule, W: FiniteGModule,
          z1: Cochain, z2: Cochain, pairing: Callable):
    """(z1 cup z2)(g, h) = pairing(z1(g), g . z2(h)), a 2-cocycle into W.

    The pairing must be bilinear and G-equivariant; both are verified."""
    if z1.arity != 1 or z2.arity != 1:
        raise GroupCohError("cup11 needs two 1-cochains")
    if not coboundary(z1).is_zero() or not coboundary(z2).is_zero():
        raise GroupCohError("cup11 needs cocycles")
    # verify bilinearity and equivariance on the full table
    for x in X.module.elements:
        for y in Y.module.elements:
            for x2 in X.module.elements:
                if pairing(X.module.add(x, x2), y) != \
                        W.module.add(pairing(x, y), pairing(x2, y)):
                    raise GroupCohError("pairing not additive on the left")
            for y2 in Y.module.elements:
                if pairing(x, Y.module.add(y, y2)) != \
                        W.module.add(pairing(x, y), pairing(x, y2)):
                    raise GroupCohError("pairing not additive on the right")
            for g in W.group.generators:
                if pairing(X.act(g, x), Y.act(g, y)) != \
                        W.act(g, pairing(x, y)):
                    raise GroupCohError("pairing not G-equivariant")
    out = {}
    for g in W.elements:
        for h in W.elements:
            out[(g, h)] = pairing(z1(g), Y.act(g, z2(h)))
    c = Cochain(W, 2, out)
    if not coboundary(c).is_zero():
        raise GroupCohError("cup product not a cocycle (internal error)")
    return c


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def cochain_to_json(c: Cochain) -> str:
    tab = {}
    for key, val in sorted(c.table.items()):
        tab["|".join(p.to_cycles() for p in key)] = list(val)
    return json.dumps({"arity": c.arity, "table": tab}, sort_keys=True)


def cochain_from_json(gm: FiniteGModule, text: str) -> Cochain:
    data = json.loads(text)
    n = gm.group.n
    table = {}
    for key, val in data["table"].items():
        perms = tuple(Perm.from_cycles(p, n) for p in key.split("|")) \
            if key else ()
        table[perms] = tuple(val)
    return Cochain(gm, data["arity"], table)
