"""Tests for coclass.exactpoly.

Expected values marked as derived were produced by independent oracles
(numeric Vandermonde products, hand Sylvester determinants, nested-radical
evaluation, a numeric root-matching oracle) and frozen here.
"""

import random
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coclass.exactpoly import (
    ExactPolyError,
    RationalPoly,
    compositum_factors,
    discriminant,
    factor_rationals,
    fields_isomorphic,
    gcd,
    has_root_in_extension,
    is_irreducible,
    is_squarefree,
    numeric_roots,
    real_roots,
    resultant,
    roots_in_extension_count,
    squarefree_decomposition,
)

P = RationalPoly.from_text
F = Fraction


# ---------------------------------------------------------------------------
# text round trip and arithmetic basics
# ---------------------------------------------------------------------------

def test_text_round_trip():
    f = P("-2,0,1")
    assert f.degree == 2
    assert f.coeffs == (F(-2), F(0), F(1))
    assert f.to_text() == "-2,0,1"
    g = P("1/2,-3/4,1")
    assert g.to_text() == "1/2,-3/4,1"


def test_arithmetic_identities():
    f = P("1,2,3")
    g = P("-1,0,0,5")
    q, r = (f * g + P("7")).divmod(g)
    assert q == f and r == P("7")
    assert (f * g).degree == f.degree + g.degree


# ---------------------------------------------------------------------------
# discriminant
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("D", [2, 3, -1, F(5, 7), 0])
def test_discriminant_quadratic(D):
    # disc(x^2 - D) = 4D
    f = RationalPoly([-D, 0, 1])
    assert discriminant(f) == 4 * F(D)


@pytest.mark.parametrize("t", [0, 2, -2, F(7, 4), F(-1, 3)])
def test_discriminant_depressed_cubic(t):
    # disc(x^3 - 3x - t) = 27(4 - t^2); oracle: -4p^3 - 27q^2 and a
    # numeric Vandermonde check below
    f = RationalPoly([-F(t), -3, 0, 1])
    assert discriminant(f) == 27 * (4 - F(t) ** 2)


def test_discriminant_vandermonde_oracle():
    f = P("-1/2,-3,0,1")  # x^3 - 3x - 1/2
    roots = [b.mid for b in numeric_roots(f, 120)]
    prod = mp.mpf(1)
    for i in range(3):
        for j in range(i + 1, 3):
            prod *= (roots[i] - roots[j]) ** 2
    expected = discriminant(f)
    assert abs(prod - mp.mpf(expected.numerator) / expected.denominator) < mp.mpf(2) ** -80


def test_discriminant_quartic_frozen():
    # disc(x^4 + px^2 + r) = 16 r (p^2 - 4r)^2; here 16*7*64 = 7168 = 2^10*7,
    # cross-checked against the Vandermonde product of +-sqrt(3 +- sqrt2)
    assert discriminant(P("7,0,-6,0,1")) == 7168
    a2, b2 = 3 + mp.sqrt(2), 3 - mp.sqrt(2)
    vand = 16 * a2 * b2 * (a2 - b2) ** 4
    assert abs(vand - 7168) < 1e-9


def test_discriminant_rejects_constants():
    with pytest.raises(ExactPolyError):
        discriminant(P("3"))


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------

def test_resultant_examples():
    assert resultant(P("-1,1"), P("-1,1")) == 0
    # hand Sylvester determinant: res(x^2-2, x^2-3) = 1
    assert resultant(P("-2,0,1"), P("-3,0,1")) == 1


def test_resultant_discriminant_identity():
    # res(f, f') = lc * disc * (-1)^{n(n-1)/2} for several f
    for text in ["-2,0,1", "7,0,-6,0,1", "1,1,1,1", "-1,0,0,0,0,2"]:
        f = P(text)
        n = f.degree
        sign = (-1) ** (n * (n - 1) // 2)
        assert resultant(f, f.derivative()) == sign * f.lc * discriminant(f)


def test_disc_product_identity():
    # disc(fg) = disc(f) disc(g) res(f,g)^2 for coprime monic f, g
    cases = [(P("-2,0,1"), P("-3,0,1")),
             (P("-1,1"), P("1,1,1")),
             (P("7,0,-6,0,1"), P("2,0,1"))]
    for f, g in cases:
        assert discriminant(f * g) == (
            discriminant(f) * discriminant(g) * resultant(f, g) ** 2)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def test_factor_cyclotomic():
    fac = factor_rationals(P("-1,0,0,1"))
    assert fac == [(P("-1,1"), 1), (P("1,1,1"), 1)]


def test_factor_irreducible_quartic():
    assert is_irreducible(P("1,0,-10,0,1"))  # min poly of sqrt2 + sqrt3


def test_factor_biquadratic_product():
    f = P("-2,0,1") * P("-3,0,1")
    # sorted by (degree, ascending coefficients)
    assert factor_rationals(f) == [(P("-3,0,1"), 1), (P("-2,0,1"), 1)]


def test_factor_multiplicities_and_lc():
    f = 6 * P("1,1") ** 2 * P("-2,0,1") * P("5,1")
    fac = factor_rationals(f)
    assert (P("1,1"), 2) in fac and (P("-2,0,1"), 1) in fac and (P("5,1"), 1) in fac
    g = RationalPoly([f.lc])
    for h, m in fac:
        g = g * h ** m
    assert g == f


def test_factor_nonmonic():
    f = P("-1,0,2")  # 2x^2 - 1, irreducible
    assert factor_rationals(f) == [(P("-1/2,0,1"), 1)]


def test_factor_degree_16():
    # product of two octics built from quartic minimal polynomials
    a = P("1,0,-10,0,1").compose(P("0,0,1"))  # degree 8
    b = P("7,0,-6,0,1").compose(P("1,0,1"))   # degree 8
    fac = factor_rationals(a * b)
    total = sum(h.degree * m for h, m in fac)
    assert total == 16
    g = RationalPoly([1])
    for h, m in fac:
        g = g * h ** m
    assert g == (a * b).monic()


_SMALL_IRRED = [P("-1,1"), P("1,1"), P("2,1"), P("-2,0,1"), P("1,1,1"),
                P("1,0,1"), P("-2,0,0,1"), P("1,0,-10,0,1")]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(range(len(_SMALL_IRRED))), min_size=1, max_size=4),
       st.integers(min_value=-5, max_value=5).filter(lambda c: c != 0))
def test_factor_remultiplies(idxs, lead):
    f = RationalPoly([lead])
    for i in idxs:
        f = f * _SMALL_IRRED[i]
    fac = factor_rationals(f)
    g = RationalPoly([f.lc])
    for h, m in fac:
        g = g * h ** m
    assert g == f
    assert all(is_irreducible(h) for h, _ in fac)


def test_squarefree_decomposition():
    f = P("1,1") ** 3 * P("-2,0,1")
    dec = squarefree_decomposition(f)
    assert dec == [(P("-2,0,1"), 1), (P("1,1"), 3)]


# ---------------------------------------------------------------------------
# numeric roots
# ---------------------------------------------------------------------------

def test_numeric_roots_i():
    balls = numeric_roots(P("1,0,1"), 100)
    assert len(balls) == 2
    for b, target in zip(balls, [mp.mpc(0, -1), mp.mpc(0, 1)]):
        assert abs(b.mid - target) <= b.radius
        assert b.radius <= mp.mpf(2) ** -100


def test_numeric_roots_cardano():
    # x^3 - 3x - 1/2: real roots 2cos((phi + 2k pi)/3), cos(phi) = 1/4
    f = P("-1/2,-3,0,1")
    balls = real_roots(f, 100)
    assert len(balls) == 3
    with mp.workprec(200):
        phi = mp.acos(mp.mpf(1) / 4)
        expected = sorted(2 * mp.cos((phi + 2 * mp.pi * k) / 3) for k in range(3))
        for b, e in zip(balls, expected):
            assert abs(b.mid - e) <= b.radius


def test_numeric_roots_nested_radicals():
    # x^4 - 6x^2 + 7: roots +-sqrt(3 +- sqrt2)
    balls = numeric_roots(P("7,0,-6,0,1"), 120)
    with mp.workprec(300):
        expected = sorted([mp.sqrt(3 + mp.sqrt(2)), -mp.sqrt(3 + mp.sqrt(2)),
                           mp.sqrt(3 - mp.sqrt(2)), -mp.sqrt(3 - mp.sqrt(2))],
                          key=lambda t: mp.mpf(t))
        for b, e in zip(balls, expected):
            assert abs(b.mid - e) <= b.radius


def test_numeric_roots_disjoint_and_conjugate():
    balls = numeric_roots(P("1,1,1,1,1"), 80)  # 5th cyclotomic
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            assert not balls[i].overlaps(balls[j])
    with mp.workprec(200):
        mids = [b.mid for b in balls]
        for b in balls:
            conj = mp.conj(b.mid)
            assert any(abs(conj - m) <= 2 * b.radius for m in mids)


def test_numeric_roots_precision_nesting():
    for text in ["1,0,1", "-1/2,-3,0,1", "7,0,-6,0,1", "1,1,1,1,1"]:
        coarse = numeric_roots(P(text), 64)
        fine = numeric_roots(P(text), 128)
        for c, f_ in zip(coarse, fine):
            assert c.contains(f_)


def test_numeric_roots_rejects_squareful():
    with pytest.raises(ExactPolyError):
        numeric_roots(P("1,2,1"), 53)


# ---------------------------------------------------------------------------
# root-in-extension and compositum
# ---------------------------------------------------------------------------

def test_has_root_examples():
    # sqrt2 = theta^2 - 3 for theta a root of x^4 - 6x^2 + 7
    assert has_root_in_extension(P("-2,0,1"), P("7,0,-6,0,1"))
    assert not has_root_in_extension(P("-3,0,1"), P("-2,0,1"))
    f = P("1,0,-10,0,1")
    assert has_root_in_extension(f, f)


def test_has_root_rejects_reducible_extension():
    with pytest.raises(ExactPolyError):
        has_root_in_extension(P("-2,0,1"), P("-1,0,0,1"))


def _numeric_root_oracle(g, f):
    """Independent oracle: match each root ball of g against polynomial
    images of the root balls of f, then verify any candidate exactly.

    If g has a root h(theta) in Q[x]/(f), then h maps each conjugate of
    theta to some root of g, so h is recovered by solving the Vandermonde
    system h(theta_i) = beta_{a(i)} for some assignment a, rounding to
    rationals, and checking g(h) = 0 mod f exactly.
    """
    from itertools import product

    n = f.degree
    thetas = [b.mid for b in numeric_roots(f, 200)]
    betas = [b.mid for b in numeric_roots(g, 200)]
    with mp.workprec(700):
        V = mp.matrix([[t ** k for k in range(n)] for t in thetas])
        for assign in product(range(len(betas)), repeat=n):
            rhs = mp.matrix([betas[i] for i in assign])
            try:
                sol = mp.lu_solve(V, rhs)
            except ZeroDivisionError:
                continue
            coeffs = []
            ok = True
            for c in sol:
                if abs(mp.im(c)) > mp.mpf(2) ** -100:
                    ok = False
                    break
                q = F(str(mp.nstr(mp.re(c), 40))).limit_denominator(10 ** 10)
                if abs(mp.re(c) - mp.mpf(q.numerator) / q.denominator) > mp.mpf(2) ** -100:
                    ok = False
                    break
                coeffs.append(q)
            if not ok:
                continue
            h = RationalPoly(coeffs)
            if (g.compose(h) % f).is_zero():
                return True
    return False


def test_has_root_numeric_oracle_corpus():
    corpus = [
        (P("-2,0,1"), P("7,0,-6,0,1")),
        (P("-7,0,1"), P("7,0,-6,0,1")),
        (P("-3,0,1"), P("7,0,-6,0,1")),
        (P("-2,0,1"), P("1,0,-10,0,1")),
        (P("-3,0,1"), P("1,0,-10,0,1")),
        (P("-6,0,1"), P("1,0,-10,0,1")),
        (P("-5,0,1"), P("1,0,-10,0,1")),
        (P("-2,0,0,1"), P("-2,0,0,1")),
        (P("-3,0,1"), P("-2,0,0,1")),
        (P("-1,1"), P("-2,0,1")),
    ]
    extra_fields = [P("-2,0,1"), P("-3,0,1"), P("-5,0,1"), P("1,0,1"),
                    P("3,0,1"), P("-2,0,0,1"), P("2,0,0,1"), P("1,1,1")]
    for f in extra_fields:
        for g in [P("-2,0,1"), P("-8,0,1"), P("-12,0,1"), P("2,0,1"),
                  P("-1,1")]:
            corpus.append((g, f))
    assert len(corpus) >= 50
    for g, f in corpus:
        got = has_root_in_extension(g, f)
        want = _numeric_root_oracle(g, f)
        assert got == want, f"mismatch for g={g.to_text()}, f={f.to_text()}"


def test_sqrt8_in_sqrt2():
    # sanity pin for the oracle corpus: sqrt8 = 2 sqrt2
    assert has_root_in_extension(P("-8,0,1"), P("-2,0,1"))
    assert not has_root_in_extension(P("-12,0,1"), P("-2,0,1"))


def test_roots_in_extension_count():
    # x^4 - 6x^2 + 7 generates a quartic field with exactly 2 automorphic
    # root images (C4 quartic field would have 4; this one has 2)
    f = P("7,0,-6,0,1")
    assert roots_in_extension_count(f, f) == 2
    g = P("1,0,-10,0,1")  # Galois V4 field: all 4 roots rational in theta
    assert roots_in_extension_count(g, g) == 4


def test_compositum():
    # Q(cbrt2) tensor Q(sqrt-3) = degree-6 field (Galois closure of x^3-2)
    fac = compositum_factors(P("-2,0,0,1"), P("3,0,1"))
    assert len(fac) == 1 and fac[0].degree == 6
    # Q(sqrt2) tensor Q(sqrt2) splits as two copies
    fac2 = compositum_factors(P("-2,0,1"), P("-2,0,1"))
    assert sorted(h.degree for h in fac2) == [2, 2]


def test_fields_isomorphic():
    assert fields_isomorphic(P("-2,0,1"), P("-8,0,1"))
    assert not fields_isomorphic(P("-2,0,1"), P("-3,0,1"))
    assert not fields_isomorphic(P("-2,0,1"), P("-2,0,0,1"))


# ---------------------------------------------------------------------------
# gcd / squarefree utility behavior
# ---------------------------------------------------------------------------

def test_gcd_and_squarefree():
    f = P("1,1") * P("-2,0,1")
    g = P("1,1") * P("-3,0,1")
    assert gcd(f, g) == P("1,1")
    assert is_squarefree(f)
    assert not is_squarefree(P("1,1") ** 2)
