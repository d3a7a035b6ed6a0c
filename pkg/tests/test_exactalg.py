"""Exact arithmetic layer: ring axioms, gcd/resultant consistency, towers,
series, and root certification."""

import random
from fractions import Fraction

import pytest

from g2cover.errors import CertificationError, DomainError, ZeroDivisorError
from g2cover.exactalg import (QQ, FractionField, Poly, PowerSeries, PrimeField,
                              RatFunc, Tower, complex_roots, certify_roots,
                              ff_factor_degree_profile, ff_poly_roots,
                              format_poly, mat_det, parse_poly, poly_from_json,
                              poly_gcd, poly_resultant, poly_sqrt_exact,
                              poly_to_json, poly_xgcd, rational_factors,
                              rational_roots,
                              series_sqrt, squarefree_part, solve_complex_coeffs,
                              sylvester_matrix, tower_invert, tower_norm,
                              numeric_embeddings)


def _rand_poly(rng, domain, var, maxdeg, coeff):
    return Poly(domain, var, {e: coeff(rng) for e in range(rng.randint(0, maxdeg) + 1)})


def _qq_coeff(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


class TestRingAxioms:
    """Distributivity and associativity on random triples, per domain."""

    def _check_triples(self, rng, make, n=1000):
        for _ in range(n):
            a, b, c = make(rng), make(rng), make(rng)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a

    def test_poly_over_qq(self):
        rng = random.Random(101)
        self._check_triples(rng, lambda r: _rand_poly(r, QQ, "x", 4, _qq_coeff))

    def test_poly_over_gf(self):
        dom = PrimeField(101)
        rng = random.Random(102)

        def make(r):
            return _rand_poly(r, dom, "x", 4, lambda rr: dom.coerce(rr.randint(0, 100)))

        self._check_triples(rng, make)

    def test_ratfunc(self):
        K = FractionField(QQ, "t")
        rng = random.Random(103)

        def make(r):
            num = _rand_poly(r, QQ, "t", 2, _qq_coeff)
            den = _rand_poly(r, QQ, "t", 2, _qq_coeff)
            while den.is_zero():
                den = _rand_poly(r, QQ, "t", 2, _qq_coeff)
            return RatFunc(num, den)

        self._check_triples(rng, make, n=300)

    def test_tower_elements(self):
        t = Poly.gen(QQ, "t")
        T = Tower.over(QQ).extend("t", t**2 + t + 1)
        rng = random.Random(104)

        def make(r):
            th = T.gen(1)
            return _qq_coeff(r) + _qq_coeff(r) * th

        self._check_triples(rng, make)


def test_gcd_divides_and_resultant_vanishing():
    """gcd divides both inputs; resultant is zero exactly on common factors."""
    rng = random.Random(7)
    for _ in range(200):
        f = _rand_poly(rng, QQ, "x", 5, _qq_coeff)
        g = _rand_poly(rng, QQ, "x", 5, _qq_coeff)
        if f.is_zero() or g.is_zero():
            continue
        d = poly_gcd(f, g)
        assert (f % d).is_zero() and (g % d).is_zero()
        if f.degree > 0 and g.degree > 0:
            res = poly_resultant(f, g)
            assert (d.degree > 0) == QQ.is_zero(res)


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(8)
    for _ in range(60):
        f = _rand_poly(rng, QQ, "x", 4, _qq_coeff)
        g = _rand_poly(rng, QQ, "x", 4, _qq_coeff)
        if f.degree < 1 or g.degree < 1:
            continue
        m = sylvester_matrix(QQ, f, g)
        assert poly_resultant(f, g) == mat_det(QQ, m)


def test_resultant_multiplicativity():
    x = Poly.gen(QQ, "x")
    f, g, h = x**2 + 1, x - 2, x**3 + x + 1
    assert poly_resultant(f * g, h) == poly_resultant(f, h) * poly_resultant(g, h)


def test_xgcd_bezout_identity():
    rng = random.Random(9)
    for _ in range(120):
        f = _rand_poly(rng, QQ, "x", 5, _qq_coeff)
        g = _rand_poly(rng, QQ, "x", 5, _qq_coeff)
        if f.is_zero() and g.is_zero():
            continue
        d, s, t = poly_xgcd(f, g)
        assert s * f + t * g == d
        if not f.is_zero():
            assert (f % d).is_zero()


def test_squarefree_part():
    x = Poly.gen(QQ, "x")
    f = (x - 1) ** 3 * (x + 2) ** 2 * (x**2 + 1)
    sf = squarefree_part(f)
    assert sf.monic() == ((x - 1) * (x + 2) * (x**2 + 1)).monic()
    with pytest.raises(DomainError):
        squarefree_part(Poly(QQ, "x", {}))


def test_poly_sqrt_exact_roundtrip():
    rng = random.Random(10)
    for _ in range(80):
        p = _rand_poly(rng, QQ, "x", 4, _qq_coeff)
        if p.is_zero():
            continue
        if p.lc() < 0:
            p = -p
        sq = p * p
        r = poly_sqrt_exact(sq)
        assert r is not None
        assert r * r == sq
    x = Poly.gen(QQ, "x")
    assert poly_sqrt_exact(x**2 + 1) is None


def test_rational_roots():
    x = Poly.gen(QQ, "x")
    f = (2 * x - 3) ** 2 * (x + 5) * (x**2 + 1)
    roots = dict(rational_roots(f))
    assert roots == {Fraction(3, 2): 2, Fraction(-5): 1}
    assert rational_roots(x**2 + 1) == []


class TestTowers:
    def _section_tower(self):
        K = FractionField(QQ, "α")
        a = K.gen()
        lam = Poly.gen(K, "λ")
        return K, a, Tower.over(K).extend("λ", lam**2 - (2 / a) * lam - a)

    def test_documented_inverse(self):
        """1/λ = (αλ - 2)/α² in Q(α)[λ]/(αλ² - 2λ - α²)."""
        K, a, T = self._section_tower()
        L = T.gen(1)
        assert (tower_invert(L) - (a * L - 2) / (a * a)).is_zero()

    def test_roundtrips_at_rational_alpha(self):
        """200 invert/multiply round-trips across 5 rational α values."""
        rng = random.Random(11)
        # α with 1+α³ nonsquare, so the quadratic stays irreducible
        for alpha in (Fraction(1), Fraction(3), Fraction(-3), Fraction(1, 2),
                      Fraction(5, 3)):
            lam = Poly.gen(QQ, "λ")
            T = Tower.over(QQ).extend("λ", lam**2 - (2 / alpha) * lam - alpha)
            L = T.gen(1)
            for _ in range(40):
                e = _qq_coeff(rng) + _qq_coeff(rng) * L
                if e.is_zero():
                    continue
                assert (e * tower_invert(e) - 1).is_zero()
                g = _qq_coeff(rng) + _qq_coeff(rng) * L
                if not g.is_zero():
                    assert ((e * g) / g - e).is_zero()

    def test_norm_is_multiplicative(self):
        K, a, T = self._section_tower()
        L = T.gen(1)
        e1 = L + 1
        e2 = a * L - 3
        n = tower_norm(e1 * e2)
        assert n == tower_norm(e1) * tower_norm(e2)

    def test_zero_divisor_reports_factor(self):
        t = Poly.gen(QQ, "t")
        T = Tower.over(QQ).extend("t", t**2 - 1)
        e = T.gen(1) - 1
        with pytest.raises(ZeroDivisorError) as exc:
            tower_invert(e)
        factor = exc.value.factor
        minpoly = t**2 - 1
        assert factor.degree >= 1
        assert (minpoly % factor).is_zero()

    def test_second_level_and_embeddings(self):
        t = Poly.gen(QQ, "t")
        T1 = Tower.over(QQ).extend("t", t**2 - 2)
        s = Poly.gen(T1.top, "s")
        three = Poly.constant(T1.top, "s", T1.top.coerce(3))
        T2 = T1.extend("s", s**2 - three)
        rt2, rt3 = T2.gen(1), T2.gen(2)
        prod = rt2 * rt3
        assert (prod * prod - 6).is_zero()
        embs = numeric_embeddings(T2, solve_complex_coeffs,
                                  base_map=lambda c: complex(c))
        assert len(embs) == 4
        vals = sorted(round(complex(prod.apply(complex, ch)).real, 8) for ch in embs)
        import math
        assert vals[0] == pytest.approx(-math.sqrt(6))
        assert vals[-1] == pytest.approx(math.sqrt(6))


class TestSeries:
    def test_sqrt_documented_example(self):
        u = Poly.gen(QQ, "u")
        f = PowerSeries.from_poly(1 - 2 * u**3 + 2 * u**6, prec=9)
        s = series_sqrt(f)
        assert s.coeff(0) == 1
        assert s.coeff(3) == -1
        assert s.coeff(6) == Fraction(1, 2)
        assert s.prec == 9

    def test_sqrt_inverts_squaring(self):
        rng = random.Random(12)
        for _ in range(60):
            cs = {0: Fraction(1)}
            for e in range(1, 8):
                cs[e] = _qq_coeff(rng)
            g = PowerSeries(QQ, "x", cs, 8)
            s = series_sqrt(g * g)
            assert (s - g).is_zero()

    def test_inverse_and_precision(self):
        x = Poly.gen(QQ, "x")
        f = PowerSeries.from_poly(1 + x, prec=6)
        inv = f.inverse()
        assert (f * inv - 1).is_zero()
        assert inv.coeff(5) == -1
        g = PowerSeries.from_poly(x**2, prec=10) * f
        # the O(x⁶) error of f is shifted by val(x²) = 2
        assert g.prec == 8

    def test_valuation_shift(self):
        x = Poly.gen(QQ, "x")
        f = PowerSeries.from_poly(x**3 + x**4, prec=9)
        assert f.valuation() == 3
        assert f.shift(-3).coeff(0) == 1
        with pytest.raises(DomainError):
            f.shift(-4)


class TestComplexRoots:
    def test_residual_bound(self):
        x = Poly.gen(QQ, "x")
        f = x**5 - x - 1
        tol = 1e-10
        roots = complex_roots(f, tol=tol)
        dense = [complex(c) for c in f.to_dense()]
        total = 0.0
        for z in roots:
            acc = dense[-1]
            for c in reversed(dense[:-1]):
                acc = acc * z + c
            total += abs(acc)
        bound = f.degree * tol * (1 + max(abs(c) for c in dense))
        assert total < bound
        certify_roots(f, roots, tol=tol)

    def test_known_quadratic(self):
        x = Poly.gen(QQ, "x")
        roots = sorted(complex_roots(x**2 - 2), key=lambda z: z.real)
        assert roots[0].real == pytest.approx(-2**0.5, abs=1e-9)
        assert roots[1].real == pytest.approx(2**0.5, abs=1e-9)

    def test_certification_rejects_bad_roots(self):
        x = Poly.gen(QQ, "x")
        with pytest.raises(CertificationError):
            certify_roots(x**2 - 2, [1.0 + 0j, -1.0 + 0j], tol=1e-10)

    def test_degree_cap(self):
        coeffs = {0: Fraction(-1), 201: Fraction(1)}
        with pytest.raises(DomainError):
            complex_roots(Poly(QQ, "x", coeffs))


class TestFiniteFields:
    def test_documented_root_sets(self):
        x5 = Poly.gen(PrimeField(5), "x")
        assert [(r.val, m) for r, m in ff_poly_roots(x5**2 + 1)] == [(2, 1), (3, 1)]
        x7 = Poly.gen(PrimeField(7), "x")
        assert ff_poly_roots(x7**2 + 1) == []
        t7 = Poly.gen(PrimeField(7), "t")
        assert [(r.val, m) for r, m in ff_poly_roots(t7**2 + t7 + 1)] == [(2, 1), (4, 1)]

    def test_exhaustive_scan_agrees(self):
        rng = random.Random(13)
        for p in (5, 11, 13):
            dom = PrimeField(p)
            for _ in range(40):
                f = _rand_poly(rng, dom, "x", 6,
                               lambda r: dom.coerce(r.randint(0, p - 1)))
                if f.is_zero() or f.degree == 0:
                    continue
                found = {r.val: m for r, m in ff_poly_roots(f)}
                x = Poly.gen(dom, "x")
                brute = {}
                for v in range(p):
                    fv = dom.coerce(v)
                    g, m = f, 0
                    while True:
                        q, rem = divmod(g, x - fv)
                        if not rem.is_zero():
                            break
                        g, m = q, m + 1
                    if m:
                        brute[v] = m
                assert found == brute

    def test_multiplicity(self):
        dom = PrimeField(7)
        x = Poly.gen(dom, "x")
        f = (x - 2) ** 3 * (x + 1)
        assert [(r.val, m) for r, m in ff_poly_roots(f)] == [(2, 3), (6, 1)]

    def test_factor_degree_profile(self):
        dom = PrimeField(7)
        x = Poly.gen(dom, "x")
        f = (x**2 + 1) * (x + 3) ** 2 * (x**3 + x + 1)
        assert ff_factor_degree_profile(f) == {1: 1, 2: 1, 3: 1}


class TestRationalFactors:
    """Kronecker factorization over Q.  Oracle: multiply back and compare,
    plus hand-factored cyclotomic products."""

    def _product(self, f, factors):
        prod = Poly.constant(QQ, f.var, f.lc())
        for g, m in factors:
            prod = prod * g ** m
        return prod

    def test_sixth_roots_of_unity(self):
        f = parse_poly("u^6 - 1")
        factors = rational_factors(f)
        assert [(format_poly(g), m) for g, m in factors] == [
            ("u - 1", 1),
            ("u + 1", 1),
            ("u^2 - u + 1", 1),
            ("u^2 + u + 1", 1),
        ]

    def test_multiplicities(self):
        f = parse_poly("u^6 - 2u^3 + 1")  # (u^3 - 1)^2
        factors = rational_factors(f)
        assert [(format_poly(g), m) for g, m in factors] == [
            ("u - 1", 2),
            ("u^2 + u + 1", 2),
        ]

    def test_irreducible_inputs_stay_whole(self):
        for text in ("2u^6 - 2u^3 + 1", "u^4 + 1", "u^3 - 2", "u^2 - 5/4"):
            f = parse_poly(text)
            factors = rational_factors(f)
            assert len(factors) == 1
            g, m = factors[0]
            assert m == 1 and g == f.monic()

    def test_random_products_recombine(self):
        rng = random.Random(71)
        pool = [parse_poly(t) for t in
                ("x + 2", "x - 3", "2x + 1", "x^2 + 1", "x^2 + x + 1",
                 "x^3 + x + 1", "x^2 - 2")]
        for _ in range(40):
            f = Poly.constant(QQ, "x", Fraction(rng.choice([1, 2, 3, -1])))
            for _ in range(rng.randint(1, 3)):
                f = f * rng.choice(pool)
            factors = rational_factors(f)
            assert self._product(f, factors) == f
            for g, _ in factors:
                assert g.lc() == 1
                assert rational_factors(g) == [(g, 1)]

    def test_nonrational_coefficients_rejected(self):
        dom = PrimeField(7)
        f = Poly.gen(dom, "x") ** 2 - dom.coerce(1)
        with pytest.raises(DomainError):
            rational_factors(f)

    def test_constants_have_no_factors(self):
        assert rational_factors(parse_poly("5", var="x")) == []


class TestTextAndJson:
    def test_parse_and_format(self):
        p = parse_poly("u^6 - 2u^3 + 1")
        assert format_poly(p) == "u^6 - 2*u^3 + 1"
        assert parse_poly("(u-1)*(u+1)", var="u") == parse_poly("u^2-1")
        assert parse_poly("3/2x^2 - x", var="x").coeff(2) == Fraction(3, 2)

    def test_unicode_words(self):
        p = parse_poly("alpha^3 + 1")
        assert p.var == "α"

    def test_parse_rejects_junk(self):
        with pytest.raises(DomainError):
            parse_poly("u^")
        with pytest.raises(DomainError):
            parse_poly("u + $")
        with pytest.raises(DomainError):
            parse_poly("u + v", var="u")

    def test_json_roundtrip_plain(self):
        p = parse_poly("u^6 - 2u^3 + 1")
        assert poly_from_json(poly_to_json(p)) == p

    def test_json_roundtrip_ratfunc_coeffs(self):
        K = FractionField(QQ, "α")
        a = K.gen()
        lam = Poly.gen(K, "λ")
        p = lam**2 - (2 / a) * lam - a
        j = poly_to_json(p)
        q = poly_from_json(j)
        assert q == p
        # canonical: exponents ascending, as strings
        assert [e for e, _ in j["coeffs"]] == sorted(
            (e for e, _ in j["coeffs"]), key=int)
