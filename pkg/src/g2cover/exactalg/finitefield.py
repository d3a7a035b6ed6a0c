"""Root finding and factor-shape queries for polynomials over GF(p).

Roots come from gcd(f, x^p - x) followed by equal-degree splitting with a
deterministic shift sequence, so runs are reproducible without a seed.
"""

from ..errors import DomainError
from .domains import PrimeField
from .poly import Poly, poly_gcd


def _powmod(base, e, mod):
    """base^e reduced mod the polynomial `mod`, by repeated squaring."""
    result = Poly.constant(mod.domain, mod.var, mod.domain.one)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _split_roots(g, dom, out):
    """Collect the roots of g, a product of distinct monic linear factors."""
    p = dom.p
    stack = [g]
    while stack:
        h = stack.pop()
        if h.degree <= 0:
            continue
        if h.degree == 1:
            out.append(-h.coeff(0) / h.coeff(1))
            continue
        x = Poly.gen(dom, h.var)
        if p == 2:
            for v in (0, 1):
                r = dom.coerce(v)
                if dom.is_zero(h(r)):
                    out.append(r)
            continue
        shift = 0
        while True:
            t = _powmod(x + dom.coerce(shift), (p - 1) // 2, h)
            t = t - dom.one
            d = poly_gcd(h, t)
            if 0 < d.degree < h.degree:
                stack.append(d)
                stack.append(h.exact_div(d))
                break
            shift += 1
            if shift > p:
                raise DomainError("equal-degree splitting exhausted shifts")


def ff_poly_roots(f):
    """Roots of f in GF(p), with multiplicities, as (root, multiplicity)
    pairs sorted by the integer value of the root."""
    dom = f.domain
    if not isinstance(dom, PrimeField):
        raise DomainError("finite-field roots need a PrimeField polynomial")
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.degree == 0:
        return []
    p = dom.p
    x = Poly.gen(dom, f.var)
    xp = _powmod(x, p, f)
    lin = poly_gcd(f, xp - x)
    roots = []
    _split_roots(lin, dom, roots)
    out = []
    for r in sorted(roots, key=lambda v: v.val):
        m = 0
        g = f
        while True:
            q, rem = divmod(g, x - r)
            if not rem.is_zero():
                break
            m += 1
            g = q
        out.append((r, m))
    return out


def ff_simple_roots(f):
    """Roots of multiplicity one only."""
    return [r for r, m in ff_poly_roots(f) if m == 1]


def _pth_root_poly(f):
    p = f.domain.p
    cs = {}
    for e, c in f.coeffs.items():
        if e % p != 0:
            raise DomainError("not a p-th power")
        cs[e // p] = c  # Frobenius fixes GF(p), so coefficients carry over
    return Poly(f.domain, f.var, cs)


def ff_radical(f):
    """Product of the distinct monic irreducible factors of f."""
    if f.degree <= 0:
        return Poly.constant(f.domain, f.var, f.domain.one)
    f = f.monic()
    df = f.derivative()
    if df.is_zero():
        return ff_radical(_pth_root_poly(f))
    g = poly_gcd(f, df)
    w = f.exact_div(g)
    if g.degree == 0:
        return w
    rest = ff_radical(g)
    return w.exact_div(poly_gcd(w, rest)) * rest


def ff_factor_degree_profile(f):
    """Degrees of the distinct irreducible factors of f, as a dict
    degree -> count.  Multiplicities are ignored (the radical is profiled).
    """
    dom = f.domain
    if not isinstance(dom, PrimeField):
        raise DomainError("factor profiles need a PrimeField polynomial")
    rad = ff_radical(f)
    p = dom.p
    x = Poly.gen(dom, f.var)
    profile = {}
    h = x
    d = 0
    while rad.degree > 0:
        d += 1
        if 2 * d > rad.degree:
            profile[rad.degree] = profile.get(rad.degree, 0) + 1
            break
        h = _powmod(h, p, rad)
        g = poly_gcd(rad, h - x)
        if g.degree > 0:
            profile[d] = profile.get(d, 0) + g.degree // d
            rad = rad.exact_div(g)
            h = h % rad
    return profile
