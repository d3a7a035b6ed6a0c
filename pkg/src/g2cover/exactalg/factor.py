"""Factorization in Q[x] by Kronecker interpolation.

Suited to the degrees this package meets (sextic models and below): a
reducible polynomial of degree n has a factor of degree <= n//2, and we
search those degrees directly by interpolating through divisor tuples of
integer values.  Degree profiles modulo a few primes prune most of the
search before any interpolation happens.
"""

from fractions import Fraction

from ..errors import DomainError
from .domains import QQ, PrimeField
from .finitefield import ff_factor_degree_profile
from .poly import Poly, squarefree_part

_PROFILE_PRIMES = (5, 7, 11, 13, 17)
_EVAL_POINTS = (0, 1, -1, 2, -2, 3, -3)


def _to_integer_poly(f):
    """Primitive integer version of a rational polynomial (sign of the
    leading coefficient preserved)."""
    from math import gcd
    den = 1
    for c in f.coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in f.coeffs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {e: v // g for e, v in ints.items()}
    return ints


def _int_poly_eval(ints, x):
    acc = 0
    for e in range(max(ints), -1, -1):
        acc = acc * x + ints.get(e, 0)
    return acc


def _divisors_signed(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out += [d, -d]
            if d != n // d:
                out += [n // d, -(n // d)]
        d += 1
    return sorted(out, key=abs)


def _possible_degrees(f):
    """Intersection over good primes of the subset sums of the mod-p
    factor degree profiles; a Q-factor degree must land in every one."""
    n = f.degree
    allowed = None
    lead = f.coeffs.get(n)
    for p in _PROFILE_PRIMES:
        if lead.denominator % p == 0 or lead.numerator % p == 0:
            continue
        dom = PrimeField(p)
        try:
            fp = f.map_coefficients(dom.coerce, dom)
        except ZeroDivisionError:
            continue
        profile = ff_factor_degree_profile(fp)
        if sum(d * c for d, c in profile.items()) != n:
            continue  # dropped degree or lost squarefreeness: unusable
        sums = {0}
        for d, count in profile.items():
            for _ in range(count):
                sums |= {s + d for s in sums}
        allowed = sums if allowed is None else (allowed & sums)
        if allowed == {0, n}:
            break
    return allowed


def _interpolate(points, values):
    """Lagrange interpolation returning a Fraction-coefficient dict."""
    n = len(points)
    coeffs = {}
    for i in range(n):
        # basis polynomial through points[i]
        num = {0: Fraction(1)}
        den = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            den *= points[i] - points[j]
            shifted = {}
            for e, c in num.items():
                shifted[e + 1] = shifted.get(e + 1, Fraction(0)) + c
                shifted[e] = shifted.get(e, Fraction(0)) - c * points[j]
            num = shifted
        scale = Fraction(values[i]) / den
        for e, c in num.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c * scale
    return {e: c for e, c in coeffs.items() if c != 0}


def _kronecker_split(f):
    """One nontrivial monic factor of a squarefree rational polynomial,
    or None when irreducible."""
    n = f.degree
    if n <= 1:
        return None
    allowed = _possible_degrees(f)
    if allowed is not None and allowed <= {0, n}:
        return None
    ints = _to_integer_poly(f)
    for d in range(1, n // 2 + 1):
        if allowed is not None and d not in allowed:
            continue
        pts = list(_EVAL_POINTS[:d + 1])
        vals = [_int_poly_eval(ints, x) for x in pts]
        if any(v == 0 for v in vals):
            # a root among the sample points: immediate linear factor
            x0 = pts[vals.index(0)]
            return Poly(QQ, f.var, {1: Fraction(1), 0: Fraction(-x0)})
        choices = [_divisors_signed(v) for v in vals]
        idx = [0] * len(pts)
        while True:
            cand = _interpolate(pts, [choices[i][idx[i]]
                                      for i in range(len(pts))])
            if cand and max(cand) == d:
                g = Poly(QQ, f.var, cand).monic()
                q, r = divmod(f, g)
                if r.is_zero() and 0 < g.degree < n:
                    return g
            # advance the mixed-radix counter
            k = 0
            while k < len(pts):
                idx[k] += 1
                if idx[k] < len(choices[k]):
                    break
                idx[k] = 0
                k += 1
            if k == len(pts):
                break
    return None


def rational_factors(f):
    """Monic irreducible factors of f over Q with multiplicities, as a
    list of (factor, multiplicity) sorted by degree then text order.
    The leading coefficient is not part of the output."""
    if f.domain != QQ:
        raise DomainError("rational factorization needs coefficients in Q")
    if f.degree < 1:
        return []
    # peel multiplicities first so the splitter only sees squarefree input
    sqf = squarefree_part(f).monic()
    if sqf.degree != f.degree:
        out = []
        for g, _ in rational_factors(sqf):
            mult = 0
            h = f.monic()
            while True:
                q, r = divmod(h, g)
                if not r.is_zero():
                    break
                h = q
                mult += 1
            out.append((g, mult))
        return sorted(out, key=lambda t: (t[0].degree, repr(t[0])))
    out = []
    work = [sqf]
    while work:
        g = work.pop()
        piece = _kronecker_split(g)
        if piece is None:
            out.append((g, 1))
        else:
            work.append(piece)
            work.append(g.exact_div(piece))
    return sorted(out, key=lambda t: (t[0].degree, repr(t[0])))
