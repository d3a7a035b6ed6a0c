"""Plane cubics: Hessian flex locus, discriminant, and reduction of a
flexed cubic to short Weierstrass form with an explicit coordinate change.

The discriminant comes from the Macaulay resultant of the three partial
quadrics (a 15x15 determinant divided by a 3x3 extraneous minor).  Over a
rational function field the result is normalized to a monic squarefree
numerator so its vanishing locus is exact; the raw resultant would carry
the cusp degeneration with multiplicity two.
"""

from fractions import Fraction

from ..errors import DomainError, SingularModelError
from ..exactalg import QQ, FractionField, Poly, RatFunc, squarefree_part
from ..exactalg.linalg import mat_det, mat_inverse, mat_mul, sum_dom
from .weierstrass import ECPoint, WeierstrassCurve


class TriPoly:
    """Polynomial in three variables: {(i, j, k): coeff}."""

    __slots__ = ("domain", "vars", "coeffs")

    def __init__(self, domain, vars, coeffs):
        self.domain = domain
        self.vars = tuple(vars)
        self.coeffs = {e: c for e, c in coeffs.items() if not domain.is_zero(c)}

    @classmethod
    def constant(cls, domain, vars, c):
        return cls(domain, vars, {(0, 0, 0): domain.coerce(c)})

    @classmethod
    def variable(cls, domain, vars, i):
        e = [0, 0, 0]
        e[i] = 1
        return cls(domain, vars, {tuple(e): domain.one})

    def is_zero(self):
        return not self.coeffs

    def total_degree(self):
        return max((sum(e) for e in self.coeffs), default=-1)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.coeffs}
        if not degs:
            return True
        if d is None:
            return len(degs) == 1
        return degs == {d}

    def coeff(self, e):
        return self.coeffs.get(tuple(e), self.domain.zero)

    def __add__(self, other):
        o = self._lift(other)
        cs = dict(self.coeffs)
        for e, c in o.coeffs.items():
            cs[e] = cs.get(e, self.domain.zero) + c
        return TriPoly(self.domain, self.vars, cs)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly(self.domain, self.vars,
                       {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        cs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                if e in cs:
                    cs[e] = cs[e] + c1 * c2
                else:
                    cs[e] = c1 * c2
        return TriPoly(self.domain, self.vars, cs)

    __rmul__ = __mul__

    def _lift(self, other):
        if isinstance(other, TriPoly):
            if other.vars != self.vars or other.domain != self.domain:
                raise DomainError("trivariate polynomials from different rings")
            return other
        return TriPoly.constant(self.domain, self.vars, other)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def partial(self, i):
        cs = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            cs[tuple(ne)] = c * e[i]
        return TriPoly(self.domain, self.vars, cs)

    def evaluate(self, point):
        """Value at a triple of domain scalars."""
        acc = self.domain.zero
        pows = [{0: self.domain.one} for _ in range(3)]

        def pw(i, n):
            if n not in pows[i]:
                pows[i][n] = pw(i, n - 1) * point[i]
            return pows[i][n]

        for e, c in self.coeffs.items():
            acc = acc + c * pw(0, e[0]) * pw(1, e[1]) * pw(2, e[2])
        return acc

    def eval_in(self, args):
        """Substitute arbitrary ring elements (e.g. univariate polys) for the
        three variables; coefficients must coerce into the target ring."""
        acc = None
        pows = [{}, {}, {}]

        def pw(i, n):
            if n == 0:
                return None
            if n not in pows[i]:
                v = args[i]
                for _ in range(n - 1):
                    v = v * args[i]
                pows[i][n] = v
            return pows[i][n]

        for e, c in self.coeffs.items():
            term = None
            for i in range(3):
                p = pw(i, e[i])
                if p is not None:
                    term = p if term is None else term * p
            term = c * term if term is not None else c * (args[0] * 0 + 1)
            acc = term if acc is None else acc + term
        if acc is None:
            return args[0] * 0
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            mono = "".join("%s^%d" % (v, k) if k > 1 else (v if k else "")
                           for v, k in zip(self.vars, e))
            parts.append("(%r)%s" % (self.coeffs[e], mono))
        return " + ".join(parts)


class PlaneCubic:
    """Homogeneous cubic form in (t:u:z)-style coordinates."""

    __slots__ = ("form",)

    def __init__(self, form):
        if form.is_zero() or not form.is_homogeneous(3):
            raise DomainError("a plane cubic needs a nonzero homogeneous degree-3 form")
        self.form = form

    @classmethod
    def from_coeffs(cls, domain, coeffs, vars=("t", "u", "z")):
        return cls(TriPoly(domain, vars, {tuple(e): domain.coerce(c)
                                          for e, c in coeffs.items()}))

    @property
    def domain(self):
        return self.form.domain

    @property
    def vars(self):
        return self.form.vars

    def gradient(self):
        return [self.form.partial(i) for i in range(3)]

    def hessian(self):
        """det of the matrix of second partials, a degree-3 form."""
        h = [[self.form.partial(i).partial(j) for j in range(3)] for i in range(3)]
        return (h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
                - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
                + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]))

    def contains(self, p):
        return self.domain.is_zero(self.form.evaluate(p))

    def is_flex(self, p):
        """On the curve, smooth there, and the Hessian vanishes."""
        if not self.contains(p):
            return False
        grad = [g.evaluate(p) for g in self.gradient()]
        if all(self.domain.is_zero(g) for g in grad):
            return False
        return self.domain.is_zero(self.hessian().evaluate(p))

    def __repr__(self):
        return "PlaneCubic(%r)" % (self.form,)


class FlexLocus:
    """The flex-defining system: the cubic together with its Hessian."""

    __slots__ = ("cubic", "hessian")

    def __init__(self, cubic, hessian):
        self.cubic = cubic
        self.hessian = hessian


def hessian_flex_locus(C):
    if C.domain.is_zero(discriminant(C)):
        raise SingularModelError("flex locus of a singular cubic")
    return FlexLocus(C, C.hessian())


def _degree4_monomials():
    out = []
    for i in range(4, -1, -1):
        for j in range(4 - i, -1, -1):
            out.append((i, j, 4 - i - j))
    return out


_UNIMODULAR_RETRIES = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 1), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
    ((1, 1, 1), (0, 1, 1), (0, 0, 1)),
    ((1, 0, 0), (1, 1, 0), (1, 1, 1)),
)


def _macaulay_resultant_quadrics(dom, fs):
    """Resultant of three ternary quadrics: det of the degree-4 Macaulay
    matrix divided by the extraneous 3x3 minor."""
    monos = _degree4_monomials()
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    assign = []
    for m in monos:
        if m[0] >= 2:
            i, shift = 0, (m[0] - 2, m[1], m[2])
        elif m[1] >= 2:
            i, shift = 1, (m[0], m[1] - 2, m[2])
        else:
            i, shift = 2, (m[0], m[1], m[2] - 2)
        assign.append(i)
        row = [dom.zero] * len(monos)
        for e, c in fs[i].coeffs.items():
            t = (e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])
            row[col[t]] = row[col[t]] + c
        rows.append(row)
    big = mat_det(dom, rows)
    extraneous = [(2, 2, 0), (2, 0, 2), (0, 2, 2)]
    idx = [col[m] for m in extraneous]
    minor = [[rows[i][j] for j in idx] for i in idx]
    small = mat_det(dom, minor)
    if dom.is_zero(small):
        return None
    return big / small


def discriminant(C):
    """Scalar whose vanishing locus is exactly the singular cubics in the
    family; over a rational function field the squarefree monic numerator
    is returned (the raw resultant squares cusp degenerations)."""
    dom = C.domain
    for U in _UNIMODULAR_RETRIES:
        # substitute x_i -> sum_j U[i][j] x_j; the resultant of the partial
        # quadrics is invariant under unimodular changes
        args = []
        for i in range(3):
            cs = {}
            for j in range(3):
                if U[i][j]:
                    e = [0, 0, 0]
                    e[j] = 1
                    cs[tuple(e)] = dom.coerce(U[i][j])
            args.append(TriPoly(dom, C.vars, cs))
        form = C.form.eval_in(args)
        fs = [form.partial(i) for i in range(3)]
        res = _macaulay_resultant_quadrics(dom, fs)
        if res is not None:
            return _normalize_disc(dom, res)
    raise SingularModelError("Macaulay minor vanished for every change of variables")


def _normalize_disc(dom, res):
    if dom.is_zero(res):
        return dom.zero
    if isinstance(dom, FractionField) and isinstance(res, RatFunc):
        num = res.num
        if num.degree == 0:
            return dom.one
        return dom.from_poly(squarefree_part(num).monic())
    return res


class BirationalChange:
    """Projective change of coordinates taking a flexed cubic to a short
    Weierstrass model: (X:Y:W) = M (t:u:z), affine x = X/W, y = Y/W."""

    __slots__ = ("domain", "matrix", "inverse", "flex")

    def __init__(self, domain, matrix, inverse, flex):
        self.domain = domain
        self.matrix = matrix
        self.inverse = inverse
        self.flex = flex

    def apply(self, p):
        """Projective curve point -> ECPoint."""
        X, Y, W = self._act(self.matrix, p)
        if self.domain.is_zero(W):
            return ECPoint.infinity()
        return ECPoint(X / W, Y / W)

    def unapply(self, P):
        """ECPoint -> projective triple on the cubic."""
        if P.is_infinity():
            return self.flex
        return self._act(self.inverse, (P.x, P.y, self.domain.one))

    def _act(self, M, p):
        p = [self.domain.coerce(c) for c in p]
        return tuple(sum_dom(self.domain, [M[i][j] * p[j] for j in range(3)])
                     for i in range(3))

    def check(self):
        prod = mat_mul(self.domain, self.matrix, self.inverse)
        s = prod[0][0]
        if self.domain.is_zero(s):
            return False
        for i in range(3):
            for j in range(3):
                want = s if i == j else self.domain.zero
                if not self.domain.is_zero(prod[i][j] - want):
                    return False
        return True


def cubic_to_weierstrass(C, flex):
    """Short Weierstrass model of a smooth cubic with a marked flex, plus
    the BirationalChange realizing the isomorphism.  Over the rationals the
    model is reduced by fourth/sixth-power coefficient scaling."""
    dom = C.domain
    p = tuple(dom.coerce(c) for c in flex)
    if not C.contains(p):
        raise DomainError("marked point is not on the cubic")
    L = [g.evaluate(p) for g in C.gradient()]
    if all(dom.is_zero(c) for c in L):
        raise SingularModelError("cubic is singular at the marked point")
    if not dom.is_zero(C.hessian().evaluate(p)):
        raise DomainError("marked point is not a flex")

    i0 = next(i for i in range(3) if not dom.is_zero(p[i]))
    others = [j for j in range(3) if j != i0]
    candidates = []
    for j in others:
        v = [dom.zero] * 3
        v[j] = dom.one
        v[i0] = -(p[j] / p[i0])
        candidates.append(v)
    candidates.append([candidates[0][k] + candidates[1][k] for k in range(3)])

    e_i = [dom.zero] * 3
    e_i[i0] = dom.one
    M = None
    for row_x in candidates:
        trial = [row_x, e_i, list(L)]
        if not dom.is_zero(mat_det(dom, trial)):
            M = trial
            break
    if M is None:
        raise SingularModelError("no invertible flex frame")

    Minv = mat_inverse(dom, M)
    lin = []
    for i in range(3):
        cs = {}
        for j in range(3):
            e = [0, 0, 0]
            e[j] = 1
            cs[tuple(e)] = Minv[i][j]
        lin.append(TriPoly(dom, C.vars, cs))
    G = C.form.eval_in(lin)

    def gc(i, j, k):
        return G.coeff((i, j, k))

    for bad in ((0, 3, 0), (1, 2, 0), (2, 1, 0)):
        if not dom.is_zero(gc(*bad)):
            raise DomainError("marked point is not a flex (residual Y-terms)")
    c = gc(3, 0, 0)
    if dom.is_zero(c):
        raise SingularModelError("flex tangent lies on the cubic")
    b2 = gc(0, 2, 1)
    if dom.is_zero(b2):
        raise SingularModelError("cubic is singular at the flex")
    b1, b3 = gc(1, 1, 1), gc(0, 1, 2)
    a1, a2, a3 = gc(2, 0, 1), gc(1, 0, 2), gc(0, 0, 3)

    half = dom.invert(dom.coerce(2))
    third = dom.invert(dom.coerce(3))
    quarter = half * half
    # Y1 = b2 Y + (b1 X + b3 W)/2 turns the y-part into a pure square:
    # Y1² = (b1 x + b3)²/4 - b2(c x³ + a1 x² + a2 x + a3)
    e3 = -b2 * c
    e2 = b1 * b1 * quarter - b2 * a1
    e1 = b1 * b3 * half - b2 * a2
    e0 = b3 * b3 * quarter - b2 * a3
    # x -> x/e3 (projectively X2 = e3 X), then shift by e2/3
    A = e1 * e3 - e2 * e2 * third
    B = 2 * e2**3 * third**3 - e1 * e2 * e3 * third + e0 * e3 * e3

    S1 = [[dom.one, dom.zero, dom.zero],
          [b1 * half, b2, b3 * half],
          [dom.zero, dom.zero, dom.one]]
    S2 = [[e3, dom.zero, dom.zero],
          [dom.zero, e3, dom.zero],
          [dom.zero, dom.zero, dom.one]]
    S3 = [[dom.one, dom.zero, e2 * third],
          [dom.zero, dom.one, dom.zero],
          [dom.zero, dom.zero, dom.one]]
    total = mat_mul(dom, S3, mat_mul(dom, S2, mat_mul(dom, S1, M)))

    if dom == QQ:
        s = _power_scale(A, B)
        if s != 1:
            A = A / s**4
            B = B / s**6
            s2 = dom.invert(dom.coerce(s * s))
            s3 = dom.invert(dom.coerce(s**3))
            scale = [[s2, dom.zero, dom.zero],
                     [dom.zero, s3, dom.zero],
                     [dom.zero, dom.zero, dom.one]]
            total = mat_mul(dom, scale, total)

    E = WeierstrassCurve(dom, A, B)
    change = BirationalChange(dom, total, mat_inverse(dom, total), p)
    return E, change


def _power_scale(A, B):
    """Largest positive rational s with A/s⁴ and B/s⁶ still 4th/6th-power
    reducible no further; A = B = 0 never reaches here (singular)."""
    A, B = Fraction(A), Fraction(B)
    primes = set()
    for q in (A, B):
        if q:
            primes |= _prime_support(q.numerator) | _prime_support(q.denominator)
    s = Fraction(1)
    for pr in sorted(primes):
        if A and B:
            k = min(_val(A, pr) // 4, _val(B, pr) // 6)
        elif A:
            k = _val(A, pr) // 4
        else:
            k = _val(B, pr) // 6
        if k:
            s *= Fraction(pr) ** k
    return s


def _prime_support(n):
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _val(q, p):
    v = 0
    n = q.numerator
    while n and n % p == 0:
        n //= p
        v += 1
    if v:
        return v
    d = q.denominator
    while d and d % p == 0:
        d //= p
        v -= 1
    return v
