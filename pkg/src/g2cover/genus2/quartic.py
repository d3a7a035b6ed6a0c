"""Plane quartic model of a genus-2 curve from a marked non-special point.

Given v^2 = f(u) and a finite point q0 = (u0, v0) with v0 != 0, the spaces
L(3q0) and L(4q0) have dimensions 2 and 3; picking generators z and w, the
fifteen monomials z^i w^j of pole order at most 15 at q0 satisfy a single
relation F(z, w) = 0 of bidegree (4, 3) once the z^5 coefficient is pinned
to zero.  All of this is linear algebra on exact local expansions at q0,
and the resulting curve is a plane quartic with exactly one double point.
Generically that point is a node; it degenerates to a cusp exactly when
the map z ramifies at the involute point, which happens whenever
3*q0 ~ 3*involute(q0) (so on every fiber of the 3-torsion pencil), and
the classifier below distinguishes the two cases instead of assuming.

The candidate functions are (A(u) + B(u)v)/(u-u0)^k with deg A <= k and
deg B <= k-3; those degree caps are exactly regularity at infinity, and
vanishing of the numerator to order k along the opposite branch v -> -v0
is regularity at the involute point.  Nothing else can carry a pole.
"""

from ..errors import DomainError, SpecialPointError
from ..exactalg import (FractionField, Poly, PowerSeries, RatFunc, nullspace,
                        poly_gcd, poly_resultant, ratfunc_to_json, series_sqrt,
                        squarefree_part)
from .model import CurveFunction, is_special

# the fifteen monomials z^i w^j of pole order 3i+4j <= 15, in a fixed order
_MONOMIALS = ((0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0),
              (0, 1), (1, 1), (2, 1), (3, 1),
              (0, 2), (1, 2), (2, 2),
              (0, 3), (1, 3))
_MAX_POLE = 15
_EXPANSION = 40  # Laurent window t^-15 .. t^24


class BiPoly:
    """Sparse bivariate polynomial; keys are (i, j) exponent pairs."""

    __slots__ = ("domain", "vars", "coeffs")

    def __init__(self, domain, variables, coeffs):
        self.domain = domain
        self.vars = tuple(variables)
        self.coeffs = {k: c for k, c in coeffs.items() if not domain.is_zero(c)}

    def coeff(self, i, j):
        return self.coeffs.get((i, j), self.domain.zero)

    @property
    def degree_pair(self):
        if not self.coeffs:
            return (-1, -1)
        return (max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs))

    @property
    def total_degree(self):
        if not self.coeffs:
            return -1
        return max(i + j for i, j in self.coeffs)

    def partial(self, axis):
        out = {}
        for (i, j), c in self.coeffs.items():
            if axis == 0 and i:
                out[(i - 1, j)] = c * i
            elif axis == 1 and j:
                out[(i, j - 1)] = c * j
        return BiPoly(self.domain, self.vars, out)

    def translate(self, z0, w0):
        """F(z0 + Z, w0 + W) by binomial expansion."""
        from math import comb
        dom = self.domain
        out = {}
        for (i, j), c in self.coeffs.items():
            for p in range(i + 1):
                zc = c * comb(i, p) * z0 ** (i - p) if i - p else c * comb(i, p)
                for q in range(j + 1):
                    term = zc * comb(j, q) * w0 ** (j - q) if j - q else zc * comb(j, q)
                    key = (p, q)
                    out[key] = out.get(key, dom.zero) + term
        return BiPoly(dom, self.vars, out)

    def homogeneous_part(self, d):
        return {k: c for k, c in self.coeffs.items() if k[0] + k[1] == d}

    def evaluate(self, zval, wval):
        """Substitute arbitrary ring elements (scalars, curve functions)."""
        zp = {0: None}
        wp = {0: None}
        acc = None
        for (i, j), c in sorted(self.coeffs.items()):
            term = c
            if i:
                if i not in zp:
                    zp[i] = zval ** i
                term = zp[i] * term
            if j:
                if j not in wp:
                    wp[j] = wval ** j
                term = wp[j] * term
            acc = term if acc is None else acc + term
        return acc if acc is not None else self.domain.zero

    def as_poly_in_w(self):
        """View over Frac(dom[z]) as a univariate polynomial in w."""
        K = FractionField(self.domain, self.vars[0])
        cols = {}
        for (i, j), c in self.coeffs.items():
            cols.setdefault(j, {})[i] = c
        return Poly(K, self.vars[1],
                    {j: K.from_poly(Poly(self.domain, self.vars[0], cs))
                     for j, cs in cols.items()})

    def eval_z(self, z0):
        """Substitute the first variable, leaving a Poly in the second."""
        out = {}
        for (i, j), c in self.coeffs.items():
            term = c * z0 ** i if i else c
            out[j] = out.get(j, self.domain.zero) + term
        return Poly(self.domain, self.vars[1], out)

    def to_json(self):
        terms = [[i, j, str(c)] for (i, j), c in sorted(self.coeffs.items())]
        return {"vars": list(self.vars), "terms": terms}

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and other.vars == self.vars
                and other.coeffs == self.coeffs)

    def __repr__(self):
        z, w = self.vars
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda t: (-t[0][0] - t[0][1], t[0])):
            mon = "".join(s for s in (
                "%s^%d" % (z, i) if i > 1 else (z if i == 1 else ""),
                "%s^%d" % (w, j) if j > 1 else (w if j == 1 else "")) if s)
            parts.append("(%s)%s" % (c, mon) if mon else "(%s)" % (c,))
        return " + ".join(parts) if parts else "0"


class QuarticModel:
    """The relation F(z,w) = 0 with its generating functions and the one
    singular point, whose type is "node" or "cusp" (both have delta
    invariant 1, so either way the geometric genus comes out 2)."""

    __slots__ = ("F", "z", "w", "singular_point", "singularity",
                 "base_point", "model")

    def __init__(self, F, z, w, singular_point, singularity, base_point, model):
        self.F = F
        self.z = z
        self.w = w
        self.singular_point = singular_point
        self.singularity = singularity
        self.base_point = base_point
        self.model = model

    def verify(self):
        """Exact check of F(z, w) = 0 in the function field."""
        znum, zpole = self.z
        wnum, wpole = self.w
        u = Poly.gen(self.model.domain, self.model.var)
        t = u - self.base_point.u
        tpow = CurveFunction(self.model, t)
        acc = None
        for (i, j), c in self.F.coeffs.items():
            term = CurveFunction(self.model, self.model.domain.coerce(c))
            if i:
                term = term * znum ** i
            if j:
                term = term * wnum ** j
            term = term * tpow ** (_MAX_POLE - zpole * i - wpole * j)
            acc = term if acc is None else acc + term
        return acc is not None and acc.is_zero()

    def to_json(self):
        def func_json(num, pole):
            dom = self.model.domain
            u = Poly.gen(dom, self.model.var)
            den = (u - self.base_point.u) ** pole
            return {"a": ratfunc_to_json(RatFunc(num.a, den)),
                    "b": ratfunc_to_json(RatFunc(num.b, den))}

        return {
            "F": self.F.to_json(),
            "z": func_json(*self.z),
            "w": func_json(*self.w),
            "singular_point": [str(c) for c in self.singular_point],
            "singularity": self.singularity,
        }


def _branch_series(model, u0, v0, prec):
    """v as a power series in t = u - u0 along the branch through (u0, v0)."""
    dom = model.domain
    t = Poly.gen(dom, "@t")
    shifted = model.f(t + u0)
    return series_sqrt(PowerSeries.from_poly(shifted, prec), c0=v0)


def _candidate_rows(k, vminus, order):
    """Local expansion rows at the involute for each basis coefficient.

    Basis: a_0..a_k for A = sum a_i t^i, then b_0..b_{k-3} for B.  Row m
    collects the t^m coefficients, m < order.
    """
    dom = vminus.domain
    rows = []
    for m in range(order):
        row = []
        for i in range(k + 1):
            row.append(dom.one if i == m else dom.zero)
        for j in range(k - 2):
            row.append(vminus.coeff(m - j) if 0 <= m - j else dom.zero)
        rows.append(row)
    return rows


def _space_basis(model, u0, v0, k):
    """Kernel vectors spanning L(k q0) in the (A, B) coefficient basis."""
    dom = model.domain
    vminus = _branch_series(model, u0, -v0, k + 2)
    rows = _candidate_rows(k, vminus, k)
    # nullspace wants the matrix explicitly; rows x cols = k x (2k-1)
    return nullspace(dom, rows)


def _vector_to_function(model, u0, vec, k):
    dom = model.domain
    u = Poly.gen(dom, model.var)
    t = u - u0
    A = Poly(dom, model.var, {})
    for i in range(k + 1):
        A = A + t ** i * vec[i]
    B = Poly(dom, model.var, {})
    for j in range(k - 2):
        B = B + t ** j * vec[k + 1 + j]
    return CurveFunction(model, A, B)


def quartic_model(model, q0):
    """Plane quartic with one node from a finite non-special base point.

    Raises SpecialPointError for Weierstrass or infinite q0, DomainError
    when the linear algebra does not produce the expected dimensions
    (which would signal an arithmetic bug, not bad input).
    """
    if q0.at_infinity:
        raise SpecialPointError("special point: use the degree-5 model instead")
    if not model.contains(q0):
        raise DomainError("base point is not on the curve")
    if is_special(model, q0):
        raise SpecialPointError("special point: use the degree-5 model instead")
    dom = model.domain
    u0, v0 = q0.u, q0.v

    basis3 = _space_basis(model, u0, v0, 3)
    if len(basis3) != 2:
        raise DomainError("dimension mismatch: dim L(3q0) = %d, expected 2"
                          % len(basis3))
    basis4 = _space_basis(model, u0, v0, 4)
    if len(basis4) != 3:
        raise DomainError("dimension mismatch: dim L(4q0) = %d, expected 3"
                          % len(basis4))

    vplus = _branch_series(model, u0, v0, _EXPANSION + _MAX_POLE)

    def leading(vec, k):
        # value of A + B v at t=0 along the main branch: the t^-k Laurent lead
        return vec[0] + vec[k + 1] * v0

    # z: a kernel vector with a genuine triple pole, normalized to lead 1
    zvec = None
    for vec in basis3:
        lead = leading(vec, 3)
        if not dom.is_zero(lead):
            scale = dom.one / lead
            zvec = [c * scale for c in vec]
            break
    if zvec is None:
        raise DomainError("dimension mismatch: no triple-pole function in L(3q0)")

    # w: quadruple pole, lead 1, then clear its t^-3 term against z
    wvec = None
    for vec in basis4:
        lead = leading(vec, 4)
        if not dom.is_zero(lead):
            scale = dom.one / lead
            wvec = [c * scale for c in vec]
            break
    if wvec is None:
        raise DomainError("dimension mismatch: no quadruple-pole function in L(4q0)")

    zfun = _vector_to_function(model, u0, zvec, 3)
    wfun = _vector_to_function(model, u0, wvec, 4)

    zser = _series_of(zfun, u0, vplus, _EXPANSION + _MAX_POLE)
    wser = _series_of(wfun, u0, vplus, _EXPANSION + _MAX_POLE)
    # subtract the t^-3 component of w (coefficient of t^1 in its numerator
    # series) using z, so w = t^-4 (1 + O(t^2)) and the pair is canonical
    c3 = wser.coeff(1)
    if not dom.is_zero(c3):
        wfun = wfun - zfun * CurveFunction(model, _tpoly(model, u0)) * c3
        wser = _series_of(wfun, u0, vplus, _EXPANSION + _MAX_POLE)

    rows = _relation_rows(dom, zser, wser)
    rel = nullspace(dom, rows)
    if not rel or len(rel) > 2:
        raise DomainError("dimension mismatch: relation kernel has dimension %d"
                          % len(rel))
    if len(rel) == 2:
        # the span may also contain z * F; kill the z^5 coordinate
        i5 = _MONOMIALS.index((5, 0))
        v1, v2 = rel
        if dom.is_zero(v2[i5]):
            v1, v2 = v2, v1
        if dom.is_zero(v2[i5]):
            raise DomainError("dimension mismatch: two relations without z^5")
        ratio = v1[i5] / v2[i5]
        rel = [[a - ratio * b for a, b in zip(v1, v2)]]
    coeffs = rel[0]
    i5 = _MONOMIALS.index((5, 0))
    if not dom.is_zero(coeffs[i5]):
        raise DomainError("dimension mismatch: relation keeps a z^5 term")
    i4 = _MONOMIALS.index((4, 0))
    if dom.is_zero(coeffs[i4]):
        raise DomainError("dimension mismatch: relation lost its z^4 term")
    scale = dom.one / coeffs[i4]
    coeffs = [c * scale for c in coeffs]
    F = BiPoly(dom, ("z", "w"),
               {mon: c for mon, c in zip(_MONOMIALS, coeffs)})
    dz, dw = F.degree_pair
    if (dz, dw) != (4, 3) or F.total_degree != 4:
        raise DomainError("dimension mismatch: bidegree (%d, %d)" % (dz, dw))

    point, kind = _singular_point(F)
    out = QuarticModel(F, (zfun, 3), (wfun, 4), point, kind, q0, model)
    if not out.verify():
        raise DomainError("relation failed exact verification")
    return out


def _tpoly(model, u0):
    u = Poly.gen(model.domain, model.var)
    return u - u0


def _series_of(fun, u0, vplus, window):
    """Numerator series A(u0+t) + B(u0+t) v(t) of a curve function."""
    dom = fun.model.domain
    tvar = vplus.var
    tgen = Poly.gen(dom, tvar)
    A = fun.a(tgen + u0)
    B = fun.b(tgen + u0)
    return (PowerSeries.from_poly(A, window)
            + PowerSeries.from_poly(B, window) * vplus)


def _relation_rows(dom, zser, wser):
    """40 rows (Laurent positions t^-15..t^24) by 15 monomial columns."""
    # numerator series: z = zser / t^3, w = wser / t^4
    pows_z = {0: PowerSeries(dom, zser.var, {0: dom.one}, _EXPANSION + _MAX_POLE)}
    pows_w = {0: pows_z[0]}
    for i in range(1, 6):
        pows_z[i] = pows_z[i - 1] * zser
    for j in range(1, 4):
        pows_w[j] = pows_w[j - 1] * wser
    cols = []
    for (i, j) in _MONOMIALS:
        pole = 3 * i + 4 * j
        ser = pows_z[i] * pows_w[j]
        # Laurent coefficient of t^e is ser.coeff(e + pole)
        col = []
        for e in range(-_MAX_POLE, _EXPANSION - _MAX_POLE):
            idx = e + pole
            col.append(ser.coeff(idx) if idx >= 0 else dom.zero)
        cols.append(col)
    return [[cols[m][r] for m in range(len(_MONOMIALS))]
            for r in range(_EXPANSION)]


def _singular_point(F):
    """The unique affine singular point of F, classified node or cusp.

    Resultants in w of (F, F_w) and (F, F_z) trap every singular z; the
    only spurious factor either can pick up is the degree <= 1 leading
    w-coefficient of F, so candidates stay rational and checkable.  The
    delta invariant must be 1 for the genus count, which admits exactly
    two local shapes: a node (quadratic part of rank 2) or an ordinary
    cusp (rank 1 with the cubic part transverse to the double tangent).
    Anything flatter is reported as an error.
    """
    dom = F.domain
    Fz = F.partial(0)
    Fw = F.partial(1)
    Pw = F.as_poly_in_w()
    r1 = poly_resultant(Pw, Fw.as_poly_in_w())
    r2 = poly_resultant(Pw, Fz.as_poly_in_w())
    if r1.is_zero() or r2.is_zero():
        raise DomainError("singular locus is not isolated")
    g = poly_gcd(r1.num, r2.num)
    if g.degree < 1:
        raise DomainError("quartic has no affine singular point")
    s = squarefree_part(g).monic()
    candidates = []
    lcw = Pw.lc()  # RatFunc over dom[z]; degree <= 1 numerator
    if not lcw.is_poly() or lcw.num.degree > 1:
        raise DomainError("unexpected leading w-coefficient")
    if lcw.num.degree == 1:
        zstar = -lcw.num.coeff(0) / lcw.num.lc()
        lin = Poly(dom, s.var, {1: dom.one, 0: -zstar})
        if s.degree > 0 and (s % lin).is_zero():
            s = s.exact_div(lin)
            candidates.append(zstar)
    if s.degree > 1:
        raise DomainError("singular z-locus of degree %d is not rational"
                          % s.degree)
    if s.degree == 1:
        candidates.append(-s.coeff(0))
    genuine = []
    for z0 in candidates:
        fz0 = F.eval_z(z0)
        h = poly_gcd(poly_gcd(fz0, Fz.eval_z(z0)), Fw.eval_z(z0))
        if h.degree < 1:
            continue
        h = squarefree_part(h).monic()
        if h.degree > 1:
            raise DomainError("multiple singular points over z = %s" % (z0,))
        w0 = -h.coeff(0)
        if not (dom.is_zero(fz0(w0)) and dom.is_zero(Fz.eval_z(z0)(w0))
                and dom.is_zero(Fw.eval_z(z0)(w0))):
            continue
        genuine.append((z0, w0))
    if len(genuine) != 1:
        raise DomainError("expected exactly one affine singular point, found %d"
                          % len(genuine))
    z0, w0 = genuine[0]
    local = F.translate(z0, w0)
    quad = local.homogeneous_part(2)
    q20 = quad.get((2, 0), dom.zero)
    q11 = quad.get((1, 1), dom.zero)
    q02 = quad.get((0, 2), dom.zero)
    disc = q11 * q11 - dom.coerce(4) * q20 * q02
    if not dom.is_zero(disc):
        return (z0, w0), "node"
    if dom.is_zero(q20) and dom.is_zero(q11) and dom.is_zero(q02):
        raise DomainError("quadratic part vanishes: delta invariant exceeds 1")
    # rank-1 quadratic part: double tangent direction (dz, dw), cusp iff
    # the cubic part does not also vanish along it
    if not dom.is_zero(q20):
        direction = (-q11 / (dom.coerce(2) * q20), dom.one)
    else:
        direction = (dom.one, -q11 / (dom.coerce(2) * q02))
    cubic = local.homogeneous_part(3)
    c3 = dom.zero
    for (i, j), c in cubic.items():
        term = c
        if i:
            term = term * direction[0] ** i
        if j:
            term = term * direction[1] ** j
        c3 = c3 + term
    if dom.is_zero(c3):
        raise DomainError("singular point is a tacnode or worse (delta > 1)")
    return (z0, w0), "cusp"
