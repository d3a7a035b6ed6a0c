"""Numeric period lattices, elliptic logarithms, and lattice coordinates.

Everything here is floating point (mpmath at a configurable working
precision, default 212 bits).  Periods come from the arithmetic-geometric
mean with the closest-mean branch rule; the elliptic logarithm comes from
repeated point halving followed by a series inversion of the Weierstrass
function near the origin.  The lattice basis is validated (and enlarged if
a period was missed) with the functional-equation check
2·log(P) - log(2P) ∈ Λ on sample points.
"""

from fractions import Fraction

import mpmath as mp
from mpmath.libmp.libhyper import NoConvergence as _MPNoConvergence

from ..errors import NonConvergenceError, SingularModelError
from ..exactalg.roots import _dk_roots

_DEFAULT_PREC = 212


def _as_mpc(v):
    if isinstance(v, Fraction):
        return mp.mpc(mp.mpf(v.numerator) / mp.mpf(v.denominator))
    if isinstance(v, complex):
        return mp.mpc(v)
    return mp.mpc(v)


def _agm(a, b, maxiter=200):
    """Optimal AGM: at each step pick the square-root branch with
    |a' - b'| <= |a' + b'| (ties broken toward Im(b'/a') > 0)."""
    a = mp.mpc(a)
    b = mp.mpc(b)
    eps = mp.mpf(2) ** (-mp.mp.prec + 8)
    for _ in range(maxiter):
        if abs(a - b) <= eps * abs(a):
            return (a + b) / 2
        am = (a + b) / 2
        gm = mp.sqrt(a * b)
        d_plus = abs(am - gm)
        d_minus = abs(am + gm)
        if d_plus > d_minus:
            gm = -gm
        elif abs(d_plus - d_minus) <= eps * (d_plus + d_minus) and am != 0:
            if mp.im(gm / am) < 0:
                gm = -gm
        a, b = am, gm
    raise NonConvergenceError("AGM did not converge", residual=float(abs(a - b)))


def _cubic_roots(a, b):
    return mp.polyroots([mp.mpf(1), mp.mpf(0), a, b], maxsteps=120, extraprec=80)


def _period_candidates(a, b):
    """One candidate period per root: π / M(√(e_i−e_j), √(e_i−e_k))."""
    roots = _cubic_roots(a, b)
    out = []
    for i in range(3):
        ei = roots[i]
        ej, ek = (roots[j] for j in range(3) if j != i)
        out.append(mp.pi / _agm(mp.sqrt(ei - ek), mp.sqrt(ei - ej)))
    return roots, out


def _gauss_reduce(w1, w2):
    """Shortest-vector reduction of a rank-2 basis; orient Im(w2/w1) > 0."""
    for _ in range(200):
        if abs(w2) < abs(w1):
            w1, w2 = w2, w1
        mu = mp.nint(mp.re(w2 * mp.conj(w1)) / abs(w1) ** 2)
        if mu == 0:
            break
        w2 = w2 - mu * w1
    if abs(w2) < abs(w1):
        w1, w2 = w2, w1
    # deterministic orientation
    if mp.re(w1) < 0 or (mp.re(w1) == 0 and mp.im(w1) < 0):
        w1 = -w1
    if mp.im(w2 / w1) < 0:
        w2 = -w2
    return w1, w2


def _solve_lattice(w1, w2, z):
    """Real coordinates (s, t) with z = s·w1 + t·w2."""
    det = mp.re(w1) * mp.im(w2) - mp.re(w2) * mp.im(w1)
    if det == 0:
        raise NonConvergenceError("degenerate lattice basis")
    s = (mp.re(z) * mp.im(w2) - mp.re(w2) * mp.im(z)) / det
    t = (mp.re(w1) * mp.im(z) - mp.re(z) * mp.im(w1)) / det
    return s, t


def _in_lattice(w1, w2, z, tol):
    s, t = _solve_lattice(w1, w2, z)
    return abs(s - mp.nint(s)) < tol and abs(t - mp.nint(t)) < tol


def _hnf_rows(rows):
    """Hermite form of an integer 2-column row span; returns a 2x2
    upper-triangular basis [(a, b), (0, c)] with a, c > 0."""
    rows = [list(r) for r in rows if r[0] != 0 or r[1] != 0]
    while True:
        live = [r for r in rows if r[0] != 0]
        if len(live) <= 1:
            break
        live.sort(key=lambda r: abs(r[0]))
        p = live[0]
        for r in live[1:]:
            q = r[0] // p[0]
            r[0] -= q * p[0]
            r[1] -= q * p[1]
    pivot = next((r for r in rows if r[0] != 0), None)
    g = 0
    for r in rows:
        if r[0] == 0:
            g = _int_gcd(g, r[1])
    if pivot is None or g == 0:
        raise NonConvergenceError("lattice enlargement degenerated")
    a, b = pivot
    if a < 0:
        a, b = -a, -b
    b %= g
    return [(a, b), (0, g)]


def _int_gcd(x, y):
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


def _enlarge(w1, w2, delta, tol):
    """Extend the lattice spanned by (w1, w2) to include the period delta."""
    s, t = _solve_lattice(w1, w2, delta)
    fs = Fraction(float(s)).limit_denominator(24)
    ft = Fraction(float(t)).limit_denominator(24)
    if abs(s - mp.mpf(fs.numerator) / fs.denominator) > tol or \
       abs(t - mp.mpf(ft.numerator) / ft.denominator) > tol:
        raise NonConvergenceError(
            "missed period is not a small rational combination",
            residual=float(min(abs(s - mp.nint(s)), abs(t - mp.nint(t)))))
    q = fs.denominator * ft.denominator // _int_gcd(fs.denominator,
                                                    ft.denominator)
    p1 = fs.numerator * (q // fs.denominator)
    p2 = ft.numerator * (q // ft.denominator)
    basis = _hnf_rows([[q, 0], [0, q], [p1, p2]])
    (a11, a12), (_, a22) = basis
    n1 = (a11 * w1 + a12 * w2) / q
    n2 = (a22 * w2) / q
    return _gauss_reduce(n1, n2)


class _Wp:
    """Truncated Laurent series of the Weierstrass function for the lattice
    of y² = x³ + a x + b (so g₂ = −4a, g₃ = −4b), valid near z = 0."""

    def __init__(self, a, b, terms=40):
        c = [mp.mpc(0)] * (terms + 1)
        c[1] = -a / 5
        c[2] = -b / 7
        for k in range(3, terms + 1):
            acc = mp.mpc(0)
            for h in range(1, k - 1):
                acc += c[h] * c[k - 1 - h]
            c[k] = 3 * acc / ((2 * k + 3) * (k - 2))
        self.c = c

    def value(self, z):
        w = z * z
        acc = mp.mpc(0)
        for k in range(len(self.c) - 1, 0, -1):
            acc = (acc + self.c[k]) * w
        return 1 / w + acc

    def derivative(self, z):
        w = z * z
        acc = mp.mpc(0)
        for k in range(len(self.c) - 1, 0, -1):
            acc = acc * w + 2 * k * self.c[k]
        return -2 / (w * z) + acc * z


def _num_double(a, b, x, y):
    if abs(y) == 0:
        return None
    s = (3 * x * x + a) / (2 * y)
    x2 = s * s - 2 * x
    return x2, s * (x - x2) - y


def _quartic_roots(coeffs):
    """Roots of a degree-4 polynomial, tolerating the double roots that
    appear when halving a two-torsion point (preimages pair up as ±Q)."""
    try:
        return mp.polyroots(coeffs, maxsteps=160, extraprec=80)
    except _MPNoConvergence:
        pass
    try:
        return mp.polyroots(coeffs, maxsteps=800, extraprec=260)
    except _MPNoConvergence:
        return _dk_roots(list(reversed(coeffs)), mp.mp, maxiter=1200)


def _halving_log(a, b, x0, y0, radius, torsion_hint=None):
    """Elliptic log of the affine point (x0, y0) by repeated halving, up to
    sign and lattice translation."""
    if torsion_hint is not None:
        roots, cands = torsion_hint
        if abs(y0) <= mp.mpf(2) ** (-mp.mp.prec // 2) * (1 + abs(x0)):
            # exact two-torsion: the log is a half-period, and either
            # half-period choice stays on the order-2 grid
            i = min(range(3), key=lambda j: abs(x0 - roots[j]))
            return cands[i] / 2
    big = max((24 / radius) ** 2, 100 * (1 + max(abs(x0), abs(a), abs(b))))
    x = mp.mpc(x0)
    k = 0
    while abs(x) < big:
        # quartic in the half-point's x-coordinate
        rts = _quartic_roots([mp.mpf(1), -4 * x, -2 * a,
                              -(8 * b + 4 * a * x), a * a - 4 * b * x])
        x = max(rts, key=abs)
        k += 1
        if k > 400:
            raise NonConvergenceError("halving did not approach the origin")
    wp = _Wp(a, b)
    z = 1 / mp.sqrt(x)
    for _ in range(80):
        dz = (wp.value(z) - x) / wp.derivative(z)
        z = z - dz
        if abs(dz) < mp.mpf(2) ** (-mp.mp.prec + 10) * abs(z):
            break
    # rebuild the halved point and double back to fix the sign
    xs, ys = wp.value(z), wp.derivative(z) / 2
    for _ in range(k):
        nxt = _num_double(a, b, xs, ys)
        if nxt is None:
            break
        xs, ys = nxt
    else:
        scale = 1 + abs(x0) + abs(y0)
        if abs(xs - x0) > mp.mpf(2) ** (-mp.mp.prec // 4) * scale:
            raise NonConvergenceError("halving log failed to double back",
                                      residual=float(abs(xs - x0)))
        if abs(ys + y0) < abs(ys - y0):
            z = -z
    return z * (2 ** k)


def _sample_points(a, b, roots):
    d = 1 + max(abs(r) for r in roots)
    xs = [roots[0] + d, roots[0] + d * mp.mpc(2.31, 0.77),
          roots[1] + d * mp.mpc(0.4, 1.9)]
    out = []
    for x in xs:
        y = mp.sqrt(x ** 3 + a * x + b)
        if abs(y) > mp.mpf(1e-3) * d:
            out.append((x, y))
    return out


def period_lattice(a, b, prec=_DEFAULT_PREC, tol=1e-12):
    """Reduced period basis (w1, w2) of y² = x³ + a x + b with
    Im(w2/w1) > 0, as python complex numbers.

    Candidates come from the three AGM values; the basis is checked
    against the third candidate and against 2·log(P) − log(2P) on sample
    points, and enlarged when a period falls outside."""
    with mp.workprec(prec):
        am, bm = _as_mpc(a), _as_mpc(b)
        disc = 4 * am ** 3 + 27 * bm ** 2
        if abs(disc) < tol:
            raise SingularModelError("curve is numerically singular: "
                                     "|4a³+27b²| = %.3e" % float(abs(disc)))
        roots, cands = _period_candidates(am, bm)
        # pick the most independent pair as the initial basis
        best = None
        for i in range(3):
            for j in range(i + 1, 3):
                area = abs(mp.im(mp.conj(cands[i]) * cands[j]))
                if area > (abs(cands[i]) * abs(cands[j])) * mp.mpf(1e-8):
                    if best is None or area < best[0]:
                        best = (area, i, j)
        if best is None:
            raise NonConvergenceError("period candidates are collinear")
        _, i, j = best
        w1, w2 = _gauss_reduce(cands[i], cands[j])
        check_tol = mp.mpf(2) ** (-prec // 3)
        for _ in range(6):
            missing = None
            for c in cands:
                if not _in_lattice(w1, w2, c, check_tol):
                    missing = c
                    break
            if missing is None:
                radius = abs(w1)
                for x0, y0 in _sample_points(am, bm, roots):
                    z1 = _halving_log(am, bm, x0, y0, radius)
                    dbl = _num_double(am, bm, x0, y0)
                    if dbl is None:
                        continue
                    z2 = _halving_log(am, bm, dbl[0], dbl[1], radius)
                    for cand in (2 * z1 - z2, 2 * z1 + z2):
                        if _in_lattice(w1, w2, cand, check_tol):
                            break
                    else:
                        missing = 2 * z1 - z2
                        break
            if missing is None:
                return complex(w1), complex(w2)
            w1, w2 = _enlarge(w1, w2, missing, check_tol)
        raise NonConvergenceError("lattice repair did not stabilize")


def elliptic_log(a, b, P, prec=_DEFAULT_PREC):
    """Elliptic logarithm of an ECPoint (or (x, y) pair), well defined up
    to the period lattice and the sign convention of y."""
    with mp.workprec(prec):
        am, bm = _as_mpc(a), _as_mpc(b)
        if hasattr(P, "is_infinity"):
            if P.is_infinity():
                return complex(0)
            x0, y0 = _as_mpc(P.x), _as_mpc(P.y)
        else:
            x0, y0 = _as_mpc(P[0]), _as_mpc(P[1])
        roots, cands = _period_candidates(am, bm)
        radius = min(abs(c) for c in cands)
        return complex(_halving_log(am, bm, x0, y0, radius,
                                    torsion_hint=(roots, cands)))


def betti_coordinates(E, P, tol=1e-12, prec=_DEFAULT_PREC):
    """Coordinates of P in the period lattice, each reduced into [0, 1).

    P is torsion of order dividing n only if both coordinates are within
    tolerance of rationals with denominator n."""
    a, b = E.a, E.b
    with mp.workprec(prec):
        am, bm = _as_mpc(a), _as_mpc(b)
        disc = 4 * am ** 3 + 27 * bm ** 2
        if abs(disc) < tol:
            raise SingularModelError("curve is numerically singular: "
                                     "|4a³+27b²| = %.3e" % float(abs(disc)))
        if P.is_infinity():
            return (0.0, 0.0)
        x0, y0 = _as_mpc(P.x), _as_mpc(P.y)
        resid = abs(y0 * y0 - (x0 ** 3 + am * x0 + bm))
        if resid > mp.mpf(tol) * (1 + abs(x0) ** 3 + abs(y0) ** 2):
            raise SingularModelError("point is not numerically on the curve")
        w1c, w2c = period_lattice(a, b, prec=prec, tol=tol)
        w1, w2 = mp.mpc(w1c), mp.mpc(w2c)
        roots, cands = _period_candidates(am, bm)
        z = mp.mpc(_halving_log(am, bm, x0, y0, abs(w1),
                                torsion_hint=(roots, cands)))
        s, t = _solve_lattice(w1, w2, z)
        out = []
        for v in (s, t):
            f = float(v - mp.floor(v))
            out.append(0.0 if f >= 1.0 else f)
        return tuple(out)
