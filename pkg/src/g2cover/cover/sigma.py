"""Deck action, fiber enumeration, and images on the quotient cubic.

The deck generator multiplies w by a primitive cube root of unity, so it
only makes sense once the coordinates live in a ring containing one.  The
root is located by scanning the coordinate tower for a level defined by
t^2 + t + 1; plain rational coordinates are rejected with instructions.
"""

from fractions import Fraction

from ..errors import DomainError
from ..exactalg import Poly, QQ, Tower
from ..exactalg.poly import fraction_sqrt
from ..exactalg.tower import TowerElement


def _unity_root(coords):
    """Primitive cube root of unity inside the tower of a coordinate."""
    for x in coords:
        if not isinstance(x, TowerElement):
            continue
        tower = x.tower
        for k in range(1, tower.depth + 1):
            mp = tower.levels[k - 1].minpoly
            below = tower.domain(k - 1)
            if (mp.degree == 2 and mp.coeff(2) == below.one
                    and mp.coeff(1) == below.one and mp.coeff(0) == below.one):
                return tower.gen(k)
        break
    raise DomainError(
        "coordinates see no cube root of unity; extend the tower by t^2 + t + 1")


def deck_transform(C, p):
    """One step of the deck group: (u, v, w) -> (u, v, theta w)."""
    if not C.contains(p):
        raise DomainError("deck action on a point off the cover")
    th = _unity_root(p)
    return (p[0], p[1], th * p[2])


def sigma_eval(C, E, p):
    """Images on the quotient cubic of p and of its first deck translate.

    Returns a pair of projective triples (1 : u : z), both certified to
    lie on the cubic.  Together with the image of the second translate
    they exhaust the intersection of the cubic with the vertical line
    through u(p).
    """
    if not C.contains(p):
        raise DomainError("projection of a point off the cover")
    th = _unity_root(p)
    first = E.image(p)
    second = E.image((p[0], p[1], th * p[2]))
    for q in (first, second):
        if not E.cubic.contains(q):
            raise DomainError("projection missed the cubic")
    return first, second


def sum_map_check(C, E, p):
    """Certify that the deck orbit of p maps to a full line section.

    The three z-values of the orbit must have elementary symmetric
    functions (0, -3 Q(u), 2 P(u)), i.e. they are exactly the roots of
    the cubic's fiber over u = u(p).  A line section's divisor class does
    not move, so the group-law sum of the three image points (with any
    flex as origin, where collinear points sum to zero) is the same for
    every p; this is the exact content behind the constancy of the
    summation map.
    """
    if not C.contains(p):
        raise DomainError("sum map on a point off the cover")
    th = _unity_root(p)
    u, v, w = p
    one = th * 0 + 1
    zs = [E.z_value((u, v, t * w)) for t in (one, th, th * th)]
    e1 = zs[0] + zs[1] + zs[2]
    e2 = zs[0] * zs[1] + zs[0] * zs[2] + zs[1] * zs[2]
    e3 = zs[0] * zs[1] * zs[2]
    return e1 == 0 and e2 == -3 * C.Q(u) and e3 == 2 * C.P(u)


def _icbrt(n):
    """Integer cube root of n >= 0 (floor)."""
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / 3)))
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def _fraction_cbrt(q):
    """Exact cube root of a Fraction, or None."""
    a = _icbrt(abs(q.numerator))
    b = _icbrt(q.denominator)
    if a ** 3 == abs(q.numerator) and b ** 3 == q.denominator:
        r = Fraction(a, b)
        return r if q >= 0 else -r
    return None


def cover_fiber(C, u0, branch=None):
    """Cover points above u = u0, coordinates in one shared tower.

    The tower always starts with a cube root of unity so the deck action
    is visible.  Square roots of f(u0) that are rational, or rational
    multiples of 2*theta + 1 (whose square is -3), avoid a tower level;
    everything else extends the tower.  Cube-root levels are added on the
    assumption that the radicand is not already a cube upstairs, which
    holds for rational non-cubes since the lower levels have degree prime
    to 3; a violation would surface later as ZeroDivisorError.

    branch selects a single v-sign (0 or 1) instead of both.  Points with
    w = 0 appear once: the three sheets collide in coordinates there.
    """
    if C.f.domain != QQ:
        raise DomainError("fiber enumeration works over the plain rationals")
    u0 = QQ.coerce(u0)
    fv = C.f(u0)
    tower = Tower.over(QQ).extend("th", Poly.from_list(QQ, "th", [1, 1, 1]))

    vs = []
    if fv == 0:
        vs.append(Fraction(0))
    else:
        r = fraction_sqrt(fv)
        if r is not None:
            vs.extend([r, -r])
        else:
            c = fraction_sqrt(-fv / 3)
            if c is not None:
                th = tower.gen(1)
                root = c * (2 * th + 1)
                vs.extend([root, -root])
            else:
                top = tower.top
                tower = tower.extend(
                    "s", Poly(top, "s", {2: top.one, 0: top.coerce(-fv)}))
                s = tower.gen(2)
                vs.extend([s, -s])
    if branch is not None:
        if not 0 <= branch < len(vs):
            raise DomainError("no branch %r above u = %s" % (branch, u0))
        vs = [vs[branch]]

    pu = C.P(u0)
    names = iter(("w1", "w2"))
    points = []
    for v0 in vs:
        c0 = v0 + pu
        if c0 == 0:
            points.append((u0, v0, Fraction(0)))
            continue
        ws = None
        if isinstance(c0, Fraction):
            r = _fraction_cbrt(c0)
            if r is not None:
                th = tower.gen(1)
                ws = [r + 0 * th, r * th, r * th * th]
        if ws is None:
            top = tower.top
            name = next(names)
            tower = tower.extend(
                name, Poly(top, name, {3: top.one, 0: top.coerce(-c0)}))
            g = tower.gen(tower.depth)
            th = tower.gen(1)
            ws = [g, g * th, g * th * th]
        for w0 in ws:
            points.append((u0, v0, w0))

    top = tower.top
    return [tuple(top.coerce(x) for x in pt) for pt in points]
