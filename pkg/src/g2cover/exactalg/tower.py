"""Quotient-ring towers over Q or over a rational function field.

A tower is an ordered list of levels (generator name, monic defining
polynomial over the level below).  Defining polynomials are not checked for
irreducibility: zero divisors surface during inversion as ZeroDivisorError
carrying the discovered factor, and the caller may split the tower.

Elements are reduced nested polynomials; arithmetic recurses through the
levels.  Norms come down the tower as resultants against the defining
polynomials.
"""

from ..errors import DomainError, ZeroDivisorError
from .domains import Domain
from .poly import Poly, poly_resultant, poly_xgcd


class TowerLevel:
    __slots__ = ("name", "minpoly")

    def __init__(self, name, minpoly):
        if minpoly.degree < 1:
            raise DomainError("defining polynomial must be nonconstant")
        lc = minpoly.lc()
        if not minpoly.domain.is_zero(lc - minpoly.domain.one):
            minpoly = minpoly.monic()
        self.name = name
        self.minpoly = minpoly

    @property
    def degree(self):
        return self.minpoly.degree

    def __eq__(self, other):
        return (isinstance(other, TowerLevel) and other.name == self.name
                and other.minpoly == self.minpoly)

    def __hash__(self):
        return hash((self.name, self.minpoly))


class Tower:
    def __init__(self, base, levels=()):
        self.base = base
        self.levels = list(levels)
        self._domains = None

    @classmethod
    def over(cls, base):
        return cls(base, ())

    def extend(self, name, minpoly):
        """New tower with one more level; minpoly is a Poly in `name` over
        this tower's top domain (or over the base for the first level)."""
        expected = self.top
        if minpoly.domain != expected:
            raise DomainError("defining polynomial must live over the current top")
        if minpoly.var != name:
            raise DomainError("defining polynomial variable must match the generator name")
        return Tower(self.base, self.levels + [TowerLevel(name, minpoly)])

    def domain(self, k):
        """Domain of level k; level 0 is the base."""
        if k == 0:
            return self.base
        if self._domains is None:
            self._domains = {}
        if k not in self._domains:
            self._domains[k] = TowerDomain(self, k)
        return self._domains[k]

    @property
    def depth(self):
        return len(self.levels)

    @property
    def top(self):
        return self.domain(self.depth)

    @property
    def dimension(self):
        d = 1
        for lvl in self.levels:
            d *= lvl.degree
        return d

    def gen(self, k):
        """Generator of level k (1-indexed), as an element of the top domain."""
        if not 1 <= k <= self.depth:
            raise DomainError("no level %d in a depth-%d tower" % (k, self.depth))
        below = self.domain(k - 1)
        rep = Poly.gen(below, self.levels[k - 1].name)
        elem = TowerElement(self, k, rep)
        return self.top.coerce(elem)

    def prefix_key(self, k):
        """Identity of the level-k domain: the base and the first k levels.
        Extending a tower must not orphan elements built over a prefix."""
        return (self.base, tuple(self.levels[:k]))

    def __eq__(self, other):
        return (isinstance(other, Tower) and other.base == self.base
                and other.levels == self.levels)

    def __hash__(self):
        return hash((self.base, tuple(self.levels)))

    def __repr__(self):
        names = ", ".join(l.name for l in self.levels)
        return "Tower(%r; %s)" % (self.base, names)


class TowerElement:
    __slots__ = ("tower", "level", "rep")

    def __init__(self, tower, level, rep):
        mp = tower.levels[level - 1].minpoly
        if rep.degree >= mp.degree:
            rep = rep % mp
        self.tower = tower
        self.level = level
        self.rep = rep

    @property
    def domain(self):
        return self.tower.domain(self.level)

    def is_zero(self):
        return self.rep.is_zero()

    def _lift(self, other):
        dom = self.domain
        try:
            return dom.coerce(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return TowerElement(self.tower, self.level, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, self.level, -self.rep)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return TowerElement(self.tower, self.level, self.rep - o.rep)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return TowerElement(self.tower, self.level, self.rep * o.rep)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return tower_invert(self) ** (-n)
        out = self.domain.one
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * tower_invert(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o * tower_invert(self)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.level, self.rep))

    def apply(self, base_map, gen_images):
        """Push through the homomorphism sending the base via base_map and
        generator k to gen_images[k-1].  Works for numeric embeddings and for
        reduction mod p alike."""
        img = gen_images[self.level - 1]

        def coeff_map(c):
            if self.level == 1:
                return base_map(c)
            return c.apply(base_map, gen_images)

        acc = None
        for e, c in sorted(self.rep.coeffs.items(), reverse=True):
            mc = coeff_map(c)
            term = mc * img**e if e else mc
            acc = term if acc is None else acc + term
        if acc is None:
            return base_map(self.tower.base.zero)
        return acc

    def __repr__(self):
        return "<%s: %r>" % (self.tower.levels[self.level - 1].name, self.rep)


class TowerDomain(Domain):
    def __init__(self, tower, level):
        self.tower = tower
        self.level = level

    @property
    def characteristic(self):
        return self.tower.base.characteristic

    def below(self):
        return self.tower.domain(self.level - 1)

    def var(self):
        return self.tower.levels[self.level - 1].name

    def coerce(self, x):
        if isinstance(x, TowerElement):
            if x.tower.prefix_key(min(x.level, self.level)) != \
                    self.tower.prefix_key(min(x.level, self.level)):
                raise DomainError("element from an incompatible tower")
            if x.level == self.level:
                return x
            if x.level < self.level:
                below = self.below().coerce(x)
                return TowerElement(self.tower, self.level,
                                    Poly.constant(self.below(), self.var(), below))
            raise DomainError("cannot lower a tower element")
        c = self.below().coerce(x)
        return TowerElement(self.tower, self.level,
                            Poly.constant(self.below(), self.var(), c))

    def is_zero(self, x):
        return self.coerce(x).rep.is_zero()

    def __eq__(self, other):
        return (isinstance(other, TowerDomain) and other.level == self.level
                and other.tower.prefix_key(self.level) == self.tower.prefix_key(self.level))

    def __hash__(self):
        return hash(("TD", self.level, self.tower.prefix_key(self.level)))

    def __repr__(self):
        return "%r.level(%d)" % (self.tower, self.level)


def tower_invert(e):
    """Inverse through the tower by extended Euclid against the defining
    polynomial.  Raises ZeroDivisorError with a factor when the level's
    defining polynomial is revealed reducible."""
    if isinstance(e, TowerElement):
        if e.rep.is_zero():
            raise ZeroDivisionError("inverting zero tower element")
        level = e.tower.levels[e.level - 1]
        d, s, _ = poly_xgcd(e.rep, level.minpoly)
        if d.degree > 0:
            raise ZeroDivisorError(
                "zero divisor at level %d (%s): defining polynomial has factor"
                % (e.level, level.name), factor=d, level=e.level)
        # d is the monic constant 1; s holds rep^{-1} modulo the minpoly
        return TowerElement(e.tower, e.level, s)
    # base scalars
    return 1 / e


def tower_norm(e):
    """Norm down to the base domain: resultants against defining polynomials."""
    if not isinstance(e, TowerElement):
        return e
    level = e.tower.levels[e.level - 1]
    if e.rep.is_zero():
        r = e.tower.domain(e.level - 1).zero
    elif e.rep.degree == 0:
        r = e.rep.coeff(0) ** level.degree
    else:
        r = poly_resultant(level.minpoly, e.rep)
    return tower_norm(r)


def numeric_embeddings(tower, root_solver, base_map=complex):
    """All embeddings of the tower into the complex numbers.

    root_solver(complex_coeff_list_ascending) must return the roots of the
    polynomial with those coefficients.  Returns a list of embeddings, each a
    list of generator images ordered by level; the list is sorted by the
    rounded (re, im) pairs of the images so branch indices are reproducible.
    """
    chains = [[]]
    for k, lvl in enumerate(tower.levels, start=1):
        new_chains = []
        for chain in chains:
            coeffs = []
            for e in range(lvl.degree + 1):
                c = lvl.minpoly.coeff(e)
                if k == 1:
                    coeffs.append(base_map(c))
                else:
                    coeffs.append(c.apply(base_map, chain))
            roots = root_solver(coeffs)
            roots = sorted(roots, key=_root_key)
            for r in roots:
                new_chains.append(chain + [r])
        chains = new_chains
    return sorted(chains, key=lambda ch: [_root_key(r) for r in ch])


def _root_key(z):
    return (round(float(z.real), 9), round(float(z.imag), 9))
