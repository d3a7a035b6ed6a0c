"""Miller's algorithm: a straight-line program computing a function with
divisor n<P> - n<O> for a certified torsion point.

Each step is recorded as a line (chord, tangent, or vertical) applied as a
multiplication or division, so the result is replayable, evaluable at any
point off the support, and its divisor is auditable from the group-law
bookkeeping alone: a chord through kP and mP has divisor
<kP> + <mP> + <-(k+m)P> - 3<O>, a vertical at kP has <kP> + <-kP> - 2<O>.
"""

from ..errors import DomainError
from .weierstrass import ECPoint, ec_add, ec_equal, ec_mul, ec_neg


class Line:
    """a·x + b·y + c over the curve's domain; kind records provenance and
    the multiples of P involved, for divisor accounting."""

    __slots__ = ("a", "b", "c", "kind", "mults")

    def __init__(self, a, b, c, kind, mults):
        self.a = a
        self.b = b
        self.c = c
        self.kind = kind
        self.mults = tuple(mults)

    def value(self, x, y):
        return self.a * x + self.b * y + self.c

    def divisor_multiples(self):
        """Zeros of the line on the curve, as multiples of P, with the pole
        order at O implied by degree (3 for chords/tangents, 2 for verticals)."""
        if self.kind == "vertical":
            k = self.mults[0]
            return {k: 1, -k: 1}, 2
        k, m = self.mults
        out = {}
        for j in (k, m, -(k + m)):
            out[j] = out.get(j, 0) + 1
        return out, 3

    def to_json(self):
        return {"kind": self.kind, "mults": list(self.mults),
                "a": repr(self.a), "b": repr(self.b), "c": repr(self.c)}


class MillerFunction:
    """Ops: ("sqr", None), ("mul", Line), ("div", Line)."""

    def __init__(self, E, P, n, ops):
        self.E = E
        self.P = P
        self.n = n
        self.ops = ops

    def evaluate(self, Q):
        """Value at an affine point Q off the support {multiples of P}."""
        dom = self.E.domain
        if Q.is_infinity():
            raise DomainError("evaluation at infinity needs the divisor data")
        x, y = Q.x, Q.y
        acc = dom.one
        for op, line in self.ops:
            if op == "sqr":
                acc = acc * acc
            elif op == "mul":
                acc = acc * line.value(x, y)
            else:
                v = line.value(x, y)
                if dom.is_zero(v):
                    raise DomainError("evaluation point lies on a support line")
                acc = acc / v
        return acc

    def divisor(self):
        """Formal divisor as {multiple k: multiplicity of <kP>} plus the O
        coefficient, accumulated from the recorded lines.  Keys are reduced
        mod the exact order of P, which identifies kP with (k mod d)P."""
        d = self._order()
        pts_acc = {}
        o_acc = 0
        for op, line in self.ops:
            if op == "sqr":
                pts_acc = {k: 2 * v for k, v in pts_acc.items()}
                o_acc *= 2
            else:
                zeros, pole = line.divisor_multiples()
                sgn = 1 if op == "mul" else -1
                for k, v in zeros.items():
                    j = k % d
                    if j == 0:
                        o_acc += sgn * v
                    else:
                        pts_acc[j] = pts_acc.get(j, 0) + sgn * v
                o_acc -= sgn * pole
        return {k: v for k, v in pts_acc.items() if v != 0}, o_acc

    def _order(self):
        if self.P.is_infinity():
            return 1
        for d in range(1, self.n + 1):
            if self.n % d == 0 and ec_mul(self.E, d, self.P).is_infinity():
                return d
        return self.n

    def lines(self):
        return [line for op, line in self.ops if line is not None]

    def to_json(self):
        return {"n": self.n,
                "ops": [[op, line.to_json() if line else None]
                        for op, line in self.ops]}


def _chord_or_tangent(E, A, B, ka, kb):
    """Line through points A = ka·P and B = kb·P (tangent when equal)."""
    dom = E.domain
    if A.is_infinity() and B.is_infinity():
        raise DomainError("no affine line through the identity alone")
    if A.is_infinity() or B.is_infinity():
        # line through O and an affine point degenerates to the vertical
        other, k = (B, kb) if A.is_infinity() else (A, ka)
        return Line(dom.one, dom.zero, -other.x, "vertical", (k,))
    if ec_equal(dom, A, B):
        if dom.is_zero(A.y):
            return Line(dom.one, dom.zero, -A.x, "vertical", (ka,))
        s = (3 * A.x * A.x + E.a) / (2 * A.y)
        return Line(-s, dom.one, s * A.x - A.y, "tangent", (ka, kb))
    if dom.is_zero(A.x - B.x):
        return Line(dom.one, dom.zero, -A.x, "vertical", (ka,))
    s = (B.y - A.y) / (B.x - A.x)
    return Line(-s, dom.one, s * A.x - A.y, "chord", (ka, kb))


def miller_function(E, P, n):
    """Straight-line program for the function with divisor n<P> - n<O>.
    Requires nP = O; errors with "not torsion" otherwise."""
    if n < 1:
        raise DomainError("the multiplicity n must be positive")
    if not E.contains(P):
        raise DomainError("point is not on the curve")
    if not ec_mul(E, n, P).is_infinity():
        raise DomainError("not torsion: %d·P is not the identity" % n)
    dom = E.domain
    ops = []
    if P.is_infinity():
        # divisor n<O> - n<O> = 0, the constant 1
        return MillerFunction(E, P, n, ops)
    k = 1
    T = P
    for bit in bin(n)[3:]:
        # f <- f² · line_{T,T} / vert_{2T}
        ops.append(("sqr", None))
        if T.is_infinity():
            # tangent at O is the line at infinity: nothing affine to record
            k *= 2
        else:
            line = _chord_or_tangent(E, T, T, k, k)
            T2 = ec_add(E, T, T, checked=False)
            ops.append(("mul", line))
            k *= 2
            if not T2.is_infinity() and line.kind != "vertical":
                ops.append(("div", Line(dom.one, dom.zero, -T2.x,
                                        "vertical", (k,))))
            T = T2
        if bit == "1":
            if T.is_infinity():
                # line through O and P is the vertical at P, which the
                # correction divides right back out
                k += 1
                T = P
                continue
            line = _chord_or_tangent(E, T, P, k, 1)
            T1 = ec_add(E, T, P, checked=False)
            ops.append(("mul", line))
            k += 1
            if not T1.is_infinity() and line.kind != "vertical":
                ops.append(("div", Line(dom.one, dom.zero, -T1.x,
                                        "vertical", (k,))))
            T = T1
    return MillerFunction(E, P, n, ops)
