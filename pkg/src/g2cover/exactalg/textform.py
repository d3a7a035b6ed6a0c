"""Text and JSON forms for polynomials and rational functions.

Text grammar (CLI-facing): sums of terms, implicit or explicit `*`,
`^` powers, parentheses, rational literals like 7 or 7/3.  Variable names
are single letters or the words alpha / lambda / theta, which normalize to
α, λ, θ.

JSON form: {"var": v, "coeffs": [[exponent-as-string, coefficient], ...]}
with exponents ascending.  Rational coefficients are "n" or "n/d" strings;
coefficients may recursively be polynomial or {"num","den"} objects, which
covers towers over rational function fields.
"""

import re
from fractions import Fraction

from ..errors import DomainError
from .domains import QQ
from .poly import Poly
from .ratfunc import FractionField, RatFunc

_WORD_VARS = {"alpha": "α", "lambda": "λ", "theta": "θ"}

_TOKEN = re.compile(r"\s*(\d+(?:/\d+)?|[A-Za-zαλθ]+|\*\*|[-+*^()])")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DomainError("cannot read polynomial text at %r" % text[pos:pos + 12])
        tok = m.group(1)
        if tok == "**":
            tok = "^"
        out.append(tok)
        pos = m.end()
    out.append(None)
    return out


class _Parser:
    """Recursive descent over the token list; values are monomial dicts
    {(sorted (var, exp) pairs): Fraction}."""

    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise DomainError("trailing input in polynomial text: %r" % self.peek())
        return v

    def expr(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        acc = _scale(self.term(), sign)
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take() == "-":
                    sign = -sign
            acc = _add(acc, _scale(self.term(), sign))
        return acc

    def term(self):
        acc = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif t is not None and t not in ("+", "-", ")", "^"):
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            t = self.take()
            if t is None or not t.isdigit():
                raise DomainError("exponent must be a nonnegative integer")
            base = _pow(base, int(t))
        return base

    def atom(self):
        t = self.take()
        if t == "(":
            v = self.expr()
            if self.take() != ")":
                raise DomainError("unbalanced parenthesis in polynomial text")
            return v
        if t == "-":
            return _scale(self.factor(), -1)
        if t is None:
            raise DomainError("polynomial text ended unexpectedly")
        if t[0].isdigit():
            return {(): Fraction(t)}
        name = _WORD_VARS.get(t, t)
        if len(name) != 1:
            raise DomainError("unknown variable %r" % t)
        return {((name, 1),): Fraction(1)}


def _add(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _scale(a, s):
    if s == 1:
        return a
    return {k: c * s for k, c in a.items()}


def _mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            exps = dict(ka)
            for v, e in kb:
                exps[v] = exps.get(v, 0) + e
            k = tuple(sorted(exps.items()))
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _pow(a, n):
    out = {(): Fraction(1)}
    for _ in range(n):
        out = _mul(out, a)
    return out


def parse_monomials(text):
    """Raw monomial dict {((var, exp), ...): Fraction} from expression text."""
    return _Parser(_tokenize(text)).parse()


def parse_poly(text, var=None, domain=QQ):
    """Univariate Poly over the rationals from expression text.

    var pins the expected variable; without it the single variable present
    is used (a constant needs var to be supplied).
    """
    mono = parse_monomials(text)
    seen = set()
    for k in mono:
        for v, _ in k:
            seen.add(v)
    if len(seen) > 1:
        raise DomainError("expected one variable, found %s" % sorted(seen))
    if var is None:
        if not seen:
            raise DomainError("constant text needs an explicit variable name")
        var = seen.pop()
    elif seen and seen != {var}:
        raise DomainError("expected variable %r, found %s" % (var, sorted(seen)))
    coeffs = {}
    for k, c in mono.items():
        e = k[0][1] if k else 0
        coeffs[e] = domain.coerce(c)
    return Poly(domain, var, coeffs)


def format_fraction(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_poly(p):
    """Canonical text: descending exponents, unit coefficients folded."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p.coeffs[e]
        cs = _coeff_text(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if e == 0:
            body = mag
        else:
            ve = p.var if e == 1 else "%s^%d" % (p.var, e)
            body = ve if mag == "1" else "%s*%s" % (mag, ve)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _coeff_text(c):
    if isinstance(c, Fraction) or isinstance(c, int):
        return format_fraction(c)
    if isinstance(c, Poly):
        return "(" + format_poly(c) + ")"
    if isinstance(c, RatFunc):
        if c.is_poly():
            return _coeff_text(c.as_poly())
        return "((%s)/(%s))" % (format_poly(c.num), format_poly(c.den))
    return repr(c)


def coefficient_to_json(c):
    if isinstance(c, (Fraction, int)):
        return format_fraction(c)
    if isinstance(c, Poly):
        return poly_to_json(c)
    if isinstance(c, RatFunc):
        if c.is_poly():
            return coefficient_to_json(c.as_poly())
        return {"num": poly_to_json(c.num), "den": poly_to_json(c.den)}
    raise DomainError("no JSON form for coefficient %r" % (c,))


def poly_to_json(p):
    return {"var": p.var,
            "coeffs": [[str(e), coefficient_to_json(p.coeffs[e])]
                       for e in sorted(p.coeffs)]}


def coefficient_from_json(obj, domain=QQ):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, dict) and "num" in obj:
        num = poly_from_json(obj["num"])
        den = poly_from_json(obj["den"])
        return RatFunc(num, den)
    if isinstance(obj, dict) and "var" in obj:
        return poly_from_json(obj)
    raise DomainError("unreadable coefficient %r" % (obj,))


def poly_from_json(obj, domain=QQ):
    coeffs = {}
    for e_s, c_obj in obj["coeffs"]:
        coeffs[int(e_s)] = coefficient_from_json(c_obj, domain)
    nested = None
    for v in coeffs.values():
        if isinstance(v, RatFunc):
            nested = FractionField(v.num.domain, v.num.var)
            break
        if isinstance(v, Poly):
            nested = FractionField(v.domain, v.var)
            break
    if nested is not None:
        return Poly(nested, obj["var"],
                    {e: nested.coerce(c) for e, c in coeffs.items()})
    return Poly(domain, obj["var"], {e: domain.coerce(c) for e, c in coeffs.items()})


def ratfunc_to_json(r):
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(obj, domain=QQ):
    return RatFunc(poly_from_json(obj["num"], domain),
                   poly_from_json(obj["den"], domain))
