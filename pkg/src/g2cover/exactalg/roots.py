"""Certified complex roots of squarefree polynomials.

Durand-Kerner simultaneous iteration at controlled mpmath precision, then an
a-posteriori inclusion radius deg * |f(z)/f'(z)| per approximation.  Failing
certification retries with doubled precision rather than silently returning.
"""

import mpmath

from ..errors import CertificationError, DomainError, NonConvergenceError

MAX_DEGREE = 200


def _horner(coeffs, z):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _dk_roots(coeffs, ctx, maxiter=400):
    """One Durand-Kerner run on ascending complex coefficients.  Returns the
    approximations without any certification; callers judge quality."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    radius = 1 + max(abs(c) for c in monic[:-1]) if n > 0 else ctx.mpf(1)
    zs = [radius * ctx.expjpi(2 * ctx.mpf(k) / n + ctx.mpf(1) / (2 * n + 1))
          for k in range(n)]
    eps = ctx.mpf(2) ** (-ctx.prec + 8)
    scale = max(ctx.mpf(1), radius)
    for _ in range(maxiter):
        moved = ctx.mpf(0)
        for k in range(n):
            num = _horner(monic, zs[k])
            den = ctx.mpc(1)
            for j in range(n):
                if j != k:
                    den *= zs[k] - zs[j]
            if den == 0:
                zs[k] = zs[k] + eps * scale * (1 + 1j)
                moved = scale
                continue
            step = num / den
            zs[k] = zs[k] - step
            moved = max(moved, abs(step))
        if moved < eps * scale:
            break
    return zs


def _deriv_coeffs(coeffs):
    return [coeffs[e] * e for e in range(1, len(coeffs))]


def complex_roots(f, tol=1e-10):
    """All complex roots of a squarefree polynomial over the rationals.

    Certification: each returned z satisfies deg(f) * |f(z)/f'(z)| < tol,
    which bounds the distance from z to a true root.  The residual sum
    obeys sum |f(z_k)| < deg * tol * (1 + max |coeff|).
    Raises NonConvergenceError when certification keeps failing.
    """
    if f.degree < 0:
        raise DomainError("zero polynomial has every number as a root")
    if f.degree == 0:
        return []
    if f.degree > MAX_DEGREE:
        raise DomainError("degree %d exceeds supported bound %d" % (f.degree, MAX_DEGREE))
    dense = f.to_dense()
    n = f.degree
    last_residual = None
    for prec in (106, 212, 424, 848):
        with mpmath.workprec(prec):
            ctx = mpmath.mp
            coeffs = [ctx.mpc(ctx.mpf(c.numerator) / ctx.mpf(c.denominator))
                      for c in dense]
            dcoeffs = _deriv_coeffs(coeffs)
            zs = _dk_roots(coeffs, ctx)
            ok = True
            worst = ctx.mpf(0)
            for z in zs:
                fz = _horner(coeffs, z)
                dfz = _horner(dcoeffs, z)
                if dfz == 0:
                    ok = False
                    break
                r = n * abs(fz / dfz)
                worst = max(worst, r)
                if not r < tol:
                    ok = False
            last_residual = float(worst)
            if ok:
                return [complex(z) for z in zs]
    raise NonConvergenceError(
        "root certification failed at radius %.3g (tol %.3g)" % (last_residual, tol),
        residual=last_residual)


def solve_complex_coeffs(coeffs, ctx=None, maxiter=400):
    """Roots of a polynomial given by ascending complex coefficients, at the
    current (or supplied) mpmath precision.  No certification; intended for
    numeric tower embeddings and scan heuristics."""
    if ctx is None:
        ctx = mpmath.mp
    cs = [ctx.mpc(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        raise DomainError("constant polynomial has no roots to solve")
    return _dk_roots(cs, ctx, maxiter=maxiter)


def certify_roots(f, roots, tol=1e-10):
    """Check the inclusion-radius certificate for externally supplied roots."""
    if f.degree < 1:
        raise DomainError("nothing to certify for a constant")
    dense = [complex(c) for c in f.to_dense()]
    dcoeffs = _deriv_coeffs(dense)
    n = f.degree
    if len(roots) != n:
        raise CertificationError("expected %d roots, got %d" % (n, len(roots)))
    for z in roots:
        z = complex(z)
        dfz = _horner(dcoeffs, z)
        if dfz == 0:
            raise CertificationError("derivative vanishes at %r" % (z,))
        r = n * abs(_horner(dense, z) / dfz)
        if not r < tol:
            raise CertificationError("inclusion radius %.3g exceeds %.3g at %r" % (r, tol, z))
    return True
