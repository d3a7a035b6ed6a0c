"""Lower bounds for the degree of the image curve in the two-torus.

Two functions with divisors n(p2 - p1) and n(p3 - p1) on a curve Y map Y
onto an irreducible plane curve F = 0.  The subfield they generate sits
inside k(Y) with some index m, and the extension above it is totally
ramified below all three points p_i, so Riemann-Hurwitz bounds m in terms
of the genus of Y.  Sorting by the genus of the image curve gives a
trichotomy: a high-genus image forces m = 1 and degree exactly n, a
genus-1 image still satisfies deg F >= n/m_max, and a genus-0 image would
make the two coordinates powers of one function, which the functional
abc-inequality rules out once n > 2 g(Y) + 1.
"""

from ..errors import DomainError


class DegreeBoundsReport:
    """Genus trichotomy for the image of a torsion-order-n construction."""

    __slots__ = ("n", "cover_genus", "high_genus", "genus_one", "genus_zero")

    def __init__(self, n, cover_genus, high_genus, genus_one, genus_zero):
        self.n = n
        self.cover_genus = cover_genus
        self.high_genus = high_genus
        self.genus_one = genus_one
        self.genus_zero = genus_zero

    def to_json(self):
        return {
            "n": self.n,
            "cover_genus": self.cover_genus,
            "high_genus": dict(self.high_genus),
            "genus_one": dict(self.genus_one),
            "genus_zero": dict(self.genus_zero),
        }

    def __eq__(self, other):
        if not isinstance(other, DegreeBoundsReport):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __repr__(self):
        return "DegreeBoundsReport(n=%d, gY=%d)" % (self.n, self.cover_genus)


def image_degree_bounds(n, cover_genus=4):
    """Degree bounds for the image curve when n is the exact torsion order.

    With budget 2 gY - 2 for Riemann-Hurwitz and m the index of the image
    function field:

      image genus >= 2: budget >= 2m + 3(m - 1), so m <= (2 gY + 1)/5; for
        the default gY = 4 that forces m = 1 and deg F = n exactly;
      image genus 1: budget >= 3(m - 1), so m <= (2 gY + 1)/3 (that is 3
        for gY = 4) and deg F >= n / m_max;
      image genus 0: only possible for n <= 2 gY + 1 (9 when gY = 4).

    The report keeps the computed m caps so the caller can see which case
    collapsed.  Requires cover_genus >= 2: the count charges two totally
    ramified points at full weight and one at weight m - 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("torsion order must be a positive integer")
    if (not isinstance(cover_genus, int) or isinstance(cover_genus, bool)
            or cover_genus < 2):
        raise DomainError("degree bounds need a covering curve of genus >= 2")
    budget = 2 * cover_genus - 2
    m_high = (budget + 3) // 5
    m_one = (budget + 3) // 3
    high_genus = {
        "m_max": m_high,
        "degree_at_least": -(-n // m_high),
        "degree_exact": n if m_high == 1 else None,
    }
    genus_one = {"m_max": m_one, "degree_at_least": -(-n // m_one)}
    genus_zero = {
        "possible": n <= 2 * cover_genus + 1,
        "order_cap": 2 * cover_genus + 1,
    }
    return DegreeBoundsReport(n, cover_genus, high_genus, genus_one, genus_zero)
