"""Rational functions with factored denominators.

A FactoredRational is numerator / product of monic linear forms (with
multiplicities).  The denominator is never expanded; addition merges the
factor multisets (max multiplicity) and reduction cancels any denominator
form that divides the numerator exactly.
"""

from fractions import Fraction

from .errors import NotDivisibleError, NotPolynomialError
from .linear import LinearForm
from .polynomial import Polynomial, prod


class FactoredRational:
    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        """denominator: dict LinearForm -> multiplicity; forms must be monic
        and non-constant (scales belong in the numerator)."""
        if isinstance(numerator, (int, Fraction)):
            numerator = Polynomial.constant(numerator)
        self.numerator = numerator
        self.denominator = dict(denominator) if denominator else {}

    @classmethod
    def from_factors(cls, numer_factors, denom_factors, scalar=1):
        """Build scalar * prod(numer) / prod(denom) from LinearForm lists.

        Denominator forms are made monic, their scales folded into the
        overall scalar; the numerator is expanded.
        """
        scalar = Fraction(scalar)
        denom = {}
        for f in denom_factors:
            if f.is_zero():
                raise ZeroDivisionError("zero linear form in denominator")
            if f.is_constant():
                scalar /= f.const
                continue
            scale, g = f.monic()
            scalar /= scale
            denom[g] = denom.get(g, 0) + 1
        numerator = prod((f.to_polynomial() for f in numer_factors),
                         start=Polynomial.constant(scalar))
        return cls(numerator, denom)

    def is_zero(self):
        return self.numerator.is_zero()

    def denominator_polynomial(self) -> Polynomial:
        return prod(f.to_polynomial() ** m for f, m in self.denominator.items())

    def evaluate(self, point):
        den = Fraction(1)
        for f, m in self.denominator.items():
            den *= f.evaluate(point) ** m
        return self.numerator.evaluate(point) / den

    def reduce(self):
        """Cancel every denominator form that divides the numerator."""
        if self.numerator.is_zero():
            return FactoredRational(Polynomial.zero())
        num = self.numerator
        denom = {}
        for f, mult in self.denominator.items():
            while mult > 0:
                try:
                    num = num.divide_exact(f)
                except NotDivisibleError:
                    break
                mult -= 1
            if mult:
                denom[f] = mult
        return FactoredRational(num, denom)

    def to_polynomial(self) -> Polynomial:
        """Numerator after full cancellation; NotPolynomialError otherwise."""
        r = self.reduce()
        if r.denominator:
            raise NotPolynomialError(r)
        return r.numerator

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        a, b = self.reduce(), other.reduce()
        if a.denominator == b.denominator:
            return a.numerator == b.numerator
        # same value, different surviving factorizations: cross-multiply
        return (a.numerator * b.denominator_polynomial()
                == b.numerator * a.denominator_polynomial())

    def __hash__(self):
        r = self.reduce()
        return hash((r.numerator, frozenset(r.denominator.items())))

    def __add__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return frac_sum([self, other])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return FactoredRational(self.numerator * other, self.denominator)
        if not isinstance(other, FactoredRational):
            return NotImplemented
        denom = dict(self.denominator)
        for f, m in other.denominator.items():
            denom[f] = denom.get(f, 0) + m
        return FactoredRational(self.numerator * other.numerator, denom)

    __rmul__ = __mul__

    def __str__(self):
        if not self.denominator:
            return str(self.numerator)
        parts = []
        for f in sorted(self.denominator, key=LinearForm.sort_key):
            m = self.denominator[f]
            parts.append(f"({f})" + (f"^{m}" if m > 1 else ""))
        return f"({self.numerator}) / {'*'.join(parts)}"

    __repr__ = __str__

    def latex(self) -> str:
        from .polynomial import poly_to_latex
        num = poly_to_latex(self.numerator)
        if not self.denominator:
            return num
        parts = []
        for f in sorted(self.denominator, key=LinearForm.sort_key):
            m = self.denominator[f]
            parts.append(f"({f.latex()})" + (f"^{{{m}}}" if m > 1 else ""))
        return rf"\frac{{{num}}}{{{' '.join(parts)}}}"


def frac_sum(terms) -> FactoredRational:
    """Exact sum over the least common denominator, reduced once at the end.

    The common denominator is the multiset max of the factor multisets; each
    numerator is scaled by the factors it is missing.
    """
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return FactoredRational(Polynomial.zero())
    common = {}
    for t in terms:
        for f, m in t.denominator.items():
            if common.get(f, 0) < m:
                common[f] = m
    total = Polynomial.zero()
    for t in terms:
        missing = []
        for f, m in common.items():
            gap = m - t.denominator.get(f, 0)
            if gap:
                missing.append(f.to_polynomial() ** gap)
        total = total + prod(missing, start=t.numerator)
    return FactoredRational(total, common).reduce()
