"""Linear forms c0 + sum c_v * v, kept separate from general polynomials.

Every denominator in the weight-function formulas is a product of linear
forms, so cancellation never needs multivariate GCD: it is a loop of exact
divisions by linear forms.  Forms are canonicalized to be monic in their
leading variable (the scale factor is returned to the caller), which makes
multiset matching of denominators purely syntactic.
"""

from fractions import Fraction

from .variables import var_key, var_latex, var_name
from .polynomial import Polynomial, monomial, ONE_MONOMIAL


class LinearForm:
    __slots__ = ("const", "coeffs")

    def __init__(self, const=0, coeffs=()):
        """coeffs: iterable of (var, coefficient); zero coefficients dropped."""
        self.const = Fraction(const)
        cleaned = [(v, Fraction(c)) for v, c in
                   (coeffs.items() if isinstance(coeffs, dict) else coeffs)
                   if c != 0]
        cleaned.sort(key=lambda p: var_key(p[0]))
        self.coeffs = tuple(cleaned)

    @classmethod
    def difference(cls, v, u, const=0):
        """The form const + v - u (the shape of every factor we meet)."""
        if v == u:
            return cls(const)
        return cls(const, [(v, 1), (u, -1)])

    def is_zero(self):
        return self.const == 0 and not self.coeffs

    def is_constant(self):
        return not self.coeffs

    def leading_coefficient(self):
        """Coefficient of the first variable in the order; const if constant."""
        return self.coeffs[0][1] if self.coeffs else self.const

    def monic(self):
        """Return (scale, form) with form = self/scale monic in its leading var."""
        c = self.leading_coefficient()
        if c == 1 or c == 0:
            return Fraction(1), self
        inv = Fraction(1) / c
        return c, LinearForm(self.const * inv, [(v, k * inv) for v, k in self.coeffs])

    def drop_leading(self) -> Polynomial:
        """self minus its leading term, as a Polynomial (used by division)."""
        terms = {}
        if self.const:
            terms[ONE_MONOMIAL] = self.const
        for v, c in self.coeffs[1:]:
            terms[((v, 1),)] = c
        return Polynomial(terms)

    def to_polynomial(self) -> Polynomial:
        terms = {}
        if self.const:
            terms[ONE_MONOMIAL] = self.const
        for v, c in self.coeffs:
            terms[((v, 1),)] = c
        return Polynomial(terms)

    def substitute(self, mapping):
        """Variable renaming / substitution by linear images; stays linear.

        mapping: dict Var -> Var | scalar | LinearForm.  Unmapped variables
        pass through.
        """
        const = self.const
        acc = {}
        for v, c in self.coeffs:
            img = mapping.get(v, v)
            if isinstance(img, tuple):  # a Var
                acc[img] = acc.get(img, 0) + c
            elif isinstance(img, LinearForm):
                const += c * img.const
                for w, k in img.coeffs:
                    acc[w] = acc.get(w, 0) + c * k
            else:
                const += c * Fraction(img)
        return LinearForm(const, acc)

    def evaluate(self, point):
        total = self.const
        for v, c in self.coeffs:
            total += c * Fraction(point[v])
        return total

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.const == other.const and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.const, self.coeffs))

    def __str__(self):
        from .polynomial import poly_to_text
        return poly_to_text(self.to_polynomial())

    def __repr__(self):
        return f"LinearForm({self})"

    def latex(self) -> str:
        from .polynomial import poly_to_latex
        return poly_to_latex(self.to_polynomial())

    def sort_key(self):
        return (
            tuple((var_key(v), c) for v, c in self.coeffs),
            self.const,
        )
