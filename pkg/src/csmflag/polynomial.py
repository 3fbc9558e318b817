"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of (variable, exponent) pairs, sorted by the variable
order, with no zero exponents; a polynomial is a dict monomial -> coefficient
with no zero coefficients.  Equal polynomials therefore have equal dicts, and
the canonical term order (graded lexicographic, descending) makes printing and
hashing deterministic.

Coefficients are `fractions.Fraction` (plain ints are accepted anywhere and
mean the same thing; Fraction(3) == 3 and the two hash alike).
"""

import json
import re
from fractions import Fraction

from .errors import NotDivisibleError, ParseError
from .variables import var_key, var_latex, var_name, parse_var

ONE_MONOMIAL = ()


def monomial(exps) -> tuple:
    """Canonical monomial from an iterable/dict of (var, exponent)."""
    if isinstance(exps, dict):
        exps = exps.items()
    pairs = [(v, e) for v, e in exps if e != 0]
    pairs.sort(key=lambda p: var_key(p[0]))
    return tuple(pairs)


def monomial_degree(m) -> int:
    return sum(e for _, e in m)


def monomial_sort_key(m):
    # ascending sort by this key = graded-lex descending
    return (-monomial_degree(m), tuple((var_key(v), -e) for v, e in m))


def _mul_monomials(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return monomial(exps.items())


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict monomial -> coefficient, already canonical
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls({} if c == 0 else {ONE_MONOMIAL: c})

    @classmethod
    def variable(cls, v):
        return cls({((v, 1),): Fraction(1)})

    @classmethod
    def from_terms(cls, pairs):
        """Sum an iterable of (coefficient, monomial) pairs."""
        terms = {}
        for c, m in pairs:
            c = terms.get(m, 0) + c
            if c == 0:
                terms.pop(m, None)
            else:
                terms[m] = c
        return cls(terms)

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and ONE_MONOMIAL in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return Fraction(self.terms.get(ONE_MONOMIAL, 0))

    def degree(self):
        """Total degree; the zero polynomial gets -inf (vacuous degree bounds)."""
        if not self.terms:
            return float("-inf")
        return max(monomial_degree(m) for m in self.terms)

    def variables(self):
        seen = set()
        for m in self.terms:
            for v, _ in m:
                seen.add(v)
        return sorted(seen, key=var_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_sort_key(kv[0]))

    # -- ring operations ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            c = terms.get(m, 0) + c
            if c == 0:
                terms.pop(m, None)
            else:
                terms[m] = c
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero()
            return Polynomial({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        terms = {}
        for m2, c2 in small.items():
            for m1, c1 in big.items():
                m = _mul_monomials(m1, m2)
                c = terms.get(m, 0) + c1 * c2
                if c == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = c
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- the operations the rest of the package needs ------------------

    def substitute(self, mapping):
        """Image under the ring homomorphism sending var -> Polynomial.

        `mapping` is dict Var -> Polynomial (or int/Fraction); unmapped
        variables pass through.
        """
        images = {}
        for v, img in mapping.items():
            if isinstance(img, (int, Fraction)):
                img = Polynomial.constant(img)
            images[v] = img
        power_cache = {}
        result = Polynomial.zero()
        for m, c in self.terms.items():
            kept = []
            factor = None
            for v, e in m:
                if v in images:
                    p = power_cache.get((v, e))
                    if p is None:
                        p = images[v] ** e
                        power_cache[(v, e)] = p
                    factor = p if factor is None else factor * p
                else:
                    kept.append((v, e))
            term = Polynomial({monomial(kept): c})
            result = result + (term * factor if factor is not None else term)
        return result

    def homogeneous_part(self, d):
        """Sum of the monomials of total degree exactly d."""
        return Polynomial(
            {m: c for m, c in self.terms.items() if monomial_degree(m) == d}
        )

    def evaluate(self, point):
        """Exact value at a dict Var -> Fraction; every variable must be set."""
        total = Fraction(0)
        for m, c in self.terms.items():
            val = Fraction(c)
            for v, e in m:
                val *= Fraction(point[v]) ** e
            total += val
        return total

    def divide_exact(self, form):
        """Exact quotient by a linear form; raises NotDivisibleError.

        Synthetic division on the leading variable of the form: writing
        f = c*x + g with x the first variable of f in the variable order,
        peel the x-degrees of self from the top down.
        """
        from .linear import LinearForm  # cycle: linear imports polynomial

        if not isinstance(form, LinearForm):
            raise TypeError("divisor must be a LinearForm")
        if form.is_constant():
            c = form.const
            if c == 0:
                raise ZeroDivisionError("division by the zero form")
            return self * (Fraction(1) / Fraction(c))
        x, c = form.coeffs[0]
        g = form.drop_leading()  # f = c*x + g as polynomials
        # group self by x-exponent
        by_deg = {}
        for m, coeff in self.terms.items():
            d = 0
            rest = []
            for v, e in m:
                if v == x:
                    d = e
                else:
                    rest.append((v, e))
            layer = by_deg.setdefault(d, {})
            layer[tuple(rest)] = layer.get(tuple(rest), 0) + coeff
        if not by_deg:
            return Polynomial.zero()
        top = max(by_deg)
        layers = [Polynomial({m: cf for m, cf in by_deg.get(d, {}).items() if cf != 0})
                  for d in range(top + 1)]
        inv_c = Fraction(1) / Fraction(c)
        quotient_layers = []
        carry = Polynomial.zero()
        for d in range(top, 0, -1):
            q_d = (layers[d] + carry) * inv_c
            quotient_layers.append((d - 1, q_d))
            carry = -(q_d * g)
        remainder = layers[0] + carry
        if remainder:
            raise NotDivisibleError(remainder, form)
        terms = {}
        for d, layer in quotient_layers:
            xm = ((x, d),) if d else ONE_MONOMIAL
            for m, coeff in layer.terms.items():
                full = _mul_monomials(m, xm)
                terms[full] = coeff
        return Polynomial(terms)

    # -- printing / parsing -------------------------------------------

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"Polynomial({poly_to_text(self)})"


def prod(factors, start=None):
    """Product of an iterable of polynomials / scalars."""
    result = Polynomial.constant(1) if start is None else start
    for f in factors:
        result = result * f
    return result


# ---------------------------------------------------------------------------
# canonical text form


def _coeff_str(c):
    c = Fraction(c)
    return str(c)


def poly_to_text(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not m:
            body = _coeff_str(mag)
        else:
            vars_part = "*".join(
                var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m
            )
            body = vars_part if mag == 1 else f"{_coeff_str(mag)}*{vars_part}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<body>[0-9][0-9/]*(?:\*[A-Za-z][\w^]*(?:\*[A-Za-z][\w^]*)*)?
                |[A-Za-z][\w^]*(?:\*[A-Za-z][\w^]*)*)""",
    re.VERBOSE,
)


def poly_from_text(s: str) -> Polynomial:
    s = s.strip()
    if not s:
        raise ParseError("empty polynomial string")
    pos = 0
    pairs = []
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse polynomial near {s[pos:pos+20]!r}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing +/- before {m.group('body')!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(1)
        exps = {}
        for atom in m.group("body").split("*"):
            if atom[0].isdigit():
                try:
                    coeff *= Fraction(atom)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad coefficient {atom!r}") from exc
            else:
                if "^" in atom:
                    name, _, expo = atom.partition("^")
                    e = int(expo)
                else:
                    name, e = atom, 1
                v = parse_var(name)
                exps[v] = exps.get(v, 0) + e
        pairs.append((sign * coeff, monomial(exps)))
        pos = m.end()
        first = False
    return Polynomial.from_terms(pairs)


# ---------------------------------------------------------------------------
# JSON form: {"terms": [{"coeff": "p/q", "exps": {"z1": 2, ...}}, ...]}


def poly_to_json_obj(p: Polynomial):
    terms = []
    for m, c in p.sorted_terms():
        terms.append({
            "coeff": _coeff_str(c),
            "exps": {var_name(v): e for v, e in m},
        })
    return {"terms": terms}


def poly_to_json(p: Polynomial) -> str:
    return json.dumps(poly_to_json_obj(p))


def poly_from_json_obj(obj) -> Polynomial:
    try:
        raw = obj["terms"]
    except (TypeError, KeyError) as exc:
        raise ParseError("JSON polynomial must have a 'terms' list") from exc
    pairs = []
    for t in raw:
        try:
            c = Fraction(t["coeff"])
            m = monomial({parse_var(name): int(e) for name, e in t["exps"].items()})
        except (TypeError, KeyError, ValueError) as exc:
            raise ParseError(f"bad JSON term {t!r}") from exc
        pairs.append((c, m))
    return Polynomial.from_terms(pairs)


def poly_from_json(s: str) -> Polynomial:
    return poly_from_json_obj(json.loads(s))


def poly_to_latex(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if mag.denominator == 1:
            coeff_tex = str(mag.numerator)
        else:
            coeff_tex = rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        vars_tex = " ".join(
            var_latex(v) if e == 1 else f"{var_latex(v)}^{{{e}}}" for v, e in m
        )
        if not m:
            body = coeff_tex
        elif mag == 1:
            body = vars_tex
        else:
            body = f"{coeff_tex} {vars_tex}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out
