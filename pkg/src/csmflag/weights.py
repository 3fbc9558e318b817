"""Weight functions, their table form, and fixed-point restrictions.

Two independent generators produce the summands of a weight function:

* the symmetrization route: one base product of ell-factors and
  within-group (1+t_b-t_a)/(t_b-t_a) kernels, pushed through every group
  permutation by renaming variables;
* the table route: for each choice of permutations, fill the n x N table
  and read off type-1/2/3 factors from the box geometry.

The two must agree; the test suite holds them against each other.

Restrictions to fixed points are computed term by term: each summand is a
product of linear forms, so substituting t -> z first keeps every
intermediate object a product of linear forms in z.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import engine
from .errors import BudgetExceeded, NotDivisibleError, NotPolynomialError
from .flags import IndexTuple, Shape, enumerate_index_tuples
from .linear import LinearForm
from .polynomial import Polynomial, prod
from .ratfun import FactoredRational, frac_sum
from .variables import tvar, zvar

DEFAULT_TERM_BUDGET = 10 ** 6


def check_budget(shape: Shape, budget=DEFAULT_TERM_BUDGET):
    terms = shape.term_count()
    if terms > budget:
        raise BudgetExceeded(terms, budget)


def ell_factor(I: IndexTuple, k: int, a: int, b: int) -> LinearForm:
    """Factor between slot a of group k and slot b of group k+1.

    1 + t^(k+1)_b - t^(k)_a when the (k+1)-prefix element at slot b sits
    above (is smaller than) the k-prefix element at slot a, else
    t^(k+1)_b - t^(k)_a.  Group N reads t^(N)_b as z_b.
    """
    sh = I.shape
    i_ka = I.prefix(k)[a - 1]
    i_kb = I.prefix(k + 1)[b - 1]
    if i_ka == i_kb:
        raise ValueError(f"coinciding prefix elements at k={k}, a={a}, b={b}")
    upper = tvar(k + 1, b) if k + 1 < sh.N else zvar(b)
    lower = tvar(k, a)
    const = 1 if i_kb < i_ka else 0
    return LinearForm.difference(upper, lower, const=const)


def e_lambda_factors(shape: Shape):
    """Non-trivial factors (1 + t^(k)_b - t^(k)_a), a != b, of e_lambda."""
    out = []
    for k in range(1, shape.N):
        size = shape.prefix_size(k)
        for a in range(1, size + 1):
            for b in range(1, size + 1):
                if a != b:
                    out.append(LinearForm.difference(tvar(k, b), tvar(k, a), const=1))
    return out


def e_lambda(shape: Shape) -> Polynomial:
    return prod(f.to_polynomial() for f in e_lambda_factors(shape))


def group_sizes(shape: Shape):
    """Sizes lam^(1), ..., lam^(N-1) of the permutation groups."""
    return [shape.prefix_size(k) for k in range(1, shape.N)]


def sigma_iter(shape: Shape):
    """All tuples (sigma_1, ..., sigma_{N-1}) in lexicographic order.

    sigma_k is a tuple p with p[a-1] = sigma_k(a), a permutation of
    {1..lam^(k)}.
    """
    ranges = [itertools.permutations(range(1, s + 1)) for s in group_sizes(shape)]
    return itertools.product(*ranges)


# ---------------------------------------------------------------------------
# symmetrization route


def base_factors(I: IndexTuple):
    """(numerator forms, denominator forms) of the unsymmetrized product."""
    sh = I.shape
    numer, denom = [], []
    for k in range(1, sh.N):
        for a in range(1, sh.prefix_size(k) + 1):
            for b in range(1, sh.prefix_size(k + 1) + 1):
                # nested prefixes make one slot per a coincide: no factor there
                if I.prefix(k + 1)[b - 1] != I.prefix(k)[a - 1]:
                    numer.append(ell_factor(I, k, a, b))
        size = sh.prefix_size(k)
        for a in range(1, size + 1):
            for b in range(a + 1, size + 1):
                numer.append(LinearForm.difference(tvar(k, b), tvar(k, a), const=1))
                denom.append(LinearForm.difference(tvar(k, b), tvar(k, a)))
    return numer, denom


def sigma_renaming(sigma):
    """Variable map t^(k)_a -> t^(k)_{sigma_k(a)}."""
    out = {}
    for k, perm in enumerate(sigma, start=1):
        for a, image in enumerate(perm, start=1):
            if a != image:
                out[tvar(k, a)] = tvar(k, image)
    return out


def sym_term_factors(I: IndexTuple, sigma):
    numer, denom = base_factors(I)
    ren = sigma_renaming(sigma)
    if ren:
        numer = [f.substitute(ren) for f in numer]
        denom = [f.substitute(ren) for f in denom]
    return numer, denom


# ---------------------------------------------------------------------------
# table route


@dataclass(frozen=True)
class TableFilling:
    """One filled table: a choice of one permutation per group.

    Column k (k < N) holds t^(k)_{sigma_k(1)}, ..., top to bottom in the
    distinguished rows I^(k); the last column holds z_1..z_n.
    """
    I: IndexTuple
    sigmas: tuple

    @cached_property
    def columns(self):
        """columns[k-1] = list of (row, variable), rows ascending."""
        sh = self.I.shape
        cols = []
        for k in range(1, sh.N):
            perm = self.sigmas[k - 1]
            rows = self.I.prefix(k)
            cols.append([(row, tvar(k, perm[pos])) for pos, row in enumerate(rows)])
        cols.append([(i, zvar(i)) for i in range(1, sh.n + 1)])
        return cols

    def factor_groups(self):
        """Factors sorted by type: (type1, type2, type3) where type3 is a
        list of (numerator form, denominator form) pairs."""
        type1, type2, type3 = [], [], []
        for k in range(len(self.columns) - 1):
            nxt = self.columns[k + 1]
            for row_u, u in self.columns[k]:
                for row_v, v in nxt:
                    if row_v < row_u:
                        type1.append(LinearForm.difference(v, u, const=1))
                    elif row_v > row_u:
                        type2.append(LinearForm.difference(v, u))
                for row_v, v in self.columns[k]:
                    if row_v > row_u:
                        type3.append((LinearForm.difference(v, u, const=1),
                                      LinearForm.difference(v, u)))
        return type1, type2, type3


def fillings(I: IndexTuple):
    return [TableFilling(I, sigma) for sigma in sigma_iter(I.shape)]


def term_for_filling(f: TableFilling) -> FactoredRational:
    type1, type2, type3 = f.factor_groups()
    numer = type1 + type2 + [num for num, _ in type3]
    denom = [den for _, den in type3]
    return FactoredRational.from_factors(numer, denom)


# ---------------------------------------------------------------------------
# weight functions


def weight_terms(I: IndexTuple, method="sym", budget=DEFAULT_TERM_BUDGET):
    """Per-permutation summands of the weight function, in canonical order."""
    check_budget(I.shape, budget)
    if method == "sym":
        return [FactoredRational.from_factors(*sym_term_factors(I, sigma))
                for sigma in sigma_iter(I.shape)]
    if method == "tables":
        return [term_for_filling(f) for f in fillings(I)]
    raise ValueError(f"unknown method {method!r}")


def _base_forms(I: IndexTuple, method):
    """(numerator forms, denominator forms) of the identity summand."""
    if method == "sym":
        return base_factors(I)
    if method == "tables":
        sizes = group_sizes(I.shape)
        identity = tuple(tuple(range(1, s + 1)) for s in sizes)
        type1, type2, type3 = TableFilling(I, identity).factor_groups()
        return type1 + type2 + [num for num, _ in type3], [den for _, den in type3]
    raise ValueError(f"unknown method {method!r}")


def _weight_function_packed(I: IndexTuple, method) -> Polynomial:
    """Symmetrize via the packed engine.

    All summands are renamings of the identity summand, and their
    Vandermonde denominators coincide up to the permutation sign, so the
    whole sum is one expansion, a signed sum of column permutations, and a
    loop of exact divisions.
    """
    numer, denom = _base_forms(I, method)
    sh = I.shape
    groups = [[tvar(k, a) for a in range(1, sh.prefix_size(k) + 1)]
              for k in range(1, sh.N)]
    # the denominator must be exactly one Vandermonde factor per in-group
    # pair; antisymmetrize_group consumes it implicitly
    expected = sorted(
        LinearForm.difference(g[b], g[a]).sort_key()
        for g in groups for a in range(len(g)) for b in range(a + 1, len(g)))
    if sorted(f.sort_key() for f in denom) != expected:
        raise engine.EngineUnavailable("unexpected denominator structure")
    ctx = engine.context_for_forms(numer + denom, group_vars=groups,
                                   pad=2 + len(denom))
    keys, coeffs = engine.expand(ctx, numer)
    for group in groups:
        keys, coeffs = engine.antisymmetrize_group(ctx, keys, coeffs, group)
    return engine.PackedPolynomial(ctx, keys, coeffs)


def weight_function(I: IndexTuple, method="sym", budget=DEFAULT_TERM_BUDGET) -> Polynomial:
    """The weight function of I as a polynomial in t and z.

    The denominators of the summands must cancel in the sum; a
    NotPolynomialError here means the implementation is broken.
    """
    check_budget(I.shape, budget)
    try:
        return _weight_function_packed(I, method)
    except engine.EngineUnavailable:
        return frac_sum(weight_terms(I, method, budget)).to_polynomial()
    except NotDivisibleError as exc:
        raise NotPolynomialError(exc.remainder) from exc


def modified_weight_function(I: IndexTuple, method="sym",
                             budget=DEFAULT_TERM_BUDGET) -> FactoredRational:
    """weight_function / e_lambda, with the denominator kept factored."""
    w = weight_function(I, method, budget)
    return FactoredRational.from_factors([], e_lambda_factors(I.shape)) * w


# ---------------------------------------------------------------------------
# restrictions


def restriction_substitution(J: IndexTuple):
    """t^(k)_a -> z_{j^(k)_a} with the k-prefix of J sorted ascending."""
    sub = {}
    for k in range(1, J.shape.N):
        for a, j in enumerate(J.prefix(k), start=1):
            sub[tvar(k, a)] = zvar(j)
    return sub


def restriction(I: IndexTuple, J: IndexTuple, budget=DEFAULT_TERM_BUDGET) -> Polynomial:
    """The restriction of the class of I at the fixed point of J.

    Each summand is evaluated under the substitution while still factored,
    summed, and the substituted e_lambda is divided off; the result is a
    polynomial in z (NotPolynomialError otherwise, which would falsify the
    theory as implemented).
    """
    if I.shape != J.shape:
        raise ValueError("tuples from different shapes")
    check_budget(I.shape, budget)
    sub = restriction_substitution(J)
    terms = []
    for sigma in sigma_iter(I.shape):
        numer, denom = sym_term_factors(I, sigma)
        numer = [f.substitute(sub) for f in numer]
        if any(f.is_zero() for f in numer):
            continue
        denom = [f.substitute(sub) for f in denom]
        terms.append(FactoredRational.from_factors(numer, denom))
    total = frac_sum(terms)
    e_sub = [f.substitute(sub) for f in e_lambda_factors(I.shape)]
    return (total * FactoredRational.from_factors([], e_sub)).to_polynomial()


def restriction_via_expansion(I: IndexTuple, J: IndexTuple,
                              budget=DEFAULT_TERM_BUDGET) -> Polynomial:
    """Slow cross-check: expand the weight function first, substitute, then
    divide off the substituted e_lambda factor by factor."""
    w = weight_function(I, budget=budget)
    sub = restriction_substitution(J)
    result = w.substitute({v: Polynomial.variable(img)
                           for v, img in sub.items()})
    for f in e_lambda_factors(I.shape):
        result = result.divide_exact(f.substitute(sub))
    return result


@dataclass(frozen=True)
class RestrictionTuple:
    """A cohomology class represented by all of its fixed-point restrictions."""
    shape: Shape
    values: tuple  # tuple of (IndexTuple, Polynomial), canonical order

    def __getitem__(self, J: IndexTuple) -> Polynomial:
        for K, p in self.values:
            if K == J:
                return p
        raise KeyError(str(J))

    def items(self):
        return self.values


def class_of(I: IndexTuple, budget=DEFAULT_TERM_BUDGET) -> RestrictionTuple:
    """All restrictions of the class of I, keyed by fixed point."""
    values = tuple((J, restriction(I, J, budget))
                   for J in enumerate_index_tuples(I.shape))
    return RestrictionTuple(I.shape, values)
