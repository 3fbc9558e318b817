"""Vectorized kernel for the symmetrized sums behind weight functions.

Every summand of a weight function is the image of one base product of
linear forms under a tuple of group permutations, and the summand
denominators are Vandermonde products that differ from each other only by
the sign of the permutation.  So

    W * prod_(k, a<b) (t^(k)_b - t^(k)_a)  =  sum_sigma sign(sigma) sigma(N)

with N the base numerator product.  This module expands N once with
exponent vectors packed into int64 keys (mixed-radix), applies each sigma
as a column permutation of the decoded exponent matrix, aggregates, and
divides off the Vandermonde factors by synthetic division.  All
coefficients stay machine integers; magnitudes here are multinomial-sized
and nowhere near 2^63.

The packed encoding is an internal representation only; results come back
as Polynomials (materialized lazily, since the expensive consumers mostly
just compare them).
"""

import numpy as np

from .errors import NotDivisibleError
from .linear import LinearForm
from .polynomial import Polynomial, monomial
from .variables import var_key

_CAPACITY_LIMIT = 1 << 62


class EngineUnavailable(Exception):
    """Raised when the packed encoding cannot represent the computation;
    callers fall back to the generic rational-function route."""


class PackedContext:
    def __init__(self, variables, radices):
        self.vars = list(variables)
        self.radices = [int(r) for r in radices]
        strides = []
        acc = 1
        for r in self.radices:
            strides.append(acc)
            acc *= r
        if acc >= _CAPACITY_LIMIT:
            raise EngineUnavailable(f"packed capacity {acc} exceeds int64")
        self.strides = strides
        self.index = {v: i for i, v in enumerate(self.vars)}
        self._strides_arr = np.array(strides, dtype=np.int64)

    def compatible(self, other):
        return self.vars == other.vars and self.radices == other.radices

    def decode(self, keys):
        """Exponent matrix, one column per variable."""
        E = np.empty((len(keys), len(self.vars)), dtype=np.int64)
        for i, (s, r) in enumerate(zip(self.strides, self.radices)):
            E[:, i] = (keys // s) % r
        return E

    def encode(self, E):
        return E @ self._strides_arr


def context_for_forms(forms, group_vars=(), pad=4):
    """Context whose radices fit any subproduct of `forms`.

    Variables in one entry of `group_vars` get a common radix so that
    permuting them is a plain column permutation of exponents.
    """
    bounds = {}
    for f in forms:
        if f.const.denominator != 1 or any(c.denominator != 1 for _, c in f.coeffs):
            raise EngineUnavailable("non-integer coefficients")
        for v, _ in f.coeffs:
            bounds[v] = bounds.get(v, 0) + 1
    for group in group_vars:
        m = max((bounds.get(v, 0) for v in group), default=0)
        for v in group:
            bounds[v] = m
    variables = sorted(bounds, key=var_key)
    radices = [bounds[v] + 1 + pad for v in variables]
    return PackedContext(variables, radices)


def _aggregate(keys, coeffs):
    """Sorted unique keys with summed coefficients, zeros dropped."""
    if len(keys) == 0:
        return keys, coeffs
    # inputs are typically concatenations of sorted runs; timsort merges them
    order = np.argsort(keys, kind="stable")
    k = keys[order]
    c = coeffs[order]
    starts = np.flatnonzero(np.concatenate(([True], k[1:] != k[:-1])))
    sums = np.add.reduceat(c, starts)
    uk = k[starts]
    keep = sums != 0
    return uk[keep], sums[keep]


def expand(ctx: PackedContext, forms):
    """Expanded product of linear forms as (keys, coeffs)."""
    keys = np.zeros(1, dtype=np.int64)
    coeffs = np.ones(1, dtype=np.int64)
    for f in forms:
        shifts = []
        if f.const:
            shifts.append((0, int(f.const)))
        for v, c in f.coeffs:
            shifts.append((ctx.strides[ctx.index[v]], int(c)))
        parts_k = [keys + s for s, _ in shifts]
        parts_c = [coeffs * c for _, c in shifts]
        keys, coeffs = _aggregate(np.concatenate(parts_k), np.concatenate(parts_c))
        if len(keys) == 0:
            break
    return keys, coeffs


def swap_keys(ctx: PackedContext, keys, x, y):
    """Keys with the exponents of x and y exchanged."""
    sx, rx = ctx.strides[ctx.index[x]], ctx.radices[ctx.index[x]]
    sy, ry = ctx.strides[ctx.index[y]], ctx.radices[ctx.index[y]]
    ex = (keys // sx) % rx
    ey = (keys // sy) % ry
    return keys + (ex - ey) * (sy - sx)


def divided_difference(ctx: PackedContext, keys, coeffs, x, y):
    """(f - swap(f)) / (x - y), with swap exchanging x and y.

    The numerator is antisymmetric in the pair, so the quotient exists and
    can be written down per term:

        (x^a y^b - x^b y^a) / (x - y) = sign(a-b) * sum_d x^d y^(a+b-1-d)

    with d running between min(a, b) and max(a, b) - 1.  Building those
    terms directly avoids the swap/merge pass and the layered synthetic
    division.
    """
    sx, rx = ctx.strides[ctx.index[x]], ctx.radices[ctx.index[x]]
    sy, ry = ctx.strides[ctx.index[y]], ctx.radices[ctx.index[y]]
    ex = (keys // sx) % rx
    ey = (keys // sy) % ry
    diff = ex - ey
    alive = diff != 0
    if not alive.any():
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=coeffs.dtype)
    k = keys[alive]
    signed_c = np.where(diff[alive] > 0, 1, -1) * coeffs[alive]
    ex, ey = ex[alive], ey[alive]
    lengths = np.abs(diff[alive])
    base = k - ex * sx - ey * sy
    seg = np.repeat(np.arange(len(k)), lengths)
    offsets = np.concatenate(([0], np.cumsum(lengths)[:-1]))
    d = np.arange(int(lengths.sum())) - offsets[seg] + np.minimum(ex, ey)[seg]
    top = ex + ey - 1  # d + (partner exponent) for every generated term
    new_keys = base[seg] + d * sx + (top[seg] - d) * sy
    return _aggregate(new_keys, signed_c[seg])


def antisymmetrize_group(ctx: PackedContext, keys, coeffs, group):
    """Apply sum_sigma sign(sigma) sigma(f) / prod_(a<b) (v_b - v_a) over the
    group's variables, as iterated divided differences along a reduced word
    of the longest permutation.

    Each step divides by (v_(i+1) - v_i); the composition over the reduced
    word (1), (2,1), (3,2,1), ... realizes the full signed symmetrization
    with the Vandermonde denominator.
    """
    m = len(group)
    for j in range(1, m):
        for i in range(j, 0, -1):
            keys, coeffs = divided_difference(ctx, keys, coeffs,
                                              group[i], group[i - 1])
    return keys, coeffs


def divide_difference(ctx: PackedContext, keys, coeffs, x, y):
    """Exact quotient by the form (x - y); NotDivisibleError with the
    decoded remainder otherwise.

    Writing P = sum_d P_d x^d, the quotient layers satisfy q_(D-1) = P_D and
    q_(d-1) = P_d + y*q_d, with remainder P_0 + y*q_0.
    """
    sx = ctx.strides[ctx.index[x]]
    rx = ctx.radices[ctx.index[x]]
    sy = ctx.strides[ctx.index[y]]
    dx = (keys // sx) % rx
    D = int(dx.max()) if len(keys) else 0
    layers = []
    for d in range(D + 1):
        mask = dx == d
        layers.append((keys[mask] - d * sx, coeffs[mask]))
    q_layers = [None] * max(D, 1)
    qk = np.empty(0, dtype=np.int64)
    qc = np.empty(0, dtype=np.int64)
    for d in range(D, 0, -1):
        pk, pc = layers[d]
        qk, qc = _aggregate(np.concatenate((pk, qk + sy)),
                            np.concatenate((pc, qc)))
        q_layers[d - 1] = (qk, qc)
    rk, rc = _aggregate(np.concatenate((layers[0][0], qk + sy)),
                        np.concatenate((layers[0][1], qc)))
    if len(rk):
        raise NotDivisibleError(to_polynomial(ctx, rk, rc))
    parts_k, parts_c = [], []
    for d, layer in enumerate(q_layers):
        if layer is None:
            continue
        lk, lc = layer
        parts_k.append(lk + d * sx)
        parts_c.append(lc)
    if not parts_k:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return _aggregate(np.concatenate(parts_k), np.concatenate(parts_c))


def to_polynomial(ctx: PackedContext, keys, coeffs) -> Polynomial:
    E = ctx.decode(keys)
    variables = ctx.vars
    terms = {}
    for row, c in zip(E.tolist(), coeffs.tolist()):
        m = tuple((v, e) for v, e in zip(variables, row) if e)
        terms[m] = c
    return Polynomial(terms)


class PackedPolynomial(Polynomial):
    """A Polynomial held in packed form, materialized on first access.

    The packed form is already canonical (sorted unique keys, no zero
    coefficients), so equality between two packed polynomials over the same
    context is an array comparison.
    """

    __slots__ = ("ctx", "keys", "coeffs")

    def __init__(self, ctx, keys, coeffs):
        Polynomial.terms.__set__(self, None)  # the slot behind the property
        self.ctx = ctx
        self.keys = keys
        self.coeffs = coeffs

    @property
    def terms(self):
        cached = Polynomial.terms.__get__(self)
        if cached is None:
            cached = to_polynomial(self.ctx, self.keys, self.coeffs).terms
            Polynomial.terms.__set__(self, cached)
        return cached

    def __eq__(self, other):
        if isinstance(other, PackedPolynomial) and (
                other.ctx is self.ctx or other.ctx.compatible(self.ctx)):
            return (np.array_equal(self.keys, other.keys)
                    and np.array_equal(self.coeffs, other.coeffs))
        return Polynomial.__eq__(self, other)

    def __hash__(self):
        return Polynomial.__hash__(self)
