"""Shapes, index tuples, Schubert cell data.

A shape is a composition lam = (lam_1, ..., lam_N) of n; it fixes the flag
manifold.  An index tuple is an ordered partition of {1..n} into blocks of
sizes lam_k; tuples index the torus fixed points and the Schubert cells.
The canonical enumeration order is lexicographic on the word w in {1..N}^n
with w_i = block of i.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from math import factorial

from .errors import DistinctnessViolation, ParseError
from .polynomial import Polynomial, prod
from .linear import LinearForm
from .variables import zvar


@dataclass(frozen=True)
class Shape:
    lam: tuple

    def __post_init__(self):
        if not self.lam or any(x < 0 for x in self.lam):
            raise ValueError(f"bad shape {self.lam}")
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))

    @property
    def n(self):
        return sum(self.lam)

    @property
    def N(self):
        return len(self.lam)

    def prefix_size(self, k):
        """lam^(k) = lam_1 + ... + lam_k."""
        return sum(self.lam[:k])

    @property
    def dim(self):
        """Dimension of the flag manifold: sum over k<l of lam_k*lam_l."""
        lam = self.lam
        return sum(lam[k] * lam[l] for k in range(self.N) for l in range(k + 1, self.N))

    @property
    def tuple_count(self):
        c = factorial(self.n)
        for x in self.lam:
            c //= factorial(x)
        return c

    def term_count(self):
        """Symmetrization terms per weight function: prod over k<N of lam^(k)!."""
        c = 1
        for k in range(1, self.N):
            c *= factorial(self.prefix_size(k))
        return c

    def __str__(self):
        return ",".join(str(x) for x in self.lam)

    @classmethod
    def parse(cls, s: str) -> "Shape":
        try:
            parts = tuple(int(x) for x in s.strip().split(","))
        except ValueError as exc:
            raise ParseError(f"bad shape {s!r}") from exc
        return cls(parts)


@dataclass(frozen=True)
class IndexTuple:
    shape: Shape
    blocks: tuple  # tuple of tuples, each sorted ascending

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        sh = self.shape
        if len(blocks) != sh.N:
            raise DistinctnessViolation(f"{len(blocks)} blocks for shape {sh}")
        seen = set()
        for k, b in enumerate(blocks):
            if len(b) != sh.lam[k]:
                raise DistinctnessViolation(
                    f"block {k + 1} has size {len(b)}, expected {sh.lam[k]}")
            for i in b:
                if not 1 <= i <= sh.n or i in seen:
                    raise DistinctnessViolation(f"bad or repeated element {i}")
                seen.add(i)

    @cached_property
    def prefixes(self):
        """prefixes[k] = sorted union of the first k blocks, for k = 0..N."""
        out = [()]
        acc = []
        for b in self.blocks:
            acc = sorted(acc + list(b))
            out.append(tuple(acc))
        return tuple(out)

    def prefix(self, k):
        return self.prefixes[k]

    @cached_property
    def word(self):
        """w_i = index of the block containing i (1-based), i = 1..n."""
        w = [0] * self.shape.n
        for k, b in enumerate(self.blocks, start=1):
            for i in b:
                w[i - 1] = k
        return tuple(w)

    def block_of(self, i):
        return self.word[i - 1]

    def __str__(self):
        return ";".join("{" + ",".join(str(i) for i in b) + "}" for b in self.blocks)

    @classmethod
    def parse(cls, s: str, shape: Shape) -> "IndexTuple":
        parts = s.strip().split(";")
        blocks = []
        for part in parts:
            part = part.strip()
            if not re.fullmatch(r"\{[0-9, ]*\}", part):
                raise ParseError(f"bad index tuple block {part!r}")
            inner = part[1:-1].strip()
            blocks.append(tuple(int(x) for x in inner.split(",")) if inner else ())
        return cls(shape, tuple(blocks))


def enumerate_index_tuples(shape: Shape):
    """All index tuples, in lexicographic order of the block-assignment word."""
    n, N = shape.n, shape.N
    remaining = list(shape.lam)
    word = []
    out = []

    def extend():
        if len(word) == n:
            blocks = [[] for _ in range(N)]
            for i, k in enumerate(word, start=1):
                blocks[k - 1].append(i)
            out.append(IndexTuple(shape, tuple(tuple(b) for b in blocks)))
            return
        for k in range(N):
            if remaining[k]:
                remaining[k] -= 1
                word.append(k + 1)
                extend()
                word.pop()
                remaining[k] += 1

    extend()
    return out


def cell_dimension(I: IndexTuple) -> int:
    """Number of pairs i > j with i in an earlier block than j."""
    w = I.word
    n = I.shape.n
    return sum(1 for j in range(1, n + 1) for i in range(j + 1, n + 1)
               if w[i - 1] < w[j - 1])


def bruhat_leq(J: IndexTuple, K: IndexTuple) -> bool:
    """Prefix-count dominance: J <= K iff every prefix set of J dominates.

    For all p, q: #{i in J^(p): i <= q} >= #{i in K^(p): i <= q}.  The
    minimal tuple (blocks 1,2,... in order) is below everything.
    """
    if J.shape != K.shape:
        raise ValueError("tuples from different shapes")
    n, N = J.shape.n, J.shape.N
    for p in range(1, N):
        jp, kp = J.prefix(p), K.prefix(p)
        li = lj = 0
        for q in range(1, n + 1):
            while li < len(jp) and jp[li] <= q:
                li += 1
            while lj < len(kp) and kp[lj] <= q:
                lj += 1
            if li < lj:
                return False
    return True


def tangent_weights(I: IndexTuple):
    """Pairs (a, b), each meaning the weight z_b - z_a, with a > b across
    increasing blocks."""
    return _weight_pairs(I, lambda a, b: a > b)


def normal_weights(I: IndexTuple):
    """Pairs (a, b) with a < b across increasing blocks."""
    return _weight_pairs(I, lambda a, b: a < b)


def _weight_pairs(I, keep):
    N = I.shape.N
    out = []
    for k in range(N):
        for l in range(k + 1, N):
            for a in I.blocks[k]:
                for b in I.blocks[l]:
                    if keep(a, b):
                        out.append((a, b))
    return out


def weight_form(pair) -> LinearForm:
    a, b = pair
    return LinearForm.difference(zvar(b), zvar(a))


def local_chern(I: IndexTuple) -> Polynomial:
    """Total Chern class of the cell's tangent space at its fixed point:
    product of (1 + z_b - z_a) over the tangent pairs."""
    return prod(LinearForm.difference(zvar(b), zvar(a), const=1).to_polynomial()
                for a, b in tangent_weights(I))


def local_euler(I: IndexTuple) -> Polynomial:
    """Euler class of the normal space: product of (z_b - z_a) over the
    normal pairs."""
    return prod(weight_form(p).to_polynomial() for p in normal_weights(I))


def full_euler(I: IndexTuple) -> Polynomial:
    """Euler class of the whole tangent space of the flag manifold at the
    fixed point: product of (z_b - z_a) over tangent and normal pairs."""
    return prod(weight_form(p).to_polynomial()
                for p in tangent_weights(I) + normal_weights(I))


def ambient_chern(I: IndexTuple) -> Polynomial:
    """Total Chern class of the flag manifold's tangent space at the fixed
    point: product of (1 + z_b - z_a) over tangent and normal pairs."""
    return prod(LinearForm.difference(zvar(b), zvar(a), const=1).to_polynomial()
                for a, b in tangent_weights(I) + normal_weights(I))
