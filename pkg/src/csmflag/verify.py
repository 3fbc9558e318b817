"""Machine checks of the interpolation axioms and derived identities.

Each check returns an AxiomReport; failures carry a witness (the remainder,
the offending degree, or the difference polynomial) so a red run is
triageable.  verify_all computes every restriction of a shape once and runs
the full battery in a fixed order, so two runs produce identical report
lists.
"""

import json
import multiprocessing
from dataclasses import dataclass
from typing import Optional

from .errors import NotDivisibleError
from .flags import (IndexTuple, Shape, ambient_chern, bruhat_leq,
                    enumerate_index_tuples, full_euler, local_chern, local_euler,
                    tangent_weights)
from .linear import LinearForm
from .polynomial import Polynomial, poly_to_text
from .variables import zvar
from .weights import DEFAULT_TERM_BUDGET, check_budget, restriction


@dataclass(frozen=True)
class AxiomReport:
    shape: Shape
    check: str
    I: IndexTuple
    J: Optional[IndexTuple]
    verdict: str  # "pass" | "fail"
    witness: Optional[str] = None

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json_obj(self):
        obj = {"shape": str(self.shape), "check": self.check, "I": str(self.I)}
        if self.J is not None:
            obj["J"] = str(self.J)
        obj["verdict"] = self.verdict
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj

    def to_json_line(self):
        return json.dumps(self.to_json_obj())


def _report(shape, check, I, J, ok, witness=None):
    return AxiomReport(shape, check, I, J, "pass" if ok else "fail",
                       None if ok else witness)


def _restr(I, J, value, budget):
    return value if value is not None else restriction(I, J, budget)


def check_divisibility(I, J, value=None, budget=DEFAULT_TERM_BUDGET):
    """Axiom: the restriction at J is divisible by the tangent Chern class
    of the cell of J.  At J = I the quotient must moreover be the normal
    Euler class."""
    r = _restr(I, J, value, budget)
    q = r
    for a, b in tangent_weights(J):
        try:
            q = q.divide_exact(LinearForm.difference(zvar(b), zvar(a), const=1))
        except NotDivisibleError as exc:
            return _report(I.shape, "divisibility", I, J, False,
                           f"remainder {poly_to_text(exc.remainder)} "
                           f"dividing by {exc.divisor}")
    if I == J:
        diff = q - local_euler(I)
        if diff:
            return _report(I.shape, "divisibility", I, J, False,
                           f"diagonal quotient off by {poly_to_text(diff)}")
    return _report(I.shape, "divisibility", I, J, True)


def check_diagonal(I, value=None, budget=DEFAULT_TERM_BUDGET):
    """Axiom: the diagonal restriction equals tangent Chern times normal
    Euler class of the cell."""
    diff = _restr(I, I, value, budget) - local_chern(I) * local_euler(I)
    return _report(I.shape, "diagonal", I, I, not diff,
                   f"difference {poly_to_text(diff)}")


def check_degree(I, J, value=None, budget=DEFAULT_TERM_BUDGET):
    """Axiom: off-diagonal restrictions have degree below the manifold
    dimension.  The zero polynomial has degree -inf and passes vacuously."""
    if I == J:
        raise ValueError("degree bound applies only off the diagonal")
    d = _restr(I, J, value, budget).degree()
    return _report(I.shape, "degree", I, J, d < I.shape.dim,
                   f"degree {d} >= dim {I.shape.dim}")


def check_vanishing(I, J, value=None, budget=DEFAULT_TERM_BUDGET):
    """Derived: the restriction vanishes whenever J is not dominated by I
    (the cell of J is outside the closure of the cell of I)."""
    if bruhat_leq(J, I):
        return _report(I.shape, "vanishing", I, J, True)
    r = _restr(I, J, value, budget)
    return _report(I.shape, "vanishing", I, J, r.is_zero(),
                   f"nonzero restriction {poly_to_text(r)}")


def check_sum_rule(J, values=None, budget=DEFAULT_TERM_BUDGET):
    """Derived: classes of all cells sum to the class of the whole manifold,
    so the restrictions at J must sum to the ambient tangent Chern class."""
    tuples = enumerate_index_tuples(J.shape)
    total = Polynomial.zero()
    for I in tuples:
        v = values.get((I, J)) if values is not None else None
        total = total + _restr(I, J, v, budget)
    diff = total - ambient_chern(J)
    return _report(J.shape, "sum_rule", J, None, not diff,
                   f"difference {poly_to_text(diff)}")


def check_euler_top(I, value=None, budget=DEFAULT_TERM_BUDGET):
    """Derived: the top-degree part of the diagonal restriction is the Euler
    class of the whole tangent space at the fixed point."""
    top = _restr(I, I, value, budget).homogeneous_part(I.shape.dim)
    diff = top - full_euler(I)
    return _report(I.shape, "euler_top", I, I, not diff,
                   f"difference {poly_to_text(diff)}")


# ---------------------------------------------------------------------------
# batch verification

_worker_state = {}


def _init_worker(lam, budget):
    _worker_state["shape"] = Shape(lam)
    _worker_state["budget"] = budget


def _compute_pair(pair):
    shape = _worker_state["shape"]
    I = IndexTuple(shape, pair[0])
    J = IndexTuple(shape, pair[1])
    return restriction(I, J, _worker_state["budget"])


def compute_restrictions(shape, jobs=1, cache=None, budget=DEFAULT_TERM_BUDGET,
                         progress=None):
    """All restriction polynomials of a shape, keyed by (I, J).

    Pairs are computed through the cache when one is given; cache misses can
    run on a worker pool.  The result dict is ordered canonically either
    way.
    """
    check_budget(shape, budget)
    tuples = enumerate_index_tuples(shape)
    pairs = [(I, J) for I in tuples for J in tuples]
    values = {}
    missing = []
    for I, J in pairs:
        cached = cache.get(I, J) if cache is not None else None
        if cached is not None:
            values[(I, J)] = cached
        else:
            missing.append((I, J))
    if jobs > 1 and len(missing) > 1:
        with multiprocessing.Pool(
                jobs, initializer=_init_worker,
                initargs=(shape.lam, budget)) as pool:
            computed = pool.map(
                _compute_pair,
                [(I.blocks, J.blocks) for I, J in missing],
                chunksize=8)
    else:
        computed = [restriction(I, J, budget) for I, J in missing]
    for (I, J), poly in zip(missing, computed):
        values[(I, J)] = poly
        if cache is not None:
            cache.put(I, J, poly)
        if progress is not None:
            progress(I, J)
    return {pair: values[pair] for pair in pairs}


def verify_all(shape, budget=DEFAULT_TERM_BUDGET, jobs=1, cache=None,
               values=None):
    """Run every check over the whole shape; deterministic report order.

    Per index tuple: diagonal, euler_top; per ordered pair: divisibility,
    degree (off-diagonal), vanishing; per fixed point: sum_rule.
    """
    if values is None:
        values = compute_restrictions(shape, jobs=jobs, cache=cache,
                                      budget=budget)
    tuples = enumerate_index_tuples(shape)
    reports = []
    for I in tuples:
        reports.append(check_diagonal(I, values[(I, I)]))
        reports.append(check_euler_top(I, values[(I, I)]))
    for I in tuples:
        for J in tuples:
            reports.append(check_divisibility(I, J, values[(I, J)]))
            if I != J:
                reports.append(check_degree(I, J, values[(I, J)]))
            reports.append(check_vanishing(I, J, values[(I, J)]))
    for J in tuples:
        reports.append(check_sum_rule(J, values))
    return reports
