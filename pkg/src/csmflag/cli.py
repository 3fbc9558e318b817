"""Command-line surface: enumeration, weight functions, restrictions,
batch verification."""

import json
import sys

import click

from .cache import RestrictionCache
from .errors import BudgetExceeded, CsmflagError, NotPolynomialError, ParseError
from .flags import (IndexTuple, Shape, bruhat_leq, cell_dimension,
                    enumerate_index_tuples)
from .plots import save_verification_figures
from .polynomial import poly_to_json, poly_to_latex, poly_to_text
from .render import render_filling
from .verify import compute_restrictions, verify_all
from .weights import (DEFAULT_TERM_BUDGET, class_of, e_lambda, fillings,
                      restriction, weight_function)

FORMATS = click.Choice(["text", "json", "latex"])


def _shape(lam):
    try:
        return Shape.parse(lam)
    except (ParseError, ValueError) as exc:
        raise click.BadParameter(str(exc), param_hint="--lambda")


def _tuple(s, shape, hint):
    try:
        return IndexTuple.parse(s, shape)
    except CsmflagError as exc:
        raise click.BadParameter(str(exc), param_hint=hint)


def _render(poly, fmt):
    if fmt == "json":
        return poly_to_json(poly)
    if fmt == "latex":
        return poly_to_latex(poly)
    return poly_to_text(poly)


def _fail(exc):
    raise click.ClickException(str(exc))


@click.group()
def main():
    """Equivariant CSM classes of Schubert cells via weight functions."""


@main.command("enumerate")
@click.option("--lambda", "lam", required=True, help="shape, e.g. 1,2,1")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def cmd_enumerate(lam, fmt):
    """List all index tuples with cell dimensions and covering relations."""
    shape = _shape(lam)
    tuples = enumerate_index_tuples(shape)

    def strictly_below(J, K):
        return J != K and bruhat_leq(J, K)

    records = []
    for I in tuples:
        above = [K for K in tuples if strictly_below(I, K)]
        below = [K for K in tuples if strictly_below(K, I)]
        # covers: immediate neighbours in the dominance order
        covered_by = [K for K in above
                      if not any(strictly_below(M, K) for M in above)]
        covers = [K for K in below
                  if not any(strictly_below(K, M) for M in below)]
        records.append((I, cell_dimension(I), covers, covered_by))

    if fmt == "json":
        click.echo(json.dumps([{
            "index": str(I), "dimension": d,
            "covers": [str(K) for K in cov],
            "covered_by": [str(K) for K in cob],
        } for I, d, cov, cob in records]))
        return
    for I, d, cov, cob in records:
        if fmt == "latex":
            click.echo(rf"{I} & {d} \\")
        else:
            click.echo(f"{I}  dim {d}"
                       f"  covers [{', '.join(map(str, cov))}]"
                       f"  covered_by [{', '.join(map(str, cob))}]")


@main.command("weight")
@click.option("--lambda", "lam", required=True)
@click.option("--index", "index", required=True, help='tuple, e.g. "{2};{1};{3}"')
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.option("--show-tables", is_flag=True,
              help="render each filling as a table with its term")
@click.option("--term-budget", type=int, default=DEFAULT_TERM_BUDGET,
              show_default=True)
def cmd_weight(lam, index, fmt, show_tables, term_budget):
    """Print the weight function W_I and e_lambda."""
    shape = _shape(lam)
    I = _tuple(index, shape, "--index")
    try:
        w = weight_function(I, budget=term_budget)
    except BudgetExceeded as exc:
        _fail(exc)
    e = e_lambda(shape)
    if show_tables:
        for f in fillings(I):
            click.echo(render_filling(f, "latex" if fmt == "latex" else "text"))
            click.echo("")
    if fmt == "json":
        click.echo(json.dumps({"weight": json.loads(poly_to_json(w)),
                               "e_lambda": json.loads(poly_to_json(e))}))
    else:
        click.echo(f"W = {_render(w, fmt)}")
        click.echo(f"e_lambda = {_render(e, fmt)}")


@main.command("restrict")
@click.option("--lambda", "lam", required=True)
@click.option("--index", "index", required=True)
@click.option("--at", "at", default=None, help="fixed point J")
@click.option("--all", "all_", is_flag=True, help="restrict at every fixed point")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.option("--term-budget", type=int, default=DEFAULT_TERM_BUDGET,
              show_default=True)
def cmd_restrict(lam, index, at, all_, fmt, term_budget):
    """Restriction of the class of I at one or every fixed point."""
    if (at is None) == (not all_):
        raise click.UsageError("exactly one of --at / --all is required")
    shape = _shape(lam)
    I = _tuple(index, shape, "--index")
    try:
        if all_:
            tup = class_of(I, budget=term_budget)
            if fmt == "json":
                click.echo(json.dumps({
                    "shape": str(shape), "index": str(I),
                    "restrictions": {
                        str(J): json.loads(poly_to_json(v))
                        for J, v in tup.items()}}))
            else:
                for J, v in tup.items():
                    click.echo(f"{J} -> {_render(v, 'latex' if fmt == 'latex' else 'text')}")
        else:
            J = _tuple(at, shape, "--at")
            click.echo(_render(restriction(I, J, budget=term_budget), fmt))
    except (BudgetExceeded, NotPolynomialError) as exc:
        _fail(exc)


@main.command("verify")
@click.option("--lambda", "lam", required=True)
@click.option("--cache-dir", envvar="CSMFLAG_CACHE_DIR", default=None,
              help="restriction cache directory (env: CSMFLAG_CACHE_DIR)")
@click.option("--jobs", envvar="CSMFLAG_JOBS", type=int, default=1,
              show_default=True, help="worker processes (env: CSMFLAG_JOBS)")
@click.option("--term-budget", type=int, default=DEFAULT_TERM_BUDGET,
              show_default=True)
@click.option("--plots/--no-plots", default=True, show_default=True,
              help="render summary figures next to the report")
@click.option("--plot-dir", default="figures", show_default=True)
def cmd_verify(lam, cache_dir, jobs, term_budget, plots, plot_dir):
    """Run the full axiom battery; JSON-lines report, exit 0 iff all pass."""
    shape = _shape(lam)
    if jobs < 1:
        raise click.BadParameter("--jobs must be >= 1")
    cache = RestrictionCache(cache_dir) if cache_dir else None
    try:
        values = compute_restrictions(shape, jobs=jobs, cache=cache,
                                      budget=term_budget)
    except BudgetExceeded as exc:
        _fail(exc)
    reports = verify_all(shape, budget=term_budget, values=values)
    for r in reports:
        click.echo(r.to_json_line())
    if plots:
        for path in save_verification_figures(shape, reports, values, plot_dir):
            click.echo(f"figure: {path}", err=True)
    failed = sum(not r.passed for r in reports)
    if failed:
        click.echo(f"{failed} of {len(reports)} checks failed", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
