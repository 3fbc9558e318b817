"""Text and LaTeX rendering of fillings, weight functions, and terms."""

from .polynomial import poly_to_latex, poly_to_text
from .variables import var_latex, var_name
from .weights import TableFilling


def _cell_grid(filling: TableFilling):
    """grid[row-1][col-1] = variable name or None, over the full n x N table."""
    sh = filling.I.shape
    grid = [[None] * sh.N for _ in range(sh.n)]
    for col, entries in enumerate(filling.columns):
        for row, v in entries:
            grid[row - 1][col] = v
    return grid


def ascii_table(filling: TableFilling) -> str:
    """The filled table as a fixed-width ASCII grid; undistinguished boxes
    are blank."""
    grid = _cell_grid(filling)
    width = max((len(var_name(v)) for row in grid for v in row if v), default=1)
    sep = "+" + "+".join(["-" * (width + 2)] * len(grid[0])) + "+"
    lines = [sep]
    for row in grid:
        cells = [f" {var_name(v).ljust(width)} " if v else " " * (width + 2)
                 for v in row]
        lines.append("|" + "|".join(cells) + "|")
        lines.append(sep)
    return "\n".join(lines)


def latex_table(filling: TableFilling) -> str:
    """The filled table as a LaTeX tabular with all boxes framed."""
    grid = _cell_grid(filling)
    ncols = len(grid[0])
    lines = [r"\begin{tabular}{" + "|c" * ncols + "|}", r"\hline"]
    for row in grid:
        cells = [f"${var_latex(v)}$" if v else "" for v in row]
        lines.append(" & ".join(cells) + r" \\")
        lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def term_factored_text(filling: TableFilling) -> str:
    """The filling's term as an explicit product of its factors."""
    type1, type2, type3 = filling.factor_groups()
    parts = [f"({f})" for f in type1 + type2]
    parts += [f"({num})/({den})" for num, den in type3]
    return " * ".join(parts) if parts else "1"


def term_factored_latex(filling: TableFilling) -> str:
    type1, type2, type3 = filling.factor_groups()
    parts = [f"({f.latex()})" for f in type1 + type2]
    parts += [rf"\frac{{{num.latex()}}}{{{den.latex()}}}" for num, den in type3]
    return r" \, ".join(parts) if parts else "1"


def render_polynomial(p, fmt: str) -> str:
    if fmt == "latex":
        return poly_to_latex(p)
    return poly_to_text(p)


def render_filling(filling: TableFilling, fmt: str) -> str:
    """Table plus its term, in the requested format."""
    if fmt == "latex":
        return latex_table(filling) + "\n" + term_factored_latex(filling)
    return ascii_table(filling) + "\n" + term_factored_text(filling)
