"""Figures accompanying a verification run.

Rendered to files next to the JSON-lines report: a pass/fail matrix per
pairwise check and a heatmap of restriction degrees over all (I, J).
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .flags import enumerate_index_tuples

_PAIR_CHECKS = ("divisibility", "degree", "vanishing")


def _tuple_labels(tuples):
    return [str(I) for I in tuples]


def save_verification_figures(shape, reports, values, out_dir):
    """Write all figures for one shape; returns the list of file paths."""
    os.makedirs(out_dir, exist_ok=True)
    tuples = enumerate_index_tuples(shape)
    index = {I: i for i, I in enumerate(tuples)}
    m = len(tuples)
    written = []

    # one pass/fail matrix per pairwise check (diagonal checks fold into the
    # matrix diagonal of their namesake)
    for check in _PAIR_CHECKS:
        grid = np.full((m, m), np.nan)
        for r in reports:
            if r.check != check or r.J is None:
                continue
            grid[index[r.I], index[r.J]] = 1.0 if r.passed else 0.0
        if np.isnan(grid).all():
            continue
        fig, ax = plt.subplots(figsize=(max(4, m * 0.5),) * 2)
        ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1)
        _decorate(ax, tuples, f"{check} checks, shape {shape}")
        path = os.path.join(out_dir, f"checks_{check}_{_slug(shape)}.png")
        fig.savefig(path, bbox_inches="tight", dpi=120)
        plt.close(fig)
        written.append(path)

    # restriction degree heatmap; zero restrictions are left blank
    deg = np.full((m, m), np.nan)
    for (I, J), poly in values.items():
        if not poly.is_zero():
            deg[index[I], index[J]] = poly.degree()
    fig, ax = plt.subplots(figsize=(max(4, m * 0.5),) * 2)
    im = ax.imshow(deg, cmap="viridis")
    fig.colorbar(im, ax=ax, shrink=0.8, label="total degree")
    _decorate(ax, tuples, f"restriction degrees, shape {shape}")
    path = os.path.join(out_dir, f"restriction_degrees_{_slug(shape)}.png")
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    written.append(path)
    return written


def _decorate(ax, tuples, title):
    labels = _tuple_labels(tuples)
    ax.set_xticks(range(len(labels)))
    ax.set_yticks(range(len(labels)))
    small = len(labels) <= 30
    ax.set_xticklabels(labels if small else [""] * len(labels),
                       rotation=90, fontsize=6)
    ax.set_yticklabels(labels if small else [""] * len(labels), fontsize=6)
    ax.set_xlabel("J (fixed point)")
    ax.set_ylabel("I (cell)")
    ax.set_title(title)


def _slug(shape):
    return str(shape).replace(",", "-")
