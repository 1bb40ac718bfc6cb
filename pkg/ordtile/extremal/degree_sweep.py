"""
Tabulate measured against closed-form minimum degrees over a parameter grid.
"""

import pandas as pd

from ordtile.datatypes.errors import InputError
from ordtile.datatypes.ordered_graph import OrderedGraph
from ordtile.extremal.builders import build_F1, build_F3

COLUMNS = ["n", "r", "i", "j", "min_degree", "displayed", "match"]


def _f1_row(n, r, i, j):
    measured = build_F1(n, r, i, j).min_degree()
    displayed = n - 1 - (n - 1) // r
    return [n, r, i, j, measured, displayed, measured == displayed]


def _f3_row(n, r):
    # the ordered K_r has interval chromatic number r
    measured = build_F3(OrderedGraph.complete(r), n).min_degree()
    displayed = n - -(-n // (r - 1))
    return [n, r, None, None, measured, displayed, measured == displayed]


def degree_sweep(kind, grid):
    """
    Parameters
    ----------
    kind : str
        "F1" with grid entries (n, r, i, j), or "F3" with grid entries (n, r).
    grid : iterable of tuple

    Returns
    -------
    pandas.DataFrame
        One row per grid entry with columns n, r, i, j, min_degree, displayed, match.
    """
    if kind == "F1":
        rows = [_f1_row(*entry) for entry in grid]
    elif kind == "F3":
        rows = [_f3_row(*entry) for entry in grid]
    else:
        raise InputError(f"unknown construction {kind!r}; expected F1 or F3")
    return pd.DataFrame(rows, columns=COLUMNS)


def f1_grid(n_max, r_max=4):
    """Every admissible (n, r, i, j) with n <= n_max and r <= r_max."""
    return [(n, r, i, j)
            for r in range(2, r_max + 1)
            for n in range(2 * r + 1, n_max + 1)
            for i in range(1, r + 2)
            for j in range(1, r + 2) if i != j]
