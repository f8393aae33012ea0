"""Suff-match rows and their two equivalent update procedures.

A match w is a suff-match when w = suff(Z) for some string shared by the
pair: either the final sentinel match, or one strictly-backward prev step
away from another suff-match.  Row i stores, per column j, the least
i' >= i with (i', j) a suff-match, so the suff-matches of row i are the
columns whose entry equals i.  Rows are folded from row xlen downward.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

import numpy as np

from .core import CanonicalPair, QueryDomainError
from .nextprev import NextPrevView

__all__ = ["SuffRow", "initial_row", "update_suff", "update_suff2",
           "iter_rows", "stream_suff_matches"]


class SuffRow(NamedTuple):
    i: int
    values: np.ndarray  # length ylen + 1, index 0 pad; entries in i..xlen+1


def initial_row(pair: CanonicalPair) -> SuffRow:
    """Row xlen: only (xlen, ylen) is a suff-match at or past row xlen."""
    values = np.full(pair.ylen + 1, pair.xlen + 1, dtype=np.int32)
    values[0] = 0
    values[pair.ylen] = pair.xlen
    return SuffRow(pair.xlen, values)


def _check_row_index(pair: CanonicalPair, i: int, prev_row: SuffRow) -> None:
    if not 1 <= i <= pair.xlen - 1:
        raise QueryDomainError(f"row {i} not in 1..{pair.xlen - 1}")
    if prev_row.i != i + 1:
        raise ValueError(f"need row {i + 1} to fold row {i}")


def update_suff(pair: CanonicalPair, i: int, prev_row: SuffRow,
                view: NextPrevView) -> SuffRow:
    """Row i from row i + 1, using the dense prev rows of a table backing.

    A suff-match (i, j') appears exactly when some column j has
    j' = prev_Y(X[i], j) >= 1 and prev_X(X[i], Suff_{i+1}[j]) = i.
    Scanning only the column minimum Suff_{i+1}[j] per column is enough:
    a qualifying suff-match higher in the column would force the same
    prev_X answer, and prev steps from it land on the same (i, j').
    """
    _check_row_index(pair, i, prev_row)
    b = view.backing
    if b.kind != "table":
        raise ValueError("update_suff needs a table-backed view")
    c = pair._xl[i]
    ny = pair.ylen
    pv = prev_row.values[1:]           # Suff_{i+1}[j] for j = 1..ylen
    jp = b.prv_y[c, 1:ny + 1]          # prev_Y(c, j)   for j = 1..ylen
    cond = (pv <= pair.xlen) & (jp >= 1) & (b.prv_x[c][pv] == i)
    values = prev_row.values.copy()
    values[jp[cond]] = i
    return SuffRow(i, values)


def update_suff2(pair: CanonicalPair, i: int, prev_row: SuffRow) -> SuffRow:
    """Row i from row i + 1 without any precomputed structure.

    prev_X(X[i], v) = i collapses to v <= i_next with i_next the next
    occurrence of X[i] past i, and prev_Y(X[i], j) is carried as a
    running maximum while j ascends.
    """
    _check_row_index(pair, i, prev_row)
    c = pair._xl[i]
    nx, ny = pair.xlen, pair.ylen
    hits = np.flatnonzero(pair.xw[i + 1:nx + 1] == c)
    i_next = int(hits[0]) + i + 1 if hits.shape[0] else nx + 1
    pv = prev_row.values[1:]
    mark = np.where(pair.yw[1:ny + 1] == c,
                    np.arange(1, ny + 1, dtype=np.int32), 0)
    acc = np.maximum.accumulate(mark)
    jp = np.empty(ny, dtype=np.int32)
    jp[0] = 0
    jp[1:] = acc[:-1]
    cond = (pv <= nx) & (jp >= 1) & (pv <= i_next)
    values = prev_row.values.copy()
    values[jp[cond]] = i
    return SuffRow(i, values)


def iter_rows(pair: CanonicalPair, variant: str = "tableless",
              view: "NextPrevView | None" = None) -> Iterator[SuffRow]:
    """All rows, from row xlen down to row 1.

    variant "table" folds with update_suff over a table-backed view;
    "tableless" folds with update_suff2 and touches no index structure.
    """
    if variant not in ("table", "tableless"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "table" and (view is None or view.backing.kind != "table"):
        raise ValueError("table variant needs a table-backed view")
    row = initial_row(pair)
    yield row
    for i in range(pair.xlen - 1, 0, -1):
        row = (update_suff(pair, i, row, view) if variant == "table"
               else update_suff2(pair, i, row))
        yield row


def stream_suff_matches(pair: CanonicalPair, visit: Callable[[int, int], None],
                        variant: str = "tableless",
                        view: "NextPrevView | None" = None) -> None:
    """Visit every suff-match (i, j) exactly once, rows in descending i."""
    for row in iter_rows(pair, variant, view):
        for j in np.flatnonzero(row.values == row.i):
            visit(row.i, int(j))
