"""Row-table extension queries: every Suff row kept, one range-minimum
structure per row (the quadratic-space backing of enum221).

An extension query reads the single row just below the frame's pref,
walking leftmost range-minima across a shrinking column range; each
probe either yields one prominent witness or ends the walk, so a query
costs one range-min call per witness plus one.
"""

from __future__ import annotations

from typing import Optional

from .core import (CanonicalPair, InternalConsistencyError, Match,
                   OpCounter, ResourceLimitError)
from .nextprev import NextPrevView
from .rmq import RangeMinQuery
from .suffmatch import iter_rows

__all__ = ["RowWitnessIndex", "build_d221", "ext_query_221",
           "make_provider_221"]


class RowWitnessIndex:
    """All Suff rows of a pair, each with its own range-min structure."""

    __slots__ = ("pair", "rows", "rmqs")

    def __init__(self, pair: CanonicalPair, rows: list, rmqs: list):
        self.pair = pair
        self.rows = rows    # rows[i] for 1 <= i <= xlen; rows[0] unused
        self.rmqs = rmqs

    def row_values(self, i: int):
        return self.rows[i].values

    def words(self) -> int:
        w = 0
        for r in self.rows[1:]:
            w += len(r.values)
        for q in self.rmqs[1:]:
            w += q.words()
        return w


def build_d221(pair: CanonicalPair, view: NextPrevView,
               counter: Optional[OpCounter] = None,
               max_words: Optional[int] = None,
               rmq_backing: str = "block") -> RowWitnessIndex:
    """Materialize every Suff row with a range-min structure over its
    columns.  max_words caps the accumulated logical word count."""
    rows = [None] * (pair.xlen + 1)
    rmqs = [None] * (pair.xlen + 1)
    total = 0
    for row in iter_rows(pair, variant="table", view=view):
        q = RangeMinQuery(row.values[1:], backing=rmq_backing,
                          counter=counter)
        rows[row.i] = row
        rmqs[row.i] = q
        total += len(row.values) + q.words()
        if max_words is not None and total > max_words:
            raise ResourceLimitError(
                f"row index exceeds {max_words} words")
    return RowWitnessIndex(pair, rows, rmqs)


def ext_query_221(d: RowWitnessIndex, pref: Match, safe: Match) -> list:
    """Prominent extension witnesses of a frame, descending in column.

    Works on the row one below pref's row end.  Repeatedly takes the
    leftmost range-minimum over the still-unscanned column range inside
    the frame box; a value within the row bound is a witness and caps
    the range just left of its column, a value beyond it ends the walk.
    Successive values must strictly increase.
    """
    pair = d.pair
    i = pref.i + 1
    if i > pair.xlen:
        return []
    lo = pref.j + 1
    hi = min(safe.j, pair.ylen)
    if lo > hi:
        return []
    cap_i = min(safe.i, pair.xlen)
    values = d.rows[i].values
    rmq = d.rmqs[i]
    out = []
    last = 0
    while lo <= hi:
        jr = rmq.query(lo, hi)
        vr = int(values[jr])
        if vr > cap_i:
            break
        if vr <= last:
            raise InternalConsistencyError(
                f"row {i} minima not strictly increasing: "
                f"{vr} after {last}")
        out.append((int(pair._xl[vr]), Match(vr, jr)))
        last = vr
        hi = jr - 1
    return out


def make_provider_221(d: RowWitnessIndex):
    """Adapt the row index to the driver's provider signature."""
    def provider(pref: Match, safe: Match) -> list:
        return ext_query_221(d, pref, safe)
    return provider
