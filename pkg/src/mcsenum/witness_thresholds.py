"""Threshold-based extension queries in linear space (enum211).

Per rank, one entry per character-wise diagonal records the
highest-anti-diagonal suff-match on it (a virtual floor when none
exists).  Suff-match membership is one threshold comparison; witness
candidates come from binary searches driven by range-max probes; the
extension set is assembled from a two-ended candidate scan with a
neighbor prominence test.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .core import CanonicalPair, Match, OpCounter, match_lt
from .nextprev import NextPrevView
from .rmq import RangeMaxQuery
from .suffmatch import iter_rows

__all__ = [
    "CharwiseCoords",
    "ThresholdWitnessIndex",
    "build_d211",
    "candidate_sequence",
    "ext_query_211",
    "is_suff_match",
    "make_provider_211",
    "witness_candidates",
]


class CharwiseCoords:
    """Occurrence-index coordinates: position h of rank c maps to how
    many c occur up to h, and back through per-rank position lists."""

    __slots__ = ("ihat", "jhat", "count_x", "count_y", "pos_x", "pos_y")

    def __init__(self, pair: CanonicalPair):
        self.ihat, self.count_x, self.pos_x = _charwise(
            pair._xl, pair.xlen, pair.sigma)
        self.jhat, self.count_y, self.pos_y = _charwise(
            pair._yl, pair.ylen, pair.sigma)

    def words(self) -> int:
        w = len(self.ihat) + len(self.jhat)
        w += len(self.count_x) + len(self.count_y)
        w += sum(len(p) for p in self.pos_x)
        w += sum(len(p) for p in self.pos_y)
        return w


def _charwise(wl: list, n: int, sigma: int):
    ihat = np.zeros(n + 1, dtype=np.int32)
    cnt = [0] * (sigma + 1)
    pos = [[] for _ in range(sigma + 1)]
    for h in range(1, n + 1):
        c = wl[h]
        cnt[c] += 1
        ihat[h] = cnt[c]
        pos[c].append(h)
    return ihat, cnt, pos


class ThresholdWitnessIndex:
    """Per-rank diagonal thresholds with range-max structures."""

    __slots__ = ("pair", "coords", "ith", "jth", "max_ith", "max_jth")

    def __init__(self, pair, coords, ith, jth, max_ith, max_jth):
        self.pair = pair
        self.coords = coords
        self.ith = ith
        self.jth = jth
        self.max_ith = max_ith
        self.max_jth = max_jth

    def words(self) -> int:
        w = self.coords.words()
        for arr in self.ith:
            if arr is not None:
                w += len(arr)
        for arr in self.jth:
            if arr is not None:
                w += len(arr)
        for q in self.max_ith:
            if q is not None:
                w += q.words()
        for q in self.max_jth:
            if q is not None:
                w += q.words()
        return w


def build_d211(pair: CanonicalPair,
               counter: Optional[OpCounter] = None) -> ThresholdWitnessIndex:
    """Stream suff-match rows top-down, keeping only diagonal maxima.

    Entries start at the virtual floor (max(0,-d), max(0,d)) per
    diagonal d; each streamed suff-match raises its rank's entry.  Rows
    within one sweep share their x position, so slots touched per rank
    per row are distinct and a flat fancy-index maximum is exact.
    """
    co = CharwiseCoords(pair)
    sigma = pair.sigma
    ith = [None] * (sigma + 1)
    jth = [None] * (sigma + 1)
    for c in range(1, sigma + 1):
        cx, cy = co.count_x[c], co.count_y[c]
        if cx == 0 or cy == 0:
            continue
        d = np.arange(cx + cy - 1, dtype=np.int32) - (cx - 1)
        ith[c] = np.maximum(0, -d).astype(np.int32)
        jth[c] = np.maximum(0, d).astype(np.int32)
    xl = pair._xl
    for row in iter_rows(pair, variant="tableless"):
        js = np.flatnonzero(row.values == row.i)
        if js.size == 0:
            continue
        c = xl[row.i]
        cx = co.count_x[c]
        ih = int(co.ihat[row.i])
        jh = co.jhat[js]
        slots = jh - ih + (cx - 1)
        ith[c][slots] = np.maximum(ith[c][slots], ih)
        jth[c][slots] = np.maximum(jth[c][slots], jh)
    max_ith = [None] * (sigma + 1)
    max_jth = [None] * (sigma + 1)
    for c in range(1, sigma + 1):
        if ith[c] is not None:
            max_ith[c] = RangeMaxQuery(ith[c], counter=counter)
            max_jth[c] = RangeMaxQuery(jth[c], counter=counter)
    return ThresholdWitnessIndex(pair, co, ith, jth, max_ith, max_jth)


def is_suff_match(d: ThresholdWitnessIndex, w: Match) -> bool:
    """Threshold comparison on w's character-wise diagonal."""
    pair = d.pair
    c = pair._xl[w.i]
    if pair._yl[w.j] != c:
        raise ValueError(f"{tuple(w)} is not a match")
    co = d.coords
    ih = int(co.ihat[w.i])
    jh = int(co.jhat[w.j])
    slot = jh - ih + co.count_x[c] - 1
    return ih <= int(d.ith[c][slot])


def _probe(q: RangeMaxQuery, arr: np.ndarray, lo: int, hi: int) -> int:
    return int(arr[q.query(lo, hi) - 1])


def witness_candidates(d: ThresholdWitnessIndex, view: NextPrevView,
                       c: int, pref_c: Match, safe: Match) -> list:
    """Up to two witness candidates for rank c: the least-column
    suff-match on pref_c's row and the least-row one on its column,
    both clamped to the safe box; coinciding candidates collapse.

    Each side first tests existence with one range-max probe over the
    diagonal band, then binary-searches the least occurrence index
    whose prefix band still contains a suff-match.
    """
    pair = d.pair
    co = d.coords
    bound_i = min(safe.i, pair.xlen)
    bound_j = min(safe.j, pair.ylen)
    if pref_c.i > bound_i or pref_c.j > bound_j:
        return []
    cx = co.count_x[c]
    i0 = int(co.ihat[pref_c.i])
    j0 = int(co.jhat[pref_c.j])
    out = []

    jcap_pos = view.floor_y(c, bound_j)
    if jcap_pos >= pref_c.j:
        jcap = int(co.jhat[jcap_pos])
        off = cx - i0
        q, arr = d.max_ith[c], d.ith[c]
        if _probe(q, arr, j0 + off, jcap + off) >= i0:
            lo, hi = j0, jcap
            while lo < hi:
                mid = (lo + hi) // 2
                if _probe(q, arr, lo + off, mid + off) >= i0:
                    hi = mid
                else:
                    lo = mid + 1
            out.append(Match(pref_c.i, co.pos_y[c][lo - 1]))

    icap_pos = view.floor_x(c, bound_i)
    if icap_pos >= pref_c.i:
        icap = int(co.ihat[icap_pos])
        base = j0 + cx
        q, arr = d.max_jth[c], d.jth[c]
        if _probe(q, arr, base - icap, base - i0) >= j0:
            lo, hi = i0, icap
            while lo < hi:
                mid = (lo + hi) // 2
                if _probe(q, arr, base - mid, base - i0) >= j0:
                    hi = mid
                else:
                    lo = mid + 1
            v = Match(co.pos_x[c][lo - 1], pref_c.j)
            if not (out and out[0] == v):
                out.append(v)
    return out


def candidate_sequence(pair: CanonicalPair, view: NextPrevView,
                       pref: Match) -> list:
    """All per-rank greedy extension matches that pref immediately
    precedes, ascending in column and descending in row.

    Two persistent scans approach each other: the column scan accepts
    the first occurrence of its column's rank (in both strings) when it
    lands strictly inside the current frontier, the row scan mirrors
    this, and whichever end has the larger frontier anti-diagonal moves.
    The sides stop on meeting or when one runs out of positions.
    """
    nx, ny = pair.xlen, pair.ylen
    xl, yl = pair._xl, pair._yl
    front_p = Match(nx + 1, pref.j)
    front_q = Match(pref.i, ny + 1)
    jcur = pref.j + 1
    icur = pref.i + 1
    low: list = []
    high: list = []
    while True:
        if front_p.a >= front_q.a:
            found = None
            while jcur <= ny:
                j = jcur
                jcur += 1
                c = yl[j]
                if view.prev_y(c, j) > pref.j:
                    continue
                i = view.next_x(c, pref.i)
                if i > nx or i >= front_p.i:
                    continue
                found = Match(i, j)
                break
            if found is None or (high and found == high[-1]):
                return low + high[::-1]
            low.append(found)
            front_p = found
        else:
            found = None
            while icur <= nx:
                i = icur
                icur += 1
                c = xl[i]
                if view.prev_x(c, i) > pref.i:
                    continue
                j = view.next_y(c, pref.j)
                if j > ny or j >= front_q.j:
                    continue
                found = Match(i, j)
                break
            if found is None or (low and found == low[-1]):
                return low + high[::-1]
            high.append(found)
            front_q = found


def ext_query_211(d: ThresholdWitnessIndex, view: NextPrevView,
                  pref: Match, safe: Match) -> list:
    """Prominent extension witnesses via candidates plus the neighbor
    test: a candidate blocked by a strictly smaller neighbor greedy
    match is not a witness."""
    seq = candidate_sequence(d.pair, view, pref)
    xl = d.pair._xl
    out = []
    last = len(seq) - 1
    for r, s in enumerate(seq):
        c = xl[s.i]
        for v in witness_candidates(d, view, c, s, safe):
            if r < last and match_lt(seq[r + 1], v):
                continue
            if r > 0 and match_lt(seq[r - 1], v):
                continue
            out.append((c, v))
    return out


def make_provider_211(d: ThresholdWitnessIndex, view: NextPrevView):
    """Adapt the threshold index to the driver's provider signature."""
    def provider(pref: Match, safe: Match) -> list:
        return ext_query_211(d, view, pref, safe)
    return provider
