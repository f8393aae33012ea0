"""Definition-level reference implementations for small instances.

Everything here is deliberately naive and shares no code with the
production modules, so agreement between the two is evidence.  All
procedures enforce a size cap and work on wrapped rank sequences.
"""

from __future__ import annotations

import bisect
from typing import Iterable

import numpy as np

from .core import (CanonicalPair, Match, NotMcsPrefixError,
                   ResourceLimitError, match_lneq, match_lt)

__all__ = [
    "all_mcs_bruteforce",
    "extensible_bruteforce",
    "match_grid",
    "pref_matches_bruteforce",
    "pref_rows_bruteforce",
    "safe_bruteforce",
    "stability_bruteforce",
    "step_bruteforce",
    "suff_matches_bruteforce",
    "witnesses_bruteforce",
]

DEFAULT_CAP = 28  # on xlen + ylen


def _check_cap(pair: CanonicalPair, cap: int) -> None:
    if pair.xlen + pair.ylen > cap:
        raise ResourceLimitError(
            f"brute force capped at xlen + ylen <= {cap}, "
            f"got {pair.xlen + pair.ylen}")


def _occ(wl: list, n: int, sigma: int) -> list:
    occ = [[] for _ in range(sigma + 1)]
    for h in range(1, n + 1):
        occ[wl[h]].append(h)
    return occ


def _next_after(occ_c: list, h: int):
    k = bisect.bisect_right(occ_c, h)
    return occ_c[k] if k < len(occ_c) else None


def _prev_before(occ_c: list, h: int):
    k = bisect.bisect_left(occ_c, h)
    return occ_c[k - 1] if k else None


def _pref(ox: list, oy: list, zw) -> "Match | None":
    i = 0
    for c in zw:
        i = _next_after(ox[c], i)
        if i is None:
            return None
    j = 0
    for c in zw:
        j = _next_after(oy[c], j)
        if j is None:
            return None
    return Match(i, j)


def _chain_forward(occ: list, zw) -> list:
    # ends[k] = end of the leftmost embedding of zw[:k]; zw must embed
    ends = [0]
    h = 0
    for c in zw:
        h = _next_after(occ[c], h)
        ends.append(h)
    return ends


def _chain_backward(occ: list, zw, n: int) -> list:
    # starts[k] = start of the rightmost embedding of zw[k:]
    starts = [n + 1] * (len(zw) + 1)
    h = n + 1
    for k in range(len(zw) - 1, -1, -1):
        h = _prev_before(occ[zw[k]], h)
        starts[k] = h
    return starts


def _occurs_between(occ_c: list, a: int, b: int) -> bool:
    """True when some occurrence lies strictly between a and b."""
    k = bisect.bisect_right(occ_c, a)
    return k < len(occ_c) and occ_c[k] < b


def _no_insertion(pair: CanonicalPair, ox: list, oy: list, z) -> bool:
    zw = pair.wrap(z)
    m = len(zw)
    px = _chain_forward(ox, zw)
    py = _chain_forward(oy, zw)
    sx = _chain_backward(ox, zw, pair.xlen)
    sy = _chain_backward(oy, zw, pair.ylen)
    for k in range(1, m):
        for c in range(2, pair.sigma):
            if (_occurs_between(ox[c], px[k], sx[k])
                    and _occurs_between(oy[c], py[k], sy[k])):
                return False
    return True


def all_mcs_bruteforce(pair: CanonicalPair, cap: int = DEFAULT_CAP) -> frozenset:
    """Every MCS of the pair, as a frozenset of wrapped rank tuples.

    Walks all distinct shared strings by leftmost embedding; a shared
    string is an MCS exactly when no interior rank extends it on the
    right and no single-character insertion window is open at any cut.
    """
    _check_cap(pair, cap)
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    interior = range(2, pair.sigma)
    out = []
    stack = [(1, 1, ())]
    while stack:
        i, j, z = stack.pop()
        extended = False
        for c in interior:
            ni = _next_after(ox[c], i)
            if ni is None:
                continue
            nj = _next_after(oy[c], j)
            if nj is None:
                continue
            extended = True
            stack.append((ni, nj, z + (c,)))
        if not extended and _no_insertion(pair, ox, oy, z):
            out.append(pair.wrap(z))
    return frozenset(out)


def safe_bruteforce(pair: CanonicalPair, zw: Iterable[int],
                    mcs_set=None, cap: int = DEFAULT_CAP) -> Match:
    """safe of a live wrapped prefix, by exhausting insertion derivatives.

    The i coordinate is the least prefix end over derivatives whose end
    keeps this prefix's j coordinate, and symmetrically; coordinates with
    no candidate are virtual (one past the string end).  zw must be a
    prefix of some MCS, else NotMcsPrefixError.
    """
    _check_cap(pair, cap)
    zw = tuple(zw)
    if mcs_set is None:
        mcs_set = all_mcs_bruteforce(pair, cap)
    if not any(w[:len(zw)] == zw for w in mcs_set):
        raise NotMcsPrefixError("not a prefix of any MCS")
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    base = _pref(ox, oy, zw)
    best_i = pair.xlen + 1
    best_j = pair.ylen + 1
    for k in range(len(zw) + 1):
        for c in range(2, pair.sigma):
            p = _pref(ox, oy, zw[:k] + (c,) + zw[k:])
            if p is None:
                continue
            if p.j == base.j and p.i < best_i:
                best_i = p.i
            if p.i == base.i and p.j < best_j:
                best_j = p.j
    return Match(best_i, best_j)


def suff_matches_bruteforce(pair: CanonicalPair,
                            cap: int = DEFAULT_CAP) -> frozenset:
    """All matches that start a rightmost embedding: the closure of the
    final sentinel match under strictly-backward prev steps on any rank."""
    _check_cap(pair, cap)
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    start = Match(pair.xlen, pair.ylen)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for c in range(1, pair.sigma + 1):
            pi = _prev_before(ox[c], w.i)
            if pi is None:
                continue
            pj = _prev_before(oy[c], w.j)
            if pj is None:
                continue
            v = Match(pi, pj)
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return frozenset(seen)


def pref_matches_bruteforce(pair: CanonicalPair,
                            cap: int = DEFAULT_CAP) -> frozenset:
    """Mirror closure: ends of leftmost embeddings, from the first
    sentinel match under strictly-forward next steps."""
    _check_cap(pair, cap)
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    start = Match(1, 1)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for c in range(1, pair.sigma + 1):
            ni = _next_after(ox[c], w.i)
            if ni is None:
                continue
            nj = _next_after(oy[c], w.j)
            if nj is None:
                continue
            v = Match(ni, nj)
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return frozenset(seen)


def pref_rows_bruteforce(pair: CanonicalPair, cap: int = DEFAULT_CAP) -> list:
    """Pref rows ascending in i, the mirror of the Suff rows; rows[i - 1]
    holds, per column j, the greatest i' <= i with (i', j) a pref-match,
    else 0.  Test-only helper."""
    prefs = pref_matches_bruteforce(pair, cap)
    by_row = {}
    for w in prefs:
        by_row.setdefault(w.i, []).append(w.j)
    cur = np.zeros(pair.ylen + 1, dtype=np.int32)
    rows = []
    for i in range(1, pair.xlen + 1):
        for j in by_row.get(i, ()):
            cur[j] = i
        rows.append(cur.copy())
    return rows


def match_grid(pair: CanonicalPair) -> np.ndarray:
    """grid[i][j] = number of matches (p, q) with p <= i and q <= j."""
    g = np.zeros((pair.xlen + 1, pair.ylen + 1), dtype=np.int64)
    eq = (pair.xw[1:, None] == pair.yw[None, 1:]).astype(np.int64)
    g[1:, 1:] = eq.cumsum(axis=0).cumsum(axis=1)
    return g


def _empty_rect(grid: np.ndarray, u: Match, v: Match) -> bool:
    """No match strictly inside the open rectangle between u and v."""
    a, b = u.i, u.j
    c, d = v.i - 1, v.j - 1
    if c <= a or d <= b:
        return True
    return int(grid[c, d] - grid[a, d] - grid[c, b] + grid[a, b]) == 0


def witnesses_bruteforce(pair: CanonicalPair, pref: Match, safe: Match,
                         suff_set, grid: np.ndarray):
    """(all witnesses, prominent witnesses) for a frame, per definition:
    suff-matches v with pref immediately preceding v and v <= safe;
    prominent when no other witness is componentwise <= it."""
    wits = []
    for v in suff_set:
        if (match_lt(pref, v) and v.i <= safe.i and v.j <= safe.j
                and _empty_rect(grid, pref, v)):
            wits.append(v)
    prom = [v for v in wits if not any(match_lneq(w, v) for w in wits)]
    return wits, prom


def extensible_bruteforce(pair: CanonicalPair, zw, mcs_set=None,
                          cap: int = DEFAULT_CAP) -> list:
    """Ranks c such that zw + c is still a prefix of some MCS, ascending."""
    if mcs_set is None:
        mcs_set = all_mcs_bruteforce(pair, cap)
    zw = tuple(zw)
    k = len(zw)
    return sorted({w[k] for w in mcs_set if len(w) > k and w[:k] == zw})


def step_bruteforce(pair: CanonicalPair, zw, mcs_set=None,
                    cap: int = DEFAULT_CAP) -> int:
    """Minimum anti-diagonal advance of pref over the extensions of zw."""
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    zw = tuple(zw)
    base = _pref(ox, oy, zw)
    exts = extensible_bruteforce(pair, zw, mcs_set, cap)
    if not exts:
        raise NotMcsPrefixError("no extensions: not a live prefix")
    return min(_pref(ox, oy, zw + (c,)).a - base.a for c in exts)


def stability_bruteforce(pair: CanonicalPair, zw) -> int:
    """Number of indices k where the greedy prefix end of zw[:k] equals
    the greedy suffix start of zw[k-1:], sentinels included."""
    ox = _occ(pair._xl, pair.xlen, pair.sigma)
    oy = _occ(pair._yl, pair.ylen, pair.sigma)
    zw = tuple(zw)
    fx = _chain_forward(ox, zw)
    fy = _chain_forward(oy, zw)
    sx = _chain_backward(ox, zw, pair.xlen)
    sy = _chain_backward(oy, zw, pair.ylen)
    return sum(1 for k in range(1, len(zw) + 1)
               if fx[k] == sx[k - 1] and fy[k] == sy[k - 1])
