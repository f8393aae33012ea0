"""Next and previous occurrence queries over the wrapped pair.

Two interchangeable backings answer the same queries: dense per-rank
position tables (constant-time lookups, Theta(sigma * n) words) and
per-rank sorted occurrence lists (binary search, Theta(n) words).
``next`` is strictly forward and ``prev`` strictly backward; asking at a
position outside 1..length is a contract violation, not a clamp.  Chain
starts and capped searches go through the first/last/floor helpers.
"""

from __future__ import annotations

import bisect

import numpy as np

from .core import (CanonicalPair, InvalidRankError, Match, OpCounter,
                   QueryDomainError)

__all__ = [
    "NextPrevIndex",
    "NextPrevTable",
    "NextPrevView",
    "build_index",
    "build_table",
    "make_view",
]


def _dense(ww: np.ndarray, n: int, sigma: int):
    # column h of nxt answers "least occurrence > h" for h in 0..n;
    # column h of prv answers "greatest occurrence < h" for h in 1..n+1.
    # The extreme columns double as first/last occurrence lookups.
    nxt = np.full((sigma + 1, n + 1), n + 1, dtype=np.int32)
    prv = np.zeros((sigma + 1, n + 2), dtype=np.int32)
    pos = np.arange(1, n + 1, dtype=np.int32)
    body = ww[1:n + 1]
    for c in range(1, sigma + 1):
        hit = body == c
        prv[c, 2:n + 2] = np.maximum.accumulate(np.where(hit, pos, 0))
        back = np.where(hit, pos, n + 1)
        nxt[c, 0:n] = np.minimum.accumulate(back[::-1])[::-1]
    return nxt, prv


class NextPrevTable:
    """Dense next/prev rows per rank; every lookup is one array read."""

    kind = "table"
    __slots__ = ("nxt_x", "prv_x", "nxt_y", "prv_y")

    def __init__(self, pair: CanonicalPair) -> None:
        self.nxt_x, self.prv_x = _dense(pair.xw, pair.xlen, pair.sigma)
        self.nxt_y, self.prv_y = _dense(pair.yw, pair.ylen, pair.sigma)

    def words(self) -> int:
        return (self.nxt_x.size + self.prv_x.size
                + self.nxt_y.size + self.prv_y.size)


def _occurrences(wl: list, n: int, sigma: int) -> list:
    occ = [[] for _ in range(sigma + 1)]
    for h in range(1, n + 1):
        occ[wl[h]].append(h)
    return occ


class NextPrevIndex:
    """Sorted per-rank occurrence positions; queries binary-search them."""

    kind = "index"
    __slots__ = ("occ_x", "occ_y")

    def __init__(self, pair: CanonicalPair) -> None:
        self.occ_x = _occurrences(pair._xl, pair.xlen, pair.sigma)
        self.occ_y = _occurrences(pair._yl, pair.ylen, pair.sigma)

    def words(self) -> int:
        return (sum(len(p) for p in self.occ_x)
                + sum(len(p) for p in self.occ_y)
                + len(self.occ_x) + len(self.occ_y))


def build_table(pair: CanonicalPair) -> NextPrevTable:
    return NextPrevTable(pair)


def build_index(pair: CanonicalPair) -> NextPrevIndex:
    return NextPrevIndex(pair)


class NextPrevView:
    """One query surface over either backing, with optional op counting."""

    __slots__ = ("pair", "backing", "counter")

    def __init__(self, pair: CanonicalPair, backing="table",
                 counter: "OpCounter | None" = None) -> None:
        if isinstance(backing, str):
            if backing == "table":
                backing = NextPrevTable(pair)
            elif backing == "index":
                backing = NextPrevIndex(pair)
            else:
                raise ValueError(f"unknown backing {backing!r}")
        self.pair = pair
        self.backing = backing
        self.counter = counter

    def _rank(self, c: int) -> None:
        if not 1 <= c <= self.pair.sigma:
            raise InvalidRankError(f"rank {c} not in 1..{self.pair.sigma}")

    def _full(self, c: int, h: int, n: int) -> None:
        self._rank(c)
        if not 1 <= h <= n:
            raise QueryDomainError(f"position {h} not in 1..{n}")
        if self.counter is not None:
            self.counter.ops += 1

    # -- strict queries -------------------------------------------------

    def next_x(self, c: int, h: int) -> int:
        """Least x position > h holding rank c, else xlen + 1."""
        n = self.pair.xlen
        self._full(c, h, n)
        b = self.backing
        if b.kind == "table":
            return int(b.nxt_x[c, h])
        occ = b.occ_x[c]
        k = bisect.bisect_right(occ, h)
        return occ[k] if k < len(occ) else n + 1

    def next_y(self, c: int, h: int) -> int:
        n = self.pair.ylen
        self._full(c, h, n)
        b = self.backing
        if b.kind == "table":
            return int(b.nxt_y[c, h])
        occ = b.occ_y[c]
        k = bisect.bisect_right(occ, h)
        return occ[k] if k < len(occ) else n + 1

    def prev_x(self, c: int, h: int) -> int:
        """Greatest x position < h holding rank c, else 0."""
        self._full(c, h, self.pair.xlen)
        b = self.backing
        if b.kind == "table":
            return int(b.prv_x[c, h])
        occ = b.occ_x[c]
        k = bisect.bisect_left(occ, h)
        return occ[k - 1] if k else 0

    def prev_y(self, c: int, h: int) -> int:
        self._full(c, h, self.pair.ylen)
        b = self.backing
        if b.kind == "table":
            return int(b.prv_y[c, h])
        occ = b.occ_y[c]
        k = bisect.bisect_left(occ, h)
        return occ[k - 1] if k else 0

    # -- boundary helpers ------------------------------------------------

    def first_x(self, c: int) -> int:
        """Least occurrence of c in x, else xlen + 1."""
        self._rank(c)
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.nxt_x[c, 0])
        occ = b.occ_x[c]
        return occ[0] if occ else self.pair.xlen + 1

    def first_y(self, c: int) -> int:
        self._rank(c)
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.nxt_y[c, 0])
        occ = b.occ_y[c]
        return occ[0] if occ else self.pair.ylen + 1

    def last_x(self, c: int) -> int:
        """Greatest occurrence of c in x, else 0."""
        self._rank(c)
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.prv_x[c, self.pair.xlen + 1])
        occ = b.occ_x[c]
        return occ[-1] if occ else 0

    def last_y(self, c: int) -> int:
        self._rank(c)
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.prv_y[c, self.pair.ylen + 1])
        occ = b.occ_y[c]
        return occ[-1] if occ else 0

    def floor_x(self, c: int, h: int) -> int:
        """Greatest occurrence of c at or before h (h may be 0), else 0."""
        self._rank(c)
        if not 0 <= h <= self.pair.xlen:
            raise QueryDomainError(f"position {h} not in 0..{self.pair.xlen}")
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.prv_x[c, h + 1])
        occ = b.occ_x[c]
        k = bisect.bisect_right(occ, h)
        return occ[k - 1] if k else 0

    def floor_y(self, c: int, h: int) -> int:
        self._rank(c)
        if not 0 <= h <= self.pair.ylen:
            raise QueryDomainError(f"position {h} not in 0..{self.pair.ylen}")
        if self.counter is not None:
            self.counter.ops += 1
        b = self.backing
        if b.kind == "table":
            return int(b.prv_y[c, h + 1])
        occ = b.occ_y[c]
        k = bisect.bisect_right(occ, h)
        return occ[k - 1] if k else 0

    # -- match-level steps -----------------------------------------------

    def next_match(self, c: int, w: Match) -> Match:
        """next on both coordinates; components may be virtual."""
        return Match(self.next_x(c, w.i), self.next_y(c, w.j))

    def prev_match(self, c: int, w: Match) -> Match:
        return Match(self.prev_x(c, w.i), self.prev_y(c, w.j))

    def words(self) -> int:
        return self.backing.words()


def make_view(pair: CanonicalPair, backing="table",
              counter: "OpCounter | None" = None) -> NextPrevView:
    return NextPrevView(pair, backing, counter)
