"""Constant-time range-minimum queries with leftmost tie-breaking.

query(lo, hi) returns the 1-based position in [lo, hi] holding the range
minimum, choosing the smallest such position.  The default backing cuts
the sequence into short blocks, shares one in-block answer table among
all blocks with the same pairwise order pattern, and runs a doubling
table over the per-block minima, so total size stays linear in the
sequence.  A plain doubling table over every position is available as
backing="sparse" for callers that prefer simplicity over the size bound.
"""

from __future__ import annotations

import numpy as np

from .core import OpCounter, QueryDomainError

__all__ = ["RangeMinQuery", "RangeMaxQuery", "build_rmq", "query_max"]

_PAD = np.iinfo(np.int64).max


def _sparse_positions(pos0: np.ndarray, vals: np.ndarray) -> list:
    """Doubling table of argmin positions; ties keep the leftmost.

    Level k entry t is the leftmost argmin over the 2**k windows starting
    at pos0[t].  Combining two half windows with <= keeps the left answer
    on ties, and the left window owns the global leftmost minimum then.
    """
    levels = [pos0.astype(np.int64)]
    k = 1
    while 2 * k <= pos0.shape[0]:
        prev = levels[-1]
        left = prev[:prev.shape[0] - k]
        right = prev[k:]
        levels.append(np.where(vals[left] <= vals[right], left, right))
        k *= 2
    return levels


class RangeMinQuery:

    __slots__ = ("m", "b", "counter", "_backing", "_vals", "_nb",
                 "_blk_tab", "_tabs", "_bmin_pos", "_sp")

    def __init__(self, values, backing: str = "block",
                 counter: "OpCounter | None" = None) -> None:
        vals = np.asarray(values, dtype=np.int64)
        if vals.ndim != 1 or vals.shape[0] == 0:
            raise ValueError("need a non-empty one-dimensional sequence")
        self.m = int(vals.shape[0])
        self.counter = counter
        self._backing = backing
        if backing == "sparse":
            self._vals = vals.copy()
            self._sp = _sparse_positions(
                np.arange(self.m, dtype=np.int64), self._vals)
            self.b = 0
            self._nb = 0
            self._blk_tab = None
            self._tabs = None
            self._bmin_pos = None
            return
        if backing != "block":
            raise ValueError(f"unknown backing {backing!r}")
        m = self.m
        b = max(1, m.bit_length() // 4)
        self.b = b
        nb = -(-m // b)
        self._nb = nb
        padded = np.full(nb * b, _PAD, dtype=np.int64)
        padded[:m] = vals
        self._vals = padded
        blocks = padded.reshape(nb, b)
        # numpy argmin takes the first occurrence, i.e. the leftmost
        self._bmin_pos = (np.arange(nb, dtype=np.int64) * b
                          + blocks.argmin(axis=1))
        if b == 1:
            sig = np.zeros(nb, dtype=np.int64)
        else:
            sig = np.zeros(nb, dtype=np.int64)
            t = 0
            for p in range(b):
                for q in range(p + 1, b):
                    sig |= (blocks[:, p] <= blocks[:, q]).astype(np.int64) << t
                    t += 1
        _, first_idx, inv = np.unique(sig, return_index=True,
                                      return_inverse=True)
        self._blk_tab = inv.astype(np.int32)
        tabs = []
        for bi in first_idx:
            blk = blocks[bi]
            tab = [[0] * b for _ in range(b)]
            for lo in range(b):
                tab[lo][lo] = lo
                for hi in range(lo + 1, b):
                    best = tab[lo][hi - 1]
                    tab[lo][hi] = best if blk[best] <= blk[hi] else hi
            tabs.append(tab)
        self._tabs = tabs
        self._sp = _sparse_positions(self._bmin_pos, padded)

    def query(self, lo: int, hi: int) -> int:
        """Leftmost position of the minimum over [lo, hi], 1-based, inclusive."""
        if not 1 <= lo <= hi <= self.m:
            raise QueryDomainError(f"range [{lo}, {hi}] not within 1..{self.m}")
        if self.counter is not None:
            self.counter.ops += 1
        left = lo - 1
        right = hi - 1
        if self._backing == "sparse":
            return self._doubling(self._sp, left, right) + 1
        b = self.b
        bl, ol = divmod(left, b)
        br, orr = divmod(right, b)
        tabs, blk = self._tabs, self._blk_tab
        if bl == br:
            return bl * b + tabs[blk[bl]][ol][orr] + 1
        vals = self._vals
        # suffix of the left block, middle blocks, prefix of the right
        # block, combined left to right with strict < so ties stay left
        best = bl * b + tabs[blk[bl]][ol][b - 1]
        if br - bl >= 2:
            mid = self._doubling(self._sp, bl + 1, br - 1)
            if vals[mid] < vals[best]:
                best = mid
        cand = br * b + tabs[blk[br]][0][orr]
        if vals[cand] < vals[best]:
            best = cand
        return int(best) + 1

    def _doubling(self, sp, u: int, v: int) -> int:
        # leftmost argmin over table entries u..v; entries are global
        # positions already when the table was built over block minima
        k = (v - u + 1).bit_length() - 1
        level = sp[k]
        left = level[u]
        right = level[v - (1 << k) + 1]
        vals = self._vals
        return int(left if vals[left] <= vals[right] else right)

    def words(self) -> int:
        total = self._vals.shape[0]
        total += sum(level.shape[0] for level in self._sp)
        if self._backing == "block":
            total += 2 * self._nb  # block argmin positions + pattern ids
            total += len(self._tabs) * self.b * self.b
        return total


class RangeMaxQuery:
    """Leftmost range-maximum via a minimum structure over negated values."""

    __slots__ = ("_inner",)

    def __init__(self, values, backing: str = "block",
                 counter: "OpCounter | None" = None) -> None:
        vals = np.asarray(values, dtype=np.int64)
        self._inner = RangeMinQuery(-vals, backing=backing, counter=counter)

    @property
    def m(self) -> int:
        return self._inner.m

    def query(self, lo: int, hi: int) -> int:
        return self._inner.query(lo, hi)

    def words(self) -> int:
        return self._inner.words()


def build_rmq(s, backing: str = "block",
              counter: "OpCounter | None" = None) -> RangeMinQuery:
    return RangeMinQuery(s, backing=backing, counter=counter)


def query_max(r: RangeMinQuery, lo: int, hi: int) -> int:
    """Range-maximum position through a minimum structure built on -S."""
    return r.query(lo, hi)
