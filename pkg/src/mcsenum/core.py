"""Canonical pair representation and greedy embedding primitives.

Both input strings are renamed to integer ranks over a shared alphabet and
wrapped in sentinels: rank 1 opens both strings, rank ``sigma`` closes them,
and every distinct input character gets an interior rank in ``2..sigma-1``
in ascending character order.  A string is a maximal common subsequence of
the original pair exactly when its wrapped form is one of the wrapped pair,
so everything past this module works on wrapped rank sequences and 1-based
positions.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "CanonicalPair",
    "InternalConsistencyError",
    "InvalidRankError",
    "Match",
    "McsError",
    "NotCommonSubsequenceError",
    "NotMcsPrefixError",
    "OpCounter",
    "QueryDomainError",
    "ResourceLimitError",
    "VirtualMatch",
    "canonicalize",
    "immediately_precedes",
    "is_maximal",
    "match_le",
    "match_lneq",
    "match_lt",
    "pref_of",
    "suff_of",
]


class McsError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidRankError(McsError, ValueError):
    """A rank outside the allowed range was passed to a query or decoder."""


class QueryDomainError(McsError, ValueError):
    """A position argument lies outside the contract of the query."""


class NotCommonSubsequenceError(McsError, ValueError):
    """The given rank sequence is not a common subsequence of the pair."""


class NotMcsPrefixError(McsError, ValueError):
    """The given rank sequence is not a prefix of any MCS."""


class ResourceLimitError(McsError, RuntimeError):
    """A configured size or node cap would be exceeded."""


class InternalConsistencyError(McsError, RuntimeError):
    """An internal invariant failed.  Indicates a bug, not bad input."""


class OpCounter:
    """Mutable counter of elementary operations, used by delay benchmarks."""

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def bump(self, n: int = 1) -> None:
        self.ops += n


class Match(NamedTuple):
    """A grid point (i, j); a true match additionally has xw[i] == yw[j].

    Virtual coordinates (0 or length + 1) appear as greedy-embedding
    failure markers, chain starts, and the open upper bound safe(Z'), so
    not every Match instance is a match of the pair.  ``d`` and ``a`` are
    the diagonal and anti-diagonal.
    """

    i: int
    j: int

    @property
    def d(self) -> int:
        return self.j - self.i

    @property
    def a(self) -> int:
        return self.i + self.j


# A Match whose coordinates may lie one past the string ends.  The two
# names share one runtime type; the alias marks intent in signatures.
VirtualMatch = Match


def match_lt(u: Match, v: Match) -> bool:
    """u < v strictly in both coordinates."""
    return u.i < v.i and u.j < v.j


def match_le(u: Match, v: Match) -> bool:
    return u.i <= v.i and u.j <= v.j


def match_lneq(u: Match, v: Match) -> bool:
    """u <= v in both coordinates and u != v."""
    return u.i <= v.i and u.j <= v.j and u != v


class CanonicalPair:
    """Wrapped rank strings xw, yw plus the alphabet mapping.

    ``xw`` and ``yw`` are int32 arrays whose index 0 is a pad; positions
    run 1..xlen and 1..ylen.  ``chars[r - 2]`` recovers the original
    character of interior rank r.  ``mode`` records whether the inputs
    were str, bytes, or plain sequences, so decoded output round-trips.
    """

    __slots__ = ("xw", "yw", "_xl", "_yl", "xlen", "ylen", "sigma", "chars",
                 "rank_of", "mode")

    def __init__(self, xw: np.ndarray, yw: np.ndarray, sigma: int,
                 chars: tuple, rank_of: dict, mode: str) -> None:
        self.xw = xw
        self.yw = yw
        # plain-list mirrors: scalar indexing is much cheaper than ndarray
        self._xl = xw.tolist()
        self._yl = yw.tolist()
        self.xlen = xw.shape[0] - 1
        self.ylen = yw.shape[0] - 1
        self.sigma = sigma
        self.chars = chars
        self.rank_of = rank_of
        self.mode = mode

    def x(self, i: int) -> int:
        """Rank at position i of the wrapped left string."""
        if not 1 <= i <= self.xlen:
            raise QueryDomainError(f"x position {i} not in 1..{self.xlen}")
        return self._xl[i]

    def y(self, j: int) -> int:
        """Rank at position j of the wrapped right string."""
        if not 1 <= j <= self.ylen:
            raise QueryDomainError(f"y position {j} not in 1..{self.ylen}")
        return self._yl[j]

    def wrap(self, interior: Iterable[int]) -> tuple[int, ...]:
        """Sentinel-wrapped copy of an interior rank sequence."""
        return (1, *interior, self.sigma)

    def encode(self, z) -> "tuple[int, ...] | None":
        """Interior ranks of z, or None when some character never occurs."""
        ranks = []
        for ch in z:
            r = self.rank_of.get(ch)
            if r is None:
                return None
            ranks.append(r)
        return tuple(ranks)

    def decode(self, ranks: Iterable[int]):
        """Original-character form of a sequence of interior ranks."""
        out = []
        for r in ranks:
            if not 2 <= r <= self.sigma - 1:
                raise InvalidRankError(f"rank {r} is not interior")
            out.append(self.chars[r - 2])
        if self.mode == "str":
            return "".join(out)
        if self.mode == "bytes":
            return bytes(out)
        return tuple(out)

    def decode_wrapped(self, zw: Sequence[int]):
        """decode() for a wrapped sequence; strips the two sentinels."""
        if len(zw) < 2 or zw[0] != 1 or zw[-1] != self.sigma:
            raise InvalidRankError("not a sentinel-wrapped sequence")
        return self.decode(zw[1:-1])

    def words(self) -> int:
        return 2 * (self.xlen + 1) + 2 * (self.ylen + 1)

    def __repr__(self) -> str:
        return (f"CanonicalPair(xlen={self.xlen}, ylen={self.ylen}, "
                f"sigma={self.sigma})")


def canonicalize(x, y) -> CanonicalPair:
    """Build the wrapped pair for two strings, byte strings, or sequences.

    The two inputs must agree in kind.  Interior ranks follow the natural
    order of the distinct characters occurring in either input, so rank
    order and character order coincide.
    """
    if isinstance(x, str) and isinstance(y, str):
        mode = "str"
    elif isinstance(x, (bytes, bytearray)) and isinstance(y, (bytes, bytearray)):
        mode = "bytes"
    elif isinstance(x, (str, bytes, bytearray)) or isinstance(y, (str, bytes, bytearray)):
        raise TypeError("x and y must be two strings, two byte strings, "
                        "or two plain sequences")
    else:
        mode = "seq"
    xs = list(x)
    ys = list(y)
    alphabet = sorted(set(xs) | set(ys))
    sigma = len(alphabet) + 2
    rank_of = {ch: r for r, ch in enumerate(alphabet, start=2)}
    return CanonicalPair(_wrap_ranks(xs, rank_of, sigma),
                         _wrap_ranks(ys, rank_of, sigma),
                         sigma, tuple(alphabet), rank_of, mode)


def _wrap_ranks(s: list, rank_of: dict, sigma: int) -> np.ndarray:
    arr = np.empty(len(s) + 3, dtype=np.int32)
    arr[0] = 0  # pad; positions are 1-based
    arr[1] = 1
    arr[2:-1] = [rank_of[ch] for ch in s]
    arr[-1] = sigma
    return arr


def _scan_forward(wl: list, n: int, z, sigma: int) -> int:
    h = 0
    for c in z:
        if not 1 <= c <= sigma:
            raise InvalidRankError(f"rank {c} not in 1..{sigma}")
        h += 1
        while h <= n and wl[h] != c:
            h += 1
        if h > n:
            return n + 1
    return h


def _query_forward(n: int, z, first, nxt) -> int:
    h = 0
    for c in z:
        h = first(c) if h == 0 else nxt(c, h)
        if h > n:
            return n + 1
    return h


def _scan_backward(wl: list, n: int, z, sigma: int) -> int:
    h = n + 1
    for c in reversed(z):
        if not 1 <= c <= sigma:
            raise InvalidRankError(f"rank {c} not in 1..{sigma}")
        h -= 1
        while h >= 1 and wl[h] != c:
            h -= 1
        if h < 1:
            return 0
    return h


def _query_backward(n: int, z, last, prv) -> int:
    h = n + 1
    for c in reversed(z):
        h = last(c) if h == n + 1 else prv(c, h)
        if h < 1:
            return 0
    return h


def pref_of(pair: CanonicalPair, z: Sequence[int], view=None) -> Match:
    """End of the leftmost embedding of wrapped rank sequence z.

    Coordinates are computed independently, one greedy pass per string; a
    coordinate where z does not embed is reported one past that string's
    end.  The empty sequence gives (0, 0), the identity start of the
    next-chain ``pref(Z + c) = next(c, pref(Z))``.
    """
    if view is None:
        i = _scan_forward(pair._xl, pair.xlen, z, pair.sigma)
        j = _scan_forward(pair._yl, pair.ylen, z, pair.sigma)
    else:
        i = _query_forward(pair.xlen, z, view.first_x, view.next_x)
        j = _query_forward(pair.ylen, z, view.first_y, view.next_y)
    return Match(i, j)


def suff_of(pair: CanonicalPair, z: Sequence[int], view=None) -> Match:
    """Start of the rightmost embedding of wrapped rank sequence z.

    Mirror of pref_of: failure markers are 0, the empty sequence gives
    (xlen + 1, ylen + 1), and ``suff(c + Z) = prev(c, suff(Z))``.
    z must support reversed().
    """
    if view is None:
        i = _scan_backward(pair._xl, pair.xlen, z, pair.sigma)
        j = _scan_backward(pair._yl, pair.ylen, z, pair.sigma)
    else:
        i = _query_backward(pair.xlen, z, view.last_x, view.prev_x)
        j = _query_backward(pair.ylen, z, view.last_y, view.prev_y)
    return Match(i, j)


def immediately_precedes(pair: CanonicalPair, u: Match, v: Match, view) -> bool:
    """True when u < v and no match lies strictly between them.

    Costs one next query per position in the open column gap (u.j, v.j).
    """
    if not match_lt(u, v):
        raise ValueError("u must be strictly below v in both coordinates")
    yl = pair._yl
    ui = u.i
    vi = v.i
    next_x = view.next_x
    for j in range(u.j + 1, v.j):
        if next_x(yl[j], ui) < vi:
            return False
    return True


def is_maximal(pair: CanonicalPair, z: Sequence[int], view) -> bool:
    """Whether interior rank sequence z is a maximal common subsequence.

    z is maximal iff at every cut of its wrapped form the greedy prefix
    end immediately precedes the greedy suffix start, i.e. no character
    occurs strictly inside both gap windows.  All four window edges move
    right monotonically over the cuts, so one shared sliding character
    count decides every cut in O(xlen + ylen) work overall.

    Raises NotCommonSubsequenceError when z is not shared by the pair.
    """
    sigma = pair.sigma
    for c in z:
        if not 2 <= c <= sigma - 1:
            raise InvalidRankError(f"rank {c} is not interior")
    zw = pair.wrap(z)
    m = len(zw)
    nx, ny = pair.xlen, pair.ylen
    xl, yl = pair._xl, pair._yl

    # rightmost embeddings of all wrapped suffixes; suffix_at[k] = suff(zw[k:])
    suffix_at = [Match(0, 0)] * m
    si, sj = nx + 1, ny + 1
    for k in range(m - 1, -1, -1):
        c = zw[k]
        si = view.last_x(c) if si == nx + 1 else (view.prev_x(c, si) if si > 1 else 0)
        sj = view.last_y(c) if sj == ny + 1 else (view.prev_y(c, sj) if sj > 1 else 0)
        if si == 0 or sj == 0:
            raise NotCommonSubsequenceError("z is not a common subsequence")
        suffix_at[k] = Match(si, sj)

    cnt_x = [0] * (sigma + 1)
    cnt_y = [0] * (sigma + 1)
    both = 0
    ax = bx = 1  # x positions currently counted: [ax, bx)
    ay = by = 1
    pi = pj = 0
    for k in range(1, m):
        c = zw[k - 1]
        pi = view.first_x(c) if pi == 0 else view.next_x(c, pi)
        pj = view.first_y(c) if pj == 0 else view.next_y(c, pj)
        if pi > nx or pj > ny:
            raise InternalConsistencyError("prefix chain failed on a shared string")
        sk = suffix_at[k]
        # grow both right edges first; the left edges never pass them
        while bx < sk.i:
            r = xl[bx]
            cnt_x[r] += 1
            if cnt_x[r] == 1 and cnt_y[r] > 0:
                both += 1
            bx += 1
        while ax <= pi:
            r = xl[ax]
            cnt_x[r] -= 1
            if cnt_x[r] == 0 and cnt_y[r] > 0:
                both -= 1
            ax += 1
        while by < sk.j:
            r = yl[by]
            cnt_y[r] += 1
            if cnt_y[r] == 1 and cnt_x[r] > 0:
                both += 1
            by += 1
        while ay <= pj:
            r = yl[ay]
            cnt_y[r] -= 1
            if cnt_y[r] == 0 and cnt_x[r] > 0:
                both -= 1
            ay += 1
        if both:
            return False
    return True
