"""Depth-first driver that grows maximal common subsequences one rank
at a time, emitting them in lexicographic rank order.

The driver is provider-agnostic: any callable mapping a frame's
(pref, safe) box to the prominent extension witnesses can back it.
An optional validator re-derives every witness from first principles
and enforces the per-frame extension-count and stack-size budgets.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable, Iterator, Optional

from .core import (CanonicalPair, InternalConsistencyError, Match,
                   OpCounter, immediately_precedes, match_lneq, match_lt)
from .nextprev import NextPrevView

__all__ = [
    "ExtProvider",
    "ExtValidator",
    "PrefixFrame",
    "run_basic",
    "update_safe",
    "walk_basic",
]

ExtProvider = Callable[[Match, Match], Iterable[tuple]]

DEBUG_ENV = "MCS_ENUM_DEBUG_VALIDATE"


class PrefixFrame:
    """One live prefix character: its rank, greedy embedding end, safe
    bound (None on the closing-sentinel frame), and untried sibling
    ranks stored descending so list.pop() yields the least."""

    __slots__ = ("char", "pref", "safe", "alt")

    def __init__(self, char: int, pref: Match, safe: Optional[Match],
                 alt: list):
        self.char = char
        self.pref = pref
        self.safe = safe
        self.alt = alt

    def __repr__(self):  # debug aid
        return (f"PrefixFrame(char={self.char}, pref={tuple(self.pref)}, "
                f"safe={self.safe and tuple(self.safe)}, "
                f"alt={[r for r, _ in self.alt]})")


def update_safe(c: int, pref: Match, pref_c: Match, safe: Match,
                view: NextPrevView) -> Match:
    """safe of the extended prefix from the current frame's box.

    Each coordinate is the least of three sources: the virtual end, the
    c-successors of first occurrences inside the open pref..pref_c gap
    on the other string, and the c-successor of the old safe coordinate.
    Cost is linear in the anti-diagonal advance of pref_c over pref.
    """
    pair = view.pair
    nx, ny = pair.xlen, pair.ylen
    xl, yl = pair._xl, pair._yl

    best_i = nx + 1
    for j in range(pref.j + 1, pref_c.j):
        h = view.next_x(yl[j], pref.i)
        if h <= nx:
            t = view.next_x(c, h)
            if t < best_i:
                best_i = t
    if safe.i <= nx:
        t = view.next_x(c, safe.i)
        if t < best_i:
            best_i = t

    best_j = ny + 1
    for i in range(pref.i + 1, pref_c.i):
        h = view.next_y(xl[i], pref.j)
        if h <= ny:
            t = view.next_y(c, h)
            if t < best_j:
                best_j = t
    if safe.j <= ny:
        t = view.next_y(c, safe.j)
        if t < best_j:
            best_j = t

    return Match(best_i, best_j)


class ExtValidator:
    """Debug checker for provider output and driver budgets.

    Re-tests every returned witness against the definitional suff-match
    closure, the frame box, and immediate precedence; verifies pairwise
    non-domination, the extension-count bound (strictly below the
    anti-diagonal advance of every extension), and the total stored
    alternative count across the stack.
    """

    def __init__(self, pair: CanonicalPair, view: NextPrevView,
                 cap: int = 1_000_000_000):
        self.pair = pair
        self.view = view
        self.cap = cap
        self._suff = None

    def _suff_set(self):
        if self._suff is None:
            from .bruteforce import suff_matches_bruteforce
            self._suff = suff_matches_bruteforce(self.pair, self.cap)
        return self._suff

    def check_ext(self, pref: Match, safe: Match, items: list) -> None:
        suff = self._suff_set()
        seen = set()
        for rank, v in items:
            if (rank, v) in seen:
                raise InternalConsistencyError(
                    f"duplicate witness {tuple(v)} for rank {rank}")
            seen.add((rank, v))
            if self.pair._xl[v.i] != rank or self.pair._yl[v.j] != rank:
                raise InternalConsistencyError(
                    f"witness {tuple(v)} does not carry rank {rank}")
            if v not in suff:
                raise InternalConsistencyError(
                    f"witness {tuple(v)} is not a suff-match")
            if not (match_lt(pref, v) and v.i <= safe.i and v.j <= safe.j):
                raise InternalConsistencyError(
                    f"witness {tuple(v)} outside box "
                    f"{tuple(pref)}..{tuple(safe)}")
            if not immediately_precedes(self.pair, pref, v, self.view):
                raise InternalConsistencyError(
                    f"pref {tuple(pref)} does not immediately precede "
                    f"witness {tuple(v)}")
        for _, v1 in items:
            for _, v2 in items:
                if match_lneq(v1, v2):
                    raise InternalConsistencyError(
                        f"dominated witness {tuple(v2)} returned "
                        f"alongside {tuple(v1)}")

    def check_budget(self, pref: Match, ranks: list) -> None:
        for rank in ranks:
            pref_c = self.view.next_match(rank, pref)
            if not len(ranks) < pref_c.a - pref.a:
                raise InternalConsistencyError(
                    f"{len(ranks)} extensions but advance of rank {rank} "
                    f"is only {pref_c.a - pref.a}")

    def check_stack(self, stack: list) -> None:
        total = sum(len(f.alt) for f in stack)
        if total > self.pair.xlen + self.pair.ylen:
            raise InternalConsistencyError(
                f"stored alternatives {total} exceed "
                f"{self.pair.xlen + self.pair.ylen}")


def walk_basic(pair: CanonicalPair, view: NextPrevView,
               provider: ExtProvider, *,
               validate: Optional[bool] = None,
               trace: Optional[Callable] = None,
               counter: Optional[OpCounter] = None) -> Iterator[tuple]:
    """Yield every MCS of the pair as a wrapped rank tuple, in
    lexicographic rank order, each exactly once.

    The stack holds one frame per prefix character, the root being the
    opening sentinel with a fully virtual safe bound.  A frame whose
    rank is the closing sentinel is a complete MCS: emit, pop exhausted
    frames, and swing the deepest unexhausted frame to its next sibling
    rank.  Any other frame is extended through the provider with the
    least extensible rank, the rest parked as (rank, witness) pairs.

    validate=None consults the MCS_ENUM_DEBUG_VALIDATE environment
    variable; trace, when given, receives event tuples ("emit", zw),
    ("ext", prefix_ranks, ext_ranks), ("push", rank), ("pop",) and
    ("replace", old_rank, new_rank).
    """
    if validate is None:
        validate = os.environ.get(DEBUG_ENV, "") == "1"
    checker = ExtValidator(pair, view) if validate else None
    sigma = pair.sigma

    root = PrefixFrame(1, Match(1, 1),
                       Match(pair.xlen + 1, pair.ylen + 1), [])
    stack = [root]
    while stack:
        top = stack[-1]
        if top.char == sigma:
            zw = tuple(f.char for f in stack)
            if counter is not None:
                counter.bump(len(stack))
            if trace is not None:
                trace(("emit", zw))
            yield zw
            while stack and not stack[-1].alt:
                stack.pop()
                if trace is not None:
                    trace(("pop",))
            if not stack:
                return
            top = stack[-1]
            parent = stack[-2]
            rank, _wit = top.alt.pop()
            pref_c = view.next_match(rank, parent.pref)
            safe_c = (None if rank == sigma else
                      update_safe(rank, parent.pref, pref_c, parent.safe,
                                  view))
            old = top.char
            stack[-1] = PrefixFrame(rank, pref_c, safe_c, top.alt)
            if trace is not None:
                trace(("replace", old, rank))
        else:
            items = sorted(provider(top.pref, top.safe),
                           key=lambda item: item[0])
            picked = []
            taken = set()
            for rank, v in items:
                if rank not in taken:
                    taken.add(rank)
                    picked.append((rank, v))
            if checker is not None:
                checker.check_ext(top.pref, top.safe, items)
                checker.check_budget(top.pref, [r for r, _ in picked])
            if trace is not None:
                trace(("ext", tuple(f.char for f in stack),
                       tuple(r for r, _ in picked)))
            if not picked:
                raise InternalConsistencyError(
                    "live prefix reported no extensible rank")
            rank, _wit = picked[0]
            alt = picked[:0:-1]
            pref_c = view.next_match(rank, top.pref)
            safe_c = (None if rank == sigma else
                      update_safe(rank, top.pref, pref_c, top.safe, view))
            stack.append(PrefixFrame(rank, pref_c, safe_c, alt))
            if trace is not None:
                trace(("push", rank))
            if checker is not None:
                checker.check_stack(stack)


def run_basic(pair: CanonicalPair, view: NextPrevView,
              provider: ExtProvider, sink: Callable[[tuple], None], *,
              validate: Optional[bool] = None,
              trace: Optional[Callable] = None,
              counter: Optional[OpCounter] = None) -> int:
    """Drive walk_basic to completion, feeding each wrapped MCS to sink.
    Returns the number of emissions."""
    count = 0
    for zw in walk_basic(pair, view, provider, validate=validate,
                         trace=trace, counter=counter):
        sink(zw)
        count += 1
    return count
