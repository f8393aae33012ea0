"""The complete-enumeration graph (enum331): vertices pair up adjacent
matches of an embedding, edges chain compatible pairs, and every
source-to-sink path spells exactly one MCS.

Also hosts the two derived queries that ride on the same DAG: the
longest MCS that is not longest overall, and the MCS pinning the most
cut positions to the same match in both greedy directions.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from .core import CanonicalPair, Match, ResourceLimitError
from .nextprev import NextPrevView

__all__ = [
    "McsGraph",
    "build_graph",
    "export_dot",
    "find_edges",
    "most_stable",
    "quasi_lcs",
]

DEFAULT_MAX_VERTICES = 50_000_000


def find_edges(u: Match, pair: CanonicalPair, view: NextPrevView) -> list:
    """All matches v that u immediately precedes, in column order.

    Scans columns right of u keeping a shrinking row bound: every
    occurrence of the column's rank in (u.i, bound] is an answer, and
    the lowest one becomes the new bound.  Each emission either lowers
    the bound or is the first in its column, so output and work stay
    linear in the two string lengths.
    """
    nx, ny = pair.xlen, pair.ylen
    yl = pair._yl
    out = []
    bound = nx
    for j in range(u.j + 1, ny + 1):
        c = yl[j]
        i = view.floor_x(c, bound)
        while i > u.i:
            out.append(Match(i, j))
            bound = i
            i = view.prev_x(c, i)
    return out


def _left_of(key: tuple) -> Match:
    """Reconstruct a vertex's left match from its storage key.

    The left match shares a coordinate with the right one, so the key's
    diagonal pins it: (i, j, d) with du = j - i gives (i + du - d, j)
    when d <= du and (i, j + d - du) otherwise.
    """
    i, j, d = key
    du = j - i
    if d <= du:
        return Match(i + (du - d), j)
    return Match(i, j + (d - du))


class McsGraph:
    """Pruned enumeration DAG with deterministic adjacency order."""

    __slots__ = ("pair", "adj", "source", "sink")

    def __init__(self, pair: CanonicalPair, adj: dict,
                 source: tuple, sink: tuple):
        self.pair = pair
        self.adj = adj
        self.source = source
        self.sink = sink

    def u_of(self, key: tuple) -> Match:
        return Match(key[0], key[1])

    def left_of(self, key: tuple) -> Match:
        return _left_of(key)

    def char_of(self, key: tuple) -> int:
        return self.pair._xl[key[0]]

    def is_diagonal(self, key: tuple) -> bool:
        return key[2] == key[1] - key[0]

    def vertices(self) -> list:
        return sorted(self.adj)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.adj.values())

    def words(self) -> int:
        return 3 * self.vertex_count + 3 * self.edge_count

    def _topo_desc(self) -> list:
        # right matches strictly advance along edges, so their
        # anti-diagonal is a topological grading
        return sorted(self.adj, key=lambda k: (-(k[0] + k[1]), k))

    def iter_paths(self) -> Iterator[tuple]:
        """Every source-to-sink path as a wrapped rank tuple, in
        adjacency (branch-index) order, each exactly once."""
        adj = self.adj
        sink = self.sink
        char_of = self.char_of
        path = [self.source]
        branch = [0]
        chars = [char_of(self.source)]
        while path:
            key = path[-1]
            if key == sink:
                yield tuple(chars)
                path.pop()
                branch.pop()
                chars.pop()
                continue
            succ = adj[key]
            b = branch[-1]
            if b < len(succ):
                branch[-1] = b + 1
                nxt = succ[b]
                path.append(nxt)
                branch.append(0)
                chars.append(char_of(nxt))
            else:
                path.pop()
                branch.pop()
                chars.pop()

    def count_paths(self) -> int:
        """Number of source-to-sink paths (= number of distinct MCSs)."""
        counts: dict = {self.sink: 1}
        for key in self._topo_desc():
            if key == self.sink:
                continue
            counts[key] = sum(counts[h] for h in self.adj[key])
        return counts.get(self.source, 0)


def build_graph(pair: CanonicalPair, view: NextPrevView,
                max_vertices: int = DEFAULT_MAX_VERTICES) -> McsGraph:
    """Construct and prune the enumeration DAG.

    For every match u and every v it immediately precedes, one edge
    links (prev(c_u, v), u) to (v, next(c_v, u)).  Two sweeps keep only
    edges on source-to-sink paths: forward reachability from the
    source, then backward reachability from the sink over the restricted
    reverse graph.  Vertex keys beyond max_vertices raise.
    """
    nx, ny = pair.xlen, pair.ylen
    xl, yl = pair._xl, pair._yl
    source = (1, 1, 0)
    sink = (nx, ny, ny - nx)

    occ_x = [[] for _ in range(pair.sigma + 1)]
    for i in range(1, nx + 1):
        occ_x[xl[i]].append(i)
    occ_y = [[] for _ in range(pair.sigma + 1)]
    for j in range(1, ny + 1):
        occ_y[yl[j]].append(j)

    adj: dict = {}
    vcount = 0
    for cu in range(1, pair.sigma + 1):
        for i in occ_x[cu]:
            for j in occ_y[cu]:
                u = Match(i, j)
                targets = find_edges(u, pair, view)
                if not targets:
                    continue
                tail_base_i = i
                tail_base_j = j
                for v in targets:
                    ti = view.prev_x(cu, v.i)
                    tj = view.prev_y(cu, v.j)
                    tail = (tail_base_i, tail_base_j, tj - ti)
                    cv = xl[v.i]
                    hi = view.next_x(cv, i)
                    hj = view.next_y(cv, j)
                    head = (hi, hj, v.j - v.i)
                    bucket = adj.get(tail)
                    if bucket is None:
                        bucket = adj[tail] = []
                        vcount += 1
                    bucket.append(head)
                    if head not in adj:
                        adj[head] = []
                        vcount += 1
                    if vcount > max_vertices:
                        raise ResourceLimitError(
                            f"graph exceeds {max_vertices} vertices")

    fwd = {source} if source in adj else set()
    queue = deque(fwd)
    while queue:
        k = queue.popleft()
        for h in adj[k]:
            if h not in fwd:
                fwd.add(h)
                queue.append(h)

    radj: dict = {}
    for t in fwd:
        for h in adj[t]:
            radj.setdefault(h, []).append(t)
    back = {sink} if sink in fwd else set()
    queue = deque(back)
    while queue:
        k = queue.popleft()
        for t in radj.get(k, ()):
            if t not in back:
                back.add(t)
                queue.append(t)

    pruned: dict = {}
    for t in fwd & back:
        kept = [h for h in adj[t] if h in back]
        if kept or t == sink:
            pruned[t] = kept
    for t, heads in pruned.items():
        heads.sort(key=lambda h: (_left_of(h).j, h[0], h[2]))
    return McsGraph(pair, pruned, source, sink)


def quasi_lcs(g: McsGraph):
    """(interior length, stream) of the longest MCSs that are not the
    longest overall; (None, empty stream) when all MCSs tie.

    Per vertex the two largest distinct path vertex counts down to the
    sink are kept; any path totalling the second-largest root value
    stays inside these pairs at every step, so a guided walk emits
    exactly those paths.
    """
    tops: dict = {g.sink: (1, None)}
    for key in g._topo_desc():
        if key == g.sink:
            continue
        best1 = best2 = None
        for h in g.adj[key]:
            for t in tops[h]:
                if t is None:
                    continue
                c = t + 1
                if best1 is None or c > best1:
                    if best1 != c:
                        best2 = best1
                    best1 = c
                elif c != best1 and (best2 is None or c > best2):
                    best2 = c
        tops[key] = (best1, best2)
    t2 = tops[g.source][1]
    if t2 is None:
        return None, iter(())
    return t2 - 2, _paths_with_total(g, tops, t2)


def _paths_with_total(g: McsGraph, tops: dict, total: int) -> Iterator[tuple]:
    adj = g.adj
    char_of = g.char_of
    path = [g.source]
    branch = [0]
    rem = [total]
    chars = [char_of(g.source)]
    while path:
        key = path[-1]
        if key == g.sink:
            yield tuple(chars)
            path.pop()
            branch.pop()
            rem.pop()
            chars.pop()
            continue
        succ = adj[key]
        b = branch[-1]
        want = rem[-1] - 1
        advanced = False
        while b < len(succ):
            h = succ[b]
            b += 1
            t = tops[h]
            if t[0] == want or t[1] == want:
                branch[-1] = b
                path.append(h)
                branch.append(0)
                rem.append(want)
                chars.append(char_of(h))
                advanced = True
                break
        if not advanced:
            path.pop()
            branch.pop()
            rem.pop()
            chars.pop()


def most_stable(g: McsGraph):
    """(score, stream) of the MCSs maximizing the number of diagonal
    vertices along their path; sentinel vertices count, so the score of
    z on identical strings is len(z) + 2."""
    best: dict = {g.sink: 1}
    for key in g._topo_desc():
        if key == g.sink:
            continue
        d = 1 if g.is_diagonal(key) else 0
        best[key] = d + max(best[h] for h in g.adj[key])
    return best[g.source], _paths_argmax(g, best)


def _paths_argmax(g: McsGraph, best: dict) -> Iterator[tuple]:
    adj = g.adj
    char_of = g.char_of
    path = [g.source]
    branch = [0]
    chars = [char_of(g.source)]
    while path:
        key = path[-1]
        if key == g.sink:
            yield tuple(chars)
            path.pop()
            branch.pop()
            chars.pop()
            continue
        succ = adj[key]
        b = branch[-1]
        d = 1 if g.is_diagonal(key) else 0
        want = best[key] - d
        advanced = False
        while b < len(succ):
            h = succ[b]
            b += 1
            if best[h] == want:
                branch[-1] = b
                path.append(h)
                branch.append(0)
                chars.append(char_of(h))
                advanced = True
                break
        if not advanced:
            path.pop()
            branch.pop()
            chars.pop()


def _node_id(key: tuple) -> str:
    i, j, d = key
    return f"n{i}_{j}_{'m' if d < 0 else 'p'}{abs(d)}"


def export_dot(g: McsGraph, writer) -> None:
    """Write the graph as deterministic DOT text."""
    writer.write("digraph allmcs {\n")
    for key in g.vertices():
        v = g.left_of(key)
        u = g.u_of(key)
        writer.write(f"  {_node_id(key)} "
                     f"[label=\"(({v.i},{v.j}),({u.i},{u.j}))\"];\n")
    for key in g.vertices():
        for h in g.adj[key]:
            writer.write(f"  {_node_id(key)} -> {_node_id(h)};\n")
    writer.write("}\n")
