"""Benchmark plumbing: deterministic input generators, per-algorithm
enumerator assembly with a space estimate, and timing rows.

Timing columns vary run to run; every other column is a pure function
of the inputs, which is what the CSV determinism contract promises.
"""

from __future__ import annotations

import random
import string
import time
from typing import Optional

import numpy as np

from .core import CanonicalPair, OpCounter, canonicalize
from .mcs_graph import DEFAULT_MAX_VERTICES, build_graph
from .nextprev import make_view
from .prefixext import walk_basic
from .witness_rows import build_d221, make_provider_221
from .witness_thresholds import build_d211, make_provider_211

__all__ = ["ALGOS", "build_enumerator", "delays_in_ops", "generate_pair",
           "run_once"]

ALGOS = ("enum331", "enum221", "enum211")

CSV_HEADER = ("algo,rep,n,sigma,preprocess_ns,peak_words,"
              "delay_p50_ns,delay_p95_ns,delay_max_ns,outputs_count")


def generate_pair(kind: str, n: int, sigma: int, seed: int):
    """Two deterministic test strings over the first sigma letters."""
    if not 1 <= sigma <= 26:
        raise ValueError("sigma must be between 1 and 26")
    letters = string.ascii_lowercase[:sigma]
    if kind == "random":
        rng = random.Random(seed)
        x = "".join(rng.choice(letters) for _ in range(n))
        y = "".join(rng.choice(letters) for _ in range(n))
    elif kind == "periodic":
        shift = seed % sigma
        x = "".join(letters[k % sigma] for k in range(n))
        y = "".join(letters[(k + shift + 1) % sigma] for k in range(n))
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return x, y


def build_enumerator(pair: CanonicalPair, algo: str,
                     counter: Optional[OpCounter] = None,
                     max_graph_vertices: int = DEFAULT_MAX_VERTICES,
                     validate: Optional[bool] = False):
    """(wrapped-output iterator, peak words estimate) for one algorithm.

    The word count sums the pair, the query view, the algorithm's own
    structure, and a driver stack allowance of 6(|xw|+|yw|), which
    dominates the frame list plus stored alternatives.
    """
    stack_allowance = 6 * (pair.xlen + pair.ylen)
    if algo == "enum221":
        view = make_view(pair, backing="table", counter=counter)
        d = build_d221(pair, view, counter=counter)
        it = walk_basic(pair, view, make_provider_221(d),
                        counter=counter, validate=validate)
        words = pair.words() + view.words() + d.words() + stack_allowance
    elif algo == "enum211":
        view = make_view(pair, backing="index", counter=counter)
        d = build_d211(pair, counter=counter)
        it = walk_basic(pair, view, make_provider_211(d, view),
                        counter=counter, validate=validate)
        words = pair.words() + view.words() + d.words() + stack_allowance
    elif algo == "enum331":
        view = make_view(pair, backing="table", counter=counter)
        g = build_graph(pair, view, max_vertices=max_graph_vertices)
        it = g.iter_paths()
        words = pair.words() + view.words() + g.words() + stack_allowance
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return it, words


def run_once(x, y, algo: str, *, limit: Optional[int] = 1000, rep: int = 0,
             n: Optional[int] = None, sigma: Optional[int] = None,
             max_graph_vertices: int = DEFAULT_MAX_VERTICES) -> dict:
    """One timed enumeration, reported as a CSV row dict."""
    pair = canonicalize(x, y)
    t0 = time.perf_counter_ns()
    it, peak_words = build_enumerator(
        pair, algo, max_graph_vertices=max_graph_vertices)
    t1 = time.perf_counter_ns()
    delays = []
    count = 0
    last = t1
    for _zw in it:
        now = time.perf_counter_ns()
        delays.append(now - last)
        last = now
        count += 1
        if limit is not None and count >= limit:
            break
    if delays:
        p50 = int(np.percentile(delays, 50))
        p95 = int(np.percentile(delays, 95))
        mx = max(delays)
    else:
        p50 = p95 = mx = 0
    return {
        "algo": algo,
        "rep": rep,
        "n": n if n is not None else max(len(x), len(y)),
        "sigma": sigma if sigma is not None else pair.sigma - 2,
        "preprocess_ns": t1 - t0,
        "peak_words": peak_words,
        "delay_p50_ns": p50,
        "delay_p95_ns": p95,
        "delay_max_ns": mx,
        "outputs_count": count,
    }


def delays_in_ops(x, y, algo: str = "enum221",
                  limit: Optional[int] = None) -> list:
    """Per-output deltas of the shared operation counter; exact and
    machine-independent, unlike wall-clock delays."""
    pair = canonicalize(x, y)
    counter = OpCounter()
    it, _words = build_enumerator(pair, algo, counter=counter)
    out = []
    prev = counter.ops
    for _zw in it:
        out.append(counter.ops - prev)
        prev = counter.ops
        if limit is not None and len(out) >= limit:
            break
    return out


def format_row(row: dict) -> str:
    return ",".join(str(row[k]) for k in CSV_HEADER.split(","))
