"""Per-n omnitonal thresholds by exhaustive search, and the closed-form star bounds.

For a pattern graph G and host order n, a colouring of K_n is *bad* when it
misses some target: a tone (r, b) at tone level, a pattern class at class
level.  The extremal value is the largest ``min(|R|, |B|)`` over bad
colourings; any colouring whose minority colour class is larger covers every
target.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Literal

import numpy as np

from . import _kernel
from .canonical import canonical_colouring, canonical_size_for
from .errors import DomainError, SizeLimitError
from .graph import ColouredHost, Graph, PatternColouring
from .patterns import enumerate_pattern_classes

Level = Literal["tone", "class"]

EDGE_GUARD = 30
# colourings are int64 bit masks
HARD_EDGE_LIMIT = 62
SHARD_BITS = 6


def default_workers() -> int:
    env = os.environ.get("TONAL_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def ot_star_formula(n: int, k: int) -> int:
    """Known value of the tone threshold of ``K_{1,k}`` for ``n >= 4k``."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if n < 4 * k:
        raise DomainError(f"formula holds only for n >= 4k; got n={n}, k={k}")
    if k <= 3:
        return (k - 1) * n // 2
    return (k - 2) * n - k * (k - 3) // 2 - 1


def tot_star_forest_bound(n: int, part_sizes: list[int]) -> int:
    """Upper bound ``(sum p + q - 2) n`` on the class threshold of a star forest."""
    if not part_sizes or any(p < 1 for p in part_sizes):
        raise DomainError(f"part sizes must be positive and non-empty, got {part_sizes}")
    if any(a < b for a, b in zip(part_sizes, part_sizes[1:])):
        raise DomainError(f"part sizes must be non-increasing, got {part_sizes}")
    s, q = sum(part_sizes), len(part_sizes)
    if n < 4 * (s + q - 1):
        raise DomainError(f"bound needs n >= 4(p_1+...+p_q+q-1) = {4 * (s + q - 1)}, got n={n}")
    return (s + q - 2) * n


def edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def placed_copies(n: int, patterns: list[PatternColouring]) -> tuple[np.ndarray, np.ndarray]:
    """Every placement of the given patterns in ``K_n`` as (red mask, blue mask) pairs."""
    index = edge_index(n)
    seen: dict[tuple[int, int], None] = {}
    for pc in patterns:
        g = pc.graph
        active = [v for v in range(g.n) if g.adjacency[v]]
        pos = {v: i for i, v in enumerate(active)}
        edges = [(pos[u], pos[v], (u, v) in pc.red) for u, v in g.edge_list]
        for img in permutations(range(n), len(active)):
            rm = bm = 0
            for a, b, is_red in edges:
                x, y = img[a], img[b]
                bit = 1 << index[(x, y) if x < y else (y, x)]
                if is_red:
                    rm |= bit
                else:
                    bm |= bit
            seen[(rm, bm)] = None
    pairs = list(seen)
    return (np.array([p[0] for p in pairs], dtype=np.int64),
            np.array([p[1] for p in pairs], dtype=np.int64))


@dataclass(frozen=True)
class Targets:
    labels: list
    red: np.ndarray
    blue: np.ndarray
    offsets: np.ndarray

    def first_missing(self, mask: int) -> int:
        return int(_kernel.first_missing(np.int64(mask), self.red, self.blue, self.offsets))


def build_targets(n: int, g: Graph, level: Level) -> Targets:
    classes = enumerate_pattern_classes(g)
    groups: list[tuple[object, list[PatternColouring]]] = []
    if level == "tone":
        for r in range(g.e, -1, -1):
            groups.append(((r, g.e - r), [c.representative for c in classes if c.tone[0] == r]))
    elif level == "class":
        groups = [(c.id, [c.representative]) for c in classes]
    else:
        raise ValueError(f"unknown level {level!r}")
    reds, blues, offsets = [], [], [0]
    for _, pats in groups:
        rm, bm = placed_copies(n, pats)
        reds.append(rm)
        blues.append(bm)
        offsets.append(offsets[-1] + len(rm))
    return Targets([lab for lab, _ in groups], np.concatenate(reds), np.concatenate(blues),
                   np.array(offsets, dtype=np.int64))


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    level: Level
    value: int
    witness: ColouredHost
    saturated: bool
    missing: object
    search_space: int


def _check(n: int, g: Graph, force: bool) -> int:
    if g.e < 1:
        raise DomainError("pattern graph must have at least one edge")
    if n < g.n:
        raise DomainError(f"host order {n} is smaller than the pattern's {g.n} vertices")
    n_edges = n * (n - 1) // 2
    if n_edges > HARD_EDGE_LIMIT:
        raise SizeLimitError(f"K_{n} has {n_edges} edges; masks are limited to {HARD_EDGE_LIMIT}")
    if n_edges > EDGE_GUARD and not force:
        raise SizeLimitError(f"K_{n} has {n_edges} > {EDGE_GUARD} edges; pass force=True to enumerate")
    return n_edges


def extremal(n: int, g: Graph, level: Level, *, force: bool = False, prune: bool = True,
             warm_start: bool = True, workers: int | None = None) -> ExtremalResult:
    """Exhaustive maximum of ``min(|R|, |B|)`` over colourings of ``K_n`` that miss a target.

    With *prune*, the last edge is fixed red: swapping both colours maps bad
    colourings to bad colourings with the same minimum, because the target
    set is closed under colour swap.  With *warm_start*, a balanced
    red-clique colouring (when one exists for *n*) is tried first and kept
    on ties.  Shards of the counter range are searched independently and
    merged by value, then lowest shard, so the result does not depend on
    *workers*.
    """
    n_edges = _check(n, g, force)
    targets = build_targets(n, g, level)

    best, witness = -1, -1
    if warm_start and (size := canonical_size_for(n)) is not None:
        mask = canonical_colouring(size).edge_mask
        if targets.first_missing(mask) >= 0:
            best, witness = n_edges // 2, mask

    free = n_edges - 1 if prune else n_edges
    fixed = 1 << (n_edges - 1) if prune else 0
    shard_bits = min(SHARD_BITS, free)
    span = 1 << (free - shard_bits)
    bounds = [(s * span, (s + 1) * span) for s in range(1 << shard_bits)]

    def run(b: tuple[int, int]) -> tuple[int, int]:
        v, w = _kernel.scan(np.int64(b[0]), np.int64(b[1]), np.int64(fixed), np.int64(n_edges),
                            targets.red, targets.blue, targets.offsets, np.int64(best))
        return int(v), int(w)

    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, bounds))
    else:
        results = [run(b) for b in bounds]
    for v, w in results:
        if w >= 0 and v > best:
            best, witness = v, w

    host = ColouredHost.from_edge_mask(n, witness)
    miss = targets.labels[targets.first_missing(witness)]
    return ExtremalResult(n, level, best, host, best == n_edges // 2, miss, 1 << free)


def ot_exact(n: int, g: Graph, **kw) -> ExtremalResult:
    return extremal(n, g, "tone", **kw)


def tot_exact(n: int, g: Graph, **kw) -> ExtremalResult:
    return extremal(n, g, "class", **kw)
