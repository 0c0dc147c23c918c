"""Colour-exact (non-induced) copies of coloured patterns inside 2-coloured hosts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .errors import DomainError, TheoremViolation
from .graph import ColouredHost, Graph, PatternColouring, iter_bits
from .patterns import PatternClass, enumerate_pattern_classes, is_star_forest, star_parts


@dataclass(frozen=True)
class Embedding:
    map: tuple[int, ...]

    def is_valid(self, host: ColouredHost, pattern: PatternColouring) -> bool:
        m = self.map
        if len(m) != pattern.graph.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= h < host.n for h in m):
            return False
        for u, v in pattern.graph.edges:
            rows = host.red if (u, v) in pattern.red else host.blue
            if not rows[m[u]] >> m[v] & 1:
                return False
        return True


def _check_sizes(host: ColouredHost, n_pattern: int) -> None:
    if n_pattern > host.n:
        raise ValueError(f"pattern has {n_pattern} vertices but host only {host.n}")


def find_embedding(host: ColouredHost, pattern: PatternColouring) -> Embedding | None:
    """Backtracking search for a colour-exact copy of *pattern* in *host*.

    Pattern vertices are placed in decreasing-degree order.  A host vertex is
    a candidate only if it has the right colour to every placed neighbour and
    enough unused red and blue neighbours for the unplaced ones.
    """
    g = pattern.graph
    _check_sizes(host, g.n)
    pred, pblue = pattern.red_adjacency, pattern.blue_adjacency
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    hred, hblue = host.red, host.blue
    image = [-1] * g.n
    all_host = (1 << host.n) - 1

    def extend(k: int, placed: int, unused: int) -> bool:
        if k == g.n:
            return True
        v = order[k]
        cand = unused
        for u in iter_bits(pred[v] & placed):
            cand &= hred[image[u]]
        for u in iter_bits(pblue[v] & placed):
            cand &= hblue[image[u]]
        need_r = (pred[v] & ~placed).bit_count()
        need_b = (pblue[v] & ~placed).bit_count()
        for h in iter_bits(cand):
            rest = unused & ~(1 << h)
            if (hred[h] & rest).bit_count() < need_r or (hblue[h] & rest).bit_count() < need_b:
                continue
            image[v] = h
            if extend(k + 1, placed | 1 << v, rest):
                return True
        image[v] = -1
        return False

    if not extend(0, 0, all_host):
        return None
    emb = Embedding(tuple(image))
    assert emb.is_valid(host, pattern)
    return emb


@dataclass
class CoverageReport:
    level: Literal["tone", "class"]
    targets: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    witnessed: dict = field(default_factory=dict)

    @property
    def covered(self) -> bool:
        return not self.missing


def _coverage_args(host: ColouredHost, g: Graph) -> None:
    if g.e < 1:
        raise ValueError("coverage needs a pattern graph with at least one edge")
    _check_sizes(host, g.n)


def tone_coverage(host: ColouredHost, g: Graph, classes: list[PatternClass] | None = None) -> CoverageReport:
    _coverage_args(host, g)
    classes = enumerate_pattern_classes(g) if classes is None else classes
    report = CoverageReport("tone")
    for r in range(g.e, -1, -1):
        tone = (r, g.e - r)
        report.targets.append(tone)
        for pc in classes:
            if pc.tone != tone:
                continue
            emb = find_embedding(host, pc.representative)
            if emb is not None:
                report.witnessed[tone] = emb
                break
        else:
            report.missing.append(tone)
    return report


def class_coverage(host: ColouredHost, g: Graph, classes: list[PatternClass] | None = None) -> CoverageReport:
    _coverage_args(host, g)
    classes = enumerate_pattern_classes(g) if classes is None else classes
    report = CoverageReport("class")
    for pc in classes:
        report.targets.append(pc.id)
        emb = find_embedding(host, pc.representative)
        if emb is None:
            report.missing.append(pc.id)
        else:
            report.witnessed[pc.id] = emb
    return report


def _min_count(host: ColouredHost, keep: int) -> int:
    reds = sum((host.red[v] & keep).bit_count() for v in iter_bits(keep)) // 2
    k = keep.bit_count()
    return min(reds, k * (k - 1) // 2 - reds)


def star_forest_preconditions(n: int, min_count: int, parts: list[int]) -> list[str]:
    """Failed inequalities of the greedy embedding, as readable strings."""
    s, q = sum(parts), len(parts)
    failed = []
    if n < 4 * (s + q - 1):
        failed.append(f"n >= 4(sum p + q - 1): {n} < {4 * (s + q - 1)}")
    if not min_count > (s + q - 2) * n:
        failed.append(f"min(|R|,|B|) > (sum p + q - 2) n: {min_count} <= {(s + q - 2) * n}")
    return failed


def greedy_star_forest_embed(host: ColouredHost, target: PatternColouring) -> Embedding:
    """Embed a coloured star forest star by star, smallest star first.

    Each star takes the feasible host centre maximising
    ``min(red degree, blue degree)`` in the residual host, then the
    lowest-indexed red and blue neighbours as leaves; its vertices are then
    deleted.  After every deletion the residual host is checked against the
    inequalities the remaining stars need.
    """
    g = target.graph
    if not is_star_forest(g):
        raise ValueError("target graph is not a star forest")
    stars = star_parts(g)
    if not stars:
        raise ValueError("target has no edges")
    stars.sort(key=lambda st: (-len(st[1]), st[0]))
    parts = [len(leaves) for _, leaves in stars]
    failed = star_forest_preconditions(host.n, host.min_count, parts)
    if failed:
        raise DomainError("greedy star-forest preconditions violated: " + "; ".join(failed))
    if g.n > host.n:
        raise DomainError(f"pattern has {g.n} vertices but host only {host.n}")

    image = [-1] * g.n
    unused = (1 << host.n) - 1
    remaining = list(parts)
    current_min = host.min_count
    for centre, leaves in reversed(stars):
        red_leaves = [v for v in leaves if (centre, v) in target.red or (v, centre) in target.red]
        blue_leaves = [v for v in leaves if v not in red_leaves]
        best, best_key = None, None
        for h in iter_bits(unused):
            rd = (host.red[h] & unused).bit_count()
            bd = (host.blue[h] & unused).bit_count()
            if rd >= len(red_leaves) and bd >= len(blue_leaves):
                key = min(rd, bd)
                if best_key is None or key > best_key:
                    best, best_key = h, key
        if best is None:
            raise TheoremViolation(f"no host centre for a star with {len(red_leaves)} red and "
                                   f"{len(blue_leaves)} blue leaves")
        image[centre] = best
        reds = list(iter_bits(host.red[best] & unused))[:len(red_leaves)]
        blues = list(iter_bits(host.blue[best] & unused))[:len(blue_leaves)]
        for v, h in zip(red_leaves + blue_leaves, reds + blues):
            image[v] = h
        used = (1 << best) | sum(1 << h for h in reds + blues)
        unused &= ~used

        p = remaining.pop()
        n_before = unused.bit_count() + p + 1
        new_min = _min_count(host, unused)
        removed_bound = (p + 1) * p // 2 + (p + 1) * (n_before - p - 1)
        if new_min < current_min - removed_bound:
            raise TheoremViolation("residual host lost more edges than the deleted vertices carry")
        if remaining:
            failed = star_forest_preconditions(unused.bit_count(), new_min, remaining)
            if failed:
                raise TheoremViolation("residual host breaks the induction step: " + "; ".join(failed))
        current_min = new_min

    spare = iter_bits(unused)
    for v in range(g.n):
        if image[v] < 0:
            image[v] = next(spare)
    emb = Embedding(tuple(image))
    if not emb.is_valid(host, target):
        raise TheoremViolation("greedy construction produced an invalid embedding")
    return emb
