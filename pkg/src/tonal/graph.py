"""Graphs, edge colourings and 2-coloured complete hosts.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one Python int
per vertex used as a bit-vector, so neighbourhood tests and set algebra are
single integer operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]


class Colour(enum.Enum):
    RED = "R"
    BLUE = "B"

    def swap(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            clean.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, k: int) -> "Graph":
        return cls(k, frozenset((i, i + 1) for i in range(k - 1)))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order; edge ``i`` owns bit ``i`` of colour masks."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adjacency[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        return Graph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))


def star_forest(part_sizes: list[int]) -> Graph:
    """Disjoint union of stars ``K_{1,p}`` for ``p`` in *part_sizes*.

    Star ``j`` has its centre first, followed by its leaves.
    """
    if not part_sizes:
        raise ValueError("part sizes must be non-empty")
    if any(p < 1 for p in part_sizes):
        raise ValueError(f"part sizes must be positive, got {part_sizes}")
    if any(a < b for a, b in zip(part_sizes, part_sizes[1:])):
        raise ValueError(f"part sizes must be non-increasing, got {part_sizes}")
    edges = []
    base = 0
    for p in part_sizes:
        edges.extend((base, base + i) for i in range(1, p + 1))
        base += p + 1
    return Graph(base, frozenset(edges))


@dataclass(frozen=True)
class PatternColouring:
    """A graph with every edge coloured red or blue; ``red`` lists the red edges."""

    graph: Graph
    red: frozenset[Edge]

    def __post_init__(self) -> None:
        red = frozenset(norm_edge(u, v) for u, v in self.red)
        if not red <= self.graph.edges:
            raise ValueError("red edges must be edges of the graph")
        object.__setattr__(self, "red", red)

    @classmethod
    def from_colours(cls, graph: Graph, colours: Mapping[Edge, Colour]) -> "PatternColouring":
        keys = {norm_edge(u, v) for u, v in colours}
        if keys != graph.edges:
            raise ValueError("colouring must be defined on exactly the edges of the graph")
        return cls(graph, frozenset(norm_edge(*e) for e, c in colours.items() if c is Colour.RED))

    @classmethod
    def from_mask(cls, graph: Graph, mask: int) -> "PatternColouring":
        """Bit ``i`` of *mask* set means ``graph.edge_list[i]`` is red."""
        el = graph.edge_list
        return cls(graph, frozenset(el[i] for i in iter_bits(mask)))

    @property
    def mask(self) -> int:
        return sum(1 << i for i, e in enumerate(self.graph.edge_list) if e in self.red)

    @property
    def r(self) -> int:
        return len(self.red)

    @property
    def b(self) -> int:
        return self.graph.e - len(self.red)

    @property
    def tone(self) -> tuple[int, int]:
        return (self.r, self.b)

    @property
    def colour(self) -> dict[Edge, Colour]:
        return {e: Colour.RED if e in self.red else Colour.BLUE for e in self.graph.edge_list}

    def colour_of(self, u: int, v: int) -> Colour:
        e = norm_edge(u, v)
        if e not in self.graph.edges:
            raise KeyError(e)
        return Colour.RED if e in self.red else Colour.BLUE

    def swapped(self) -> "PatternColouring":
        return PatternColouring(self.graph, self.graph.edges - self.red)

    @cached_property
    def red_adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.graph.n
        for u, v in self.red:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def blue_adjacency(self) -> tuple[int, ...]:
        return tuple(a & ~r for a, r in zip(self.graph.adjacency, self.red_adjacency))


@dataclass(frozen=True)
class ColouredHost:
    """A 2-coloured complete graph ``K_n`` as two symmetric bit matrices."""

    n: int
    red: tuple[int, ...]
    blue: tuple[int, ...] = field(repr=False)
    red_count: int = field(init=False)
    blue_count: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.red) != self.n or len(self.blue) != self.n:
            raise ValueError("adjacency rows must match host order")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if (self.red[v] | self.blue[v]) != full & ~(1 << v) or self.red[v] & self.blue[v]:
                raise ValueError(f"vertex {v}: red and blue rows must partition the other vertices")
            for u in iter_bits(self.red[v]):
                if not self.red[u] >> v & 1:
                    raise ValueError(f"red rows not symmetric at ({u}, {v})")
        reds = sum(row.bit_count() for row in self.red) // 2
        object.__setattr__(self, "red_count", reds)
        object.__setattr__(self, "blue_count", self.n * (self.n - 1) // 2 - reds)

    @classmethod
    def from_red_edges(cls, n: int, red_edges: Iterable[tuple[int, int]]) -> "ColouredHost":
        red = [0] * n
        for u, v in red_edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad host edge ({u}, {v}) for n={n}")
            red[u] |= 1 << v
            red[v] |= 1 << u
        full = (1 << n) - 1
        blue = [full & ~red[v] & ~(1 << v) for v in range(n)]
        return cls(n, tuple(red), tuple(blue))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "ColouredHost":
        """Bit ``i`` set means the ``i``-th edge of ``K_n`` in lexicographic order is red."""
        pairs = list(combinations(range(n), 2))
        return cls.from_red_edges(n, (pairs[i] for i in iter_bits(mask)))

    @classmethod
    def monochromatic(cls, n: int, colour: Colour = Colour.RED) -> "ColouredHost":
        pairs = combinations(range(n), 2)
        return cls.from_red_edges(n, pairs if colour is Colour.RED else ())

    @classmethod
    def from_pattern(cls, pc: PatternColouring) -> "ColouredHost":
        if pc.graph.e != pc.graph.n * (pc.graph.n - 1) // 2:
            raise ValueError("a host colouring must colour every edge of K_n")
        return cls.from_red_edges(pc.graph.n, pc.red)

    @property
    def edge_mask(self) -> int:
        mask = 0
        for i, (u, v) in enumerate(combinations(range(self.n), 2)):
            if self.red[u] >> v & 1:
                mask |= 1 << i
        return mask

    @property
    def min_count(self) -> int:
        return min(self.red_count, self.blue_count)

    def colour_of(self, u: int, v: int) -> Colour:
        if u == v:
            raise ValueError("no loop edges in a host")
        return Colour.RED if self.red[u] >> v & 1 else Colour.BLUE

    def red_edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.red[u]) if u < v]

    def swapped(self) -> "ColouredHost":
        return ColouredHost(self.n, self.blue, self.red)

    def flipped(self, u: int, v: int) -> "ColouredHost":
        """Copy with the colour of edge ``{u, v}`` reversed."""
        red, blue = list(self.red), list(self.blue)
        for a, b in ((u, v), (v, u)):
            red[a] ^= 1 << b
            blue[a] ^= 1 << b
        return ColouredHost(self.n, tuple(red), tuple(blue))

    def induced(self, keep: int) -> tuple["ColouredHost", list[int]]:
        """Sub-host on the vertex bitmask *keep*, plus the new-to-old vertex map."""
        verts = list(iter_bits(keep))
        index = {v: i for i, v in enumerate(verts)}
        red_edges = [(index[u], index[w]) for u in verts for w in iter_bits(self.red[u] & keep) if u < w]
        return ColouredHost.from_red_edges(len(verts), red_edges), verts

    def as_pattern(self) -> PatternColouring:
        return PatternColouring(Graph.complete(self.n), frozenset(self.red_edges()))
