"""Colour-preserving isomorphism, automorphisms and pattern classes of small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial

from .errors import SizeLimitError
from .graph import Graph, PatternColouring, iter_bits, norm_edge

MAX_VERTICES = 10
MAX_EDGES = 20

Permutation = tuple[int, ...]


def _guard(n: int, what: str) -> None:
    if n > MAX_VERTICES:
        raise SizeLimitError(f"{what}: {n} vertices exceeds the brute-force guard of {MAX_VERTICES}")


def automorphisms(g: Graph) -> list[Permutation]:
    """All vertex permutations mapping edges to edges, identity first."""
    _guard(g.n, "automorphisms")
    adj = g.adjacency
    deg = [a.bit_count() for a in adj]
    image = [-1] * g.n
    used = 0
    out: list[Permutation] = []

    def extend(v: int) -> None:
        nonlocal used
        if v == g.n:
            out.append(tuple(image))
            return
        for w in range(g.n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            # adjacency to already-placed vertices must be preserved both ways
            if any((adj[v] >> u & 1) != (adj[w] >> image[u] & 1) for u in range(v)):
                continue
            image[v] = w
            used |= 1 << w
            extend(v + 1)
            used &= ~(1 << w)
        image[v] = -1

    extend(0)
    return out


def edge_permutation(g: Graph, perm: Permutation) -> list[int]:
    """Index map on ``g.edge_list`` induced by the vertex automorphism *perm*."""
    index = {e: i for i, e in enumerate(g.edge_list)}
    return [index[norm_edge(perm[u], perm[v])] for u, v in g.edge_list]


def _refine(pc: PatternColouring) -> list[int]:
    """Stable vertex colouring by iterated (red, blue) neighbourhood signatures."""
    n = pc.graph.n
    red, blue = pc.red_adjacency, pc.blue_adjacency

    def rank(sigs: list) -> list[int]:
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        return [order[s] for s in sigs]

    cells = rank([(red[v].bit_count(), blue[v].bit_count()) for v in range(n)])
    while True:
        new = rank([
            (cells[v],
             tuple(sorted(cells[u] for u in iter_bits(red[v]))),
             tuple(sorted(cells[u] for u in iter_bits(blue[v]))))
            for v in range(n)
        ])
        if len(set(new)) == len(set(cells)):
            return new
        cells = new


def canonical_code(pc: PatternColouring) -> tuple:
    """Least colour-adjacency string over all invariant-respecting relabellings.

    Entry ``(i, j)`` is 0 for a non-edge, 1 for blue and 2 for red.  Vertices
    are grouped by a refined invariant before permuting, so equal codes mean
    a colour-preserving isomorphism exists.
    """
    g = pc.graph
    _guard(g.n, "canonical_code")
    cells = _refine(pc)
    groups = [[v for v in range(g.n) if cells[v] == c] for c in sorted(set(cells))]
    red = pc.red_adjacency
    adj = g.adjacency

    def entry(u: int, v: int) -> int:
        if not adj[u] >> v & 1:
            return 0
        return 2 if red[u] >> v & 1 else 1

    # an all-isolated group contributes only zeros, so its internal order is irrelevant
    choices = [[tuple(grp)] if all(adj[v] == 0 for v in grp) else list(permutations(grp)) for grp in groups]
    best = None
    for parts in product(*choices):
        order = [v for part in parts for v in part]
        code = tuple(entry(order[i], order[j]) for i, j in combinations(range(g.n), 2))
        if best is None or code < best:
            best = code
    return (g.n, best or ())


def graph_code(g: Graph) -> tuple:
    return canonical_code(PatternColouring(g, g.edges))


def patterns_equivalent(a: PatternColouring, b: PatternColouring) -> bool:
    if a.graph.n != b.graph.n or a.graph.e != b.graph.e or a.r != b.r:
        _guard(max(a.graph.n, b.graph.n), "patterns_equivalent")
        return False
    return canonical_code(a) == canonical_code(b)


def is_star_forest(g: Graph) -> bool:
    for comp in g.components():
        k = len(comp)
        if k <= 2:
            continue
        degs = [g.degree(v) for v in comp]
        if sum(degs) != 2 * (k - 1) or max(degs) != k - 1:
            return False
    return True


def star_parts(g: Graph) -> list[tuple[int, list[int]]]:
    """``(centre, leaves)`` for each star component with at least one edge."""
    stars = []
    for comp in g.components():
        if len(comp) < 2:
            continue
        centre = max(comp, key=lambda v: (g.degree(v), -v))
        stars.append((centre, [v for v in comp if v != centre]))
    return stars


@dataclass(frozen=True)
class PatternClass:
    representative: PatternColouring
    orbit_size: int
    index: int

    @property
    def tone(self) -> tuple[int, int]:
        return self.representative.tone

    @property
    def id(self) -> str:
        r, b = self.tone
        return f"({r},{b})#{self.index}"


def _apply(mask: int, eperm: list[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << eperm[i]
    return out


def enumerate_pattern_classes(g: Graph) -> list[PatternClass]:
    """Orbits of the ``2^e`` colourings of *g* under its automorphism group.

    The representative of an orbit is its member with the smallest red mask.
    Classes are ordered by red count, descending, then by representative.
    """
    _guard(g.n, "enumerate_pattern_classes")
    if g.e > MAX_EDGES:
        raise SizeLimitError(f"enumerate_pattern_classes: {g.e} edges exceeds the guard of {MAX_EDGES}")
    eperms = [edge_permutation(g, p) for p in automorphisms(g)]
    seen = bytearray(1 << g.e)
    found = []
    for mask in range(1 << g.e):
        if seen[mask]:
            continue
        orbit = {_apply(mask, ep) for ep in eperms}
        for m in orbit:
            seen[m] = 1
        found.append((mask, len(orbit)))
    found.sort(key=lambda t: (-t[0].bit_count(), t[0]))
    classes = []
    per_tone: dict[int, int] = {}
    for mask, size in found:
        r = mask.bit_count()
        k = per_tone.get(r, 0)
        per_tone[r] = k + 1
        classes.append(PatternClass(PatternColouring.from_mask(g, mask), size, k))
    return classes


def burnside_count(g: Graph, group: list[Permutation] | None = None) -> int:
    """Number of colouring orbits, ``|Aut|^-1 * sum 2^(edge cycles of phi)``."""
    group = automorphisms(g) if group is None else group
    total = 0
    for perm in group:
        ep = edge_permutation(g, perm)
        seen = [False] * len(ep)
        cycles = 0
        for i in range(len(ep)):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = ep[j]
        total += 2 ** cycles
    count, rem = divmod(total, len(group))
    if rem:
        raise ArithmeticError("Burnside sum not divisible by the group order")
    return count


def witness_pattern(g: Graph) -> PatternColouring | None:
    """An ``(e-1, 1)``-colouring of *g* that no balanced red-clique colouring contains.

    Returns ``None`` for star forests.  A triangle gets one blue edge (a
    two-red triangle); otherwise a path ``x-y-z-w`` gets its middle edge
    ``yz`` blue (a red-blue-red path).  Everything else is red.
    """
    if g.e == 0:
        raise ValueError("witness_pattern needs at least one edge")
    if is_star_forest(g):
        return None
    adj = g.adjacency
    for u, v in g.edge_list:
        if adj[u] & adj[v]:
            return PatternColouring(g, g.edges - {(u, v)})
    for y, z in g.edge_list:
        if adj[y] & ~(1 << z) and adj[z] & ~(1 << y):
            return PatternColouring(g, g.edges - {(y, z)})
    raise AssertionError("a triangle-free non-star component always contains a path on four vertices")


def graph_catalogue(max_n: int, min_n: int = 1) -> list[Graph]:
    """All graphs with ``min_n..max_n`` vertices, one per isomorphism class.

    Built by attaching a new vertex to every subset of each smaller graph.
    """
    if max_n > 7:
        raise SizeLimitError(f"catalogue limited to 7 vertices, got {max_n}")
    level = [Graph(0, frozenset())]
    out = []
    for n in range(1, max_n + 1):
        seen = {}
        for g in level:
            for mask in range(1 << g.n):
                h = Graph(n, g.edges | {(u, n - 1) for u in iter_bits(mask)})
                seen.setdefault(graph_code(h), h)
        level = list(seen.values())
        if n >= min_n:
            out.extend(level)
    return out


def aut_order_bruteforce(g: Graph) -> int:
    """Group order by testing every permutation; for cross-checks only."""
    if factorial(g.n) > 10**6:
        raise SizeLimitError("too many permutations")
    return sum(1 for p in permutations(range(g.n)) if g.relabel(p).edges == g.edges)
