"""Balanced red-clique colourings of K_n.

Colour the edges inside ``A = {0..r-1}`` red and every other edge blue.  Red
and blue counts agree exactly when ``r(r-1)/2 = n(n-1)/4``, which rewrites
to ``y^2 - 2x^2 = -1`` with ``y = 2n-1`` and ``x = 2r-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .graph import ColouredHost, iter_bits

# smallest non-degenerate solution of y^2 - 2x^2 = -1
_SEED = (7, 5)


@dataclass(frozen=True)
class CanonicalSize:
    n: int
    r: int

    def __post_init__(self) -> None:
        if not 2 <= self.r <= self.n - 1:
            raise ValueError(f"need 2 <= r <= n-1, got n={self.n}, r={self.r}")
        if 2 * self.r * (self.r - 1) != self.n * (self.n - 1):
            raise ValueError(f"K_{self.n} with red K_{self.r} is not balanced")

    @property
    def x(self) -> int:
        return 2 * self.r - 1

    @property
    def y(self) -> int:
        return 2 * self.n - 1


def pell_step(y: int, x: int) -> tuple[int, int]:
    """Next solution of ``y^2 - 2x^2 = -1`` (multiplication by ``3 + 2*sqrt(2)``)."""
    return 3 * y + 4 * x, 2 * y + 3 * x


def balanced_clique_order(n: int) -> int | None:
    """The ``r`` with ``2r(r-1) = n(n-1)`` and ``2 <= r < n``, by exact root extraction."""
    disc = 1 + 2 * n * (n - 1)
    s = isqrt(disc)
    if s * s != disc or (1 + s) % 2:
        return None
    r = (1 + s) // 2
    return r if 2 <= r < n else None


def canonical_sizes(limit: int) -> list[CanonicalSize]:
    out = []
    y, x = _SEED
    while (y + 1) // 2 <= limit:
        out.append(CanonicalSize((y + 1) // 2, (x + 1) // 2))
        y, x = pell_step(y, x)
    return out


def canonical_size_for(n: int) -> CanonicalSize | None:
    r = balanced_clique_order(n)
    return None if r is None else CanonicalSize(n, r)


def canonical_colouring(size: CanonicalSize) -> ColouredHost:
    if not isinstance(size, CanonicalSize):
        raise TypeError("expected a CanonicalSize")
    return ColouredHost.from_red_edges(size.n, ((u, v) for u in range(size.r) for v in range(u + 1, size.r)))


def verify_obstructions(host: ColouredHost) -> dict[str, bool]:
    """Search *host* for a red-blue-red path ``P4`` and a triangle with two red edges.

    A red-blue-red ``P4`` ``x-y-z-w`` exists iff some blue edge ``yz`` has red
    neighbours ``x`` of ``y`` and ``w`` of ``z`` outside ``{y, z}`` that are
    distinct.  A two-red triangle exists iff some vertex has two red
    neighbours joined by a blue edge.
    """
    red, blue = host.red, host.blue
    p4 = False
    for y in range(host.n):
        for z in iter_bits(blue[y]):
            if z < y:
                continue
            xs = red[y] & ~(1 << z)
            ws = red[z] & ~(1 << y)
            if xs and ws and not (xs == ws and xs.bit_count() == 1):
                p4 = True
                break
        if p4:
            break
    k3 = any(blue[u] & red[w] for w in range(host.n) for u in iter_bits(red[w]))
    return {"rbrP4Found": p4, "k3TwoOneFound": k3}
