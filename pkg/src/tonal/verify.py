"""Desk-scale replication of the characterisation of totally-omnitonal graphs.

Each claim is a finite certificate: a computation whose outcome is fixed by
the theorem it stands for.  ``verify_theorems`` runs them in order and
reports one line per claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

import numpy as np

from .canonical import CanonicalSize, canonical_colouring, canonical_sizes, balanced_clique_order, verify_obstructions
from .embed import Embedding, find_embedding, greedy_star_forest_embed
from .extremal import ot_exact, tot_exact
from .graph import ColouredHost, Graph, star_forest
from .patterns import (burnside_count, enumerate_pattern_classes, graph_catalogue, is_star_forest,
                       patterns_equivalent, witness_pattern)

HostHook = Callable[[ColouredHost], ColouredHost]


@dataclass
class Claim:
    name: str
    statement: str
    status: str = "pending"
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def brute_force_embedding(host: ColouredHost, pattern) -> Embedding | None:
    """Try every injective vertex map; the reference the backtracking engine is checked against."""
    g = pattern.graph
    for img in permutations(range(host.n), g.n):
        if all((host.red if (u, v) in pattern.red else host.blue)[img[u]] >> img[v] & 1
               for u, v in g.edges):
            return Embedding(img)
    return None


def random_host(rng: np.random.Generator, n: int) -> ColouredHost:
    bits = rng.integers(0, 2, size=n * (n - 1) // 2)
    return ColouredHost.from_edge_mask(n, sum(1 << i for i, b in enumerate(bits) if b))


def claim_canonical_family(limit: int = 10_000) -> dict:
    emitted = [(s.n, s.r) for s in canonical_sizes(limit)]
    scanned = [(n, r) for n in range(2, limit + 1) if (r := balanced_clique_order(n)) is not None]
    return {"ok": emitted == scanned and emitted[:4] == [(4, 3), (21, 15), (120, 85), (697, 493)],
            "sizes": emitted}


def claim_obstructions(orders=(4, 21, 120), host_hook: HostHook | None = None) -> dict:
    rows = []
    for n in orders:
        host = canonical_colouring(CanonicalSize(n, balanced_clique_order(n)))
        if host_hook is not None:
            host = host_hook(host)
        obs = verify_obstructions(host)
        rows.append({"n": n, "red": host.red_count, "blue": host.blue_count, **obs})
    ok = all(r["red"] == r["blue"] and not r["rbrP4Found"] and not r["k3TwoOneFound"] for r in rows)
    return {"ok": ok, "hosts": rows}


def claim_star_formula(workers: int | None = None) -> dict:
    k12 = ot_exact(8, star_forest([2]), workers=workers)
    k2 = [ot_exact(n, Graph.complete(2), workers=workers).value for n in (4, 5)]
    return {"ok": k12.value == 4 == 8 // 2 and k2 == [0, 0],
            "ot_8_K12": k12.value, "ot_K2": k2, "searchSpace": k12.search_space}


def claim_small_obstructions(host_hook: HostHook | None = None, workers: int | None = None) -> dict:
    canon = canonical_colouring(CanonicalSize(4, 3))
    if host_hook is not None:
        canon = host_hook(canon)
    out = {"ok": True}
    for name, g in (("P4", Graph.path(4)), ("K3", Graph.complete(3))):
        res = tot_exact(4, g, workers=workers)
        equiv = patterns_equivalent(res.witness.as_pattern(), canon.as_pattern())
        out[name] = {"value": res.value, "saturated": res.saturated, "witnessCanonical": equiv}
        out["ok"] &= res.value == 3 and res.saturated and equiv
    return out


def claim_stars(workers: int | None = None) -> dict:
    rows = []
    for p in (1, 2, 3):
        g = star_forest([p])
        for n in range(p + 1, 7):
            ot = ot_exact(n, g, workers=workers).value
            tot = tot_exact(n, g, workers=workers).value
            rows.append({"p": p, "n": n, "ot": ot, "tot": tot})
    return {"ok": all(r["ot"] == r["tot"] for r in rows), "cases": rows}


def claim_forward(host_hook: HostHook | None = None) -> dict:
    host = canonical_colouring(CanonicalSize(21, 15))
    if host_hook is not None:
        host = host_hook(host)
    bad = []
    n_forests = n_others = 0
    for g in graph_catalogue(5):
        if g.e == 0:
            continue
        wp = witness_pattern(g)
        if is_star_forest(g):
            n_forests += 1
            if wp is not None:
                bad.append(sorted(g.edges))
        else:
            n_others += 1
            if wp is None or find_embedding(host, wp) is not None:
                bad.append(sorted(g.edges))
    return {"ok": not bad, "starForests": n_forests, "nonStarForests": n_others, "failures": bad}


def claim_converse(seed: int = 0, hosts: int = 1000) -> dict:
    rng = np.random.default_rng(seed)
    g = star_forest([2, 1])
    classes = enumerate_pattern_classes(g)
    failures = 0
    drawn = 0
    for _ in range(hosts):
        while True:
            host = random_host(rng, 16)
            drawn += 1
            if host.min_count > 48:
                break
        for pc in classes:
            emb = greedy_star_forest_embed(host, pc.representative)
            if not emb.is_valid(host, pc.representative) or find_embedding(host, pc.representative) is None:
                failures += 1
    return {"ok": failures == 0 and len(classes) == 6, "hosts": hosts, "classes": len(classes),
            "drawn": drawn, "failures": failures}


def claim_oracle(seed: int = 0, hosts: int = 500) -> dict:
    rng = np.random.default_rng(seed)
    patterns = [pc.representative for g in graph_catalogue(4) for pc in enumerate_pattern_classes(g)]
    disagreements = checks = 0
    for _ in range(hosts):
        host = random_host(rng, int(rng.integers(1, 6)))
        for pat in patterns:
            if pat.graph.n > host.n:
                continue
            checks += 1
            if (find_embedding(host, pat) is None) != (brute_force_embedding(host, pat) is None):
                disagreements += 1
    return {"ok": disagreements == 0, "pairs": checks, "disagreements": disagreements}


def claim_class_counts() -> dict:
    mismatches = []
    for g in graph_catalogue(5):
        classes = enumerate_pattern_classes(g)
        if len(classes) != burnside_count(g) or sum(c.orbit_size for c in classes) != 2 ** g.e:
            mismatches.append(sorted(g.edges))
    named = {name: len(enumerate_pattern_classes(g))
             for name, g in (("P4", Graph.path(4)), ("K3", Graph.complete(3)), ("K13", star_forest([3])))}
    return {"ok": not mismatches and named == {"P4": 6, "K3": 4, "K13": 4}, "named": named,
            "mismatches": mismatches}


def verify_theorems(seed: int = 0, budget: float | None = None, workers: int | None = None,
                    host_hook: HostHook | None = None) -> tuple[list[Claim], bool]:
    """Run every claim; returns the claims and whether the run completed within *budget* seconds."""
    plan = [
        ("canonical-family", "balanced red-clique colourings exist for infinitely many n",
         lambda: claim_canonical_family()),
        ("obstructions", "balanced red-clique colourings contain no r-b-r P4 and no (2,1)-K3",
         lambda: claim_obstructions(host_hook=host_hook)),
        ("star-formula", "ot(8, K_{1,2}) = floor(8/2) and ot(n, K2) = 0",
         lambda: claim_star_formula(workers)),
        ("p4-k3-not-total", "P4 and K3 are not totally-omnitonal",
         lambda: claim_small_obstructions(host_hook, workers)),
        ("stars-total", "tot(n, K_{1,p}) = ot(n, K_{1,p})",
         lambda: claim_stars(workers)),
        ("forward", "graphs that are not star forests have an unembeddable (e-1,1) pattern",
         lambda: claim_forward(host_hook)),
        ("converse", "star forests embed greedily above the corollary bound",
         lambda: claim_converse(seed)),
        ("oracle", "backtracking embedding agrees with brute force",
         lambda: claim_oracle(seed)),
        ("class-counts", "pattern classes match Burnside counts",
         lambda: claim_class_counts()),
    ]
    start = time.monotonic()
    claims = []
    complete = True
    for name, statement, fn in plan:
        claim = Claim(name, statement)
        claims.append(claim)
        if budget is not None and time.monotonic() - start > budget:
            claim.status = "skipped"
            complete = False
            continue
        evidence = fn()
        claim.status = "pass" if evidence.pop("ok") else "fail"
        claim.evidence = evidence
    return claims, complete
