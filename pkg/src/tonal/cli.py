"""Command-line front end.

    tonal canonical sizes --limit 150
    tonal patterns classes --graph p4.el
    tonal extremal ot --n 8 --graph k12.el
    tonal verify --seed 0

JSON is the default output; ``--format csv`` and ``--format text`` print
the same rows as a table.  Exit codes: 0 success, 1 I/O or parse failure,
2 domain or guard error, 3 verification incomplete within its budget,
4 a verification claim failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .canonical import canonical_colouring, canonical_size_for, canonical_sizes, verify_obstructions
from .embed import class_coverage, find_embedding, greedy_star_forest_embed, tone_coverage
from .errors import DomainError, SizeLimitError, TheoremViolation
from .extremal import ot_exact, ot_star_formula, tot_exact, tot_star_forest_bound
from .graph import ColouredHost, Graph, PatternColouring
from .io import ParseError, format_coloured, parse_coloured, parse_graph, parse_host
from .patterns import enumerate_pattern_classes, patterns_equivalent, witness_pattern
from .verify import verify_theorems

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_INCOMPLETE, EXIT_FAILED = 0, 1, 2, 3, 4


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list]}


def coloured_json(pc: PatternColouring | ColouredHost) -> dict:
    if isinstance(pc, ColouredHost):
        pc = pc.as_pattern()
    return {"n": pc.graph.n, "tone": list(pc.tone),
            "edges": [[u, v, "R" if (u, v) in pc.red else "B"] for u, v in pc.graph.edge_list]}


def _edge_text(pc: PatternColouring) -> str:
    return " ".join(f"{u}-{v}:{'R' if (u, v) in pc.red else 'B'}" for u, v in pc.graph.edge_list)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


# handlers return (document, rows); rows feed the csv and text renderers

def cmd_canonical_sizes(args):
    sizes = canonical_sizes(args.limit)
    rows = [{"n": s.n, "r": s.r, "x": s.x, "y": s.y, "red": s.r * (s.r - 1) // 2} for s in sizes]
    return {"limit": args.limit, "sizes": rows}, rows


def cmd_canonical_host(args):
    size = canonical_size_for(args.n)
    if size is None:
        raise DomainError(f"no balanced red-clique colouring of K_{args.n}")
    host = canonical_colouring(size)
    if args.format == "text":
        return None, format_coloured(host)
    doc = {"n": host.n, "r": size.r, "redCount": host.red_count, "blueCount": host.blue_count,
           "obstructions": verify_obstructions(host), "host": coloured_json(host)}
    return doc, [{"n": host.n, "r": size.r, "redCount": host.red_count, "blueCount": host.blue_count}]


def cmd_patterns_classes(args):
    g = parse_graph(_read(args.graph))
    classes = enumerate_pattern_classes(g)
    rows = [{"id": c.id, "r": c.tone[0], "b": c.tone[1], "orbitSize": c.orbit_size,
             "representative": _edge_text(c.representative)} for c in classes]
    doc = {"graph": graph_json(g), "count": len(classes),
           "classes": [{"id": c.id, "tone": list(c.tone), "orbitSize": c.orbit_size,
                        "representative": coloured_json(c.representative)} for c in classes]}
    return doc, rows


def cmd_patterns_witness(args):
    g = parse_graph(_read(args.graph))
    wp = witness_pattern(g)
    doc = {"graph": graph_json(g), "starForest": wp is None,
           "witness": None if wp is None else coloured_json(wp)}
    return doc, [{"starForest": wp is None, "witness": "" if wp is None else _edge_text(wp)}]


def cmd_patterns_equivalent(args):
    a, b = parse_coloured(_read(args.a)), parse_coloured(_read(args.b))
    eq = patterns_equivalent(a, b)
    return {"equivalent": eq, "a": coloured_json(a), "b": coloured_json(b)}, [{"equivalent": eq}]


def cmd_embed_find(args):
    host, pat = parse_host(_read(args.host)), parse_coloured(_read(args.pattern))
    emb = find_embedding(host, pat)
    m = None if emb is None else list(emb.map)
    return {"found": emb is not None, "map": m, "pattern": coloured_json(pat)}, \
        [{"found": emb is not None, "map": "" if m is None else " ".join(map(str, m))}]


def cmd_embed_coverage(args):
    host, g = parse_host(_read(args.host)), parse_graph(_read(args.graph))
    fn = tone_coverage if args.level == "tone" else class_coverage
    rep = fn(host, g)
    label = (lambda t: f"({t[0]},{t[1]})") if args.level == "tone" else str
    rows = [{"target": label(t), "found": t not in rep.missing,
             "map": " ".join(map(str, rep.witnessed[t].map)) if t in rep.witnessed else ""}
            for t in rep.targets]
    doc = {"level": args.level, "covered": rep.covered,
           "targets": [{"target": label(t), "found": t not in rep.missing,
                        "map": list(rep.witnessed[t].map) if t in rep.witnessed else None}
                       for t in rep.targets],
           "missing": [label(t) for t in rep.missing]}
    return doc, rows


def cmd_embed_star_forest(args):
    host, pat = parse_host(_read(args.host)), parse_coloured(_read(args.pattern))
    emb = greedy_star_forest_embed(host, pat)
    return {"map": list(emb.map), "valid": emb.is_valid(host, pat)}, \
        [{"map": " ".join(map(str, emb.map))}]


def _extremal(fn, args):
    g = parse_graph(_read(args.graph))
    res = fn(args.n, g, force=args.force, workers=args.workers)
    doc = {"n": res.n, "level": res.level, "value": res.value, "saturated": res.saturated,
           "missing": list(res.missing) if isinstance(res.missing, tuple) else res.missing,
           "searchSpace": res.search_space, "witness": coloured_json(res.witness)}
    return doc, [{"n": res.n, "level": res.level, "value": res.value, "saturated": res.saturated}]


def cmd_extremal_ot(args):
    return _extremal(ot_exact, args)


def cmd_extremal_tot(args):
    return _extremal(tot_exact, args)


def cmd_extremal_formula(args):
    v = ot_star_formula(args.n, args.k)
    return {"n": args.n, "k": args.k, "value": v}, [{"n": args.n, "k": args.k, "value": v}]


def cmd_extremal_bound(args):
    try:
        parts = [int(p) for p in args.parts.split(",")]
    except ValueError:
        raise DomainError(f"--parts must be comma-separated integers, got {args.parts!r}") from None
    v = tot_star_forest_bound(args.n, parts)
    return {"n": args.n, "parts": parts, "value": v}, [{"n": args.n, "parts": args.parts, "value": v}]


def cmd_verify(args):
    claims, complete = verify_theorems(seed=args.seed, budget=args.budget, workers=args.workers)
    doc = {"seed": args.seed, "complete": complete,
           "claims": [{"name": c.name, "statement": c.statement, "status": c.status, "evidence": c.evidence}
                      for c in claims]}
    rows = [{"claim": c.name, "status": c.status, "statement": c.statement} for c in claims]
    return doc, rows


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="default json; `canonical host` defaults to the edge-list text")
    common.add_argument("--workers", type=int, default=None,
                        help="parallelism hint; never changes results (default: TONAL_WORKERS or CPU count)")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="tonal", description="Coloured copies of graphs in 2-coloured K_n.")
    ap.add_argument("--version", action="version", version=__version__)
    top = ap.add_subparsers(dest="group", required=True)

    def leaf(group, name, fn, help_):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn, command=name)
        return p

    can = top.add_parser("canonical", help="balanced red-clique colourings").add_subparsers(dest="sub", required=True)
    leaf(can, "sizes", cmd_canonical_sizes, "orders n with a balanced red clique").add_argument(
        "--limit", type=int, required=True)
    p = leaf(can, "host", cmd_canonical_host, "print the balanced colouring of K_n")
    p.add_argument("--n", type=int, required=True)

    pat = top.add_parser("patterns", help="pattern classes and witnesses").add_subparsers(dest="sub", required=True)
    leaf(pat, "classes", cmd_patterns_classes, "non-equivalent colourings").add_argument("--graph", required=True)
    leaf(pat, "witness", cmd_patterns_witness, "unembeddable (e-1,1) pattern").add_argument("--graph", required=True)
    p = leaf(pat, "equivalent", cmd_patterns_equivalent, "colour-preserving isomorphism test")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    emb = top.add_parser("embed", help="coloured copies in a host").add_subparsers(dest="sub", required=True)
    p = leaf(emb, "find", cmd_embed_find, "find one copy of a coloured pattern")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p = leaf(emb, "coverage", cmd_embed_coverage, "which tones or classes the host contains")
    p.add_argument("--host", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--level", choices=("tone", "class"), default="tone")
    p = leaf(emb, "star-forest", cmd_embed_star_forest, "greedy star-forest embedding")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)

    ext = top.add_parser("extremal", help="exact thresholds and bounds").add_subparsers(dest="sub", required=True)
    for name, fn in (("ot", cmd_extremal_ot), ("tot", cmd_extremal_tot)):
        p = leaf(ext, name, fn, f"exhaustive per-n {name} value")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--graph", required=True)
        p.add_argument("--force", action="store_true", help="lift the 30-edge enumeration guard")
    p = leaf(ext, "formula", cmd_extremal_formula, "closed-form star threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = leaf(ext, "bound", cmd_extremal_bound, "star-forest class threshold bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", required=True)

    p = leaf(top, "verify", cmd_verify, "replicate the characterisation on small instances")
    p.add_argument("--budget", type=float, default=None, help="seconds; later claims are skipped once exceeded")
    return ap


def render(doc, rows, args) -> str:
    if args.format == "json":
        full = {"schemaVersion": SCHEMA_VERSION, "command": f"{args.group} {getattr(args, 'sub', '') or ''}".strip()}
        full.update(doc)
        return json.dumps(full, indent=2, sort_keys=True) + "\n"
    if isinstance(rows, str):
        return rows
    if not rows:
        return ""
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    cols = list(rows[0])
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "text" if args.fn is cmd_canonical_host else "json"
    try:
        doc, rows = args.fn(args)
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        print(f"tonal: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, SizeLimitError, ValueError) as exc:
        print(f"tonal: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except TheoremViolation as exc:
        print(f"tonal: internal error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(render(doc, rows, args))
    if args.fn is cmd_verify:
        if any(c["status"] == "fail" for c in doc["claims"]):
            for c in doc["claims"]:
                if c["status"] == "fail":
                    print(f"tonal: claim failed: {c['name']}", file=sys.stderr)
            return EXIT_FAILED
        if not doc["complete"]:
            return EXIT_INCOMPLETE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
