"""Command line front end.

Graph format: first non-comment line `n m`, then m lines `u v` with
0-based vertex ids separated by one space; `#` starts a comment line and
blank lines are ignored.  Exit codes: 0 found / check passed / agree,
1 no d.i.m., 2 input error, 3 hypothesis violated or disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .graph import Graph, GraphInputError, build_graph, verify_dim
from .oracle import BudgetExceeded, brute_force_dim
from .patterns import S115, find_induced, random_s115_free
from .solver import FOUND, NONE, HYPOTHESIS_VIOLATED, solve, solve_with_xy

EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3


@dataclass
class RunConfig:
    mode: str                      # solve | oracle | compare | check-s115 | generate
    path: str | None = None
    strict: bool = False
    fallback: bool = False
    fmt: str = "text"              # text | json
    strict_c4: bool = False
    xy: tuple[int, int] | None = None
    n: int = 0
    p: float = 0.0
    seed: int = 0
    count: int = 1
    budget: int | None = None


def parse_graph(text: str, source: str = "<input>") -> Graph:
    """Parse the edge-list format with line/column diagnostics."""
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(
                f"{source}:{ln}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(
                f"{source}:{ln}: expected two integers, got {line!r}")
        if header is None:
            header = (a, b)
        else:
            pairs.append((a, b))
    if header is None:
        raise GraphInputError(f"{source}: empty input")
    n, m = header
    if len(pairs) != m:
        raise GraphInputError(
            f"{source}: header announces {m} edges, found {len(pairs)}")
    try:
        return build_graph(n, pairs)
    except GraphInputError as err:
        raise GraphInputError(f"{source}: {err}")


def emit_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for (u, v) in g.edges)
    return "\n".join(lines) + "\n"


def _structured(mode: str, g: Graph | None, result: str,
                edges=None, stats=None, detail: str = "") -> str:
    obj = {
        "mode": mode,
        "n": g.n if g else None,
        "m": g.m if g else None,
        "result": result,
        "edges": [list(e) for e in sorted(edges)] if edges is not None else None,
        "stats": stats or {},
    }
    if detail:
        obj["detail"] = detail
    return json.dumps(obj, sort_keys=True)


def _stats_dict(outcome) -> dict:
    return {
        "xy_tried": outcome.stats.xy_tried,
        "branch_points": [[b.kind, b.explored, b.bound]
                          for b in outcome.stats.branch_points],
        "case_seconds": {k: round(v, 6)
                         for k, v in outcome.stats.case_seconds.items()},
    }


def _run_solve(cfg: RunConfig, g: Graph) -> tuple[int, str]:
    if cfg.xy is not None:
        u, v = cfg.xy
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphInputError(f"--xy ({u}, {v}) is not an edge")
        cert = solve_with_xy(g, (u, v), strict_c4=cfg.strict_c4)
        if cert is None:
            out = (_structured("solve", g, "none") if cfg.fmt == "json"
                   else "NONE")
            return EXIT_NONE, out
        lines = [f"DIM {len(cert)}"]
        lines += [f"{a} {b}" for (a, b) in cert.sorted_edges()]
        out = (_structured("solve", g, "found", cert.edges)
               if cfg.fmt == "json" else "\n".join(lines))
        return EXIT_OK, out

    outcome = solve(g, strict_c4=cfg.strict_c4)
    if outcome.status == HYPOTHESIS_VIOLATED and cfg.fallback:
        report = brute_force_dim(g, **({"budget": cfg.budget}
                                       if cfg.budget else {}))
        if report.exists:
            cert = report.witness
            lines = [f"DIM {len(cert)} (oracle fallback)"]
            lines += [f"{a} {b}" for (a, b) in cert.sorted_edges()]
            out = (_structured("solve", g, "found", cert.edges,
                               _stats_dict(outcome), "oracle fallback")
                   if cfg.fmt == "json" else "\n".join(lines))
            return EXIT_OK, out
        out = (_structured("solve", g, "none", None, _stats_dict(outcome),
                           "oracle fallback") if cfg.fmt == "json"
               else "NONE (oracle fallback)")
        return EXIT_NONE, out

    if outcome.status == FOUND:
        cert = outcome.certificate
        lines = [f"DIM {len(cert)}"]
        lines += [f"{a} {b}" for (a, b) in cert.sorted_edges()]
        out = (_structured("solve", g, "found", cert.edges,
                           _stats_dict(outcome)) if cfg.fmt == "json"
               else "\n".join(lines))
        return EXIT_OK, out
    if outcome.status == NONE:
        out = (_structured("solve", g, "none", None, _stats_dict(outcome),
                           outcome.detail) if cfg.fmt == "json"
               else ("NONE" + (f" ({outcome.detail})"
                               if outcome.detail else "")))
        return EXIT_NONE, out
    msg = "UNKNOWN (hypothesis violated)"
    if cfg.strict and outcome.witness is not None:
        msg += f"\nwitness: {' '.join(map(str, outcome.witness.vertices))}"
    out = (_structured("solve", g, "hypothesis-violated", None,
                       _stats_dict(outcome), outcome.detail)
           if cfg.fmt == "json" else msg)
    return EXIT_UNKNOWN, out


def _run_oracle(cfg: RunConfig, g: Graph) -> tuple[int, str]:
    kwargs = {"budget": cfg.budget} if cfg.budget else {}
    try:
        report = brute_force_dim(g, **kwargs)
    except BudgetExceeded as err:
        return EXIT_INPUT, f"BUDGET EXCEEDED ({err})"
    if report.exists:
        cert = report.witness
        lines = [f"DIM {len(cert)}"]
        lines += [f"{a} {b}" for (a, b) in cert.sorted_edges()]
        out = (_structured("oracle", g, "found", cert.edges)
               if cfg.fmt == "json" else "\n".join(lines))
        return EXIT_OK, out
    out = (_structured("oracle", g, "none") if cfg.fmt == "json" else "NONE")
    return EXIT_NONE, out


def _run_compare(cfg: RunConfig, g: Graph) -> tuple[int, str]:
    outcome = solve(g, strict_c4=cfg.strict_c4)
    kwargs = {"budget": cfg.budget} if cfg.budget else {}
    report = brute_force_dim(g, **kwargs)
    if outcome.status == HYPOTHESIS_VIOLATED:
        out = ("UNKNOWN (hypothesis violated); oracle says "
               + ("DIM" if report.exists else "NONE"))
        if cfg.fmt == "json":
            out = _structured("compare", g, "unknown", None,
                              _stats_dict(outcome), outcome.detail)
        return EXIT_UNKNOWN, out
    agree = (outcome.status == FOUND) == report.exists
    solver_cert_ok = outcome.status != FOUND or \
        verify_dim(g, outcome.certificate)
    if agree and solver_cert_ok:
        out = ("AGREE " + ("DIM" if report.exists else "NONE"))
        if cfg.fmt == "json":
            out = _structured("compare", g, "agree", None,
                              _stats_dict(outcome))
        return EXIT_OK, out
    lines = ["DISAGREE",
             f"solver: {outcome.status} {outcome.detail}".rstrip(),
             f"oracle: {'found' if report.exists else 'none'}"]
    if report.witness is not None:
        lines.append("oracle witness: " + " ".join(
            f"{a}-{b}" for (a, b) in report.witness.sorted_edges()))
    out = (_structured("compare", g, "disagree", None, _stats_dict(outcome))
           if cfg.fmt == "json" else "\n".join(lines))
    return EXIT_UNKNOWN, out


def _run_check(cfg: RunConfig, g: Graph) -> tuple[int, str]:
    w = find_induced(g, S115)
    if w is None:
        out = (_structured("check-s115", g, "s115-free")
               if cfg.fmt == "json" else "S115-FREE")
        return EXIT_OK, out
    verts = " ".join(map(str, w.vertices))
    out = (_structured("check-s115", g, "witness", None, {},
                       verts) if cfg.fmt == "json"
           else f"S115 WITNESS {verts}")
    return EXIT_UNKNOWN, out


def _run_generate(cfg: RunConfig) -> tuple[int, str]:
    chunks = []
    for i in range(cfg.count):
        g = random_s115_free(cfg.n, cfg.p, cfg.seed + i)
        chunks.append(emit_graph(g))
    return EXIT_OK, "\n".join(chunks).rstrip("\n")


def run(cfg: RunConfig, text: str | None = None) -> tuple[int, str]:
    """Execute one mode; returns (exit code, output text)."""
    if cfg.mode == "generate":
        return _run_generate(cfg)
    if text is None:
        if cfg.path is None or cfg.path == "-":
            text = sys.stdin.read()
            source = "<stdin>"
        else:
            try:
                with open(cfg.path, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as err:
                return EXIT_INPUT, f"error: {err}"
            source = cfg.path
    else:
        source = "<memory>"
    try:
        g = parse_graph(text, source)
    except GraphInputError as err:
        return EXIT_INPUT, f"error: {err}"
    try:
        if cfg.mode == "solve":
            return _run_solve(cfg, g)
        if cfg.mode == "oracle":
            return _run_oracle(cfg, g)
        if cfg.mode == "compare":
            return _run_compare(cfg, g)
        if cfg.mode == "check-s115":
            return _run_check(cfg, g)
    except GraphInputError as err:
        return EXIT_INPUT, f"error: {err}"
    except BudgetExceeded as err:
        return EXIT_INPUT, f"BUDGET EXCEEDED ({err})"
    return EXIT_INPUT, f"error: unknown mode {cfg.mode!r}"


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dimatch",
        description="dominating induced matching solver and oracle")
    sub = ap.add_subparsers(dest="mode", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=None,
                       help="oracle node budget override")

    p = sub.add_parser("solve", help="run the structural solver")
    add_common(p)
    p.add_argument("--strict", action="store_true",
                   help="report hypothesis violations with a witness")
    p.add_argument("--fallback", action="store_true",
                   help="answer via the oracle when the hypothesis fails")
    p.add_argument("--strict-c4", action="store_true",
                   help="also exclude every edge lying on an induced C4")
    p.add_argument("--xy", nargs=2, type=int, metavar=("U", "V"),
                   help="solve under the assumption that edge UV is matched")

    p = sub.add_parser("oracle", help="run the exact brute-force oracle")
    add_common(p)

    p = sub.add_parser("compare", help="run solver and oracle, compare")
    add_common(p)

    p = sub.add_parser("check-s115", help="search for an induced S_{1,1,5}")
    add_common(p)

    p = sub.add_parser("generate", help="emit random S_{1,1,5}-free graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        mode=args.mode,
        path=getattr(args, "input", None),
        strict=getattr(args, "strict", False),
        strict_c4=getattr(args, "strict_c4", False),
        fallback=getattr(args, "fallback", False),
        fmt=getattr(args, "format", "text"),
        xy=tuple(args.xy) if getattr(args, "xy", None) else None,
        n=getattr(args, "n", 0),
        p=getattr(args, "p", 0.0),
        seed=getattr(args, "seed", 0),
        count=getattr(args, "count", 1),
        budget=getattr(args, "budget", None),
    )
    code, out = run(cfg)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
