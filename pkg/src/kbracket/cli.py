"""Command line front end.

Subcommands: bracket, analyze, graph-f, generate, verify, realize.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import chords, families, graphs, verify
from .diagram import (DEFAULT_LIMIT, Diagram, EnumerationLimitError, bracket,
                      components, extreme_coeffs, extreme_degrees, mirror,
                      second_coeffs)
from .graphs import f_naive, f_reduced
from .laurent import span_min_max


@dataclass
class RunConfig:
    limit: int = DEFAULT_LIMIT
    workers: int = 1
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.limit > 30:
            raise ValueError("enumeration limit is capped at 30 crossings")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


class UsageError(Exception):
    pass


def _load_diagram(path: str) -> Diagram:
    try:
        with open(path) as fh:
            return Diagram.from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read diagram from {path}: {exc}")


def _load_graph(path: str) -> graphs.Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph from {path}: {exc}")
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            return graphs.graph_from_json_obj(json.loads(text))
        return graphs.graph_from_text(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse graph file {path}: {exc}")


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_bracket(args, cfg: RunConfig) -> int:
    d = _load_diagram(args.diagram)
    try:
        p = bracket(d, limit=cfg.limit, workers=cfg.workers)
    except EnumerationLimitError as exc:
        raise UsageError(f"{exc} (use --limit to raise it)")
    m, M = extreme_degrees(d)
    lo, hi, span = span_min_max(p)
    attained = "attained" if (p.coeff(m) != 0 and p.coeff(M) != 0) else "interior"
    if cfg.format == "json":
        _emit(json.dumps({
            "bracket": p.to_pairs(), "span": span, "m": m, "M": M,
            "min_degree": lo, "max_degree": hi, "extremes": attained,
        }), args.output)
    else:
        _emit(f"{p}, span={span}, m={m}, M={M}, extremes={attained}", args.output)
    return 0


def cmd_analyze(args, cfg: RunConfig) -> int:
    d = _load_diagram(args.diagram)
    c = d.n_crossings
    s_a = components(d, 0)
    s_b = components(d, (1 << c) - 1)
    m, M = extreme_degrees(d)
    a_m, a_M = extreme_coeffs(d)
    a_m4, a_M4 = second_coeffs(d)
    cd_a = chords.a_state_chords(d)
    cd_b = chords.a_state_chords(mirror(d))
    lando_a = chords.lando_graph(cd_a)
    lando_b = chords.lando_graph(cd_b)
    f_a, f_b = f_reduced(lando_a), f_reduced(lando_b)
    ident = a_M == (-1) ** ((s_a - 1) % 2) * f_a
    data = {
        "crossings": c, "sA": s_a, "sB": s_b, "m": m, "M": M,
        "a_m": a_m, "a_M": a_M, "a_m+4": a_m4, "a_M-4": a_M4,
        "lando_A": {"vertices": sorted(lando_a.vertices),
                    "edges": sorted(list(e) for e in lando_a.edges)},
        "lando_B": {"vertices": sorted(lando_b.vertices),
                    "edges": sorted(list(e) for e in lando_b.edges)},
        "f_lando_A": f_a, "f_lando_B": f_b,
        "a_M_lando_identity": ident,
    }
    if cfg.format == "json":
        _emit(json.dumps(data), args.output)
    else:
        lines = [
            f"crossings: {c}",
            f"|s_A|: {s_a}  |s_B|: {s_b}",
            f"m: {m}  M: {M}",
            f"a_m: {a_m}  a_M: {a_M}",
            f"a_m+4: {a_m4}  a_M-4: {a_M4}",
            f"Lando A: vertices={sorted(lando_a.vertices)} edges={sorted(lando_a.edges)} f={f_a}",
            f"Lando B: vertices={sorted(lando_b.vertices)} edges={sorted(lando_b.edges)} f={f_b}",
            f"a_M identity (sign * f of A-side Lando): {'holds' if ident else 'FAILS'}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def cmd_graph_f(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    value = f_reduced(g)
    if g.n <= 20 and f_naive(g) != value:
        raise AssertionError("reduction laws disagree with the enumeration oracle")
    if cfg.format == "json":
        _emit(json.dumps({"f": value, "vertices": g.n, "edges": len(g.edges)}),
              args.output)
    else:
        _emit(str(value), args.output)
    return 0


_GRAPH_FAMILIES = {
    "G": (1, lambda ps: graphs.family_G(ps[0]).graph),
    "F": (1, lambda ps: graphs.family_F(ps[0]).graph),
    "H": (0, lambda ps: graphs.cycle(6)),
    "path": (1, lambda ps: graphs.path(ps[0])),
    "cycle": (1, lambda ps: graphs.cycle(ps[0])),
}

_DIAGRAM_FAMILIES = {
    "D": (1, lambda ps: families.d_family(*ps)),
    "DRS": (2, lambda ps: families.d_rs(*ps)),
    "DRSA": (3, lambda ps: families.d_rs_alpha(*ps)),
    "L": (4, lambda ps: families.l_family(*ps)),
    "K": (4, lambda ps: families.k_family(*ps)),
}


def cmd_generate(args, cfg: RunConfig) -> int:
    kind, name, params = args.kind, args.family, [int(x) for x in args.params]
    if kind == "graph":
        if name not in _GRAPH_FAMILIES:
            raise UsageError(f"unknown graph family {name!r}; "
                             f"known: {', '.join(sorted(_GRAPH_FAMILIES))}")
        arity, make = _GRAPH_FAMILIES[name]
        if len(params) != arity:
            raise UsageError(f"graph family {name} takes {arity} parameter(s)")
        try:
            g = make(params)
        except ValueError as exc:
            raise UsageError(str(exc))
        text = json.dumps(graphs.graph_to_json_obj(g)) if cfg.format == "json" \
            else graphs.graph_to_text(g)
        _emit(text, args.output)
        return 0
    if kind == "diagram":
        if name == "P":
            if not params:
                raise UsageError("pretzel needs at least one entry")
            try:
                d = families.pretzel(params)
            except ValueError as exc:
                raise UsageError(str(exc))
        else:
            if name not in _DIAGRAM_FAMILIES:
                raise UsageError(f"unknown diagram family {name!r}; "
                                 f"known: P, {', '.join(sorted(_DIAGRAM_FAMILIES))}")
            arity, make = _DIAGRAM_FAMILIES[name]
            if len(params) != arity:
                raise UsageError(f"diagram family {name} takes {arity} parameter(s)")
            try:
                d = make(params)
            except (ValueError, NotImplementedError) as exc:
                raise UsageError(str(exc))
        _emit(d.to_json(), args.output)
        return 0
    raise UsageError("generate expects 'graph' or 'diagram'")


def cmd_realize(args, cfg: RunConfig) -> int:
    g = _load_graph(args.graph)
    try:
        cd = graphs.realize_as_chord_diagram(g, max_circles=args.max_circles)
    except ValueError as exc:
        raise UsageError(str(exc))
    if cd is None:
        _emit("not realizable within bounds", args.output)
        return 1
    back = chords.interlacement_graph(cd)
    if not graphs.is_isomorphic(back, g):
        raise AssertionError("realization failed its own interlacement check")
    _emit(cd.to_json(), args.output)
    return 0


_GRID_KEYS = {
    "f-laws": {"n": "max_n"},
    "thm1": {"r": "r_max"},
    "thm2": {"r": "r_max"},
    "lemma3": {"k": "k_max"},
    "fib": {"r": "r_max"},
    "engine": {"n": "n_diagrams", "c": "max_crossings"},
    "oracle": {"n": "n_cases", "v": "max_vertices"},
}

_GRID_PRODUCTS = {
    "thm3": ("r", "s"),
    "thm4": ("r", "s", "alpha"),
    "thm5": ("r", "s", "alpha", "beta"),
    "thm6": ("r", "s", "alpha", "beta"),
    "pretzel": ("a", "s"),
}


def _parse_grid_tokens(tokens):
    out = {}
    for tok in tokens:
        if "<=" in tok:
            name, hi = tok.split("<=", 1)
            out[name.strip()] = ("le", int(hi))
        elif "=" in tok:
            name, val = tok.split("=", 1)
            if ".." in val:
                lo, hi = val.split("..", 1)
                out[name.strip()] = ("range", int(lo), int(hi))
            else:
                out[name.strip()] = ("range", int(val), int(val))
        else:
            raise UsageError(f"cannot parse grid token {tok!r}; "
                             "use name=lo..hi, name=v or name<=hi")
    return out


def _values(spec, default_lo):
    if spec[0] == "le":
        return list(range(default_lo, spec[1] + 1))
    return list(range(spec[1], spec[2] + 1))


def _grid_kwargs(claim, tokens):
    spec = _parse_grid_tokens(tokens)
    kwargs = {}
    if claim in _GRID_KEYS:
        mapping = _GRID_KEYS[claim]
        for name, parsed in spec.items():
            if name not in mapping:
                raise UsageError(f"claim {claim} takes {sorted(mapping)} bounds")
            vals = _values(parsed, 1)
            kwargs[mapping[name]] = max(vals)
        return kwargs
    if claim in _GRID_PRODUCTS:
        from itertools import product as iproduct

        names = _GRID_PRODUCTS[claim]
        for name in spec:
            if name not in names:
                raise UsageError(f"claim {claim} takes parameters {list(names)}")
        if claim == "pretzel":
            a_vals = _values(spec["a"], 2) if "a" in spec else (2, 3)
            s_vals = _values(spec["s"], 2) if "s" in spec else (2, 3)
            return {"a_values": tuple(a_vals), "s_values": tuple(s_vals)}
        defaults = {"thm3": {"r": [1], "s": [1]},
                    "thm4": {"r": [1], "s": [1], "alpha": [3]},
                    "thm5": {"r": [2, 3], "s": [2, 3], "alpha": [2], "beta": [2, 3]},
                    "thm6": {"r": [2], "s": [2], "alpha": [2, 3], "beta": [2]}}[claim]
        axes = []
        for name in names:
            lo = 2 if claim in ("thm5", "thm6") else 1
            axes.append(_values(spec[name], lo) if name in spec else defaults[name])
        grid = [t for t in iproduct(*axes)]
        if claim == "thm4":
            grid = [t for t in grid if t[2] % 2 == 1 and t[2] >= 3]
        return {"grid": tuple(grid)} if grid else {}
    if tokens:
        raise UsageError(f"claim {claim} takes no grid parameters")
    return kwargs


def cmd_verify(args, cfg: RunConfig) -> int:
    kwargs = _grid_kwargs(args.claim, args.grid) if args.claim != "all" else {}
    kwargs.setdefault("limit", cfg.limit)
    kwargs.setdefault("workers", cfg.workers)
    kwargs.setdefault("seed", cfg.seed)
    try:
        rows = verify.run_check(args.claim, **kwargs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    failed = sum(1 for row in rows if not row.ok)
    if cfg.format == "json":
        payload = [{"claim": r.claim, "subject": r.subject, "quantity": r.quantity,
                    "expected": repr(r.expected), "actual": repr(r.actual),
                    "mode": r.mode, "ok": r.ok} for r in rows]
        _emit(json.dumps({"rows": payload, "failed": failed}), args.output)
    else:
        lines = [row.render() for row in rows]
        lines.append(f"{len(rows) - failed}/{len(rows)} rows pass")
        _emit("\n".join(lines), args.output)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    shared.add_argument("--limit", type=int,
                        help="crossing limit for full state enumeration (default 24)")
    shared.add_argument("--workers", type=int,
                        help="worker processes for the state sum")
    shared.add_argument("--format", choices=("text", "json"))
    shared.add_argument("--seed", type=int,
                        help="random seed for the property corpora")
    shared.add_argument("--output", help="write the result to this path instead of stdout")

    ap = argparse.ArgumentParser(
        prog="kbracket",
        description="Exact Kauffman bracket state sums and extreme-coefficient analysis",
        parents=[shared],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", parents=[shared],
                       help="bracket polynomial of a diagram JSON file")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("analyze", parents=[shared],
                       help="extreme-state and Lando-graph report")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph-f", parents=[shared],
                       help="signed independent-set count of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_graph_f)

    p = sub.add_parser("generate", parents=[shared],
                       help="write a generated diagram or graph")
    p.add_argument("kind", choices=("graph", "diagram"))
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[shared],
                       help="recompute the closed-form claims")
    p.add_argument("claim", help=f"one of {', '.join(verify.CHECKS)} or 'all'")
    p.add_argument("grid", nargs="*", help="bounds like r=1..2 or k<=3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", parents=[shared],
                       help="chord-diagram realization of a circle graph")
    p.add_argument("graph")
    p.add_argument("--max-circles", type=int, default=2)
    p.set_defaults(func=cmd_realize)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    defaults = dict(limit=DEFAULT_LIMIT, workers=1, format="text",
                    seed=0, output=None)
    for key, val in defaults.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    try:
        cfg = RunConfig(limit=args.limit, workers=args.workers,
                        format=args.format, seed=args.seed)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
