"""Batch command-line front end.

Exit codes: 0 ok, 2 invalid labeling / verification failure, 3 infeasible
parameters, 4 budget or size exceeded.  Every emitted JSON artifact embeds
its run manifest and the manifest hash.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from . import __version__
from .constructions import (EdgeLabeling, LabelingReport, extend_join,
                            label_complete, label_complete_multipartite,
                            label_corona, label_necklace,
                            label_union_complete_bipartite,
                            label_union_cycles_even, label_union_cycles_odd,
                            label_union_paths, label_union_stars)
from .errors import (AntimagicError, BudgetExceeded, FormulaBreakdown,
                     InfeasibleParameters, LengthMismatch, NotBipartite,
                     TooLarge, WeightCollision)
from .graphs import (Graph, NecklaceSpec, build_complete,
                     build_complete_multipartite,
                     build_union_complete_bipartite, build_union_cycles,
                     build_union_paths, build_union_stars, build_necklace,
                     corona_with_empty, join_with_empty)
from .magic import construct_mr, construct_mrs
from .solve import chi_la_exact
from .verify import bounds_report, induced_weights, labeling_report

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4


def _manifest(command: str, params: dict, input_hashes: dict, outcome: str) -> dict:
    manifest = {
        "command": command,
        "parameters": params,
        "input_hashes": input_hashes,
        "version": __version__,
        "outcome": outcome,
    }
    digest = hashlib.sha256(
        json.dumps(manifest, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    return {"manifest": manifest, "manifest_hash": digest}


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_graph(path: str) -> Graph:
    with open(path) as fh:
        return Graph.from_json_dict(json.load(fh))


def _load_labels(path: str) -> EdgeLabeling:
    with open(path) as fh:
        return EdgeLabeling.from_json_dict(json.load(fh))


def _parse_splits(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for part in text.split(","):
        a, b = part.split(":")
        out.append((int(a), int(b)))
    return tuple(out)


def _necklace_spec(args) -> NecklaceSpec:
    lengths = tuple(int(x) for x in args.lengths.split(","))
    splits = _parse_splits(args.splits) if args.splits else ()
    return NecklaceSpec(lengths, splits).with_default_splits()


def _gen_graph(args) -> Graph:
    fam = args.family
    if fam == "paths":
        return build_union_paths(args.r, args.n)
    if fam == "cycles":
        return build_union_cycles(args.r, args.n)
    if fam == "stars":
        return build_union_stars(args.r, args.n)
    if fam == "complete":
        return build_complete(args.n)
    if fam == "bipartite":
        return build_union_complete_bipartite(args.r, args.m, args.n)
    if fam == "multipartite":
        return build_complete_multipartite([int(x) for x in args.parts.split(",")])
    if fam == "necklace":
        return build_necklace(_necklace_spec(args))
    if fam == "corona":
        return corona_with_empty(_load_graph(args.input), args.m)
    if fam == "join":
        return join_with_empty(_load_graph(args.input), args.q)
    raise InfeasibleParameters(f"unknown family {fam!r}")


def _label_report(args) -> LabelingReport:
    fam = args.family
    if fam == "paths":
        return label_union_paths(args.r, args.n)
    if fam == "cycles":
        if args.n % 2 == 0:
            return label_union_cycles_even(args.r, args.n)
        return label_union_cycles_odd(args.r, args.n)
    if fam == "stars":
        return label_union_stars(args.r, args.n)
    if fam == "complete":
        return label_complete(args.n)
    if fam == "bipartite":
        return label_union_complete_bipartite(args.r, args.m, args.n)
    if fam == "multipartite":
        return label_complete_multipartite([int(x) for x in args.parts.split(",")])
    if fam == "necklace":
        return label_necklace(_necklace_spec(args))
    if fam == "corona":
        return label_corona(_load_graph(args.input), _load_labels(args.labeling), args.m)
    if fam == "join":
        return extend_join(_load_graph(args.input), _load_labels(args.labeling), args.q)
    raise InfeasibleParameters(f"unknown family {fam!r}")


def cmd_gen(args) -> int:
    g = _gen_graph(args)
    payload = g.to_json_dict()
    payload.update(_manifest("gen", _params(args), {}, "ok"))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_label(args) -> int:
    report = _label_report(args)
    payload = report.to_json_dict()
    payload["graph"] = report.graph.to_json_dict()
    payload.update(_manifest("label", _params(args), {}, "ok"))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    f = _load_labels(args.labeling)
    if len(f.labels) != g.num_edges:
        print(f"LengthMismatch: {len(f.labels)} labels for {g.num_edges} edges",
              file=sys.stderr)
        return EXIT_INVALID
    report = labeling_report(g, f.labels)
    payload = dict(report)
    payload.update(_manifest("verify", _params(args),
                             {"graph": g.graph_hash()}, "ok"))
    _emit(payload, args.out)
    if not (report["bijection"] and report["proper"]):
        print(f"invalid labeling; first violation: {report['first_violation']}",
              file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    budget = args.budget_ms / 1000.0 if args.budget_ms else None
    result = chi_la_exact(g, max_edges=args.max_edges, time_budget_s=budget)
    payload = result.to_json_dict()
    payload.update(_manifest("solve", _params(args),
                             {"graph": g.graph_hash()}, result.status))
    _emit(payload, args.out)
    return EXIT_OK if result.status == "exact" else EXIT_BUDGET


def cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    payload = bounds_report(g).to_json_dict()
    payload.update(_manifest("bounds", _params(args),
                             {"graph": g.graph_hash()}, "ok"))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_mr(args) -> int:
    rect = construct_mr(args.a, args.b, args.offset)
    payload = rect.to_json_dict()
    payload.update(_manifest("mr", _params(args), {}, "ok"))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_mrs(args) -> int:
    ms = construct_mrs(args.a, args.b, args.c)
    payload = ms.to_json_dict()
    payload.update(_manifest("mrs", _params(args), {}, "ok"))
    _emit(payload, args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    labels = _load_labels(args.labeling).labels if args.labeling else None
    lines = ["graph G {"]
    if labels is not None:
        if len(labels) != g.num_edges:
            print("LengthMismatch", file=sys.stderr)
            return EXIT_INVALID
        weights = induced_weights(g, labels).weights
        for v in range(g.num_vertices):
            lines.append(f'  {v} [xlabel="{weights[v]}"];')
        for (u, v), lab in zip(g.edges, labels):
            lines.append(f'  {u} -- {v} [label="{lab}"];')
    else:
        for v in range(g.num_vertices):
            lines.append(f"  {v};")
        for u, v in g.edges:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    stamp = _manifest("export-dot", _params(args), {"graph": g.graph_hash()}, "ok")
    lines.append(f"// manifest {stamp['manifest_hash']}")
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _params(args) -> dict:
    skip = {"func", "out"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Construct, verify, and exactly solve local antimagic labelings")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p, need_out=True):
        p.add_argument("--family", required=True,
                       choices=["paths", "cycles", "stars", "complete",
                                "bipartite", "multipartite", "necklace",
                                "corona", "join"])
        p.add_argument("-r", type=int, default=1)
        p.add_argument("-n", type=int)
        p.add_argument("-m", type=int)
        p.add_argument("-q", type=int)
        p.add_argument("--parts")
        p.add_argument("--lengths")
        p.add_argument("--splits")
        p.add_argument("--input", help="base graph JSON (corona/join)")
        p.add_argument("--labeling", help="base labeling JSON (corona/join)")
        if need_out:
            p.add_argument("--out")

    p = sub.add_parser("gen", help="generate a graph")
    family_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="construct a labeling")
    family_args(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="verify a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact chi_la of a small graph")
    p.add_argument("graph")
    p.add_argument("--max-edges", type=int, default=12)
    p.add_argument("--budget-ms", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="lower-bound report")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mr", help="construct a magic rectangle")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mr)

    p = sub.add_parser("mrs", help="construct a magic rectangle set")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mrs)

    p = sub.add_parser("export-dot", help="render graph (and labeling) as DOT")
    p.add_argument("graph")
    p.add_argument("--labeling")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleParameters, WeightCollision, NotBipartite) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (FormulaBreakdown, LengthMismatch) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BudgetExceeded, TooLarge) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FileNotFoundError as exc:
        print(f"missing input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AntimagicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
