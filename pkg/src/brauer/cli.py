"""Command-line front end: ``python -m brauer <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error or a failed check, and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import build_algebra
from .errors import BrauerError
from .linalg import is_prime
from .planner import reduce_to_line
from .quiver import cartan_matrix, quiver_dot, quiver_of, quiver_signature
from .reflection import reflect_quiver, reflect_tree
from .tree import (
    canonical_code,
    enumerate_plane_trees,
    numerical_invariants,
    parse_tree,
    render_dot,
    serialize_tree,
    tree_to_json,
)
from .verify import verify_reflection

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _prime(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--field expects a prime, got {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"--field expects a prime, got {p}")
    return p


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", metavar="PATH", help="tree file")
    src.add_argument("--tree", metavar="TEXT", help="inline tree text (use ';' or newlines between lines)")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = _Parser(prog="brauer", description="Brauer trees, reflections and tilting checks.")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)
    sub.required = True
    sub.add_parser("validate", parents=[common], help="parse and validate a tree")
    sub.add_parser("invariants", parents=[common], help="edge count and multiplicity")
    q = sub.add_parser("quiver", parents=[common], help="quiver with relations")
    q.add_argument("--dot", action="store_true", help="emit Graphviz (same as --format dot)")
    sub.add_parser("cartan", parents=[common], help="Cartan matrix")
    r = sub.add_parser("reflect", parents=[common], help="reflect at an edge")
    r.add_argument("--edge", type=int, required=True)
    r.add_argument("--check-quiver", action="store_true", help="also compare with the quiver transformation")
    d = sub.add_parser("reduce", parents=[common], help="reflections down to a line")
    d.add_argument("--max-steps", type=_positive)
    e = sub.add_parser("enumerate", parents=[common], help="all plane trees with N edges")
    e.add_argument("--edges", type=_positive, required=True)
    v = sub.add_parser("verify", parents=[common], help="tilting checks at an edge")
    v.add_argument("--edge", type=int)
    v.add_argument("--field", type=_prime, default=2)
    v.add_argument("--all-edges", action="store_true")
    return parser


def _load_tree(args):
    if args.tree is not None:
        text = args.tree.replace(";", "\n")
    elif args.infile is not None:
        path = Path(args.infile)
        if not path.is_file():
            raise UsageError(f"--in: no such file {args.infile!r}")
        text = path.read_bytes().decode("utf-8")
    else:
        raise UsageError("one of --in or --tree is required")
    return parse_tree(text)


def _dump(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2, ensure_ascii=False) + "\n"


def _matrix_text(labels, m) -> str:
    width = max(len(str(x)) for x in list(labels) + [v for row in m for v in row])
    head = " " * (width + 1) + " ".join(str(x).rjust(width) for x in labels)
    rows = [str(a).rjust(width) + " " + " ".join(str(v).rjust(width) for v in row) for a, row in zip(labels, m)]
    return "\n".join([head, *rows]) + "\n"


def _cmd_validate(args, tree):
    inv = numerical_invariants(tree)
    code = canonical_code(tree).decode()
    if args.format == "json":
        return _dump({"valid": True, "edges": inv.edge_count, "multiplicity": inv.multiplicity,
                      "code": code, "tree": tree_to_json(tree)}), 0
    if args.format == "dot":
        return render_dot(tree).decode(), 0
    return f"valid: {inv.edge_count} edges, multiplicity {inv.multiplicity}, code {code}\n", 0


def _cmd_invariants(args, tree):
    inv = numerical_invariants(tree)
    if args.format == "json":
        return _dump({"edge_count": inv.edge_count, "multiplicity": inv.multiplicity}), 0
    return f"edge_count {inv.edge_count}\nmultiplicity {inv.multiplicity}\n", 0


def _cmd_quiver(args, tree):
    q = quiver_of(tree)
    if args.dot or args.format == "dot":
        return quiver_dot(q).decode(), 0
    if args.format == "json":
        return _dump({"quiver": q.to_json()}), 0
    lines = [f"vertices: {' '.join(map(str, q.vertices))}", "arrows:"]
    lines += [f"  {a.id}: {a.src} -> {a.dst} (cycle at v{a.cycle})" for a in q.arrows]
    lines.append("relations:")
    for rel in q.relations:
        left = " ".join(map(str, rel.left))
        lines.append(f"  [{left}] = 0" if rel.kind == "zero" else f"  [{left}] = [{' '.join(map(str, rel.right))}]")
    return "\n".join(lines) + "\n", 0


def _cmd_cartan(args, tree):
    c = cartan_matrix(tree).tolist()
    if args.format == "json":
        return _dump({"edges": list(tree.edges), "cartan": c}), 0
    return _matrix_text(tree.edges, c), 0


def _cmd_reflect(args, tree):
    res = reflect_tree(tree, args.edge)
    status = 0
    check = None
    if args.check_quiver:
        lhs = quiver_signature(reflect_quiver(quiver_of(tree), args.edge, res.new_edge))
        rhs = quiver_signature(quiver_of(res.tree))
        check = lhs == rhs
        status = 0 if check else 1
    if args.format == "json":
        obj = {
            "tree": tree_to_json(res.tree),
            "text": serialize_tree(res.tree),
            "removed_edge": res.removed_edge,
            "new_edge": res.new_edge,
            "rename": {str(res.removed_edge): res.new_edge},
            "slide_a": res.slide_a,
            "slide_b": res.slide_b,
            "code": canonical_code(res.tree).decode(),
        }
        if check is not None:
            obj["quiver_check"] = check
        return _dump(obj), status
    if args.format == "dot":
        return render_dot(res.tree).decode(), status
    out = f"# reflected at {res.removed_edge}; new edge {res.new_edge}\n" + serialize_tree(res.tree)
    if check is not None:
        out += f"# quiver check: {'PASS' if check else 'FAIL'}\n"
    return out, status


def _cmd_reduce(args, tree):
    plan = reduce_to_line(tree, args.max_steps)
    if args.format == "json":
        return _dump({"plan": plan.to_json(), "final_tree": tree_to_json(plan.final_tree)}), 0
    if args.format == "dot":
        return render_dot(plan.final_tree).decode(), 0
    lines = [f"# {len(plan)} reflection(s), strategy {plan.strategy}"]
    for i, s in enumerate(plan.steps, 1):
        lines.append(f"# step {i}: reflect at {s.edge} -> new edge {s.new_edge}")
    return "\n".join(lines) + "\n" + serialize_tree(plan.final_tree), 0


def _cmd_enumerate(args):
    trees = enumerate_plane_trees(args.edges)
    if args.format == "json":
        return _dump({"edges": args.edges, "count": len(trees),
                      "trees": [{"code": canonical_code(t).decode(), "tree": tree_to_json(t)} for t in trees]}), 0
    if args.format == "dot":
        return "".join(render_dot(t).decode() for t in trees), 0
    blocks = [f"# {len(trees)} plane tree(s) with {args.edges} edge(s)"]
    for t in trees:
        blocks.append(f"# code {canonical_code(t).decode()}\n" + serialize_tree(t).rstrip("\n"))
    return "\n".join(blocks) + "\n", 0


def _cmd_verify(args, tree):
    if args.all_edges:
        edges = list(tree.edges)
    elif args.edge is None:
        raise UsageError("verify: --edge is required unless --all-edges is given")
    else:
        edges = [args.edge]
    for e in edges:
        if e not in tree.edges:
            raise BrauerError(f"unknown edge id {e}")
    alg = build_algebra(quiver_of(tree), args.field)
    reports = [verify_reflection(tree, e, args.field, alg=alg) for e in edges]
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        data = [r.to_json() for r in reports]
        for d in data:
            d.pop("timings")
        return _dump({"reports": data, "passed": status == 0}), status
    return "\n".join(r.table() for r in reports) + "\n", status


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "enumerate":
            text, status = _cmd_enumerate(args)
        else:
            tree = _load_tree(args)
            handler = globals()[f"_cmd_{args.command}"]
            text, status = handler(args, tree)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 2
    except BrauerError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return status


def main():
    sys.exit(run())
