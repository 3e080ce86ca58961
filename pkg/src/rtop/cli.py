"""Command-line interface.

All results go to stdout as JSON, diagnostics to stderr. Exit codes:
0 success, 1 claim failure, 2 usage or input error. The environment
variable RTOP_MAX_OPENS overrides the open-set materialization cap.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .approximations import approximate
from .coverings import Covering, transform_F
from .errors import CapExceededError, DocumentError
from .infosystem import InformationSystem
from .reducts import RelationFamily, minimal_reducts
from .relations import BinaryRelation
from .topology import Subbase, Topology
from .verifier import SuiteConfig, run_suite

OP_NAMES = {"zhu": "zhu", "xu-zhang": "xu_zhang", "yao3": "yao3", "yao4": "yao4", "topo": "topo"}


def _load_json(path: str) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise DocumentError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: {exc.msg}", line=exc.lineno, col=exc.colno) from None


def _load_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except FileNotFoundError:
        raise DocumentError(f"no such file: {path}") from None


def _parse_set_arg(universe, arg: str):
    labels = [part.strip() for part in arg.split(",") if part.strip()] if arg else []
    return universe.subset(labels)


def _max_opens() -> int | None:
    raw = os.environ.get("RTOP_MAX_OPENS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise DocumentError(f"RTOP_MAX_OPENS must be an integer, got {raw!r}") from None


def _emit(doc: object) -> None:
    print(json.dumps(doc))


def _cmd_topo(args: argparse.Namespace) -> int:
    subbase = Subbase.from_doc(_load_json(args.subbase))
    topo = Topology.from_subbase(subbase)
    opens = topo.opens(args.max_opens if args.max_opens is not None else _max_opens())
    _emit({"universe": list(topo.universe.labels), "sets": opens.to_doc()})
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    operator = OP_NAMES[args.op]
    if operator in ("zhu", "xu_zhang"):
        if not args.covering:
            raise DocumentError(f"operator {args.op!r} needs --covering")
        structure = Covering.from_doc(_load_json(args.covering), drop_empty=True)
    elif operator in ("yao3", "yao4"):
        if not args.relation:
            raise DocumentError(f"operator {args.op!r} needs --relation")
        structure = BinaryRelation.from_doc(_load_json(args.relation))
    else:
        if not args.topology:
            raise DocumentError("operator 'topo' needs --topology")
        structure = Topology.from_subbase(Subbase.from_doc(_load_json(args.topology)))
    x = _parse_set_arg(structure.universe, args.set)
    result = approximate(operator, structure, x)
    side = result.lower if args.side == "lower" else result.upper
    _emit(side.to_labels())
    return 0


def _cmd_infosys(args: argparse.Namespace) -> int:
    if args.file.endswith(".csv"):
        info = InformationSystem.from_csv(_load_text(args.file))
    else:
        info = InformationSystem.from_doc(_load_json(args.file))
    attrs = None
    if args.attrs:
        attrs = [a.strip() for a in args.attrs.split(",") if a.strip()]
    topo = info.combined_topology(attrs)
    opens = topo.opens(_max_opens())
    _emit({"universe": list(topo.universe.labels), "sets": opens.to_doc()})
    return 0


def _cmd_reduct(args: argparse.Namespace) -> int:
    if args.infosys:
        if args.infosys.endswith(".csv"):
            info = InformationSystem.from_csv(_load_text(args.infosys))
        else:
            info = InformationSystem.from_doc(_load_json(args.infosys))
        fam = RelationFamily.from_infosystem(info)
    else:
        named = []
        universe = None
        for path in args.relations:
            rel = BinaryRelation.from_doc(_load_json(path))
            if universe is None:
                universe = rel.universe
            name = os.path.splitext(os.path.basename(path))[0]
            named.append((name, rel))
        fam = RelationFamily(universe, named)
    report = minimal_reducts(fam)
    _emit(report.to_doc())
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    cov = Covering.from_doc(_load_json(args.covering), drop_empty=True)
    _emit(transform_F(cov).to_doc())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        claims=args.claims,
        n_max=args.n_max,
        trials=args.trials,
        seed=args.seed,
        paper_instances=args.paper_instances,
    )
    report = run_suite(config)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_jsonl())
    else:
        sys.stdout.write(report.to_jsonl())
    sys.stderr.write(report.summary_table())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtop",
        description="Covering rough sets, finite topologies, approximation "
        "operators, reducts, and a brute-force claim verifier.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    topo = sub.add_parser("topo", help="topology generation")
    topo_sub = topo.add_subparsers(dest="topo_command", required=True)
    gen = topo_sub.add_parser("gen", help="generate a topology from a subbase file")
    gen.add_argument("--subbase", required=True, help="subbase JSON document")
    gen.add_argument("--max-opens", type=int, default=None, help="open-set count cap")
    gen.set_defaults(func=_cmd_topo)

    approx = sub.add_parser("approx", help="evaluate one approximation operator")
    approx.add_argument("--op", required=True, choices=sorted(OP_NAMES))
    approx.add_argument("--side", required=True, choices=["lower", "upper"])
    approx.add_argument("--covering", help="covering JSON document")
    approx.add_argument("--relation", help="relation JSON document")
    approx.add_argument("--topology", help="subbase JSON document for the topology")
    approx.add_argument("--set", required=True, help="comma-separated element labels")
    approx.set_defaults(func=_cmd_approx)

    infosys = sub.add_parser("infosys", help="information system derivations")
    infosys_sub = infosys.add_subparsers(dest="infosys_command", required=True)
    itopo = infosys_sub.add_parser("topo", help="combined topology of chosen attributes")
    itopo.add_argument("--file", required=True, help="information system JSON or CSV")
    itopo.add_argument("--attrs", help="comma-separated attribute names (default: all)")
    itopo.set_defaults(func=_cmd_infosys)

    reduct = sub.add_parser("reduct", help="exhaustive minimal-reduct search")
    source = reduct.add_mutually_exclusive_group(required=True)
    source.add_argument("--infosys", help="information system JSON or CSV")
    source.add_argument("--relations", nargs="+", help="relation JSON documents")
    reduct.set_defaults(func=_cmd_reduct)

    transform = sub.add_parser(
        "transform", help="replace a covering by its neighborhood covering"
    )
    transform.add_argument("--covering", required=True, help="covering JSON document")
    transform.set_defaults(func=_cmd_transform)

    verify = sub.add_parser("verify", help="run the claim verification suite")
    verify.add_argument("--claims", default="all", help="'all' or comma-separated claim ids")
    verify.add_argument("--n-max", type=int, default=6, dest="n_max")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument(
        "--paper-instances",
        action="store_true",
        help="include the built-in worked instances",
    )
    verify.add_argument("--out", help="write the JSONL report here instead of stdout")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
