"""Command-line entry point.

Exit codes: 0 success, 2 input error, 3 size guard, 4 soundness violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .certifiers import ALL_THEOREMS, TheoremId
from .constructions import FamilySpec, gadget_4regular, iter_family, matching_complement, named, x_graph
from .connectivity import edge_connectivity
from .graph import Graph, GraphFormatError, is_regular, read_graphs, to_edge_list, to_graph6
from .report import analyze, certificate_json, certificates_for, jsonable, render_pretty, spectrum_json
from .spectra import adjacency_spectrum
from .sweep import EXPONENTIAL_CAP, KTREE_CAP, SizeGuardError, run_sweep

EXIT_OK, EXIT_INPUT, EXIT_SIZE, EXIT_VIOLATION = 0, 2, 3, 4

THEOREM_NAMES = {
    "l-conn": TheoremId.L_CONN,
    "tough-one": TheoremId.TOUGH_ONE,
    "bipar-tough": TheoremId.BIPAR_TOUGH,
    "tau-floor": TheoremId.TAU_FLOOR,
    "brouwer-conj": TheoremId.BROUWER_CONJ,
    "k-tree": TheoremId.K_TREE,
    "edge-conn": TheoremId.EDGE_CONN_CIOABA,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _theorems(names: Optional[Sequence[str]]) -> list[TheoremId]:
    if not names or "all" in names:
        return list(ALL_THEOREMS)
    return [THEOREM_NAMES[n] for n in names]


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(source: str) -> list[Graph]:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc}", EXIT_INPUT) from exc
    try:
        return read_graphs(text)
    except (GraphFormatError, ValueError) as exc:
        raise CliError(f"parse error: {exc}", EXIT_INPUT) from exc


def _emit(items: list, args) -> None:
    out = items[0] if len(items) == 1 else items
    if getattr(args, "pretty", False):
        print(render_pretty(out))
    else:
        print(json.dumps(out, indent=2))


def cmd_analyze(args, argv) -> int:
    graphs = _load(args.input)
    reports = []
    for g in graphs:
        exponential = args.force or not args.skip_exponential
        ktrees = args.force or g.n <= KTREE_CAP
        if exponential and not args.force and g.n > EXPONENTIAL_CAP:
            raise CliError(
                f"n = {g.n} exceeds the exact-oracle cap {EXPONENTIAL_CAP}; use --skip-exponential or --force",
                EXIT_SIZE)
        rep = analyze(g, ls=args.l, ks=args.k, lconn_k=args.lconn_k, exponential=exponential, ktrees=ktrees)
        rep["command"] = list(argv)
        reports.append(rep)
    _emit(reports, args)
    return EXIT_OK


def cmd_certify(args, argv) -> int:
    graphs = _load(args.input)
    out = []
    for g in graphs:
        spec = adjacency_spectrum(g)
        kp = edge_connectivity(g) if g.n >= 2 else None
        try:
            certs = certificates_for(g, spec, kp, _theorems(args.theorem), k=args.k, l=args.l)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INPUT) from exc
        out.append({
            "graph6": to_graph6(g) if g.n <= 62 else None,
            "certificates": [certificate_json(c) for c in certs],
            "command": list(argv),
        })
    _emit(out, args)
    return EXIT_OK


def cmd_spectrum(args, argv) -> int:
    graphs = _load(args.input)
    _emit([spectrum_json(adjacency_spectrum(g), is_regular(g)) for g in graphs], args)
    return EXIT_OK


def cmd_construct(args, argv) -> int:
    name = args.name.replace("_", "-")
    try:
        if name == "x-graph":
            graphs = [x_graph(args.d)]
        elif name == "gadget-4regular":
            graphs = [gadget_4regular()]
        elif name == "matching-complement":
            graphs = [matching_complement(args.t)]
        elif name == "random-regular":
            seed = args.seed if args.seed is not None else 0
            graphs = list(iter_family(FamilySpec("random_regular", n=args.n, d=args.d, count=args.count, seed=seed)))
        elif name == "exhaustive-regular":
            graphs = list(iter_family(FamilySpec("exhaustive_regular", n=args.n, d=args.d)))
        else:
            graphs = [named(name, *args.params)]
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    for g in graphs:
        if args.edge_list or g.n > 62:
            sys.stdout.write(to_edge_list(g))
        else:
            print(to_graph6(g))
    return EXIT_OK


def cmd_verify(args, argv) -> int:
    kind = {"exhaustive": "exhaustive_regular", "random": "random_regular"}.get(args.family, args.family)
    if kind == "file" and not args.path:
        raise CliError("--path is required for a file family", EXIT_INPUT)
    spec = FamilySpec(kind, n=args.n, d=args.d, count=args.count, seed=args.seed, path=args.path,
                      connected=args.connected)
    try:
        report = run_sweep(spec, _theorems(args.theorems), ktree_ks=args.k, workers=args.workers,
                           max_n=None if args.force else EXPONENTIAL_CAP)
    except SizeGuardError as exc:
        raise CliError(f"{exc}; use --force", EXIT_SIZE) from exc
    except (GraphFormatError, OSError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    out = jsonable(report)
    out["command"] = list(argv)
    _emit([out], args)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regspec", description="Spectral certificates for connectivity, toughness and k-trees of regular graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph6 or edge-list file ('-' for stdin)")
        p.add_argument("--pretty", action="store_true", help="plain-text output instead of JSON")

    p = sub.add_parser("analyze", help="exact invariants, spectrum, certificates and bounds")
    add_input(p)
    p.add_argument("--l", type=int_list, default=[2, 3], help="l values for kappa_l, e.g. 2,3")
    p.add_argument("--k", type=int_list, default=[2, 3], help="k values for spanning k-trees, e.g. 2,3,4")
    p.add_argument("--lconn-k", type=int, default=2, help="k in the kappa_l >= k certificate")
    p.add_argument("--skip-exponential", action="store_true", help="omit toughness, kappa_l and alpha (and k-trees above n = 22)")
    p.add_argument("--force", action="store_true", help="run exact oracles beyond the size caps")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="spectral certificates only")
    add_input(p)
    p.add_argument("--theorem", action="append", choices=sorted(THEOREM_NAMES) + ["all"],
                   help="repeatable; default all")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("spectrum", help="adjacency spectrum")
    add_input(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("construct", help="emit graph6 lines for a construction")
    p.add_argument("name", help="x-graph, gadget-4regular, matching-complement, random-regular, "
                                "exhaustive-regular, or a named graph (cycle, path, complete, "
                                "complete-bipartite, star, petersen, hypercube)")
    p.add_argument("params", type=int, nargs="*", help="parameters of a named graph")
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--edge-list", action="store_true", help="emit the edge-list format")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="soundness sweep of certificates against exact oracles")
    p.add_argument("--family", choices=["exhaustive", "random", "file"], required=True)
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--d", type=int, nargs="+")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--path")
    p.add_argument("--connected", action="store_true", help="random family: redraw disconnected graphs")
    p.add_argument("--theorems", nargs="+", choices=sorted(THEOREM_NAMES) + ["all"], default=["all"])
    p.add_argument("--k", type=int, nargs="+", default=[3, 4], help="k values for the k-tree certificate")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true", help="allow graphs beyond the oracle size cap")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except CliError as exc:
        print(f"regspec: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
