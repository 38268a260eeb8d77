"""Command-line front end.

Exit codes: 0 success (and C1P answers), 1 ``check`` found the matrix is not
C1P, 2 usage or input error, 3 a verification or bound check failed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bounds, certify, graphs, matrix, tucker

EXIT_OK, EXIT_NOT_C1P, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


def _fmt_pairs(verts) -> str:
    return " ".join(f"{i},{j}" for i, j in verts)


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    M = matrix.read_matrix(args.file)
    cycle = certify.shortest_odd_cycle(graphs.build_incompatibility_graph(M))
    if cycle is None:
        if M.n > args.cap:
            print("C1P (bipartite); witness omitted, n > cap")
        else:
            order = matrix.brute_force_c1p(M, cap=args.cap)
            print("C1P")
            print("order: " + " ".join(map(str, order)))
        return EXIT_OK
    print("not C1P")
    print(f"odd cycle of length {len(cycle)}: {_fmt_pairs(cycle.vertices)}")
    return EXIT_NOT_C1P


def cmd_certify(args) -> int:
    M = matrix.read_matrix(args.file)
    cycle = certify.shortest_odd_cycle(graphs.build_incompatibility_graph(M))
    if cycle is None:
        print("C1P: no certificate exists", file=sys.stderr)
        return EXIT_OK
    cert = cycle if args.form == "odd-cycle" else certify.cycle_to_path(cycle)
    _write(args.out, certify.serialize_certificate(cert))
    return EXIT_OK


def cmd_verify(args) -> int:
    M = matrix.read_matrix(args.file)
    with open(args.cert, encoding="utf-8") as fh:
        cert = certify.parse_certificate(fh.read(), M.n)
    verdict = certify.verify(M, cert)
    if verdict:
        print(f"VALID: {verdict.reason}")
        return EXIT_OK
    print(f"INVALID: {verdict.reason}")
    return EXIT_INVALID


def cmd_tucker(args) -> int:
    M = matrix.read_matrix(args.file)
    sys.stdout.write(tucker.find_tucker(M).report())
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = matrix.TuckerKind.parse(args.kind)
    sys.stdout.write(matrix.serialize_matrix(matrix.tucker_pattern(kind, args.k)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = bounds.reproduce_table(args.kmin, args.kmax)
    sys.stdout.write(report.to_csv() if args.csv else report.to_text())
    if args.plot:
        from .plotting import plot_bound_table

        plot_bound_table(report, args.plot)
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_stress(args) -> int:
    try:
        report = bounds.stress_bound(args.trials, args.rows, args.cols, args.density, args.seed)
    except bounds.BoundViolation as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(report.to_csv() if args.csv else report.to_text())
    if args.plot:
        from .plotting import plot_stress

        plot_stress(report, args.plot)
    return EXIT_OK


def cmd_export_graph(args) -> int:
    M = matrix.read_matrix(args.file)
    build = graphs.build_forcing_graph if args.graph == "forcing" else graphs.build_incompatibility_graph
    _write(args.dot, graphs.to_dot(build(M)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="c1pcert", description="Certifying consecutive-ones toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide C1P; print a witness order or a shortest odd cycle")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=matrix.ORACLE_CAP, help="largest n for the witness search")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="write a non-C1P certificate")
    p.add_argument("file")
    p.add_argument("--out", help="certificate path (default stdout)")
    p.add_argument("--form", choices=("odd-cycle", "forcing-path"), default="odd-cycle")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tucker", help="locate a Tucker pattern submatrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_tucker)

    p = sub.add_parser("gen", help="print a Tucker pattern in matrix file format")
    p.add_argument("kind", help="I, II, III, IV or V")
    p.add_argument("k", nargs="?", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a certificate against a matrix")
    p.add_argument("file")
    p.add_argument("cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="golden table of shortest odd cycles for the Tucker families")
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--plot", metavar="IMAGE", help="also render the table as a figure")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("stress", help="random matrices against the odd-cycle bound")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="print the length distribution as CSV")
    p.add_argument("--plot", metavar="IMAGE", help="also render a histogram of lengths")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("export-graph", help="write the incompatibility or forcing graph as DOT")
    p.add_argument("file")
    p.add_argument("--graph", choices=("incompat", "forcing"), required=True)
    p.add_argument("--dot", required=True, metavar="OUT")
    p.set_defaults(func=cmd_export_graph)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, ValueError, matrix.OracleLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
