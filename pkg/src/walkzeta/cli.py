"""Command line interface.

Usage examples::

    walkzeta charpoly --target U --graph6 'C~'
    walkzeta spectrum --target U+ --input petersen.edges --format csv
    walkzeta zeta --graph6 'Bw' --order 8 --oracle
    walkzeta verify --corpus builtin
    walkzeta distinguish shrikhande rook44

Exit codes: 0 success, 2 bad input or failed validation, 3 identity
violation, 4 size-guard violation.  JSON output has a fixed key order and
no wall-clock data, so identical invocations are byte identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exact import Poly, RationalFunction, charpoly_exact
from .graphs import (
    Graph,
    GraphFormatError,
    adjacency_matrix,
    build_arcs,
    degree_info,
    parse_edge_list,
    parse_graph6,
    validate,
)
from .identities import charpoly_u_factored
from .operators import (
    nonbacktracking_matrix,
    positive_support,
    power_support,
    random_walk_matrix,
    transition_matrix,
)
from .spectra import compare, map_adjacency_spectrum, map_random_walk_spectrum, real_roots, roots
from .zeta import (
    OracleSizeError,
    PowerSeries,
    euler_product_oracle,
    ihara_reciprocal_bass_form,
    ihara_reciprocal_edge_form,
)
from .experiments import builtin_corpus, named_graph, run_identity_suite, srg_distinguish

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IDENTITY = 3
EXIT_SIZE = 4

DEFAULT_TOLERANCE = 1e-8
DEFAULT_ORDER = 8
DEFAULT_SEED = 42

TARGETS = ("U", "U+", "U2+", "U3+", "A", "T", "B-J0")


def _settings(args) -> dict:
    return {
        "tolerance": args.tolerance,
        "order": args.order,
        "seed": args.seed,
    }


def _envelope(command: str, args) -> dict:
    return {"command": command, "settings": _settings(args)}


def _load_graph(args) -> Graph:
    given = [s for s in (args.graph6, args.input) if s is not None]
    if len(given) != 1:
        raise GraphFormatError("provide exactly one of --graph6 or --input")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    fmt = args.input_format
    if fmt == "auto":
        fmt = "graph6" if args.input.endswith((".g6", ".graph6")) else "edgelist"
    return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)


def _resolve_graph_spec(spec: str) -> Graph:
    """Name, file path or literal graph6 string, tried in that order."""
    try:
        return named_graph(spec)
    except KeyError:
        pass
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
        if spec.endswith((".g6", ".graph6")):
            return parse_graph6(text)
        return parse_edge_list(text)
    return parse_graph6(spec)


def _target_matrix(g: Graph, target: str):
    if target == "A":
        return adjacency_matrix(g)
    if target == "T":
        return random_walk_matrix(g)
    if target == "B-J0":
        return nonbacktracking_matrix(build_arcs(g))
    u = transition_matrix(g)
    if target == "U":
        return u
    if target == "U+":
        return positive_support(u)
    if target == "U2+":
        return power_support(u, 2)
    if target == "U3+":
        return power_support(u, 3)
    raise ValueError(f"unknown target {target!r}")


def _print_json(doc: dict):
    print(json.dumps(doc, indent=2))


def cmd_charpoly(args) -> int:
    g = _load_graph(args)
    if args.format == "csv":
        raise ValueError("csv output applies to spectra only")
    poly = charpoly_exact(_target_matrix(g, args.target))
    doc = _envelope("charpoly", args)
    doc["target"] = args.target
    doc["n"] = g.n
    doc["m"] = g.m
    doc["charpoly"] = poly.to_strings()
    if args.target == "U":
        exponent, det = charpoly_u_factored(g)
        doc["factored"] = {
            "circle_exponent": exponent,
            "walk_determinant": det.to_strings(),
        }
    if args.format == "json":
        _print_json(doc)
    else:
        print(f"charpoly target={args.target} n={g.n} m={g.m} "
              f"tolerance={args.tolerance:g} order={args.order} seed={args.seed}")
        print(poly.format("x"))
        if args.target == "U":
            print(f"factored: (x^2 - 1)^{doc['factored']['circle_exponent']} "
                  f"* ({Poly.from_strings(doc['factored']['walk_determinant']).format('x')})")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = _load_graph(args)
    matrix = _target_matrix(g, args.target)
    poly = charpoly_exact(matrix)
    spectrum = roots(poly, args.tolerance)
    info = degree_info(g)
    rep = validate(g)

    mapped = None
    verdict = None
    if args.target == "U" and g.m >= g.n:
        walk_eigs = real_roots(charpoly_exact(random_walk_matrix(g)), args.tolerance)
        mapped = map_random_walk_spectrum(walk_eigs, g.m, g.n, args.tolerance)
        verdict = compare(spectrum, mapped, args.tolerance)
    elif (
        args.target == "U+"
        and rep.simple
        and rep.connected
        and rep.md2
        and info.regular_degree is not None
    ):
        adj_eigs = real_roots(charpoly_exact(adjacency_matrix(g)), args.tolerance)
        mapped = map_adjacency_spectrum(
            adj_eigs, info.regular_degree, g.m, g.n, args.tolerance
        )
        verdict = compare(spectrum, mapped, args.tolerance)

    if args.format == "csv":
        print("re,im,operator")
        for z in spectrum.values:
            print(f"{z.real!r},{z.imag!r},{args.target}")
        return EXIT_IDENTITY if verdict is not None and not verdict.equal else EXIT_OK

    doc = _envelope("spectrum", args)
    doc["target"] = args.target
    doc["n"] = g.n
    doc["m"] = g.m
    doc["charpoly"] = poly.to_strings()
    doc["spectrum"] = [{"re": z.real, "im": z.imag} for z in spectrum.values]
    doc["max_residual"] = spectrum.max_residual
    doc["mapped"] = (
        None if mapped is None else [{"re": z.real, "im": z.imag} for z in mapped.values]
    )
    doc["verdict"] = (
        None
        if verdict is None
        else {"equal": verdict.equal, "max_pair_distance": verdict.max_pair_distance}
    )
    if args.format == "json":
        _print_json(doc)
    else:
        print(f"spectrum target={args.target} n={g.n} m={g.m} "
              f"tolerance={args.tolerance:g} order={args.order} seed={args.seed}")
        for z, count in spectrum.clustered():
            print(f"  {z.real:+.10f} {z.imag:+.10f}i  x{count}")
        if verdict is not None:
            status = "agrees" if verdict.equal else "DISAGREES"
            print(f"closed-form map {status} (max pair distance {verdict.max_pair_distance:.3e})")
    if verdict is not None and not verdict.equal:
        return EXIT_IDENTITY
    return EXIT_OK


def cmd_zeta(args) -> int:
    g = _load_graph(args)
    if args.format == "csv":
        raise ValueError("csv output applies to spectra only")
    arcs = build_arcs(g)
    edge = ihara_reciprocal_edge_form(arcs)
    bass = ihara_reciprocal_bass_form(g)
    agree = bass == RationalFunction(edge)
    series = PowerSeries.from_poly(edge, args.order).inverse()

    doc = _envelope("zeta", args)
    doc["n"] = g.n
    doc["m"] = g.m
    doc["edge_form"] = edge.to_strings()
    doc["bass_form"] = {
        "numerator": bass.num.to_strings(),
        "denominator": bass.den.to_strings(),
    }
    doc["forms_agree"] = agree
    doc["series"] = [str(c) for c in series.coeffs]
    oracle_matches = None
    if args.oracle:
        oracle = euler_product_oracle(arcs, args.order)  # may raise OracleSizeError
        oracle_matches = oracle == series
        doc["oracle_series"] = [str(c) for c in oracle.coeffs]
        doc["oracle_matches"] = oracle_matches

    if args.format == "json":
        _print_json(doc)
    else:
        print(f"zeta n={g.n} m={g.m} "
              f"tolerance={args.tolerance:g} order={args.order} seed={args.seed}")
        print(f"edge form: {edge.format('t')}")
        print(f"vertex form: ({bass.num.format('t')}) / ({bass.den.format('t')})")
        print(f"forms agree: {agree}")
        print("series:", " ".join(str(c) for c in series.coeffs))
        if args.oracle:
            print("oracle:", " ".join(doc["oracle_series"]))
            print(f"oracle matches: {oracle_matches}")
    if not agree or oracle_matches is False:
        return EXIT_IDENTITY
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = builtin_corpus(args.seed)
    if args.corpus == "smoke":
        corpus = [e for e in corpus if e.graph.n <= 4]
    report = run_identity_suite(corpus, seed=args.seed, weight_trials=args.trials)
    if args.format == "json":
        doc = _envelope("verify", args)
        doc["corpus"] = args.corpus
        doc["report"] = report.to_dict(include_timings=False)
        _print_json(doc)
    else:
        print(f"verify corpus={args.corpus} "
              f"tolerance={args.tolerance:g} order={args.order} seed={args.seed}")
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_IDENTITY


def cmd_distinguish(args) -> int:
    g = _resolve_graph_spec(args.left)
    h = _resolve_graph_spec(args.right)
    result = srg_distinguish(g, h)
    if args.format == "json":
        doc = _envelope("distinguish", args)
        doc["left"] = args.left
        doc["right"] = args.right
        doc["result"] = result.to_dict()
        _print_json(doc)
    else:
        print(f"distinguish {args.left} vs {args.right} "
              f"tolerance={args.tolerance:g} order={args.order} seed={args.seed}")
        if result.distinguished:
            print(f"distinguished at level {result.level} ({result.level_name})")
        else:
            print("indistinct through support of U^3")
    return EXIT_OK


def _add_common(sub):
    sub.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                     help="numeric comparison tolerance (default 1e-8)")
    sub.add_argument("--order", type=int, default=DEFAULT_ORDER,
                     help="series truncation order (default 8)")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized corpus members (default 42)")
    sub.add_argument("--format", choices=("json", "text", "csv"), default="json",
                     help="output format (csv applies to spectra only)")


def _add_input(sub):
    sub.add_argument("--graph6", help="graph6 string")
    sub.add_argument("--input", help="path to a graph file")
    sub.add_argument("--input-format", choices=("auto", "edgelist", "graph6"),
                     default="auto", help="file format (default: by extension)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkzeta",
        description="exact quantum-walk matrices, graph zeta functions and spectra",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("charpoly", help="characteristic polynomial of a walk matrix")
    p.add_argument("--target", choices=TARGETS, default="U")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_charpoly)

    p = subs.add_parser("spectrum", help="numeric spectrum with closed-form cross-check")
    p.add_argument("--target", choices=TARGETS, default="U")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = subs.add_parser("zeta", help="zeta reciprocal in both determinant forms")
    p.add_argument("--oracle", action="store_true",
                   help="also run the prime-cycle Euler product oracle")
    _add_input(p)
    _add_common(p)
    p.set_defaults(func=cmd_zeta)

    p = subs.add_parser("verify", help="run the identity suite on the corpus")
    p.add_argument("--corpus", choices=("builtin", "smoke"), default="builtin")
    p.add_argument("--trials", type=int, default=10,
                   help="random weight matrices per graph (default 10)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("distinguish", help="lowest support level separating two graphs")
    p.add_argument("left", help="graph name, file path or graph6 string")
    p.add_argument("right", help="graph name, file path or graph6 string")
    _add_common(p)
    p.set_defaults(func=cmd_distinguish)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if args.order < 1:
            raise ValueError("order must be >= 1")
        return args.func(args)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
