"""Command-line interface.

Subcommands: ``build-knn``, ``build-ratings``, ``psi``, ``select``,
``predict``, ``certify``, ``experiment``.  Exit codes: 0 success, 1 usage
error, 2 data error, 3 desk-scale enumeration limit.

Strength and target values cross the CLI boundary in the units of the input
file; graphs ingested with rational weights are scaled to integers
internally, and reported quantities are scaled back.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import construct, formats
from .exceptions import DataError, DeskScaleLimitError, GraphStrengthError
from .experiment import ExperimentSpec, run_experiment
from .graphs import Hypergraph, WeightedGraph
from .oracles import CutOracle, GraphCutOracle, HypergraphCutOracle
from .prediction import error_certificate, label_prop_predict, mincut_predict
from .selection import select_for_budget, select_for_target
from .sets import NodeSet
from .strength import strength

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # Usage problems exit 1; argparse's default of 2 is reserved for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ratio(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a ratio like 5/2, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("ratio must be non-negative")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _count_list(text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(tok) for tok in text.split(",") if tok)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated counts, got {text!r}")
    if not counts or any(c < 1 for c in counts):
        raise argparse.ArgumentTypeError("label counts must be positive integers")
    return counts


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphstrength", description=__doc__.split("\n")[1])
    parser.add_argument("--seed", type=int, default=0, help="global random seed")
    parser.add_argument(
        "--oracle",
        choices=["graph", "hypergraph"],
        default="graph",
        help="interpret --input as an edge list or a hyperedge list",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-knn", help="points file to k-NN edge list")
    p.add_argument("--points", required=True)
    p.add_argument("--k", type=_positive_int, default=10)
    p.add_argument("--weighted", action="store_true", help="Gaussian kernel weights")
    p.add_argument("--output", required=True)

    p = sub.add_parser("build-ratings", help="ratings file to preference hypergraph")
    p.add_argument("--ratings", required=True)
    p.add_argument("--min-ratings", type=int, default=10)
    p.add_argument("--output", required=True)
    p.add_argument("--item-map", help="also write the node-to-item mapping")

    p = sub.add_parser("psi", help="certified strength of a labeled set")
    p.add_argument("--input", required=True)
    p.add_argument("--labeled", required=True, help="comma list of nodes, or @labelsfile")

    p = sub.add_parser("select", help="select a labeled set")
    p.add_argument("--input", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--target-psi", type=_ratio, help="grow until this strength")
    mode.add_argument("--budget", type=_positive_int, help="maximize strength with at most K nodes")
    p.add_argument("--rel-gap", type=_ratio, default=Fraction(1, 10000))
    p.add_argument("--output", help="write the selection document here instead of stdout")

    p = sub.add_parser("predict", help="complete partial labels")
    p.add_argument("--input", required=True)
    p.add_argument("--labels", required=True, help="partial labels file (defines L)")
    p.add_argument("--method", choices=["mincut", "labelprop"], default="mincut")
    p.add_argument("--mu", type=float, default=1e-6)
    p.add_argument("--eps", type=float, default=1e-6)
    p.add_argument("--output", help="write predicted labels here instead of stdout")

    p = sub.add_parser("certify", help="deterministic error certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--truth", required=True, help="total labels file")
    p.add_argument("--predicted", required=True, help="total labels file")
    p.add_argument("--labeled", required=True, help="comma list of nodes, or @labelsfile")

    p = sub.add_parser("experiment", help="selection-vs-baseline error benchmark")
    p.add_argument("--input", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--method", choices=["psi-max", "random"], required=True)
    p.add_argument("--predictor", choices=["mincut", "labelprop"], default="mincut")
    p.add_argument("--label-counts", type=_count_list, required=True)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--output", help="write CSV here instead of stdout")
    return parser


def _load_data(args) -> WeightedGraph | Hypergraph:
    if args.oracle == "hypergraph":
        return formats.read_hyperedge_list(args.input)
    return formats.read_edge_list(args.input)


def _oracle_for(data) -> CutOracle:
    if isinstance(data, Hypergraph):
        return HypergraphCutOracle(data)
    return GraphCutOracle(data)


def _parse_labeled(spec: str, n: int) -> NodeSet:
    if spec.startswith("@"):
        return formats.read_labels(spec[1:], n=n).defined
    if spec.strip() == "":
        return NodeSet.empty(n)
    try:
        nodes = [int(tok) for tok in spec.split(",")]
    except ValueError:
        raise DataError(f"cannot parse labeled set {spec!r}") from None
    return NodeSet(n, nodes)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _ratio_out(value, scale: int) -> str:
    if value == math.inf:
        return "inf"
    scaled = Fraction(value) / scale
    return f"{scaled.numerator}/{scaled.denominator}"


def _cmd_build_knn(args) -> int:
    points = formats.read_points(args.points)
    g = construct.knn_graph(points, k=args.k, weighted=args.weighted)
    formats.write_edge_list(g, args.output)
    print(f"nodes\t{g.node_count}")
    print(f"edges\t{len(g.edges)}")
    return 0


def _cmd_build_ratings(args) -> int:
    triples = formats.read_ratings(args.ratings)
    h, items = construct.ratings_to_hypergraph(triples, min_ratings=args.min_ratings)
    formats.write_hyperedge_list(h, args.output)
    if args.item_map:
        formats.write_item_map(items, args.item_map)
    print(f"nodes\t{h.node_count}")
    print(f"hyperedges\t{len(h.hyperedges)}")
    return 0


def _cmd_psi(args) -> int:
    data = _load_data(args)
    oracle = _oracle_for(data)
    labeled = _parse_labeled(args.labeled, oracle.n)
    cert = strength(oracle, labeled)
    scale = data.weight_scale
    print(f"psi\t{_ratio_out(cert.value, scale)}")
    print("witness\t" + ",".join(str(i) for i in cert.witness))
    print(f"iterations\t{cert.iterations}")
    return 0


def _cmd_select(args) -> int:
    data = _load_data(args)
    oracle = _oracle_for(data)
    scale = data.weight_scale
    if args.target_psi is not None:
        result = select_for_target(oracle, args.target_psi * scale)
    else:
        result = select_for_budget(oracle, args.budget, args.rel_gap)
    _emit(formats.format_selection(result, oracle.n, scale), args.output)
    return 0


def _cmd_predict(args) -> int:
    data = _load_data(args)
    y_l = formats.read_labels(args.labels, n=data.node_count)
    labeled = y_l.defined
    if args.method == "labelprop":
        if not isinstance(data, WeightedGraph):
            raise DataError("label propagation requires a graph input")
        predicted = label_prop_predict(data, labeled, y_l, mu=args.mu, eps=args.eps)
    else:
        predicted = mincut_predict(_oracle_for(data), labeled, y_l)
    _emit(formats.format_labels(predicted), args.output)
    return 0


def _cmd_certify(args) -> int:
    data = _load_data(args)
    oracle = _oracle_for(data)
    truth = formats.read_labels(args.truth, n=oracle.n)
    predicted = formats.read_labels(args.predicted, n=oracle.n)
    labeled = _parse_labeled(args.labeled, oracle.n)
    report = error_certificate(oracle, labeled, truth, predicted)
    scale = data.weight_scale
    print(f"disagreements\t{report.disagreements}")
    print(f"cost_true\t{_ratio_out(report.cost_truth, scale)}")
    print(f"cost_predicted\t{_ratio_out(report.cost_predicted, scale)}")
    print(f"psi\t{_ratio_out(report.strength_value, scale)}")
    print(f"bound\t{_ratio_out(report.bound_value, 1)}")
    print(f"holds\t{str(report.bound_holds).lower()}")
    print(f"vacuous\t{str(report.vacuous).lower()}")
    print("labeled\t" + ",".join(str(i) for i in report.labeled))
    return 0


def _cmd_experiment(args) -> int:
    spec = ExperimentSpec(
        dataset=args.input,
        fmt="hyperedges" if args.oracle == "hypergraph" else "edges",
        labels=args.truth,
        method=args.method,
        predictor=args.predictor,
        label_counts=args.label_counts,
        trials=args.trials,
        seed=args.seed,
    )
    rows = run_experiment(spec)
    _emit(formats.experiment_csv(rows), args.output)
    return 0


_COMMANDS = {
    "build-knn": _cmd_build_knn,
    "build-ratings": _cmd_build_ratings,
    "psi": _cmd_psi,
    "select": _cmd_select,
    "predict": _cmd_predict,
    "certify": _cmd_certify,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return _COMMANDS[args.command](args)
    except DeskScaleLimitError as e:
        print(f"graphstrength: {e}", file=sys.stderr)
        return 3
    except (GraphStrengthError, OSError) as e:
        print(f"graphstrength: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
