"""Text file formats: graphs, hypergraphs, labels, points, ratings,
selection documents and experiment CSV.

All formats are line-oriented, tab-separated, 0-based, with ``#`` comment
lines ignored.  Writers emit a ``# nodes: N`` directive so files round-trip
even with trailing isolated nodes; readers honor the directive but accept
files without it.  Every writer/reader pair reproduces an identical
in-memory object.
"""

from __future__ import annotations

import csv
import io
import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DataError, ParseError
from .graphs import Hypergraph, WeightedGraph
from .sets import Labeling, NodeSet
from .selection import SelectionResult

__all__ = [
    "read_edge_list",
    "write_edge_list",
    "read_hyperedge_list",
    "write_hyperedge_list",
    "read_labels",
    "write_labels",
    "format_labels",
    "read_points",
    "write_points",
    "read_ratings",
    "write_ratings",
    "read_selection",
    "write_selection",
    "format_selection",
    "read_item_map",
    "write_item_map",
    "experiment_csv",
    "read_experiment_csv",
]

_NODES_DIRECTIVE = re.compile(r"#\s*nodes:\s*(\d+)\s*$")


def _lines(path) -> Iterable[tuple[int, str]]:
    text = Path(path).read_text()
    for no, raw in enumerate(text.splitlines(), start=1):
        yield no, raw


def _content_lines(path) -> tuple[int | None, list[tuple[int, str]]]:
    """Split a file into an optional node-count directive and data lines."""
    declared: int | None = None
    data = []
    for no, raw in _lines(path):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = _NODES_DIRECTIVE.match(stripped)
            if m:
                declared = int(m.group(1))
            continue
        data.append((no, raw))
    return declared, data


def _parse_index(tok: str, line: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"expected a node index, got {tok!r}", line) from None
    if v < 0:
        raise ParseError(f"node indices are 0-based and non-negative, got {v}", line)
    return v


def _parse_weight(tok: str, line: int) -> Fraction | float:
    tok = tok.strip()
    try:
        if "/" in tok:
            return Fraction(tok)
        if any(c in tok for c in ".eE") and not tok.lstrip("+-").isdigit():
            value = float(tok)
            if not math.isfinite(value):
                raise ValueError
            return value
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse weight {tok!r}", line) from None


def _weight_text(w: int | float, scale: int) -> str:
    if isinstance(w, float):
        return repr(w)
    return str(Fraction(w, scale))


# -- edge lists --------------------------------------------------------------


def read_edge_list(path) -> WeightedGraph:
    """Lines ``u<TAB>v<TAB>w`` with rational or real ``w``."""
    declared, data = _content_lines(path)
    parsed: list[tuple[int, int, Fraction | float]] = []
    any_float = False
    max_node = -1
    for no, raw in data:
        fields = raw.split("\t")
        if len(fields) != 3:
            raise ParseError(
                f"expected 'u<TAB>v<TAB>w', got {raw!r}", no
            )
        u = _parse_index(fields[0], no)
        v = _parse_index(fields[1], no)
        w = _parse_weight(fields[2], no)
        any_float = any_float or isinstance(w, float)
        max_node = max(max_node, u, v)
        parsed.append((u, v, w))
    n = declared if declared is not None else max_node + 1
    if n < 1:
        raise DataError(f"{path}: empty edge list without a node-count directive")
    if any_float:
        return WeightedGraph(n, [(u, v, float(w)) for u, v, w in parsed])
    return WeightedGraph.from_rational_edges(n, parsed)


def write_edge_list(g: WeightedGraph, path) -> None:
    out = [f"# nodes: {g.node_count}"]
    for u, v, w in g.edges:
        out.append(f"{u}\t{v}\t{_weight_text(w, g.weight_scale)}")
    Path(path).write_text("\n".join(out) + "\n")


# -- hyperedge lists ----------------------------------------------------------


def read_hyperedge_list(path) -> Hypergraph:
    """Lines ``w<TAB>v1,v2,...`` with rational ``w``."""
    declared, data = _content_lines(path)
    parsed: list[tuple[Fraction, tuple[int, ...]]] = []
    max_node = -1
    for no, raw in data:
        fields = raw.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 'w<TAB>v1,v2,...', got {raw!r}", no)
        w = _parse_weight(fields[0], no)
        if isinstance(w, float):
            raise ParseError("hyperedge weights must be rational", no)
        members = tuple(
            _parse_index(tok, no) for tok in fields[1].split(",") if tok != ""
        )
        if not members:
            raise ParseError("hyperedge has no members", no)
        max_node = max(max_node, *members)
        parsed.append((w, members))
    n = declared if declared is not None else max_node + 1
    if n < 1:
        raise DataError(f"{path}: empty hyperedge list without a node-count directive")
    return Hypergraph.from_rational_edges(n, parsed)


def write_hyperedge_list(h: Hypergraph, path) -> None:
    out = [f"# nodes: {h.node_count}"]
    for w, members in h.hyperedges:
        joined = ",".join(str(i) for i in members)
        out.append(f"{_weight_text(w, h.weight_scale)}\t{joined}")
    Path(path).write_text("\n".join(out) + "\n")


# -- labels -------------------------------------------------------------------


def read_labels(path, n: int | None = None) -> Labeling:
    """Lines ``node<TAB>{0,1}``; a partial labeling over a declared universe."""
    declared, data = _content_lines(path)
    if n is None:
        n = declared
    if n is None:
        raise DataError(
            f"{path}: labels file needs a '# nodes: N' directive or an explicit size"
        )
    assignments: dict[int, int] = {}
    for no, raw in data:
        fields = raw.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 'node<TAB>label', got {raw!r}", no)
        node = _parse_index(fields[0], no)
        if fields[1] not in ("0", "1"):
            raise ParseError(f"labels are 0 or 1, got {fields[1]!r}", no)
        if node in assignments:
            raise ParseError(f"node {node} labeled twice", no)
        if node >= n:
            raise ParseError(f"node {node} outside universe of size {n}", no)
        assignments[node] = int(fields[1])
    return Labeling.partial(n, assignments)


def format_labels(y: Labeling) -> str:
    out = [f"# nodes: {y.n}"]
    for i in sorted(y.defined):
        out.append(f"{i}\t{y[i]}")
    return "\n".join(out) + "\n"


def write_labels(y: Labeling, path) -> None:
    Path(path).write_text(format_labels(y))


# -- points -------------------------------------------------------------------


def read_points(path) -> np.ndarray:
    """Lines of comma-separated real coordinates."""
    _, data = _content_lines(path)
    rows = []
    width = None
    for no, raw in data:
        try:
            row = [float(tok) for tok in raw.split(",")]
        except ValueError:
            raise ParseError(f"cannot parse coordinates {raw!r}", no) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"expected {width} coordinates, got {len(row)}", no
            )
        rows.append(row)
    if not rows:
        raise DataError(f"{path}: no points found")
    return np.array(rows, dtype=float)


def write_points(points: np.ndarray, path) -> None:
    arr = np.asarray(points, dtype=float)
    lines = [",".join(repr(x) for x in row) for row in arr]
    Path(path).write_text("\n".join(lines) + "\n")


# -- ratings ------------------------------------------------------------------


def read_ratings(path) -> list[tuple[str, str, Fraction]]:
    """Triples ``user<TAB>item<TAB>stars``.

    ``::``-separated lines (the common ratings-dump layout, with an optional
    trailing timestamp field) are accepted as well.
    """
    _, data = _content_lines(path)
    triples = []
    for no, raw in data:
        if "\t" in raw:
            fields = raw.split("\t")
            if len(fields) != 3:
                raise ParseError(
                    f"expected 'user<TAB>item<TAB>stars', got {raw!r}", no
                )
        else:
            fields = raw.split("::")
            if len(fields) == 4:
                fields = fields[:3]
            if len(fields) != 3:
                raise ParseError(f"cannot parse rating triple {raw!r}", no)
        stars_tok = fields[2].strip()
        try:
            stars = Fraction(stars_tok)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot parse star rating {stars_tok!r}", no) from None
        triples.append((fields[0].strip(), fields[1].strip(), stars))
    return triples


def write_ratings(triples: Sequence[tuple[str, str, Fraction]], path) -> None:
    out = [f"{user}\t{item}\t{stars}" for user, item, stars in triples]
    Path(path).write_text("\n".join(out) + "\n")


# -- selection documents -------------------------------------------------------


def _ratio_text(value: Fraction | float, scale: int = 1) -> str:
    if value == math.inf:
        return "inf"
    scaled = Fraction(value) / scale
    return f"{scaled.numerator}/{scaled.denominator}"


def _parse_ratio(tok: str, line: int) -> Fraction | float:
    if tok == "inf":
        return math.inf
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse ratio {tok!r}", line) from None


def _nodes_text(s: NodeSet) -> str:
    return ",".join(str(i) for i in s)


def _parse_nodes(tok: str, n: int, line: int) -> NodeSet:
    if tok == "":
        return NodeSet.empty(n)
    return NodeSet(n, (_parse_index(t, line) for t in tok.split(",")))


def format_selection(result: SelectionResult, n: int, scale: int = 1) -> str:
    """Structured text rendering of a selection result.

    ``scale`` converts internally-scaled integer weights back to the units of
    the input file.
    """
    lines = [
        f"nodes\t{n}",
        f"chosen\t{_nodes_text(result.chosen)}",
        f"psi\t{_ratio_text(result.strength, scale)}",
    ]
    if result.target is not None:
        lines.append(f"lambda\t{_ratio_text(result.target, scale)}")
    if result.witness is not None:
        lines.append(f"witness\t{_nodes_text(result.witness)}")
    lines.append(f"evaluations\t{result.evaluations}")
    for node, value in result.trace:
        lines.append(f"trace\t{node}\t{_ratio_text(value, scale)}")
    return "\n".join(lines) + "\n"


def write_selection(result: SelectionResult, path, n: int, scale: int = 1) -> None:
    Path(path).write_text(format_selection(result, n, scale))


def read_selection(path) -> SelectionResult:
    _, data = _content_lines(path)
    fields: dict[str, tuple[str, int]] = {}
    trace: list[tuple[int, Fraction]] = []
    n: int | None = None
    for no, raw in data:
        parts = raw.split("\t")
        key = parts[0]
        if key == "trace":
            if len(parts) != 3:
                raise ParseError(f"expected 'trace<TAB>node<TAB>value', got {raw!r}", no)
            value = _parse_ratio(parts[2], no)
            assert isinstance(value, Fraction)
            trace.append((_parse_index(parts[1], no), value))
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'key<TAB>value', got {raw!r}", no)
        fields[key] = (parts[1], no)
        if key == "nodes":
            n = _parse_index(parts[1], no)
    if n is None:
        raise DataError(f"{path}: selection document lacks a 'nodes' line")
    try:
        chosen_tok, chosen_no = fields["chosen"]
        psi_tok, psi_no = fields["psi"]
        eval_tok, eval_no = fields["evaluations"]
    except KeyError as missing:
        raise DataError(f"{path}: selection document lacks a {missing} line") from None
    target = None
    if "lambda" in fields:
        tok, no = fields["lambda"]
        target = _parse_ratio(tok, no)
    witness = None
    if "witness" in fields:
        tok, no = fields["witness"]
        witness = _parse_nodes(tok, n, no)
    return SelectionResult(
        chosen=_parse_nodes(chosen_tok, n, chosen_no),
        strength=_parse_ratio(psi_tok, psi_no),
        target=target,
        trace=tuple(trace),
        evaluations=_parse_index(eval_tok, eval_no),
        witness=witness,
    )


# -- item maps ------------------------------------------------------------------


def write_item_map(items: Sequence[str], path) -> None:
    out = [f"{i}\t{item}" for i, item in enumerate(items)]
    Path(path).write_text("\n".join(out) + "\n")


def read_item_map(path) -> tuple[str, ...]:
    _, data = _content_lines(path)
    entries = {}
    for no, raw in data:
        fields = raw.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 'index<TAB>item', got {raw!r}", no)
        entries[_parse_index(fields[0], no)] = fields[1]
    if sorted(entries) != list(range(len(entries))):
        raise DataError(f"{path}: item map indices are not 0..n-1")
    return tuple(entries[i] for i in range(len(entries)))


# -- experiment CSV --------------------------------------------------------------


_CSV_FIELDS = ["method", "predictor", "k", "mean_error", "std", "trials"]


def experiment_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row[k] for k in _CSV_FIELDS})
    return buf.getvalue()


def read_experiment_csv(text: str) -> list[dict]:
    reader = csv.DictReader(io.StringIO(text))
    rows = []
    for row in reader:
        rows.append(
            {
                "method": row["method"],
                "predictor": row["predictor"],
                "k": int(row["k"]),
                "mean_error": float(row["mean_error"]),
                "std": float(row["std"]),
                "trials": int(row["trials"]),
            }
        )
    return rows
