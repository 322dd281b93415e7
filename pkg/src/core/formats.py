"""
formats.py
----------
Input/output for graphs and configurations.

Formats:
- Edge list text: first line "n m", then one "u v" per edge, 0-indexed.
  Blank lines and '#' comments are ignored.
- Configuration JSON: {"n", "rank", "colors", "pairing"}.

Malformed input raises InputFormatError with the 1-based line and column
of the offending token.

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Union

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.configuration import Configuration, ConfigurationError
from core.results import jsonable


class InputFormatError(Exception):
    """Malformed input file; carries 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _tokens(line: str):
    """Yield (column, token) with 1-based columns."""
    column = 0
    for part in line.split():
        column = line.index(part, column)
        yield column + 1, part
        column += len(part)


def parse_edge_list(text: str) -> nx.Graph:
    """Parse edge-list text into an undirected graph on 0..n-1."""
    header = None
    graph = nx.Graph()
    edges_seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        if not line.strip():
            continue
        tokens = list(_tokens(line))
        if len(tokens) != 2:
            column = tokens[2][0] if len(tokens) > 2 else len(line.rstrip()) + 1
            raise InputFormatError(f"expected 2 integers, found {len(tokens)} token(s)", lineno, column)
        values = []
        for column, token in tokens:
            try:
                values.append(int(token))
            except ValueError:
                raise InputFormatError(f"not an integer: {token!r}", lineno, column)
        if header is None:
            header = values
            if header[0] < 0 or header[1] < 0:
                raise InputFormatError("negative header value", lineno, tokens[0][0])
            graph.add_nodes_from(range(header[0]))
            continue
        u, v = values
        for (column, _), vertex in zip(tokens, values):
            if not 0 <= vertex < header[0]:
                raise InputFormatError(f"vertex {vertex} out of range [0, {header[0]})", lineno, column)
        if u == v:
            raise InputFormatError(f"self-loop on {u}", lineno, tokens[0][0])
        graph.add_edge(u, v)
        edges_seen += 1
    if header is None:
        raise InputFormatError("missing 'n m' header", 1, 1)
    if edges_seen != header[1]:
        raise InputFormatError(f"header declares {header[1]} edges, found {edges_seen}", 1, 1)
    return graph


def read_edge_list(path: Union[str, Path]) -> nx.Graph:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_edge_list(f.read())


def format_edge_list(graph: nx.Graph) -> str:
    graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    lines = [f"{graph.number_of_nodes()} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_edge_list(graph: nx.Graph, path: Union[str, Path]) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_edge_list(graph))


def configuration_to_dict(cfg: Configuration) -> Dict[str, Any]:
    return {
        "n": cfg.n,
        "rank": cfg.rank,
        "colors": cfg.colors.astype(int).tolist(),
        "pairing": list(cfg.pairing),
    }


def configuration_from_dict(data: Dict[str, Any]) -> Configuration:
    if not isinstance(data, dict):
        raise InputFormatError(f"expected a JSON object, got {type(data).__name__}", 1, 1)
    for key in ("n", "rank", "colors"):
        if key not in data:
            raise InputFormatError(f"missing key {key!r}", 1, 1)
    n, colors = data["n"], data["colors"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputFormatError(f"n must be a non-negative integer, got {n!r}", 1, 1)
    if not isinstance(colors, list) or len(colors) != n or any(
            not isinstance(row, list) or len(row) != n for row in colors):
        raise InputFormatError(f"colors must be {n}x{n}", 1, 1)
    for u, row in enumerate(colors):
        for v, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InputFormatError(f"colors[{u}][{v}] is not an integer: {value!r}", 1, 1)
    try:
        cfg = Configuration(colors, pairing=data.get("pairing"))
    except (ConfigurationError, TypeError, ValueError) as e:
        raise InputFormatError(str(e), 1, 1)
    if cfg.rank != data["rank"]:
        raise InputFormatError(f"declared rank {data['rank']} but colors use {cfg.rank}", 1, 1)
    return cfg


def read_configuration(path: Union[str, Path]) -> Configuration:
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(e.msg, e.lineno, e.colno)
    return configuration_from_dict(data)


def write_configuration(cfg: Configuration, path: Union[str, Path]) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(configuration_to_dict(cfg), f)


def dumps_report(report: Any) -> str:
    """Deterministic JSON (sorted keys) for any report object."""
    return json.dumps(jsonable(report), sort_keys=True, indent=2)
