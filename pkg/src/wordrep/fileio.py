"""Line-oriented text formats for graphs, orientations and words.

Graph files:        `vertices: a b c` then one `edge: u v` per edge.
Orientation files:  `vertices:` line plus `arc: u v` lines covering a
                    simple graph's edge set exactly once.
Word files:         whitespace-separated vertex labels, one word per line.
`#` starts a comment; blank lines are ignored.  parse(print(x)) == x.
"""

from __future__ import annotations

from .core import Graph, Word
from .orient import Orientation


class ParseError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> Graph:
    vertices: list[str] | None = None
    edges: list[tuple[str, str]] = []
    for lineno, line in _lines(text):
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ParseError(f"line {lineno}: duplicate vertices line")
            vertices = line[len("vertices:"):].split()
        elif line.startswith("edge:"):
            parts = line[len("edge:"):].split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: edge needs exactly two endpoints")
            edges.append((parts[0], parts[1]))
        else:
            raise ParseError(f"line {lineno}: unrecognized directive {line.split(':')[0]!r}")
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        return Graph.from_edges(vertices, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def print_graph(G: Graph) -> str:
    out = ["vertices: " + " ".join(G.labels)]
    out += [f"edge: {u} {v}" for u, v in G.edge_labels()]
    return "\n".join(out) + "\n"


def parse_orientation(text: str) -> Orientation:
    vertices: list[str] | None = None
    arcs: list[tuple[str, str]] = []
    for lineno, line in _lines(text):
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ParseError(f"line {lineno}: duplicate vertices line")
            vertices = line[len("vertices:"):].split()
        elif line.startswith("arc:"):
            parts = line[len("arc:"):].split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: arc needs exactly two endpoints")
            arcs.append((parts[0], parts[1]))
        else:
            raise ParseError(f"line {lineno}: unrecognized directive {line.split(':')[0]!r}")
    if vertices is None:
        raise ParseError("missing vertices line")
    try:
        base = Graph.from_edges(vertices, arcs)
        return Orientation.from_arcs(base, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def print_orientation(D: Orientation) -> str:
    out = ["vertices: " + " ".join(D.base.labels)]
    out += [f"arc: {u} {v}" for u, v in D.arcs()]
    return "\n".join(out) + "\n"


def parse_words(text: str, alphabet: tuple[str, ...]) -> list[Word]:
    words = []
    for lineno, line in _lines(text):
        try:
            words.append(Word.from_labels(alphabet, line.split()))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return words


def print_words(words: list[Word]) -> str:
    return "\n".join(str(w) for w in words) + "\n"
