"""
Reading and writing ordered graphs and multipartite descriptions.

Ordered-graph text format: the first non-comment line is h, every further
non-comment line is "u v" with 1 <= u < v <= h, and '#' starts a comment.
"""

import os

from ordtile.datatypes.errors import InputError
from ordtile.datatypes.multipartite import CompleteMultipartite, OrderedMultipartite
from ordtile.datatypes.ordered_graph import OrderedGraph


def _content_lines(text):
    for number, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line


def parse_graph(text):
    """
    Parse the ordered-graph text format.

    Raises
    ------
    InputError
        On a missing or malformed vertex count, a malformed edge line, an edge with
        u >= v or outside 1..h, or a repeated edge.
    """
    lines = _content_lines(text)
    try:
        number, first = next(lines)
    except StopIteration:
        raise InputError("empty graph description: the first line must give h") from None
    try:
        h = int(first)
    except ValueError:
        raise InputError(f"line {number}: expected the vertex count, got {first!r}") from None
    if h < 1:
        raise InputError(f"line {number}: vertex count must be positive, got {h}")

    edges = []
    seen = set()
    for number, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {number}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputError(f"line {number}: endpoints must be integers, got {line!r}") from None
        if not 1 <= u < v <= h:
            raise InputError(f"line {number}: need 1 <= u < v <= {h}, got {u} {v}")
        if (u, v) in seen:
            raise InputError(f"line {number}: repeated edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return OrderedGraph(h, edges)


def format_graph(G):
    """Canonical text: h, then the edges in lexicographic order, one per line."""
    lines = [str(G.h)] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return '\n'.join(lines) + '\n'


def read_graph(path):
    with open(path, 'r', encoding='utf-8') as f:
        return parse_graph(f.read())


def write_graph(G, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_graph(G))


def read_parts(source, ordered=True):
    """
    Parameters
    ----------
    source : str
        A literal "parts: s1 ... sk" or the path of a file holding one.
    ordered : bool
        Keep the sequence (OrderedMultipartite) or sort it (CompleteMultipartite).
    """
    text = str(source)
    if not text.lstrip().startswith('parts:'):
        if not os.path.isfile(text):
            raise InputError(f"{text!r} is neither a 'parts:' literal nor a readable file")
        with open(text, 'r', encoding='utf-8') as f:
            text = f.read()
    cls = OrderedMultipartite if ordered else CompleteMultipartite
    return cls.parse(text)
