from typing import Callable, Optional

from errors import RejectedInputError
from graphs.graph import FiniteGraph


def _quote(text: str) -> str:
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(graph: FiniteGraph, name: str = 'G', namer: Optional[Callable] = None) -> str:
    """Deterministic DOT text; vertex ids are the rendered labels."""
    namer = namer or (lambda label: label if not isinstance(label, tuple) else
                      '(' + ','.join(map(str, label)) + ')')
    ids = [str(namer(graph.label(v))) for v in range(graph.vertex_count)]
    if len(set(ids)) != len(ids):
        ids = [f"{v}:{text}" for v, text in enumerate(ids)]
    lines = [f"graph {_quote(name)} {{"]
    lines.extend(f"  {_quote(i)};" for i in ids)
    lines.extend(f"  {_quote(ids[u])} -- {_quote(ids[v])};" for u, v in graph.edges())
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_adjacency_text(graph: FiniteGraph) -> str:
    return ''.join(f"{v}: {' '.join(map(str, nbrs))}".rstrip() + '\n'
                   for v, nbrs in enumerate(graph.adjacency))


def from_adjacency_text(text: str) -> FiniteGraph:
    """Parse 'v: n1 n2 ...' lines; vertices must be numbered 0..n-1."""
    rows = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        head, sep, tail = line.partition(':')
        if not sep:
            raise RejectedInputError(f"line {lineno}: expected 'v: n1 n2 ...'")
        try:
            rows[int(head)] = [int(x) for x in tail.split()]
        except ValueError:
            raise RejectedInputError(f"line {lineno}: vertex ids must be integers") from None
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise RejectedInputError("vertices must be numbered 0..n-1")
    edges = [(v, w) for v, nbrs in rows.items() for w in nbrs]
    if any(not 0 <= w < n for _, w in edges):
        raise RejectedInputError("neighbour id out of range")
    graph = FiniteGraph.from_edges(n, edges, labels=range(n))
    graph.check()
    return graph
