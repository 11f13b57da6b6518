"""Periodic graphs as finite voltage graphs over Z.

A graph Y with a free cocompact Z-action is stored as its quotient X together
with an integer shift on every edge: the edge ``a -> b`` with shift ``k``
joins the lift ``(a, n)`` to ``(b, n + k)`` for every n.

Loop convention: a loop with shift k contributes t^k + t^-k to the diagonal
of the adjacency matrix and 2 to the degree, so a shift-0 loop contributes 2.
This reproduces the 1x1 matrix (1/t + 2 + t) of a vertex carrying one shift-0
and one shift-1 loop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import LaurentPoly, Poly


class GraphFormatError(ValueError):
    """Invalid graph description; ``location`` points at the offending item."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    shift: int

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst


@dataclass(frozen=True)
class VoltageGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not self.vertices:
            raise GraphFormatError("graph needs at least one vertex", "vertices")
        n = len(self.vertices)
        for k, e in enumerate(self.edges):
            if not (0 <= e.src < n and 0 <= e.dst < n):
                raise GraphFormatError("edge endpoint out of range", f"edges[{k}]")

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def chi(self) -> int:
        return self.v - self.e

    def degrees(self) -> list[int]:
        deg = [0] * self.v
        for e in self.edges:
            deg[e.src] += 1
            deg[e.dst] += 1
        return deg

    def q_values(self) -> list[int]:
        return [d - 1 for d in self.degrees()]

    def relift(self, potentials: Sequence[int]) -> "VoltageGraph":
        """Same periodic graph with vertex ``i`` re-lifted by ``potentials[i]``."""
        k = list(potentials)
        edges = tuple(Edge(e.src, e.dst, e.shift + k[e.src] - k[e.dst]) for e in self.edges)
        return VoltageGraph(self.vertices, edges)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"from": self.vertices[e.src], "to": self.vertices[e.dst],
                       "shift": e.shift} for e in self.edges],
        }


def parse_graph(text: str | dict) -> VoltageGraph:
    """Parse the JSON graph format ``{"vertices": [...], "edges": [...]}``."""
    if isinstance(text, (str, bytes)):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"malformed JSON ({exc.msg})",
                                   f"line {exc.lineno} column {exc.colno}") from exc
    else:
        data = text
    if not isinstance(data, dict):
        raise GraphFormatError("top level must be an object")
    verts = data.get("vertices")
    if not isinstance(verts, list):
        raise GraphFormatError("missing or non-list 'vertices'", "vertices")
    if not verts:
        raise GraphFormatError("empty vertex set", "vertices")
    index = {}
    for k, name in enumerate(verts):
        if not isinstance(name, str):
            raise GraphFormatError("vertex labels must be strings", f"vertices[{k}]")
        if name in index:
            raise GraphFormatError(f"duplicate vertex {name!r}", f"vertices[{k}]")
        index[name] = k
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list", "edges")
    edges = []
    for k, item in enumerate(raw_edges):
        where = f"edges[{k}]"
        if not isinstance(item, dict):
            raise GraphFormatError("edge must be an object", where)
        ends = []
        for key in ("from", "to"):
            name = item.get(key)
            if name not in index:
                raise GraphFormatError(f"unknown vertex {name!r}", f"{where}.{key}")
            ends.append(index[name])
        shift = item.get("shift", 0)
        if isinstance(shift, bool) or not isinstance(shift, int):
            raise GraphFormatError(f"shift must be an integer, got {shift!r}", f"{where}.shift")
        edges.append(Edge(ends[0], ends[1], shift))
    return VoltageGraph(tuple(verts), tuple(edges))


def load_graph(path) -> VoltageGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def adjacency(G: VoltageGraph) -> list[list[LaurentPoly]]:
    """Adjacency operator as a v x v matrix over Z[t, 1/t]."""
    n = G.v
    terms = [[{} for _ in range(n)] for _ in range(n)]

    def bump(i, j, k):
        terms[i][j][k] = terms[i][j].get(k, 0) + 1

    for e in G.edges:
        bump(e.src, e.dst, e.shift)
        bump(e.dst, e.src, -e.shift)
    return [[LaurentPoly({k: Poly.const(c) for k, c in cell.items()}) for cell in row]
            for row in terms]


@dataclass(frozen=True)
class DeltaU:
    """The matrix I - delta u + Q u^2 over Z[u][t, 1/t]."""

    matrix: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def is_t_symmetric(self) -> bool:
        n = self.size
        return all(self.matrix[i][j] == self.matrix[j][i].inverted()
                   for i in range(n) for j in range(n))


def build_delta_u(G: VoltageGraph) -> DeltaU:
    delta = adjacency(G)
    q = G.q_values()
    minus_u = Poly((0, -1))
    rows = []
    for i in range(G.v):
        row = []
        for j in range(G.v):
            entry = delta[i][j] * minus_u
            if i == j:
                entry = entry + Poly((1, 0, q[i]))
            row.append(entry)
        rows.append(tuple(row))
    return DeltaU(tuple(rows))


def graph_invariants(G: VoltageGraph) -> tuple[int, int | None]:
    """Euler characteristic of X and q when X is (q+1)-regular, else None."""
    q = G.q_values()
    regular = q[0] if len(set(q)) == 1 else None
    return G.chi, regular


def delta_u_numeric(G: VoltageGraph, u: complex, t: complex) -> np.ndarray:
    """I - delta(t) u + Q u^2 evaluated directly from the edge list."""
    n = G.v
    M = np.zeros((n, n), dtype=complex)
    for e in G.edges:
        M[e.src, e.dst] -= u * t ** e.shift
        M[e.dst, e.src] -= u * t ** (-e.shift)
    for i, q in enumerate(G.q_values()):
        M[i, i] += 1 + q * u * u
    return M
