"""Finite multigraphs, cycle graphs and anchor specifications.

Vertex and edge ids are 0-based in the API.  Human-facing text uses the
1-based labels ``v1..vα`` / ``e1..eβ``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

from .errors import InvalidParameterError


@dataclass(frozen=True)
class Graph:
    """Finite multigraph on vertices ``0..vertex_count-1``.

    Loops and parallel edges are allowed.  Edge ``j`` joins
    ``edges[j][0]`` and ``edges[j][1]``.
    """

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidParameterError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for j, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidParameterError(
                    f"edge {j} = ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def epsilon(self) -> int:
        """|E| - |V|."""
        return self.edge_count - self.vertex_count

    def boundary(self, j: int) -> FrozenSet[int]:
        """Endpoint set of edge ``j``; a loop has a single endpoint."""
        return frozenset(self.edges[j])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = self.vertex_count
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        return components == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.edge_count == self.vertex_count - 1

    def summary(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[u, v] for u, v in self.edges],
            "epsilon": self.epsilon(),
        }


@dataclass(frozen=True)
class CycleGraph(Graph):
    """Cycle graph C_k: edge ``i`` runs from vertex ``i`` to ``i+1 mod k``."""

    k: int = field(default=0)

    def tail(self, j: int) -> int:
        return j

    def head(self, j: int) -> int:
        return (j + 1) % self.k


def make_cycle(k: int) -> CycleGraph:
    if k < 2:
        raise InvalidParameterError(f"cycle graphs need k >= 2, got {k}")
    edges = tuple((i, (i + 1) % k) for i in range(k))
    return CycleGraph(vertex_count=k, edges=edges, k=k)


def make_path(length: int) -> Graph:
    """Path graph with ``length`` vertices (a tree)."""
    return Graph(length, tuple((i, i + 1) for i in range(length - 1)))


def make_theta(parallel: int = 3) -> Graph:
    """Two vertices joined by ``parallel`` edges."""
    return Graph(2, tuple((0, 1) for _ in range(parallel)))


def make_complete(m: int) -> Graph:
    return Graph(m, tuple((u, v) for u in range(m) for v in range(u + 1, m)))


@dataclass(frozen=True)
class AnchorSpec:
    """Anchor set ``K`` (vertex ids) and threshold ``q``."""

    K: FrozenSet[int]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "K", frozenset(int(v) for v in self.K))
        if self.q < 0:
            raise InvalidParameterError(f"q must be nonnegative, got {self.q}")

    @property
    def k(self) -> int:
        return len(self.K)

    def check(self, g: Graph) -> None:
        """Raise unless ``K`` lies in ``V(g)`` and ``q <= |K|``."""
        bad = sorted(v for v in self.K if not 0 <= v < g.vertex_count)
        if bad:
            raise InvalidParameterError(f"anchor ids {bad} are not vertices of the graph")
        if self.q > len(self.K):
            raise InvalidParameterError(f"q = {self.q} exceeds |K| = {len(self.K)}")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    hypothesis: Optional[str] = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_for_euler(g: Graph, a: AnchorSpec, n: int) -> Verdict:
    """Check the hypotheses under which the closed Euler formula applies.

    Returns a :class:`Verdict` instead of raising; a rejection names the
    first violated hypothesis.
    """
    if not g.is_connected():
        return Verdict(False, "connected", "graph is not connected")
    if g.edge_count < g.vertex_count:
        return Verdict(False, "not a tree", "graph is a tree")
    if not a.K:
        return Verdict(False, "K non-empty", "anchor set K is empty")
    if any(not 0 <= v < g.vertex_count for v in a.K):
        return Verdict(False, "K subset of V", "anchor set K is not contained in V")
    if a.q < 1:
        return Verdict(False, "q >= 1", f"q = {a.q} must be at least 1")
    if a.q > len(a.K):
        return Verdict(False, "q <= |K|", f"q = {a.q} exceeds |K| = {len(a.K)}")
    if n < a.q:
        return Verdict(False, "n >= q", f"n = {n} is smaller than q = {a.q}")
    return Verdict(True)


_GRAPH_FIELDS = {"vertices", "edges", "anchors", "q"}


@dataclass(frozen=True)
class GraphFile:
    graph: Graph
    anchors: Tuple[int, ...]
    q: Optional[int] = None

    def anchor_spec(self, q: Optional[int] = None) -> AnchorSpec:
        """AnchorSpec for the file's anchors; ``q`` overrides the stored threshold."""
        if q is None:
            q = self.q
        if q is None:
            raise InvalidParameterError("no q given on the command line or in the graph file")
        return AnchorSpec(frozenset(self.anchors), q)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def graph_from_json(obj: dict) -> GraphFile:
    """Parse the graph file format.

    ``{"vertices": α, "edges": [[u, v], ...], "anchors": [ids], "q": int}``
    with 0-based ids.  ``anchors`` defaults to every vertex and ``q`` is
    optional.  Unknown fields are rejected.
    """
    if not isinstance(obj, dict):
        raise InvalidParameterError("graph file must hold a JSON object")
    unknown = sorted(set(obj) - _GRAPH_FIELDS)
    if unknown:
        raise InvalidParameterError(f"unknown graph file fields: {unknown}")
    for key in ("vertices", "edges"):
        if key not in obj:
            raise InvalidParameterError(f"graph file is missing field {key!r}")
    if not _is_int(obj["vertices"]):
        raise InvalidParameterError("'vertices' must be an integer")
    edges = obj["edges"]
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or not all(_is_int(x) for x in e) for e in edges
    ):
        raise InvalidParameterError("'edges' must be a list of [u, v] integer pairs")
    g = Graph(obj["vertices"], tuple(tuple(e) for e in edges))
    anchors = obj.get("anchors", list(range(g.vertex_count)))
    if not isinstance(anchors, list) or not all(_is_int(x) for x in anchors):
        raise InvalidParameterError("'anchors' must be a list of vertex ids")
    q = obj.get("q")
    if q is not None and not _is_int(q):
        raise InvalidParameterError("'q' must be an integer")
    return GraphFile(g, tuple(anchors), q)


def load_graph_file(path) -> GraphFile:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidParameterError(f"{path}: not valid JSON ({exc})") from exc
    return graph_from_json(obj)
