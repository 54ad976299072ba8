"""Named graph constructions and the vertex-splitting operation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import VERTEX_CAP, Graph, graph_from_edges
from .errors import InvalidParameter, OrderCapExceeded


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    provenance: dict[str, Any] = field(default_factory=dict)


def split_vertex(g: Graph, x: int) -> Graph:
    """Replace x by one new leaf per neighbor.

    With y_1 < ... < y_k the neighbors of x, vertex x is removed (labels
    above x shift down by one) and k new vertices are appended, the i-th
    joined to y_i only.  Order changes by k-1, size is preserved.
    """
    g._check_vertex(x)
    nbrs = g.neighbors(x)
    k = len(nbrs)
    n_new = g.n - 1 + k
    if n_new > VERTEX_CAP:
        raise OrderCapExceeded(f"split yields order {n_new} above cap {VERTEX_CAP}")

    def shift(v: int) -> int:
        return v if v < x else v - 1

    edges = [(shift(u), shift(v)) for u, v in g.edges() if u != x and v != x]
    for i, y in enumerate(nbrs):
        edges.append((shift(y), g.n - 1 + i))
    return graph_from_edges(n_new, edges)


def petersen() -> NamedGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return NamedGraph("petersen", graph_from_edges(10, edges))


def pr() -> NamedGraph:
    """The Petersen graph with one vertex split into three leaves.

    The base is vertex-transitive, so all ten choices give isomorphic
    results; vertex 0 is used.
    """
    base = petersen()
    return NamedGraph("pr", split_vertex(base.graph, 0), {"base": "petersen", "split": 0})


def flower_snark(k: int) -> NamedGraph:
    """The flower snark J_k (odd k >= 3): 4k vertices, cubic.

    Vertex layout: hubs t_i = i, inner cycle u_i = k+i, outer rail
    v_i = 2k+i, w_i = 3k+i.  Each hub is joined to u_i, v_i, w_i; the
    u_i form a k-cycle; the v- and w-rails form a single 2k-cycle
    (v_0..v_{k-1}, w_0..w_{k-1} with the two cross links).
    """
    if k < 3 or k % 2 == 0:
        raise InvalidParameter(f"flower snark needs odd k >= 3, got {k}")
    if 4 * k > VERTEX_CAP:
        raise OrderCapExceeded(f"order {4 * k} above cap {VERTEX_CAP}")
    edges = []
    for i in range(k):
        edges.append((i, k + i))
        edges.append((i, 2 * k + i))
        edges.append((i, 3 * k + i))
        edges.append((k + i, k + (i + 1) % k))
    for i in range(k - 1):
        edges.append((2 * k + i, 2 * k + i + 1))
        edges.append((3 * k + i, 3 * k + i + 1))
    edges.append((2 * k + k - 1, 3 * k))
    edges.append((3 * k + k - 1, 2 * k))
    return NamedGraph(f"flower-snark-{k}", graph_from_edges(4 * k, edges), {"k": k})


def j_split(k: int, x: int) -> NamedGraph:
    if k < 5:
        raise InvalidParameter(f"flower-snark splits need odd k >= 5, got {k}")
    base = flower_snark(k)
    return NamedGraph(
        f"flower-snark-{k}-split-{x}",
        split_vertex(base.graph, x),
        {"base": f"flower-snark-{k}", "k": k, "split": x},
    )


def coxeter() -> NamedGraph:
    """Three 7-cycles at steps 1, 2, 3 plus seven hubs joined across.

    Vertices: a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i (indices mod
    7); edges a_i a_{i+1}, b_i b_{i+2}, c_i c_{i+3}, and the hub stars
    d_i -- a_i, b_i, c_i.  Cubic, order 28.
    """
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))
        edges.append((7 + i, 7 + (i + 2) % 7))
        edges.append((14 + i, 14 + (i + 3) % 7))
        edges.append((21 + i, i))
        edges.append((21 + i, 7 + i))
        edges.append((21 + i, 14 + i))
    return NamedGraph("coxeter", graph_from_edges(28, edges))


def coxeter_split(x: int) -> NamedGraph:
    base = coxeter()
    return NamedGraph(
        f"coxeter-split-{x}", split_vertex(base.graph, x), {"base": "coxeter", "split": x}
    )
