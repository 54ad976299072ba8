"""Graph property predicates built on the exact path engine.

Every predicate returns a PropertyReport carrying a machine-checkable
witness: the failing nonedge / vertex / cycle for "no" verdicts on
universally quantified properties, or a certifying object for "yes"
verdicts where one exists.  Scans run in lexicographic order, so the
reported witness is always the first failure in that order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

from .core import Graph, add_edge, delete_vertex, nonedges
from .errors import EmptyGraph, InvalidParameter, TooSmall
from .pathfinder import (
    _decision_edge_raw,
    _detour_raw,
    _hamilton_cycle_raw,
    detour_order,
)


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: bool
    witness: Any
    elapsed: float


def _report(prop: str, verdict: bool, witness: Any, t0: float) -> PropertyReport:
    return PropertyReport(prop, verdict, witness, time.perf_counter() - t0)


def is_detour_saturated(g: Graph, method: str = "witness") -> PropertyReport:
    """Does every nonedge addition strictly increase the detour order?

    method="witness" decides each nonedge e by searching G+e for a path
    on tau+1 vertices through e (equivalent: any longer path must use e,
    and can be trimmed to tau+1 keeping e).  method="recompute" computes
    tau(G+e) from scratch instead; it is the slower verification path.
    """
    t0 = time.perf_counter()
    if g.n == 0:
        raise EmptyGraph("saturation undefined on the order-0 graph")
    if method not in ("witness", "recompute"):
        raise InvalidParameter(f"unknown method {method!r}")
    tau = _detour_raw(g.n, g.adj)[0]
    for e in nonedges(g):
        h = add_edge(g, *e)
        if method == "witness":
            ok = _decision_edge_raw(h.n, h.adj, tau + 1, e[0], e[1]) is not None
        else:
            ok = _detour_raw(h.n, h.adj)[0] > tau
        if not ok:
            return _report("detour-saturated", False, e, t0)
    return _report("detour-saturated", True, None, t0)


def saturate(g: Graph) -> Graph:
    """Add nonedges that keep the detour order until no more exist.

    Nonedges are scanned in lexicographic order, restarting after each
    addition, so the result is deterministic.  The detour order of the
    result equals that of the input, and the result is detour-saturated.
    """
    if g.n == 0:
        raise EmptyGraph("saturation undefined on the order-0 graph")
    tau = _detour_raw(g.n, g.adj)[0]
    while True:
        for e in nonedges(g):
            h = add_edge(g, *e)
            if _decision_edge_raw(h.n, h.adj, tau + 1, e[0], e[1]) is None:
                g = h
                break
        else:
            return g


def _hamiltonian_bool(n: int, adj: tuple[int, ...]) -> bool:
    if n < 3:
        return False
    return _hamilton_cycle_raw(n, adj) is not None


def is_hamiltonian(g: Graph) -> PropertyReport:
    t0 = time.perf_counter()
    if g.n < 3:
        raise TooSmall(f"hamiltonicity needs order >= 3, got {g.n}")
    cycle = _hamilton_cycle_raw(g.n, g.adj)
    return _report("hamiltonian", cycle is not None, cycle, t0)


def is_hypohamiltonian(g: Graph) -> PropertyReport:
    """Nonhamiltonian, but every single-vertex deletion is hamiltonian.

    "no" witnesses: a Hamilton cycle of g itself, or the first vertex
    whose deletion leaves a nonhamiltonian graph.
    """
    t0 = time.perf_counter()
    if g.n < 3:
        raise TooSmall(f"hypohamiltonicity needs order >= 3, got {g.n}")
    cycle = _hamilton_cycle_raw(g.n, g.adj)
    if cycle is not None:
        return _report("hypohamiltonian", False, ("hamiltonian", cycle), t0)
    for v in range(g.n):
        h = delete_vertex(g, v)
        if not _hamiltonian_bool(h.n, h.adj):
            return _report("hypohamiltonian", False, ("vertex", v), t0)
    return _report("hypohamiltonian", True, None, t0)


def is_maximally_nonhamiltonian(g: Graph) -> PropertyReport:
    """Nonhamiltonian, but every nonedge addition is hamiltonian.

    "no" witnesses: a Hamilton cycle of g, or the first nonedge whose
    addition stays nonhamiltonian.
    """
    t0 = time.perf_counter()
    if g.n < 3:
        raise TooSmall(f"hamiltonicity needs order >= 3, got {g.n}")
    cycle = _hamilton_cycle_raw(g.n, g.adj)
    if cycle is not None:
        return _report("maximally-nonhamiltonian", False, ("hamiltonian", cycle), t0)
    for e in nonedges(g):
        h = add_edge(g, *e)
        if not _hamiltonian_bool(h.n, h.adj):
            return _report("maximally-nonhamiltonian", False, ("nonedge", e), t0)
    return _report("maximally-nonhamiltonian", True, None, t0)


def is_maximal_hypohamiltonian(g: Graph) -> PropertyReport:
    """Both maximally nonhamiltonian and hypohamiltonian."""
    t0 = time.perf_counter()
    hypo = is_hypohamiltonian(g)
    if not hypo.verdict:
        return _report("maximal-hypohamiltonian", False, ("hypohamiltonian", hypo.witness), t0)
    maxnh = is_maximally_nonhamiltonian(g)
    if not maxnh.verdict:
        return _report(
            "maximal-hypohamiltonian", False, ("maximally-nonhamiltonian", maxnh.witness), t0
        )
    return _report("maximal-hypohamiltonian", True, None, t0)
