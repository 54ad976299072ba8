"""Exact longest-path and Hamilton-cycle decisions.

All searches are depth-first over simple paths with admissible pruning,
so results are exact.  Traversal is lowest-vertex-id-first everywhere,
which makes every returned witness deterministic: the detour witness is
the first optimal path in that fixed traversal order, and the greedy
lower bound used to warm-start the search cannot change it (a subtree
is pruned only when it contains no path strictly longer than the bound,
and the bound always sits strictly below the optimum).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph
from .errors import EmptyGraph, InvalidEdge, InvalidParameter, TooSmall


@dataclass(frozen=True)
class VertexPath:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class DetourResult:
    tau: int
    witness: VertexPath


def _closure(adj, seed: int, allowed: int) -> int:
    seen = seed & allowed
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _usable(adj, reach: int, anchors: int, free_ends: int) -> int:
    """Upper bound on how many vertices of `reach` one future path can take.

    Vertices with at most one neighbor inside reach+anchors must be path
    endpoints; only `free_ends` endpoints are still available.
    """
    pool = reach | anchors
    pendants = 0
    bits = reach
    while bits:
        b = bits & -bits
        bits ^= b
        if (adj[b.bit_length() - 1] & pool).bit_count() <= 1:
            pendants += 1
    count = reach.bit_count()
    if pendants > free_ends:
        count -= pendants - free_ends
    return count


def _greedy_lower_bound(n: int, adj) -> int:
    """Order of a path found by low-remaining-degree greedy from every start."""
    best = 1
    for s in range(n):
        visited = 1 << s
        end = s
        length = 1
        while True:
            cand = adj[end] & ~visited
            if not cand:
                break
            pick = -1
            pick_key = None
            bits = cand
            while bits:
                b = bits & -bits
                bits ^= b
                w = b.bit_length() - 1
                key = ((adj[w] & ~visited).bit_count(), w)
                if pick_key is None or key < pick_key:
                    pick_key = key
                    pick = w
            visited |= 1 << pick
            end = pick
            length += 1
        if length > best:
            best = length
    return best


def _detour_raw(n: int, adj) -> tuple[int, tuple[int, ...]]:
    best = _greedy_lower_bound(n, adj) - 1
    best_path: tuple[int, ...] = ()
    path: list[int] = []

    def down(end: int, visited: int) -> bool:
        nonlocal best, best_path
        length = len(path)
        if length > best and path[0] <= end:
            best = length
            best_path = tuple(path)
            if best == n:
                return True
        cand = adj[end] & ~visited
        if not cand:
            return False
        reach = _closure(adj, cand, ~visited)
        if length + reach.bit_count() <= best:
            return False
        if length + _usable(adj, reach, 1 << end, 1) <= best:
            return False
        bits = cand
        while bits:
            b = bits & -bits
            bits ^= b
            v = b.bit_length() - 1
            path.append(v)
            if down(v, visited | b):
                return True
            path.pop()
        return False

    for s in range(n):
        path = [s]
        if down(s, 1 << s):
            break
    return best, best_path


def _decision_raw(n: int, adj, k: int) -> tuple[int, ...] | None:
    """Some simple path on exactly k vertices, or None."""
    if k == 1:
        return (0,)
    path: list[int] = []

    def down(end: int, visited: int) -> bool:
        length = len(path)
        if length == k:
            return path[0] <= end
        cand = adj[end] & ~visited
        if not cand:
            return False
        reach = _closure(adj, cand, ~visited)
        if length + reach.bit_count() < k:
            return False
        if length + _usable(adj, reach, 1 << end, 1) < k:
            return False
        bits = cand
        while bits:
            b = bits & -bits
            bits ^= b
            v = b.bit_length() - 1
            path.append(v)
            if down(v, visited | b):
                return True
            path.pop()
        return False

    for s in range(n):
        path = [s]
        if down(s, 1 << s):
            return tuple(path)
    return None


def _decision_edge_raw(n: int, adj, k: int, u: int, v: int) -> tuple[int, ...] | None:
    """Some simple path on exactly k vertices traversing edge u-v, or None.

    The path is grown outward from the required edge: first past v (the
    tail), then, for each tail, past u (the head).  Fixing u before v
    enumerates each suitable path exactly once.
    """
    if k < 2:
        return None
    if k == 2:
        return (u, v)
    head: list[int] = []
    tail: list[int] = [u, v]

    def grow_head(end: int, visited: int) -> bool:
        length = len(head) + len(tail)
        if length == k:
            return True
        cand = adj[end] & ~visited
        if not cand:
            return False
        reach = _closure(adj, cand, ~visited)
        if length + reach.bit_count() < k:
            return False
        if length + _usable(adj, reach, 1 << end, 1) < k:
            return False
        bits = cand
        while bits:
            b = bits & -bits
            bits ^= b
            w = b.bit_length() - 1
            head.append(w)
            if grow_head(w, visited | b):
                return True
            head.pop()
        return False

    def grow_tail(end: int, visited: int) -> bool:
        length = len(tail)
        if length == k:
            return True
        cand = adj[end] & ~visited
        both = cand | (adj[u] & ~visited)
        if not both:
            return False
        reach = _closure(adj, both, ~visited)
        if length + reach.bit_count() < k:
            return False
        if length + _usable(adj, reach, (1 << end) | (1 << u), 2) < k:
            return False
        if grow_head(u, visited):
            return True
        bits = cand
        while bits:
            b = bits & -bits
            bits ^= b
            w = b.bit_length() - 1
            tail.append(w)
            if grow_tail(w, visited | b):
                return True
            tail.pop()
        return False

    if grow_tail(v, (1 << u) | (1 << v)):
        return tuple(reversed(head)) + tuple(tail)
    return None


def _hamilton_cycle_raw(n: int, adj) -> tuple[int, ...] | None:
    if n < 3:
        return None
    full = (1 << n) - 1
    if any(r.bit_count() < 2 for r in adj):
        return None
    if _closure(adj, 1, full) != full:
        return None
    path = [0]

    def go(end: int, visited: int) -> bool:
        if len(path) == n:
            return bool(adj[end] & 1) and path[1] < end
        unv = full & ~visited
        reach = _closure(adj, adj[end] & unv, unv)
        if reach != unv:
            return False
        # every future vertex still needs two usable cycle slots
        forced_final = 0
        bits = unv
        while bits:
            b = bits & -bits
            bits ^= b
            w = b.bit_length() - 1
            avail = (adj[w] & (unv | (1 << end))).bit_count()
            if avail < 2:
                if avail == 0 or not adj[w] & 1:
                    return False
                forced_final += 1
                if forced_final > 1:
                    return False
        # the closing vertex must exceed path[1] (direction symmetry)
        if len(path) > 1:
            closers = (unv | (1 << end)) & adj[0]
            if closers >> (path[1] + 1) == 0:
                return False
        cand = adj[end] & unv
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            path.append(w)
            if go(w, visited | b):
                return True
            path.pop()
        return False

    if go(0, 1):
        return tuple(path)
    return None


# ---------------------------------------------------------------------------
# public API


def detour_order(g: Graph) -> DetourResult:
    if g.n == 0:
        raise EmptyGraph("detour order undefined on the order-0 graph")
    tau, path = _detour_raw(g.n, g.adj)
    return DetourResult(tau, VertexPath(path))


def has_path_of_order(
    g: Graph, order: int, required_edge: tuple[int, int] | None = None
) -> VertexPath | None:
    if order < 1:
        raise InvalidParameter(f"path order {order} < 1")
    if required_edge is not None:
        u, v = required_edge
        if not g.has_edge(u, v):
            raise InvalidEdge(f"required edge ({u},{v}) not in graph")
        if u > v:
            u, v = v, u
        if order > g.n:
            return None
        path = _decision_edge_raw(g.n, g.adj, order, u, v)
    else:
        if order > g.n:
            return None
        path = _decision_raw(g.n, g.adj, order)
    return None if path is None else VertexPath(path)


def has_hamilton_cycle(g: Graph) -> tuple[int, ...] | None:
    """A Hamilton cycle as a vertex sequence (closing edge implied), or None."""
    if g.n < 3:
        raise TooSmall(f"no cycles on {g.n} vertices")
    return _hamilton_cycle_raw(g.n, g.adj)
