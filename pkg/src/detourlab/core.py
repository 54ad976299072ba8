"""Graph value type, basic invariants, and the graph6 codec.

Graphs are simple, undirected, unlabeled-by-convention values: a vertex
count ``n`` (0..64) and one adjacency bitmask per vertex.  All
operations that "modify" a graph return a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyGraph,
    InvalidEdge,
    InvalidVertex,
    LoopRejected,
    OrderCapExceeded,
    ParseError,
)

VERTEX_CAP = 64

_G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Girth:
    """Length of a shortest cycle; ``value`` is None for acyclic graphs."""

    value: int | None

    @property
    def is_acyclic(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "acyclic" if self.value is None else str(self.value)


Girth.ACYCLIC = Girth(None)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= VERTEX_CAP:
            raise OrderCapExceeded(f"order {self.n} outside 0..{VERTEX_CAP}")
        if len(self.adj) != self.n:
            raise InvalidVertex(f"{len(self.adj)} adjacency rows for order {self.n}")
        full = (1 << self.n) - 1
        for u, bits in enumerate(self.adj):
            if bits & ~full:
                raise InvalidVertex(f"row {u} refers to vertices >= {self.n}")
            if bits >> u & 1:
                raise LoopRejected(f"self-loop at {u}")
        for u in range(self.n):
            bits = self.adj[u]
            while bits:
                b = bits & -bits
                bits ^= b
                v = b.bit_length() - 1
                if not self.adj[v] >> u & 1:
                    raise InvalidEdge(f"asymmetric pair {u},{v}")

    # -- cheap accessors ---------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.adj))

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return _bits_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            bits = self.adj[u] >> (u + 1) << (u + 1)
            while bits:
                b = bits & -bits
                bits ^= b
                out.append((u, b.bit_length() - 1))
        return out

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}")


def _bits_list(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


# ---------------------------------------------------------------------------
# constructors and edits


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= VERTEX_CAP:
        raise OrderCapExceeded(f"order {n} outside 0..{VERTEX_CAP}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise LoopRejected(f"self-loop at {u}")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v; vertices above v shift down by one."""
    g._check_vertex(v)
    low = (1 << v) - 1
    rows = []
    for u in range(g.n):
        if u == v:
            continue
        bits = g.adj[u]
        rows.append((bits & low) | ((bits >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


def nonedges(g: Graph) -> list[tuple[int, int]]:
    """Vertex pairs not joined by an edge, in lexicographic order."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.adj[u] >> v & 1:
                out.append((u, v))
    return out


# ---------------------------------------------------------------------------
# connectivity and girth


def _closure(adj: tuple[int, ...], seed: int, allowed: int) -> int:
    """Vertices reachable from the seed set inside `allowed` (seed included)."""
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


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    full = (1 << g.n) - 1
    left = full
    out = []
    while left:
        b = left & -left
        comp = _closure(g.adj, b, full)
        out.append(_bits_list(comp))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return _closure(g.adj, 1, (1 << g.n) - 1) == (1 << g.n) - 1


def girth(g: Graph) -> Girth:
    """Shortest cycle length via per-edge BFS distance in the graph minus that edge.

    Every candidate value d(u,v)+1 certifies an actual cycle, and for an
    edge lying on a shortest cycle the remaining path realises girth
    exactly, so the minimum over edges is exact.
    """
    n, adj = g.n, g.adj
    best = None
    full = (1 << n) - 1
    for u in range(n):
        bits = adj[u] >> (u + 1) << (u + 1)
        while bits:
            b = bits & -bits
            bits ^= b
            v = b.bit_length() - 1
            # BFS u -> v avoiding the edge uv
            target = 1 << v
            seen = 1 << u
            frontier = adj[u] & ~target
            dist = 1
            found = False
            seen |= frontier
            while frontier:
                if frontier & target:
                    found = True
                    break
                if best is not None and dist + 1 >= best:
                    break
                nxt = 0
                while frontier:
                    fb = frontier & -frontier
                    frontier ^= fb
                    nxt |= adj[fb.bit_length() - 1]
                frontier = nxt & full & ~seen
                seen |= frontier
                dist += 1
            if found and (best is None or dist + 1 < best):
                best = dist + 1
                if best == 3:
                    return Girth(3)
    return Girth(best)


# ---------------------------------------------------------------------------
# graph6


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    val = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            val = val << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(val + 63))
                val = nbits = 0
    if nbits:
        out.append(chr((val << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a single graph6 string; tolerates the optional format header."""
    s = text
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    vals = []
    for k, ch in enumerate(s):
        x = ord(ch) - 63
        if x < 0 or x > 63:
            raise ParseError(f"character {ch!r} outside graph6 range", base + k)
        vals.append(x)
    pos = 0
    if vals[0] < 63:
        n = vals[0]
        pos = 1
    else:
        if len(vals) >= 2 and vals[1] == 63:
            # 8-byte form: n up to 2^36, far beyond the order cap
            if len(vals) < 8:
                raise ParseError("truncated order field", base + len(s) - 1)
            n = 0
            for k in range(2, 8):
                n = n << 6 | vals[k]
            pos = 8
        else:
            if len(vals) < 4:
                raise ParseError("truncated order field", base + len(s) - 1)
            n = vals[1] << 12 | vals[2] << 6 | vals[3]
            pos = 4
    if n > VERTEX_CAP:
        raise OrderCapExceeded(f"order {n} above cap {VERTEX_CAP}")
    need = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (need + 5) // 6:
        raise ParseError(
            f"body has {len(body)} bytes, expected {(need + 5) // 6} for order {n}",
            base + min(pos, len(s) - 1) if s else base,
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits beyond the triangle must be zero
    if need:
        tail = body[-1] & ((1 << (-need % 6)) - 1 if need % 6 else 0)
        if tail:
            raise ParseError("nonzero padding bits", base + pos + len(body) - 1)
    return Graph(n, tuple(rows))
