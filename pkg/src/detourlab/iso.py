"""Exact canonical certificates and isomorphism tests.

The certificate of a graph is the graph6 encoding of a canonical
relabeling, chosen as the lexicographically least adjacency bit string
over the leaves of an individualization-refinement tree.  It is exact:
two graphs get equal certs iff they are isomorphic.

Refinement iterates the signature (current color, multiset of neighbor
colors) to a fixed point.  If the resulting partition is not discrete,
the first smallest non-singleton cell is split by individualizing each
member in turn and recursing; within a cell, members that are twins of
an already-tried member (identical adjacency outside the pair) are
skipped, because swapping twins is an automorphism and their subtrees
produce the same encodings.  All branches are explored, so the least
encoding over the complete, label-invariant candidate set is itself
label-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph
from .errors import EmptyGraph


@dataclass(frozen=True)
class CanonicalCert:
    data: bytes


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> tuple[list[int], int]:
    """Refine to the coarsest stable coloring below `colors`; returns (colors, #classes)."""
    ncls = max(colors) + 1 if colors else 0
    while True:
        groups: dict[tuple, list[int]] = {}
        for v in range(n):
            row = [0] * ncls
            bits = adj[v]
            while bits:
                b = bits & -bits
                bits ^= b
                row[colors[b.bit_length() - 1]] += 1
            key = (colors[v], *row)
            g = groups.get(key)
            if g is None:
                groups[key] = [v]
            else:
                g.append(v)
        if len(groups) == ncls:
            return colors, ncls
        for c, key in enumerate(sorted(groups)):
            for v in groups[key]:
                colors[v] = c
        ncls = len(groups)


def _encode_candidate(n: int, adj: tuple[int, ...], colors: list[int]) -> int:
    """Pack the upper triangle of the relabeled graph into an int, first bit highest."""
    inv = [0] * n
    for v in range(n):
        inv[colors[v]] = v
    acc = 0
    for j in range(1, n):
        row = adj[inv[j]]
        for i in range(j):
            acc = acc << 1 | (row >> inv[i] & 1)
    return acc


def _canon_search(n: int, adj: tuple[int, ...], colors: list[int], out: list) -> None:
    colors, ncls = _refine(n, adj, colors)
    if ncls == n:
        cand = _encode_candidate(n, adj, colors)
        if out[0] is None or cand < out[0]:
            out[0] = cand
            out[1] = tuple(colors)
        return
    # first smallest non-singleton cell
    sizes = [0] * ncls
    for v in range(n):
        sizes[colors[v]] += 1
    target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
    members = [v for v in range(n) if colors[v] == target]
    tried: list[int] = []
    for u in members:
        bu = 1 << u
        skip = False
        for w in tried:
            both = bu | (1 << w)
            if (adj[u] | both) == (adj[w] | both):
                skip = True
                break
        if skip:
            continue
        tried.append(u)
        child = [c if c <= target else c + 1 for c in colors]
        for v in members:
            if v != u:
                child[v] = target + 1
        _canon_search(n, adj, child, out)


def _canon_raw(n: int, adj: tuple[int, ...]) -> tuple[bytes, tuple[int, ...]]:
    """(cert bytes, canonical position of each vertex)."""
    if n == 0:
        return b"?", ()
    degs = sorted({r.bit_count() for r in adj})
    rank = {d: i for i, d in enumerate(degs)}
    colors = [rank[adj[v].bit_count()] for v in range(n)]
    out: list = [None, None]
    _canon_search(n, adj, colors, out)
    return _pack_cert(n, out[0]), out[1]


def _pack_cert(n: int, triangle: int) -> bytes:
    """graph6 bytes for an order-n graph whose packed upper triangle is `triangle`."""
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    m = n * (n - 1) // 2
    nbytes = (m + 5) // 6
    triangle <<= -m % 6
    body = bytearray(nbytes)
    for k in range(nbytes - 1, -1, -1):
        body[k] = (triangle & 63) + 63
        triangle >>= 6
    return head + bytes(body)


# ---------------------------------------------------------------------------
# public API


def canonical_cert(g: Graph) -> CanonicalCert:
    return CanonicalCert(_canon_raw(g.n, g.adj)[0])


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of g; equal for all members of an iso class."""
    if g.n == 0:
        return g
    _, pos = _canon_raw(g.n, g.adj)
    rows = [0] * g.n
    for u in range(g.n):
        bits = g.adj[u]
        acc = 0
        while bits:
            b = bits & -bits
            bits ^= b
            acc |= 1 << pos[b.bit_length() - 1]
        rows[pos[u]] = acc
    return Graph(g.n, tuple(rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return _canon_raw(g.n, g.adj)[0] == _canon_raw(h.n, h.adj)[0]
