"""Isomorph-free exhaustive search for detour-saturated graphs.

Generation is augmentation by one vertex at a time: every isomorphism
class of order m+1 is produced from the class of order m obtained by
deleting a minimum-degree vertex.  Concretely, a stored representative
P is extended by a new vertex adjacent to a subset S of V(P) where S
keeps the new vertex at minimum degree in the child (every u outside S
has deg >= |S|, every u in S has deg >= |S|-1); for triangle-free
searches S must additionally be independent.  A child C is kept iff
deleting the new vertex gives the same certificate as deleting w*, the
minimum-degree vertex of C in the highest canonical position.  Since
cert(C - w*) is an invariant of C's isomorphism class and C minus the
new vertex *is* P, any two accepted constructions of isomorphic
children necessarily come from the same parent; a per-parent cert set
removes those, so each class is emitted exactly once.  Completeness
follows because deleting w* itself is always one of the enumerated
extensions.  The stream is cross-checked against a permutation brute
force at small orders in the test suite.

Saturation filtering is cheapest-first: degree filter, girth filter,
detour order, then the per-nonedge decision; a surviving graph is
re-verified by recomputing tau(G+e) from scratch for every nonedge.
Acyclic graphs are never reported as hits: stars, matchings and other
forests satisfy the saturation definition for degenerate reasons (any
added edge links two previously far-apart branches), and the families
these searches exist to find all contain cycles.  The props predicate
keeps the literal definition.

Work is split into fixed-size chunks of the representative list at
each order; chunks are dispatched to a process pool when threads > 1
and their results committed in chunk order, so hit lists and counts
are identical for every thread count.  A checkpoint file, written
atomically at chunk granularity, allows long runs to resume.
"""

from __future__ import annotations

import hashlib
import json
import os
import struct
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

from .core import VERTEX_CAP, Graph, girth, graph6_decode
from .errors import CheckpointMismatch, InvalidSpec, ParseError
from .iso import _canon_raw, _canon_search, _pack_cert, _refine
from .pathfinder import _decision_edge_raw, _detour_raw, _greedy_lower_bound

_CHUNK = 256
_CHECKPOINT_INTERVAL = 30.0
_MAGIC = b"DTLC"
_VERSION = 1


@dataclass(frozen=True)
class SearchSpec:
    """What to search; results depend only on the first five fields."""

    order_max: int
    order_min: int = 1
    triangle_free: bool = False
    girth_exact: int | None = None
    forbid_degree2: bool = False
    threads: int = 1
    budget: float | None = None
    checkpoint_path: str | None = None
    hits_jsonl: str | None = None

    def validate(self) -> None:
        if not 1 <= self.order_min <= self.order_max <= VERTEX_CAP:
            raise InvalidSpec(
                f"need 1 <= order_min <= order_max <= {VERTEX_CAP}, "
                f"got {self.order_min}..{self.order_max}"
            )
        if self.girth_exact is not None:
            if self.girth_exact < 3:
                raise InvalidSpec(f"girth_exact {self.girth_exact} < 3")
            if self.girth_exact >= 4 and not self.triangle_free:
                raise InvalidSpec("girth_exact >= 4 requires triangle_free")
            if self.girth_exact == 3 and self.triangle_free:
                raise InvalidSpec("girth_exact 3 contradicts triangle_free")
        if self.forbid_degree2 and not self.triangle_free:
            raise InvalidSpec("forbid_degree2 is only meaningful with triangle_free")
        if self.threads < 1:
            raise InvalidSpec(f"threads {self.threads} < 1")
        if self.budget is not None and self.budget <= 0:
            raise InvalidSpec(f"budget {self.budget} <= 0")

    def result_fields(self) -> tuple:
        return (
            self.order_min,
            self.order_max,
            self.triangle_free,
            self.girth_exact,
            self.forbid_degree2,
        )

    def spec_hash(self) -> bytes:
        return hashlib.sha256(repr(self.result_fields()).encode()).digest()


@dataclass(frozen=True)
class Hit:
    graph6: str
    order: int
    size: int
    girth: int | None
    tau: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "graph6": self.graph6,
                "order": self.order,
                "size": self.size,
                "girth": self.girth,
                "tau": self.tau,
            },
            sort_keys=True,
        )


@dataclass
class SearchOutcome:
    spec: SearchSpec
    hits: list[Hit]
    candidates_by_order: dict[int, int]
    hits_by_order: dict[int, int]
    completed: bool
    elapsed: float


# ---------------------------------------------------------------------------
# raw helpers


def _decode_cert(data: bytes) -> tuple[int, tuple[int, ...]]:
    """graph6 bytes (trusted, internally produced) -> (n, adjacency rows)."""
    n = data[0] - 63
    if n == 63:
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        body = data[1:]
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return n, tuple(rows)


def _delete_raw(n: int, adj, v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    rows = []
    for u in range(n):
        if u == v:
            continue
        bits = adj[u]
        rows.append((bits & low) | ((bits >> (v + 1)) << v))
    return tuple(rows)


def _neighborhoods(m: int, adj, degs, triangle_free: bool) -> list[int]:
    """Admissible new-vertex neighborhoods of a parent, as bitmasks, in a fixed order."""
    mind = min(degs) if degs else 0
    out: list[int] = []
    for s in range(m + 1):
        if mind < s - 1:
            break
        forced = 0
        for u in range(m):
            if degs[u] == s - 1:
                forced |= 1 << u
        if forced.bit_count() > s:
            continue
        if triangle_free:
            bits = forced
            bad = False
            while bits:
                b = bits & -bits
                bits ^= b
                if adj[b.bit_length() - 1] & forced:
                    bad = True
                    break
            if bad:
                continue
        optional = [u for u in range(m) if degs[u] >= s and not forced >> u & 1]
        need = s - forced.bit_count()

        def pick(idx: int, mask: int, need: int) -> None:
            if need == 0:
                out.append(mask)
                return
            for t in range(idx, len(optional) - need + 1):
                u = optional[t]
                if triangle_free and adj[u] & mask:
                    continue
                pick(t + 1, mask | (1 << u), need - 1)

        pick(0, forced, need)
    return out


def _children_of(pcert: bytes, triangle_free: bool) -> list[bytes]:
    """Certs of the accepted order-(m+1) children of one representative."""
    m, adj = _decode_cert(pcert)
    degs = [r.bit_count() for r in adj]
    new = m
    out: list[bytes] = []
    seen: set[bytes] = set()
    for smask in _neighborhoods(m, adj, degs, triangle_free):
        rows = list(adj)
        rows.append(smask)
        bits = smask
        while bits:
            b = bits & -bits
            bits ^= b
            rows[b.bit_length() - 1] |= 1 << new
        child = tuple(rows)
        s = smask.bit_count()
        # the canonical deletion target w* is a minimum-degree vertex in the
        # highest canonical position; positions refine the stable coloring,
        # so w* lies in the highest-colored minimum-degree stable class.  If
        # the new vertex is outside that class it cannot be w*, and the
        # canonical construction of this child's class places its new vertex
        # inside it, so rejecting here keeps the stream complete.
        cdegs = [r.bit_count() for r in child]
        drank = {d: i for i, d in enumerate(sorted(set(cdegs)))}
        colors = [drank[d] for d in cdegs]
        colors, _ = _refine(m + 1, child, colors)
        if colors[new] != max(colors[u] for u in range(m + 1) if cdegs[u] == s):
            continue
        acc: list = [None, None]
        _canon_search(m + 1, child, colors, acc)
        cert = _pack_cert(m + 1, acc[0])
        pos = acc[1]
        if cert in seen:
            continue
        # w*: minimum-degree vertex in the highest canonical position
        wstar = -1
        wpos = -1
        for u in range(m + 1):
            if cdegs[u] == s and pos[u] > wpos:
                wpos = pos[u]
                wstar = u
        if wstar != new:
            bw = 1 << wstar
            bn = 1 << new
            d1 = sorted((child[u] & ~bw).bit_count() for u in range(m + 1) if u != wstar)
            d2 = sorted((child[u] & ~bn).bit_count() for u in range(m + 1) if u != new)
            if d1 != d2:
                continue
            if _canon_raw(m, _delete_raw(m + 1, child, wstar))[0] != pcert:
                continue
        seen.add(cert)
        out.append(cert)
    return out


# ---------------------------------------------------------------------------
# saturation filter


def _is_forest(n: int, adj) -> bool:
    edges = sum(r.bit_count() for r in adj) // 2
    full = (1 << n) - 1
    left = full
    ncomp = 0
    while left:
        b = left & -left
        seen = b
        frontier = b
        while frontier:
            nxt = 0
            while frontier:
                fb = frontier & -frontier
                frontier ^= fb
                nxt |= adj[fb.bit_length() - 1]
            frontier = nxt & left & ~seen
            seen |= frontier
        left &= ~seen
        ncomp += 1
    return edges == n - ncomp


def _has_c4_trianglefree(n: int, adj) -> bool:
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if (au & adj[v]).bit_count() >= 2:
                return True
    return False


def _filter_candidate(cert: bytes, triangle_free: bool, girth_exact, forbid_degree2: bool):
    """Hit tuple for a candidate representative, or None.

    A triangle-free detour-saturated graph has no vertex of degree 2:
    if v's only neighbors are a and b with ab missing, a path longer
    than tau(G) in G+ab that uses ab either avoids v (replace the edge
    ab by the detour a,v,b: a longer path already in G), has v as an
    endpoint next to the ab edge (rotate v past it: v,a,b,... becomes
    a,v,b,..., same length without ab), or traverses a,v,b, which pins
    both path-neighbors of a and b and leaves nowhere for ab itself.
    Each case is impossible, so tau(G+ab) = tau(G) and G is not
    saturated.  Degree-2 candidates are therefore skipped whenever the
    search universe is triangle-free.
    """
    n, adj = _decode_cert(cert)
    if (forbid_degree2 or triangle_free) and any(r.bit_count() == 2 for r in adj):
        return None
    if girth_exact is not None:
        if girth_exact == 4 and triangle_free:
            if not _has_c4_trianglefree(n, adj):
                return None
        else:
            if girth(Graph(n, adj)).value != girth_exact:
                return None
    else:
        if _is_forest(n, adj):
            return None
    nonedges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not adj[u] >> v & 1
    ]
    # a traceable incomplete graph can never gain a longer path
    if nonedges and n > 1 and _greedy_lower_bound(n, adj) == n:
        return None
    tau = _detour_raw(n, adj)[0]
    if tau == n and nonedges:
        return None
    for u, v in nonedges:
        rows = list(adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if _decision_edge_raw(n, tuple(rows), tau + 1, u, v) is None:
            return None
    # re-verify the survivor by full recomputation
    for u, v in nonedges:
        rows = list(adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if _detour_raw(n, tuple(rows))[0] <= tau:
            return None
    gval = girth(Graph(n, adj)).value
    size = sum(r.bit_count() for r in adj) // 2
    return (cert.decode("ascii"), n, size, gval, tau)


# ---------------------------------------------------------------------------
# work units (module level so they pickle for the process pool)


def _gen_unit(args) -> list[bytes]:
    parents, triangle_free = args
    out: list[bytes] = []
    for pcert in parents:
        out.extend(_children_of(pcert, triangle_free))
    return out


def _filter_unit(args) -> list[tuple]:
    certs, triangle_free, girth_exact, forbid_degree2 = args
    out = []
    for cert in certs:
        hit = _filter_candidate(cert, triangle_free, girth_exact, forbid_degree2)
        if hit is not None:
            out.append(hit)
    return out


def _genfilter_unit(args) -> tuple[int, list[tuple]]:
    parents, triangle_free, girth_exact, forbid_degree2 = args
    nchildren = 0
    hits = []
    for pcert in parents:
        for cert in _children_of(pcert, triangle_free):
            nchildren += 1
            hit = _filter_candidate(cert, triangle_free, girth_exact, forbid_degree2)
            if hit is not None:
                hits.append(hit)
    return nchildren, hits


# ---------------------------------------------------------------------------
# checkpoint file


def _write_checkpoint(path: str, spec: SearchSpec, state: dict) -> None:
    buf = bytearray()
    buf += _MAGIC
    buf += struct.pack("<I", _VERSION)
    buf += spec.spec_hash()
    buf += struct.pack(
        "<IIBiB",
        spec.order_min,
        spec.order_max,
        int(spec.triangle_free),
        -1 if spec.girth_exact is None else spec.girth_exact,
        int(spec.forbid_degree2),
    )
    buf += struct.pack("<I", _CHUNK)
    buf += struct.pack("<B", int(state["done"]))
    buf += struct.pack("<BIQ", state["stage_kind"], state["stage_order"], state["units_done"])
    counts = state["counts"]
    buf += struct.pack("<I", len(counts))
    for order in sorted(counts):
        cand, h = counts[order]
        buf += struct.pack("<IQQ", order, cand, h)
    hits = state["hits"]
    buf += struct.pack("<Q", len(hits))
    for g6, order, size, gval, tau in hits:
        data = g6.encode("ascii")
        buf += struct.pack("<IIiIH", order, size, -1 if gval is None else gval, tau, len(data))
        buf += data
    for key in ("base", "partial"):
        reps = state[key]
        buf += struct.pack("<Q", len(reps))
        for r in reps:
            buf += struct.pack("<H", len(r))
            buf += r
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(buf)
    os.replace(tmp, path)


def _read_checkpoint(path: str, spec: SearchSpec) -> dict:
    with open(path, "rb") as fh:
        buf = fh.read()
    try:
        return _parse_checkpoint(buf, path, spec)
    except (struct.error, IndexError) as exc:
        raise ParseError(f"{path}: corrupt checkpoint ({exc})", 0) from exc


def _parse_checkpoint(buf: bytes, path: str, spec: SearchSpec) -> dict:
    off = 0

    def take(fmt):
        nonlocal off
        vals = struct.unpack_from(fmt, buf, off)
        off += struct.calcsize(fmt)
        return vals

    magic = buf[:4]
    off = 4
    if magic != _MAGIC:
        raise CheckpointMismatch(f"{path}: not a detourlab checkpoint")
    (version,) = take("<I")
    if version != _VERSION:
        raise CheckpointMismatch(f"{path}: version {version}, expected {_VERSION}")
    stored_hash = buf[off : off + 32]
    off += 32
    if stored_hash != spec.spec_hash():
        raise CheckpointMismatch(f"{path}: checkpoint belongs to a different search spec")
    take("<IIBiB")  # spec echo, already validated via the hash
    (chunk,) = take("<I")
    (done,) = take("<B")
    stage_kind, stage_order, units_done = take("<BIQ")
    (ncounts,) = take("<I")
    counts = {}
    for _ in range(ncounts):
        order, cand, h = take("<IQQ")
        counts[order] = (cand, h)
    (nhits,) = take("<Q")
    hits = []
    for _ in range(nhits):
        order, size, gval, tau, blen = take("<IIiIH")
        data = buf[off : off + blen]
        off += blen
        hits.append((data.decode("ascii"), order, size, None if gval < 0 else gval, tau))
    reps = {}
    for key in ("base", "partial"):
        (count,) = take("<Q")
        lst = []
        for _ in range(count):
            (blen,) = take("<H")
            lst.append(buf[off : off + blen])
            off += blen
        reps[key] = lst
    return {
        "done": bool(done),
        "stage_kind": stage_kind,
        "stage_order": stage_order,
        "units_done": units_done,
        "counts": counts,
        "hits": hits,
        "base": reps["base"],
        "partial": reps["partial"],
        "chunk": chunk,
    }


def read_checkpoint_spec(path: str) -> SearchSpec:
    """Reconstruct the result-defining spec fields stored in a checkpoint."""
    with open(path, "rb") as fh:
        head = fh.read(4 + 4 + 32 + struct.calcsize("<IIBiB"))
    if head[:4] != _MAGIC:
        raise CheckpointMismatch(f"{path}: not a detourlab checkpoint")
    try:
        omin, omax, tf, ge, fd2 = struct.unpack_from("<IIBiB", head, 40)
    except struct.error as exc:
        raise ParseError(f"{path}: corrupt checkpoint ({exc})", 0) from exc
    return SearchSpec(
        order_max=omax,
        order_min=omin,
        triangle_free=bool(tf),
        girth_exact=None if ge < 0 else ge,
        forbid_degree2=bool(fd2),
        checkpoint_path=path,
    )


# ---------------------------------------------------------------------------
# drivers


_GEN, _FILTER, _GENFILTER = 0, 1, 2


def _stages(spec: SearchSpec) -> list[tuple[int, int]]:
    out = []
    if spec.order_min == 1:
        out.append((_FILTER, 1))
    for order in range(2, spec.order_max + 1):
        if order == spec.order_max and order >= spec.order_min:
            out.append((_GENFILTER, order))
        else:
            out.append((_GEN, order))
            if order >= spec.order_min:
                out.append((_FILTER, order))
    return out


def _chunks(items: list, size: int) -> list[list]:
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run_units(pool, fn, payloads, start: int):
    """Yield (index, result) for payloads[start:], in order."""
    todo = payloads[start:]
    if pool is None:
        for i, payload in enumerate(todo):
            yield start + i, fn(payload)
    else:
        for i, result in enumerate(pool.imap(fn, todo)):
            yield start + i, result


def search_detour_saturated(
    spec: SearchSpec, on_hit: Callable[[Hit], None] | None = None
) -> SearchOutcome:
    """Run (or resume) the exhaustive search described by `spec`."""
    spec.validate()
    t0 = time.perf_counter()
    deadline = None if spec.budget is None else time.monotonic() + spec.budget

    state = None
    if spec.checkpoint_path and os.path.exists(spec.checkpoint_path):
        state = _read_checkpoint(spec.checkpoint_path, spec)
    if state is None:
        state = {
            "done": False,
            "stage_kind": _GEN,
            "stage_order": 0,  # 0 = not started
            "units_done": 0,
            "counts": {},
            "hits": [],
            "base": [b"@"],  # representatives of order 1
            "partial": [],
            "chunk": _CHUNK,
        }

    jsonl = None
    if spec.hits_jsonl:
        jsonl = open(spec.hits_jsonl, "w")
        for h in state["hits"]:
            jsonl.write(_hit_obj(h).to_json() + "\n")
        jsonl.flush()

    def emit(hit_tuple) -> None:
        state["hits"].append(hit_tuple)
        hit = _hit_obj(hit_tuple)
        if jsonl:
            jsonl.write(hit.to_json() + "\n")
            jsonl.flush()
        if on_hit:
            on_hit(hit)

    if state["done"]:
        if jsonl:
            jsonl.close()
        return _outcome(spec, state, True, time.perf_counter() - t0)

    pool = None
    if spec.threads > 1:
        import multiprocessing

        pool = multiprocessing.get_context("fork").Pool(spec.threads)

    chunk = state["chunk"]
    last_save = time.monotonic()
    completed = True

    def maybe_save(force: bool = False) -> None:
        nonlocal last_save
        if spec.checkpoint_path and (
            force or time.monotonic() - last_save >= _CHECKPOINT_INTERVAL
        ):
            _write_checkpoint(spec.checkpoint_path, spec, state)
            last_save = time.monotonic()

    try:
        stages = _stages(spec)
        # figure out where to resume: stages strictly before the stored one are done
        stage_at = 0
        if state["stage_order"]:
            for i, (kind, order) in enumerate(stages):
                if kind == state["stage_kind"] and order == state["stage_order"]:
                    stage_at = i
                    break
            else:
                raise CheckpointMismatch("checkpoint stage not part of this search")

        for si in range(stage_at, len(stages)):
            kind, order = stages[si]
            fresh = not (
                state["stage_order"] == order and state["stage_kind"] == kind
            )
            if fresh:
                state["stage_kind"] = kind
                state["stage_order"] = order
                state["units_done"] = 0
                state["partial"] = []
            base = state["base"]

            if kind == _FILTER:
                payloads = [
                    (part, spec.triangle_free, spec.girth_exact, spec.forbid_degree2)
                    for part in _chunks(base, chunk)
                ]
                fn = _filter_unit
            elif kind == _GEN:
                payloads = [(part, spec.triangle_free) for part in _chunks(base, chunk)]
                fn = _gen_unit
            else:
                payloads = [
                    (part, spec.triangle_free, spec.girth_exact, spec.forbid_degree2)
                    for part in _chunks(base, chunk)
                ]
                fn = _genfilter_unit

            start = state["units_done"]
            stopped = False
            if kind == _GENFILTER:
                ncand = state["counts"].get(order, (0, 0))[0]
                nhits = state["counts"].get(order, (0, 0))[1]
                for idx, (nchildren, hits) in _run_units(pool, fn, payloads, start):
                    ncand += nchildren
                    for h in hits:
                        emit(h)
                        nhits += 1
                    state["units_done"] = idx + 1
                    state["counts"][order] = (ncand, nhits)
                    maybe_save()
                    if deadline is not None and time.monotonic() > deadline:
                        stopped = idx + 1 < len(payloads)
                        break
            elif kind == _FILTER:
                nhits = state["counts"].get(order, (0, 0))[1]
                for idx, hits in _run_units(pool, fn, payloads, start):
                    for h in hits:
                        emit(h)
                        nhits += 1
                    state["units_done"] = idx + 1
                    state["counts"][order] = (len(base), nhits)
                    maybe_save()
                    if deadline is not None and time.monotonic() > deadline:
                        stopped = idx + 1 < len(payloads)
                        break
            else:
                for idx, children in _run_units(pool, fn, payloads, start):
                    state["partial"].extend(children)
                    state["units_done"] = idx + 1
                    maybe_save()
                    if deadline is not None and time.monotonic() > deadline:
                        stopped = idx + 1 < len(payloads)
                        break

            if stopped:
                completed = False
                break
            if kind == _GEN:
                reps = state["partial"]
                if len(set(reps)) != len(reps):
                    raise RuntimeError(
                        f"isomorph-free generation emitted a duplicate class at order {order}"
                    )
                state["base"] = reps
                state["partial"] = []

        state["done"] = completed
        maybe_save(force=True)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
        if jsonl:
            jsonl.close()

    return _outcome(spec, state, completed, time.perf_counter() - t0)


def _hit_obj(t: tuple) -> Hit:
    return Hit(graph6=t[0], order=t[1], size=t[2], girth=t[3], tau=t[4])


def _outcome(spec: SearchSpec, state: dict, completed: bool, elapsed: float) -> SearchOutcome:
    hits = sorted(
        (_hit_obj(t) for t in state["hits"]),
        key=lambda h: (h.order, h.size, h.graph6),
    )
    counts = {order: c for order, (c, _) in sorted(state["counts"].items())}
    hcounts = {order: h for order, (_, h) in sorted(state["counts"].items())}
    return SearchOutcome(
        spec=spec,
        hits=hits,
        candidates_by_order=counts,
        hits_by_order=hcounts,
        completed=completed,
        elapsed=elapsed,
    )


def resume_search(
    path: str,
    threads: int = 1,
    budget: float | None = None,
    hits_jsonl: str | None = None,
    on_hit: Callable[[Hit], None] | None = None,
) -> SearchOutcome:
    """Continue the search whose checkpoint lives at `path`."""
    spec = read_checkpoint_spec(path)
    spec = replace(spec, threads=threads, budget=budget, hits_jsonl=hits_jsonl)
    return search_detour_saturated(spec, on_hit=on_hit)


def enumerate_graphs(spec: SearchSpec) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, orders ascending.

    Applies the hereditary constraint (triangle-freeness) during
    generation; final-order-only filters (degree, exact girth) do not
    restrict this stream.  Graphs at orders below order_min are built
    internally but not yielded.
    """
    spec.validate()
    reps = [b"@"]
    if spec.order_min <= 1:
        yield graph6_decode("@")
    for order in range(2, spec.order_max + 1):
        nxt: list[bytes] = []
        for pcert in reps:
            nxt.extend(_children_of(pcert, spec.triangle_free))
        if len(set(nxt)) != len(nxt):
            raise RuntimeError(
                f"isomorph-free generation emitted a duplicate class at order {order}"
            )
        reps = nxt
        if order >= spec.order_min:
            for cert in reps:
                yield graph6_decode(cert.decode("ascii"))
