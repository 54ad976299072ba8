"""Isomorph-free generation and the detour-saturation search.

The generator is checked exhaustively against the permutation-orbit
oracle (class counts and class membership), and search hits are checked
against brute-force classification of every isomorphism class.
"""

from __future__ import annotations

import json
import os

import pytest

from detourlab import (
    Graph,
    SearchSpec,
    canonical_cert,
    canonical_form,
    detour_order,
    enumerate_graphs,
    girth,
    graph6_decode,
    graph6_encode,
    is_detour_saturated,
    resume_search,
    search_detour_saturated,
)
from detourlab.errors import CheckpointMismatch, InvalidSpec, ParseError

from oracles import (
    code_to_adj,
    naive_girth,
    naive_is_detour_saturated,
    orbit_representatives,
    triangle_free_mask,
)

# number of isomorphism classes of graphs on n vertices, and of
# triangle-free graphs on n vertices
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TF_CLASS_COUNTS = {1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38, 7: 107, 8: 410}


# ---------------------------------------------------------------------------
# spec validation


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(order_max=0),
        dict(order_max=5, order_min=0),
        dict(order_max=5, order_min=6),
        dict(order_max=65),
        dict(order_max=8, girth_exact=2),
        dict(order_max=8, girth_exact=5),  # needs triangle_free
        dict(order_max=8, girth_exact=3, triangle_free=True),
        dict(order_max=8, forbid_degree2=True),  # needs triangle_free
        dict(order_max=8, threads=0),
        dict(order_max=8, budget=0.0),
        dict(order_max=8, budget=-1.0),
    ],
)
def test_invalid_specs_rejected(kwargs):
    with pytest.raises(InvalidSpec):
        SearchSpec(**kwargs).validate()


def test_valid_specs_accepted():
    SearchSpec(order_max=12).validate()
    SearchSpec(order_max=12, triangle_free=True, girth_exact=4).validate()
    SearchSpec(order_max=12, girth_exact=3).validate()
    SearchSpec(order_max=12, triangle_free=True, forbid_degree2=True).validate()


# ---------------------------------------------------------------------------
# isomorph-free generation


def test_enumerate_counts_match_known_sequences():
    got: dict[int, int] = {}
    for g in enumerate_graphs(SearchSpec(order_max=7)):
        got[g.n] = got.get(g.n, 0) + 1
    assert got == CLASS_COUNTS

    got = {}
    for g in enumerate_graphs(SearchSpec(order_max=8, triangle_free=True)):
        got[g.n] = got.get(g.n, 0) + 1
    assert got == TF_CLASS_COUNTS


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_matches_orbit_oracle(n):
    """The generated classes are exactly the orbits of the labeled universe."""
    reps = orbit_representatives(n)
    tf = triangle_free_mask(n)
    want_all = set()
    want_tf = set()
    for code in range(1 << (n * (n - 1) // 2)):
        if int(reps[code]) == code:
            cert = canonical_cert(Graph(n, code_to_adj(n, code))).data
            want_all.add(cert)
            if tf[code]:
                want_tf.add(cert)

    got = [
        graph6_encode(g).encode()
        for g in enumerate_graphs(SearchSpec(order_min=n, order_max=n))
        if g.n == n
    ]
    assert len(got) == len(set(got)), "duplicate class emitted"
    assert set(got) == want_all

    got_tf = [
        graph6_encode(g).encode()
        for g in enumerate_graphs(
            SearchSpec(order_min=n, order_max=n, triangle_free=True)
        )
    ]
    assert set(got_tf) == want_tf


def test_enumerate_yields_canonical_forms_in_order():
    seen_orders = []
    for g in enumerate_graphs(SearchSpec(order_min=3, order_max=6)):
        seen_orders.append(g.n)
        assert g.n >= 3
        assert canonical_form(g) == g  # emitted labelings are the canonical ones
    assert seen_orders == sorted(seen_orders)


# ---------------------------------------------------------------------------
# search hits versus brute force


def brute_force_hit_certs(n: int, require_girth: int | None = None) -> set[bytes]:
    """Certs of classes on n vertices that are detour-saturated and cyclic."""
    reps = orbit_representatives(n)
    out = set()
    for code in range(1 << (n * (n - 1) // 2)):
        if int(reps[code]) != code:
            continue
        adj = code_to_adj(n, code)
        gv = naive_girth(n, adj)
        if gv is None:
            continue
        if require_girth is not None and gv != require_girth:
            continue
        if naive_is_detour_saturated(n, adj):
            out.add(canonical_cert(Graph(n, adj)).data)
    return out


def test_search_matches_brute_force_classification():
    outcome = search_detour_saturated(SearchSpec(order_max=6))
    assert outcome.completed
    got: dict[int, set[bytes]] = {n: set() for n in range(1, 7)}
    for hit in outcome.hits:
        got[hit.order].add(canonical_cert(graph6_decode(hit.graph6)).data)
    for n in range(1, 7):
        assert got[n] == brute_force_hit_certs(n), f"hit set differs at order {n}"
    # candidate counts are the class counts (nothing is lost before filtering)
    assert outcome.candidates_by_order == {n: CLASS_COUNTS[n] for n in range(1, 7)}
    assert outcome.hits_by_order == {n: len(got[n]) for n in range(1, 7)}


def test_search_girth_exactly_three_matches_brute_force():
    outcome = search_detour_saturated(SearchSpec(order_max=6, girth_exact=3))
    got: dict[int, set[bytes]] = {n: set() for n in range(1, 7)}
    for hit in outcome.hits:
        assert hit.girth == 3
        got[hit.order].add(canonical_cert(graph6_decode(hit.graph6)).data)
    for n in range(1, 7):
        assert got[n] == brute_force_hit_certs(n, require_girth=3)


def test_search_excludes_forests_even_though_literally_saturated():
    # the 4-vertex star satisfies the saturation predicate but has no cycle
    claw = graph_from_edges_local()
    assert is_detour_saturated(claw).verdict
    outcome = search_detour_saturated(SearchSpec(order_max=4))
    claw_cert = canonical_cert(claw).data
    for hit in outcome.hits:
        assert canonical_cert(graph6_decode(hit.graph6)).data != claw_cert
        assert hit.girth is not None


def graph_from_edges_local() -> Graph:
    from detourlab import graph_from_edges

    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_hit_records_are_self_consistent():
    outcome = search_detour_saturated(SearchSpec(order_max=6))
    assert outcome.hits, "expected some saturated classes up to order 6"
    for hit in outcome.hits:
        g = graph6_decode(hit.graph6)
        assert g.n == hit.order
        assert g.size == hit.size
        assert girth(g).value == hit.girth
        assert detour_order(g).tau == hit.tau
        assert is_detour_saturated(g, method="witness").verdict
        assert is_detour_saturated(g, method="recompute").verdict
    keys = [(h.order, h.size, h.graph6) for h in outcome.hits]
    assert keys == sorted(keys)
    assert hit.to_json()  # json form materializes


def test_order_min_restricts_reported_hits():
    full = search_detour_saturated(SearchSpec(order_max=6))
    tail = search_detour_saturated(SearchSpec(order_min=6, order_max=6))
    assert [h.graph6 for h in tail.hits] == [
        h.graph6 for h in full.hits if h.order == 6
    ]
    assert set(tail.candidates_by_order) == {6}


# ---------------------------------------------------------------------------
# determinism and parallelism


def test_threads_do_not_change_results():
    specs = [
        SearchSpec(order_max=8, triangle_free=True, threads=t) for t in (1, 2, 4)
    ]
    outcomes = [search_detour_saturated(s) for s in specs]
    base = outcomes[0]
    for other in outcomes[1:]:
        assert [h.graph6 for h in other.hits] == [h.graph6 for h in base.hits]
        assert other.candidates_by_order == base.candidates_by_order
        assert other.hits_by_order == base.hits_by_order


def test_on_hit_callback_streams_all_hits():
    seen = []
    outcome = search_detour_saturated(SearchSpec(order_max=6), on_hit=seen.append)
    assert sorted((h.order, h.size, h.graph6) for h in seen) == [
        (h.order, h.size, h.graph6) for h in outcome.hits
    ]


def test_hits_jsonl_mirrors_outcome(tmp_path):
    path = str(tmp_path / "hits.jsonl")
    outcome = search_detour_saturated(
        SearchSpec(order_max=6, hits_jsonl=path)
    )
    with open(path) as fh:
        rows = [json.loads(line) for line in fh]
    assert sorted((r["order"], r["size"], r["graph6"]) for r in rows) == [
        (h.order, h.size, h.graph6) for h in outcome.hits
    ]
    for r in rows:
        assert set(r) >= {"graph6", "order", "size", "girth", "tau"}


# ---------------------------------------------------------------------------
# budget and resume


def test_budget_interrupts_and_resume_completes(tmp_path):
    ckpt = str(tmp_path / "search.ckpt")
    reference = search_detour_saturated(SearchSpec(order_max=10, triangle_free=True))

    spec = SearchSpec(
        order_max=10, triangle_free=True, budget=0.2, checkpoint_path=ckpt
    )
    first = search_detour_saturated(spec)
    assert not first.completed, "budget too generous to exercise interruption"
    assert os.path.exists(ckpt)

    outcome = first
    for _ in range(200):
        if outcome.completed:
            break
        outcome = resume_search(ckpt, budget=5.0)
    assert outcome.completed
    assert [h.graph6 for h in outcome.hits] == [h.graph6 for h in reference.hits]
    assert outcome.candidates_by_order == reference.candidates_by_order
    assert outcome.hits_by_order == reference.hits_by_order


def test_resume_after_completion_returns_final_state(tmp_path):
    ckpt = str(tmp_path / "done.ckpt")
    spec = SearchSpec(order_max=6, checkpoint_path=ckpt)
    done = search_detour_saturated(spec)
    assert done.completed
    again = resume_search(ckpt)
    assert again.completed
    assert [h.graph6 for h in again.hits] == [h.graph6 for h in done.hits]
    assert again.candidates_by_order == done.candidates_by_order


def test_rerunning_spec_with_checkpoint_resumes(tmp_path):
    ckpt = str(tmp_path / "rerun.ckpt")
    spec = SearchSpec(order_max=6, checkpoint_path=ckpt)
    done = search_detour_saturated(spec)
    again = search_detour_saturated(spec)  # picks the checkpoint up again
    assert again.completed
    assert [h.graph6 for h in again.hits] == [h.graph6 for h in done.hits]


# ---------------------------------------------------------------------------
# checkpoint failure modes


def test_checkpoint_wrong_spec_rejected(tmp_path):
    ckpt = str(tmp_path / "a.ckpt")
    search_detour_saturated(
        SearchSpec(order_max=5, checkpoint_path=ckpt)
    )
    other = SearchSpec(order_max=6, checkpoint_path=ckpt)
    with pytest.raises(CheckpointMismatch):
        search_detour_saturated(other)


def test_checkpoint_bad_magic_rejected(tmp_path):
    ckpt = tmp_path / "bad.ckpt"
    ckpt.write_bytes(b"NOPE" + b"\x00" * 60)
    with pytest.raises(CheckpointMismatch):
        search_detour_saturated(
            SearchSpec(order_max=5, checkpoint_path=str(ckpt))
        )
    with pytest.raises(CheckpointMismatch):
        resume_search(str(ckpt))


def test_checkpoint_truncation_is_a_parse_error(tmp_path):
    ckpt = tmp_path / "trunc.ckpt"
    spec = SearchSpec(order_max=5, checkpoint_path=str(ckpt))
    search_detour_saturated(spec)
    blob = ckpt.read_bytes()
    ckpt.write_bytes(blob[:60])  # cut inside the fixed-size header region
    with pytest.raises(ParseError):
        search_detour_saturated(spec)


def test_checkpoint_truncated_header_spec_read(tmp_path):
    ckpt = tmp_path / "short.ckpt"
    ckpt.write_bytes(b"DTLC" + b"\x00" * 10)
    with pytest.raises(ParseError):
        resume_search(str(ckpt))
