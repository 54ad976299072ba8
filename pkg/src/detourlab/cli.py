"""Command-line surface: property checks, constructions, searches, verification.

Machine output is JSONL on stdout (one object per graph, hit, or
check); ``--pretty`` adds a human summary on stderr so stdout stays
pipeable.  Exit codes: 0 success/verified, 1 check failed or parse
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .atlas import coxeter, coxeter_split, flower_snark, j_split, petersen, pr, split_vertex
from .core import Graph, girth, graph6_decode, graph6_encode, is_connected
from .errors import DetourLabError, InvalidSpec, ParseError
from .iso import are_isomorphic, canonical_cert
from .pathfinder import detour_order
from .props import (
    is_detour_saturated,
    is_hamiltonian,
    is_hypohamiltonian,
    is_maximal_hypohamiltonian,
    is_maximally_nonhamiltonian,
)
from .searcher import Hit, SearchOutcome, SearchSpec, search_detour_saturated

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _default_threads() -> int:
    env = os.environ.get("DETOURLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    sys.stdout.flush()


# ---------------------------------------------------------------------------
# check


def _report_to_json(rep) -> dict:
    out = {"verdict": rep.verdict}
    if rep.witness is not None:
        out["witness"] = rep.witness
    return out


_PROPS = {
    "girth": lambda g: girth(g).value,
    "tau": lambda g: detour_order(g).tau,
    "connected": is_connected,
    "detour-saturated": lambda g: _report_to_json(is_detour_saturated(g)),
    "hamiltonian": lambda g: _report_to_json(is_hamiltonian(g)),
    "hypohamiltonian": lambda g: _report_to_json(is_hypohamiltonian(g)),
    "maximally-nonhamiltonian": lambda g: _report_to_json(is_maximally_nonhamiltonian(g)),
    "maximal-hypohamiltonian": lambda g: _report_to_json(is_maximal_hypohamiltonian(g)),
}


def cmd_check(args) -> int:
    props = [p.strip() for p in args.props.split(",") if p.strip()]
    for p in props:
        if p not in _PROPS:
            sys.stderr.write(f"unknown property {p!r}; known: {', '.join(sorted(_PROPS))}\n")
            return EXIT_USAGE
    if args.input and args.input != "-":
        fh = open(args.input)
    else:
        fh = sys.stdin
    failed_parse = False
    try:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                g = graph6_decode(text)
            except DetourLabError as exc:
                offset = getattr(exc, "offset", None)
                _emit(
                    {
                        "command": "check",
                        "line": lineno,
                        "error": str(exc),
                        "offset": offset,
                    }
                )
                failed_parse = True
                continue
            t0 = time.perf_counter()
            results = {}
            for p in props:
                try:
                    results[p] = _PROPS[p](g)
                except DetourLabError as exc:
                    results[p] = {"error": f"{type(exc).__name__}: {exc}"}
            obj = {
                "command": "check",
                "line": lineno,
                "graph6": text,
                "cert": canonical_cert(g).data.decode("ascii"),
                "order": g.order,
                "size": g.size,
                "results": results,
                "elapsed": round(time.perf_counter() - t0, 6),
                "version": __version__,
            }
            _emit(obj)
            if args.pretty:
                parts = ", ".join(f"{k}={results[k]}" for k in props)
                sys.stderr.write(f"graph line {lineno}: n={g.order} m={g.size} {parts}\n")
    finally:
        if fh is not sys.stdin:
            fh.close()
    return EXIT_FAIL if failed_parse else EXIT_OK


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    name = args.name
    try:
        if name == "petersen":
            named = petersen()
        elif name == "pr":
            named = pr()
        elif name == "coxeter":
            named = coxeter()
        elif name == "flower-snark":
            if args.k is None:
                sys.stderr.write("construct flower-snark requires --k\n")
                return EXIT_USAGE
            named = flower_snark(args.k)
        elif name == "j-split":
            if args.k is None or args.vertex is None:
                sys.stderr.write("construct j-split requires --k and --vertex\n")
                return EXIT_USAGE
            named = j_split(args.k, args.vertex)
        elif name == "coxeter-split":
            if args.vertex is None:
                sys.stderr.write("construct coxeter-split requires --vertex\n")
                return EXIT_USAGE
            named = coxeter_split(args.vertex)
        elif name == "split":
            if args.vertex is None:
                sys.stderr.write("construct split requires --vertex\n")
                return EXIT_USAGE
            if args.input and args.input != "-":
                with open(args.input) as fh:
                    text = fh.readline().strip()
            else:
                text = sys.stdin.readline().strip()
            try:
                base = graph6_decode(text)
            except DetourLabError as exc:
                sys.stderr.write(f"input graph: {exc}\n")
                return EXIT_FAIL
            g = split_vertex(base, args.vertex)
            sys.stdout.write(graph6_encode(g) + "\n")
            if args.pretty:
                sys.stderr.write(f"split vertex {args.vertex}: n={g.order} m={g.size}\n")
            return EXIT_OK
        else:
            sys.stderr.write(
                "unknown construction; known: petersen, pr, coxeter, flower-snark, "
                "j-split, coxeter-split, split\n"
            )
            return EXIT_USAGE
    except DetourLabError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    g = named.graph
    sys.stdout.write(graph6_encode(g) + "\n")
    if args.pretty:
        sys.stderr.write(
            f"{named.name}: n={g.order} m={g.size} girth={girth(g)}\n"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# search


def _build_spec(args) -> SearchSpec:
    girth_exact = args.girth_exact
    # a graph of girth >= 4 has no triangle, so the flag is implied
    triangle_free = args.triangle_free or (girth_exact is not None and girth_exact >= 4)
    return SearchSpec(
        order_max=args.order_max,
        order_min=args.order_min,
        triangle_free=triangle_free,
        girth_exact=girth_exact,
        forbid_degree2=args.forbid_deg2,
        threads=args.threads,
        budget=args.budget,
        checkpoint_path=args.checkpoint,
        hits_jsonl=args.hits_jsonl,
    )


def cmd_search(args) -> int:
    try:
        spec = _build_spec(args)
        spec.validate()
    except InvalidSpec as exc:
        sys.stderr.write(f"InvalidSpec: {exc}\n")
        return EXIT_USAGE

    def on_hit(hit: Hit) -> None:
        _emit(
            {
                "command": "search",
                "event": "hit",
                "graph6": hit.graph6,
                "order": hit.order,
                "size": hit.size,
                "girth": hit.girth,
                "tau": hit.tau,
            }
        )
        if args.pretty:
            sys.stderr.write(
                f"hit: order={hit.order} size={hit.size} girth={hit.girth} "
                f"tau={hit.tau} {hit.graph6}\n"
            )

    try:
        outcome = search_detour_saturated(spec, on_hit=on_hit)
    except DetourLabError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    _emit(
        {
            "command": "search",
            "event": "summary",
            "completed": outcome.completed,
            "candidates_by_order": outcome.candidates_by_order,
            "hits_by_order": outcome.hits_by_order,
            "hit_count": len(outcome.hits),
            "elapsed": round(outcome.elapsed, 3),
            "version": __version__,
        }
    )
    if args.pretty:
        total = sum(outcome.candidates_by_order.values())
        sys.stderr.write(
            f"search {'completed' if outcome.completed else 'stopped on budget'}: "
            f"{total} candidates, {len(outcome.hits)} hits, {outcome.elapsed:.1f}s\n"
        )
    return EXIT_OK if outcome.completed else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify-paper


def _check_named_instance(named, order, size, gval, want_tau=None) -> tuple[bool, str]:
    g = named.graph
    checks = [g.order == order, g.size == size, girth(g).value == gval]
    detail = f"order={g.order} size={g.size} girth={girth(g)}"
    if want_tau is not None:
        tau = detour_order(g).tau
        checks.append(tau == want_tau)
        detail += f" tau={tau}"
    return all(checks), detail


def _verify_quick(threads: int):
    yield "petersen-basics", *_check_named_instance(petersen(), 10, 15, 5, want_tau=10)
    rep = is_maximal_hypohamiltonian(petersen().graph)
    yield "petersen-maximal-hypohamiltonian", rep.verdict, f"verdict={rep.verdict}"

    ok, detail = _check_named_instance(pr(), 12, 15, 5, want_tau=10)
    yield "split-petersen-basics", ok, detail
    rep = is_detour_saturated(pr().graph)
    yield "split-petersen-detour-saturated", rep.verdict, f"verdict={rep.verdict}"

    for k, want_girth in ((5, 5), (7, 6), (9, 6)):
        named = flower_snark(k)
        g = named.graph
        cubic = all(g.adj[v].bit_count() == 3 for v in range(g.n))
        ok = g.order == 4 * k and cubic and girth(g).value == want_girth
        yield f"flower-snark-{k}-basics", ok, (
            f"order={g.order} cubic={cubic} girth={girth(g)}"
        )
        hypo = is_hypohamiltonian(g)
        mnh = is_maximally_nonhamiltonian(g)
        yield f"flower-snark-{k}-hamiltonicity-family", hypo.verdict and mnh.verdict, (
            f"hypohamiltonian={hypo.verdict} maximally-nonhamiltonian={mnh.verdict}"
        )

    from .core import delete_vertex

    j7 = flower_snark(7).graph
    ok = True
    bad = []
    for x in range(j7.n):
        if girth(delete_vertex(j7, x)).value != 6:
            ok = False
            bad.append(x)
        sp = j_split(7, x).graph
        if not (
            sp.order == 30
            and girth(sp).value == 6
            and detour_order(sp).tau == 28
            and is_detour_saturated(sp).verdict
        ):
            ok = False
            bad.append(x)
    yield "flower-snark-7-splits", ok, (
        "all 28 splits: order 30, girth 6, tau 28, detour-saturated"
        if ok
        else f"failing vertices: {sorted(set(bad))}"
    )

    ct = coxeter().graph
    cubic = all(ct.adj[v].bit_count() == 3 for v in range(ct.n))
    rep = is_maximal_hypohamiltonian(ct)
    ok = ct.order == 28 and cubic and girth(ct).value == 7 and rep.verdict
    yield "coxeter-basics", ok, (
        f"order={ct.order} cubic={cubic} girth={girth(ct)} maximal-hypohamiltonian={rep.verdict}"
    )
    ok = True
    bad = []
    for x in range(ct.n):
        if girth(delete_vertex(ct, x)).value != 7:
            ok = False
            bad.append(x)
        sp = coxeter_split(x).graph
        if not (
            sp.order == 30
            and girth(sp).value == 7
            and detour_order(sp).tau == 28
            and is_detour_saturated(sp).verdict
        ):
            ok = False
            bad.append(x)
    yield "coxeter-splits", ok, (
        "all 28 splits: order 30, girth 7, tau 28, detour-saturated"
        if ok
        else f"failing vertices: {sorted(set(bad))}"
    )


def _verify_full(threads: int, checkpoint_dir: str | None):
    tf = search_detour_saturated(SearchSpec(order_max=12, triangle_free=True))
    sizes = sorted(h.size for h in tf.hits)
    ok = (
        tf.completed
        and len(tf.hits) == 2
        and all(h.order == 12 and h.girth == 5 for h in tf.hits)
        and sizes == [15, 17]
        and are_isomorphic(graph6_decode(tf.hits[0].graph6), pr().graph)
    )
    yield "triangle-free-search-to-12", ok, (
        f"{len(tf.hits)} hits, sizes {sizes}, smallest isomorphic to pr: "
        f"{are_isomorphic(graph6_decode(tf.hits[0].graph6), pr().graph) if tf.hits else False}"
    )

    g4 = search_detour_saturated(
        SearchSpec(order_max=12, triangle_free=True, girth_exact=4)
    )
    yield "girth-4-search-to-12", g4.completed and len(g4.hits) == 0, (
        f"{len(g4.hits)} hits over orders 1..12"
    )

    many = max(4, threads)
    tf2 = search_detour_saturated(
        SearchSpec(order_max=12, triangle_free=True, threads=many)
    )
    g42 = search_detour_saturated(
        SearchSpec(order_max=12, triangle_free=True, girth_exact=4, threads=many)
    )
    same = (
        tf2.hits == tf.hits
        and tf2.candidates_by_order == tf.candidates_by_order
        and tf2.hits_by_order == tf.hits_by_order
        and g42.hits == g4.hits
        and g42.candidates_by_order == g4.candidates_by_order
    )
    yield "search-determinism-across-threads", same, (
        f"1 thread vs {many} threads: identical hits and counts = {same}"
    )


def _verify_extended(threads: int, checkpoint_dir: str | None):
    ck = None
    if checkpoint_dir:
        os.makedirs(checkpoint_dir, exist_ok=True)
        ck = os.path.join(checkpoint_dir, "girth4-13-14.ckpt")
    out = search_detour_saturated(
        SearchSpec(
            order_max=14,
            order_min=13,
            triangle_free=True,
            girth_exact=4,
            threads=threads,
            checkpoint_path=ck,
        )
    )
    h13 = out.hits_by_order.get(13, 0)
    h14 = out.hits_by_order.get(14, 0)
    ok = out.completed and h13 == 0 and h14 == 1
    detail = f"completed={out.completed} hits: order13={h13} order14={h14}"
    if ok:
        hit = [h for h in out.hits if h.order == 14][0]
        g = graph6_decode(hit.graph6)
        recheck = is_detour_saturated(g, method="recompute")
        ok = hit.tau == 13 and recheck.verdict
        detail += f" tau={hit.tau} reverified={recheck.verdict}"
    yield "girth-4-search-orders-13-14", ok, detail


def cmd_verify_paper(args) -> int:
    checks = [_verify_quick(args.threads)]
    if args.tier in ("full", "extended"):
        checks.append(_verify_full(args.threads, args.checkpoint_dir))
    if args.tier == "extended":
        checks.append(_verify_extended(args.threads, args.checkpoint_dir))
    all_ok = True
    t0 = time.perf_counter()
    for gen in checks:
        for name, ok, detail in gen:
            all_ok &= bool(ok)
            _emit(
                {
                    "command": "verify-paper",
                    "check": name,
                    "ok": bool(ok),
                    "detail": detail,
                    "tier": args.tier,
                }
            )
            if args.pretty:
                sys.stderr.write(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}\n")
    _emit(
        {
            "command": "verify-paper",
            "event": "summary",
            "tier": args.tier,
            "ok": all_ok,
            "elapsed": round(time.perf_counter() - t0, 3),
            "version": __version__,
        }
    )
    return EXIT_OK if all_ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="detourlab",
        description="Exact detour-order computations, named graphs, and saturation searches.",
    )
    ap.add_argument("--version", action="version", version=f"detourlab {__version__}")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("check", help="per-graph property reports for graph6 input")
    c.add_argument("input", nargs="?", default="-", help="graph6 file, or - for stdin")
    c.add_argument(
        "--props",
        default="girth,tau",
        help=f"comma list from: {', '.join(sorted(_PROPS))}",
    )
    c.add_argument("--pretty", action="store_true")
    c.set_defaults(fn=cmd_check)

    c = sub.add_parser("construct", help="emit a named construction as graph6")
    c.add_argument(
        "name",
        help="petersen | pr | coxeter | flower-snark | j-split | coxeter-split | split",
    )
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--vertex", type=int, default=None)
    c.add_argument("--input", default=None, help="graph6 input for `split` (- for stdin)")
    c.add_argument("--pretty", action="store_true")
    c.set_defaults(fn=cmd_construct)

    c = sub.add_parser("search", help="exhaustive detour-saturation search")
    c.add_argument("--order-min", type=int, default=1)
    c.add_argument("--order-max", type=int, required=True)
    c.add_argument("--triangle-free", action="store_true")
    c.add_argument("--girth-exact", type=int, default=None)
    c.add_argument("--forbid-deg2", action="store_true")
    c.add_argument("--threads", type=int, default=_default_threads())
    c.add_argument("--budget", type=float, default=None, help="wall-clock seconds")
    c.add_argument("--checkpoint", default=None, help="checkpoint file path")
    c.add_argument("--hits-jsonl", default=None, help="mirror hits to this JSONL file")
    c.add_argument("--pretty", action="store_true")
    c.set_defaults(fn=cmd_search)

    c = sub.add_parser("verify-paper", help="run the tiered verification suite")
    c.add_argument("--tier", choices=("quick", "full", "extended"), default="quick")
    c.add_argument("--threads", type=int, default=_default_threads())
    c.add_argument("--checkpoint-dir", default=None)
    c.add_argument("--pretty", action="store_true")
    c.set_defaults(fn=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
