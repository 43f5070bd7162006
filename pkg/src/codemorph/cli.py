"""``codemorph`` command-line front end.

Exit status is 0 on success, 1 on bad input (parse errors, unmet
preconditions, failed ``verify`` checks) and 2 when an exact routine refuses
an input as too large.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bits import DomainError, ResourceError, format_word
from .code import (
    canonical_key,
    closure_intersection,
    closure_union,
    enumerate_trunks,
    format_key,
    reduce,
    root,
    trunk_count,
)
from .covering import collision_check, covering_map, free_neurons
from .galois import bool_mul, residual
from .ideal import canonical_form, cf_census, code_of_cf, intersection_completion_cf, union_completion_cf
from .poset import downset, enumerate_reduced_codes, export_dot, export_json
from .properties import DEFAULT_SEED, run_all
from .rank import CHAIN_BUDGET, RankReport, brank_bounds, brank_chain, brank_report, conjecture_scan, mrank_exact
from .textio import format_code, format_matrix, read_code, read_matrix


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog.split()[-1]}: {message}")


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", None):
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _neurons(idx) -> list:
    return [i + 1 for i in idx]


# -- commands --------------------------------------------------------------


def cmd_cf(args):
    if args.census is not None:
        res = cf_census(args.census)
        payload = dict(res, witness=format_code(res["witness"]), histogram={str(k): v for k, v in res["histogram"].items()})
        lines = [f"codes on {res['n']} neurons: {res['codes']}", "size  count"]
        lines += [f"{k:>4}  {v}" for k, v in res["histogram"].items()]
        lines.append(f"max size {res['max_size']}, first reached by {res['witness']}")
        return _emit(args, payload, "\n".join(lines))
    if args.file is None:
        raise UsageError("cf: give a code file or --census N")
    C = read_code(args.file)
    G = canonical_form(C)
    elems = [str(p) for p in G]
    _emit(args, {"n": C.n, "elements": elems}, "\n".join(elems))


def cmd_complete(args):
    C = read_code(args.file)
    G = canonical_form(C)
    if args.kind == "intersection":
        H = intersection_completion_cf(G)
        oracle = closure_intersection(C)
    else:
        H = union_completion_cf(G)
        oracle = closure_union(C)
    D = code_of_cf(H, C.n)
    if D != oracle:  # pragma: no cover - guarded by the property suite
        raise AssertionError("canonical-form completion disagrees with closure")
    elems = [str(p) for p in H]
    text = format_code(D)
    if args.show_cf:
        text += "# canonical form\n" + "".join(f"# {e}\n" for e in elems)
    _emit(args, {"kind": args.kind, "n": C.n, "code": format_code(D), "cf": elems}, text)


def cmd_reduce(args):
    C = read_code(args.file)
    red = reduce(C)
    payload = {
        "n": red.code.n,
        "code": format_code(red.code),
        "kept": _neurons(red.kept),
        "redundant": _neurons(red.redundant),
        "projection": format_matrix(red.projection),
    }
    text = format_code(red.code)
    text += f"# kept neurons: {' '.join(map(str, _neurons(red.kept))) or '-'}\n"
    text += f"# deleted redundant: {' '.join(map(str, _neurons(red.redundant))) or '-'}\n"
    _emit(args, payload, text)


def cmd_trunks(args):
    C = read_code(args.file)
    rows = []
    for T in enumerate_trunks(C):
        r = root(T, C.n)
        words = sorted(T, key=lambda w: (bin(w).count("1"), [i for i in range(C.n) if (w >> i) & 1]))
        rows.append((r, words))
    rows.sort(key=lambda rw: (-len(rw[1]), bin(rw[0]).count("1"), format_word(rw[0])))
    payload = {
        "count": len(rows),
        "trunks": [{"root": format_word(r), "words": [format_word(w) for w in ws]} for r, ws in rows],
    }
    lines = [f"{format_word(r):>8}  {{{', '.join(format_word(w) for w in ws)}}}" for r, ws in rows]
    lines.append(f"# {len(rows)} nonempty trunks")
    _emit(args, payload, "\n".join(lines))


def cmd_defect(args):
    C = read_code(args.file)
    t = trunk_count(C)
    _emit(args, {"t": t, "size": len(C), "defect": t - len(C)}, f"t = {t}\n|C| = {len(C)}\nd = {t - len(C)}")


def _load_reduced(args):
    C = read_code(args.file)
    return reduce(C).code if args.reduce else C


def cmd_covering(args):
    C = _load_reduced(args)
    free = set(free_neurons(C))
    neurons = range(C.n) if args.neuron is None else [args.neuron - 1]
    steps = []
    lines = [f"{'neuron':>6}  {'free':>5}  {'BMF':>5}  {'|image|':>7}  {'t':>3}  {'d':>3}"]
    for i in neurons:
        if not 0 <= i < C.n:
            raise DomainError(f"neuron {i + 1} out of range 1..{C.n}")
        s = covering_map(C, i)
        col = collision_check(C, i)
        d = s.t_image - len(s.image)
        entry = {
            "neuron": i + 1,
            "free": i in free,
            "bmf": s.is_bmf_step,
            "reduced_bmf": s.reduced_bmf,
            "image_size": len(s.image),
            "t": s.t_image,
            "d": d,
            "defect_drop": s.defect_drop,
            "collision": None if col is None else [format_word(w) for w in col],
        }
        if args.neuron is not None:
            entry["image"] = format_code(s.image)
            entry["rep"] = str(s.rep)
        steps.append(entry)
        yes = lambda b: "yes" if b else "no"  # noqa: E731
        lines.append(f"{i + 1:>6}  {yes(i in free):>5}  {yes(s.is_bmf_step):>5}  {len(s.image):>7}  {s.t_image:>3}  {d:>3}")
        if args.neuron is not None:
            lines.append(f"# representative {s.rep}")
            lines.append(f"# reduced image {s.image}")
            if not s.reduced_bmf:
                lines.append("# the reduced image is not a factor of C")
    _emit(args, {"steps": steps}, "\n".join(lines))


def cmd_free(args):
    C = _load_reduced(args)
    free = _neurons(free_neurons(C))
    _emit(args, {"free": free}, " ".join(map(str, free)) if free else "(none)")


def _cert_text(V, H) -> str:
    return "# V\n" + format_matrix(V) + "# H\n" + format_matrix(H)


def cmd_brank(args):
    M = read_matrix(args.file)
    mode = "bounds" if args.bounds else "chain" if args.chain else "exact"
    payload = {"mode": mode}
    if mode == "exact":
        rep = brank_report(M)
        text = f"brank = {rep.brank}\n" + _cert_text(*rep.certificate)
    elif mode == "bounds":
        rep = brank_bounds(M)
        lines = [f"lower {name} = {v}" for name, v in rep.lower_bounds.items()]
        lines += [f"upper {name} = {v}" for name, v in rep.upper_bounds.items()]
        if rep.brank is not None:
            lines.append(f"brank = {rep.brank} (bounds meet)")
        else:
            lines.append(f"{rep.lower} <= brank <= {rep.upper}")
        text = "\n".join(lines) + "\n"
    else:
        ch = brank_chain(M, budget=args.budget)
        rep = RankReport(upper_bounds={"covering_chain": ch.bound}, certificate=(ch.V, ch.H))
        neurons = [s.neuron + 1 for s in ch.steps]
        payload["chain"] = {"bound": ch.bound, "complete": ch.complete, "nodes": ch.nodes, "evaluations": ch.evaluations, "neurons": neurons}
        text = f"brank <= {ch.bound}\n"
        text += f"# chain through neurons {' '.join(map(str, neurons)) or '(none)'}\n"
        if not ch.complete:
            text += "# budget exhausted; bound is best found so far\n"
        text += _cert_text(ch.V, ch.H)
    payload["report"] = rep.to_dict()
    _emit(args, payload, text)


def cmd_mrank(args):
    C = read_code(args.file)
    r = mrank_exact(C)
    _emit(args, {"mrank": r}, f"mrank = {r}")


def cmd_factorize(args):
    C = read_matrix(args.file)
    H = read_matrix(args.via)
    if C.shape[1] != H.shape[1]:
        raise DomainError(f"H has {H.shape[1]} columns but C has {C.shape[1]}")
    V = residual(C, H)
    ok = bool((bool_mul(V, H) == C).all())
    payload = {"V": format_matrix(V), "H": format_matrix(H), "factors": ok}
    if args.json:
        _emit(args, payload, "")
    else:
        sys.stdout.write(format_matrix(V))
    if not ok:
        raise DomainError("C is not V H for any V: the rows of H do not factor C")


def cmd_poset(args):
    seeds = []
    if args.seed_lambda is not None:
        seeds += enumerate_reduced_codes(args.seed_lambda)
    for path in args.seed or []:
        seeds.append(reduce(read_code(path)).code)
    if not seeds:
        raise UsageError("poset: give --seed-lambda K or --seed FILE")
    G = downset(seeds, limit=args.limit)
    if args.dot == "-":
        sys.stdout.write(export_dot(G))
    elif args.dot:
        export_dot(G, args.dot)
    if args.json:
        if args.json == "-":
            sys.stdout.write(export_json(G))
        else:
            export_json(G, args.json)
    if args.json == "-" or args.dot == "-":
        return
    by_lam: dict = {}
    for v in G.nodes.values():
        by_lam[v.lam] = by_lam.get(v.lam, 0) + 1
    lines = [f"classes: {len(G.nodes)}"]
    lines += [f"  lambda = {k}: {by_lam[k]}" for k in sorted(by_lam)]
    lines.append(f"covering edges: {len(G.edges)}")
    lines.append(f"  BMF edges: {sum(e.bmf for e in G.edges)}")
    growth, edge = G.lambda_growth()
    if edge is not None:
        lines.append(f"largest lambda increase along an edge: {growth} ({format_key(edge.parent)} at neuron {edge.neuron + 1})")
    if G.truncated:
        lines.append(f"# truncated at --limit {args.limit}")
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_iso(args):
    A, B = read_code(args.a), read_code(args.b)
    ka, kb = canonical_key(A), canonical_key(B)
    same = ka == kb
    _emit(
        args,
        {"isomorphic": same, "labels": [format_key(ka), format_key(kb)]},
        "isomorphic" if same else "not isomorphic",
    )


def cmd_verify(args):
    results = run_all(seed=args.seed, quick=args.quick)
    ok = all(r.ok for r in results)
    payload = {
        "seed": args.seed,
        "ok": ok,
        "results": [{"name": r.name, "cases": r.cases, "violations": r.violations, "ok": r.ok} for r in results],
    }
    lines = [r.line() for r in results]
    for r in results:
        for ex in r.examples:
            lines.append(f"  {r.name}: {ex}")
    _emit(args, payload, "\n".join(lines))
    if not ok:
        return 1


def cmd_conjecture(args):
    rep = conjecture_scan(args.samples, args.nmax, seed=args.seed, kinds=tuple(args.kinds))
    lines = [f"samples: {len(rep.rows)}", f"brank(C) = brank(rho(C)) + ell: {rep.agreements}"]
    by_kind: dict = {}
    for row in rep.rows:
        a, n = by_kind.get(row.injected, (0, 0))
        by_kind[row.injected] = (a + row.agrees, n + 1)
    lines += [f"  {k}: {a}/{n}" for k, (a, n) in sorted(by_kind.items())]
    for row in rep.counterexamples:
        lines.append(
            f"counterexample {row.code} ({row.injected}): k={row.k} ell={row.ell} "
            f"brank={row.brank} brank_reduced={row.brank_reduced}"
        )
    _emit(args, rep.to_dict(), "\n".join(lines))


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker cap (computations run single-threaded)")
    as_json = _Parser(add_help=False)
    as_json.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = _Parser(prog="codemorph", description="Neural codes, their morphisms and Boolean matrix factorization.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, json_flag=True):
        sp = sub.add_parser(name, help=help, parents=[common] + ([as_json] if json_flag else []))
        sp.set_defaults(func=func)
        return sp

    sp = add("cf", cmd_cf, "canonical form of the neural ideal")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--census", type=int, metavar="N", help="canonical-form sizes over every code on N neurons")

    sp = add("complete", cmd_complete, "intersection or union completion via the canonical form")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--intersection", dest="kind", action="store_const", const="intersection")
    g.add_argument("--union", dest="kind", action="store_const", const="union")
    sp.add_argument("--show-cf", action="store_true", help="append the filtered canonical form as comments")
    sp.set_defaults(kind="intersection")

    sp = add("reduce", cmd_reduce, "delete trivial and redundant neurons")
    sp.add_argument("file")

    sp = add("trunks", cmd_trunks, "list nonempty trunks and their roots")
    sp.add_argument("file")

    sp = add("defect", cmd_defect, "trunk count, size and defect")
    sp.add_argument("file")

    for name, func, help in (
        ("covering", cmd_covering, "covering maps: free?, BMF?, |image|, t, d per neuron"),
        ("free", cmd_free, "free neurons of a reduced code"),
    ):
        sp = add(name, func, help)
        sp.add_argument("file")
        sp.add_argument("--reduce", action="store_true", help="reduce the code first instead of rejecting it")
        if name == "covering":
            sp.add_argument("--neuron", type=int, help="only this neuron (1-based); also prints the image")

    sp = add("brank", cmd_brank, "Boolean rank: exact, bounds, or covering-chain upper bound")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact rank with a minimum certificate (default)")
    g.add_argument("--bounds", action="store_true")
    g.add_argument("--chain", action="store_true")
    sp.add_argument("--budget", type=int, default=CHAIN_BUDGET, help="covering maps evaluated by --chain")

    sp = add("mrank", cmd_mrank, "monomial rank")
    sp.add_argument("file")

    sp = add("factorize", cmd_factorize, "V = C:H for a given H, checking C = VH")
    sp.add_argument("file")
    sp.add_argument("--via", required=True, metavar="H.bmat")

    sp = add("poset", cmd_poset, "down-set of the morphism poset under covering maps", json_flag=False)
    sp.add_argument("--seed-lambda", type=int, metavar="K", help="seed with every reduced class on K neurons")
    sp.add_argument("--seed", action="append", metavar="FILE", help="seed with a code file (repeatable)")
    sp.add_argument("--dot", metavar="FILE", help="write Graphviz DOT ('-' for stdout)")
    sp.add_argument("--json", nargs="?", const="-", metavar="FILE", help="write JSON (stdout if no FILE)")
    sp.add_argument("--limit", type=int, metavar="N", help="stop after N classes")

    sp = add("iso", cmd_iso, "are two codes isomorphic?")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("verify", cmd_verify, "run the property suites")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--quick", action="store_true", help="smaller sample sizes")

    sp = add("conjecture-scan", cmd_conjecture, "compare brank(C) with brank(rho(C)) + ell on random codes")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--nmax", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--kinds", nargs="+", default=["duplicate", "ones", "product"], choices=["duplicate", "ones", "product"]
    )
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.func(args) or 0
    except ResourceError as exc:
        print(f"codemorph: too large: {exc}", file=sys.stderr)
        if exc.bounds:
            print(f"codemorph: known bounds: {json.dumps(exc.bounds, sort_keys=True)}", file=sys.stderr)
        return 2
    except (DomainError, OSError) as exc:
        print(f"codemorph: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
