"""Command line interface: ``fusscatalan <command> ...``.

Exit codes: 0 success, 1 a verification or certification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import diagrams as dg
from .algebra import Morphism, loop_scalar
from .enumeration import COUNT_BUDGET, DEFAULT_BUDGET, BudgetExceeded, dims_table, enumerate_diagrams
from .opmodel import (
    OP_TOL,
    CertificationError,
    CertifiedModel,
    check_trace_restriction,
    load_inclusion,
)
from .relations import SUITES, diagram_namespace, verify_relations
from .scalars import Scalar
from .trace import DEFAULT_TOL, gram_matrix, markov_close, spectrum
from .words import WordSyntaxError, parse_word

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return "%.12g" % x


def jnum(x: float) -> float:
    return float(fmt(x))


def emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        payload = {"schema": f"fusscatalan.{args.command}/{SCHEMA_VERSION}", **payload}
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _scalar_report(s: Scalar, args) -> dict:
    return {"exact": str(s), "value": jnum(s.eval(args.beta, args.omega))}


# -- commands -----------------------------------------------------------------------


def cmd_dims(args) -> int:
    rows = dims_table(args.kind, args.max, budget=args.budget)
    emit(args, {"kind": args.kind, "rows": [{"m": m, "n": n, "dim": d} for m, n, d in rows]},
         ["m\tn\tdim"] + [f"{m}\t{n}\t{d}" for m, n, d in rows])
    return 0


def cmd_enumerate(args) -> int:
    basis = enumerate_diagrams(args.kind, args.m, args.n, budget=args.budget)
    texts = [dg.format_diagram(d) for d in basis]
    emit(args, {"kind": args.kind, "m": args.m, "n": args.n, "count": len(texts), "diagrams": texts},
         texts + [f"# {len(texts)} diagrams"])
    return 0


def _read_morphism(args) -> Morphism:
    if args.word is not None:
        return diagram_namespace(args.kind).evaluate(parse_word(args.word))
    if args.diagram is not None:
        return Morphism.from_diagram(dg.parse_diagram(args.diagram))
    raise UsageError("give --word or --diagram")


def cmd_compose(args) -> int:
    if args.word is not None and args.diagrams:
        raise UsageError("give either two diagrams or --word, not both")
    if args.word is not None:
        x = diagram_namespace(args.kind).evaluate(parse_word(args.word))
        emit(args, {"dom": x.dom, "cod": x.cod,
                    "terms": [{"diagram": dg.format_diagram(d), "coefficient": str(c)} for d, c in x.items()]},
             [str(x)])
        return 0
    if len(args.diagrams) != 2:
        raise UsageError("compose needs two diagrams A B (B is applied first) or --word")
    a, b = (dg.parse_diagram(t) for t in args.diagrams)
    d, white, black = dg.compose_raw(a, b)
    s = loop_scalar(d.kind, white, black)
    emit(args, {"diagram": dg.format_diagram(d), "white_loops": white, "black_loops": black, "scalar": str(s)},
         [dg.format_diagram(d), f"loops: white {white}, black {black}", f"scalar: {s}"])
    return 0


def cmd_verify(args) -> int:
    results = verify_relations(args.suite, kind=args.kind, mode=args.generators, max_index=args.max_index)
    good = sum(r.holds for r in results)
    lines = [str(r) for r in results]
    lines.append(f"{good}/{len(results)} relations hold exactly")
    emit(args, {"suite": args.suite, "held": good, "total": len(results),
                "relations": [{"id": r.id, "holds": r.holds, "failing": r.failing,
                               "difference": None if r.holds else str(r.difference)} for r in results]},
         lines)
    return 0 if good == len(results) else 1


def cmd_gram(args) -> int:
    g = gram_matrix(args.kind, args.m, args.n, args.beta, args.omega, budget=args.budget)
    ev = spectrum(g)
    rank = int(np.sum(np.abs(ev) > args.tol))
    positive = bool(ev.size == 0 or ev.min() >= -args.tol)
    lo, hi = (float(ev.min()), float(ev.max())) if ev.size else (0.0, 0.0)
    lines = ["\t".join(fmt(v) for v in row) for row in g]
    lines += [f"size {len(g)}", f"eigenvalues min {fmt(lo)} max {fmt(hi)}", f"rank {rank}",
              f"positive semidefinite {'yes' if positive else 'no'}"]
    emit(args, {"kind": args.kind, "m": args.m, "n": args.n, "beta": jnum(args.beta), "omega": jnum(args.omega),
                "matrix": [[jnum(v) for v in row] for row in g], "eigen_min": jnum(lo), "eigen_max": jnum(hi),
                "rank": rank, "positive": positive}, lines)
    return 0


def cmd_markov(args) -> int:
    x = _read_morphism(args)
    s = markov_close(x)
    rep = _scalar_report(s, args)
    emit(args, rep, [f"{rep['exact']}", f"at beta={fmt(args.beta)}, omega={fmt(args.omega)}: {fmt(rep['value'])}"])
    return 0


def cmd_embed_tl(args) -> int:
    d = dg.parse_diagram(args.diagram)
    if d.kind != dg.TL:
        raise UsageError("embed-tl expects a TL diagram")
    out = dg.format_diagram(dg.tl_to_fc(d))
    emit(args, {"input": dg.format_diagram(d), "output": out}, [out])
    return 0


def cmd_opmodel(args) -> int:
    try:
        inclusion, state = load_inclusion(args.file)
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read inclusion file: {exc}") from exc
    t5 = check_trace_restriction(inclusion)
    payload = {"index": str(t5.index), "canonical_restricts": t5.holds}
    lines = [f"B blocks {list(inclusion.B.blocks)}  D blocks {list(inclusion.D.blocks)}",
             f"index dim(D)/dim(B) = {t5.index}",
             f"canonical trace restricts to canonical trace: {'yes' if t5.holds else 'no'}"]
    try:
        cm = CertifiedModel.certify(inclusion, state, tol=args.tol)
    except CertificationError as exc:
        payload.update(certified=False, reason=str(exc))
        lines.append(f"NOT certified: {exc}")
        emit(args, payload, lines)
        return 1
    rep = cm.report
    results = cm.verify("T2", tol=args.tol)
    residual = max(r.residual for r in results)
    ok = all(r.holds for r in results)
    payload.update(certified=True, delta2=jnum(rep.delta2), beta2=jnum(rep.beta2), omega2=jnum(rep.omega2),
                   bimodule_residual=jnum(rep.bimodule_residual),
                   relations={r.id: jnum(r.residual) for r in results}, max_residual=jnum(residual),
                   relations_hold=ok)
    lines += [f"certified (beta^2 = {fmt(rep.beta2)}, omega^2 = {fmt(rep.omega2)})",
              f"delta^2 = {fmt(rep.delta2)}",
              f"bimodule residual {fmt(rep.bimodule_residual)}"]
    lines += [f"relation {r.id}: residual {fmt(r.residual)}" for r in results]
    lines.append(f"max residual {fmt(residual)} (tolerance {fmt(args.tol)})")
    emit(args, payload, lines)
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--beta", type=float, default=2.0)
    common.add_argument("--omega", type=float, default=2.0)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--budget", type=int, default=None, help="maximal number of boundary points")

    p = argparse.ArgumentParser(prog="fusscatalan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def kind_arg(sp, default=dg.FC):
        sp.add_argument("--kind", choices=[dg.TL, dg.FC], default=default)

    sp = sub.add_parser("dims", parents=[common], help="dimension table")
    kind_arg(sp)
    sp.add_argument("--max", type=int, default=3)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("enumerate", parents=[common], help="list basis diagrams")
    kind_arg(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("compose", parents=[common], help="compose two diagrams, or evaluate a word")
    kind_arg(sp)
    sp.add_argument("diagrams", nargs="*")
    sp.add_argument("--word")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("verify", parents=[common], help="check a relation suite exactly")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--max-index", type=int, default=4)
    sp.add_argument("--kind", choices=[dg.TL, dg.FC], default=None)
    sp.add_argument("--generators", choices=["explicit", "words"], default="explicit")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gram", parents=[common], help="Gram matrix of the Markov trace form")
    kind_arg(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_gram)

    sp = sub.add_parser("markov", parents=[common], help="Markov closure of a word or diagram")
    kind_arg(sp)
    sp.add_argument("--word")
    sp.add_argument("--diagram")
    sp.set_defaults(func=cmd_markov)

    sp = sub.add_parser("embed-tl", parents=[common], help="doubling map TL -> FC")
    sp.add_argument("diagram")
    sp.set_defaults(func=cmd_embed_tl)

    sp = sub.add_parser("opmodel", parents=[common], help="operator model on a C*-algebra inclusion")
    op = sp.add_subparsers(dest="action", required=True)
    chk = op.add_parser("check", parents=[common], help="certify a (beta, omega)-form and run the relations")
    chk.add_argument("file")
    chk.set_defaults(func=cmd_opmodel)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is None:
        args.tol = OP_TOL if args.command == "opmodel" else DEFAULT_TOL
    if args.budget is None:
        args.budget = COUNT_BUDGET if args.command == "dims" else DEFAULT_BUDGET
    if args.beta <= 0 or args.omega <= 0:
        parser.error("--beta and --omega must be positive")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 2
    except WordSyntaxError as exc:
        print(f"error: bad word: {exc}", file=sys.stderr)
        return 2
    except dg.SignatureError as exc:
        print(f"error: signature mismatch: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
