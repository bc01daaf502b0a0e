"""Command-line front end.

Subcommands cover the word-algebra products and maps, basis reduction, graded
spans with membership certificates, and the numeric verification suites.
Every subcommand accepts --json for a single newline-terminated JSON document.
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import maps, numerics, products, relations
from .config import ConfigError, load_settings, resolve
from .exprparse import ExprSyntaxError, parse_poly
from .words import Word, WordPoly, admissible_words, Index, word_to_index, words_of_weight, yh_words

__all__ = ["main", "run"]


class UsageError(ValueError):
    """Bad user input below the argparse layer (exit code 2)."""


def _poly_arg(text: str) -> WordPoly:
    try:
        return parse_poly(text)
    except ExprSyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from exc


def _word_arg(text: str) -> Word:
    p = _poly_arg(text)
    terms = list(p.terms())
    if len(terms) != 1 or terms[0][1] != 1:
        raise UsageError(f"{text!r} is not a single word")
    return terms[0][0]


def _index_arg(text: str) -> Index:
    try:
        parts = tuple(int(p) for p in text.split(","))
        return Index(parts)
    except ValueError as exc:
        raise UsageError(f"bad index {text!r}: {exc}") from exc


def _fmt(value: float) -> str:
    return f"{value:.15g}"


def _coeff_str(c: Fraction) -> str:
    return str(c)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _report_json(rep: numerics.NumericReport) -> dict:
    return rep.to_dict()


def _report_line(label: str, rep: numerics.NumericReport) -> str:
    return (
        f"{label}: value={_fmt(rep.value)} cutoff={rep.cutoff} "
        f"error_estimate={rep.error_estimate:.3e} converged={rep.converged}"
    )


# -- subcommand handlers ----------------------------------------------------------


def _cmd_product(args, settings) -> int:
    ops = {"diamond": products.diamond, "harmonic": products.harmonic}
    result = ops[args.op](_poly_arg(args.left), _poly_arg(args.right))
    _emit(args, {"op": args.op, "result": str(result)}, [str(result)])
    return 0


def _cmd_map(args, settings) -> int:
    p = _poly_arg(args.expr)
    name = args.name
    if m := re.fullmatch(r"d(\d+)", name):
        result = maps.derivation(int(m.group(1)), p)
    else:
        fns = {"tau": maps.tau, "phi": maps.phi, "s1": maps.s1, "s1inv": maps.s1_inv, "smap": maps.s_map}
        if name not in fns:
            raise UsageError(f"unknown map {name!r} (tau|phi|s1|s1inv|smap|d<l>)")
        try:
            result = fns[name](p)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    _emit(args, {"map": name, "result": str(result)}, [str(result)])
    return 0


def _cmd_reduce(args, settings) -> int:
    w1 = _word_arg(args.w1)
    w2 = _word_arg(args.w2)
    try:
        result = relations.reduce_to_basis(w1, w2)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, {"w1": str(w1), "w2": str(w2), "result": str(result)}, [str(result)])
    return 0


def _cmd_span(args, settings) -> int:
    if args.set not in relations.SPAN_IDS:
        raise UsageError(f"unknown relation set {args.set!r}")
    basis = relations.graded_span(args.set, args.weight)
    pivots = [str(w) for w in basis.pivots]
    payload = {"set": args.set, "weight": args.weight, "dim": len(basis.rows), "pivots": pivots}
    lines = [f"set {args.set} weight {args.weight}: dim {len(basis.rows)}", "pivots: " + " ".join(pivots)]
    _emit(args, payload, lines)
    return 0


def _cmd_check_equality(args, settings) -> int:
    max_weight = int(resolve(settings, "max_weight", args.max_weight))
    reports = []
    lines = []
    ok = True
    for weight in range(3, max_weight + 1):
        rep = relations.check_graded_equality(weight)
        reports.append(rep)
        ok = ok and rep["equal"]
        dims = " ".join(f"{s['id']}={s['dim']}" for s in rep["sets"])
        lines.append(f"weight {weight}: dims {dims} equal={rep['equal']}")
    lines.append("all equal" if ok else "MISMATCH FOUND")
    _emit(args, {"max_weight": max_weight, "weights": reports, "equal": ok}, lines)
    return 0 if ok else 1


def _membership_rows(pairs, basis):
    """pairs: (label, residual WordPoly) -> (rows, all_ok)."""
    rows = []
    ok = True
    for label, residual in pairs:
        cert = basis.member(residual)
        ok = ok and cert.member
        row = {"element": label, "member": cert.member}
        if cert.member:
            row["coordinates"] = [[gen, _coeff_str(c)] for gen, c in cert.coordinates]
        rows.append(row)
    return rows, ok


def _cmd_check_duality(args, settings) -> int:
    weight = args.weight
    basis = relations.graded_span("A4", weight)
    pairs = []
    for w in admissible_words(weight):
        residual = relations.duality_residual(w)
        pairs.append((f"{w} - tau({w})", residual))
    rows, ok = _membership_rows(pairs, basis)
    lines = [
        f"{row['element']}: " + ("member, " + " ".join(f"{g}:{c}" for g, c in row["coordinates"])
                                 if row["member"] else "NOT A MEMBER")
        for row in rows
    ]
    lines.append(f"{len(rows)} residuals at weight {weight}: " + ("all in span" if ok else "failures above"))
    _emit(args, {"weight": weight, "set": "A4", "residuals": rows, "ok": ok}, lines)
    return 0 if ok else 1


def _cmd_check_derivation(args, settings) -> int:
    weight = args.weight
    l = args.l
    if l < 1:
        raise UsageError("--l must be >= 1")
    if weight - l < 3:
        raise UsageError(f"residual weight {weight} needs admissible base words of weight {weight - l} >= 3")
    basis = relations.graded_span("A4", weight)
    pairs = []
    for w in admissible_words(weight - l):
        residual = relations.derivation_residual(l, w)
        pairs.append((f"d{l}({w})", residual))
    rows, ok = _membership_rows(pairs, basis)
    lines = [
        f"{row['element']}: " + ("member" if row["member"] else "NOT A MEMBER")
        for row in rows
    ]
    lines.append(f"{len(rows)} images at weight {weight}: " + ("all in span" if ok else "failures above"))
    _emit(args, {"weight": weight, "l": l, "set": "A4", "residuals": rows, "ok": ok}, lines)
    return 0 if ok else 1


def _cmd_zeta(args, settings) -> int:
    cutoff = int(resolve(settings, "cutoff", args.cutoff))
    tol = float(resolve(settings, "tol", args.tol))
    try:
        rep = numerics.zeta_eval(_index_arg(args.index), cutoff, tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, _report_json(rep), [_report_line(f"zeta({args.index})", rep)])
    return 0


def _cmd_verify_kawashima(args, settings) -> int:
    max_weight = int(resolve(settings, "max_weight", args.max_weight))
    cutoff = int(resolve(settings, "cutoff", args.cutoff))
    tol = float(resolve(settings, "tol", args.tol))
    rows = []
    lines = []
    failures = 0
    for total in range(2, max_weight):
        for wu in range(1, total):
            for u in yh_words(wu):
                for v in yh_words(total - wu):
                    if v < u:
                        continue  # unordered pairs once
                    gen = relations.kawashima_generator(u, v)
                    rep = numerics.z_eval_poly(gen, cutoff, tol)
                    bad = abs(rep.value) > tol
                    failures += bad
                    rows.append({"u": str(u), "v": str(v), "weight": total + 1,
                                 "residual": rep.value, "error_estimate": rep.error_estimate, "ok": not bad})
                    lines.append(f"u={u} v={v} weight={total + 1} |Z|={abs(rep.value):.3e}"
                                 + ("" if not bad else "  FAIL"))
    lines.append(f"{len(rows)} pairs, {failures} failures (cutoff {cutoff}, tol {tol:g})")
    _emit(args, {"max_weight": max_weight, "cutoff": cutoff, "tol": tol,
                 "pairs": rows, "failures": failures}, lines)
    return 0 if failures == 0 else 1


def _cmd_verify_interpolation(args, settings) -> int:
    cutoff = int(resolve(settings, "dirichlet_cutoff", args.cutoff))
    inner = int(resolve(settings, "inner_cutoff", args.inner_cutoff))
    tol = float(resolve(settings, "tol", args.tol))
    k = _index_arg(args.index)
    if not k.is_admissible:
        raise UsageError(f"index {k} must be admissible (last part >= 2)")
    b = WordPoly.one()
    for part in k:
        b = b * maps.z_power(part - 1) * WordPoly.from_letters("x")
    a = WordPoly.from_letters("y")
    rows = []
    lines = []
    failures = 0
    for s in range(args.smax + 1):
        l1, l2 = numerics.l_partial(k, s, cutoff, inner, tol)
        lhs = l1.value + s * l2.value
        z = numerics.f_component(numerics.FamilySymbol(a, b, s))
        budget = l1.error_estimate + s * l2.error_estimate + z.error_estimate + tol
        diff = abs(lhs - z.value)
        ok = diff <= budget
        failures += not ok
        rows.append({"s": s, "l1": _report_json(l1), "l2": _report_json(l2),
                     "lhs": lhs, "z": _report_json(z), "diff": diff, "budget": budget, "ok": ok})
        lines.append(f"s={s}: L1+sL2={_fmt(lhs)} Z={_fmt(z.value)} diff={diff:.3e} budget={budget:.3e}"
                     + ("" if ok else "  FAIL"))
    lines.append(f"index {k}: {failures} failures over s=0..{args.smax}")
    _emit(args, {"index": list(k), "smax": args.smax, "cutoff": cutoff,
                 "rows": rows, "failures": failures}, lines)
    return 0 if failures == 0 else 1


def _cmd_verify_c2(args, settings) -> int:
    max_weight = int(resolve(settings, "max_weight", args.max_weight))
    rows = []
    failures = 0
    for weight in range(1, max_weight + 1):
        for w in words_of_weight(weight):
            if not w.ends_with_x:
                continue
            bad_n = [n for n in range(1, args.max_n + 1) if not numerics.c2_identity_check(w, n)]
            failures += bool(bad_n)
            rows.append({"word": str(w), "ok": not bad_n, "failed_n": bad_n})
    lines = [f"{r['word']}: " + ("ok" if r["ok"] else f"FAIL at N={r['failed_n']}") for r in rows]
    lines.append(f"{len(rows)} words up to weight {max_weight}, N <= {args.max_n}: {failures} failures")
    _emit(args, {"max_weight": max_weight, "max_n": args.max_n, "words": rows, "failures": failures}, lines)
    return 0 if failures == 0 else 1


# -- argument wiring ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--config", metavar="PATH", help="config file (default ./mzvlab.conf if present)")

    top = argparse.ArgumentParser(prog="mzvlab", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="diamond or harmonic product of two expressions")
    p.add_argument("--op", choices=("diamond", "harmonic"), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("map", parents=[common], help="apply tau|phi|s1|s1inv|smap|d<l> to an expression")
    p.add_argument("--name", required=True)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("reduce", parents=[common], help="tau(w1) diamond w2, the reduced form")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("span", parents=[common], help="dimension and pivots of a graded relation span")
    p.add_argument("--set", required=True, choices=relations.SPAN_IDS)
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(handler=_cmd_span)

    check = sub.add_parser("check", help="exact structural checks").add_subparsers(dest="what", required=True)
    p = check.add_parser("equality", parents=[common], help="graded A1=A2=A3=A4 equality")
    p.add_argument("--max-weight", type=int, default=None)
    p.set_defaults(handler=_cmd_check_equality)
    p = check.add_parser("duality", parents=[common], help="duality residuals lie in the A4 span")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(handler=_cmd_check_duality)
    p = check.add_parser("derivation", parents=[common], help="derivation images lie in the A4 span")
    p.add_argument("--weight", type=int, required=True, help="weight of the residuals (= base weight + l)")
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(handler=_cmd_check_derivation)

    p = sub.add_parser("zeta", parents=[common], help="numeric evaluation of an admissible index")
    p.add_argument("--index", required=True, metavar="k1,k2,...")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(handler=_cmd_zeta)

    verify = sub.add_parser("verify", help="numeric verification suites").add_subparsers(dest="what", required=True)
    p = verify.add_parser("kawashima", parents=[common], help="|Z(phi(u*v)x)| below tolerance for all pairs")
    p.add_argument("--max-weight", type=int, default=None, help="max output weight of phi(u*v)x")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(handler=_cmd_verify_kawashima)
    p = verify.add_parser("interpolation", parents=[common], help="L1 + s*L2 against Z(y (x+y)^s B)")
    p.add_argument("--index", required=True, metavar="k1,k2,...")
    p.add_argument("--smax", type=int, default=2)
    p.add_argument("--cutoff", type=int, default=None, help="Dirichlet series cutoff")
    p.add_argument("--inner-cutoff", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(handler=_cmd_verify_interpolation)
    p = verify.add_parser("c2", parents=[common], help="exact two-path coefficient identity")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--max-N", dest="max_n", type=int, default=50)
    p.set_defaults(handler=_cmd_verify_c2)

    return top


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        settings = load_settings(args.config)
        return args.handler(args, settings)
    except (UsageError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
