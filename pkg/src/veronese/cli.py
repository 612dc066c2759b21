"""Command-line front end.

Exit status: 0 when the operation succeeds (a lift exists, the derivation is
locally nilpotent, ...), 2 when the mathematics says no (an obstruction or a
negative verdict), 1 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import sys
import time

from .lie import enumerate_basis
from .lift import (DEFAULT_CAP, KernelError, check_locally_nilpotent, lift_automorphism,
                   lift_derivation, verify_quotient_kernel)
from .parsing import (MapFile, ParseError, format_map_file, format_poly, make_context,
                      parse_map_file, parse_poly)
from .poisson import DegreeOverflow
from .poly import grade
from .serialize import (context_to_json, dumps, lnd_to_json, outcome_to_json, poly_to_json)
from .veronese import fmt_mono, restrict

EXIT_OK, EXIT_USAGE, EXIT_NO = 0, 1, 2
DEFAULT_SEED = 7


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _context_opts(p, need_d=False, bound_default=None, context_default="poly"):
    p.add_argument("--context", choices=("poly", "poisson"), default=context_default)
    p.add_argument("--n", type=int, default=None, help="number of generators x1..xn")
    p.add_argument("--bound", type=int, default=bound_default,
                   help="Lie word length bound (Poisson context)")
    if need_d:
        p.add_argument("--d", type=int, required=True)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _map_opts(p):
    p.add_argument("input", help="map file ('-' reads stdin)")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgumentParser(prog="veronese", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("bracket", help="evaluate an expression or the bracket {f,g}")
    _context_opts(p, bound_default=6, context_default="poisson")
    p.add_argument("expr", nargs="+", help="one expression, or two to bracket")

    p = sub.add_parser("grade", help="split an element into components mod d")
    _context_opts(p, need_d=True)
    p.add_argument("expr")

    p = sub.add_parser("basis", help="list the Lyndon basis of the free Lie algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="maximal word length")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("restrict", help="induced map on the Veronese generators")
    _map_opts(p)
    p.add_argument("--kind", choices=("derivation", "automorphism"), default="derivation")

    p = sub.add_parser("lift-derivation", help="lift a derivation of the Veronese subalgebra")
    _map_opts(p)

    p = sub.add_parser("lift-automorphism", help="lift an automorphism of the Veronese subalgebra")
    _map_opts(p)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1,
                   help="normalization of the d-th root (even d)")

    p = sub.add_parser("check-lnd", help="decide local nilpotency of the lifted derivation")
    _map_opts(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("verify-kernel", help="compose the lifts of alpha and its inverse")
    _map_opts(p)
    p.add_argument("--flip-sign", action="store_true",
                   help="lift the inverse with the opposite normalization")

    p = sub.add_parser("selftest", help="seeded invariant suites")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--json", action="store_true")
    return ap


# -- helpers --------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> MapFile:
    return parse_map_file(_read(path))


def _context(args):
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if args.context == "poisson" and (args.bound is None or args.bound < 1):
        raise UsageError("a Poisson context needs --bound >= 1")
    return make_context(args.context, args.n, args.bound if args.context == "poisson" else None)


def _vmap(mf: MapFile, kind: str):
    """Veronese map from a map file: gen lines directly, var lines via restriction."""
    if mf.gens:
        return mf.derivation() if kind == "derivation" else mf.automorphism()
    if not mf.vars:
        raise UsageError("map file has no 'gen' or 'var' lines")
    vmap = restrict(mf.context, mf.d, mf.vars, kind, mf.max_weight)
    if kind == "automorphism" and mf.inverse_vars:
        vmap.inverse = restrict(mf.context, mf.d, mf.inverse_vars, kind, mf.max_weight).images
    return vmap


def _emit(args, doc: dict, lines: list):
    if args.json:
        print(dumps(doc))
    else:
        print("\n".join(lines))


def _outcome_lines(ctx, out):
    lines = [f"status: {out.status}"]
    if out.lifted:
        for i in sorted(out.images):
            lines.append(f"  {ctx.var_name(i)} -> {format_poly(out.images[i], ctx)}")
        if out.normalization:
            lines.append("normalization: " + ", ".join(f"{k}={v}" for k, v in
                                                        out.normalization.items()))
    else:
        lines.append(f"reason: {out.reason}")
        for k, v in out.witness.items():
            lines.append(f"  {k}: {v}")
    if out.checks:
        lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in out.checks.items()))
    return lines


# -- commands ---------------------------------------------------------------------

def cmd_bracket(args):
    ctx = _context(args)
    if len(args.expr) > 2:
        raise UsageError("give one expression or two operands")
    if len(args.expr) == 2:
        if ctx.kind != "poisson":
            raise UsageError("brackets need --context poisson")
        f, g = (parse_poly(e, ctx) for e in args.expr)
        result = ctx.bracket(f, g)
    else:
        result = parse_poly(args.expr[0], ctx)
    doc = {"command": "bracket", "context": context_to_json(ctx),
           "input": list(args.expr), "status": "ok", "result": poly_to_json(result, ctx)}
    _emit(args, doc, [format_poly(result, ctx)])
    return EXIT_OK


def cmd_grade(args):
    ctx = _context(args)
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    p = parse_poly(args.expr, ctx)
    parts = grade(p, args.d, ctx.weights)
    doc = {"command": "grade", "context": context_to_json(ctx, args.d), "input": args.expr,
           "status": "ok", "components": [poly_to_json(q, ctx) for q in parts]}
    _emit(args, doc, [f"[{r}] {format_poly(q, ctx)}" for r, q in enumerate(parts)])
    return EXIT_OK


def cmd_basis(args):
    if args.n < 1 or args.bound < 1:
        raise UsageError("--n and --bound must be positive")
    basis = enumerate_basis(args.n, args.bound)
    items = [{"index": e.index, "word": "".join(str(a + 1) for a in e.word),
              "degree": e.degree, "bracket": str(e)} for e in basis]
    counts: dict = {}
    for e in basis:
        counts[e.degree] = counts.get(e.degree, 0) + 1
    doc = {"command": "basis", "n": args.n, "bound": args.bound, "status": "ok",
           "dimensions": counts, "basis": items}
    lines = [f"e{it['index']}  deg {it['degree']}  {it['bracket']}" for it in items]
    lines.append("dimensions: " + ", ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_restrict(args):
    mf = _load(args.input)
    if not mf.vars:
        raise UsageError("restrict needs 'var' lines giving the map on x1..xn")
    vmap = restrict(mf.context, mf.d, mf.vars, args.kind, mf.max_weight)
    inverse = None
    if args.kind == "automorphism" and mf.inverse_vars:
        inverse = restrict(mf.context, mf.d, mf.inverse_vars, args.kind, mf.max_weight).images
    ctx = mf.context
    text = format_map_file(ctx, mf.d, gens=vmap.images, inverse_gens=inverse,
                           gen_order=list(vmap.gens), max_weight=mf.max_weight)
    doc = {"command": "restrict", "context": context_to_json(ctx, mf.d), "input": mf.echo(),
           "status": "ok", "kind": args.kind,
           "generators": {fmt_mono(ctx, y): poly_to_json(vmap.images[y], ctx)
                          for y in vmap.gens},
           "map_file": text}
    if args.json:
        print(dumps(doc))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _lift_report(args, mf, out, command):
    ctx = mf.context
    doc = {"command": command, "context": context_to_json(ctx, mf.d), "input": mf.echo()}
    doc.update(outcome_to_json(out, ctx))
    _emit(args, doc, _outcome_lines(ctx, out))
    return EXIT_OK if out.lifted else EXIT_NO


def cmd_lift_derivation(args):
    mf = _load(args.input)
    return _lift_report(args, mf, lift_derivation(_vmap(mf, "derivation")), "lift-derivation")


def cmd_lift_automorphism(args):
    mf = _load(args.input)
    if args.sign == -1 and mf.d % 2:
        raise UsageError("--sign -1 needs even d")
    out = lift_automorphism(_vmap(mf, "automorphism"), sign=args.sign)
    return _lift_report(args, mf, out, "lift-automorphism")


def cmd_check_lnd(args):
    if args.cap < 1:
        raise UsageError("--cap must be positive")
    mf = _load(args.input)
    ctx = mf.context
    doc = {"command": "check-lnd", "context": context_to_json(ctx, mf.d), "input": mf.echo()}
    if mf.gens:
        out = lift_derivation(mf.derivation())
        if not out.lifted:
            doc.update(outcome_to_json(out, ctx))
            _emit(args, doc, _outcome_lines(ctx, out))
            return EXIT_NO
        S = out.images
    else:
        S = {i: p for i, p in mf.vars.items()}
        if sorted(S) != list(range(ctx.n)):
            raise UsageError(f"need images of x1..x{ctx.n}")
        if ctx.kind == "poisson":
            from .poisson import PoissonDerivation
            D = PoissonDerivation.from_generators(ctx, S)
            S = {j: D.on_basis(j) for j in range(ctx.nvars)}
    rep = check_locally_nilpotent(ctx, S, args.cap)
    doc.update({"status": "ok" if rep.nilpotent else rep.verdict})
    doc.update(lnd_to_json(rep, ctx))
    lines = [f"verdict: {rep.verdict}"]
    for i, k in sorted(rep.indices.items()):
        lines.append(f"  {ctx.var_name(i)}: {'-' if k is None else k}")
    for k, v in rep.witness.items():
        lines.append(f"  {k}: {v}")
    _emit(args, doc, lines)
    return EXIT_OK if rep.nilpotent else EXIT_NO


def cmd_verify_kernel(args):
    mf = _load(args.input)
    vmap = _vmap(mf, "automorphism")
    if vmap.inverse is None:
        raise UsageError("verify-kernel needs an 'inverse' block")
    if args.flip_sign and mf.d % 2:
        raise UsageError("--flip-sign needs even d")
    ctx = mf.context
    doc = {"command": "verify-kernel", "context": context_to_json(ctx, mf.d),
           "input": mf.echo(), "flip_sign": args.flip_sign}
    t0 = time.perf_counter()
    try:
        lam = verify_quotient_kernel(vmap, flip=args.flip_sign)
    except KernelError as exc:
        doc.update({"status": "failed", "reason": str(exc)})
        _emit(args, doc, ["status: failed", f"reason: {exc}"])
        return EXIT_NO
    doc.update({"status": "ok", "lambda": str(lam), "seconds": time.perf_counter() - t0})
    _emit(args, doc, ["status: ok", f"lambda: {lam}"])
    return EXIT_OK


def cmd_selftest(args):
    from .selftest import run_selftest
    results = run_selftest(args.seed, args.cases)
    ok = all(r.passed for r in results)
    doc = {"command": "selftest", "seed": args.seed, "status": "ok" if ok else "failed",
           "suites": [{"name": r.name, "passed": r.passed, "cases": r.cases,
                       "detail": r.detail} for r in results]}
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)"
             + (f": {r.detail}" if r.detail else "") for r in results]
    _emit(args, doc, lines)
    return EXIT_OK if ok else EXIT_NO


COMMANDS = {
    "bracket": cmd_bracket,
    "grade": cmd_grade,
    "basis": cmd_basis,
    "restrict": cmd_restrict,
    "lift-derivation": cmd_lift_derivation,
    "lift-automorphism": cmd_lift_automorphism,
    "check-lnd": cmd_check_lnd,
    "verify-kernel": cmd_verify_kernel,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (UsageError, ValueError, DegreeOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
