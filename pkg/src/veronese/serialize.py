"""Machine-readable (JSON) documents for polynomials, lift outcomes and reports.

A polynomial is stored as ``{"vars": [...], "terms": [[exps, num, den], ...]}``
where ``vars`` names the indeterminates that occur (``x2``, ``[x1,x2]``) and
``exps`` is the exponent vector over that list.  Terms are in canonical
(decreasing graded-lex) order, so equal polynomials serialize identically.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .lift import LiftOutcome, LndReport
from .parsing import ParseError, format_poly, parse_poly
from .poly import Polynomial


def poly_to_json(p: Polynomial, context) -> dict:
    used = sorted(p.variables())
    pos = {v: k for k, v in enumerate(used)}
    terms = []
    for m, c in p.sorted_terms():
        exps = [0] * len(used)
        for v, e in m:
            exps[pos[v]] = e
        terms.append([exps, c.numerator, c.denominator])
    return {"vars": [context.var_name(v) for v in used], "terms": terms,
            "text": format_poly(p, context)}


def _var_index(name: str, context) -> int:
    p = parse_poly(name, context)
    if len(p.terms) != 1:
        raise ParseError(f"{name!r} is not an indeterminate")
    (m, c), = p.terms.items()
    if c != 1 or len(m) != 1 or m[0][1] != 1:
        raise ParseError(f"{name!r} is not an indeterminate")
    return m[0][0]


def poly_from_json(doc: dict, context) -> Polynomial:
    idx = [_var_index(name, context) for name in doc["vars"]]
    terms = {}
    for exps, num, den in doc["terms"]:
        mono = tuple(sorted((idx[k], e) for k, e in enumerate(exps) if e))
        terms[mono] = Fraction(num, den)
    p = Polynomial(context.nvars, terms)
    if "text" in doc and parse_poly(doc["text"], context) != p:
        raise ValueError("term list and text form disagree")
    return p


def _scalar(x):
    return str(x) if isinstance(x, Fraction) else x


def _unscalar(key, x):
    if key in ("v", "mu") and isinstance(x, str):
        return Fraction(x)
    return x


def outcome_to_json(out: LiftOutcome, context) -> dict:
    return {
        "kind": out.kind,
        "status": out.status,
        "reason": out.reason,
        "images": {context.var_name(i): poly_to_json(p, context)
                   for i, p in sorted(out.images.items())},
        "normalization": {k: _scalar(v) for k, v in out.normalization.items()},
        "witness": out.witness,
        "checks": out.checks,
    }


def outcome_from_json(doc: dict, context) -> LiftOutcome:
    images = {_var_index(name, context): poly_from_json(p, context)
              for name, p in doc["images"].items()}
    return LiftOutcome(
        kind=doc["kind"], status=doc["status"], images=images,
        normalization={k: _unscalar(k, v) for k, v in doc["normalization"].items()},
        reason=doc["reason"], witness=dict(doc["witness"]), checks=dict(doc["checks"]))


def lnd_to_json(rep: LndReport, context) -> dict:
    return {"verdict": rep.verdict, "cap": rep.cap,
            "indices": {context.var_name(i): k for i, k in sorted(rep.indices.items())},
            "witness": rep.witness}


def lnd_from_json(doc: dict, context) -> LndReport:
    return LndReport(doc["verdict"],
                     {_var_index(k, context): v for k, v in doc["indices"].items()},
                     dict(doc["witness"]), doc["cap"])


def context_to_json(context, d=None) -> dict:
    out = {"kind": context.kind, "n": context.n}
    if d is not None:
        out["d"] = d
    if context.bound is not None:
        out["bound"] = context.bound
    return out


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
