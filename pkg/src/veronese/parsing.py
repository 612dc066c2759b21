"""Text grammar for polynomials and Poisson elements, and the map-file format.

Expressions::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | VAR | '(' expr ')'
            | '{' expr ',' expr '}'          (Poisson bracket)
            | '[' lit ',' lit ']'            (Lyndon basis literal)

NUMBER is ``123`` or ``3/4``; VAR is ``x1`` .. ``xn``.  Whitespace is ignored.

Map files::

    context=poly n=2 d=2 bound=0
    gen x1^2 -> 2*x1*x2
    gen x1*x2 -> x2^2
    gen x2^2 -> 0
    inverse
    gen ...

``var x1 -> expr`` lines give a map on the ambient algebra instead (input
for ``restrict``).  ``#`` starts a comment.  In a Poisson header the optional
``weight=w`` caps the weight of the Veronese generators below the table bound.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .lie import is_lyndon, standard_factorization
from .poly import Polynomial, PolynomialRing
from .poisson import DegreeOverflow, PoissonAlgebra, PoissonElement


class ParseError(ValueError):
    def __init__(self, message, column=None, line=None):
        self.message = message
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message}" + (f" at {', '.join(where)}" if where else ""))


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^(){}\[\],]))")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, context):
        self.context = context
        self.tokens = tokenize(text)
        self.i = 0
        self.nvars = context.nvars
        self.poisson = context.kind == "poisson"

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}", tok)
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        if tok[0] == "end":
            raise ParseError("unexpected end of input", tok[2])
        raise ParseError(f"{message}, got {tok[1]!r}", tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num" or "/" in tok[1]:
                self.fail("expected a non-negative integer exponent")
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self):
        kind, value, col = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.const(self.nvars, Fraction(value))
        if kind == "var":
            self.take()
            return Polynomial.var(self.nvars, self._letter(value, col))
        if value == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        if value == "{":
            if not self.poisson:
                raise ParseError("Poisson bracket needs a Poisson context", col)
            self.take()
            f = self.expr()
            self.take(",")
            g = self.expr()
            self.take("}")
            try:
                return self.context.bracket(f, g)
            except DegreeOverflow as exc:
                raise ParseError(str(exc), col) from None
        if value == "[":
            if not self.poisson:
                raise ParseError("basis literals need a Poisson context", col)
            tree = self.literal()
            word = _flatten(tree)
            if not is_lyndon(word) or _standard_tree(word) != tree:
                raise ParseError(
                    f"{_tree_str(tree)} is not a standard Lyndon bracketing; "
                    "use {f,g} for general brackets", col)
            try:
                pos = self.context.position(word)
            except DegreeOverflow as exc:
                raise ParseError(str(exc), col) from None
            return Polynomial.var(self.nvars, pos)
        self.fail("expected a number, variable or '('")

    def literal(self):
        kind, value, col = self.peek()
        if kind == "var":
            self.take()
            return self._letter(value, col) + 1
        self.take("[")
        left = self.literal()
        self.take(",")
        right = self.literal()
        self.take("]")
        return (left, right)

    def _letter(self, name, col):
        i = int(name[1:])
        if not 1 <= i <= self.context.n:
            raise ParseError(f"variable {name} outside x1..x{self.context.n}", col)
        return i - 1


def _flatten(tree):
    if isinstance(tree, int):
        return (tree,)
    return _flatten(tree[0]) + _flatten(tree[1])


def _standard_tree(word):
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (_standard_tree(u), _standard_tree(v))


def _tree_str(tree):
    if isinstance(tree, int):
        return f"x{tree}"
    return f"[{_tree_str(tree[0])},{_tree_str(tree[1])}]"


def parse_poly(text: str, context) -> Polynomial:
    """Parse into a raw Polynomial over the context's indeterminates."""
    return _Parser(text, context).parse()


def parse_expression(text: str, context):
    """Polynomial for a polynomial ring, PoissonElement for a Poisson algebra."""
    p = parse_poly(text, context)
    if context.kind == "poisson":
        return PoissonElement(context, p)
    return p


def format_poly(p: Polynomial, context) -> str:
    return p.format(context.var_name)


def format_element(x, context=None) -> str:
    if isinstance(x, PoissonElement):
        return str(x)
    return x.format(context.var_name if context is not None else None)


def make_context(kind: str, n: int, bound: int | None = None):
    if kind == "poly":
        return PolynomialRing(n)
    if kind == "poisson":
        if bound is None:
            raise ValueError("a Poisson context needs a degree bound")
        return PoissonAlgebra(n, bound)
    raise ValueError(f"unknown context {kind!r}")


# -- map files ---------------------------------------------------------------------

@dataclass
class MapFile:
    context: object
    d: int
    header: dict
    gens: dict = field(default_factory=dict)       # monomial -> Polynomial
    vars: dict = field(default_factory=dict)       # variable index -> Polynomial
    inverse_gens: dict | None = None
    inverse_vars: dict | None = None

    @property
    def max_weight(self):
        return self.header.get("weight")

    def derivation(self):
        from .veronese import VeroneseDerivation, build_generators
        gens = build_generators(self.context, self.d, self.max_weight)
        _check_generators(gens, self.gens)
        return VeroneseDerivation(gens, dict(self.gens))

    def automorphism(self):
        from .veronese import VeroneseAutomorphism, build_generators
        gens = build_generators(self.context, self.d, self.max_weight)
        _check_generators(gens, self.gens)
        inv = None
        if self.inverse_gens is not None:
            _check_generators(gens, self.inverse_gens)
            inv = dict(self.inverse_gens)
        return VeroneseAutomorphism(gens, dict(self.gens), inv)

    def echo(self) -> dict:
        ctx = self.context
        out = {"header": dict(self.header)}
        if self.gens:
            out["gens"] = {_mono_text(ctx, m): format_poly(p, ctx) for m, p in self.gens.items()}
        if self.vars:
            out["vars"] = {ctx.var_name(i): format_poly(p, ctx) for i, p in self.vars.items()}
        if self.inverse_gens is not None:
            out["inverse_gens"] = {_mono_text(ctx, m): format_poly(p, ctx)
                                   for m, p in self.inverse_gens.items()}
        if self.inverse_vars is not None:
            out["inverse_vars"] = {ctx.var_name(i): format_poly(p, ctx)
                                   for i, p in self.inverse_vars.items()}
        return out


def _mono_text(ctx, m):
    from .veronese import fmt_mono
    return fmt_mono(ctx, m)


def _check_generators(gens, images):
    for m in images:
        if m not in gens:
            raise ValueError(f"{gens.name(m)} is not a Veronese generator of degree {gens.d}")


_HEADER_KEYS = {"context", "n", "d", "bound", "weight"}


def parse_header(line: str, lineno: int = 1) -> dict:
    header = {}
    for item in line.split():
        if "=" not in item:
            raise ParseError(f"malformed header field {item!r}", line=lineno)
        k, v = item.split("=", 1)
        if k not in _HEADER_KEYS:
            raise ParseError(f"unknown header field {k!r}", line=lineno)
        header[k] = v
    for k in ("context", "n", "d"):
        if k not in header:
            raise ParseError(f"header is missing {k}=", line=lineno)
    try:
        for k in ("n", "d", "bound", "weight"):
            if k in header:
                header[k] = int(header[k])
    except ValueError:
        raise ParseError("header values n, d, bound, weight must be integers",
                         line=lineno) from None
    return header


def parse_map_file(text: str) -> MapFile:
    lines = text.splitlines()
    mf = None
    target_gens = target_vars = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if mf is None:
            header = parse_header(line, lineno)
            try:
                ctx = make_context(header["context"], header["n"], header.get("bound"))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from None
            if header["d"] < 2:
                raise ParseError("d must be >= 2", line=lineno)
            if "weight" in header and (ctx.kind != "poisson" or header["weight"] > ctx.bound):
                raise ParseError("weight= needs a Poisson context and weight <= bound",
                                 line=lineno)
            mf = MapFile(ctx, header["d"], header)
            target_gens, target_vars = mf.gens, mf.vars
            continue
        stripped = line.strip()
        if stripped == "inverse":
            if mf.inverse_gens is not None:
                raise ParseError("duplicate inverse block", line=lineno)
            mf.inverse_gens, mf.inverse_vars = {}, {}
            target_gens, target_vars = mf.inverse_gens, mf.inverse_vars
            continue
        keyword = stripped.split(None, 1)[0]
        if keyword not in ("gen", "var"):
            raise ParseError(f"expected 'gen', 'var' or 'inverse', got {keyword!r}",
                             column=line.index(keyword) + 1, line=lineno)
        if "->" not in line:
            raise ParseError("missing '->'", line=lineno)
        lhs_start = line.index(keyword) + len(keyword)
        arrow = line.index("->")
        lhs_text, rhs_text = line[lhs_start:arrow], line[arrow + 2:]
        ctx = mf.context
        lhs = _parse_at(lhs_text, ctx, lineno, lhs_start)
        rhs = _parse_at(rhs_text, ctx, lineno, arrow + 2)
        if len(lhs.terms) != 1 or next(iter(lhs.terms.values())) != 1:
            raise ParseError("left-hand side must be a monomial", column=lhs_start + 1,
                             line=lineno)
        mono = next(iter(lhs.terms))
        if keyword == "gen":
            if mono in target_gens:
                raise ParseError("generator listed twice", line=lineno)
            target_gens[mono] = rhs
        else:
            if len(mono) != 1 or mono[0][1] != 1 or mono[0][0] >= ctx.n:
                raise ParseError("'var' lines need a single letter x_i on the left",
                                 column=lhs_start + 1, line=lineno)
            target_vars[mono[0][0]] = rhs
    if mf is None:
        raise ParseError("empty map file", line=1)
    return mf


def _parse_at(text, ctx, lineno, offset):
    try:
        return parse_poly(text, ctx)
    except ParseError as exc:
        col = None if exc.column is None else exc.column + offset
        raise ParseError(exc.message, column=col, line=lineno) from None


def format_map_file(context, d, gens=None, vars=None, inverse_gens=None,
                    inverse_vars=None, gen_order=None, max_weight=None) -> str:
    from .veronese import fmt_mono
    header = f"context={context.kind} n={context.n} d={d}"
    if context.bound is not None:
        header += f" bound={context.bound}"
    if max_weight is not None:
        header += f" weight={max_weight}"
    out = [header]

    def block(g, v):
        if v:
            for i in sorted(v):
                out.append(f"var {context.var_name(i)} -> {format_poly(v[i], context)}")
        if g:
            keys = gen_order if gen_order is not None else list(g)
            for m in keys:
                if m in g:
                    out.append(f"gen {fmt_mono(context, m)} -> {format_poly(g[m], context)}")

    block(gens, vars)
    if inverse_gens is not None or inverse_vars is not None:
        out.append("inverse")
        block(inverse_gens, inverse_vars)
    return "\n".join(out) + "\n"
