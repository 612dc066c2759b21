"""Lifting derivations and automorphisms of a Veronese subalgebra to d-graded
maps of the ambient algebra, with obstruction reporting."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import (NotDivisible, Polynomial, apply_derivation, divide_exact,
                   in_component, jacobian_determinant, rational_root,
                   reduce_fraction, substitute_map)
from .veronese import (NotGraded, OutOfScope, RelationInconsistent,
                       VeroneseAutomorphism, VeroneseDerivation, check_relations,
                       fmt, validate_map)

LIFTED = "Lifted"
OBSTRUCTED = "Obstructed"

REASONS = (
    "NotDivisible",
    "UnitNotConstant",
    "NoRationalDthRoot",
    "RelationInconsistent",
    "NotInjectiveOnGenerators",
    "BracketLawViolated",
    "SingleVariable",
)

SINGLE_VARIABLE_NOTE = (
    "lifting automorphisms needs n >= 2: for K[x] the Veronese subalgebra is "
    "K[x^d], and x^d -> x^d + 1 is an automorphism of it induced by no "
    "automorphism of K[x]")

DEFAULT_CAP = 64


@dataclass
class LiftOutcome:
    kind: str
    status: str
    images: dict = field(default_factory=dict)   # indeterminate index -> Polynomial
    normalization: dict = field(default_factory=dict)
    reason: str | None = None
    witness: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def lifted(self) -> bool:
        return self.status == LIFTED

    def image_list(self, n):
        return [self.images[i] for i in range(n)]


def _obstructed(kind, reason, witness, **extra):
    return LiftOutcome(kind, OBSTRUCTED, reason=reason, witness=witness, **extra)


def _scope_order(gens):
    w = gens.context.weights
    return sorted(gens.scope(), key=lambda i: (w[i], i))


def _bracket_pairs(ctx, images, scope, max_weight):
    """Pairs of in-scope basis elements whose bracket can be evaluated within
    the table; yields (i, j, linear combination {e_i, e_j})."""
    from .poisson import DegreeOverflow
    w = ctx.weights
    for a, i in enumerate(scope):
        for j in scope[a + 1:]:
            if w[i] + w[j] > max_weight:
                continue
            try:
                b = ctx.bracket_basis(i, j)
            except DegreeOverflow:
                continue
            if any(k not in images for k in b.variables()):
                continue
            yield i, j, b


# -- derivations ---------------------------------------------------------------------

def lift_derivation(D: VeroneseDerivation) -> LiftOutcome:
    """Extend a derivation of the Veronese subalgebra to a d-graded derivation.

    Each S(e_j) comes from S(e_j^d) = d e_j^(d-1) S(e_j), so it is
    D(e_j^d) divided exactly by d e_j^(d-1).  When e_j^d lies beyond the
    generator bound (Poisson case) the generator x1^k e_j is used instead.
    Failure of the division is the obstruction.
    """
    kind = "derivation"
    gens = D.gens
    ctx, d = gens.context, gens.d
    nv = ctx.nvars
    validate_map(D)
    try:
        nrel = check_relations(D)
    except RelationInconsistent as exc:
        return _obstructed(kind, "RelationInconsistent", exc.witness)

    S: dict = {}
    for j in _scope_order(gens):
        s = ctx.weights[j]
        ej = Polynomial.var(nv, j)
        if s % d == 0:
            S[j] = D.value(((j, 1),))
            continue
        try:
            target = D.value(((j, d),))
            divisor = ej ** (d - 1) * d
        except OutOfScope:
            k = (-s) % d
            x1 = Polynomial.var(nv, 0)
            mono = tuple(sorted({0: k, j: 1}.items()))
            target = D.value(mono) - (x1 ** (k - 1) * S[0] * ej) * k
            divisor = x1 ** k
        try:
            S[j] = divide_exact(target, divisor)
        except NotDivisible as exc:
            return _obstructed(kind, "NotDivisible", {
                "variable": ctx.var_name(j),
                "dividend": fmt(ctx, target),
                "divisor": fmt(ctx, divisor),
                "remainder": fmt(ctx, exc.remainder),
            }, checks={"relations_checked": nrel})

    checks = {"relations_checked": nrel}
    checks["graded"] = all(in_component(S[j], d, ctx.weights[j], ctx.weights) for j in S)
    for y in gens:
        got = apply_derivation(gens.poly(y), S)
        if got != D.images[y]:
            return _obstructed(kind, "RelationInconsistent", {
                "generator": gens.name(y),
                "expected": fmt(ctx, D.images[y]),
                "lift_gives": fmt(ctx, got),
            }, images=S, checks=checks)
    checks["generators_reproduced"] = len(gens)

    if ctx.kind == "poisson":
        from .poisson import DegreeOverflow
        scope = sorted(S)
        n_pairs = 0
        for i, j, b in _bracket_pairs(ctx, S, scope, gens.max_weight):
            ei, ej = Polynomial.var(nv, i), Polynomial.var(nv, j)
            try:
                rhs = ctx.bracket(S[i], ej) + ctx.bracket(ei, S[j])
            except DegreeOverflow:
                continue
            lhs = apply_derivation(b, S)
            n_pairs += 1
            if lhs != rhs:
                return _obstructed(kind, "BracketLawViolated", {
                    "pair": f"{ctx.var_name(i)}, {ctx.var_name(j)}",
                    "S_of_bracket": fmt(ctx, lhs),
                    "bracket_rule": fmt(ctx, rhs),
                }, images=S, checks=checks)
        checks["bracket_pairs_checked"] = n_pairs
    return LiftOutcome(kind, LIFTED, images=S, checks=checks)


@dataclass
class LndReport:
    verdict: str   # "locally_nilpotent" | "not_nilpotent" | "cap_exceeded"
    indices: dict  # variable index -> nilpotency index or None
    witness: dict = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    @property
    def nilpotent(self) -> bool:
        return self.verdict == "locally_nilpotent"


class _Span:
    # incremental row echelon form over Q, rows are dicts monomial -> coeff
    def __init__(self):
        self.rows = []  # (pivot, row)

    def reduce(self, vec):
        vec = dict(vec)
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if c:
                for m, a in row.items():
                    s = vec.get(m, 0) - c * a
                    if s:
                        vec[m] = s
                    else:
                        vec.pop(m, None)
        return vec

    def add(self, vec) -> bool:
        """Insert vec; False when it was already in the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        pivot = min(vec)
        inv = 1 / vec[pivot]
        row = {m: a * inv for m, a in vec.items()}
        new_rows = []
        for p, r in self.rows:
            c = r.get(pivot)
            if c:
                r = dict(r)
                for m, a in row.items():
                    s = r.get(m, 0) - c * a
                    if s:
                        r[m] = s
                    else:
                        r.pop(m, None)
            new_rows.append((p, r))
        new_rows.append((pivot, row))
        self.rows = new_rows
        return True


def check_locally_nilpotent(context, S: dict, cap: int = DEFAULT_CAP) -> LndReport:
    """Iterate S on every indeterminate it is defined on.

    A zero iterate gives the nilpotency index.  A nonzero iterate that falls
    into the span of the earlier ones spans a finite S-stable space on which
    S is not nilpotent, which proves S is not locally nilpotent.
    """
    indices: dict = {}
    witness: dict = {}
    undecided = []
    for j in sorted(S):
        f = Polynomial.var(context.nvars, j)
        span = _Span()
        span.add(f.terms)
        k = 0
        while f and k < cap:
            f = apply_derivation(f, S)
            k += 1
            if f and not span.add(f.terms):
                witness = {"variable": context.var_name(j), "iterate": k,
                           "value": fmt(context, f),
                           "note": "iterate lies in the span of earlier iterates"}
                indices[j] = None
                return LndReport("not_nilpotent", indices, witness, cap)
        if f:
            indices[j] = None
            undecided.append(context.var_name(j))
        else:
            indices[j] = k
    if undecided:
        return LndReport("cap_exceeded", indices, {"undecided": undecided}, cap)
    return LndReport("locally_nilpotent", indices, {}, cap)


# -- automorphisms ---------------------------------------------------------------------

def lift_automorphism(alpha: VeroneseAutomorphism, sign: int = 1) -> LiftOutcome:
    """Lift an automorphism of the Veronese subalgebra to a d-graded one.

    alpha(x2/x1) is reduced to f2/f1; alpha(x1^d) = v f1^d must have v a
    rational d-th power mu^d, and f1 is rescaled by mu.  Every other
    indeterminate e_j of degree s then has f_j = alpha(x1^k e_j) / f1^k with
    k = -s mod d.  ``sign=-1`` picks the other square root when d is even,
    which changes the lift by the scalar automorphism -id.
    """
    kind = "automorphism"
    gens = alpha.gens
    ctx, d = gens.context, gens.d
    nv = ctx.nvars
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == -1 and d % 2:
        raise ValueError("for odd d the normalization is unique; sign=-1 needs even d")
    if ctx.n < 2:
        return _obstructed(kind, "SingleVariable", {"note": SINGLE_VARIABLE_NOTE})
    validate_map(alpha)
    try:
        nrel = check_relations(alpha)
    except RelationInconsistent as exc:
        return _obstructed(kind, "RelationInconsistent", exc.witness)
    checks = {"relations_checked": nrel}

    seen: dict = {}
    for y in gens:
        img = alpha.images[y]
        if img.is_zero() or img in seen:
            return _obstructed(kind, "NotInjectiveOnGenerators", {
                "generator": gens.name(y),
                "image": fmt(ctx, img),
                "clashes_with": gens.name(seen[img]) if img in seen else None,
            }, checks=checks)
        seen[img] = y

    a1 = alpha.value(((0, d),))
    a12 = alpha.value(tuple(sorted({0: d - 1, 1: 1}.items())))
    ratio = reduce_fraction(a12, a1)
    f1 = ratio.den
    try:
        v = divide_exact(a1, f1 ** d)
    except NotDivisible as exc:
        return _obstructed(kind, "NotDivisible", {
            "dividend": fmt(ctx, a1), "divisor": fmt(ctx, f1 ** d),
            "remainder": fmt(ctx, exc.remainder)}, checks=checks)
    if not v.is_constant():
        return _obstructed(kind, "UnitNotConstant", {
            "v": fmt(ctx, v), "f1": fmt(ctx, f1)}, checks=checks)
    vc = v.constant_value()
    mu = rational_root(vc, d)
    if mu is None:
        return _obstructed(kind, "NoRationalDthRoot", {
            "v": str(vc), "d": d}, normalization={"v": vc}, checks=checks)
    mu = mu * sign
    f1 = f1.scale(mu)

    F = {0: f1}
    for j in _scope_order(gens):
        if j == 0:
            continue
        s = ctx.weights[j]
        k = (-s) % d
        mono = tuple(sorted({0: k, j: 1}.items())) if k else ((j, 1),)
        target = alpha.value(mono)
        try:
            F[j] = divide_exact(target, f1 ** k)
        except NotDivisible as exc:
            return _obstructed(kind, "NotDivisible", {
                "variable": ctx.var_name(j), "dividend": fmt(ctx, target),
                "divisor": fmt(ctx, f1 ** k), "remainder": fmt(ctx, exc.remainder)},
                normalization={"v": vc, "mu": mu}, checks=checks)
    normalization = {"v": vc, "mu": mu, "sign": sign}

    checks["graded"] = all(in_component(F[j], d, ctx.weights[j], ctx.weights) for j in F)
    powers = 0
    for j in F:
        try:
            target = alpha.value(((j, d),))
        except OutOfScope:
            continue
        powers += 1
        if target != F[j] ** d:
            return _obstructed(kind, "RelationInconsistent", {
                "variable": ctx.var_name(j), "expected": fmt(ctx, target),
                "lift_gives": fmt(ctx, F[j] ** d)}, images=F,
                normalization=normalization, checks=checks)
    checks["dth_powers_checked"] = powers
    for y in gens:
        got = substitute_map(gens.poly(y), F)
        if got != alpha.images[y]:
            return _obstructed(kind, "RelationInconsistent", {
                "generator": gens.name(y), "expected": fmt(ctx, alpha.images[y]),
                "lift_gives": fmt(ctx, got)}, images=F,
                normalization=normalization, checks=checks)
    checks["generators_reproduced"] = len(gens)

    if ctx.kind == "poly":
        jac = jacobian_determinant([F[i] for i in range(ctx.n)])
        checks["jacobian"] = fmt(ctx, jac)
        checks["jacobian_constant"] = jac.is_constant() and not jac.is_zero()
        if jac.is_zero():
            return _obstructed(kind, "NotInjectiveOnGenerators", {
                "note": "lifted images are algebraically dependent (zero Jacobian)"},
                images=F, normalization=normalization, checks=checks)
    else:
        from .poisson import DegreeOverflow
        n_pairs = 0
        for i, j, b in _bracket_pairs(ctx, F, sorted(F), gens.max_weight):
            try:
                rhs = ctx.bracket(F[i], F[j])
            except DegreeOverflow:
                continue
            lhs = substitute_map(b, F)
            n_pairs += 1
            if lhs != rhs:
                return _obstructed(kind, "BracketLawViolated", {
                    "pair": f"{ctx.var_name(i)}, {ctx.var_name(j)}",
                    "beta_of_bracket": fmt(ctx, lhs),
                    "bracket_of_images": fmt(ctx, rhs)},
                    images=F, normalization=normalization, checks=checks)
        checks["bracket_pairs_checked"] = n_pairs

    return LiftOutcome(kind, LIFTED, images=F, normalization=normalization, checks=checks)


def kernel_scalar(images: dict, reference: dict, weights=None):
    """lambda with images[j] = lambda^w_j * reference[j] for every j, or None."""
    lam = None
    for j, f in reference.items():
        if f.is_zero():
            return None
        m, c = f.sorted_terms()[0]
        ratio = images[j].terms.get(m, 0) / c
        w = 1 if weights is None else weights[j]
        if lam is None:
            if w != 1:
                continue
            lam = ratio
        if images[j] != f.scale(lam ** w):
            return None
    return lam


class KernelError(RuntimeError):
    pass


def compose(context, outer: dict, inner: dict) -> dict:
    """Images of outer o inner on the indeterminates of ``inner``."""
    return {j: substitute_map(f, outer) for j, f in inner.items()}


def verify_quotient_kernel(alpha: VeroneseAutomorphism, flip: bool = False) -> Fraction:
    """Lift alpha and its inverse, compose, and return the scalar lambda with
    lift(alpha) o lift(alpha^-1) = lambda * id (so lambda^d = 1).

    ``flip`` lifts the inverse with the opposite sign normalization (even d).
    """
    ctx, d = alpha.gens.context, alpha.gens.d
    beta = lift_automorphism(alpha)
    if not beta.lifted:
        raise KernelError(f"alpha does not lift: {beta.reason}")
    beta_inv = lift_automorphism(alpha.inverse_map(), sign=-1 if flip else 1)
    if not beta_inv.lifted:
        raise KernelError(f"alpha^-1 does not lift: {beta_inv.reason}")
    comp = compose(ctx, beta.images, beta_inv.images)
    nv = ctx.nvars
    c0 = comp[0]
    x1 = Polynomial.var(nv, 0)
    if len(c0.terms) != 1 or ((0, 1),) not in c0.terms:
        raise KernelError(f"composite sends x1 to {fmt(ctx, c0)}, not a multiple of x1")
    lam = c0.terms[((0, 1),)]
    for j, f in comp.items():
        expected = Polynomial.var(nv, j).scale(lam ** ctx.weights[j])
        if f != expected:
            raise KernelError(f"composite is not scalar on {ctx.var_name(j)}: {fmt(ctx, f)}")
    if lam ** d != 1:
        raise KernelError(f"lambda = {lam} but lambda^{d} != 1")
    return lam
