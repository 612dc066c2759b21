"""Veronese subalgebras, maps given on their generators, and restriction.

A *context* is either a :class:`~veronese.poly.PolynomialRing` or a
:class:`~veronese.poisson.PoissonAlgebra`.  Both expose ``kind``, ``n``,
``nvars``, ``weights``, ``bound`` and ``var_name``; elements are plain
:class:`Polynomial` objects over ``nvars`` indeterminates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Mapping

from .poly import (ONE_MONO, Monomial, Polynomial, apply_derivation, grlex_key,
                   in_component, mono_degree, mono_div, mono_mul, substitute_map)


class RelationInconsistent(ValueError):
    def __init__(self, message, witness):
        self.witness = witness
        super().__init__(message)


class OutOfScope(ValueError):
    """A monomial of the Veronese subalgebra cannot be written with the
    (degree-truncated) generator set."""


class NotGraded(ValueError):
    pass


def fmt(context, p: Polynomial) -> str:
    return p.format(context.var_name)


def fmt_mono(context, m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(context.var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)


def _minimal_zero_sum(residues, d) -> bool:
    if sum(residues) % d:
        return False
    k = len(residues)
    for size in range(1, k):
        for sub in combinations(residues, size):
            if sum(sub) % d == 0:
                return False
    return True


class VeroneseGeneratorSet:
    def __init__(self, context, d: int, generators, max_weight=None):
        self.context = context
        self.d = d
        self.max_weight = context.bound if max_weight is None else max_weight
        self.generators = tuple(generators)
        self.index = {m: i for i, m in enumerate(self.generators)}
        self._factors: dict = {}

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m):
        return m in self.index

    def weight(self, m: Monomial) -> int:
        return mono_degree(m, self.context.weights)

    def poly(self, m: Monomial) -> Polynomial:
        return Polynomial.monomial(self.context.nvars, m)

    def name(self, m: Monomial) -> str:
        return fmt_mono(self.context, m)

    def scope(self) -> list:
        """Indeterminates whose lift is determined by the generator images."""
        ctx, d = self.context, self.d
        if self.max_weight is None:
            return list(range(ctx.nvars))
        return [i for i, w in enumerate(ctx.weights) if -(-w // d) * d <= self.max_weight]

    def factor(self, m: Monomial):
        """Write m as a product of generators, or return None."""
        m = tuple(m)
        if m not in self._factors:
            self._factors[m] = self._factor(m)
        return self._factors[m]

    def _factor(self, m):
        if not m:
            return ()
        if m in self.index:
            return (m,)
        d, weights = self.d, self.context.weights
        if self.weight(m) % d:
            return None
        occ = [v for v, e in m for _ in range(e)]
        for v in occ:
            if weights[v] % d == 0:
                single = ((v, 1),)
                if single not in self.index:
                    return None
                rest = self.factor(mono_div(m, single))
                return None if rest is None else (single,) + rest
        first, others = occ[0], occ[1:]
        tried = set()
        for size in range(1, d):
            for combo in combinations(others, size):
                sub = tuple(sorted(_counts((first,) + combo).items()))
                if sub in tried or sub not in self.index:
                    continue
                tried.add(sub)
                rest = self.factor(mono_div(m, sub))
                if rest is not None:
                    return (sub,) + rest
        return None

    def relations(self):
        """Quadratic relations Ya*Yb = Yc*Ye, grouped by their common product."""
        groups: dict = {}
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i, len(gens)):
                groups.setdefault(mono_mul(gens[i], gens[j]), []).append((gens[i], gens[j]))
        return [pairs for pairs in groups.values() if len(pairs) > 1]


def _counts(seq):
    out: dict = {}
    for v in seq:
        out[v] = out.get(v, 0) + 1
    return out


def build_generators(context, d: int, max_weight: int | None = None) -> VeroneseGeneratorSet:
    """Generators of the degree-d Veronese subalgebra.

    In the Poisson case only generators of weight <= max_weight are listed
    (default: the table bound).  A smaller max_weight leaves room in the table
    for images of maps that raise the degree.
    """
    if d < 2:
        raise ValueError("Veronese degree d must be >= 2")
    if context.kind == "poly":
        mons = []
        for combo in combinations_with_replacement(range(context.n), d):
            mons.append(tuple(sorted(_counts(combo).items())))
    else:
        bound = context.bound if max_weight is None else max_weight
        if bound > context.bound:
            raise ValueError(f"max_weight {bound} exceeds the table bound {context.bound}")
        if bound < d:
            raise ValueError(f"generator weight bound {bound} is smaller than d = {d}")
        weights = context.weights
        mons = [((i, 1),) for i, w in enumerate(weights) if w % d == 0 and w <= bound]
        odd = [i for i, w in enumerate(weights) if w % d and w <= bound]
        for size in range(2, d + 1):
            for combo in combinations_with_replacement(odd, size):
                if sum(weights[i] for i in combo) > bound:
                    continue
                if _minimal_zero_sum([weights[i] % d for i in combo], d):
                    mons.append(tuple(sorted(_counts(combo).items())))
    mons.sort(key=grlex_key, reverse=True)
    return VeroneseGeneratorSet(context, d, mons,
                                max_weight if context.kind == "poisson" else None)


# -- maps on the Veronese subalgebra ---------------------------------------------

@dataclass
class VeroneseDerivation:
    gens: VeroneseGeneratorSet
    images: dict  # generator monomial -> Polynomial

    kind = "derivation"

    def value(self, m: Monomial) -> Polynomial:
        parts = self.gens.factor(m)
        if parts is None:
            raise OutOfScope(f"{self.gens.name(m)} is not a product of available generators")
        nvars = self.gens.context.nvars
        total = Polynomial.zero(nvars)
        for k, y in enumerate(parts):
            rest = ONE_MONO
            for j, z in enumerate(parts):
                if j != k:
                    rest = mono_mul(rest, z)
            total = total + self.images[y].mul_term(rest, 1)
        return total

    def apply(self, p: Polynomial) -> Polynomial:
        out = Polynomial.zero(p.nvars)
        for m, c in p.terms.items():
            if m:
                out = out + self.value(m).scale(c)
        return out


@dataclass
class VeroneseAutomorphism:
    gens: VeroneseGeneratorSet
    images: dict
    inverse: dict | None = None

    kind = "automorphism"

    def value(self, m: Monomial) -> Polynomial:
        parts = self.gens.factor(m)
        if parts is None:
            raise OutOfScope(f"{self.gens.name(m)} is not a product of available generators")
        out = Polynomial.one(self.gens.context.nvars)
        for y in parts:
            out = out * self.images[y]
        return out

    def apply(self, p: Polynomial) -> Polynomial:
        out = Polynomial.zero(p.nvars)
        for m, c in p.terms.items():
            out = out + self.value(m).scale(c)
        return out

    def inverse_map(self) -> "VeroneseAutomorphism":
        if self.inverse is None:
            raise ValueError("no inverse images were supplied")
        return VeroneseAutomorphism(self.gens, self.inverse, self.images)


def validate_map(vmap) -> None:
    """Every generator has an image and every image lies in the degree-0 component."""
    gens = vmap.gens
    ctx = gens.context
    blocks = [vmap.images]
    if getattr(vmap, "inverse", None) is not None:
        blocks.append(vmap.inverse)
    for images in blocks:
        missing = [gens.name(y) for y in gens if y not in images]
        if missing:
            raise ValueError("missing generator images: " + ", ".join(missing))
        extra = [y for y in images if y not in gens]
        if extra:
            raise ValueError("not a generator: " + ", ".join(gens.name(y) for y in extra))
        for y, img in images.items():
            if img.nvars != ctx.nvars:
                raise ValueError(f"image of {gens.name(y)} has the wrong arity")
            if not in_component(img, gens.d, 0, ctx.weights):
                raise NotGraded(
                    f"image of {gens.name(y)} = {fmt(ctx, img)} is not in the Veronese subalgebra")


def check_relations(vmap) -> int:
    """Verify the map on all quadratic generator relations; returns how many
    relations were checked, raises RelationInconsistent on the first failure."""
    gens = vmap.gens
    ctx = gens.context
    img = vmap.images
    derivation = vmap.kind == "derivation"
    count = 0
    for pairs in gens.relations():
        def side(pair):
            a, b = pair
            if derivation:
                return img[a].mul_term(b, 1) + img[b].mul_term(a, 1)
            return img[a] * img[b]
        ref = side(pairs[0])
        for other in pairs[1:]:
            count += 1
            val = side(other)
            if val != ref:
                (a, b), (c, e) = pairs[0], other
                rel = (f"{gens.name(a)} * {gens.name(b)} = "
                       f"{gens.name(c)} * {gens.name(e)}")
                raise RelationInconsistent(
                    f"relation {rel} violated",
                    {"relation": rel, "lhs": fmt(ctx, ref), "rhs": fmt(ctx, val)})
    return count


# -- restriction of d-graded maps of the ambient algebra ------------------------------

def graded_images(context, images: Mapping[int, Polynomial], kind: str):
    """Callable i -> image of indeterminate i for the map given on x_1..x_n."""
    images = {int(k): v for k, v in dict(images).items()}
    if sorted(images) != list(range(context.n)):
        raise ValueError(f"need images of x1..x{context.n}")
    if context.kind == "poly":
        return images.__getitem__
    from .poisson import PoissonDerivation, PoissonMorphism
    if kind == "derivation":
        return PoissonDerivation.from_generators(context, images).on_basis
    return PoissonMorphism(context, images).on_basis


def check_graded(context, d, images: Mapping[int, Polynomial]) -> None:
    for i, f in images.items():
        if not in_component(f, d, 1, context.weights):
            raise NotGraded(f"image of {context.var_name(i)} = {fmt(context, f)} "
                            f"is not in the degree-1 component mod {d}")


def restrict(context, d: int, images: Mapping[int, Polynomial], kind: str = "derivation",
             max_weight: int | None = None):
    """Induced map on the Veronese generators of a d-graded derivation or
    endomorphism given by the images of x_1..x_n."""
    if kind not in ("derivation", "automorphism"):
        raise ValueError("kind must be 'derivation' or 'automorphism'")
    check_graded(context, d, images)
    gens = build_generators(context, d, max_weight)
    on = graded_images(context, images, kind)
    out = {}
    for y in gens:
        p = gens.poly(y)
        sub = {v: on(v) for v in p.variables()}
        out[y] = apply_derivation(p, sub) if kind == "derivation" else substitute_map(p, sub)
    if kind == "derivation":
        return VeroneseDerivation(gens, out)
    return VeroneseAutomorphism(gens, out)
