"""The free Poisson algebra P<x1..xn> as a polynomial ring on the Lyndon basis.

Indeterminate ``i`` (0-based) of the underlying :class:`Polynomial` is the Lie
basis element ``e_{i+1}``.  Its weight is the length of the Lyndon word, so the
weighted degree of a monomial is the usual Poisson degree while its number of
factors is the polynomial length.  The table bound limits Lie word length,
not polynomial degree: ``x1^20`` is fine, ``[x1,[x1,x2]]`` needs bound >= 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .lie import LieBasis, bracket_words, bracketing, standard_factorization
from .poly import (Polynomial, apply_derivation, divide_exact, gcd, grade,
                   in_component, mono_degree, substitute_map)


class DegreeOverflow(ArithmeticError):
    """A bracket produced a Lie basis element beyond the table bound."""

    def __init__(self, word, bound):
        self.word = word
        self.bound = bound
        super().__init__(
            f"basis element {bracketing(word)} has degree {len(word)} > bound {bound}; "
            "rebuild the algebra with a larger bound")


class PoissonAlgebra:
    kind = "poisson"

    def __init__(self, n: int, bound: int):
        if n < 1 or bound < 1:
            raise ValueError("need n >= 1 and bound >= 1")
        self.n = n
        self.bound = bound
        self.basis = LieBasis(n, bound)
        self.words = self.basis.words
        self.nvars = len(self.words)
        self.weights = tuple(len(w) for w in self.words)
        self._brackets: dict = {}

    def __eq__(self, other):
        return (isinstance(other, PoissonAlgebra)
                and (other.n, other.bound) == (self.n, self.bound))

    def __hash__(self):
        return hash(("poisson", self.n, self.bound))

    def __repr__(self):
        return f"PoissonAlgebra(n={self.n}, bound={self.bound})"

    def var_name(self, i: int) -> str:
        return bracketing(self.words[i])

    def position(self, word) -> int:
        pos = self.basis.position(word)
        if pos is None:
            raise DegreeOverflow(tuple(word), self.bound)
        return pos

    # element constructors
    def element(self, poly: Polynomial) -> "PoissonElement":
        return PoissonElement(self, poly)

    def gen(self, i: int) -> "PoissonElement":
        """x_{i+1} as an element (0-based i)."""
        return PoissonElement(self, Polynomial.var(self.nvars, i))

    def basis_element(self, word) -> "PoissonElement":
        return PoissonElement(self, Polynomial.var(self.nvars, self.position(word)))

    def const(self, c) -> "PoissonElement":
        return PoissonElement(self, Polynomial.const(self.nvars, c))

    # bracket on raw polynomials
    def bracket_basis(self, i: int, j: int) -> Polynomial:
        """{e_i, e_j} = [e_i, e_j] as a linear polynomial in the basis."""
        key = (i, j)
        if key not in self._brackets:
            terms = {}
            for w, c in bracket_words(self.words[i], self.words[j]):
                terms[((self.position(w), 1),)] = c
            self._brackets[key] = Polynomial(self.nvars, terms)
        return self._brackets[key]

    def bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """Poisson bracket by double Leibniz: sum_ij df/de_i dg/de_j {e_i, e_j}."""
        result = Polynomial.zero(self.nvars)
        if f.is_constant() or g.is_constant():
            return result
        fd = [(i, f.diff(i)) for i in sorted(f.variables())]
        gd = [(j, g.diff(j)) for j in sorted(g.variables())]
        for i, fi in fd:
            for j, gj in gd:
                if i == j:
                    continue
                b = self.bracket_basis(i, j)
                if b:
                    result = result + fi * gj * b
        return result


@dataclass(frozen=True)
class PoissonElement:
    algebra: PoissonAlgebra
    poly: Polynomial

    def _lift(self, other):
        if isinstance(other, PoissonElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different Poisson algebras")
            return other.poly
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.algebra.nvars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else PoissonElement(self.algebra, self.poly + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else PoissonElement(self.algebra, self.poly - o)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else PoissonElement(self.algebra, o - self.poly)

    def __neg__(self):
        return PoissonElement(self.algebra, -self.poly)

    def __mul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else PoissonElement(self.algebra, self.poly * o)

    __rmul__ = __mul__

    def __pow__(self, k):
        return PoissonElement(self.algebra, self.poly ** k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.poly == other
        if not isinstance(other, PoissonElement):
            return NotImplemented
        return self.algebra == other.algebra and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def is_zero(self):
        return self.poly.is_zero()

    def bracket(self, other) -> "PoissonElement":
        return poisson_bracket(self, other)

    def __str__(self):
        return self.poly.format(self.algebra.var_name)

    def __repr__(self):
        return f"PoissonElement({self})"


def poisson_bracket(f: PoissonElement, g: PoissonElement) -> PoissonElement:
    if f.algebra != g.algebra:
        raise ValueError("elements of different Poisson algebras")
    return PoissonElement(f.algebra, f.algebra.bracket(f.poly, g.poly))


def weighted_degree(f: PoissonElement) -> int:
    if f.is_zero():
        raise ValueError("the zero element has no degree")
    return f.poly.degree(f.algebra.weights)


def polynomial_length(f: PoissonElement) -> int:
    """Largest number of basis factors in a monomial of f."""
    if f.is_zero():
        raise ValueError("the zero element has no length")
    return f.poly.degree()


def is_d_homogeneous(f: PoissonElement, d: int, residue: int) -> bool:
    return in_component(f.poly, d, residue, f.algebra.weights)


def grade_poisson(f: PoissonElement, d: int) -> list:
    return [PoissonElement(f.algebra, p) for p in grade(f.poly, d, f.algebra.weights)]


# -- fractions ------------------------------------------------------------------

class PoissonFraction:
    """num/den in the free Poisson field, reduced to lowest terms, den monic."""

    __slots__ = ("algebra", "num", "den")

    def __init__(self, num: PoissonElement, den: PoissonElement | None = None, reduce=True):
        algebra = num.algebra
        if den is None:
            den = algebra.const(1)
        if den.algebra != algebra:
            raise ValueError("elements of different Poisson algebras")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        a, b = num.poly, den.poly
        if reduce:
            if a.is_zero():
                b = Polynomial.one(algebra.nvars)
            elif not b.is_constant():
                g = gcd(a, b)
                if not g.is_constant():
                    a, b = divide_exact(a, g), divide_exact(b, g)
            lc = b.leading_coeff()
            a, b = a.scale(1 / lc), b.scale(1 / lc)
        self.algebra = algebra
        self.num = PoissonElement(algebra, a)
        self.den = PoissonElement(algebra, b)

    def __add__(self, other):
        return PoissonFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __neg__(self):
        return PoissonFraction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return PoissonFraction(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, PoissonFraction):
            return NotImplemented
        return (self.num * other.den).poly == (other.num * self.den).poly

    def __hash__(self):
        return hash((self.num.poly, self.den.poly))

    def is_zero(self):
        return self.num.is_zero()

    def __str__(self):
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def fraction_bracket(alpha: PoissonFraction, beta: PoissonFraction) -> PoissonFraction:
    """{a/b, c/d} = ({a,c}bd - {a,d}bc - {b,c}ad + {b,d}ac) / (b^2 d^2)."""
    A = alpha.algebra
    a, b = alpha.num.poly, alpha.den.poly
    c, d = beta.num.poly, beta.den.poly
    br = A.bracket
    num = br(a, c) * b * d - br(a, d) * b * c - br(b, c) * a * d + br(b, d) * a * c
    den = (b * d) ** 2
    return PoissonFraction(PoissonElement(A, num), PoissonElement(A, den))


# -- derivations and endomorphisms --------------------------------------------------

class PoissonDerivation:
    """An associative derivation of P given on basis elements.

    ``on_basis(i)`` returns the image of e_{i+1}; when built with
    :meth:`from_generators` the images of non-letter basis elements follow from
    S[u,v] = {S u, v} + {u, S v}, which makes S a Poisson derivation.
    """

    def __init__(self, algebra: PoissonAlgebra, on_basis: Callable[[int], Polynomial]):
        self.algebra = algebra
        self._on_basis = on_basis
        self._cache: dict = {}

    @classmethod
    def from_generators(cls, algebra: PoissonAlgebra, images: Mapping[int, Polynomial]):
        words = algebra.words

        def on_basis(i):
            w = words[i]
            if len(w) == 1:
                return images.get(w[0] - 1, Polynomial.zero(algebra.nvars))
            u, v = standard_factorization(w)
            iu, iv = algebra.position(u), algebra.position(v)
            eu = Polynomial.var(algebra.nvars, iu)
            ev = Polynomial.var(algebra.nvars, iv)
            return (algebra.bracket(der.on_basis(iu), ev)
                    + algebra.bracket(eu, der.on_basis(iv)))

        der = cls(algebra, on_basis)
        return der

    @classmethod
    def from_basis_images(cls, algebra, images: Mapping[int, Polynomial]):
        def on_basis(i):
            return images[i]
        return cls(algebra, on_basis)

    def on_basis(self, i: int) -> Polynomial:
        if i not in self._cache:
            self._cache[i] = self._on_basis(i)
        return self._cache[i]

    def apply_poly(self, p: Polynomial) -> Polynomial:
        return apply_derivation(p, {v: self.on_basis(v) for v in p.variables()})

    def __call__(self, f):
        if isinstance(f, PoissonFraction):
            return extend_derivation_to_fractions(self)(f)
        return PoissonElement(self.algebra, self.apply_poly(f.poly))


def extend_derivation_to_fractions(D: PoissonDerivation):
    """The unique extension S(a/b) = (S(a) b - a S(b)) / b^2."""
    def S(frac: PoissonFraction) -> PoissonFraction:
        a, b = frac.num.poly, frac.den.poly
        num = D.apply_poly(a) * b - a * D.apply_poly(b)
        return PoissonFraction(PoissonElement(D.algebra, num),
                               PoissonElement(D.algebra, b * b))
    return S


class PoissonMorphism:
    """Algebra endomorphism of P determined by images of the letters x_i,
    extended to basis elements by beta[u,v] = {beta u, beta v}."""

    def __init__(self, algebra: PoissonAlgebra, images: Mapping[int, Polynomial]):
        self.algebra = algebra
        self.images = dict(images)
        self._cache: dict = {}

    def on_basis(self, i: int) -> Polynomial:
        if i not in self._cache:
            A = self.algebra
            w = A.words[i]
            if len(w) == 1:
                self._cache[i] = self.images[w[0] - 1]
            else:
                u, v = standard_factorization(w)
                self._cache[i] = A.bracket(self.on_basis(A.position(u)),
                                           self.on_basis(A.position(v)))
        return self._cache[i]

    def apply_poly(self, p: Polynomial) -> Polynomial:
        return substitute_map(p, {v: self.on_basis(v) for v in p.variables()})

    def __call__(self, f: PoissonElement) -> PoissonElement:
        return PoissonElement(self.algebra, self.apply_poly(f.poly))


def weighted_component(p: Polynomial, weights, d: int) -> set:
    return {mono_degree(m, weights) % d for m in p.terms}
