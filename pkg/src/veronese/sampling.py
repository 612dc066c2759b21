"""Seeded random generators for polynomials, Poisson elements and d-graded maps."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from .poly import Polynomial, grade, substitute_map

COEFFS = (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-3, 2))


def _monomials_of_degree(nvars, deg, letters=None):
    letters = range(nvars) if letters is None else letters
    out = []
    for combo in combinations_with_replacement(letters, deg):
        counts: dict = {}
        for v in combo:
            counts[v] = counts.get(v, 0) + 1
        out.append(tuple(sorted(counts.items())))
    return out


def random_poly(rng: random.Random, nvars: int, max_deg: int = 3, max_terms: int = 4,
                letters=None, degrees=None) -> Polynomial:
    """Sum of up to max_terms random terms; ``degrees`` restricts the allowed
    total degrees, ``letters`` the variables."""
    degrees = list(range(max_deg + 1)) if degrees is None else list(degrees)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.choice(degrees)
        mons = _monomials_of_degree(nvars, deg, letters)
        if not mons:
            continue
        terms[rng.choice(mons)] = rng.choice(COEFFS)
    return Polynomial(nvars, terms)


def random_nonzero_poly(rng, nvars, **kw) -> Polynomial:
    while True:
        p = random_poly(rng, nvars, **kw)
        if p:
            return p


def random_poisson_poly(rng: random.Random, algebra, max_weight: int = 3,
                        max_terms: int = 3) -> Polynomial:
    """Random polynomial in the Lie basis with monomials of weight <= max_weight."""
    by_weight: dict = {}
    for i, w in enumerate(algebra.weights):
        by_weight.setdefault(w, []).append(i)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        target = rng.randint(0, max_weight)
        mono: dict = {}
        left = target
        while left > 0:
            w = rng.randint(1, min(left, max(by_weight)))
            v = rng.choice(by_weight[w])
            mono[v] = mono.get(v, 0) + 1
            left -= w
        terms[tuple(sorted(mono.items()))] = rng.choice(COEFFS)
    return Polynomial(algebra.nvars, terms)


def _graded_degrees(d, residue, max_deg):
    return [k for k in range(max_deg + 1) if k % d == residue % d]


def random_graded_derivation(rng, context, d, max_deg=None, max_terms=3) -> dict:
    """Images of x_1..x_n in the degree-1 component (letters only)."""
    max_deg = 2 * d + 1 if max_deg is None else max_deg
    degs = _graded_degrees(d, 1, max_deg)
    letters = range(context.n)
    return {i: random_poly(rng, context.nvars, degrees=degs, max_terms=max_terms,
                           letters=letters)
            for i in range(context.n)}


def random_graded_poisson_derivation(rng, algebra, d, max_weight=None, max_terms=3) -> dict:
    """Images of x_1..x_n in the residue-1 component of P, built from any Lie
    basis elements (not only letters) of weight <= max_weight."""
    max_weight = d + 1 if max_weight is None else max_weight
    out = {}
    for i in range(algebra.n):
        f = random_poisson_poly(rng, algebra, max_weight=max_weight, max_terms=max_terms)
        out[i] = grade(f, d, algebra.weights)[1 % d]
    return out


def random_triangular_derivation(rng, context, d, max_deg=None, max_terms=2) -> dict:
    """S(x_i) in K[x_{i+1}..x_n] of degree = 1 mod d, S(x_n) = 0: locally nilpotent."""
    max_deg = 2 * d + 1 if max_deg is None else max_deg
    degs = _graded_degrees(d, 1, max_deg)
    out = {}
    for i in range(context.n):
        later = list(range(i + 1, context.n))
        if not later:
            out[i] = Polynomial.zero(context.nvars)
        else:
            out[i] = random_poly(rng, context.nvars, degrees=degs, max_terms=max_terms,
                                 letters=later)
    return out


def elementary_automorphism(rng, context, d, max_deg=5):
    """A random d-graded elementary automorphism and its inverse (images of x_i)."""
    n, nv = context.n, context.nvars
    x = [Polynomial.var(nv, i) for i in range(n)]
    i = rng.randrange(n)
    kind = rng.choice(("shear", "shear", "scale", "swap")) if n > 1 else "scale"
    fwd, inv = list(x), list(x)
    if kind == "scale":
        c = Fraction(rng.choice((-1, 2, -2, 3, Fraction(1, 2))))
        fwd[i], inv[i] = x[i].scale(c), x[i].scale(1 / c)
    elif kind == "swap":
        j = rng.choice([k for k in range(n) if k != i])
        fwd[i], fwd[j] = x[j], x[i]
        inv = list(fwd)
    else:
        others = [k for k in range(n) if k != i]
        degs = [k for k in _graded_degrees(d, 1, max_deg) if k > 0]
        h = random_poly(rng, nv, degrees=degs, max_terms=2, letters=others)
        fwd[i], inv[i] = x[i] + h, x[i] - h
    return dict(enumerate(fwd)), dict(enumerate(inv))


def compose_images(outer: dict, inner: dict) -> dict:
    """Images of outer o inner (letters-only maps)."""
    return {i: substitute_map(f, outer) for i, f in inner.items()}


def random_graded_automorphism(rng, context, d, length=3, max_deg=5):
    """Composition of elementary d-graded automorphisms with degree <= max_deg,
    returned with its inverse."""
    while True:
        fwd = {i: Polynomial.var(context.nvars, i) for i in range(context.n)}
        inv = dict(fwd)
        for _ in range(length):
            f, g = elementary_automorphism(rng, context, d, max_deg)
            fwd = compose_images(f, fwd)
            inv = compose_images(inv, g)
        if max(p.degree() for p in fwd.values()) <= max_deg:
            return fwd, inv
