"""Independent reference computations used by the tests.

None of these call into the library code they check: the Lie oracle works in
the free associative algebra, the polynomial oracles go through sympy.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

import sympy


# -- free Lie algebra ---------------------------------------------------------------

def mobius(k: int) -> int:
    out, m, p = 1, k, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def necklace_count(n: int, k: int) -> int:
    """Dimension of the degree-k part of the free Lie algebra on n letters."""
    return sum(mobius(m) * n ** (k // m) for m in range(1, k + 1) if k % m == 0) // k


def _lyndon_brute(word) -> bool:
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_brute(n: int, k: int) -> list:
    """Lyndon words of length k over 1..n, by checking every rotation."""
    return sorted(w for w in product(range(1, n + 1), repeat=k) if _lyndon_brute(w))


def _standard_bracketing(word):
    # split off the longest proper suffix that is Lyndon
    if len(word) == 1:
        return word[0]
    for i in range(1, len(word)):
        if _lyndon_brute(word[i:]):
            return (_standard_bracketing(word[:i]), _standard_bracketing(word[i:]))
    raise AssertionError("not a Lyndon word")


def assoc(tree) -> dict:
    """Associative polynomial (word -> coeff) of a bracket tree via [a,b] = ab - ba."""
    if isinstance(tree, int):
        return {(tree,): Fraction(1)}
    a, b = assoc(tree[0]), assoc(tree[1])
    out: dict = {}
    for (u, c), (v, e) in product(a.items(), b.items()):
        for w, s in ((u + v, c * e), (v + u, -c * e)):
            out[w] = out.get(w, 0) + s
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _lyndon_poly(word) -> tuple:
    return tuple(assoc(_standard_bracketing(word)).items())


def lyndon_poly(word) -> dict:
    return dict(_lyndon_poly(tuple(word)))


def commutator(a: dict, b: dict) -> dict:
    out: dict = {}
    for (u, c), (v, e) in product(a.items(), b.items()):
        for w, s in ((u + v, c * e), (v + u, -c * e)):
            out[w] = out.get(w, 0) + s
    return {w: c for w, c in out.items() if c}


def express_in_basis(target: dict, n: int, k: int) -> dict:
    """Coefficients of ``target`` (homogeneous of degree k) in the Lyndon basis.

    The smallest word occurring in P_w is w itself, so repeatedly cancelling
    the smallest remaining word is a triangular solve.  Raises if the
    remainder ever starts with a non-Lyndon word (target not a Lie element).
    """
    rest = {w: c for w, c in target.items() if c}
    out = {}
    while rest:
        w = min(rest)
        if len(w) != k or not _lyndon_brute(w) or max(w) > n:
            raise AssertionError(f"{w} blocks the triangular solve: not a Lie element")
        c = rest[w]
        out[w] = c
        for u, a in lyndon_poly(w).items():
            v = rest.get(u, 0) - c * a
            if v:
                rest[u] = v
            else:
                rest.pop(u, None)
    return out


def express_in_basis_dense(target: dict, n: int, k: int) -> dict:
    """Same as express_in_basis via sympy Gauss-Jordan on the full word space
    (slow; used to cross-check the triangular solve in small degrees)."""
    if not target:
        return {}
    basis = lyndon_brute(n, k)
    vecs = [lyndon_poly(w) for w in basis]
    rows = sorted({w for v in vecs for w in v} | set(target))
    M = sympy.Matrix([[v.get(r, 0) for v in vecs] for r in rows])
    rhs = sympy.Matrix([target.get(r, 0) for r in rows])
    sol, params = M.gauss_jordan_solve(rhs)
    assert params.shape[0] == 0, "Lyndon polynomials are dependent"
    return {w: Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
            for w, c in zip(basis, sol) if c != 0}


def oracle_lie_bracket(u, v, n: int) -> dict:
    """[P_u, P_v] in the Lyndon basis, keyed by words over 1..n."""
    return express_in_basis(commutator(lyndon_poly(u), lyndon_poly(v)), n, len(u) + len(v))


# -- polynomials --------------------------------------------------------------------

def to_sympy(p, symbols):
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in m:
            term *= symbols[v] ** e
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, symbols, nvars, cls):
    poly = sympy.Poly(sympy.expand(expr), *symbols)
    terms = {}
    for exps, c in poly.terms():
        mono = tuple((i, e) for i, e in enumerate(exps) if e)
        c = sympy.Rational(c)
        terms[mono] = Fraction(int(c.p), int(c.q))
    return cls(nvars, terms)


def sympy_gcd_monic(p, q, symbols, nvars, cls):
    g = sympy.gcd(to_sympy(p, symbols), to_sympy(q, symbols))
    return from_sympy(g, symbols, nvars, cls).monic()
