"""Seeded invariant checks run by ``veronese selftest``."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .lie import LieElement, enumerate_basis, lie_bracket
from .lift import (check_locally_nilpotent, kernel_scalar, lift_automorphism, lift_derivation,
                   verify_quotient_kernel)
from .parsing import format_poly, parse_poly
from .poisson import PoissonAlgebra, PoissonDerivation
from .poly import PolynomialRing, divide_exact, dth_root, gcd, grade
from .sampling import (random_graded_automorphism, random_graded_derivation,
                       random_nonzero_poly, random_poisson_poly, random_poly,
                       random_triangular_derivation)
from .veronese import restrict


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _poly_core(rng, cases):
    for _ in range(cases):
        n = rng.randint(1, 3)
        p = random_nonzero_poly(rng, n, max_deg=3)
        q = random_nonzero_poly(rng, n, max_deg=3)
        if divide_exact(p * q, q) != p:
            return f"divide_exact failed on {p}, {q}"
        g = gcd(p, q)
        divide_exact(p, g)
        divide_exact(q, g)
        if dth_root(p ** 2, 2) ** 2 != p ** 2:
            return f"dth_root failed on {p}"
        if sum(grade(p, 3), p * 0) != p:
            return f"grade does not reconstruct {p}"


def _lie(rng, cases):
    basis = [e.word for e in enumerate_basis(3, 3)]
    for _ in range(cases):
        a, b, c = (LieElement(3, {rng.choice(basis): rng.randint(-2, 2)}) for _ in range(3))
        if lie_bracket(a, b) != -lie_bracket(b, a):
            return f"antisymmetry fails for {a}, {b}"
        jac = (lie_bracket(lie_bracket(a, b), c) + lie_bracket(lie_bracket(b, c), a)
               + lie_bracket(lie_bracket(c, a), b))
        if jac:
            return f"Jacobi fails for {a}, {b}, {c}"


def _poisson(rng, cases):
    A = PoissonAlgebra(3, 6)
    br = A.bracket
    for _ in range(cases):
        f, g, h = (random_poisson_poly(rng, A, max_weight=2) for _ in range(3))
        if br(br(f, g), h) + br(br(g, h), f) + br(br(h, f), g):
            return "Jacobi fails"
        if br(f, g * h) != g * br(f, h) + br(f, g) * h:
            return "Leibniz fails"


def _derivations(rng, cases):
    for _ in range(cases):
        n, d = rng.choice((2, 3)), rng.choice((2, 3))
        R = PolynomialRing(n)
        S = random_graded_derivation(rng, R, d)
        out = lift_derivation(restrict(R, d, S))
        if not out.lifted or any(out.images[i] != S[i] for i in range(n)):
            return f"derivation roundtrip failed (n={n}, d={d})"
        T = random_triangular_derivation(rng, R, d)
        lifted = lift_derivation(restrict(R, d, T))
        if not check_locally_nilpotent(R, lifted.images).nilpotent:
            return "triangular derivation not reported locally nilpotent"
    A = PoissonAlgebra(2, 5)
    S = random_graded_derivation(rng, A, 2, max_deg=3)
    out = lift_derivation(restrict(A, 2, S))
    full = PoissonDerivation.from_generators(A, S)
    if not out.lifted or any(out.images[j] != full.on_basis(j) for j in out.images):
        return "Poisson derivation roundtrip failed"


def _automorphisms(rng, cases):
    for _ in range(cases):
        n, d = rng.choice((2, 3)), rng.choice((2, 3))
        R = PolynomialRing(n)
        fwd, inv = random_graded_automorphism(rng, R, d)
        alpha = restrict(R, d, fwd, "automorphism")
        alpha.inverse = restrict(R, d, inv, "automorphism").images
        out = lift_automorphism(alpha)
        if not out.lifted:
            return f"automorphism lift obstructed: {out.reason}"
        verify_quotient_kernel(alpha)
        lam = kernel_scalar(out.images, fwd)
        if lam is None or lam ** d != 1 or (d % 2 and lam != 1):
            return "lift differs from the original by more than a kernel scalar"


def _roundtrip(rng, cases):
    A = PoissonAlgebra(3, 4)
    R = PolynomialRing(3)
    for _ in range(cases):
        p = random_poly(rng, 3, max_deg=4)
        if parse_poly(format_poly(p, R), R) != p:
            return f"print/parse mismatch for {p}"
        q = random_poisson_poly(rng, A, max_weight=4)
        if parse_poly(format_poly(q, A), A) != q:
            return "print/parse mismatch in the Poisson context"


SUITES = [
    ("poly-core", _poly_core),
    ("free-lie", _lie),
    ("free-poisson", _poisson),
    ("derivation-lift", _derivations),
    ("automorphism-lift", _automorphisms),
    ("print-parse", _roundtrip),
]


def run_selftest(seed: int = 7, cases: int = 20) -> list:
    results = []
    for name, fn in SUITES:
        rng = random.Random(f"{seed}:{name}")
        try:
            problem = fn(rng, cases)
        except Exception as exc:  # report, never crash the harness
            problem = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, problem is None, cases, problem or ""))
    return results
