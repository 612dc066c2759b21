"""Seeded survey of Veronese lifts.

Restricts random d-graded derivations and automorphisms of K[x_1..x_n] to
the Veronese subalgebra, lifts them back and tabulates the outcomes, the
kernel scalar lambda of each automorphism and the time spent.
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from veronese.lift import kernel_scalar, lift_automorphism, lift_derivation, verify_quotient_kernel
from veronese.poly import PolynomialRing
from veronese.sampling import random_graded_automorphism, random_graded_derivation
from veronese.veronese import restrict


@dataclass
class Config:
    seed: int = 0
    cases: int = 40
    n: tuple = (2, 3)
    d: tuple = (2, 3)
    max_deg: int = 5


def survey(cfg: Config):
    rng = random.Random(cfg.seed)
    table: Counter = Counter()
    lambdas: Counter = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.cases):
        n, d = rng.choice(cfg.n), rng.choice(cfg.d)
        R = PolynomialRing(n)
        S = random_graded_derivation(rng, R, d)
        out = lift_derivation(restrict(R, d, S))
        table["derivation", n, d, out.status if out.images == S or not out.lifted
              else "Lifted (differs)"] += 1

        fwd, inv = random_graded_automorphism(rng, R, d, max_deg=cfg.max_deg)
        alpha = restrict(R, d, fwd, "automorphism")
        alpha.inverse = restrict(R, d, inv, "automorphism").images
        out = lift_automorphism(alpha)
        table["automorphism", n, d, out.status] += 1
        if out.lifted:
            lambdas["lift/beta", d, str(kernel_scalar(out.images, fwd))] += 1
            lambdas["composite", d, str(verify_quotient_kernel(alpha))] += 1
    return table, lambdas, time.perf_counter() - t0


def main(cfg: Config):
    table, lambdas, elapsed = survey(cfg)
    print(f"{'kind':<13} {'n':>2} {'d':>2}  {'status':<18} count")
    for (kind, n, d, status), c in sorted(table.items()):
        print(f"{kind:<13} {n:>2} {d:>2}  {status:<18} {c}")
    print()
    print(f"{'lambda':<10} {'d':>2} {'value':>6} count")
    for (what, d, lam), c in sorted(lambdas.items()):
        print(f"{what:<10} {d:>2} {lam:>6} {c}")
    print(f"\n{elapsed:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--cases", type=int, default=Config.cases)
    ap.add_argument("--max-deg", type=int, default=Config.max_deg)
    a = ap.parse_args()
    main(Config(seed=a.seed, cases=a.cases, max_deg=a.max_deg))
