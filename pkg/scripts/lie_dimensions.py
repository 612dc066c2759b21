"""Print Lyndon basis sizes per degree next to the necklace formula."""
import argparse
from dataclasses import dataclass

from veronese.lie import enumerate_basis


@dataclass
class Config:
    n: int = 3
    max_degree: int = 8


def mobius(k):
    out, m, p = 1, k, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def necklaces(n, k):
    return sum(mobius(m) * n ** (k // m) for m in range(1, k + 1) if k % m == 0) // k


def main(cfg: Config):
    counts: dict = {}
    for e in enumerate_basis(cfg.n, cfg.max_degree):
        counts[len(e.word)] = counts.get(len(e.word), 0) + 1
    print(f"{'degree':>6} {'basis':>7} {'formula':>7}")
    for k in range(1, cfg.max_degree + 1):
        mark = "" if counts.get(k, 0) == necklaces(cfg.n, k) else "  MISMATCH"
        print(f"{k:>6} {counts.get(k, 0):>7} {necklaces(cfg.n, k):>7}{mark}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    main(Config(a.n, a.max_degree))
