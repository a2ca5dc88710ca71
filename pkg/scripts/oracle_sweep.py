"""Compare Weyr characteristics with the sympy oracle on random small relations.

Needs the test extras (sympy).  Complements the exhaustive pool check in the
acceptance suite with denser random entries.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import oracle  # noqa: E402
from relkit.errors import UnsplitEigenvalues  # noqa: E402
from relkit.relation import LinearRelation  # noqa: E402
from relkit.weyr import weyr_characteristic  # noqa: E402


@dataclass
class SweepConfig:
    count: int = 200
    max_n: int = 4
    seed: int = 0
    bound: int = 2


def sweep(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    bad = unsplit = 0
    for _ in range(cfg.count):
        n = rng.randint(1, cfg.max_n)
        pairs = [([rng.randint(-cfg.bound, cfg.bound) for _ in range(n)],
                  [rng.randint(-cfg.bound, cfg.bound) for _ in range(n)]) for _ in range(rng.randint(1, 2 * n))]
        o = oracle.characteristic(oracle.rel(n, pairs))
        try:
            wc = weyr_characteristic(LinearRelation.from_pairs(n, pairs))
        except UnsplitEigenvalues:
            unsplit += 1
            bad += not o["irrational"]
            continue
        W = {Fraction(int(k.p), int(k.q)): v for k, v in o["W"].items()}
        if (wc.B, wc.W_map, wc.A, wc.C) != (o["B"], W, o["A"], o["C"]):
            bad += 1
            print("disagreement:", n, pairs)
    return bad, unsplit


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=SweepConfig.count)
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = p.parse_args()
    cfg = SweepConfig(args.count, args.max_n, args.seed)
    bad, unsplit = sweep(cfg)
    print(f"{cfg.count} random relations, {unsplit} with unsplit spectrum, {bad} disagreements")


if __name__ == "__main__":
    main()
