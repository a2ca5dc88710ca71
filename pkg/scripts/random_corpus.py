"""Decompose a seeded corpus of random relations and check every invariant.

    python scripts/random_corpus.py --count 500 --max-dim 10
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from relkit.decompose import decompose
from relkit.equiv import PROFILES, random_relation
from relkit.report import verification


@dataclass
class CorpusConfig:
    count: int = 500
    max_dim: int = 10
    seed: int = 0
    field: str = "rational"
    profiles: tuple = PROFILES


def run(cfg: CorpusConfig) -> dict:
    rng = random.Random(cfg.seed)
    failures = Counter()
    timings = Counter()
    t0 = time.perf_counter()
    for i in range(cfg.count):
        profile = cfg.profiles[i % len(cfg.profiles)]
        A, wc = random_relation(rng, cfg.max_dim, profile, cfg.field)
        t = time.perf_counter()
        D = decompose(A, cfg.field)
        timings[profile] += time.perf_counter() - t
        if D.weyr != wc:
            failures["weyr"] += 1
        for name, ok in verification(D).items():
            failures[name] += not ok
    return {"elapsed": time.perf_counter() - t0, "failures": +failures, "per_profile": dict(timings)}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=CorpusConfig.count)
    p.add_argument("--max-dim", type=int, default=CorpusConfig.max_dim)
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    p.add_argument("--field", choices=("rational", "gaussian"), default=CorpusConfig.field)
    args = p.parse_args()
    cfg = CorpusConfig(args.count, args.max_dim, args.seed, args.field)
    res = run(cfg)
    print(f"{cfg.count} relations (max dim {cfg.max_dim}, seed {cfg.seed}, {cfg.field}) in {res['elapsed']:.1f} s")
    for prof, t in sorted(res["per_profile"].items()):
        print(f"  {prof:<9} {t:6.2f} s")
    print("failures:", dict(res["failures"]) or "none")


if __name__ == "__main__":
    main()
