"""Run the theorem checks over many seeded random complexes and tally results.

    python3 scripts/property_sweep.py --seed 0 --count 2000 --primes 2,3 --n 4-10
"""

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from serrekit.cli import _int_or_range, _prime_list
from serrekit.documents import dumps
from serrekit.verify import COMPLEX_CHECKS, verify_random


@dataclass
class SweepConfig:
    seed: int = 0
    count: int = 1000
    primes: tuple = (2, 3)
    n: tuple = (4, 10)
    d: tuple = (2, 4)
    theorems: tuple = COMPLEX_CHECKS


def sweep(cfg: SweepConfig) -> dict:
    tally = {t: Counter() for t in cfg.theorems}
    levels = Counter()
    failures = []
    start = time.perf_counter()
    for rep in verify_random(cfg.seed, cfg.count, cfg.primes, cfg.theorems, cfg.n, cfg.d):
        for t, v in rep.checks.items():
            tally[t]["n/a" if v is None else "pass" if v else "fail"] += 1
        levels[rep.values["h_nonneg"]["r"] if "h_nonneg" in rep.values else -1] += 1
        if not rep.passed:
            failures.append(rep.to_json())
    return {"config": asdict(cfg), "seconds": round(time.perf_counter() - start, 2),
            "tally": {t: dict(c) for t, c in tally.items()},
            "serre_levels": dict(sorted(levels.items())), "failures": failures}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--primes", type=_prime_list, default=[2, 3])
    ap.add_argument("--n", type=_int_or_range, default=(4, 10))
    ap.add_argument("--d", type=_int_or_range, default=(2, 4))
    args = ap.parse_args()
    cfg = SweepConfig(args.seed, args.count, tuple(args.primes), args.n, args.d)
    result = sweep(cfg)
    print(dumps(result) if result["failures"] else json.dumps(
        {k: v for k, v in result.items() if k != "failures"}, indent=2, sort_keys=True))
    raise SystemExit(1 if result["failures"] else 0)


if __name__ == "__main__":
    main()
