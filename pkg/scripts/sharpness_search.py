"""Hunt for complexes at Serre level r whose h_{r+1} is negative.

Findings are printed as JSON lines; nothing is asserted about them.

    python3 scripts/sharpness_search.py --seed 1 --count 3000 --n 6-10 --d 3-5
"""

import argparse
from collections import Counter

from serrekit.cli import _int_or_range, _prime_list
from serrekit.complex import SimplicialComplex
from serrekit.documents import complex_from_json, dumps
from serrekit.verify import search_sharpness


def smallest(hits: list[dict]) -> dict | None:
    def size(h):
        c: SimplicialComplex = complex_from_json(h["complex"])
        return (c.n, len(c.facet_masks))
    return min(hits, key=size, default=None)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--primes", type=_prime_list, default=[2])
    ap.add_argument("--n", type=_int_or_range, default=(5, 9))
    ap.add_argument("--d", type=_int_or_range, default=(3, 4))
    args = ap.parse_args()
    hits = []
    for hit in search_sharpness(args.seed, args.count, args.primes, args.n, args.d):
        hits.append(hit)
        print(dumps(hit))
    by_shape = Counter((h["serre_level"], len(h["h"]) - 1) for h in hits)
    print(dumps({"summary": {"findings": len(hits),
                             "by_level_and_d": {f"r={r},d={d}": v for (r, d), v in
                                                sorted(by_shape.items())},
                             "smallest": smallest(hits)}}))


if __name__ == "__main__":
    main()
