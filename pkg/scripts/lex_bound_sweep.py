"""Check the lex-ideal Betti bound and the power-of-maximal-ideal bound on
random squarefree ideals whose complexes satisfy (S_r)."""

import argparse
from collections import Counter

from serrekit.cli import _int_or_range
from serrekit.documents import dumps, ideal_to_json
from serrekit.verify import check_lex_bound, check_power_bound, random_serre_ideals


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--level", type=int, default=2)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--n", type=_int_or_range, default=(4, 8))
    args = ap.parse_args()
    tally = Counter()
    bad = []
    for inst, I in random_serre_ideals(args.seed, args.count, args.level, args.p, args.n):
        lex = check_lex_bound(I, args.p)
        tally[f"lex:{lex.passed}"] += 1
        for k in range(1, lex.values["r"] + 1):
            pw = check_power_bound(I, args.p, k)
            tally[f"power:{pw.passed}"] += 1
            tally[f"power_equality:{pw.values.get('eq_all')}"] += 1
            if pw.passed is False:
                bad.append({"instance": inst, "k": k, "ideal": ideal_to_json(I),
                            "values": pw.values})
        if lex.passed is False:
            bad.append({"instance": inst, "ideal": ideal_to_json(I), "values": lex.values})
    print(dumps({"tally": dict(sorted(tally.items())), "failures": bad}))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
