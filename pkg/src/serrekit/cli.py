"""Command-line front end. Every subcommand writes JSON lines (or text) to stdout.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .complex import (SimplicialComplex, complex_h_vector, f_vector, is_pure,
                      is_strongly_connected)
from .documents import complex_to_json, dumps, ideal_to_json, load, loads
from .errors import InputError, PartialTable, SerrekitError, TooLarge
from .homology import is_prime
from .monomial import (MonomialIdeal, betti_of_monomial_ideal, eliahou_kervaire_betti,
                       format_monomial, h_vector_and_dim, lex_segment_ideal, polarize)
from .betti import hochster_betti
from .serre import serre_report
from . import verify as vh

PRIMES_ENV = "SERREKIT_PRIMES"


def _prime_list(text: str) -> list[int]:
    try:
        primes = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    if not primes or any(not is_prime(p) for p in primes):
        raise argparse.ArgumentTypeError(f"not a list of primes: {text!r}")
    return primes


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _int_or_range(text: str) -> int | tuple[int, int]:
    """``7`` or ``4-9``."""
    lo, sep, hi = text.partition("-")
    try:
        return (int(lo), int(hi)) if sep else int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="serrekit", description="Serre conditions, h-vectors and Betti "
                     "tables of simplicial complexes and monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(sp):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", help="path to a complex or ideal JSON document")
        src.add_argument("--json", help="inline JSON document")

    def add_common(sp, primes=True):
        if primes:
            sp.add_argument("--primes", type=_prime_list, default=None,
                            help=f"comma-separated primes (default ${PRIMES_ENV} or 2)")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    for name, help_ in [("analyze", "f/h-vectors, dimension, purity, connectivity"),
                        ("serre", "Serre level, witness, depth, Cohen-Macaulayness"),
                        ("betti", "graded Betti table via Hochster's formula"),
                        ("polarize", "polarization of a monomial ideal"),
                        ("ek", "Eliahou-Kervaire Betti table of a stable ideal")]:
        sp = sub.add_parser(name, help=help_)
        add_input(sp)
        add_common(sp, primes=name in ("serre", "betti"))
        if name == "betti":
            sp.add_argument("--degree-cap", type=_positive, default=None)

    sp = sub.add_parser("lex", help="lex ideal with a given Hilbert function")
    sp.add_argument("--values", required=True, help="comma-separated h_0, h_1, ...")
    sp.add_argument("--vars", type=_positive, required=True, dest="num_vars")
    sp.add_argument("--up-to", type=int, default=None)
    add_common(sp, primes=False)

    sp = sub.add_parser("verify", help="theorem checks on fixtures and random complexes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--n", type=_int_or_range, default=(4, 9))
    sp.add_argument("--d", type=_int_or_range, default=(2, 4))
    sp.add_argument("--m", type=_int_or_range, default=None)
    sp.add_argument("--theorems", default=",".join(vh.COMPLEX_CHECKS),
                    help="comma-separated subset of: " + ", ".join(vh.COMPLEX_CHECKS))
    sp.add_argument("--fixtures-only", action="store_true")
    sp.add_argument("--exhaustive", action="store_true",
                    help="enumerate every pure complex on [n] (n <= 6, d <= 3)")
    sp.add_argument("--replay", default=None, help="counterexample JSON to re-check")
    add_common(sp)

    sp = sub.add_parser("search", help="random complexes with h_{r+1} < 0 at Serre level r")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=500)
    sp.add_argument("--n", type=_int_or_range, default=(5, 9))
    sp.add_argument("--d", type=_int_or_range, default=(3, 4))
    sp.add_argument("--m", type=_int_or_range, default=None)
    add_common(sp)
    return parser


def _primes(args) -> list[int]:
    if args.primes is not None:
        return args.primes
    env = os.environ.get(PRIMES_ENV)
    if env:
        try:
            return _prime_list(env)
        except argparse.ArgumentTypeError as exc:
            raise InputError(f"${PRIMES_ENV}: {exc}") from None
    return [2]


def _read_input(args):
    return load(args.input) if args.input else loads(args.json)


def _expect(obj, kind):
    if not isinstance(obj, kind):
        want = "complex" if kind is SimplicialComplex else "ideal"
        raise InputError(f"this command needs a {want} document")
    return obj


def _emit(out, fmt: str, doc: dict, text: str | None = None):
    if fmt == "text" and text is not None:
        out.write(text.rstrip("\n") + "\n")
    else:
        out.write(dumps(doc) + "\n")


def _cmd_analyze(args, out) -> int:
    obj = _read_input(args)
    if isinstance(obj, MonomialIdeal):
        h, dim = h_vector_and_dim(obj)
        doc = {"kind": "ideal", "num_vars": obj.num_vars, "generators": obj.strings(),
               "h_vector": list(h), "krull_dim": dim, "squarefree": obj.is_squarefree()}
        text = f"ideal ({', '.join(obj.strings())})\nh = {list(h)}\nkrull dim = {dim}"
    else:
        doc = {"kind": "complex", "n": obj.n, "dim": obj.dim, "f_vector": list(f_vector(obj)),
               "h_vector": list(complex_h_vector(obj)), "pure": is_pure(obj),
               "strongly_connected": is_strongly_connected(obj),
               "facets": len(obj.facet_masks)}
        text = "\n".join(f"{k} = {doc[k]}" for k in
                         ("n", "dim", "f_vector", "h_vector", "pure", "strongly_connected"))
    _emit(out, args.format, doc, text)
    return 0


def _cmd_serre(args, out) -> int:
    obj = _read_input(args)
    for p in _primes(args):
        if isinstance(obj, MonomialIdeal):
            pol = polarize(obj)
            rep = serre_report(pol.complex, p).to_json()
            rep["depth"] -= pol.shift
            rep["polarized"] = True
        else:
            rep = serre_report(obj, p).to_json()
        w = rep["witness"]
        text = (f"p = {p}: serre_level = {rep['serre_level']}, depth = {rep['depth']}, "
                f"cohen_macaulay = {str(rep['cohen_macaulay']).lower()}, witness = "
                + (f"face {w['face']} degree {w['i']}" if w else "none"))
        _emit(out, args.format, rep, text)
    return 0


def _cmd_betti(args, out) -> int:
    obj = _read_input(args)
    for p in _primes(args):
        if isinstance(obj, MonomialIdeal):
            table = betti_of_monomial_ideal(obj, p, args.degree_cap)
        else:
            table = hochster_betti(obj, p, args.degree_cap)
        doc = {"p": p, **table.to_json()}
        _emit(out, args.format, doc, f"p = {p}\n{table.render()}")
    return 0


def _cmd_polarize(args, out) -> int:
    ideal = _expect(_read_input(args), MonomialIdeal)
    pol = polarize(ideal)
    doc = {"N": pol.N, "shift": pol.shift, "complex": complex_to_json(pol.complex),
           "polarized_generators": [list(g) for g in pol.polarized_generators()],
           "labels": {str(v): list(kt) for v, kt in sorted(pol.labels().items())}}
    text = "\n".join(["generators: " + ", ".join(
        "*".join(f"x{k}_{t}" for k, t in (pol.labels()[v] for v in g)) for g in
        pol.polarized_generators()), f"N = {pol.N}, depth shift = {pol.shift}",
        f"facets: {[list(f) for f in pol.complex.facets]}"])
    _emit(out, args.format, doc, text)
    return 0


def _cmd_lex(args, out) -> int:
    try:
        values = [int(t) for t in args.values.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad value list {args.values!r}") from None
    lex = lex_segment_ideal(values, args.num_vars, args.up_to)
    doc = {"num_vars": lex.num_vars, "segment_sizes": list(lex.segment_sizes),
           "ideal": ideal_to_json(lex.as_ideal()) if lex.generators else None,
           "generators": [format_monomial(g) for g in lex.generators]}
    _emit(out, args.format, doc, "generators: " + (", ".join(doc["generators"]) or "none"))
    return 0


def _cmd_ek(args, out) -> int:
    ideal = _expect(_read_input(args), MonomialIdeal)
    table = eliahou_kervaire_betti(ideal)
    _emit(out, args.format, table.to_json(), table.render())
    return 0


def _cmd_verify(args, out) -> int:
    primes = _primes(args)
    theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    unknown = [t for t in theorems if t not in vh.CHECKERS]
    if unknown:
        raise InputError(f"unknown theorem names {unknown}; known: {list(vh.CHECKERS)}")
    ok = True
    if args.replay:
        payload = json.loads(open(args.replay).read()) if os.path.exists(args.replay) \
            else json.loads(args.replay)
        rep = vh.replay(payload.get("counterexample", payload))
        _emit(out, args.format, rep.to_json())
        return 0 if rep.passed else 1
    for fr in vh.verify_fixtures():
        ok &= fr.passed
        _emit(out, args.format, fr.to_json(),
              f"{fr.to_json()['instance']}: {'pass' if fr.passed else 'FAIL'}")
    if not args.fixtures_only:
        if args.exhaustive:
            if not (isinstance(args.n, int) and isinstance(args.d, int)):
                raise InputError("--exhaustive needs a single --n and --d")
            stream = vh.verify_exhaustive(args.n, args.d, primes, theorems)
        else:
            stream = vh.verify_random(args.seed, args.count, primes, theorems,
                                      args.n, args.d, args.m)
        for rep in stream:
            ok &= rep.passed
            _emit(out, args.format, rep.to_json(),
                  f"{rep.instance} p={rep.p}: {'pass' if rep.passed else 'FAIL'}")
    return 0 if ok else 1


def _cmd_search(args, out) -> int:
    for hit in vh.search_sharpness(args.seed, args.count, _primes(args), args.n, args.d,
                                   args.m):
        _emit(out, args.format, hit,
              f"{hit['instance']} p={hit['p']}: r={hit['serre_level']} h={hit['h']}")
    return 0


COMMANDS = {
    "analyze": _cmd_analyze, "serre": _cmd_serre, "betti": _cmd_betti,
    "polarize": _cmd_polarize, "lex": _cmd_lex, "ek": _cmd_ek,
    "verify": _cmd_verify, "search": _cmd_search,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except TooLarge as exc:
        print(f"serrekit: resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (InputError, PartialTable) as exc:
        print(f"serrekit: {exc}", file=sys.stderr)
        return 2
    except (SerrekitError, json.JSONDecodeError, OSError) as exc:
        print(f"serrekit: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
