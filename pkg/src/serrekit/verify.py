"""Theorem-as-property checks over fixtures and seeded random instances.

Every checker returns a :class:`CheckResult` whose ``values`` hold the
quantities it compared, as plain JSON data. A failing instance is reported
with its serialized complex so :func:`replay` can recompute the same values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .betti import BettiTable, hochster_betti
from .complex import (SimplicialComplex, build_complex, complex_h_vector, f_vector, is_pure,
                      is_strongly_connected)
from .documents import complex_from_json, complex_to_json
from .errors import NotOSequence, NotPure, ParameterError
from .fixtures import FIXTURES, evaluate_fact
from .homology import _as_prime
from .monomial import (MonomialIdeal, betti_of_monomial_ideal, check_o_sequence,
                       eliahou_kervaire_betti, h_vector_and_dim, lex_segment_ideal,
                       macaulay_bound, polarize, power_ideal_betti)
from .serre import SerreReport, depth_sr, serre_report

COMPLEX_CHECKS = ("swartz", "h_nonneg", "tail_sum", "vanishing", "depth", "link_depth",
                  "purity", "s2_connected", "m_vector")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None  # None: not applicable to this instance
    values: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed is not False


class Analysis:
    """Lazily computed invariants of one complex over one prime."""

    def __init__(self, c: SimplicialComplex, p=2):
        self.complex = c
        self.p = _as_prime(p)

    @cached_property
    def h(self) -> tuple[int, ...]:
        return complex_h_vector(self.complex)

    @cached_property
    def f(self) -> tuple[int, ...]:
        return f_vector(self.complex)

    @cached_property
    def report(self) -> SerreReport:
        return serre_report(self.complex, self.p)

    @property
    def level(self) -> int:
        return self.report.serre_level

    @cached_property
    def betti(self) -> BettiTable:
        return hochster_betti(self.complex, self.p)

    def h_at(self, k: int) -> int:
        return self.h[k] if 0 <= k < len(self.h) else 0


def _analysis(c, p) -> Analysis:
    return c if isinstance(c, Analysis) else Analysis(c, p)


def check_swartz(c, p=2) -> CheckResult:
    """i h_i + (d - i + 1) h_{i-1} equals the sum over vertices of h_{i-1}(lk v)."""
    a = _analysis(c, p)
    cx = a.complex
    if not is_pure(cx):
        raise NotPure("the Swartz identity needs a pure complex")
    d = cx.d
    link_h = [complex_h_vector(cx.link_mask(1 << v)) for v in cx.vertices]
    lhs, rhs = [], []
    for i in range(1, d + 1):
        lhs.append(i * a.h_at(i) + (d - i + 1) * a.h_at(i - 1))
        rhs.append(sum(h[i - 1] if i - 1 < len(h) else 0 for h in link_h))
    per_i = [x == y for x, y in zip(lhs, rhs)]
    return CheckResult("swartz", all(per_i), {"lhs": lhs, "rhs": rhs, "per_i": per_i})


def check_h_nonnegativity(c, p=2) -> CheckResult:
    """With r the Serre level, h_0, ..., h_r are nonnegative."""
    a = _analysis(c, p)
    r = a.level
    head = [a.h_at(k) for k in range(r + 1)]
    return CheckResult("h_nonneg", all(x >= 0 for x in head),
                       {"r": r, "h": list(a.h), "head": head})


def check_tail_sum(c, p=2) -> CheckResult:
    """h_r + ... + h_d >= 0, and at least h_0 + ... + h_{r-1} facets."""
    a = _analysis(c, p)
    r, d = a.level, a.complex.d
    tail = sum(a.h_at(k) for k in range(r, d + 1))
    bound = sum(a.h_at(k) for k in range(r))
    top_facets = a.f[d] if d < len(a.f) else 0
    ok = tail >= 0 and top_facets >= bound
    return CheckResult("tail_sum", ok, {"r": r, "tail": tail, "facets": top_facets,
                                        "facet_bound": bound})


def check_vanishing_rigidity(c, p=2) -> CheckResult:
    """If h_t = 0 for some t <= r, then h vanishes from t on and Δ is CM."""
    a = _analysis(c, p)
    r = a.level
    zeros = [t for t in range(1, r + 1) if a.h_at(t) == 0]
    if not zeros:
        return CheckResult("vanishing", True, {"r": r, "t": None})
    t = zeros[0]
    tail_zero = all(a.h_at(k) == 0 for k in range(t, len(a.h)))
    return CheckResult("vanishing", tail_zero and a.report.is_cm,
                       {"r": r, "t": t, "tail_zero": tail_zero, "cm": a.report.is_cm})


def check_depth(c, p=2) -> CheckResult:
    """Depth from link homology equals n - pd from the Hochster table."""
    a = _analysis(c, p)
    sr, ab = a.report.depth, a.betti.depth()
    return CheckResult("depth", sr == ab, {"depth_links": sr, "depth_ab": ab,
                                           "pd": a.betti.projective_dimension()})


def check_link_depth(c, p=2) -> CheckResult:
    """depth K[lk v] >= depth K[Δ] - 1 for every vertex v."""
    a = _analysis(c, p)
    depth = a.report.depth
    lows = {}
    for v in a.complex.vertices:
        dv = depth_sr(a.complex.link_mask(1 << v), a.p)
        if dv < depth - 1:
            lows[str(v)] = dv
    return CheckResult("link_depth", not lows, {"depth": depth, "violations": lows})


def check_purity(c, p=2) -> CheckResult:
    """Serre level >= 2 forces purity."""
    a = _analysis(c, p)
    if a.level < 2:
        return CheckResult("purity", None, {"r": a.level})
    pure = is_pure(a.complex)
    return CheckResult("purity", pure, {"r": a.level, "pure": pure})


def check_s2_connected(c, p=2) -> CheckResult:
    """Serre level >= 2 and strong connectivity, reported as an observation."""
    a = _analysis(c, p)
    if a.level < 2:
        return CheckResult("s2_connected", None, {"r": a.level})
    sc = is_strongly_connected(a.complex)
    return CheckResult("s2_connected", sc, {"r": a.level, "strongly_connected": sc})


def check_m_vector(c, p=2) -> CheckResult:
    """(h_0, ..., h_r) satisfies Macaulay's growth bound."""
    a = _analysis(c, p)
    head = [a.h_at(k) for k in range(a.level + 1)]
    try:
        check_o_sequence(head, max(a.h_at(1), 0))
    except NotOSequence as exc:
        return CheckResult("m_vector", False, {"head": head, "degree": exc.degree})
    return CheckResult("m_vector", True, {"head": head})


CHECKERS = {
    "swartz": check_swartz,
    "h_nonneg": check_h_nonnegativity,
    "tail_sum": check_tail_sum,
    "vanishing": check_vanishing_rigidity,
    "depth": check_depth,
    "link_depth": check_link_depth,
    "purity": check_purity,
    "s2_connected": check_s2_connected,
    "m_vector": check_m_vector,
}


# -- monomial ideal checks ---------------------------------------------------------

def _entries_by_col(table: BettiTable):
    return {(i, j - i): v for (i, j), v in table.entries.items()}


def check_lex_bound(ideal: MonomialIdeal, p=2) -> CheckResult:
    """beta_{i,i+j}(S/I) <= beta_{i,i+j}(S'/L) for j <= r - 1, where L is the lex
    ideal in n - d variables with Hilbert function h_0..h_r."""
    pol = polarize(ideal)
    report = serre_report(pol.complex, p)
    r = report.serre_level
    h, dim = h_vector_and_dim(ideal)
    codim = ideal.num_vars - dim
    head = [h[k] if k < len(h) else 0 for k in range(r + 1)]
    values = {"r": r, "codim": codim, "head": head}
    if r < 1 or codim < 1:
        return CheckResult("lex_bound", None, values)
    try:
        lex = lex_segment_ideal(head, codim, up_to=r)
    except NotOSequence as exc:
        values["not_o_sequence_at"] = exc.degree
        return CheckResult("lex_bound", False, values)
    ek = eliahou_kervaire_betti(lex)
    ours = betti_of_monomial_ideal(ideal, p)
    bad = []
    for (i, j), v in sorted(_entries_by_col(ours).items()):
        if j <= r - 1 and v > ek[i, i + j]:
            bad.append([i, i + j, v, ek[i, i + j]])
    values["lex_generators"] = [list(g) for g in lex.generators]
    values["violations"] = bad
    return CheckResult("lex_bound", not bad, values)


def has_linear_resolution(table: BettiTable, k: int) -> bool:
    """The ideal (not the quotient) is generated in degree k with regularity k."""
    return all(j == i + k - 1 for (i, j) in table.entries if i >= 1)


def check_power_bound(ideal: MonomialIdeal, p=2, k: int = 1) -> CheckResult:
    """beta_{i,i+k-1}(S/I) <= beta_{i,i+k-1}(S'/n^k), with the equality cases
    (some i in 1..codim) <=> (all i) <=> (CM with a k-linear resolution)."""
    pol = polarize(ideal)
    report = serre_report(pol.complex, p)
    r = report.serre_level
    dim = pol.complex.d - pol.shift
    codim = ideal.num_vars - dim
    values = {"r": r, "k": k, "codim": codim}
    if k < 1 or k > r or codim < 1:
        return CheckResult("power_bound", None, values)
    ours = betti_of_monomial_ideal(ideal, p)
    power = power_ideal_betti(codim, k)
    top = max(ours.projective_dimension(), codim)
    lhs = [ours[i, i + k - 1] for i in range(top + 1)]
    rhs = [power[i, i + k - 1] for i in range(top + 1)]
    inequality = all(x <= y for x, y in zip(lhs, rhs))
    eq_some = any(lhs[i] == rhs[i] for i in range(1, codim + 1))
    eq_all = lhs == rhs
    cm_linear = report.is_cm and has_linear_resolution(ours, k)
    values.update(lhs=lhs, rhs=rhs, eq_some=eq_some, eq_all=eq_all, cm_linear=cm_linear)
    return CheckResult("power_bound", inequality and eq_some == eq_all == cm_linear, values)


# -- instance generators -------------------------------------------------------------

def random_pure_complex(seed: int, n: int, d: int, m: int,
                        max_tries: int = 1000) -> SimplicialComplex:
    """m distinct d-subsets of [n] covering every vertex, drawn from ``seed``."""
    if not (1 <= d <= n) or not (1 <= m <= comb(n, d)):
        raise ParameterError(f"need 1 <= d <= n and 1 <= m <= C(n, d); got n={n} d={d} m={m}")
    if m * d < n:
        raise ParameterError(f"{m} facets of size {d} cannot cover {n} vertices")
    rng = random.Random(seed)
    pool = list(combinations(range(1, n + 1), d))
    full = set(range(1, n + 1))
    for _ in range(max_tries):
        chosen = rng.sample(pool, m)
        if set().union(*chosen) == full:
            return build_complex(chosen)
    raise ParameterError(f"no covering sample after {max_tries} draws")


def random_monomial_ideal(seed: int, n: int, max_exp: int, count: int) -> MonomialIdeal:
    """``count`` random nonzero exponent vectors with entries at most ``max_exp``."""
    if n < 1 or max_exp < 1 or count < 1:
        raise ParameterError("need n, max_exp, count >= 1")
    rng = random.Random(seed)
    gens = []
    while len(gens) < count:
        g = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(g):
            gens.append(g)
    return MonomialIdeal(n, tuple(gens))


def random_lex_ideal(seed: int, max_vars: int = 4, max_degree: int = 3) -> MonomialIdeal:
    """Nonzero lex ideal with generators of degree at most max_degree.

    Draws a random O-sequence 1, m, h_2, ..., h_D with each h_q at most
    Macaulay's bound, then takes the lex ideal realizing it.
    """
    rng = random.Random(seed)
    m = rng.randint(1, max_vars)
    values = [1, m]
    for q in range(2, max_degree + 1):
        cap = min(macaulay_bound(values[-1], q - 1), comb(m + q - 1, q))
        values.append(rng.randint(0, cap))
    full = [comb(m + q - 1, q) for q in range(max_degree + 1)]
    if values == full:
        values[-1] -= 1
    return lex_segment_ideal(values, m).as_ideal()


def random_instances(seed: int, count: int, n: int | tuple[int, int] = (4, 9),
                     d: int | tuple[int, int] = (2, 4),
                     m: int | tuple[int, int] | None = None) -> Iterator[tuple[str, SimplicialComplex]]:
    """Seeded stream of random pure complexes; instance k draws its own
    parameters from ``(seed, k)`` so any instance can be regenerated alone."""
    def pick(rng, bound):
        return bound if isinstance(bound, int) else rng.randint(*bound)

    for k in range(count):
        rng = random.Random(seed * 1_000_003 + k)
        dd = pick(rng, d)
        nn = max(pick(rng, n), dd)
        total = comb(nn, dd)
        lo = min(-(-nn // dd), total)
        mm = pick(rng, m) if m is not None else rng.randint(lo, min(total, 2 * nn))
        mm = min(max(mm, lo), total)
        yield f"{seed}:{k}", random_pure_complex(rng.getrandbits(32), nn, dd, mm)


def random_serre_ideals(seed: int, count: int, min_level: int = 2, p=2, n=(4, 8), d=(2, 4),
                        max_draws: int = 100_000) -> Iterator[tuple[str, MonomialIdeal]]:
    """Stanley-Reisner ideals of random pure complexes certified to satisfy
    (S_min_level) over GF(p). Simplices (zero ideal) are skipped."""
    from .monomial import stanley_reisner_ideal

    found = 0
    for inst, c in random_instances(seed, max_draws, n, d):
        if found == count:
            return
        if len(c.facet_masks) > 1 and c.d >= min_level and serre_report(c, p).serre_level >= min_level:
            found += 1
            yield inst, stanley_reisner_ideal(c)
    raise ParameterError(f"only {found} of {count} certified ideals in {max_draws} draws")


def exhaustive_pure_complexes(n: int, d: int) -> Iterator[SimplicialComplex]:
    """Every pure (d-1)-dimensional complex on exactly the vertex set [n]."""
    if n > 6 or d > 3:
        raise ParameterError("exhaustive mode is limited to n <= 6, d <= 3")
    pool = list(combinations(range(1, n + 1), d))
    full = set(range(1, n + 1))
    for bits in range(1, 1 << len(pool)):
        chosen = [pool[i] for i in range(len(pool)) if bits >> i & 1]
        if set().union(*chosen) == full:
            yield build_complex(chosen)


# -- reports ------------------------------------------------------------------------

@dataclass
class VerificationReport:
    instance: str
    p: int
    checks: dict[str, bool | None]
    values: dict[str, dict]
    complex_doc: dict

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_json(self) -> dict:
        out = {"instance": self.instance, "p": self.p, "passed": self.passed,
               "checks": self.checks}
        if not self.passed:
            failed = [k for k, v in self.checks.items() if v is False]
            out["counterexample"] = {"complex": self.complex_doc, "p": self.p,
                                     "theorems": failed,
                                     "values": {k: self.values[k] for k in failed}}
        return out


def verify_complex(c: SimplicialComplex, p=2, theorems: Sequence[str] = COMPLEX_CHECKS,
                   instance: str = "") -> VerificationReport:
    a = Analysis(c, p)
    checks, values = {}, {}
    for name in theorems:
        try:
            res = CHECKERS[name](a)
        except NotPure:
            res = CheckResult(name, None, {"pure": False})
        checks[name] = res.passed
        values[name] = res.values
    return VerificationReport(instance, a.p, checks, values, complex_to_json(c))


def replay(counterexample: dict) -> VerificationReport:
    """Re-run the failed theorems of a counterexample payload."""
    c = complex_from_json(counterexample["complex"])
    return verify_complex(c, counterexample["p"], counterexample["theorems"], "replay")


def verify_random(seed: int, count: int, primes: Sequence[int] = (2,),
                  theorems: Sequence[str] = COMPLEX_CHECKS, n=(4, 9), d=(2, 4),
                  m=None) -> Iterator[VerificationReport]:
    for inst, c in random_instances(seed, count, n, d, m):
        for p in primes:
            yield verify_complex(c, p, theorems, inst)


def verify_exhaustive(n: int, d: int, primes: Sequence[int] = (2,),
                      theorems: Sequence[str] = COMPLEX_CHECKS) -> Iterator[VerificationReport]:
    for k, c in enumerate(exhaustive_pure_complexes(n, d)):
        for p in primes:
            yield verify_complex(c, p, theorems, f"exhaustive:{n}:{d}:{k}")


@dataclass
class FixtureReport:
    name: str
    facts: list[dict]

    @property
    def passed(self) -> bool:
        return all(f["passed"] for f in self.facts)

    def to_json(self) -> dict:
        return {"instance": f"fixture:{self.name}", "passed": self.passed, "facts": self.facts}


def verify_fixtures(names: Sequence[str] | None = None) -> Iterator[FixtureReport]:
    for name in names or sorted(FIXTURES):
        fx = FIXTURES[name]
        rows = []
        for fact in fx.facts:
            actual, ok = evaluate_fact(fx, fact)
            rows.append({"key": fact.key, "p": fact.p, "arg": fact.arg, "op": fact.op,
                         "expected": fact.expected, "actual": actual, "passed": ok,
                         "provenance": fact.provenance})
        yield FixtureReport(name, rows)


# -- sharpness search ---------------------------------------------------------------

def search_sharpness(seed: int, count: int, primes: Sequence[int] = (2,), n=(5, 9),
                     d=(3, 4), m=None) -> Iterator[dict]:
    """Random complexes with Serre level r < d and h_{r+1} < 0."""
    for inst, c in random_instances(seed, count, n, d, m):
        for p in primes:
            a = Analysis(c, p)
            r = a.level
            if 2 <= r < c.d and a.h_at(r + 1) < 0:
                yield {"instance": inst, "p": a.p, "serre_level": r, "h": list(a.h),
                       "complex": complex_to_json(c)}
