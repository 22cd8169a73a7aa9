"""Monomial ideals: polarization, Hilbert functions, lex segments and the
Eliahou-Kervaire resolution.

Monomials are exponent vectors (tuples of nonnegative ints). Variables are
ordered x1 > x2 > ... > xn and "lex" always refers to that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .betti import BettiTable, hochster_betti
from .complex import SimplicialComplex, complex_from_nonfaces, complex_h_vector
from .errors import InputError, NotOSequence, NotStable, UnitIdeal
from .serre import serre_level

Monomial = tuple[int, ...]


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def format_monomial(u: Sequence[int]) -> str:
    parts = []
    for k, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{k}")
        elif a > 1:
            parts.append(f"x{k}^{a}")
    return "*".join(parts) or "1"


def monomials_of_degree(m: int, q: int) -> list[Monomial]:
    """All degree-q monomials in m variables, lex-largest first."""
    out = []
    for combo in combinations_with_replacement(range(m), q):
        e = [0] * m
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal given by minimal monomial generators (normalized on construction)."""

    num_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise InputError("need at least one variable")
        gens = set()
        for g in self.generators:
            g = tuple(int(a) for a in g)
            if len(g) != self.num_vars or any(a < 0 for a in g):
                raise InputError(f"bad exponent vector {g}")
            if not any(g):
                raise UnitIdeal("the unit ideal is not allowed")
            gens.add(g)
        minimal = [g for g in gens
                   if not any(h != g and divides(h, g) for h in gens)]
        minimal.sort(key=lambda u: (sum(u), tuple(-a for a in u)))
        object.__setattr__(self, "generators", tuple(minimal))

    def contains(self, u: Sequence[int]) -> bool:
        return any(divides(g, u) for g in self.generators)

    @property
    def max_exponent(self) -> int:
        return max((max(g) for g in self.generators), default=1)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.generators for a in g)

    def degree_part(self, q: int) -> list[Monomial]:
        return [u for u in monomials_of_degree(self.num_vars, q) if self.contains(u)]

    def strings(self) -> list[str]:
        return [format_monomial(g) for g in self.generators]


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """I_Δ with the ground vertices, in increasing order, as x1..xn."""
    from .betti import minimal_nonfaces

    ground = c.ground
    pos = {v: k for k, v in enumerate(ground)}
    gens = []
    for face in minimal_nonfaces(c):
        e = [0] * len(ground)
        for v in face:
            e[pos[v]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(len(ground), tuple(gens))


# -- polarization --------------------------------------------------------------------

@dataclass(frozen=True)
class PolarizationResult:
    ideal: MonomialIdeal
    complex: SimplicialComplex
    N: int
    shift: int

    def vertex(self, k: int, t: int) -> int:
        """Vertex id of the grid variable x_{k,t} (1-based k and t)."""
        return (k - 1) * self.N + t

    def labels(self) -> dict[int, tuple[int, int]]:
        n, N = self.ideal.num_vars, self.N
        return {self.vertex(k, t): (k, t) for k in range(1, n + 1) for t in range(1, N + 1)}

    def polarized_generators(self) -> list[tuple[int, ...]]:
        out = []
        for g in self.ideal.generators:
            out.append(tuple(self.vertex(k, t) for k, a in enumerate(g, start=1)
                             for t in range(1, a + 1)))
        return out


def polarize(ideal: MonomialIdeal) -> PolarizationResult:
    """Squarefree polarization, returned as the complex it is the face ideal of.

    x_k^a becomes x_{k,1} * ... * x_{k,a}; the grid variable x_{k,t} is vertex
    (k - 1) * N + t, where N is the largest exponent among the generators.
    """
    n, N = ideal.num_vars, ideal.max_exponent
    ground = ((1 << (n * N + 1)) - 1) ^ 1
    nonfaces = []
    for g in ideal.generators:
        m = 0
        for k, a in enumerate(g):
            for t in range(1, a + 1):
                m |= 1 << (k * N + t)
        nonfaces.append(m)
    return PolarizationResult(ideal, complex_from_nonfaces(ground, nonfaces), N, n * (N - 1))


# -- Hilbert functions ---------------------------------------------------------------

def hilbert_function_oracle(ideal: MonomialIdeal, D: int) -> list[int]:
    """dim (S/I)_q for q = 0..D by counting standard monomials."""
    if D < 0:
        raise InputError("D must be nonnegative")
    return [sum(1 for u in monomials_of_degree(ideal.num_vars, q) if not ideal.contains(u))
            for q in range(D + 1)]


def series_coefficients(numerator: Sequence[int], d: int, D: int) -> list[int]:
    """Taylor coefficients up to t^D of numerator(t) / (1 - t)^d."""
    return [sum(c * comb(q - k + d - 1, d - 1) if d > 0 else (c if k == q else 0)
                for k, c in enumerate(numerator) if k <= q)
            for q in range(D + 1)]


def strip_zeros(h: Sequence[int]) -> tuple[int, ...]:
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def h_vector_and_dim(ideal: MonomialIdeal) -> tuple[tuple[int, ...], int]:
    """(h_0..h_s with h_s != 0, Krull dimension) of S/I via its polarization."""
    pol = polarize(ideal)
    return strip_zeros(complex_h_vector(pol.complex)), pol.complex.d - pol.shift


def betti_of_monomial_ideal(ideal: MonomialIdeal, p=2,
                            degree_cap: int | None = None) -> BettiTable:
    pol = polarize(ideal)
    t = hochster_betti(pol.complex, p, degree_cap)
    return BettiTable(t.entries, t.n, t.d, t.p, t.partial, t.degree_cap, shift=pol.shift)


def serre_level_polarized(ideal: MonomialIdeal, p=2) -> int:
    return serre_level(polarize(ideal).complex, p)


# -- lex segments ------------------------------------------------------------------

def macaulay_representation(a: int, i: int) -> list[tuple[int, int]]:
    """Pairs (k_t, t) with a = sum C(k_t, t), k_i > k_{i-1} > ... >= t >= 1."""
    out = []
    while a > 0 and i > 0:
        k = i
        while comb(k + 1, i) <= a:
            k += 1
        out.append((k, i))
        a -= comb(k, i)
        i -= 1
    return out


def macaulay_bound(a: int, i: int) -> int:
    """a^<i>, the largest possible next value of an O-sequence."""
    return sum(comb(k + 1, t + 1) for k, t in macaulay_representation(a, i))


def check_o_sequence(values: Sequence[int], m: int) -> None:
    """Raise NotOSequence at the first degree breaking Macaulay's bound."""
    if not values or values[0] != 1:
        raise NotOSequence(0)
    for q in range(1, len(values)):
        h = values[q]
        if h < 0 or h > comb(m + q - 1, q):
            raise NotOSequence(q)
        if q >= 2 and h > macaulay_bound(values[q - 1], q - 1):
            raise NotOSequence(q)


@dataclass(frozen=True)
class LexIdeal:
    num_vars: int
    segment_sizes: tuple[int, ...]  # |L_q| for q = 0..up_to
    generators: tuple[Monomial, ...]

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.num_vars, self.generators)


def lex_segment_ideal(values: Sequence[int], m: int, up_to: int | None = None) -> LexIdeal:
    """Lex ideal in m variables whose quotient has Hilbert function ``values``
    through degree ``up_to``; degrees past the given values count as zero."""
    if up_to is None:
        up_to = len(values) - 1
    vals = list(values[:up_to + 1]) + [0] * max(0, up_to + 1 - len(values))
    check_o_sequence(vals, m)
    sizes = []
    gens: list[Monomial] = []
    prev: set[Monomial] = set()
    for q, h in enumerate(vals):
        mons = monomials_of_degree(m, q)
        seg = mons[:len(mons) - h]
        for u in seg:
            if not any(u[k] and tuple(a - (j == k) for j, a in enumerate(u)) in prev
                       for k in range(m)):
                gens.append(u)
        prev = set(seg)
        sizes.append(len(seg))
    return LexIdeal(m, tuple(sizes), tuple(gens))


def is_lex(ideal: MonomialIdeal, up_to: int) -> bool:
    """Each degree part through ``up_to`` is an initial lex segment."""
    for q in range(up_to + 1):
        mons = monomials_of_degree(ideal.num_vars, q)
        inside = [ideal.contains(u) for u in mons]
        k = sum(inside)
        if inside != [True] * k + [False] * (len(mons) - k):
            return False
    return True


# -- Eliahou-Kervaire -------------------------------------------------------------

def max_index(u: Sequence[int]) -> int:
    """m(u): the largest (1-based) index of a variable dividing u."""
    return max(k for k, a in enumerate(u, start=1) if a)


def stability_violation(ideal: MonomialIdeal) -> tuple[Monomial, int] | None:
    for u in ideal.generators:
        mu = max_index(u)
        for j in range(1, mu):
            v = list(u)
            v[j - 1] += 1
            v[mu - 1] -= 1
            if not ideal.contains(v):
                return u, j
    return None


def is_stable(ideal: MonomialIdeal) -> bool:
    return stability_violation(ideal) is None


def eliahou_kervaire_betti(ideal: MonomialIdeal | LexIdeal) -> BettiTable:
    """Betti table of S/L for a stable ideal L from its generators alone."""
    if isinstance(ideal, LexIdeal):
        ideal = ideal.as_ideal()
    bad = stability_violation(ideal)
    if bad is not None:
        raise NotStable(*bad)
    entries = {(0, 0): 1}
    for u in ideal.generators:
        k, mu = sum(u), max_index(u)
        for i in range(1, mu + 1):
            key = (i, i + k - 1)
            entries[key] = entries.get(key, 0) + comb(mu - 1, i - 1)
    return BettiTable(entries, ideal.num_vars)


def power_ideal(m: int, k: int) -> MonomialIdeal:
    return MonomialIdeal(m, tuple(monomials_of_degree(m, k)))


def power_ideal_betti(m: int, k: int) -> BettiTable:
    """Betti table of S'/n^k, n the maximal ideal of S' = K[x1..xm]."""
    if m < 1 or k < 1:
        raise InputError("need m >= 1 and k >= 1")
    return eliahou_kervaire_betti(power_ideal(m, k))


def parse_monomial(text: str, m: int) -> Monomial:
    """Inverse of :func:`format_monomial`, e.g. ``"x1^2*x3"``."""
    e = [0] * m
    text = text.strip()
    if text == "1":
        return tuple(e)
    for part in text.split("*"):
        base, _, power = part.strip().partition("^")
        if not base.startswith("x") or not base[1:].isdigit():
            raise InputError(f"cannot parse monomial factor {part!r}")
        k = int(base[1:])
        if not 1 <= k <= m:
            raise InputError(f"variable x{k} out of range")
        e[k - 1] += int(power) if power else 1
    return tuple(e)


def ideal_from_strings(m: int, gens: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(m, tuple(parse_monomial(g, m) for g in gens))
