"""Bundled example complexes with their expected facts.

Provenance tags: "literature" for values printed in the source of the
example, "derived" for values computed independently (brute force, hand
computation), "trivial" for values that follow from a definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Any, Callable

from .betti import hochster_betti, minimal_nonfaces
from .complex import (SimplicialComplex, boundary_of_simplex, build_complex, complex_h_vector,
                      f_vector, is_pseudomanifold, is_pure, is_strongly_connected, simplex,
                      suspension)
from .errors import InputError
from .homology import reduced_betti
from .monomial import power_ideal_betti
from .serre import is_homology_manifold, serre_report

DELTA_A = [[1, 2, 3], [3, 4, 5]]
DELTA_S2 = [[1, 2, 3, 5], [1, 2, 4, 5], [1, 2, 4, 6], [1, 3, 4, 5], [1, 3, 4, 6],
            [1, 3, 5, 6], [2, 3, 4, 5], [2, 3, 5, 6], [2, 4, 5, 6]]
GAMMA_S3 = [[1, 2, 3, 5], [1, 2, 4, 5], [1, 2, 4, 6], [1, 3, 4, 5], [1, 3, 4, 6],
            [1, 3, 5, 6], [2, 3, 4, 6], [2, 3, 5, 6], [2, 4, 5, 6]]
DELTA_4 = [[1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 1]]
# 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
TORUS_7 = sorted({tuple(sorted((i + a) % 7 + 1 for a in s))
                  for i in range(7) for s in ((0, 1, 3), (0, 2, 3))})
RP2_6 = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
         [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross-polytope; antipodal pairs (i, i + k)."""
    return build_complex([[i + 1 + k * s for i, s in enumerate(bits)]
                          for bits in product((0, 1), repeat=k)])


@dataclass(frozen=True)
class Fact:
    key: str
    expected: Any
    provenance: str
    p: int | None = None
    arg: Any = None
    op: str = "eq"


@dataclass(frozen=True)
class Fixture:
    name: str
    complex: SimplicialComplex
    facts: tuple[Fact, ...] = field(default=())


def _hochster_instance(c: SimplicialComplex, p: int, r: int) -> bool:
    """beta_{n-r, n}(K[Δ]) equals the (r-1)-th reduced Betti number of Δ."""
    n = c.ground_size
    table = hochster_betti(c, p)
    return table[n - r, n] == reduced_betti(c, p)[r - 1]


FACT_EVALUATORS: dict[str, Callable[[SimplicialComplex, int, Any], Any]] = {
    "f_vector": lambda c, p, a: list(f_vector(c)),
    "h_vector": lambda c, p, a: list(complex_h_vector(c)),
    "dim": lambda c, p, a: c.dim,
    "n": lambda c, p, a: c.n,
    "facet_count": lambda c, p, a: len(c.facet_masks),
    "pure": lambda c, p, a: is_pure(c),
    "strongly_connected": lambda c, p, a: is_strongly_connected(c),
    "pseudomanifold": lambda c, p, a: is_pseudomanifold(c),
    "homology_manifold": lambda c, p, a: is_homology_manifold(c, p),
    "serre_level": lambda c, p, a: serre_report(c, p).serre_level,
    "witness": lambda c, p, a: (lambda w: [list(w.face), w.i] if w else None)(
        serre_report(c, p).witness),
    "depth": lambda c, p, a: serre_report(c, p).depth,
    "depth_ab": lambda c, p, a: hochster_betti(c, p).depth(),
    "cohen_macaulay": lambda c, p, a: serre_report(c, p).is_cm,
    "reduced_betti": lambda c, p, a: reduced_betti(c, p)[a],
    "betti": lambda c, p, a: hochster_betti(c, p)[tuple(a)],
    "min_nonfaces_of_size": lambda c, p, a: sum(1 for f in minimal_nonfaces(c) if len(f) == a),
    "codim": lambda c, p, a: c.ground_size - c.d,
    "hochster_instance": lambda c, p, a: _hochster_instance(c, p, a),
    "power_betti": lambda c, p, a: power_ideal_betti(a[0], a[1])[a[2], a[3]],
}

_OPS = {
    "eq": lambda x, y: x == y,
    "ge": lambda x, y: x >= y,
    "le": lambda x, y: x <= y,
    "lt": lambda x, y: x < y,
    "gt": lambda x, y: x > y,
}


def evaluate_fact(fx: Fixture, fact: Fact) -> tuple[Any, bool]:
    actual = FACT_EVALUATORS[fact.key](fx.complex, fact.p or 2, fact.arg)
    return actual, _OPS[fact.op](actual, fact.expected)


def _levels(level: int, primes=(2, 3), prov="literature") -> list[Fact]:
    return [Fact("serre_level", level, prov, p) for p in primes]


def _build_registry() -> dict[str, Fixture]:
    L, D, T = "literature", "derived", "trivial"
    fx = [
        Fixture("delta-a", build_complex(DELTA_A, name="delta-a"), (
            Fact("n", 5, L), Fact("dim", 2, L), Fact("facet_count", 2, T),
            Fact("f_vector", [1, 5, 6, 2], D), Fact("h_vector", [1, 2, -1, 0], D),
            Fact("pure", True, L), Fact("strongly_connected", False, D),
            *_levels(1),
            Fact("witness", [[3], 0], L, 2), Fact("witness", [[3], 0], L, 3),
            Fact("depth", 2, D, 2), Fact("depth_ab", 2, D, 2),
            Fact("depth", 2, D, 3), Fact("depth_ab", 2, D, 3),
            Fact("min_nonfaces_of_size", 4, D, arg=2),
        )),
        Fixture("delta-s2", build_complex(DELTA_S2, name="delta-s2"), (
            Fact("n", 6, L), Fact("dim", 3, L), Fact("facet_count", 9, L),
            Fact("f_vector", [1, 6, 15, 20, 9], D), Fact("h_vector", [1, 2, 3, 4, -1], D),
            Fact("pure", True, L), *_levels(2),
            Fact("witness", [[6], 1], L, 2), Fact("witness", [[6], 1], L, 3),
            Fact("cohen_macaulay", False, L, 2), Fact("cohen_macaulay", False, L, 3),
        )),
        Fixture("gamma-s3", build_complex(GAMMA_S3, name="gamma-s3"), (
            Fact("n", 6, L), Fact("facet_count", 9, L), Fact("h_vector", [1, 2, 3, 4, -1], D),
            *_levels(3),
            Fact("cohen_macaulay", False, L, 2), Fact("cohen_macaulay", False, L, 3),
            Fact("reduced_betti", 1, L, 2, arg=2, op="ge"),
            Fact("reduced_betti", 1, L, 3, arg=2, op="ge"),
            Fact("hochster_instance", True, L, 2, arg=3),
            Fact("hochster_instance", True, L, 3, arg=3),
        )),
        Fixture("delta4", build_complex(DELTA_4, name="delta4"), (
            Fact("n", 8, L), Fact("betti", 16, L, 2, arg=(1, 2)),
            Fact("betti", 16, L, 3, arg=(1, 2)),
            Fact("min_nonfaces_of_size", 16, L, arg=2), Fact("codim", 5, L),
            Fact("power_betti", 15, L, arg=(5, 2, 1, 2)), *_levels(1, prov=D),
        )),
        Fixture("torus7", build_complex(TORUS_7, name="torus7"), (
            Fact("f_vector", [1, 7, 21, 14], D), Fact("pseudomanifold", True, D),
            Fact("homology_manifold", True, D, 2), Fact("homology_manifold", True, D, 3),
            Fact("reduced_betti", 2, D, 2, arg=1), *_levels(2, prov=L),
        )),
        Fixture("suspension-torus7", suspension(build_complex(TORUS_7)), (
            Fact("serre_level", 2, L, 2, op="ge"), Fact("serre_level", 2, L, 3, op="ge"),
            Fact("pseudomanifold", True, D),
            Fact("homology_manifold", False, L, 2), Fact("homology_manifold", False, L, 3),
        )),
        Fixture("rp2-6", build_complex(RP2_6, name="rp2-6"), (
            Fact("f_vector", [1, 6, 15, 10], D), Fact("pseudomanifold", True, D),
            Fact("reduced_betti", 1, D, 2, arg=1), Fact("reduced_betti", 0, D, 3, arg=1),
            Fact("depth", 3, D, 2, op="lt"), Fact("cohen_macaulay", False, D, 2),
            Fact("cohen_macaulay", True, D, 3), Fact("serre_level", 3, D, 3),
        )),
        Fixture("tetrahedron-boundary", boundary_of_simplex([1, 2, 3, 4]), (
            Fact("pure", True, T), Fact("strongly_connected", True, T),
            Fact("pseudomanifold", True, T), Fact("serre_level", 3, T, 2),
            Fact("cohen_macaulay", True, T, 2), Fact("cohen_macaulay", True, T, 3),
        )),
        Fixture("octahedron", cross_polytope_boundary(3), (
            Fact("f_vector", [1, 6, 12, 8], T), Fact("h_vector", [1, 3, 3, 1], D),
            Fact("cohen_macaulay", True, T, 2), Fact("cohen_macaulay", True, T, 3),
            Fact("min_nonfaces_of_size", 3, T, arg=2),
        )),
        Fixture("simplex-4", simplex([1, 2, 3, 4]), (
            Fact("f_vector", [1, 4, 6, 4, 1], T), Fact("h_vector", [1, 0, 0, 0, 0], T),
            Fact("cohen_macaulay", True, T, 2), Fact("betti", 0, T, 2, arg=(1, 2)),
        )),
    ]
    return {f.name: replace(f, complex=replace(f.complex, name=f.name)) for f in fx}


FIXTURES = _build_registry()


def fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None
