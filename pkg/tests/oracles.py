"""Slow, independent reference implementations used as test oracles.

Nothing here touches the bitset machinery of the package: faces are
frozensets, ranks come from textbook row reduction on lists of lists.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import sympy
from hypothesis import strategies as st

from serrekit.complex import build_complex


def faces_of(facets) -> set[frozenset]:
    out = {frozenset()}
    for f in facets:
        f = tuple(f)
        for k in range(1, len(f) + 1):
            out.update(frozenset(s) for s in combinations(f, k))
    return out


def rank_mod(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def boundary_rows(faces: set[frozenset], k: int) -> list[list[int]]:
    """Matrix of the boundary from k-element faces to (k-1)-element faces."""
    src = sorted((tuple(sorted(f)) for f in faces if len(f) == k))
    dst = sorted((tuple(sorted(f)) for f in faces if len(f) == k - 1))
    idx = {f: i for i, f in enumerate(dst)}
    rows = [[0] * len(src) for _ in dst]
    for j, f in enumerate(src):
        for t in range(len(f)):
            rows[idx[f[:t] + f[t + 1:]]][j] = (-1) ** t
    return rows


def reduced_betti_oracle(faces: set[frozenset], p: int) -> list[int]:
    """[b_{-1}, b_0, ..., b_{dim}] of the complex with the given face set."""
    if not faces:
        return []
    top = max(len(f) for f in faces)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        rows = boundary_rows(faces, k)
        ranks[k] = rank_mod(rows, p) if rows and rows[0] else 0
    counts = [sum(1 for f in faces if len(f) == k) for k in range(top + 1)]
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def link_faces(faces: set[frozenset], F: frozenset) -> set[frozenset]:
    return {g - F for g in faces if F <= g}


def satisfies_serre_oracle(faces: set[frozenset], r: int, p: int) -> bool:
    for F in faces:
        lk = link_faces(faces, F)
        dim_lk = max(len(g) for g in lk) - 1
        b = reduced_betti_oracle(lk, p)
        for i in range(-1, min(r - 1, dim_lk)):
            if b[i + 1]:
                return False
    return True


def serre_level_oracle(faces: set[frozenset], p: int) -> int:
    d = max(len(f) for f in faces)
    if d == 0:
        return 0
    level = 1
    for r in range(2, d + 1):
        if satisfies_serre_oracle(faces, r, p):
            level = r
        else:
            break
    return level


def depth_oracle(faces: set[frozenset], p: int) -> int:
    """1 + the largest i for which the i-skeleton is Cohen-Macaulay."""
    d = max(len(f) for f in faces)
    best = 0
    for k in range(1, d + 1):
        skel = {f for f in faces if len(f) <= k}
        if satisfies_serre_oracle(skel, k, p):
            best = k
    return best


def f_vector_oracle(faces: set[frozenset]) -> list[int]:
    d = max(len(f) for f in faces)
    return [sum(1 for f in faces if len(f) == k) for k in range(d + 1)]


def h_vector_sympy(f: list[int]) -> list[int]:
    """Coefficients of sum f_{i-1} (x - 1)^{d-i}, highest power first."""
    x = sympy.symbols("x")
    d = len(f) - 1
    poly = sympy.Poly(sum(f[i] * (x - 1) ** (d - i) for i in range(d + 1)), x)
    coeffs = poly.all_coeffs()
    coeffs = [0] * (d + 1 - len(coeffs)) + coeffs
    return [int(c) for c in coeffs]


def hochster_oracle(ground: list[int], faces: set[frozenset], p: int) -> dict:
    out = {(0, 0): 1}
    for j in range(1, len(ground) + 1):
        for W in combinations(ground, j):
            W = frozenset(W)
            sub = {f for f in faces if f <= W}
            b = reduced_betti_oracle(sub, p)
            for k, v in enumerate(b):
                if v:
                    key = (j - k, j)
                    out[key] = out.get(key, 0) + v
    return out


def k_polynomial_sympy(f: list[int], n: int) -> list[int]:
    """Numerator of the Hilbert series of K[Δ] over (1 - t)^n."""
    t = sympy.symbols("t")
    d = len(f) - 1
    expr = sum(f[i] * t ** i * (1 - t) ** (n - i) for i in range(d + 1))
    coeffs = sympy.Poly(expr, t).all_coeffs()[::-1]
    return [int(c) for c in coeffs]


def brute_minimal_nonfaces(ground, faces) -> list[tuple[int, ...]]:
    out = []
    for k in range(1, len(ground) + 1):
        for s in combinations(ground, k):
            fs = frozenset(s)
            if fs in faces:
                continue
            if all(fs - {v} in faces for v in fs):
                out.append(s)
    return out


def standard_monomial_count(gens, m: int, q: int) -> int:
    from serrekit.monomial import monomials_of_degree
    return sum(1 for u in monomials_of_degree(m, q)
               if not any(all(a <= b for a, b in zip(g, u)) for g in gens))


# -- hypothesis strategies ---------------------------------------------------------

@st.composite
def facet_lists(draw, max_n: int = 7, max_facets: int = 7):
    n = draw(st.integers(1, max_n))
    verts = list(range(1, n + 1))
    facets = draw(st.lists(st.lists(st.sampled_from(verts), min_size=1, max_size=min(n, 4),
                                    unique=True), min_size=1, max_size=max_facets))
    return [sorted(f) for f in facets]


@st.composite
def complexes(draw, max_n: int = 7, max_facets: int = 7):
    return build_complex(draw(facet_lists(max_n, max_facets)))


@st.composite
def pure_complexes(draw, max_n: int = 7, max_d: int = 3):
    n = draw(st.integers(2, max_n))
    d = draw(st.integers(1, min(max_d, n)))
    pool = list(combinations(range(1, n + 1), d))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=min(len(pool), 9),
                           unique=True))
    return build_complex(chosen)


primes = st.sampled_from([2, 3, 5])


def binom_table(m: int, k: int) -> dict:
    """beta_{i,i+k-1}(S/n^k) from the Eagon-Northcott style closed form."""
    return {(i, i + k - 1): comb(i + k - 2, k - 1) * comb(m + k - 1, i + k - 1)
            for i in range(1, m + 1)}
