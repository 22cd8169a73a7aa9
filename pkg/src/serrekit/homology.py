"""Reduced simplicial homology over prime fields by exact rank computations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .complex import Face, SimplicialComplex, face_vertices
from .errors import InputError

SPARSE_THRESHOLD = 4096
"""Column count above which :func:`rank_mod_p` switches to sparse elimination."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 2

    def __post_init__(self):
        if not (2 <= self.p < 2**31) or not is_prime(self.p):
            raise InputError(f"{self.p} is not a prime below 2^31")


def _as_prime(p) -> int:
    if isinstance(p, PrimeField):
        return p.p
    return PrimeField(int(p)).p


@dataclass(frozen=True)
class ReducedBetti:
    """Reduced Betti numbers; ``b[i]`` is the dimension of the i-th reduced
    homology for i >= -1, and zero outside the stored range."""

    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        k = i + 1
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    @property
    def top(self) -> int:
        return len(self.values) - 2

    def nonzero(self) -> list[int]:
        return [i - 1 for i, v in enumerate(self.values) if v]

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * v for i, v in enumerate(self.values))

    def to_list(self) -> list[int]:
        return list(self.values)


# -- rank kernels -----------------------------------------------------------------

def gf2_rank_packed(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of vectors packed as Python ints."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                break
            v ^= b
    return len(basis)


def sparse_rank_mod_p(vectors: Sequence[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of sparse vectors given as {index: coefficient}."""
    basis: dict[int, dict[int, int]] = {}
    for vec in vectors:
        v = {k: x % p for k, x in vec.items() if x % p}
        while v:
            h = max(v)
            b = basis.get(h)
            if b is None:
                inv = pow(v[h], -1, p)
                basis[h] = {k: x * inv % p for k, x in v.items()}
                break
            c = v[h]
            for k, x in b.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(basis)


def dense_rank_mod_p(matrix, p: int) -> int:
    """Gauss-Jordan elimination over GF(p) on a dense integer matrix."""
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), -1, p) % p
        others = np.flatnonzero(a[:, col])
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, col], a[rank])) % p
        rank += 1
    return rank


def rank_mod_p(matrix, p: int, sparse_threshold: int = SPARSE_THRESHOLD) -> int:
    """Rank of an integer matrix over GF(p).

    GF(2) packs each column into a machine-word bitset; other primes use dense
    elimination unless the matrix has more than ``sparse_threshold`` columns.
    """
    p = _as_prime(p)
    a = np.asarray(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    if p == 2:
        cols = []
        for j in range(a.shape[1]):
            v = 0
            for i in np.flatnonzero(a[:, j] & 1):
                v |= 1 << int(i)
            cols.append(v)
        return gf2_rank_packed(cols)
    if a.shape[1] > sparse_threshold:
        cols = [{int(i): int(a[i, j]) for i in np.flatnonzero(a[:, j])}
                for j in range(a.shape[1])]
        return sparse_rank_mod_p(cols, p)
    return dense_rank_mod_p(a, p)


# -- boundary maps ----------------------------------------------------------------

class BoundaryMatrix(NamedTuple):
    """Matrix of the boundary map from i-faces to (i-1)-faces."""

    matrix: np.ndarray
    rows: list[Face]
    cols: list[Face]


def _faces_of_dim(c: SimplicialComplex, i: int) -> tuple[int, ...]:
    k = i + 1
    if 0 <= k < len(c.faces_by_size):
        return c.faces_by_size[k]
    return ()


def _boundary_terms(face: int):
    """Yield (subface, sign) with sign (-1)^j for the j-th smallest vertex."""
    sign = 1
    b = face
    while b:
        low = b & -b
        yield face ^ low, sign
        sign = -sign
        b ^= low


def boundary_matrix(c: SimplicialComplex, i: int) -> BoundaryMatrix:
    """Boundary map on the augmented chain complex (the empty face spans C_{-1})."""
    if not -1 <= i <= c.dim + 1:
        raise InputError(f"boundary index {i} out of range for dim {c.dim}")
    cols = _faces_of_dim(c, i)
    rows = _faces_of_dim(c, i - 1)
    index = {m: r for r, m in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, s in enumerate(cols):
        for sub, sign in _boundary_terms(s):
            mat[index[sub], j] = sign
    return BoundaryMatrix(mat, [face_vertices(m) for m in rows],
                          [face_vertices(m) for m in cols])


def _rank_from_size(groups, k: int, p: int) -> int:
    """Rank of the boundary map from cardinality-k faces."""
    if k == 0 or k >= len(groups) or not groups[k]:
        return 0
    if k == 1:
        return 1
    index = {m: r for r, m in enumerate(groups[k - 1])}
    if p == 2:
        vecs = []
        for s in groups[k]:
            v = 0
            b = s
            while b:
                low = b & -b
                v |= 1 << index[s ^ low]
                b ^= low
            vecs.append(v)
        return gf2_rank_packed(vecs)
    vecs = [{index[sub]: sign for sub, sign in _boundary_terms(s)} for s in groups[k]]
    return sparse_rank_mod_p(vecs, p)


def betti_from_faces(groups: Sequence[Sequence[int]], p: int) -> tuple[int, ...]:
    """Reduced Betti numbers from faces grouped by cardinality (index 0 = dim -1)."""
    ranks = [_rank_from_size(groups, k, p) for k in range(len(groups) + 1)]
    return tuple(len(groups[k]) - ranks[k] - ranks[k + 1] for k in range(len(groups)))


def _compress(facets: Sequence[int]) -> tuple[int, ...]:
    """Relabel vertices to 0..k-1 keeping their order, then sort."""
    union = 0
    for f in facets:
        union |= f
    pos = {}
    b, k = union, 0
    while b:
        low = b & -b
        pos[low] = 1 << k
        k += 1
        b ^= low
    out = []
    for f in facets:
        m = 0
        while f:
            low = f & -f
            m |= pos[low]
            f ^= low
        out.append(m)
    out.sort()
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _betti_cached(facets: tuple[int, ...], p: int) -> tuple[int, ...]:
    union = 0
    for f in facets:
        union |= f
    return betti_from_faces(SimplicialComplex(facets, union).faces_by_size, p)


def betti_of_facets(facets: Sequence[int], p: int) -> tuple[int, ...]:
    """Reduced Betti numbers of the complex generated by pairwise incomparable
    ``facets``. Cones are acyclic and skip the rank computation."""
    d = max(f.bit_count() for f in facets)
    if d == 0:
        return (1,)
    common = facets[0]
    for f in facets[1:]:
        common &= f
        if not common:
            break
    if common:
        return (0,) * (d + 1)
    return _betti_cached(_compress(facets), p)


def reduced_betti(c: SimplicialComplex, p=2) -> ReducedBetti:
    """Reduced Betti numbers of ``c`` over GF(p), indexed from -1."""
    return ReducedBetti(betti_of_facets(c.facet_masks, _as_prime(p)))
