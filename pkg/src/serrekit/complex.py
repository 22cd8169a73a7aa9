"""Facet-based simplicial complexes on small integer vertex sets.

Faces are stored as int bitmasks with bit ``v`` set for vertex ``v``; the
public functions accept and return sorted vertex tuples.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import EmptyInput, InputError, IsolatedVertexPolicy, NotAFace

VERTEX_CAP = 128

Face = tuple[int, ...]


def face_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InputError(f"vertex ids must be positive integers, got {v!r}")
        if v > VERTEX_CAP:
            raise InputError(f"vertex {v} exceeds the cap of {VERTEX_CAP}")
        mask |= 1 << v
    return mask


def face_vertices(mask: int) -> Face:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def face_key(mask: int) -> tuple[int, Face]:
    """Canonical order: cardinality first, then lexicographic vertex tuple."""
    return (mask.bit_count(), face_vertices(mask))


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and every set contained in another one."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable complex given by its facets.

    ``ground_mask`` is the ambient vertex set. It defaults to the union of the
    facets; it may be larger only for complexes built from ideals that contain
    variables (ghost vertices), which matters for Betti numbers but not for
    faces, links or homology.
    """

    facet_masks: tuple[int, ...]
    ground_mask: int
    name: str | None = field(default=None, compare=False)

    @classmethod
    def from_masks(cls, masks: Iterable[int], ground: int | None = None,
                   name: str | None = None) -> "SimplicialComplex":
        kept = maximal_sets(masks)
        if not kept:
            kept = [0]
        kept.sort(key=face_vertices)
        union = 0
        for m in kept:
            union |= m
        if ground is None:
            ground = union
        elif union & ~ground:
            raise InputError("facets use vertices outside the ground set")
        return cls(tuple(kept), ground, name)

    # -- basic shape -------------------------------------------------------

    @cached_property
    def vertex_mask(self) -> int:
        union = 0
        for m in self.facet_masks:
            union |= m
        return union

    @property
    def vertices(self) -> Face:
        return face_vertices(self.vertex_mask)

    @property
    def ground(self) -> Face:
        return face_vertices(self.ground_mask)

    @property
    def n(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def ground_size(self) -> int:
        return self.ground_mask.bit_count()

    @cached_property
    def d(self) -> int:
        """Maximal facet cardinality (Krull dimension of the face ring)."""
        return max(m.bit_count() for m in self.facet_masks)

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def facets(self) -> list[Face]:
        return [face_vertices(m) for m in self.facet_masks]

    @property
    def is_void(self) -> bool:
        """True for the complex {∅} whose only face is the empty set."""
        return self.facet_masks == (0,)

    # -- faces ---------------------------------------------------------------

    @cached_property
    def faces_by_size(self) -> tuple[tuple[int, ...], ...]:
        """Faces grouped by cardinality 0..d, each group in canonical order."""
        seen: set[int] = set()
        for f in self.facet_masks:
            if f in seen:
                continue
            seen.update(submasks(f))
        groups: list[list[int]] = [[] for _ in range(self.d + 1)]
        for m in seen:
            groups[m.bit_count()].append(m)
        return tuple(tuple(sorted(g, key=face_vertices)) for g in groups)

    @cached_property
    def face_set(self) -> frozenset[int]:
        return frozenset(m for g in self.faces_by_size for m in g)

    def faces(self) -> list[Face]:
        return [face_vertices(m) for g in self.faces_by_size for m in g]

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)

    def __contains__(self, face: Iterable[int]) -> bool:
        return self.contains_mask(face_mask(face))

    # -- constructions on masks -----------------------------------------------

    def link_mask(self, mask: int) -> "SimplicialComplex":
        containing = [f ^ mask for f in self.facet_masks if f & mask == mask]
        if not containing:
            raise NotAFace(f"{face_vertices(mask)} is not a face")
        # facets through a common face stay incomparable after removing it
        containing.sort(key=face_vertices)
        union = 0
        for m in containing:
            union |= m
        return SimplicialComplex(tuple(containing), union)

    def restriction_mask(self, mask: int) -> "SimplicialComplex":
        return SimplicialComplex.from_masks(
            (f & mask for f in self.facet_masks), ground=self.ground_mask & mask)

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"SimplicialComplex({label}facets={self.facets})"


def build_complex(facet_list: Sequence[Iterable[int]], n: int | None = None,
                  strict: bool = False, name: str | None = None) -> SimplicialComplex:
    """Complex generated by ``facet_list``; non-maximal entries are absorbed.

    With ``strict`` and an explicit ``n``, every vertex 1..n must occur in some
    face. Otherwise the vertex set is the union of the faces.
    """
    if not facet_list:
        raise EmptyInput("no facets given")
    masks = []
    for face in facet_list:
        m = face_mask(face)
        if m == 0:
            raise InputError("faces must be nonempty")
        masks.append(m)
    union = 0
    for m in masks:
        union |= m
    if n is not None:
        declared = ((1 << (n + 1)) - 1) ^ 1
        if union & ~declared:
            raise InputError(f"vertex ids exceed declared n = {n}")
        if strict and union != declared:
            missing = face_vertices(declared & ~union)
            raise IsolatedVertexPolicy(f"vertices {list(missing)} lie in no face")
    return SimplicialComplex.from_masks(masks, name=name)


def void_complex() -> SimplicialComplex:
    """The complex {∅} of dimension -1."""
    return SimplicialComplex((0,), 0)


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex.from_masks([face_mask(vertices)])


def boundary_of_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    vs = sorted(vertices)
    return build_complex([c for c in combinations(vs, len(vs) - 1)])


def complex_from_nonfaces(ground: int, nonfaces: Iterable[int]) -> SimplicialComplex:
    """Complex of all subsets of ``ground`` containing none of ``nonfaces``."""
    facets = [ground]
    for bad in nonfaces:
        if bad & ~ground:
            continue
        nxt = []
        for f in facets:
            if f & bad == bad:
                b = bad
                while b:
                    low = b & -b
                    nxt.append(f ^ low)
                    b ^= low
            else:
                nxt.append(f)
        facets = maximal_sets(nxt)
    return SimplicialComplex.from_masks(facets, ground=ground)


# -- f- and h-vectors ---------------------------------------------------------

def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{d-1}); the leading entry is always 1."""
    return tuple(len(g) for g in c.faces_by_size)


def h_vector(f: Sequence[int], d: int) -> tuple[int, ...]:
    """h_0..h_d from f = (f_{-1}, ..., f_{d-1})."""
    if len(f) < d + 1:
        raise InputError(f"f-vector too short for d = {d}")
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1))


def complex_h_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return h_vector(f_vector(c), c.d)


# -- links, restrictions, constructions ------------------------------------------

def link(c: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    return c.link_mask(face_mask(face))


def restriction(c: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    return c.restriction_mask(face_mask(vertices))


def _fresh(c: SimplicialComplex) -> int:
    top = max(c.ground_mask.bit_length() - 1, 0)
    if top + 2 > VERTEX_CAP:
        raise InputError("no room for fresh vertices under the vertex cap")
    return top + 1


def suspension(c: SimplicialComplex) -> SimplicialComplex:
    u = _fresh(c)
    bu, bv = 1 << u, 1 << (u + 1)
    masks = [f | bu for f in c.facet_masks] + [f | bv for f in c.facet_masks]
    return SimplicialComplex.from_masks(masks, ground=c.ground_mask | bu | bv)


def cone(c: SimplicialComplex) -> SimplicialComplex:
    apex = 1 << _fresh(c)
    return SimplicialComplex.from_masks([f | apex for f in c.facet_masks],
                                        ground=c.ground_mask | apex)


# -- structural predicates ------------------------------------------------------

def is_pure(c: SimplicialComplex) -> bool:
    return len({m.bit_count() for m in c.facet_masks}) == 1


def is_strongly_connected(c: SimplicialComplex) -> bool:
    """Facet graph (adjacent when sharing d-1 vertices) is connected."""
    facets = c.facet_masks
    d = c.d
    seen = {0}
    queue = deque([0])
    while queue:
        a = facets[queue.popleft()]
        for j, b in enumerate(facets):
            if j not in seen and (a & b).bit_count() == d - 1:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(facets)


def ridge_counts(c: SimplicialComplex) -> Counter:
    """How many facets contain each codimension-one face (pure complexes)."""
    counts: Counter = Counter()
    for f in c.facet_masks:
        b = f
        while b:
            low = b & -b
            counts[f ^ low] += 1
            b ^= low
    return counts


def is_pseudomanifold(c: SimplicialComplex) -> bool:
    if c.is_void or not is_pure(c):
        return False
    if any(k != 2 for k in ridge_counts(c).values()):
        return False
    return is_strongly_connected(c)


def is_normal_pseudomanifold(c: SimplicialComplex, p: int = 2) -> bool:
    from .serre import satisfies_serre

    return is_pseudomanifold(c) and satisfies_serre(c, 2, p).holds
