"""Serre's condition (S_r), depth and Cohen-Macaulayness of face rings.

Everything here is read off the reduced homology of links. For a face F with
link L, (S_r) asks that the reduced homology of L vanish in every degree
below min(r - 1, dim L). Faces are visited in canonical order (cardinality,
then lexicographic), so the first failure found is the reported witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .complex import Face, SimplicialComplex, face_vertices
from .homology import _as_prime, betti_of_facets


@dataclass(frozen=True)
class Witness:
    face: Face
    i: int

    def to_json(self) -> dict:
        return {"face": list(self.face), "i": self.i}


@dataclass(frozen=True)
class SerreCheck:
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class LinkProfile:
    face: int
    link_dim: int
    betti: tuple[int, ...]  # index 0 is reduced degree -1

    def first_nonzero(self, below: int | None = None) -> int | None:
        """Smallest i with nonzero reduced homology (and i < below, if given)."""
        for k, v in enumerate(self.betti):
            i = k - 1
            if below is not None and i >= below:
                return None
            if v:
                return i
        return None


def iter_link_profiles(c: SimplicialComplex, p=2) -> Iterator[LinkProfile]:
    p = _as_prime(p)
    facets = c.facet_masks
    for group in c.faces_by_size:
        for face in group:
            lk = [f ^ face for f in facets if f & face == face]
            d = max(m.bit_count() for m in lk)
            yield LinkProfile(face, d - 1, betti_of_facets(lk, p))


def link_profiles(c: SimplicialComplex, p=2) -> list[LinkProfile]:
    return list(iter_link_profiles(c, p))


def _failure(prof: LinkProfile, r: int) -> int | None:
    return prof.first_nonzero(below=min(r - 1, prof.link_dim))


def satisfies_serre(c: SimplicialComplex, r: int, p=2) -> SerreCheck:
    """Check (S_r) over GF(p); on failure report the first blocking (face, i)."""
    if r < 1:
        raise ValueError("r must be positive")
    for prof in iter_link_profiles(c, p):
        i = _failure(prof, r)
        if i is not None:
            return SerreCheck(False, Witness(face_vertices(prof.face), i))
    return SerreCheck(True)


def _level(c: SimplicialComplex, profiles) -> int:
    level = c.d
    for prof in profiles:
        i = prof.first_nonzero(below=prof.link_dim)
        if i is not None:
            level = min(level, i + 1)
    return level


def _depth(profiles) -> int:
    return min(prof.first_nonzero() + 1 + prof.face.bit_count()
               for prof in profiles if any(prof.betti))


def serre_level(c: SimplicialComplex, p=2) -> int:
    """Largest r in 1..d with (S_r); the void complex gets 0."""
    return _level(c, iter_link_profiles(c, p))


def depth_sr(c: SimplicialComplex, p=2) -> int:
    """Depth of the face ring from local cohomology of links."""
    return _depth(iter_link_profiles(c, p))


def is_cohen_macaulay(c: SimplicialComplex, p=2) -> bool:
    return satisfies_serre(c, max(c.d, 1), p).holds


@dataclass(frozen=True)
class SerreReport:
    p: int
    serre_level: int
    witness: Witness | None
    depth: int
    is_cm: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "serre_level": self.serre_level,
            "depth": self.depth,
            "cohen_macaulay": self.is_cm,
            "witness": self.witness.to_json() if self.witness else None,
        }


def serre_report(c: SimplicialComplex, p=2) -> SerreReport:
    p = _as_prime(p)
    profiles = link_profiles(c, p)
    level = _level(c, profiles)
    witness = None
    if level < c.d:
        for prof in profiles:
            i = _failure(prof, level + 1)
            if i is not None:
                witness = Witness(face_vertices(prof.face), i)
                break
    return SerreReport(p, level, witness, _depth(profiles), level == c.d)


def is_homology_manifold(c: SimplicialComplex, p=2) -> bool:
    """Every nonempty face has the homology of a sphere as its link."""
    for prof in iter_link_profiles(c, p):
        if prof.face == 0:
            continue
        expected = [0] * len(prof.betti)
        expected[prof.link_dim + 1] = 1
        if list(prof.betti) != expected:
            return False
    return True
