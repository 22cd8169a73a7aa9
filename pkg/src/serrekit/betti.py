"""Graded Betti tables of Stanley-Reisner rings via Hochster's formula.

beta_{i,j}(K[Δ]) is the sum, over vertex subsets W of size j, of the
dimension of the (j - i - 1)-th reduced homology of the induced subcomplex
on W. Subsets run over the ground set, so ghost vertices (variables lying in
the ideal) contribute their Koszul factors automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .complex import Face, SimplicialComplex, face_vertices, maximal_sets
from .errors import PartialTable, TooLarge
from .homology import _as_prime, betti_of_facets

MAX_VERTICES = 24


@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti table of a cyclic module S/I.

    ``n`` is the number of variables of S. ``shift`` is subtracted when
    reporting depth, for tables computed on a polarization.
    """

    entries: dict[tuple[int, int], int]
    n: int
    d: int | None = None
    p: int | None = None
    partial: bool = False
    degree_cap: int | None = None
    shift: int = 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def _require_complete(self, what: str):
        if self.partial:
            raise PartialTable(f"{what} needs a complete table (degree cap {self.degree_cap})")

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projective_dimension(self) -> int:
        self._require_complete("projective dimension")
        return max(i for (i, _) in self.entries)

    def depth(self) -> int:
        """Auslander-Buchsbaum: n - pd, less the polarization shift."""
        return self.n - self.projective_dimension() - self.shift

    def k_polynomial(self) -> list[int]:
        """Coefficients of sum_j (sum_i (-1)^i beta_{i,j}) t^j.

        For a partial table only the coefficients up to the cap are exact and
        only those are returned.
        """
        top = max(j for (_, j) in self.entries)
        if self.partial:
            top = min(top, self.degree_cap)
        coeffs = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            if j <= top:
                coeffs[j] += (-1) ** i * v
        return coeffs

    def column(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in self.entries.items() if a == i}

    def to_json(self) -> dict:
        out = {
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "regularity": self.regularity(),
            "partial": self.partial,
        }
        if self.partial:
            out["pd"] = None
            out["depth"] = None
        else:
            out["pd"] = self.projective_dimension()
            out["depth"] = self.depth()
        return out

    def render(self) -> str:
        """Macaulay-style staircase: row j - i, column i."""
        cols = range(max(i for (i, _) in self.entries) + 1)
        rows = range(self.regularity() + 1)
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(cols[-1])), 1)
        rwidth = len(str(rows[-1])) + 1
        lines = [" " * rwidth + " " + " ".join(str(i).rjust(width) for i in cols)]
        lines.append(" " * rwidth + " " + "-" * ((width + 1) * len(cols) - 1))
        for r in rows:
            cells = []
            for i in cols:
                v = self.entries.get((i, i + r), 0)
                cells.append((str(v) if v else ".").rjust(width))
            lines.append(f"{r}:".rjust(rwidth) + " " + " ".join(cells))
        if self.partial:
            lines.append(f"(partial: internal degrees <= {self.degree_cap})")
        return "\n".join(lines)


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal subsets of the ground set that are not faces."""
    faces = c.face_set
    ground = c.ground_mask
    found = []
    b = ground & ~c.vertex_mask
    while b:
        low = b & -b
        found.append(low)
        b ^= low
    for group in c.faces_by_size:
        cand = set()
        for f in group:
            rest = c.vertex_mask & ~f
            while rest:
                low = rest & -rest
                rest ^= low
                s = f | low
                if s in faces or s in cand:
                    continue
                # minimal iff every facet of the boundary of s is a face
                t, ok = s, True
                while t:
                    lo = t & -t
                    t ^= lo
                    if s ^ lo not in faces:
                        ok = False
                        break
                if ok:
                    cand.add(s)
        found.extend(cand)
    return sorted((face_vertices(m) for m in found), key=lambda f: (len(f), f))


def _restricted_facets(facets, w: int):
    return maximal_sets(f & w for f in facets)


def hochster_betti(c: SimplicialComplex, p=2, degree_cap: int | None = None,
                   max_vertices: int = MAX_VERTICES) -> BettiTable:
    """Betti table of K[Δ] over GF(p); ``degree_cap`` limits |W| and marks
    the table partial when it cuts anything off."""
    p = _as_prime(p)
    ground = face_vertices(c.ground_mask)
    n = len(ground)
    top = n if degree_cap is None else min(degree_cap, n)
    if degree_cap is None and n > max_vertices:
        raise TooLarge(f"{n} vertices exceed the Hochster cap of {max_vertices}; "
                       "pass a degree cap")
    if degree_cap is not None and sum(comb(n, j) for j in range(top + 1)) > 2 ** max_vertices:
        raise TooLarge("too many vertex subsets below the degree cap")
    faces = c.face_set
    facets = c.facet_masks
    bits = [1 << v for v in ground]
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for j in range(1, top + 1):
        for combo in combinations(bits, j):
            w = 0
            for b in combo:
                w |= b
            if w in faces:
                continue  # a simplex is acyclic
            betti = betti_of_facets(_restricted_facets(facets, w), p)
            for k, v in enumerate(betti):
                if v:
                    key = (j - k, j)  # reduced degree k - 1 gives i = j - k
                    entries[key] = entries.get(key, 0) + v
    return BettiTable(entries, n, c.d, p, partial=top < n,
                      degree_cap=degree_cap if top < n else None)


def k_polynomial(table: BettiTable) -> list[int]:
    return table.k_polynomial()


def regularity(table: BettiTable) -> int:
    return table.regularity()


def projective_dimension(table: BettiTable) -> int:
    return table.projective_dimension()


def depth_ab(table: BettiTable) -> int:
    return table.depth()
