import pytest
from hypothesis import given

from oracles import (brute_minimal_nonfaces, complexes, faces_of, hochster_oracle,
                     k_polynomial_sympy, primes, pure_complexes)
from serrekit.betti import hochster_betti, minimal_nonfaces
from serrekit.complex import build_complex, complex_h_vector, f_vector
from serrekit.errors import PartialTable, TooLarge
from serrekit.fixtures import DELTA_4, DELTA_A, GAMMA_S3
from serrekit.homology import reduced_betti
from serrekit.serre import depth_sr


def test_gamma_table():
    t = hochster_betti(build_complex(GAMMA_S3), 2)
    assert t.entries == {(0, 0): 1, (1, 4): 6, (2, 5): 6, (3, 6): 1}
    assert t.regularity() == 3 and t.projective_dimension() == 3 and t.depth() == 3
    assert t.k_polynomial() == [1, 0, 0, 0, -6, 6, -1]


def test_delta4_linear_strand():
    t = hochster_betti(build_complex(DELTA_4), 3)
    assert t[1, 2] == 16
    assert t.depth() == depth_sr(build_complex(DELTA_4), 3) == 2


def test_delta_a_minimal_nonfaces():
    assert minimal_nonfaces(build_complex(DELTA_A)) == [(1, 4), (1, 5), (2, 4), (2, 5)]


def test_partial_table():
    c = build_complex(DELTA_4)
    t = hochster_betti(c, 2, degree_cap=3)
    assert t.partial and t[1, 2] == 16
    assert max(j for (_, j) in t.entries) <= 3
    with pytest.raises(PartialTable):
        t.projective_dimension()
    assert "partial" in t.render()
    assert t.to_json()["pd"] is None


def test_vertex_cap():
    big = build_complex([[2 * i + 1, 2 * i + 2] for i in range(13)])
    with pytest.raises(TooLarge):
        hochster_betti(big)
    assert hochster_betti(big, degree_cap=2)[1, 2] == 312


def test_render_layout():
    text = hochster_betti(build_complex(GAMMA_S3)).render()
    lines = text.splitlines()
    assert lines[0].split() == ["0", "1", "2", "3"]
    assert lines[-1].split() == ["3:", ".", "6", "6", "1"]


@given(complexes(max_n=6), primes)
def test_table_matches_brute_force_hochster(c, p):
    assert hochster_betti(c, p).entries == hochster_oracle(list(c.vertices), faces_of(c.facets), p)


@given(complexes())
def test_k_polynomial_matches_face_count_series(c):
    t = hochster_betti(c, 2)
    expected = k_polynomial_sympy(list(f_vector(c)), c.n)
    got = t.k_polynomial()
    assert got + [0] * (len(expected) - len(got)) == expected + [0] * (len(got) - len(expected))


@given(pure_complexes())
def test_k_polynomial_divides_to_h(c):
    # K(t) = (1 - t)^(n - d) h(t)
    t = hochster_betti(c, 3)
    h = list(complex_h_vector(c))
    prod = h
    for _ in range(c.n - c.d):
        prod = [a - b for a, b in zip(prod + [0], [0] + prod)]
    k = t.k_polynomial()
    assert k + [0] * (len(prod) - len(k)) == prod + [0] * (len(k) - len(prod))


@given(complexes())
def test_first_column_counts_minimal_nonfaces(c):
    t = hochster_betti(c, 2)
    mnf = minimal_nonfaces(c)
    assert mnf == brute_minimal_nonfaces(list(c.vertices), faces_of(c.facets))
    for j in range(1, c.n + 1):
        assert t[1, j] == sum(1 for f in mnf if len(f) == j)


@given(complexes(), primes)
def test_hochster_top_corner(c, p):
    n = c.n
    t = hochster_betti(c, p)
    b = reduced_betti(c, p)
    for r in range(0, c.d + 1):
        assert t[n - r, n] == b[r - 1]


@given(complexes(), primes)
def test_auslander_buchsbaum_agrees_with_links(c, p):
    assert hochster_betti(c, p).depth() == depth_sr(c, p)
