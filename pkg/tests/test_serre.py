import pytest
from hypothesis import given

from oracles import complexes, depth_oracle, faces_of, primes, pure_complexes, serre_level_oracle
from serrekit.complex import (boundary_of_simplex, build_complex, cone, is_normal_pseudomanifold,
                              simplex, suspension, void_complex)
from serrekit.fixtures import DELTA_A, DELTA_S2, GAMMA_S3, RP2_6, TORUS_7
from serrekit.serre import (Witness, depth_sr, is_cohen_macaulay, is_homology_manifold,
                            satisfies_serre, serre_level, serre_report)


@pytest.mark.parametrize("p", [2, 3])
def test_named_examples(p):
    a = serre_report(build_complex(DELTA_A), p)
    assert (a.serre_level, a.witness, a.depth) == (1, Witness((3,), 0), 2)
    d = serre_report(build_complex(DELTA_S2), p)
    assert (d.serre_level, d.witness, d.is_cm) == (2, Witness((6,), 1), False)
    g = serre_report(build_complex(GAMMA_S3), p)
    assert (g.serre_level, g.is_cm) == (3, False)


def test_projective_plane_depends_on_characteristic():
    rp = build_complex(RP2_6)
    assert not is_cohen_macaulay(rp, 2) and depth_sr(rp, 2) == 2
    assert is_cohen_macaulay(rp, 3)


def test_manifold_checks():
    t = build_complex(TORUS_7)
    assert is_homology_manifold(t, 2)
    s = suspension(t)
    assert serre_level(s, 2) >= 2 and not is_homology_manifold(s, 2)
    assert is_normal_pseudomanifold(s)


def test_trivial_cases():
    assert serre_level(void_complex()) == 0
    assert is_cohen_macaulay(simplex([1, 2, 3]))
    assert is_cohen_macaulay(boundary_of_simplex([1, 2, 3, 4]), 3)
    assert serre_level(build_complex([[1], [2]])) == 1


def test_satisfies_serre_reports_witness():
    check = satisfies_serre(build_complex(DELTA_S2), 3)
    assert not check and check.witness == Witness((6,), 1)
    assert satisfies_serre(build_complex(DELTA_S2), 2)


def test_report_json():
    doc = serre_report(build_complex(DELTA_A), 2).to_json()
    assert doc == {"p": 2, "serre_level": 1, "depth": 2, "cohen_macaulay": False,
                   "witness": {"face": [3], "i": 0}}


@given(complexes(max_n=6), primes)
def test_level_matches_definition(c, p):
    assert serre_level(c, p) == serre_level_oracle(faces_of(c.facets), p)


@given(complexes(max_n=6), primes)
def test_depth_matches_skeleton_characterization(c, p):
    assert depth_sr(c, p) == depth_oracle(faces_of(c.facets), p)


@given(pure_complexes(), primes)
def test_conditions_are_monotone(c, p):
    r = serre_level(c, p)
    for k in range(1, c.d + 1):
        assert bool(satisfies_serre(c, k, p)) == (k <= r)


@given(pure_complexes(max_n=6), primes)
def test_coning_preserves_level(c, p):
    assert serre_level(cone(c), p) == serre_level(c, p) + (serre_level(c, p) == c.d)
    assert depth_sr(cone(c), p) == depth_sr(c, p) + 1


@given(complexes(), primes)
def test_depth_bounds(c, p):
    rep = serre_report(c, p)
    assert 1 <= rep.depth <= c.d
    assert rep.is_cm == (rep.depth == c.d)
    assert rep.serre_level <= rep.depth or rep.serre_level == c.d
