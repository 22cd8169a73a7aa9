import pytest
from hypothesis import given, strategies as st

from oracles import pure_complexes
from serrekit.complex import boundary_of_simplex, build_complex, cone, is_pure
from serrekit.documents import complex_to_json, dumps, loads
from serrekit.errors import NotPure, ParameterError
from serrekit.fixtures import (DELTA_4, DELTA_A, DELTA_S2, GAMMA_S3, cross_polytope_boundary,
                               fixture)
from serrekit.monomial import MonomialIdeal, power_ideal, stanley_reisner_ideal
from serrekit.serre import serre_level
from serrekit.verify import (COMPLEX_CHECKS, CheckResult, VerificationReport, check_h_nonnegativity,
                             check_lex_bound, check_power_bound, check_swartz, check_tail_sum,
                             check_vanishing_rigidity, exhaustive_pure_complexes,
                             random_instances, random_monomial_ideal, random_pure_complex, replay,
                             search_sharpness, verify_complex, verify_fixtures)


def test_swartz_on_triangle_boundary():
    res = check_swartz(boundary_of_simplex([1, 2, 3]))
    assert res.passed and res.values["lhs"][0] == 3 == res.values["rhs"][0]


def test_swartz_requires_purity():
    with pytest.raises(NotPure):
        check_swartz(build_complex([[1, 2, 3], [3, 4]]))


def test_named_theorem_values():
    d = build_complex(DELTA_S2)
    assert check_h_nonnegativity(d).values["head"] == [1, 2, 3]
    tail = check_tail_sum(d)
    assert tail.passed and tail.values["tail"] == 6 and tail.values["facets"] == 9
    assert tail.values["facet_bound"] == 3
    g = check_tail_sum(build_complex(GAMMA_S3))
    assert g.values["tail"] == 3 and g.values["facet_bound"] == 6
    a = check_h_nonnegativity(build_complex(DELTA_A))
    assert a.passed and a.values["r"] == 1


def test_vanishing_rigidity_on_simplex_and_cones():
    from serrekit.complex import simplex
    res = check_vanishing_rigidity(simplex([1, 2, 3]))
    assert res.passed and res.values["t"] == 1
    c = cone(boundary_of_simplex([1, 2, 3]))
    res = check_vanishing_rigidity(c)
    assert res.passed and res.values["t"] == 3


def test_lex_bound_cases():
    gamma = check_lex_bound(stanley_reisner_ideal(build_complex(GAMMA_S3)))
    assert gamma.passed and gamma.values["r"] == 3
    principal = check_lex_bound(MonomialIdeal(2, ((1, 1),)))
    assert principal.passed
    assert check_lex_bound(stanley_reisner_ideal(cross_polytope_boundary(3))).passed


def test_power_bound_cases():
    d4 = stanley_reisner_ideal(build_complex(DELTA_4))
    assert check_power_bound(d4, 2, 1).passed
    assert check_power_bound(d4, 2, 2).passed is None  # level 1 < k
    eq = check_power_bound(power_ideal(3, 2), 2, 2)
    assert eq.passed and eq.values["eq_all"] and eq.values["cm_linear"]
    strict = check_power_bound(stanley_reisner_ideal(cross_polytope_boundary(3)), 2, 2)
    assert strict.passed and not strict.values["eq_some"] and not strict.values["cm_linear"]


def test_generators_are_deterministic():
    assert random_pure_complex(5, 7, 3, 6) == random_pure_complex(5, 7, 3, 6)
    assert random_monomial_ideal(2, 3, 3, 4) == random_monomial_ideal(2, 3, 3, 4)
    a = [c for _, c in random_instances(9, 5)]
    assert a == [c for _, c in random_instances(9, 5)]


@pytest.mark.parametrize("args", [(0, 3, 4, 1), (0, 4, 2, 7), (0, 6, 2, 2), (0, 3, 0, 1)])
def test_generator_parameter_errors(args):
    with pytest.raises(ParameterError):
        random_pure_complex(*args)


@given(st.integers(0, 10**6), st.integers(3, 8), st.integers(1, 3))
def test_random_complexes_cover_and_are_pure(seed, n, d):
    from math import comb
    m = max(-(-n // d), min(comb(n, d), n))
    c = random_pure_complex(seed, n, d, m)
    assert c.n == n and is_pure(c) and len(c.facets) == m


def test_exhaustive_count():
    # pure 1-dimensional complexes on [3] covering all vertices: graphs without isolated vertices
    assert sum(1 for _ in exhaustive_pure_complexes(3, 2)) == 4
    with pytest.raises(ParameterError):
        next(exhaustive_pure_complexes(7, 2))


def test_fixtures_pass():
    for rep in verify_fixtures():
        assert rep.passed, rep.to_json()
    assert fixture("delta-s2").name == "delta-s2"


@given(pure_complexes(), st.sampled_from([2, 3]))
def test_swartz_holds_universally(c, p):
    assert check_swartz(c, p).passed


@given(pure_complexes(max_n=7), st.sampled_from([2, 3]))
def test_all_checks_on_generated_complexes(c, p):
    rep = verify_complex(c, p)
    assert rep.passed, rep.to_json()


def test_failure_payload_replays_identically():
    failing = VerificationReport("x", 2, {"swartz": False}, {"swartz": {"lhs": [0]}},
                                 complex_to_json(build_complex(DELTA_A)))
    payload = loads_payload(failing.to_json())
    assert payload["theorems"] == ["swartz"]
    rep = replay(payload)
    again = replay(payload)
    assert rep.values == again.values
    assert rep.values["swartz"] == check_swartz(build_complex(DELTA_A)).values


def loads_payload(doc):
    import json
    return json.loads(dumps(doc))["counterexample"]


def test_report_only_carries_counterexample_on_failure():
    rep = verify_complex(build_complex(DELTA_S2), 2)
    assert rep.passed and "counterexample" not in rep.to_json()
    assert set(rep.checks) == set(COMPLEX_CHECKS)


def test_sharpness_findings_are_genuine():
    hits = list(search_sharpness(0, 120))
    assert hits
    for h in hits:
        c = loads(dumps(h["complex"]))
        assert serre_level(c, h["p"]) == h["serre_level"]
        assert h["h"][h["serre_level"] + 1] < 0


def test_check_result_truthiness():
    assert CheckResult("x", None) and CheckResult("x", True) and not CheckResult("x", False)
