import pytest

from serrekit.errors import InputError
from serrekit.fixtures import FIXTURES, evaluate_fact, fixture

CASES = [(name, fact) for name, fx in sorted(FIXTURES.items()) for fact in fx.facts]


@pytest.mark.parametrize("name,fact", CASES,
                         ids=[f"{n}-{f.key}-p{f.p}-{f.arg}" for n, f in CASES])
def test_fact(name, fact):
    actual, ok = evaluate_fact(FIXTURES[name], fact)
    assert ok, (actual, fact)


def test_every_fact_is_tagged():
    for fx in FIXTURES.values():
        assert fx.complex.name == fx.name
        for fact in fx.facts:
            assert fact.provenance in {"literature", "derived", "trivial"}


def test_unknown_fixture():
    with pytest.raises(InputError):
        fixture("klein-bottle")
