import logging
from fractions import Fraction

import pytest

from resint.algebra.cyclotomic import ONE, ZERO, ZETA, CycQ
from resint.conditions.components import (COMPONENT_IDS, QUADRATIC_NAMES, SUBFAMILY_FREE, RationalPool,
                                          component_generators, components_containing, eval_component,
                                          eval_izeta, generic_point, in_subfamily, izeta_generators,
                                          point_values, quadratic_point, sample_component, system22_point)
from resint.conditions.necessary import check_necessary_conditions
from resint.conditions.reversibility import RevMatrix, check_equivariance, reversible_point
from resint.errors import DimensionMismatchError, SamplingError, ValidationError
from resint.systems.sysspec import SystemSpec, l_map, load_spec, quadratic_family

ZERO_SUBFAMILY = {"a100": 0, "a010": 0, "a001": 0, "b100": 0, "c001": 0, "c010": 0}


def test_izeta_generators_are_l_homogeneous(quadratic):
    generators = izeta_generators()
    assert len(generators) == 9
    for generator in generators:
        assert generator.term_count() == 2
        assert len({l_map(quadratic, nu) for nu in generator.terms}) == 1


def test_component_generator_counts():
    assert [len(component_generators(cid)) for cid in COMPONENT_IDS] == [2, 3, 3, 2, 2, 3, 2, 2, 2]
    with pytest.raises(ValidationError):
        component_generators(10)


def test_izeta_at_points(specs_dir, random_values):
    assert not any(eval_izeta(load_spec(specs_dir / "a100_only.json")))
    values = eval_izeta(random_values)
    assert values[0] == CycQ(Fraction(5, 4) - Fraction(2, 9), Fraction(-1, 3))


def test_quadratic_point_forms(random_values):
    spec = quadratic_family(random_values)
    assert quadratic_point(spec) == quadratic_point(random_values)
    assert quadratic_point(list(range(9)))[8] == CycQ(8)
    with pytest.raises(DimensionMismatchError):
        quadratic_point([1, 2])
    with pytest.raises(ValidationError):
        quadratic_point(SystemSpec.from_triples([(1, 0, 0), (0, 0, 1)]).with_values([0] * 6))


def test_system22_point():
    spec = system22_point({"a[1,0,0]": "1/2", "a010": 0, "a001": 0, "b100": 0, "c001": 0, "c010": 0})
    assert in_subfamily(spec)
    assert point_values(spec)["b010"] == "1"
    assert point_values(spec)["a100"] == "1/2"
    with pytest.raises(ValidationError):
        system22_point({**ZERO_SUBFAMILY, "b010": 2})
    with pytest.raises(ValidationError):
        system22_point({"a100": 1})


def test_components_of_zero_subfamily_point():
    assert components_containing(system22_point(ZERO_SUBFAMILY)) == [1, 4, 5, 6, 7, 8, 9]


def test_generic_point_lies_on_no_component(random_values):
    assert components_containing(random_values) == []
    report = check_necessary_conditions(quadratic_family(random_values), K=2)
    assert report.g_values[0] != ZERO
    assert report.first_nonzero_g == 1
    assert not report.izeta_zero


def test_rational_pool_is_deterministic():
    first, second = RationalPool(7), RationalPool(7)
    draws = [first.draw() for _ in range(20)]
    assert draws == [second.draw() for _ in range(20)]
    assert all(abs(d.re.numerator) <= 9 and d.re.denominator <= 9 and d.ze == 0 for d in draws)
    assert RationalPool(3).draw_nonzero() != ZERO
    with pytest.raises(ValidationError):
        RationalPool(0, bound=0)


@pytest.mark.parametrize("component", COMPONENT_IDS)
def test_samples_lie_on_their_component(component):
    spec = sample_component(component, seed=0)
    assert in_subfamily(spec)
    assert not any(eval_component(component, spec))
    assert component in components_containing(spec)


def test_sampled_values_of_simple_components():
    j1 = point_values(sample_component(1, seed=5))
    assert j1["a001"] == "0" and j1["c001"] == "0"
    j4 = point_values(sample_component(4, seed=5))
    assert j4["a100"] == "0" and j4["b100"] == "0"
    values = dict(zip(QUADRATIC_NAMES, quadratic_point(sample_component(9, seed=5))))
    assert values["b100"] == ZERO
    assert values["a010"] == ZETA * values["c010"]


def test_sampling_rejects_unknown_component():
    with pytest.raises(ValidationError):
        sample_component(0, seed=0)


def test_sampling_gives_up(monkeypatch):
    monkeypatch.setattr("resint.conditions.components._solve_component", lambda component_id, pool: None)
    with pytest.raises(SamplingError):
        sample_component(2, seed=0, max_retries=3)


@pytest.mark.parametrize("component", COMPONENT_IDS)
def test_quantities_vanish_on_components(component):
    report = check_necessary_conditions(sample_component(component, seed=2), K=3)
    assert report.all_g_vanish
    assert report.first_nonzero_g is None
    assert component in report.components_satisfied


@pytest.mark.slow
@pytest.mark.parametrize("component", COMPONENT_IDS)
def test_quantities_vanish_through_level_five(component):
    for seed in range(10):
        assert check_necessary_conditions(sample_component(component, seed=seed), K=5).all_g_vanish


def test_generic_subfamily_point():
    spec = generic_point(seed=11)
    assert in_subfamily(spec)
    values = dict(zip(QUADRATIC_NAMES, quadratic_point(spec)))
    assert all(values[name] != ZERO for name in SUBFAMILY_FREE)


def test_rev_matrix():
    matrix = RevMatrix.from_pair(2, 3)
    assert matrix.gamma == CycQ(Fraction(1, 6))
    assert RevMatrix(ZETA, ZETA, ZETA).alpha == ZETA
    with pytest.raises(ValidationError):
        RevMatrix(1, 1, 2)


def test_linear_part_is_reversible_but_not_equivariant():
    spec = quadratic_family().with_values([0] * 9)
    matrix = RevMatrix.from_pair(2, 3)
    assert not any(check_equivariance(spec, matrix))
    assert any(check_equivariance(spec, matrix, twist=ONE))


@pytest.mark.parametrize("seed", range(20))
def test_reversible_points(seed):
    spec, matrix = reversible_point(seed)
    assert not any(check_equivariance(spec, matrix))
    assert not any(eval_izeta(spec))
    assert check_necessary_conditions(spec, K=3).all_g_vanish


def test_reversible_point_quantities_vanish(caplog):
    spec, _ = reversible_point(seed=4)
    with caplog.at_level(logging.WARNING, logger="resint"):
        report = check_necessary_conditions(spec, K=3)
    assert report.all_g_vanish
    assert report.izeta_zero
    assert not report.in_subfamily
    assert "outside the subfamily" in caplog.text


def test_random_point_is_not_reversible(random_values):
    spec = quadratic_family(random_values)
    assert any(check_equivariance(spec, RevMatrix.from_pair(2, 3)))
