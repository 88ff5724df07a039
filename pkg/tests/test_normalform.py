import logging
from itertools import product

import pytest

from resint.algebra.cyclotomic import KAPPA, ONE, ZERO, eval_divisor
from resint.conditions.components import sample_component, system22_point
from resint.conditions.reversibility import reversible_point
from resint.errors import MissingValuesError, NormalFormError
from resint.normalform.normal_form import (ResonantSeries, compute_normal_form, first_nonzero_level,
                                           integrability_residual, is_resonant, scan_small_divisors)
from resint.systems.sysspec import load_spec


@pytest.mark.parametrize("alpha, m, expected", [
    ((2, 1, 1), 1, True),
    ((2, 1, 1), 2, False),
    ((1, 2, 1), 2, True),
    ((3, 3, 4), 3, True),
    ((1, 1, 1), 1, False),
    ((2, 0, 0), 1, False),
    ((1, 0, 0), 1, False),
])
def test_is_resonant(alpha, m, expected):
    assert is_resonant(alpha, m) is expected


def test_is_resonant_rejects_bad_equation():
    with pytest.raises(ValueError):
        is_resonant((2, 1, 1), 4)


def test_structural_and_exact_resonance_agree(caplog):
    caplog.set_level(logging.DEBUG, logger="resint")
    for alpha in product(range(13), repeat=3):
        if not 2 <= sum(alpha) <= 12:
            continue
        for m in (1, 2, 3):
            exact = not (eval_divisor(*alpha) - KAPPA[m - 1])
            assert is_resonant(alpha, m) is exact


def test_small_divisors():
    scan = scan_small_divisors(30)
    assert scan.passed
    assert scan.min_norm == 1
    assert scan.witnesses == {1: (2, 0, 0), 2: (1, 1, 0), 3: (1, 0, 1)}
    assert scan.checked > 0


def test_zero_system_is_linear(specs_dir):
    series, nmap = compute_normal_form(load_spec(specs_dir / "zero.json"), 22)
    assert series.K == 7
    assert series.linear_through_order
    assert nmap.term_count() == 0


def test_one_dimensional_linearization(specs_dir):
    # x1' = x1 + x1^2 is linearized by x1 = y1 / (1 - y1)
    series, nmap = compute_normal_form(load_spec(specs_dir / "a100_only.json"), 10, verify=True)
    assert series.linear_through_order
    h1, h2, h3 = nmap.h
    assert all(h1.coefficient((n, 0, 0)) == ONE for n in range(2, 11))
    assert len(h1.terms) == 9
    assert not h2 and not h3


def test_distinguished_map_has_no_resonant_terms(quadratic, random_values):
    series, nmap = compute_normal_form(quadratic.with_values(random_values), 10)
    assert nmap.resonant_terms() == []
    assert series.K == 3


def test_reconstruction_at_generic_point(quadratic, random_values):
    compute_normal_form(quadratic.with_values(random_values), 8, verify=True)


def test_generic_point_is_not_integrable(quadratic, random_values):
    series, _ = compute_normal_form(quadratic.with_values(random_values), 7)
    assert not series.integrable_through_order
    assert first_nonzero_level(integrability_residual(series)) is not None


def test_reversible_point_is_integrable():
    spec, _ = reversible_point(seed=3)
    series, _ = compute_normal_form(spec, 10)
    assert series.integrable_through_order


def test_linearizable_component():
    series, _ = compute_normal_form(sample_component(1, seed=0), 10)
    assert series.linear_through_order


def test_integrability_residual():
    series = ResonantSeries(y1=[ONE, ZERO], y2=[-ONE, ONE], y3=[ZERO, ZERO], order=7)
    assert integrability_residual(series) == [ZERO, ONE]
    assert first_nonzero_level(integrability_residual(series)) == 2
    assert series.linear_equations() == [3]


def test_mismatched_series():
    with pytest.raises(NormalFormError):
        ResonantSeries(y1=[ONE], y2=[], y3=[ONE], order=4)


def test_order_too_small(specs_dir):
    with pytest.raises(NormalFormError):
        compute_normal_form(load_spec(specs_dir / "zero.json"), 3)


def test_needs_all_values(quadratic):
    with pytest.raises(MissingValuesError):
        compute_normal_form(quadratic, 7)


def test_subfamily_point_normal_form():
    spec = system22_point({"a100": 0, "a010": 0, "a001": 0, "b100": 0, "c001": 0, "c010": 0})
    series, _ = compute_normal_form(spec, 10, verify=True)
    assert series.linear_through_order


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("component", [1, 4, 5, 8, 9])
def test_linearizable_components_through_default_order(component, seed):
    series, _ = compute_normal_form(sample_component(component, seed=seed), 22)
    assert series.K == 7
    assert series.linear_through_order


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("component", [2, 3, 6, 7])
def test_integrable_components_through_default_order(component, seed, record_property):
    series, _ = compute_normal_form(sample_component(component, seed=seed), 22)
    assert series.K == 7
    assert series.integrable_through_order
    # which equations are already linear is reported, not asserted
    record_property("linear_equations", series.linear_equations())
