from resint.algebra.cyclotomic import ONE
from resint.quantities.algorithm1 import alg1_compute
from resint.quantities.oracle import oracle_verify
from resint.quantities.tables import VTable
from resint.systems.sysspec import load_spec


def test_quadratic_family_satisfies_identity(quadratic):
    table, glist = alg1_compute(quadratic, 2)
    report = oracle_verify(quadratic, 2, table, glist)
    assert report.passed
    assert report.truncation == 9
    assert report.first_violation is None
    assert "N = 9" in report.header()


def test_s3_satisfies_identity(s3):
    table, glist = alg1_compute(s3, 3)
    assert oracle_verify(s3, 3, table, glist).passed


def test_corrupted_coefficient_is_detected(quadratic):
    table, glist = alg1_compute(quadratic, 2)
    entries = dict(table.entries)
    entries[(1, 0, 0)] = entries[(1, 0, 0)] + ONE
    broken = VTable(spec=quadratic, max_level=2, entries=entries)
    report = oracle_verify(quadratic, 2, broken, glist)
    assert not report.passed
    alpha, _ = report.first_violation
    assert sum(alpha) == 4


def test_wrong_quantity_is_detected(s3):
    table, glist = alg1_compute(s3, 2)
    glist.quantities[1] = glist.quantities[1] + ONE
    report = oracle_verify(s3, 2, table, glist)
    assert [alpha for alpha, _ in report.violations] == [(3, 3, 3)]


def test_point_spec_satisfies_identity(specs_dir):
    spec = load_spec(specs_dir / "a100_only.json")
    table, glist = alg1_compute(spec, 2)
    assert oracle_verify(spec, 2, table, glist).passed
