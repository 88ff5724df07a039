from pathlib import Path

import pytest

from resint.systems.sysspec import SystemSpec, load_spec, quadratic_family

SPECS_DIR = Path(__file__).resolve().parent.parent / "specs"


@pytest.fixture
def specs_dir() -> Path:
    return SPECS_DIR


@pytest.fixture
def quadratic() -> SystemSpec:
    return quadratic_family()


@pytest.fixture
def s1() -> SystemSpec:
    return load_spec(SPECS_DIR / "s1.json")


@pytest.fixture
def s2() -> SystemSpec:
    return load_spec(SPECS_DIR / "s2.json")


@pytest.fixture
def s3() -> SystemSpec:
    return load_spec(SPECS_DIR / "s3.json")


@pytest.fixture
def random_values():
    return {
        "a100": "2/3", "a010": "-1/2", "a001": "3/7",
        "b010": "1", "b001": "0", "b100": "5/4",
        "c001": "-2/5", "c100": "0", "c010": "1/3 + 1/2*z",
    }
