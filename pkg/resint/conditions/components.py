"""
Frozen generator data for the quadratic family

    x1' = x1 + a100 x1^2 + a010 x1 x2 + a001 x1 x3
    x2' = z (x2 + b100 x1 x2 + b010 x2^2 + b001 x2 x3)
    x3' = z^2 (x3 + c100 x1 x3 + c010 x2 x3 + c001 x3^2)

and for its subfamily b001 = c100 = 0, b010 = 1: the nine generators of the
ideal of z-reversible systems and the generators of the nine components of
the variety of g_111, ..., g_555.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from resint.algebra.cyclotomic import CycQ, ONE, ZERO, ZETA
from resint.algebra.polyring import ParamPoly
from resint.errors import DimensionMismatchError, SamplingError, ValidationError
from resint.systems.sysspec import SystemSpec, quadratic_family

logger = logging.getLogger(__name__)

QUADRATIC_NAMES = ("a100", "a010", "a001", "b010", "b001", "b100", "c001", "c100", "c010")
SUBFAMILY_FIXED = {"b001": ZERO, "c100": ZERO, "b010": ONE}
SUBFAMILY_FREE = ("a100", "a010", "a001", "b100", "c001", "c010")
COMPONENT_IDS = tuple(range(1, 10))
LINEARIZABLE_COMPONENTS = (1, 4, 5, 8, 9)

PointLike = Union[SystemSpec, Mapping[str, Any], Sequence[Any]]


@lru_cache(maxsize=None)
def _variables() -> Dict[str, ParamPoly]:
    spec = quadratic_family()
    return {alias: ParamPoly.variable(spec.param_index(alias), spec.nparams) for alias in QUADRATIC_NAMES}


@lru_cache(maxsize=None)
def izeta_generators() -> List[ParamPoly]:
    v = _variables()
    return [
        v["b010"] * v["b100"] - v["a100"] * v["c010"],
        v["b001"] * v["b100"] - v["a001"] * v["c100"],
        v["a010"] * v["b100"] - v["c010"] * v["c100"],
        v["b001"] * v["b010"] - v["a010"] * v["c001"],
        v["a001"] * v["b010"] - v["c001"] * v["c010"],
        v["a100"] * v["b001"] - v["c001"] * v["c100"],
        v["a010"] * v["a100"] - v["b010"] * v["c100"],
        v["a001"] * v["a100"] - v["b100"] * v["c001"],
        v["a001"] * v["a010"] - v["b001"] * v["c010"],
    ]


@lru_cache(maxsize=None)
def component_generators(component_id: int) -> List[ParamPoly]:
    """Generators of component J_id of the subfamily, as polynomials in the nine parameters"""
    if component_id not in COMPONENT_IDS:
        raise ValidationError(f"Component id must be in 1..9, got {component_id}")
    v = _variables()
    z1 = ZETA + 1
    generators = {
        1: [v["c001"], v["a001"]],
        2: [
            v["c010"] + ZETA,
            v["a010"] - 2 * ZETA - 1,
            v["a001"] * v["a100"] - ZETA * v["a001"] * v["b100"] + v["b100"] * v["c001"],
        ],
        3: [
            v["c010"] + ZETA,
            v["a001"] + ZETA * v["c001"],
            v["a010"] * v["a100"] - z1 * v["a100"] + ZETA * v["b100"],
        ],
        4: [v["b100"], v["a100"]],
        5: [v["b100"], v["a001"]],
        6: [
            v["a010"] * v["c001"] - z1 * v["c001"] * v["c010"] + z1 * v["a001"],
            v["a010"] * v["a100"] - z1 * v["a100"] * v["c010"] + z1 * v["b100"],
            v["a001"] * v["a100"] - v["b100"] * v["c001"],
        ],
        7: [v["c010"], v["a010"] * v["a100"] + z1 * v["b100"]],
        8: [v["c010"], v["a001"]],
        9: [v["b100"], v["a010"] - ZETA * v["c010"]],
    }
    return generators[component_id]


def quadratic_point(point: PointLike) -> List[CycQ]:
    """The nine parameter values in quadratic-family order"""
    if isinstance(point, SystemSpec):
        if point.s_set != quadratic_family().s_set:
            raise ValidationError(f"Expected the quadratic family, got S = {point.key()}")
        return point.point()
    if isinstance(point, Mapping):
        return quadratic_family(point).point()
    if len(point) != len(QUADRATIC_NAMES):
        raise DimensionMismatchError(f"Quadratic point needs 9 values, got {len(point)}")
    return [CycQ.coerce(value) for value in point]


def eval_izeta(point: PointLike) -> List[CycQ]:
    values = quadratic_point(point)
    return [generator.evaluate(values) for generator in izeta_generators()]


def eval_component(component_id: int, point: PointLike) -> List[CycQ]:
    values = quadratic_point(point)
    return [generator.evaluate(values) for generator in component_generators(component_id)]


def components_containing(point: PointLike) -> List[int]:
    values = quadratic_point(point)
    return [cid for cid in COMPONENT_IDS if not any(eval_component(cid, values))]


def system22_point(values: Mapping[str, Any]) -> SystemSpec:
    """
    Quadratic point of the subfamily b001 = c100 = 0, b010 = 1.

    Args:
        values: The six free parameters by name; the three fixed ones may be
                given too but must agree with the restriction
    """
    merged: Dict[str, CycQ] = {}
    for name, value in values.items():
        alias = name.replace("[", "").replace("]", "").replace(",", "").replace(" ", "")
        merged[alias] = CycQ.coerce(value)
    for name, fixed in SUBFAMILY_FIXED.items():
        if name in merged and merged[name] != fixed:
            raise ValidationError(f"{name} must be {fixed} in the subfamily, got {merged[name]}")
        merged[name] = fixed
    missing = [name for name in SUBFAMILY_FREE if name not in merged]
    if missing:
        raise ValidationError(f"Missing subfamily parameters: {', '.join(missing)}")
    return quadratic_family(merged)


def in_subfamily(spec: SystemSpec) -> bool:
    values = dict(zip(QUADRATIC_NAMES, quadratic_point(spec)))
    return all(values[name] == fixed for name, fixed in SUBFAMILY_FIXED.items())


class RationalPool:
    """Seeded draws of rationals p/q with |p| <= bound, 1 <= q <= bound"""

    def __init__(self, seed: int, bound: int = 9):
        if bound < 1:
            raise ValidationError(f"Pool bound must be >= 1, got {bound}")
        self.seed = seed
        self.bound = bound
        self.rng = np.random.default_rng(seed)

    def draw(self) -> CycQ:
        numerator = int(self.rng.integers(-self.bound, self.bound + 1))
        denominator = int(self.rng.integers(1, self.bound + 1))
        return CycQ(Fraction(numerator, denominator))

    def draw_nonzero(self) -> CycQ:
        while True:
            value = self.draw()
            if value:
                return value


def _solve_component(component_id: int, pool: RationalPool) -> Optional[Dict[str, CycQ]]:
    """One draw on J_id; None when a required denominator came out zero"""
    z = ZETA
    z1 = ZETA + 1
    p = {name: pool.draw() for name in SUBFAMILY_FREE}
    if component_id == 1:
        p["c001"] = ZERO
        p["a001"] = ZERO
    elif component_id == 2:
        p["c010"] = -z
        p["a010"] = 2 * z + 1
        if not p["b100"]:
            return None
        p["c001"] = p["a001"] * (z * p["b100"] - p["a100"]) / p["b100"]
    elif component_id == 3:
        p["c010"] = -z
        p["a001"] = -z * p["c001"]
        p["b100"] = p["a100"] * (z1 - p["a010"]) / z
    elif component_id == 4:
        p["b100"] = ZERO
        p["a100"] = ZERO
    elif component_id == 5:
        p["b100"] = ZERO
        p["a001"] = ZERO
    elif component_id == 6:
        p["a001"] = p["c001"] * (z1 * p["c010"] - p["a010"]) / z1
        p["b100"] = p["a100"] * (z1 * p["c010"] - p["a010"]) / z1
    elif component_id == 7:
        p["c010"] = ZERO
        p["b100"] = -p["a010"] * p["a100"] / z1
    elif component_id == 8:
        p["c010"] = ZERO
        p["a001"] = ZERO
    elif component_id == 9:
        p["b100"] = ZERO
        p["a010"] = z * p["c010"]
    return p


def sample_component(component_id: int, seed: int, pool_bound: int = 9, max_retries: int = 32) -> SystemSpec:
    """
    Exact point of the subfamily lying on component J_id.

    Free parameters are drawn from the rational pool; the dependent ones are
    solved from the generators in a fixed order. The point is re-verified by
    evaluating every generator.

    Args:
        component_id: 1..9
        seed: Seed of the rational pool
        pool_bound: Bound on numerators and denominators
        max_retries: Draws allowed before giving up

    Returns:
        Quadratic-family SystemSpec carrying the point
    """
    if component_id not in COMPONENT_IDS:
        raise ValidationError(f"Component id must be in 1..9, got {component_id}")
    pool = RationalPool(seed, pool_bound)
    logger.info(f"Sampling component J{component_id} with seed {seed}")
    for attempt in range(max_retries):
        values = _solve_component(component_id, pool)
        if values is None:
            logger.debug(f"J{component_id}: draw {attempt} hit a zero denominator, redrawing")
            continue
        spec = system22_point(values)
        residuals = eval_component(component_id, spec)
        if any(residuals):
            raise SamplingError(f"Sample on J{component_id} does not satisfy its generators: "
                                f"{[str(r) for r in residuals]}")
        return spec
    raise SamplingError(f"No valid sample on J{component_id} after {max_retries} draws (seed {seed})")


def generic_point(seed: int, pool_bound: int = 9) -> SystemSpec:
    """Subfamily point with all six free parameters drawn independently"""
    pool = RationalPool(seed, pool_bound)
    logger.info(f"Drawing a generic subfamily point with seed {seed}")
    return system22_point({name: pool.draw_nonzero() for name in SUBFAMILY_FREE})


def point_values(spec: SystemSpec) -> Dict[str, str]:
    """Parameter values by short name, as text"""
    return {name: str(value) for name, value in zip(QUADRATIC_NAMES, quadratic_point(spec))}


