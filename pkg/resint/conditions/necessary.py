import logging
from dataclasses import dataclass, field
from typing import Dict, List

from resint.algebra.cyclotomic import CycQ
from resint.conditions.components import components_containing, eval_izeta, in_subfamily, point_values
from resint.quantities.algorithm1 import alg1_evaluate
from resint.systems.sysspec import SystemSpec

logger = logging.getLogger(__name__)


@dataclass
class NecessaryConditionsReport:
    point: Dict[str, str]
    components_satisfied: List[int]
    g_values: List[CycQ]
    izeta_zero: bool
    in_subfamily: bool = True
    izeta_values: List[CycQ] = field(default_factory=list)

    @property
    def all_g_vanish(self) -> bool:
        return not any(self.g_values)

    @property
    def first_nonzero_g(self):
        return next((k for k, g in enumerate(self.g_values, start=1) if g), None)


def check_necessary_conditions(point: SystemSpec, K: int = 5) -> NecessaryConditionsReport:
    """
    Evaluate g_111 ... g_KKK and the component generators at a quadratic point.

    Args:
        point: Quadratic-family spec carrying all nine values, normally on the
               subfamily b001 = c100 = 0, b010 = 1
        K: Number of quantities to evaluate

    Returns:
        NecessaryConditionsReport
    """
    subfamily = in_subfamily(point)
    if not subfamily:
        logger.warning("Point is outside the subfamily b001 = c100 = 0, b010 = 1; "
                       "component membership is reported for reference only")
    _, glist = alg1_evaluate(point, K)
    izeta = eval_izeta(point)
    report = NecessaryConditionsReport(
        point=point_values(point),
        components_satisfied=components_containing(point),
        g_values=list(glist),
        izeta_zero=not any(izeta),
        in_subfamily=subfamily,
        izeta_values=izeta,
    )
    logger.debug(f"Components {report.components_satisfied}, g vanish: {report.all_g_vanish}")
    return report
