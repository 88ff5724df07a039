"""
Brute-force check of the first-integral identity

    X(Psi) = sum_k g_kkk (x1 x2 x3)^(k+1)

with Psi = sum v_{k1,k2,k3} x1^(k1+1) x2^(k2+1) x3^(k3+1) truncated at phase
degree N = 3K + 3. Every nonlinear field monomial has degree at least 2, so the
degree-d part of X(Psi) only involves parts of Psi of degree <= d and the
identity must hold exactly in every degree <= N.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from resint.algebra.polyring import ParamPoly, PhaseExp, PhasePoly
from resint.quantities.algorithm1 import symbolic_atoms
from resint.quantities.tables import GList, VTable
from resint.systems.sysspec import SystemSpec, vector_field

logger = logging.getLogger(__name__)


@dataclass
class OracleReport:
    truncation: int
    min_triple_degree: int
    max_triple_degree: int
    guaranteed_degree: int
    violations: List[Tuple[PhaseExp, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[Tuple[PhaseExp, Any]]:
        return self.violations[0] if self.violations else None

    def header(self) -> str:
        return (f"truncation N = {self.truncation}, triple degrees {self.min_triple_degree}.."
                f"{self.max_triple_degree}, residual guaranteed zero through degree {self.guaranteed_degree}")


def oracle_verify(spec: SystemSpec, K: int, vt: VTable, g: GList) -> OracleReport:
    """
    Apply the vector field to the truncated first integral and compare with g.

    Args:
        spec: System specification the tables were computed for
        K: Level the tables were computed through
        vt: Coefficients v_{k1,k2,k3}
        g: Quantities g_111 ... g_KKK

    Returns:
        OracleReport listing every monomial of degree <= N whose residual
        coefficient is nonzero, lowest degree first
    """
    N = 3 * K + 3
    n = spec.nparams
    zero = ParamPoly.zero(n)
    report = OracleReport(truncation=N, min_triple_degree=spec.min_triple_degree(),
                          max_triple_degree=spec.max_triple_degree(), guaranteed_degree=N)

    psi_terms = {}
    for index, value in vt.entries.items():
        if sum(index) > 3 * K or not value:
            continue
        alpha = (index[0] + 1, index[1] + 1, index[2] + 1)
        if min(alpha) < 0:
            report.violations.append((alpha, value))
            continue
        psi_terms[alpha] = value
    psi = PhasePoly(psi_terms, N)

    field_components = vector_field(spec, symbolic_atoms(spec), one=ParamPoly.one(n), max_degree=N)
    residual = psi.apply_field(field_components)
    for k in range(1, min(K, len(g)) + 1):
        residual = residual - PhasePoly.monomial((k + 1, k + 1, k + 1), g[k], N)

    for alpha, coeff in residual.sorted_terms():
        if coeff != zero:
            report.violations.append((alpha, coeff))
    if report.passed:
        logger.info(f"Oracle passed: {report.header()}")
    else:
        alpha, coeff = report.first_violation
        logger.warning(f"Oracle found {len(report.violations)} violations, first at x^{alpha}: "
                       f"{coeff.format(spec.param_names) if isinstance(coeff, ParamPoly) else coeff}")
    return report
