"""
Truncated distinguished normal form of a system at a concrete parameter point.

Under x = y + h(y) the system becomes

    y1' = y1 + y1 Y1(y1 y2 y3),  y2' = z y2 + y2 Y2(y1 y2 y3),  y3' = z^2 y3 + y3 Y3(y1 y2 y3),

where h carries no resonant monomial. The homological equation is solved
degree by degree: at degree d the coefficient of y^alpha in component m is

    T = [N_m(y + h)]_(d, alpha) - [Dh_m . G]_(d, alpha)

with N_m the nonlinear part of the field and G the normal-form terms found so
far. Resonant pairs move T into G, the others give h = T / ((alpha, kappa) - kappa_m).
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from resint.algebra.cyclotomic import CycQ, KAPPA, ONE, ZERO, eval_divisor
from resint.algebra.polyring import PhaseExp, PhasePoly, grlex_key
from resint.errors import MissingValuesError, NormalFormError
from resint.systems.sysspec import SystemSpec, nonlinear_terms, vector_field

logger = logging.getLogger(__name__)

Homogeneous = Dict[PhaseExp, CycQ]

UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass
class ResonantSeries:
    """Resonant coefficients Y_m at levels k = 1..K"""

    y1: List[CycQ]
    y2: List[CycQ]
    y3: List[CycQ]
    order: int

    def __post_init__(self):
        if not len(self.y1) == len(self.y2) == len(self.y3):
            raise NormalFormError("Resonant series components must have equal length")

    @property
    def K(self) -> int:
        return len(self.y1)

    def components(self) -> Tuple[List[CycQ], List[CycQ], List[CycQ]]:
        return self.y1, self.y2, self.y3

    def linear_equations(self) -> List[int]:
        """Equations (1-based) whose Y vanishes through the computed order"""
        return [m + 1 for m, levels in enumerate(self.components()) if not any(levels)]

    @property
    def linear_through_order(self) -> bool:
        return len(self.linear_equations()) == 3

    @property
    def integrable_through_order(self) -> bool:
        return not any(integrability_residual(self))


@dataclass
class NormalizingMap:
    """Distinguished normalizing transformation x = y + h(y)"""

    h: Tuple[PhasePoly, PhasePoly, PhasePoly]
    order: int

    def resonant_terms(self) -> List[Tuple[int, PhaseExp]]:
        return [(m + 1, alpha) for m, component in enumerate(self.h)
                for alpha in component.terms if is_resonant(alpha, m + 1)]

    def term_count(self) -> int:
        return sum(len(component.terms) for component in self.h)


def _structurally_resonant(alpha: Sequence[int], m: int) -> bool:
    base = list(alpha)
    base[m - 1] -= 1
    return base[0] == base[1] == base[2] >= 1


def is_resonant(alpha: Sequence[int], m: int) -> bool:
    """
    Whether x^alpha in equation m (1, 2 or 3) is resonant, i.e. alpha = (k,k,k) + e_m, k >= 1.

    With debug logging enabled the answer is cross-checked against the exact
    divisor (alpha, kappa) - kappa_m.
    """
    if m not in (1, 2, 3):
        raise ValueError(f"Equation index must be 1, 2 or 3, got {m}")
    resonant = _structurally_resonant(alpha, m)
    if logger.isEnabledFor(logging.DEBUG) and sum(alpha) >= 2:
        exact = not (eval_divisor(*alpha) - KAPPA[m - 1])
        if exact != resonant:
            raise NormalFormError(f"Resonance tests disagree for alpha = {tuple(alpha)}, m = {m}")
    return resonant


def _accumulate_product(acc: Homogeneous, left: Homogeneous, right: Homogeneous) -> None:
    for a1, c1 in left.items():
        for a2, c2 in right.items():
            alpha = (a1[0] + a2[0], a1[1] + a2[1], a1[2] + a2[2])
            product = c1 * c2
            current = acc.get(alpha)
            acc[alpha] = product if current is None else current + product


def _product_plan(exponents) -> Dict[PhaseExp, Tuple[int, PhaseExp]]:
    """For each monomial of degree >= 2 (and its prefixes), the split x^beta = x_i * x^(beta - e_i)"""
    plan: Dict[PhaseExp, Tuple[int, PhaseExp]] = {}
    pending = list(exponents)
    while pending:
        beta = pending.pop()
        if sum(beta) < 2 or beta in plan:
            continue
        i = next(i for i in range(3) if beta[i])
        parent = list(beta)
        parent[i] -= 1
        parent = tuple(parent)
        plan[beta] = (i, parent)
        pending.append(parent)
    return plan


def compute_normal_form(spec: SystemSpec, D: int = 22,
                        verify: bool = False) -> Tuple[ResonantSeries, NormalizingMap]:
    """
    Normalize the system at the spec's parameter point through degree D.

    Args:
        spec: System specification carrying all 3l parameter values
        D: Truncation degree, at least 4; K = floor((D - 1) / 3) levels are returned
        verify: Run the reconstruction self-test afterwards

    Returns:
        (ResonantSeries, NormalizingMap)
    """
    if not spec.has_full_values:
        raise MissingValuesError(
            f"Normal form needs all parameter values; missing {', '.join(spec.missing_parameters())}")
    if D < 4:
        raise NormalFormError(f"Order D = {D} contains no resonant level, need D >= 4")
    started = time.perf_counter()
    K = (D - 1) // 3
    point = spec.point()

    # nonlinear part of each equation as (monomial, kappa_m * parameter)
    forcing: List[List[Tuple[PhaseExp, CycQ]]] = [[], [], []]
    for m, terms in enumerate(nonlinear_terms(spec)):
        for index, beta in terms:
            coeff = point[index] * KAPPA[m]
            if coeff:
                forcing[m].append((beta, coeff))
    plan = _product_plan(beta for terms in forcing for beta, _ in terms)

    # graded parts [x_i]_d of x = y + h and [x^beta]_d of the needed products
    x_parts: List[List[Homogeneous]] = [[{}, {UNIT[i]: ONE}] + [{} for _ in range(D - 1)] for i in range(3)]
    node_parts: Dict[PhaseExp, List[Homogeneous]] = {beta: [{} for _ in range(D + 1)] for beta in plan}
    resonant: List[Homogeneous] = [{}, {}, {}]

    def part(beta: PhaseExp, d: int) -> Homogeneous:
        if sum(beta) == 1:
            return x_parts[beta.index(1)][d]
        return node_parts[beta][d]

    for d in range(2, D + 1):
        for beta, (i, parent) in plan.items():
            acc: Homogeneous = {}
            for j in range(1, d - sum(parent) + 1):
                _accumulate_product(acc, x_parts[i][j], part(parent, d - j))
            node_parts[beta][d] = {a: c for a, c in acc.items() if c}

        for m in range(3):
            rhs: Homogeneous = {}
            for beta, coeff in forcing[m]:
                for alpha, value in part(beta, d).items():
                    current = rhs.get(alpha)
                    rhs[alpha] = value * coeff if current is None else current + value * coeff
            for i in range(3):
                for gamma, y in resonant[i].items():
                    hd = d - sum(gamma) + 1
                    if hd < 2:
                        continue
                    for beta, coeff in x_parts[m][hd].items():
                        if not beta[i]:
                            continue
                        alpha = (beta[0] - UNIT[i][0] + gamma[0], beta[1] - UNIT[i][1] + gamma[1],
                                 beta[2] - UNIT[i][2] + gamma[2])
                        rhs[alpha] = rhs.get(alpha, ZERO) - coeff * y * beta[i]

            for alpha in sorted(rhs, key=grlex_key):
                value = rhs[alpha]
                if not value:
                    continue
                if is_resonant(alpha, m + 1):
                    resonant[m][alpha] = value
                else:
                    x_parts[m][d][alpha] = value / (eval_divisor(*alpha) - KAPPA[m])
        logger.debug(f"degree {d}: h terms {[len(x_parts[m][d]) for m in range(3)]}")

    levels = [[resonant[m].get(tuple(k + (1 if i == m else 0) for i in range(3)), ZERO)
               for k in range(1, K + 1)] for m in range(3)]
    series = ResonantSeries(y1=levels[0], y2=levels[1], y3=levels[2], order=D)
    h = tuple(
        PhasePoly({alpha: c for d in range(2, D + 1) for alpha, c in x_parts[m][d].items()}, D)
        for m in range(3)
    )
    nmap = NormalizingMap(h=h, order=D)
    logger.info(f"Normal form through degree {D} ({K} resonant levels) in "
                f"{time.perf_counter() - started:.3f} s, {nmap.term_count()} h terms")
    if verify:
        verify_normal_form(spec, series, nmap, D)
    return series, nmap


def integrability_residual(rs: ResonantSeries) -> List[CycQ]:
    """(Y1 + Y2 + Y3) at levels k = 1..K"""
    return [a + b + c for a, b, c in zip(rs.y1, rs.y2, rs.y3)]


def first_nonzero_level(values: Sequence[CycQ]) -> Optional[int]:
    """1-based position of the first nonzero entry, None if all vanish"""
    return next((k for k, value in enumerate(values, start=1) if value), None)


def _phase_power(x: Sequence[PhasePoly], beta: Sequence[int], D: int) -> PhasePoly:
    result = PhasePoly({(0, 0, 0): ONE}, D)
    for i, exponent in enumerate(beta):
        for _ in range(exponent):
            result = result * x[i]
    return result


def verify_normal_form(spec: SystemSpec, series: ResonantSeries, nmap: NormalizingMap, D: int) -> None:
    """
    Check F(y + h(y)) = (I + Dh(y)) (Lambda y + G(y)) through degree D with full
    truncated products.

    Raises:
        NormalFormError: On the first differing coefficient
    """
    point = spec.point()
    field_components = vector_field(spec, point, ONE, max_degree=D)
    x = [PhasePoly.monomial(UNIT[i], ONE, D) + nmap.h[i].with_max_degree(D) for i in range(3)]

    normal = []
    for m, levels in enumerate(series.components()):
        terms = {UNIT[m]: KAPPA[m]}
        for k, y in enumerate(levels, start=1):
            terms[tuple(k + (1 if i == m else 0) for i in range(3))] = y
        normal.append(PhasePoly(terms, D))

    for m in range(3):
        lhs = PhasePoly({}, D)
        for beta, coeff in field_components[m].terms.items():
            lhs = lhs + _phase_power(x, beta, D).scale(coeff)
        rhs = normal[m] + nmap.h[m].with_max_degree(D).apply_field(normal)
        difference = lhs - rhs
        if difference:
            alpha, value = difference.sorted_terms()[0]
            raise NormalFormError(
                f"Reconstruction failed in equation {m + 1} at y^{alpha}: difference {value}")
    logger.info(f"Normal form reconstruction verified through degree {D}")


@dataclass
class DivisorScan:
    max_order: int
    checked: int = 0
    min_norm: Optional[Fraction] = None
    witnesses: Dict[int, PhaseExp] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.min_norm is None or self.min_norm >= 1


def scan_small_divisors(max_order: int = 30) -> DivisorScan:
    """
    Exact norms of all nonresonant divisors (alpha, kappa) - kappa_m, 2 <= |alpha| <= max_order.

    Returns:
        DivisorScan with the minimum norm and, for each m, the first alpha in
        graded-lex order whose divisor has norm exactly 1
    """
    scan = DivisorScan(max_order=max_order)
    for degree in range(2, max_order + 1):
        for a1 in range(degree, -1, -1):
            for a2 in range(degree - a1, -1, -1):
                alpha = (a1, a2, degree - a1 - a2)
                for m in (1, 2, 3):
                    if _structurally_resonant(alpha, m):
                        continue
                    norm = (eval_divisor(*alpha) - KAPPA[m - 1]).norm()
                    scan.checked += 1
                    if scan.min_norm is None or norm < scan.min_norm:
                        scan.min_norm = norm
                    if norm == 1 and m not in scan.witnesses:
                        scan.witnesses[m] = alpha
    logger.info(f"Scanned {scan.checked} divisors through order {max_order}, minimum norm {scan.min_norm}")
    return scan
