import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from resint.algebra.cyclotomic import CycQ, ONE, ZERO, ZETA
from resint.algebra.polyring import PhaseExp, grlex_key
from resint.conditions.components import RationalPool
from resint.errors import MissingValuesError, ValidationError
from resint.systems.sysspec import SystemSpec, quadratic_family, vector_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RevMatrix:
    """A = [[0, alpha, 0], [0, 0, beta], [gamma, 0, 0]] with alpha * beta * gamma = 1"""

    alpha: CycQ
    beta: CycQ
    gamma: CycQ

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, CycQ.coerce(getattr(self, name)))
        if self.alpha * self.beta * self.gamma != ONE:
            raise ValidationError(
                f"RevMatrix needs alpha * beta * gamma = 1, got {self.alpha * self.beta * self.gamma}")

    @classmethod
    def from_pair(cls, alpha, beta) -> "RevMatrix":
        alpha, beta = CycQ.coerce(alpha), CycQ.coerce(beta)
        return cls(alpha, beta, (alpha * beta).inv())


def _apply_to_monomial(A: RevMatrix, beta: PhaseExp) -> Tuple[PhaseExp, CycQ]:
    # x^beta evaluated at Ax = (alpha x2, beta x3, gamma x1)
    scale = A.alpha ** beta[0] * A.beta ** beta[1] * A.gamma ** beta[2]
    return (beta[2], beta[0], beta[1]), scale


def check_equivariance(spec: SystemSpec, A: RevMatrix, twist: CycQ = ZETA) -> List[CycQ]:
    """
    Coefficient differences of A F(x) - twist F(A x).

    With the default twist z an all-zero result means the system is
    z-reversible with this A; twist 1 tests equivariance instead.

    Returns:
        One residual per (component, monomial) occurring on either side, by
        component and then graded-lex order
    """
    if not spec.has_full_values:
        raise MissingValuesError(
            f"Reversibility check needs all parameter values; missing {', '.join(spec.missing_parameters())}")
    twist = CycQ.coerce(twist)
    field = vector_field(spec, spec.point(), ONE)
    row_factors = (A.alpha, A.beta, A.gamma)
    residuals: List[CycQ] = []
    for i in range(3):
        # row i of A picks component (i + 1) mod 3 of F
        sides: Dict[PhaseExp, CycQ] = {}
        for alpha, coeff in field[(i + 1) % 3].terms.items():
            sides[alpha] = sides.get(alpha, ZERO) + row_factors[i] * coeff
        for beta, coeff in field[i].terms.items():
            image, scale = _apply_to_monomial(A, beta)
            sides[image] = sides.get(image, ZERO) - twist * coeff * scale
        residuals.extend(sides[alpha] for alpha in sorted(sides, key=grlex_key))
    return residuals


def reversible_point(seed: int, pool_bound: int = 9) -> Tuple[SystemSpec, RevMatrix]:
    """
    Quadratic point built through the chain of the z-reversibility ideal.

    a100, a010, a001, alpha, beta are drawn, gamma = 1 / (alpha beta), and

        b010 = z alpha a100, b001 = z beta a010, b100 = z gamma a001,
        c010 = z alpha b100, c001 = z beta b010, c100 = z gamma b001.

    The chain closes because z^3 alpha beta gamma = 1.

    Returns:
        The point and the RevMatrix (z alpha, z beta, z gamma) it is z-reversible under
    """
    pool = RationalPool(seed, pool_bound)
    logger.info(f"Drawing a reversible quadratic point with seed {seed}")
    a100, a010, a001 = pool.draw(), pool.draw(), pool.draw()
    alpha, beta = pool.draw_nonzero(), pool.draw_nonzero()
    gamma = (alpha * beta).inv()
    za, zb, zg = ZETA * alpha, ZETA * beta, ZETA * gamma
    b010, b001, b100 = za * a100, zb * a010, zg * a001
    c010, c001, c100 = za * b100, zb * b010, zg * b001
    spec = quadratic_family({
        "a100": a100, "a010": a010, "a001": a001,
        "b010": b010, "b001": b001, "b100": b100,
        "c010": c010, "c001": c001, "c100": c100,
    })
    return spec, RevMatrix(za, zb, zg)
