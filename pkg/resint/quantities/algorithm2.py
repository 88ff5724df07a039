"""
Coefficient-wise computation of g_kkk.

V(nu) is the coefficient of the parameter monomial [nu] in v_{L(nu)}; it depends
on S only through the shift triples, so g_kkk is assembled one support
monomial at a time from memoized values of V.
"""

import logging
import time
from typing import Iterator, List, Optional, Tuple

from resint.algebra.cyclotomic import CycQ, KAPPA, ONE, ZERO, eval_divisor
from resint.algebra.polyring import ExpVec, ParamPoly
from resint.errors import ValidationError
from resint.quantities.tables import GList, VCache
from resint.systems.sysspec import LValue, SystemSpec, l_map

logger = logging.getLogger(__name__)


def _predecessor_sum(spec: SystemSpec, nu: ExpVec, lvalue: LValue, cache: VCache) -> CycQ:
    """sum_j V(nu - e_j) * (L_m(nu - e_j) + 1) * z^m, m the block of parameter j"""
    total = ZERO
    for j, count in enumerate(nu):
        if not count:
            continue
        block = spec.block_of(j)
        multiplier = lvalue[block] - spec.shifts[j][block] + 1
        if multiplier == 0:
            continue
        previous = list(nu)
        previous[j] -= 1
        value = alg2_coefficient(spec, tuple(previous), cache)
        if value:
            total = total + value * (KAPPA[block] * multiplier)
    return total


def alg2_coefficient(spec: SystemSpec, nu: ExpVec, cache: VCache) -> CycQ:
    """
    V(nu), memoized in cache.

    Args:
        spec: System specification (only S is used)
        nu: Exponent vector of length 3l
        cache: Memo shared across calls of one run

    Returns:
        V(nu) as a CycQ
    """
    nu = tuple(nu)
    cached = cache.get(nu)
    if cached is not None:
        return cached
    lvalue = l_map(spec, nu)
    if not any(nu):
        return cache.get_or_insert(nu, lambda: ONE)
    if lvalue[0] == lvalue[1] == lvalue[2]:
        return cache.get_or_insert(nu, lambda: ZERO)

    def compute() -> CycQ:
        return -_predecessor_sum(spec, nu, lvalue, cache) / eval_divisor(*lvalue)

    return cache.get_or_insert(nu, compute)


def _suffix_negatives(shifts) -> List[Tuple[bool, bool, bool]]:
    """For each position j, whether some shift at position >= j has a negative coordinate i"""
    flags = [(False, False, False)] * (len(shifts) + 1)
    for j in range(len(shifts) - 1, -1, -1):
        after = flags[j + 1]
        flags[j] = tuple(after[i] or shifts[j][i] < 0 for i in range(3))
    return flags


def enumerate_supports(spec: SystemSpec, k: int) -> Iterator[ExpVec]:
    """
    All nu with L(nu) = (k, k, k), in lexicographic order.

    L1 + L2 + L3 is the weighted size sum_j nu_j * |shift_j| and has to reach
    exactly 3k. A coordinate of L moves by at most twice the remaining weight
    upwards, and downwards only through shifts with a -1 in that coordinate.
    """
    shifts = spec.shifts
    weights = [sum(shift) for shift in shifts]
    negatives = _suffix_negatives(shifts)
    n = len(shifts)
    target = 3 * k
    nu = [0] * n

    def walk(j: int, lvalue: LValue, used: int) -> Iterator[ExpVec]:
        remaining = target - used
        if remaining == 0:
            if lvalue == (k, k, k):
                yield tuple(nu)
            return
        if j == n:
            return
        for i in range(3):
            lowest = lvalue[i] - (remaining if negatives[j][i] else 0)
            if lowest > k or lvalue[i] + 2 * remaining < k:
                return
        shift = shifts[j]
        for count in range(remaining // weights[j] + 1):
            nu[j] = count
            yield from walk(
                j + 1,
                (lvalue[0] + count * shift[0], lvalue[1] + count * shift[1], lvalue[2] + count * shift[2]),
                used + count * weights[j],
            )
        nu[j] = 0

    yield from walk(0, (0, 0, 0), 0)


def alg2_compute(spec: SystemSpec, K: int, cache: Optional[VCache] = None) -> GList:
    """
    Compute g_111 ... g_KKK coefficient by coefficient.

    Args:
        spec: System specification; known values are substituted at the end
        K: Number of integrability quantities
        cache: Optional memo to reuse V(nu) across calls

    Returns:
        GList of ParamPoly quantities
    """
    if K < 1:
        raise ValidationError(f"K must be >= 1, got {K}")
    if cache is None:
        cache = VCache()
    started = time.perf_counter()
    logger.info(f"Algorithm 2: S = {spec.key()}, K = {K}")
    quantities = []
    for k in range(1, K + 1):
        terms = {}
        supports = 0
        for nu in enumerate_supports(spec, k):
            supports += 1
            coeff = _predecessor_sum(spec, nu, (k, k, k), cache)
            if coeff:
                terms[nu] = coeff
        g = ParamPoly(spec.nparams, terms)
        if spec.has_values:
            g = g.substitute(spec.values)
        quantities.append(g)
        logger.debug(f"k = {k}: {supports} supports, {g.term_count()} terms, memo size {len(cache)}")
    glist = GList(spec=spec, K=K, quantities=quantities)
    logger.info(f"Algorithm 2 finished in {time.perf_counter() - started:.3f} s, "
                f"term counts {glist.term_counts()}")
    return glist
