"""
Direct recurrence for the first-integral coefficients v_{k1,k2,k3} and the
integrability quantities g_kkk.

Indices are discovered by forward reachability from (0,0,0) under the shift
triples of the parameters, shell by shell in total index sum; every shift has
sum >= 1, so each shell depends only on strictly smaller ones.
"""

import logging
import time
from functools import reduce
from operator import add
from typing import Any, Dict, List, Sequence, Tuple

from resint.algebra.cyclotomic import CycQ, KAPPA, ONE, ZERO, eval_divisor
from resint.algebra.polyring import ParamPoly
from resint.errors import ValidationError
from resint.quantities.tables import GList, Index, VTable
from resint.systems.sysspec import SystemSpec

logger = logging.getLogger(__name__)


def reachable_shells(spec: SystemSpec, max_sum: int) -> List[List[Index]]:
    """Indices reachable from (0,0,0), grouped by index sum and sorted within each shell"""
    steps = sorted(set(spec.shifts))
    shells: List[List[Index]] = [[] for _ in range(max_sum + 1)]
    shells[0].append((0, 0, 0))
    seen = {(0, 0, 0)}
    for total in range(max_sum + 1):
        shells[total].sort()
        for index in shells[total]:
            for step in steps:
                target_sum = total + sum(step)
                if target_sum > max_sum:
                    continue
                nxt = (index[0] + step[0], index[1] + step[1], index[2] + step[2])
                if nxt not in seen:
                    seen.add(nxt)
                    shells[target_sum].append(nxt)
    return shells


def _recurrence(spec: SystemSpec, K: int, atoms: Sequence[Any], zero: Any, one: Any) -> Tuple[VTable, GList]:
    if K < 1:
        raise ValidationError(f"K must be >= 1, got {K}")
    if isinstance(zero, ParamPoly):
        def accumulate(terms):
            return ParamPoly.sum(terms, spec.nparams)
    else:
        def accumulate(terms):
            return reduce(add, terms, zero)

    # (parameter atom, shift, block, eigenvalue weight) for every parameter
    couplings = [
        (atoms[j], shift, spec.block_of(j), KAPPA[spec.block_of(j)])
        for j, shift in enumerate(spec.shifts)
    ]
    table = VTable(spec=spec, max_level=K, entries={(0, 0, 0): one})
    quantities: List[Any] = [zero] * K
    shells = reachable_shells(spec, 3 * K)

    for total in range(1, 3 * K + 1):
        for index in shells[total]:
            terms = []
            for atom, shift, block, weight in couplings:
                previous = table.entries.get(
                    (index[0] - shift[0], index[1] - shift[1], index[2] - shift[2]))
                if previous is None or not previous:
                    continue
                multiplier = index[block] - shift[block] + 1
                if multiplier == 0:
                    continue
                terms.append(previous * (atom * (weight * multiplier)))
            rhs = accumulate(terms)
            if index[0] == index[1] == index[2]:
                quantities[index[0] - 1] = rhs
                table.entries[index] = zero
            else:
                table.entries[index] = rhs * (-eval_divisor(*index).inv())
        logger.debug(f"shell {total}: {len(shells[total])} indices")
    return table, GList(spec=spec, K=K, quantities=quantities)


def symbolic_atoms(spec: SystemSpec) -> List[ParamPoly]:
    """Parameter atoms: known values become constants, the others stay variables"""
    atoms = []
    for j in range(spec.nparams):
        value = spec.values[j] if spec.values is not None else None
        if value is None:
            atoms.append(ParamPoly.variable(j, spec.nparams))
        else:
            atoms.append(ParamPoly.constant(value, spec.nparams))
    return atoms


def alg1_compute(spec: SystemSpec, K: int) -> Tuple[VTable, GList]:
    """
    Compute v_{k1,k2,k3} (index sum <= 3K) and g_111 ... g_KKK symbolically.

    Args:
        spec: System specification; values, if any, are substituted as constants
        K: Number of integrability quantities

    Returns:
        The VTable and the GList of ParamPoly quantities
    """
    started = time.perf_counter()
    logger.info(f"Algorithm 1: S = {spec.key()}, K = {K}")
    table, glist = _recurrence(spec, K, symbolic_atoms(spec),
                               ParamPoly.zero(spec.nparams), ParamPoly.one(spec.nparams))
    logger.info(f"Algorithm 1 finished in {time.perf_counter() - started:.3f} s, "
                f"{len(table.entries)} v entries, term counts {glist.term_counts()}")
    return table, glist


def alg1_evaluate(spec: SystemSpec, K: int) -> Tuple[VTable, GList]:
    """
    Run the same recurrence with CycQ values at the spec's parameter point.

    Returns:
        VTable of CycQ and the GList of CycQ values g_kkk(point)
    """
    point: List[CycQ] = spec.point()
    return _recurrence(spec, K, point, ZERO, ONE)
