import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from resint.commands.common import emit_model, run_jobs
from resint.commands.models import (ComponentCheckReport, ConditionsReport, NormalFormReport,
                                    ReversibleCheckReport, ReversibleSample, RunConfig)
from resint.commands.normalform import normal_form_report
from resint.conditions.components import (LINEARIZABLE_COMPONENTS, eval_izeta, point_values,
                                          sample_component, system22_point)
from resint.conditions.necessary import NecessaryConditionsReport, check_necessary_conditions
from resint.conditions.reversibility import check_equivariance, reversible_point
from resint.config.config import Config
from resint.errors import ParseError, ValidationError
from resint.quantities.algorithm1 import alg1_evaluate
from resint.systems.sysspec import SystemSpec, parse_spec, quadratic_family

logger = logging.getLogger(__name__)

EXIT_VANISHING_FAILED = 3


def load_point(path: Path) -> SystemSpec:
    """
    Read a quadratic point file {"values": {...}}.

    "S" may be omitted (the quadratic family is assumed); b001, c100 and b010
    may be omitted and are then set to the subfamily values 0, 0, 1.
    """
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise ParseError("Point file must be a JSON object")
    quadratic = quadratic_family()
    data.setdefault("S", [list(t) for t in quadratic.s_set])
    spec = parse_spec(json.dumps(data), name=path.stem)
    if spec.s_set != quadratic.s_set:
        raise ValidationError(f"check expects a quadratic point, got S = {spec.key()}")
    if spec.has_full_values:
        return spec
    given = {name: value for name, value in zip(spec.param_names, spec.values or ()) if value is not None}
    return system22_point(given)


def conditions_model(report: NecessaryConditionsReport, seed: Optional[int] = None,
                     normal_form: Optional[NormalFormReport] = None) -> ConditionsReport:
    return ConditionsReport(
        point=report.point,
        components_satisfied=report.components_satisfied,
        g_values=[str(g) for g in report.g_values],
        izeta_zero=report.izeta_zero,
        all_g_vanish=report.all_g_vanish,
        seed=seed,
        normal_form=normal_form,
    )


def run_component_sample(component: int, seed: int, order: int, K: int, pool_bound: int,
                         max_retries: int) -> Tuple[ConditionsReport, List[str]]:
    """Necessary conditions and normal form at one sample of J_component"""
    spec = sample_component(component, seed, pool_bound=pool_bound, max_retries=max_retries)
    necessary = check_necessary_conditions(spec, K)
    normal_form = normal_form_report(spec, order)
    failures = []
    if component not in necessary.components_satisfied:
        failures.append(f"seed {seed}: sample is not on J{component}")
    if not necessary.all_g_vanish:
        failures.append(f"seed {seed}: g_kkk does not vanish at level {necessary.first_nonzero_g}")
    if component in LINEARIZABLE_COMPONENTS and not normal_form.linear_through_order:
        failures.append(f"seed {seed}: resonant coefficients do not vanish through order {order}")
    if not normal_form.integrable_through_order:
        failures.append(f"seed {seed}: Y1 + Y2 + Y3 does not vanish at level "
                        f"{normal_form.first_nonzero_residual}")
    return conditions_model(necessary, seed, normal_form), failures


def run_reversible_sample(seed: int, K: int, pool_bound: int) -> Tuple[ReversibleSample, List[str]]:
    spec, matrix = reversible_point(seed, pool_bound)
    izeta_zero = not any(eval_izeta(spec))
    reversible = not any(check_equivariance(spec, matrix))
    _, glist = alg1_evaluate(spec, K)
    failures = []
    if not izeta_zero:
        failures.append(f"seed {seed}: I_zeta generators do not vanish")
    if not reversible:
        failures.append(f"seed {seed}: A F(x) - z F(Ax) does not vanish")
    if any(glist):
        failures.append(f"seed {seed}: g_kkk does not vanish")
    sample = ReversibleSample(
        seed=seed,
        point=point_values(spec),
        matrix={"alpha": str(matrix.alpha), "beta": str(matrix.beta), "gamma": str(matrix.gamma)},
        izeta_zero=izeta_zero,
        reversible=reversible,
        g_values=[str(g) for g in glist],
    )
    return sample, failures


def cmd_check(cfg: RunConfig, config: Config) -> int:
    """
    Integrability condition checks on the quadratic family

    Args:
        cfg: Validated run configuration; exactly one of point_path,
             component, reversible is set
        config: Loaded YAML configuration (conditions and normalform sections)

    Returns:
        0, or 3 when a vanishing that the component or reversibility suite
        asserts fails
    """
    conditions = config.get_conditions_config()
    K = cfg.k or conditions.get("quantities_k", 5)
    samples = cfg.samples or conditions.get("samples", 10)
    seed = cfg.seed if cfg.seed is not None else conditions.get("seed", 0)
    pool_bound = conditions.get("pool_bound", 9)

    if cfg.point_path is not None:
        spec = load_point(cfg.point_path)
        report = check_necessary_conditions(spec, K)
        if not report.all_g_vanish:
            logger.info(f"g_kkk is nonzero at the point, first at level {report.first_nonzero_g}")
        emit_model(conditions_model(report), cfg.out)
        return 0

    if cfg.reversible:
        results = run_jobs(run_reversible_sample,
                           [(seed + i, cfg.k or 3, pool_bound) for i in range(samples)])
        failures = [failure for _, fails in results for failure in fails]
        emit_model(ReversibleCheckReport(samples=[sample for sample, _ in results], failures=failures), cfg.out)
    else:
        order = cfg.order or conditions.get("order", 22)
        jobs = [(cfg.component, seed + i, order, K, pool_bound, conditions.get("max_retries", 32))
                for i in range(samples)]
        results = run_jobs(run_component_sample, jobs)
        failures = [failure for _, fails in results for failure in fails]
        emit_model(ComponentCheckReport(component=cfg.component, order=order,
                                        samples=[sample for sample, _ in results], failures=failures), cfg.out)

    for failure in failures:
        logger.error(failure)
    return EXIT_VANISHING_FAILED if failures else 0
