import logging

from resint.commands.common import emit_model
from resint.commands.models import NormalFormReport, RunConfig
from resint.config.config import Config
from resint.normalform.normal_form import compute_normal_form, first_nonzero_level, integrability_residual
from resint.quantities.algorithm1 import alg1_evaluate
from resint.systems.sysspec import SystemSpec, load_spec

logger = logging.getLogger(__name__)


def normal_form_report(spec: SystemSpec, order: int, verify: bool = False) -> NormalFormReport:
    """
    Normal form at the spec's point, compared level by level with g_kkk at the same point

    Args:
        spec: System specification with all values
        order: Truncation degree D
        verify: Run the reconstruction self-test

    Returns:
        NormalFormReport
    """
    series, _ = compute_normal_form(spec, order, verify=verify)
    residual = integrability_residual(series)
    _, glist = alg1_evaluate(spec, series.K)
    first_residual = first_nonzero_level(residual)
    first_g = first_nonzero_level(list(glist))
    if first_residual != first_g:
        logger.info(f"First nonzero level differs: Y1 + Y2 + Y3 at {first_residual}, g at {first_g}")
    nonlinear = [m for m in (1, 2, 3) if m not in series.linear_equations()]
    if series.integrable_through_order and nonlinear:
        logger.info(f"Y1 + Y2 + Y3 vanishes through order {order} while Y{nonlinear} do not: "
                    f"integrable, not linearized at this order")
    return NormalFormReport(
        resonant_order=series.K,
        order=order,
        Y1=[str(y) for y in series.y1],
        Y2=[str(y) for y in series.y2],
        Y3=[str(y) for y in series.y3],
        sum=[str(s) for s in residual],
        linear_equations=series.linear_equations(),
        linear_through_order=series.linear_through_order,
        integrable_through_order=series.integrable_through_order,
        first_nonzero_residual=first_residual,
        first_nonzero_g=first_g,
        agree=first_residual == first_g,
    )


def cmd_normalform(cfg: RunConfig, config: Config) -> int:
    """
    Compute the truncated normal form of a spec with values

    Args:
        cfg: Validated run configuration (spec_path, order, verify, out)
        config: Loaded YAML configuration (normalform section)

    Returns:
        Exit code
    """
    settings = config.get_normalform_config()
    spec = load_spec(cfg.spec_path)
    order = cfg.order or settings.get("order", 22)
    report = normal_form_report(spec, order, verify=cfg.verify or settings.get("verify", False))
    emit_model(report, cfg.out)
    return 0
