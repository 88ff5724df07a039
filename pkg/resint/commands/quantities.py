import logging
from typing import List

from resint.commands.common import emit, emit_model
from resint.commands.models import QuantitiesReport, QuantitiesSummary, QuantityModel, RunConfig
from resint.config.config import Config
from resint.errors import AlgorithmMismatchError
from resint.quantities.manager import QuantitiesManager
from resint.quantities.tables import GList
from resint.systems.sysspec import load_spec

logger = logging.getLogger(__name__)

ENGINE_BY_ALGORITHM = {"1": "alg1", "2": "alg2"}


def _format_text(glist: GList, names: List[str]) -> str:
    lines = []
    for k, g in enumerate(glist, start=1):
        lines.append(f"g_{k}{k}{k}: {g.term_count()} terms")
        lines.append(g.format(names))
    return "\n".join(lines)


def cmd_quantities(cfg: RunConfig, config: Config) -> int:
    """
    Compute g_111 ... g_KKK with one or both algorithms

    Args:
        cfg: Validated run configuration (spec_path, k, algorithm, json_output, out, timing)
        config: Loaded YAML configuration

    Returns:
        Exit code; a disagreement of the two algorithms raises AlgorithmMismatchError
    """
    spec = load_spec(cfg.spec_path)
    K = cfg.k or config.get_quantities_config().get("default_k", 3)
    selector = cfg.algorithm or str(config.get_quantities_config().get("default_algorithm", "1"))
    algorithms = ["1", "2"] if selector == "both" else [selector]
    manager = QuantitiesManager(config)

    results = {}
    summaries = []
    for algorithm in algorithms:
        _, glist, elapsed = manager.compute(ENGINE_BY_ALGORITHM[algorithm], spec, K)
        results[algorithm] = glist
        summaries.append(QuantitiesSummary(
            spec=spec.to_json(),
            k=K,
            algorithm=int(algorithm),
            term_count=glist.term_counts(),
            elapsed_ms=round(elapsed * 1000, 3) if cfg.timing else None,
        ))
        logger.info(f"Algorithm {algorithm}: term counts {glist.term_counts()} in {elapsed:.3f} s")

    agree = None
    if selector == "both":
        agree = list(results["1"]) == list(results["2"])
        if not agree:
            differing = [k for k, (g1, g2) in enumerate(zip(results["1"], results["2"]), start=1) if g1 != g2]
            raise AlgorithmMismatchError(f"Algorithms 1 and 2 disagree on g_kkk for k in {differing}")
        logger.info("Algorithms 1 and 2 agree")

    glist = results[algorithms[0]]
    if cfg.json_output:
        report = QuantitiesReport(
            parameters=list(spec.param_names),
            quantities=[QuantityModel(k=k, term_count=g.term_count(), terms=g.to_json())
                        for k, g in enumerate(glist, start=1)],
            summaries=summaries,
            agree=agree,
        )
        emit_model(report, cfg.out)
    else:
        emit(_format_text(glist, list(spec.param_names)), cfg.out)
    return 0
