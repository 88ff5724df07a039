import logging
import time
from pathlib import Path
from typing import Dict, List, Sequence

import yaml

from resint.commands.common import emit, emit_model, run_jobs
from resint.commands.models import BenchReport, BenchRow, RunConfig
from resint.config.config import Config
from resint.quantities.algorithm1 import alg1_compute
from resint.quantities.algorithm2 import alg2_compute
from resint.systems.sysspec import SystemSpec, load_spec

logger = logging.getLogger(__name__)

REFERENCE_COUNTS_PATH = Path(__file__).resolve().parent.parent / "data" / "reference_counts.yaml"


def load_reference_counts(path: Path = REFERENCE_COUNTS_PATH) -> Dict[str, List[int]]:
    """Frozen term counts of g_kkk per benchmark set"""
    with open(path, 'r', encoding='utf-8') as file:
        return yaml.safe_load(file) or {}


def run_cell(set_name: str, triples: Sequence[Sequence[int]], algorithm: int, k: int) -> BenchRow:
    """Compute g_111 ... g_kkk with one algorithm and time it"""
    spec = SystemSpec.from_triples(triples, name=set_name)
    started = time.perf_counter()
    if algorithm == 1:
        _, glist = alg1_compute(spec, k)
    else:
        glist = alg2_compute(spec, k)
    elapsed = time.perf_counter() - started
    return BenchRow(set=set_name, k=k, algorithm=algorithm, elapsed_s=round(elapsed, 4),
                    term_count=glist[k].term_count())


def _format_table(rows: List[BenchRow]) -> str:
    lines = [f"{'set':<6}{'k':>3}{'alg':>5}{'time [s]':>12}{'terms':>10}{'reference':>11}"]
    for row in rows:
        reference = "-" if row.reference is None else str(row.reference)
        flag = "" if row.matches is not False else "  MISMATCH"
        lines.append(f"{row.set:<6}{row.k:>3}{row.algorithm:>5}{row.elapsed_s:>12.4f}"
                     f"{row.term_count:>10}{reference:>11}{flag}")
    return "\n".join(lines)


def cmd_bench(cfg: RunConfig, config: Config) -> int:
    """
    Time both algorithms over the benchmark sets and check term counts

    Args:
        cfg: Validated run configuration; k is the largest level, spec_path
             restricts the run to one set
        config: Loaded YAML configuration (bench section)

    Returns:
        0, or 1 when a term count differs from the reference data
    """
    bench = config.get_bench_config()
    max_k = cfg.k or bench.get("max_k", 3)
    if cfg.spec_path is not None:
        spec = load_spec(cfg.spec_path)
        sets = {spec.name: [list(t) for t in spec.s_set]}
    else:
        sets = bench.get("sets", {})
    caps = {1: bench.get("alg1_max_k", {}), 2: bench.get("alg2_max_k", {})}
    algorithms = {"1": [1], "2": [2]}.get(cfg.algorithm or "both", [1, 2])

    jobs = []
    for set_name, triples in sets.items():
        for algorithm in algorithms:
            cap = caps[algorithm].get(set_name, max_k)
            for k in range(1, max_k + 1):
                if k > cap:
                    logger.info(f"Skipping {set_name}, algorithm {algorithm}, k = {k} (cap {cap})")
                    continue
                jobs.append((set_name, triples, algorithm, k))

    rows = run_jobs(run_cell, jobs)
    references = load_reference_counts()
    for row in rows:
        counts = references.get(row.set)
        if counts and row.k <= len(counts):
            row.reference = counts[row.k - 1]
    rows.sort(key=lambda row: (row.set, row.k, row.algorithm))

    timings = {(row.set, row.k, row.algorithm): row.elapsed_s for row in rows}
    if ("S1", 2, 1) in timings and ("S1", 2, 2) in timings:
        alg1_time, alg2_time = timings[("S1", 2, 1)], timings[("S1", 2, 2)]
        faster = "faster" if alg1_time < alg2_time else "not faster"
        logger.info(f"S1, k = 2: algorithm 1 took {alg1_time:.3f} s, algorithm 2 took {alg2_time:.3f} s "
                    f"(algorithm 1 {faster})")

    mismatches = [row for row in rows if row.matches is False]
    for row in mismatches:
        logger.error(f"Term count mismatch for {row.set}, k = {row.k}, algorithm {row.algorithm}: "
                     f"got {row.term_count}, reference {row.reference}")
    if cfg.json_output:
        emit_model(BenchReport(rows=rows, mismatches=len(mismatches)), cfg.out)
    else:
        emit(_format_table(rows), cfg.out)
    return 1 if mismatches else 0
