import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, List, Optional, TypeVar

from pydantic import BaseModel

from resint.config.config import Settings

logger = logging.getLogger(__name__)

T = TypeVar("T")


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write a report to --out, or to stdout"""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {out}")


def emit_model(model: BaseModel, out: Optional[Path] = None) -> None:
    emit(model.model_dump_json(indent=2), out)


def run_jobs(func: Callable[..., T], jobs: Iterable[tuple], threads: Optional[int] = None) -> List[T]:
    """
    Run independent jobs, in-process for one worker and on a process pool otherwise.

    Args:
        func: Module-level function applied to each job's arguments
        jobs: Argument tuples
        threads: Worker count; RESINT_THREADS when omitted

    Returns:
        Results in job order
    """
    jobs = list(jobs)
    if threads is None:
        threads = Settings().threads
    if threads <= 1 or len(jobs) <= 1:
        return [func(*job) for job in jobs]
    logger.debug(f"Running {len(jobs)} jobs on {threads} workers")
    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(func, *job) for job in jobs]
        return [future.result() for future in futures]
