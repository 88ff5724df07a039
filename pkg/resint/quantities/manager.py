import logging
import time
from typing import Dict, Optional, Tuple

from resint.config.config import Config
from resint.errors import ValidationError
from resint.quantities.algorithm1 import alg1_compute, alg1_evaluate
from resint.quantities.algorithm2 import alg2_compute
from resint.quantities.tables import GList, VCache, VTable
from resint.systems.sysspec import SystemSpec

logger = logging.getLogger(__name__)


class QuantitiesManager:
    def __init__(self, config: Optional[Config] = None):
        """
        Initialize QuantitiesManager

        Args:
            config: Loaded configuration; the packaged defaults when omitted
        """
        self.config = config or Config()
        self.results: Dict[Tuple[str, str, int], Tuple[Optional[VTable], GList, float]] = {}
        self.caches: Dict[str, VCache] = {}

    def compute(self, engine: str, spec: SystemSpec, K: int) -> Tuple[Optional[VTable], GList, float]:
        """
        Compute g_111 ... g_KKK with the given engine, reusing earlier results

        Args:
            engine: "alg1" (symbolic recurrence), "alg2" (coefficient-wise) or
                    "numeric" (recurrence at the spec's parameter point)
            spec: System specification
            K: Number of quantities

        Returns:
            (VTable or None, GList, elapsed seconds of the computation)
        """
        key = (engine, spec.key(), K)
        if key in self.results:
            return self.results[key]

        started = time.perf_counter()
        if engine == "alg1":
            table, glist = alg1_compute(spec, K)
        elif engine == "alg2":
            cache = self.caches.setdefault(",".join(str(t) for t in spec.s_set), VCache())
            table, glist = None, alg2_compute(spec, K, cache)
        elif engine == "numeric":
            table, glist = alg1_evaluate(spec, K)
        else:
            raise ValidationError(f"Unsupported engine: {engine}")
        elapsed = time.perf_counter() - started
        logger.debug(f"{engine} on {spec.key()} with K = {K} took {elapsed:.3f} s")

        self.results[key] = (table, glist, elapsed)
        return self.results[key]

    def quantities(self, engine: str, spec: SystemSpec, K: int) -> GList:
        return self.compute(engine, spec, K)[1]
