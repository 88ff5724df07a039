import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from resint.algebra.cyclotomic import CycQ
from resint.algebra.polyring import ExpVec, ParamPoly
from resint.systems.sysspec import SystemSpec, l_map

Index = Tuple[int, int, int]


@dataclass
class VTable:
    """Coefficients v_{k1,k2,k3} of the first-integral series, keyed by (k1, k2, k3)"""

    spec: SystemSpec
    max_level: int
    entries: Dict[Index, Any] = field(default_factory=dict)

    def get(self, index: Index, default=None):
        return self.entries.get(index, default)

    def structure_violations(self) -> List[Tuple[Index, ExpVec]]:
        """Support monomials nu of v_{ijk} with L(nu) != (i, j, k)"""
        violations = []
        for index, value in self.entries.items():
            if not isinstance(value, ParamPoly):
                continue
            for nu in value.terms:
                if l_map(self.spec, nu) != index:
                    violations.append((index, nu))
        return violations


@dataclass
class GList:
    """Integrability quantities g_111 ... g_KKK"""

    spec: SystemSpec
    K: int
    quantities: List[Any] = field(default_factory=list)

    def __getitem__(self, k: int):
        """g_kkk for k = 1..K"""
        if not 1 <= k <= len(self.quantities):
            raise IndexError(f"g_{k}{k}{k} not computed (K = {self.K})")
        return self.quantities[k - 1]

    def __iter__(self):
        return iter(self.quantities)

    def __len__(self) -> int:
        return len(self.quantities)

    def term_counts(self) -> List[int]:
        return [g.term_count() for g in self.quantities]

    def structure_violations(self) -> List[Tuple[int, ExpVec]]:
        violations = []
        for k, g in enumerate(self.quantities, start=1):
            for nu in g.terms:
                if l_map(self.spec, nu) != (k, k, k):
                    violations.append((k, nu))
        return violations

    def evaluate(self, point) -> List[CycQ]:
        return [g.evaluate(point) for g in self.quantities]


class VCache:
    """Memo of V(nu); insert-if-absent is atomic so the cache may be shared by threads"""

    def __init__(self):
        self.memo: Dict[ExpVec, CycQ] = {}
        self._lock = threading.Lock()

    def get(self, nu: ExpVec):
        return self.memo.get(nu)

    def get_or_insert(self, nu: ExpVec, compute: Callable[[], CycQ]) -> CycQ:
        value = self.memo.get(nu)
        if value is not None:
            return value
        value = compute()
        with self._lock:
            return self.memo.setdefault(nu, value)

    def __len__(self) -> int:
        return len(self.memo)
