"""
The system family

    x1' = x1 + sum_S a[p,q,r] x1^(p+1) x2^q x3^r
    x2' = z (x2 + sum_S b[r,p,q] x1^r x2^(p+1) x3^q)
    x3' = z^2 (x3 + sum_S c[q,r,p] x1^q x2^r x3^(p+1))

indexed by an ordered set S of triples (p, q, r), p >= -1, q, r >= 0,
p + q + r >= 1. Parameters are laid out as the a-block, then the b-block, then
the c-block, each in S order; parameter j carries the shift triple that the
L map assigns to it (the triple itself for a, (r,p,q) for b, (q,r,p) for c),
which is also the index written in its name.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from resint.algebra.cyclotomic import CycQ, KAPPA, ONE, parse_cycq
from resint.algebra.polyring import PhasePoly
from resint.errors import DimensionMismatchError, MissingValuesError, ParseError, ValidationError

logger = logging.getLogger(__name__)

_CANONICAL_NAME_RE = re.compile(r"^\s*([abc])\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*$")
_ALIAS_NAME_RE = re.compile(r"^\s*([abc])(\d)(\d)(\d)\s*$")

BLOCKS = ("a", "b", "c")


class STriple(NamedTuple):
    p: int
    q: int
    r: int

    @classmethod
    def validated(cls, values: Sequence[Any]) -> STriple:
        if len(values) != 3 or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise ValidationError(f"Triple {list(values)} must be three integers")
        triple = cls(*values)
        if triple.p < -1 or triple.q < 0 or triple.r < 0:
            raise ValidationError(f"Triple {list(triple)} must satisfy p >= -1, q >= 0, r >= 0")
        if triple.p + triple.q + triple.r < 1:
            raise ValidationError(f"Triple {list(triple)} must satisfy p + q + r >= 1")
        return triple

    def rotated(self, block: int) -> Tuple[int, int, int]:
        """Shift triple of the parameter of this triple in the given block"""
        p, q, r = self
        if block == 0:
            return (p, q, r)
        if block == 1:
            return (r, p, q)
        return (q, r, p)


LValue = Tuple[int, int, int]


@dataclass(frozen=True)
class SystemSpec:
    s_set: Tuple[STriple, ...]
    values: Optional[Tuple[Optional[CycQ], ...]] = None
    name: Optional[str] = None

    def __post_init__(self):
        if not self.s_set:
            raise ValidationError("S must contain at least one triple")
        seen = set()
        for triple in self.s_set:
            STriple.validated(tuple(triple))
            if triple in seen:
                raise ValidationError(f"Duplicate triple {list(triple)} in S")
            seen.add(triple)
        if self.values is not None and len(self.values) != self.nparams:
            raise DimensionMismatchError(f"Got {len(self.values)} values for {self.nparams} parameters")

    @classmethod
    def from_triples(cls, triples: Sequence[Sequence[int]], name: Optional[str] = None) -> SystemSpec:
        return cls(tuple(STriple.validated(tuple(t)) for t in triples), name=name)

    @property
    def l(self) -> int:
        return len(self.s_set)

    @property
    def nparams(self) -> int:
        return 3 * len(self.s_set)

    @cached_property
    def shifts(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(t.rotated(block) for block in range(3) for t in self.s_set)

    def block_of(self, index: int) -> int:
        return index // self.l

    @cached_property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(
            f"{BLOCKS[index // self.l]}[{shift[0]},{shift[1]},{shift[2]}]"
            for index, shift in enumerate(self.shifts)
        )

    def param_index(self, name: str) -> int:
        """Index of a parameter given as "a[p,q,r]" or as a single-digit alias "a100" """
        key = canonical_param_name(name)
        names = self.param_names
        if key not in names:
            raise ValidationError(f"Unknown parameter '{name}' for S = {[list(t) for t in self.s_set]}")
        return names.index(key)

    @property
    def has_values(self) -> bool:
        return self.values is not None and any(v is not None for v in self.values)

    @property
    def has_full_values(self) -> bool:
        return self.values is not None and all(v is not None for v in self.values)

    def with_values(self, values: Union[Mapping[str, Any], Sequence[Any], None]) -> SystemSpec:
        """
        Attach a (possibly partial) parameter point.

        Args:
            values: Either a mapping from parameter name to value, or a full
                    sequence of 3l values in parameter order; None clears values

        Returns:
            A new SystemSpec with the same S and the given values
        """
        if values is None:
            return SystemSpec(self.s_set, None, self.name)
        if isinstance(values, Mapping):
            point: List[Optional[CycQ]] = [None] * self.nparams
            for name, value in values.items():
                point[self.param_index(name)] = CycQ.coerce(value)
        else:
            if len(values) != self.nparams:
                raise DimensionMismatchError(f"Got {len(values)} values for {self.nparams} parameters")
            point = [None if v is None else CycQ.coerce(v) for v in values]
        return SystemSpec(self.s_set, tuple(point), self.name)

    def point(self) -> List[CycQ]:
        if not self.has_full_values:
            missing = self.missing_parameters()
            raise MissingValuesError(f"Missing values for parameters: {', '.join(missing)}")
        return list(self.values)

    def missing_parameters(self) -> List[str]:
        if self.values is None:
            return list(self.param_names)
        return [n for n, v in zip(self.param_names, self.values) if v is None]

    def max_triple_degree(self) -> int:
        return max(sum(t) for t in self.s_set)

    def min_triple_degree(self) -> int:
        return min(sum(t) for t in self.s_set)

    def key(self) -> str:
        """Stable identifier used for caching and reports"""
        triples = ";".join(f"{t.p},{t.q},{t.r}" for t in self.s_set)
        if self.values is None:
            return triples
        return triples + "|" + ",".join("?" if v is None else str(v) for v in self.values)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"S": [list(t) for t in self.s_set]}
        if self.has_values:
            data["values"] = {n: str(v) for n, v in zip(self.param_names, self.values) if v is not None}
        return data


def canonical_param_name(name: str) -> str:
    match = _CANONICAL_NAME_RE.match(name)
    if match:
        letter, i, j, k = match.groups()
        return f"{letter}[{int(i)},{int(j)},{int(k)}]"
    match = _ALIAS_NAME_RE.match(name)
    if match:
        letter, i, j, k = match.groups()
        return f"{letter}[{i},{j},{k}]"
    raise ValidationError(f"Invalid parameter name '{name}'")


def l_map(spec: SystemSpec, nu: Sequence[int]) -> LValue:
    """L(nu) = sum_j nu_j * shift_j"""
    if len(nu) != spec.nparams:
        raise DimensionMismatchError(f"Exponent vector has {len(nu)} entries, expected {spec.nparams}")
    l1 = l2 = l3 = 0
    for count, shift in zip(nu, spec.shifts):
        if count:
            l1 += count * shift[0]
            l2 += count * shift[1]
            l3 += count * shift[2]
    return (l1, l2, l3)


def parse_spec(text: str, name: Optional[str] = None) -> SystemSpec:
    """
    Parse a system-specification JSON document.

    Format: {"S": [[p,q,r], ...], "values": {"a[1,0,0]": "1/2", ...}}

    Raises:
        ParseError: Malformed JSON or malformed value literal (with line/field)
        ValidationError: Triple or parameter name violating the family's rules
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise ParseError("Specification must be a JSON object")
    if "S" not in data:
        raise ParseError("Missing key", field="S")
    triples = data["S"]
    if not isinstance(triples, list) or not triples:
        raise ParseError("S must be a non-empty list of triples", field="S")
    parsed = []
    for position, triple in enumerate(triples):
        if not isinstance(triple, list):
            raise ParseError(f"Entry {triple!r} is not a list", field=f"S[{position}]")
        try:
            parsed.append(STriple.validated(tuple(triple)))
        except ValidationError as exc:
            raise ValidationError(f"S[{position}]: {exc}") from exc
    spec = SystemSpec(tuple(parsed), name=data.get("name") or name)
    raw_values = data.get("values")
    if raw_values is None:
        return spec
    if not isinstance(raw_values, dict):
        raise ParseError("values must be an object", field="values")
    values: Dict[str, CycQ] = {}
    for key, raw in raw_values.items():
        try:
            values[key] = parse_cycq(str(raw)) if not isinstance(raw, int) else CycQ(raw)
        except ParseError as exc:
            raise ParseError(f"Invalid value {raw!r}: {exc}", field=f"values.{key}") from exc
    return spec.with_values(values)


def load_spec(path: Union[str, Path]) -> SystemSpec:
    path = Path(path)
    logger.debug(f"Loading system specification from {path}")
    return parse_spec(path.read_text(encoding="utf-8"), name=path.stem)


def quadratic_family(values: Optional[Mapping[str, Any]] = None) -> SystemSpec:
    """The quadratic family: S = {(1,0,0), (0,1,0), (0,0,1)}"""
    spec = SystemSpec.from_triples([(1, 0, 0), (0, 1, 0), (0, 0, 1)], name="quadratic")
    return spec.with_values(values) if values is not None else spec


def vector_field(spec: SystemSpec, coefficients: Sequence[Any], one: Any = ONE,
                 max_degree: Optional[int] = None) -> Tuple[PhasePoly, PhasePoly, PhasePoly]:
    """
    The components (P, Q, R) of the system as PhasePolys.

    Args:
        spec: System specification
        coefficients: 3l ring elements standing for the parameters (ParamPoly
                      variables for symbolic work, CycQ values at a point)
        one: Ring unit used for the linear part
        max_degree: Truncation degree; defaults to the degree of the field

    Returns:
        Three PhasePolys; component m carries the eigenvalue factor z^m
    """
    if len(coefficients) != spec.nparams:
        raise DimensionMismatchError(f"Got {len(coefficients)} coefficients, expected {spec.nparams}")
    if max_degree is None:
        max_degree = spec.max_triple_degree() + 1
    components: List[Dict[Tuple[int, int, int], Any]] = [{}, {}, {}]
    for m in range(3):
        linear = [0, 0, 0]
        linear[m] = 1
        components[m][tuple(linear)] = one * KAPPA[m]
    for index, shift in enumerate(spec.shifts):
        m = spec.block_of(index)
        alpha = list(shift)
        alpha[m] += 1
        alpha = tuple(alpha)
        term = coefficients[index] * KAPPA[m]
        current = components[m].get(alpha)
        components[m][alpha] = term if current is None else current + term
    return tuple(PhasePoly(c, max_degree) for c in components)


def nonlinear_terms(spec: SystemSpec) -> List[List[Tuple[int, Tuple[int, int, int]]]]:
    """For each component m, the (parameter index, monomial) pairs of its nonlinear part"""
    terms: List[List[Tuple[int, Tuple[int, int, int]]]] = [[], [], []]
    for index, shift in enumerate(spec.shifts):
        m = spec.block_of(index)
        alpha = list(shift)
        alpha[m] += 1
        terms[m].append((index, tuple(alpha)))
    return terms
