"""
Sparse polynomials over Q(z).

ParamPoly is a polynomial in the 3l system parameters; a term is keyed by its
exponent vector nu (a tuple of 3l non-negative ints). PhasePoly is a
polynomial in x1, x2, x3 truncated at a fixed total degree, whose
coefficients are any ring elements supporting +, * and truth testing
(ParamPoly for symbolic work, CycQ at a concrete parameter point).

Canonical iteration order is graded lexicographic, highest term first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from resint.algebra.cyclotomic import CycQ, ONE, ZERO, format_rational, parse_rational
from resint.errors import DimensionMismatchError, ParseError

ExpVec = Tuple[int, ...]
PhaseExp = Tuple[int, int, int]


def grlex_key(exps: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    return sum(exps), exps


def _add_exps(e1: ExpVec, e2: ExpVec) -> ExpVec:
    return tuple(a + b for a, b in zip(e1, e2))


class ParamPoly:
    """Polynomial in the system parameters with CycQ coefficients. Immutable."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[ExpVec, Any]] = None):
        """
        Args:
            nvars: Number of parameters (3l)
            terms: Map from exponent vector to coefficient; zero coefficients are dropped
        """
        clean: Dict[ExpVec, CycQ] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionMismatchError(f"Exponent vector {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"Negative exponent in {exps}")
            coeff = CycQ.coerce(coeff)
            if coeff:
                clean[exps] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[ExpVec, CycQ]) -> ParamPoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    def __reduce__(self):
        return (ParamPoly, (self.nvars, self.terms))

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> ParamPoly:
        return cls._from_clean(nvars, {})

    @classmethod
    def constant(cls, value, nvars: int) -> ParamPoly:
        value = CycQ.coerce(value)
        return cls._from_clean(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def one(cls, nvars: int) -> ParamPoly:
        return cls.constant(ONE, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> ParamPoly:
        if not 0 <= index < nvars:
            raise DimensionMismatchError(f"Variable index {index} out of range for {nvars} parameters")
        exps = [0] * nvars
        exps[index] = 1
        return cls._from_clean(nvars, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=ONE) -> ParamPoly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def sum(cls, polys: Iterable[ParamPoly], nvars: int) -> ParamPoly:
        """Sum many polynomials with a single mutable accumulator"""
        acc: Dict[ExpVec, CycQ] = {}
        for poly in polys:
            if poly.nvars != nvars:
                raise DimensionMismatchError(f"Cannot add polynomials in {poly.nvars} and {nvars} parameters")
            for exps, coeff in poly.terms.items():
                current = acc.get(exps)
                acc[exps] = coeff if current is None else current + coeff
        return cls._from_clean(nvars, {e: c for e, c in acc.items() if c})

    # arithmetic

    def _lift(self, other) -> Optional[ParamPoly]:
        if isinstance(other, ParamPoly):
            if other.nvars != self.nvars:
                raise DimensionMismatchError(
                    f"Parameter count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (CycQ, int, Fraction)):
            return ParamPoly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        result = dict(big)
        for exps, coeff in small.items():
            current = result.get(exps)
            if current is None:
                result[exps] = coeff
            else:
                total = current + coeff
                if total:
                    result[exps] = total
                else:
                    del result[exps]
        return ParamPoly._from_clean(self.nvars, result)

    __radd__ = __add__

    def __neg__(self) -> ParamPoly:
        return ParamPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor) -> ParamPoly:
        factor = CycQ.coerce(factor)
        if not factor:
            return ParamPoly.zero(self.nvars)
        return ParamPoly._from_clean(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (CycQ, int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return ParamPoly.zero(self.nvars)
        if len(other.terms) == 1:
            (e2, c2), = other.terms.items()
            return ParamPoly._from_clean(
                self.nvars, {_add_exps(e1, e2): c1 * c2 for e1, c1 in self.terms.items()})
        result: Dict[ExpVec, CycQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = _add_exps(e1, e2)
                current = result.get(exps)
                result[exps] = c1 * c2 if current is None else current + c1 * c2
        return ParamPoly._from_clean(self.nvars, {e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ParamPoly:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ParamPoly.one(self.nvars)
        for _ in range(exponent):
            result = result * self
        return result

    # queries

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (CycQ, int, Fraction)):
            return self.terms == ParamPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def term_count(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> List[Tuple[ExpVec, CycQ]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[ExpVec, CycQ]]:
        return iter(self.sorted_terms())

    def coefficient(self, exps: Sequence[int]) -> CycQ:
        return self.terms.get(tuple(exps), ZERO)

    def evaluate(self, point: Sequence[CycQ]) -> CycQ:
        """Substitute a full parameter point (3l CycQ values)"""
        if len(point) != self.nvars:
            raise DimensionMismatchError(f"Point has {len(point)} coordinates, expected {self.nvars}")
        point = [CycQ.coerce(v) for v in point]
        powers: Dict[Tuple[int, int], CycQ] = {}

        def power(index: int, exponent: int) -> CycQ:
            key = (index, exponent)
            value = powers.get(key)
            if value is None:
                value = point[index] if exponent == 1 else power(index, exponent - 1) * point[index]
                powers[key] = value
            return value

        total = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for index, exponent in enumerate(exps):
                if exponent:
                    term = term * power(index, exponent)
            total = total + term
        return total

    def substitute(self, values: Sequence[Optional[CycQ]]) -> ParamPoly:
        """Partially evaluate: parameters with a value become constants, None stays symbolic"""
        if len(values) != self.nvars:
            raise DimensionMismatchError(f"Got {len(values)} values, expected {self.nvars}")
        parts = []
        for exps, coeff in self.terms.items():
            remaining = list(exps)
            for index, value in enumerate(values):
                if value is not None and exps[index]:
                    coeff = coeff * CycQ.coerce(value) ** exps[index]
                    remaining[index] = 0
            parts.append(ParamPoly(self.nvars, {tuple(remaining): coeff}))
        return ParamPoly.sum(parts, self.nvars)

    # serialization

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"p{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise DimensionMismatchError(f"Got {len(names)} names for {self.nvars} parameters")
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [f"({coeff})"]
            for name, exponent in zip(names, exps):
                if exponent == 1:
                    factors.append(name)
                elif exponent > 1:
                    factors.append(f"{name}^{exponent}")
            pieces.append(" * ".join(factors))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ParamPoly({self.nvars}, {len(self.terms)} terms)"

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"exps": list(exps), "re": format_rational(c.re), "ze": format_rational(c.ze)}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, Any]], nvars: int) -> ParamPoly:
        terms: Dict[ExpVec, CycQ] = {}
        for position, item in enumerate(data):
            try:
                exps = tuple(int(e) for e in item["exps"])
                coeff = CycQ(parse_rational(str(item["re"])), parse_rational(str(item["ze"])))
            except (KeyError, TypeError) as exc:
                raise ParseError(f"Malformed polynomial term: {exc}", field=f"terms[{position}]") from exc
            terms[exps] = terms.get(exps, ZERO) + coeff
        return cls(nvars, terms)


def ppoly_add(p: ParamPoly, q: ParamPoly) -> ParamPoly:
    return p + q


def ppoly_mul(p: ParamPoly, q: ParamPoly) -> ParamPoly:
    return p * q


def ppoly_scale(p: ParamPoly, c: CycQ) -> ParamPoly:
    return p.scale(c)


def ppoly_eval(p: ParamPoly, point: Sequence[CycQ]) -> CycQ:
    return p.evaluate(point)


def term_count(p: ParamPoly) -> int:
    return p.term_count()


class PhasePoly:
    """Polynomial in x1, x2, x3 truncated at max_degree. Immutable."""

    __slots__ = ("terms", "max_degree")

    def __init__(self, terms: Optional[Mapping[PhaseExp, Any]] = None, max_degree: int = 0):
        clean = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != 3 or any(a < 0 for a in alpha):
                raise ValueError(f"Invalid phase exponent {alpha}")
            if sum(alpha) <= max_degree and coeff:
                clean[alpha] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "max_degree", max_degree)

    @classmethod
    def _from_clean(cls, terms: Dict[PhaseExp, Any], max_degree: int) -> PhasePoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "max_degree", max_degree)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PhasePoly is immutable")

    def __reduce__(self):
        return (PhasePoly, (self.terms, self.max_degree))

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff, max_degree: int) -> PhasePoly:
        return cls({tuple(alpha): coeff}, max_degree)

    def _check(self, other: PhasePoly) -> int:
        if not isinstance(other, PhasePoly):
            raise TypeError(f"Expected PhasePoly, got {type(other).__name__}")
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: PhasePoly) -> PhasePoly:
        bound = self._check(other)
        result = {a: c for a, c in self.terms.items() if sum(a) <= bound}
        for alpha, coeff in other.terms.items():
            if sum(alpha) > bound:
                continue
            current = result.get(alpha)
            if current is None:
                result[alpha] = coeff
            else:
                total = current + coeff
                if total:
                    result[alpha] = total
                else:
                    del result[alpha]
        return PhasePoly._from_clean(result, bound)

    def __neg__(self) -> PhasePoly:
        return PhasePoly._from_clean({a: -c for a, c in self.terms.items()}, self.max_degree)

    def __sub__(self, other: PhasePoly) -> PhasePoly:
        return self + (-other)

    def scale(self, factor) -> PhasePoly:
        result = {}
        for alpha, coeff in self.terms.items():
            value = coeff * factor
            if value:
                result[alpha] = value
        return PhasePoly._from_clean(result, self.max_degree)

    def __mul__(self, other) -> PhasePoly:
        if not isinstance(other, PhasePoly):
            return self.scale(other)
        bound = self._check(other)
        result: Dict[PhaseExp, Any] = {}
        for a1, c1 in self.terms.items():
            d1 = sum(a1)
            for a2, c2 in other.terms.items():
                if d1 + sum(a2) > bound:
                    continue
                alpha = (a1[0] + a2[0], a1[1] + a2[1], a1[2] + a2[2])
                product = c1 * c2
                current = result.get(alpha)
                result[alpha] = product if current is None else current + product
        return PhasePoly._from_clean({a: c for a, c in result.items() if c}, bound)

    def derivative(self, index: int) -> PhasePoly:
        """Partial derivative with respect to x_{index+1}; keeps max_degree"""
        result = {}
        for alpha, coeff in self.terms.items():
            if alpha[index]:
                lowered = list(alpha)
                lowered[index] -= 1
                result[tuple(lowered)] = coeff * alpha[index]
        return PhasePoly._from_clean(result, self.max_degree)

    def apply_field(self, field: Sequence[PhasePoly]) -> PhasePoly:
        """Lie derivative sum_i field[i] * d(self)/dx_i, truncated at self.max_degree"""
        if len(field) != 3:
            raise DimensionMismatchError(f"Vector field must have 3 components, got {len(field)}")
        total = PhasePoly._from_clean({}, self.max_degree)
        for index, component in enumerate(field):
            total = total + component.with_max_degree(self.max_degree) * self.derivative(index)
        return total

    def with_max_degree(self, max_degree: int) -> PhasePoly:
        return PhasePoly._from_clean(
            {a: c for a, c in self.terms.items() if sum(a) <= max_degree}, max_degree)

    def coefficient(self, alpha: Sequence[int], default=None):
        return self.terms.get(tuple(alpha), default)

    def sorted_terms(self) -> List[Tuple[PhaseExp, Any]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhasePoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"PhasePoly({len(self.terms)} terms, max_degree={self.max_degree})"


def phase_mul(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    return f * g


def phase_apply_field(f: PhasePoly, field: Sequence[PhasePoly]) -> PhasePoly:
    return f.apply_field(field)
