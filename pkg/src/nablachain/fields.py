"""Exact polynomial fields on R^3 and the differential operators on them.

Scalar fields are sparse multivariate polynomials in x1, x2, x3 with
rational coefficients, stored as a map from exponent triples to nonzero
``fractions.Fraction`` values.  Vector fields are triples of such
polynomials against the standard basis.  All arithmetic is exact, so the
zero test is decidable: a field is identically zero iff every term map
is empty.  That is what makes this module usable as ground truth for
operator identities; floating point never enters.

The JSON exchange format (used by the CLI) is a single document::

    {"kind": "scalar", "terms": [{"c": "3/2", "e": [2, 0, 1]}, ...]}
    {"kind": "vector", "components": [[...], [...], [...]]}

where each component of a vector document is a terms array, "c" is an
integer or integer-ratio string, and "e" is the exponent triple.  An
empty or missing terms array denotes the zero field; a repeated exponent
triple is an input error rather than a silent merge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import (
    FieldFormatError,
    MeaninglessChainError,
    SortMismatchError,
    TermLimitError,
)
from .operators import Chain, Meaningless, Operator, Sort, chain_signature

Exponents = tuple[int, int, int]

# Results larger than this raise TermLimitError; iterated second-order
# operators shrink polynomials, so only pathological inputs get near it.
MAX_TERMS = 10**6


def _coerce_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be int or Fraction, got {type(value).__name__}")


class Polynomial:
    """A sparse polynomial in x1, x2, x3 over the rationals.

    Kept canonical at all times: no stored coefficient is zero, so
    structural equality of the term maps is exact equality of
    polynomials.  Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponents, Union[int, Fraction]] | None = None):
        canonical: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(exps)
                if len(e) != 3 or any(not isinstance(x, int) or x < 0 for x in e):
                    raise ValueError(f"exponents must be a triple of non-negative ints, got {exps!r}")
                c = _coerce_coeff(coeff)
                if c != 0:
                    canonical[e] = c
        if len(canonical) > MAX_TERMS:
            raise TermLimitError(f"polynomial with {len(canonical)} terms exceeds the {MAX_TERMS} term budget")
        self.terms = canonical

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls({(0, 0, 0): Fraction(value)})

    @classmethod
    def monomial(cls, exponents: Exponents, coeff=1) -> Polynomial:
        return cls({tuple(exponents): Fraction(coeff)})

    @classmethod
    def variable(cls, axis: int) -> Polynomial:
        """The coordinate polynomial x_axis, axis in {1, 2, 3}."""
        if axis not in (1, 2, 3):
            raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
        exps = [0, 0, 0]
        exps[axis - 1] = 1
        return cls({tuple(exps): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self.terms)
        for e, c in other.terms.items():
            s = merged.get(e, 0) + c
            if s == 0:
                merged.pop(e, None)
            else:
                merged[e] = s
        return Polynomial(merged)

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            c = _coerce_coeff(other)
            return Polynomial({e: c * v for e, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = acc.get(e, 0) + c1 * c2
                if s == 0:
                    acc.pop(e, None)
                else:
                    acc[e] = s
            if len(acc) > MAX_TERMS:
                raise TermLimitError(f"product exceeds the {MAX_TERMS} term budget")
        return Polynomial(acc)

    def __rmul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def partial(self, axis: int) -> Polynomial:
        """Formal partial derivative along x_axis, axis in {1, 2, 3}."""
        if axis not in (1, 2, 3):
            raise ValueError(f"axis must be 1, 2 or 3, got {axis}")
        i = axis - 1
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
        return Polynomial(out)

    def eval(self, point) -> Fraction:
        """Exact evaluation at a point of rationals (or ints)."""
        x1, x2, x3 = (Fraction(v) for v in point)
        total = Fraction(0)
        for (e1, e2, e3), c in self.terms.items():
            total += c * x1**e1 * x2**e2 * x3**e3
        return total

    def eval_float(self, point) -> float:
        """Floating-point evaluation, for handing to sampled-field code."""
        x1, x2, x3 = (float(v) for v in point)
        total = 0.0
        for (e1, e2, e3), c in self.terms.items():
            total += float(c) * x1**e1 * x2**e2 * x3**e3
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        ordered = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        for e, c in ordered:
            powers = [
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
                for i, k in enumerate(e)
                if k > 0
            ]
            if not powers:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(powers))
            elif c == -1:
                parts.append("-" + "*".join(powers))
            else:
                parts.append("*".join([str(c)] + powers))
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class VectorField:
    """Three polynomial components against the standard basis."""

    f1: Polynomial
    f2: Polynomial
    f3: Polynomial

    @property
    def components(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        return (self.f1, self.f2, self.f3)

    @classmethod
    def zero(cls) -> VectorField:
        return cls(Polynomial.zero(), Polynomial.zero(), Polynomial.zero())

    @property
    def is_zero(self) -> bool:
        return self.f1.is_zero and self.f2.is_zero and self.f3.is_zero

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.components)

    def __add__(self, other) -> VectorField:
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.f1 + other.f1, self.f2 + other.f2, self.f3 + other.f3)

    def __sub__(self, other) -> VectorField:
        if not isinstance(other, VectorField):
            return NotImplemented
        return VectorField(self.f1 - other.f1, self.f2 - other.f2, self.f3 - other.f3)

    def __neg__(self) -> VectorField:
        return VectorField(-self.f1, -self.f2, -self.f3)

    def __mul__(self, other) -> VectorField:
        if isinstance(other, (int, Fraction, Polynomial)):
            return VectorField(self.f1 * other, self.f2 * other, self.f3 * other)
        return NotImplemented

    def __rmul__(self, other) -> VectorField:
        if isinstance(other, (int, Fraction, Polynomial)):
            return self * other
        return NotImplemented

    def eval(self, point) -> tuple[Fraction, Fraction, Fraction]:
        return (self.f1.eval(point), self.f2.eval(point), self.f3.eval(point))

    def eval_float(self, point) -> tuple[float, float, float]:
        return (
            self.f1.eval_float(point),
            self.f2.eval_float(point),
            self.f3.eval_float(point),
        )


ScalarField = Polynomial
FieldValue = Union[Polynomial, VectorField]


def sort_of(field: FieldValue) -> Sort:
    if isinstance(field, Polynomial):
        return Sort.SCALAR
    if isinstance(field, VectorField):
        return Sort.VECTOR
    raise TypeError(f"not a field value: {field!r}")


def grad(f: Polynomial) -> VectorField:
    """Gradient: the vector of the three partial derivatives."""
    return VectorField(f.partial(1), f.partial(2), f.partial(3))


def curl(v: VectorField) -> VectorField:
    """Curl: the antisymmetric cross-derivative combination."""
    f1, f2, f3 = v.components
    return VectorField(
        f3.partial(2) - f2.partial(3),
        f1.partial(3) - f3.partial(1),
        f2.partial(1) - f1.partial(2),
    )


def div(v: VectorField) -> Polynomial:
    """Divergence: the sum of the component partials."""
    return v.f1.partial(1) + v.f2.partial(2) + v.f3.partial(3)


def laplacian(f: Polynomial) -> Polynomial:
    """div after grad, fused into second partials."""
    return (
        f.partial(1).partial(1) + f.partial(2).partial(2) + f.partial(3).partial(3)
    )


def vector_laplacian(v: VectorField) -> VectorField:
    """Componentwise laplacian."""
    return VectorField(laplacian(v.f1), laplacian(v.f2), laplacian(v.f3))


def apply_operator(op: Operator, field: FieldValue) -> FieldValue:
    """Apply one operator, checking the field sort."""
    if sort_of(field) != op.domain:
        raise SortMismatchError(op.domain, sort_of(field), context=op.value)
    if op is Operator.GRAD:
        return grad(field)
    if op is Operator.CURL:
        return curl(field)
    return div(field)


def apply_chain(c: Chain, field: FieldValue) -> FieldValue:
    """Apply a chain innermost-first to a field.

    Raises MeaninglessChainError for chains whose signature is undefined,
    before looking at the field at all, and SortMismatchError when the
    field sort does not match the chain input sort.
    """
    sig = chain_signature(c)
    if isinstance(sig, Meaningless):
        raise MeaninglessChainError(f"chain has no defined value: {' '.join(op.value for op in c)}")
    if sig.input != sort_of(field):
        raise SortMismatchError(sig.input, sort_of(field), context="chain input")
    current = field
    for op in reversed(c.ops):
        current = apply_operator(op, current)
    return current


def is_zero(field: FieldValue) -> bool:
    """Exact identic-zero test."""
    return field.is_zero


def eval_at(field: FieldValue, point):
    """Exact evaluation: a Fraction for scalars, a triple for vectors."""
    if isinstance(field, Polynomial):
        return field.eval(point)
    return tuple(comp.eval(point) for comp in field.components)


# -- JSON exchange format ----------------------------------------------------


def _coeff_to_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _terms_to_json(p: Polynomial) -> list[dict]:
    return [
        {"c": _coeff_to_str(c), "e": list(e)}
        for e, c in sorted(p.terms.items())
    ]


def _terms_from_json(entries, where: str) -> Polynomial:
    if entries is None:
        return Polynomial.zero()
    if not isinstance(entries, list):
        raise FieldFormatError(f"{where}: terms must be an array")
    seen: dict[Exponents, Fraction] = {}
    for entry in entries:
        if not isinstance(entry, dict) or "c" not in entry or "e" not in entry:
            raise FieldFormatError(f"{where}: each term needs 'c' and 'e'")
        raw_c, raw_e = entry["c"], entry["e"]
        if not isinstance(raw_e, list) or len(raw_e) != 3 or any(not isinstance(x, int) or x < 0 for x in raw_e):
            raise FieldFormatError(f"{where}: 'e' must be three non-negative integers, got {raw_e!r}")
        if not isinstance(raw_c, str):
            raise FieldFormatError(f"{where}: 'c' must be a string, got {raw_c!r}")
        try:
            c = Fraction(raw_c)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldFormatError(f"{where}: bad coefficient {raw_c!r}") from exc
        e = tuple(raw_e)
        if e in seen:
            raise FieldFormatError(f"{where}: duplicate exponent triple {raw_e!r}")
        seen[e] = c
    return Polynomial(seen)


def field_to_json(field: FieldValue) -> dict:
    """Encode a field as the documented JSON structure."""
    if isinstance(field, Polynomial):
        return {"kind": "scalar", "terms": _terms_to_json(field)}
    return {"kind": "vector", "components": [_terms_to_json(c) for c in field.components]}


def field_from_json(doc) -> FieldValue:
    """Decode a field document; raises FieldFormatError on any defect."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FieldFormatError("field document must be an object with a 'kind'")
    kind = doc["kind"]
    if kind == "scalar":
        return _terms_from_json(doc.get("terms"), "scalar terms")
    if kind == "vector":
        comps = doc.get("components")
        if comps is None:
            return VectorField.zero()
        if not isinstance(comps, list) or len(comps) != 3:
            raise FieldFormatError("vector field needs exactly three components")
        return VectorField(*(_terms_from_json(c, f"component {i + 1}") for i, c in enumerate(comps)))
    raise FieldFormatError(f"unknown field kind {kind!r}")


def dumps_field(field: FieldValue) -> str:
    return json.dumps(field_to_json(field))


def loads_field(text: str) -> FieldValue:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldFormatError(f"not valid JSON: {exc}") from exc
    return field_from_json(doc)
