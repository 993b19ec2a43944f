"""Annihilation collections: polyharmonic, curling, and vector harmonic fields.

A scalar field is polyharmonic of order n when n applications of the
laplacian kill it; a vector field is curling of order n when n curls do,
and vector harmonic of order n when n componentwise laplacians do.  Each
family is nested upward in n, and this module reports the least order,
which makes the strictness of those nestings checkable on witnesses.

The module also carries the two multiplication identities that push a
field one level up the polyharmonic ladder (multiply by a coordinate, or
by the squared radius), and the curl-curl identity that holds on vector
harmonic fields.  Every checker computes both sides of its identity
independently and compares exact polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import NotInCollectionError, SortMismatchError
from .fields import (
    FieldValue,
    Polynomial,
    VectorField,
    apply_chain,
    curl,
    div,
    grad,
    is_zero,
    laplacian,
    sort_of,
    vector_laplacian,
)
from .operators import Chain, Operator, Sort

DEFAULT_MAX_ORDER = 16


class CollectionKind(Enum):
    HARMONIC = "harmonic"
    CURLING = "curling"
    VECTOR_HARMONIC = "vharmonic"

    @property
    def required_sort(self) -> Sort:
        return Sort.SCALAR if self is CollectionKind.HARMONIC else Sort.VECTOR


_STEPS = {
    CollectionKind.HARMONIC: laplacian,
    CollectionKind.CURLING: curl,
    CollectionKind.VECTOR_HARMONIC: vector_laplacian,
}


@dataclass(frozen=True)
class Order:
    """Least n such that the n-fold defining iterate vanishes."""

    n: int


@dataclass(frozen=True)
class ExceedsBound:
    """No iterate up to the bound vanished."""

    bound: int


OrderResult = Union[Order, ExceedsBound]


def collection_order(kind: CollectionKind, field: FieldValue, max_n: int = DEFAULT_MAX_ORDER) -> OrderResult:
    """Least n <= max_n with the n-fold iterate identically zero.

    The laplacian strictly lowers polynomial degree, so harmonic and
    vector harmonic orders always resolve for a generous enough bound.
    The curl preserves degree, so a curling order can legitimately come
    back as ExceedsBound.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if sort_of(field) != kind.required_sort:
        raise SortMismatchError(kind.required_sort, sort_of(field), context=kind.value)
    step = _STEPS[kind]
    current = field
    for n in range(1, max_n + 1):
        current = step(current)
        if is_zero(current):
            return Order(n)
    return ExceedsBound(max_n)


def annihilates(c: Chain, field: FieldValue) -> bool:
    """Whether the field is killed by the chain, i.e. lies in its collection."""
    return is_zero(apply_chain(c, field))


def _laplacian_power(f: Polynomial, n: int) -> Polynomial:
    for _ in range(n):
        f = laplacian(f)
    return f


def check_coordinate_multiple(f: Polynomial, n: int, axis: int = 1) -> bool:
    """Coordinate multiplication identity for iterated laplacians.

    Both sides of

        lap^n(x * f)  ==  2n * d(lap^(n-1) f)/dx  +  x * lap^n(f)

    are computed independently (x meaning the chosen coordinate) and
    compared as exact polynomials.  True for every polynomial f; a false
    return means the engine itself is broken.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Polynomial.variable(axis)
    lhs = _laplacian_power(x * f, n)
    rhs = 2 * n * _laplacian_power(f, n - 1).partial(axis) + x * _laplacian_power(f, n)
    return lhs == rhs


def check_squared_coordinate_multiple(f: Polynomial, n: int, axis: int = 1) -> bool:
    """Squared-coordinate multiplication identity for iterated laplacians.

    For n >= 2 both sides of

        lap^n(x^2 * f) == 4n(n-1) * d2(lap^(n-2) f)/dx2
                          + 4n * x * d(lap^(n-1) f)/dx
                          + 2n * lap^(n-1) f
                          + x^2 * lap^n(f)

    are compared; for n == 1 the non-inductive base form

        lap(x^2 * f) == 2f + 4x * df/dx + x^2 * lap(f)

    is checked instead, since the general right side would reach below
    the zeroth iterate.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Polynomial.variable(axis)
    x2 = x * x
    if n == 1:
        lhs = laplacian(x2 * f)
        rhs = 2 * f + 4 * (x * f.partial(axis)) + x2 * laplacian(f)
        return lhs == rhs
    lhs = _laplacian_power(x2 * f, n)
    rhs = (
        4 * n * (n - 1) * _laplacian_power(f, n - 2).partial(axis).partial(axis)
        + 4 * n * (x * _laplacian_power(f, n - 1).partial(axis))
        + 2 * n * _laplacian_power(f, n - 1)
        + x2 * _laplacian_power(f, n)
    )
    return lhs == rhs


def check_vector_harmonic_swap(v: VectorField) -> bool:
    """curl curl == grad div, on fields with vanishing vector laplacian.

    Raises NotInCollectionError when the precondition fails; the identity
    is false off the vector harmonic collection.
    """
    if not is_zero(vector_laplacian(v)):
        raise NotInCollectionError("field is not vector harmonic (componentwise laplacians do not vanish)")
    return curl(curl(v)) == grad(div(v))


# The eight meaningful third-order words, in census order: the three
# nontrivial ones first, then the five identically-zero ones.
_ORDER3_CHAINS = (
    Chain((Operator.GRAD, Operator.DIV, Operator.GRAD)),
    Chain((Operator.CURL, Operator.CURL, Operator.CURL)),
    Chain((Operator.DIV, Operator.GRAD, Operator.DIV)),
    Chain((Operator.DIV, Operator.CURL, Operator.CURL)),
    Chain((Operator.DIV, Operator.CURL, Operator.GRAD)),
    Chain((Operator.CURL, Operator.CURL, Operator.GRAD)),
    Chain((Operator.CURL, Operator.GRAD, Operator.DIV)),
    Chain((Operator.GRAD, Operator.DIV, Operator.CURL)),
)


def third_order_annihilation_report(f: Polynomial, v: VectorField) -> dict[str, bool]:
    """Annihilation report for all eight meaningful third-order chains.

    Requires f harmonic and v vector harmonic; scalar-input chains are
    applied to f, vector-input chains to v.  Returns chain text mapped to
    whether the result vanished; on such inputs every entry is True.
    """
    if not is_zero(laplacian(f)):
        raise NotInCollectionError("scalar field is not harmonic")
    if not is_zero(vector_laplacian(v)):
        raise NotInCollectionError("vector field is not vector harmonic")
    report = {}
    for c in _ORDER3_CHAINS:
        arg = f if c.innermost.domain == Sort.SCALAR else v
        report[" ".join(op.value for op in c)] = is_zero(apply_chain(c, arg))
    return report
