"""Deterministic pseudorandom field corpora for the verification suites.

Everything here draws from an explicit ``random.Random`` so that a seed
pins the whole corpus and counterexamples can be reproduced.  The
generator is intentionally simple enough to restate in a sentence each:

* ``random_polynomial(rng, degree)``: the number of terms is
  ``rng.randint(1, 8)``; for each term a total degree ``d =
  rng.randint(0, degree)`` is drawn, split into exponents ``e1 =
  rng.randint(0, d)``, ``e2 = rng.randint(0, d - e1)``, ``e3 = d - e1 -
  e2``; the coefficient is ``rng.randint(-9, 9)``.  Zero coefficients
  and repeated exponent triples simply merge away, so the draw can
  produce fewer stored terms than requested, including the zero
  polynomial.
* ``random_boxed_polynomial(rng, max_exponent)``: same term loop, but
  each exponent is drawn as ``rng.randint(0, max_exponent)``
  independently, and coefficients come from a caller-supplied range.
  This variant reaches the high mixed degrees needed to witness that a
  long derivative chain is not identically zero.
* harmonic draws are integer combinations of a fixed basis of harmonic
  polynomials through degree three, with coefficients
  ``rng.randint(-9, 9)``, redrawn until nonzero.

All draws consume the generator strictly left to right, so inserting a
new draw anywhere changes every corpus after it; treat the order as part
of the format.
"""

from __future__ import annotations

import random

from .fields import Polynomial, VectorField

COEFF_LO = -9
COEFF_HI = 9
MAX_TERMS_PER_DRAW = 8


def random_polynomial(
    rng: random.Random,
    degree: int,
    coeff_lo: int = COEFF_LO,
    coeff_hi: int = COEFF_HI,
) -> Polynomial:
    """A random polynomial of total degree <= degree; may be zero."""
    terms: dict[tuple[int, int, int], int] = {}
    for _ in range(rng.randint(1, MAX_TERMS_PER_DRAW)):
        d = rng.randint(0, degree)
        e1 = rng.randint(0, d)
        e2 = rng.randint(0, d - e1)
        e3 = d - e1 - e2
        c = rng.randint(coeff_lo, coeff_hi)
        key = (e1, e2, e3)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(terms)


def random_boxed_polynomial(
    rng: random.Random,
    max_exponent: int,
    coeff_lo: int = COEFF_LO,
    coeff_hi: int = COEFF_HI,
) -> Polynomial:
    """A random polynomial with each exponent <= max_exponent independently."""
    terms: dict[tuple[int, int, int], int] = {}
    for _ in range(rng.randint(1, MAX_TERMS_PER_DRAW)):
        key = (
            rng.randint(0, max_exponent),
            rng.randint(0, max_exponent),
            rng.randint(0, max_exponent),
        )
        c = rng.randint(coeff_lo, coeff_hi)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(terms)


def random_vector_field(
    rng: random.Random,
    degree: int,
    coeff_lo: int = COEFF_LO,
    coeff_hi: int = COEFF_HI,
) -> VectorField:
    return VectorField(
        random_polynomial(rng, degree, coeff_lo, coeff_hi),
        random_polynomial(rng, degree, coeff_lo, coeff_hi),
        random_polynomial(rng, degree, coeff_lo, coeff_hi),
    )


def random_boxed_vector_field(
    rng: random.Random,
    max_exponent: int,
    coeff_lo: int = COEFF_LO,
    coeff_hi: int = COEFF_HI,
) -> VectorField:
    return VectorField(
        random_boxed_polynomial(rng, max_exponent, coeff_lo, coeff_hi),
        random_boxed_polynomial(rng, max_exponent, coeff_lo, coeff_hi),
        random_boxed_polynomial(rng, max_exponent, coeff_lo, coeff_hi),
    )


def _m(e1: int, e2: int, e3: int, c: int = 1) -> Polynomial:
    return Polynomial.monomial((e1, e2, e3), c)


# Harmonic polynomials through total degree 3: 1 constant, 3 linear,
# 5 quadratic, 7 cubic.  Integer combinations stay harmonic.
HARMONIC_BASIS: tuple[Polynomial, ...] = (
    _m(0, 0, 0),
    _m(1, 0, 0),
    _m(0, 1, 0),
    _m(0, 0, 1),
    _m(1, 1, 0),
    _m(1, 0, 1),
    _m(0, 1, 1),
    _m(2, 0, 0) - _m(0, 2, 0),
    _m(0, 2, 0) - _m(0, 0, 2),
    _m(1, 1, 1),
    _m(1, 2, 0) - _m(1, 0, 2),
    _m(2, 1, 0) - _m(0, 1, 2),
    _m(2, 0, 1) - _m(0, 2, 1),
    _m(3, 0, 0) - _m(1, 2, 0, 3),
    _m(0, 3, 0) - _m(0, 1, 2, 3),
    _m(0, 0, 3) - _m(2, 0, 1, 3),
)


def random_harmonic_polynomial(rng: random.Random) -> Polynomial:
    """A nonzero integer combination of the harmonic basis."""
    while True:
        p = Polynomial.zero()
        for b in HARMONIC_BASIS:
            c = rng.randint(COEFF_LO, COEFF_HI)
            if c:
                p = p + c * b
        if not p.is_zero:
            return p


def random_vector_harmonic_field(rng: random.Random) -> VectorField:
    """A vector field whose components are each harmonic, not all zero."""
    return VectorField(
        random_harmonic_polynomial(rng),
        random_harmonic_polynomial(rng),
        random_harmonic_polynomial(rng),
    )


def radius_squared() -> Polynomial:
    return _m(2, 0, 0) + _m(0, 2, 0) + _m(0, 0, 2)


def random_polyharmonic_of_order(rng: random.Random, order: int) -> Polynomial:
    """A field whose laplacian order is exactly the one requested.

    Multiplying a harmonic field by the squared radius raises the order
    by exactly one, so order k comes from k - 1 such multiplications.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    p = random_harmonic_polynomial(rng)
    r2 = radius_squared()
    for _ in range(order - 1):
        p = r2 * p
    return p


def random_point(rng: random.Random, lo: float = -2.0, hi: float = 2.0) -> tuple[float, float, float]:
    return (rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))


def witness_corpus(
    seed: int = 42,
    extra: int = 20,
) -> tuple[tuple[Polynomial, ...], tuple[VectorField, ...]]:
    """Fields used to cross-check the syntactic classifier by evaluation.

    Two fixed witnesses plus ``extra`` random ones per sort.  The random
    ones bound each exponent (not the total degree) by three: a chain of
    length five differentiates five times, so certifying that its value
    is not identically zero takes witnesses of total degree well above
    five.  Coefficients are drawn from [-5, 5].
    """
    rng = random.Random(f"{seed}:witness")
    scalars = [_m(2, 1, 0) + _m(0, 0, 1)]
    vectors = [VectorField(_m(0, 1, 1), _m(2, 0, 0), _m(1, 1, 1))]
    scalars.extend(random_boxed_polynomial(rng, 3, -5, 5) for _ in range(extra))
    vectors.extend(random_boxed_vector_field(rng, 3, -5, 5) for _ in range(extra))
    return tuple(scalars), tuple(vectors)
