"""Corpus-driven verification suites.

Four suites, each a list of named checks over seeded pseudorandom
corpora: ``identities`` (annihilations, the curl-of-curl decomposition,
linearity, degree bookkeeping, classifier-versus-evaluation agreement),
``associativity`` (all grouping cases of three-step composition),
``examples`` (the inductive laplacian identities and collection-order
facts), and ``oracle`` (exact engine against the finite-difference
route).

Every check seeds its own generator from the pair (seed, check name),
so checks are independent of execution order and reports are
reproducible byte for byte.  Results come back sorted by check name.
The sampling-agreement corpus in the oracle suite pins its fields to
total degree three regardless of the degree argument: the difference
quotient's truncation error on higher degrees would swamp the absolute
floor it is judged against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .classify import (
    Family,
    TrivialZero,
    classify,
    meaningful_chains,
    nontrivial_chain,
)
from .collections import (
    CollectionKind,
    Order,
    annihilates,
    check_vector_harmonic_swap,
    check_coordinate_multiple,
    check_squared_coordinate_multiple,
    collection_order,
    third_order_annihilation_report,
)
from .corpus import (
    random_harmonic_polynomial,
    random_point,
    random_polyharmonic_of_order,
    random_polynomial,
    random_vector_field,
    random_vector_harmonic_field,
    radius_squared,
    witness_corpus,
)
from .errors import MeaninglessChainError, SortMismatchError
from .fdcheck import FdConfig, as_sampled, cross_check, fd_first_order, fd_partial
from .fields import (
    Polynomial,
    VectorField,
    apply_chain,
    apply_operator,
    curl,
    div,
    grad,
    vector_laplacian,
)
from .operators import (
    Chain,
    Meaningful,
    Operator,
    Sort,
    chain,
    chain_signature,
    compose_signatures,
    signature,
)
from .parser import format_chain


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; detail carries a counterexample."""

    name: str
    passed: bool
    detail: str = ""


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _ok(name: str) -> CheckResult:
    return CheckResult(name, True)


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


# -- identities --------------------------------------------------------------


def _check_curl_after_grad(trials: int, seed: int, degree: int) -> CheckResult:
    name = "annihilation curl after grad"
    rng = _rng(seed, name)
    for _ in range(trials):
        f = random_polynomial(rng, degree)
        if not curl(grad(f)).is_zero:
            return _fail(name, f"f = {f!r}")
    return _ok(name)


def _check_div_after_curl(trials: int, seed: int, degree: int) -> CheckResult:
    name = "annihilation div after curl"
    rng = _rng(seed, name)
    for _ in range(trials):
        v = random_vector_field(rng, degree)
        if not div(curl(v)).is_zero:
            return _fail(name, f"v = {v!r}")
    return _ok(name)


def _trivial_order3_chains() -> list[Chain]:
    return [
        c
        for c in meaningful_chains(3)
        if isinstance(classify(c), TrivialZero)
    ]


def _check_third_order_zero(c: Chain, trials: int, seed: int, degree: int) -> CheckResult:
    name = f"third-order zero: {format_chain(c)}"
    rng = _rng(seed, name)
    sig = chain_signature(c)
    assert isinstance(sig, Meaningful)
    for _ in range(trials):
        field = (
            random_polynomial(rng, degree)
            if sig.input is Sort.SCALAR
            else random_vector_field(rng, degree)
        )
        if not apply_chain(c, field).is_zero:
            return _fail(name, f"input = {field!r}")
    return _ok(name)


def _check_curl_curl_decomposition(trials: int, seed: int, degree: int) -> CheckResult:
    name = "curl of curl decomposition"
    rng = _rng(seed, name)
    for _ in range(trials):
        v = random_vector_field(rng, degree)
        if curl(curl(v)) != grad(div(v)) - vector_laplacian(v):
            return _fail(name, f"v = {v!r}")
    return _ok(name)


def _check_linearity(trials: int, seed: int, degree: int) -> CheckResult:
    name = "chain linearity"
    rng = _rng(seed, name)
    chains = [c for n in (1, 2, 3) for c in meaningful_chains(n)]
    pairs = max(1, trials // 20)
    for c in chains:
        sig = chain_signature(c)
        assert isinstance(sig, Meaningful)
        for _ in range(pairs):
            if sig.input is Sort.SCALAR:
                u: object = random_polynomial(rng, degree)
                w: object = random_polynomial(rng, degree)
            else:
                u = random_vector_field(rng, degree)
                w = random_vector_field(rng, degree)
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            lhs = apply_chain(c, a * u + b * w)
            rhs = a * apply_chain(c, u) + b * apply_chain(c, w)
            if lhs != rhs:
                return _fail(name, f"chain {format_chain(c)}, u = {u!r}, w = {w!r}")
    return _ok(name)


def _vector_degree(v: VectorField) -> int:
    return max(comp.degree() for comp in v.components)


def _check_degree_step(op: Operator, trials: int, seed: int, degree: int) -> CheckResult:
    name = f"degree step {op.value}"
    rng = _rng(seed, name)
    for _ in range(trials):
        if op is Operator.GRAD:
            f = random_polynomial(rng, degree)
            if f.degree() < 1:
                continue
            out = grad(f)
            if out.is_zero or _vector_degree(out) != f.degree() - 1:
                return _fail(name, f"f = {f!r}")
        else:
            v = random_vector_field(rng, degree)
            out = apply_operator(op, v)
            if out.is_zero:
                continue
            before = _vector_degree(v)
            after = out.degree() if isinstance(out, Polynomial) else _vector_degree(out)
            if after > before - 1:
                return _fail(name, f"v = {v!r}")
    return _ok(name)


def _check_classifier_agreement(trials: int, seed: int, degree: int) -> CheckResult:
    name = "classifier evaluation agreement"
    scalars, vectors = witness_corpus(seed)
    for n in range(1, 6):
        for c in meaningful_chains(n):
            sig = chain_signature(c)
            assert isinstance(sig, Meaningful)
            witnesses = scalars if sig.input is Sort.SCALAR else vectors
            all_zero = all(apply_chain(c, w).is_zero for w in witnesses)
            is_trivial = isinstance(classify(c), TrivialZero)
            if is_trivial != all_zero:
                return _fail(name, f"chain {format_chain(c)}")
    return _ok(name)


def run_identities(trials: int, seed: int, degree: int) -> list[CheckResult]:
    results = [
        _check_curl_after_grad(trials, seed, degree),
        _check_div_after_curl(trials, seed, degree),
        _check_curl_curl_decomposition(trials, seed, degree),
        _check_linearity(trials, seed, degree),
        _check_classifier_agreement(trials, seed, degree),
    ]
    for c in _trivial_order3_chains():
        results.append(_check_third_order_zero(c, trials, seed, degree))
    for op in Operator:
        results.append(_check_degree_step(op, trials, seed, degree))
    return results


# -- associativity -----------------------------------------------------------

_UNDEFINED = object()


def _left_grouped(triple: tuple[Operator, Operator, Operator], field):
    """((outer after middle) after inner) applied to field."""
    try:
        first = apply_operator(triple[2], field)
        return apply_chain(Chain((triple[0], triple[1])), first)
    except (MeaninglessChainError, SortMismatchError):
        return _UNDEFINED


def _right_grouped(triple: tuple[Operator, Operator, Operator], field):
    """(outer after (middle after inner)) applied to field."""
    try:
        first = apply_chain(Chain((triple[1], triple[2])), field)
        return apply_operator(triple[0], first)
    except (MeaninglessChainError, SortMismatchError):
        return _UNDEFINED


def _check_grouping_signatures() -> CheckResult:
    name = "grouping signatures agree"
    for triple in product(Operator, repeat=3):
        sigs = [Meaningful(*signature(op)) for op in triple]
        left = compose_signatures(compose_signatures(sigs[0], sigs[1]), sigs[2])
        right = compose_signatures(sigs[0], compose_signatures(sigs[1], sigs[2]))
        flat = chain_signature(Chain(triple))
        if not (left == right == flat):
            return _fail(name, f"triple {format_chain(Chain(triple))}")
    return _ok(name)


def _check_grouping_values(sort: Sort, trials: int, seed: int, degree: int) -> CheckResult:
    name = f"grouping values agree on {sort.value}s"
    rng = _rng(seed, name)
    inputs_per_triple = max(1, min(trials, 10))
    for triple in product(Operator, repeat=3):
        for _ in range(inputs_per_triple):
            field = (
                random_polynomial(rng, degree)
                if sort is Sort.SCALAR
                else random_vector_field(rng, degree)
            )
            left = _left_grouped(triple, field)
            right = _right_grouped(triple, field)
            if (left is _UNDEFINED) != (right is _UNDEFINED):
                return _fail(
                    name,
                    f"triple {format_chain(Chain(triple))}: one grouping undefined",
                )
            if left is not _UNDEFINED and left != right:
                return _fail(
                    name,
                    f"triple {format_chain(Chain(triple))}, input = {field!r}",
                )
    return _ok(name)


def run_associativity(trials: int, seed: int, degree: int) -> list[CheckResult]:
    return [
        _check_grouping_signatures(),
        _check_grouping_values(Sort.SCALAR, trials, seed, degree),
        _check_grouping_values(Sort.VECTOR, trials, seed, degree),
    ]


# -- examples ----------------------------------------------------------------


def _check_harmonic_products_vanish(trials: int, seed: int, degree: int) -> CheckResult:
    name = "third-order products vanish on harmonic inputs"
    rng = _rng(seed, name)
    for _ in range(trials):
        f = random_harmonic_polynomial(rng)
        v = random_vector_harmonic_field(rng)
        report = third_order_annihilation_report(f, v)
        bad = [text for text, vanished in report.items() if not vanished]
        if bad:
            return _fail(name, f"chain {bad[0]}, f = {f!r}, v = {v!r}")
    return _ok(name)


def _check_coordinate_multiple_identity(trials: int, seed: int, degree: int) -> CheckResult:
    name = "laplacian power of coordinate multiple"
    rng = _rng(seed, name)
    for i in range(trials):
        f = random_polynomial(rng, degree)
        axis = 1 + i % 3
        for n in (1, 2, 3, 4):
            if not check_coordinate_multiple(f, n, axis):
                return _fail(name, f"f = {f!r}, n = {n}, axis = {axis}")
    return _ok(name)


def _check_squared_coordinate_identity(trials: int, seed: int, degree: int) -> CheckResult:
    name = "laplacian power of squared-coordinate multiple"
    rng = _rng(seed, name)
    for i in range(trials):
        f = random_polynomial(rng, degree)
        axis = 1 + i % 3
        for n in (1, 2, 3, 4):
            if not check_squared_coordinate_multiple(f, n, axis):
                return _fail(name, f"f = {f!r}, n = {n}, axis = {axis}")
    return _ok(name)


def _check_vector_harmonic_swap(trials: int, seed: int, degree: int) -> CheckResult:
    name = "curl of curl equals grad of div on vector harmonics"
    rng = _rng(seed, name)
    for _ in range(trials):
        v = random_vector_harmonic_field(rng)
        if not check_vector_harmonic_swap(v):
            return _fail(name, f"v = {v!r}")
    return _ok(name)


def _check_order_witnesses() -> CheckResult:
    name = "collection order witnesses"
    x1 = Polynomial.variable(1)
    x2 = Polynomial.variable(2)
    r2 = radius_squared()
    cases = [
        (CollectionKind.HARMONIC, x1, 1),
        (CollectionKind.HARMONIC, x1 * x1 - x2 * x2, 1),
        (CollectionKind.HARMONIC, r2, 2),
        (CollectionKind.HARMONIC, r2 * r2, 3),
        (
            CollectionKind.CURLING,
            VectorField(-x2, x1, Polynomial.zero()),
            2,
        ),
    ]
    for kind, field, want in cases:
        got = collection_order(kind, field, 10)
        if got != Order(want):
            return _fail(name, f"{kind.value} of {field!r}: got {got!r}")
    return _ok(name)


def _check_multiplier_keeps_membership(
    multiplier: Polynomial, label: str, trials: int, seed: int
) -> CheckResult:
    name = f"{label} multiple stays polyharmonic"
    rng = _rng(seed, name)
    reps = max(1, trials // 2)
    for _ in range(reps):
        for n in (2, 3):
            f = random_polyharmonic_of_order(rng, n - 1)
            got = collection_order(CollectionKind.HARMONIC, multiplier * f, 10)
            if not (isinstance(got, Order) and got.n <= n):
                return _fail(name, f"f = {f!r}, n = {n}, got {got!r}")
    return _ok(name)


def _check_iterate_ladder(trials: int, seed: int, degree: int) -> CheckResult:
    name = "iterate order ladder"
    rng = _rng(seed, name)
    rot = VectorField(
        -Polynomial.variable(2), Polynomial.variable(1), Polynomial.zero()
    )
    reps = max(1, trials // 10)
    for _ in range(reps):
        for k in (1, 2, 3):
            f = random_polyharmonic_of_order(rng, k)
            if collection_order(CollectionKind.HARMONIC, f, 8) != Order(k):
                return _fail(name, f"scalar f = {f!r}, expected order {k}")
            for m in range(1, k + 1):
                step = nontrivial_chain(Family.GRAD_DIV_ALTERNATING, 2 * m)
                if annihilates(step, f) != (m >= k):
                    return _fail(name, f"f = {f!r}, iterate {m} of {k}")
        g = random_polynomial(rng, 3)
        swirl = rot + grad(g)
        if collection_order(CollectionKind.CURLING, swirl, 8) != Order(2):
            return _fail(name, f"v = {swirl!r}, expected curling order 2")
        if annihilates(nontrivial_chain(Family.CURL_POWER, 1), swirl):
            return _fail(name, f"v = {swirl!r}: first curl vanished early")
        if not annihilates(nontrivial_chain(Family.CURL_POWER, 2), swirl):
            return _fail(name, f"v = {swirl!r}: second curl did not vanish")
        w = VectorField(
            random_polyharmonic_of_order(rng, 2),
            random_harmonic_polynomial(rng),
            random_harmonic_polynomial(rng),
        )
        if collection_order(CollectionKind.VECTOR_HARMONIC, w, 8) != Order(2):
            return _fail(name, f"w = {w!r}, expected vector order 2")
        if not vector_laplacian(vector_laplacian(w)).is_zero:
            return _fail(name, f"w = {w!r}: second iterate nonzero")
    return _ok(name)


def run_examples(trials: int, seed: int, degree: int) -> list[CheckResult]:
    return [
        _check_harmonic_products_vanish(trials, seed, degree),
        _check_coordinate_multiple_identity(trials, seed, degree),
        _check_squared_coordinate_identity(trials, seed, degree),
        _check_vector_harmonic_swap(trials, seed, degree),
        _check_order_witnesses(),
        _check_multiplier_keeps_membership(
            Polynomial.variable(1), "coordinate", trials, seed
        ),
        _check_multiplier_keeps_membership(
            radius_squared(), "radius-squared", trials, seed
        ),
        _check_iterate_ladder(trials, seed, degree),
    ]


# -- oracle ------------------------------------------------------------------

# Small step so cubic truncation error stays under the absolute floor.
_AGREEMENT_CFG = FdConfig(h=1e-5)
_AGREEMENT_DEGREE = 3


def _check_sampling_agreement(op: Operator, trials: int, seed: int) -> CheckResult:
    name = f"{op.value} sampling agreement"
    rng = _rng(seed, name)
    cfg = _AGREEMENT_CFG
    for _ in range(trials):
        field = (
            random_polynomial(rng, _AGREEMENT_DEGREE)
            if op.domain is Sort.SCALAR
            else random_vector_field(rng, _AGREEMENT_DEGREE)
        )
        exact = apply_operator(op, field)
        sampled = as_sampled(field)
        for _ in range(10):
            point = random_point(rng, -1.0, 1.0)
            want = exact.eval_float(point)
            got = fd_first_order(op, sampled, point, cfg)
            want_parts = want if isinstance(want, tuple) else (want,)
            got_parts = got if isinstance(got, tuple) else (got,)
            for w, g in zip(want_parts, got_parts):
                if abs(g - w) > cfg.tolerance(w):
                    return _fail(
                        name,
                        f"field = {field!r}, point = {point}, |{g} - {w}|",
                    )
    return _ok(name)


def _check_step_convergence() -> CheckResult:
    name = "quadratic step convergence"
    quartic = Polynomial.monomial((4, 0, 0))
    sampled = as_sampled(quartic)
    point = (1.0, 0.0, 0.0)
    errors = [
        abs(fd_partial(sampled, 1, point, FdConfig(h=h)) - 4.0)
        for h in (1e-2, 1e-3)
    ]
    ratio = errors[0] / errors[1]
    if not 25.0 <= ratio <= 400.0:
        return _fail(name, f"error ratio {ratio} outside [25, 400]")
    return _ok(name)


def _check_nested_cross(seed: int) -> CheckResult:
    name = "nested laplacian cross-check"
    rng = _rng(seed, name)
    points = [random_point(rng, -1.0, 1.0) for _ in range(10)]
    report = cross_check(chain(Operator.DIV, Operator.GRAD), radius_squared(), points)
    if not report.passed:
        return _fail(name, f"max deviation {report.max_deviation}")
    return _ok(name)


def _check_first_order_cross(seed: int) -> CheckResult:
    name = "first-order curl cross-check"
    rng = _rng(seed, name)
    x1 = Polynomial.variable(1)
    x2 = Polynomial.variable(2)
    field = VectorField(-x2, x1, Polynomial.zero())
    points = [random_point(rng, -1.0, 1.0) for _ in range(10)]
    report = cross_check(chain(Operator.CURL), field, points)
    if not report.passed:
        return _fail(name, f"max deviation {report.max_deviation}")
    return _ok(name)


def run_oracle(trials: int, seed: int, degree: int) -> list[CheckResult]:
    results = [_check_sampling_agreement(op, trials, seed) for op in Operator]
    results.append(_check_step_convergence())
    results.append(_check_nested_cross(seed))
    results.append(_check_first_order_cross(seed))
    return results


# -- dispatch ----------------------------------------------------------------

SUITES: dict[str, Callable[[int, int, int], list[CheckResult]]] = {
    "identities": run_identities,
    "associativity": run_associativity,
    "examples": run_examples,
    "oracle": run_oracle,
}

DEFAULT_TRIALS = 100
DEFAULT_SEED = 42
DEFAULT_DEGREE = 4


def run_suite(
    name: str,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    degree: int = DEFAULT_DEGREE,
) -> tuple[CheckResult, ...]:
    """Run one named suite; results sorted by check name."""
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {name!r} (choose from {known})")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    results = SUITES[name](trials, seed, degree)
    return tuple(sorted(results, key=lambda r: r.name))
