import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import nablachain.fields
from nablachain.errors import (
    FieldFormatError,
    MeaninglessChainError,
    SortMismatchError,
    TermLimitError,
)
from nablachain.fields import (
    Polynomial,
    VectorField,
    apply_chain,
    apply_operator,
    curl,
    div,
    dumps_field,
    eval_at,
    field_from_json,
    field_to_json,
    grad,
    is_zero,
    laplacian,
    loads_field,
    sort_of,
    vector_laplacian,
)
from nablachain.operators import Chain, Operator, Sort

G, C, D = Operator.GRAD, Operator.CURL, Operator.DIV

x1 = Polynomial.variable(1)
x2 = Polynomial.variable(2)
x3 = Polynomial.variable(3)


@st.composite
def polynomials(draw, max_terms=5, max_exp=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(3))
        terms[e] = terms.get(e, 0) + draw(st.integers(-9, 9))
    return Polynomial(terms)


@st.composite
def vector_fields(draw):
    return VectorField(draw(polynomials()), draw(polynomials()), draw(polynomials()))


# -- construction and arithmetic ---------------------------------------------


def test_zero_coefficients_are_dropped():
    p = Polynomial({(1, 0, 0): 0, (0, 1, 0): 2})
    assert p == 2 * x2
    assert p.terms == {(0, 1, 0): Fraction(2)}


def test_integer_coefficients_become_fractions():
    p = Polynomial({(1, 0, 0): 3})
    assert isinstance(p.terms[(1, 0, 0)], Fraction)


def test_float_coefficients_are_rejected():
    with pytest.raises(TypeError):
        Polynomial({(0, 0, 0): 0.5})


def test_bad_exponents_are_rejected():
    with pytest.raises(ValueError):
        Polynomial({(1, 0): 1})
    with pytest.raises(ValueError):
        Polynomial({(-1, 0, 0): 1})


def test_constructors():
    assert Polynomial.zero().is_zero
    assert Polynomial.constant(Fraction(3, 2)).eval((0, 0, 0)) == Fraction(3, 2)
    assert Polynomial.monomial((2, 0, 1), 4) == 4 * x1 * x1 * x3
    assert Polynomial.variable(2) == x2


def test_degree():
    assert Polynomial.zero().degree() == -1
    assert Polynomial.constant(5).degree() == 0
    assert (x1 * x2 * x2 + x3).degree() == 3


def test_arithmetic_examples():
    p = x1 + x2
    assert p - x2 == x1
    assert -p == Polynomial({(1, 0, 0): -1, (0, 1, 0): -1})
    assert p * p == x1 * x1 + 2 * x1 * x2 + x2 * x2
    assert p**0 == Polynomial.constant(1)
    assert p**2 == p * p
    assert Fraction(1, 2) * (2 * x1) == x1


@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + Polynomial.zero() == p
    assert p * Polynomial.constant(1) == p


@given(polynomials())
def test_subtraction_of_self_is_zero(p):
    assert (p - p).is_zero


def test_partial_derivative_examples():
    assert (x1 * x1 * x2).partial(1) == 2 * x1 * x2
    assert Polynomial({(2, 0, 1): Fraction(3, 2)}).partial(1) == 3 * x1 * x3
    assert Polynomial.constant(7).partial(3).is_zero
    assert (x1 * x1 * x2).partial(3).is_zero


def test_partial_rejects_bad_axis():
    with pytest.raises(ValueError):
        x1.partial(0)


@given(polynomials(), polynomials())
def test_partial_is_linear_and_leibniz(p, q):
    assert (p + q).partial(1) == p.partial(1) + q.partial(1)
    assert (p * q).partial(2) == p.partial(2) * q + p * q.partial(2)


# -- differential operators --------------------------------------------------


def test_grad_example():
    assert grad(x1 * x1) == VectorField(2 * x1, Polynomial.zero(), Polynomial.zero())


def test_curl_example():
    rot = VectorField(-x2, x1, Polynomial.zero())
    assert curl(rot) == VectorField(
        Polynomial.zero(), Polynomial.zero(), Polynomial.constant(2)
    )


def test_div_example():
    assert div(VectorField(x1, x2, x3)) == Polynomial.constant(3)


def test_laplacian_equals_div_of_grad():
    r2 = x1 * x1 + x2 * x2 + x3 * x3
    assert laplacian(r2) == Polynomial.constant(6)
    for p in (r2, x1 * x2 * x3, (x1 + x2) ** 3):
        assert laplacian(p) == div(grad(p))


def test_vector_laplacian_is_componentwise():
    v = VectorField(x1 * x1, x2 * x2, Polynomial.zero())
    assert vector_laplacian(v) == VectorField(
        Polynomial.constant(2), Polynomial.constant(2), Polynomial.zero()
    )


@given(polynomials(max_exp=2), polynomials(max_exp=2))
def test_operators_are_linear(p, q):
    assert grad(p + q) == grad(p) + grad(q)
    u = VectorField(p, q, p * q)
    w = VectorField(q, p, p + q)
    assert curl(u + w) == curl(u) + curl(w)
    assert div(u + w) == div(u) + div(w)


@given(polynomials())
def test_grad_drops_degree_by_exactly_one(p):
    if p.degree() < 1:
        return
    out = grad(p)
    assert not out.is_zero
    assert max(c.degree() for c in out.components) == p.degree() - 1


@given(vector_fields())
def test_curl_and_div_drop_degree_or_vanish(v):
    before = max(c.degree() for c in v.components)
    rotated = curl(v)
    if not rotated.is_zero:
        assert max(c.degree() for c in rotated.components) <= before - 1
    spread = div(v)
    if not spread.is_zero:
        assert spread.degree() <= before - 1


def test_apply_operator_checks_sort():
    with pytest.raises(SortMismatchError) as err:
        apply_operator(G, VectorField.zero())
    assert "expected scalar input, got vector" in str(err.value)
    with pytest.raises(SortMismatchError):
        apply_operator(D, x1)


def test_apply_chain_examples():
    r2 = x1 * x1 + x2 * x2 + x3 * x3
    assert apply_chain(Chain((D, G)), r2) == Polynomial.constant(6)
    assert apply_chain(Chain((C, G)), x1 * x1 * x2).is_zero


def test_apply_chain_rejects_meaningless_before_sort():
    with pytest.raises(MeaninglessChainError):
        apply_chain(Chain((G, G)), VectorField.zero())


def test_apply_chain_rejects_wrong_input_sort():
    with pytest.raises(SortMismatchError):
        apply_chain(Chain((D, G)), VectorField.zero())


def test_sort_of():
    assert sort_of(x1) is Sort.SCALAR
    assert sort_of(VectorField.zero()) is Sort.VECTOR
    with pytest.raises(TypeError):
        sort_of("field")


# -- evaluation --------------------------------------------------------------


def test_eval_examples():
    assert (x1 * x1 * x2).eval((2, 3, 0)) == 12
    assert eval_at(VectorField.zero(), (5, 5, 5)) == (0, 0, 0)
    assert eval_at(grad(x1 * x1), (Fraction(1, 2), 0, 0)) == (1, 0, 0)


def test_eval_is_exact_on_rationals():
    p = Polynomial({(1, 0, 0): Fraction(1, 3)})
    assert p.eval((Fraction(1, 7), 0, 0)) == Fraction(1, 21)


def test_eval_float():
    assert (x1 * x2).eval_float((0.5, 4.0, 0.0)) == pytest.approx(2.0)
    v = VectorField(x1, x2, x3)
    assert v.eval_float((1.0, 2.0, 3.0)) == pytest.approx((1.0, 2.0, 3.0))


# -- vector field algebra ----------------------------------------------------


def test_vector_field_operations():
    u = VectorField(x1, x2, x3)
    w = VectorField(x2, x3, x1)
    assert (u + w) - w == u
    assert -u == VectorField(-x1, -x2, -x3)
    assert 2 * u == VectorField(2 * x1, 2 * x2, 2 * x3)
    assert x1 * u == u * x1
    assert list(u) == [x1, x2, x3]
    assert not u.is_zero
    assert VectorField.zero().is_zero


# -- term budget -------------------------------------------------------------


def test_term_limit_is_enforced(monkeypatch):
    monkeypatch.setattr(nablachain.fields, "MAX_TERMS", 4)
    a = x1 + x2 + x3 + Polynomial.constant(1)
    with pytest.raises(TermLimitError):
        a * (x1 + Polynomial.constant(1))


def test_term_limit_applies_to_construction(monkeypatch):
    monkeypatch.setattr(nablachain.fields, "MAX_TERMS", 2)
    with pytest.raises(TermLimitError):
        Polynomial({(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})


# -- repr --------------------------------------------------------------------


def test_repr_is_readable():
    assert repr(Polynomial.zero()) == "0"
    assert repr(x1 - x2) == "x1 - x2"
    assert repr(Polynomial({(2, 0, 1): Fraction(3, 2)})) == "3/2*x1^2*x3"
    assert repr(-x3) == "-x3"


# -- JSON exchange -----------------------------------------------------------


def test_scalar_json_round_trip():
    p = Polynomial({(2, 0, 1): Fraction(3, 2), (0, 0, 0): -4})
    doc = field_to_json(p)
    assert doc["kind"] == "scalar"
    assert field_from_json(doc) == p
    assert loads_field(dumps_field(p)) == p


def test_vector_json_round_trip():
    v = VectorField(x1 * x2, Polynomial.zero(), Polynomial.constant(Fraction(-1, 3)))
    assert field_from_json(field_to_json(v)) == v
    assert loads_field(dumps_field(v)) == v


@given(polynomials())
def test_json_round_trip_property(p):
    assert loads_field(dumps_field(p)) == p


def test_zero_fields_serialize_to_empty_terms():
    assert field_to_json(Polynomial.zero()) == {"kind": "scalar", "terms": []}
    assert field_to_json(VectorField.zero())["components"] == [[], [], []]


def test_missing_terms_mean_zero():
    assert field_from_json({"kind": "scalar"}).is_zero
    assert field_from_json({"kind": "vector"}).is_zero


def test_duplicate_exponent_triples_are_rejected():
    doc = {
        "kind": "scalar",
        "terms": [{"c": "1", "e": [1, 0, 0]}, {"c": "2", "e": [1, 0, 0]}],
    }
    with pytest.raises(FieldFormatError):
        field_from_json(doc)


@pytest.mark.parametrize(
    "doc",
    [
        {"terms": []},
        {"kind": "matrix"},
        {"kind": "scalar", "terms": [{"c": "1"}]},
        {"kind": "scalar", "terms": [{"c": "1", "e": [1, 0]}]},
        {"kind": "scalar", "terms": [{"c": "1", "e": [1, 0, -1]}]},
        {"kind": "scalar", "terms": [{"c": 1, "e": [1, 0, 0]}]},
        {"kind": "scalar", "terms": [{"c": "one", "e": [1, 0, 0]}]},
        {"kind": "scalar", "terms": [{"c": "1/0", "e": [1, 0, 0]}]},
        {"kind": "vector", "components": [[], []]},
        {"kind": "vector", "components": "nope"},
    ],
)
def test_malformed_documents_are_rejected(doc):
    with pytest.raises(FieldFormatError):
        field_from_json(doc)


def test_loads_field_rejects_bad_json():
    with pytest.raises(FieldFormatError):
        loads_field("{not json")


def test_dumped_json_is_valid_json():
    text = dumps_field(grad(x1 * x1 * x2))
    assert json.loads(text)["kind"] == "vector"
