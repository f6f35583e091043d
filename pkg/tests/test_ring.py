import pytest
from hypothesis import given, settings, strategies as st

from dubrovnik.ring import (
    L,
    LINV,
    NEG_INFINITY,
    ONE,
    POS_INFINITY,
    ZERO,
    Z,
    LaurentPoly,
    delta_power,
    lam_power,
    parse_poly,
    render,
    z_degree,
    z_min_degree,
)

exps = st.integers(-4, 4)
polys = st.dictionaries(st.tuples(exps, exps), st.integers(-5, 5), max_size=6).map(LaurentPoly)


@settings(max_examples=150)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys)
def test_render_roundtrip(p):
    assert parse_poly(render(p)) == p


@given(polys, polys)
def test_degree_of_product(p, q):
    if p and q:
        assert z_degree(p * q) == z_degree(p) + z_degree(q)


def test_delta_relation():
    delta = delta_power(1)
    # l^-1 - l = z (delta - 1)
    assert LINV - L == Z * (delta - ONE)
    assert delta_power(0) == ONE
    assert delta_power(3) == delta * delta * delta


def test_delta_degrees():
    for n in range(6):
        assert z_degree(delta_power(n)) == 0
        assert z_min_degree(delta_power(n)) == -n


def test_zero_degrees():
    assert z_degree(ZERO) == NEG_INFINITY
    assert z_min_degree(ZERO) == POS_INFINITY


def test_render_format():
    assert render(ZERO) == "0"
    assert render(ONE) == "1 l^0 z^0"
    assert render(delta_power(1)) == "1 l^0 z^0 + 1 l^-1 z^-1 + -1 l^1 z^-1"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("1 x^2")
    with pytest.raises(ValueError):
        parse_poly("1 l^0 z^0 + 2 l^0 z^0")


def test_monomial_helpers():
    assert lam_power(2) == L * L
    assert lam_power(-1) == LINV
    assert (Z * Z).z_part(2) == ONE
    assert (L + Z).substitute_lambda_inverse() == LINV + Z
    assert ONE == 1
