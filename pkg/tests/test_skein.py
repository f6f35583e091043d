import random

import pytest
from hypothesis import given, settings, strategies as st

from dubrovnik.diagram import (
    BASIS_P,
    BASIS_Q,
    BASIS_R1,
    BASIS_R2,
    denominator_closure,
    hcompose,
    numerator_closure,
    parse_pd,
    vcompose,
)
from dubrovnik.moves import random_link, random_tangle
from dubrovnik.reference import reference_link, reference_tangle
from dubrovnik.ring import L, LINV, ONE, ZERO, Z, delta_power, lam_power, z_degree
from dubrovnik.skein import (
    BoundViolation,
    M2Element,
    NotALink,
    NotATangle,
    SkeinEngine,
    ambient_normalize,
    close_tangle,
    decompose,
    evaluate_link,
    kidwell_bound,
    to_basis3,
)

HOPF_ALT = numerator_closure(hcompose(BASIS_R1, BASIS_R1))


def test_basis_decomposition():
    assert decompose(BASIS_P).coefficients == (ONE, ZERO, ZERO, ZERO)
    assert decompose(BASIS_R1).coefficients == (ZERO, ZERO, ONE, ZERO)


def test_anchor_identity():
    assert to_basis3(decompose(BASIS_R2)) == (Z, -Z, ONE)
    assert to_basis3(decompose(BASIS_P)) == (ONE, ZERO, ZERO)
    m = M2Element(L, Z, ONE, ZERO)
    assert to_basis3(m) == (L, Z, ONE)


def test_vertical_twist_matches_reference():
    t = vcompose(BASIS_R1, BASIS_R1)
    m = decompose(t)
    assert m.source_N == 2 and m.source_B == 1
    assert m.satisfies_bound()
    assert max(z_degree(f) for f in m.coefficients) == 1
    assert to_basis3(m) == reference_tangle(t)[:3]


def test_circles():
    assert evaluate_link(parse_pd("O 1")) == ONE
    assert evaluate_link(parse_pd("O 2")) == delta_power(1)


def test_hopf_link():
    value = evaluate_link(HOPF_ALT)
    assert value == reference_link(HOPF_ALT)
    # delta + z (l^e - l^-e) for one of the two signs e
    assert value in (delta_power(1) + Z * (L - LINV), delta_power(1) + Z * (LINV - L))
    assert z_degree(value) == 1


def test_curl_values():
    curl = parse_pd("X 1 1 2 2")
    assert curl.writhe() == 1
    assert evaluate_link(curl) == LINV
    assert evaluate_link(curl.mirror()) == L
    assert ambient_normalize(evaluate_link(curl), curl.writhe()) == ONE
    assert ambient_normalize(evaluate_link(curl.mirror()), -1) == ONE
    assert ambient_normalize(ONE, 0) == ONE


def test_closures():
    assert close_tangle(decompose(BASIS_Q), "numerator") == delta_power(1)
    assert close_tangle(decompose(BASIS_P), "numerator") == ONE
    r1 = close_tangle(decompose(BASIS_R1), "numerator")
    assert r1 in (L, LINV)
    with pytest.raises(ValueError):
        close_tangle(decompose(BASIS_P), "sideways")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_closure_consistency(seed):
    t = random_tangle(random.Random(seed), 7)
    m = decompose(t)
    assert close_tangle(m, "numerator") == evaluate_link(numerator_closure(t))
    assert close_tangle(m, "denominator") == evaluate_link(denominator_closure(t))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_engine_matches_reference(seed):
    rng = random.Random(seed)
    d = random_link(rng, 8)
    e = SkeinEngine()
    assert e.evaluate_link(d) == reference_link(d)
    assert z_degree(e.evaluate_link(d)) <= kidwell_bound(d)
    t = random_tangle(rng, 8)
    assert to_basis3(e.decompose(t)) == reference_tangle(t)[:3]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(-3, 3))
def test_ambient_keeps_degree(seed, w):
    p = evaluate_link(random_link(random.Random(seed), 6))
    assert z_degree(ambient_normalize(p, w)) == z_degree(p)


def test_kidwell_examples():
    trefoil = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n")
    assert kidwell_bound(trefoil) == 2
    assert kidwell_bound(parse_pd("O 1")) == 0
    assert kidwell_bound(HOPF_ALT) == 1
    # same two crossings, one strand over both: bridge of length 2
    clasp = numerator_closure(hcompose(BASIS_R1, BASIS_R2))
    assert kidwell_bound(clasp) == 0


def test_wrong_kinds():
    with pytest.raises(NotATangle):
        decompose(HOPF_ALT)
    with pytest.raises(NotALink):
        evaluate_link(BASIS_R1)


def test_bound_violation_is_assertion():
    assert issubclass(BoundViolation, AssertionError)


def test_lambda_power_sign_convention():
    # a curl of writhe +1 contributes l^-1
    curl = parse_pd("X 1 1 2 2")
    assert curl.writhe() == 1
    assert evaluate_link(curl) == lam_power(-1)
