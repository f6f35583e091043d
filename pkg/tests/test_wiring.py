import random

import pytest
from hypothesis import given, settings, strategies as st

from dubrovnik.diagram import BASIS_P, BASIS_R1, BASIS_R2, numerator_closure, parse_pd, vcompose
from dubrovnik.moves import random_tangle
from dubrovnik.ring import z_degree
from dubrovnik.skein import evaluate_link
from dubrovnik.wiring import (
    ArityMismatch,
    BoundViolated,
    CrossingArcs,
    MalformedLine,
    NotAMatching,
    WiringDiagram,
    chain_wiring,
    check_bound,
    evaluate_by_decomposition,
    format_wiring,
    insert_tangles,
    parse_wiring,
    random_wiring,
    theorem13_bound,
)

NUMERATOR = "SLOTS 1\nJOIN 1.NW 1.NE\nJOIN 1.SW 1.SE\n"


def test_parse_and_format():
    w = parse_wiring("# one slot\n" + NUMERATOR)
    assert w.k == 1 and len(w.pairing) == 2
    assert parse_wiring(format_wiring(w)) == w
    assert parse_wiring(NUMERATOR + "O 2\n").closed_wires == 2


def test_parse_errors():
    with pytest.raises(MalformedLine):
        parse_wiring("JOIN 1.NW 1.NE\n")
    with pytest.raises(MalformedLine):
        parse_wiring("SLOTS 1\nJOIN 1.XX 1.NE\nJOIN 1.SW 1.SE\n")
    with pytest.raises(MalformedLine):
        parse_wiring("SLOTS 0\n")
    with pytest.raises(NotAMatching):
        parse_wiring("SLOTS 1\nJOIN 1.NW 1.NE\n")
    with pytest.raises(NotAMatching):
        parse_wiring("SLOTS 1\nJOIN 1.NW 1.NE\nJOIN 1.NW 1.SE\n")
    with pytest.raises(NotAMatching):
        parse_wiring("SLOTS 1\nJOIN 1.NW 2.NE\nJOIN 1.SW 1.SE\n")


def test_crossing_arcs_rejected():
    # NW-SE and NE-SW on one slot must cross
    with pytest.raises(CrossingArcs):
        parse_wiring("SLOTS 1\nJOIN 1.NW 1.SE\nJOIN 1.NE 1.SW\n")


def test_arity():
    w = parse_wiring(NUMERATOR)
    with pytest.raises(ArityMismatch):
        insert_tangles(w, [BASIS_R1, BASIS_R2])
    with pytest.raises(ArityMismatch):
        theorem13_bound(w, [parse_pd("O 1")])


def test_single_slot_numerator():
    w = parse_wiring(NUMERATOR)
    r = check_bound(w, [BASIS_R1])
    assert (r.bound, r.actual_degree, r.slack) == (0, 0, 0)
    assert r.polynomial == evaluate_link(numerator_closure(BASIS_R1))


def test_chain_wiring_hopf():
    w = chain_wiring(2)
    r = check_bound(w, [BASIS_R2, BASIS_R2])
    assert r.bound == 1 and r.actual_degree == 1
    assert r.polynomial == evaluate_link(insert_tangles(w, [BASIS_R2, BASIS_R2]))


def test_bound_violated_is_assertion():
    assert issubclass(BoundViolated, AssertionError)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_decomposition_matches_direct(seed, k):
    rng = random.Random(seed)
    w = random_wiring(rng, k)
    tangles = [random_tangle(rng, 4) for _ in range(k)]
    direct = evaluate_link(insert_tangles(w, tangles))
    assert evaluate_by_decomposition(w, tangles) == direct
    assert z_degree(direct) <= theorem13_bound(w, tangles)


def test_random_wiring_valid():
    rng = random.Random(3)
    for k in range(1, 6):
        w = random_wiring(rng, k, max_closed=2)
        assert isinstance(w, WiringDiagram)
        assert parse_wiring(format_wiring(w)) == w


def test_stacked_slot_bound():
    t = vcompose(BASIS_R1, vcompose(BASIS_R1, BASIS_P))
    assert theorem13_bound(chain_wiring(2), [t, BASIS_R2]) == 2
