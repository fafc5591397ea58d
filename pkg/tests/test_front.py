import random

import pytest
from hypothesis import given, settings, strategies as st

from curvelegendrian.conormal import conormal_front, corpus
from curvelegendrian.curve import reverse
from curvelegendrian.front import (FrontError, IllegalSite, LineFront, TorusFront, apply_move, framed_code,
                                   front_from_json, invariants, jplus, random_moves, rot, tb, winding)
from curvelegendrian.satellite import stabilized_unknot

EYE = LineFront(("L@1", "R@1"))
TREFOIL = LineFront(("L@1", "L@3", "X@2", "X@2", "X@2", "R@3", "R@1"))


def test_eye():
    assert tb(EYE) == -1 and rot(EYE) == 0


def test_stabilized_unknot_classical():
    for sign in (1, -1):
        s = stabilized_unknot(sign)
        assert tb(s) == -2 and rot(s) == sign
        assert s.crossings == 0


def test_maximal_trefoil():
    assert tb(TREFOIL) == 1 and rot(TREFOIL) == 0


def test_orientation_flag_flips_rot():
    s = stabilized_unknot(1)
    assert rot(LineFront(s.events, orientation=-1)) == -rot(s)


def test_invalid_fronts():
    with pytest.raises(FrontError):
        LineFront(("L@1",))
    with pytest.raises(FrontError):
        LineFront(("L@1", "X@1", "R@1", "R@1"))
    with pytest.raises(FrontError):
        LineFront(("L@1", "L@3", "R@1", "R@1"))
    with pytest.raises(FrontError):
        TorusFront(("R@1",), (1,))


def test_two_component_front_needs_link_flag():
    with pytest.raises(FrontError):
        LineFront(("L@1", "L@3", "R@3", "R@1"))
    assert LineFront(("L@1", "L@3", "R@3", "R@1"), link=True).trace.components == 2


def test_move_two_birth_on_eye():
    # a fish tail on the upper branch, then its cusp slides through the lower branch
    g = apply_move(EYE, "III", 1, 1)
    h = apply_move(g, "II", 1, 1)
    assert len(g.events) == 5 and len(h.events) == 7
    assert tb(g) == tb(h) == -1 and rot(h) == 0
    with pytest.raises(IllegalSite):
        apply_move(EYE, "I", 0)


def test_move_one_on_triangle():
    f = LineFront(("L@1", "L@2", "L@3", "X@2", "X@3", "X@2", "R@3", "R@2", "R@1"), link=True)
    g = apply_move(f, "I", 3)
    assert [repr(e) for e in g.events[3:6]] == ["X@3", "X@2", "X@3"]
    assert g.crossings == f.crossings


@pytest.mark.parametrize("front", [EYE, TREFOIL, stabilized_unknot(1), stabilized_unknot(-1)])
def test_random_moves_keep_invariants(front):
    rng = random.Random(11)
    before = invariants(front)
    for _ in range(30):
        g = random_moves(front, 20, rng)
        after = invariants(g)
        assert (after.tb, after.rot) == (before.tb, before.rot)


def test_random_moves_on_cstar_conormal():
    f = conormal_front(corpus("cstar"))
    rng = random.Random(3)
    g = f
    for _ in range(100):
        g = random_moves(g, 1, rng, max_events=len(f.events) + 20)
        assert (tb(g), rot(g), winding(g)) == (-3, 0, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_jplus_identity(seed):
    from conftest import random_curve
    f = conormal_front(random_curve(random.Random(seed)))
    assert jplus(f) + winding(f) ** 2 - 1 == tb(f)


def test_framed_codes():
    assert framed_code(EYE) == framed_code(LineFront(("L@1", "R@1")))
    a = framed_code(conormal_front(corpus("cstar")))
    b = framed_code(conormal_front(reverse(corpus("cstar"))))
    assert (a.framing, a.winding) == (b.framing, b.winding)


def test_json_round_trip():
    f = conormal_front(corpus("cstar"))
    assert front_from_json(f.to_json()) == f
    assert front_from_json(stabilized_unknot(-1).to_json()) == stabilized_unknot(-1)
