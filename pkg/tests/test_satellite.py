import pytest

from curvelegendrian.conormal import conormal_front, corpus
from curvelegendrian.curve import reverse
from curvelegendrian.front import LineFront, TorusFront, rot, strand_counts, tb
from curvelegendrian.satellite import BadN, cut, n_copy, pattern_offset, splice, stabilized_unknot

EYE = LineFront(("L@1", "R@1"))


def test_n_copy_identity():
    assert n_copy(EYE, 1) == EYE
    with pytest.raises(BadN):
        n_copy(EYE, 0)


def test_two_copy_of_eye():
    f = n_copy(EYE, 2)
    assert (f.left_cusps, f.right_cusps, f.crossings) == (2, 2, 2)
    assert f.trace.components == 2


def test_two_copy_of_stabilized_unknot():
    assert n_copy(stabilized_unknot(1), 2).max_strands() == 8


def test_stabilized_unknot_shapes():
    assert [repr(e) for e in stabilized_unknot(-1).events] == ["L@1", "L@1", "R@2", "R@1"]
    for sign in (1, -1):
        assert stabilized_unknot(sign).trace.components == 1


def test_cut():
    t = cut(conormal_front(corpus("square")))
    assert t.width == 1 and t.events == ()
    t = cut(conormal_front(corpus("cstar")))
    assert t.width == 2 and sorted(t.orientations) == [-1, 1]


@pytest.mark.parametrize("companion", [EYE, stabilized_unknot(1), stabilized_unknot(-1)])
def test_trivial_pattern_is_identity(companion):
    assert splice(conormal_front(corpus("square")), companion) == companion
    assert splice(TorusFront((), (1,)), companion) == companion


@pytest.mark.parametrize("name", ["fig8", "cstar"])
@pytest.mark.parametrize("sign", [1, -1])
def test_winding_zero_patterns_give_rot_zero_knots(name, sign):
    for c in (corpus(name), reverse(corpus(name))):
        s = splice(conormal_front(c), stabilized_unknot(sign))
        assert not s.link
        assert rot(s) == 0
        assert strand_counts(s.events, 0)[-1] == 0


def test_pattern_events_are_copied_in_order():
    p = conormal_front(corpus("cstar"))
    c = stabilized_unknot(1)
    s = splice(p, c)
    off = pattern_offset(p, c)
    shift = s.events[off].pos - p.events[0].pos
    assert [(e.kind, e.pos + shift) for e in p.events] == [(e.kind, e.pos) for e in s.events[off:off + len(p.events)]]


def test_c_rs_satellites_share_tb_and_crossings():
    fronts = [splice(conormal_front(corpus("c_rs", r, 2 - r)), stabilized_unknot(1)) for r in range(3)]
    assert len({(tb(f), f.crossings) for f in fronts}) == 1
