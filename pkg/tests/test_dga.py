import itertools

import pytest

from curvelegendrian.conormal import conormal_front, corpus
from curvelegendrian.curve import reverse
from curvelegendrian.dga import (CyclicGrading, NotAnAugmentation, augmentations, build_dga, compose_is_zero,
                                 d_squared, degree_violations, has_graded_ruling, is_augmentation, linearize,
                                 poincare, poincare_list, poincare_set, reduce_dga)
from curvelegendrian.front import LineFront, apply_move, random_moves
from curvelegendrian.satellite import splice, stabilized_unknot

EYE = LineFront(("L@1", "R@1"))


def sat(c, sign=1):
    return splice(conormal_front(c), stabilized_unknot(sign))


def test_eye_dga():
    d = build_dga(EYE)
    assert d.degrees == [1]
    assert d.differential[0] == frozenset()
    augs = augmentations(d)
    assert augs == [{}]
    assert poincare(d, augs[0]).terms == ((1, 1),)
    assert all(m == [] or not any(m) for _, _, m in linearize(d, augs[0]).values())
    assert has_graded_ruling(EYE) == (True, 1)


def test_stabilized_unknot_dga():
    for sign in (1, -1):
        d = build_dga(stabilized_unknot(sign))
        # simple position adds two slide crossings; they cancel against each other
        r = reduce_dga(d)
        assert len(r.names) == 2 and r.period == 2
        assert augmentations(r) == []
        assert augmentations(d) == []
        assert has_graded_ruling(stabilized_unknot(sign)) == (False, 0)
        with pytest.raises(CyclicGrading):
            poincare_set(stabilized_unknot(sign))


def test_not_an_augmentation():
    d = build_dga(sat(corpus("cstar")))
    good = augmentations(d)
    zero = [g for g in range(len(d.names)) if d.degrees[g] == 0]
    bad = None
    for bits in itertools.product((0, 1), repeat=len(zero)):
        e = {g: 1 for g, b in zip(zero, bits) if b}
        if e not in good:
            bad = e
            break
    assert bad is not None and not is_augmentation(d, bad)
    with pytest.raises(NotAnAugmentation):
        linearize(d, bad)


FRONTS = [
    ("fig8", 1), ("fig8", -1), ("cstar", 1), ("cstar", -1),
]


@pytest.mark.parametrize("name, sign", FRONTS)
@pytest.mark.parametrize("flip", [False, True])
def test_structure(name, sign, flip):
    c = corpus(name)
    d = build_dga(sat(reverse(c) if flip else c, sign))
    assert not d_squared(d)
    assert not degree_violations(d)
    for e in augmentations(d):
        assert is_augmentation(d, e)
        lin = linearize(d, e)
        assert all(compose_is_zero(lin, k) for k in lin)


def _brute_force_set(d):
    zero = [g for g in range(len(d.names)) if d.degrees[g] == 0]
    found = set()
    for bits in itertools.product((0, 1), repeat=len(zero)):
        e = {g: 1 for g, b in zip(zero, bits) if b}
        if is_augmentation(d, e):
            found.add(poincare(d, e))
    return found


@pytest.mark.parametrize("name, sign", FRONTS + [("c_rs", 1)])
def test_reduction_preserves_poincare_set(name, sign):
    c = corpus("c_rs", 1, 0) if name == "c_rs" else corpus(name)
    for curve in (c, reverse(c)):
        d = build_dga(sat(curve, sign))
        if sum(1 for x in d.degrees if x == 0) > 18:
            continue
        r = reduce_dga(d)
        assert not d_squared(r)
        assert set(poincare_list(r)) == _brute_force_set(d)


def test_bottom_pair_values():
    got = {str(p) for p in poincare_set(sat(corpus("cstar")))}
    assert got == {"2t + t^-1"}
    got = {str(p) for p in poincare_set(sat(reverse(corpus("cstar"))))}
    assert got == {"t^3 + t + t^-3"}


def test_poincare_set_under_moves():
    import random
    rng = random.Random(17)
    base = sat(corpus("cstar"))
    want = poincare_set(base)
    for _ in range(25):
        assert poincare_set(random_moves(base, 6, rng, max_events=len(base.events) + 12)) == want
    for _ in range(25):
        assert poincare_set(random_moves(EYE, 8, rng)) == poincare_set(EYE)


def test_eye_move_example():
    g = apply_move(EYE, "III", 1, 1)
    assert poincare_set(g) == poincare_set(EYE)


def test_sabloff_duality_on_small_corpus():
    for curve in (corpus("fig8"), corpus("cstar"), reverse(corpus("cstar"))):
        for sign in (1, -1):
            for p in poincare_set(sat(curve, sign)):
                h = dict(p.terms)
                assert h.get(1, 0) == h.get(-1, 0) + 1
                assert all(h.get(i, 0) == h.get(-i, 0) for i in h if abs(i) != 1)


from hypothesis import assume, given, settings  # noqa: E402

from conftest import rect_curves  # noqa: E402
from curvelegendrian.curve import whitney_index  # noqa: E402


@settings(max_examples=40, deadline=None)
@given(rect_curves(kmax=4))
def test_reduction_matches_brute_force_on_random_curves(c):
    assume(whitney_index(c) == 0 and conormal_front(c).wall_count > 0)
    s = sat(c)
    assume(not s.link)
    d = build_dga(s)
    assume(sum(1 for x in d.degrees if x == 0) <= 14)
    assert not d_squared(d)
    assert set(poincare_list(reduce_dga(d))) == _brute_force_set(d)
    ok, _ = has_graded_ruling(s)
    assert ok == bool(_brute_force_set(d))
