"""Legendrian satellites: n-copies of R^3 fronts with a solid-torus pattern spliced in."""

from __future__ import annotations

from dataclasses import dataclass

from .front import CROSS, LEFT, RIGHT, Event, FrontError, LineFront, TorusFront, strand_counts


class BadN(ValueError):
    pass


class ComponentMismatch(FrontError):
    pass


@dataclass(frozen=True)
class Tangle:
    """A torus front cut open at theta = 0: m strands in, m strands out."""

    events: tuple
    orientations: tuple  # bottom-up, +1 for strands running with theta

    @property
    def width(self):
        return len(self.orientations)


def cut(p: TorusFront) -> Tangle:
    return Tangle(p.events, p.wall_orientations)


def _bubble(start, target):
    """Adjacent transpositions (1-based positions) taking ``start`` to ``target``."""
    cur = list(start)
    word = []
    for i, want in enumerate(target):
        j = cur.index(want, i)
        while j > i:
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            word.append(j)  # 0-based j-1 <-> j is position j in 1-based terms
            j -= 1
    return word


def _block_swap(base, n):
    lower = [("a", i) for i in range(n)]
    upper = [("b", i) for i in range(n)]
    return [Event(CROSS, base + q) for q in _bubble(lower + upper, upper + lower)]


def _cusp_block(n):
    """Crossings turning n nested left cusps into blocked order (lower branches, then upper)."""
    interleaved = [x for i in range(n) for x in (("a", i), ("b", i))]
    blocked = [("a", i) for i in range(n)] + [("b", i) for i in range(n)]
    return _bubble(interleaved, blocked)


def _n_copy_events(events, n, insert=None):
    """n-copy an event list; ``insert=(index, arc_offset, tangle_events)`` splices a tangle.

    The tangle is inserted immediately after event ``index`` on the copies
    of the strand sitting at companion position ``arc_offset``.
    """
    out = []
    opening = _cusp_block(n)
    for i, ev in enumerate(events):
        base = n * (ev.pos - 1)
        if ev.kind == CROSS:
            out.extend(_block_swap(base, n))
        elif ev.kind == LEFT:
            out.extend(Event(LEFT, base + 1) for _ in range(n))
            out.extend(Event(CROSS, base + q) for q in opening)
        else:
            closing = _bubble(
                [("a", j) for j in range(n)] + [("b", j) for j in range(n)],
                [x for j in range(n) for x in (("a", j), ("b", j))],
            )
            out.extend(Event(CROSS, base + q) for q in closing)
            out.extend(Event(RIGHT, base + 1) for _ in range(n))
        if insert is not None and insert[0] == i:
            offset = n * (insert[1] - 1)
            out.extend(Event(e.kind, e.pos + offset) for e in insert[2])
    return tuple(out)


def n_copy(c: LineFront, n: int) -> LineFront:
    """Replace each strand of a front by n vertically shifted copies."""
    if n < 1:
        raise BadN("n must be positive")
    return LineFront(_n_copy_events(c.events, n), c.orientation, link=n > 1)


def stabilized_unknot(sign=1) -> LineFront:
    """The once-stabilized unknot, tb = -2 and rot = sign."""
    if sign == 1:
        return LineFront(("L@1", "L@2", "R@1", "R@1"))
    if sign == -1:
        return LineFront(("L@1", "L@1", "R@2", "R@1"))
    raise ValueError("sign must be +1 or -1")


def splice(p: TorusFront, c: LineFront):
    """Legendrian satellite of the companion ``c`` with pattern ``p``.

    The pattern is inserted right after the companion's first left cusp,
    on the branch oriented to the right; pattern wall strand i (bottom-up)
    joins companion copy i.  Returns a LineFront; if the result has more
    than one component it is returned with ``link=True``.
    """
    m = p.wall_count
    if not c.events or c.events[0].kind != LEFT:
        raise FrontError("companion front must start with a left cusp")
    if m == 0:
        raise FrontError("pattern has no wall strands")
    first = c.events[0]
    trace = c.trace
    cusp = trace.cusps[0]
    upward = trace.direction[cusp.upper] == 1
    strand = first.pos + 1 if upward else first.pos
    events = _n_copy_events(c.events, m, insert=(0, strand, p.events))
    strand_counts(events, 0)
    try:
        return LineFront(events, c.orientation)
    except FrontError:
        out = LineFront(events, c.orientation, link=True)
        if out.trace.components > 1:
            return out
        raise


def pattern_offset(p: TorusFront, c: LineFront) -> int:
    """Index in ``splice(p, c).events`` of the first pattern event.

    Pattern event i of ``p`` is event ``pattern_offset(p, c) + i`` of the
    satellite: the pattern follows the m-copied first left cusp.
    """
    m = p.wall_count
    return m + len(_cusp_block(m))
