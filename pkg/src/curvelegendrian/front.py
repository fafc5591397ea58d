"""Combinatorial Legendrian fronts as left-to-right event lists.

A front is swept from left to right.  Between events the strands are
ordered bottom-up and addressed by 1-based positions.  Three kinds of
event occur:

``L@p``  a left cusp creating two strands at positions p, p+1;
``R@p``  a right cusp joining the strands at positions p, p+1;
``X@p``  a crossing exchanging the strands at positions p, p+1.

A :class:`LineFront` lives in the xz-plane (a front in R^3).  A
:class:`TorusFront` lives in the annulus (R/2piZ) x R and is cut open at
theta = 0; the strands crossing the cut are the *wall strands*.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property

LEFT, RIGHT, CROSS = "L", "R", "X"
KINDS = (LEFT, RIGHT, CROSS)


class FrontError(ValueError):
    """Raised for event lists that do not describe a valid front."""


class OddCuspImbalance(FrontError):
    pass


class IllegalSite(FrontError):
    pass


@dataclass(frozen=True, order=True)
class Event:
    kind: str
    pos: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FrontError(f"unknown event kind {self.kind!r}")
        if self.pos < 1:
            raise FrontError(f"event position must be >= 1, got {self.pos}")

    def __repr__(self):
        return f"{self.kind}@{self.pos}"

    def to_json(self):
        return {"k": self.kind, "p": self.pos}


def parse_events(items):
    """Accept Event objects, ``(kind, pos)`` pairs, ``"X@2"`` strings or JSON dicts."""
    out = []
    for item in items:
        if isinstance(item, Event):
            out.append(item)
        elif isinstance(item, str):
            kind, _, pos = item.partition("@")
            out.append(Event(kind, int(pos)))
        elif isinstance(item, dict):
            out.append(Event(item["k"], int(item["p"])))
        else:
            kind, pos = item
            out.append(Event(kind, int(pos)))
    return tuple(out)


@dataclass(frozen=True)
class Crossing:
    index: int       # event index
    rising: int      # arc entering at the lower position
    falling: int     # arc entering at the upper position


@dataclass(frozen=True)
class Cusp:
    index: int
    kind: str
    lower: int
    upper: int


@dataclass
class Trace:
    """Arc-level bookkeeping for a front.

    An *arc* is a maximal cusp-free piece of the front; on a torus front an
    arc may pass through the wall.  ``slices[i]`` lists the arcs bottom-up
    just before event ``i``; ``slices[-1]`` is the final slice.
    """

    slices: list
    crossings: list
    cusps: list
    narcs: int
    direction: dict = field(default_factory=dict)
    components: int = 0

    def arcs_at(self, index):
        return self.slices[index]


class _UnionFind:
    def __init__(self):
        self.parent = []

    def make(self):
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def strand_counts(events, start=0):
    """Running strand counts before each event and after the last one."""
    counts = [start]
    n = start
    for ev in events:
        if ev.kind == LEFT:
            if ev.pos > n + 1:
                raise FrontError(f"{ev!r} with only {n} strands")
            n += 2
        else:
            if ev.pos + 1 > n:
                raise FrontError(f"{ev!r} needs strands {ev.pos},{ev.pos + 1} but only {n} exist")
            if ev.kind == RIGHT:
                n -= 2
        counts.append(n)
    return counts


def _build_trace(events, wall):
    """Sweep the events, identifying arcs across crossings and (for tori) the wall."""
    uf = _UnionFind()
    current = [uf.make() for _ in range(wall)]
    raw_slices = []
    crossings, cusps = [], []
    for i, ev in enumerate(events):
        raw_slices.append(list(current))
        p = ev.pos - 1
        if ev.kind == LEFT:
            lo, hi = uf.make(), uf.make()
            current[p:p] = [lo, hi]
            cusps.append((i, LEFT, lo, hi))
        elif ev.kind == RIGHT:
            lo, hi = current[p], current[p + 1]
            del current[p:p + 2]
            cusps.append((i, RIGHT, lo, hi))
        else:
            lo, hi = current[p], current[p + 1]
            current[p], current[p + 1] = hi, lo
            crossings.append((i, lo, hi))
    raw_slices.append(list(current))
    if len(current) != wall:
        raise FrontError(f"front ends with {len(current)} strands, expected {wall}")
    # the final slice is glued back onto the wall
    for a, b in zip(current, raw_slices[0]):
        uf.union(a, b)
    roots = sorted({uf.find(a) for a in range(len(uf.parent))})
    relabel = {r: k for k, r in enumerate(roots)}
    lab = lambda a: relabel[uf.find(a)]  # noqa: E731
    return Trace(
        slices=[[lab(a) for a in s] for s in raw_slices],
        crossings=[Crossing(i, lab(lo), lab(hi)) for i, lo, hi in crossings],
        cusps=[Cusp(i, k, lab(lo), lab(hi)) for i, k, lo, hi in cusps],
        narcs=len(roots),
    )


def _orient(trace, seeds):
    """Propagate rightward(+1)/leftward(-1) directions from seed arcs.

    Directions flip across every cusp.  Returns the number of components.
    Raises FrontError if a seed contradicts the propagation.
    """
    partners = {a: [] for a in range(trace.narcs)}
    for c in trace.cusps:
        partners[c.lower].append(c.upper)
        partners[c.upper].append(c.lower)
    direction = {}
    components = 0

    def flood(arc, d):
        stack = [(arc, d)]
        while stack:
            a, s = stack.pop()
            if a in direction:
                if direction[a] != s:
                    raise FrontError("inconsistent orientation")
                continue
            direction[a] = s
            stack.extend((b, -s) for b in partners[a])

    for arc, d in seeds:
        if arc in direction:
            if direction[arc] != d:
                raise FrontError("wall orientations disagree with the traced orientation")
            continue
        components += 1
        flood(arc, d)
    for arc in range(trace.narcs):
        if arc not in direction:
            components += 1
            flood(arc, 1)
    trace.direction = direction
    trace.components = components
    return trace


def _first_left_cusp(trace):
    for c in trace.cusps:
        if c.kind == LEFT:
            return c
    return None


class _FrontBase:
    events: tuple

    @property
    def crossings(self):
        return sum(1 for e in self.events if e.kind == CROSS)

    @property
    def left_cusps(self):
        return sum(1 for e in self.events if e.kind == LEFT)

    @property
    def right_cusps(self):
        return sum(1 for e in self.events if e.kind == RIGHT)

    def max_strands(self):
        return max(strand_counts(self.events, self.wall_count))


@dataclass(frozen=True)
class LineFront(_FrontBase):
    """A front in R^3 (xz-plane)."""

    events: tuple
    orientation: int = 1
    link: bool = False

    wall_count = 0

    def __post_init__(self):
        object.__setattr__(self, "events", parse_events(self.events))
        if self.orientation not in (1, -1):
            raise FrontError("orientation flag must be +1 or -1")
        counts = strand_counts(self.events, 0)
        if counts[-1] != 0:
            raise FrontError("line front does not close up")
        if not self.link and self.trace.components != 1:
            raise FrontError(f"front has {self.trace.components} components; pass link=True")

    @cached_property
    def trace(self):
        t = _build_trace(self.events, 0)
        first = _first_left_cusp(t)
        seeds = [(first.upper, self.orientation)] if first else []
        return _orient(t, seeds)

    def with_events(self, events):
        return LineFront(tuple(events), self.orientation, self.link)

    def to_json(self):
        d = {"space": "line", "events": [e.to_json() for e in self.events]}
        if self.orientation != 1:
            d["orientation"] = self.orientation
        if self.link:
            d["link"] = True
        return d


@dataclass(frozen=True)
class TorusFront(_FrontBase):
    """A front in J^1(S^1), cut open at theta = 0."""

    events: tuple
    wall_orientations: tuple = ()
    link: bool = False

    def __post_init__(self):
        object.__setattr__(self, "events", parse_events(self.events))
        object.__setattr__(self, "wall_orientations", tuple(int(s) for s in self.wall_orientations))
        if any(s not in (1, -1) for s in self.wall_orientations):
            raise FrontError("wall orientations must be +1 or -1")
        counts = strand_counts(self.events, self.wall_count)
        if counts[-1] != self.wall_count:
            raise FrontError("torus front does not return to its wall strand count")
        if not self.link and self.trace.components != 1:
            raise FrontError(f"front has {self.trace.components} components; pass link=True")

    @property
    def wall_count(self):
        return len(self.wall_orientations)

    @cached_property
    def trace(self):
        t = _build_trace(self.events, self.wall_count)
        seeds = list(zip(t.slices[0], self.wall_orientations))
        if not seeds:
            first = _first_left_cusp(t)
            seeds = [(first.upper, 1)] if first else []
        return _orient(t, seeds)

    def with_events(self, events):
        return TorusFront(tuple(events), self.wall_orientations, self.link)

    def to_json(self):
        d = {
            "space": "torus",
            "events": [e.to_json() for e in self.events],
            "wall_orientations": list(self.wall_orientations),
        }
        if self.link:
            d["link"] = True
        return d


def front_from_json(data):
    space = data.get("space", "line")
    link = bool(data.get("link", False))
    if space == "torus":
        return TorusFront(parse_events(data["events"]), tuple(data.get("wall_orientations", ())), link)
    if space == "line":
        return LineFront(parse_events(data["events"]), int(data.get("orientation", 1)), link)
    raise FrontError(f"unknown front space {space!r}")


# -- classical invariants ----------------------------------------------------

def crossing_sign(front, crossing):
    d = front.trace.direction
    return 1 if d[crossing.rising] == d[crossing.falling] else -1


def writhe(front):
    return sum(crossing_sign(front, c) for c in front.trace.crossings)


def tb(front):
    """Thurston-Bennequin number: writhe minus the number of right cusps."""
    return writhe(front) - front.right_cusps


def cusp_is_upward(front, cusp):
    """True if the orientation runs from the lower to the upper branch."""
    d = front.trace.direction[cusp.lower]
    return d == -1 if cusp.kind == LEFT else d == 1


def rot(front):
    """Rotation number, half of (#downward cusps - #upward cusps)."""
    up = sum(1 for c in front.trace.cusps if cusp_is_upward(front, c))
    down = len(front.trace.cusps) - up
    if (down - up) % 2:
        raise OddCuspImbalance("odd cusp imbalance")
    return (down - up) // 2


def winding(front):
    return sum(front.wall_orientations)


def jplus(front):
    return tb(front) - winding(front) ** 2 + 1


@dataclass(frozen=True)
class InvariantReport:
    tb: int
    rot: int
    crossings: int
    left_cusps: int
    right_cusps: int
    winding: int | None = None
    jplus: int | None = None

    def to_json(self):
        d = {
            "tb": self.tb,
            "rot": self.rot,
            "crossings": self.crossings,
            "left_cusps": self.left_cusps,
            "right_cusps": self.right_cusps,
        }
        if self.winding is not None:
            d["winding"] = self.winding
            d["jplus"] = self.jplus
        return d


def invariants(front):
    if isinstance(front, TorusFront):
        return InvariantReport(tb(front), rot(front), front.crossings, front.left_cusps,
                               front.right_cusps, winding(front), jplus(front))
    return InvariantReport(tb(front), rot(front), front.crossings, front.left_cusps,
                           front.right_cusps)


# -- Maslov potential ----------------------------------------------------------

def maslov_potential(front):
    """Integer potential on arcs, upper branch of each cusp one above the lower.

    Returns ``(mu, period)``; ``period`` is ``2|rot|`` and potentials are
    only defined modulo it when it is nonzero.  The arc leaving the first
    left cusp downward gets potential 0.
    """
    trace = front.trace
    period = 2 * abs(rot(front))
    edges = {a: [] for a in range(trace.narcs)}
    for c in trace.cusps:
        edges[c.lower].append((c.upper, 1))
        edges[c.upper].append((c.lower, -1))
    first = _first_left_cusp(trace)
    order = [first.lower] if first else []
    order += range(trace.narcs)
    mu = {}
    for root in order:
        if root in mu:
            continue
        mu[root] = 0
        stack = [root]
        while stack:
            a = stack.pop()
            for b, step in edges[a]:
                val = mu[a] + step
                if period:
                    val %= period
                if b in mu:
                    ok = (mu[b] - val) % period == 0 if period else mu[b] == val
                    if not ok:
                        raise FrontError("inconsistent Maslov potential")
                    continue
                mu[b] = val
                stack.append(b)
    return mu, period


def crossing_degree(mu, period, crossing):
    deg = mu[crossing.falling] - mu[crossing.rising]
    return deg % period if period else deg


# -- Legendrian Reidemeister moves ----------------------------------------------

MOVES = ("I", "II", "II*", "III", "III*", "C")


def _sub(events, i, j, new):
    return tuple(events[:i]) + tuple(new) + tuple(events[j:])


def _try_move(events, move, site, counts, variant):
    """Return the new event tuple or None if ``move`` is not applicable at ``site``."""
    ev = events
    n = len(ev)
    E = Event
    if move == "I":  # triple point: X@p X@p+1 X@p <-> X@p+1 X@p X@p+1
        if site + 3 > n:
            return None
        a, b, c = ev[site:site + 3]
        if not (a.kind == b.kind == c.kind == CROSS and a.pos == c.pos and abs(a.pos - b.pos) == 1):
            return None
        return _sub(ev, site, site + 3, [E(CROSS, b.pos), E(CROSS, a.pos), E(CROSS, b.pos)])
    if move == "II":  # cusp passes through a strand: birth of two crossings
        if site >= n:
            return None
        e = ev[site]
        strands = counts[site]
        if e.kind == RIGHT:
            p = e.pos
            if variant == 0 and p + 2 <= strands:  # strand above dips below the cusp
                new = [E(CROSS, p + 1), E(CROSS, p), E(RIGHT, p + 1)]
            elif variant == 1 and p >= 2:  # strand below rises above the cusp
                new = [E(CROSS, p - 1), E(CROSS, p), E(RIGHT, p - 1)]
            else:
                return None
            return _sub(ev, site, site + 1, new)
        if e.kind == LEFT:
            p = e.pos
            if variant == 0 and p <= strands:  # cusp born below strand p instead of above
                new = [E(LEFT, p + 1), E(CROSS, p), E(CROSS, p + 1)]
            elif variant == 1 and p >= 2:  # cusp born above strand p-1 instead of below
                new = [E(LEFT, p - 1), E(CROSS, p), E(CROSS, p - 1)]
            else:
                return None
            return _sub(ev, site, site + 1, new)
        return None
    if move == "II*":  # inverse of II
        if site + 3 > n:
            return None
        a, b, c = ev[site:site + 3]
        kinds = (a.kind, b.kind, c.kind)
        if kinds == (CROSS, CROSS, RIGHT):
            if a.pos == c.pos and b.pos == a.pos - 1:
                return _sub(ev, site, site + 3, [E(RIGHT, b.pos)])
            if a.pos == c.pos and b.pos == a.pos + 1:
                return _sub(ev, site, site + 3, [E(RIGHT, b.pos)])
        if kinds == (LEFT, CROSS, CROSS):
            if b.pos == a.pos - 1 and c.pos == a.pos:
                return _sub(ev, site, site + 3, [E(LEFT, b.pos)])
            if b.pos == a.pos + 1 and c.pos == a.pos:
                return _sub(ev, site, site + 3, [E(LEFT, b.pos)])
        return None
    if move == "III":  # zigzag-free kink (fish tail) on a strand
        strands = counts[site] if site < len(counts) else 0
        if strands == 0:
            return None
        p = variant % strands + 1
        if (variant // strands) % 2 == 0:
            new = [E(LEFT, p + 1), E(CROSS, p), E(RIGHT, p + 1)]
        else:
            new = [E(LEFT, p), E(CROSS, p + 1), E(RIGHT, p)]
        return _sub(ev, site, site, new)
    if move == "III*":
        if site + 3 > n:
            return None
        a, b, c = ev[site:site + 3]
        if (a.kind, b.kind, c.kind) != (LEFT, CROSS, RIGHT) or a.pos != c.pos:
            return None
        if b.pos == a.pos - 1 or b.pos == a.pos + 1:
            return _sub(ev, site, site + 3, [])
        return None
    if move == "C":  # planar isotopy: commute two events on disjoint strands
        if site + 2 > n:
            return None
        a, b = ev[site:site + 2]
        swapped = _commute(a, b, counts[site])
        return None if swapped is None else _sub(ev, site, site + 2, swapped)
    raise IllegalSite(f"unknown move {move!r}")


def _simulate(strands, events, tag):
    """Apply events to a labelled strand list; return (strands, record)."""
    s = list(strands)
    record = []
    for k, e in enumerate(events):
        p = e.pos - 1
        if e.kind == LEFT:
            if p > len(s):
                return None
            pair = ((tag[k], 0), (tag[k], 1))
            s[p:p] = list(pair)
            record.append((LEFT, pair))
        else:
            if p + 1 >= len(s):
                return None
            pair = (s[p], s[p + 1])
            if e.kind == RIGHT:
                del s[p:p + 2]
            else:
                s[p], s[p + 1] = s[p + 1], s[p]
            record.append((e.kind, frozenset(pair)))
    return s, record


def _commute(a, b, strands):
    """Swap adjacent events acting on disjoint strands, or return None."""
    base = [("w", i) for i in range(strands)]
    target = _simulate(base, (a, b), ("a", "b"))
    if target is None:
        return None
    final, rec = target
    want = {rec[0], rec[1]}
    for q in range(1, strands + 4):
        b0 = Event(b.kind, q)
        for r in range(1, strands + 4):
            a1 = Event(a.kind, r)
            got = _simulate(base, (b0, a1), ("b", "a"))
            if got is None:
                continue
            f2, rec2 = got
            if f2 == final and {rec2[0], rec2[1]} == want:
                return (b0, a1)
    return None


def apply_move(front, move, site, variant=0):
    """Apply a Legendrian Reidemeister move, returning a new front.

    Moves: ``I`` triple-point slide; ``II``/``II*`` birth/death of a cusp
    passing through a strand; ``III``/``III*`` birth/death of a fish-tail
    kink (a left cusp, a crossing and a right cusp); ``C`` commutation of
    adjacent events on disjoint strands.  Raises IllegalSite when the move
    does not apply.
    """
    counts = strand_counts(front.events, front.wall_count)
    new = _try_move(front.events, move, site, counts, variant)
    if new is None:
        raise IllegalSite(f"move {move} not applicable at {site}")
    try:
        out = front.with_events(new)
    except FrontError as exc:
        raise IllegalSite(str(exc)) from exc
    if isinstance(out, LineFront):
        out = _keep_orientation(front, out, site)
    return out


def _keep_orientation(old, new, site):
    """Line-front orientation is pinned to the first left cusp, which a move
    may create or remove; flip the flag so an untouched strand keeps its
    direction.  Moves rewrite at most three events starting at ``site``."""
    a, b = old.events, new.events
    pre = site
    suf = 0
    while suf < min(len(a), len(b)) - site - 3 and a[-1 - suf] == b[-1 - suf]:
        suf += 1
    for i, j in ((pre, pre), (len(a) - suf, len(b) - suf)):
        old_arcs, new_arcs = old.trace.slices[i], new.trace.slices[j]
        if old_arcs:
            if old.trace.direction[old_arcs[0]] != new.trace.direction[new_arcs[0]]:
                return LineFront(new.events, -new.orientation, new.link)
            return new
    return new


def random_moves(front, count, rng=None, max_events=None):
    """Apply ``count`` randomly chosen legal moves; returns the final front."""
    rng = rng or random.Random(0)
    done = 0
    limit = max_events or (len(front.events) + 24)
    attempts = 0
    while done < count:
        attempts += 1
        if attempts > 200 * count + 1000:
            break
        n = len(front.events)
        move = rng.choice(MOVES)
        if move in ("II", "III") and n >= limit:
            move = rng.choice(("II*", "III*", "I", "C"))
        site = rng.randrange(n + 1)
        variant = rng.randrange(64)
        try:
            front = apply_move(front, move, site, variant)
        except IllegalSite:
            continue
        done += 1
    return front


# -- framed diagram code --------------------------------------------------------

def gauss_code(front):
    """Gauss code of the smoothed front: crossings read along the orientation.

    Each entry is ``(label, over, sign)`` with ``over`` True on the
    overstrand (the strand of smaller slope, i.e. the falling one).
    """
    trace = front.trace
    d = trace.direction
    # walk arcs along the orientation
    at_arc = {a: [] for a in range(trace.narcs)}
    for k, c in enumerate(trace.crossings):
        sign = crossing_sign(front, c)
        at_arc[c.rising].append((c.index, k, False, sign))
        at_arc[c.falling].append((c.index, k, True, sign))
    next_arc = {}
    for c in trace.cusps:
        if c.kind == LEFT:
            a, b = (c.lower, c.upper) if d[c.lower] == -1 else (c.upper, c.lower)
        else:
            a, b = (c.lower, c.upper) if d[c.lower] == 1 else (c.upper, c.lower)
        next_arc[a] = b
    # arcs through the wall continue into themselves; order crossings along each arc
    sequence = []
    if not trace.narcs:
        return ()
    start = min(range(trace.narcs))
    arc, seen = start, set()
    while arc not in seen:
        seen.add(arc)
        items = sorted(at_arc[arc])
        if d[arc] == -1:
            items.reverse()
        sequence.extend((k, over, sign) for _, k, over, sign in items)
        if arc not in next_arc:
            break
        arc = next_arc[arc]
    return tuple(sequence)


def _canonical(seq):
    best = None
    n = len(seq)
    for shift in range(max(n, 1)):
        rotated = seq[shift:] + seq[:shift]
        labels = {}
        code = []
        for k, over, sign in rotated:
            labels.setdefault(k, len(labels))
            code.append((labels[k], over, sign))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best or ()


@dataclass(frozen=True)
class FramedCode:
    gauss: tuple
    framing: int
    winding: int | None = None

    def to_json(self):
        return {"gauss": [list(g) for g in self.gauss], "framing": self.framing,
                "winding": self.winding}


def framed_code(front):
    """Canonical (Gauss code, tb[, winding]) triple.

    Equal codes certify the same framed diagram up to relabeling; unequal
    codes prove nothing.
    """
    w = winding(front) if isinstance(front, TorusFront) else None
    return FramedCode(_canonical(gauss_code(front)), tb(front), w)


# -- simple position ------------------------------------------------------------

def is_simple(events):
    """True when all right cusps sit at one x, after every other event."""
    tail = len(events)
    while tail and events[tail - 1].kind == RIGHT:
        tail -= 1
    if any(e.kind == RIGHT for e in events[:tail]):
        return False
    return all(e.pos == 1 for e in events[tail:])


def simple_events(events):
    """Legendrian isotopic event list with all right cusps pushed to the far right.

    Each right cusp is deferred: its two strands stay adjacent and travel on
    to the right.  Whenever deferred pairs sit between two strands that
    must meet, they are slid up across the upper one, two crossings per
    pair (a cusp passing a strand).
    """
    return simple_events_traced(events)[0]


def simple_events_traced(events):
    """Like :func:`simple_events`, also returning the origin of every output event.

    ``origin[i]`` is the index in ``events`` of the event that output event i
    comes from, or None for the crossings created by sliding a deferred cusp.
    """
    if is_simple(events):
        return tuple(events), list(range(len(events)))
    orig = []      # live strands of the input front, bottom-up
    cur = []       # strands of the output front, bottom-up
    out = []
    origin = []
    fresh = itertools.count()
    deferred = {}  # strand -> partner, for pairs whose cusp was pushed right
    cusp_of = {}   # lower strand of a deferred pair -> input event index

    def clear_between(lo, hi):
        # slide deferred pairs sitting between lo and hi up past hi
        while True:
            i, j = cur.index(lo), cur.index(hi)
            if j == i + 1:
                return
            if deferred.get(cur[j - 2]) != cur[j - 1]:
                raise FrontError("deferred strands lost adjacency")
            out.append(Event(CROSS, j))
            out.append(Event(CROSS, j - 1))
            origin.extend((None, None))
            cur[j - 2:j + 1] = [hi, cur[j - 2], cur[j - 1]]

    for n, ev in enumerate(events):
        q = ev.pos - 1
        if ev.kind == LEFT:
            a, b = next(fresh), next(fresh)
            at = 0 if q == 0 else cur.index(orig[q - 1]) + 1
            cur[at:at] = [a, b]
            orig[q:q] = [a, b]
            out.append(Event(LEFT, at + 1))
            origin.append(n)
            continue
        lo, hi = orig[q], orig[q + 1]
        clear_between(lo, hi)
        i = cur.index(lo)
        if ev.kind == CROSS:
            out.append(Event(CROSS, i + 1))
            origin.append(n)
            cur[i], cur[i + 1] = hi, lo
            orig[q], orig[q + 1] = hi, lo
        else:
            deferred[lo], deferred[hi] = hi, lo
            cusp_of[lo] = n
            del orig[q:q + 2]
    if orig:
        raise FrontError("front does not close up")
    for i in range(0, len(cur), 2):
        if deferred.get(cur[i]) != cur[i + 1]:
            raise FrontError("deferred strands lost adjacency")
    # the bottom pair closes first, each R@1 taking the lowest remaining pair
    for i in range(0, len(cur), 2):
        out.append(Event(RIGHT, 1))
        origin.append(cusp_of[cur[i]])
    return tuple(out), origin
