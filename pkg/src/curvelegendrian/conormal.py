"""Conormal fronts of rectilinear plane curves.

Each segment of a rectilinear curve lifts to a single point ("dot") of
the annulus (R/2piZ) x R.  Theta is measured in quarter turns, so a dot
sits at t in {0, 1, 2, 3}:

    +x at height y  ->  (1,  y)        -x at height y  ->  (3, -y)
    +y at abscissa x -> (2, -x)        -y at abscissa x -> (0,  x)

Consecutive dots are joined by straight chords one quarter turn wide.  A
dot whose two corners turn in opposite senses is a cusp.  The resulting
piecewise-linear front is swept into a :class:`TorusFront`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .curve import CurveError, RectCurve, reverse, validate_rect
from .front import CROSS, LEFT, RIGHT, Event, FrontError, TorusFront


class DegenerateFront(FrontError):
    pass


class UnknownName(KeyError):
    pass


class BadParams(ValueError):
    pass


# direction -> (quarter turn, height as a function of the segment line)
_RULES = {
    (1, 0): (1, lambda x, y: y),
    (0, 1): (2, lambda x, y: -x),
    (-1, 0): (3, lambda x, y: -y),
    (0, -1): (0, lambda x, y: x),
}


@dataclass(frozen=True)
class Dot:
    t: int          # quarter turn, theta = t * pi / 2
    height: int
    turn_in: int    # turn at the corner before the segment
    turn_out: int   # turn at the corner after the segment

    @property
    def is_cusp(self):
        return self.turn_in != self.turn_out

    @property
    def cusp_kind(self):
        if not self.is_cusp:
            return None
        return RIGHT if self.turn_in == 1 else LEFT


def dots(c: RectCurve):
    """One dot per segment, in traversal order."""
    turns = c.turns()
    n = len(c.corners)
    out = []
    for i, (d, ((x0, y0), _)) in enumerate(zip(c.directions(), c.segments())):
        t, h = _RULES[d]
        out.append(Dot(t, h(x0, y0), turns[i], turns[(i + 1) % n]))
    return out


@dataclass(frozen=True)
class Chord:
    """Straight piece of the front over one quarter interval [k, k+1]."""

    ident: int      # index of the corner it comes from
    k: int
    left: int       # height at t = k
    right: int      # height at t = k + 1
    direction: int  # +1 traversed toward increasing theta

    def at(self, tau):
        return self.left + (self.right - self.left) * tau


def chords(c: RectCurve):
    ds = dots(c)
    n = len(ds)
    out = []
    for i in range(n):
        a, b = ds[i], ds[(i + 1) % n]
        turn = a.turn_out
        if turn == 1:
            out.append(Chord((i + 1) % n, a.t, a.height, b.height, 1))
        else:
            out.append(Chord((i + 1) % n, b.t, b.height, a.height, -1))
    return out


def _crossing_word(order, chord_list):
    """Crossing events inside one open quarter interval.

    ``order`` is the bottom-up list of chords just right of t = k.  Chords
    meeting at a common point are reversed as a block (a triple point is
    resolved by an arbitrary reduced word, which is a Legendrian isotopy).
    """
    order = list(order)
    times = set()
    for i, a in enumerate(chord_list):
        for b in chord_list[i + 1:]:
            da, db = a.right - a.left, b.right - b.left
            if da == db:
                continue
            tau = Fraction(b.left - a.left, da - db)
            if 0 < tau < 1:
                times.add(tau)
    events = []
    pairs = []
    times = sorted(times) + [Fraction(1)]
    for tau, after in zip(times, times[1:]):
        pos = 0
        while pos < len(order):
            h = order[pos].at(tau)
            end = pos + 1
            while end < len(order) and order[end].at(tau) == h:
                end += 1
            if end - pos > 1:
                # bubble the block into reverse order
                block = order[pos:end]
                m = len(block)
                for j in range(m - 1):
                    for q in range(m - 1 - j):
                        events.append(Event(CROSS, pos + q + 1))
                        pairs.append((block[q].ident, block[q + 1].ident))
                        block[q], block[q + 1] = block[q + 1], block[q]
                order[pos:end] = block
            pos = end
        heights = [ch.at((tau + after) / 2) for ch in order]
        if heights != sorted(heights):
            raise DegenerateFront("crossings not resolved consistently")
    return events, order, pairs


def conormal_front(c: RectCurve) -> TorusFront:
    """The conormal front of a rectilinear curve, cut open just before theta = 0."""
    return conormal_front_traced(c)[0]


def conormal_front_traced(c: RectCurve):
    """The conormal front together with the corners behind each event.

    The second value lists, per event, the pair of corner indices whose
    chords cross (for crossings) or meet (for cusps).
    """
    ds = dots(c)
    all_chords = chords(c)
    by_k = {k: [ch for ch in all_chords if ch.k == k] for k in range(4)}

    def order_before(k):  # just left of t = k, chords of interval k-1
        return sorted(by_k[(k - 1) % 4], key=lambda ch: (ch.right, ch.left))

    def order_after(k):
        return sorted(by_k[k], key=lambda ch: (ch.left, ch.right))

    for k in range(4):
        for key, chs in ((lambda ch: ch.left, by_k[k]), (lambda ch: ch.right, by_k[k])):
            hs = [key(ch) for ch in chs]
            # only the two branches of a cusp may share an endpoint
            for h in set(hs):
                if hs.count(h) > 2:
                    raise DegenerateFront(f"three chords meet at height {h}")

    events = []
    sources = []
    wall = order_before(0)
    current = list(wall)
    for k in range(4):
        cusp_dots = sorted((d for d in ds if d.t == k and d.is_cusp), key=lambda d: d.height)
        for d in cusp_dots:
            if d.cusp_kind != RIGHT:
                continue
            heights = [ch.right for ch in current]
            p = heights.index(d.height)
            if p + 1 >= len(current) or current[p + 1].right != d.height:
                raise DegenerateFront("right cusp branches are not adjacent")
            events.append(Event(RIGHT, p + 1))
            sources.append((current[p].ident, current[p + 1].ident))
            del current[p:p + 2]
        # continuing strands pass from interval k-1 to interval k at the same height
        successor = {}
        for ch in by_k[k]:
            successor.setdefault(ch.left, []).append(ch)
        nxt = []
        for ch in current:
            follow = successor[ch.right]
            if len(follow) != 1:
                raise DegenerateFront("strand continues into a cusp")
            nxt.append(follow[0])
        current = nxt
        for d in cusp_dots:
            if d.cusp_kind != LEFT:
                continue
            p = sum(1 for ch in current if ch.left < d.height)
            pair = sorted(successor[d.height], key=lambda ch: ch.right)
            events.append(Event(LEFT, p + 1))
            sources.append((pair[0].ident, pair[1].ident))
            current[p:p] = pair
        if current != order_after(k):
            raise DegenerateFront(f"slice mismatch at t={k}")
        word, current, pairs = _crossing_word(current, by_k[k])
        events.extend(word)
        sources.extend(pairs)
    if [ch.right for ch in current] != [ch.right for ch in wall]:
        # the slice at the end must match the wall order
        raise DegenerateFront("front does not close up at the wall")
    return TorusFront(tuple(events), tuple(ch.direction for ch in wall)), sources


# -- corpus -------------------------------------------------------------------

def _load_data():
    text = resources.files("curvelegendrian").joinpath("data", "corpus.json").read_text()
    return json.loads(text)


_DATA = None


def corpus_table():
    global _DATA
    if _DATA is None:
        _DATA = _load_data()
    return _DATA


def corpus_names():
    names = sorted(corpus_table()["curves"])
    return names + ["c_rs"]


def corpus(name, *params):
    """Built-in rectilinear curves.

    ``corpus("cstar")`` pairs with ``reverse(corpus("cstar"))``: same tb,
    different satellite Poincare sets.  ``corpus("c_rs", r, s)`` is the
    chained family and ``corpus("fig2_row", row, side)`` returns one side of
    the comparison rows i..iv listed in the data file.
    """
    table = corpus_table()
    if name == "c_rs":
        if len(params) != 2 or any(int(p) != p or p < 0 for p in params):
            raise BadParams("c_rs needs two nonnegative integers r, s")
        r, s = (int(p) for p in params)
        if r + s == 0:
            raise BadParams("c_rs needs r + s >= 1")
        return c_rs(r, s)
    if name == "fig2_row":
        if len(params) != 2:
            raise BadParams("fig2_row needs a row (i..iv) and a side (left|right)")
        row, side = params
        rows = table["fig2_rows"]
        if row not in rows or side not in ("left", "right"):
            raise BadParams(f"bad fig2_row parameters {params!r}")
        entry = rows[row][side]
        return _resolve(entry)
    if params:
        raise BadParams(f"{name} takes no parameters")
    if name not in table["curves"]:
        raise UnknownName(name)
    return validate_rect([tuple(p) for p in table["curves"][name]])


def _resolve(entry):
    c = corpus(entry["curve"])
    return reverse(c) if entry.get("reversed") else c


# Slot k of the C_{r,s} chain holds its motif in one of four poses so that
# consecutive slots meet along parallel edges; the chain climbs a staircase
# (right, down, right, up, ...) and neighbours are joined by a crossed band.
_POSES = (
    lambda b, x, y: (x, y),
    lambda b, x, y: (b - x, y),
    lambda b, x, y: (b - y, x),
    lambda b, x, y: (y, x),
)
_STEPS = ("R", "D", "R", "U")
# (forward, backward) charts in which both joining edges point north
_CHARTS = {
    "R": (lambda x, y: (x, y), lambda x, y: (x, y)),
    "D": (lambda x, y: (y, -x), lambda x, y: (-y, x)),
    "U": (lambda x, y: (y, x), lambda x, y: (y, x)),
}


@dataclass(frozen=True)
class Slot:
    sign: str  # "+" or "-"
    origin: tuple
    corners: frozenset  # plane points of the placed motif


def _slots(signs):
    data = corpus_table()["c_rs"]
    box, scale, step = data["box"], data["scale"], data["spacing"]
    pos = [(0, 0)]
    for k in range(len(signs) - 1):
        x, y = pos[-1]
        pos.append((x + step, y - step if _STEPS[k % 4] == "D" else y + 2 * step))
    out = []
    for k, sign in enumerate(signs):
        motif = data["plus"] if sign == "+" else data["minus"]
        ox, oy = pos[k]
        pts = [(ox + scale * u, oy + scale * v) for u, v in (_POSES[k % 4](box, x, y) for x, y in motif)]
        out.append((Slot(sign, pos[k], frozenset(pts)), pts))
    return out


def _edge_index(poly, x, lo):
    m = len(poly)
    hits = [
        i for i in range(m)
        if poly[i][0] == poly[(i + 1) % m][0] == x and poly[i][1] <= lo < poly[(i + 1) % m][1]
    ]
    if len(hits) != 1:
        raise BadParams("c_rs port edge not found")
    return hits[0]


def _band(a, ia, b, ib, heights, m1, m2):
    """Join polygons a and b by a crossed band between their north-going
    edges a[ia] -> a[ia+1] (left) and b[ib] -> b[ib+1] (right)."""
    h1, h2, h3, h4 = heights
    a = a[ia + 1:] + a[:ia + 1]
    b = b[ib + 1:] + b[:ib + 1]
    ax, bx = a[0][0], b[0][0]
    d = (m1 - m2) // 2
    # shift the cut ends so the two leftover pieces of each edge are not collinear
    a[0] = (ax + d, a[0][1])
    b[-1] = (bx - d, b[-1][1])
    return (a + [(ax, h1), (m1, h1), (m1, h4), (bx, h4)]
            + b + [(bx - d, h3), (m2, h3), (m2, h2), (ax + d, h2)])


def _clean(pts):
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if a[0] == b[0] == c[0] or a[1] == b[1] == c[1]:
                del out[i]
                changed = True
                break
    return out


def c_rs_layout(r, s):
    """The C_{r,s} curve and its slots (r "+" motifs, then s "-" motifs)."""
    if r < 0 or s < 0 or r + s == 0:
        raise BadParams("c_rs needs r, s >= 0 and r + s >= 1")
    data = corpus_table()["c_rs"]
    box, scale = data["box"], data["scale"]
    signs = "+" * r + "-" * s
    placed = _slots(signs)

    def port(k, towards_next, chart):
        # side port for (pose 0 or 3, next) and (pose 1 or 2, previous)
        pose = k % 4
        side = (pose in (0, 3)) == towards_next
        ends = data["side_port"] if side else data["bottom_port"]
        ox, oy = placed[k][0].origin
        q = [chart(ox + scale * u, oy + scale * v) for u, v in (_POSES[pose](box, *e) for e in ends)]
        return q[0][0], min(q[0][1], q[1][1])

    cur = placed[0][1]
    for k in range(1, len(signs)):
        step = _STEPS[(k - 1) % 4]
        fwd, back = _CHARTS[step]
        new = placed[k][1]
        if step == "D":
            left, right, kl, kr = new, cur, k, k - 1
        else:
            left, right, kl, kr = cur, new, k - 1, k
        left = [fwd(*p) for p in left]
        right = [fwd(*p) for p in right]
        ax, alo = port(kl, kr > kl, fwd)
        bx, blo = port(kr, kl > kr, fwd)
        ia = _edge_index(left, ax, alo)
        ib = _edge_index(right, bx, blo)
        # band heights stay inside the port windows, where the motif lines are absent
        heights = [alo + 2 * scale // 10, alo + 6 * scale // 10, blo + 4 * scale // 10, blo + 8 * scale // 10]
        mid = (ax + bx) // 2
        joined = _band(left, ia, right, ib, heights, mid + scale // 3, mid - scale // 3)
        cur = [back(*p) for p in joined]
    try:
        curve = validate_rect(_clean(cur))
    except CurveError as exc:
        raise BadParams(f"c_rs({r},{s}) encoding is degenerate: {exc}") from exc
    return curve, [sl for sl, _ in placed]


def c_rs(r, s):
    """Chain of r cstar motifs followed by s copies of its twin."""
    return c_rs_layout(r, s)[0]


def tangle_crossings(curve, slots, sources, front):
    """Map slot index -> list of front event indices of crossings whose two
    chords both come from corners of that slot's motif."""
    owner = {}
    for k, sl in enumerate(slots):
        for p in sl.corners:
            owner[p] = k
    out = {}
    for i, e in enumerate(front.events):
        if e.kind != CROSS:
            continue
        a, b = sources[i]
        ka = owner.get(curve.corners[a])
        kb = owner.get(curve.corners[b])
        if ka is not None and ka == kb:
            out.setdefault(ka, []).append(i)
    return out
