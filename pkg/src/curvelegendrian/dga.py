"""Chekanov-Eliashberg algebra of an R^3 front over Z/2.

The front is resolved into a Lagrangian diagram: crossings stay
crossings and every right cusp becomes a small loop.  Generators are the
crossings and the right cusps.  The differential counts admissible disks:
immersed disks whose boundary runs along two rightward paths from a left
cusp (the leftmost point) to the generator (the rightmost point), turning
only at convex corners at crossings.  A right cusp also bounds its own
tiny loop, which contributes the constant word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .front import (
    CROSS, LEFT, RIGHT, FrontError, crossing_degree, maslov_potential, rot, simple_events_traced, strand_counts,
)


class UngradableFront(FrontError):
    pass


class CyclicGrading(ValueError):
    pass


class NotAnAugmentation(ValueError):
    pass


class DifferentialError(RuntimeError):
    """An internal invariant (d^2 = 0, degree drop) failed."""


@dataclass
class Dga:
    names: list
    degrees: list
    differential: dict            # generator index -> frozenset of words (tuples of indices)
    period: int = 0               # 0 for integer grading, else degrees are mod period
    events: list = field(default_factory=list)  # event index of each generator
    origins: list = field(default_factory=list)  # input-front event index, None if added

    def index(self, name):
        return self.names.index(name)

    def degree(self, word):
        d = sum(self.degrees[g] for g in word)
        return d % self.period if self.period else d

    def to_json(self):
        return {
            "generators": [{"name": n, "deg": d} for n, d in zip(self.names, self.degrees)],
            "differential": {
                self.names[g]: sorted([self.names[x] for x in w] for w in self.differential[g])
                for g in range(len(self.names))
            },
        }


def _disks(events, gen_of_event):
    """All admissible disks as (generator, word) pairs, with multiplicity."""
    out = []
    for start, ev in enumerate(events):
        if ev.kind != LEFT:
            continue
        # state: (upper position, lower position, upper corners, lower corners), 0-based
        states = [(ev.pos, ev.pos - 1, (), ())]
        for j in range(start + 1, len(events)):
            if not states:
                break
            e = events[j]
            q = e.pos - 1
            nxt = []
            if e.kind == CROSS:
                g = gen_of_event[j]
                for u, l, up, lo in states:
                    if u == q + 1 and l == q:
                        out.append((g, tuple(reversed(up)) + lo))
                        continue
                    # upper path
                    if u == q:
                        uopts = [(q + 1, up), (q, up + (g,))]
                    elif u == q + 1:
                        uopts = [(q, up)]
                    else:
                        uopts = [(u, up)]
                    if l == q + 1:
                        lopts = [(q, lo), (q + 1, lo + (g,))]
                    elif l == q:
                        lopts = [(q + 1, lo)]
                    else:
                        lopts = [(l, lo)]
                    for nu, nup in uopts:
                        for nl, nlo in lopts:
                            if nu > nl:
                                nxt.append((nu, nl, nup, nlo))
            elif e.kind == LEFT:
                for u, l, up, lo in states:
                    nxt.append((u + 2 if u >= q else u, l + 2 if l >= q else l, up, lo))
            else:
                g = gen_of_event[j]
                for u, l, up, lo in states:
                    if u == q + 1 and l == q:
                        out.append((g, tuple(reversed(up)) + lo))
                        continue
                    if u in (q, q + 1) or l in (q, q + 1):
                        continue
                    nxt.append((u - 2 if u > q + 1 else u, l - 2 if l > q + 1 else l, up, lo))
            states = nxt
    return out


def build_dga(front, strict=False):
    """The Chekanov-Eliashberg DGA of a LineFront over Z/2.

    The front is first put in simple position (all right cusps at one x),
    where every admissible disk has x-monotone boundary.  Generators are
    named after the crossings and right cusps of that simple front.
    """
    strand_counts(front.events, 0)
    simple, origin = simple_events_traced(front.events)
    front = front.with_events(simple)
    mu, period = maslov_potential(front)
    if strict and period:
        raise UngradableFront(f"rotation number {rot(front)} != 0")
    trace = front.trace
    names, degrees, gen_events = [], [], []
    gen_of_event = {}
    crossing_at = {c.index: c for c in trace.crossings}
    nx = nr = 0
    for i, e in enumerate(front.events):
        if e.kind == CROSS:
            nx += 1
            names.append(f"a{nx}")
            degrees.append(crossing_degree(mu, period, crossing_at[i]))
        elif e.kind == RIGHT:
            nr += 1
            names.append(f"c{nr}")
            degrees.append(1 % period if period else 1)
        else:
            continue
        gen_of_event[i] = len(names) - 1
        gen_events.append(i)
    counts = Counter(_disks(front.events, gen_of_event))
    diff = {g: Counter() for g in range(len(names))}
    for (g, word), k in counts.items():
        diff[g][word] += k
    for i, e in enumerate(front.events):
        if e.kind == RIGHT:
            diff[gen_of_event[i]][()] += 1
    differential = {g: frozenset(w for w, k in c.items() if k % 2) for g, c in diff.items()}
    return Dga(names, degrees, differential, period, gen_events, [origin[i] for i in gen_events])


# -- structural checks ------------------------------------------------------------

def d_word(dga, word):
    """Differential of a word by the Leibniz rule, as a Z/2 Counter."""
    out = Counter()
    for i, g in enumerate(word):
        head, tail = word[:i], word[i + 1:]
        for w in dga.differential[g]:
            out[head + w + tail] += 1
    return out


def d_squared(dga):
    """Map generator -> nonzero words of d(d(g)); empty when d^2 = 0."""
    bad = {}
    for g in range(len(dga.names)):
        total = Counter()
        for w in dga.differential[g]:
            total.update(d_word(dga, w))
        odd = sorted(w for w, k in total.items() if k % 2)
        if odd:
            bad[g] = odd
    return bad


def degree_violations(dga):
    """Words whose degree is not one less than their generator's."""
    bad = []
    for g, words in dga.differential.items():
        want = dga.degrees[g] - 1
        if dga.period:
            want %= dga.period
        for w in words:
            if dga.degree(w) != want:
                bad.append((g, w))
    return bad


def check(dga):
    bad = d_squared(dga)
    if bad:
        raise DifferentialError(f"d^2 != 0 on {[dga.names[g] for g in bad]}")
    if degree_violations(dga):
        raise DifferentialError("differential does not lower degree by one")


# -- destabilization -----------------------------------------------------------------

def _expand(word, b, image):
    """The words of ``word`` with each letter ``b`` replaced by the sum ``image``, mod 2."""
    acc = {()}
    for x in word:
        if x == b:
            nxt = set()
            for w in acc:
                for v in image:
                    nxt ^= {w + v}
            acc = nxt
        else:
            acc = {w + (x,) for w in acc}
    return acc


def _reaches(graph, start, target):
    seen = {start}
    stack = [start]
    while stack:
        g = stack.pop()
        if g == target:
            return True
        for h in graph[g]:
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return False


def reduce_dga(dga):
    """A smaller DGA, stable tame isomorphic to ``dga``.

    Repeatedly cancels a pair with d(a) = b + v, where v avoids a and b and
    no generator of v lies above b.  The quotient sets a = 0 and b = v.
    Linearized Poincare polynomials over all augmentations are unchanged,
    and augmentations of the quotient pull back to the original.
    """
    live = set(range(len(dga.names)))
    diff = {g: set(dga.differential[g]) for g in live}
    while True:
        graph = {g: {x for w in diff[g] for x in w} for g in live}
        pair = None
        for a in sorted(live):
            for w in sorted(diff[a]):
                if len(w) != 1:
                    continue
                b = w[0]
                rest = diff[a] - {w}
                letters = {x for u in rest for x in u}
                if b in letters or a in letters:
                    continue
                if any(_reaches(graph, x, b) for x in letters):
                    continue
                pair = (a, b, rest)
                break
            if pair:
                break
        if pair is None:
            break
        a, b, rest = pair
        live -= {a, b}
        del diff[a], diff[b]
        for g in live:
            if not any(a in w or b in w for w in diff[g]):
                continue
            new = set()
            for w in diff[g]:
                if a in w:
                    continue
                new ^= _expand(w, b, rest) if b in w else {w}
            diff[g] = new
    keep = sorted(live)
    index = {g: i for i, g in enumerate(keep)}
    return Dga(
        [dga.names[g] for g in keep],
        [dga.degrees[g] for g in keep],
        {index[g]: frozenset(tuple(index[x] for x in w) for w in diff[g]) for g in keep},
        dga.period,
        [dga.events[g] for g in keep] if dga.events else [],
        [dga.origins[g] for g in keep] if dga.origins else [],
    )


# -- augmentations ------------------------------------------------------------------

def _is_zero_degree(dga, g):
    return dga.degrees[g] == 0


def _constraints(dga):
    """epsilon(d b) as Boolean polynomials in the degree-0 generators.

    Each polynomial is a frozenset of monomials; a monomial is a frozenset
    of generator indices (x^2 = x over Z/2 evaluations).
    """
    target = 1 % dga.period if dga.period else 1
    polys = []
    for g in range(len(dga.names)):
        if dga.degrees[g] != target:
            continue
        terms = Counter()
        for w in dga.differential[g]:
            if all(_is_zero_degree(dga, x) for x in w):
                terms[frozenset(w)] += 1
        poly = frozenset(m for m, k in terms.items() if k % 2)
        if poly:
            polys.append(poly)
    return polys


def augmentations(dga):
    """All graded augmentations, as dicts generator index -> 0/1 (support only listed).

    Exhaustive backtracking over the degree-0 generators, checking every
    constraint as soon as its variables are assigned.  Results are sorted
    lexicographically by the value vector in generator order.
    """
    variables = [g for g in range(len(dga.names)) if _is_zero_degree(dga, g)]
    polys = _constraints(dga)
    if any(frozenset() in p and len(p) == 1 for p in polys):
        return []
    position = {g: i for i, g in enumerate(variables)}
    ready = {i: [] for i in range(len(variables) + 1)}
    for p in polys:
        last = max((position[x] for m in p for x in m), default=-1)
        ready[last + 1].append(p)
    for p in ready[0]:
        if p:  # a nonzero constant
            return []
    results = []
    value = {}

    def holds(p):
        total = 0
        for m in p:
            if all(value[x] for x in m):
                total ^= 1
        return total == 0

    def search(i):
        if i == len(variables):
            results.append(tuple(value[g] for g in variables))
            return
        g = variables[i]
        for v in (0, 1):
            value[g] = v
            if all(holds(p) for p in ready[i + 1]):
                search(i + 1)
        del value[g]

    search(0)
    results.sort()
    return [{g: v for g, v in zip(variables, vec)} for vec in results]


def is_augmentation(dga, aug):
    for g, v in aug.items():
        if v and dga.degrees[g] != 0:
            return False
    for g in range(len(dga.names)):
        total = 0
        for w in dga.differential[g]:
            if all(aug.get(x, 0) for x in w):
                total ^= 1
        if total:
            return False
    return True


# -- linearized homology -------------------------------------------------------------

def linearize(dga, aug):
    """Linearized differential as ``{k: (cols, rows, matrix)}`` for each degree k.

    ``matrix`` maps C_k -> C_{k-1}; it is a list of row bitmasks indexed by
    the generators of degree k-1, bit j standing for the j-th generator of
    degree k.
    """
    if not is_augmentation(dga, aug):
        raise NotAnAugmentation("epsilon does not annihilate the differential")
    by_deg = {}
    for g, d in enumerate(dga.degrees):
        by_deg.setdefault(d, []).append(g)
    out = {}
    for k, cols in by_deg.items():
        rows = by_deg.get(k - 1, [])
        row_index = {g: i for i, g in enumerate(rows)}
        matrix = [0] * len(rows)
        for j, a in enumerate(cols):
            for w in dga.differential[a]:
                for i, b in enumerate(w):
                    if b not in row_index:
                        continue
                    if all(aug.get(x, 0) for t, x in enumerate(w) if t != i):
                        matrix[row_index[b]] ^= 1 << j
        out[k] = (cols, rows, matrix)
    return out


def rank_gf2(rows):
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def compose_is_zero(lin, k):
    """Check M_{k-1} * M_k = 0 over Z/2."""
    if k not in lin or k - 1 not in lin:
        return True
    cols_k, rows_k, mk = lin[k]
    cols_k1, rows_k1, mk1 = lin[k - 1]
    # column j of M_k as a bitmask over rows_k (= cols_k1)
    for j in range(len(cols_k)):
        col = 0
        for i, r in enumerate(mk):
            if r >> j & 1:
                col |= 1 << i
        image = 0
        for i, r in enumerate(mk1):
            if bin(r & col).count("1") % 2:
                image |= 1 << i
        if image:
            return False
    return True


@dataclass(frozen=True, order=True)
class PoincarePolynomial:
    terms: tuple  # sorted ((degree, dimension), ...) with positive dimensions

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def coefficient(self, k):
        return dict(self.terms).get(k, 0)

    def to_json(self):
        # highest degree first, the order in which polynomials are written
        return [list(t) for t in reversed(self.terms)]

    def __str__(self):
        parts = []
        for k, v in sorted(self.terms, reverse=True):
            coef = "" if v == 1 else str(v)
            if k == 0:
                parts.append(str(v))
            elif k == 1:
                parts.append(f"{coef}t")
            else:
                parts.append(f"{coef}t^{k}")
        return " + ".join(parts) if parts else "0"


def poincare(dga, aug):
    """Poincare polynomial of linearized contact homology."""
    if dga.period:
        raise CyclicGrading("linearized homology needs an integer grading (rot = 0)")
    lin = linearize(dga, aug)
    ranks = {k: rank_gf2(m) for k, (_, _, m) in lin.items()}
    dims = {}
    for k, (cols, _, _) in lin.items():
        dims[k] = len(cols) - ranks[k] - ranks.get(k + 1, 0)
    return PoincarePolynomial.from_dict(dims)


def poincare_list(dga):
    """Poincare polynomial for each augmentation, in augmentation order."""
    if dga.period:
        raise CyclicGrading("linearized homology needs an integer grading (rot = 0)")
    return [poincare(dga, e) for e in augmentations(dga)]


def poincare_set(front):
    """Set of linearized Poincare polynomials over all graded augmentations."""
    if rot(front) != 0:
        raise CyclicGrading("front has nonzero rotation number")
    return tuple(sorted(set(poincare_list(reduce_dga(build_dga(front))))))


# -- normal rulings --------------------------------------------------------------------

def rulings(front, graded=True):
    """Number of (graded) normal rulings, by a left-to-right transfer sweep."""
    mu, period = maslov_potential(front)
    crossing_at = {c.index: c for c in front.trace.crossings}
    states = Counter({(): 1})
    for i, e in enumerate(front.events):
        q = e.pos - 1
        nxt = Counter()
        for pairing, count in states.items():
            pr = list(pairing)
            if e.kind == LEFT:
                pr = [x + 2 if x >= q else x for x in pr]
                pr[q:q] = [q + 1, q]
                nxt[tuple(pr)] += count
            elif e.kind == RIGHT:
                if pr[q] != q + 1:
                    continue
                del pr[q:q + 2]
                pr = [x - 2 if x > q + 1 else x for x in pr]
                nxt[tuple(pr)] += count
            else:
                a, b = pr[q], pr[q + 1]
                if a == q + 1:
                    continue  # companion strands may not cross
                # no switch: the pairing follows the strands
                swap = {q: q + 1, q + 1: q}
                moved = [swap.get(x, x) for x in pr]
                moved[q], moved[q + 1] = moved[q + 1], moved[q]
                nxt[tuple(moved)] += count
                deg = crossing_degree(mu, period, crossing_at[i])
                if graded and deg != 0:
                    continue
                normal = (a < q and b > q + 1) or (b < a < q) or (q + 1 < b < a)
                if normal:
                    nxt[tuple(pr)] += count
        states = nxt
    return states.get((), 0)


def has_graded_ruling(front):
    n = rulings(front, graded=True)
    return n > 0, n


def homology_summary(front):
    """Convenience bundle used by the CLI and reports."""
    dga = build_dga(front)
    check(dga)
    augs = augmentations(dga) if not dga.period else []
    polys = [poincare(dga, e) for e in augs] if not dga.period else []
    return dga, augs, polys

