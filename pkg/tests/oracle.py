"""Independent plane-geometry oracle for Arnold's J+ (Viro's formula).

J+ = 1 + n - sum over bounded faces of ind^2 + sum over double points of ind_v^2,
where ind_v is the mean of the four face indices around the double point.
Nothing here touches fronts.
"""

from fractions import Fraction


def segments(corners):
    n = len(corners)
    return [(corners[i], corners[(i + 1) % n]) for i in range(n)]


def winding_at(corners, px, py):
    w = 0
    for (x0, y0), (x1, y1) in segments(corners):
        if x0 == x1 and x0 > px and min(y0, y1) < py < max(y0, y1):
            w += 1 if y1 > y0 else -1
    return w


def double_points(corners):
    segs = segments(corners)
    out = []
    for (a0, a1) in segs:
        if a0[1] != a1[1]:
            continue
        y = a0[1]
        for (b0, b1) in segs:
            if b0[0] != b1[0]:
                continue
            x = b0[0]
            if min(a0[0], a1[0]) < x < max(a0[0], a1[0]) and min(b0[1], b1[1]) < y < max(b0[1], b1[1]):
                out.append((x, y))
    return out


def _faces(corners):
    xs = sorted({p[0] for p in corners})
    ys = sorted({p[1] for p in corners})
    xp = [xs[0] - 1] + xs + [xs[-1] + 1]
    yp = [ys[0] - 1] + ys + [ys[-1] + 1]
    verticals = [(a[0], min(a[1], b[1]), max(a[1], b[1])) for a, b in segments(corners) if a[0] == b[0]]
    horizontals = [(a[1], min(a[0], b[0]), max(a[0], b[0])) for a, b in segments(corners) if a[1] == b[1]]
    ni, nj = len(xp) - 1, len(yp) - 1
    parent = {(i, j): (i, j) for i in range(ni) for j in range(nj)}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for i in range(ni):
        for j in range(nj):
            if i + 1 < ni:
                x = xp[i + 1]
                if not any(v[0] == x and v[1] <= yp[j] and yp[j + 1] <= v[2] for v in verticals):
                    parent[find((i, j))] = find((i + 1, j))
            if j + 1 < nj:
                y = yp[j + 1]
                if not any(h[0] == y and h[1] <= xp[i] and xp[i + 1] <= h[2] for h in horizontals):
                    parent[find((i, j))] = find((i, j + 1))
    groups = {}
    for c in parent:
        groups.setdefault(find(c), []).append(c)
    out = []
    for cells in groups.values():
        bounded = all(0 < i < ni - 1 and 0 < j < nj - 1 for i, j in cells)
        i, j = cells[0]
        px = Fraction(xp[i] + xp[i + 1], 2)
        py = Fraction(yp[j] + yp[j + 1], 2)
        out.append((bounded, winding_at(corners, px, py)))
    return out


def viro_jplus(corners):
    corners = list(corners)
    dps = double_points(corners)
    faces = sum(w * w for bounded, w in _faces(corners) if bounded)
    verts = Fraction(0)
    e = Fraction(1, 2)
    for x, y in dps:
        ind = Fraction(sum(winding_at(corners, x + sx * e, y + sy * e) for sx in (1, -1) for sy in (1, -1)), 4)
        verts += ind * ind
    value = 1 + len(dps) - faces + verts
    assert value.denominator == 1
    return int(value)
