"""SVG pictures of rectilinear curves and event-list fronts."""

from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .front import LEFT, RIGHT, TorusFront, strand_counts  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "curvelegendrian"
matplotlib.rcParams["svg.fonttype"] = "none"

_INK = "#1f2d3d"
_WALL = "#8a8a8a"


def _svg(fig):
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)
    return buf.getvalue()


def curve_svg(c, title=None):
    pts = np.array(list(c.corners) + [c.corners[0]], dtype=float)
    xs, ys = pts[:, 0], pts[:, 1]
    span = max(np.ptp(xs), np.ptp(ys), 1.0)
    fig, ax = plt.subplots(figsize=(4, 4))
    ax.plot(xs, ys, color=_INK, lw=1.4)
    # one arrow per segment midpoint shows the orientation
    for (x0, y0), (x1, y1) in zip(pts[:-1], pts[1:]):
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        dx, dy = np.sign(x1 - x0), np.sign(y1 - y0)
        ax.annotate("", xy=(mx + 0.02 * span * dx, my + 0.02 * span * dy), xytext=(mx, my),
                    arrowprops=dict(arrowstyle="-|>", color=_INK, lw=1.0))
    ax.plot(pts[:-1, 0], pts[:-1, 1], "o", ms=2.5, color=_INK)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return _svg(fig)


def _cusp(ax, x0, y0, opening, width=0.45, height=0.5):
    """Semicubical cusp with its point at (x0, y0); opening = +1 opens right."""
    s = np.linspace(0.0, 1.0, 30)
    xs = x0 + opening * width * s ** 2
    for sign in (1, -1):
        ax.plot(xs, y0 + sign * height * s ** 3, color=_INK, lw=1.2)


def front_svg(front, title=None):
    """Draw a front event by event; a torus front gets a dashed wall at theta = 0."""
    m = front.wall_count
    counts = strand_counts(front.events, m)
    n_ev = len(front.events)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * n_ev + 1.5), max(2.5, 0.45 * max(counts) + 1.0)))
    for i, e in enumerate(front.events):
        before = counts[i]
        p = e.pos
        x0, x1 = float(i), float(i + 1)
        for j in range(1, before + 1):
            if e.kind == LEFT:
                ax.plot([x0, x1], [j, j + 2 if j >= p else j], color=_INK, lw=1.2)
            elif e.kind == RIGHT:
                if j in (p, p + 1):
                    continue
                ax.plot([x0, x1], [j, j - 2 if j > p + 1 else j], color=_INK, lw=1.2)
            else:
                tgt = {p: p + 1, p + 1: p}.get(j, j)
                ax.plot([x0, x1], [j, tgt], color=_INK, lw=1.2)
        if e.kind == LEFT:
            xm = x0 + 0.5
            _cusp(ax, xm, p + 0.5, 1)
            for j, sign in ((p, -1), (p + 1, 1)):
                ax.plot([xm + 0.45, x1], [p + 0.5 + sign * 0.5, j], color=_INK, lw=1.2)
        elif e.kind == RIGHT:
            xm = x0 + 0.5
            _cusp(ax, xm, p + 0.5, -1)
            for j, sign in ((p, -1), (p + 1, 1)):
                ax.plot([x0, xm - 0.45], [j, p + 0.5 + sign * 0.5], color=_INK, lw=1.2)
    if isinstance(front, TorusFront):
        top = max(counts) + 1
        for x in (0.0, float(n_ev)):
            ax.plot([x, x], [0, top], ls="--", color=_WALL, lw=1.0)
        ax.text(0.0, top + 0.1, "θ = 0", fontsize=8, ha="center", color=_WALL)
    ax.set_xlim(-0.5, n_ev + 0.5)
    ax.set_ylim(0, max(counts) + 1.5)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return _svg(fig)
