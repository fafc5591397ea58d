import random

from hypothesis import strategies as st

from curvelegendrian.curve import validate_rect


def staircase(xs, ys):
    """Closed rectilinear curve visiting (xs[i], ys[i]) -> (xs[i+1], ys[i]) -> ...

    With xs and ys permutations every horizontal line and every vertical
    line carries exactly one segment, so the curve is in general position.
    """
    k = len(xs)
    pts = []
    for i in range(k):
        pts.append((xs[i], ys[i]))
        pts.append((xs[(i + 1) % k], ys[i]))
    return validate_rect(pts)


def random_curve(rng, kmin=2, kmax=7):
    k = rng.randint(kmin, kmax)
    xs = list(range(k))
    ys = list(range(k))
    rng.shuffle(xs)
    rng.shuffle(ys)
    return staircase(xs, ys)


def random_curves(n, seed=2024):
    rng = random.Random(seed)
    return [random_curve(rng) for _ in range(n)]


@st.composite
def rect_curves(draw, kmax=6):
    k = draw(st.integers(2, kmax))
    xs = draw(st.permutations(range(k)))
    ys = draw(st.permutations(range(k)))
    return staircase(list(xs), list(ys))


# acceptance criteria report: test_acceptance records one line per criterion
CRITERIA = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[k])
