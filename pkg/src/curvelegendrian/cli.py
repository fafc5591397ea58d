"""Command line interface.

Exit codes: 0 success, 1 unreadable input or bad flags, 2 input that parses
but fails validation, 3 internal invariant violation (d^2 != 0 and friends).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .conormal import BadParams, UnknownName, conormal_front, corpus, corpus_names, corpus_table
from .curve import CurveError, RectCurve, curve_from_json, whitney_index
from .dga import (CyclicGrading, DifferentialError, NotAnAugmentation, augmentations, build_dga,
                  check, has_graded_ruling, poincare, reduce_dga)
from .front import FrontError, LineFront, TorusFront, front_from_json, invariants
from .satellite import BadN, splice, stabilized_unknot

REPORT_BEGIN = "----- BEGIN REPORT JSON -----"
REPORT_END = "----- END REPORT JSON -----"

RULING_STRAND_LIMIT = 40

VALIDATION_ERRORS = (CurveError, FrontError, BadParams, UnknownName, BadN, CyclicGrading,
                     NotAnAugmentation)


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# -- inputs --------------------------------------------------------------------

def parse_corpus(selector):
    """``NAME`` or ``NAME,a,b``; integer-looking parameters become ints."""
    name, *rest = [part.strip() for part in selector.split(",")]
    params = [int(p) if p.lstrip("-").isdigit() else p for p in rest]
    return corpus(name, *params)


def parse_companion(text):
    """``stab-unknot``, ``stab-unknot:+1``, ``stab-unknot:-1`` or ``eye``."""
    name, _, sign = text.partition(":")
    if name == "eye" and not sign:
        return LineFront(("L@1", "R@1"))
    if name != "stab-unknot":
        raise ParseError(f"unknown companion {text!r}")
    if sign in ("", "+1", "1", "+"):
        return stabilized_unknot(1)
    if sign in ("-1", "-"):
        return stabilized_unknot(-1)
    raise ParseError(f"bad stabilization sign {sign!r}")


def read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not JSON: {exc}") from exc


def load_object(path=None, selector=None):
    """A RectCurve or a front, from a JSON file or a corpus selector."""
    if (path is None) == (selector is None):
        raise ParseError("give exactly one of an input file or --corpus")
    if selector is not None:
        return parse_corpus(selector)
    data = read_json(path)
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "type" in data:
        c = curve_from_json(data)
        if not isinstance(c, RectCurve):
            raise CurveError("only rectilinear curves have conormal fronts here")
        return c
    if "events" in data:
        return front_from_json(data)
    raise ParseError("JSON is neither a curve nor a front")


def as_front(obj):
    return conormal_front(obj) if isinstance(obj, RectCurve) else obj


def as_line_front(obj, companion):
    """Satellite a curve or torus front; pass line fronts through."""
    f = as_front(obj)
    if isinstance(f, TorusFront):
        if companion is None:
            raise ParseError("a torus front needs --satellite/--companion to reach R^3")
        return splice(f, companion)
    return f


# -- commands --------------------------------------------------------------------

def cmd_invariants(obj, companion):
    f = as_front(obj)
    if companion is not None and isinstance(f, TorusFront):
        f = splice(f, companion)
    out = invariants(f).to_json()
    if isinstance(obj, RectCurve):
        out["whitney_index"] = whitney_index(obj)
    return out


def poincare_payload(front):
    dga = reduce_dga(build_dga(front))
    check(dga)
    if dga.period:
        raise CyclicGrading("linearized homology needs rot = 0")
    augs = augmentations(dga)
    polys = [poincare(dga, e) for e in augs]
    uniq = sorted(set(polys))
    return {
        "augmentations": len(augs),
        "polynomials": [p.to_json() for p in polys],
        "set": [p.to_json() for p in uniq],
        "set_text": [str(p) for p in uniq],
    }


def cmd_dga(front):
    dga = build_dga(front)
    check(dga)
    return dga.to_json()


def cmd_distinguish(a, b):
    pa, pb = poincare_payload(a), poincare_payload(b)
    ia, ib = invariants(a).to_json(), invariants(b).to_json()
    verdict = "distinct" if pa["set"] != pb["set"] or ia["tb"] != ib["tb"] else \
        "indistinguishable-by-this-invariant"
    return {"verdict": verdict, "a": {"tb": ia["tb"], "set": pa["set"]},
            "b": {"tb": ib["tb"], "set": pb["set"]}}


def report(obj, companion, outdir, label):
    """Figures plus a JSON summary for one curve."""
    from .render import curve_svg, front_svg

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {}
    if isinstance(obj, RectCurve):
        (outdir / "curve.svg").write_text(curve_svg(obj, label), encoding="utf-8")
        files["curve"] = "curve.svg"
    f = as_front(obj)
    (outdir / "front.svg").write_text(front_svg(f, label), encoding="utf-8")
    files["front"] = "front.svg"
    summary = {"label": label, "invariants": cmd_invariants(obj, None), "figures": files}
    if isinstance(f, TorusFront) and companion is not None:
        sat = splice(f, companion)
        (outdir / "satellite.svg").write_text(front_svg(sat, label + " satellite"), encoding="utf-8")
        files["satellite"] = "satellite.svg"
        summary["satellite"] = invariants(sat).to_json()
        summary["poincare"] = poincare_payload(sat)
        # the ruling sweep tracks strand pairings, which explode on very tall fronts
        if sat.max_strands() <= RULING_STRAND_LIMIT:
            summary["graded_rulings"] = has_graded_ruling(sat)[1]
        else:
            summary["graded_rulings"] = None
    (outdir / "report.json").write_text(dumps(summary) + "\n", encoding="utf-8")
    return summary


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False)


def build_parser():
    p = _Parser(prog="curvelegendrian", description="Conormal fronts of rectilinear plane curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, companion_default=None):
        sp.add_argument("input", nargs="?", help="curve or front JSON file")
        sp.add_argument("--corpus", help="built-in curve: NAME or NAME,a,b")
        sp.add_argument("--satellite", "--companion", dest="companion", default=companion_default,
                        help="companion for the satellite: stab-unknot[:+1|-1] or eye")
        sp.add_argument("-o", "--output", help="write the result here instead of stdout")

    common(sub.add_parser("invariants", help="tb, rot, winding, J+"))
    common(sub.add_parser("front", help="conormal front as JSON"))
    sp = sub.add_parser("satellite", help="Legendrian satellite front")
    sp.add_argument("--pattern", help="curve or torus front JSON file")
    sp.add_argument("--corpus")
    sp.add_argument("--companion", "--satellite", dest="companion", default="stab-unknot")
    sp.add_argument("-o", "--output")
    common(sub.add_parser("dga", help="Chekanov-Eliashberg DGA"), "stab-unknot")
    common(sub.add_parser("poincare", help="linearized Poincare polynomials"), "stab-unknot")
    sp = sub.add_parser("distinguish", help="compare two inputs by Poincare sets")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--companion", "--satellite", dest="companion", default="stab-unknot")
    sp.add_argument("-o", "--output")
    common(sub.add_parser("render", help="SVG of a curve or front"))
    sp = sub.add_parser("report", help="figures and JSON summary into a directory")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--corpus")
    sp.add_argument("--companion", "--satellite", dest="companion", default="stab-unknot")
    sp.add_argument("-o", "--output", required=True, help="output directory")
    sub.add_parser("corpus-list", help="list built-in curves")
    return p


def _load_ab(text):
    if Path(text).exists():
        return load_object(path=text)
    return load_object(selector=text)


def run(args):
    cmd = args.command
    if cmd == "corpus-list":
        table = corpus_table()
        return {"curves": corpus_names(), "fig2_rows": sorted(table["fig2_rows"]),
                "c_rs": "c_rs,r,s with r, s >= 0 and r + s >= 1"}
    companion = parse_companion(args.companion) if getattr(args, "companion", None) else None
    if cmd == "satellite":
        obj = load_object(args.pattern, args.corpus)
        f = as_front(obj)
        if not isinstance(f, TorusFront):
            raise ParseError("satellite needs a curve or a torus front as pattern")
        return splice(f, companion).to_json()
    if cmd == "distinguish":
        a = as_line_front(_load_ab(args.a), companion)
        b = as_line_front(_load_ab(args.b), companion)
        return cmd_distinguish(a, b)
    if cmd == "report":
        obj = load_object(args.input, args.corpus)
        label = args.corpus or Path(args.input).stem
        summary = report(obj, companion, args.output, label)
        return (REPORT_BEGIN, summary, REPORT_END)
    obj = load_object(args.input, args.corpus)
    if cmd == "invariants":
        return cmd_invariants(obj, companion)
    if cmd == "front":
        return as_front(obj).to_json()
    if cmd == "dga":
        return cmd_dga(as_line_front(obj, companion))
    if cmd == "poincare":
        return poincare_payload(as_line_front(obj, companion))
    if cmd == "render":
        from .render import curve_svg, front_svg

        label = args.corpus or Path(args.input).stem
        if isinstance(obj, RectCurve):
            return ("svg", curve_svg(obj, label))
        return ("svg", front_svg(obj, label))
    raise ParseError(f"unknown command {cmd}")


def emit(result, output):
    if isinstance(result, tuple) and result[0] == "svg":
        text = result[1]
    elif isinstance(result, tuple) and result[0] == REPORT_BEGIN:
        text = "\n".join([REPORT_BEGIN, dumps(result[1]), REPORT_END]) + "\n"
        sys.stdout.write(text)
        return
    else:
        text = dumps(result) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        result = run(args)
        emit(result, None if args.command == "report" else getattr(args, "output", None))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DifferentialError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except VALIDATION_ERRORS as exc:
        print(f"invalid input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        # malformed JSON documents surface here
        print(f"error: malformed input: {exc!r}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
