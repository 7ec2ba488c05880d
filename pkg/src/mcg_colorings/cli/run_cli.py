"""
Main entry point for the toolkit commands.
Easy to extend - add a handler and register it in COMMAND_REGISTRY.
"""

import argparse
import re
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .. import __version__
from ..colorings import (
    GENERATORS,
    binarize,
    color_of,
    construct,
    defect,
    dumps_coloring,
    equivalent,
    is_trivial,
    load_coloring_document,
    minority_bound,
    normalize,
    simplify,
    verify_ball,
)
from ..config import ToolkitConfig
from ..dehn_thurston import (
    CHECK_REGISTRY,
    coordinates_summary,
    is_interesting,
    load_lattice_document,
    parse_multicurve,
    string,
    twist,
)
from ..errors import DocumentError, ToolkitError
from ..formats import parse_json, read_source, to_json
from ..progress import print_progress, set_verbose
from ..torus import (
    GroupWord,
    TreeWord,
    apply_word,
    emit_tree,
    evaluate,
    factorize,
    orbit_rep_X1,
    parse_curve,
    torus_intersection,
    twist_power,
)
from ..torus.tree import TREE_EMITTERS

Outcome = Tuple[int, str]


def _split_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _ok(payload) -> Outcome:
    return 0, to_json(payload)


# -------------------------
# Tree commands
# -------------------------

def cmd_factor(args) -> Outcome:
    return _ok({"word": str(factorize(parse_curve(args.curve)))})


def cmd_eval(args) -> Outcome:
    return _ok({"curve": str(evaluate(TreeWord.parse(args.word)))})


def cmd_tree(args) -> Outcome:
    return 0, emit_tree(args.depth, args.format)


# -------------------------
# Coloring commands
# -------------------------

def _load_exception_colors(source: Optional[str]):
    if source is None:
        return None
    data = parse_json(read_source(source), "exceptions document")
    if not isinstance(data, dict):
        raise DocumentError("exceptions document must be an object keyed by p/q")
    return {parse_curve(key): color for key, color in data.items()}


def cmd_mkcolor(args) -> Outcome:
    coloring = construct(args.level, _split_list(args.palette), _load_exception_colors(args.exceptions))
    return 0, dumps_coloring(coloring)


def cmd_query(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    return _ok({"color": color_of(coloring, parse_curve(args.curve))})


def cmd_defect(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    return _ok(defect(coloring, args.gen).to_dict())


def cmd_verify(args) -> Outcome:
    if args.ball < 1:
        raise DocumentError(f"--ball must be >= 1, got {args.ball}")
    coloring, claims = load_coloring_document(args.coloring)
    report = verify_ball(coloring, args.ball)

    payload = report.to_dict()
    payload["defects"] = {g: defect(coloring, g).to_dict()["defect"] for g in GENERATORS}
    passed = report.consistent
    if claims is not None:
        payload["claims_match"] = report.matches(claims)
        passed = passed and payload["claims_match"]
    payload["passed"] = passed

    if args.csv is not None:
        csv_path = Path(args.csv) if args.csv else _default_report_path(args.coloring, args.ball)
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        report.table.to_csv(csv_path, index=False)
        print_progress(f"Saved {len(report.table):,} violation rows to {csv_path}")
    return (0 if passed else 1), to_json(payload)


def _default_report_path(source: str, radius: int) -> Path:
    stem = "stdin" if source == "-" else Path(source).stem
    return ToolkitConfig.get_output_dir() / f"{stem}_ball{radius}_violations.csv"


def cmd_normalize(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    return 0, dumps_coloring(normalize(coloring))


def cmd_equiv(args) -> Outcome:
    first, _ = load_coloring_document(args.first)
    second, _ = load_coloring_document(args.second)
    result = equivalent(first, second)
    return (0 if result.equivalent else 1), to_json(result.to_dict())


def cmd_trivial(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    trivial = is_trivial(coloring)
    payload = {"trivial": trivial, "minority_bound": minority_bound(coloring)}
    return (0 if trivial else 1), to_json(payload)


def _parse_color_map(text: str) -> Dict[str, str]:
    mapping = {}
    for item in _split_list(text):
        source, sep, target = item.partition("=")
        if not sep or not source or not target:
            raise DocumentError(f"bad color mapping {item!r}, expected old=new")
        mapping[source] = target
    return mapping


def cmd_simplify(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    # Colors left out of --map keep their name
    mapping = {color: color for color in coloring.colors()}
    mapping.update(_parse_color_map(args.map))
    return 0, dumps_coloring(simplify(coloring, mapping))


def cmd_binarize(args) -> Outcome:
    coloring, _ = load_coloring_document(args.coloring)
    names = tuple(_split_list(args.names))
    if len(names) != 2 or names[0] == names[1]:
        raise DocumentError(f"--names needs two distinct colors, got {args.names!r}")
    return 0, dumps_coloring(binarize(coloring, _split_list(args.c0), names))


# -------------------------
# Curve commands
# -------------------------

def cmd_curve(args) -> Outcome:
    x = parse_curve(args.curve)
    if args.action == "canon":
        return _ok({"curve": str(x)})
    if args.action == "region":
        return _ok({"region": x.region.value})
    if args.action == "rep":
        x1, j = orbit_rep_X1(x)
        return _ok({"rep": str(x1), "power": j})
    if args.action == "apply":
        return _ok({"curve": str(apply_word(GroupWord.parse(args.word), x))})
    if args.action == "intersect":
        return _ok({"intersection": torus_intersection(x, parse_curve(args.other))})
    # twist: the n-th twist along x applied to the other curve
    return _ok({"curve": str(twist_power(x, parse_curve(args.other), args.n))})


# -------------------------
# Dehn-Thurston commands
# -------------------------

def cmd_dt(args) -> Outcome:
    if args.action == "gridcheck":
        return _gridcheck(args)
    D = parse_multicurve(args.multicurve)
    if args.action == "twist":
        return _ok({"multicurve": twist(D, args.k, args.n).format()})
    if args.action == "string":
        window = string(D, args.k, args.start, args.end)
        texts = [item.format() for item in window]
        return _ok({"string": texts, "distinct": len(set(window)) == len(window)})
    summary = coordinates_summary(D)
    if args.k is None:
        return _ok(summary)
    D.check_index(args.k)
    interesting = is_interesting(args.k, D)
    return (0 if interesting else 1), to_json({"k": args.k, "interesting": interesting})


def _gridcheck(args) -> Outcome:
    coloring = load_lattice_document(args.lattice)
    if args.check == "all":
        names = [n for n, check in CHECK_REGISTRY.items() if check.min_dimension <= coloring.dimension]
    else:
        names = [args.check]
    reports = [CHECK_REGISTRY[name](coloring).run() for name in names]
    passed = all(report.passed for report in reports)
    payload = {"passed": passed, "reports": [report.to_dict() for report in reports]}
    return (0 if passed else 1), to_json(payload)


# -------------------------
# COMMAND REGISTRY
# -------------------------
# Add new commands here, then give them a sub-parser in build_parser()
COMMAND_REGISTRY: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "factor": cmd_factor,
    "eval": cmd_eval,
    "tree": cmd_tree,
    "mkcolor": cmd_mkcolor,
    "query": cmd_query,
    "defect": cmd_defect,
    "verify": cmd_verify,
    "normalize": cmd_normalize,
    "equiv": cmd_equiv,
    "trivial": cmd_trivial,
    "simplify": cmd_simplify,
    "binarize": cmd_binarize,
    "curve": cmd_curve,
    "dt": cmd_dt,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcg_colorings",
        description="Almost invariant colorings of curves under mapping class groups",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="progress messages on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("factor", help="tree word of a positive curve p/q")
    p.add_argument("curve")
    p = commands.add_parser("eval", help="label of a tree word")
    p.add_argument("word")
    p = commands.add_parser("tree", help="render the labelled tree")
    p.add_argument("--depth", type=int, default=ToolkitConfig.DEFAULT_TREE_DEPTH)
    p.add_argument("--format", choices=sorted(TREE_EMITTERS), default="json")

    p = commands.add_parser("mkcolor", help="build a 2^k color coloring")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--palette", required=True, help="comma separated, 2^level colors")
    p.add_argument("--exceptions", help="JSON object p/q -> color for shallow vertices")

    p = commands.add_parser("query", help="color of one curve")
    p.add_argument("coloring")
    p.add_argument("curve")
    p = commands.add_parser("defect", help="exact defect set of a generator")
    p.add_argument("coloring")
    p.add_argument("--gen", choices=sorted(GENERATORS), required=True)
    p = commands.add_parser("verify", help="brute-force check on a ball of curves")
    p.add_argument("coloring")
    p.add_argument("--ball", type=int, default=ToolkitConfig.DEFAULT_BALL_RADIUS)
    p.add_argument(
        "--csv", nargs="?", const="",
        help=f"write the violation table (default location {ToolkitConfig.REPORTS_SUBDIR}/)",
    )

    for name, text in (("normalize", "canonical override-free form"),
                       ("trivial", "is the coloring equivalent to a constant one")):
        p = commands.add_parser(name, help=text)
        p.add_argument("coloring")
    p = commands.add_parser("equiv", help="do two colorings differ at finitely many curves")
    p.add_argument("first")
    p.add_argument("second")
    p = commands.add_parser("simplify", help="rename colors")
    p.add_argument("coloring")
    p.add_argument("--map", required=True, help="old=new,old2=new2")
    p = commands.add_parser("binarize", help="two-color simplification")
    p.add_argument("coloring")
    p.add_argument("--c0", required=True, help="colors sent to the first name")
    p.add_argument("--names", default=",".join(ToolkitConfig.BINARY_COLOR_NAMES))

    p = commands.add_parser("curve", help="torus curve operations")
    actions = p.add_subparsers(dest="action", required=True)
    for name in ("canon", "region", "rep"):
        actions.add_parser(name).add_argument("curve")
    a = actions.add_parser("apply", help="act by a word in S, R and inverses")
    a.add_argument("word")
    a.add_argument("curve")
    a = actions.add_parser("intersect")
    a.add_argument("curve")
    a.add_argument("other")
    a = actions.add_parser("twist", help="twist along CURVE applied to OTHER")
    a.add_argument("curve")
    a.add_argument("other")
    a.add_argument("--n", type=int, default=1)

    p = commands.add_parser("dt", help="Dehn-Thurston twists and lattice checks")
    actions = p.add_subparsers(dest="action", required=True)
    a = actions.add_parser("twist")
    a.add_argument("multicurve", help="g,r;m1:t1,m2:t2,...")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--n", type=int, default=1)
    a = actions.add_parser("string")
    a.add_argument("multicurve")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--from", dest="start", type=int, default=ToolkitConfig.DEFAULT_STRING_WINDOW[0])
    a.add_argument("--to", dest="end", type=int, default=ToolkitConfig.DEFAULT_STRING_WINDOW[1])
    a = actions.add_parser("interesting")
    a.add_argument("multicurve")
    a.add_argument("--k", type=int)
    a = actions.add_parser("gridcheck")
    a.add_argument("lattice", help="lattice coloring JSON, or - for stdin")
    a.add_argument("--check", choices=sorted(CHECK_REGISTRY) + ["all"], default="all")
    return parser


_NEGATIVE_CURVE = re.compile(r"^-(\d+)/([+-]?\d+)$")


def protect_negative_curves(argv: Sequence[str]) -> List[str]:
    """Rewrite -p/q as p/-q so argparse does not take it for an option"""
    rewritten = []
    for token in argv:
        match = _NEGATIVE_CURVE.match(token)
        rewritten.append(f"{match.group(1)}/{-int(match.group(2))}" if match else token)
    return rewritten


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = protect_negative_curves(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    set_verbose(args.verbose)
    handler = COMMAND_REGISTRY[args.command]
    try:
        code, output = handler(args)
    except (ToolkitError, ValueError, FileNotFoundError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return code
