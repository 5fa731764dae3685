import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Add src directory to path
src_dir = Path(__file__).parent
sys.path.append(str(src_dir))

from arnold_algebra import Ring, parse_class, straighten
from arrangement import Arrangement, boolean_arrangement, braid_arrangement
from arrangement_parser import parse_arrangement_file
from burau import (
    burau,
    check_braid_relations,
    format_cycles,
    parse_braid_word,
    parse_cycles,
    permutation_at_1,
    specialize,
)
from char_classes import (
    is_stably_trivial,
    is_trivial_over_pure_braid,
    pairing_witness,
    parse_toral_rep_file,
    realize_sw,
    sw_pair,
)
from errors import InputFileError, ToolkitError
from exact_values import format_gaussian, format_matrix, parse_gaussian
from heisenberg_lift import pullback_chi, spin7_rep, verify_all_lifts
from ktheory import AbelianGroupDescriptor, Hypothesis, ktheory_summary
from poset_builder import betti_numbers, intersection_poset, poincare_polynomial
from vandermonde import RationalComplexConfiguration, trivialization, vandermonde_determinant, \
    vandermonde_trivialization_check

PROJECT_ROOT = Path(__file__).resolve().parents[1]
INPUT_DIR = PROJECT_ROOT / "inputs"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger("cli")

Result = Tuple[str, Any, int]


def resolve_input(name: str, subdir: str) -> Path:
    """An existing path, or a file of that name under inputs/<subdir>."""
    path = Path(name)
    if path.is_file():
        return path
    fallback = INPUT_DIR / subdir / name
    if fallback.is_file():
        return fallback
    raise InputFileError(f"no such file: {name} (also looked in {fallback.parent})")


def load_arrangement(args) -> Tuple[Arrangement, Hypothesis]:
    if args.braid is not None:
        return braid_arrangement(args.braid), Hypothesis.K_PI_1
    if args.boolean is not None:
        return boolean_arrangement(args.boolean), Hypothesis.K_PI_1
    path = resolve_input(args.file, "arrangements")
    logger.info("Reading arrangement from %s", path)
    return parse_arrangement_file(path), Hypothesis.SPACE


# -- subcommands -------------------------------------------------------------

def cmd_poset(args) -> Result:
    arr, _ = load_arrangement(args)
    poset = intersection_poset(arr)
    lines = [f"flats: {len(poset.flats)}, rank {poset.rank()}"]
    for f in poset.flats:
        hyperplanes = ",".join(str(i + 1) for i in f.defining_set)
        lines.append(f"X{f.id}: rank={f.rank} mobius={poset.mobius[f.id]} hyperplanes={{{hyperplanes}}}")
    lines.append("covers: " + " ".join(f"({a},{b})" for a, b in poset.cover_relations()))
    lines.append(f"poincare: {poincare_polynomial(poset)}")
    return "\n".join(lines), poset.to_dict(), 0


def cmd_betti(args) -> Result:
    arr, _ = load_arrangement(args)
    betti = betti_numbers(arr)
    return str(betti), {"betti": betti}, 0


def cmd_ktheory(args) -> Result:
    arr, hypothesis = load_arrangement(args)
    summary = ktheory_summary(betti_numbers(arr), hypothesis)
    groups = ", ".join(f"{key} = {AbelianGroupDescriptor.from_dict(summary[key])}"
                       for key in ("KU^0", "KO^0", "KO^0_rep", "KU^0_rep"))
    if hypothesis is Hypothesis.K_PI_1:
        note = "hypothesis: K(pi,1) complement; KO^0_rep computed for its fundamental group"
    else:
        note = "hypothesis: space only; KO^0_rep assumes the complement is a K(pi,1)"
    return f"{groups}\n{note}", summary, 0


def cmd_sw(args) -> Result:
    rep = parse_toral_rep_file(resolve_input(args.rep, "reps"))
    pair = sw_pair(rep)
    witness = pairing_witness(rep)
    data: Dict[str, Any] = {
        "q": rep.q,
        "n": rep.n,
        "w1": str(pair.w1),
        "w2": str(pair.w2),
        "stably_trivial": witness.is_trivial,
        "pairing": witness.to_dict(),
    }
    if args.strands is not None:
        w1, w2 = pair.to_arnold(args.strands)
        data["pure_braid"] = {
            "strands": args.strands,
            "w1": str(w1),
            "w2": str(w2),
            "trivial": is_trivial_over_pure_braid(rep, args.strands),
        }
        lines = [f"w1 = {w1}", f"w2 = {w2}", f"torus w2 = {pair.w2}"]
    else:
        lines = [f"w1 = {pair.w1}", f"w2 = {pair.w2}"]

    lines.append(f"stably trivial: {'yes' if witness.is_trivial else 'no'}")
    if witness.is_trivial:
        pairs = " ".join(f"({a},{b})" for a, b in witness.to_dict()["pairs"]) or "none"
        zeros = ",".join(str(r) for r in witness.to_dict()["zero_rows"]) or "none"
        lines.append(f"pairing: {pairs}; zero rows: {zeros}")
        if witness.residual:
            lines.append("unpaired rows: " + ",".join(str(r) for r in witness.to_dict()["residual"]))
    else:
        lines.append(f"obstruction: w{witness.obstruction_degree} = {witness.obstruction}")
    if args.strands is not None:
        verdict = "yes" if data["pure_braid"]["trivial"] else "no"
        lines.append(f"trivial over P_{args.strands}: {verdict}")
    return "\n".join(lines), data, 0


def cmd_realize_sw(args) -> Result:
    zeta1 = parse_class(args.zeta1, args.strands, Ring.F2, degree=1)
    zeta2 = parse_class(args.zeta2, args.strands, Ring.F2, degree=2)
    rep = realize_sw(args.strands, zeta1, zeta2)
    lines = [f"# {rep.q} line summands of P_{args.strands}: w1 = {zeta1}, w2 = {zeta2}"]
    lines.extend(" ".join(str(x) for x in row) for row in rep.rows)
    data = {"strands": args.strands, "w1": str(zeta1), "w2": str(zeta2), "rows": [list(r) for r in rep.rows]}
    return "\n".join(lines), data, 0


def cmd_burau(args) -> Result:
    word = parse_braid_word(args.word, args.n)
    matrix = burau(word)
    lines: List[str] = []
    data: Dict[str, Any] = {"n": args.n, "word": str(word)}
    code = 0
    if args.eval is not None:
        value = parse_gaussian(args.eval)
        numeric = specialize(matrix, value).to_list()
        lines.append(format_matrix(numeric))
        data["eval"] = {"value": format_gaussian(value), "matrix": [[format_gaussian(x) for x in r] for r in numeric]}
    if args.at_one:
        perm = format_cycles(permutation_at_1(word))
        lines.append(perm)
        data["permutation"] = perm
    if args.check_relations:
        ok = check_braid_relations(args.n)
        lines.append(f"braid relations for B_{args.n}: {'hold' if ok else 'FAIL'}")
        data["relations"] = ok
        code = 0 if ok else 1
    if not lines:
        lines.append(str(matrix))
    data["matrix"] = [[str(e) for e in row] for row in matrix.entries]
    return "\n".join(lines), data, code


def cmd_heisenberg(args) -> Result:
    if args.triple:
        i, t, j = args.triple
        raw = pullback_chi(args.n, i, t, j)
        obstruction = straighten(raw)
        liftable = not obstruction and is_stably_trivial(spin7_rep(args.n, i, t, j))
        data = {"n": args.n, "triple": [i, t, j], "pullback": str(raw),
                "obstruction": str(obstruction), "spin7_liftable": liftable}
        return str(raw), data, 0

    report = verify_all_lifts(args.n)
    lines = []
    for d in report["details"]:
        i, t, j = d["triple"]
        status = "Spin(7)-liftable" if d["spin7_liftable"] else "obstructed"
        lines.append(f"({i},{t},{j}): obstruction = {d['obstruction']}, {status}")
    lines.append(f"triples: {report['passed']}/{report['total']} unobstructed")
    lines.append(f"degree-1 span: {report['degree1_span']}/{report['h1_dim']}")
    return "\n".join(lines), report, 0 if report["failed"] == 0 else 1


def cmd_vandermonde(args) -> Result:
    config = RationalComplexConfiguration.parse(args.points)
    perm = parse_cycles(args.perm, config.n)
    x = [parse_gaussian(v) for v in args.x.split(",")]
    ok = vandermonde_trivialization_check(config, perm, x)
    det = vandermonde_determinant(config)
    y = [format_gaussian(v) for v in trivialization(config, x)]
    lines = [f"det = {format_gaussian(det)}", "y = (" + ", ".join(y) + ")",
             f"equivariant: {'yes' if ok else 'no'}"]
    data = {"det": format_gaussian(det), "y": y, "equivariant": ok}
    return "\n".join(lines), data, 0 if ok else 1


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangement-toolkit",
        description="Exact computations for arrangement complements, pure braid cohomology and braid representations")
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--braid", type=int, metavar="N", help="braid arrangement z_i = z_j in C^N")
    group.add_argument("--boolean", type=int, metavar="N", help="coordinate hyperplanes in C^N")
    group.add_argument("--file", metavar="PATH", help="arrangement file (or a name under inputs/arrangements)")

    for name, handler, help_text in (
            ("poset", cmd_poset, "intersection poset with Mobius values"),
            ("betti", cmd_betti, "Betti numbers of the complement"),
            ("ktheory", cmd_ktheory, "reduced KU and KO groups")):
        p = sub.add_parser(name, parents=[common, source], help=help_text)
        p.set_defaults(handler=handler)

    p = sub.add_parser("sw", parents=[common], help="Stiefel-Whitney classes of a toral representation")
    p.add_argument("--rep", required=True, metavar="PATH", help="0/1 matrix file (or a name under inputs/reps)")
    p.add_argument("--strands", type=int, metavar="N",
                   help="read the torus as the abelianization of P_N and print A[i,j] classes; "
                        "without it classes stay in e_k torus notation")
    p.set_defaults(handler=cmd_sw)

    p = sub.add_parser("realize-sw", parents=[common], help="representation of P_n with given w1, w2")
    p.add_argument("--strands", type=int, required=True, metavar="N")
    p.add_argument("--zeta1", required=True, metavar="EXPR", help="degree-1 class, e.g. A[3,2]")
    p.add_argument("--zeta2", required=True, metavar="EXPR", help="degree-2 class, e.g. A[2,1]*A[3,1]")
    p.set_defaults(handler=cmd_realize_sw)

    p = sub.add_parser("burau", parents=[common], help="Burau matrices of braid words")
    p.add_argument("--n", type=int, required=True, metavar="N", help="number of strands")
    p.add_argument("--word", default="", metavar="WORD", help='e.g. "s1 s2^-1"')
    p.add_argument("--eval", metavar="VALUE", help="specialize t to p/q[+r/s i]")
    p.add_argument("--check-relations", action="store_true", help="verify the braid relations")
    p.add_argument("--at-one", action="store_true", help="permutation at t = 1 in cycle notation")
    p.set_defaults(handler=cmd_burau)

    p = sub.add_parser("heisenberg", parents=[common], help="lifts of P_n to the Heisenberg group")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--triple", type=int, nargs=3, metavar=("I", "T", "J"))
    p.set_defaults(handler=cmd_heisenberg)

    p = sub.add_parser("vandermonde", parents=[common], help="equivariance of the Vandermonde trivialization")
    p.add_argument("--points", required=True, help='comma-separated Gaussian rationals, e.g. "0,1,1+i"')
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(1 2 3)"')
    p.add_argument("--x", required=True, help="comma-separated Gaussian rationals")
    p.set_defaults(handler=cmd_vandermonde)

    return parser


def configure_logging(verbose: bool):
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format=LOG_FORMAT,
                        stream=sys.stderr, force=True)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose)

    try:
        text, data, code = args.handler(args)
    except ToolkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(run())
