"""Command-line driver.

Reports are line-oriented ``key=value`` text (edge lists for graph output), so
the same input and flags always produce the same bytes.  Exit status: 0 on
success, 1 on a domain error or a failed check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cycles import count_induced_cycles, find_hexagon_counterexamples, hexagon_report
from .errors import TrigraphError
from .generators import FAMILIES, GenSpec
from .graph import Graph, format_edge_list, parse_edge_list, to_dot
from .linear import check_locally_linear, enumerate_triangles
from .poly import IntPolynomial, format_factored, root_decimals
from .reconstruct import reconstruct_base, roundtrip_check
from .spectral import charpoly_exact, half_laplacian_like, verify_theorem1
from .star import star_graph

VERBS = ("verify", "star", "charpoly", "theorem", "census", "reconstruct", "roundtrip", "generate", "hexfix")


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigraph",
        description="Locally linear graphs and their triangle graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    helps = {
        "verify": "check local linearity",
        "star": "build the triangle graph G*",
        "charpoly": "exact characteristic polynomials of A, A + D/2 and A*",
        "theorem": "check the identity between P_{A*} and P_{A+D/2}",
        "census": "induced C4/C5/C6 counts of G and G*",
        "reconstruct": "rebuild G from a triangle graph given as input",
        "roundtrip": "G -> G* -> G' and certify G' ~= G",
        "generate": "write a generated graph as an edge list",
        "hexfix": "search and write the two hexagon counterexample fixtures",
    }
    for verb in VERBS:
        p = sub.add_parser(verb, help=helps[verb])
        if verb != "hexfix":
            p.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
            p.add_argument("--family", choices=FAMILIES, help="generate the input instead")
            p.add_argument("--t", type=int, default=1, help="triangle count for --family")
            p.add_argument("--merge-bias", type=Fraction, default=Fraction(1, 2))
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
        if verb in ("star", "generate", "reconstruct"):
            p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
        if verb == "charpoly":
            p.add_argument("--places", type=int, default=3)
        if verb == "hexfix":
            p.add_argument("--out-dir", default=".", help="directory for the fixture files")
            p.add_argument("--max-triangles", type=int, default=12)
    return parser


def _load(args) -> tuple[Graph, str]:
    if (args.input is None) == (args.family is None):
        raise _Usage("give exactly one input: an edge-list path or --family")
    if args.family is not None:
        params = {"t": args.t}
        if args.family == "random_locally_linear":
            params["merge_bias"] = args.merge_bias
        spec = GenSpec(args.family, params, args.seed)
        return spec.build(), spec.describe()
    if args.input == "-":
        return parse_edge_list(sys.stdin.read()), "stdin"
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {args.input}: {exc.strerror}") from exc
    return parse_edge_list(text), args.input


def _coeffs(p: IntPolynomial) -> str:
    return ",".join(str(c) for c in p.coeffs)


def _poly_lines(prefix: str, p: IntPolynomial, places: int = 3) -> list[str]:
    return [
        f"{prefix}_coeffs={_coeffs(p)}",
        f"{prefix}_factored={format_factored(p)}",
        f"{prefix}_roots={','.join(root_decimals(p, places))}",
    ]


def cmd_verify(g: Graph, args) -> tuple[list[str], int]:
    verdict = check_locally_linear(g)
    if verdict:
        lines = ["locally-linear: true", f"n={g.n}", f"edges={g.m}", f"triangles={len(enumerate_triangles(g))}"]
        return lines, 0
    return [f"locally-linear: false, witness: {verdict.witness}"], 1


def cmd_star(g: Graph, args) -> tuple[list[str], int]:
    res = star_graph(g)
    if args.dot:
        labels = ["-".join(map(str, t)) for t in res.triangles]
        return [to_dot(res.star, "Gstar", labels).rstrip("\n")], 0
    comments = [f"triangle graph of a graph on {g.n} vertices"]
    comments += [f"triangle {i}: {a} {b} {c}" for i, (a, b, c) in enumerate(res.triangles)]
    return [format_edge_list(res.star, comments).rstrip("\n")], 0


def cmd_charpoly(g: Graph, args) -> tuple[list[str], int]:
    star = star_graph(g).star
    lines = [f"n={g.n}", f"m={star.n}"]
    lines += _poly_lines("A", charpoly_exact(g.adjacency_matrix()), args.places)
    lines += _poly_lines("A_half_D", charpoly_exact(half_laplacian_like(g)), args.places)
    lines += _poly_lines("A_star", charpoly_exact(star.adjacency_matrix()), args.places)
    return lines, 0


def cmd_theorem(g: Graph, args) -> tuple[list[str], int]:
    rep = verify_theorem1(g)
    lines = [
        f"n={rep.n}",
        f"m={rep.m}",
        f"branch={'cross-multiplied' if rep.cross_multiplied else 'direct'}",
        f"holds={str(rep.holds).lower()}",
        f"lhs={_coeffs(rep.lhs)}",
        f"rhs={_coeffs(rep.rhs)}",
    ]
    lines += _poly_lines("P_star", rep.p_star)
    lines += _poly_lines("P_half", rep.p_half)
    if rep.regular_case is not None:
        rc = rep.regular_case
        lines += [f"regular_k={rc.k}", f"regular_rhs={_coeffs(rc.alt_rhs)}", f"regular_holds={str(rc.alt_holds).lower()}"]
    ok = rep.holds and (rep.regular_case is None or rep.regular_case.alt_holds)
    return lines, 0 if ok else 1


def cmd_census(g: Graph, args) -> tuple[list[str], int]:
    star = star_graph(g).star
    lines = ["k G Gstar"]
    for k in (4, 5, 6):
        lines.append(f"{k} {len(count_induced_cycles(g, k))} {len(count_induced_cycles(star, k))}")
    return lines, 0


def cmd_reconstruct(h: Graph, args) -> tuple[list[str], int]:
    res = reconstruct_base(h)
    if args.dot:
        labels = ["{" + ",".join(map(str, sorted(o))) + "}" for o in res.vertex_origin]
        return [to_dot(res.base, "G", labels).rstrip("\n")], 0
    comments = [f"rebuilt from a triangle graph on {h.n} vertices"]
    comments += [f"vertex {b} <- {' '.join(map(str, sorted(o)))}" for b, o in enumerate(res.vertex_origin)]
    comments += [f"triangle of {x}: {a} {b} {c}" for x, (a, b, c) in enumerate(res.triangle_of)]
    return [format_edge_list(res.base, comments).rstrip("\n")], 0


def _cert(mapping) -> str:
    if mapping is None:
        return "none"
    return ",".join(f"{k}:{v}" for k, v in sorted(mapping.items()))


def cmd_roundtrip(g: Graph, args) -> tuple[list[str], int]:
    rt = roundtrip_check(g)
    lines = [
        f"roundtrip={'pass' if rt.ok else 'fail'}",
        f"rebuilt_n={rt.result.base.n}",
        f"base_certificate={_cert(rt.base_certificate)}",
        f"star_certificate={_cert(rt.star_certificate)}",
    ]
    return lines, 0 if rt.ok else 1


def cmd_generate(g: Graph, args, source: str) -> tuple[list[str], int]:
    if args.dot:
        return [to_dot(g).rstrip("\n")], 0
    return [format_edge_list(g, [source]).rstrip("\n")], 0


def cmd_hexfix(args) -> tuple[list[str], int]:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = []
    for ex in find_hexagon_counterexamples(args.max_triangles):
        rep = hexagon_report(ex.graph)
        name = f"hexagon_{ex.direction.replace('-', '_')}.txt"
        comments = [
            f"hexagon counterexample, direction {ex.direction}",
            f"family=random_locally_linear t={ex.triangles} merge_bias={ex.merge_bias} seed={ex.seed}",
            f"C6(G)={rep.base_count} C6(G*)={rep.star_count}",
        ]
        (out_dir / name).write_text(format_edge_list(ex.graph, comments))
        lines += [
            f"{ex.direction}: file={name} seed={ex.seed} t={ex.triangles} "
            f"C6_G={rep.base_count} C6_Gstar={rep.star_count} "
            f"untranslated_G={len(rep.base_untranslated)} untranslated_Gstar={len(rep.star_untranslated)}"
        ]
    return lines, 0


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "hexfix":
            lines, status = cmd_hexfix(args)
        else:
            g, source = _load(args)
            handler = globals()[f"cmd_{args.verb}"]
            if args.verb == "generate":
                lines, status = handler(g, args, source)
            else:
                lines, status = handler(g, args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except TrigraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    text = "\n".join(lines) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
