"""Command-line interface.

Exit codes: 0 computed / property holds, 1 a checked property fails,
2 input or usage error, 3 an enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from . import graphs, linalg
from .completion import (banded_bound_report, generic_rank_r_complete, staircase_complete,
                         staircase_min_rank)
from .errors import MinRankError, NotStaircase, ResourceLimit
from .field import FieldSpec, Q
from .inverse_structure import (asplund_check, asplund_generators, counterexample_report,
                                hessenberg_semiseparable, kernel_map_check, nullity_check,
                                prop4_check, verify_duality)
from .matrix import Matrix
from .oracle import DEFAULT_MAX_ASSIGNMENTS, oracle_search
from .pattern import (density_check, full_rank_specified_check, is_banded,
                      is_staircase)
from .pmat import PmatDocument, emit_pmat, parse_document

OK, PROPERTY_FAILS, USAGE, RESOURCE = 0, 1, 2, 3


class UsageError(MinRankError):
    pass


def _one_based(indices) -> str:
    return "{" + ", ".join(str(i + 1) for i in sorted(indices)) + "}"


def _load(path: str) -> PmatDocument:
    try:
        with open(path) as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _full_matrix(doc: PmatDocument) -> Matrix:
    value = doc.value
    if not isinstance(value, Matrix):
        raise UsageError("this command needs a fully specified matrix (no '?')")
    return value


def _header(out: TextIO, doc: PmatDocument, args) -> None:
    spec = sum(1 for row in doc.grid for x in row if x is not None)
    unknown = doc.rows * doc.cols - spec
    print(f"input: {args.file}", file=out)
    print(f"field {doc.field}, {doc.rows}x{doc.cols}, {spec} specified, {unknown} unknown", file=out)
    if doc.blocks is not None:
        print(f"rowblocks {' '.join(map(str, doc.blocks.row_sizes))}; "
              f"colblocks {' '.join(map(str, doc.blocks.col_sizes))}", file=out)
    if args.seed is not None:
        print(f"seed {args.seed}", file=out)


def _print_certificate(out, cert, indent="  "):
    bp = cert.blocking
    print(f"{indent}blocking rows {list(bp.row_sizes)} cols {list(bp.col_sizes)}", file=out)
    print(f"{indent}forward ranks  {list(cert.forward_ranks)}", file=out)
    print(f"{indent}backward ranks {list(cert.backward_ranks)}", file=out)
    print(f"{indent}terms {' + '.join(map(str, cert.terms()))} = {cert.min_rank}", file=out)


def cmd_minrank(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    PM = doc.partial()
    if is_staircase(PM.pattern):
        value, cert = staircase_min_rank(PM)
        print("pattern: staircase", file=out)
        _print_certificate(out, cert)
        print(f"min rank = {value}", file=out)
        return OK
    if is_banded(PM.pattern):
        report = banded_bound_report(PM)
        print("pattern: banded", file=out)
        for orient, rows, cols, v in report.pieces:
            print(f"  {orient} piece rows {_one_based(rows)} cols {_one_based(cols)}: {v}", file=out)
        exact = None
        if PM.field.is_finite and PM.field.modulus ** len(PM.unknowns) <= args.cap:
            exact = oracle_search(PM, args.cap).min_rank
        if exact is None:
            print(f"min rank >= {report.value} (equality relies on the banded reduction theorem;"
                  " no oracle run)", file=out)
            return OK
        print(f"min rank = {exact} (oracle); triangular bound {report.value}", file=out)
        if report.value > exact:
            return PROPERTY_FAILS
        if report.value < exact:
            print("bound not attained for this data", file=out)
        return OK
    print("pattern is neither staircase nor banded (NotStaircase); "
          "over a prime field try `minrank oracle FILE`", file=out)
    return USAGE


def cmd_complete(args, out) -> int:
    doc = _load(args.file)
    PM = doc.partial()
    if args.rank is not None:
        M = generic_rank_r_complete(PM, args.rank)
        how = f"rank-{args.rank} cross completion"
    else:
        if not is_staircase(PM.pattern):
            raise NotStaircase("pattern is not staircase; pass --rank R for a line-cover completion")
        M = staircase_complete(PM)
        how = "minimal rank staircase completion"
    r = linalg.rank(M)
    out.write(emit_pmat(M, comment=f"{how} of {args.file}\nrank {r}"))
    return OK


def cmd_oracle(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    PM = doc.partial()
    res = oracle_search(PM, args.cap)
    print(f"assignments enumerated: {res.visited} of {res.assignments}", file=out)
    print(f"min rank = {res.min_rank}", file=out)
    print("witness completion:", file=out)
    out.write(emit_pmat(res.witness))
    return OK


def cmd_duality(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    if doc.blocks is None:
        raise UsageError("duality needs rowblocks and colblocks directives")
    T = _full_matrix(doc)
    rep = verify_duality(T, doc.blocks)
    print(f"min rank of block lower part of T: {rep.lower_min_rank}", file=out)
    _print_certificate(out, rep.lower_certificate)
    print(f"min rank of block strictly lower part of T^-1: {rep.strict_lower_min_rank}", file=out)
    _print_certificate(out, rep.strict_lower_certificate)
    verdict = "holds" if rep.holds else "VIOLATED"
    print(f"{rep.lower_min_rank} + {rep.strict_lower_min_rank} = "
          f"{rep.lower_min_rank + rep.strict_lower_min_rank} (N = {rep.N}): {verdict}", file=out)
    return OK if rep.holds else PROPERTY_FAILS


def cmd_nullity(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    try:
        i, j = (int(x) for x in args.split.split(","))
    except ValueError:
        raise UsageError("--split expects I,J") from None
    T = _full_matrix(doc)
    kc, kr = nullity_check(T, i, j)
    mapped = kernel_map_check(T, i, j)
    print(f"T = [[A, B], [C, D]] with A of size {i}x{j}", file=out)
    print(f"dim ker C = {kc}, dim ker R = {kr}: {'equal' if kc == kr else 'DIFFERENT'}", file=out)
    print(f"A maps ker C onto ker R: {'yes' if mapped else 'NO'}", file=out)
    return OK if kc == kr and mapped else PROPERTY_FAILS


def cmd_prop4(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    PM = doc.partial()
    holds = prop4_check(PM)
    value, _ = staircase_min_rank(PM)
    print(f"nonzero diagonal and zero below it: {'yes' if holds else 'no'}", file=out)
    print(f"min rank = {value} (n = {PM.rows})", file=out)
    return OK


def cmd_asplund(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    A = _full_matrix(doc)
    banded = asplund_check(A, args.p)
    print(f"zero above superdiagonal {args.p} and nonzero on it: {'yes' if banded else 'no'}", file=out)
    if args.generators:
        B = linalg.inverse(A)
        gens = asplund_generators(B, args.p)
        print(f"inverse agrees with F G on {{i < j + {args.p}}}: "
              f"{'yes' if gens.agrees_on_region(B) else 'NO'}", file=out)
        out.write(emit_pmat(gens.F, comment="F"))
        out.write(emit_pmat(gens.G, comment="G"))
    return OK if banded else PROPERTY_FAILS


def cmd_hessenberg(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    T = _full_matrix(doc)
    u, v = hessenberg_semiseparable(T)
    fmt = doc.field.format
    print("inverse lower part (i >= j) equals u_i v_j with", file=out)
    print("u = (" + ", ".join(fmt(x) for x in u) + ")", file=out)
    print("v = (" + ", ".join(fmt(x) for x in v) + ")", file=out)
    return OK


def cmd_generic_check(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    PM = doc.partial()
    r = args.rank
    dens = density_check(PM.pattern, r, args.size_cap)
    if dens:
        print(f"density (2k - {r}) * {r}: pass", file=out)
    else:
        print(f"density (2k - {r}) * {r}: FAIL on rows {_one_based(dens.rows)} "
              f"cols {_one_based(dens.cols)} ({dens.detail})", file=out)
    full = full_rank_specified_check(PM, args.size_cap)
    if full:
        print("fully specified submatrices full rank: pass", file=out)
    else:
        print(f"fully specified submatrices full rank: FAIL on rows {_one_based(full.rows)} "
              f"cols {_one_based(full.cols)}", file=out)
    try:
        cover = graphs.line_cover(PM.pattern, r)
        print(f"line cover: rows {_one_based(cover.cover_rows)} cols {_one_based(cover.cover_cols)}",
              file=out)
    except MinRankError as exc:
        print(f"line cover: none ({exc})", file=out)
    return OK if dens and full else PROPERTY_FAILS


def _format_cycle(cycle) -> str:
    return " ".join(f"{kind}{k + 1}" for kind, k in cycle)


def cmd_chordality(args, out) -> int:
    doc = _load(args.file)
    _header(out, doc, args)
    G = graphs.PatternGraph(doc.partial().pattern)
    cycle = graphs.chordless_cycle_search(G, args.size_cap)
    if cycle is None:
        print("chordal bipartite: no chordless cycle of length >= 6", file=out)
        return OK
    print(f"chordless {len(cycle)}-cycle: {_format_cycle(cycle)}", file=out)
    return PROPERTY_FAILS


def _parse_field_arg(text: str) -> FieldSpec:
    text = text.strip()
    if text == "Q":
        return Q
    if text.startswith("GF(") and text.endswith(")"):
        return FieldSpec(int(text[3:-1]))
    raise UsageError(f"unknown field {text!r}")


def cmd_counterexample(args, out) -> int:
    field = _parse_field_arg(args.field)
    rep = counterexample_report(field, args.cap)
    fmt = field.format
    if args.seed is not None:
        print(f"seed {args.seed}", file=out)
    print(f"field {field}", file=out)
    print("A = [[6, 3, x, 1], [3, 1, 1, y], [z, 1, 2, 3], [1, w, 1, 1]]", file=out)
    print(f"rank 2 needs det [[x, 1], [1, y]] = {rep.pivot_determinant.format('xy')} != 0", file=out)
    print("off-diagonal residuals after clearing that denominator:", file=out)
    for res in rep.residuals:
        print(f"  {res.format('xy')} = 0", file=out)
    print(f"their difference is the constant {fmt(rep.inconsistency_gap)}", file=out)
    print("rank 2 is " + ("infeasible" if rep.rank2_infeasible else "not ruled out"), file=out)
    if rep.oracle_min_rank is not None:
        print(f"exhaustive oracle over {field}: min rank = {rep.oracle_min_rank}", file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minrank", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=None, help="seed recorded in reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file")
        p.set_defaults(func=func)
        return p

    p = add("minrank", cmd_minrank, "minimal rank of a staircase or banded partial matrix")
    p.add_argument("--cap", type=int, default=DEFAULT_MAX_ASSIGNMENTS)
    p = add("complete", cmd_complete, "emit a minimal rank (or rank-R) completion")
    p.add_argument("--rank", type=int, default=None)
    p = add("oracle", cmd_oracle, "exhaustive minimal rank over GF(p)")
    p.add_argument("--cap", type=int, default=DEFAULT_MAX_ASSIGNMENTS)
    add("duality", cmd_duality, "lower part of T vs strictly lower part of T^-1")
    p = add("nullity", cmd_nullity, "kernel dimensions of complementary blocks")
    p.add_argument("--split", required=True, help="I,J: A is the leading I x J block")
    add("prop4", cmd_prop4, "full minimal rank of a lower-triangular partial matrix")
    p = add("asplund", cmd_asplund, "band test and inverse generators")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--generators", action="store_true")
    add("hessenberg", cmd_hessenberg, "rank-one lower part of an upper Hessenberg inverse")
    p = add("generic-check", cmd_generic_check, "density, full-rank and line-cover report")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--size-cap", type=int, default=10)
    p = add("chordality", cmd_chordality, "search for chordless cycles of length >= 6")
    p.add_argument("--size-cap", type=int, default=16)
    p = add("counterexample", cmd_counterexample, "the rank-2 counterexample report", with_file=False)
    p.add_argument("--field", default="Q")
    p.add_argument("--cap", type=int, default=DEFAULT_MAX_ASSIGNMENTS)
    return parser


def run_command(argv: List[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except ResourceLimit as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return RESOURCE
    except MinRankError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
