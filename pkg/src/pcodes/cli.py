"""Command-line interface.

Exit codes: 0 success, 1 analytical negative (e.g. codes not
equivalent, embedding absent), 2 usage or I/O errors.  All analytical
output goes to stdout in TSV (default) or JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .words import BinaryCode, word_to_str

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _read_codes(source: str) -> list[BinaryCode]:
    try:
        if source == "-":
            return formats.parse_pcc(sys.stdin.read())
        return formats.parse_pcc(Path(source).read_text())
    except (OSError, ValueError) as exc:
        raise CliError(f"cannot read codes from {source}: {exc}") from exc


def _read_one(source: str) -> BinaryCode:
    codes = _read_codes(source)
    if len(codes) != 1:
        raise CliError(f"{source}: expected exactly one code, found {len(codes)}")
    return codes[0]


def _emit(rows: list[tuple[str, object]], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({k: v for k, v in rows}, default=str))
    else:
        for k, v in rows:
            print(f"{k}\t{v}")


def _emit_table(header: str, rows: list[tuple[str, object]], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"table": header, "rows": [[k, v] for k, v in rows]},
                         default=str))
    else:
        for k, v in rows:
            print(f"{k}\t{v}")


def cmd_gen(args, fmt: str) -> int:
    from .gf2 import hamming_code

    if args.family != "hamming":
        raise CliError(f"unknown family {args.family!r}")
    code = hamming_code(args.m)
    formats.write_pcc([code], sys.stdout)
    return EXIT_OK


def cmd_invariants(args, fmt: str) -> int:
    from .reports import basic_invariants

    code = _read_one(args.file)
    inv = basic_invariants(code)
    _emit(sorted(inv.items()), fmt)
    return EXIT_OK


def cmd_equiv(args, fmt: str) -> int:
    from .equivalence import are_equivalent, are_isomorphic

    c1, c2 = _read_one(args.a), _read_one(args.b)
    same = are_isomorphic(c1, c2) if args.isomorphism else are_equivalent(c1, c2)
    key = "isomorphic" if args.isomorphism else "equivalent"
    _emit([(key, same)], fmt)
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_aut(args, fmt: str) -> int:
    from .equivalence import automorphism_group
    from .reports import _orbit_notation

    code = _read_one(args.file)
    rep = automorphism_group(code)
    _emit([
        ("aut_order", rep.order),
        ("sym_order", rep.symmetry_order),
        ("codeword_orbits", _orbit_notation(rep.codeword_orbit_sizes)),
        ("fixed_coordinates", rep.coordinate_fixed_count),
        ("n_generators", len(rep.generators)),
    ], fmt)
    return EXIT_OK


def cmd_sts(args, fmt: str) -> int:
    from .designs import sts_of

    code = _read_one(args.file)
    x = int(args.word, 2) if args.word else code.words[0]
    sts = sts_of(code, x)
    formats.write_design(sts.v, sts.blocks, "STS", sys.stdout)
    return EXIT_OK


def cmd_st_set(args, fmt: str) -> int:
    from .designs import independence_number, st_set

    code = _read_one(args.file)
    h = st_set(code)
    rows: list[tuple[str, object]] = [("st_size", len(h))]
    if args.alpha:
        rows.append(("independence", independence_number(h)))
    if args.triples:
        rows += [("triple", " ".join(map(str, t))) for t in h.triples]
    _emit(rows, fmt)
    return EXIT_OK


def cmd_systematic(args, fmt: str) -> int:
    from .designs import is_systematic

    code = _read_one(args.file)
    result = is_systematic(code)
    _emit([("systematic", result)], fmt)
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_components(args, fmt: str) -> int:
    from .switching import minimal_i_components

    code = _read_one(args.file)
    part = minimal_i_components(code, args.coord)
    if args.sizes_only:
        _emit([("sizes", ",".join(map(str, part.sizes)))], fmt)
    else:
        formats.write_pcc([BinaryCode(code.n, comp) for comp in part.components],
                          sys.stdout)
    return EXIT_OK


def cmd_switch(args, fmt: str) -> int:
    from .switching import minimal_i_components, switch

    code = _read_one(args.file)
    part = minimal_i_components(code, args.coord)
    if not 0 <= args.component < len(part.components):
        raise CliError(f"component index out of range 0..{len(part.components) - 1}")
    out = switch(code, args.coord, part.components[args.component])
    formats.write_pcc([out], sys.stdout)
    return EXIT_OK


def cmd_class_bfs(args, fmt: str) -> int:
    from .switching import switching_class_bfs

    seed = _read_one(args.file)
    known = None
    if args.resume:
        known = formats.parse_scrun(Path(args.resume).read_text())
    state_fh = None
    codes_fh = None
    if args.state:
        path = Path(args.state)
        fresh = not path.exists()
        state_fh = path.open("a")
        if fresh:
            state_fh.write("SCRUN1\n")
    if args.emit_codes:
        codes_fh = Path(args.emit_codes).open("a")

    def on_new(code, digest):
        if state_fh:
            state_fh.write(digest + "\n")
            state_fh.flush()
        if codes_fh:
            codes_fh.write("\n")
            formats.write_pcc([code], codes_fh)

    run = switching_class_bfs(seed, max_codes=args.max_codes,
                              max_expansions=args.max_expansions,
                              use_unions=not args.no_unions,
                              store_codes=not args.no_store,
                              known_digests=known, on_new=on_new)
    for fh in (state_fh, codes_fh):
        if fh:
            fh.close()
    _emit([
        ("classes", run.n_classes),
        ("expanded", run.expanded),
        ("max_frontier", run.max_frontier),
        ("budget_exhausted", run.budget_exhausted),
        ("union_moves_added", run.union_moves_added),
        ("seed_digest", run.seed_digest),
    ], fmt)
    return EXIT_OK


def cmd_clp(args, fmt: str) -> int:
    from .profiles import clp

    code = _read_one(args.file)
    profile = clp(code)
    _emit([("clp", ",".join(str(k) for k in profile.kappa_prime))], fmt)
    return EXIT_OK


def cmd_oa_check(args, fmt: str) -> int:
    from .transforms import code_distance_distribution, macwilliams_transform, oa_strength

    code = _read_one(args.file)
    strength = oa_strength(code)
    vec = macwilliams_transform(code_distance_distribution(code), len(code))
    rows: list[tuple[str, object]] = [
        ("strength", strength),
        ("transform", ",".join(str(e) for e in vec.entries)),
    ]
    if args.verify_projection:
        proj = oa_strength(code, method="projection")
        rows.append(("projection_strength", proj))
        if proj != strength:
            raise CliError("transform and projection strengths disagree")
    _emit(rows, fmt)
    return EXIT_OK


def cmd_embed(args, fmt: str) -> int:
    from .profiles import embed_search

    guest, host = _read_one(args.sub), _read_one(args.host)
    result = embed_search(guest, host, node_budget=args.node_budget)
    rows: list[tuple[str, object]] = [("status", result.status), ("nodes", result.nodes)]
    if result.found:
        rows.append(("coordinates", ",".join(str(c + 1) for c in result.coord_map)))
        rows.append(("translation", word_to_str(result.translation, host.n)))
    _emit(rows, fmt)
    if result.status == "budget":
        raise CliError("node budget exhausted before a verdict")
    return EXIT_OK if result.found else EXIT_NEGATIVE


def cmd_enumerate_perfect(args, fmt: str) -> int:
    from .profiles import enumerate_perfect_codes

    codes = enumerate_perfect_codes(args.n)
    if args.count_only:
        with_zero = sum(1 for c in codes if 0 in c)
        _emit([("count", len(codes)), ("containing_zero", with_zero)], fmt)
    else:
        formats.write_pcc(codes, sys.stdout)
    return EXIT_OK


def cmd_mixed(args, fmt: str) -> int:
    from .mixedcodes import (
        classify_mixed,
        disjoint_kernel_triples,
        f8_codes_from_partitions,
        mixed_automorphism_order,
        mixed_is_perfect,
        quaternary_compress,
    )

    if args.action in ("compress", "verify") and not args.file:
        raise CliError(f"mixed {args.action} needs a code file")
    if args.action == "compress":
        code = _read_one(args.file)
        sets = disjoint_kernel_triples(code, args.t)
        if not sets:
            raise CliError(f"no disjoint weight-3 kernel sets of size {args.t}")
        formats.write_mpc([quaternary_compress(code, sets[0])], sys.stdout)
        return EXIT_OK
    if args.action == "verify":
        codes = formats.parse_mpc(Path(args.file).read_text()
                                  if args.file != "-" else sys.stdin.read())
        ok = all(mixed_is_perfect(c) for c in codes)
        _emit([("perfect", ok), ("codes", len(codes))], fmt)
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.action == "f8-enumerate":
        codes = f8_codes_from_partitions()
        classes = classify_mixed(codes)
        reps = [codes[idxs[0]] for idxs in classes.values()]
        orders = sorted(mixed_automorphism_order(rep) for rep in reps)
        rows = [("classes", len(classes))]
        rows += [(f"aut_order_{i}", o) for i, o in enumerate(orders)]
        _emit(rows, fmt)
        return EXIT_OK
    raise CliError(f"unknown mixed action {args.action!r}")


def cmd_catalog_stats(args, fmt: str) -> int:
    from .reports import REPORT_TABLES, catalog_records, report, save_records

    codes = _read_codes(args.file)
    if args.table not in REPORT_TABLES:
        raise CliError(f"unknown table {args.table!r}; choose from {', '.join(REPORT_TABLES)}")
    sts_map = None
    if args.sts_index_map:
        sts_map = json.loads(Path(args.sts_index_map).read_text())
    path = None if args.file == "-" or args.no_cache else Path(args.file)
    records = catalog_records(codes, path)
    rep = report(records, args.table, sts_index_map=sts_map)
    if path is not None:
        save_records(records, path)
    _emit_table(rep.table, rep.rows, fmt)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcodes",
                                description="Perfect binary code analysis toolkit")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a named code as PCC1")
    g.add_argument("family", choices=("hamming",))
    g.add_argument("--m", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("invariants", help="basic invariants of one code")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("equiv", help="decide equivalence of two codes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--isomorphism", action="store_true",
                   help="permutations only, no translations")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("aut", help="automorphism group report")
    s.add_argument("file")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("sts", help="triple system of a codeword translate")
    s.add_argument("file")
    s.add_argument("--word", help="reference codeword as a 0/1 string")
    s.set_defaults(func=cmd_sts)

    s = sub.add_parser("st-set", help="distance-3 difference supports")
    s.add_argument("file")
    s.add_argument("--alpha", action="store_true", help="also independence number")
    s.add_argument("--triples", action="store_true", help="list the triples")
    s.set_defaults(func=cmd_st_set)

    s = sub.add_parser("systematic", help="systematic coordinate-set test")
    s.add_argument("file")
    s.set_defaults(func=cmd_systematic)

    s = sub.add_parser("components", help="minimal components for a coordinate")
    s.add_argument("file")
    s.add_argument("--coord", type=int, required=True)
    s.add_argument("--sizes-only", action="store_true")
    s.set_defaults(func=cmd_components)

    s = sub.add_parser("switch", help="switch one minimal component")
    s.add_argument("file")
    s.add_argument("--coord", type=int, required=True)
    s.add_argument("--component", type=int, required=True,
                   help="index into the sorted component list")
    s.set_defaults(func=cmd_switch)

    s = sub.add_parser("class-bfs", help="switching-class closure search")
    s.add_argument("file")
    s.add_argument("--resume", help="SCRUN1 state file with known digests")
    s.add_argument("--state", help="append discovered digests to this SCRUN1 file")
    s.add_argument("--emit-codes", help="append discovered codes to this PCC1 file")
    s.add_argument("--max-codes", type=int)
    s.add_argument("--max-expansions", type=int)
    s.add_argument("--no-unions", action="store_true")
    s.add_argument("--no-store", action="store_true",
                   help="keep only digests in memory")
    s.set_defaults(func=cmd_class_bfs)

    s = sub.add_parser("clp", help="cardinality-length profile")
    s.add_argument("file")
    s.set_defaults(func=cmd_clp)

    s = sub.add_parser("oa-check", help="orthogonal-array strength")
    s.add_argument("file")
    s.add_argument("--verify-projection", action="store_true")
    s.set_defaults(func=cmd_oa_check)

    s = sub.add_parser("embed", help="embed one code into another")
    s.add_argument("sub")
    s.add_argument("host")
    s.add_argument("--node-budget", type=int, default=5_000_000)
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("enumerate-perfect", help="all perfect codes at small length")
    s.add_argument("--n", type=int, choices=(3, 7), required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate_perfect)

    s = sub.add_parser("mixed", help="mixed-alphabet code operations")
    s.add_argument("action", choices=("compress", "f8-enumerate", "verify"))
    s.add_argument("file", nargs="?")
    s.add_argument("--t", type=int, default=1, help="number of folded triples")
    s.set_defaults(func=cmd_mixed)

    s = sub.add_parser("catalog-stats", help="aggregate a table over a catalog")
    s.add_argument("file")
    s.add_argument("--table", required=True)
    s.add_argument("--sts-index-map",
                   help="JSON file mapping triple-system digests to labels")
    s.add_argument("--no-cache", action="store_true",
                   help="skip the sidecar invariant cache")
    s.set_defaults(func=cmd_catalog_stats)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, args.format)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
