"""Command-line interface for building, verifying, and reporting.

Commands: info, verify, search-kernel, lemma-check, torus-demo, realize.
Reports are JSON lines (schema field on every record) or plain text. Exit
codes: 0 success, 1 verification failure (including no kernel witness at
the requested bound), 2 usage or configuration error, 3 resource bound.
"""

import argparse
import json
import sys
import time

from .cover import ResourceLimitError, build_mod2_cover
from .curves import generate_simple_classes, lemma_check, verify_non_geometric
from .demos import (
    extend_to_dimension,
    free_factor_sidedness,
    main_construction_sidedness,
    torus_inclusion_sidedness,
    torus_kernel_scan,
)
from .quotient import (
    GroupContext,
    empirical_image_rank,
    in_kernel,
    search_kernel_elements,
)
from .realize import parse_presentation, realize, recipe_for_G
from .words import dehn_normal_form, is_trivial, word_from_str, word_to_str

SCHEMA = 1


def _write(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_lines(records):
    return [json.dumps(rec, sort_keys=True) for rec in records]


def _witness_record(genus, word, proper_power):
    normal_form = dehn_normal_form(word, genus)
    return {
        "schema": SCHEMA,
        "kind": "witness",
        "word": word_to_str(word),
        "length": len(word),
        "proper_power": proper_power,
        "dehn_normal_form": word_to_str(normal_form),
        "dehn_nontrivial": normal_form != (),
    }


def verify_witness_record(record, ctx) -> bool:
    """Re-verify a loaded witness record against a fresh context."""
    word = word_from_str(record["word"], ctx.genus)
    return in_kernel(ctx, word) and not is_trivial(word, ctx.genus)


def _cover_stats_record(cover):
    stats = cover.stats()
    return {
        "schema": SCHEMA,
        "kind": "cover",
        "genus": stats.base_genus,
        "degree": stats.n_vertices,
        "n_edges": stats.n_edges,
        "n_faces": stats.n_faces,
        "euler_characteristic": stats.euler_characteristic,
        "cover_genus": stats.cover_genus,
        "h1_dim": stats.h1_dim,
        "group_order_log2": 2 * stats.base_genus + stats.h1_dim,
    }


def cmd_info(args):
    cover = build_mod2_cover(args.genus)
    record = _cover_stats_record(cover)
    if args.format == "json":
        _write(_json_lines([record]), args.out)
    else:
        _write(
            [
                "cover degree: %d" % record["degree"],
                "euler characteristic: %d" % record["euler_characteristic"],
                "cover genus: %d" % record["cover_genus"],
                "h1 dimension: %d" % record["h1_dim"],
                "group order: 2^%d" % record["group_order_log2"],
            ],
            args.out,
        )
    return 0


def cmd_verify(args):
    timing = {}
    start = time.perf_counter()
    cover = build_mod2_cover(args.genus)
    ctx = GroupContext(cover)
    timing["build_s"] = round(time.perf_counter() - start, 3)

    start = time.perf_counter()
    classes = generate_simple_classes(args.genus, args.depth, args.max_len)
    timing["generate_s"] = round(time.perf_counter() - start, 3)

    start = time.perf_counter()
    report = verify_non_geometric(ctx, classes, workers=args.workers)
    timing["verify_s"] = round(time.perf_counter() - start, 3)

    start = time.perf_counter()
    lemma = lemma_check(ctx, classes)
    timing["lemma_s"] = round(time.perf_counter() - start, 3)

    start = time.perf_counter()
    witnesses = search_kernel_elements(ctx, args.kernel_len)
    timing["search_s"] = round(time.perf_counter() - start, 3)

    rank = empirical_image_rank(ctx, seed=args.seed)

    if report.kernel_hits:
        status = "kernel_hit"
    elif not witnesses:
        status = "no_witness_at_bound"
    elif not lemma.ok:
        status = "lemma_failure"
    else:
        status = "ok"

    summary = {
        "schema": SCHEMA,
        "kind": "summary",
        "status": status,
        "config": {
            "genus": args.genus,
            "depth": args.depth,
            "max_len": args.max_len,
            "kernel_len": args.kernel_len,
            "workers": args.workers,
            "seed": args.seed,
        },
        "cover": _cover_stats_record(cover),
        "classes_total": report.total,
        "classes_separating": report.n_separating,
        "classes_nonseparating": report.n_nonseparating,
        "kernel_hits": report.kernel_hits,
        "witness_count": len(witnesses),
        "lemma": {
            "separating_checked": lemma.n_separating,
            "nonseparating_checked": lemma.n_nonseparating,
            "lifts_per_class": lemma.lifts_per_class,
            "failures": lemma.failures,
        },
        "image_rank_observed": rank,
        "completeness_note": report.completeness_note,
        "timing": timing,
    }
    if args.format == "json":
        records = [summary]
        records.extend(
            _witness_record(args.genus, w, flag) for w, flag in witnesses
        )
        for rec in report.records:
            rec = dict(rec)
            rec["schema"] = SCHEMA
            rec["kind"] = "class"
            records.append(rec)
        _write(_json_lines(records), args.out)
    else:
        lines = [
            "status: %s" % status,
            "classes: %d (%d separating, %d nonseparating)"
            % (report.total, report.n_separating, report.n_nonseparating),
            "kernel hits among simple classes: %d" % len(report.kernel_hits),
            "kernel witnesses found: %d" % len(witnesses),
            "lemma check: %s (%d separating classes, %d lifts each)"
            % ("pass" if lemma.ok else "FAIL", lemma.n_separating, lemma.lifts_per_class),
            "image rank observed: v %d/%d, h %d/%d"
            % (rank["v_rank"], rank["v_dim"], rank["h_rank"], rank["h_dim"]),
            "timing: %s" % json.dumps(timing, sort_keys=True),
        ]
        if status == "no_witness_at_bound":
            lines.append("no witness found at this bound")
        _write(lines, args.out)
    return 0 if status == "ok" else 1


def cmd_search_kernel(args):
    cover = build_mod2_cover(args.genus)
    ctx = GroupContext(cover)
    witnesses = search_kernel_elements(ctx, args.kernel_len)
    status = "ok" if witnesses else "no_witness_at_bound"
    summary = {
        "schema": SCHEMA,
        "kind": "summary",
        "status": status,
        "genus": args.genus,
        "kernel_len": args.kernel_len,
        "witness_count": len(witnesses),
    }
    if args.format == "json":
        records = [summary]
        records.extend(
            _witness_record(args.genus, w, flag) for w, flag in witnesses
        )
        _write(_json_lines(records), args.out)
    else:
        lines = ["witnesses found: %d" % len(witnesses)]
        lines.extend(
            "%s (length %d%s)"
            % (word_to_str(w), len(w), ", proper power" if flag else "")
            for w, flag in witnesses
        )
        if not witnesses:
            lines.append("no witness found at this bound")
        _write(lines, args.out)
    return 0 if witnesses else 1


def cmd_lemma_check(args):
    cover = build_mod2_cover(args.genus)
    ctx = GroupContext(cover)
    classes = generate_simple_classes(args.genus, args.depth, args.max_len)
    lemma = lemma_check(ctx, classes)
    summary = {
        "schema": SCHEMA,
        "kind": "summary",
        "status": "ok" if lemma.ok else "lemma_failure",
        "genus": args.genus,
        "depth": args.depth,
        "separating_checked": lemma.n_separating,
        "nonseparating_checked": lemma.n_nonseparating,
        "lifts_per_class": lemma.lifts_per_class,
        "failures": lemma.failures,
    }
    if args.format == "json":
        _write(_json_lines([summary]), args.out)
    else:
        _write(
            [
                "separating classes checked: %d (%d lifts each)"
                % (lemma.n_separating, lemma.lifts_per_class),
                "nonseparating classes checked: %d" % lemma.n_nonseparating,
                "result: %s" % ("pass" if lemma.ok else "FAIL"),
            ],
            args.out,
        )
    return 0 if lemma.ok else 1


def cmd_torus_demo(args):
    scan = torus_kernel_scan(100)
    reports = [
        torus_inclusion_sidedness(),
        main_construction_sidedness(max(args.genus, 2)),
        free_factor_sidedness(),
    ]
    extensions = [extend_to_dimension(n, bound=100) for n in (4, 5)]
    expected = [False, True, True]
    ok = scan["non_geometric"] and [r["two_sided"] for r in reports] == expected
    if args.format == "json":
        records = [
            {
                "schema": SCHEMA,
                "kind": "summary",
                "status": "ok" if ok else "demo_failure",
                "non_geometric_kernel": scan["non_geometric"],
                "scan_bound": scan["bound"],
                "kernel_class_count": len(scan["kernel_classes"]),
            }
        ]
        for rep in reports:
            records.append(
                {
                    "schema": SCHEMA,
                    "kind": "sidedness",
                    "name": rep["name"],
                    "two_sided": rep["two_sided"],
                    "notes": rep["notes"],
                }
            )
        for ext in extensions:
            records.append(
                {
                    "schema": SCHEMA,
                    "kind": "extension",
                    "dimension": ext["dimension"],
                    "pi1_unchanged": ext["pi1_unchanged"],
                    "non_geometric_kernel": ext["scan"]["non_geometric"],
                    "warning": ext.get("warning"),
                }
            )
        _write(_json_lines(records), args.out)
    else:
        lines = [
            "non-geometric kernel: %s" % str(scan["non_geometric"]).lower(),
            "kernel classes up to bound %d: %d"
            % (scan["bound"], len(scan["kernel_classes"])),
        ]
        for rep in reports:
            lines.append(
                "%s: %s"
                % (rep["name"], "2-sided" if rep["two_sided"] else "1-sided")
            )
        for ext in extensions:
            note = " (%s)" % ext["warning"] if "warning" in ext else ""
            lines.append(
                "dimension %d: non-geometric kernel %s%s"
                % (
                    ext["dimension"],
                    str(ext["scan"]["non_geometric"]).lower(),
                    note,
                )
            )
        _write(lines, args.out)
    return 0 if ok else 1


def cmd_realize(args):
    if args.presentation:
        with open(args.presentation) as handle:
            pres = parse_presentation(handle.read())
        recipe = realize(pres, args.dimension)
        record = {
            "schema": SCHEMA,
            "kind": "recipe",
            "dimension": recipe.dimension,
            "base": recipe.base,
            "steps": list(recipe.steps),
            "generators": list(recipe.resulting_group.generators),
            "relators": [
                recipe.resulting_group.word_str(r)
                for r in recipe.resulting_group.relators
            ],
            "notes": list(recipe.notes),
        }
        text_lines = [
            "base: %s" % " # ".join(recipe.base["summands"]),
            "surgery steps: %d" % len(recipe.steps),
        ] + [
            "  step %d: surgery along %r" % (s["surgery"], s["relator"])
            for s in recipe.steps
        ]
    else:
        record = dict(recipe_for_G(args.genus, args.dimension))
        record["schema"] = SCHEMA
        record["kind"] = "recipe_template"
        text_lines = [
            "group order: 2^%d" % record["group_order_log2"],
            "dimension: %d" % record["dimension"],
            record["template"],
            record["two_sidedness_note"],
        ]
    if args.format == "json":
        _write(_json_lines([record]), args.out)
    else:
        _write(text_lines, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simpleloop",
        description=(
            "build the mod-2 homology cover of a surface, verify that the "
            "associated finite quotient has a kernel containing no certified "
            "simple closed curve, and emit construction recipes"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_sweep=False):
        p.add_argument("--genus", type=int, default=2, help="surface genus (2..4)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None, help="write report to this path")
        if with_sweep:
            p.add_argument("--depth", type=int, default=6, help="twist depth")
            p.add_argument("--max-len", type=int, default=64, dest="max_len")
            p.add_argument(
                "--kernel-len", type=int, default=8, dest="kernel_len"
            )
            p.add_argument("--workers", type=int, default=1)
            p.add_argument("--seed", type=int, default=0)

    p_info = sub.add_parser("info", help="cover statistics")
    add_common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_verify = sub.add_parser("verify", help="full verification sweep")
    add_common(p_verify, with_sweep=True)
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search-kernel", help="kernel witness search")
    add_common(p_search)
    p_search.add_argument("--kernel-len", type=int, default=8, dest="kernel_len")
    p_search.set_defaults(func=cmd_search_kernel)

    p_lemma = sub.add_parser("lemma-check", help="lift checks on generated classes")
    add_common(p_lemma)
    p_lemma.add_argument("--depth", type=int, default=6)
    p_lemma.add_argument("--max-len", type=int, default=64, dest="max_len")
    p_lemma.set_defaults(func=cmd_lemma_check)

    p_torus = sub.add_parser("torus-demo", help="torus kernel scan and sidedness")
    add_common(p_torus)
    p_torus.set_defaults(func=cmd_torus_demo)

    p_realize = sub.add_parser("realize", help="manifold recipe from a presentation")
    add_common(p_realize)
    p_realize.add_argument(
        "presentation",
        nargs="?",
        default=None,
        help="presentation file; omitted: template recipe for the quotient group",
    )
    p_realize.add_argument("--dimension", type=int, default=4)
    p_realize.set_defaults(func=cmd_realize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.exit(2, "worker count must be at least 1\n")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        sys.stderr.write("resource bound: %s\n" % exc)
        return 3
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except OSError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
