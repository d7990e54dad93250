"""Command-line entry point.

Exit codes: 0 success, 1 domain failure (build failure, invalid oracle
verdict, coverage failure), 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import annotations as annotations_mod
from . import report as report_mod
from .campaign import Campaign
from .errors import OptPruneError
from .manifest import load_manifest
from .model import enumerate_scenarios

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optprune",
        description="Specialize a program's run-time configuration space at "
        "compile time: plan removals, build variants, validate them, and "
        "measure size, gadget, and performance effects.",
    )
    parser.add_argument(
        "--manifest", required=True, type=Path, help="target manifest (TOML)"
    )
    parser.add_argument(
        "--out", type=Path, default=Path("out"),
        help="output directory (default: ./out)",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check", help="statically verify the guard annotations")
    sub.add_parser("plan", help="enumerate and print all specialization plans")
    sub.add_parser("build", help="build every plan's binary")
    sub.add_parser("validate", help="run the behavioral oracle on every plan")

    measure = sub.add_parser("measure", help="measure built binaries")
    measure.add_argument("what", choices=["size", "gadgets", "bench"])
    measure.add_argument(
        "--strip", action="store_true", help="measure stripped copies (size)"
    )
    measure.add_argument(
        "--tool-cmd", default=None,
        help="external gadget tool template with {BIN} (gadgets)",
    )

    sub.add_parser("analyze", help="run hypothesis tests on the measurements")
    report = sub.add_parser("report", help="render report tables")
    report.add_argument(
        "--metric", default=None, help="print one metric table to stdout"
    )
    sub.add_parser("run", help="full pipeline: build through report")
    return parser


def cmd_check(manifest) -> int:
    catalog = manifest.catalog
    target = manifest.target
    defects = annotations_mod.verify_header(target.guard_header, catalog)
    usage = annotations_mod.scan_guards(target.source_root, catalog)
    verdict = annotations_mod.verify_coverage(usage, catalog)

    for defect in defects:
        print(defect.render())
    for defect in usage.unsupported:
        print(defect.render())
    for path, line in usage.unbalanced:
        print(f"error\t{path}\t{line}\tunbalanced conditional")

    regions = len(usage.regions)
    print(
        f"check: {regions} guard regions, "
        f"{len(usage.per_guard_counts)}/{len(catalog.guard_macros())} guards used, "
        f"header defects: {len(defects)}, coverage: {verdict}"
    )
    failed = defects or usage.unsupported or usage.unbalanced or not verdict.passed
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_plan(manifest) -> int:
    for plan in enumerate_scenarios(manifest.catalog):
        removed = ", ".join(sorted(plan.removed)) if plan.removed else "(none)"
        label = plan.scenario.value
        if plan.preset_name:
            label += f":{plan.preset_name}"
        print(f"{plan.id}\t{label}\tremoved({len(plan.removed)}): {removed}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        manifest = load_manifest(args.manifest)
        if args.command == "plan":
            return cmd_plan(manifest)
        if args.command == "check":
            return cmd_check(manifest)

        campaign = Campaign(manifest, args.out)
        if args.command == "build":
            ok = campaign.build()
            for record in campaign.result.plans:
                status = "ok" if record.build_ok else "FAILED"
                print(f"{record.plan_id}\t{status}")
            return EXIT_OK if ok else EXIT_DOMAIN
        if args.command == "validate":
            ok = campaign.validate()
            for record in campaign.result.plans:
                verdict = record.oracle_verdict or "-"
                reason = f" ({record.oracle_reason})" if record.oracle_reason else ""
                print(f"{record.plan_id}\t{verdict}{reason}")
            return EXIT_OK if ok else EXIT_DOMAIN
        if args.command == "measure":
            if args.what == "size":
                campaign.measure_sizes(strip=args.strip)
                for record in campaign.result.plans:
                    print(f"{record.plan_id}\t{record.size}")
            elif args.what == "gadgets":
                campaign.measure_gadgets(tool_cmd=args.tool_cmd)
                for record in campaign.result.plans:
                    print(f"{record.plan_id}\t{record.gadgets}")
            else:
                campaign.measure_bench()
                print(f"measurements written to {campaign.out_root / 'measurements.tsv'}")
            return EXIT_OK
        if args.command == "analyze":
            campaign.analyze()
            campaign.write_reports()
            print(report_mod.emit_hypotheses_table(campaign.result, fmt="text"))
            return EXIT_OK
        if args.command == "report":
            campaign.write_reports()
            if args.metric:
                print(report_mod.emit_results_table(campaign.result, args.metric))
            else:
                print(f"report written to {campaign.out_root / 'report.md'}")
            return EXIT_OK
        if args.command == "run":
            ok = campaign.run_all()
            print(f"campaign artifacts under {campaign.out_root}/")
            for record in campaign.result.plans:
                print(
                    f"{record.plan_id}\tbuild={'ok' if record.build_ok else 'FAILED'}"
                    f"\toracle={record.oracle_verdict}\tsize={record.size}"
                    f"\tgadgets={record.gadgets}"
                )
            return EXIT_OK if ok else EXIT_DOMAIN
    except OptPruneError as exc:
        print(f"optprune: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"optprune: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
