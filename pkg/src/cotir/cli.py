"""Command-line interface.

Subcommands: analyze, evaluate, table2, kb, serve. Configuration comes
from (lowest to highest precedence) built-in defaults, the flat
key=value file named by --config or the COTIR_CONFIG environment
variable, and command-line flags. Exit codes: 0 success, 1 validation
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field, replace

from . import defaults, evaluation, knowledge, report, review
from .corpus import load_requirements_file
from .detector import AnalyzeConfig, analyze
from .errors import CotirError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

CONFIG_ENV_VAR = "COTIR_CONFIG"


@dataclass
class RunConfig:
    ontology: str | None = None      # None = bundled default
    cskb: str | None = None
    lexicons: str | None = None      # directory of lexicon files
    threshold: int = 1
    max_recommendations: int = 3
    format: str = "json"             # json | text | html
    rubric: dict[str, int] = field(default_factory=dict)

    def validate(self) -> None:
        for label, path in (("ontology", self.ontology), ("cskb", self.cskb),
                            ("lexicons", self.lexicons)):
            if path is not None and not os.path.exists(path):
                raise CotirError(f"{label} path does not exist: {path}")
        if not 1 <= self.threshold <= 5:
            raise CotirError(f"threshold {self.threshold} outside 1..5")
        if self.format not in ("json", "text", "html"):
            raise CotirError(f"unknown output format {self.format!r}")


def load_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise CotirError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def build_run_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if path:
        if not os.path.exists(path):
            raise CotirError(f"config file does not exist: {path}")
        for key, value in load_config_file(path).items():
            if key in ("ontology", "cskb", "lexicons", "format"):
                setattr(config, key, value)
            elif key == "threshold":
                config.threshold = int(value)
            elif key == "max_recommendations":
                config.max_recommendations = int(value)
            elif key.startswith("rubric."):
                config.rubric[key[len("rubric."):]] = int(value)
            else:
                raise CotirError(f"{path}: unknown config key {key!r}")
    for key in ("ontology", "cskb", "lexicons", "format"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, value)
    if getattr(args, "threshold", None) is not None:
        config.threshold = args.threshold
    if getattr(args, "max_recommendations", None) is not None:
        config.max_recommendations = args.max_recommendations
    config.validate()
    return config


def _load_knowledge(config: RunConfig):
    if config.ontology is not None:
        with open(config.ontology, encoding="utf-8") as fh:
            ontology = knowledge.load_ontology(fh.read())
    else:
        ontology = defaults.default_ontology()
    if config.cskb is not None:
        with open(config.cskb, encoding="utf-8") as fh:
            cskb = knowledge.load_cskb(fh.read())
    else:
        cskb = defaults.default_cskb()
    if config.lexicons is not None:
        lexicons = defaults.lexicons_from_dir(config.lexicons)
    else:
        lexicons = defaults.default_lexicons()
    return ontology, cskb, lexicons


def _write(path: str | None, content: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    ontology, cskb, lexicons = _load_knowledge(config)
    doc = load_requirements_file(args.document, format=args.doc_format)
    analyze_config = AnalyzeConfig(
        rubric_overrides=dict(config.rubric),
        max_recommendations=config.max_recommendations,
    )
    result = analyze(doc, ontology, cskb, lexicons, analyze_config)
    payload = report.build_payload(doc, result, ontology, cskb, lexicons, analyze_config)
    if config.format == "json":
        _write(args.out, report.dump_json(payload))
    elif config.format == "text":
        _write(args.out, report.render_text(payload))
    else:
        _write(args.out, report.render_html(payload))
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    doc = load_requirements_file(args.document, format=args.doc_format)
    with open(args.report, encoding="utf-8") as fh:
        payload = report.load_payload(fh.read())
    result = _report_from_payload(payload)
    cells: dict[str, dict[str, evaluation.MetricsCell]] = {}
    for path in args.annotations:
        with open(path, encoding="utf-8") as fh:
            sets = evaluation.load_annotation_sets(fh.read(), doc)
        for annotation_set in sets:
            counts = evaluation.confusion(result, annotation_set, doc, config.threshold)
            cells.setdefault(doc.doc_id, {})[annotation_set.expert_id] = evaluation.metrics(counts)
    table = evaluation.aggregate(cells)
    csv_text = evaluation.table_to_csv(table)
    json_text = report.dump_json(evaluation.table_to_dict(table))
    if args.out:
        _write(args.out + ".csv", csv_text)
        _write(args.out + ".json", json_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _report_from_payload(payload: dict):
    from .detector import AnalysisReport, Finding

    findings = tuple(
        Finding(
            requirement_id=f["requirement_id"],
            category=f["category"],
            subtype=f["subtype"],
            start=f["span"]["start"],
            end=f["span"]["end"],
            trigger=f["trigger"],
            criticality=f["criticality"],
            rationale=f["rationale"],
        )
        for f in payload["findings"]
    )
    return AnalysisReport(
        doc_id=payload["doc_id"],
        findings=findings,
        config_digest=payload["config_digest"],
    )


def cmd_table2(args: argparse.Namespace) -> int:
    cells_text = (
        open(args.data, encoding="utf-8").read()
        if args.data
        else defaults.data_path("table2_cells.csv").read_text(encoding="utf-8")
    )
    expected_text = (
        open(args.expected, encoding="utf-8").read()
        if args.expected
        else defaults.data_path("table2_expected.csv").read_text(encoding="utf-8")
    )
    cells = evaluation.load_pr_cells(cells_text)
    checks = evaluation.verify_benchmark(cells, expected_text)
    failed = 0
    for check in checks:
        mark = "PASS" if check.passed else "FAIL"
        computed = "undefined" if check.computed is None else f"{check.computed:.4f}"
        print(f"{mark}  {check.name}: computed {computed}, expected "
              f"{check.expected} (tolerance {check.tolerance})")
        failed += 0 if check.passed else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VALIDATION


def cmd_kb(args: argparse.Namespace) -> int:
    path = args.path
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    is_ontology = path.endswith((".onto", ".ont")) or "concept " in text
    if args.action == "validate":
        try:
            if is_ontology:
                knowledge.load_ontology(text)
            else:
                knowledge.load_cskb(text)
        except CotirError as exc:
            print(f"INVALID: {exc}")
            return EXIT_VALIDATION
        print("OK")
        return EXIT_OK
    # stats
    if is_ontology:
        onto = knowledge.load_ontology(text)
        concepts, relations, axioms = onto.counts()
        print(f"concepts: {concepts}")
        print(f"relations: {relations}")
        print(f"axioms: {axioms}")
    else:
        kb = knowledge.load_cskb(text)
        print(f"triples: {len(kb)}")
        print(f"subjects: {kb.subject_count}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    review.serve(
        report_path=args.report,
        log_path=args.log,
        host=args.host,
        port=args.port,
        static_dir=args.static,
    )
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cotir",
        description="Detect implicit requirements in natural-language SRS documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help=f"config file (default: ${CONFIG_ENV_VAR})")
        p.add_argument("--ontology", help="ontology file (default: bundled)")
        p.add_argument("--cskb", help="knowledge-base TSV (default: bundled)")
        p.add_argument("--lexicons", help="directory of lexicon files (default: bundled)")
        p.add_argument("--threshold", type=int, help="criticality threshold 1..5")
        p.add_argument("--max-recommendations", type=int, dest="max_recommendations")

    p = sub.add_parser("analyze", help="analyze a requirements document")
    common(p)
    p.add_argument("document", help="requirements text file")
    p.add_argument("--doc-format", choices=("lines", "numbered"), default="numbered")
    p.add_argument("--format", choices=("json", "text", "html"))
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("evaluate", help="score a report against expert annotations")
    common(p)
    p.add_argument("--report", required=True, help="analysis report JSON")
    p.add_argument("--document", required=True, help="requirements text file")
    p.add_argument("--doc-format", choices=("lines", "numbered"), default="numbered")
    p.add_argument("--annotations", nargs="+", required=True, help="annotation CSV files")
    p.add_argument("--out", help="output prefix for .csv/.json artifacts")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("table2", help="verify the published metrics matrix arithmetic")
    p.add_argument("--data", help="precision/recall cells CSV (default: bundled)")
    p.add_argument("--expected", help="expected values CSV (default: bundled)")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("kb", help="validate or describe a knowledge file")
    p.add_argument("action", choices=("validate", "stats"))
    p.add_argument("path", help="ontology (.onto) or knowledge-base TSV")
    p.set_defaults(func=cmd_kb)

    p = sub.add_parser("serve", help="run the expert-review HTTP service")
    p.add_argument("--report", required=True, help="analysis report JSON")
    p.add_argument("--log", required=True, help="append-only adjudication log path")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of browser-client assets to serve at /ui")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except CotirError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
