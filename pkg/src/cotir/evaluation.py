"""Detection-quality evaluation against expert annotations.

A requirement is tool-implicit when it carries at least one finding at
or above the criticality threshold, and expert-implicit when the expert
marked at least one implicitness category for it. The four agreement
counts split the document's requirements into TP/TN/FP/FN, from which
precision, recall and F are computed as percentages. A zero denominator
makes a metric undefined (``None``), which is distinct from 0 and is
excluded from averages.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping, Optional

from .corpus import RequirementDoc
from .detector import AnalysisReport
from .errors import EvalError

CATEGORIES = ("A", "IK", "V", "O")
METRICS = ("precision", "recall", "f")


@dataclass(frozen=True)
class AnnotationSet:
    expert_id: str
    doc_id: str
    # requirement_id -> (categories, {category: criticality})
    marks: dict[str, tuple[frozenset[str], dict[str, int]]]

    def is_implicit(self, requirement_id: str) -> bool:
        mark = self.marks.get(requirement_id)
        return bool(mark and mark[0])


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


@dataclass(frozen=True)
class MetricsCell:
    precision: Optional[float]
    recall: Optional[float]
    f: Optional[float]


@dataclass(frozen=True)
class MetricsTable:
    # doc_id -> expert_id -> cell
    rows: dict[str, dict[str, MetricsCell]]
    # (metric, doc_id) -> average over defined cells
    row_averages: dict[tuple[str, str], Optional[float]]
    # metric -> average of defined row averages
    grand_averages: dict[str, Optional[float]]


def _parse_categories(raw: str, row: int) -> frozenset[str]:
    cats = set()
    for part in raw.split(";"):
        part = part.strip()
        if not part:
            continue
        if part not in CATEGORIES:
            raise EvalError(f"row {row}: unknown implicitness category {part!r}")
        cats.add(part)
    return frozenset(cats)


def _parse_criticalities(raw: str, row: int) -> dict[str, int]:
    crits: dict[str, int] = {}
    for part in raw.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise EvalError(f"row {row}: criticality entry {part!r} is not cat=value")
        cat, _, val = part.partition("=")
        cat = cat.strip()
        if cat not in CATEGORIES:
            raise EvalError(f"row {row}: unknown implicitness category {cat!r}")
        try:
            value = int(val)
        except ValueError:
            raise EvalError(f"row {row}: criticality {val!r} is not an integer") from None
        if not 1 <= value <= 5:
            raise EvalError(f"row {row}: criticality {value} outside 1..5")
        crits[cat] = value
    return crits


def load_annotation_sets(source: str | IO, doc: RequirementDoc | None = None) -> list[AnnotationSet]:
    """Load expert marks from CSV, one AnnotationSet per expert found."""
    text = source if isinstance(source, str) else source.read()
    reader = csv.DictReader(io.StringIO(text))
    required = {"expert_id", "doc_id", "requirement_id", "categories", "criticalities"}
    if reader.fieldnames is None or not required <= set(reader.fieldnames):
        raise EvalError(f"annotation CSV must have columns {sorted(required)}")
    collected: dict[tuple[str, str], dict[str, tuple[frozenset[str], dict[str, int]]]] = {}
    for row_no, row in enumerate(reader, start=2):  # header is row 1
        expert = row["expert_id"].strip()
        doc_id = row["doc_id"].strip()
        rid = row["requirement_id"].strip()
        if not expert or not doc_id or not rid:
            raise EvalError(f"row {row_no}: empty expert_id, doc_id or requirement_id")
        if doc is not None:
            if doc_id != doc.doc_id:
                raise EvalError(
                    f"row {row_no}: doc_id {doc_id!r} does not match document {doc.doc_id!r}"
                )
            if doc.get(rid) is None:
                raise EvalError(f"row {row_no}: unknown requirement id {rid!r}")
        categories = _parse_categories(row["categories"], row_no)
        criticalities = _parse_criticalities(row["criticalities"], row_no)
        if not set(criticalities) <= categories:
            raise EvalError(f"row {row_no}: criticality for unmarked category")
        marks = collected.setdefault((expert, doc_id), {})
        if rid in marks:
            raise EvalError(f"row {row_no}: duplicate row for requirement {rid!r}")
        marks[rid] = (categories, criticalities)
    return [
        AnnotationSet(expert_id=expert, doc_id=doc_id, marks=marks)
        for (expert, doc_id), marks in sorted(collected.items())
    ]


def load_annotations(source: str | IO, doc: RequirementDoc | None = None) -> AnnotationSet:
    """Load a single expert's annotations; empty input marks nothing."""
    sets = load_annotation_sets(source, doc)
    if not sets:
        return AnnotationSet(expert_id="", doc_id=doc.doc_id if doc else "", marks={})
    if len(sets) > 1:
        experts = sorted({s.expert_id for s in sets})
        raise EvalError(f"annotation file mixes experts {experts}; load_annotation_sets handles that")
    return sets[0]


def confusion(
    tool_report: AnalysisReport,
    annotations: AnnotationSet,
    doc: RequirementDoc,
    threshold: int = 1,
) -> ConfusionCounts:
    """Per-requirement agreement counts between tool and expert."""
    if tool_report.doc_id != doc.doc_id:
        raise EvalError(
            f"report is for {tool_report.doc_id!r} but document is {doc.doc_id!r}"
        )
    if annotations.doc_id and annotations.doc_id != doc.doc_id:
        raise EvalError(
            f"annotations are for {annotations.doc_id!r} but document is {doc.doc_id!r}"
        )
    tool_implicit = {
        f.requirement_id for f in tool_report.findings if f.criticality >= threshold
    }
    tp = tn = fp = fn = 0
    for req in doc.requirements:
        by_tool = req.id in tool_implicit
        by_expert = annotations.is_implicit(req.id)
        if by_tool and by_expert:
            tp += 1
        elif by_tool:
            fp += 1
        elif by_expert:
            fn += 1
        else:
            tn += 1
    return ConfusionCounts(tp=tp, tn=tn, fp=fp, fn=fn)


def metrics(counts: ConfusionCounts) -> MetricsCell:
    """Precision/recall/F as percentages; zero denominators stay undefined."""
    precision = 100.0 * counts.tp / (counts.tp + counts.fp) if counts.tp + counts.fp else None
    recall = 100.0 * counts.tp / (counts.tp + counts.fn) if counts.tp + counts.fn else None
    f = f_measure(precision, recall)
    return MetricsCell(precision=precision, recall=recall, f=f)


def f_measure(precision: Optional[float], recall: Optional[float]) -> Optional[float]:
    """Harmonic mean of precision and recall (undefined when either is)."""
    if precision is None or recall is None or precision + recall == 0:
        return None
    return 2.0 * precision * recall / (precision + recall)


def _mean(values: Iterable[Optional[float]]) -> Optional[float]:
    defined = [v for v in values if v is not None]
    if not defined:
        return None
    return sum(defined) / len(defined)


def aggregate(rows: Mapping[str, Mapping[str, MetricsCell]]) -> MetricsTable:
    """Row averages per (metric, doc) and grand averages per metric."""
    rows = {doc: dict(cells) for doc, cells in rows.items()}
    row_averages: dict[tuple[str, str], Optional[float]] = {}
    for doc_id, cells in rows.items():
        for metric in METRICS:
            row_averages[(metric, doc_id)] = _mean(
                getattr(cell, metric) for cell in cells.values()
            )
    grand_averages = {
        metric: _mean(
            row_averages[(metric, doc_id)] for doc_id in rows
        )
        for metric in METRICS
    }
    return MetricsTable(rows=rows, row_averages=row_averages, grand_averages=grand_averages)


# ---------------------------------------------------------------------------
# rendering

def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.2f}"


def table_to_csv(table: MetricsTable) -> str:
    """Metric blocks x documents x experts, with Average rows."""
    docs = sorted(table.rows)
    experts = sorted({e for cells in table.rows.values() for e in cells})
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["metric", "doc"] + experts + ["average"])
    for metric in METRICS:
        for doc_id in docs:
            cells = table.rows[doc_id]
            row = [metric, doc_id]
            for expert in experts:
                cell = cells.get(expert)
                row.append(_fmt(getattr(cell, metric)) if cell else "")
            row.append(_fmt(table.row_averages[(metric, doc_id)]))
            writer.writerow(row)
        writer.writerow([metric, "average"] + [""] * len(experts) + [_fmt(table.grand_averages[metric])])
    return out.getvalue()


# ---------------------------------------------------------------------------
# benchmark matrix verification (the `table2` command)

@dataclass(frozen=True)
class BenchmarkCheck:
    name: str
    computed: Optional[float]
    expected: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.computed is not None and abs(self.computed - self.expected) <= self.tolerance


def load_pr_cells(source: str | IO) -> dict[str, dict[str, MetricsCell]]:
    """Load a published precision/recall matrix (CSV: metric,doc,expert,value)."""
    text = source if isinstance(source, str) else source.read()
    reader = csv.DictReader(io.StringIO(text))
    values: dict[tuple[str, str], dict[str, float]] = {}
    for row_no, row in enumerate(reader, start=2):
        metric = row["metric"].strip()
        if metric not in ("precision", "recall"):
            raise EvalError(f"row {row_no}: metric must be precision or recall")
        key = (row["doc"].strip(), row["expert"].strip())
        try:
            values.setdefault(key, {})[metric] = float(row["value"])
        except ValueError:
            raise EvalError(f"row {row_no}: bad value {row['value']!r}") from None
    rows: dict[str, dict[str, MetricsCell]] = {}
    for (doc_id, expert), pair in sorted(values.items()):
        if set(pair) != {"precision", "recall"}:
            raise EvalError(f"cell ({doc_id}, {expert}) is missing precision or recall")
        rows.setdefault(doc_id, {})[expert] = MetricsCell(
            precision=pair["precision"],
            recall=pair["recall"],
            f=f_measure(pair["precision"], pair["recall"]),
        )
    return rows


def verify_benchmark(
    cells: Mapping[str, Mapping[str, MetricsCell]], expected_csv: str | IO
) -> list[BenchmarkCheck]:
    """Recompute F cells and averages, compare against the expected file."""
    table = aggregate(cells)
    text = expected_csv if isinstance(expected_csv, str) else expected_csv.read()
    checks: list[BenchmarkCheck] = []
    for row_no, row in enumerate(csv.DictReader(io.StringIO(text)), start=2):
        kind = row["kind"].strip()
        metric = row["metric"].strip()
        expected = float(row["value"])
        tolerance = float(row["tolerance"])
        if kind == "cell":
            doc_id, expert = row["doc"].strip(), row["expert"].strip()
            cell = table.rows.get(doc_id, {}).get(expert)
            computed = getattr(cell, metric) if cell else None
            name = f"{metric} {doc_id}/{expert}"
        elif kind == "row_avg":
            doc_id = row["doc"].strip()
            computed = table.row_averages.get((metric, doc_id))
            name = f"{metric} average {doc_id}"
        elif kind == "grand_avg":
            computed = table.grand_averages.get(metric)
            name = f"{metric} grand average"
        else:
            raise EvalError(f"row {row_no}: unknown check kind {kind!r}")
        checks.append(BenchmarkCheck(name, computed, expected, tolerance))
    return checks


def table_to_dict(table: MetricsTable) -> dict:
    docs = sorted(table.rows)
    return {
        "schema": "cotir-metrics/1",
        "metrics": {
            metric: {
                "rows": {
                    doc_id: {
                        expert: getattr(cell, metric)
                        for expert, cell in sorted(table.rows[doc_id].items())
                    }
                    for doc_id in docs
                },
                "row_averages": {
                    doc_id: table.row_averages[(metric, doc_id)] for doc_id in docs
                },
                "grand_average": table.grand_averages[metric],
            }
            for metric in METRICS
        },
    }
