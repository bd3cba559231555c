"""Analysis-report artifact: JSON payload plus text and HTML renderings.

The JSON artifact is self-contained (it embeds the requirement texts) so
the review service and the browser client can render trigger spans
without re-reading the source document. Serialization is fully
deterministic: two runs over identical inputs produce identical bytes.
"""

from __future__ import annotations

import html
import io
import json
from typing import Iterable

from .corpus import RequirementDoc
from .defaults import Lexicons
from .detector import AnalysisReport, AnalyzeConfig, Finding, annotate_requirement
from .errors import ReviewError
from .knowledge import Cskb, CskTriple, Ontology
from .recommend import Recommendation, recommend

SCHEMA = "cotir-report/1"

CATEGORY_NAMES = {
    "A": "ambiguity",
    "V": "vagueness",
    "IK": "incomplete knowledge",
    "O": "other",
}


def build_payload(
    doc: RequirementDoc,
    report: AnalysisReport,
    ontology: Ontology,
    cskb: Cskb,
    lexicons: Lexicons,
    config: AnalyzeConfig | None = None,
) -> dict:
    """Assemble the full report artifact with embedded recommendations."""
    config = config or AnalyzeConfig()
    annotations = {
        req.id: annotate_requirement(req, lexicons) for req in doc.requirements
    }
    findings = []
    for n, finding in enumerate(report.findings, start=1):
        fid = f"f{n:04d}"
        req = doc.get(finding.requirement_id)
        recs = recommend(
            finding,
            req,
            cskb,
            ontology,
            config,
            annotation=annotations[finding.requirement_id],
            lexicons=lexicons,
        )
        findings.append(_finding_dict(fid, finding, recs))
    return {
        "schema": SCHEMA,
        "doc_id": report.doc_id,
        "config_digest": report.config_digest,
        "requirements": [
            {"id": r.id, "text": r.text, "ordinal": r.ordinal} for r in doc.requirements
        ],
        "findings": findings,
    }


def _finding_dict(fid: str, finding: Finding, recs: Iterable[Recommendation]) -> dict:
    return {
        "id": fid,
        "requirement_id": finding.requirement_id,
        "category": finding.category,
        "subtype": finding.subtype,
        "span": {"start": finding.start, "end": finding.end},
        "trigger": finding.trigger,
        "criticality": finding.criticality,
        "rationale": finding.rationale,
        "recommendations": [
            {
                "id": f"{fid}.{rec.id}",
                "finding_ref": {
                    "requirement_id": rec.finding_ref[0],
                    "span": {"start": rec.finding_ref[1][0], "end": rec.finding_ref[1][1]},
                },
                "candidate_text": rec.candidate_text,
                "evidence": [
                    {
                        "subject": t.subject,
                        "relation": t.relation,
                        "object": t.object,
                        "confidence": t.confidence,
                    }
                    for t in rec.evidence
                ],
                "status": rec.status,
                "decided_by": rec.decided_by,
                "decided_at": rec.decided_at,
            }
            for rec in recs
        ],
    }


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _merged_spans(findings: list[dict]) -> list[tuple[int, int]]:
    spans = sorted((f["span"]["start"], f["span"]["end"]) for f in findings)
    merged: list[tuple[int, int]] = []
    for start, end in spans:
        if merged and start <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], end))
        else:
            merged.append((start, end))
    return merged


def render_text(payload: dict) -> str:
    """Plain-text findings report with *emphasized* trigger spans."""
    out = io.StringIO()
    out.write(f"Findings report: {payload['doc_id']}\n")
    out.write(f"config: {payload['config_digest']}\n")
    out.write("=" * 60 + "\n")
    by_req: dict[str, list[dict]] = {}
    for f in payload["findings"]:
        by_req.setdefault(f["requirement_id"], []).append(f)
    for req in payload["requirements"]:
        findings = by_req.get(req["id"], [])
        out.write(f"\n{req['id']}: {_emphasize(req['text'], _merged_spans(findings))}\n")
        for f in findings:
            out.write(
                f"  - [{f['category']}/{f['subtype']}] crit {f['criticality']}: "
                f"'{f['trigger']}' ({f['rationale']})\n"
            )
    total = len(payload["findings"])
    out.write(f"\n{total} finding{'s' if total != 1 else ''}\n")
    return out.getvalue()


def _emphasize(text: str, spans: list[tuple[int, int]], marker: str = "*") -> str:
    parts = []
    at = 0
    for start, end in spans:
        parts.append(text[at:start])
        parts.append(f"{marker}{text[start:end]}{marker}")
        at = end
    parts.append(text[at:])
    return "".join(parts)


_HTML_STYLE = """
body { font-family: sans-serif; margin: 2em; max-width: 60em; }
p.req { line-height: 1.7; }
mark { padding: 0 2px; border-radius: 3px; }
mark.cat-A { background: #ffd9a8; }
mark.cat-V { background: #c9e4ff; }
mark.cat-IK { background: #ffc9c9; }
mark.cat-O { background: #d8f0c9; }
.legend span { margin-right: 1.2em; }
"""


def render_html(payload: dict) -> str:
    """Self-contained HTML report; triggers carry tooltips with the rationale."""
    out = io.StringIO()
    out.write("<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n")
    out.write(f"<title>Findings report: {html.escape(payload['doc_id'])}</title>\n")
    out.write(f"<style>{_HTML_STYLE}</style>\n</head>\n<body>\n")
    out.write(f"<h1>Findings report: {html.escape(payload['doc_id'])}</h1>\n")
    out.write('<p class="legend">')
    for cat, name in CATEGORY_NAMES.items():
        out.write(f'<span><mark class="cat-{cat}">{cat}</mark> {name}</span>')
    out.write("</p>\n")
    by_req: dict[str, list[dict]] = {}
    for f in payload["findings"]:
        by_req.setdefault(f["requirement_id"], []).append(f)
    for req in payload["requirements"]:
        findings = sorted(
            by_req.get(req["id"], []), key=lambda f: (f["span"]["start"], f["span"]["end"])
        )
        out.write(f'<p class="req"><b>{html.escape(req["id"])}</b>: ')
        out.write(_html_requirement(req["text"], findings))
        out.write("</p>\n")
    out.write(f"<p>{len(payload['findings'])} findings, ")
    out.write(f"config {html.escape(payload['config_digest'])}</p>\n")
    out.write("</body>\n</html>\n")
    return out.getvalue()


def _html_requirement(text: str, findings: list[dict]) -> str:
    # group overlapping findings so each emphasized region is marked once
    regions: list[tuple[int, int, list[dict]]] = []
    for f in findings:
        start, end = f["span"]["start"], f["span"]["end"]
        if regions and start <= regions[-1][1]:
            old_start, old_end, members = regions[-1]
            regions[-1] = (old_start, max(old_end, end), members + [f])
        else:
            regions.append((start, end, [f]))
    parts = []
    at = 0
    for start, end, members in regions:
        parts.append(html.escape(text[at:start]))
        category = members[0]["category"]
        tooltip = "; ".join(
            f"{m['subtype']} (crit {m['criticality']}): {m['rationale']}" for m in members
        )
        parts.append(
            f'<mark class="cat-{category}" title="{html.escape(tooltip, quote=True)}">'
            f"{html.escape(text[start:end])}</mark>"
        )
        at = end
    parts.append(html.escape(text[at:]))
    return "".join(parts)


def load_payload(text: str) -> dict:
    """Parse and structurally check a report artifact."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReviewError(f"report artifact is not valid JSON: {exc}") from None
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA:
        raise ReviewError(f"report artifact must declare schema {SCHEMA!r}")
    for key in ("doc_id", "config_digest", "requirements", "findings"):
        if key not in payload:
            raise ReviewError(f"report artifact is missing {key!r}")
    return payload
