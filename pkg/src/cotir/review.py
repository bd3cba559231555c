"""Expert-adjudication HTTP service.

Serves the findings and recommendations of one analysis report, accepts
approve/reject decisions, and persists them to an append-only JSONL log.
Replaying the log reconstructs the exact same statuses, so killing and
restarting the service loses nothing. A decision is acknowledged only
after its log record has been flushed and fsynced.

Aggregate status across experts: APPROVED when at least one expert's
latest decision is APPROVE and no expert's latest decision is REJECT;
REJECTED when any expert's latest decision is REJECT; PROPOSED otherwise.
"""

# no `from __future__ import annotations` here: FastAPI must evaluate the
# request-model annotations of the locally defined endpoint functions

import json
import os
import threading
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import ReviewError
from . import nlp
from .report import load_payload

LEXICON_DRIVEN_SUBTYPES = {
    "LEXICAL_AMBIGUITY", "VAGUE_PHRASE", "VAGUE_VERB", "WEAK_PHRASE",
}


@dataclass(frozen=True)
class Adjudication:
    recommendation_id: str
    expert_id: str
    decision: str                 # APPROVE | REJECT
    criticality: Optional[int] = None
    note: Optional[str] = None
    timestamp: int = 0            # monotonic sequence number

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)


class ReviewState:
    """In-memory state over a report artifact plus the decision log."""

    def __init__(self, payload: dict, log_path: str):
        self.payload = payload
        self.log_path = log_path
        self.findings: dict[str, dict] = {}
        self.recommendations: dict[str, dict] = {}
        self.rec_to_finding: dict[str, str] = {}
        req_ordinals = {r["id"]: r["ordinal"] for r in payload["requirements"]}
        for finding in payload["findings"]:
            if finding["requirement_id"] not in req_ordinals:
                raise ReviewError(
                    f"finding {finding['id']} references unknown requirement "
                    f"{finding['requirement_id']!r}"
                )
            self.findings[finding["id"]] = finding
            for rec in finding["recommendations"]:
                self.recommendations[rec["id"]] = rec
                self.rec_to_finding[rec["id"]] = finding["id"]
        # (recommendation_id, expert_id) -> latest adjudication
        self.decisions: dict[tuple[str, str], Adjudication] = {}
        self.seq = 0
        self._lock = threading.Lock()
        self._replay()

    # -- persistence --------------------------------------------------------

    def _replay(self) -> None:
        if not os.path.exists(self.log_path):
            return
        with open(self.log_path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    raw = json.loads(line)
                    record = Adjudication(**raw)
                except (json.JSONDecodeError, TypeError) as exc:
                    raise ReviewError(f"log line {lineno} is malformed: {exc}") from None
                self._check(record)
                self._apply(record)

    def _check(self, record: Adjudication) -> None:
        if record.recommendation_id not in self.recommendations:
            raise ReviewError(f"unknown recommendation {record.recommendation_id!r}")
        if record.decision not in ("APPROVE", "REJECT"):
            raise ReviewError(f"unknown decision {record.decision!r}")
        if record.criticality is not None and not 1 <= record.criticality <= 5:
            raise ReviewError(f"criticality {record.criticality} outside 1..5")

    def _apply(self, record: Adjudication) -> None:
        self.decisions[(record.recommendation_id, record.expert_id)] = record
        self.seq = max(self.seq, record.timestamp)

    def append(self, record: Adjudication) -> Adjudication:
        """Validate, durably append, then apply a decision."""
        with self._lock:
            self._check(record)
            stamped = Adjudication(
                recommendation_id=record.recommendation_id,
                expert_id=record.expert_id,
                decision=record.decision,
                criticality=record.criticality,
                note=record.note,
                timestamp=self.seq + 1,
            )
            with open(self.log_path, "a", encoding="utf-8") as fh:
                fh.write(stamped.to_json() + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._apply(stamped)
            return stamped

    # -- derived state ------------------------------------------------------

    def _latest_per_expert(self, rec_id: str) -> list[Adjudication]:
        return [rec for (rid, _), rec in self.decisions.items() if rid == rec_id]

    def recommendation_status(self, rec_id: str) -> dict:
        latest = self._latest_per_expert(rec_id)
        if not latest:
            return {"status": "PROPOSED", "decided_by": None, "decided_at": None}
        if any(d.decision == "REJECT" for d in latest):
            status = "REJECTED"
        elif any(d.decision == "APPROVE" for d in latest):
            status = "APPROVED"
        else:
            status = "PROPOSED"
        newest = max(latest, key=lambda d: d.timestamp)
        return {
            "status": status,
            "decided_by": newest.expert_id,
            "decided_at": newest.timestamp,
        }

    def statuses(self) -> dict[str, str]:
        return {rid: self.recommendation_status(rid)["status"] for rid in self.recommendations}

    def finding_view(self, finding_id: str) -> dict:
        finding = dict(self.findings[finding_id])
        recs = []
        for rec in finding["recommendations"]:
            view = dict(rec)
            view.update(self.recommendation_status(rec["id"]))
            view["decisions"] = [
                asdict(d)
                for d in sorted(
                    self._latest_per_expert(rec["id"]), key=lambda d: d.timestamp
                )
            ]
            recs.append(view)
        finding["recommendations"] = recs
        rec_statuses = [r["status"] for r in recs]
        if "APPROVED" in rec_statuses:
            finding["status"] = "APPROVED"
        elif "REJECTED" in rec_statuses:
            finding["status"] = "REJECTED"
        else:
            finding["status"] = "PROPOSED"
        return finding

    def list_findings(
        self,
        doc: Optional[str] = None,
        category: Optional[str] = None,
        status: Optional[str] = None,
        min_criticality: Optional[int] = None,
    ) -> list[dict]:
        ordinals = {r["id"]: r["ordinal"] for r in self.payload["requirements"]}
        views = [self.finding_view(fid) for fid in self.findings]
        views.sort(key=lambda f: (ordinals[f["requirement_id"]], f["span"]["start"], f["id"]))
        if doc is not None:
            views = [f for f in views if self.payload["doc_id"] == doc]
        if category is not None:
            views = [f for f in views if f["category"] == category]
        if status is not None:
            views = [
                f for f in views
                if any(r["status"] == status for r in f["recommendations"])
            ]
        if min_criticality is not None:
            views = [f for f in views if f["criticality"] >= min_criticality]
        return views

    def export(self) -> dict:
        out = dict(self.payload)
        ordinals = {r["id"]: r["ordinal"] for r in self.payload["requirements"]}
        out["findings"] = sorted(
            (self.finding_view(fid) for fid in self.findings),
            key=lambda f: (ordinals[f["requirement_id"]], f["span"]["start"], f["id"]),
        )
        return out


def load_state(report_path: str, log_path: str) -> ReviewState:
    with open(report_path, encoding="utf-8") as fh:
        payload = load_payload(fh.read())
    return ReviewState(payload, log_path)


# ---------------------------------------------------------------------------
# knowledge feedback overlays

def apply_feedback(state: ReviewState) -> dict[str, str]:
    """Build overlay files from adjudications; originals are never touched.

    Rejected recommendations on lexicon-driven findings yield suppression
    rows (lemma, doc) for the suppression overlay; approved definitions of
    unknown terms yield ontology concept stubs.
    """
    doc_id = state.payload["doc_id"]
    suppressions: set[tuple[str, str]] = set()
    stubs: set[str] = set()
    irregulars = None
    for rec_id in state.recommendations:
        status = state.recommendation_status(rec_id)["status"]
        if status == "PROPOSED":
            continue
        finding = state.findings[state.rec_to_finding[rec_id]]
        subtype = finding["subtype"]
        trigger = finding["trigger"]
        if status == "REJECTED" and subtype in LEXICON_DRIVEN_SUBTYPES:
            pos = "VERB" if subtype == "VAGUE_VERB" else "NOUN"
            lemma = _lemma_of(trigger, pos)
            suppressions.add((lemma, doc_id))
        elif status == "APPROVED" and subtype == "UNKNOWN_TERM":
            stubs.add(_lemma_of(trigger, "NOUN"))
    overlays: dict[str, str] = {}
    if suppressions:
        rows = "\n".join(f"{lemma}\t{doc}" for lemma, doc in sorted(suppressions))
        overlays["suppressions.tsv"] = (
            "# suppressed trigger lemmas per document context\n" + rows + "\n"
        )
    if stubs:
        rows = "\n".join(f'concept {lemma} "{lemma}"' for lemma in sorted(stubs))
        overlays["ontology_overlay.onto"] = (
            "# concept stubs for approved term definitions\n" + rows + "\n"
        )
    return overlays


def _lemma_of(surface: str, pos: str) -> str:
    token = nlp.Token(text=surface, start=0, end=len(surface), pos=pos)
    return nlp.lemmatize(token)


# ---------------------------------------------------------------------------
# HTTP interface

def create_app(report_path: str, log_path: str, static_dir: Optional[str] = None):
    from fastapi import FastAPI, HTTPException, Request
    from fastapi.exceptions import RequestValidationError
    from fastapi.responses import JSONResponse
    from pydantic import BaseModel, Field

    state = load_state(report_path, log_path)
    app = FastAPI(title="cotir review", version="1")
    app.state.review = state

    @app.exception_handler(HTTPException)
    async def http_error(_req: Request, exc: HTTPException):
        code = {400: "bad_request", 404: "not_found", 422: "validation_error"}.get(
            exc.status_code, "error"
        )
        return JSONResponse(
            status_code=exc.status_code,
            content={"code": code, "message": str(exc.detail)},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "validation_error", "message": str(exc.errors())},
        )

    class DecisionIn(BaseModel):
        recommendation_id: str
        expert_id: str = Field(min_length=1)
        decision: str
        criticality: Optional[int] = None
        note: Optional[str] = None

    @app.get("/health")
    def health():
        return {"status": "ok", "doc_id": state.payload["doc_id"]}

    @app.get("/findings")
    def list_findings(
        doc: Optional[str] = None,
        category: Optional[str] = None,
        status: Optional[str] = None,
        min_criticality: Optional[int] = None,
        page: int = 1,
        page_size: int = 20,
    ):
        if category is not None and category not in ("A", "V", "IK", "O"):
            raise HTTPException(400, f"unknown category {category!r}")
        if status is not None and status not in ("PROPOSED", "APPROVED", "REJECTED"):
            raise HTTPException(400, f"unknown status {status!r}")
        if min_criticality is not None and not 1 <= min_criticality <= 5:
            raise HTTPException(400, f"min_criticality {min_criticality} outside 1..5")
        if page < 1 or not 1 <= page_size <= 200:
            raise HTTPException(400, "page must be >= 1 and page_size in 1..200")
        views = state.list_findings(doc, category, status, min_criticality)
        total = len(views)
        start = (page - 1) * page_size
        items = views[start : start + page_size]
        return {
            "items": items,
            "page": page,
            "page_size": page_size,
            "total": total,
            "page_count": (total + page_size - 1) // page_size if total else 0,
            "requirements": {r["id"]: r for r in state.payload["requirements"]},
        }

    @app.get("/findings/{finding_id}")
    def get_finding(finding_id: str):
        if finding_id not in state.findings:
            raise HTTPException(404, f"unknown finding {finding_id!r}")
        return state.finding_view(finding_id)

    @app.post("/decisions")
    def post_decision(body: DecisionIn):
        if body.decision not in ("APPROVE", "REJECT"):
            raise HTTPException(400, f"decision must be APPROVE or REJECT, not {body.decision!r}")
        if body.criticality is not None and not 1 <= body.criticality <= 5:
            raise HTTPException(400, f"criticality {body.criticality} outside 1..5")
        if body.recommendation_id not in state.recommendations:
            raise HTTPException(404, f"unknown recommendation {body.recommendation_id!r}")
        record = state.append(
            Adjudication(
                recommendation_id=body.recommendation_id,
                expert_id=body.expert_id,
                decision=body.decision,
                criticality=body.criticality,
                note=body.note,
            )
        )
        status = state.recommendation_status(body.recommendation_id)
        return {
            "recommendation_id": body.recommendation_id,
            "timestamp": record.timestamp,
            **status,
        }

    @app.get("/export")
    def export():
        return state.export()

    if static_dir and os.path.isdir(static_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(
    report_path: str,
    log_path: str,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_dir: Optional[str] = None,
) -> None:
    import uvicorn

    app = create_app(report_path, log_path, static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
