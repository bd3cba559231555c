"""Acceptance suite: one test per release criterion, each printing a
PASS line with its measured numbers when it holds."""

import random
import time
from dataclasses import replace

import pytest

from cotir import defaults
from cotir.cli import main
from cotir.corpus import Requirement, RequirementDoc, load_requirements
from cotir.detector import analyze
from cotir.errors import CskbError, OntologyError
from cotir.evaluation import (
    ConfusionCounts,
    confusion,
    load_pr_cells,
    metrics,
    verify_benchmark,
)
from cotir.knowledge import (
    load_cskb,
    load_ontology,
    serialize_cskb,
    serialize_ontology,
)
from cotir.recommend import recommend
from cotir.review import Adjudication, load_state
from cotir.detector import AnalyzeConfig, annotate_requirement

EMMON = str(defaults.data_path("emmon_srs.txt"))

LEXICON_SUBTYPES = ("LEXICAL_AMBIGUITY", "VAGUE_VERB", "VAGUE_PHRASE", "WEAK_PHRASE")


def test_benchmark_matrix_reproduction():
    started = time.perf_counter()
    cells = load_pr_cells(defaults.data_path("table2_cells.csv").read_text(encoding="utf-8"))
    checks = verify_benchmark(
        cells, defaults.data_path("table2_expected.csv").read_text(encoding="utf-8")
    )
    elapsed = time.perf_counter() - started
    failed = [c for c in checks if not c.passed]
    assert len(checks) == 36
    assert not failed, [(c.name, c.computed) for c in failed]
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    print(f"\nACCEPTANCE benchmark-matrix: PASS (36/36 checks, {elapsed * 1000:.0f} ms)")


def test_golden_corpus_flags_and_stable_text_report(
    tmp_path, emmon_doc, emmon_report, golden_flags
):
    actual: dict[str, set[str]] = {}
    for finding in emmon_report.findings:
        actual.setdefault(finding.requirement_id, set()).add(finding.trigger)
    for req in emmon_doc.requirements:
        assert actual.get(req.id, set()) == golden_flags.get(req.id, set()), req.id

    a, b = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
    assert main(["analyze", EMMON, "--format", "text", "--out", a]) == 0
    assert main(["analyze", EMMON, "--format", "text", "--out", b]) == 0
    first = open(a, "rb").read()
    assert first == open(b, "rb").read()
    assert first, "report must not be empty"
    print(
        f"ACCEPTANCE golden-corpus: PASS "
        f"({sum(len(v) for v in actual.values())} flags over 13 requirements, "
        f"byte-identical report of {len(first)} bytes)"
    )


# ---------------------------------------------------------------------------
# detector soundness / completeness on synthetic requirements

FILLER_NOUNS = [
    "server", "message", "packet", "queue", "database", "sensor", "user",
    "folder", "password", "certificate", "router", "reading", "threshold",
    "configuration", "history", "level", "interest", "layer", "panel",
]
FILLER_VERBS = [
    "store", "send", "transmit", "delete", "create", "update", "compute",
    "encrypt", "verify", "log", "archive", "fetch",
]


def _synthesize(rng, lexicons, count):
    vague_verbs = sorted(lexicons.vague_verbs)
    ambiguous_verbs = [
        e.lemma for e in lexicons.ambiguity.entries() if "VERB" in e.pos_classes
    ]
    weak = [" ".join(p) for p in lexicons.weak_phrases]
    vague_phrases = [" ".join(p) for p in lexicons.vague_phrases]
    lines = []
    for _ in range(count):
        verb = rng.choice(vague_verbs + ambiguous_verbs + FILLER_VERBS)
        n1, n2 = rng.choice(FILLER_NOUNS), rng.choice(FILLER_NOUNS)
        pieces = [f"The {n1} shall {verb} the {n2}"]
        if rng.random() < 0.4:
            pieces.append(rng.choice(weak + vague_phrases))
        if rng.random() < 0.3:
            verb2 = rng.choice(vague_verbs + FILLER_VERBS)
            pieces.append(f"and {verb2} the {rng.choice(FILLER_NOUNS)}")
        if rng.random() < 0.25:
            pieces.append(f'when the status is "{rng.choice(["Good", "Invalid"])}"')
        if rng.random() < 0.2:
            pieces.append(f"because requests are {rng.choice(['normally', 'generally'])} "
                          f"{rng.choice(['handled', 'processed', 'stored'])}")
        lines.append(" ".join(pieces) + ".")
    return lines


def _brute_force_scan(annotation, lexicons):
    """Independent enumeration of every lexicon-driven trigger."""
    expected = set()
    quoted = [
        (e.start, e.end)
        for e in annotation.all_entities()
        if e.kind == "QUOTED_LITERAL"
    ]
    for sent in annotation.sentences:
        tokens = sent.tokens
        lemmas = [t.lemma for t in tokens]
        for tok in tokens:
            if (
                tok.pos in ("NOUN", "VERB", "ADJ")
                and not any(qs <= tok.start and tok.end <= qe for qs, qe in quoted)
                and lexicons.ambiguity.sense_count(tok.lemma, tok.pos) >= 2
            ):
                expected.add(("LEXICAL_AMBIGUITY", tok.start, tok.end))
            if tok.pos == "VERB" and tok.lemma in lexicons.vague_verbs:
                expected.add(("VAGUE_VERB", tok.start, tok.end))
        for subtype, phrases in (
            ("VAGUE_PHRASE", lexicons.vague_phrases),
            ("WEAK_PHRASE", lexicons.weak_phrases),
        ):
            for i in range(len(tokens)):
                hits = [p for p in phrases if tuple(lemmas[i : i + len(p)]) == p]
                if hits:
                    longest = max(hits, key=len)
                    expected.add(
                        (subtype, tokens[i].start, tokens[i + len(longest) - 1].end)
                    )
    return expected


def test_detector_soundness_and_completeness(ontology, cskb, lexicons):
    rng = random.Random(20240831)
    lines = _synthesize(rng, lexicons, 1000)
    doc = load_requirements("\n".join(lines), doc_id="SYN")
    assert len(doc) == 1000

    started = time.perf_counter()
    report = analyze(doc, ontology, cskb, lexicons)
    by_req: dict[str, list] = {}
    for finding in report.findings:
        if finding.subtype in LEXICON_SUBTYPES:
            by_req.setdefault(finding.requirement_id, []).append(finding)

    checked = 0
    for req in doc.requirements:
        annotation = annotate_requirement(req, lexicons)
        expected = _brute_force_scan(annotation, lexicons)
        got_list = [
            (f.subtype, f.start, f.end) for f in by_req.get(req.id, [])
        ]
        assert len(got_list) == len(set(got_list)), f"duplicates in {req.id}"
        assert set(got_list) == expected, (
            req.id, req.text, sorted(set(got_list) ^ expected)
        )
        checked += len(expected)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    print(
        f"\nACCEPTANCE detector-soundness: PASS "
        f"(1000 synthetic requirements, {checked} triggers, zero misses/duplicates, "
        f"{elapsed:.2f}s)"
    )


# ---------------------------------------------------------------------------
# metrics oracle

def test_confusion_matches_brute_force_oracle():
    from cotir.detector import AnalysisReport, Finding

    rng = random.Random(97)
    cases = 0
    started = time.perf_counter()
    while cases < 10000:
        n = rng.randint(1, 12)
        doc = RequirementDoc(
            doc_id="D",
            title="",
            requirements=tuple(
                Requirement(id=f"r{i}", text="t", ordinal=i) for i in range(1, n + 1)
            ),
        )
        ids = [r.id for r in doc.requirements]
        threshold = rng.randint(1, 5)
        findings = []
        for rid in ids:
            for _ in range(rng.randint(0, 2)):
                findings.append(
                    Finding(
                        requirement_id=rid, category="V", subtype="VAGUE_VERB",
                        start=0, end=1, trigger="t",
                        criticality=rng.randint(1, 5), rationale="x",
                    )
                )
        report = AnalysisReport(doc_id="D", findings=tuple(findings), config_digest="d")
        marked = {rid for rid in ids if rng.random() < 0.5}
        from cotir.evaluation import AnnotationSet

        annotations = AnnotationSet(
            expert_id="E", doc_id="D",
            marks={rid: (frozenset({"A"}), {}) for rid in marked},
        )
        counts = confusion(report, annotations, doc, threshold)

        tool = {f.requirement_id for f in findings if f.criticality >= threshold}
        oracle = ConfusionCounts(
            tp=len(tool & marked),
            fp=len(tool - marked),
            fn=len(marked - tool),
            tn=n - len(tool | marked),
        )
        assert counts == oracle
        assert counts.total == n
        cases += 1

        cell = metrics(counts)
        for value in (cell.precision, cell.recall, cell.f):
            if value is not None:
                assert 0.0 <= value <= 100.0
        if cell.f is not None:
            assert min(cell.precision, cell.recall) - 1e-9 <= cell.f
            assert cell.f <= (cell.precision + cell.recall) / 2 + 1e-9
    elapsed = time.perf_counter() - started
    print(
        f"\nACCEPTANCE metrics-oracle: PASS ({cases} random instances, "
        f"harmonic-mean bounds held, {elapsed:.2f}s)"
    )


# ---------------------------------------------------------------------------
# knowledge round-trips and rejections

def test_knowledge_round_trips_and_rejections(ontology, cskb):
    assert load_ontology(serialize_ontology(ontology)) == ontology
    again = load_cskb(serialize_cskb(cskb))
    key = lambda t: (t.subject, t.relation, t.object)
    assert sorted(again.all_triples(), key=key) == sorted(cskb.all_triples(), key=key)

    with pytest.raises(OntologyError, match="cycle"):
        load_ontology(
            'concept a "A"\nconcept b "B"\n'
            "axiom subsumes a b\naxiom subsumes b a\n"
        )
    with pytest.raises(OntologyError, match="undeclared"):
        load_ontology('concept a "A"\nrel part-of a ghost\n')
    with pytest.raises(CskbError, match="outside"):
        load_cskb("a\thasProperty\tb\t2.0\n")
    with pytest.raises(CskbError, match="line 1"):
        load_cskb("only two\tfields\n")
    print("\nACCEPTANCE knowledge-round-trips: PASS")


# ---------------------------------------------------------------------------
# recommendation integrity

def test_recommendation_integrity(emmon_doc, emmon_report, ontology, cskb, lexicons):
    by_id = {r.id: r for r in emmon_doc.requirements}
    config = AnalyzeConfig()
    total = 0
    for finding in emmon_report.findings:
        req = by_id[finding.requirement_id]
        first = recommend(finding, req, cskb, ontology, config, lexicons=lexicons)
        second = recommend(finding, req, cskb, ontology, config, lexicons=lexicons)
        assert first == second, "generation must be deterministic"
        assert 1 <= len(first) <= config.max_recommendations
        for rec in first:
            assert rec.candidate_text.strip()
            for triple in rec.evidence:
                assert triple in cskb, triple
        total += len(first)
    print(
        f"\nACCEPTANCE recommendation-integrity: PASS "
        f"({total} recommendations over {len(emmon_report.findings)} findings)"
    )


# ---------------------------------------------------------------------------
# review persistence

def test_review_log_replay_reconstructs_statuses(tmp_path):
    report_path = str(tmp_path / "report.json")
    assert main(["analyze", EMMON, "--out", report_path]) == 0
    rng = random.Random(2718)
    rounds = 25
    for round_no in range(rounds):
        log_path = str(tmp_path / f"log{round_no}.jsonl")
        live = load_state(report_path, log_path)
        rec_ids = sorted(live.recommendations)
        for _ in range(rng.randint(1, 30)):
            live.append(
                Adjudication(
                    recommendation_id=rng.choice(rec_ids),
                    expert_id=rng.choice(["E1", "E2", "E3", "E4"]),
                    decision=rng.choice(["APPROVE", "REJECT"]),
                    criticality=rng.choice([None, 1, 3, 5]),
                    note=rng.choice([None, "needs wording", "agreed"]),
                )
            )
        restarted = load_state(report_path, log_path)
        assert restarted.statuses() == live.statuses()
        assert restarted.seq == live.seq
    print(
        f"\nACCEPTANCE review-persistence: PASS "
        f"({rounds} random adjudication sequences replayed identically)"
    )
