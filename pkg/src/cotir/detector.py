"""Implicitness trigger detection.

Each heuristic scans one annotated requirement and emits findings: a
category (A = ambiguity, V = vagueness, IK = incomplete knowledge,
O = other), a subtype, the character span of the trigger, and a 1..5
criticality. Findings are per trigger, not per requirement, so one
requirement can carry several forms of implicitness.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from typing import Iterable

from .corpus import Requirement, RequirementDoc
from .defaults import Lexicons
from .knowledge import AmbiguityLexicon, Cskb, Ontology, concept_lookup, serialize_cskb, serialize_ontology
from .nlp import RequirementAnnotation, Token, annotate

SUBTYPES = (
    "LEXICAL_AMBIGUITY",
    "STRUCTURAL_AMBIGUITY",
    "VAGUE_PHRASE",
    "VAGUE_VERB",
    "WEAK_PHRASE",
    "UNKNOWN_TERM",
    "MISSING_AGENT",
    "DANGLING_REFERENCE",
)
_SUBTYPE_RANK = {name: i for i, name in enumerate(SUBTYPES)}

CATEGORY_BY_SUBTYPE = {
    "LEXICAL_AMBIGUITY": "A",
    "STRUCTURAL_AMBIGUITY": "A",
    "VAGUE_PHRASE": "V",
    "VAGUE_VERB": "V",
    "WEAK_PHRASE": "V",
    "UNKNOWN_TERM": "IK",
    "MISSING_AGENT": "O",
    "DANGLING_REFERENCE": "O",
}

DEFAULT_RUBRIC = {
    "WEAK_PHRASE": 2,
    "VAGUE_PHRASE": 3,
    "VAGUE_VERB": 3,
    "LEXICAL_AMBIGUITY": 3,
    "STRUCTURAL_AMBIGUITY": 4,
    "UNKNOWN_TERM": 4,
    "MISSING_AGENT": 3,
    "DANGLING_REFERENCE": 3,
}

# pronouns checked for a missing antecedent
DANGLING_PRONOUNS = {"it", "they", "this"}
# modal verbs that raise criticality when present in the requirement
BINDING_MODALS = {"shall", "must"}


@dataclass(frozen=True)
class Finding:
    requirement_id: str
    category: str
    subtype: str
    start: int
    end: int
    trigger: str
    criticality: int
    rationale: str

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class AnalyzeConfig:
    rubric_overrides: dict = field(default_factory=dict)
    max_recommendations: int = 3


@dataclass(frozen=True)
class AnalysisReport:
    doc_id: str
    findings: tuple[Finding, ...]
    config_digest: str


def _finding(req: Requirement, subtype: str, start: int, end: int, rationale: str) -> Finding:
    return Finding(
        requirement_id=req.id,
        category=CATEGORY_BY_SUBTYPE[subtype],
        subtype=subtype,
        start=start,
        end=end,
        trigger=req.text[start:end],
        criticality=DEFAULT_RUBRIC[subtype],
        rationale=rationale,
    )


# ---------------------------------------------------------------------------
# A: lexical ambiguity

def detect_lexical_ambiguity(
    req: Requirement, annotation: RequirementAnnotation, ambiguity: AmbiguityLexicon
) -> list[Finding]:
    """Flag open-class tokens whose lemma has two or more senses."""
    findings = []
    quoted = [
        (e.start, e.end) for e in annotation.all_entities() if e.kind == "QUOTED_LITERAL"
    ]
    for tok in annotation.all_tokens():
        if tok.pos not in ("NOUN", "VERB", "ADJ"):
            continue
        if any(qs <= tok.start and tok.end <= qe for qs, qe in quoted):
            continue
        senses = ambiguity.sense_count(tok.lemma, tok.pos)
        if senses >= 2:
            findings.append(
                _finding(
                    req,
                    "LEXICAL_AMBIGUITY",
                    tok.start,
                    tok.end,
                    f"'{tok.lemma}' ({tok.pos.lower()}) has {senses} senses in the ambiguity lexicon",
                )
            )
    return findings


# ---------------------------------------------------------------------------
# V: vague and weak wording

def detect_vague_terms(
    req: Requirement, annotation: RequirementAnnotation, lexicons: Lexicons
) -> list[Finding]:
    """Vague verbs plus vague/weak phrase matches on lemma sequences.

    Every lexicon entry occurrence yields one finding; when several
    entries of the same lexicon match at the same position the longest
    match wins.
    """
    findings = []
    for sent in annotation.sentences:
        tokens = sent.tokens
        lemmas = [t.lemma for t in tokens]
        for subtype, phrases in (
            ("VAGUE_PHRASE", lexicons.vague_phrases),
            ("WEAK_PHRASE", lexicons.weak_phrases),
        ):
            for i in range(len(tokens)):
                for phrase in phrases:  # ordered longest first
                    if tuple(lemmas[i : i + len(phrase)]) == phrase:
                        start, end = tokens[i].start, tokens[i + len(phrase) - 1].end
                        kind = "vague" if subtype == "VAGUE_PHRASE" else "weak"
                        findings.append(
                            _finding(
                                req, subtype, start, end,
                                f"matches {kind} phrase '{' '.join(phrase)}'",
                            )
                        )
                        break  # longest match at this position wins
        for tok in tokens:
            if tok.pos == "VERB" and tok.lemma in lexicons.vague_verbs:
                findings.append(
                    _finding(
                        req, "VAGUE_VERB", tok.start, tok.end,
                        f"verb lemma '{tok.lemma}' is in the vague-verb lexicon",
                    )
                )
    return findings


# ---------------------------------------------------------------------------
# A/O: structural ambiguity, passives, dangling pronouns

_NP_MEMBER_TAGS = {"DET", "ADJ", "NUM", "NOUN"}


def detect_structural_ambiguity(
    req: Requirement, annotation: RequirementAnnotation
) -> list[Finding]:
    findings = []
    np_seen = False
    for sent in annotation.sentences:
        tokens = sent.tokens
        nps = [c for c in sent.chunks if c.label == "NP"]

        # (a) mixed and/or coordination with ambiguous grouping
        coords = [
            (i, t) for i, t in enumerate(tokens)
            if t.pos == "CONJ" and t.lemma in ("and", "or")
        ]
        for (i, first), (j, second) in zip(coords, coords[1:]):
            if first.lemma == "and" and second.lemma == "or":
                if not any(tokens[k].pos == "PUNCT" for k in range(i + 1, j)):
                    findings.append(
                        _finding(
                            req, "STRUCTURAL_AMBIGUITY", first.start, second.end,
                            "'and' and 'or' coordinate in the same region; the grouping is ambiguous",
                        )
                    )

        # (b) sentence-final prepositional phrase after two adjacent NPs
        findings.extend(_attachment_ambiguity(req, tokens, nps))

        # passive without an agent, only when nothing follows the participle
        findings.extend(_missing_agent(req, tokens))

        # dangling pronouns (antecedent may come from an earlier sentence
        # of the same requirement)
        np_starts = {c.first for c in nps}
        for idx, tok in enumerate(tokens):
            if idx in np_starts:
                np_seen = True
            if tok.pos == "PRON" and tok.text.lower() in DANGLING_PRONOUNS and not np_seen:
                findings.append(
                    _finding(
                        req, "DANGLING_REFERENCE", tok.start, tok.end,
                        f"pronoun '{tok.text}' has no preceding noun phrase in this requirement",
                    )
                )
    return findings


def _attachment_ambiguity(req: Requirement, tokens: list[Token], nps) -> list[Finding]:
    k = len(tokens) - 1
    while k >= 0 and tokens[k].pos == "PUNCT":
        k -= 1
    p = None
    for idx in range(k, -1, -1):
        if tokens[idx].pos == "ADP":
            p = idx
            break
    if p is None or p == k:
        return []
    complement = tokens[p + 1 : k + 1]
    if not all(t.pos in _NP_MEMBER_TAGS for t in complement):
        return []
    if not any(t.pos == "NOUN" for t in complement):
        return []
    first_np = next((c for c in nps if c.last == p - 1), None)
    if first_np is None:
        return []
    second_np = next((c for c in nps if c.last == first_np.first - 1), None)
    if second_np is None:
        return []
    return [
        _finding(
            req, "STRUCTURAL_AMBIGUITY", tokens[p].start, tokens[k].end,
            "sentence-final prepositional phrase can attach to more than one preceding phrase",
        )
    ]


def _missing_agent(req: Requirement, tokens: list[Token]) -> list[Finding]:
    findings = []
    n = len(tokens)
    for i, tok in enumerate(tokens):
        if tok.pos != "VERB" or tok.lemma != "be":
            continue
        j = i + 1
        while j < n and tokens[j].pos == "ADV":
            j += 1
        if j >= n or tokens[j].pos != "VERB" or not tokens[j].text.lower().endswith("ed"):
            continue
        k = j + 1
        while k < n and tokens[k].pos == "ADV":
            k += 1
        if k < n and tokens[k].pos != "PUNCT":
            continue  # complemented passive carries its own completion
        findings.append(
            _finding(
                req, "MISSING_AGENT", tok.start, tokens[j].end,
                "passive construction without a 'by' agent",
            )
        )
    return findings


# ---------------------------------------------------------------------------
# IK: incomplete knowledge

def detect_incomplete_knowledge(
    req: Requirement,
    annotation: RequirementAnnotation,
    ontology: Ontology,
    stoplist: frozenset[str],
) -> list[Finding]:
    """Flag NP nouns whose lemma resolves nowhere in the domain ontology."""
    findings = []
    entities = annotation.all_entities()
    for sent in annotation.sentences:
        for chunk_ in sent.chunks:
            if chunk_.label != "NP":
                continue
            for idx in chunk_.indices():
                tok = sent.tokens[idx]
                if tok.pos != "NOUN":
                    continue
                if any(e.start <= tok.start and tok.end <= e.end for e in entities):
                    continue
                if tok.lemma in stoplist:
                    continue
                if concept_lookup(ontology, tok.lemma):
                    continue
                findings.append(
                    _finding(
                        req, "UNKNOWN_TERM", tok.start, tok.end,
                        f"noun '{tok.lemma}' is not defined in the domain ontology",
                    )
                )
    return findings


# ---------------------------------------------------------------------------
# scoring and the full pass

def score_criticality(
    finding: Finding, config: AnalyzeConfig, requirement_has_binding_modal: bool = False
) -> int:
    rubric = dict(DEFAULT_RUBRIC)
    rubric.update(config.rubric_overrides)
    score = rubric.get(finding.subtype, 3)
    if requirement_has_binding_modal:
        score += 1
    return max(1, min(5, score))


def analyze(
    doc: RequirementDoc,
    ontology: Ontology,
    cskb: Cskb,
    lexicons: Lexicons,
    config: AnalyzeConfig | None = None,
) -> AnalysisReport:
    """Run the pipeline and all detectors over every requirement."""
    config = config or AnalyzeConfig()
    all_findings: list[Finding] = []
    for req in doc.requirements:
        annotation = annotate(req.text, lexicons.tag_lexicon, lexicons.irregular_lemmas)
        found = []
        found.extend(detect_lexical_ambiguity(req, annotation, lexicons.ambiguity))
        found.extend(detect_vague_terms(req, annotation, lexicons))
        found.extend(detect_structural_ambiguity(req, annotation))
        found.extend(detect_incomplete_knowledge(req, annotation, ontology, lexicons.stoplist))
        has_modal = any(
            t.pos == "MODAL" and t.text.lower() in BINDING_MODALS
            for t in annotation.all_tokens()
        )
        scored = [
            replace(f, criticality=score_criticality(f, config, has_modal)) for f in found
        ]
        scored.sort(key=lambda f: (f.start, _SUBTYPE_RANK[f.subtype], f.end - f.start))
        all_findings.extend(scored)
    digest = config_digest(ontology, cskb, lexicons, config)
    return AnalysisReport(doc_id=doc.doc_id, findings=tuple(all_findings), config_digest=digest)


def annotate_requirement(req: Requirement, lexicons: Lexicons) -> RequirementAnnotation:
    return annotate(req.text, lexicons.tag_lexicon, lexicons.irregular_lemmas)


def config_digest(
    ontology: Ontology, cskb: Cskb, lexicons: Lexicons, config: AnalyzeConfig
) -> str:
    """Stable fingerprint of every input that shapes detection output."""
    payload = {
        "ontology": serialize_ontology(ontology),
        "cskb": serialize_cskb(cskb),
        "tag_lexicon": sorted(lexicons.tag_lexicon.items()),
        "irregular_lemmas": sorted(lexicons.irregular_lemmas.items()),
        "ambiguity": [
            (e.lemma, sorted(e.pos_classes), e.sense_count, list(e.gloss_summaries))
            for e in lexicons.ambiguity.entries()
        ],
        "vague_verbs": sorted(lexicons.vague_verbs),
        "weak_phrases": sorted(lexicons.weak_phrases),
        "vague_phrases": sorted(lexicons.vague_phrases),
        "stoplist": sorted(lexicons.stoplist),
        "rubric": sorted(config.rubric_overrides.items()),
        "max_recommendations": config.max_recommendations,
    }
    blob = json.dumps(payload, sort_keys=True, ensure_ascii=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]
