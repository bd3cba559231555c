"""Candidate explicit rewrites and clarification prompts for findings.

Generation is template based and evidence backed: knowledge-base triples
and ontology hits are attached to the candidates they motivated, so every
suggestion can be traced back to a loaded assertion. Output is capped at
``config.max_recommendations`` per finding and always contains at least
one candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .corpus import Requirement
from .defaults import Lexicons, default_lexicons
from .detector import AnalyzeConfig, Finding
from .knowledge import Cskb, CskTriple, Ontology
from .nlp import RequirementAnnotation, annotate

STATUSES = ("PROPOSED", "APPROVED", "REJECTED")


@dataclass(frozen=True)
class Recommendation:
    id: str
    finding_ref: tuple[str, tuple[int, int]]   # (requirement_id, span)
    candidate_text: str
    evidence: tuple[CskTriple, ...] = ()
    status: str = "PROPOSED"
    decided_by: Optional[str] = None
    decided_at: Optional[int] = None


def recommend(
    finding: Finding,
    req: Requirement,
    cskb: Cskb,
    ontology: Ontology,
    config: AnalyzeConfig | None = None,
    annotation: RequirementAnnotation | None = None,
    lexicons: Lexicons | None = None,
) -> list[Recommendation]:
    """Generate at most ``max_recommendations`` candidates for one finding."""
    config = config or AnalyzeConfig()
    limit = max(1, config.max_recommendations)
    lexicons = lexicons or default_lexicons()
    if annotation is None:
        annotation = annotate(req.text, lexicons.tag_lexicon, lexicons.irregular_lemmas)

    candidates: list[tuple[str, tuple[CskTriple, ...]]] = []
    subtype = finding.subtype
    trigger = finding.trigger
    lemma = _trigger_lemma(finding, annotation)

    if subtype == "VAGUE_VERB":
        obj = _object_head(finding, annotation)
        if obj is not None:
            for triple in cskb.query(obj, "hasProperty")[:limit]:
                candidates.append(
                    (
                        f"Clarify: specify how the system shall {lemma} {obj} "
                        f"with respect to {triple.object}.",
                        (triple,),
                    )
                )
        if not candidates:
            candidates.append(
                (
                    f"Clarify: define measurable criteria for '{trigger}' "
                    "(what is done, to what, and how completely).",
                    (),
                )
            )
    elif subtype == "UNKNOWN_TERM":
        candidates.append((f"Define '{lemma}' in the glossary or domain ontology.", ()))
        for triple in cskb.query(lemma)[: limit - 1]:
            candidates.append(
                (f"Candidate sense: {lemma} {triple.relation} {triple.object}.", (triple,))
            )
    elif subtype == "LEXICAL_AMBIGUITY":
        entry = lexicons.ambiguity.get(lemma)
        if entry is not None:
            for gloss in entry.gloss_summaries[:limit]:
                candidates.append(
                    (f"Disambiguate '{lemma}': intended sense: {gloss}.", ())
                )
        if not candidates:
            candidates.append((f"Disambiguate '{lemma}': state the intended sense.", ()))
    elif subtype in ("WEAK_PHRASE", "VAGUE_PHRASE"):
        candidates.append(
            (
                f"Replace '{trigger}' with a measurable condition (value, unit, threshold).",
                (),
            )
        )
    elif subtype == "STRUCTURAL_AMBIGUITY":
        candidates.append(
            (
                f"Rewrite to make the grouping explicit around '{trigger}' "
                "(parenthesize or itemize the coordinated alternatives).",
                (),
            )
        )
    elif subtype == "MISSING_AGENT":
        candidates.append(
            (f"Name the agent of '{trigger}': state who or what performs the action.", ())
        )
    elif subtype == "DANGLING_REFERENCE":
        candidates.append(
            (f"Replace '{trigger}' with an explicit referent (name the entity meant).", ())
        )
    else:
        candidates.append((f"Clarify the requirement around '{trigger}'.", ()))

    out = []
    for n, (text, evidence) in enumerate(candidates[:limit], start=1):
        out.append(
            Recommendation(
                id=f"r{n}",
                finding_ref=(finding.requirement_id, finding.span),
                candidate_text=text,
                evidence=evidence,
            )
        )
    return out


def _trigger_lemma(finding: Finding, annotation: RequirementAnnotation) -> str:
    for tok in annotation.all_tokens():
        if tok.start == finding.start and tok.end == finding.end:
            return tok.lemma
    return finding.trigger.lower()


def _object_head(finding: Finding, annotation: RequirementAnnotation) -> Optional[str]:
    """Head lemma of the first NP after a flagged verb, if any."""
    for sent in annotation.sentences:
        tokens = sent.tokens
        verb_idx = next(
            (i for i, t in enumerate(tokens) if t.start == finding.start), None
        )
        if verb_idx is None:
            continue
        for chunk_ in sent.chunks:
            if chunk_.label != "NP" or chunk_.first <= verb_idx:
                continue
            nouns = [tokens[i] for i in chunk_.indices() if tokens[i].pos == "NOUN"]
            if nouns:
                return nouns[-1].lemma
        return None
    return None
