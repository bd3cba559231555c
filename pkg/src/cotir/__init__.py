"""Implicit-requirement detection for natural-language SRS documents.

The package combines a rule-based NLP pipeline, heuristic trigger
detection, a domain ontology and a common-sense knowledge base to flag
requirements that probably carry implicit assumptions, recommend
explicit rewrites, and score detection quality against expert
annotations.
"""

from .corpus import Requirement, RequirementDoc, load_requirements, normalize
from .detector import AnalysisReport, AnalyzeConfig, Finding, analyze
from .knowledge import (
    AmbiguityLexicon,
    Cskb,
    CskTriple,
    Ontology,
    concept_lookup,
    load_cskb,
    load_ontology,
    query_cskb,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityLexicon",
    "AnalysisReport",
    "AnalyzeConfig",
    "Cskb",
    "CskTriple",
    "Finding",
    "Ontology",
    "Requirement",
    "RequirementDoc",
    "analyze",
    "concept_lookup",
    "load_cskb",
    "load_ontology",
    "load_requirements",
    "normalize",
    "query_cskb",
    "__version__",
]
