"""Loaders for the data files bundled with the package."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import knowledge, nlp


def data_path(name: str):
    return resources.files("cotir").joinpath("data", name)


def _read(name: str) -> str:
    return data_path(name).read_text(encoding="utf-8")


@dataclass(frozen=True)
class Lexicons:
    """The lexicon bundle consumed by the pipeline and the detectors."""

    tag_lexicon: dict[str, str]
    irregular_lemmas: dict[str, str]
    ambiguity: knowledge.AmbiguityLexicon
    vague_verbs: frozenset[str]
    weak_phrases: tuple[tuple[str, ...], ...]
    vague_phrases: tuple[tuple[str, ...], ...]
    stoplist: frozenset[str]


def default_tag_lexicon() -> dict[str, str]:
    return nlp.load_tag_lexicon(_read("tag_lexicon.tsv"))


def default_irregular_lemmas() -> dict[str, str]:
    return nlp.load_irregular_lemmas(_read("irregular_lemmas.tsv"))


def default_ambiguity_lexicon() -> knowledge.AmbiguityLexicon:
    return knowledge.load_ambiguity_lexicon(_read("ambiguity_lexicon.tsv"))


def default_lexicons() -> Lexicons:
    return Lexicons(
        tag_lexicon=default_tag_lexicon(),
        irregular_lemmas=default_irregular_lemmas(),
        ambiguity=default_ambiguity_lexicon(),
        vague_verbs=knowledge.load_word_set(_read("vague_verbs.txt")),
        weak_phrases=knowledge.load_phrase_lexicon(_read("weak_phrases.txt")),
        vague_phrases=knowledge.load_phrase_lexicon(_read("vague_phrases.txt")),
        stoplist=knowledge.load_word_set(_read("stoplist.txt")),
    )


def lexicons_from_dir(path: str) -> Lexicons:
    """Load the lexicon bundle from a directory of the standard files."""
    import os

    def read(name: str) -> str:
        with open(os.path.join(path, name), encoding="utf-8") as fh:
            return fh.read()

    return Lexicons(
        tag_lexicon=nlp.load_tag_lexicon(read("tag_lexicon.tsv")),
        irregular_lemmas=nlp.load_irregular_lemmas(read("irregular_lemmas.tsv")),
        ambiguity=knowledge.load_ambiguity_lexicon(read("ambiguity_lexicon.tsv")),
        vague_verbs=knowledge.load_word_set(read("vague_verbs.txt")),
        weak_phrases=knowledge.load_phrase_lexicon(read("weak_phrases.txt")),
        vague_phrases=knowledge.load_phrase_lexicon(read("vague_phrases.txt")),
        stoplist=knowledge.load_word_set(read("stoplist.txt")),
    )


def default_ontology() -> knowledge.Ontology:
    return knowledge.load_ontology(_read("ontology_emmon.onto"))


def default_cskb() -> knowledge.Cskb:
    return knowledge.load_cskb(_read("cskb_desk.tsv"))
