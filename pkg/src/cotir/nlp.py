"""Deterministic rule-based NLP pipeline.

Sentence splitting, tokenization, POS tagging (lexicon + suffix + context
rules over a coarse 12-tag set), rule-based lemmatization and shallow
NP/VP chunking. Everything is a pure function of its inputs; lexicons are
immutable after load and can be shared across workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import IO, Iterable

from .errors import ConfigError, LexiconError

POS_TAGS = (
    "NOUN", "VERB", "MODAL", "ADJ", "ADV", "PRON",
    "DET", "ADP", "CONJ", "NUM", "PUNCT", "X",
)

MODAL_WORDS = {"shall", "must", "should", "will", "may", "can", "could", "would", "might"}
BE_FORMS = {"be", "is", "are", "was", "were", "been", "being", "am"}

# abbreviations that do not end a sentence even when followed by a capital
ABBREVIATIONS = {
    "e.g", "i.e", "etc", "cf", "vs", "al", "fig", "figs", "eq", "sec",
    "no", "dr", "mr", "mrs", "ms", "prof", "st", "dept", "approx",
}

_WORD = re.compile(r"[A-Za-z0-9]+(?:[&'./\-][A-Za-z0-9]+)*")
_NUMERIC = re.compile(r"^\d+(?:[.,]\d+)*$")


@dataclass
class Token:
    text: str
    start: int
    end: int
    lemma: str = ""
    pos: str = ""

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Chunk:
    label: str            # "NP" or "VP"
    first: int            # first token index (inclusive)
    last: int             # last token index (inclusive)

    def indices(self) -> range:
        return range(self.first, self.last + 1)


@dataclass(frozen=True)
class Entity:
    kind: str             # ACRONYM | PROPER | QUOTED_LITERAL
    start: int
    end: int
    surface: str


# ---------------------------------------------------------------------------
# lexicons

def load_tag_lexicon(source: str | IO) -> dict[str, str]:
    """Load the word->tag table (TSV, '#' comments)."""
    text = source if isinstance(source, str) else source.read()
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"tag lexicon line {lineno}: expected word<TAB>tag")
        word, tag = parts[0].strip().lower(), parts[1].strip().upper()
        if tag not in POS_TAGS:
            raise LexiconError(f"tag lexicon line {lineno}: unknown tag {tag!r}")
        table[word] = tag
    return table


def load_irregular_lemmas(source: str | IO) -> dict[str, str]:
    """Load the irregular form->lemma table (TSV, '#' comments)."""
    text = source if isinstance(source, str) else source.read()
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"lemma table line {lineno}: expected word<TAB>lemma")
        table[parts[0].strip().lower()] = parts[1].strip().lower()
    return table


# ---------------------------------------------------------------------------
# sentence selection

def split_sentences(text: str) -> list[tuple[int, int]]:
    """Return (start, end) spans of the sentences in normalized text.

    Boundaries are ., ! or ? followed by whitespace and a capital or
    digit, except after known abbreviations; decimals never split.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch in ".!?":
            j = i + 1
            while j < n and text[j] in "\"')]":
                j += 1
            k = j
            while k < n and text[k].isspace():
                k += 1
            if k > j and k < n and (text[k].isupper() or text[k].isdigit()):
                if not (ch == "." and _is_abbreviation(text, i)):
                    spans.append((start, j))
                    start = k
                    i = k
                    continue
        i += 1
    tail = text[start:].strip()
    if tail:
        end = start + len(text[start:].rstrip())
        begin = start + (len(text[start:]) - len(text[start:].lstrip()))
        spans.append((begin, end))
    # trim leading whitespace of every span
    trimmed = []
    for s, e in spans:
        while s < e and text[s].isspace():
            s += 1
        trimmed.append((s, e))
    return trimmed


def _is_abbreviation(text: str, dot: int) -> bool:
    j = dot
    while j > 0 and (text[j - 1].isalnum() or text[j - 1] == "."):
        j -= 1
    word = text[j:dot].lower().rstrip(".")
    return bool(word) and word in ABBREVIATIONS


# ---------------------------------------------------------------------------
# tokenization

def tokenize(sentence: str, offset: int = 0) -> list[Token]:
    """Split a sentence into tokens whose spans reconstruct it exactly.

    Words keep internal symbols ("C&C", "real-time", "node's", "1.5");
    every punctuation character is its own token.
    """
    tokens: list[Token] = []
    i = 0
    n = len(sentence)
    while i < n:
        if sentence[i].isspace():
            i += 1
            continue
        match = _WORD.match(sentence, i)
        if match:
            tokens.append(Token(text=match.group(0), start=offset + i, end=offset + match.end()))
            i = match.end()
        else:
            tokens.append(Token(text=sentence[i], start=offset + i, end=offset + i + 1))
            i += 1
    return tokens


# ---------------------------------------------------------------------------
# POS tagging

def pos_tag(tokens: list[Token], tag_lexicon: dict[str, str]) -> list[Token]:
    """Assign a tag to every token (three stages; X only as last resort)."""
    if not tag_lexicon:
        raise ConfigError("tag lexicon is empty or not loaded")
    for i, tok in enumerate(tokens):
        word = tok.text
        lower = word.lower()
        if not any(c.isalnum() for c in word):
            tok.pos = "PUNCT"
            continue
        if _NUMERIC.match(word):
            tok.pos = "NUM"
            continue
        if lower in MODAL_WORDS:
            tok.pos = "MODAL"
            continue
        tag = tag_lexicon.get(lower)
        if tag is None:
            tag = _suffix_tag(lower, tokens, i)
        tok.pos = tag or "X"
    # context rules on what is still unknown
    for i, tok in enumerate(tokens):
        if tok.pos != "X":
            continue
        if i > 0 and tokens[i - 1].pos == "DET":
            tok.pos = "NOUN"
        elif i > 0 and tok.text[:1].isupper():
            tok.pos = "NOUN"
    # attributive participles ("allowed values") act as adjectives
    for i, tok in enumerate(tokens[:-1]):
        if tok.pos == "VERB" and tok.text.lower().endswith("ed") and tokens[i + 1].pos == "NOUN":
            tok.pos = "ADJ"
    return tokens


def _suffix_tag(word: str, tokens: list[Token], index: int) -> str | None:
    if len(word) < 4:
        return None
    if word.endswith("ly"):
        return "ADV"
    if word.endswith(("tion", "sion", "ment", "ness", "ity")):
        return "NOUN"
    if word.endswith(("ize", "ise", "ify")):
        return "VERB"
    if word.endswith(("ous", "ive", "al")):
        return "ADJ"
    if word.endswith(("ing", "ed")):
        # verbal only in a verbal context: nearest previous non-adverb tag
        j = index - 1
        while j >= 0 and tokens[j].pos in ("ADV", ""):
            j -= 1
        if j >= 0 and tokens[j].pos in ("MODAL", "VERB"):
            return "VERB"
    return None


# ---------------------------------------------------------------------------
# lemmatization

_DEFAULT_IRREGULARS: dict[str, str] | None = None


def _default_irregulars() -> dict[str, str]:
    global _DEFAULT_IRREGULARS
    if _DEFAULT_IRREGULARS is None:
        from .defaults import default_irregular_lemmas

        _DEFAULT_IRREGULARS = default_irregular_lemmas()
    return _DEFAULT_IRREGULARS


def lemmatize(token: Token, irregulars: dict[str, str] | None = None) -> str:
    """Rule-based lemma for a tagged token (lowercase)."""
    word = token.text.lower()
    table = irregulars if irregulars is not None else _default_irregulars()
    if word in table:
        return table[word]
    if token.pos == "NOUN":
        return _noun_lemma(word, table)
    if token.pos == "VERB":
        return _verb_lemma(word, table)
    return word


def _noun_lemma(word: str, table: dict[str, str]) -> str:
    if word.endswith("'s"):
        word = word[:-2]
        return table.get(word, word)
    if word.endswith("'"):
        word = word[:-1]
        return table.get(word, word)
    if len(word) > 4 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith(("ches", "shes", "sses", "xes", "zes")):
        return word[:-2]
    if len(word) > 3 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


_VOWELS = "aeiou"


def _verb_lemma(word: str, table: dict[str, str]) -> str:
    if len(word) > 4 and word.endswith("ied"):
        return word[:-3] + "y"
    if len(word) > 4 and word.endswith("ies"):
        return word[:-3] + "y"
    for suffix in ("ing", "ed"):
        if len(word) > len(suffix) + 2 and word.endswith(suffix):
            stem = word[: -len(suffix)]
            return _fix_stem(stem, table)
    if len(word) > 4 and word.endswith(("ches", "shes", "sses", "xes", "zes", "oes")):
        return word[:-2]
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def _fix_stem(stem: str, table: dict[str, str]) -> str:
    if stem in table:
        return table[stem]
    # doubled final consonant from suffixation: stopp -> stop
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    # silent-e restoration for common stem shapes
    if stem.endswith(("at", "iz", "is", "bl", "ag", "iev", "eas", "uir", "id")):
        return stem + "e"
    if len(stem) >= 3 and stem[-1] == "v":
        return stem + "e"
    return stem


# ---------------------------------------------------------------------------
# entities

def detect_entities(tokens: list[Token], text: str, tag_lexicon: dict[str, str] | None = None) -> list[Entity]:
    """ACRONYM / PROPER / QUOTED_LITERAL entities for one tagged sentence."""
    entities: list[Entity] = []
    quoted_token_idx: set[int] = set()

    # quoted literals: pair double-quote tokens left to right
    quote_positions = [i for i, t in enumerate(tokens) if t.text == '"']
    for qa, qb in zip(quote_positions[::2], quote_positions[1::2]):
        inner = tokens[qa + 1 : qb]
        if not inner:
            continue
        start, end = inner[0].start, inner[-1].end
        entities.append(Entity("QUOTED_LITERAL", start, end, text[start:end]))
        quoted_token_idx.update(range(qa + 1, qb))

    acronym_idx: set[int] = set()
    for i, tok in enumerate(tokens):
        if i in quoted_token_idx or tok.pos == "PUNCT":
            continue
        word = tok.text
        if len(word) >= 2 and re.fullmatch(r"[A-Z0-9&]+", word) and any(c.isalpha() for c in word):
            if i == 0 and tag_lexicon and word.lower() in tag_lexicon:
                continue  # sentence-initial common word in caps
            entities.append(Entity("ACRONYM", tok.start, tok.end, word))
            acronym_idx.add(i)

    # proper names: maximal runs of capitalized tokens off sentence start
    run_start = None
    for i in range(len(tokens) + 1):
        tok = tokens[i] if i < len(tokens) else None
        is_proper = (
            tok is not None
            and i > 0
            and i not in quoted_token_idx
            and i not in acronym_idx
            and tok.pos != "PUNCT"
            and tok.text[:1].isupper()
            and any(c.islower() for c in tok.text)
        )
        if is_proper and run_start is None:
            run_start = i
        elif not is_proper and run_start is not None:
            first, last = tokens[run_start], tokens[i - 1]
            entities.append(Entity("PROPER", first.start, last.end, text[first.start : last.end]))
            run_start = None
    entities.sort(key=lambda e: (e.start, e.end, e.kind))
    return entities


# ---------------------------------------------------------------------------
# shallow chunking

_NP_MEMBER = {"DET", "ADJ", "NUM", "NOUN"}


def chunk(tokens: list[Token]) -> list[Chunk]:
    """Greedy left-to-right NP/VP chunking over the coarse tags."""
    chunks: list[Chunk] = []
    i = 0
    n = len(tokens)
    while i < n:
        j = _match_np(tokens, i)
        if j > i:
            chunks.append(Chunk("NP", i, j - 1))
            i = j
            continue
        j = _match_vp(tokens, i)
        if j > i:
            chunks.append(Chunk("VP", i, j - 1))
            i = j
            continue
        i += 1
    return chunks


def _match_np(tokens: list[Token], i: int) -> int:
    k = i
    if k < len(tokens) and tokens[k].pos == "DET":
        k += 1
    while k < len(tokens) and tokens[k].pos in ("ADJ", "NUM"):
        k += 1
    nouns = k
    while k < len(tokens) and tokens[k].pos == "NOUN":
        k += 1
    return k if k > nouns else i


def _match_vp(tokens: list[Token], i: int) -> int:
    k = i
    if k < len(tokens) and tokens[k].pos == "MODAL":
        k += 1
    while k < len(tokens) and tokens[k].pos == "ADV":
        k += 1
    verbs = k
    while k < len(tokens) and tokens[k].pos == "VERB":
        k += 1
    return k if k > verbs else i


# ---------------------------------------------------------------------------
# requirement-level annotation

@dataclass(frozen=True)
class SentenceAnnotation:
    start: int
    end: int
    tokens: list[Token]
    chunks: list[Chunk]        # indices are sentence-local
    entities: list[Entity]     # character offsets are requirement-global


@dataclass(frozen=True)
class RequirementAnnotation:
    text: str
    sentences: list[SentenceAnnotation]

    def all_tokens(self) -> list[Token]:
        out: list[Token] = []
        for sent in self.sentences:
            out.extend(sent.tokens)
        return out

    def all_entities(self) -> list[Entity]:
        out: list[Entity] = []
        for sent in self.sentences:
            out.extend(sent.entities)
        return out


def annotate(text: str, tag_lexicon: dict[str, str], irregulars: dict[str, str]) -> RequirementAnnotation:
    """Run the full pipeline on one requirement's normalized text."""
    sentences = []
    for s, e in split_sentences(text):
        tokens = tokenize(text[s:e], offset=s)
        pos_tag(tokens, tag_lexicon)
        for tok in tokens:
            tok.lemma = lemmatize(tok, irregulars)
        entities = detect_entities(tokens, text, tag_lexicon)
        chunks = chunk(tokens)
        sentences.append(SentenceAnnotation(s, e, tokens, chunks, entities))
    return RequirementAnnotation(text=text, sentences=sentences)
