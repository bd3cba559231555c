"""Knowledge artifacts: domain ontologies and common-sense triple stores.

Ontology text format (one declaration per line, '#' comments, concepts
must be declared before they are referenced):

    concept <id> "<label>" [syn "<s1>" "<s2>" ...]
    rel <name> <source-id> <target-id>
    axiom subsumes|disjoint <id> <id>

CSKB format: TSV ``subject<TAB>relation<TAB>object<TAB>confidence`` with
'#' comment lines. Ambiguity lexicon: TSV
``lemma<TAB>pos-classes<TAB>sense_count<TAB>gloss1|gloss2|...``.
All stores are immutable after load.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional

from .errors import CskbError, LexiconError, OntologyError

AMBIGUITY_POS_CLASSES = ("NOUN", "VERB", "ADJ")


@dataclass(frozen=True)
class Concept:
    id: str
    label: str
    synonyms: tuple[str, ...] = ()


@dataclass(frozen=True)
class Relation:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Axiom:
    kind: str  # SUBSUMPTION | DISJOINT
    operands: tuple[str, str]


@dataclass(frozen=True)
class Ontology:
    concepts: dict[str, Concept]
    relations: frozenset[Relation]
    axioms: frozenset[Axiom]

    def counts(self) -> tuple[int, int, int]:
        return (len(self.concepts), len(self.relations), len(self.axioms))


def _text(source: str | IO) -> str:
    return source if isinstance(source, str) else source.read()


def load_ontology(source: str | IO) -> Ontology:
    """Parse and validate an ontology file."""
    concepts: dict[str, Concept] = {}
    labels_seen: dict[str, str] = {}
    relations: set[Relation] = set()
    axioms: set[Axiom] = set()

    for lineno, raw in enumerate(_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            raise OntologyError(f"line {lineno}: {exc}") from None
        kind = parts[0]
        if kind == "concept":
            if len(parts) < 3:
                raise OntologyError(f"line {lineno}: concept needs an id and a label")
            cid, label = parts[1], parts[2]
            synonyms: tuple[str, ...] = ()
            if len(parts) > 3:
                if parts[3] != "syn":
                    raise OntologyError(f"line {lineno}: expected 'syn' before synonyms")
                synonyms = tuple(parts[4:])
            if cid in concepts:
                raise OntologyError(f"line {lineno}: duplicate concept id {cid!r}")
            if not label:
                raise OntologyError(f"line {lineno}: concept {cid!r} has an empty label")
            low = label.lower()
            if low in labels_seen:
                raise OntologyError(
                    f"line {lineno}: label {label!r} already used by concept {labels_seen[low]!r}"
                )
            labels_seen[low] = cid
            concepts[cid] = Concept(id=cid, label=label, synonyms=synonyms)
        elif kind == "rel":
            if len(parts) != 4:
                raise OntologyError(f"line {lineno}: rel needs name, source and target")
            name, src, dst = parts[1], parts[2], parts[3]
            for endpoint in (src, dst):
                if endpoint not in concepts:
                    raise OntologyError(
                        f"line {lineno}: relation {name!r} references undeclared concept {endpoint!r}"
                    )
            relations.add(Relation(name=name, source=src, target=dst))
        elif kind == "axiom":
            if len(parts) != 4 or parts[1] not in ("subsumes", "disjoint"):
                raise OntologyError(
                    f"line {lineno}: axiom needs 'subsumes'|'disjoint' and two concept ids"
                )
            a, b = parts[2], parts[3]
            for operand in (a, b):
                if operand not in concepts:
                    raise OntologyError(
                        f"line {lineno}: axiom references undeclared concept {operand!r}"
                    )
            axioms.add(Axiom(kind="SUBSUMPTION" if parts[1] == "subsumes" else "DISJOINT", operands=(a, b)))
        else:
            raise OntologyError(f"line {lineno}: unknown declaration {kind!r}")

    onto = Ontology(concepts=concepts, relations=frozenset(relations), axioms=frozenset(axioms))
    cycle = _subsumption_cycle(onto)
    if cycle:
        raise OntologyError("subsumption cycle: " + " -> ".join(cycle))
    return onto


def _subsumption_cycle(onto: Ontology) -> list[str] | None:
    """Return one subsumption cycle if any exists (iterative DFS)."""
    edges: dict[str, list[str]] = {}
    for ax in onto.axioms:
        if ax.kind == "SUBSUMPTION":
            sup, sub = ax.operands
            edges.setdefault(sup, []).append(sub)
    for outs in edges.values():
        outs.sort()
    state: dict[str, int] = {}  # 1 = on stack, 2 = done
    for root in sorted(edges):
        if state.get(root):
            continue
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(edges.get(root, ())))]
        path = [root]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state.get(nxt) == 1:
                    return path[path.index(nxt):] + [nxt]
                if not state.get(nxt):
                    state[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(edges.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                path.pop()
                stack.pop()
    return None


def serialize_ontology(onto: Ontology) -> str:
    """Canonical text form; load(serialize(x)) == x."""
    lines = []
    for cid in sorted(onto.concepts):
        c = onto.concepts[cid]
        line = f'concept {c.id} "{c.label}"'
        if c.synonyms:
            line += " syn " + " ".join(f'"{s}"' for s in c.synonyms)
        lines.append(line)
    for rel in sorted(onto.relations, key=lambda r: (r.name, r.source, r.target)):
        lines.append(f"rel {rel.name} {rel.source} {rel.target}")
    for ax in sorted(onto.axioms, key=lambda a: (a.kind, a.operands)):
        word = "subsumes" if ax.kind == "SUBSUMPTION" else "disjoint"
        lines.append(f"axiom {word} {ax.operands[0]} {ax.operands[1]}")
    return "\n".join(lines) + "\n"


def concept_lookup(onto: Ontology, term: str) -> list[Concept]:
    """Concepts matching a lemma: exact label first, then synonyms."""
    needle = term.lower()
    by_label = [c for c in onto.concepts.values() if c.label.lower() == needle]
    by_label.sort(key=lambda c: c.id)
    by_syn = [
        c for c in onto.concepts.values()
        if c.id not in {m.id for m in by_label}
        and any(s.lower() == needle for s in c.synonyms)
    ]
    by_syn.sort(key=lambda c: c.id)
    return by_label + by_syn


# ---------------------------------------------------------------------------
# common-sense knowledge base

@dataclass(frozen=True)
class CskTriple:
    subject: str
    relation: str
    object: str
    confidence: float


class Cskb:
    """Lemma-indexed immutable triple store."""

    def __init__(self, triples: Iterable[CskTriple]):
        best: dict[tuple[str, str, str], CskTriple] = {}
        for t in triples:
            key = (t.subject, t.relation, t.object)
            if key not in best or t.confidence > best[key].confidence:
                best[key] = t
        self._by_subject: dict[str, list[CskTriple]] = {}
        for t in best.values():
            self._by_subject.setdefault(t.subject, []).append(t)
        for rows in self._by_subject.values():
            rows.sort(key=lambda t: (-t.confidence, t.object, t.relation))

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_subject.values())

    @property
    def subject_count(self) -> int:
        return len(self._by_subject)

    def all_triples(self) -> list[CskTriple]:
        out: list[CskTriple] = []
        for subject in sorted(self._by_subject):
            out.extend(self._by_subject[subject])
        return out

    def query(self, subject: str, relation: Optional[str] = None) -> list[CskTriple]:
        rows = self._by_subject.get(subject.lower(), [])
        if relation is not None:
            rows = [t for t in rows if t.relation == relation]
        return list(rows)

    def __contains__(self, triple: CskTriple) -> bool:
        return triple in self._by_subject.get(triple.subject, [])


def load_cskb(source: str | IO) -> Cskb:
    triples = []
    for lineno, raw in enumerate(_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise CskbError(f"line {lineno}: expected subject<TAB>relation<TAB>object<TAB>confidence")
        subject, relation, obj, conf_s = (p.strip() for p in parts)
        if not subject or not relation or not obj:
            raise CskbError(f"line {lineno}: empty field")
        try:
            confidence = float(conf_s)
        except ValueError:
            raise CskbError(f"line {lineno}: confidence {conf_s!r} is not a number") from None
        if not 0.0 <= confidence <= 1.0:
            raise CskbError(f"line {lineno}: confidence {confidence} outside [0, 1]")
        triples.append(
            CskTriple(subject.lower(), relation, obj.lower(), confidence)
        )
    return Cskb(triples)


def serialize_cskb(kb: Cskb) -> str:
    lines = [
        f"{t.subject}\t{t.relation}\t{t.object}\t{t.confidence:g}"
        for t in sorted(kb.all_triples(), key=lambda t: (t.subject, t.relation, t.object))
    ]
    return "\n".join(lines) + "\n"


def query_cskb(kb: Cskb, subject: str, relation: Optional[str] = None) -> list[CskTriple]:
    return kb.query(subject, relation)


# ---------------------------------------------------------------------------
# ambiguity lexicon

@dataclass(frozen=True)
class AmbiguityEntry:
    lemma: str
    pos_classes: frozenset[str]
    sense_count: int
    gloss_summaries: tuple[str, ...]


class AmbiguityLexicon:
    def __init__(self, entries: Iterable[AmbiguityEntry]):
        self._entries = {e.lemma: e for e in entries}

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, lemma: str) -> AmbiguityEntry | None:
        return self._entries.get(lemma)

    def entries(self) -> list[AmbiguityEntry]:
        return [self._entries[k] for k in sorted(self._entries)]

    def sense_count(self, lemma: str, pos: str) -> int:
        entry = self._entries.get(lemma)
        if entry is None or pos not in entry.pos_classes:
            return 0
        return entry.sense_count


def load_ambiguity_lexicon(source: str | IO) -> AmbiguityLexicon:
    entries = []
    for lineno, raw in enumerate(_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise LexiconError(
                f"ambiguity lexicon line {lineno}: expected lemma<TAB>pos<TAB>count<TAB>glosses"
            )
        lemma = parts[0].strip().lower()
        classes = frozenset(p.strip().upper() for p in parts[1].split(",") if p.strip())
        if not classes or not classes <= set(AMBIGUITY_POS_CLASSES):
            raise LexiconError(f"ambiguity lexicon line {lineno}: bad pos classes {parts[1]!r}")
        try:
            count = int(parts[2])
        except ValueError:
            raise LexiconError(f"ambiguity lexicon line {lineno}: bad sense count") from None
        glosses = tuple(g.strip() for g in parts[3].split("|") if g.strip())
        if count < 1 or count != len(glosses):
            raise LexiconError(
                f"ambiguity lexicon line {lineno}: sense count {count} != {len(glosses)} glosses"
            )
        entries.append(AmbiguityEntry(lemma, classes, count, glosses))
    return AmbiguityLexicon(entries)


def sense_count(lexicon: AmbiguityLexicon, lemma: str, pos: str) -> int:
    return lexicon.sense_count(lemma, pos)


# ---------------------------------------------------------------------------
# flat word / phrase lexicons

def load_phrase_lexicon(source: str | IO) -> tuple[tuple[str, ...], ...]:
    """One lemma phrase per line; returns lemma tuples, longest first."""
    phrases = set()
    for raw in _text(source).splitlines():
        line = raw.strip().lower()
        if not line or line.startswith("#"):
            continue
        phrases.add(tuple(line.split()))
    return tuple(sorted(phrases, key=lambda p: (-len(p), p)))


def load_word_set(source: str | IO) -> frozenset[str]:
    words = set()
    for raw in _text(source).splitlines():
        line = raw.strip().lower()
        if not line or line.startswith("#"):
            continue
        words.add(line)
    return frozenset(words)
