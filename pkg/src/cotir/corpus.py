"""Requirements document ingestion.

A requirements document is plain UTF-8 text in one of two layouts:

* ``lines``    -- one requirement per non-empty line; ids are synthesized
  as ``R1``, ``R2``, ... in document order.
* ``numbered`` -- a line starting with an id token (``R1.2: ...``) opens a
  new requirement; lines without an id token continue the previous one.

Lines starting with ``#`` are comments in both layouts; the special
headers ``# doc: <id>`` and ``# title: <text>`` set document metadata.
"""

from __future__ import annotations

import io
import re
import unicodedata
from dataclasses import dataclass, field
from typing import IO, Union

from .errors import IngestError

_QUOTE_MAP = {
    "“": '"',
    "”": '"',
    "„": '"',
    "‘": "'",
    "’": "'",
    "‚": "'",
}

# id token: leading word ending in ':', e.g. "R1.2:" or "EMMON-3:"
_ID_LINE = re.compile(r"^(?P<id>[A-Za-z0-9][A-Za-z0-9._\-]*):\s?(?P<rest>.*)$")


def normalize(raw: str) -> str:
    """Normalize a piece of requirement text.

    Curly quotes become straight quotes, whitespace-like control
    characters become spaces, all other control characters are dropped,
    and whitespace runs collapse to a single space. Idempotent.
    """
    chars = []
    for ch in raw:
        if ch in _QUOTE_MAP:
            chars.append(_QUOTE_MAP[ch])
        elif ch in "\t\n\r\f\v":
            chars.append(" ")
        elif unicodedata.category(ch).startswith("C"):
            continue
        else:
            chars.append(ch)
    return re.sub(r"\s+", " ", "".join(chars)).strip()


@dataclass(frozen=True)
class Requirement:
    """One boundary-extracted requirement sentence (or sentence group)."""

    id: str
    text: str
    ordinal: int
    source_line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RequirementDoc:
    doc_id: str
    title: str
    requirements: tuple[Requirement, ...]

    def __len__(self) -> int:
        return len(self.requirements)

    def get(self, requirement_id: str) -> Requirement | None:
        for req in self.requirements:
            if req.id == requirement_id:
                return req
        return None

    @property
    def ids(self) -> list[str]:
        return [r.id for r in self.requirements]


def _as_text(source: Union[str, bytes, IO]) -> str:
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"input is not valid UTF-8: {exc}") from None
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return _as_text(data)
    return data


def load_requirements(
    source: Union[str, bytes, IO],
    format: str = "lines",
    doc_id: str = "doc",
) -> RequirementDoc:
    """Parse a requirements document from text, bytes or a stream."""
    if format not in ("lines", "numbered"):
        raise IngestError(f"unknown document format: {format!r}")
    text = _as_text(source)
    title = ""

    entries: list[tuple[str | None, str, int]] = []  # (explicit id, text, line no)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if body.lower().startswith("doc:"):
                doc_id = body[4:].strip() or doc_id
            elif body.lower().startswith("title:"):
                title = body[6:].strip()
            continue
        if format == "lines":
            cleaned = normalize(line)
            if cleaned:
                entries.append((None, cleaned, lineno))
            continue
        # numbered layout
        if not stripped:
            continue
        match = _ID_LINE.match(stripped)
        if match:
            entries.append((match.group("id"), normalize(match.group("rest")), lineno))
        elif entries:
            rid, prev, at = entries[-1]
            entries[-1] = (rid, normalize(prev + " " + stripped), at)
        else:
            raise IngestError(f"line {lineno}: continuation line before any requirement id")

    requirements = []
    seen: dict[str, int] = {}
    for ordinal, (rid, body, lineno) in enumerate(entries, start=1):
        rid = rid if rid is not None else f"R{ordinal}"
        if rid in seen:
            raise IngestError(
                f"line {lineno}: duplicate requirement id {rid!r} (first used on line {seen[rid]})"
            )
        seen[rid] = lineno
        requirements.append(Requirement(id=rid, text=body, ordinal=ordinal, source_line=lineno))
    return RequirementDoc(doc_id=doc_id, title=title, requirements=tuple(requirements))


def load_requirements_file(path: str, format: str = "lines", doc_id: str | None = None) -> RequirementDoc:
    with open(path, "rb") as fh:
        data = fh.read()
    if doc_id is None:
        name = path.rsplit("/", 1)[-1]
        doc_id = name.rsplit(".", 1)[0]
    return load_requirements(data, format=format, doc_id=doc_id)


def to_numbered(doc: RequirementDoc) -> str:
    """Serialize a document in the ``numbered`` layout (round-trips)."""
    out = io.StringIO()
    out.write(f"# doc: {doc.doc_id}\n")
    if doc.title:
        out.write(f"# title: {doc.title}\n")
    for req in doc.requirements:
        out.write(f"{req.id}: {req.text}\n")
    return out.getvalue()
