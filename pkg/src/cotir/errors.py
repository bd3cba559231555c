"""Exception hierarchy shared across the toolchain."""


class CotirError(Exception):
    """Base class for all errors raised by this package."""


class IngestError(CotirError):
    """Requirements document could not be parsed or decoded."""


class ConfigError(CotirError):
    """Missing or invalid configuration / resource files."""


class OntologyError(CotirError):
    """Ontology file violates the format or its invariants."""


class CskbError(CotirError):
    """Knowledge-base triple file violates the format or its invariants."""


class LexiconError(CotirError):
    """Lexicon file violates the format or its invariants."""


class EvalError(CotirError):
    """Evaluation inputs are inconsistent (e.g. document mismatch)."""


class ReviewError(CotirError):
    """Review service state (report or decision log) is invalid."""
