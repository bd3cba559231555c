import pytest

from cotir import defaults
from cotir.corpus import load_requirements
from cotir.detector import analyze


@pytest.fixture(scope="session")
def lexicons():
    return defaults.default_lexicons()


@pytest.fixture(scope="session")
def ontology():
    return defaults.default_ontology()


@pytest.fixture(scope="session")
def cskb():
    return defaults.default_cskb()


@pytest.fixture(scope="session")
def emmon_doc():
    text = defaults.data_path("emmon_srs.txt").read_text(encoding="utf-8")
    return load_requirements(text, format="numbered")


@pytest.fixture(scope="session")
def emmon_report(emmon_doc, ontology, cskb, lexicons):
    return analyze(emmon_doc, ontology, cskb, lexicons)


@pytest.fixture(scope="session")
def golden_flags():
    flags: dict[str, set[str]] = {}
    text = defaults.data_path("emmon_golden_flags.tsv").read_text(encoding="utf-8")
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        rid, trigger = line.split("\t")
        flags.setdefault(rid, set()).add(trigger)
    return flags
