import json

import pytest

from somali_lemma.data import data_path
from somali_lemma.lexicon import Lexicon, load_lexicon
from somali_lemma.preprocess import StopwordList, default_stopwords
from somali_lemma.rules import load_rules

EXAMPLE_1 = {"cab": ["caba", "cabay", "cabeen", "caba", "cab"]}
EXAMPLE_2 = {"bariis": ["bariis", "bariiska"]}
EXAMPLE_3 = "Waxaan kula taliyey inuu casriyeeyo xirfadihiisa shaqo."


@pytest.fixture
def write_json(tmp_path):
    def write(obj, name="lexicon.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj, ensure_ascii=False), encoding="utf-8")
        return path
    return write


@pytest.fixture(scope="session")
def bundled_lexicon() -> Lexicon:
    return load_lexicon(data_path("lexicon.json"))


@pytest.fixture(scope="session")
def bundled_rules():
    return load_rules(data_path("rules.tsv"))


@pytest.fixture(scope="session")
def bundled_stopwords() -> StopwordList:
    return default_stopwords()


_acceptance_results = []
_acceptance_notes = []


@pytest.fixture
def acceptance_note():
    """Collect informational lines shown under the acceptance summary."""
    return _acceptance_notes.append


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "acceptance" in report.keywords:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        mark = {"passed": "PASS", "skipped": "SKIP"}.get(outcome, "FAIL")
        terminalreporter.write_line(f"{mark}  {name}")
    for note in _acceptance_notes:
        terminalreporter.write_line(f"      {note}")
