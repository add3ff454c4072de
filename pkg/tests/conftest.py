import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

CORPUS = HERE / "corpus"
MANIFEST = json.loads((CORPUS / "manifest.json").read_text())["triangulations"]


def corpus_entries(kind=None):
    return [e for e in MANIFEST if kind is None or e["kind"] == kind]


def load(entry):
    from triwidth.trikernel import parse_triangulation

    return parse_triangulation((CORPUS / entry["file"]).read_text())


@pytest.fixture
def corpus_dir():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
