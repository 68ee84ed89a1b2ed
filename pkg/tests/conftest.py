from __future__ import annotations

import pytest

from lintcomp.corpus import data_path, load_coding_standards, load_linter_docs
from lintcomp.instructions import InstructionSet
from lintcomp.llm import Gateway, ReplayCache

FIXTURES = data_path("fixtures")
FIXTURE_MODEL = "fixture-scripted"
CACHE = FIXTURES / "replay_checkstyle.jsonl"


@pytest.fixture(scope="session")
def fixture_iset() -> InstructionSet:
    return InstructionSet.load(FIXTURES / "instructions_checkstyle.json")


@pytest.fixture(scope="session")
def fixture_standards():
    return load_coding_standards(FIXTURES / "java_standards.json")


@pytest.fixture(scope="session")
def fixture_docs():
    return load_linter_docs(FIXTURES / "checkstyle_docs.json")


@pytest.fixture(scope="session")
def replay_cache() -> ReplayCache:
    return ReplayCache(CACHE)


@pytest.fixture
def replay_gateway(replay_cache):
    def make(**kw) -> Gateway:
        return Gateway(mode="replay", cache=replay_cache, model_id=FIXTURE_MODEL, **kw)
    return make


# -- acceptance summary: one pass/fail line per criterion --------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


def pytest_itemcollected(item):
    # deselected criteria (the live one) still get a line
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        _criteria.setdefault(mark.args[0], (mark.args[1], "NOT RUN"))


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None and (report.when == "call" or report.outcome != "passed"):
        number, title = mark.args
        outcome = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        if _criteria.get(number, ("", ""))[1] != "FAIL":
            _criteria[number] = (title, outcome)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
