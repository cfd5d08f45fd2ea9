from __future__ import annotations

import pytest

from typeflow.corpus import load_corpus
from typeflow.generate import GeneratorConfig, generate_synthetic

# One pass/fail line per acceptance criterion, printed at the end of the run.
_ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or report.when != "call":
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"[{outcome}] {name}")


@pytest.fixture(scope="session")
def demo_corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("demo_corpus")
    config = GeneratorConfig(
        typist_count=4,
        sessions_per_typist=3,
        words_per_session=70,
        base_rate_cps=(2.5, 7.0),
        word_initial_pause_factor=2.5,
        revision_probability=0.1,
    )
    generate_synthetic(config, seed=424242, out_dir=out)
    return out


@pytest.fixture(scope="session")
def demo_corpus(demo_corpus_dir):
    return load_corpus(demo_corpus_dir / "manifest.json")
