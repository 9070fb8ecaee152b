import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from kix import corpus  # noqa: E402

DATA = Path(__file__).parent / "data"
RANDOM_SEED = 2024

settings.register_profile("fixed", derandomize=True, deadline=None, max_examples=60,
                          print_blob=True)
settings.load_profile("fixed")


@pytest.fixture(scope="session")
def exhaustive10():
    return corpus.exhaustive_corpus(10)


@pytest.fixture(scope="session")
def random1000():
    return corpus.random_corpus(1000, RANDOM_SEED, max_vertices=60)


@pytest.fixture(scope="session")
def named_graphs():
    return {
        "k4": corpus.k4(), "cube": corpus.cube(), "dodecahedron": corpus.dodecahedron(),
        "truncated-icosahedron": corpus.truncated_icosahedron(), "prism5": corpus.prism(5),
        "c7": corpus.cycle(7), "digon": corpus.digon(), "p4": corpus.path(4),
        "star3": corpus.star(3),
    }


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _ACCEPTANCE.items():
        label = name.removeprefix("test_").replace("_", "-")
        terminalreporter.write_line(f"{verdict}  {label}")
