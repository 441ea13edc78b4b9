import numpy as np
import pytest
from hypothesis import settings

from gemmlab.hwdesc import load_machine
from gemmlab.microkernel import register_machine

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def carmel():
    return load_machine("carmel")


@pytest.fixture(scope="session")
def epyc():
    return load_machine("epyc7282")


@pytest.fixture(scope="session")
def all_kernels(carmel, epyc):
    """Every registered kernel: both machines' ranked entries plus the generic fallbacks."""
    seen, out = set(), []
    for hier in (carmel, epyc):
        for entry in register_machine(hier):
            key = (entry.shape, entry.kind)
            if key not in seen:
                seen.add(key)
                out.append(entry)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion reported in the summary")


def pytest_runtest_logreport(report):
    name = report.user_properties and dict(report.user_properties).get("criterion")
    if not name:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.passed:
            outcome = dict(report.user_properties).get("label", "PASS")
        elif report.skipped and hasattr(report, "wasxfail"):
            outcome = "XFAIL"
        elif report.skipped:
            outcome = "SKIP"
        else:
            outcome = "FAIL"
        prev = _ACCEPTANCE.get(name)
        if prev is None or prev == "PASS":
            _ACCEPTANCE[name] = outcome
        extra = dict(report.user_properties).get("detail")
        if extra:
            _ACCEPTANCE[name + "::detail"] = extra


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        if name.endswith("::detail"):
            continue
        line = f"{outcome:5s} {name}"
        detail = _ACCEPTANCE.get(name + "::detail")
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
