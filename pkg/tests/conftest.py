import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wajsberg.constructors import Bijection, transport  # noqa: E402
from wajsberg.regression import ORDER8_MAPS, RECONSTRUCTIONS, nabla_1j_6, nabla_11_8, reconstruct  # noqa: E402


def build_named(name: str):
    """The algebra behind a printed name, rebuilt from chains, products and transports."""
    if name in RECONSTRUCTIONS:
        return reconstruct(name)
    if name.endswith("_6"):
        return nabla_1j_6(name.split("_")[1])
    if name == "nabla_12_8":
        base = nabla_11_8()
        return transport(base, Bijection.from_labels(base, ORDER8_MAPS["12"]))
    raise KeyError(name)


@pytest.fixture
def named():
    return build_named


# acceptance summary: one line per criterion, printed after the run
_ACCEPTANCE: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or report.when != "call" and report.outcome != "failed":
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    key = name.split("_")[2]
    _ACCEPTANCE.setdefault(key, []).append("PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=int):
        status = "PASS" if all(s == "PASS" for s in _ACCEPTANCE[key]) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} - {CRITERIA[int(key)]}")
