import numpy as np
import pytest

from canonriesz.edge import gaussian_test_image

_ACCEPTANCE_LINES = []


def relerr(x, y):
    x = np.asarray(x)
    y = np.asarray(y)
    return float(np.linalg.norm(x - y) / np.linalg.norm(y))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture(scope="session")
def gauss128():
    # 400 px / sigma 50 scaled to 128 px
    return gaussian_test_image(128, 16.0)


def random_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE_LINES.append(f"[{status}] criterion {marker.args[0]:>2}: {marker.kwargs.get('title', item.name)}")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
