import numpy as np
import pytest

from orthoreg import PointCloud


@pytest.fixture
def five_points_xy():
    """Five 2D points whose classical and orthogonal fits are known in closed form."""
    return np.array([1.0, 3.0, 4.0, 5.0, 7.0]), np.array([4.0, 2.0, 6.0, 8.0, 5.0])


@pytest.fixture
def five_points_cloud(five_points_xy):
    x, y = five_points_xy
    return PointCloud(np.column_stack([x, y]))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome == "passed":
                continue
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "::" in nodeid:
                rows.append((nodeid.split("::")[-1], outcome))
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in sorted(set(rows)):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
