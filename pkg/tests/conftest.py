"""Shared pytest hooks: a summary section with one line per acceptance
criterion, printed after any run that touched the acceptance module."""

import re

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_DESCRIPTIONS = {
    1: "closed-form class counts match bounded enumeration on the full grid",
    2: "exactly three classes over the square of segments",
    3: "segment-bundle parity rule at truncation order 1",
    4: "singleton absolute-value rule and order-1 congruence rule",
    5: "fold equivalences confirmed by bounded isomorphism search",
    6: "mirrored orientations stay distinct for unequal dimensions",
    7: "four odd-dimension segment-factor classes pairwise distinct",
    8: "closed-form validity agrees with brute force exhaustively",
    9: "graded ranks, torsion freeness, kernel span on random sample",
    10: "all built-in equivariance certificates verify",
}

_RESULTS = {}


def pytest_runtest_logreport(report):
    match = _PATTERN.search(report.nodeid)
    if not match:
        return
    num = int(match.group(1))
    if report.when == "call":
        outcome = "PASS" if report.passed else "FAIL"
        _RESULTS[num] = (outcome, report.duration)
    elif report.failed:
        _RESULTS[num] = ("FAIL", 0.0)
    elif report.skipped:
        _RESULTS[num] = ("SKIP", 0.0)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_RESULTS):
        outcome, duration = _RESULTS[num]
        terminalreporter.write_line(
            "[%s] criterion %2d (%6.2fs): %s"
            % (outcome, num, duration, _DESCRIPTIONS.get(num, ""))
        )
