"""Shared pytest wiring: the acceptance-criterion verdict registry.

Tests record one PASS or FAIL verdict per criterion; the terminal
summary hook replays them after capture ends so the lines always land
in piped logs.
"""

criterion_results: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for k in sorted(criterion_results):
        terminalreporter.write_line(f"CRITERION {k} {criterion_results[k]}")
