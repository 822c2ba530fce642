import _report
from hypothesis import HealthCheck, settings

settings.register_profile(
    "swb",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("swb")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # re-emit the acceptance lines after the test table; captured stdout of
    # passing tests is otherwise swallowed
    if _report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _report.LINES:
            terminalreporter.write_line(line)
