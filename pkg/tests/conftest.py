import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (n, p, r') cases with n <= 3 and deg p <= 1, small enough for subset brute force
CORPUS = [
    (2, "1", 1),
    (2, "2", 2),
    (2, "3", 2),
    (2, "3", 3),
    (2, "4", 3),
    (2, "t+1", 1),
    (2, "2t+1", 2),
    (2, "2t+2", 2),
    (2, "2t+2", 3),
    (2, "3t", 3),
    (3, "1", 1),
    (3, "2", 2),
    (3, "3", 3),
    (3, "t+1", 1),
    (3, "t+2", 2),
    (3, "2t+1", 2),
    (3, "2t+2", 2),
    (3, "2t+2", 3),
    (3, "2t+3", 3),
]

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
