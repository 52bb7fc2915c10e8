import sys

from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Lines recorded by test_acceptance.py, echoed in the terminal summary so
# they survive output capture.
ACCEPTANCE_LINES = []

# The combinators recurse once per element; payloads of a few hundred
# characters need more than the default limit.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
