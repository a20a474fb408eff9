ACCEPTANCE_RESULTS = []


def record_acceptance(number: int, passed: bool):
    ACCEPTANCE_RESULTS.append((number, passed))


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, uncaptured so it always shows
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(
            f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'}"
        )
