def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  ({detail})")
