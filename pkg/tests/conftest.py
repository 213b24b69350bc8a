import support


def pytest_terminal_summary(terminalreporter):
    if support.ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(support.ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
