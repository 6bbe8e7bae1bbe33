import os
import sys

import pytest

from hfplus.formulas import SURGERY_PAIRS, TABULATED_FAMILIES


def corpus_triples() -> list[tuple[int, int, int]]:
    """Every Brieskorn triple exercised by the acceptance grid, sorted and de-duplicated."""
    out = {f.triple(n) for f in TABULATED_FAMILIES for n in range(1, 5)}
    out |= {(p, q, p * q * n + s) for p, q in SURGERY_PAIRS for n in range(1, 4) for s in (-1, 1)}
    return sorted(out)


CORPUS = corpus_triples()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def run_cli(argv, capsys=None):
    """Run the CLI in-process; return (exit code, stdout, stderr)."""
    import io

    from hfplus.cli import run

    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
