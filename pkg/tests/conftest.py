import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import ACCEPTANCE  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[crit]
        ok = all(p for _, p, _ in parts)
        failed = [f"{label}: {detail}" for label, p, detail in parts if not p]
        tail = "" if ok else "  (failed " + "; ".join(failed) + ")"
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}{tail}")
