"""Line-oriented pass/fail reports used by every verification suite.

Rendering is deterministic plain text: one `PASS <label>` or
`FAIL <label> witness=<...>` line per assertion, then a summary line.
"""

from __future__ import annotations


class Report:
    def __init__(self, name: str):
        self.name = name
        self.lines: list[str] = []
        self.passed = 0
        self.failed = 0

    def check(self, label: str, ok: bool, witness: str = "") -> bool:
        if ok:
            self.passed += 1
            self.lines.append(f"PASS {label}")
        else:
            self.failed += 1
            suffix = f" witness={witness}" if witness else ""
            self.lines.append(f"FAIL {label}{suffix}")
        return ok

    def note(self, text: str) -> None:
        self.lines.append(text)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        summary = f"{self.name}: {self.passed} passed, {self.failed} failed"
        return "\n".join([*self.lines, summary])

    def __repr__(self) -> str:
        return f"Report({self.name!r}, passed={self.passed}, failed={self.failed})"
