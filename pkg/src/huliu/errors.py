"""Shared error types and the violation record used by every validator."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One failed axiom: a stable code, the first failing tuple, and prose.

    Witnesses are minimal in the sense that each axiom is scanned in
    row-major order and the first failing tuple is reported, so regression
    tests can pin them.
    """

    code: str
    witness: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.code} at {self.witness}: {self.message}"


class WorkbenchError(Exception):
    """Base class; `code` is a stable machine-readable identifier."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class InputError(WorkbenchError):
    """Precondition or usage failure (malformed input, bad subset, bad flag).

    The CLI maps these to exit code 2.
    """


class ValidationFailure(WorkbenchError):
    """A structure failed axiom validation; carries the full violation list.

    The CLI maps these to exit code 1.
    """

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:3])
        more = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__("validation-failed", head + more)


class TheoremAlarm(WorkbenchError):
    """A state that contradicts a proved fact (e.g. no lying-over witness).

    Never raised on valid input; carries a diagnostic dump for bug reports.
    """

    def __init__(self, code: str, message: str, dump: str = ""):
        super().__init__(code, message if not dump else f"{message}\n{dump}")
        self.dump = dump
