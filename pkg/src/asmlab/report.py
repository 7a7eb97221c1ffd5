"""Result records shared by every identity check."""

from __future__ import annotations

import time
import functools
from dataclasses import dataclass, field


class IdentityFailed(AssertionError):
    """A claimed identity does not hold; the message carries the witness."""


@dataclass
class Report:
    check: str
    n: int
    passed: bool
    witness: str | None = None
    seed: int | None = None
    elapsed_ms: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("a failing report needs a witness")

    def to_dict(self, timings: bool = False) -> dict:
        out = {"check": self.check, "n": self.n, "pass": self.passed, "witness": self.witness}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.details:
            out["details"] = self.details
        if timings:
            out["elapsedMs"] = self.elapsed_ms
        return out

    def raise_if_failed(self) -> "Report":
        if not self.passed:
            raise IdentityFailed(f"{self.check} n={self.n}: {self.witness}")
        return self


def timed(fn):
    """Stamp the returned :class:`Report` with its wall-clock duration."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        return report

    return wrapper
