"""Check outcomes shared by the identity checks and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .series import Discrepancy


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    HOLDS = "conjecture-holds-to-order"
    COUNTEREXAMPLE = "counterexample"


THEOREM_STATUSES = (Status.PASS, Status.FAIL)
CONJECTURE_STATUSES = (Status.HOLDS, Status.COUNTEREXAMPLE)


@dataclass
class CheckReport:
    check_id: str
    order: int
    status: Status
    first_discrepancy: Discrepancy | None = None
    witnesses: list[int] | None = None
    runtime_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.status = Status(self.status)
        if (self.status is Status.FAIL) != (self.first_discrepancy is not None):
            raise ValueError(
                f"{self.check_id}: a discrepancy is required exactly when status is fail")

    @property
    def ok(self) -> bool:
        return self.status in (Status.PASS, Status.HOLDS)

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "check_id": self.check_id,
            "order": self.order,
            "status": self.status.value,
        }
        if self.first_discrepancy is not None:
            e, lhs, rhs = self.first_discrepancy
            d["first_discrepancy"] = {
                "exponent": e,
                "lhs": _rational(lhs),
                "rhs": _rational(rhs),
            }
        if self.witnesses is not None:
            d["witnesses"] = list(self.witnesses)
        if self.details:
            d["details"] = _jsonable(self.details)
        d["runtime_ms"] = round(self.runtime_ms, 3)
        return d


def _rational(x) -> dict:
    x = Fraction(x)
    return {"numerator": x.numerator, "denominator": x.denominator}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return _rational(x)
    if isinstance(x, Enum):
        return x.value
    return x


def theorem_status(ok: bool) -> Status:
    return Status.PASS if ok else Status.FAIL


def conjecture_status(ok: bool) -> Status:
    return Status.HOLDS if ok else Status.COUNTEREXAMPLE


@contextmanager
def timed():
    """Yields a one-element list that receives the elapsed milliseconds."""
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = (time.perf_counter() - t0) * 1000.0
