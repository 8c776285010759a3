"""Law-check reports and finite grid specifications.

Every executable law check in the package returns a :class:`LawReport`.
A pass means "no counterexample found at the given resolution", never a
proof over the full carrier; reports carry that caveat in ``detail``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class GridSpec:
    """Finite enumeration grid: components range over {0, 1/m, ..., 1}.

    ``kind`` selects the carrier ('scalar' | 'interval' | 'vector'),
    ``n`` is the arity used by operator-level checks, ``dim`` the vector
    dimension, and ``bounds`` optionally restricts components to a
    subrange of [0, 1].
    """

    kind: str
    m: int
    n: int = 3
    dim: int = 2
    bounds: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("grid step denominator must be >= 1")
        if self.kind not in ("scalar", "interval", "vector"):
            raise ValueError(f"unknown carrier kind: {self.kind!r}")
        lo, hi = self.bounds
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValueError("bounds must satisfy 0 <= lo <= hi <= 1")

    def unit_values(self) -> list[float]:
        """Grid points of [0, 1] at resolution m, filtered by bounds."""
        lo, hi = self.bounds
        return [i / self.m for i in range(self.m + 1) if lo - 1e-12 <= i / self.m <= hi + 1e-12]


@dataclass
class LawReport:
    """Outcome of one law check.

    ``witness`` is present exactly when ``verdict == 'fail'`` and holds
    enough structure to replay the violation through public operations.
    """

    law: str
    verdict: str
    witness: Optional[dict] = None
    checked: int = 0
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        payload = {
            "law": self.law,
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
            "checked": self.checked,
            "elapsed": round(self.elapsed, 6),
        }
        detail = dict(self.detail)
        if "n" in detail:
            payload["n"] = detail.pop("n")
        payload["detail"] = _jsonable(detail)
        return payload


def _jsonable(obj: Any) -> Any:
    """Recursively convert report payloads (elements, tuples) to JSON-ready values."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    to_json = getattr(obj, "to_json", None)
    if callable(to_json):
        return to_json()
    return repr(obj)


def passed_report(law: str, checked: int, elapsed: float, **detail) -> LawReport:
    return LawReport(law=law, verdict="pass", witness=None, checked=checked,
                     elapsed=elapsed, detail=detail)


def failed_report(law: str, witness: dict, checked: int, elapsed: float, **detail) -> LawReport:
    return LawReport(law=law, verdict="fail", witness=witness, checked=checked,
                     elapsed=elapsed, detail=detail)
