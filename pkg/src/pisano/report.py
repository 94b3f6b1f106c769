"""Structured results for verification and census sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Counterexample:
    inputs: dict[str, Any]
    expected: Any
    actual: Any

    def to_dict(self) -> dict[str, Any]:
        return {"inputs": self.inputs, "expected": self.expected, "actual": self.actual}


@dataclass
class SweepReport:
    """Outcome of one verification or census run over a modulus window.

    ``status`` is "fail" exactly when counterexamples is nonempty; census
    runs report "census".  The census map sends each observed order value
    to its first witness modulus and total count.
    """

    claim_id: str
    params: dict[str, Any]
    lo: int
    hi: int
    status: str
    counterexamples: list[Counterexample] = field(default_factory=list)
    census: dict[int, dict[str, int]] | None = None

    @classmethod
    def from_scan(
        cls,
        claim_id: str,
        params: dict[str, Any],
        lo: int,
        hi: int,
        counterexamples: list[Counterexample],
        census: dict[int, dict[str, int]] | None = None,
    ) -> "SweepReport":
        if census is not None and not counterexamples:
            status = "census"
        else:
            status = "fail" if counterexamples else "pass"
        return cls(claim_id, params, lo, hi, status, counterexamples, census)

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "census")

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim_id,
            "params": self.params,
            "range": {"lo": self.lo, "hi": self.hi},
            "status": self.status,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "census": (
                {str(k): dict(v) for k, v in sorted(self.census.items())}
                if self.census is not None
                else None
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def merge_census(maps: list[dict[int, dict[str, int]]]) -> dict[int, dict[str, int]]:
    """Union partial census maps; order-independent."""
    merged: dict[int, dict[str, int]] = {}
    for part in maps:
        for value, entry in part.items():
            if value in merged:
                merged[value]["first"] = min(merged[value]["first"], entry["first"])
                merged[value]["count"] += entry["count"]
            else:
                merged[value] = dict(entry)
    return merged
