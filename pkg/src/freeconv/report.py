"""Verdict reports: the serialisable outcome of every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import rat_to_str
from .roots import DEFAULT_EPS, Trilean


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one verifier run.

    ``inputs`` holds the exact, JSON-ready inputs so a report can be replayed;
    ``witness`` is filled only for certified violations.
    """

    statement: str
    inputs: dict
    verdict: Trilean
    witness: dict | None = None
    eps: Fraction = DEFAULT_EPS
    seed: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.verdict.is_true:
            return "verified"
        if self.verdict.is_false:
            return "violated"
        return "indeterminate"

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "statement": self.statement,
            "inputs": self.inputs,
            "verdict": self.verdict.to_json(),
            "status": self.status,
            "eps": rat_to_str(self.eps),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out

    @classmethod
    def from_json(cls, obj: dict) -> VerdictReport:
        return cls(
            statement=obj["statement"],
            inputs=obj["inputs"],
            verdict=Trilean.from_json(obj["verdict"]),
            witness=obj.get("witness"),
            eps=Fraction(obj.get("eps", rat_to_str(DEFAULT_EPS))),
            seed=obj.get("seed"),
            details=obj.get("details", {}),
        )
