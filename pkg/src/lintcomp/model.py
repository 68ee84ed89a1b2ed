"""Configuration records passed between the pipeline, emitters and eval."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .dsl import DslRule, format_rule, parse_rule

CHECKS = ("rule_type", "objects", "semantics")


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Assignment:
    option_name: str
    value: str
    matched_rule: DslRule | None = None
    data_type: str = "string"

    def to_json(self) -> dict:
        return {
            "option_name": self.option_name,
            "value": self.value,
            "data_type": self.data_type,
            "matched_rule": format_rule(self.matched_rule) if self.matched_rule else None,
        }

    @classmethod
    def from_json(cls, raw: dict) -> "Assignment":
        rule = raw.get("matched_rule")
        return cls(raw["option_name"], raw["value"], parse_rule(rule) if rule else None,
                   raw.get("data_type", "string"))


@dataclass(frozen=True)
class CandidateConfiguration:
    config_name: str
    assignments: tuple[Assignment, ...] = ()
    matched_general_rules: tuple[DslRule, ...] = ()
    # 1-based index of the standard's rule this candidate was matched against
    standard_rule_index: int | None = None

    def to_json(self) -> dict:
        return {
            "config_name": self.config_name,
            "standard_rule_index": self.standard_rule_index,
            "assignments": [a.to_json() for a in self.assignments],
            "matched_general_rules": [format_rule(r) for r in self.matched_general_rules],
        }

    @classmethod
    def from_json(cls, raw: dict) -> "CandidateConfiguration":
        return cls(
            raw["config_name"],
            tuple(Assignment.from_json(a) for a in raw.get("assignments", [])),
            tuple(parse_rule(r) for r in raw.get("matched_general_rules", [])),
            raw.get("standard_rule_index"),
        )


@dataclass(frozen=True)
class AlignedConfiguration:
    candidate: CandidateConfiguration
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    accepted: bool = False
    notes: dict[str, str] = field(default_factory=dict)

    @classmethod
    def judged(cls, candidate: CandidateConfiguration, verdicts: dict[str, Verdict],
               notes: dict[str, str] | None = None) -> "AlignedConfiguration":
        accepted = all(verdicts.get(c) is Verdict.PASS for c in CHECKS)
        return cls(candidate, dict(verdicts), accepted, dict(notes or {}))

    @classmethod
    def unchecked(cls, candidate: CandidateConfiguration) -> "AlignedConfiguration":
        """Accepted without checking; verdicts are recorded as skipped."""
        return cls(candidate, {c: Verdict.SKIPPED for c in CHECKS}, True, {})

    @classmethod
    def accept(cls, config_name: str, assignments: dict[str, str] | None = None,
               data_types: dict[str, str] | None = None) -> "AlignedConfiguration":
        """Shortcut for building already-accepted configurations, e.g. from gold."""
        data_types = data_types or {}
        assigns = tuple(Assignment(k, v, None, data_types.get(k, "string"))
                        for k, v in (assignments or {}).items())
        return cls(CandidateConfiguration(config_name, assigns),
                   {c: Verdict.PASS for c in CHECKS}, True, {})

    @property
    def config_name(self) -> str:
        return self.candidate.config_name

    @property
    def assignments(self) -> tuple[Assignment, ...]:
        return self.candidate.assignments

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate.to_json(),
            "verdicts": {k: v.value for k, v in self.verdicts.items()},
            "accepted": self.accepted,
            "notes": self.notes,
        }

    @classmethod
    def from_json(cls, raw: dict) -> "AlignedConfiguration":
        return cls(
            CandidateConfiguration.from_json(raw["candidate"]),
            {k: Verdict(v) for k, v in raw.get("verdicts", {}).items()},
            bool(raw.get("accepted")),
            dict(raw.get("notes", {})),
        )
