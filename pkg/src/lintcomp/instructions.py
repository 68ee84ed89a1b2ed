"""Linter documentation compiled into DSL configuration instructions.

Each configuration becomes a :class:`ConfigInstruction`: general rules taken
from the description sentences that state rules, and one
:class:`OptionInstruction` per option. The option branch follows the corpus
data: a finite value range gets one rule per literal, an option flagged as
specifying checked objects gets a rule whose objects are ``{option}``, and any
other unbounded option gets a rule holding ``{option}`` as its value.
"""

from __future__ import annotations

import enum
import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from . import prompts
from .corpus import CorpusIOError, LinterConfigDoc, OptionDoc, SchemaError, write_json
from .dsl import DslError, DslRule, find_placeholders, format_rule, parse_rule
from .llm import Gateway, LlmError, LlmFormatError, render
from .responses import (
    parse_classification, parse_dsl_lines, parse_value_rules, salvage_dsl_lines, scan_dsl_lines,
)

log = logging.getLogger(__name__)


class OptionKind(str, enum.Enum):
    PER_VALUE = "per_value"
    PLACEHOLDER = "placeholder"
    OBJECT_SELECTOR = "object_selector"


def option_kind(opt: OptionDoc) -> OptionKind:
    if opt.value_range.is_finite:
        return OptionKind.PER_VALUE
    if opt.specifies_checked_objects:
        return OptionKind.OBJECT_SELECTOR
    return OptionKind.PLACEHOLDER


def placeholder_key(option_name: str) -> str:
    return "{" + option_name + "}"


@dataclass(frozen=True)
class OptionInstruction:
    option_name: str
    kind: OptionKind
    # per_value: literal -> rule; otherwise a single "{option}" -> rule entry
    rules: tuple[tuple[str, DslRule], ...]
    # carried from the option doc so later stages can validate values without the docs file
    data_type: str = "string"

    def __post_init__(self) -> None:
        if not self.rules:
            raise ValueError(f"option {self.option_name}: no rules")
        if self.kind is not OptionKind.PER_VALUE:
            if len(self.rules) != 1 or self.rules[0][0] != placeholder_key(self.option_name):
                raise ValueError(f"option {self.option_name}: expected a single placeholder rule")
            if find_placeholders(self.rules[0][1]) != [self.option_name]:
                raise ValueError(f"option {self.option_name}: rule must hold exactly {{{self.option_name}}}")

    @property
    def rule_map(self) -> dict[str, DslRule]:
        return dict(self.rules)

    @property
    def rule(self) -> DslRule:
        """The placeholder rule of a placeholder or object_selector option."""
        if self.kind is OptionKind.PER_VALUE:
            raise TypeError("per_value options have one rule per literal")
        return self.rules[0][1]

    def rule_for(self, value: str) -> DslRule | None:
        if self.kind is OptionKind.PER_VALUE:
            return self.rule_map.get(value)
        return self.rule


@dataclass(frozen=True)
class ConfigInstruction:
    config_name: str
    general_rules: tuple[DslRule, ...]
    option_instructions: tuple[OptionInstruction, ...] = ()
    linter: str = "checkstyle"

    def option(self, name: str) -> OptionInstruction | None:
        for oi in self.option_instructions:
            if oi.option_name == name:
                return oi
        return None


@dataclass
class InstructionSet:
    linter: str
    instructions: dict[str, ConfigInstruction]
    manifest: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.instructions)

    def __contains__(self, name: str) -> bool:
        return name in self.instructions

    def __getitem__(self, name: str) -> ConfigInstruction:
        return self.instructions[name]

    @property
    def names(self) -> list[str]:
        return list(self.instructions)

    def to_json(self) -> dict:
        return {
            "version": 1,
            "linter": self.linter,
            "manifest": self.manifest,
            "instructions": [
                {
                    "config_name": ci.config_name,
                    "general_rules": [format_rule(r) for r in ci.general_rules],
                    "options": [
                        {"option_name": oi.option_name, "kind": oi.kind.value,
                         "data_type": oi.data_type,
                         "rules": {k: format_rule(r) for k, r in oi.rules}}
                        for oi in ci.option_instructions
                    ],
                }
                for ci in self.instructions.values()
            ],
        }

    @property
    def digest(self) -> str:
        text = json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    def save(self, path: str | Path) -> None:
        write_json(self.to_json(), path)

    @classmethod
    def from_json(cls, raw: Mapping) -> "InstructionSet":
        if not isinstance(raw, Mapping) or raw.get("version") != 1:
            raise SchemaError("version", "expected 1")
        linter = raw.get("linter")
        if not isinstance(linter, str):
            raise SchemaError("linter", "expected string")
        out: dict[str, ConfigInstruction] = {}
        for i, entry in enumerate(raw.get("instructions", [])):
            where = f"instructions[{i}]"
            try:
                name = entry["config_name"]
                general = tuple(parse_rule(t) for t in entry["general_rules"])
                options = tuple(
                    OptionInstruction(o["option_name"], OptionKind(o["kind"]),
                                      tuple((k, parse_rule(t)) for k, t in o["rules"].items()),
                                      o.get("data_type", "string"))
                    for o in entry["options"]
                )
            except (KeyError, TypeError, AttributeError) as exc:
                raise SchemaError(where, f"malformed entry ({exc})") from exc
            except (DslError, ValueError) as exc:
                raise SchemaError(where, str(exc)) from exc
            if name in out:
                raise SchemaError(f"{where}.config_name", f"duplicate {name!r}")
            out[name] = ConfigInstruction(name, general, options, linter)
        return cls(linter, out, dict(raw.get("manifest", {})))

    @classmethod
    def load(cls, path: str | Path) -> "InstructionSet":
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CorpusIOError(str(exc)) from exc
        except json.JSONDecodeError as exc:
            raise SchemaError("<root>", f"invalid JSON: {exc}") from exc
        return cls.from_json(raw)


@dataclass
class BuildReport:
    instruction_set: InstructionSet
    failures: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _repair(error: str) -> str:
    return render(prompts.REPAIR, {"error": error})


def _rules_text(rules: Iterable[DslRule]) -> str:
    text = "; ".join(format_rule(r) for r in rules)
    return text or "no general rule"


class InstructionBuilder:
    def __init__(self, gateway: Gateway):
        self.gw = gateway

    def classify_rule_sentences(self, doc: LinterConfigDoc) -> list[tuple[int, bool]]:
        if not doc.description_sentences:
            raise ValueError(f"{doc.config_name}: no description sentences to classify")
        numbered = "\n".join(f"{i}: {s}" for i, s in enumerate(doc.description_sentences))
        text = render(prompts.CLASSIFY, {"config_name": doc.config_name, "sentences": numbered})
        count = len(doc.description_sentences)
        verdicts, _ = self.gw.ask_parsed(
            text, lambda r: parse_classification(r, count),
            tag=f"classify:{doc.config_name}", repair=_repair)
        return list(enumerate(verdicts))

    def build_general_instruction(
        self, doc: LinterConfigDoc, verdicts: list[tuple[int, bool]] | None = None,
        warnings: list[str] | None = None,
    ) -> list[DslRule]:
        if verdicts is None:
            verdicts = self.classify_rule_sentences(doc)
        rules: list[DslRule] = []
        for idx, is_rule in verdicts:
            if not is_rule:
                continue
            text = render(prompts.GENERAL_RULE, {
                "grammar": prompts.DSL_GRAMMAR, "config_name": doc.config_name,
                "sentence": doc.description_sentences[idx],
            })
            tag = f"general:{doc.config_name}:{idx}"
            got, raw = self.gw.ask_parsed(text, parse_dsl_lines, tag=tag, repair=_repair,
                                          fallback=salvage_dsl_lines)
            dropped = scan_dsl_lines(raw).errors
            if dropped:
                log.warning("%s: dropped %d unparseable lines", tag, len(dropped))
                if warnings is not None:
                    warnings.extend(f"{tag}: dropped {e}" for e in dropped)
            rules.extend(r for r in got if r not in rules)
        return rules

    def build_option_instruction(
        self, doc: LinterConfigDoc, opt: OptionDoc, general_rules: Iterable[DslRule] = (),
    ) -> OptionInstruction:
        if doc.option(opt.option_name) != opt:
            raise ValueError(f"option {opt.option_name} does not belong to {doc.config_name}")
        kind = option_kind(opt)
        bindings = {
            "grammar": prompts.DSL_GRAMMAR, "config_name": doc.config_name,
            "general_rules": _rules_text(general_rules), "option_name": opt.option_name,
            "option_description": opt.description or opt.option_name,
        }
        tag = f"option:{doc.config_name}:{opt.option_name}"
        if kind is OptionKind.PER_VALUE:
            literals = opt.value_range.literals
            text = render(prompts.OPTION_VALUES, {**bindings, "values": ", ".join(literals)})
            mapping, _ = self.gw.ask_parsed(
                text, lambda r: parse_value_rules(r, literals), tag=tag, repair=_repair)
            return OptionInstruction(opt.option_name, kind, tuple(mapping.items()), opt.data_type)
        tpl = prompts.OPTION_OBJECTS if kind is OptionKind.OBJECT_SELECTOR else prompts.OPTION_PLACEHOLDER
        rule, _ = self.gw.ask_parsed(
            render(tpl, bindings), lambda r: _single_placeholder_rule(r, opt.option_name),
            tag=tag, repair=_repair)
        return OptionInstruction(opt.option_name, kind, ((placeholder_key(opt.option_name), rule),),
                                 opt.data_type)

    def build_config_instruction(
        self, doc: LinterConfigDoc, warnings: list[str] | None = None,
    ) -> ConfigInstruction:
        warnings = warnings if warnings is not None else []
        general: list[DslRule] = []
        if doc.description_sentences:
            general = self.build_general_instruction(doc, warnings=warnings)
        options = []
        for opt in doc.options:
            try:
                options.append(self.build_option_instruction(doc, opt, general))
            except LlmFormatError as exc:
                warnings.append(f"{doc.config_name}.{opt.option_name}: option dropped ({exc})")
        return ConfigInstruction(doc.config_name, tuple(general), tuple(options), doc.linter)

    def build_instruction_set(self, docs: Iterable[LinterConfigDoc]) -> BuildReport:
        docs = list(docs)
        if not docs:
            raise ValueError("no linter docs to build from")
        linters = {d.linter for d in docs}
        if len(linters) != 1:
            raise ValueError(f"docs mix linters: {sorted(linters)}")

        def one(doc: LinterConfigDoc):
            warnings: list[str] = []
            try:
                return doc.config_name, self.build_config_instruction(doc, warnings), None, warnings
            except LlmError as exc:
                return doc.config_name, None, str(exc), warnings

        instructions: dict[str, ConfigInstruction] = {}
        report = BuildReport(InstructionSet(linters.pop(), instructions))
        for name, ci, error, warnings in self.gw.map(one, docs):
            report.warnings.extend(warnings)
            if error is not None:
                report.failures[name] = error
                log.warning("instruction build failed for %s: %s", name, error)
            else:
                instructions[name] = ci
        report.instruction_set.manifest = {
            "model_id": self.gw.model_id,
            "templates": prompts.template_hashes(),
            "configs": len(docs),
            "failed": sorted(report.failures),
        }
        return report


def _single_placeholder_rule(text: str, option_name: str) -> DslRule:
    rules = parse_dsl_lines(text, allow_none=False)
    if len(rules) != 1:
        raise LlmFormatError(f"expected exactly one rule, got {len(rules)}")
    found = find_placeholders(rules[0])
    if found != [option_name]:
        raise LlmFormatError(f"rule must contain the placeholder {{{option_name}}} and no other; found {found}")
    return rules[0]
