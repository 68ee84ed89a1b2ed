"""Five-stage compilation of one natural-language standard into linter configurations.

1. parse the standard into DSL rules
2. select configuration names by matching rules against general instructions
3. choose options by matching rules against option instructions
4. check alignment: rule type and exact object matches locally, the rest by the model
5. render accepted configurations for each target

Ablation flags: ``no_dsl`` forwards the standard's text in place of DSL rules,
``no_selector`` offers every configuration to stage 3, and ``no_checker``
accepts every candidate with verdicts recorded as skipped.
"""

from __future__ import annotations

import json
import logging
import re
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import prompts
from .corpus import CodingStandardDoc
from .dsl import (
    DslError, DslRule, RuleSet, extract_checked_objects, format_rule, parse_rule_set,
    substitute_placeholder, term_text,
)
from .emitters import TARGET_LINTER, EmittedConfig, llm_render, render as emit
from .instructions import InstructionSet, OptionInstruction, OptionKind
from .llm import Gateway, LlmError, LlmFormatError, render
from .model import CHECKS, AlignedConfiguration, Assignment, CandidateConfiguration, Verdict
from .responses import (
    OptionLine, parse_alignment, parse_dsl_lines, parse_option_lines, parse_selection,
    salvage_dsl_lines, scan_dsl_lines,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flags:
    no_dsl: bool = False
    no_selector: bool = False
    no_checker: bool = False
    llm_render: bool = False

    @property
    def profile(self) -> str:
        names = [n for n in ("no_dsl", "no_selector", "no_checker") if getattr(self, n)]
        return "+".join(names) or "default"

    def to_json(self) -> dict:
        return {"no_dsl": self.no_dsl, "no_selector": self.no_selector,
                "no_checker": self.no_checker, "llm_render": self.llm_render}


@dataclass(frozen=True)
class DslCodingStandard:
    standard_id: str
    rules: RuleSet
    stage1_raw: str
    # no rule found in the standard; a valid outcome, not an error
    empty: bool = False
    # set when stage 1 was bypassed and the text itself is forwarded
    nl_text: str | None = None

    @property
    def bypassed(self) -> bool:
        return self.nl_text is not None

    def rule_texts(self) -> list[str]:
        """What later stages see as the numbered coding rules."""
        if self.bypassed:
            return [self.nl_text]
        return [format_rule(r) for r in self.rules]

    def to_json(self) -> dict:
        return {
            "standard_id": self.standard_id,
            "rules": [format_rule(r) for r in self.rules],
            "stage1_raw": self.stage1_raw,
            "empty": self.empty,
            "bypassed": self.bypassed,
        }


@dataclass
class CompilationResult:
    standard_id: str
    dsl: DslCodingStandard
    flags: Flags
    selected: list[str] = field(default_factory=list)
    stage3_offered: list[str] = field(default_factory=list)
    candidates: list[CandidateConfiguration] = field(default_factory=list)
    aligned: list[AlignedConfiguration] = field(default_factory=list)
    emitted: dict[str, EmittedConfig] = field(default_factory=dict)
    stage_status: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    stage_timings: dict[str, float] = field(default_factory=dict)

    @property
    def accepted(self) -> list[AlignedConfiguration]:
        return [a for a in self.aligned if a.accepted]

    @property
    def ok(self) -> bool:
        return not any(s.startswith("error") for s in self.stage_status.values())

    def predictions(self) -> list[dict]:
        """Accepted configurations in the gold-configuration shape used by eval."""
        return [
            {"config_name": a.config_name,
             "assignments": [{"option_name": x.option_name, "option_value": x.value}
                             for x in a.assignments]}
            for a in self.accepted
        ]

    def to_json(self, *, with_timings: bool = False) -> dict:
        out = {
            "standard_id": self.standard_id,
            "flags": self.flags.to_json(),
            "stage_status": self.stage_status,
            "dsl": self.dsl.to_json(),
            "selected": self.selected,
            "stage3_offered": self.stage3_offered,
            "candidates": [c.to_json() for c in self.candidates],
            "aligned": [a.to_json() for a in self.aligned],
            "predictions": self.predictions(),
            "emitted": {t: {"text": e.text, "validated": e.validated} for t, e in self.emitted.items()},
            "warnings": self.warnings,
        }
        if with_timings:
            out["stage_timings"] = self.stage_timings
        return out


def _repair(error: str) -> str:
    return render(prompts.REPAIR, {"error": error})


def _numbered(items: Sequence[str]) -> str:
    return "\n".join(f"{i}. {t}" for i, t in enumerate(items, 1))


def _terms(rules: Iterable[DslRule]) -> set[str]:
    out: set[str] = set()
    for rule in rules:
        for tl in extract_checked_objects(rule):
            out.update(term_text(t).casefold() for t in tl.terms)
    return out


def _is_int(text: str) -> bool:
    return re.fullmatch(r"[+-]?\d+", text.strip()) is not None


class Pipeline:
    def __init__(self, gateway: Gateway, iset: InstructionSet, flags: Flags = Flags()):
        if not len(iset):
            raise ValueError("instruction set is empty")
        self.gw = gateway
        self.iset = iset
        self.flags = flags

    # -- stage 1 -----------------------------------------------------------

    def stage1_parse_standard(self, doc: CodingStandardDoc) -> DslCodingStandard:
        if self.flags.no_dsl:
            return DslCodingStandard(doc.id, RuleSet(()), doc.text, nl_text=doc.text)
        sentences = "\n".join(f"{i}) {s}" for i, s in enumerate(doc.sentences, 1))
        text = render(prompts.STAGE1, {"grammar": prompts.DSL_GRAMMAR, "title": doc.title,
                                       "sentences": sentences})
        rules, raw = self.gw.ask_parsed(text, parse_dsl_lines, tag=f"stage1:{doc.id}",
                                        repair=_repair, fallback=salvage_dsl_lines)
        unique: list[DslRule] = []
        for r in rules:
            if r not in unique:
                unique.append(r)
        return DslCodingStandard(doc.id, RuleSet(tuple(unique)), raw, empty=not unique)

    # -- stage 2 -----------------------------------------------------------

    def _general_listing(self) -> str:
        lines = []
        for name, ci in self.iset.instructions.items():
            rules = "; ".join(format_rule(r) for r in ci.general_rules) or "(no general rule)"
            lines.append(f"{name}: {rules}")
        return "\n".join(lines)

    def stage2_select_names(self, dsl: DslCodingStandard,
                            warnings: list[str] | None = None) -> tuple[list[str], dict[str, int]]:
        """Selected names and, for each, the first coding rule it matched."""
        rules = dsl.rule_texts()
        if not rules:
            return [], {}
        text = render(prompts.STAGE2, {"rules": _numbered(rules), "checks": self._general_listing()})
        selection, _ = self.gw.ask_parsed(
            text, lambda r: parse_selection(r, len(rules)), tag=f"stage2:{dsl.standard_id}",
            repair=_repair)
        names: list[str] = []
        origin: dict[str, int] = {}
        for idx in sorted(selection):
            for name in selection[idx]:
                if name not in self.iset:
                    msg = f"stage2: dropped unknown configuration {name!r}"
                    log.warning("%s: %s", dsl.standard_id, msg)
                    if warnings is not None:
                        warnings.append(msg)
                    continue
                if name not in origin:
                    names.append(name)
                    origin[name] = idx
        return names, origin

    # -- stage 3 -----------------------------------------------------------

    def _option_listing(self, names: Sequence[str]) -> str:
        blocks = []
        for name in names:
            ci = self.iset[name]
            lines = [f"check {name}"]
            general = "; ".join(format_rule(r) for r in ci.general_rules) or "(no general rule)"
            lines.append(f"  general: {general}")
            for oi in ci.option_instructions:
                for key, rule in oi.rules:
                    lines.append(f"  {oi.option_name} = {key}: {format_rule(rule)}")
            blocks.append("\n".join(lines))
        return "\n".join(blocks)

    def _assignment(self, oi: OptionInstruction, value: str) -> tuple[Assignment | None, str | None]:
        """Validated assignment, or None and the reason it was rejected."""
        if oi.kind is OptionKind.PER_VALUE:
            literals = {k.casefold(): k for k, _ in oi.rules}
            lit = literals.get(value.strip().casefold())
            if lit is None:
                return None, f"value {value!r} outside {[k for k, _ in oi.rules]}"
            return Assignment(oi.option_name, lit, oi.rule_for(lit), oi.data_type), None
        value = value.strip()
        if not value:
            return None, "empty value"
        if oi.data_type == "integer" and not _is_int(value):
            return None, f"value {value!r} is not an integer"
        if oi.data_type == "regex":
            try:
                re.compile(value)
            except re.error as exc:
                return None, f"value {value!r} is not a regular expression ({exc})"
        if oi.data_type.startswith("other(") and value[:1] in "[{":
            try:
                json.loads(value)
            except json.JSONDecodeError:
                return None, f"value {value!r} is not valid JSON"
        if oi.kind is OptionKind.OBJECT_SELECTOR or oi.data_type == "set":
            items = [v.strip() for v in value.split(",") if v.strip()]
        else:
            items = [value]
        try:
            matched = substitute_placeholder(oi.rule, oi.option_name, items)
        except (DslError, ValueError):
            # values such as regexes are not valid DSL terms; keep the placeholder rule
            matched = oi.rule
        return Assignment(oi.option_name, value, matched, oi.data_type), None

    def stage3_configure_options(
        self, dsl: DslCodingStandard, names: Sequence[str], origin: dict[str, int] | None = None,
        warnings: list[str] | None = None,
    ) -> list[CandidateConfiguration]:
        warnings = warnings if warnings is not None else []
        origin = origin or {}
        unknown = [n for n in names if n not in self.iset]
        if unknown:
            raise ValueError(f"names not in the instruction set: {unknown}")
        rules = dsl.rule_texts()
        if not names or not rules:
            return []
        text = render(prompts.STAGE3, {"rules": _numbered(rules), "checks": self._option_listing(names)})
        lines, _ = self.gw.ask_parsed(
            text, lambda r: parse_option_lines(r, numbered=True), tag=f"stage3:{dsl.standard_id}",
            repair=_repair)

        selected = set(names)
        mentioned: dict[str, int | None] = {}
        assigns: dict[str, list[Assignment]] = {}
        for line in lines:
            name = line.config_name
            if name not in selected:
                warnings.append(f"stage3: dropped configuration {name!r} that was not offered")
                continue
            if line.rule_index is not None and not 1 <= line.rule_index <= len(rules):
                warnings.append(f"stage3: {name}: rule number {line.rule_index} out of range")
                continue
            mentioned.setdefault(name, line.rule_index)
            if line.option_name is None:
                continue
            oi = self.iset[name].option(line.option_name)
            if oi is None:
                warnings.append(f"stage3: {name} has no option {line.option_name!r}")
                continue
            got, why = self._assignment(oi, line.value)
            if got is None:
                warnings.append(f"stage3: {name}.{line.option_name}: {why}")
                continue
            bucket = assigns.setdefault(name, [])
            if any(a.option_name == got.option_name for a in bucket):
                warnings.append(f"stage3: {name}.{got.option_name} set twice; keeping the first")
                continue
            bucket.append(got)

        keep = [n for n in names if n in mentioned or (n in origin and not self.flags.no_selector)]
        out = []
        for name in keep:
            idx = mentioned.get(name) or origin.get(name) or (1 if len(rules) == 1 else None)
            out.append(CandidateConfiguration(
                name, tuple(assigns.get(name, [])), self.iset[name].general_rules, idx))
        return out

    # -- stage 4 -----------------------------------------------------------

    def _check_one(self, dsl: DslCodingStandard, cand: CandidateConfiguration) -> AlignedConfiguration:
        verdicts: dict[str, Verdict] = {}
        notes: dict[str, str] = {}
        matched = [a.matched_rule for a in cand.assignments if a.matched_rule is not None]
        config_rules = matched or list(cand.matched_general_rules)
        idx = cand.standard_rule_index
        texts = dsl.rule_texts()
        if idx is None or not 1 <= idx <= len(texts):
            return AlignedConfiguration.judged(
                cand, {c: Verdict.FAIL for c in CHECKS}, {"error": "no coding rule to check against"})
        questions: list[str] = []
        if dsl.bypassed:
            questions = ["rule_type", "objects", "semantics"]
        else:
            std = dsl.rules.rules[idx - 1]
            if not config_rules:
                verdicts["rule_type"] = Verdict.FAIL
                notes["rule_type"] = "configuration has no DSL rule to compare"
            elif matched:
                ok = all(r.rule_type == std.rule_type for r in matched)
                verdicts["rule_type"] = Verdict.PASS if ok else Verdict.FAIL
            else:
                ok = any(r.rule_type == std.rule_type for r in config_rules)
                verdicts["rule_type"] = Verdict.PASS if ok else Verdict.FAIL
            std_terms, cfg_terms = _terms([std]), _terms(config_rules)
            if std_terms and std_terms == cfg_terms:
                verdicts["objects"] = Verdict.PASS
                notes["objects"] = "identical checked objects"
            else:
                questions.append("objects")
            questions.append("semantics")
        asked = tuple(questions)
        question_text = {"rule_type": prompts.RULE_TYPE_QUESTION, "objects": prompts.OBJECTS_QUESTION,
                         "semantics": prompts.SEMANTICS_QUESTION}
        text = render(prompts.STAGE4, {
            "questions": "\n".join(question_text[q] for q in asked),
            "standard_rule": texts[idx - 1],
            "config_name": cand.config_name,
            "config_rules": "\n".join(f"  {format_rule(r)}" for r in config_rules) or "  (no rule)",
            "question_list": ", ".join(asked),
        })
        tag = f"stage4:{dsl.standard_id}:{cand.config_name}"
        try:
            answers, _ = self.gw.ask_parsed(text, lambda r: parse_alignment(r, asked), tag=tag,
                                            repair=_repair)
        except LlmError as exc:
            # fail closed: anything the model was asked to confirm counts as failed
            for q in asked:
                verdicts[q] = Verdict.FAIL
            notes["error"] = str(exc)
            return AlignedConfiguration.judged(cand, verdicts, notes)
        for q, (yes, reason) in answers.items():
            verdicts[q] = Verdict.PASS if yes else Verdict.FAIL
            if reason:
                notes[q] = reason
        return AlignedConfiguration.judged(cand, verdicts, notes)

    def stage4_check_alignment(self, dsl: DslCodingStandard,
                               cands: Sequence[CandidateConfiguration]) -> list[AlignedConfiguration]:
        if self.flags.no_checker:
            return [AlignedConfiguration.unchecked(c) for c in cands]
        return [self._check_one(dsl, c) for c in cands]

    # -- stage 5 -----------------------------------------------------------

    def stage5_emit(self, standard_id: str, aligned: Sequence[AlignedConfiguration],
                    targets: Sequence[str]) -> dict[str, EmittedConfig]:
        accepted = [a for a in aligned if a.accepted]
        out = {}
        for target in targets:
            if self.flags.llm_render:
                out[target] = llm_render(accepted, target, self.gw, tag=f"stage5:{standard_id}:{target}")
            else:
                out[target] = emit(accepted, target)
        return out

    # -- driver ------------------------------------------------------------

    def compile(self, doc: CodingStandardDoc, targets: Sequence[str] = ()) -> CompilationResult:
        targets = list(targets) or [t for t, l in TARGET_LINTER.items() if l == self.iset.linter]
        for t in targets:
            if TARGET_LINTER.get(t) != self.iset.linter:
                raise ValueError(f"target {t!r} does not match the {self.iset.linter} instruction set")
        result = CompilationResult(doc.id, DslCodingStandard(doc.id, RuleSet(()), ""), self.flags)
        status = result.stage_status

        def timed(stage: str, fn):
            start = time.perf_counter()
            try:
                return fn()
            finally:
                result.stage_timings[stage] = time.perf_counter() - start

        try:
            result.dsl = timed("stage1", lambda: self.stage1_parse_standard(doc))
            status["stage1"] = "bypassed" if result.dsl.bypassed else ("empty" if result.dsl.empty else "ok")
            if self.flags.no_selector:
                names, origin = self.iset.names, {}
                status["stage2"] = "skipped"
            else:
                names, origin = timed("stage2", lambda: self.stage2_select_names(result.dsl, result.warnings))
                status["stage2"] = ("ok" if names else "empty") if result.dsl.rule_texts() else "skipped"
            result.selected = list(names)
            result.stage3_offered = list(names) if result.dsl.rule_texts() else []
            result.candidates = timed("stage3", lambda: self.stage3_configure_options(
                result.dsl, names, origin, result.warnings))
            status["stage3"] = "ok" if result.candidates else "empty"
            result.aligned = timed("stage4", lambda: self.stage4_check_alignment(result.dsl, result.candidates))
            status["stage4"] = "skipped" if self.flags.no_checker else "ok"
        except LlmError as exc:
            stage = next(s for s in ("stage1", "stage2", "stage3", "stage4") if s not in status)
            status[stage] = f"error: {exc}"
            log.warning("%s: %s failed: %s", doc.id, stage, exc)
        # even after an error, emit whatever was accepted so far (possibly nothing)
        result.emitted = timed("stage5", lambda: self.stage5_emit(doc.id, result.aligned, targets))
        status["stage5"] = "ok" if all(e.validated for e in result.emitted.values()) else "invalid"
        return result

    def compile_all(self, docs: Iterable[CodingStandardDoc],
                    targets: Sequence[str] = ()) -> list[CompilationResult]:
        return self.gw.map(lambda d: self.compile(d, targets), list(docs))
