"""Strict parsers for the line formats requested in :mod:`lintcomp.prompts`.

Each parser raises :class:`~lintcomp.llm.LlmFormatError` (or a DSL syntax
error) on output it cannot use, which triggers the caller's repair prompt.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .dsl import DslRule, DslSyntaxError, parse_rule_set
from .llm import LlmFormatError

_FENCE = re.compile(r"^\s*```")
_NUMBERING = re.compile(r"^\s*(?:\d+\s*[.):]|[-*•])\s*")
_RULE_START = re.compile(r"^(Mandatory|Optional)\s*:")
_NONE = re.compile(r"^\s*(none|no rules?|n/a)\.?\s*$", re.I)


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not _FENCE.match(ln)]


def is_none_answer(text: str) -> bool:
    lines = _content_lines(text)
    return len(lines) == 1 and bool(_NONE.match(lines[0]))


@dataclass(frozen=True)
class DslLines:
    rules: tuple[DslRule, ...]
    errors: tuple[str, ...]
    none: bool = False


def scan_dsl_lines(text: str) -> DslLines:
    """Collect rules from lines that start with a rule type, after any numbering.

    Other lines are treated as commentary. Lines that start with a rule type
    but do not parse are reported in ``errors``.
    """
    if is_none_answer(text):
        return DslLines((), (), none=True)
    rules: list[DslRule] = []
    errors: list[str] = []
    for line in _content_lines(text):
        body = _NUMBERING.sub("", line, count=1).strip().strip("`")
        if not _RULE_START.match(body):
            continue
        try:
            rules.extend(parse_rule_set(body).rules)
        except DslSyntaxError as exc:
            errors.append(f"{body!r}: {exc}")
    return DslLines(tuple(rules), tuple(errors))


def parse_dsl_lines(text: str, *, allow_none: bool = True) -> list[DslRule]:
    scan = scan_dsl_lines(text)
    if scan.errors:
        raise LlmFormatError("unparseable DSL: " + "; ".join(scan.errors))
    if scan.none:
        if not allow_none:
            raise LlmFormatError("NONE is not allowed here")
        return []
    if not scan.rules:
        raise LlmFormatError("no DSL rule lines found")
    return list(scan.rules)


def salvage_dsl_lines(text: str) -> list[DslRule]:
    return list(scan_dsl_lines(text).rules)


_VERDICT = re.compile(r"^\s*(\d+)\s*[:.)-]\s*(yes|no)\b", re.I)


def parse_classification(text: str, count: int) -> list[bool]:
    found: dict[int, bool] = {}
    for line in _content_lines(text):
        m = _VERDICT.match(line)
        if not m:
            continue
        idx = int(m.group(1))
        if idx in found:
            raise LlmFormatError(f"sentence {idx} answered twice")
        found[idx] = m.group(2).lower() == "yes"
    missing = [i for i in range(count) if i not in found]
    extra = sorted(set(found) - set(range(count)))
    if missing or extra:
        raise LlmFormatError(f"expected verdicts for 0..{count - 1}; missing {missing}, unexpected {extra}")
    return [found[i] for i in range(count)]


_VALUE_RULE = re.compile(r"^(.*?)\s*:\s*((?:Mandatory|Optional)\s*:.*)$")


def parse_value_rules(text: str, literals: tuple[str, ...]) -> dict[str, DslRule]:
    by_fold = {lit.casefold(): lit for lit in literals}
    out: dict[str, DslRule] = {}
    for line in _content_lines(text):
        m = _VALUE_RULE.match(line.lstrip("-*• "))
        if not m:
            continue
        key = m.group(1).strip().strip("`\"'").casefold()
        if key not in by_fold:
            raise LlmFormatError(f"unknown value {m.group(1)!r}; expected one of {list(literals)}")
        lit = by_fold[key]
        if lit in out:
            raise LlmFormatError(f"value {lit!r} given twice")
        rules = parse_rule_set(m.group(2)).rules
        if len(rules) != 1:
            raise LlmFormatError(f"value {lit!r} needs exactly one rule")
        out[lit] = rules[0]
    missing = [lit for lit in literals if lit not in out]
    if missing:
        raise LlmFormatError(f"no rule for values {missing}")
    return {lit: out[lit] for lit in literals}


_SELECTION = re.compile(r"^\s*(?:rule\s*)?(\d+)\s*[:.)-]\s*(.*)$", re.I)


def parse_selection(text: str, rule_count: int) -> dict[int, list[str]]:
    """``N: Name, Name`` lines to a map from 1-based rule number to names."""
    out: dict[int, list[str]] = {}
    for line in _content_lines(text):
        m = _SELECTION.match(line)
        if not m:
            continue
        idx = int(m.group(1))
        if not 1 <= idx <= rule_count:
            raise LlmFormatError(f"rule number {idx} out of range 1..{rule_count}")
        names = [n.strip().strip("`\"'") for n in m.group(2).split(",")]
        names = [n for n in names if n and not _NONE.match(n)]
        out.setdefault(idx, [])
        out[idx].extend(n for n in names if n not in out[idx])
    if not out and not is_none_answer(text):
        raise LlmFormatError("no 'N: names' lines found")
    return out


@dataclass(frozen=True)
class OptionLine:
    rule_index: int | None
    config_name: str
    option_name: str | None
    value: str | None


def _dash(field: str) -> str | None:
    field = field.strip()
    return None if field in ("", "-", "\u2014") else field


def parse_option_lines(text: str, *, numbered: bool) -> list[OptionLine]:
    """Pipe records: ``rule N | Check | option | value`` (numbered) or ``Check | option | value``."""
    out: list[OptionLine] = []
    width = 4 if numbered else 3
    for line in _content_lines(text):
        if "|" not in line:
            continue
        parts = [p.strip() for p in _NUMBERING.sub("", line, count=1).split("|", width - 1)]
        if len(parts) != width:
            raise LlmFormatError(f"expected {width} fields in {line!r}")
        idx = None
        if numbered:
            m = re.fullmatch(r"(?:rule\s*)?(\d+)", parts[0], re.I)
            if not m:
                raise LlmFormatError(f"bad rule number in {line!r}")
            idx = int(m.group(1))
            parts = parts[1:]
        name = parts[0].strip("`\"'")
        if not name:
            raise LlmFormatError(f"missing check name in {line!r}")
        opt, value = _dash(parts[1]), _dash(parts[2])
        if (opt is None) != (value is None):
            raise LlmFormatError(f"option and value must both be given or both be '-' in {line!r}")
        if value is not None and len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'`":
            value = value[1:-1]
        out.append(OptionLine(idx, name, opt, value))
    if not out and not is_none_answer(text):
        raise LlmFormatError("no pipe-separated configuration lines found")
    return out


_ANSWER = re.compile(r"^\s*(rule_type|objects|semantics)\s*:\s*(yes|no)\b\s*[-:\u2014]?\s*(.*)$", re.I)


def parse_alignment(text: str, questions: tuple[str, ...]) -> dict[str, tuple[bool, str]]:
    out: dict[str, tuple[bool, str]] = {}
    for line in _content_lines(text):
        m = _ANSWER.match(line)
        if m:
            out[m.group(1).lower()] = (m.group(2).lower() == "yes", m.group(3).strip())
    missing = [q for q in questions if q not in out]
    if missing:
        raise LlmFormatError(f"no answer for {missing}")
    return {q: out[q] for q in questions}
