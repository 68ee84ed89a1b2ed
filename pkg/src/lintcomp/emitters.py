"""Checkstyle XML and ESLint JSON rendering, validation, and the LLM renderer.

ESLint options named ``$1``, ``$2`` are positional rule options; every other
option is a property of one options object placed after the positionals, so
``indent`` with ``$1=2`` and ``SwitchCase=1`` renders as
``["error", 2, {"SwitchCase": 1}]``.
"""

from __future__ import annotations

import json
import logging
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Iterable, Sequence
from xml.sax.saxutils import quoteattr

from . import prompts
from .llm import Gateway, LlmFormatError, render as render_template
from .model import AlignedConfiguration

log = logging.getLogger(__name__)

TARGETS = ("checkstyle_xml", "eslint_json")
TARGET_LINTER = {"checkstyle_xml": "checkstyle", "eslint_json": "eslint"}
TARGET_SUFFIX = {"checkstyle_xml": "checkstyle.xml", "eslint_json": "eslintrc.json"}

# FileSetChecks that Checkstyle only accepts directly under Checker
CHECKER_MODULES = frozenset({
    "FileLength", "FileTabCharacter", "Header", "JavadocPackage", "LineLength",
    "NewlineAtEndOfFile", "OrderedProperties", "RegexpHeader", "RegexpMultiline",
    "RegexpOnFilename", "RegexpSingleline", "Translation", "UniqueProperties",
    "SuppressionFilter", "SuppressWarningsFilter", "SuppressWithPlainTextCommentFilter",
    "BeforeExecutionExclusionFileFilter", "SuppressionSingleFilter",
})

XML_PROLOG = (
    '<?xml version="1.0"?>\n'
    '<!DOCTYPE module PUBLIC\n'
    '          "-//Checkstyle//DTD Checkstyle Configuration 1.3//EN"\n'
    '          "https://checkstyle.org/dtds/configuration_1_3.dtd">\n'
)
SEVERITY = "error"
_SEVERITIES = ("off", "warn", "error", 0, 1, 2)
_POSITIONAL = re.compile(r"^\$(\d+)$")


class EmitError(Exception):
    pass


class UnacceptedCandidate(EmitError):
    pass


class TypeCoercionError(EmitError, ValueError):
    pass


@dataclass(frozen=True)
class EmittedConfig:
    target: str
    text: str
    validated: bool = False
    diagnostics: tuple[str, ...] = field(default=(), compare=False)


def _require_accepted(configs: Iterable[AlignedConfiguration]) -> list[AlignedConfiguration]:
    configs = list(configs)
    for c in configs:
        if not c.accepted:
            raise UnacceptedCandidate(f"{c.config_name} was not accepted by the alignment checker")
    return configs


def _finish(target: str, text: str) -> EmittedConfig:
    ok, diags = _validate(target, text)
    return EmittedConfig(target, text, ok, tuple(diags))


# ---------------------------------------------------------------------------
# Checkstyle
# ---------------------------------------------------------------------------

def _xml_attr(value: str) -> str:
    # quoteattr leaves tabs and newlines raw, which XML parsers normalize to spaces
    return quoteattr(value, {"\n": "&#10;", "\r": "&#13;", "\t": "&#9;"})


def _module_xml(cfg: AlignedConfiguration, indent: str) -> list[str]:
    head = f"{indent}<module name={_xml_attr(cfg.config_name)}"
    if not cfg.assignments:
        return [head + "/>"]
    lines = [head + ">"]
    for a in cfg.assignments:
        lines.append(f"{indent}  <property name={_xml_attr(a.option_name)} value={_xml_attr(a.value)}/>")
    lines.append(f"{indent}</module>")
    return lines


def render_checkstyle(configs: Iterable[AlignedConfiguration]) -> EmittedConfig:
    configs = _require_accepted(configs)
    checker = [c for c in configs if c.config_name in CHECKER_MODULES]
    walker = [c for c in configs if c.config_name not in CHECKER_MODULES]
    lines = ['<module name="Checker">']
    for c in checker:
        lines.extend(_module_xml(c, "  "))
    if walker:
        lines.append('  <module name="TreeWalker">')
        for c in walker:
            lines.extend(_module_xml(c, "    "))
        lines.append("  </module>")
    lines.append("</module>")
    return _finish("checkstyle_xml", XML_PROLOG + "\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# ESLint
# ---------------------------------------------------------------------------

def coerce_value(value: str, data_type: str) -> object:
    """Typed JSON value for an option value written as text."""
    text = value.strip()
    if data_type == "boolean":
        if text.lower() not in ("true", "false"):
            raise TypeCoercionError(f"{value!r} is not a boolean")
        return text.lower() == "true"
    if data_type == "integer":
        try:
            return int(text)
        except ValueError:
            try:
                number = float(text)
            except ValueError:
                raise TypeCoercionError(f"{value!r} is not a number") from None
            return int(number) if number.is_integer() else number
    if data_type == "set":
        return [item.strip() for item in text.split(",") if item.strip()]
    if data_type == "enum" or data_type.startswith("other("):
        if text in ("true", "false", "null") or re.fullmatch(r"-?\d+(\.\d+)?", text) \
                or (text[:1] in "[{" and data_type.startswith("other(")):
            try:
                return json.loads(text)
            except json.JSONDecodeError:
                if data_type.startswith("other(") and text[:1] in "[{":
                    raise TypeCoercionError(f"{value!r} is not valid JSON") from None
        return value
    return value


def _eslint_entry(cfg: AlignedConfiguration) -> list:
    positional: dict[int, object] = {}
    named: dict[str, object] = {}
    for a in cfg.assignments:
        m = _POSITIONAL.match(a.option_name)
        if m:
            positional[int(m.group(1))] = coerce_value(a.value, a.data_type)
        else:
            named[a.option_name] = coerce_value(a.value, a.data_type)
    if positional and sorted(positional) != list(range(1, len(positional) + 1)):
        raise TypeCoercionError(f"{cfg.config_name}: positional options must start at $1 without gaps")
    entry: list = [SEVERITY] + [positional[i] for i in sorted(positional)]
    if named:
        entry.append(named)
    return entry


def render_eslint(configs: Iterable[AlignedConfiguration]) -> EmittedConfig:
    configs = _require_accepted(configs)
    rules: dict[str, list] = {}
    for cfg in configs:
        if cfg.config_name in rules:
            raise EmitError(f"rule {cfg.config_name} given twice; merge configurations first")
        rules[cfg.config_name] = _eslint_entry(cfg)
    return _finish("eslint_json", json.dumps({"rules": rules}, indent=2, ensure_ascii=False) + "\n")


def render(configs: Iterable[AlignedConfiguration], target: str) -> EmittedConfig:
    if target == "checkstyle_xml":
        return render_checkstyle(configs)
    if target == "eslint_json":
        return render_eslint(configs)
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


def merge_configs(groups: Iterable[Sequence[AlignedConfiguration]]) -> list[AlignedConfiguration]:
    """Union of accepted configurations across standards, one entry per name.

    Assignments are unioned per option name; on conflicting values the first
    standard wins.
    """
    merged: dict[str, AlignedConfiguration] = {}
    for group in groups:
        for cfg in group:
            if not cfg.accepted:
                continue
            seen = merged.get(cfg.config_name)
            if seen is None:
                merged[cfg.config_name] = cfg
                continue
            have = {a.option_name for a in seen.assignments}
            extra = tuple(a for a in cfg.assignments if a.option_name not in have)
            for a in cfg.assignments:
                old = next((b for b in seen.assignments if b.option_name == a.option_name), None)
                if old is not None and old.value != a.value:
                    log.warning("merge: %s.%s keeps %r over %r", cfg.config_name, a.option_name,
                                old.value, a.value)
            if extra:
                cand = seen.candidate
                merged[cfg.config_name] = AlignedConfiguration(
                    type(cand)(cand.config_name, cand.assignments + extra,
                               cand.matched_general_rules, cand.standard_rule_index),
                    seen.verdicts, True, seen.notes)
    return list(merged.values())


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _validate_checkstyle(text: str) -> list[str]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        return [f"not well-formed XML: {exc}"]
    diags = []
    if root.tag != "module" or root.get("name") != "Checker":
        diags.append("root element must be <module name=\"Checker\">")

    def walk(el: ET.Element, path: str) -> None:
        for child in el:
            where = f"{path}/{child.tag}[{child.get('name')}]"
            if child.tag == "module":
                if not child.get("name"):
                    diags.append(f"{where}: module without name")
                walk(child, where)
            elif child.tag == "property":
                if child.get("name") is None or child.get("value") is None:
                    diags.append(f"{where}: property needs name and value")
                if len(child):
                    diags.append(f"{where}: property has children")
            elif child.tag not in ("message", "metadata"):
                diags.append(f"{where}: unexpected element <{child.tag}>")

    walk(root, "Checker")
    return diags


def _validate_eslint(text: str) -> list[str]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return [f"not valid JSON: {exc}"]
    if not isinstance(doc, dict) or not isinstance(doc.get("rules"), dict):
        return ["top level must be an object with a \"rules\" object"]
    diags = []
    for name, value in doc["rules"].items():
        sev = value[0] if isinstance(value, list) and value else value
        if isinstance(sev, bool) or sev not in _SEVERITIES:
            diags.append(f"rule {name}: expected a severity or [severity, options...]")
    return diags


def _validate(target: str, text: str) -> tuple[bool, list[str]]:
    if target == "checkstyle_xml":
        diags = _validate_checkstyle(text)
    elif target == "eslint_json":
        diags = _validate_eslint(text)
    else:
        diags = [f"unknown target {target!r}"]
    return not diags, diags


def validate_emitted(e: EmittedConfig) -> bool:
    return _validate(e.target, e.text)[0]


def diagnostics(e: EmittedConfig) -> list[str]:
    return _validate(e.target, e.text)[1]


def normalize_emitted(e: EmittedConfig) -> frozenset:
    """Order-insensitive module/rule content, for comparing two renderings."""
    if e.target == "checkstyle_xml":
        root = ET.fromstring(e.text)
        out = set()
        for mod in root.iter("module"):
            if mod.get("name") in ("Checker", "TreeWalker"):
                continue
            props = tuple(sorted((p.get("name"), p.get("value")) for p in mod.findall("property")))
            out.add((mod.get("name"), props))
        return frozenset(out)
    rules = json.loads(e.text)["rules"]
    return frozenset((k, json.dumps(v, sort_keys=True)) for k, v in rules.items())


# ---------------------------------------------------------------------------
# LLM renderer
# ---------------------------------------------------------------------------

_EXAMPLE_CONFIGS = {
    "checkstyle_xml": [AlignedConfiguration.accept("AvoidStarImport"),
                       AlignedConfiguration.accept("LineLength", {"max": "100"})],
    "eslint_json": [AlignedConfiguration.accept("no-var"),
                    AlignedConfiguration.accept("max-len", {"code": "100"}, {"code": "integer"})],
}
_LINTER_LABEL = {"checkstyle_xml": "Checkstyle XML", "eslint_json": "ESLint JSON"}
_FENCED = re.compile(r"```[a-zA-Z]*\n(.*?)```", re.S)


def describe_configs(configs: Iterable[AlignedConfiguration]) -> str:
    lines = []
    for c in configs:
        opts = ", ".join(f"{a.option_name} = {a.value}" for a in c.assignments)
        lines.append(f"- {c.config_name}" + (f" with {opts}" if opts else ""))
    return "\n".join(lines) or "(none)"


def _strip_fences(text: str) -> str:
    m = _FENCED.search(text)
    body = m.group(1) if m else text
    return body.strip() + "\n"


def llm_render(configs: Iterable[AlignedConfiguration], target: str, gateway: Gateway,
               *, tag: str = "") -> EmittedConfig:
    """Ask the model for the document; fall back to the deterministic renderer.

    The answer must pass :func:`validate_emitted`, with one repair prompt
    allowed. Gateway errors propagate.
    """
    configs = _require_accepted(configs)
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    example = _EXAMPLE_CONFIGS[target]
    text = render_template(prompts.STAGE5, {
        "linter": _LINTER_LABEL[target],
        "example_configs": describe_configs(example),
        "example_output": render(example, target).text.rstrip("\n"),
        "configs": describe_configs(configs),
    })

    def parse(answer: str) -> EmittedConfig:
        out = _finish(target, _strip_fences(answer))
        if not out.validated:
            raise LlmFormatError("; ".join(out.diagnostics))
        return out

    try:
        out, _ = gateway.ask_parsed(
            text, parse, tag=tag or f"stage5:{target}",
            repair=lambda err: render_template(prompts.REPAIR, {"error": err}))
        return out
    except LlmFormatError as exc:
        log.warning("LLM rendering for %s unusable, using the deterministic renderer: %s", target, exc)
        return render(configs, target)
