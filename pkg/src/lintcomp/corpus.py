"""Coding-standard and linter-documentation records, with JSON loaders."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

DATA_TYPES = ("boolean", "integer", "string", "enum", "set", "regex")
_OTHER = re.compile(r"^other\((.+)\)$")
LANGUAGES = ("java", "javascript")
LINTERS = ("checkstyle", "eslint")


class CorpusError(Exception):
    pass


class CorpusIOError(CorpusError, OSError):
    pass


class SchemaError(CorpusError, ValueError):
    def __init__(self, field_path: str, problem: str):
        super().__init__(f"{field_path}: {problem}")
        self.field = field_path


class DuplicateIdError(CorpusError, ValueError):
    def __init__(self, ident: str):
        super().__init__(f"duplicate id {ident!r}")
        self.ident = ident


@dataclass(frozen=True)
class ValueRange:
    kind: str  # "finite" or "unbounded"
    literals: tuple[str, ...] = ()

    @classmethod
    def finite(cls, *literals: str) -> "ValueRange":
        return cls("finite", tuple(literals))

    @classmethod
    def unbounded(cls) -> "ValueRange":
        return cls("unbounded", ())

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"


@dataclass(frozen=True)
class OptionDoc:
    option_name: str
    data_type: str
    value_range: ValueRange
    description: str = ""
    specifies_checked_objects: bool = False


@dataclass(frozen=True)
class LinterConfigDoc:
    config_name: str
    description_sentences: tuple[str, ...]
    options: tuple[OptionDoc, ...] = ()
    linter: str = "checkstyle"

    def option(self, name: str) -> OptionDoc | None:
        for opt in self.options:
            if opt.option_name == name:
                return opt
        return None

    @property
    def description(self) -> str:
        return " ".join(self.description_sentences)


@dataclass(frozen=True)
class CodingStandardDoc:
    id: str
    title: str
    language: str
    sentences: tuple[str, ...]
    source_url: str | None = None

    @property
    def text(self) -> str:
        return " ".join(self.sentences)


@dataclass
class _Checker:
    where: str
    errors: list[str] = field(default_factory=list)


def _tag_ok(value: Any, known: tuple[str, ...]) -> bool:
    return isinstance(value, str) and (value in known or bool(_OTHER.match(value)))


def _require(obj: Any, key: str, kind: type | tuple, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}.{key}", "missing")
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


def _str_list(obj: dict, key: str, where: str, nonempty: bool) -> tuple[str, ...]:
    items = _require(obj, key, list, where)
    if nonempty and not items:
        raise SchemaError(f"{where}.{key}", "must be nonempty")
    for i, s in enumerate(items):
        if not isinstance(s, str) or not s.strip():
            raise SchemaError(f"{where}.{key}[{i}]", "expected a non-blank string")
    return tuple(items)


def _read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CorpusIOError(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise SchemaError("<root>", f"invalid JSON: {exc}") from exc


def _check_header(raw: Any) -> None:
    if not isinstance(raw, dict):
        raise SchemaError("<root>", "expected an object")
    if raw.get("version") != 1:
        raise SchemaError("version", "expected 1")


def parse_standards(raw: Any) -> list[CodingStandardDoc]:
    _check_header(raw)
    entries = _require(raw, "standards", list, "<root>")
    docs: list[CodingStandardDoc] = []
    seen: set[str] = set()
    for i, entry in enumerate(entries):
        where = f"standards[{i}]"
        ident = _require(entry, "id", str, where)
        if not ident:
            raise SchemaError(f"{where}.id", "must be nonempty")
        if ident in seen:
            raise DuplicateIdError(ident)
        seen.add(ident)
        language = _require(entry, "language", str, where)
        if not _tag_ok(language, LANGUAGES):
            raise SchemaError(f"{where}.language", f"unknown language {language!r}")
        url = entry.get("source_url")
        if url is not None and not isinstance(url, str):
            raise SchemaError(f"{where}.source_url", "expected string or null")
        docs.append(CodingStandardDoc(
            id=ident,
            title=_require(entry, "title", str, where),
            language=language,
            sentences=_str_list(entry, "sentences", where, nonempty=True),
            source_url=url,
        ))
    return docs


def _parse_option(raw: Any, where: str) -> OptionDoc:
    name = _require(raw, "option_name", str, where)
    data_type = _require(raw, "data_type", str, where)
    if not _tag_ok(data_type, DATA_TYPES):
        raise SchemaError(f"{where}.data_type", f"unknown data type {data_type!r}")
    vr = _require(raw, "value_range", dict, where)
    kind = _require(vr, "kind", str, f"{where}.value_range")
    if kind not in ("finite", "unbounded"):
        raise SchemaError(f"{where}.value_range.kind", f"unknown kind {kind!r}")
    literals = vr.get("literals", [])
    if not isinstance(literals, list) or not all(isinstance(x, str) for x in literals):
        raise SchemaError(f"{where}.value_range.literals", "expected a list of strings")
    if kind == "unbounded" and literals:
        raise SchemaError(f"{where}.value_range.literals", "unbounded range lists no literals")
    if kind == "finite":
        if len(set(literals)) != len(literals):
            raise SchemaError(f"{where}.value_range.literals", "duplicate literal")
        if data_type == "boolean" and sorted(literals) != ["false", "true"]:
            raise SchemaError(f"{where}.value_range.literals", "boolean range must be exactly true, false")
        if len(literals) < (2 if data_type in ("boolean", "enum") else 1):
            raise SchemaError(f"{where}.value_range.literals", "too few literals")
    elif data_type in ("boolean", "enum"):
        raise SchemaError(f"{where}.value_range.kind", f"{data_type} options need a finite range")
    flag = raw.get("specifies_checked_objects", False)
    if not isinstance(flag, bool):
        raise SchemaError(f"{where}.specifies_checked_objects", "expected boolean")
    desc = raw.get("description", "")
    if not isinstance(desc, str):
        raise SchemaError(f"{where}.description", "expected string")
    rng = ValueRange.finite(*literals) if kind == "finite" else ValueRange.unbounded()
    return OptionDoc(name, data_type, rng, desc, flag)


def parse_linter_docs(raw: Any) -> list[LinterConfigDoc]:
    _check_header(raw)
    linter = _require(raw, "linter", str, "<root>")
    if not _tag_ok(linter, LINTERS):
        raise SchemaError("linter", f"unknown linter {linter!r}")
    configs = _require(raw, "configs", list, "<root>")
    docs: list[LinterConfigDoc] = []
    seen: set[str] = set()
    for i, entry in enumerate(configs):
        where = f"configs[{i}]"
        name = _require(entry, "config_name", str, where)
        if not name:
            raise SchemaError(f"{where}.config_name", "must be nonempty")
        if name in seen:
            raise DuplicateIdError(f"{linter}:{name}")
        seen.add(name)
        options = []
        opt_names: set[str] = set()
        for j, opt in enumerate(_require(entry, "options", list, where)):
            parsed = _parse_option(opt, f"{where}.options[{j}]")
            if parsed.option_name in opt_names:
                raise SchemaError(f"{where}.options[{j}].option_name", "duplicate option")
            opt_names.add(parsed.option_name)
            options.append(parsed)
        docs.append(LinterConfigDoc(
            config_name=name,
            description_sentences=_str_list(entry, "description_sentences", where, nonempty=False),
            options=tuple(options),
            linter=linter,
        ))
    return docs


def load_coding_standards(path: str | Path) -> list[CodingStandardDoc]:
    return parse_standards(_read_json(path))


def load_linter_docs(path: str | Path) -> list[LinterConfigDoc]:
    return parse_linter_docs(_read_json(path))


def standards_to_json(docs: Iterable[CodingStandardDoc]) -> dict:
    return {
        "version": 1,
        "standards": [
            {"id": d.id, "title": d.title, "language": d.language,
             "sentences": list(d.sentences), "source_url": d.source_url}
            for d in docs
        ],
    }


def linter_docs_to_json(docs: Iterable[LinterConfigDoc]) -> dict:
    docs = list(docs)
    linters = {d.linter for d in docs}
    if len(linters) > 1:
        raise ValueError(f"mixed linters in one docs file: {sorted(linters)}")
    return {
        "version": 1,
        "linter": linters.pop() if linters else "checkstyle",
        "configs": [
            {
                "config_name": d.config_name,
                "description_sentences": list(d.description_sentences),
                "options": [
                    {"option_name": o.option_name, "data_type": o.data_type,
                     "value_range": {"kind": o.value_range.kind, "literals": list(o.value_range.literals)},
                     "description": o.description,
                     "specifies_checked_objects": o.specifies_checked_objects}
                    for o in d.options
                ],
            }
            for d in docs
        ],
    }


def write_json(obj: Any, path: str | Path) -> None:
    """Write with a stable layout so regenerated files diff cleanly."""
    text = json.dumps(obj, indent=1, ensure_ascii=False) + "\n"
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CorpusIOError(str(exc)) from exc


def save_coding_standards(docs: Iterable[CodingStandardDoc], path: str | Path) -> None:
    write_json(standards_to_json(docs), path)


def save_linter_docs(docs: Iterable[LinterConfigDoc], path: str | Path) -> None:
    write_json(linter_docs_to_json(docs), path)


def data_path(name: str) -> Path:
    """Path of a file shipped in the package data directory."""
    return Path(str(resources.files("lintcomp") / "data" / name))


# code spans are masked before splitting so their dots never end a sentence
_CODE_SPAN = re.compile(r"`[^`]*`")
_BOUNDARY = re.compile(r"(?<=[.!?])\s+")


def split_sentences(text: str) -> list[str]:
    spans: list[str] = []

    def mask(m: re.Match) -> str:
        spans.append(m.group(0))
        return f"\x00{len(spans) - 1}\x00"

    masked = _CODE_SPAN.sub(mask, text)
    out = []
    for piece in _BOUNDARY.split(masked):
        piece = re.sub(r"\x00(\d+)\x00", lambda m: spans[int(m.group(1))], piece).strip()
        if piece:
            out.append(piece)
    return out
