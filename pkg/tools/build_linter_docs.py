"""Regenerate the packaged Checkstyle and ESLint documentation files.

Inputs are the raw extracts in tools/raw/: cs_checks.json (from cs_classes.py
run over the checkstyle 8.24 jar) and eslint_meta.json (from dump_eslint.js
run inside the eslint 8.57.0 package).

    python3 tools/build_linter_docs.py
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT.parent / "src"))

from cs_curated import (  # noqa: E402
    ADDED_CHECKS, DESCRIPTIONS, ENUM_STRINGS, REGEX_STRINGS, SKIP_PROPS, TOKENS,
)
from lintcomp.corpus import (  # noqa: E402
    LinterConfigDoc, OptionDoc, ValueRange, data_path, parse_linter_docs, save_linter_docs,
)

BOOL = ValueRange.finite("true", "false")


def humanize(name: str) -> str:
    words = re.sub(r"([a-z0-9])([A-Z])", r"\1 \2", name).replace("_", " ").split()
    return " ".join(w.lower() if not w.isupper() or len(w) == 1 else w for w in words)


def cs_option(check: str, prop: str, data_type: str, literals: list[str] | None) -> OptionDoc:
    if (check, prop) in ENUM_STRINGS:
        data_type, literals = "enum", ENUM_STRINGS[(check, prop)]
    elif (check, prop) in REGEX_STRINGS:
        data_type = "regex"
    if data_type.startswith("other([") or data_type == "set":
        data_type = "set"
    if data_type == "boolean":
        rng = BOOL
    elif data_type == "enum":
        literals = [x.lower() for x in literals]
        rng = ValueRange.finite(*literals)
    else:
        rng = ValueRange.unbounded()
    desc = f"Sets {humanize(prop)}."
    if data_type == "enum":
        desc = f"Sets {humanize(prop)}, one of {', '.join(rng.literals)}."
    return OptionDoc(prop, data_type, rng, desc, False)


def build_checkstyle(raw_path: Path) -> list[LinterConfigDoc]:
    raw = json.loads(raw_path.read_text())
    for name, (package, treewalker, props) in ADDED_CHECKS.items():
        assert name not in raw, name
        raw[name] = {
            "package": package, "treewalker": treewalker,
            "props": {p: [t, lits] for p, t, lits in props},
        }
    missing = set(raw) ^ set(DESCRIPTIONS)
    assert not missing, f"descriptions out of sync: {sorted(missing)}"
    docs = []
    for name in sorted(raw):
        entry = raw[name]
        options = [
            cs_option(name, prop, t, lits)
            for prop, (t, lits) in sorted(entry["props"].items())
            if prop not in SKIP_PROPS
        ]
        if not entry["treewalker"] and "fileExtensions" not in entry["props"]:
            options.append(OptionDoc(
                "fileExtensions", "set", ValueRange.unbounded(),
                "File extensions the check applies to.", False))
        if name in TOKENS:
            options.append(OptionDoc(
                "tokens", "set", ValueRange.unbounded(),
                f"Token types the check visits, for example {TOKENS[name]}.", True))
        docs.append(LinterConfigDoc(name, tuple(DESCRIPTIONS[name]), tuple(options), "checkstyle"))
    return docs


# ESLint: JSON schemas are flattened into option docs. Positional scalar slots
# become options named "$1", "$2"; object properties become named options.

def _resolve(schema, defs):
    if isinstance(schema, dict) and "$ref" in schema:
        key = schema["$ref"].rsplit("/", 1)[-1]
        return _resolve(defs.get(key, {}), defs)
    return schema


def _alternatives(schema, defs):
    schema = _resolve(schema, defs)
    if not isinstance(schema, dict):
        return []
    for key in ("oneOf", "anyOf"):
        if key in schema:
            out = []
            for alt in schema[key]:
                out.extend(_alternatives(alt, defs))
            return out
    return [schema]


def _positions(schema, defs) -> list[list[dict]]:
    """Per-position alternative lists for a rule's options array."""
    if schema is None or schema == []:
        return []
    if isinstance(schema, list):
        return [_alternatives(s, defs) for s in schema]
    schema = _resolve(schema, defs)
    if "anyOf" in schema or "oneOf" in schema:
        merged: list[list[dict]] = []
        for alt in _alternatives(schema, defs):
            for i, alts in enumerate(_positions(alt, defs)):
                if i == len(merged):
                    merged.append([])
                merged[i].extend(alts)
        return merged
    if schema.get("type") == "array":
        items = schema.get("items")
        if isinstance(items, list):
            return [_alternatives(s, defs) for s in items]
        if isinstance(items, dict):
            # variadic list of values: one set-valued slot
            return [[{"type": "array", "items": items}]]
    return []


def _scalar_kind(alts, defs) -> tuple[str, list[str]]:
    literals: list[str] = []
    kinds = set()
    for alt in alts:
        alt = _resolve(alt, defs)
        if "enum" in alt:
            literals.extend(json.dumps(x) if x is None or isinstance(x, bool) else str(x) for x in alt["enum"])
            kinds.add("enum")
        elif "type" in alt:
            t = alt["type"]
            kinds.add(t if isinstance(t, str) else "|".join(t))
        else:
            kinds.add("object")
    literals = list(dict.fromkeys(literals))
    if kinds == {"enum"}:
        if literals and set(literals) <= {"true", "false"}:
            return "boolean", []
        return ("enum" if len(literals) >= 2 else "string"), literals
    if kinds == {"boolean"}:
        return "boolean", []
    if kinds == {"integer"} or kinds == {"number"}:
        return "integer", []
    if kinds == {"string"}:
        return "string", []
    if kinds == {"array"}:
        return "set", []
    return f"other({'|'.join(sorted(kinds))})", []


def _es_option(name: str, alts, defs, checked: bool = False) -> OptionDoc:
    data_type, literals = _scalar_kind(alts, defs)
    if data_type == "string" and "pattern" in name.lower():
        data_type = "regex"
    if data_type == "boolean":
        rng = BOOL
    elif data_type in ("enum", "string") and literals:
        rng = ValueRange.finite(*literals)
    else:
        rng = ValueRange.unbounded()
    label = f"positional option {name[1:]}" if name.startswith("$") else humanize(name)
    desc = f"Sets {label}."
    if rng.is_finite and data_type != "boolean":
        desc = f"Sets {label}, one of {', '.join(rng.literals)}."
    return OptionDoc(name, data_type, rng, desc, checked)


# variadic selectors that name the checked objects themselves
ES_OBJECT_SELECTORS = {
    "no-restricted-globals", "no-restricted-imports", "no-restricted-modules",
    "no-restricted-properties", "no-restricted-syntax", "no-restricted-exports",
}


def build_eslint(raw_path: Path) -> list[LinterConfigDoc]:
    raw = json.loads(raw_path.read_text())
    docs = []
    for entry in sorted(raw, key=lambda e: e["name"]):
        schema = entry["schema"]
        defs = schema.get("definitions", {}) if isinstance(schema, dict) else {}
        options: dict[str, OptionDoc] = {}
        for i, alts in enumerate(_positions(schema, defs), start=1):
            objects = [a for a in alts if _resolve(a, defs).get("type") == "object" and "properties" in _resolve(a, defs)]
            scalars = [a for a in alts if a not in objects]
            if scalars:
                checked = entry["name"] in ES_OBJECT_SELECTORS and i == 1
                options[f"${i}"] = _es_option(f"${i}", scalars, defs, checked)
            for obj in objects:
                for prop, sub in _resolve(obj, defs)["properties"].items():
                    if prop not in options:
                        options[prop] = _es_option(prop, _alternatives(sub, defs), defs)
        sentences = [entry["description"].rstrip(".") + "."]
        if entry["deprecated"]:
            repl = ", ".join(entry["replacedBy"])
            sentences.append(f"This rule is deprecated{' in favor of ' + repl if repl else ''}.")
        docs.append(LinterConfigDoc(entry["name"], tuple(sentences), tuple(options.values()), "eslint"))
    return docs


def main() -> None:
    raw = ROOT / "raw"
    for name, docs in (
        ("checkstyle_docs.json", build_checkstyle(raw / "cs_checks.json")),
        ("eslint_docs.json", build_eslint(raw / "eslint_meta.json")),
    ):
        out = data_path(name)
        save_linter_docs(docs, out)
        # loader validation doubles as a schema check of the generated file
        print(name, len(parse_linter_docs(json.loads(out.read_text()))))


if __name__ == "__main__":
    main()
