"""Regenerate the packaged standards corpora and gold benchmarks.

    python3 tools/build_standards.py

Reads standards_java.JAVA and standards_js.JS, checks every gold assignment
against the packaged linter docs, and writes four files into lintcomp/data.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT.parent / "src"))

import standards_java  # noqa: E402
import standards_js  # noqa: E402
from lintcomp.corpus import (  # noqa: E402
    CodingStandardDoc, data_path, load_linter_docs, save_coding_standards, write_json,
)

# (total, no config, with config, name only, name+options, multi config)
EXPECTED = {
    "java": (68, 19, 49, 7, 42, 13),
    "javascript": (149, 89, 60, 15, 45, 16),
}


def categories(entries) -> tuple[int, ...]:
    total = len(entries)
    empty = sum(1 for _, _, _, gold in entries if not gold)
    name_only = sum(1 for *_, gold in entries if gold and not any(a for _, a in gold))
    multi = sum(1 for *_, gold in entries if len(gold) >= 2)
    return total, empty, total - empty, name_only, total - empty - name_only, multi


def check_value(where: str, opt, value: str) -> None:
    dt = opt.data_type
    if opt.value_range.is_finite:
        assert value in opt.value_range.literals, f"{where}: {value!r} not in {opt.value_range.literals}"
    elif dt == "integer":
        int(value)
    elif dt.startswith("other(") and value[:1] in "[{":
        json.loads(value)


def check_gold(entries, docs) -> None:
    by_name = {d.config_name: d for d in docs}
    for ident, _, _, gold in entries:
        names = [n for n, _ in gold]
        assert len(set(names)) == len(names), f"{ident}: repeated config"
        for name, assigns in gold:
            assert name in by_name, f"{ident}: unknown config {name}"
            for opt_name, value in assigns.items():
                opt = by_name[name].option(opt_name)
                assert opt is not None, f"{ident}: {name} has no option {opt_name}"
                check_value(f"{ident}/{name}.{opt_name}", opt, value)


def benchmark_json(linter: str, entries) -> dict:
    return {
        "version": 1,
        "linter": linter,
        "entries": [
            {"standard_id": ident,
             "gold_configs": [
                 {"config_name": name,
                  "assignments": [{"option_name": o, "option_value": v} for o, v in assigns.items()]}
                 for name, assigns in gold]}
            for ident, _, _, gold in entries
        ],
    }


def main() -> None:
    profiles = (
        ("java", "checkstyle", standards_java.JAVA, standards_java.URL,
         "google_java_standards.json", "benchmark_checkstyle_java.json", "checkstyle_docs.json"),
        ("javascript", "eslint", standards_js.JS, standards_js.URL,
         "google_js_standards.json", "benchmark_eslint_js.json", "eslint_docs.json"),
    )
    for language, linter, entries, url, std_file, bench_file, docs_file in profiles:
        got = categories(entries)
        assert got == EXPECTED[language], f"{language}: {got} != {EXPECTED[language]}"
        check_gold(entries, load_linter_docs(data_path(docs_file)))
        docs = [CodingStandardDoc(ident, title, language, tuple(sents), url)
                for ident, title, sents, _ in entries]
        save_coding_standards(docs, data_path(std_file))
        write_json(benchmark_json(linter, entries), data_path(bench_file))
        print(language, got)


if __name__ == "__main__":
    main()
