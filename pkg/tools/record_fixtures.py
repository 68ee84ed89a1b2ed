"""Regenerate the replay fixture under src/lintcomp/data/fixtures/.

Every model answer comes from fixture_script.py; this only runs the real
instruction builder, pipeline and baselines in record mode so the cache keys
match the shipped prompts. Rerun after any prompt template change.

    python3 tools/record_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT.parent / "src"))

import fixture_script as fs  # noqa: E402
from lintcomp.corpus import (  # noqa: E402
    LinterConfigDoc, data_path, load_coding_standards, load_linter_docs, save_coding_standards,
    save_linter_docs, write_json,
)
from lintcomp.eval import BASELINE_KINDS, BaselineRunner, benchmark_to_json, load_benchmark, Benchmark  # noqa: E402
from lintcomp.instructions import InstructionBuilder  # noqa: E402
from lintcomp.llm import CompletionRequest, Gateway, LlmError, ReplayCache, ScriptedBackend  # noqa: E402
from lintcomp.pipeline import Flags, Pipeline  # noqa: E402

FIXTURES = data_path("fixtures")
RECORDED_AT = "2026-01-01T00:00:00Z"
PROFILES = {
    "default": Flags(),
    "no_selector": Flags(no_selector=True),
    "no_checker": Flags(no_checker=True),
    "no_dsl": Flags(no_dsl=True),
}
OVERRIDES = {"no_selector": fs.PIPELINE_NO_SELECTOR, "no_dsl": fs.PIPELINE_NO_DSL}


class StrictCache(ReplayCache):
    """Refuses to record two different answers for one request."""

    def put(self, key, response_text, digest=None):
        old = self.get(key)
        if old is not None and old.response_text != response_text:
            raise SystemExit(f"conflicting answers for {digest}: {old.response_text!r} vs {response_text!r}")
        return super().put(key, response_text, digest)


def answer(profile: str, tag: str, *, stage1_default: str | None = None) -> str:
    """Look up the scripted answer for one request tag."""
    if tag.startswith("baseline:"):
        _, kind, sid = tag.split(":", 2)
        return fs.BASELINE_OVERRIDES.get(kind, {}).get(sid, fs.BASELINES.get(sid, "NONE"))
    for table in (OVERRIDES.get(profile, {}), fs.PIPELINE, fs.INSTRUCTIONS):
        if tag in table:
            return table[tag]
    if tag.startswith("stage4:"):
        return fs.STAGE4_DEFAULT
    if profile == "no_selector" and tag.startswith("stage3:"):
        return "NONE"
    if stage1_default is not None and tag.startswith("stage1:"):
        return stage1_default
    raise LlmError(f"fixture script has no answer for {profile}/{tag}")


def scripted(profile: str, **kw) -> ScriptedBackend:
    return ScriptedBackend(lambda req: answer(profile, req.tag, **kw))


def fixture_docs() -> list[LinterConfigDoc]:
    full = {d.config_name: d for d in load_linter_docs(data_path("checkstyle_docs.json"))}
    out = []
    for name, keep in fs.FIXTURE_CONFIGS.items():
        doc = full[name]
        opts = tuple(o for o in doc.options if o.option_name in keep)
        assert [o.option_name for o in opts] == sorted(keep, key=[o.option_name for o in doc.options].index)
        out.append(LinterConfigDoc(doc.config_name, doc.description_sentences, opts, doc.linter))
    return out


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    docs = fixture_docs()
    save_linter_docs(docs, FIXTURES / "checkstyle_docs.json")
    wanted = set(fs.FIXTURE_STANDARDS)
    standards = [s for s in load_coding_standards(data_path("google_java_standards.json")) if s.id in wanted]
    standards.sort(key=lambda s: fs.FIXTURE_STANDARDS.index(s.id))
    save_coding_standards(standards, FIXTURES / "java_standards.json")
    bench = load_benchmark(data_path("benchmark_checkstyle_java.json"))
    by_id = {e.standard_id: e for e in bench}
    sub = Benchmark(bench.linter, tuple(by_id[s] for s in fs.FIXTURE_STANDARDS))
    write_json(benchmark_to_json(sub), FIXTURES / "benchmark_java.json")

    cache_path = FIXTURES / "replay_checkstyle.jsonl"
    cache_path.unlink(missing_ok=True)
    cache = StrictCache(cache_path, clock=lambda: RECORDED_AT)

    def gateway(profile: str) -> Gateway:
        # one request at a time keeps the cache file order stable
        return Gateway(mode="record", backend=scripted(profile), cache=cache,
                       model_id=fs.FIXTURE_MODEL, parallelism=1)

    report = InstructionBuilder(gateway("default")).build_instruction_set(docs)
    if not report.ok or report.warnings:
        raise SystemExit(f"instruction build not clean: {report.failures} {report.warnings}")
    iset = report.instruction_set
    iset.save(FIXTURES / "instructions_checkstyle.json")

    for profile, flags in PROFILES.items():
        pipe = Pipeline(gateway(profile), iset, flags)
        for doc in standards:
            result = pipe.compile(doc)
            if not result.ok:
                raise SystemExit(f"{profile}/{doc.id}: {result.stage_status}")

    runner = BaselineRunner(gateway("default"), docs)
    for kind in BASELINE_KINDS:
        runner.run_all(kind, standards)
    print(f"recorded {len(cache)} entries, {len(iset)} instructions, {len(standards)} standards")


if __name__ == "__main__":
    main()
