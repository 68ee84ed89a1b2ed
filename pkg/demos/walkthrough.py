"""Offline tour of the compiler on the shipped replay fixture.

Shows the five stages on the source-file-structure standard, then scores the
default run, the three ablations and the six baselines on the 10-standard
benchmark slice. Every model answer comes from the replay cache, so this runs
without a network or API key.

    python3 demos/walkthrough.py
"""

from __future__ import annotations

import logging

from lintcomp.corpus import data_path, load_coding_standards, load_linter_docs
from lintcomp.dsl import format_rule
from lintcomp.eval import (
    BASELINE_KINDS, BaselineRunner, GoldConfiguration, Granularity, PredictionSet, baseline_predictions,
    evaluate_run, load_benchmark,
)
from lintcomp.instructions import InstructionSet
from lintcomp.llm import Gateway, ReplayCache
from lintcomp.pipeline import Flags, Pipeline

FIXTURES = data_path("fixtures")
MODEL = "fixture-scripted"


def show_one(pipe: Pipeline, doc) -> None:
    print(f"== {doc.title}")
    for s in doc.sentences:
        print(f"   | {s}")
    r = pipe.compile(doc)
    print("stage 1, DSL rules:")
    for i, rule in enumerate(r.dsl.rules, 1):
        print(f"   {i}. {format_rule(rule)}")
    print(f"stage 2, selected: {', '.join(r.selected) or '(none)'}")
    for w in r.warnings:
        print(f"   warning: {w}")
    print("stage 3, candidates:")
    for c in r.candidates:
        opts = ", ".join(f"{a.option_name}={a.value}" for a in c.assignments) or "no options"
        print(f"   {c.config_name} ({opts}) against rule {c.standard_rule_index}")
    print("stage 4, alignment:")
    for a in r.aligned:
        marks = " ".join(f"{k}={v.value}" for k, v in a.verdicts.items())
        print(f"   {a.config_name}: {'accepted' if a.accepted else 'rejected'} [{marks}]")
        if not a.accepted and "objects" in a.notes:
            print(f"      objects: {a.notes['objects']}")
    print("stage 5, checkstyle_xml:")
    print("   " + r.emitted["checkstyle_xml"].text.replace("\n", "\n   ").rstrip())


def as_predictions(name: str, results) -> PredictionSet:
    return PredictionSet(name, {
        r.standard_id: [GoldConfiguration(a.config_name, tuple((x.option_name, x.value) for x in a.assignments))
                        for a in r.accepted]
        for r in results})


def main() -> None:
    # stage-2 drops are already shown in the walkthrough
    logging.basicConfig(level=logging.ERROR)
    cache = ReplayCache(FIXTURES / "replay_checkstyle.jsonl")
    gw = Gateway(mode="replay", cache=cache, model_id=MODEL)
    iset = InstructionSet.load(FIXTURES / "instructions_checkstyle.json")
    standards = load_coding_standards(FIXTURES / "java_standards.json")
    bench = load_benchmark(FIXTURES / "benchmark_java.json")

    show_one(Pipeline(gw, iset), standards[0])

    runs = []
    for name, flags in [("default", Flags()), ("no_dsl", Flags(no_dsl=True)),
                        ("no_selector", Flags(no_selector=True)), ("no_checker", Flags(no_checker=True))]:
        runs.append(as_predictions(name, Pipeline(gw, iset, flags).compile_all(standards)))
    runner = BaselineRunner(gw, load_linter_docs(FIXTURES / "checkstyle_docs.json"))
    for kind in BASELINE_KINDS:
        runs.append(baseline_predictions(kind, runner.run_all(kind, standards)))

    report = evaluate_run(bench, runs)
    print("\n== option-value level on the fixture slice (answers are hand-written, so this shows the")
    print("   mechanics, not model quality)")
    print(f"   {'run':<20} {'acc':>6} {'p':>6} {'r':>6} {'f1':>6}")
    for run in report.runs:
        m = run.overall[Granularity.OPTION_VALUE]
        print(f"   {run.name:<20} {m.acc*100:6.1f} {m.p*100:6.1f} {m.r*100:6.1f} {m.f1*100:6.1f}")


if __name__ == "__main__":
    main()
