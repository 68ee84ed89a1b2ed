"""Command-line entry point: ``lintcomp <command> ...``.

Exit codes: 0 on success, 1 on bad input or configuration, 2 when some model
calls failed but the rest of the output was written.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from . import __version__, prompts
from .corpus import CorpusError, load_coding_standards, load_linter_docs, write_json
from .emitters import TARGET_LINTER, TARGET_SUFFIX, TARGETS, merge_configs, render
from .eval import (
    BASELINE_KINDS, DEFAULT_K, DEFAULT_TOKEN_LIMIT, BaselineRunner, GoldConfiguration, PredictionSet,
    baseline_predictions, evaluate_run, load_benchmark,
)
from .instructions import InstructionBuilder, InstructionSet
from .llm import DEFAULT_MODEL, Gateway, GatewaySettings, LlmError, ReplayCache
from .pipeline import Flags, Pipeline

log = logging.getLogger("lintcomp")

EXIT_OK, EXIT_INPUT, EXIT_PARTIAL = 0, 1, 2
MODES = ("live", "record", "replay")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for partial failures here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------

def _timestamp(mode: str, cache: ReplayCache | None) -> str:
    """Run time for manifests; replay runs take it from the cache so outputs stay byte-stable."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch:
        return datetime.fromtimestamp(int(epoch), timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    if mode == "replay":
        stamps = [e.recorded_at for e in cache.entries()] if cache is not None else []
        return max(stamps, default="1970-01-01T00:00:00Z")
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def manifest(gw: Gateway, *, flags: Flags | None = None, iset: InstructionSet | None = None,
             extra: dict | None = None) -> dict:
    out = {
        "tool_version": __version__,
        "model_id": gw.model_id,
        "templates": prompts.template_hashes(),
        "instruction_set": iset.digest if iset is not None else None,
        "flags": flags.to_json() if flags is not None else None,
        "mode": gw.mode,
        "timestamp": _timestamp(gw.mode, gw.cache),
    }
    out.update(extra or {})
    return out


def make_gateway(args) -> Gateway:
    if args.mode not in MODES:
        raise UsageError(f"unknown mode {args.mode!r}; expected one of {', '.join(MODES)}")
    if args.mode in ("replay", "record") and not args.cache:
        raise UsageError(f"--cache is required in {args.mode} mode")
    cache = ReplayCache(args.cache) if args.cache else None
    if args.mode == "replay" and not Path(args.cache).exists():
        raise UsageError(f"replay cache {args.cache} does not exist")
    settings = GatewaySettings.from_env()
    if args.model:
        settings = GatewaySettings(settings.api_key, settings.base_url, args.model, settings.embed_model_id)
    if args.mode != "replay" and not settings.api_key:
        raise UsageError("live and record modes need LINTCOMP_API_KEY or OPENAI_API_KEY")
    return Gateway.from_settings(settings, mode=args.mode, cache=cache, parallelism=args.parallelism)


def _gateway_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", default="replay", help="live, record or replay (default: replay)")
    p.add_argument("--cache", help="replay cache file (JSON lines)")
    p.add_argument("--model", help=f"model id (default: $LINTCOMP_MODEL or {DEFAULT_MODEL})")
    p.add_argument("--parallelism", type=int, default=4, help="concurrent model calls")


def _need_file(path: str, what: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"{what} {path} does not exist")
    return p


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_build_instructions(args) -> int:
    docs = load_linter_docs(_need_file(args.docs, "docs file"))
    if args.linter and any(d.linter != args.linter for d in docs):
        raise UsageError(f"{args.docs} is not a {args.linter} docs file")
    gw = make_gateway(args)
    report = InstructionBuilder(gw).build_instruction_set(docs)
    iset = report.instruction_set
    iset.manifest.update(manifest(gw, extra={"docs": Path(args.docs).name}))
    iset.save(args.out)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    print(f"wrote {len(iset)} instructions to {args.out}")
    if report.failures:
        print(f"{len(report.failures)} configurations failed:", file=sys.stderr)
        for name, error in sorted(report.failures.items()):
            print(f"  {name}: {error}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_compile(args) -> int:
    targets = args.target or []
    for t in targets:
        if t not in TARGETS:
            raise UsageError(f"unknown target {t!r}; expected one of {', '.join(TARGETS)}")
    standards = load_coding_standards(_need_file(args.standards, "standards file"))
    iset = InstructionSet.load(_need_file(args.instructions, "instruction set"))
    if not targets:
        targets = [t for t, linter in TARGET_LINTER.items() if linter == iset.linter]
    for t in targets:
        if TARGET_LINTER[t] != iset.linter:
            raise UsageError(f"target {t} needs a {TARGET_LINTER[t]} instruction set, got {iset.linter}")
    flags = Flags(no_dsl=args.no_dsl, no_selector=args.no_selector, no_checker=args.no_checker,
                  llm_render=args.llm_render)
    gw = make_gateway(args)
    pipe = Pipeline(gw, iset, flags)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    man = manifest(gw, flags=flags, iset=iset)

    results = pipe.compile_all(standards, targets)
    failed = []
    for r in results:
        doc = r.to_json(with_timings=args.timings)
        doc["manifest"] = man
        write_json(doc, out / f"{r.standard_id}.result.json")
        for t, emitted in r.emitted.items():
            (out / f"{r.standard_id}.{TARGET_SUFFIX[t]}").write_text(emitted.text, encoding="utf-8")
        if not r.ok:
            failed.append(r.standard_id)
    merged = merge_configs(r.accepted for r in results)
    for t in targets:
        (out / f"merged.{TARGET_SUFFIX[t]}").write_text(render(merged, t).text, encoding="utf-8")
    preds = PredictionSet(args.name or flags.profile,
                          {r.standard_id: _as_gold(r) for r in results}, manifest=man)
    preds.save(out / "predictions.json")

    accepted = sum(len(r.accepted) for r in results)
    print(f"compiled {len(results)} standards, {accepted} accepted configurations, into {out}")
    if failed:
        print(f"{len(failed)} standards had stage failures: {', '.join(failed)}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def _as_gold(result) -> list[GoldConfiguration]:
    return [GoldConfiguration(a.config_name, tuple((x.option_name, x.value) for x in a.assignments))
            for a in result.accepted]


def cmd_evaluate(args) -> int:
    bench = load_benchmark(_need_file(args.benchmark, "benchmark"))
    runs = []
    for spec in args.predictions:
        name, sep, path = spec.partition("=")
        if not sep:
            name, path = None, spec
        runs.append(PredictionSet.load(_need_file(path, "predictions file"), name))
    names = [r.name for r in runs]
    if len(set(names)) != len(names):
        raise UsageError(f"prediction sets need distinct names, got {names}; use NAME=PATH")
    report = evaluate_run(bench, runs)
    for run in report.runs:
        if run.missing:
            print(f"{run.name}: {len(run.missing)} standards without predictions (counted as empty): "
                  f"{', '.join(run.missing)}", file=sys.stderr)
        if run.unknown:
            print(f"{run.name}: {len(run.unknown)} predictions for standards not in the benchmark: "
                  f"{', '.join(run.unknown)}", file=sys.stderr)
    table = report.table()
    sys.stdout.write(table)
    if args.report:
        report.manifest = {"tool_version": __version__, "benchmark": Path(args.benchmark).name,
                           "runs": {r.name: r.manifest for r in runs}}
        write_json(report.to_json(), args.report)
        Path(args.report).with_suffix(".txt").write_text(table, encoding="utf-8")
    return EXIT_OK


def cmd_baseline(args) -> int:
    if args.kind not in BASELINE_KINDS:
        raise UsageError(f"unknown baseline kind {args.kind!r}; expected one of {', '.join(BASELINE_KINDS)}")
    if args.k < 1:
        raise UsageError("--k must be positive")
    docs = load_linter_docs(_need_file(args.docs, "docs file"))
    standards = load_coding_standards(_need_file(args.standards, "standards file"))
    gw = make_gateway(args)
    runner = BaselineRunner(gw, docs, k=args.k, token_limit=args.token_limit)
    results = runner.run_all(args.kind, standards)
    preds = baseline_predictions(args.name or args.kind, results)
    preds.manifest = manifest(gw, extra={"baseline": args.kind, "k": args.k, "token_limit": args.token_limit})
    preds.save(args.out)
    for r in results:
        if r.retrieved:
            log.info("%s: retrieved %d entries: %s", r.standard_id, len(r.retrieved), ", ".join(r.retrieved))
        if r.inapplicable:
            print(f"{r.standard_id}: inapplicable ({r.error})", file=sys.stderr)
    errors = [r for r in results if r.error and not r.inapplicable]
    print(f"wrote {args.kind} predictions for {len(results)} standards to {args.out}")
    if errors:
        print(f"{len(errors)} model calls failed", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_cache(args) -> int:
    path = _need_file(args.cache, "cache")
    cache = ReplayCache(path)
    if args.action == "stats":
        kinds = Counter(e.request_digest.get("tag", "").split(":")[0] or "?" for e in cache.entries())
        print(f"{path}: {len(cache)} entries")
        for kind, n in sorted(kinds.items()):
            print(f"  {kind}: {n}")
        return EXIT_OK
    if args.action == "compact":
        # rewrite with one line per key, keeping the winning entry
        entries = list(cache.entries())
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text("".join(e.to_json() + "\n" for e in entries), encoding="utf-8")
        tmp.replace(path)
        print(f"{path}: {len(entries)} entries")
        return EXIT_OK
    raise UsageError(f"unknown cache action {args.action!r}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lintcomp", description="Compile natural-language coding standards into "
                                                  "Checkstyle and ESLint configurations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-instructions", help="turn linter docs into a DSL instruction set")
    p.add_argument("--linter", choices=("checkstyle", "eslint"))
    p.add_argument("--docs", required=True)
    p.add_argument("--out", required=True)
    _gateway_args(p)
    p.set_defaults(func=cmd_build_instructions)

    p = sub.add_parser("compile", help="compile coding standards into linter configurations")
    p.add_argument("--standards", required=True)
    p.add_argument("--instructions", required=True)
    p.add_argument("--target", action="append", help=f"{' or '.join(TARGETS)}; repeatable")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--no-dsl", action="store_true", help="forward the standard's text instead of DSL rules")
    p.add_argument("--no-selector", action="store_true", help="offer every configuration to option matching")
    p.add_argument("--no-checker", action="store_true", help="accept candidates without the alignment check")
    p.add_argument("--llm-render", action="store_true", help="let the model write the final documents")
    p.add_argument("--timings", action="store_true", help="include stage timings (breaks byte equality)")
    p.add_argument("--name", help="run name recorded in predictions.json")
    _gateway_args(p)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("evaluate", help="score prediction sets against a benchmark")
    p.add_argument("--benchmark", required=True)
    p.add_argument("--predictions", nargs="+", required=True, metavar="[NAME=]PATH",
                   help="first set is compared against the others")
    p.add_argument("--report", help="write the JSON report here (and a .txt table beside it)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("baseline", help="run one single-prompt baseline")
    p.add_argument("--kind", required=True, help=", ".join(BASELINE_KINDS))
    p.add_argument("--docs", required=True)
    p.add_argument("--standards", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int, default=DEFAULT_K, help="retrieved entries for rag kinds")
    p.add_argument("--token-limit", type=int, default=DEFAULT_TOKEN_LIMIT)
    p.add_argument("--name", help="run name recorded in the predictions file")
    _gateway_args(p)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("cache", help="inspect or compact a replay cache")
    p.add_argument("action", choices=("stats", "compact"))
    p.add_argument("--cache", required=True)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, CorpusError, OSError, ValueError) as exc:
        print(f"lintcomp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LlmError as exc:
        print(f"lintcomp: model call failed: {exc}", file=sys.stderr)
        return EXIT_PARTIAL


if __name__ == "__main__":
    sys.exit(main())
