"""Benchmark loading, three-level matching, pooled metrics and the baseline runners.

Predictions and gold share one shape: a list of :class:`GoldConfiguration`
per standard. Matching works on unit sets:

* ``config_name``: one unit per configuration name
* ``option_name``: the bare name for option-less configurations, else one
  ``(name, option)`` unit per assignment
* ``option_value``: as above with the normalized value added

Names are case-folded, values trimmed, and a value is compared as the set of
its comma-separated items, so ``"A, B"`` equals ``"B,A"``.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from . import prompts
from .corpus import CodingStandardDoc, LinterConfigDoc, SchemaError, _read_json, write_json
from .llm import CacheMiss, Gateway, LlmError, cosine, render
from .responses import parse_option_lines

log = logging.getLogger(__name__)


class Granularity(str, enum.Enum):
    CONFIG_NAME = "config_name"
    OPTION_NAME = "option_name"
    OPTION_VALUE = "option_value"


LEVELS = tuple(Granularity)


@dataclass(frozen=True)
class GoldConfiguration:
    config_name: str
    assignments: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        names = [o for o, _ in self.assignments]
        if len(set(names)) != len(names):
            raise ValueError(f"{self.config_name}: repeated option name")

    def to_json(self) -> dict:
        return {"config_name": self.config_name,
                "assignments": [{"option_name": o, "option_value": v} for o, v in self.assignments]}

    @classmethod
    def from_json(cls, raw: Mapping, where: str = "config") -> "GoldConfiguration":
        if not isinstance(raw, Mapping) or not isinstance(raw.get("config_name"), str):
            raise SchemaError(f"{where}.config_name", "missing")
        assigns = raw.get("assignments", [])
        if not isinstance(assigns, list):
            raise SchemaError(f"{where}.assignments", "expected list")
        pairs = []
        for j, a in enumerate(assigns):
            if not isinstance(a, Mapping) or not isinstance(a.get("option_name"), str) \
                    or not isinstance(a.get("option_value"), str):
                raise SchemaError(f"{where}.assignments[{j}]", "expected option_name and option_value strings")
            pairs.append((a["option_name"], a["option_value"]))
        try:
            return cls(raw["config_name"], tuple(pairs))
        except ValueError as exc:
            raise SchemaError(f"{where}.assignments", str(exc)) from exc


@dataclass(frozen=True)
class BenchmarkEntry:
    standard_id: str
    gold_configs: tuple[GoldConfiguration, ...] = ()


@dataclass(frozen=True)
class Benchmark:
    linter: str
    entries: tuple[BenchmarkEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def ids(self) -> list[str]:
        return [e.standard_id for e in self.entries]


def parse_benchmark(raw: Any) -> Benchmark:
    if not isinstance(raw, Mapping) or raw.get("version") != 1:
        raise SchemaError("version", "expected 1")
    if not isinstance(raw.get("linter"), str):
        raise SchemaError("linter", "expected string")
    entries = raw.get("entries")
    if not isinstance(entries, list):
        raise SchemaError("entries", "expected list")
    out: list[BenchmarkEntry] = []
    seen: set[str] = set()
    for i, e in enumerate(entries):
        where = f"entries[{i}]"
        sid = e.get("standard_id") if isinstance(e, Mapping) else None
        if not isinstance(sid, str) or not sid:
            raise SchemaError(f"{where}.standard_id", "missing")
        if sid in seen:
            raise SchemaError(f"{where}.standard_id", f"duplicate {sid!r}")
        seen.add(sid)
        gold = e.get("gold_configs")
        if not isinstance(gold, list):
            raise SchemaError(f"{where}.gold_configs", "expected list")
        out.append(BenchmarkEntry(sid, tuple(
            GoldConfiguration.from_json(g, f"{where}.gold_configs[{j}]") for j, g in enumerate(gold))))
    return Benchmark(raw["linter"], tuple(out))


def load_benchmark(path: str | Path) -> Benchmark:
    return parse_benchmark(_read_json(path))


def benchmark_to_json(bench: Benchmark) -> dict:
    return {"version": 1, "linter": bench.linter,
            "entries": [{"standard_id": e.standard_id,
                         "gold_configs": [g.to_json() for g in e.gold_configs]} for e in bench]}


@dataclass(frozen=True)
class CategoryStats:
    total: int
    no_config: int
    with_config: int
    name_only: int
    name_and_options: int
    multi_config: int

    def as_row(self) -> tuple[int, ...]:
        return (self.total, self.no_config, self.with_config, self.name_only,
                self.name_and_options, self.multi_config)


def categorize(entry: BenchmarkEntry) -> list[str]:
    if not entry.gold_configs:
        return ["no_config"]
    cats = ["with_config"]
    if any(g.assignments for g in entry.gold_configs):
        cats.append("name_and_options")
    else:
        cats.append("name_only")
    if len(entry.gold_configs) >= 2:
        cats.append("multi_config")
    return cats


def category_stats(bench: Benchmark) -> CategoryStats:
    counts = {c: 0 for c in ("no_config", "with_config", "name_only", "name_and_options", "multi_config")}
    for e in bench:
        for c in categorize(e):
            counts[c] += 1
    return CategoryStats(len(bench), **counts)


# ---------------------------------------------------------------------------
# matching and metrics
# ---------------------------------------------------------------------------

def normalize_value(value: str) -> frozenset[str]:
    return frozenset(item.strip() for item in value.strip().split(",") if item.strip())


def unit_set(configs: Iterable[GoldConfiguration], granularity: Granularity | str) -> set:
    level = Granularity(granularity)
    units: set = set()
    for cfg in configs:
        name = cfg.config_name.strip().casefold()
        if level is Granularity.CONFIG_NAME or not cfg.assignments:
            units.add(name)
            continue
        for opt, value in cfg.assignments:
            opt = opt.strip().casefold()
            if level is Granularity.OPTION_NAME:
                units.add((name, opt))
            else:
                units.add((name, opt, normalize_value(value)))
    return units


@dataclass(frozen=True)
class MatchCounts:
    granularity: Granularity
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def exact(self) -> bool:
        return self.fp == 0 and self.fn == 0

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        if other.granularity is not self.granularity:
            raise ValueError("cannot add counts of different granularities")
        return MatchCounts(self.granularity, self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


def match(gold: set, predicted: set, granularity: Granularity | str) -> MatchCounts:
    return MatchCounts(Granularity(granularity), len(gold & predicted), len(predicted - gold),
                       len(gold - predicted))


def match_configs(gold: Sequence[GoldConfiguration], predicted: Sequence[GoldConfiguration],
                  granularity: Granularity | str) -> MatchCounts:
    return match(unit_set(gold, granularity), unit_set(predicted, granularity), granularity)


def prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    p = tp / (tp + fp) if tp + fp else 0.0
    r = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f1


@dataclass(frozen=True)
class LevelMetrics:
    acc: float
    p: float
    r: float
    f1: float
    counts: MatchCounts

    def to_json(self) -> dict:
        c = self.counts
        return {"acc": self.acc, "p": self.p, "r": self.r, "f1": self.f1,
                "tp": c.tp, "fp": c.fp, "fn": c.fn}


@dataclass
class MetricsReport:
    levels: dict[Granularity, LevelMetrics]
    # standard_id -> granularity -> exact match
    correct: dict[str, dict[Granularity, bool]] = field(default_factory=dict)

    def __getitem__(self, level: Granularity | str) -> LevelMetrics:
        return self.levels[Granularity(level)]

    def to_json(self) -> dict:
        return {
            "levels": {g.value: m.to_json() for g, m in self.levels.items()},
            "correct": {sid: {g.value: ok for g, ok in per.items()} for sid, per in self.correct.items()},
        }


def compute_metrics(per_standard: Mapping[str, Mapping[Granularity, MatchCounts]]) -> MetricsReport:
    """Pooled P/R/F1 over all units; Acc is the share of standards matched exactly."""
    levels: dict[Granularity, LevelMetrics] = {}
    n = len(per_standard)
    for g in LEVELS:
        pooled = MatchCounts(g)
        exact = 0
        for counts in per_standard.values():
            pooled = pooled + counts[g]
            exact += counts[g].exact
        p, r, f1 = prf(pooled.tp, pooled.fp, pooled.fn)
        levels[g] = LevelMetrics(exact / n if n else 0.0, p, r, f1, pooled)
    correct = {sid: {g: counts[g].exact for g in LEVELS} for sid, counts in per_standard.items()}
    return MetricsReport(levels, correct)


def score(bench: Benchmark, predictions: Mapping[str, Sequence[GoldConfiguration]]) -> MetricsReport:
    per = {e.standard_id: {g: match_configs(e.gold_configs, predictions.get(e.standard_id, ()), g)
                           for g in LEVELS} for e in bench}
    return compute_metrics(per)


# ---------------------------------------------------------------------------
# predictions files
# ---------------------------------------------------------------------------

@dataclass
class PredictionSet:
    name: str
    predictions: dict[str, list[GoldConfiguration]]
    # standards the method could not run on (prompt over the token limit)
    inapplicable: list[str] = field(default_factory=list)
    manifest: dict = field(default_factory=dict)
    # RAG baselines: standard_id -> retrieved configuration names
    retrieved: dict[str, list[str]] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "version": 1,
            "name": self.name,
            "manifest": self.manifest,
            "inapplicable": self.inapplicable,
            "predictions": {sid: [c.to_json() for c in cfgs] for sid, cfgs in self.predictions.items()},
        }
        if self.retrieved:
            out["retrieved"] = self.retrieved
        return out

    @classmethod
    def from_json(cls, raw: Any, name: str | None = None) -> "PredictionSet":
        if not isinstance(raw, Mapping) or raw.get("version") != 1:
            raise SchemaError("version", "expected 1")
        preds = raw.get("predictions")
        if not isinstance(preds, Mapping):
            raise SchemaError("predictions", "expected object")
        out = {}
        for sid, cfgs in preds.items():
            if not isinstance(cfgs, list):
                raise SchemaError(f"predictions.{sid}", "expected list")
            out[sid] = [GoldConfiguration.from_json(c, f"predictions.{sid}[{j}]") for j, c in enumerate(cfgs)]
        return cls(name or raw.get("name") or "run", out, list(raw.get("inapplicable", [])),
                   dict(raw.get("manifest", {})), dict(raw.get("retrieved", {})))

    def save(self, path: str | Path) -> None:
        write_json(self.to_json(), path)

    @classmethod
    def load(cls, path: str | Path, name: str | None = None) -> "PredictionSet":
        raw = _read_json(path)
        stored = raw.get("name") if isinstance(raw, Mapping) else None
        return cls.from_json(raw, name or stored or Path(path).stem)


# ---------------------------------------------------------------------------
# run evaluation
# ---------------------------------------------------------------------------

class MissingPrediction(Exception):
    """Diagnostic for a benchmark standard absent from a prediction set."""


@dataclass
class RunReport:
    name: str
    overall: MetricsReport | None
    by_category: dict[str, MetricsReport | None]
    missing: list[str]
    unknown: list[str]

    @property
    def inapplicable(self) -> bool:
        return self.overall is None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "inapplicable": self.inapplicable,
            "overall": self.overall.to_json()["levels"] if self.overall else None,
            "by_category": {c: (m.to_json()["levels"] if m else None) for c, m in self.by_category.items()},
            "missing": self.missing,
            "unknown": self.unknown,
        }


@dataclass
class EvaluationReport:
    runs: list[RunReport]
    # run name -> granularity -> metric -> percent change of the first run over that run
    deltas: dict[str, dict[str, dict[str, float | None]]] = field(default_factory=dict)
    manifest: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"version": 1, "manifest": self.manifest, "runs": [r.to_json() for r in self.runs],
                "deltas": self.deltas}

    def table(self) -> str:
        head = ["run"] + [f"{g.value}.{m}" for g in LEVELS for m in ("acc", "p", "r", "f1")]
        rows = [head]
        for run in self.runs:
            if run.overall is None:
                rows.append([run.name] + ["-"] * (len(head) - 1))
                continue
            rows.append([run.name] + [f"{getattr(run.overall[g], m) * 100:.1f}"
                                      for g in LEVELS for m in ("acc", "p", "r", "f1")])
        for name, per in self.deltas.items():
            cells = []
            for g in LEVELS:
                for m in ("acc", "p", "r", "f1"):
                    d = per[g.value][m]
                    cells.append("-" if d is None else f"{d:+.1f}%")
            rows.append([f"change vs {name}"] + cells)
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def percent_change(new: float, old: float) -> float | None:
    return (new - old) / old * 100 if old else None


def evaluate_run(bench: Benchmark, runs: Sequence[PredictionSet]) -> EvaluationReport:
    """Score each prediction set; with several, the first is compared against the rest."""
    reports: list[RunReport] = []
    ids = set(bench.ids)
    for run in runs:
        missing = [sid for sid in bench.ids if sid not in run.predictions and sid not in run.inapplicable]
        unknown = sorted(set(run.predictions) - ids)
        for sid in missing:
            log.warning("%s: %s", run.name, MissingPrediction(f"no prediction for {sid}; counted as empty"))
        if run.inapplicable:
            reports.append(RunReport(run.name, None, {}, missing, unknown))
            continue
        overall = score(bench, run.predictions)
        by_cat: dict[str, MetricsReport | None] = {}
        for cat in ("no_config", "with_config", "name_only", "name_and_options", "multi_config"):
            sub = Benchmark(bench.linter, tuple(e for e in bench if cat in categorize(e)))
            by_cat[cat] = score(sub, run.predictions) if len(sub) else None
        reports.append(RunReport(run.name, overall, by_cat, missing, unknown))
    deltas: dict[str, dict[str, dict[str, float | None]]] = {}
    if len(reports) > 1 and reports[0].overall is not None:
        ref = reports[0].overall
        for other in reports[1:]:
            if other.overall is None:
                continue
            deltas[other.name] = {
                g.value: {m: percent_change(getattr(ref[g], m), getattr(other.overall[g], m))
                          for m in ("acc", "p", "r", "f1")}
                for g in LEVELS
            }
    return EvaluationReport(reports, deltas)


# ---------------------------------------------------------------------------
# baselines
# ---------------------------------------------------------------------------

BASELINE_KINDS = ("closed_book", "name", "name_desc", "name_desc_opts", "rag_name_desc", "rag_name_desc_opts")
DEFAULT_K = 10
DEFAULT_TOKEN_LIMIT = 128_000


class TokenLimitExceeded(LlmError):
    def __init__(self, estimated: int, limit: int):
        super().__init__(f"prompt needs about {estimated} tokens, limit is {limit}")
        self.estimated = estimated
        self.limit = limit


def estimate_tokens(text: str) -> int:
    # about four characters per token for English prose and identifiers
    return (len(text) + 3) // 4


def describe_doc(doc: LinterConfigDoc, *, with_desc: bool, with_opts: bool) -> str:
    line = doc.config_name
    if with_desc:
        line += f": {doc.description}"
    if not with_opts or not doc.options:
        return line
    parts = [line]
    for opt in doc.options:
        values = ", ".join(opt.value_range.literals) if opt.value_range.is_finite else opt.data_type
        desc = f" - {opt.description}" if opt.description else ""
        parts.append(f"  option {opt.option_name} ({values}){desc}")
    return "\n".join(parts)


@dataclass
class BaselineResult:
    standard_id: str
    kind: str
    configs: list[GoldConfiguration]
    retrieved: list[str] = field(default_factory=list)
    inapplicable: bool = False
    error: str | None = None


class BaselineRunner:
    def __init__(self, gateway: Gateway, docs: Sequence[LinterConfigDoc], *, k: int = DEFAULT_K,
                 token_limit: int = DEFAULT_TOKEN_LIMIT):
        if not docs:
            raise ValueError("baselines need linter docs")
        if k < 1:
            raise ValueError("k must be positive")
        self.gw = gateway
        self.docs = list(docs)
        self.linter = self.docs[0].linter
        self.k = k
        self.token_limit = token_limit
        self._index: dict[bool, np.ndarray] = {}

    def _entry_text(self, doc: LinterConfigDoc, with_opts: bool) -> str:
        return describe_doc(doc, with_desc=True, with_opts=with_opts)

    def _matrix(self, with_opts: bool) -> np.ndarray:
        if with_opts not in self._index:
            vecs = self.gw.map(lambda d: self.gw.embed(self._entry_text(d, with_opts)), self.docs)
            self._index[with_opts] = np.vstack(vecs)
        return self._index[with_opts]

    def retrieve(self, doc: CodingStandardDoc, with_opts: bool) -> list[LinterConfigDoc]:
        """Top-k linter doc entries by cosine similarity to the standard's text."""
        query = self.gw.embed(f"{doc.title}\n{doc.text}")
        matrix = self._matrix(with_opts)
        sims = np.array([cosine(query, row) for row in matrix])
        # stable: ties keep corpus order
        order = sorted(range(len(self.docs)), key=lambda i: (-sims[i], i))
        return [self.docs[i] for i in order[: self.k]]

    def tool_information(self, kind: str, doc: CodingStandardDoc) -> tuple[str, list[str]]:
        if kind not in BASELINE_KINDS:
            raise ValueError(f"unknown baseline kind {kind!r}; expected one of {BASELINE_KINDS}")
        if kind == "closed_book":
            return "", []
        if kind.startswith("rag_"):
            with_opts = kind.endswith("_opts")
            hits = self.retrieve(doc, with_opts)
            body = "\n".join(describe_doc(d, with_desc=True, with_opts=with_opts) for d in hits)
            return f"Relevant {self.linter} checks:\n{body}\n", [d.config_name for d in hits]
        with_desc = kind != "name"
        with_opts = kind == "name_desc_opts"
        body = "\n".join(describe_doc(d, with_desc=with_desc, with_opts=with_opts) for d in self.docs)
        return f"Available {self.linter} checks:\n{body}\n", []

    def prompt(self, kind: str, doc: CodingStandardDoc) -> tuple[str, list[str]]:
        info, hits = self.tool_information(kind, doc)
        text = render(prompts.BASELINE, {"linter": self.linter, "tool_information": info,
                                         "title": doc.title, "standard": doc.text})
        return text, hits

    def run(self, kind: str, doc: CodingStandardDoc) -> BaselineResult:
        text, hits = self.prompt(kind, doc)
        estimated = estimate_tokens(text)
        if estimated > self.token_limit:
            exc = TokenLimitExceeded(estimated, self.token_limit)
            return BaselineResult(doc.id, kind, [], hits, inapplicable=True, error=str(exc))
        try:
            lines, _ = self.gw.ask_parsed(text, lambda r: parse_option_lines(r, numbered=False),
                                          tag=f"baseline:{kind}:{doc.id}",
                                          repair=lambda e: render(prompts.REPAIR, {"error": e}))
        except CacheMiss:
            # a replay gap is a setup problem, not a model answer
            raise
        except LlmError as exc:
            log.warning("baseline %s on %s failed: %s", kind, doc.id, exc)
            return BaselineResult(doc.id, kind, [], hits, error=str(exc))
        # unfiltered on purpose: names absent from the docs are kept
        grouped: dict[str, list[tuple[str, str]]] = {}
        for line in lines:
            opts = grouped.setdefault(line.config_name, [])
            if line.option_name is not None and all(o != line.option_name for o, _ in opts):
                opts.append((line.option_name, line.value))
        return BaselineResult(doc.id, kind, [GoldConfiguration(n, tuple(a)) for n, a in grouped.items()], hits)

    def run_all(self, kind: str, standards: Sequence[CodingStandardDoc]) -> list[BaselineResult]:
        if kind.startswith("rag_"):
            self._matrix(kind.endswith("_opts"))
        return self.gw.map(lambda d: self.run(kind, d), list(standards))


def run_baseline(kind: str, docs: Sequence[LinterConfigDoc], standard: CodingStandardDoc,
                 gateway: Gateway, *, k: int = DEFAULT_K,
                 token_limit: int = DEFAULT_TOKEN_LIMIT) -> BaselineResult:
    return BaselineRunner(gateway, docs, k=k, token_limit=token_limit).run(kind, standard)


def baseline_predictions(name: str, results: Iterable[BaselineResult]) -> PredictionSet:
    results = list(results)
    return PredictionSet(
        name,
        {r.standard_id: r.configs for r in results if not r.inapplicable},
        [r.standard_id for r in results if r.inapplicable],
        retrieved={r.standard_id: r.retrieved for r in results if r.retrieved},
    )
