import json
import re

import pytest
from hypothesis import given, settings, strategies as st

from lintcomp.corpus import CodingStandardDoc, LinterConfigDoc, SchemaError, data_path, load_linter_docs
from lintcomp.eval import (
    BASELINE_KINDS, Benchmark, BenchmarkEntry, BaselineRunner, GoldConfiguration, Granularity, LEVELS,
    PredictionSet, baseline_predictions, category_stats, compute_metrics, estimate_tokens, evaluate_run,
    load_benchmark, match_configs, normalize_value, parse_benchmark, percent_change, prf, score, unit_set,
)
from lintcomp.llm import Gateway, ScriptedBackend

G = GoldConfiguration
CN, ON, OV = Granularity.CONFIG_NAME, Granularity.OPTION_NAME, Granularity.OPTION_VALUE


def test_hand_counted_example():
    gold = [G("A", (("o", "v1"),)), G("B")]
    pred = [G("A", (("o", "v2"),)), G("C")]
    got = {g: match_configs(gold, pred, g) for g in LEVELS}
    assert (got[CN].tp, got[CN].fp, got[CN].fn) == (1, 1, 1)
    assert (got[ON].tp, got[ON].fp, got[ON].fn) == (1, 1, 1)
    assert (got[OV].tp, got[OV].fp, got[OV].fn) == (0, 2, 2)


def test_set_values_compare_as_sets():
    gold = [G("EmptyLineSeparator", (("tokens", "PACKAGE_DEF, CLASS_DEF"),))]
    pred = [G("emptylineseparator", (("Tokens", "CLASS_DEF,PACKAGE_DEF "),))]
    assert match_configs(gold, pred, OV).exact
    assert normalize_value("a, b,,a") == frozenset({"a", "b"})
    assert unit_set([G("X")], OV) == {"x"}


def test_prf_edges():
    assert prf(0, 0, 0) == (0.0, 0.0, 0.0)
    assert prf(1, 1, 0) == (0.5, 1.0, pytest.approx(2 / 3))


def test_empty_gold_and_prediction_is_exact():
    bench = Benchmark("checkstyle", (BenchmarkEntry("a"), BenchmarkEntry("b", (G("X"),))))
    m = score(bench, {"a": [], "b": [G("X")]})
    assert m[CN].acc == 1.0 and m[CN].counts.tp == 1
    m = score(bench, {"a": [G("Y")]})
    assert m[CN].acc == 0.0 and (m[CN].counts.fp, m[CN].counts.fn) == (1, 1)


@pytest.mark.parametrize("name, row", [
    ("benchmark_checkstyle_java.json", (68, 19, 49, 7, 42, 13)),
    ("benchmark_eslint_js.json", (149, 89, 60, 15, 45, 16)),
])
def test_benchmark_category_counts(name, row):
    bench = load_benchmark(data_path(name))
    assert category_stats(bench).as_row() == row
    assert len(set(bench.ids)) == len(bench)


def test_benchmark_schema_errors():
    raw = json.loads(data_path("benchmark_checkstyle_java.json").read_text())
    raw["entries"].append(raw["entries"][0])
    with pytest.raises(SchemaError, match="duplicate"):
        parse_benchmark(raw)
    with pytest.raises(SchemaError):
        parse_benchmark({"version": 1, "linter": "checkstyle", "entries": [{"standard_id": 3}]})
    with pytest.raises(ValueError):
        G("X", (("o", "1"), ("o", "2")))


def test_prediction_set_round_trip(tmp_path):
    ps = PredictionSet("demo", {"a": [G("X", (("o", "1"),))]}, ["b"], {"model": "m"}, {"a": ["X"]})
    path = tmp_path / "p.json"
    ps.save(path)
    assert PredictionSet.load(path).to_json() == ps.to_json()
    assert PredictionSet.load(path, "renamed").name == "renamed"


def test_evaluate_run_missing_unknown_and_deltas(caplog):
    bench = Benchmark("checkstyle", (BenchmarkEntry("a", (G("X"),)), BenchmarkEntry("b", (G("Y"),))))
    good = PredictionSet("ours", {"a": [G("X")], "b": [G("Y")]})
    half = PredictionSet("theirs", {"a": [G("X")], "zzz": []})
    skipped = PredictionSet("too-long", {}, ["a", "b"])
    rep = evaluate_run(bench, [good, half, skipped])
    ours, theirs, too_long = rep.runs
    assert ours.overall[CN].acc == 1.0
    assert theirs.missing == ["b"] and theirs.unknown == ["zzz"]
    assert "no prediction for b" in caplog.text
    assert theirs.overall[CN].acc == 0.5 and theirs.overall[CN].r == 0.5
    assert too_long.inapplicable
    assert rep.deltas["theirs"]["config_name"]["acc"] == pytest.approx(100.0)
    assert rep.deltas["theirs"]["config_name"]["p"] == pytest.approx(0.0)
    assert "too-long" not in rep.deltas
    table = rep.table()
    assert re.search(r"^too-long +- +-", table, re.M) and "change vs theirs" in table
    assert percent_change(1.0, 0.0) is None


# -- independent pooling oracle ---------------------------------------------

CONF = st.builds(lambda n, opts: G(n, tuple(opts.items())),
                 st.sampled_from("ABCD"), st.dictionaries(st.sampled_from("opq"), st.sampled_from(["1", "2", "x, y"]),
                                                          max_size=2))
CFGS = st.lists(CONF, max_size=3, unique_by=lambda c: c.config_name)


def brute_units(cfgs, level):
    out = []
    for c in cfgs:
        if level is CN or not c.assignments:
            out.append(c.config_name.lower())
        for o, v in c.assignments if level is not CN else ():
            item = (c.config_name.lower(), o) if level is ON else (
                c.config_name.lower(), o, tuple(sorted(s.strip() for s in v.split(","))))
            out.append(item)
    return out


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(CFGS, CFGS), min_size=1, max_size=5))
def test_pooled_metrics_match_brute_force(pairs):
    bench = Benchmark("x", tuple(BenchmarkEntry(f"s{i}", tuple(g)) for i, (g, _) in enumerate(pairs)))
    preds = {f"s{i}": p for i, (_, p) in enumerate(pairs)}
    report = score(bench, preds)
    for level in LEVELS:
        tp = fp = fn = exact = 0
        for g, p in pairs:
            gu, pu = brute_units(g, level), brute_units(p, level)
            tp += sum(1 for u in pu if u in gu)
            fp += sum(1 for u in pu if u not in gu)
            fn += sum(1 for u in gu if u not in pu)
            exact += all(u in gu for u in pu) and all(u in pu for u in gu)
        lm = report[level]
        assert (lm.counts.tp, lm.counts.fp, lm.counts.fn) == (tp, fp, fn)
        assert lm.acc == pytest.approx(exact / len(pairs))
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        assert lm.p == pytest.approx(p) and lm.r == pytest.approx(r)
        assert lm.f1 == pytest.approx(2 * p * r / (p + r) if p + r else 0.0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(CFGS, CFGS), min_size=1, max_size=5), st.data())
def test_fixing_one_standard_never_lowers_acc(pairs, data):
    bench = Benchmark("x", tuple(BenchmarkEntry(f"s{i}", tuple(g)) for i, (g, _) in enumerate(pairs)))
    preds = {f"s{i}": p for i, (_, p) in enumerate(pairs)}
    i = data.draw(st.integers(0, len(pairs) - 1))
    fixed = dict(preds, **{f"s{i}": list(pairs[i][0])})
    before, after = score(bench, preds), score(bench, fixed)
    for level in LEVELS:
        assert after[level].acc >= before[level].acc
        assert after[level].counts.fp <= before[level].counts.fp


def test_compute_metrics_on_empty_input():
    assert compute_metrics({})[CN].acc == 0.0


# -- baselines ----------------------------------------------------------------

def _docs(n):
    return [LinterConfigDoc(f"Check{i}", (f"Checks thing number {i}.",)) for i in range(n)]


STD = CodingStandardDoc("s", "Braces", "java", ("Braces are used with if statements.",))


def _runner(docs, script=None, **kw):
    gw = Gateway(mode="live", backend=ScriptedBackend(script or {}, default="NONE"), model_id="m",
                 keep_history=True)
    return BaselineRunner(gw, docs, **kw), gw


def test_rag_retrieves_k_hits_in_stable_order():
    docs = _docs(15) + [LinterConfigDoc("NeedBraces", ("Checks for braces around if statements.",))]
    runner, _ = _runner(docs)
    hits = runner.retrieve(STD, with_opts=False)
    assert len(hits) == 10 and hits[0].config_name == "NeedBraces"
    assert [d.config_name for d in hits] == [d.config_name for d in runner.retrieve(STD, with_opts=False)]
    res = runner.run("rag_name_desc", STD)
    assert res.retrieved == [d.config_name for d in hits]
    assert len(_runner(_docs(3))[0].retrieve(STD, with_opts=True)) == 3


def test_closed_book_has_no_tool_information():
    runner, gw = _runner(_docs(3))
    info, hits = runner.tool_information("closed_book", STD)
    assert info == "" and hits == []
    runner.run("closed_book", STD)
    assert "Check0" not in gw.history[0].prompt_text
    info, _ = runner.tool_information("name", STD)
    assert "Check2\n" in info and "thing" not in info
    with pytest.raises(ValueError, match="closed_book"):
        runner.tool_information("oracle", STD)


def test_unfiltered_names_and_first_option_wins():
    runner, _ = _runner(_docs(2), {"baseline:name:s": "NeedBraces | - | -\nMadeUp | x | 1\nMadeUp | x | 2"})
    res = runner.run("name", STD)
    assert [(c.config_name, c.assignments) for c in res.configs] == [("NeedBraces", ()), ("MadeUp", (("x", "1"),))]


def test_token_limit_marks_inapplicable():
    runner, gw = _runner(_docs(50), token_limit=200)
    res = runner.run("name_desc_opts", STD)
    assert res.inapplicable and "limit is 200" in res.error
    assert gw.history == []
    preds = baseline_predictions("b", [res])
    assert preds.inapplicable == ["s"] and preds.predictions == {}
    rep = evaluate_run(Benchmark("checkstyle", (BenchmarkEntry("s"),)), [preds])
    assert rep.runs[0].inapplicable


@pytest.mark.parametrize("docs_file", ["eslint_docs.json", "checkstyle_docs.json"])
def test_full_listing_fits_default_limit(docs_file):
    # the shipped descriptions are short, so even the largest listing stays under the limit
    runner, _ = _runner(load_linter_docs(data_path(docs_file)))
    text, _ = runner.prompt("name_desc_opts", STD)
    assert 5_000 < estimate_tokens(text) < runner.token_limit


def test_runner_input_errors():
    with pytest.raises(ValueError):
        _runner([])
    with pytest.raises(ValueError):
        _runner(_docs(1), k=0)
    assert set(BASELINE_KINDS) >= {"closed_book", "rag_name_desc_opts"}
