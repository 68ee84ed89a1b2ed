import pytest
from hypothesis import given, settings, strategies as st

from lintcomp.corpus import CodingStandardDoc
from lintcomp.dsl import RuleSet, parse_rule, parse_rule_set
from lintcomp.instructions import InstructionSet
from lintcomp.llm import Gateway, LlmError, ScriptedBackend
from lintcomp.model import CHECKS, Assignment, CandidateConfiguration, Verdict
from lintcomp.pipeline import DslCodingStandard, Flags, Pipeline

from conftest import FIXTURES

ISET = InstructionSet.load(FIXTURES / "instructions_checkstyle.json")
YES = "rule_type: yes\nobjects: yes\nsemantics: yes"


def doc(sid="s", *sentences):
    return CodingStandardDoc(sid, sid.title(), "java", sentences or ("Every class has a package.",))


def gw_for(script, **kw):
    return Gateway(mode="live", backend=ScriptedBackend(script, **kw), model_id="scripted", keep_history=True)


def dsl_of(*rules, sid="s"):
    return DslCodingStandard(sid, parse_rule_set("; ".join(rules)), "")


def cand(name, rule_index=1, assignments=()):
    return CandidateConfiguration(name, tuple(assignments), ISET[name].general_rules, rule_index)


def test_flags_profile():
    assert Flags().profile == "default"
    assert Flags(no_dsl=True, no_checker=True, llm_render=True).profile == "no_dsl+no_checker"


def test_stage1_dedups_and_reports_empty():
    p = Pipeline(gw_for({"stage1:a": "1. Mandatory: [A] have [B]\n2. Mandatory: [A] have [B]",
                         "stage1:b": "NONE"}), ISET)
    a = p.stage1_parse_standard(doc("a"))
    assert len(a.rules) == 1 and not a.empty
    b = p.stage1_parse_standard(doc("b"))
    assert b.empty and b.rule_texts() == []


def test_stage1_salvages_after_failed_repair():
    bad = "1. Mandatory: [A have [B]\n2. Mandatory: No [Method] override [Finalize]"
    gw = gw_for({"stage1:a": bad, "stage1:a#repair": bad})
    got = Pipeline(gw, ISET).stage1_parse_standard(doc("a"))
    assert got.rule_texts() == ["Mandatory: No [Method] override [Finalize]"]


def test_no_dsl_bypasses_stage1():
    gw = gw_for({})
    d = Pipeline(gw, ISET, Flags(no_dsl=True)).stage1_parse_standard(doc("a", "One.", "Two."))
    assert d.bypassed and d.rule_texts() == ["One. Two."]
    assert gw.history == []


def test_stage2_drops_unknown_and_keeps_first_origin():
    gw = gw_for({"stage2:s": "1: NoFinalizer, MadeUpCheck\n2: NoFinalizer, UpperEll"})
    warnings = []
    names, origin = Pipeline(gw, ISET).stage2_select_names(
        dsl_of("Mandatory: No [Method] override [Finalize]", "Mandatory: [LongLiteral] end with [UpperL]"), warnings)
    assert names == ["NoFinalizer", "UpperEll"]
    assert origin == {"NoFinalizer": 1, "UpperEll": 2}
    assert warnings == ["stage2: dropped unknown configuration 'MadeUpCheck'"]
    prompt = gw.history[0].prompt_text
    assert "MissingSwitchDefault: Mandatory: [SwitchStatement] have [DefaultClause]" in prompt


def test_stage3_validation():
    gw = gw_for({"stage3:s": (
        "rule 1 | LineLength | max | 100\n"
        "rule 1 | LineLength | max | 120\n"
        "rule 1 | LineLength | ignorePattern | ([\n"
        "rule 1 | NeedBraces | allowSingleLineStatement | TRUE\n"
        "rule 1 | NeedBraces | tokens | LITERAL_IF, LITERAL_ELSE\n"
        "rule 1 | NeedBraces | maxLines | 3\n"
        "rule 9 | NoFinalizer | - | -\n"
        "rule 1 | UpperEll | - | -")})
    p = Pipeline(gw, ISET)
    warnings = []
    got = p.stage3_configure_options(dsl_of("Mandatory: [LineLength] <= [100]"),
                                     ["LineLength", "NeedBraces", "NoFinalizer"], {}, warnings)
    by = {c.config_name: c for c in got}
    assert list(by) == ["LineLength", "NeedBraces"]
    assert [(a.option_name, a.value) for a in by["LineLength"].assignments] == [("max", "100")]
    assert str(by["LineLength"].assignments[0].matched_rule) == str(parse_rule("Mandatory: [LineLength] <= [100]"))
    nb = {a.option_name: a for a in by["NeedBraces"].assignments}
    assert nb["allowSingleLineStatement"].value == "true"
    assert nb["tokens"].matched_rule == parse_rule("Mandatory: [LITERAL_IF, LITERAL_ELSE] have [Brace]")
    joined = "\n".join(warnings)
    for needle in ("set twice", "not a regular expression", "no option 'maxLines'", "out of range",
                   "'UpperEll' that was not offered"):
        assert needle in joined


def test_stage3_rejects_names_outside_instruction_set():
    with pytest.raises(ValueError, match="Nope"):
        Pipeline(gw_for({}), ISET).stage3_configure_options(dsl_of("Mandatory: [A] have [B]"), ["Nope"])


def test_stage3_keeps_stage2_names_unless_no_selector():
    gw = gw_for({"stage3:s": "NONE"})
    d = dsl_of("Mandatory: [A] have [B]")
    assert [c.config_name for c in Pipeline(gw, ISET).stage3_configure_options(d, ["UpperEll"], {"UpperEll": 1})] \
        == ["UpperEll"]
    assert Pipeline(gw, ISET, Flags(no_selector=True)).stage3_configure_options(d, ["UpperEll"], {"UpperEll": 1}) == []


def test_stage4_identity_passes_locally_and_asks_semantics():
    gw = gw_for({"stage4:s:NoFinalizer": "semantics: yes"})
    [a] = Pipeline(gw, ISET).stage4_check_alignment(dsl_of("Mandatory: No [Method] override [Finalize]"),
                                                     [cand("NoFinalizer")])
    assert a.accepted and all(a.verdicts[c] is Verdict.PASS for c in CHECKS)
    assert gw.history[0].prompt_text.rstrip().endswith("Questions: semantics\nAnswer:")


def test_stage4_rule_type_mismatch_fails_locally():
    gw = gw_for({"stage4:s:NoFinalizer": "semantics: yes"})
    [a] = Pipeline(gw, ISET).stage4_check_alignment(dsl_of("Optional: No [Method] override [Finalize]"),
                                                     [cand("NoFinalizer")])
    assert a.verdicts["rule_type"] is Verdict.FAIL and not a.accepted


def test_stage4_rule_type_uses_matched_option_rule():
    rule = ISET["NeedBraces"].option("allowSingleLineStatement").rule_for("true")
    c = cand("NeedBraces", assignments=[Assignment("allowSingleLineStatement", "true", rule, "boolean")])
    gw = gw_for({"stage4:s:NeedBraces": "semantics: yes"})
    [a] = Pipeline(gw, ISET).stage4_check_alignment(dsl_of("Optional: No [SingleLineStatement] have [Brace]"), [c])
    assert a.accepted
    [b] = Pipeline(gw, ISET).stage4_check_alignment(dsl_of("Mandatory: No [SingleLineStatement] have [Brace]"), [c])
    assert b.verdicts["rule_type"] is Verdict.FAIL


def test_stage4_asks_objects_when_terms_differ():
    gw = gw_for({"stage4:s:PackageDeclaration": "objects: no - unrelated\nsemantics: yes"})
    [a] = Pipeline(gw, ISET).stage4_check_alignment(dsl_of("Mandatory: [SourceFile] have [LicenseHeader]"),
                                                     [cand("PackageDeclaration")])
    assert a.verdicts == {"rule_type": Verdict.PASS, "objects": Verdict.FAIL, "semantics": Verdict.PASS}
    assert a.notes["objects"] == "unrelated"


def test_stage4_fails_closed_on_llm_error():
    def boom(req):
        raise LlmError("upstream down")
    [a] = Pipeline(gw_for(boom), ISET).stage4_check_alignment(
        dsl_of("Mandatory: No [Method] override [Finalize]"), [cand("NoFinalizer")])
    assert a.verdicts["semantics"] is Verdict.FAIL and not a.accepted
    assert "upstream down" in a.notes["error"]


def test_stage4_bypassed_asks_all_three():
    gw = gw_for({"stage4:s:NoFinalizer": YES})
    d = DslCodingStandard("s", RuleSet(()), "Do not override finalize.",
                          nl_text="Do not override finalize.")
    [a] = Pipeline(gw, ISET, Flags(no_dsl=True)).stage4_check_alignment(d, [cand("NoFinalizer")])
    assert a.accepted
    assert "rule_type: do both have the same rule type" in gw.history[0].prompt_text


def test_no_checker_skips_every_verdict():
    gw = gw_for({})
    [a] = Pipeline(gw, ISET, Flags(no_checker=True)).stage4_check_alignment(
        dsl_of("Optional: [A] have [B]"), [cand("NoFinalizer")])
    assert a.accepted and set(a.verdicts.values()) == {Verdict.SKIPPED}
    assert gw.history == []


def test_zero_rule_standard_emits_empty_document():
    gw = gw_for({"stage1:s": "NONE"})
    r = Pipeline(gw, ISET).compile(doc())
    assert r.stage_status == {"stage1": "empty", "stage2": "skipped", "stage3": "empty",
                              "stage4": "ok", "stage5": "ok"}
    assert r.ok and r.accepted == []
    assert '<module name="Checker">' in r.emitted["checkstyle_xml"].text
    assert [q.tag for q in gw.history] == ["stage1:s"]


def test_target_must_match_linter():
    with pytest.raises(ValueError, match="eslint_json"):
        Pipeline(gw_for({}), ISET).compile(doc(), ["eslint_json"])


def test_llm_error_mid_pipeline_is_reported():
    gw = gw_for({"stage1:s": "1. Mandatory: No [Method] override [Finalize]"})
    r = Pipeline(gw, ISET).compile(doc())
    assert r.stage_status["stage2"].startswith("error:")
    assert not r.ok
    assert r.emitted["checkstyle_xml"].validated


def test_full_compile_with_scripted_answers():
    gw = gw_for({
        "stage1:s": "1. Mandatory: No [Method] override [Finalize]",
        "stage2:s": "1: NoFinalizer",
        "stage3:s": "rule 1 | NoFinalizer | - | -",
        "stage4:s:NoFinalizer": "semantics: yes",
    })
    r = Pipeline(gw, ISET).compile(doc())
    assert r.ok and r.predictions() == [{"config_name": "NoFinalizer", "assignments": []}]
    assert "stage_timings" not in r.to_json() and "stage_timings" in r.to_json(with_timings=True)


# -- invariants over arbitrary model answers --------------------------------

NAME = st.sampled_from(ISET.names + ["Bogus", "NoWildcardImports"])
OPTION = st.sampled_from(["max", "tokens", "option", "eachLine", "allowSingleLineStatement", "nope", "-"])
VALUE = st.sampled_from(["100", "true", "false", "nospace", "LITERAL_IF", "([", "x", "-"])
YN = st.sampled_from(["yes", "no"])


@st.composite
def answers(draw):
    rules = draw(st.lists(st.sampled_from([
        "Mandatory: No [Method] override [Finalize]", "Optional: [LineLength] <= [100]",
        "Mandatory: [CodeBlock] have [Brace]", "Mandatory: No [Parenthesis] have [InnerSpace]",
    ]), min_size=1, max_size=3, unique=True))
    n_rules = len(rules)
    stage2 = "\n".join(f"{i}: {', '.join(draw(st.lists(NAME, min_size=1, max_size=3)))}"
                       for i in range(1, n_rules + 1))
    lines = []
    for _ in range(draw(st.integers(0, 5))):
        opt = draw(OPTION)
        val = "-" if opt == "-" else draw(VALUE.filter(lambda v: v != "-"))
        lines.append(f"rule {draw(st.integers(1, n_rules + 1))} | {draw(NAME)} | {opt} | {val}")
    verdict = f"rule_type: {draw(YN)}\nobjects: {draw(YN)}\nsemantics: {draw(YN)}"
    return rules, stage2, "\n".join(lines) or "NONE", verdict


def scripted(rules, stage2, stage3, verdict):
    def answer(req):
        stage = req.tag.split(":")[0]
        return {"stage1": "\n".join(rules), "stage2": stage2, "stage3": stage3}.get(stage, verdict)
    return answer


@settings(max_examples=60, deadline=None)
@given(answers(), st.booleans(), st.booleans())
def test_pipeline_invariants(ans, no_selector, no_checker):
    flags = Flags(no_selector=no_selector, no_checker=no_checker)
    r = Pipeline(gw_for(scripted(*ans)), ISET, flags).compile(doc())
    assert r.ok
    assert set(r.selected) <= set(ISET.names)
    for c in r.candidates:
        assert c.config_name in r.selected
        options = {oi.option_name for oi in ISET[c.config_name].option_instructions}
        assert {a.option_name for a in c.assignments} <= options
        assert len({a.option_name for a in c.assignments}) == len(c.assignments)
    for a in r.aligned:
        if no_checker:
            assert a.accepted and set(a.verdicts.values()) == {Verdict.SKIPPED}
        else:
            assert a.accepted == all(a.verdicts.get(c) is Verdict.PASS for c in CHECKS)
    assert r.emitted["checkstyle_xml"].validated
    assert {p["config_name"] for p in r.predictions()} <= set(r.selected)
