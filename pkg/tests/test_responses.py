import pytest

from lintcomp.dsl import format_rule
from lintcomp.llm import LlmFormatError
from lintcomp.responses import (
    is_none_answer, parse_alignment, parse_classification, parse_dsl_lines, parse_option_lines,
    parse_selection, parse_value_rules, salvage_dsl_lines, scan_dsl_lines,
)


def test_dsl_lines_skip_numbering_and_commentary():
    text = ("Here are the rules:\n"
            "1. Mandatory: [Class] have [PackageDeclaration]\n"
            "- Optional: [SourceFile] have [LicenseComment]\n"
            "```\n2) Mandatory: No [Import] use [Wildcard]\n```")
    rules = parse_dsl_lines(text)
    assert [format_rule(r) for r in rules] == [
        "Mandatory: [Class] have [PackageDeclaration]",
        "Optional: [SourceFile] have [LicenseComment]",
        "Mandatory: No [Import] use [Wildcard]",
    ]


def test_dsl_none_and_errors():
    assert parse_dsl_lines("NONE") == []
    assert is_none_answer("  none.  ")
    with pytest.raises(LlmFormatError):
        parse_dsl_lines("NONE", allow_none=False)
    with pytest.raises(LlmFormatError, match="no DSL rule"):
        parse_dsl_lines("I could not find anything.")
    bad = "1. Mandatory: No [Method override [Finalize]\n2. Mandatory: [A] have [B]"
    with pytest.raises(LlmFormatError, match="unparseable"):
        parse_dsl_lines(bad)
    assert len(scan_dsl_lines(bad).errors) == 1
    assert [format_rule(r) for r in salvage_dsl_lines(bad)] == ["Mandatory: [A] have [B]"]


def test_classification():
    assert parse_classification("0: yes\n1: No\n2 - yes", 3) == [True, False, True]
    with pytest.raises(LlmFormatError, match="missing"):
        parse_classification("0: yes", 2)
    with pytest.raises(LlmFormatError, match="twice"):
        parse_classification("0: yes\n0: no", 1)
    with pytest.raises(LlmFormatError, match="unexpected"):
        parse_classification("0: yes\n5: no", 1)


def test_value_rules_keep_numeric_literals():
    text = "1: Mandatory: [Indent] is [1]\n2: Mandatory: [Indent] is [2]"
    got = parse_value_rules(text, ("1", "2"))
    assert format_rule(got["2"]) == "Mandatory: [Indent] is [2]"
    assert list(parse_value_rules("TRUE: Optional: [A] have [B]\nfalse: Mandatory: No [A] have [B]",
                                  ("true", "false"))) == ["true", "false"]
    with pytest.raises(LlmFormatError, match="no rule for"):
        parse_value_rules("true: Optional: [A] have [B]", ("true", "false"))
    with pytest.raises(LlmFormatError, match="unknown value"):
        parse_value_rules("maybe: Optional: [A] have [B]", ("true", "false"))


def test_selection():
    got = parse_selection("1: A, B\n2: NONE\nrule 3: C, A", 3)
    assert got == {1: ["A", "B"], 2: [], 3: ["C", "A"]}
    assert parse_selection("NONE", 2) == {}
    with pytest.raises(LlmFormatError, match="out of range"):
        parse_selection("4: A", 3)
    with pytest.raises(LlmFormatError):
        parse_selection("I think LineLength fits", 1)


def test_option_lines_value_may_hold_pipes():
    lines = parse_option_lines("rule 1 | LineLength | ignorePattern | ^package.*|^import.*\n"
                               "rule 2 | NoFinalizer | - | -", numbered=True)
    assert lines[0].value == "^package.*|^import.*"
    assert lines[1].option_name is None and lines[1].value is None
    assert parse_option_lines("ParenPad | option | 'nospace'", numbered=False)[0].value == "nospace"
    assert parse_option_lines("X | opt | none", numbered=False)[0].value == "none"
    assert parse_option_lines("NONE", numbered=False) == []
    with pytest.raises(LlmFormatError, match="both"):
        parse_option_lines("X | opt | -", numbered=False)
    with pytest.raises(LlmFormatError, match="rule number"):
        parse_option_lines("first | X | - | -", numbered=True)


def test_alignment():
    text = "objects: no - different sections\nsemantics: yes - same blank line\nrule_type: yes"
    assert parse_alignment(text, ("objects", "semantics")) == {
        "objects": (False, "different sections"), "semantics": (True, "same blank line")}
    assert parse_alignment(text, ("rule_type",)) == {"rule_type": (True, "")}
    with pytest.raises(LlmFormatError, match="semantics"):
        parse_alignment("objects: yes", ("objects", "semantics"))
