import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsl_gen import sample_rule, sample_rule_set
from lintcomp.dsl import (
    Conditional,
    Counting,
    DslSyntaxError,
    EmptyInputError,
    Negation,
    Ordering,
    Relational,
    RuleType,
    TermList,
    UnknownPlaceholderError,
    extract_checked_objects,
    find_placeholders,
    format_rule,
    format_rule_set,
    iter_term_lists,
    parse_rule,
    parse_rule_set,
    parse_term,
    structural_eq,
    substitute_placeholder,
)


def test_parse_relational_braces():
    rs = parse_rule_set("Mandatory: [CodeBlock] have [Brace]")
    assert len(rs) == 1
    rule = rs.rules[0]
    assert rule.rule_type is RuleType.MANDATORY
    assert rule.constraint == Relational(TermList.of("CodeBlock"), (("have", TermList.of("Brace")),))
    assert rule.exceptions == ()


def test_parse_ordering():
    rule = parse_rule("Mandatory: Order of [BlockTag] is [@param, @return, @throws, @deprecated]")
    c = rule.constraint
    assert isinstance(c, Ordering)
    assert not c.negated
    assert [t.plterm for t in c.order.terms] == ["@param", "@return", "@throws", "@deprecated"]


def test_parse_negation():
    rule = parse_rule("Mandatory: No [EmptyDescription] for [@param, @return, @throws, @deprecated]")
    assert isinstance(rule.constraint, Negation)
    assert isinstance(rule.constraint.inner, Relational)


def test_parse_counting_and_conditional():
    rule = parse_rule("Mandatory: Number of [Annotation] = 1 for each [Line]")
    assert isinstance(rule.constraint, Counting)
    assert rule.constraint.body.pairs[0][0] == "= 1 for each"

    rule = parse_rule("Optional: if [LeftCurlyPolicy] is [EOL] then [Enum] of [LeftCurly] is not [EOL]")
    assert isinstance(rule.constraint, Conditional)
    assert format_rule(rule) == "Optional: if [LeftCurlyPolicy] is [EOL] then [Enum] of [LeftCurly] is not [EOL]"


def test_trailing_operator_inside_condition():
    rule = parse_rule("Mandatory: if [LineLength] > 80 then [Line] have [LineWrap]")
    assert rule.constraint.condition == Relational(TermList.of("LineLength"), (("> 80", None),))


def test_except_list():
    text = "Mandatory: if [LineLength] > 80 then [Line] have [LineWrap] Except [goog.module], [goog.require], [goog.requireType]"
    rule = parse_rule(text)
    assert len(rule.exceptions) == 3
    assert format_rule(rule) == text
    # repeated Except keywords normalize to one comma list
    again = parse_rule("Mandatory: [A] have [B] Except [C] Except [D]")
    assert format_rule(again) == "Mandatory: [A] have [B] Except [C], [D]"


def test_empty_input():
    with pytest.raises(EmptyInputError):
        parse_rule_set("")
    with pytest.raises(EmptyInputError):
        parse_rule_set("   \n ")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[CodeBlock] have [Brace]", "rule type"),
        ("Mandatory: [CodeBlock have [Brace]", "nested"),
        ("Mandatory: [CodeBlock] have [Brace", "unclosed"),
        ("Mandatory: []", "empty term"),
        ("Mandatory: [A, ] have [B]", "empty term"),
        ("Mandatory: [Code\nBlock] have [Brace]", "newline"),
        ("Mandatory: {tokens", "unclosed"),
        ("Mandatory: Order of [A] precedes [B]", "ordering"),
        ("Mandatory: if [A] is [B]", "then"),
        ("Mandatory: [A] have ] [B]", "unbalanced"),
        ("Mandatory: have [B]", "unexpected"),
    ],
)
def test_parser_rejects(text, fragment):
    with pytest.raises(DslSyntaxError) as info:
        parse_rule_set(text)
    assert fragment in str(info.value)


def test_syntax_error_offset_is_bytes():
    with pytest.raises(DslSyntaxError) as info:
        parse_rule_set("Mandatory: [Ü] have [B")
    # the bracket opens after one two-byte character
    assert info.value.offset == len("Mandatory: [Ü] have ".encode())
    assert info.value.expected == "']'"


def test_format_two_rules():
    rs = parse_rule_set("Mandatory: [A] have [B];Optional:  [C]  is  [D]")
    assert format_rule_set(rs) == "Mandatory: [A] have [B]; Optional: [C] is [D]"


def test_term_structure():
    t = parse_term("first body of each LoopStatement")
    assert t.modifier == "first"
    assert t.plterm == "body"
    assert t.of_chain.modifier == "each"
    assert t.of_chain.plterm == "LoopStatement"
    assert parse_term("Binary Expression").modifier is None


def test_extract_checked_objects():
    rule = parse_rule("Mandatory: [CodeBlock] have [Brace]")
    assert extract_checked_objects(rule) == [TermList.of("CodeBlock"), TermList.of("Brace")]
    rule = parse_rule("Mandatory: Number of [BlankLine] between {tokens} is [1]")
    assert extract_checked_objects(rule) == [TermList.of("BlankLine"), TermList.of("1")]


def test_extract_checked_objects_negation():
    rule = parse_rule("Mandatory: No [EmptyDescription] for [@param, @return, @throws, @deprecated]")
    # hand traversal: Negation -> Relational head, then the single pair's list
    expected = [
        TermList.of("EmptyDescription"),
        TermList.of("@param", "@return", "@throws", "@deprecated"),
    ]
    assert extract_checked_objects(rule) == expected


def test_find_placeholders():
    assert find_placeholders(parse_rule("Mandatory: [Javadoc] for {tokens}")) == ["tokens"]
    assert find_placeholders(parse_rule("Mandatory: [A] have [B]")) == []
    twice = parse_rule("Mandatory: {tokens} have [Brace] Except {tokens} is [X]")
    assert find_placeholders(twice) == ["tokens"]


def test_substitute_placeholder():
    rule = parse_rule("Mandatory: Number of [BlankLine] between {tokens} is [1]")
    out = substitute_placeholder(rule, "tokens", ["PACKAGE_DEF", "CLASS_DEF"])
    assert format_rule(out) == "Mandatory: Number of [BlankLine] between [PACKAGE_DEF, CLASS_DEF] is [1]"
    assert find_placeholders(out) == []
    with pytest.raises(UnknownPlaceholderError):
        substitute_placeholder(rule, "missing", ["x"])


def test_substitute_leaves_other_placeholders():
    rule = parse_rule("Mandatory: {format} of [Name] for {tokens}")
    out = substitute_placeholder(rule, "tokens", ["METHOD_DEF"])
    assert find_placeholders(out) == ["format"]


def test_structural_eq():
    a = parse_rule("Mandatory: [A] have [B]")
    assert structural_eq(a, a)
    assert structural_eq(a, parse_rule("Mandatory:  [A]  have  [B]"))
    assert not structural_eq(a, parse_rule("Optional: [A] have [B]"))
    assert not structural_eq(a, parse_rule("Mandatory: [a] have [B]"))


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_round_trip_random_asts(rnd):
    rs = sample_rule_set(random.Random(rnd.random()))
    text = format_rule_set(rs)
    back = parse_rule_set(text)
    assert back == rs, text


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_canonicalization_idempotent(rnd):
    rs = sample_rule_set(random.Random(rnd.random()))
    # introduce whitespace noise
    noisy = format_rule_set(rs).replace(" ", "  ").replace(";", " ;\n")
    once = format_rule_set(parse_rule_set(noisy))
    assert format_rule_set(parse_rule_set(once)) == once


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_groups_covered_exactly_once(rnd):
    rule = sample_rule(random.Random(rnd.random()))
    text = format_rule(rule)
    lists = list(iter_term_lists(rule))
    bracketed = extract_checked_objects(rule)
    slots = [tl for tl in lists if tl.placeholder]
    assert len(bracketed) + len(slots) == len(lists)
    # sampled terms never contain "[", so each one opens a bracketed list
    assert text.count("[") == len(bracketed)
    assert set(find_placeholders(rule)) == {tl.name for tl in slots}


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_substitution_preserves_shape(rnd):
    rng = random.Random(rnd.random())
    rule = sample_rule(rng)
    names = find_placeholders(rule)
    if not names:
        return
    out = substitute_placeholder(rule, names[0], ["PACKAGE_DEF", "CLASS_DEF"])
    assert out.rule_type == rule.rule_type
    assert len(out.exceptions) == len(rule.exceptions)
    assert names[0] not in find_placeholders(out)
