"""Prompt templates for every LLM call, each with one fixed worked example.

Response formats are line-oriented so the callers can parse them strictly:

* classify: ``INDEX: yes|no`` per sentence
* DSL generation: one rule per line, or ``NONE``
* per-value options: ``VALUE: RULE`` per literal
* stage 2: ``N: Name, Name`` or ``N: NONE``
* stage 3 and baselines: pipe-separated records, value last so it may hold ``|``
* stage 4: ``QUESTION: yes|no - reason`` for rule_type, objects and semantics
"""

from __future__ import annotations

from .llm import PromptTemplate

DSL_GRAMMAR = """\
A rule is written as  RuleType: Constraint  optionally followed by  Except Constraint, Constraint
RuleType is Mandatory (the code must satisfy the constraint) or Optional (the code may do so).
A TermList is a bracketed, comma-separated list of program terms such as [Class, Interface], or a
placeholder such as {tokens} that stands for a list supplied later. A term may carry a lowercase
modifier and an "of" chain, as in [first Sentence of Javadoc].
Constraint forms:
  Relational:   [A] operator [B] operator [C] ...   (free-text operators such as have, is, before,
                between, for, >, =; the last operator may stand alone, as in [LineLength] > 80)
  Negation:     No Constraint
  Ordering:     Order of [A] is [X, Y, Z]   or   Order of [A] is not [X, Y]
  Counting:     Number of [A] operator [B] ...
  Conditional:  if Constraint then Constraint
Several rules may be separated by ";"."""

_GRAMMAR_BLOCK = "DSL grammar:\n<grammar>\n"

CLASSIFY = PromptTemplate("classify", """\
You read the documentation of one linter check. For every numbered sentence decide whether it states
a coding rule the check enforces (yes) or is something else, such as a code sample, a rationale or a
note about the tool (no).
Answer with one line per sentence in the form  INDEX: yes  or  INDEX: no  and nothing else.

Example
Check: AvoidStarImport
0: Checks that there are no import statements that use the * notation.
1: Rationale: importing all classes from a package can lead to tight coupling.
Answer:
0: yes
1: no

Check: <config_name>
<sentences>
Answer:
""")

GENERAL_RULE = PromptTemplate("general_rule", """\
Translate one sentence from a linter check's documentation into DSL rules.
""" + _GRAMMAR_BLOCK + """
Write one rule per line and nothing else. Use program terms (AST node kinds, tokens, comment parts)
for the checked objects.

Example
Check: AvoidStarImport
Sentence: Checks that there are no import statements that use the * notation.
Rules:
Mandatory: No [Import] use [StarNotation]

Check: <config_name>
Sentence: <sentence>
Rules:
""")

OPTION_VALUES = PromptTemplate("option_values", """\
A linter check has an option with a fixed set of values. Write one DSL rule per value describing how
the check behaves when the option has that value.
""" + _GRAMMAR_BLOCK + """
Answer with exactly one line per value in the form  VALUE: RULE  and nothing else.

Example
Check: AvoidStarImport (Mandatory: No [Import] use [StarNotation])
Option: allowStaticMemberImports - whether static member imports may use the * notation.
Values: true, false
Answer:
true: Optional: [StaticImport] use [StarNotation]
false: Mandatory: No [StaticImport] use [StarNotation]

Check: <config_name> (<general_rules>)
Option: <option_name> - <option_description>
Values: <values>
Answer:
""")

OPTION_PLACEHOLDER = PromptTemplate("option_placeholder", """\
A linter check has an option whose value is free-form (a number, a pattern, a list). Write a single
DSL rule describing the behavior it controls, writing the option value as the placeholder
{<option_name>} exactly once.
""" + _GRAMMAR_BLOCK + """
Answer with the rule alone on one line.

Example
Check: LineLength (Mandatory: [LineLength] <= {max})
Option: max - the maximum allowed line length.
Answer:
Mandatory: [LineLength] <= {max}

Check: <config_name> (<general_rules>)
Option: <option_name> - <option_description>
Answer:
""")

OPTION_OBJECTS = PromptTemplate("option_objects", """\
A linter check has an option that selects which program objects the check applies to. Write a single
DSL rule for the check in which the checked objects are replaced by the placeholder {<option_name>}.
""" + _GRAMMAR_BLOCK + """
Answer with the rule alone on one line.

Example
Check: NeedBraces (Mandatory: [CodeBlock] have [Brace])
Option: tokens - token types the check visits, for example LITERAL_IF, LITERAL_FOR.
Answer:
Mandatory: {tokens} have [Brace]

Check: <config_name> (<general_rules>)
Option: <option_name> - <option_description>
Answer:
""")

STAGE1 = PromptTemplate("stage1_parse", """\
Read the coding standard below. First decide which sentences state rules; examples, rationale and
background are not rules, and a single sentence may state more than one rule. Then write each rule
in the DSL, using programming-language terms for the objects and operators that keep the meaning.
""" + _GRAMMAR_BLOCK + """
Write one numbered rule per line. If the standard contains no rule at all, answer NONE.

Example
Standard: Import statements
1) Wildcard imports, static or otherwise, are not used.
2) Import statements are not line-wrapped.
DSL:
1. Mandatory: No [Import] use [Wildcard]
2. Mandatory: No [Import] have [LineWrap]

Standard: <title>
<sentences>
DSL:
""")

STAGE2 = PromptTemplate("stage2_select", """\
Match coding rules to linter checks. Each check below is listed with the DSL rules describing its
general behavior. For every numbered coding rule, name the checks whose behavior matches it.
Only use names from the list.
Answer with one line per coding rule in the form  N: Name, Name  or
N: NONE  and nothing else.

Example
Coding rules:
1. Mandatory: No [Import] use [Wildcard]
Checks:
AvoidStarImport: Mandatory: No [Import] use [StarNotation]
NeedBraces: Mandatory: [CodeBlock] have [Brace]
Answer:
1: AvoidStarImport

Coding rules:
<rules>
Checks:
<checks>
Answer:
""")

STAGE3 = PromptTemplate("stage3_options", """\
Choose option settings for the selected linter checks. Each option setting is described by a DSL
rule; when the rule holds a placeholder such as {max}, read the value for it from the coding rule.
For each coding rule, list the settings it requires, one per line, as
  rule N | CHECK | OPTION | VALUE
If a check matches a coding rule with its default behavior and needs no option, write
  rule N | CHECK | - | -
Only use checks and options from the list. Quote values exactly as the option expects them; write
lists as comma-separated items.

Example
Coding rules:
1. Mandatory: [LineLength] <= [100]
Checks:
check LineLength
  general: Mandatory: [LineLength] <= {max}
  max = {max}: Mandatory: [LineLength] <= {max}
  ignorePattern = {ignorePattern}: Optional: [Line] match {ignorePattern}
Answer:
rule 1 | LineLength | max | 100

Coding rules:
<rules>
Checks:
<checks>
Answer:
""")

STAGE4 = PromptTemplate("stage4_align", """\
Check whether a linter configuration enforces a coding rule. Both are given in the DSL.
<questions>
Answer each question on its own line as  QUESTION: yes - REASON  or  QUESTION: no - REASON.

Example
Coding rule: Mandatory: No [Import] use [Wildcard]
Configuration AvoidStarImport:
  Mandatory: No [Import] use [StarNotation]
Questions: objects, semantics
Answer:
objects: yes - both check import statements and the star form of the name
semantics: yes - both forbid wildcard imports

Coding rule: <standard_rule>
Configuration <config_name>:
<config_rules>
Questions: <question_list>
Answer:
""")

OBJECTS_QUESTION = ("objects: do the configuration's rules check the same program objects as the "
                    "coding rule?")
RULE_TYPE_QUESTION = "rule_type: do both have the same rule type, Mandatory or Optional?"
SEMANTICS_QUESTION = "semantics: does the configuration enforce the same requirement as the coding rule?"

STAGE5 = PromptTemplate("stage5_render", """\
Write a <linter> configuration that enables exactly the verified configurations below, with the
listed option values. Output only the configuration document.

Example
Verified configurations:
<example_configs>
Configuration:
<example_output>

Verified configurations:
<configs>
Configuration:
""")

BASELINE = PromptTemplate("baseline", """\
Generate <linter> configurations that enforce the coding standard below.
<tool_information>
List each configuration on its own line as  CHECK | OPTION | VALUE  or  CHECK | - | -  when
no option is needed. Answer NONE if no configuration applies.

Example
Standard: Import statements
Wildcard imports, static or otherwise, are not used.
Answer:
AvoidStarImport | - | -

Standard: <title>
<standard>
Answer:
""")

REPAIR = PromptTemplate("repair", """\
That answer could not be used: <error>
Reply again, following the required format exactly.""")

ALL = (CLASSIFY, GENERAL_RULE, OPTION_VALUES, OPTION_PLACEHOLDER, OPTION_OBJECTS,
       STAGE1, STAGE2, STAGE3, STAGE4, STAGE5, BASELINE, REPAIR)


def template_hashes() -> dict[str, str]:
    return {t.name: t.digest for t in ALL}
