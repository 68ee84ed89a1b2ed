"""Random DSL AST sampler shared by the property and acceptance tests."""

from __future__ import annotations

import random

from lintcomp.dsl import (
    Conditional,
    Counting,
    DslRule,
    Negation,
    Ordering,
    Relational,
    RuleSet,
    RuleType,
    Term,
    TermList,
)

PLTERMS = [
    "CodeBlock", "Brace", "BlockTag", "@param", "@return", "Javadoc", "LineLength",
    "PACKAGE_DEF", "CLASS_DEF", "super()", "goog.module", "1", "80", "Binary Expression",
    "EmptyDescription", "LoopStatement", "A{@code Foo}...", "\"fall thru\"", "...",
    "Switch Case Group", "Ünïcode", "x_y-z", "*.java",
]
MODIFIERS = ["each", "all", "some", "first", "last", "every"]
OPERATORS = [
    "have", "is", "is not", "for", "between", "matches", "before", "in", "=", "> 80",
    "use", "not have", "= 1 for each", "begin with", "suppress", "<=", "after", "of",
]
TRAILING = ["is wrapped", "> 100", "exists", "is empty"]
SLOTS = ["tokens", "format", "max", "allowEmptyLoopBody", "forbiddenSummaryFragments"]


def sample_term(rng: random.Random, depth: int = 0) -> Term:
    chain = sample_term(rng, depth + 1) if depth < 2 and rng.random() < 0.15 else None
    modifier = rng.choice(MODIFIERS) if rng.random() < 0.2 else None
    return Term(rng.choice(PLTERMS), modifier, chain)


def sample_term_list(rng: random.Random) -> TermList:
    if rng.random() < 0.15:
        return TermList.slot(rng.choice(SLOTS))
    return TermList(tuple(sample_term(rng) for _ in range(rng.randint(1, 4))))


def sample_chain(rng: random.Random, min_pairs: int = 0) -> Relational:
    pairs: list[tuple[str, TermList | None]] = [
        (rng.choice(OPERATORS), sample_term_list(rng)) for _ in range(rng.randint(min_pairs, 3))
    ]
    if rng.random() < 0.1:
        pairs.append((rng.choice(TRAILING), None))
    return Relational(sample_term_list(rng), tuple(pairs))


def sample_constraint(rng: random.Random, depth: int = 0) -> object:
    kinds = ["rel", "rel", "no", "order", "count"] + (["if"] if depth < 2 else [])
    kind = rng.choice(kinds)
    if kind == "rel":
        return sample_chain(rng)
    if kind == "no":
        return Negation(sample_constraint(rng, depth + 1))
    if kind == "order":
        return Ordering(sample_term_list(rng), sample_term_list(rng), rng.random() < 0.5)
    if kind == "count":
        return Counting(sample_chain(rng, min_pairs=1))
    return Conditional(sample_constraint(rng, depth + 1), sample_constraint(rng, depth + 1))


def sample_rule(rng: random.Random) -> DslRule:
    exceptions = tuple(sample_constraint(rng, 1) for _ in range(rng.choice([0, 0, 0, 1, 2])))
    return DslRule(rng.choice(list(RuleType)), sample_constraint(rng), exceptions)


def sample_rule_set(rng: random.Random) -> RuleSet:
    return RuleSet(tuple(sample_rule(rng) for _ in range(rng.randint(1, 3))))
