"""Coding-rule DSL: AST, parser, canonical formatter and rule analysis.

Grammar accepted by :func:`parse_rule_set`::

    RuleSet     := Rule (";" Rule)* [";"]
    Rule        := RuleType ":" Constraint ["Except" Constraint ("," Constraint)*]
    RuleType    := "Mandatory" | "Optional"
    Constraint  := "No" Constraint
                 | "Order of" TermList ("is" | "is not") TermList
                 | "Number of" Chain
                 | ("if" | "If") Constraint "then" Constraint
                 | Chain
    Chain       := TermList (Operator [TermList])*
    TermList    := "[" Term ("," Term)* "]" | "{" name "}"
    Term        := [Modifier] PLterm ["of" Term]

Operators are free text between term lists. Only the final operator of a
chain may stand without a following term list (``[LineLength] > 80``).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Iterator, Union

__all__ = [
    "RuleType",
    "Term",
    "TermList",
    "Relational",
    "Negation",
    "Ordering",
    "Counting",
    "Conditional",
    "Constraint",
    "DslRule",
    "RuleSet",
    "DslError",
    "DslSyntaxError",
    "EmptyInputError",
    "UnknownPlaceholderError",
    "parse_rule_set",
    "parse_rule",
    "parse_term",
    "format_rule_set",
    "format_rule",
    "format_constraint",
    "extract_checked_objects",
    "find_placeholders",
    "substitute_placeholder",
    "structural_eq",
    "iter_term_lists",
    "term_text",
]


class RuleType(str, enum.Enum):
    MANDATORY = "Mandatory"
    OPTIONAL = "Optional"


@dataclass(frozen=True)
class Term:
    plterm: str
    modifier: str | None = None
    of_chain: Term | None = None

    def __post_init__(self) -> None:
        if not self.plterm or "\n" in self.plterm:
            raise ValueError(f"invalid PLterm {self.plterm!r}")


@dataclass(frozen=True)
class TermList:
    terms: tuple[Term, ...]
    placeholder: bool = False

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("TermList needs at least one term")
        if self.placeholder and len(self.terms) != 1:
            raise ValueError("placeholder TermList holds exactly one term")

    @classmethod
    def of(cls, *texts: str) -> TermList:
        return cls(tuple(parse_term(t) for t in texts))

    @classmethod
    def slot(cls, name: str) -> TermList:
        return cls((Term(name.strip()),), placeholder=True)

    @property
    def name(self) -> str:
        """Placeholder name (only meaningful when ``placeholder`` is set)."""
        return self.terms[0].plterm


@dataclass(frozen=True)
class Relational:
    head: TermList
    pairs: tuple[tuple[str, TermList | None], ...] = ()


@dataclass(frozen=True)
class Negation:
    inner: Constraint


@dataclass(frozen=True)
class Ordering:
    subject: TermList
    order: TermList
    negated: bool = False


@dataclass(frozen=True)
class Counting:
    body: Relational


@dataclass(frozen=True)
class Conditional:
    condition: Constraint
    consequence: Constraint


Constraint = Union[Relational, Negation, Ordering, Counting, Conditional]


@dataclass(frozen=True)
class DslRule:
    rule_type: RuleType
    constraint: Constraint
    exceptions: tuple[Constraint, ...] = ()

    def __str__(self) -> str:
        return format_rule(self)


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[DslRule, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return format_rule_set(self)

    def __iter__(self) -> Iterator[DslRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


class DslError(ValueError):
    pass


class DslSyntaxError(DslError):
    """Malformed DSL text; ``offset`` is a byte offset into the UTF-8 source."""

    def __init__(self, message: str, offset: int, expected: str | None = None) -> None:
        self.offset = offset
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at byte {offset}{hint}")


class EmptyInputError(DslError):
    pass


class UnknownPlaceholderError(DslError, KeyError):
    def __str__(self) -> str:
        return self.args[0] if self.args else "unknown placeholder"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_WS = re.compile(r"\s+")
_MODIFIER = re.compile(r"[a-z]+")
_RULE_TYPE = re.compile(r"(Mandatory|Optional)\s*:")
_OP_WORD = re.compile(r"[^\s\[\]{};]+")
_EXCEPT_WORD = re.compile(r"[^\s\[\]{};,]+")


def _norm(text: str) -> str:
    return _WS.sub(" ", text).strip()


def parse_term(text: str) -> Term:
    """Parse the text of one term (no brackets, no commas)."""
    words = _norm(text).split(" ")
    if words == [""]:
        raise ValueError("empty term")
    if "of" in words[1:-1]:
        idx = words.index("of", 1)
        head, rest = words[:idx], words[idx + 1 :]
        chain = parse_term(" ".join(rest))
    else:
        head, chain = words, None
    modifier = None
    if len(head) >= 2 and _MODIFIER.fullmatch(head[0]):
        modifier, head = head[0], head[1:]
    return Term(" ".join(head), modifier, chain)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        # >0 while inside an if-condition: "then" ends operator text there
        self.cond_depth = 0
        # >0 while inside an Except list: "," ends a constraint there
        self.except_depth = 0

    # -- helpers ----------------------------------------------------------
    def error(self, message: str, expected: str | None = None, pos: int | None = None) -> DslSyntaxError:
        at = self.pos if pos is None else pos
        return DslSyntaxError(message, len(self.text[:at].encode("utf-8")), expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r":
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == "\n":
            raise self.error("newline inside rule", "';' between rules")

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek_word(self) -> str:
        m = re.compile(r"[^\s\[\]{};,]+").match(self.text, self.pos)
        return m.group(0) if m else ""

    def accept_words(self, *words: str) -> bool:
        """Consume the given word sequence if it is next (whole words)."""
        save = self.pos
        for w in words:
            self.skip_ws()
            if self.peek_word() != w:
                self.pos = save
                return False
            self.pos += len(w)
        return True

    # -- grammar ----------------------------------------------------------
    def rule_set(self) -> RuleSet:
        rules: list[DslRule] = []
        while True:
            self.skip_ws_nl()
            if self.at_end():
                break
            rules.append(self.rule())
            self.skip_ws_nl()
            if self.at_end():
                break
            if self.text[self.pos] != ";":
                raise self.error("unexpected text after rule", "';'")
            self.pos += 1
        if not rules:
            raise self.error("no rules", "'Mandatory:' or 'Optional:'")
        return RuleSet(tuple(rules))

    def skip_ws_nl(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def rule(self) -> DslRule:
        m = _RULE_TYPE.match(self.text, self.pos)
        if not m:
            raise self.error("missing rule type", "'Mandatory:' or 'Optional:'")
        self.pos = m.end()
        rule_type = RuleType(m.group(1))
        constraint = self.constraint()
        exceptions: list[Constraint] = []
        while self.accept_words("Except"):
            self.except_depth += 1
            try:
                exceptions.append(self.constraint())
                while True:
                    self.skip_ws()
                    if not self.at_end() and self.text[self.pos] == ",":
                        self.pos += 1
                        exceptions.append(self.constraint())
                    else:
                        break
            finally:
                self.except_depth -= 1
        return DslRule(rule_type, constraint, tuple(exceptions))

    def constraint(self) -> Constraint:
        self.skip_ws()
        if self.at_end():
            raise self.error("unexpected end of input", "constraint")
        ch = self.text[self.pos]
        if ch in "[{":
            return self.chain()
        if self.accept_words("No"):
            return Negation(self.constraint())
        if self.accept_words("Order", "of"):
            subject = self.term_list()
            if not self.accept_words("is"):
                raise self.error("bad ordering constraint", "'is' or 'is not'")
            negated = self.accept_words("not")
            return Ordering(subject, self.term_list(), negated)
        if self.accept_words("Number", "of"):
            body = self.chain()
            if not body.pairs:
                raise self.error("counting constraint without operator", "operator")
            return Counting(body)
        word = self.peek_word()
        if word in ("if", "If"):
            self.pos += len(word)
            self.cond_depth += 1
            try:
                condition = self.constraint()
            finally:
                self.cond_depth -= 1
            if not self.accept_words("then"):
                raise self.error("conditional without 'then'", "'then'")
            return Conditional(condition, self.constraint())
        raise self.error(f"unexpected {word or ch!r}", "'[', '{', 'No', 'Order of', 'Number of' or 'if'")

    def chain(self) -> Relational:
        head = self.term_list()
        pairs: list[tuple[str, TermList | None]] = []
        while True:
            op = self.operator()
            if op is None:
                break
            self.skip_ws()
            if not self.at_end() and self.text[self.pos] in "[{":
                pairs.append((op, self.term_list()))
            else:
                pairs.append((op, None))
                break
        return Relational(head, tuple(pairs))

    def operator(self) -> str | None:
        """Read free operator text up to the next term list or boundary."""
        words: list[str] = []
        while True:
            self.skip_ws()
            if self.at_end():
                break
            ch = self.text[self.pos]
            if ch in "[{;":
                break
            if ch in "]}":
                raise self.error(f"unbalanced {ch!r}")
            if ch == "," and self.except_depth:
                break
            word_re = _EXCEPT_WORD if self.except_depth else _OP_WORD
            word = word_re.match(self.text, self.pos).group(0)
            if word == "Except" or (word == "then" and self.cond_depth):
                break
            if "]" in word or "}" in word:
                raise self.error(f"unbalanced bracket in {word!r}")
            words.append(word)
            self.pos += len(word)
        return " ".join(words) if words else None

    def term_list(self) -> TermList:
        self.skip_ws()
        if self.at_end():
            raise self.error("unexpected end of input", "'[' or '{'")
        open_ch = self.text[self.pos]
        if open_ch == "{":
            start = self.pos
            end = self.text.find("}", self.pos)
            nl = self.text.find("\n", self.pos)
            if end < 0 or (0 <= nl < end):
                raise self.error("unclosed placeholder", "'}'", start)
            name = _norm(self.text[self.pos + 1 : end])
            if not name:
                raise self.error("empty placeholder", "placeholder name", start)
            if "{" in name:
                raise self.error("nested brace in placeholder", "'}'", start)
            self.pos = end + 1
            return TermList((Term(name),), placeholder=True)
        if open_ch != "[":
            raise self.error(f"unexpected {open_ch!r}", "'[' or '{'")
        start = self.pos
        self.pos += 1
        terms: list[Term] = []
        buf_start = self.pos
        depth = 0  # braces inside bracketed terms are literal text
        while True:
            if self.at_end():
                raise self.error("unclosed bracket", "']'", start)
            ch = self.text[self.pos]
            if ch == "\n":
                raise self.error("newline inside term list", "']'")
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth = max(0, depth - 1)
            elif ch == "[" and not depth:
                raise self.error("nested '['", "']'")
            elif ch in ",]" and not depth:
                raw = self.text[buf_start : self.pos]
                if not raw.strip():
                    raise self.error("empty term", "term text", buf_start)
                terms.append(parse_term(raw))
                self.pos += 1
                if ch == "]":
                    return TermList(tuple(terms))
                buf_start = self.pos
                continue
            self.pos += 1


def parse_rule_set(text: str) -> RuleSet:
    """Parse DSL source into a :class:`RuleSet`."""
    if not text or not text.strip():
        raise EmptyInputError("blank DSL input")
    return _Parser(text).rule_set()


def parse_rule(text: str) -> DslRule:
    rs = parse_rule_set(text)
    if len(rs.rules) != 1:
        raise DslSyntaxError(f"expected one rule, found {len(rs.rules)}", 0)
    return rs.rules[0]


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------


def term_text(term: Term) -> str:
    parts = [term.modifier, term.plterm] if term.modifier else [term.plterm]
    text = " ".join(parts)
    if term.of_chain is not None:
        text += " of " + term_text(term.of_chain)
    return text


def _fmt_terms(tl: TermList) -> str:
    if tl.placeholder:
        return "{" + tl.name + "}"
    return "[" + ", ".join(term_text(t) for t in tl.terms) + "]"


def format_constraint(c: Constraint) -> str:
    if isinstance(c, Relational):
        out = _fmt_terms(c.head)
        for op, tl in c.pairs:
            out += f" {op}" + (f" {_fmt_terms(tl)}" if tl is not None else "")
        return out
    if isinstance(c, Negation):
        return "No " + format_constraint(c.inner)
    if isinstance(c, Ordering):
        verb = "is not" if c.negated else "is"
        return f"Order of {_fmt_terms(c.subject)} {verb} {_fmt_terms(c.order)}"
    if isinstance(c, Counting):
        return "Number of " + format_constraint(c.body)
    if isinstance(c, Conditional):
        return f"if {format_constraint(c.condition)} then {format_constraint(c.consequence)}"
    raise TypeError(f"not a constraint: {c!r}")


def format_rule(rule: DslRule) -> str:
    out = f"{rule.rule_type.value}: {format_constraint(rule.constraint)}"
    if rule.exceptions:
        out += " Except " + ", ".join(format_constraint(e) for e in rule.exceptions)
    return out


def format_rule_set(rs: RuleSet) -> str:
    return "; ".join(format_rule(r) for r in rs.rules)


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------


def _constraint_lists(c: Constraint) -> Iterator[TermList]:
    if isinstance(c, Relational):
        yield c.head
        for _, tl in c.pairs:
            if tl is not None:
                yield tl
    elif isinstance(c, Negation):
        yield from _constraint_lists(c.inner)
    elif isinstance(c, Ordering):
        yield c.subject
        yield c.order
    elif isinstance(c, Counting):
        yield from _constraint_lists(c.body)
    elif isinstance(c, Conditional):
        yield from _constraint_lists(c.condition)
        yield from _constraint_lists(c.consequence)


def iter_term_lists(rule: DslRule) -> Iterator[TermList]:
    """Every term list of the rule, left to right, placeholders included."""
    yield from _constraint_lists(rule.constraint)
    for exc in rule.exceptions:
        yield from _constraint_lists(exc)


def extract_checked_objects(rule: DslRule) -> list[TermList]:
    return [tl for tl in iter_term_lists(rule) if not tl.placeholder]


def find_placeholders(rule: DslRule) -> list[str]:
    seen: list[str] = []
    for tl in iter_term_lists(rule):
        if tl.placeholder and tl.name not in seen:
            seen.append(tl.name)
    return seen


def _subst(c: Constraint, name: str, repl: TermList) -> Constraint:
    def tl_sub(tl: TermList | None) -> TermList | None:
        if tl is not None and tl.placeholder and tl.name == name:
            return repl
        return tl

    if isinstance(c, Relational):
        return Relational(tl_sub(c.head), tuple((op, tl_sub(tl)) for op, tl in c.pairs))
    if isinstance(c, Negation):
        return Negation(_subst(c.inner, name, repl))
    if isinstance(c, Ordering):
        return replace(c, subject=tl_sub(c.subject), order=tl_sub(c.order))
    if isinstance(c, Counting):
        return Counting(_subst(c.body, name, repl))
    if isinstance(c, Conditional):
        return Conditional(_subst(c.condition, name, repl), _subst(c.consequence, name, repl))
    raise TypeError(f"not a constraint: {c!r}")


def substitute_placeholder(rule: DslRule, name: str, values: list[str]) -> DslRule:
    """Replace every ``{name}`` with the bracketed list of ``values``."""
    if name not in find_placeholders(rule):
        raise UnknownPlaceholderError(f"placeholder {{{name}}} not in rule {format_rule(rule)!r}")
    if not values:
        raise ValueError("substitution needs at least one value")
    repl = TermList(tuple(parse_term(v) for v in values))
    return DslRule(
        rule.rule_type,
        _subst(rule.constraint, name, repl),
        tuple(_subst(e, name, repl) for e in rule.exceptions),
    )


def structural_eq(a: DslRule, b: DslRule) -> bool:
    # parsing already normalizes whitespace, so AST equality is the canonical comparison
    return a == b
