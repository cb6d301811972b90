"""Declarative token-rewrite rules.

A rule matches a single token surface with a small pattern language
(literals, character classes, anchors, capture groups) guarded by
neighbor-token and sentence-position predicates; the replacement is a
template over captures. Rules are grouped into three stages applied in
fixed order: morphological, then phonological, then mistake fixes.
Cross-token transforms are out of scope here and live in the converter.

Rule file grammar (one rule per line, ``#`` starts a comment):

    id | category | priority | pattern | replacement | guards | flags

Pattern metacharacters: ``^`` ``$`` anchors, ``(`` ``)`` groups, ``|``
alternation, ``.`` any char, ``+`` ``*`` ``?`` quantifiers, and the
character classes ``\\c`` consonant, ``\\v`` vowel letter, ``\\d``
digit, ``\\p`` punctuation, ``\\j`` joiner. Anything else is literal.
Replacements may reference captures as ``\\1``..``\\9``. Guards are
comma-separated (``left:verb``, ``right:noun``, ``left:any``,
``right:any``, ``first``, ``final``, ``not-final``, ``not-first``).
Flags: ``v`` accepts a rewrite only when the result is in the formal
vocabulary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable

from rasmi import textcore

STAGES = ("morphological", "phonological", "mistake")
CATEGORIES = STAGES + ("syntactic",)

_CLASS_REGEX = {
    "c": "[" + "".join(sorted(textcore.CONSONANTS)) + "]",
    "v": "[" + "".join(sorted(textcore.VOWEL_LETTERS)) + "]",
    "d": "[" + "".join(sorted(textcore.PERSIAN_DIGITS)) + "]",
    "p": "[" + re.escape("".join(sorted(textcore.PUNCTUATION))) + "]",
    "j": textcore.ZWNJ,
}

_GUARDS = {"left:verb", "left:noun", "left:pronoun", "left:any",
           "right:verb", "right:noun", "right:pronoun", "right:any",
           "first", "final", "not-final", "not-first"}


class RuleParseError(ValueError):
    """Carries the full list of problems found in a rule file."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


@dataclass(frozen=True)
class GuardContext:
    """Neighborhood of the token a rule is being applied to."""

    left: str | None = None
    right: str | None = None
    index: int = 0
    n_tokens: int = 1
    predicates: dict[str, Callable[[str], bool]] = field(default_factory=dict)

    def _holds_for(self, side: str, kind: str) -> bool:
        neighbor = self.left if side == "left" else self.right
        if neighbor is None:
            return False
        if kind == "any":
            return True
        pred = self.predicates.get(kind)
        return bool(pred and pred(neighbor))

    def check(self, guard: str) -> bool:
        if guard == "first":
            return self.index == 0
        if guard == "not-first":
            return self.index > 0
        if guard == "final":
            return self.index == self.n_tokens - 1
        if guard == "not-final":
            return self.index < self.n_tokens - 1
        side, _, kind = guard.partition(":")
        return self._holds_for(side, kind)


def compile_pattern(pattern: str) -> re.Pattern:
    out: list[str] = []
    i = 0
    while i < len(pattern):
        ch = pattern[i]
        if ch == "\\":
            if i + 1 >= len(pattern) or pattern[i + 1] not in _CLASS_REGEX:
                raise ValueError(f"unknown character class at position {i}: {pattern[i:i+2]!r}")
            out.append(_CLASS_REGEX[pattern[i + 1]])
            i += 2
            continue
        if ch in "^$()|.+*?":
            out.append(ch)
        else:
            out.append(re.escape(ch))
        i += 1
    return re.compile("".join(out))


def _compile_replacement(template: str) -> Callable[[re.Match], str]:
    parts: list[str | int] = []
    i = 0
    while i < len(template):
        if template[i] == "\\" and i + 1 < len(template) and template[i + 1].isdigit():
            parts.append(int(template[i + 1]))
            i += 2
        else:
            parts.append(template[i])
            i += 1

    def expand(m: re.Match) -> str:
        return "".join(m.group(p) or "" if isinstance(p, int) else p for p in parts)

    return expand


@dataclass
class Rule:
    id: str
    category: str
    priority: int
    pattern: str
    replacement: str
    guards: tuple[str, ...] = ()
    validate: bool = False
    _compiled: re.Pattern = field(init=False, repr=False)
    _expand: Callable[[re.Match], str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._compiled = compile_pattern(self.pattern)
        self._expand = _compile_replacement(self.replacement)
        n_groups = self._compiled.groups
        for m in re.finditer(r"\\(\d)", self.replacement):
            if int(m.group(1)) > n_groups:
                raise ValueError(f"replacement references undefined capture \\{m.group(1)}")


class RuleSet:
    """Rules grouped by category; within a stage (priority, id) is a strict total order."""

    def __init__(self, rules: Iterable[Rule] = (), formal_vocab: set[str] | None = None):
        self.by_category: dict[str, list[Rule]] = {c: [] for c in CATEGORIES}
        self.formal_vocab: set[str] = set(formal_vocab or ())
        ids: set[str] = set()
        for rule in rules:
            if rule.id in ids:
                raise ValueError(f"duplicate rule id: {rule.id}")
            ids.add(rule.id)
            self.by_category[rule.category].append(rule)
        for cat in self.by_category:
            self.by_category[cat].sort(key=lambda r: (r.priority, r.id))

    def __len__(self) -> int:
        return sum(len(v) for v in self.by_category.values())

    def rule_ids(self) -> set[str]:
        return {r.id for rs in self.by_category.values() for r in rs}

    def stage(self, name: str) -> list[Rule]:
        return self.by_category[name]


def parse_ruleset(text: str, formal_vocab: set[str] | None = None) -> RuleSet:
    """Parse a rule file; either every rule parses or a full error list is raised."""
    rules: list[Rule] = []
    errors: list[str] = []
    seen: dict[str, int] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = [c.strip() for c in stripped.split("|")]
        if len(cols) != 7:
            errors.append(f"line {line_no}: expected 7 '|'-separated fields, got {len(cols)}")
            continue
        rid, category, prio_s, pattern, replacement, guards_s, flags = cols
        if rid in seen:
            errors.append(f"line {line_no}: duplicate rule id {rid!r} (first at line {seen[rid]})")
            continue
        seen[rid] = line_no
        if category not in CATEGORIES:
            errors.append(f"line {line_no}: unknown category {category!r}")
            continue
        try:
            priority = int(prio_s)
        except ValueError:
            errors.append(f"line {line_no}: priority is not an integer: {prio_s!r}")
            continue
        guards = tuple(g for g in (s.strip() for s in guards_s.split(",")) if g)
        bad_guards = [g for g in guards if g not in _GUARDS]
        if bad_guards:
            errors.append(f"line {line_no}: unknown guard(s) {bad_guards}")
            continue
        unknown_flags = set(flags) - {"v", ""}
        if unknown_flags:
            errors.append(f"line {line_no}: unknown flag(s) {sorted(unknown_flags)}")
            continue
        try:
            rules.append(Rule(rid, category, priority, pattern, replacement,
                              guards, validate="v" in flags))
        except (ValueError, re.error) as exc:
            errors.append(f"line {line_no}: bad pattern or replacement: {exc}")
    if errors:
        raise RuleParseError(errors)
    return RuleSet(rules, formal_vocab)


def apply_rule(rule: Rule, token: str, context: GuardContext,
               formal_vocab: set[str] | None = None) -> str | None:
    """Rewrite a token surface, or None when the rule does not apply.

    All non-overlapping pattern occurrences are replaced. A validated
    rule additionally requires the result to be a known formal word.
    """
    if not all(context.check(g) for g in rule.guards):
        return None
    result, n = rule._compiled.subn(rule._expand, token)
    if n == 0 or result == token:
        return None
    if rule.validate and result not in (formal_vocab or ()):
        return None
    return result


@dataclass(frozen=True)
class TraceEntry:
    stage: str
    rule_id: str
    token_index: int
    before: str
    after: str


def apply_stage(ruleset: RuleSet, tokens: list[str], stage: str,
                predicates: dict[str, Callable[[str], bool]] | None = None,
                skip: set[int] | None = None) -> tuple[list[str], list[TraceEntry]]:
    """Apply one stage; at most one rule rewrites a given token.

    Neighbor guards see the evolving sequence (tokens already rewritten
    earlier in the same pass show their new surface).
    """
    if stage not in STAGES:
        raise ValueError(f"unknown stage: {stage}")
    out = list(tokens)
    preds = predicates or {}
    trace: list[TraceEntry] = []
    for idx, tok in enumerate(out):
        if skip and idx in skip:
            continue
        ctx = GuardContext(
            left=out[idx - 1] if idx > 0 else None,
            right=out[idx + 1] if idx + 1 < len(out) else None,
            index=idx, n_tokens=len(out), predicates=preds)
        for rule in ruleset.stage(stage):
            rewritten = apply_rule(rule, tok, ctx, ruleset.formal_vocab)
            if rewritten is not None:
                out[idx] = rewritten
                trace.append(TraceEntry(stage, rule.id, idx, tok, rewritten))
                break
    return out, trace


def apply_stages(ruleset: RuleSet, tokens: list[str],
                 predicates: dict[str, Callable[[str], bool]] | None = None,
                 skip: set[int] | None = None) -> tuple[list[str], list[TraceEntry]]:
    """Run all three stages in their fixed order."""
    trace: list[TraceEntry] = []
    out = list(tokens)
    for stage in STAGES:
        out, t = apply_stage(ruleset, out, stage, predicates, skip)
        trace.extend(t)
    return out, trace
