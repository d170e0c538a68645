"""Prefix rules for words the lexicon does not cover.

A rule is a literal stem, a set of alternative continuations and the root
to return. ``jil`` + ``c|ic|eec`` -> ``jilci`` accepts any word shaped like
``jil(c|ic|eec)`` followed by zero or more letters.

Rule files hold one rule per line as three tab-separated columns::

    # stem	continuations	root
    jil	c|ic|eec	jilci
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import DuplicateRuleError, RuleFormatError
from .lexicon import is_word

_TAIL_RE = re.compile(r"[a-z']*")


@dataclass(frozen=True)
class Rule:
    stem: str
    continuations: tuple[str, ...]
    root: str
    id: int

    def __post_init__(self):
        if not self.stem or self.stem != self.stem.lower():
            raise ValueError(f"rule {self.id}: stem must be non-empty lowercase, got {self.stem!r}")
        if not self.root or self.root != self.root.lower():
            raise ValueError(f"rule {self.id}: root must be non-empty lowercase, got {self.root!r}")
        if not self.continuations or not all(self.continuations):
            raise ValueError(f"rule {self.id}: continuations must be non-empty strings")
        if len(set(self.continuations)) != len(self.continuations):
            raise ValueError(f"rule {self.id}: repeated continuation in {self.continuations!r}")

    def matches(self, word: str) -> bool:
        if not word.startswith(self.stem):
            return False
        rest = word[len(self.stem):]
        return any(
            rest.startswith(c) and _TAIL_RE.fullmatch(rest, len(c)) is not None
            for c in self.continuations
        )

    def key(self) -> tuple:
        return (self.stem, frozenset(self.continuations), self.root)


class RuleSet:
    """Rules in application order: longest stem first, then by id."""

    __slots__ = ("rules",)

    def __init__(self, rules: Iterable[Rule] = ()):
        rules = list(rules)
        ids = [r.id for r in rules]
        if len(set(ids)) != len(ids):
            raise ValueError("rule ids must be unique")
        self.rules = tuple(sorted(rules, key=lambda r: (-len(r.stem), r.id)))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other):
        if not isinstance(other, RuleSet):
            return NotImplemented
        return self.rules == other.rules

    def __hash__(self):
        return hash(self.rules)

    def __repr__(self):
        return f"RuleSet({len(self.rules)} rules)"

    def __getstate__(self):
        return self.rules

    def __setstate__(self, state):
        self.rules = state

    def apply(self, word: str) -> Optional[tuple[str, int]]:
        for rule in self.rules:
            if rule.matches(word):
                return rule.root, rule.id
        return None


def apply_rules(rs: RuleSet, word: str) -> Optional[tuple[str, int]]:
    """``(root, rule_id)`` of the first rule matching ``word``, else None."""
    return rs.apply(word)


def parse_rules(text: str, path: Optional[Path] = None) -> RuleSet:
    rules: list[Rule] = []
    seen: dict[tuple, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cols = line.rstrip("\r\n").split("\t")
        if len(cols) != 3:
            raise RuleFormatError(f"expected 3 tab-separated columns, got {len(cols)}", lineno, path)
        stem, alts, root = (c.strip().lower() for c in cols)
        continuations = tuple(a.strip() for a in alts.split("|"))
        for token in (stem, root, *continuations):
            if not is_word(token):
                raise RuleFormatError(f"invalid token {token!r}", lineno, path)
        try:
            rule = Rule(stem, continuations, root, lineno)
        except ValueError as exc:
            raise RuleFormatError(str(exc), lineno, path) from exc
        if rule.key() in seen:
            raise DuplicateRuleError(f"same rule as line {seen[rule.key()]}", lineno, path)
        seen[rule.key()] = lineno
        rules.append(rule)
    return RuleSet(rules)


def load_rules(path) -> RuleSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise RuleFormatError(f"invalid UTF-8 at byte {exc.start}", path=path) from exc
    return parse_rules(text, path)

