"""Root to derivative-forms lexicon used for the first lemmatization stage.

The on-disk format is a single JSON object mapping each root to the list of
surface forms it covers, the root itself included::

    {"cab": ["cab", "caba", "cabay", "cabeen"], "bariis": ["bariis", "bariiska"]}
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import EmptyLexiconError, LexiconFormatError, LexiconValidationError

# lowercase Latin letters, apostrophe allowed only between letters
WORD_RE = re.compile(r"[a-z]+(?:'[a-z]+)*")

ROOT_NOT_IN_OWN_LIST = "root-not-in-own-list"
DUPLICATE_SURFACE_FORM = "duplicate-surface-form"
EMPTY_DERIVATIVE_LIST = "empty-derivative-list"
NON_ALPHABETIC_TOKEN = "non-alphabetic-token"

# violations that make a lexicon unsafe to write out
BLOCKING_KINDS = frozenset({EMPTY_DERIVATIVE_LIST, NON_ALPHABETIC_TOKEN})


def is_word(token: str) -> bool:
    return WORD_RE.fullmatch(token) is not None


class Lexicon:
    """Immutable mapping of root -> tuple of surface forms.

    Entries are kept sorted by root so iteration is deterministic. Repeated
    forms inside one entry are kept as given; :meth:`canonical` drops them.
    """

    __slots__ = ("_entries", "_index", "source_path")

    def __init__(self, entries: Mapping[str, Iterable[str]], source_path: Optional[Path] = None):
        ordered = {root: tuple(entries[root]) for root in sorted(entries)}
        self._entries = MappingProxyType(ordered)
        index: dict[str, str] = {}
        # sorted iteration + setdefault: on collisions the smallest root wins
        for root, forms in ordered.items():
            for form in forms:
                index.setdefault(form, root)
        self._index = index
        self.source_path = source_path

    @property
    def entries(self) -> Mapping[str, tuple[str, ...]]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __contains__(self, root: object) -> bool:
        return root in self._entries

    def __getitem__(self, root: str) -> tuple[str, ...]:
        return self._entries[root]

    def items(self):
        return self._entries.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} roots)"

    # pickling support for process pools; __slots__ classes need it spelled out
    def __getstate__(self):
        return dict(self._entries), self.source_path

    def __setstate__(self, state):
        entries, source_path = state
        self.__init__(entries, source_path)

    def lookup(self, word: str) -> Optional[str]:
        return self._index.get(word)

    def canonical(self) -> "Lexicon":
        """Copy with repeated forms inside each entry removed (first one kept)."""
        return Lexicon(
            {root: tuple(dict.fromkeys(forms)) for root, forms in self._entries.items()},
            self.source_path,
        )

    def with_entry(self, root: str, forms: Sequence[str]) -> "Lexicon":
        """Return a new lexicon where ``root`` maps to ``forms``."""
        merged = dict(self._entries)
        merged[root] = tuple(forms)
        return Lexicon(merged, self.source_path)


def lookup(lex: Lexicon, word: str) -> Optional[str]:
    """Root whose form list contains ``word``, or None."""
    return lex.lookup(word)


@dataclass(frozen=True)
class Violation:
    kind: str
    root: str
    form: Optional[str] = None
    # every root involved, for duplicate-surface-form
    roots: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind == DUPLICATE_SURFACE_FORM:
            return f"{self.kind}({self.form!r} in {', '.join(self.roots)})"
        if self.form is None:
            return f"{self.kind}({self.root!r})"
        return f"{self.kind}({self.root!r}, {self.form!r})"


def validate_lexicon(lex: Lexicon) -> list[Violation]:
    violations: list[Violation] = []
    owners: dict[str, list[str]] = {}
    for root, forms in lex.items():
        if not is_word(root):
            violations.append(Violation(NON_ALPHABETIC_TOKEN, root, root))
        if not forms:
            violations.append(Violation(EMPTY_DERIVATIVE_LIST, root))
            continue
        if root not in forms:
            violations.append(Violation(ROOT_NOT_IN_OWN_LIST, root))
        for form in dict.fromkeys(forms):
            if not is_word(form):
                violations.append(Violation(NON_ALPHABETIC_TOKEN, root, form))
            owners.setdefault(form, []).append(root)
    for form in sorted(owners):
        roots = owners[form]
        if len(roots) > 1:
            violations.append(Violation(DUPLICATE_SURFACE_FORM, roots[0], form, tuple(roots)))
    return violations


@dataclass(frozen=True)
class LexiconStats:
    root_count: int
    derivative_count: int
    total_tokens: int


def lexicon_stats(lex: Lexicon) -> LexiconStats:
    """Count roots and derivatives.

    Every listed form counts as a derivative except one self-listing of the
    root, which is counted on the roots side (1247 roots + 7173 derivatives
    = 8420 tokens for the authors' lexicon).
    """
    roots = len(lex)
    derivatives = sum(len(forms) - (root in forms) for root, forms in lex.items())
    return LexiconStats(roots, derivatives, roots + derivatives)


def _reject_duplicate_keys(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise LexiconFormatError(f"duplicate root key {key!r}")
        seen[key] = value
    return seen


def parse_lexicon(text: str, source: Optional[Path] = None) -> Lexicon:
    try:
        data = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise LexiconFormatError(exc.msg, source, exc.lineno, exc.colno) from exc
    except LexiconFormatError as exc:
        raise LexiconFormatError(str(exc), source) from exc
    if not isinstance(data, dict):
        raise LexiconFormatError("top-level value must be an object", source)
    if not data:
        raise EmptyLexiconError("lexicon has no entries", source)

    entries: dict[str, list[str]] = {}
    for key, forms in data.items():
        if not isinstance(forms, list) or not all(isinstance(f, str) for f in forms):
            raise LexiconFormatError(f"entry {key!r} must map to an array of strings", source)
        for token in (key, *forms):
            if any(ch.isspace() for ch in token):
                raise LexiconFormatError(f"entry {key!r} contains whitespace in {token!r}", source)
        root = key.lower()
        if root in entries:
            raise LexiconFormatError(f"root {key!r} collides with another key after lowercasing", source)
        entries[root] = [f.lower() for f in forms]
    return Lexicon(entries, source)


def load_lexicon(path) -> Lexicon:
    path = Path(path)
    raw = path.read_bytes()  # FileNotFoundError propagates
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexiconFormatError(f"invalid UTF-8 at byte {exc.start}", path) from exc
    return parse_lexicon(text, path)


def dump_lexicon(lex: Lexicon) -> str:
    blocking = [v for v in validate_lexicon(lex) if v.kind in BLOCKING_KINDS]
    if blocking:
        raise LexiconValidationError(blocking)
    canon = lex.canonical()
    return json.dumps(dict(canon.entries), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save_lexicon(lex: Lexicon, path) -> None:
    text = dump_lexicon(lex)
    Path(path).write_text(text, encoding="utf-8")
