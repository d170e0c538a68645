"""Tokenization, punctuation stripping, stopword and duplicate removal."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .data import data_path

# The bare apostrophe is a letter (glottal stop) inside a word and
# punctuation only at token edges.
PUNCTUATION = frozenset(".,;:!?\"'()[]{}-—…«»")
APOSTROPHE = "'"


@dataclass(frozen=True)
class StopwordList:
    words: frozenset = frozenset()

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def of(cls, words: Iterable[str]) -> "StopwordList":
        return cls(frozenset(w.lower() for w in words))


def parse_stopwords(text: str) -> StopwordList:
    words = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(line)
    return StopwordList.of(words)


def load_stopwords(path) -> StopwordList:
    return parse_stopwords(Path(path).read_text(encoding="utf-8"))


def default_stopwords() -> StopwordList:
    return load_stopwords(data_path("stopwords.txt"))


@dataclass
class ProcessedDocument:
    original_word_count: int = 0
    stopword_count: int = 0
    special_char_count: int = 0
    content_tokens: list[str] = field(default_factory=list)
    duplicate_count: int = 0
    # tokens made only of punctuation, e.g. a free-standing "-"
    punctuation_only_count: int = 0


def tokenize(text: str) -> list[str]:
    """Split on whitespace, then detach leading/trailing punctuation runs.

    ``"shaqo."`` gives ``["shaqo", "."]``; a run such as ``"..."`` stays one
    token. Marks inside a word are left attached.
    """
    tokens = []
    for chunk in text.split():
        start, end = 0, len(chunk)
        while start < end and chunk[start] in PUNCTUATION:
            start += 1
        while end > start and chunk[end - 1] in PUNCTUATION:
            end -= 1
        for piece in (chunk[:start], chunk[start:end], chunk[end:]):
            if piece:
                tokens.append(piece)
    return tokens


def normalize_token(tok: str) -> tuple[Optional[str], int]:
    """Lowercase ``tok`` and remove punctuation marks.

    Returns the cleaned word (None if nothing is left) and the number of
    marks removed. Marks are stripped from both edges; any other mark left
    inside the token is dropped too, except the apostrophe.
    """
    word = tok.lower()
    start, end = 0, len(word)
    while start < end and word[start] in PUNCTUATION:
        start += 1
    while end > start and word[end - 1] in PUNCTUATION:
        end -= 1
    stripped = start + (len(word) - end)
    core = word[start:end]
    if any(ch in PUNCTUATION and ch != APOSTROPHE for ch in core):
        kept = "".join(ch for ch in core if ch not in PUNCTUATION or ch == APOSTROPHE)
        stripped += len(core) - len(kept)
        core = kept
    return (core or None), stripped


def preprocess(text: str, sw: StopwordList) -> ProcessedDocument:
    doc = ProcessedDocument()
    seen: set[str] = set()
    for tok in tokenize(text):
        doc.original_word_count += 1
        word, marks = normalize_token(tok)
        doc.special_char_count += marks
        if word is None:
            doc.punctuation_only_count += 1
        elif word in sw:
            doc.stopword_count += 1
        elif word in seen:
            doc.duplicate_count += 1
        else:
            seen.add(word)
            doc.content_tokens.append(word)
    return doc
