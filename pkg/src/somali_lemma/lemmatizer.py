"""Two-stage lemmatization: lexicon lookup, then prefix rules."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .lexicon import Lexicon
from .preprocess import ProcessedDocument, StopwordList, preprocess
from .rules import RuleSet

LEXICON = "lexicon"
RULE = "rule"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Resolution:
    stage: str
    root: Optional[str] = None
    rule_id: Optional[int] = None

    @property
    def resolved(self) -> bool:
        return self.stage != UNRESOLVED

    @classmethod
    def from_lexicon(cls, root: str) -> "Resolution":
        return cls(LEXICON, root)

    @classmethod
    def from_rule(cls, root: str, rule_id: int) -> "Resolution":
        return cls(RULE, root, rule_id)

    @classmethod
    def unresolved(cls) -> "Resolution":
        return cls(UNRESOLVED)

    def __str__(self) -> str:
        if self.stage == UNRESOLVED:
            return UNRESOLVED
        return f"{self.root} ({self.stage})"


@dataclass(frozen=True)
class DocumentStats:
    original_word_count: int = 0
    stopword_count: int = 0
    special_char_count: int = 0
    unresolved_count: int = 0
    resolved_count: int = 0
    # None when the document has no content words
    percent_found: Optional[float] = None
    from_lexicon_count: int = 0
    from_rules_count: int = 0
    duplicate_count: int = 0
    punctuation_only_count: int = 0
    # resolved words over the raw word count, reported alongside percent_found
    percent_of_raw: Optional[float] = None

    @property
    def content_count(self) -> int:
        return self.resolved_count + self.unresolved_count

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "DocumentStats":
        return cls(**data)


def percentage(part: int, whole: int) -> Optional[float]:
    if whole <= 0:
        return None
    return float(Fraction(100 * part, whole))


def lemmatize_word(lex: Lexicon, rs: RuleSet, word: str) -> Resolution:
    root = lex.lookup(word)
    if root is not None:
        return Resolution.from_lexicon(root)
    hit = rs.apply(word)
    if hit is not None:
        return Resolution.from_rule(*hit)
    return Resolution.unresolved()


def document_stats(doc: ProcessedDocument, resolutions: list[Resolution]) -> DocumentStats:
    from_lexicon = sum(r.stage == LEXICON for r in resolutions)
    from_rules = sum(r.stage == RULE for r in resolutions)
    resolved = from_lexicon + from_rules
    unresolved = len(resolutions) - resolved
    return DocumentStats(
        original_word_count=doc.original_word_count,
        stopword_count=doc.stopword_count,
        special_char_count=doc.special_char_count,
        unresolved_count=unresolved,
        resolved_count=resolved,
        percent_found=percentage(resolved, len(resolutions)),
        from_lexicon_count=from_lexicon,
        from_rules_count=from_rules,
        duplicate_count=doc.duplicate_count,
        punctuation_only_count=doc.punctuation_only_count,
        percent_of_raw=percentage(resolved, doc.original_word_count),
    )


def lemmatize_document(
    lex: Lexicon, rs: RuleSet, sw: StopwordList, text: str
) -> tuple[list[tuple[str, Resolution]], DocumentStats]:
    doc = preprocess(text, sw)
    pairs = [(word, lemmatize_word(lex, rs, word)) for word in doc.content_tokens]
    return pairs, document_stats(doc, [res for _, res in pairs])


class Lemmatizer:
    """Convenience bundle of the three resources."""

    def __init__(self, lexicon: Lexicon, rules: Optional[RuleSet] = None,
                 stopwords: Optional[StopwordList] = None):
        self.lexicon = lexicon
        self.rules = rules if rules is not None else RuleSet()
        self.stopwords = stopwords if stopwords is not None else StopwordList()

    def word(self, word: str) -> Resolution:
        return lemmatize_word(self.lexicon, self.rules, word)

    def document(self, text: str):
        return lemmatize_document(self.lexicon, self.rules, self.stopwords, text)

    def lemmas(self, text: str) -> list[str]:
        """Root for each content word; unresolved words are returned unchanged."""
        pairs, _ = self.document(text)
        return [res.root if res.resolved else word for word, res in pairs]
