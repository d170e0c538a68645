"""Lexicon and rule-based lemmatizer for Somali text."""

__version__ = "0.1.0"

from .errors import LemmaError  # noqa: E402
from .lexicon import Lexicon, load_lexicon, lookup, save_lexicon, validate_lexicon, lexicon_stats  # noqa: E402
from .rules import Rule, RuleSet, apply_rules, load_rules  # noqa: E402
from .preprocess import StopwordList, default_stopwords, load_stopwords, preprocess  # noqa: E402
from .lemmatizer import DocumentStats, Lemmatizer, Resolution, lemmatize_document, lemmatize_word  # noqa: E402
from .evaluator import CorpusDocument, accuracy, evaluate_corpus, load_corpus, render_report  # noqa: E402
