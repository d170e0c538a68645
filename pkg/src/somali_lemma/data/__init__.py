"""Bundled sample lexicon, rules and default stopword list.

Set ``SOMALI_LEMMA_DATA`` to a directory to use other files of the same
names instead.
"""
import os
from pathlib import Path

ENV_VAR = "SOMALI_LEMMA_DATA"

LEXICON_FILE = "lexicon.json"
RULES_FILE = "rules.tsv"
STOPWORDS_FILE = "stopwords.txt"


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent


def data_path(name: str) -> Path:
    return data_dir() / name
