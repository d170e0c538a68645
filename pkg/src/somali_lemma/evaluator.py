"""Corpus evaluation: per-document coverage and per-category averages.

A corpus is described by a CSV manifest with header ``id,category,path``;
paths are relative to the manifest's directory.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Optional, Sequence

from .errors import (
    CorpusError,
    DuplicateDocumentError,
    MissingDocumentError,
    UndefinedAccuracyError,
    UnknownCategoryError,
)
from .lemmatizer import UNRESOLVED, DocumentStats, lemmatize_document
from .lexicon import Lexicon
from .preprocess import StopwordList
from .rules import RuleSet

CATEGORIES = ("news_extract", "news_full", "social_media", "text_message")
CATEGORY_LABELS = {
    "news_extract": "News (extract)",
    "news_full": "News (full)",
    "social_media": "Social media",
    "text_message": "Text messages",
}
OTHER_PREFIX = "other:"


def check_category(label: str) -> str:
    if label in CATEGORIES:
        return label
    if label.startswith(OTHER_PREFIX) and len(label) > len(OTHER_PREFIX):
        return label
    raise UnknownCategoryError(f"unknown category {label!r} (use one of {', '.join(CATEGORIES)} or other:<label>)")


def category_sort_key(category: str):
    if category in CATEGORIES:
        return (0, CATEGORIES.index(category), "")
    return (1, 0, category)


@dataclass(frozen=True)
class CorpusDocument:
    id: str
    category: str
    text: str


@dataclass(frozen=True)
class CategoryRow:
    category: str
    doc_count: int
    avg_doc_len: float
    # None when no document in the category has a defined accuracy
    avg_accuracy: Optional[float]
    undefined_count: int = 0


@dataclass
class CorpusReport:
    rows: list[CategoryRow] = field(default_factory=list)
    per_document: list[tuple[str, DocumentStats]] = field(default_factory=list)
    unresolved_words: dict[str, list[str]] = field(default_factory=dict)
    undefined_accuracy: list[str] = field(default_factory=list)
    weighting: str = "document"


def accuracy(stats: DocumentStats) -> float:
    """Resolved content words as a percentage of all content words."""
    total = stats.resolved_count + stats.unresolved_count
    if total <= 0:
        raise UndefinedAccuracyError("document has no content words")
    return float(Fraction(100 * stats.resolved_count, total))


def load_corpus(manifest_path) -> list[CorpusDocument]:
    manifest_path = Path(manifest_path)
    if not manifest_path.is_file():
        raise MissingDocumentError(f"manifest not found: {manifest_path}")
    base = manifest_path.parent
    with manifest_path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["id", "category", "path"]:
            raise CorpusError(f"{manifest_path}: header must be 'id,category,path'")
        docs: list[CorpusDocument] = []
        seen: set[str] = set()
        for lineno, row in enumerate(reader, start=2):
            if None in row or any(v is None for v in row.values()):
                raise CorpusError(f"{manifest_path}:{lineno}: expected 3 columns")
            doc_id = row["id"].strip()
            if doc_id in seen:
                raise DuplicateDocumentError(f"{manifest_path}:{lineno}: duplicate document id {doc_id!r}")
            seen.add(doc_id)
            category = check_category(row["category"].strip())
            doc_path = base / row["path"].strip()
            if not doc_path.is_file():
                raise MissingDocumentError(f"{manifest_path}:{lineno}: document file not found: {doc_path}")
            text = doc_path.read_text(encoding="utf-8")
            if not text.strip():
                raise CorpusError(f"{manifest_path}:{lineno}: document {doc_id!r} is empty")
            docs.append(CorpusDocument(doc_id, category, text))
    return docs


def _evaluate_one(lex, rs, sw, doc: CorpusDocument):
    pairs, stats = lemmatize_document(lex, rs, sw, doc.text)
    unresolved = [word for word, res in pairs if res.stage == UNRESOLVED]
    return stats, unresolved


def _mean(values) -> Fraction:
    values = list(values)
    return sum(values, Fraction(0)) / len(values)


def evaluate_corpus(
    lex: Lexicon,
    rs: RuleSet,
    sw: StopwordList,
    docs: Sequence[CorpusDocument],
    workers: int = 1,
    weighting: str = "document",
) -> CorpusReport:
    """Lemmatize every document and aggregate per category.

    ``weighting="document"`` averages per-document accuracies;
    ``weighting="token"`` pools content words across the category. Averages
    are taken in exact rational arithmetic, so the report does not depend on
    document order or on ``workers``.
    """
    if not docs:
        raise CorpusError("corpus has no documents")
    if weighting not in ("document", "token"):
        raise ValueError(f"weighting must be 'document' or 'token', not {weighting!r}")
    ids = [d.id for d in docs]
    if len(set(ids)) != len(ids):
        raise DuplicateDocumentError("duplicate document ids in corpus")
    for d in docs:
        check_category(d.category)

    ordered = sorted(docs, key=lambda d: d.id)
    job = partial(_evaluate_one, lex, rs, sw)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, ordered, chunksize=max(1, len(ordered) // (4 * workers))))
    else:
        results = [job(d) for d in ordered]

    by_category: dict[str, list[DocumentStats]] = {}
    misses: dict[str, Counter] = {}
    report = CorpusReport(weighting=weighting)
    for doc, (stats, unresolved) in zip(ordered, results):
        report.per_document.append((doc.id, stats))
        by_category.setdefault(doc.category, []).append(stats)
        misses.setdefault(doc.category, Counter()).update(unresolved)
        if stats.percent_found is None:
            report.undefined_accuracy.append(doc.id)

    for category in sorted(by_category, key=category_sort_key):
        group = by_category[category]
        defined = [s for s in group if s.content_count > 0]
        if not defined:
            avg_acc = None
        elif weighting == "document":
            avg_acc = float(_mean(Fraction(100 * s.resolved_count, s.content_count) for s in defined))
        else:
            avg_acc = float(Fraction(100 * sum(s.resolved_count for s in defined),
                                     sum(s.content_count for s in defined)))
        report.rows.append(CategoryRow(
            category=category,
            doc_count=len(group),
            avg_doc_len=float(_mean(s.original_word_count for s in group)),
            avg_accuracy=avg_acc,
            undefined_count=len(group) - len(defined),
        ))
        counts = misses[category]
        report.unresolved_words[category] = sorted(counts, key=lambda w: (-counts[w], w))
    return report


def _fmt(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.2f}"


def render_table(report: CorpusReport) -> str:
    header = ("Type", "# Docs", "Avg Doc Len", "Avg Acc.")
    lines = [header]
    for row in report.rows:
        label = CATEGORY_LABELS.get(row.category, row.category)
        acc = _fmt(row.avg_accuracy)
        if row.avg_accuracy is not None:
            acc += "%"
        lines.append((label, str(row.doc_count), _fmt(row.avg_doc_len), acc))
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    out = []
    for n, line in enumerate(lines):
        out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        if n == 0:
            out.append("  ".join("-" * w for w in widths))
    if report.undefined_accuracy:
        out.append("")
        out.append("accuracy undefined (no content words): " + ", ".join(report.undefined_accuracy))
    return "\n".join(out) + "\n"


def report_to_dict(report: CorpusReport) -> dict:
    return {
        "weighting": report.weighting,
        "rows": [asdict(row) for row in report.rows],
        "per_document": [{"id": doc_id, **stats.to_dict()} for doc_id, stats in report.per_document],
        "unresolved_words": report.unresolved_words,
        "undefined_accuracy": report.undefined_accuracy,
    }


def report_from_dict(data: dict) -> CorpusReport:
    per_document = []
    for item in data["per_document"]:
        item = dict(item)
        doc_id = item.pop("id")
        per_document.append((doc_id, DocumentStats.from_dict(item)))
    return CorpusReport(
        rows=[CategoryRow(**row) for row in data["rows"]],
        per_document=per_document,
        unresolved_words={k: list(v) for k, v in data["unresolved_words"].items()},
        undefined_accuracy=list(data["undefined_accuracy"]),
        weighting=data.get("weighting", "document"),
    )


def render_json(report: CorpusReport) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2) + "\n"


def parse_report(text: str) -> CorpusReport:
    return report_from_dict(json.loads(text))


def render_tsv(report: CorpusReport) -> str:
    """One line per document: id followed by every statistic."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    fields = list(DocumentStats.__dataclass_fields__)
    writer.writerow(["id", *fields])
    for doc_id, stats in report.per_document:
        row = stats.to_dict()
        writer.writerow([doc_id, *("" if row[f] is None else row[f] for f in fields)])
    return buf.getvalue()


def render_report(report: CorpusReport, format: str = "table") -> str:
    if format == "table":
        return render_table(report)
    if format in ("json", "machine-readable"):
        return render_json(report)
    if format == "tsv":
        return render_tsv(report)
    raise ValueError(f"unknown report format {format!r}")
