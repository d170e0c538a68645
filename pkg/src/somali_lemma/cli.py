"""Command line interface.

Exit status: 0 success, 1 domain-negative result (unresolved word, lexicon
violations), 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import LemmaError
from .evaluator import evaluate_corpus, load_corpus, render_report, render_table
from .lemmatizer import DocumentStats, Resolution, lemmatize_document, lemmatize_word
from .lexicon import Lexicon, lexicon_stats, load_lexicon, parse_lexicon, validate_lexicon
from .preprocess import (
    StopwordList,
    default_stopwords,
    load_stopwords,
    normalize_token,
    parse_stopwords,
)
from .rules import RuleSet, load_rules, parse_rules

log = logging.getLogger("somali_lemma")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

FORMATS = ("table", "json", "tsv")


@dataclass
class CliConfig:
    lexicon_path: Optional[str]
    rules_path: Optional[str] = None
    stopwords_path: Optional[str] = None
    output_format: str = "table"
    verbosity: int = 0

    def lexicon(self) -> Lexicon:
        if not self.lexicon_path:
            raise UsageError("--lexicon is required")
        if self.lexicon_path == "-":
            return parse_lexicon(sys.stdin.read())
        return load_lexicon(self.lexicon_path)

    def rules(self) -> RuleSet:
        if not self.rules_path:
            return RuleSet()
        if self.rules_path == "-":
            return parse_rules(sys.stdin.read())
        return load_rules(self.rules_path)

    def stopwords(self) -> StopwordList:
        if not self.stopwords_path:
            return default_stopwords()
        if self.stopwords_path == "-":
            return parse_stopwords(sys.stdin.read())
        return load_stopwords(self.stopwords_path)


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _fmt_percent(value: Optional[float]) -> str:
    if value is None:
        return "undefined"
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return f"{text}%"


STATS_ROWS = (
    ("Original document size in words", "original_word_count"),
    ("Stop words(non-unique)", "stopword_count"),
    ("Special characters", "special_char_count"),
    ("Unresolved words", "unresolved_count"),
    ("Resolved words", "resolved_count"),
    ("Percent found", "percent_found"),
    ("words from lexicon", "from_lexicon_count"),
    ("words from rule-based", "from_rules_count"),
)


def format_stats_table(stats: DocumentStats) -> str:
    width = max(len(label) for label, _ in STATS_ROWS)
    lines = [f"{'Statistic'.ljust(width)}  Value"]
    for label, attr in STATS_ROWS:
        value = getattr(stats, attr)
        shown = _fmt_percent(value) if attr == "percent_found" else str(value)
        lines.append(f"{label.ljust(width)}  {shown}")
    if stats.percent_found is None:
        lines.append("note: accuracy undefined (no content words)")
    return "\n".join(lines) + "\n"


def _resolution_dict(word: str, res: Resolution) -> dict:
    return {"word": word, "root": res.root, "stage": res.stage, "rule_id": res.rule_id}


def cmd_word(config: CliConfig, word: str, out=None) -> int:
    out = sys.stdout if out is None else out
    lex, rs = config.lexicon(), config.rules()
    # same normalization as running text, without stopword filtering
    normalized, _ = normalize_token(word)
    res = lemmatize_word(lex, rs, normalized or "")
    if config.output_format == "json":
        out.write(json.dumps(_resolution_dict(word, res), ensure_ascii=False) + "\n")
    elif config.output_format == "tsv":
        out.write(f"{word}\t{res.root or ''}\t{res.stage}\n")
    else:
        out.write(f"{res}\n")
    return EXIT_OK if res.resolved else EXIT_NEGATIVE


def cmd_text(config: CliConfig, source: str = "-", out=None) -> int:
    out = sys.stdout if out is None else out
    lex, rs, sw = config.lexicon(), config.rules(), config.stopwords()
    text = _read_text(source)
    pairs, stats = lemmatize_document(lex, rs, sw, text)
    fmt = config.output_format
    if fmt == "json":
        payload = {"pairs": [_resolution_dict(w, r) for w, r in pairs], "stats": stats.to_dict()}
        out.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    elif fmt == "tsv":
        for word, res in pairs:
            out.write(f"{word}\t{res.root or ''}\t{res.stage}\n")
        for key, value in stats.to_dict().items():
            out.write(f"#{key}\t{'undefined' if value is None else value}\n")
    else:
        if pairs:
            width = max(len(w) for w, _ in pairs)
            for word, res in pairs:
                out.write(f"{word.ljust(width)}  {res}\n")
            out.write("\n")
        out.write(format_stats_table(stats))
    return EXIT_OK


def cmd_eval(config: CliConfig, manifest: str, report_path: Optional[str] = None,
             workers: int = 1, weighting: str = "document", out=None) -> int:
    out = sys.stdout if out is None else out
    lex, rs, sw = config.lexicon(), config.rules(), config.stopwords()
    docs = load_corpus(manifest)
    log.info("evaluating %d documents", len(docs))
    report = evaluate_corpus(lex, rs, sw, docs, workers=workers, weighting=weighting)
    if report_path:
        fmt = config.output_format
        Path(report_path).write_text(render_report(report, fmt), encoding="utf-8")
        log.info("report written to %s", report_path)
    out.write(render_table(report))
    return EXIT_OK


def cmd_lexicon(config: CliConfig, subcommand: str, out=None) -> int:
    out = sys.stdout if out is None else out
    lex = config.lexicon()
    if subcommand == "stats":
        stats = lexicon_stats(lex)
        if config.output_format == "json":
            out.write(json.dumps({"roots": stats.root_count, "derivatives": stats.derivative_count,
                                  "total": stats.total_tokens}) + "\n")
        else:
            out.write(f"roots: {stats.root_count}\n"
                      f"derivatives: {stats.derivative_count}\n"
                      f"total: {stats.total_tokens}\n")
        return EXIT_OK
    if subcommand == "validate":
        violations = validate_lexicon(lex)
        if config.output_format == "json":
            out.write(json.dumps([
                {"kind": v.kind, "root": v.root, "form": v.form, "roots": list(v.roots)}
                for v in violations
            ], ensure_ascii=False) + "\n")
        elif not violations:
            out.write("OK\n")
        else:
            for v in violations:
                out.write(f"{v.kind}\t{v.root}\t{v.form or ''}\t{','.join(v.roots)}\n")
        return EXIT_NEGATIVE if violations else EXIT_OK
    raise UsageError(f"unknown lexicon subcommand {subcommand!r}")


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--lexicon", metavar="PATH", default=default, help="lexicon JSON file")
    parser.add_argument("--rules", metavar="PATH", default=default, help="rule file (TSV)")
    parser.add_argument("--stopwords", metavar="PATH", default=default,
                        help="stopword file (default: bundled list)")
    parser.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS if suppress else "table")
    parser.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="suppress diagnostics")
    parser.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS if suppress else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="somali-lemma", description="Lexicon and rule-based Somali lemmatizer")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="lemmatize a single word")
    p.add_argument("word")
    _add_common(p, suppress=True)

    p = sub.add_parser("text", help="lemmatize a text file or standard input")
    p.add_argument("input", nargs="?", default="-")
    _add_common(p, suppress=True)

    p = sub.add_parser("eval", help="evaluate a corpus manifest")
    p.add_argument("manifest")
    p.add_argument("--report", metavar="PATH", help="write the full report here")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--weighting", choices=("document", "token"), default="document")
    _add_common(p, suppress=True)

    p = sub.add_parser("lexicon", help="inspect a lexicon")
    p.add_argument("action", choices=("validate", "stats"))
    _add_common(p, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.ERROR if args.quiet else (logging.DEBUG if args.verbose > 1 else
                                             logging.INFO if args.verbose else logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)
    config = CliConfig(args.lexicon, args.rules, args.stopwords, args.format, args.verbose)
    try:
        if args.command == "word":
            return cmd_word(config, args.word)
        if args.command == "text":
            return cmd_text(config, args.input)
        if args.command == "eval":
            return cmd_eval(config, args.manifest, args.report, args.workers, args.weighting)
        return cmd_lexicon(config, args.action)
    except (LemmaError, OSError, UnicodeDecodeError, UsageError) as exc:
        if not args.quiet:
            print(f"somali-lemma: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
