import json
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from somali_lemma.errors import EmptyLexiconError, LexiconFormatError, LexiconValidationError
from somali_lemma.lexicon import (
    DUPLICATE_SURFACE_FORM,
    EMPTY_DERIVATIVE_LIST,
    NON_ALPHABETIC_TOKEN,
    ROOT_NOT_IN_OWN_LIST,
    Lexicon,
    Violation,
    lexicon_stats,
    load_lexicon,
    lookup,
    save_lexicon,
    validate_lexicon,
)

from conftest import EXAMPLE_1, EXAMPLE_2

FIGURE_2 = {
    "laq": ["laq", "laqay", "laqday", "laqid"],
    "fur": ["fur", "furay", "furan", "furid"],
    "ceel": ["ceel", "ceelka", "ceelal"],
}


def test_load_example_1(write_json):
    lex = load_lexicon(write_json(EXAMPLE_1))
    assert list(lex) == ["cab"]
    # the repeated "caba" survives loading
    assert lex["cab"] == ("caba", "cabay", "cabeen", "caba", "cab")
    assert lookup(lex, "cabay") == "cab"


def test_load_example_2(write_json):
    lex = load_lexicon(write_json(EXAMPLE_2))
    assert len(lex) == 1
    assert len(lex["bariis"]) == 2
    assert lookup(lex, "bariiska") == "bariis"


def test_load_lowercases_and_sorts(write_json):
    lex = load_lexicon(write_json({"Fur": ["FUR", "Furay"], "cab": ["cab"]}))
    assert list(lex) == ["cab", "fur"]
    assert lex["fur"] == ("fur", "furay")


def test_load_empty_is_error(write_json):
    with pytest.raises(EmptyLexiconError):
        load_lexicon(write_json({}))


def test_load_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_lexicon(tmp_path / "nope.json")


def test_load_malformed_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "cab": ["cab",\n}', encoding="utf-8")
    with pytest.raises(LexiconFormatError) as info:
        load_lexicon(path)
    assert info.value.line == 3
    assert "bad.json:3:" in str(info.value)


@pytest.mark.parametrize("content", [
    '["cab"]',
    '{"cab": "cab"}',
    '{"cab": ["cab", 3]}',
    '{"cab": ["ca b"]}',
    '{"cab": ["cab"], "cab": ["caba"]}',
    '{"cab": ["cab"], "CAB": ["caba"]}',
])
def test_load_rejects_bad_shapes(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(LexiconFormatError):
        load_lexicon(path)


def test_load_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "bad.json"
    path.write_bytes(b'{"cab": ["\xff"]}')
    with pytest.raises(LexiconFormatError):
        load_lexicon(path)


def test_validate_clean():
    assert validate_lexicon(Lexicon({"cab": ["caba", "cab"]})) == []


def test_validate_root_not_in_list():
    assert validate_lexicon(Lexicon({"cab": ["caba"]})) == [Violation(ROOT_NOT_IN_OWN_LIST, "cab")]


def test_validate_duplicate_surface_form():
    lex = Lexicon({"cab": ["cabay", "cab"], "cun": ["cabay", "cun"]})
    (v,) = validate_lexicon(lex)
    assert v.kind == DUPLICATE_SURFACE_FORM
    assert v.form == "cabay"
    assert v.roots == ("cab", "cun")


def test_validate_empty_list_and_bad_tokens():
    lex = Lexicon({"cab": [], "x1": ["x1"], "ba'": ["ba'"]})
    kinds = sorted((v.kind, v.root) for v in validate_lexicon(lex))
    assert kinds == [
        (EMPTY_DERIVATIVE_LIST, "cab"),
        (NON_ALPHABETIC_TOKEN, "ba'"),
        (NON_ALPHABETIC_TOKEN, "ba'"),
        (NON_ALPHABETIC_TOKEN, "x1"),
        (NON_ALPHABETIC_TOKEN, "x1"),
    ]


def test_validate_allows_internal_apostrophe_and_inner_repeats():
    lex = Lexicon({"su'aal": ["su'aal", "su'aalo"], **EXAMPLE_1})
    assert validate_lexicon(lex) == []


def test_validate_does_not_mutate():
    lex = Lexicon({"cab": ["caba"]})
    before = dict(lex.entries)
    validate_lexicon(lex)
    assert dict(lex.entries) == before


@pytest.mark.parametrize("word, root", [
    ("cabay", "cab"), ("bariiska", "bariis"), ("cab", "cab"), ("qqqq", None),
])
def test_lookup(word, root):
    lex = Lexicon({**EXAMPLE_1, **EXAMPLE_2})
    assert lookup(lex, word) == root


def test_lookup_collision_prefers_smallest_root():
    lex = Lexicon({"cun": ["cabay", "cun"], "cab": ["cabay", "cab"]})
    assert lookup(lex, "cabay") == "cab"


def test_stats_examples():
    # hand count: 5 listed forms minus the root's own listing
    stats = lexicon_stats(Lexicon(EXAMPLE_1))
    assert (stats.root_count, stats.derivative_count, stats.total_tokens) == (1, 4, 5)
    stats = lexicon_stats(Lexicon(EXAMPLE_2))
    assert (stats.root_count, stats.derivative_count, stats.total_tokens) == (1, 1, 2)


def test_stats_paper_convention_arithmetic():
    # a lexicon shaped like the published one: 1247 roots, 7173 further forms
    entries = {}
    extra = [7173 // 1247 + (i < 7173 % 1247) for i in range(1247)]
    for i, n in enumerate(extra):
        root = "r" + "".join(chr(97 + int(d)) for d in f"{i:04d}")
        entries[root] = [root] + [f"{root}x{'y' * k}" for k in range(n)]
    stats = lexicon_stats(Lexicon(entries))
    assert (stats.root_count, stats.derivative_count, stats.total_tokens) == (1247, 7173, 8420)


def test_save_round_trip_example_1(tmp_path):
    lex = Lexicon(EXAMPLE_1)
    save_lexicon(lex, tmp_path / "out.json")
    again = load_lexicon(tmp_path / "out.json")
    assert again == lex.canonical()
    assert again["cab"] == ("caba", "cabay", "cabeen", "cab")


def test_save_round_trip_figure_2(tmp_path):
    lex = Lexicon(FIGURE_2)
    save_lexicon(lex, tmp_path / "out.json")
    assert load_lexicon(tmp_path / "out.json") == lex
    text = (tmp_path / "out.json").read_text(encoding="utf-8")
    assert list(json.loads(text)) == ["ceel", "fur", "laq"]


def test_save_refuses_blocking_violations(tmp_path):
    with pytest.raises(LexiconValidationError):
        save_lexicon(Lexicon({"cab": []}), tmp_path / "out.json")


@pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
def test_save_unwritable(tmp_path):
    target = tmp_path / "ro"
    target.mkdir()
    target.chmod(0o500)
    with pytest.raises(OSError):
        save_lexicon(Lexicon(FIGURE_2), target / "out.json")


def test_save_into_missing_directory(tmp_path):
    with pytest.raises(OSError):
        save_lexicon(Lexicon(FIGURE_2), tmp_path / "missing" / "out.json")


def test_with_entry_returns_new_value():
    lex = Lexicon(EXAMPLE_2)
    bigger = lex.with_entry("cab", ["cab", "cabay"])
    assert "cab" not in lex
    assert lookup(bigger, "cabay") == "cab"


words = st.from_regex(r"[a-z]{1,6}(?:'[a-z]{1,3})?", fullmatch=True)


@st.composite
def valid_lexicons(draw):
    roots = draw(st.lists(words, min_size=1, max_size=8, unique=True))
    used = set(roots)
    entries = {}
    for root in roots:
        forms = [f for f in draw(st.lists(words, max_size=5, unique=True)) if f not in used]
        used.update(forms)
        entries[root] = [root, *forms]
    return Lexicon(entries)


@given(valid_lexicons())
def test_every_listed_form_looks_up_to_its_root(lex):
    assert validate_lexicon(lex) == []
    for root, forms in lex.items():
        for form in forms:
            assert lookup(lex, form) == root


@given(valid_lexicons())
def test_stats_identity(lex):
    stats = lexicon_stats(lex)
    assert stats.total_tokens == stats.root_count + stats.derivative_count
    assert stats.total_tokens == sum(len(forms) for _, forms in lex.items())


@settings(max_examples=50)
@given(valid_lexicons())
def test_round_trip_property(tmp_path_factory, lex):
    path = tmp_path_factory.mktemp("rt") / "lex.json"
    save_lexicon(lex, path)
    assert load_lexicon(path) == lex
