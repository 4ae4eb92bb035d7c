"""Sentence segmentation, tokenization, stopword filtering and casing statistics.

The pipeline front end: raw text is split into sentences by a deterministic
rule-based segmenter, each sentence is tokenized into words, stopwords are
flagged and removed from the candidate stream, and per-word casing counts are
collected from the original (pre-lowercasing) surfaces.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .errors import InputError

BUNDLED_LANGUAGES = ("en", "fr", "pl")

# A token is a maximal run of letters/digits, optionally joined by single
# intra-word hyphens ("state-of-the-art", "3-gram"). Underscore is excluded.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")
_PARAGRAPH_RE = re.compile(r"\n[ \t]*\n+")
_NUMBER_RE = re.compile(r"[0-9]+(?:-[0-9]+)*$")
_TERMINATORS = ".!?"

# Dotted abbreviations that never terminate a sentence. Compared against the
# whitespace-delimited chunk ending at the dot, case-insensitively.
_ABBREVIATIONS = frozenset({
    "al.", "approx.", "ca.", "cf.", "dept.", "dr.", "ed.", "eds.", "e.g.",
    "eq.", "eqs.", "etc.", "fig.", "figs.", "i.e.", "inc.", "jr.", "ltd.",
    "mr.", "mrs.", "ms.", "no.", "pp.", "prof.", "resp.", "sec.", "sr.",
    "st.", "univ.", "vol.", "vs.",
})
# Dotted acronyms such as "U.S." (two or more letter-dot pairs).
_ACRONYM_RE = re.compile(r"(?:[^\W\d_]\.){2,}$")


@dataclass(frozen=True)
class Token:
    """One word occurrence.

    ``surface`` keeps the original casing, ``norm`` is the casefolded form.
    ``token_index`` is the position in the document-wide non-stopword stream
    and is ``None`` for stopwords.
    """

    surface: str
    norm: str
    sentence_index: int
    token_index: int | None = None
    is_stopword: bool = False


@dataclass(frozen=True)
class TokenizedDocument:
    """Sentence token lists plus the flattened non-stopword word stream."""

    sentences: tuple[tuple[Token, ...], ...]
    all_words: tuple[Token, ...]
    language: str


@dataclass(frozen=True)
class StopList:
    language: str
    words: frozenset[str]

    def __contains__(self, word: str) -> bool:
        return word.casefold() in self.words


@dataclass(frozen=True)
class WordCasing:
    tf: int
    proper_case_tf: int
    upper_case_tf: int


@dataclass(frozen=True)
class CasingStats:
    """Per-norm occurrence and casing counts, collected before lowercasing."""

    counts: dict[str, WordCasing]

    def __getitem__(self, word: str) -> WordCasing:
        return self.counts[word]

    def __contains__(self, word: str) -> bool:
        return word in self.counts


def segment_sentences(text: str) -> list[tuple[int, int]]:
    """Split ``text`` into sentence spans (start, end) over the original string.

    Sentences end at '.', '!', '?' runs followed by whitespace or end of
    text, and at blank-line paragraph breaks. Known abbreviations, dotted
    acronyms and decimal points do not terminate. Whitespace-only input
    yields an empty list.
    """
    spans: list[tuple[int, int]] = []
    start = 0
    for sep in _PARAGRAPH_RE.finditer(text):
        _scan_block(text, start, sep.start(), spans)
        start = sep.end()
    _scan_block(text, start, len(text), spans)
    return spans


def _scan_block(text: str, begin: int, end: int, spans: list[tuple[int, int]]) -> None:
    sent_start = begin
    i = begin
    while i < end:
        if text[i] in _TERMINATORS:
            j = i
            while j + 1 < end and text[j + 1] in _TERMINATORS:
                j += 1
            if _breaks_sentence(text, i, j, end):
                _emit(text, sent_start, j + 1, spans)
                sent_start = j + 1
            i = j + 1
        else:
            i += 1
    _emit(text, sent_start, end, spans)


def _breaks_sentence(text: str, first: int, last: int, end: int) -> bool:
    nxt = last + 1
    if nxt < end and not text[nxt].isspace():
        return False  # decimal point or mid-token dot, e.g. "3.14", "e.g"
    if text[first] != "." or last > first:
        return True  # '!', '?' or a run like "?!" always ends the sentence
    k = first
    while k > 0 and not text[k - 1].isspace():
        k -= 1
    chunk = text[k : first + 1].lstrip("([{'\"“‘")
    if chunk.casefold() in _ABBREVIATIONS:
        return False
    if _ACRONYM_RE.search(chunk):
        return False
    return True


def _emit(text: str, a: int, b: int, spans: list[tuple[int, int]]) -> None:
    seg = text[a:b]
    lead = len(seg) - len(seg.lstrip())
    trail = len(seg) - len(seg.rstrip())
    if a + lead < b - trail:
        spans.append((a + lead, b - trail))


def tokenize(sentence: str) -> list[str]:
    """Return word surfaces of one sentence; punctuation is discarded."""
    return _TOKEN_RE.findall(sentence)


def load_stoplist(language: str = "en", path: Path | str | None = None) -> StopList:
    """Load a stoplist, either bundled by language tag or from ``path``.

    File format: UTF-8, one lowercase word per line, ``#`` starts a comment.
    """
    if path is not None:
        raw = Path(path).read_text(encoding="utf-8")
    else:
        if language not in BUNDLED_LANGUAGES:
            raise InputError(
                f"unknown language {language!r}: bundled stoplists are "
                f"{', '.join(BUNDLED_LANGUAGES)}"
            )
        raw = (
            resources.files("frake")
            .joinpath(f"data/stopwords/{language}.txt")
            .read_text(encoding="utf-8")
        )
    words = set()
    for line in raw.splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.casefold())
    return StopList(language=language, words=frozenset(words))


def remove_stopwords(tokens: Iterable[Token], stoplist: StopList) -> list[Token]:
    """Filter a document-ordered token stream down to candidate words.

    Every returned token has ``is_stopword=False`` and a fresh, strictly
    increasing ``token_index``. Applying the filter twice is a no-op.
    """
    out: list[Token] = []
    for tok in tokens:
        if tok.norm in stoplist.words:
            continue
        out.append(replace(tok, is_stopword=False, token_index=len(out)))
    return out


def collect_casing_stats(tokens: Iterable[Token]) -> CasingStats:
    """Count per-norm occurrences, capitalized surfaces and all-caps surfaces.

    Stopwords are skipped; they are never feature candidates. Must run on
    tokens that still carry original surfaces.
    """
    acc: dict[str, list[int]] = {}
    for tok in tokens:
        if tok.is_stopword:
            continue
        cell = acc.setdefault(tok.norm, [0, 0, 0])
        cell[0] += 1
        if tok.surface[:1].isupper():
            cell[1] += 1
        if len(tok.surface) >= 2 and tok.surface.isupper():
            cell[2] += 1
    return CasingStats({w: WordCasing(tf, p, u) for w, (tf, p, u) in acc.items()})


def tokenize_document(
    text: str,
    stoplist: StopList,
    drop_numbers: bool = False,
) -> TokenizedDocument:
    """Run segmentation, tokenization and stopword flagging over a document.

    Sentences left empty by tokenization are dropped. ``drop_numbers``
    removes pure-number tokens (digits and hyphens only) before flagging.
    """
    sentences: list[tuple[Token, ...]] = []
    for a, b in segment_sentences(text):
        surfaces = tokenize(text[a:b])
        if drop_numbers:
            surfaces = [s for s in surfaces if not _NUMBER_RE.fullmatch(s)]
        if not surfaces:
            continue
        idx = len(sentences)
        sentences.append(
            tuple(
                Token(
                    surface=s,
                    norm=s.casefold(),
                    sentence_index=idx,
                    is_stopword=s.casefold() in stoplist.words,
                )
                for s in surfaces
            )
        )

    all_words: list[Token] = []
    final_sentences: list[tuple[Token, ...]] = []
    for sent in sentences:
        rebuilt: list[Token] = []
        for tok in sent:
            if tok.is_stopword:
                rebuilt.append(tok)
            else:
                indexed = replace(tok, token_index=len(all_words))
                all_words.append(indexed)
                rebuilt.append(indexed)
        final_sentences.append(tuple(rebuilt))

    return TokenizedDocument(
        sentences=tuple(final_sentences),
        all_words=tuple(all_words),
        language=stoplist.language,
    )
