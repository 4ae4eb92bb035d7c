"""Coarse part-of-speech classes from a lexicon plus suffix fallback rules.

The scorer only needs one of four classes per word, so the tagger is a
context-free lookup chain: exact lexicon entry, then ordered suffix rules,
then a noun default. Deterministic by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError

BUNDLED_LANGUAGES = ("en", "fr", "pl")


class PosClass(enum.Enum):
    NOUN = "noun"
    ADJECTIVE = "adj"
    VERB = "verb"
    OTHER = "other"


_WEIGHTS = {
    PosClass.NOUN: 1.0,
    PosClass.ADJECTIVE: 0.5,
    PosClass.VERB: 0.25,
    PosClass.OTHER: 0.0,
}

_CLASS_TOKENS = {
    "noun": PosClass.NOUN,
    "n": PosClass.NOUN,
    "adj": PosClass.ADJECTIVE,
    "adjective": PosClass.ADJECTIVE,
    "verb": PosClass.VERB,
    "v": PosClass.VERB,
    "other": PosClass.OTHER,
    "adv": PosClass.OTHER,
}


def pos_weight(cls: PosClass) -> float:
    """Score contribution of a class: noun 1.0, adjective 0.5, verb 0.25, other 0."""
    return _WEIGHTS[cls]


@dataclass(frozen=True)
class PosLexicon:
    """Immutable word-class lexicon with ordered suffix fallbacks."""

    language: str
    entries: dict[str, tuple[PosClass, ...]]
    suffix_rules: tuple[tuple[str, PosClass], ...]

    def tag(self, word: str) -> PosClass:
        norm = word.casefold()
        ranked = self.entries.get(norm)
        if ranked:
            return ranked[0]
        for suffix, cls in self.suffix_rules:
            if len(norm) > len(suffix) and norm.endswith(suffix):
                return cls
        return PosClass.NOUN


def tag_word(word: str, lexicon: PosLexicon) -> PosClass:
    """Classify one word (total function; unknown words default to noun)."""
    if not word:
        raise ValueError("cannot tag an empty word")
    return lexicon.tag(word)


def load_lexicon(language: str = "en", path: Path | str | None = None) -> PosLexicon:
    """Load a lexicon, bundled by language tag or from ``path``.

    File format: UTF-8 TSV. ``word<TAB>class`` lines add entries (repeated
    words append lower-ranked classes); ``-suffix<TAB>class`` lines add
    fallback rules in file order. ``#`` starts a comment.
    """
    if path is not None:
        raw = Path(path).read_text(encoding="utf-8")
    else:
        if language not in BUNDLED_LANGUAGES:
            raise InputError(
                f"unknown language {language!r}: bundled lexicons are "
                f"{', '.join(BUNDLED_LANGUAGES)}"
            )
        raw = (
            resources.files("frake")
            .joinpath(f"data/lexicons/{language}.tsv")
            .read_text(encoding="utf-8")
        )

    entries: dict[str, list[PosClass]] = {}
    suffix_rules: list[tuple[str, PosClass]] = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise InputError(f"lexicon line {lineno}: expected 'word<TAB>class', got {line!r}")
        word, cls_token = parts[0].strip(), parts[1].strip().casefold()
        cls = _CLASS_TOKENS.get(cls_token)
        if cls is None:
            raise InputError(
                f"lexicon line {lineno}: unknown class {cls_token!r} "
                f"(expected one of {sorted(set(_CLASS_TOKENS))})"
            )
        if word.startswith("-") and len(word) > 1:
            suffix_rules.append((word[1:].casefold(), cls))
        else:
            ranked = entries.setdefault(word.casefold(), [])
            if cls not in ranked:
                ranked.append(cls)
    return PosLexicon(
        language=language,
        entries={w: tuple(r) for w, r in entries.items()},
        suffix_rules=tuple(suffix_rules),
    )
