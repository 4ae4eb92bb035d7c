"""Run configuration for extraction and evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError

BUNDLED_LANGUAGES = ("en", "fr", "pl")
MATCHERS = ("exact", "stemmed")


@dataclass
class FrakeConfig:
    """Knobs for the extraction pipeline and the evaluation harness.

    ``language`` selects the bundled stoplist and POS lexicon; an unknown tag
    is accepted only when both ``stoplist_path`` and ``lexicon_path`` are
    given. ``k`` is the ranking cutoff, ``min_support`` and
    ``max_phrase_len`` control phrase mining, ``matcher`` picks the gold-key
    comparison rule for evaluation.
    """

    language: str = "en"
    k: int = 10
    min_support: int = 2
    max_phrase_len: int = 4
    matcher: str = "stemmed"
    stoplist_path: Path | None = None
    lexicon_path: Path | None = None
    debug_export: Path | None = None
    jobs: int = 1
    drop_numbers: bool = False

    def validate(self) -> None:
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.min_support < 1:
            raise ConfigError(f"min_support must be >= 1, got {self.min_support}")
        if self.max_phrase_len < 2:
            raise ConfigError(f"max_phrase_len must be >= 2, got {self.max_phrase_len}")
        if self.matcher not in MATCHERS:
            raise ConfigError(f"matcher must be one of {MATCHERS}, got {self.matcher!r}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.language not in BUNDLED_LANGUAGES and not (
            self.stoplist_path and self.lexicon_path
        ):
            raise ConfigError(
                f"unknown language {self.language!r}: bundled languages are "
                f"{', '.join(BUNDLED_LANGUAGES)}; other tags need both "
                "--stoplist and --lexicon"
            )
