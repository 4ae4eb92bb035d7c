"""Per-word textural features and their combination into a textural score.

Five features per candidate word: casing prominence (TCase), mean sentence
position (TPos), frequency normalized by corpus statistics (TFNorm),
distinct-sentence spread (TSent) and a part-of-speech weight. The textural
score is (TCase + TSent + TFNorm + Pos) / TPos, so words appearing early,
often, across sentences, capitalized and noun-like score highest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import fmean, pstdev

from .pos import PosLexicon, pos_weight, tag_word
from .preprocess import CasingStats, Token, TokenizedDocument


@dataclass(frozen=True)
class OccurrenceIndex:
    """Per-norm sentence offsets of every occurrence, in document order."""

    offsets: dict[str, list[int]]

    def tf(self, word: str) -> int:
        return len(self.offsets[word])

    def sentence_offsets(self, word: str) -> list[int]:
        return self.offsets[word]

    def words(self) -> list[str]:
        return list(self.offsets)


@dataclass(frozen=True)
class TexturalFeatures:
    word: str
    t_case: float
    t_pos: float
    tf_norm: float
    t_sent: float
    pos: float
    textural_score: float


def build_occurrence_index(all_words: tuple[Token, ...] | list[Token]) -> OccurrenceIndex:
    offsets: dict[str, list[int]] = {}
    for tok in all_words:
        offsets.setdefault(tok.norm, []).append(tok.sentence_index)
    return OccurrenceIndex(offsets)


def t_case(word: str, stats: CasingStats) -> float:
    """max(capitalized count, all-caps count) / (1 + ln tf)."""
    cell = stats[word]
    return max(cell.proper_case_tf, cell.upper_case_tf) / (1.0 + math.log(cell.tf))


def t_pos(word: str, idx: OccurrenceIndex) -> float:
    """ln(3 + mean 0-based sentence offset); floor ln 3 for first-sentence words."""
    return math.log(3.0 + fmean(idx.sentence_offsets(word)))


def tf_norm(
    word: str, idx: OccurrenceIndex, tf_stats: tuple[float, float] | None = None
) -> float:
    """tf / (mean tf + population std of tf) over all candidate words."""
    if tf_stats is None:
        tf_stats = tf_statistics(idx)
    avg, std = tf_stats
    return idx.tf(word) / (avg + std)


def tf_statistics(idx: OccurrenceIndex) -> tuple[float, float]:
    tfs = [len(v) for v in idx.offsets.values()]
    return fmean(tfs), pstdev(tfs)


def t_sent(word: str, idx: OccurrenceIndex, sentence_count: int) -> float:
    """Fraction of distinct sentences containing the word; always in [0, 1]."""
    return len(set(idx.sentence_offsets(word))) / sentence_count


def textural_score(
    t_case: float, t_sent: float, tf_norm: float, pos: float, t_pos: float
) -> float:
    return (t_case + t_sent + tf_norm + pos) / t_pos


def textural_features(
    doc: TokenizedDocument,
    casing: CasingStats,
    lexicon: PosLexicon,
) -> dict[str, TexturalFeatures]:
    """Compute all five features and the textural score for every candidate.

    Keys follow first-occurrence order in the candidate stream.
    """
    idx = build_occurrence_index(doc.all_words)
    sentence_count = len(doc.sentences)
    stats = tf_statistics(idx)
    out: dict[str, TexturalFeatures] = {}
    for word in idx.offsets:
        case = t_case(word, casing)
        position = t_pos(word, idx)
        frequency = tf_norm(word, idx, stats)
        spread = t_sent(word, idx, sentence_count)
        weight = pos_weight(tag_word(word, lexicon))
        out[word] = TexturalFeatures(
            word=word,
            t_case=case,
            t_pos=position,
            tf_norm=frequency,
            t_sent=spread,
            pos=weight,
            textural_score=textural_score(case, spread, frequency, weight, position),
        )
    return out
