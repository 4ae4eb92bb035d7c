"""Score fusion, phrase generation and top-K ranking.

Graph and textural scores are fused by multiplication. Candidate phrases are
frequent word groups (FP-Growth over sentences as transactions) that also
occur contiguously, in one fixed order, in enough sentences; a phrase scores
the sum of its members' fused scores. Ranking merges words and phrases,
sorts by score, and suppresses entries subsumed by an already-picked one.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .fpgrowth import frequent_itemsets


@dataclass(frozen=True)
class ScoredWord:
    word: str
    graph_score: float
    textural_score: float
    final_score: float
    first_position: int = 0


@dataclass(frozen=True)
class PhraseCandidate:
    words: tuple[str, ...]
    support: int
    score: float
    first_position: int = 0


@dataclass(frozen=True)
class RankedEntry:
    text: str
    score: float
    kind: str  # "word" or "phrase"
    words: tuple[str, ...]
    first_position: int

    def to_dict(self) -> dict:
        return {"text": self.text, "score": round(self.score, 6), "kind": self.kind}


@dataclass(frozen=True)
class ExtractionResult:
    ranked: tuple[RankedEntry, ...]
    k: int

    def to_dict(self) -> dict:
        return {"keywords": [entry.to_dict() for entry in self.ranked]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def fuse(
    graph_scores: Mapping[str, float],
    textural_scores: Mapping[str, float],
    first_positions: Mapping[str, int] | None = None,
) -> dict[str, ScoredWord]:
    """Multiply per-word graph and textural scores.

    Both mappings must cover exactly the same words; a mismatch is a
    pipeline bug and raises with the symmetric difference.
    """
    if set(graph_scores) != set(textural_scores):
        diff = sorted(set(graph_scores).symmetric_difference(textural_scores))
        raise ValueError(f"graph/textural score key sets differ: {diff}")
    out: dict[str, ScoredWord] = {}
    for word, g in graph_scores.items():
        t = textural_scores[word]
        pos = first_positions.get(word, 0) if first_positions else 0
        out[word] = ScoredWord(
            word=word,
            graph_score=g,
            textural_score=t,
            final_score=g * t,
            first_position=pos,
        )
    return out


def mine_phrases(
    sentences: Sequence[Sequence[str]],
    scored: Mapping[str, ScoredWord],
    min_support: int = 2,
    max_phrase_len: int = 4,
) -> list[PhraseCandidate]:
    """Generate phrases of 2..max_phrase_len words recurring across sentences.

    FP-Growth over the sentences (as transactions of distinct words) yields
    frequent word groups; a group becomes a phrase only where its words run
    contiguously in a fixed order, and the phrase's support is the number of
    distinct sentences containing that exact run. Output order follows first
    occurrence in the stream.
    """
    if min_support < 1:
        raise ValueError(f"min_support must be >= 1, got {min_support}")
    if max_phrase_len < 2:
        raise ValueError(f"max_phrase_len must be >= 2, got {max_phrase_len}")
    frequent = frequent_itemsets(sentences, min_support, max_len=max_phrase_len)
    occurrences: dict[tuple[str, ...], set[int]] = {}
    first_pos: dict[tuple[str, ...], int] = {}
    base = 0
    for s_idx, sent in enumerate(sentences):
        for length in range(2, max_phrase_len + 1):
            for j in range(len(sent) - length + 1):
                gram = tuple(sent[j : j + length])
                if frozenset(gram) not in frequent:
                    continue
                occurrences.setdefault(gram, set()).add(s_idx)
                first_pos.setdefault(gram, base + j)
        base += len(sent)

    out: list[PhraseCandidate] = []
    for gram, sents in occurrences.items():
        if len(sents) < min_support:
            continue
        missing = [w for w in gram if w not in scored]
        if missing:
            raise ValueError(f"phrase words missing from the scored set: {missing}")
        out.append(
            PhraseCandidate(
                words=gram,
                support=len(sents),
                score=sum(scored[w].final_score for w in gram),
                first_position=first_pos[gram],
            )
        )
    out.sort(key=lambda p: (p.first_position, p.words))
    return out


def rank(
    scored: Mapping[str, ScoredWord],
    phrases: Sequence[PhraseCandidate],
    k: int,
) -> ExtractionResult:
    """Merge words and phrases, order them, drop subsumed entries, cut at k.

    Order: score descending, then earlier first occurrence, then text. An
    entry is dropped when its word sequence is a contiguous sub-span of an
    already-selected entry's sequence, or vice versa, so the output never
    carries both a phrase and any of its parts.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    pool: list[RankedEntry] = []
    for word, sw in scored.items():
        pool.append(
            RankedEntry(
                text=word,
                score=sw.final_score,
                kind="word",
                words=(word,),
                first_position=sw.first_position,
            )
        )
    for ph in phrases:
        pool.append(
            RankedEntry(
                text=" ".join(ph.words),
                score=ph.score,
                kind="phrase",
                words=ph.words,
                first_position=ph.first_position,
            )
        )
    pool.sort(key=lambda e: (-e.score, e.first_position, e.text))

    selected: list[RankedEntry] = []
    for entry in pool:
        if len(selected) == k:
            break
        if any(
            _is_subspan(entry.words, s.words) or _is_subspan(s.words, entry.words)
            for s in selected
        ):
            continue
        selected.append(entry)
    return ExtractionResult(ranked=tuple(selected), k=k)


def _is_subspan(a: tuple[str, ...], b: tuple[str, ...]) -> bool:
    if len(a) > len(b):
        return False
    return any(b[i : i + len(a)] == a for i in range(len(b) - len(a) + 1))
