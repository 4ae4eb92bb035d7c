"""End-to-end extraction: preprocessing, scoring, fusion, phrases, ranking."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from .config import FrakeConfig
from .features import textural_features
from .fusion import ExtractionResult, fuse, mine_phrases, rank
from .graph import CENTRALITY_COLUMNS, build_graph, centrality_matrix, graph_scores
from .pos import PosLexicon, load_lexicon
from .preprocess import StopList, collect_casing_stats, load_stoplist, tokenize_document


@dataclass(frozen=True)
class Resources:
    stoplist: StopList
    lexicon: PosLexicon


def load_resources(config: FrakeConfig) -> Resources:
    return Resources(
        stoplist=load_stoplist(config.language, config.stoplist_path),
        lexicon=load_lexicon(config.language, config.lexicon_path),
    )


def extract(
    text: str,
    config: FrakeConfig | None = None,
    resources: Resources | None = None,
) -> ExtractionResult:
    """Extract the top-k keywords and key-phrases from one document.

    Deterministic: the same text and configuration always produce the same
    ranking, independent of process or hash seed.
    """
    config = config or FrakeConfig()
    config.validate()
    if resources is None:
        resources = load_resources(config)

    doc = tokenize_document(text, resources.stoplist, drop_numbers=config.drop_numbers)
    if not doc.all_words:
        return ExtractionResult(ranked=(), k=config.k)

    casing = collect_casing_stats(itertools.chain.from_iterable(doc.sentences))
    graph = build_graph([t.norm for t in doc.all_words])
    g_scores = graph_scores(graph)
    feats = textural_features(doc, casing, resources.lexicon)

    first_positions: dict[str, int] = {}
    for tok in doc.all_words:
        first_positions.setdefault(tok.norm, tok.token_index)

    scored = fuse(
        g_scores,
        {w: f.textural_score for w, f in feats.items()},
        first_positions,
    )
    sentences = [
        [t.norm for t in sent if not t.is_stopword] for sent in doc.sentences
    ]
    phrases = mine_phrases(sentences, scored, config.min_support, config.max_phrase_len)
    return rank(scored, phrases, config.k)


def extract_keywords(text: str, **kwargs) -> list[tuple[str, float]]:
    """Convenience wrapper returning (text, score) pairs."""
    result = extract(text, FrakeConfig(**kwargs))
    return [(e.text, e.score) for e in result.ranked]


def export_debug(
    text: str,
    config: FrakeConfig,
    out_dir: Path | str,
    resources: Resources | None = None,
) -> list[Path]:
    """Write the graph edge list, centrality matrix and feature table.

    Produces ``edges.tsv`` (word pairs), ``centralities.csv`` (a word column
    followed by the eight fixed centrality columns) and ``features.csv``.
    An empty document yields header-only files.
    """
    config.validate()
    if resources is None:
        resources = load_resources(config)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    doc = tokenize_document(text, resources.stoplist, drop_numbers=config.drop_numbers)
    edges_path = out / "edges.tsv"
    cent_path = out / "centralities.csv"
    feat_path = out / "features.csv"

    cent_header = "word," + ",".join(CENTRALITY_COLUMNS)
    feat_header = "word,TCase,TPos,TFNorm,TSent,Pos,textural_score"

    if not doc.all_words:
        edges_path.write_text("", encoding="utf-8")
        cent_path.write_text(cent_header + "\n", encoding="utf-8")
        feat_path.write_text(feat_header + "\n", encoding="utf-8")
        return [edges_path, cent_path, feat_path]

    graph = build_graph([t.norm for t in doc.all_words])
    edges_path.write_text(
        "".join(f"{u}\t{v}\n" for u, v in graph.edges()), encoding="utf-8"
    )

    matrix = centrality_matrix(graph)
    cent_lines = [cent_header]
    for word, row in zip(matrix.words, matrix.values):
        cent_lines.append(word + "," + ",".join(f"{v:.10g}" for v in row))
    cent_path.write_text("\n".join(cent_lines) + "\n", encoding="utf-8")

    casing = collect_casing_stats(itertools.chain.from_iterable(doc.sentences))
    feats = textural_features(doc, casing, resources.lexicon)
    feat_lines = [feat_header]
    for word, f in feats.items():
        feat_lines.append(
            f"{word},{f.t_case:.10g},{f.t_pos:.10g},{f.tf_norm:.10g},"
            f"{f.t_sent:.10g},{f.pos:.10g},{f.textural_score:.10g}"
        )
    feat_path.write_text("\n".join(feat_lines) + "\n", encoding="utf-8")
    return [edges_path, cent_path, feat_path]
