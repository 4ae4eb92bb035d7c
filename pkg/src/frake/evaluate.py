"""Benchmark loading, gold-key matching and Precision/Recall/F1 at k.

Datasets follow the common documents-plus-keys layout: a directory of
``<id>.txt`` files paired with ``<id>.key`` files (one gold keyphrase per
line), the ``docsutf8/`` + ``keys/`` variant of the same, or a single JSONL
file with ``{"id", "text", "keys": [...]}`` records. Metrics are macro
averaged over documents; a TF-IDF baseline is included for sanity checks.
"""

from __future__ import annotations

import json
import logging
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .config import FrakeConfig
from .errors import DatasetError
from .pipeline import Resources, extract, load_resources
from .preprocess import TokenizedDocument, load_stoplist, tokenize_document

logger = logging.getLogger(__name__)

EXTRACTORS = ("frake", "tfidf")


@dataclass(frozen=True)
class DatasetRecord:
    doc_id: str
    body: str
    gold: tuple[str, ...]  # lowercased, whitespace-normalized, deduplicated
    language: str


@dataclass(frozen=True)
class DocResult:
    doc_id: str
    precision: float
    recall: float
    f1: float
    error: str | None = None


@dataclass(frozen=True)
class EvalReport:
    dataset: str
    k: int
    matcher: str
    extractor: str
    per_doc: tuple[DocResult, ...]
    macro_precision: float
    macro_recall: float
    macro_f1: float

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "extractor": self.extractor,
            "k": self.k,
            "matcher": self.matcher,
            "macro": {
                "precision": round(self.macro_precision, 6),
                "recall": round(self.macro_recall, 6),
                "f1": round(self.macro_f1, 6),
            },
            "per_doc": [
                {
                    "doc_id": d.doc_id,
                    "precision": round(d.precision, 6),
                    "recall": round(d.recall, 6),
                    "f1": round(d.f1, 6),
                    **({"error": d.error} if d.error else {}),
                }
                for d in self.per_doc
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_table(self) -> str:
        width = max([len("doc_id"), len("macro")] + [len(d.doc_id) for d in self.per_doc])
        header = f"{'doc_id':<{width}}  {'P@' + str(self.k):>8}  {'R@' + str(self.k):>8}  {'F1@' + str(self.k):>8}"
        lines = [header, "-" * len(header)]
        for d in self.per_doc:
            mark = "  [failed: " + d.error + "]" if d.error else ""
            lines.append(
                f"{d.doc_id:<{width}}  {d.precision:>8.4f}  {d.recall:>8.4f}  {d.f1:>8.4f}{mark}"
            )
        lines.append("-" * len(header))
        lines.append(
            f"{'macro':<{width}}  {self.macro_precision:>8.4f}  "
            f"{self.macro_recall:>8.4f}  {self.macro_f1:>8.4f}"
        )
        return "\n".join(lines)


def normalize_key(text: str) -> str:
    """Lowercase and collapse whitespace; the canonical gold-key form."""
    return " ".join(text.casefold().split())


def light_stem(token: str) -> str:
    """Light suffix stripper used by the ``stemmed`` matcher.

    Removes common plural and participle endings only; not a full stemmer,
    but applied identically to predictions and gold keys.
    """
    t = token
    if len(t) > 4 and t.endswith("ies"):
        t = t[:-3] + "y"
    elif len(t) > 4 and t.endswith("sses"):
        t = t[:-2]
    elif len(t) > 3 and t.endswith("s") and not t.endswith(("ss", "us", "is")):
        t = t[:-1]
    if len(t) > 5 and t.endswith("ing"):
        t = t[:-3]
    elif len(t) > 4 and t.endswith("ed"):
        t = t[:-2]
    return t


def stem_phrase(text: str) -> str:
    return " ".join(light_stem(tok) for tok in normalize_key(text).split())


def match(
    predicted: Sequence[str], gold: Iterable[str], matcher: str = "stemmed"
) -> list[bool]:
    """Flag which ranked predictions hit a gold key.

    Each gold key is creditable at most once: a duplicate prediction of an
    already-claimed key is a miss. ``exact`` compares normalized strings,
    ``stemmed`` compares after per-token light stemming.
    """
    if matcher == "exact":
        canon = normalize_key
    elif matcher == "stemmed":
        canon = stem_phrase
    else:
        raise ValueError(f"matcher must be 'exact' or 'stemmed', got {matcher!r}")
    remaining = Counter(canon(g) for g in gold)
    flags = []
    for p in predicted:
        c = canon(p)
        if remaining.get(c, 0) > 0:
            remaining[c] -= 1
            flags.append(True)
        else:
            flags.append(False)
    return flags


def precision_at_k(hits: Sequence[bool], k: int) -> float:
    """Hits in the top k over min(k, number of predictions returned)."""
    if not hits:
        return 0.0
    return sum(hits[:k]) / min(k, len(hits))


def recall_at_k(hits: Sequence[bool], gold_size: int, k: int) -> float:
    return sum(hits[:k]) / gold_size


def f1_at_k(hits: Sequence[bool], gold_size: int, k: int) -> float:
    return f1_score(precision_at_k(hits, k), recall_at_k(hits, gold_size, k))


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean; zero when both inputs are zero."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def load_dataset(path: Path | str, language: str = "en") -> list[DatasetRecord]:
    """Load documents and gold keys from a directory or a JSONL file.

    Documents missing a keys file, with an empty body, or with no usable
    keys are skipped with a logged warning. Raises when the path is
    unreadable or no pairs are found at all.
    """
    p = Path(path)
    if not p.exists():
        raise DatasetError(f"dataset path does not exist: {p}")
    if p.is_file():
        records = _load_jsonl(p, language)
    else:
        docs_dir, keys_dir = p, p
        if (p / "docsutf8").is_dir() and (p / "keys").is_dir():
            docs_dir, keys_dir = p / "docsutf8", p / "keys"
        records = _load_pairs(docs_dir, keys_dir, language)
    if not records:
        raise DatasetError(f"no usable document/key pairs found under {p}")
    return records


def _load_pairs(docs_dir: Path, keys_dir: Path, language: str) -> list[DatasetRecord]:
    records = []
    skipped = 0
    for txt in sorted(docs_dir.glob("*.txt")):
        key_file = keys_dir / (txt.stem + ".key")
        if not key_file.exists():
            logger.warning("skipping %s: no matching %s", txt.name, key_file.name)
            skipped += 1
            continue
        record = _make_record(
            txt.stem,
            txt.read_text(encoding="utf-8"),
            key_file.read_text(encoding="utf-8").splitlines(),
            language,
        )
        if record is None:
            skipped += 1
        else:
            records.append(record)
    if skipped:
        logger.warning("skipped %d document(s) while loading %s", skipped, docs_dir)
    return records


def _load_jsonl(path: Path, language: str) -> list[DatasetRecord]:
    records = []
    skipped = 0
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
        record = _make_record(
            str(obj.get("id", lineno)), obj.get("text", ""), obj.get("keys", []), language
        )
        if record is None:
            logger.warning("skipping %s:%d: empty body or keys", path.name, lineno)
            skipped += 1
        else:
            records.append(record)
    if skipped:
        logger.warning("skipped %d record(s) while loading %s", skipped, path)
    return records


def _make_record(
    doc_id: str, body: str, raw_keys: Iterable[str], language: str
) -> DatasetRecord | None:
    gold = sorted({normalize_key(k) for k in raw_keys if normalize_key(k)})
    if not body.strip() or not gold:
        return None
    return DatasetRecord(doc_id=doc_id, body=body, gold=tuple(gold), language=language)


@dataclass
class CorpusStats:
    """Document frequencies over a dataset, for the TF-IDF baseline."""

    doc_count: int
    df: Counter = field(default_factory=Counter)


def document_terms(doc: TokenizedDocument) -> tuple[Counter, dict[str, int]]:
    """Candidate unigrams and within-sentence bigrams with counts and first positions."""
    tf: Counter = Counter()
    first_pos: dict[str, int] = {}
    position = 0
    for sent in doc.sentences:
        words = [t.norm for t in sent if not t.is_stopword]
        for i, w in enumerate(words):
            tf[w] += 1
            first_pos.setdefault(w, position + i)
            if i + 1 < len(words):
                bigram = f"{w} {words[i + 1]}"
                tf[bigram] += 1
                first_pos.setdefault(bigram, position + i)
        position += len(words)
    return tf, first_pos


def build_corpus_stats(term_sets: Iterable[Iterable[str]]) -> CorpusStats:
    stats = CorpusStats(doc_count=0)
    for terms in term_sets:
        stats.doc_count += 1
        stats.df.update(set(terms))
    return stats


def tfidf_baseline(doc: TokenizedDocument, corpus: CorpusStats, k: int) -> list[str]:
    """Top-k unigrams/bigrams by tf * ln(N / df).

    Ties (including the all-zero single-document case, where idf vanishes)
    fall back to raw term frequency, then first occurrence, then text, so a
    one-document corpus degenerates to plain TF ranking.
    """
    tf, first_pos = document_terms(doc)
    scored = []
    for term, count in tf.items():
        df = corpus.df.get(term, 1)
        idf = math.log(corpus.doc_count / df) if corpus.doc_count else 0.0
        scored.append((count * idf, count, term))
    scored.sort(key=lambda s: (-s[0], -s[1], first_pos[s[2]], s[2]))
    return [term for _, _, term in scored[:k]]


def _extract_frake_texts(args: tuple[str, FrakeConfig]) -> tuple[str, list[str] | str]:
    """Worker for one document; failures come back as values, not raises."""
    body, config = args
    try:
        resources = _cached_resources(config)
        return "ok", [e.text for e in extract(body, config, resources).ranked]
    except Exception as exc:
        return "error", str(exc)


_RESOURCE_CACHE: dict[tuple, Resources] = {}


def _cached_resources(config: FrakeConfig) -> Resources:
    key = (config.language, str(config.stoplist_path), str(config.lexicon_path))
    if key not in _RESOURCE_CACHE:
        _RESOURCE_CACHE[key] = load_resources(config)
    return _RESOURCE_CACHE[key]


def run_benchmark(
    records: Sequence[DatasetRecord],
    config: FrakeConfig,
    extractor: str = "frake",
    dataset_name: str = "dataset",
    jobs: int = 1,
) -> EvalReport:
    """Extract top-k per document, match against gold, macro-average.

    Per-document extraction failures become per-doc entries with zero
    metrics and an error message instead of aborting the run. With
    ``jobs > 1`` the frake extractor fans out over processes; results merge
    in input order, so the report is deterministic either way.
    """
    if extractor not in EXTRACTORS:
        raise ValueError(f"extractor must be one of {EXTRACTORS}, got {extractor!r}")
    config.validate()
    k = config.k

    predictions: list[tuple[str, list[str] | str]] = []
    if extractor == "frake":
        payload = [(r.body, config) for r in records]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                predictions = list(pool.map(_extract_frake_texts, payload))
        else:
            predictions = [_extract_frake_texts(args) for args in payload]
    else:
        stoplist = load_stoplist(config.language, config.stoplist_path)
        docs = [
            tokenize_document(r.body, stoplist, drop_numbers=config.drop_numbers)
            for r in records
        ]
        term_counts = [document_terms(d)[0] for d in docs]
        corpus = build_corpus_stats(term_counts)
        predictions = [("ok", tfidf_baseline(d, corpus, k)) for d in docs]

    per_doc = []
    for record, (status, pred) in zip(records, predictions):
        if status == "error":
            logger.warning("extraction failed for %s: %s", record.doc_id, pred)
            per_doc.append(DocResult(record.doc_id, 0.0, 0.0, 0.0, error=str(pred)))
            continue
        hits = match(pred, record.gold, config.matcher)
        p = precision_at_k(hits, k)
        r = recall_at_k(hits, len(record.gold), k)
        per_doc.append(DocResult(record.doc_id, p, r, f1_score(p, r)))

    n = len(per_doc)
    return EvalReport(
        dataset=dataset_name,
        k=k,
        matcher=config.matcher,
        extractor=extractor,
        per_doc=tuple(per_doc),
        macro_precision=sum(d.precision for d in per_doc) / n,
        macro_recall=sum(d.recall for d in per_doc) / n,
        macro_f1=sum(d.f1 for d in per_doc) / n,
    )
