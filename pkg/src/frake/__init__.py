"""Keyword and key-phrase extraction fusing graph centrality and textural features."""

from .config import FrakeConfig
from .fusion import ExtractionResult, PhraseCandidate, ScoredWord, fuse, mine_phrases, rank
from .pipeline import Resources, extract, extract_keywords, load_resources

__all__ = [
    "ExtractionResult",
    "FrakeConfig",
    "PhraseCandidate",
    "Resources",
    "ScoredWord",
    "extract",
    "extract_keywords",
    "fuse",
    "load_resources",
    "mine_phrases",
    "rank",
]

__version__ = "0.1.0"
