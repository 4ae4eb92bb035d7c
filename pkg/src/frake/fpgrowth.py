"""FP-Growth frequent itemset mining over sentence transactions."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable


class _Node:
    __slots__ = ("item", "count", "parent", "children")

    def __init__(self, item: str | None, count: int, parent: "_Node | None"):
        self.item = item
        self.count = count
        self.parent = parent
        self.children: dict[str, _Node] = {}


def _build_tree(
    transactions: Iterable[tuple[str, ...]],
    counts: dict[str, int],
) -> dict[str, list[_Node]]:
    """Insert support-ordered transactions into a prefix tree; return header links."""
    root = _Node(None, 0, None)
    header: dict[str, list[_Node]] = {}
    rank = {item: (-count, item) for item, count in counts.items()}
    for transaction in transactions:
        items = sorted((i for i in transaction if i in counts), key=rank.__getitem__)
        node = root
        for item in items:
            child = node.children.get(item)
            if child is None:
                child = _Node(item, 0, node)
                node.children[item] = child
                header.setdefault(item, []).append(child)
            child.count += 1
            node = child
    return header


def _prefix_paths(nodes: list[_Node]) -> list[tuple[list[str], int]]:
    paths = []
    for node in nodes:
        path: list[str] = []
        parent = node.parent
        while parent is not None and parent.item is not None:
            path.append(parent.item)
            parent = parent.parent
        path.reverse()
        paths.append((path, node.count))
    return paths


def _mine(
    header: dict[str, list[_Node]],
    counts: dict[str, int],
    min_support: int,
    suffix: frozenset[str],
    max_len: int | None,
    results: dict[frozenset[str], int],
) -> None:
    for item in sorted(counts):
        support = counts[item]
        itemset = suffix | {item}
        results[itemset] = support
        if max_len is not None and len(itemset) >= max_len:
            continue
        paths = _prefix_paths(header.get(item, []))
        cond_counts = Counter()
        for path, count in paths:
            for it in path:
                cond_counts[it] += count
        cond_counts = {i: c for i, c in cond_counts.items() if c >= min_support}
        if not cond_counts:
            continue
        cond_transactions = []
        for path, count in paths:
            filtered = tuple(i for i in path if i in cond_counts)
            cond_transactions.extend([filtered] * count)
        cond_header = _build_tree(cond_transactions, cond_counts)
        _mine(cond_header, cond_counts, min_support, itemset, max_len, results)


def frequent_itemsets(
    transactions: Iterable[Iterable[str]],
    min_support: int,
    max_len: int | None = None,
) -> dict[frozenset[str], int]:
    """Find itemsets contained in at least ``min_support`` transactions.

    Items within a transaction are deduplicated (support counts
    transactions, not occurrences). ``max_len`` caps itemset size.
    """
    if min_support < 1:
        raise ValueError(f"min_support must be >= 1, got {min_support}")
    dedup = [tuple(dict.fromkeys(t)) for t in transactions]
    counts = Counter()
    for t in dedup:
        counts.update(t)
    counts = {i: c for i, c in counts.items() if c >= min_support}
    if not counts:
        return {}
    header = _build_tree(dedup, counts)
    results: dict[frozenset[str], int] = {}
    _mine(header, counts, min_support, frozenset(), max_len, results)
    return results
