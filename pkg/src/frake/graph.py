"""Co-occurrence word graph, node centralities, and the PC1 graph score.

The graph is undirected and unweighted over unique word norms; edges join
words whose positions in the candidate stream differ by 1 or 2. Each node
gets eight centrality scores (columns DE, CL, BE, EV, SH, PR, CC, EC), which
are collapsed to a single per-word graph score by projecting onto the first
principal component and affine-mapping the projections onto [1, 2].

Conventions for degenerate graphs keep every matrix entry finite: closeness
and eccentricity are computed per connected component and scaled by
(component size - 1)/(n - 1); eccentricity is inverted so that every column
reads "larger = more central"; isolated nodes score 0 in CL, BE, SH, CC, EC.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

CENTRALITY_COLUMNS = ("DE", "CL", "BE", "EV", "SH", "PR", "CC", "EC")


@dataclass
class WordGraph:
    """Undirected unweighted graph; node and neighbor order follow the text."""

    nodes: tuple[str, ...]
    adjacency: dict[str, list[str]]

    def __post_init__(self) -> None:
        self._neighbor_sets = {v: set(nbrs) for v, nbrs in self.adjacency.items()}

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._neighbor_sets.get(u, ())

    def edges(self) -> list[tuple[str, str]]:
        """Edge list in deterministic first-occurrence order."""
        order = {v: i for i, v in enumerate(self.nodes)}
        out = []
        for v in self.nodes:
            for u in self.adjacency[v]:
                if order[u] > order[v]:
                    out.append((v, u))
        return out


def build_graph(words: Sequence[str]) -> WordGraph:
    """Build the window-2 co-occurrence graph over a stream of word norms.

    Every position is linked to its next and next-but-one neighbors in the
    stream, across sentence boundaries. Self-pairs and repeated pairs
    collapse; a single-word stream yields one node and no edges.
    """
    if not words:
        raise ValueError("cannot build a graph from an empty word stream")
    nodes: list[str] = []
    adjacency: dict[str, list[str]] = {}
    seen_edges: set[frozenset[str]] = set()
    for w in words:
        if w not in adjacency:
            nodes.append(w)
            adjacency[w] = []
    for i, w in enumerate(words):
        for j in (i + 1, i + 2):
            if j >= len(words):
                continue
            u = words[j]
            if u == w:
                continue
            pair = frozenset((w, u))
            if pair in seen_edges:
                continue
            seen_edges.add(pair)
            adjacency[w].append(u)
            adjacency[u].append(w)
    return WordGraph(nodes=tuple(nodes), adjacency=adjacency)


def _bfs_distances(g: WordGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def connected_components(g: WordGraph) -> list[list[str]]:
    seen: set[str] = set()
    components = []
    for v in g.nodes:
        if v in seen:
            continue
        comp = list(_bfs_distances(g, v))
        seen.update(comp)
        components.append(comp)
    return components


def degree_centrality(g: WordGraph) -> dict[str, float]:
    """deg(v) / (n - 1); zero on a single-node graph."""
    n = g.n_nodes
    if n <= 1:
        return {v: 0.0 for v in g.nodes}
    return {v: g.degree(v) / (n - 1) for v in g.nodes}


def closeness_centrality(g: WordGraph) -> dict[str, float]:
    """Reachable-only closeness with Wasserman-Faust component scaling.

    c(v) = ((r - 1) / (n - 1)) * ((r - 1) / sum of distances), where r is the
    size of v's component. Isolated nodes score 0.
    """
    n = g.n_nodes
    out = {}
    for v in g.nodes:
        dist = _bfs_distances(g, v)
        r = len(dist)
        total = sum(dist.values())
        if n > 1 and r > 1 and total > 0:
            out[v] = ((r - 1) / (n - 1)) * ((r - 1) / total)
        else:
            out[v] = 0.0
    return out


def betweenness_centrality(g: WordGraph) -> dict[str, float]:
    """Normalized shortest-path betweenness (Brandes' accumulation)."""
    n = g.n_nodes
    bc = {v: 0.0 for v in g.nodes}
    if n < 3:
        return bc
    for s in g.nodes:
        stack: list[str] = []
        preds: dict[str, list[str]] = {v: [] for v in g.nodes}
        sigma = {v: 0.0 for v in g.nodes}
        sigma[s] = 1.0
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for u in g.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
                if dist[u] == dist[v] + 1:
                    sigma[u] += sigma[v]
                    preds[u].append(v)
        delta = {v: 0.0 for v in g.nodes}
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
        # each unordered pair is accumulated once per endpoint
    scale = 1.0 / ((n - 1) * (n - 2))
    return {v: bc[v] * scale for v in g.nodes}


def eigenvector_centrality(
    g: WordGraph, tol: float = 1e-9, max_iter: int = 1000
) -> dict[str, float]:
    """Power iteration on A + I, normalized to unit Euclidean norm.

    The identity shift avoids oscillation on bipartite graphs. Returns the
    best iterate after ``max_iter`` even if the tolerance was not reached.
    """
    n = g.n_nodes
    a = _adjacency_matrix(g)
    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        nxt = x + a @ x
        norm = float(np.linalg.norm(nxt))
        if norm == 0.0:
            break
        nxt /= norm
        if float(np.abs(nxt - x).sum()) < n * tol:
            x = nxt
            break
        x = nxt
    return {v: float(x[i]) for i, v in enumerate(g.nodes)}


def structural_holes(g: WordGraph) -> dict[str, float]:
    """Burt effective size of each ego network: deg(v) - 2 t(v) / deg(v).

    t(v) counts edges among v's neighbors. Larger means the neighborhood is
    less redundant, i.e. the node bridges more. Isolated nodes score 0.
    """
    out = {}
    for v in g.nodes:
        k = g.degree(v)
        if k == 0:
            out[v] = 0.0
            continue
        t = _ego_ties(g, v)
        out[v] = k - 2.0 * t / k
    return out


def pagerank(
    g: WordGraph, damping: float = 0.85, tol: float = 1e-9, max_iter: int = 1000
) -> dict[str, float]:
    """PageRank with uniform teleport; dangling mass is spread uniformly."""
    n = g.n_nodes
    a = _adjacency_matrix(g)
    deg = a.sum(axis=1)
    dangling = deg == 0
    inv_deg = np.where(dangling, 1.0, deg)
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        spread = a.T @ (x / inv_deg) + x[dangling].sum() / n
        nxt = (1.0 - damping) / n + damping * spread
        if float(np.abs(nxt - x).sum()) < n * tol:
            x = nxt
            break
        x = nxt
    return {v: float(x[i]) for i, v in enumerate(g.nodes)}


def clustering_coefficient(g: WordGraph) -> dict[str, float]:
    """Local triangle density: 2 t(v) / (deg(v) (deg(v) - 1)); 0 below degree 2."""
    out = {}
    for v in g.nodes:
        k = g.degree(v)
        if k < 2:
            out[v] = 0.0
            continue
        t = _ego_ties(g, v)
        out[v] = 2.0 * t / (k * (k - 1))
    return out


def eccentricity(g: WordGraph) -> dict[str, float]:
    """Inverted within-component eccentricity, scaled to make columns comparable.

    ecc(v) is the longest shortest path from v inside its component; the
    score is ((max_ecc - ecc + 1) / max_ecc) * ((size - 1) / (n - 1)), so a
    component center scores highest and isolated nodes score 0.
    """
    n = g.n_nodes
    out = {v: 0.0 for v in g.nodes}
    if n <= 1:
        return out
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        ecc = {}
        for v in comp:
            dist = _bfs_distances(g, v)
            ecc[v] = max(dist.values())
        max_ecc = max(ecc.values())
        scale = (len(comp) - 1) / (n - 1)
        for v in comp:
            out[v] = ((max_ecc - ecc[v] + 1) / max_ecc) * scale
    return out


@dataclass(frozen=True)
class CentralityMatrix:
    """Row per node, eight columns in CENTRALITY_COLUMNS order."""

    words: tuple[str, ...]
    values: np.ndarray


def centrality_matrix(g: WordGraph) -> CentralityMatrix:
    columns = (
        degree_centrality(g),
        closeness_centrality(g),
        betweenness_centrality(g),
        eigenvector_centrality(g),
        structural_holes(g),
        pagerank(g),
        clustering_coefficient(g),
        eccentricity(g),
    )
    values = np.array([[col[v] for col in columns] for v in g.nodes], dtype=float)
    return CentralityMatrix(words=g.nodes, values=values)


def pc1_reduce(matrix: np.ndarray) -> np.ndarray:
    """Project standardized rows onto the first principal component.

    Columns are standardized to zero mean and unit (population) variance;
    zero-variance columns are dropped. The leading eigenvector of the
    resulting covariance is found by power iteration and its sign is fixed
    so the first retained column (DE for the centrality matrix) loads
    non-negatively. A single row, or all-constant columns, give an all-zero
    projection.
    """
    x = np.asarray(matrix, dtype=float)
    if x.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {x.shape}")
    n = x.shape[0]
    if n == 0:
        return np.zeros(0)
    # constant columns are detected via max == min, not via std: a summed std
    # of a constant column can come out ~1e-15 and would amplify rounding
    # noise; std > 0 additionally guards against variance underflowing to 0
    std = x.std(axis=0)
    keep = ((x.max(axis=0) - x.min(axis=0)) > 0.0) & (std > 0.0)
    if not keep.any():
        return np.zeros(n)
    z = (x[:, keep] - x[:, keep].mean(axis=0)) / std[keep]
    cov = (z.T @ z) / n
    pc1 = _leading_eigenvector(cov)
    for loading in pc1:
        if abs(loading) > 1e-12:
            if loading < 0:
                pc1 = -pc1
            break
    return z @ pc1


def _leading_eigenvector(
    cov: np.ndarray, tol: float = 1e-14, max_iter: int = 100_000
) -> np.ndarray:
    c = cov.shape[0]
    if c == 1:
        return np.ones(1)
    v = np.full(c, 1.0 / math.sqrt(c))
    for _ in range(max_iter):
        w = cov @ v
        norm = float(np.linalg.norm(w))
        if norm < 1e-30:
            # restart away from the null space
            v = np.zeros(c)
            v[int(np.argmax(np.diag(cov)))] = 1.0
            continue
        w /= norm
        if float(np.abs(w - v).max()) < tol:
            return w
        v = w
    return v


def graph_scores(g: WordGraph) -> dict[str, float]:
    """Per-word graph score: PC1 projections affine-mapped onto [1, 2].

    The minimum projection maps to 1, the maximum to 2; when every node
    projects identically (single node included) all words score 1.5. The
    positive range keeps the downstream multiplicative fusion from zeroing
    or sign-flipping any word, and the affine map never reorders words.
    """
    projections = pc1_reduce(centrality_matrix(g).values)
    lo = float(projections.min())
    hi = float(projections.max())
    if hi == lo:
        return {v: 1.5 for v in g.nodes}
    span = hi - lo
    return {v: 1.0 + (float(p) - lo) / span for v, p in zip(g.nodes, projections)}


def _adjacency_matrix(g: WordGraph) -> np.ndarray:
    order = {v: i for i, v in enumerate(g.nodes)}
    a = np.zeros((g.n_nodes, g.n_nodes))
    for v in g.nodes:
        i = order[v]
        for u in g.adjacency[v]:
            a[i, order[u]] = 1.0
    return a


def _ego_ties(g: WordGraph, v: str) -> int:
    """Number of edges among v's neighbors."""
    nbrs = g._neighbor_sets[v]
    total = 0
    for u in g.adjacency[v]:
        total += len(g._neighbor_sets[u] & nbrs)
    return total // 2
