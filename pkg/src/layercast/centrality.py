"""Centrality measures and seed-selection strategies for information creators.

Five measures (degree, eigenvector, closeness, betweenness, PageRank) plus a
uniform-random baseline.  Ranking ties always break by ascending node index so
seed selection is reproducible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericError
from .graph import Graph


class CentralityKind(str, enum.Enum):
    DEGREE = "degree"
    EIGENVECTOR = "eigenvector"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    PAGERANK = "pagerank"
    RANDOM = "random"


#: Kinds that carry per-node scores (everything except the random baseline).
SCORING_KINDS = (
    CentralityKind.DEGREE,
    CentralityKind.EIGENVECTOR,
    CentralityKind.CLOSENESS,
    CentralityKind.BETWEENNESS,
    CentralityKind.PAGERANK,
)


@dataclass(frozen=True)
class CentralityScores:
    kind: CentralityKind
    scores: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.scores)):
            raise InputError(f"{self.kind.value} produced non-finite scores")
        self.scores.setflags(write=False)


def degree_centrality(g: Graph) -> CentralityScores:
    """score(v) = deg(v)."""
    return CentralityScores(CentralityKind.DEGREE, g.degrees.astype(np.float64))


def eigenvector_centrality(g: Graph, tol: float = 1e-8, max_iter: int = 1000) -> CentralityScores:
    """Dominant eigenvector of the adjacency matrix, Euclidean-normalized.

    Power iteration with an identity shift (A + I), which leaves the
    eigenvector unchanged but prevents the period-2 oscillation a bipartite
    graph induces on the bare adjacency operator.  On a disconnected graph the
    iteration concentrates on the component with the largest eigenvalue.
    """
    if g.edge_count == 0:
        raise InputError("eigenvector centrality needs at least one edge")
    A = g.to_csr()
    n = g.node_count
    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        y = A @ x + x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            return CentralityScores(CentralityKind.EIGENVECTOR, y)
        x = y
    raise NumericError(
        f"eigenvector centrality did not converge in {max_iter} iterations",
        last_iterate=x,
    )


def closeness_centrality(g: Graph) -> CentralityScores:
    """Wasserman–Faust closeness with reachable-component scaling.

    score(v) = ((r - 1) / (n - 1)) * ((r - 1) / sum of distances), where r is
    the size of v's reachable set.  Isolated nodes score 0.
    """
    n = g.node_count
    if n == 0:
        return CentralityScores(CentralityKind.CLOSENESS, np.zeros(0))
    A = g.to_csr()
    reached = np.eye(n, dtype=bool)  # reached[v, s]: v reached from source s
    frontier = np.eye(n, dtype=np.float64)
    dist_sum = np.zeros(n)
    reach_count = np.ones(n)
    d = 0
    while True:
        d += 1
        spread = A @ frontier
        new = (spread > 0) & ~reached
        if not new.any():
            break
        reached |= new
        per_source = new.sum(axis=0)
        dist_sum += d * per_source
        reach_count += per_source
        frontier = new.astype(np.float64)
    scores = np.zeros(n)
    ok = dist_sum > 0
    if n > 1:
        r1 = reach_count - 1.0
        scores[ok] = (r1[ok] / (n - 1)) * (r1[ok] / dist_sum[ok])
    return CentralityScores(CentralityKind.CLOSENESS, scores)


def betweenness_centrality(g: Graph) -> CentralityScores:
    """Brandes pair-dependency accumulation, unnormalized, endpoints excluded.

    Undirected pairs are counted once (accumulated dependencies halved).
    The per-source sweep is vectorized over BFS shells with sparse matvecs.
    """
    n = g.node_count
    A = g.to_csr()
    bc = np.zeros(n)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n)
        dist[s] = 0
        sigma[s] = 1.0
        shells = [np.array([s], dtype=np.int64)]
        fvec = np.zeros(n)
        fvec[s] = 1.0
        d = 0
        while True:
            contrib = A @ fvec  # path counts arriving one hop out
            new = (contrib > 0) & (dist < 0)
            if not new.any():
                break
            d += 1
            dist[new] = d
            sigma[new] = contrib[new]
            shells.append(np.nonzero(new)[0])
            fvec = np.where(new, contrib, 0.0)
        delta = np.zeros(n)
        for d in range(len(shells) - 1, 0, -1):
            w = shells[d]
            coef = np.zeros(n)
            coef[w] = (1.0 + delta[w]) / sigma[w]
            pull = A @ coef
            prev = dist == d - 1
            delta[prev] += sigma[prev] * pull[prev]
        delta[s] = 0.0
        bc += delta
    return CentralityScores(CentralityKind.BETWEENNESS, bc / 2.0)


def pagerank(
    g: Graph,
    damping: float = 0.85,
    tol: float = 1e-10,
    max_iter: int = 10_000,
) -> CentralityScores:
    """PageRank on the undirected random walk with uniform teleport.

    Isolated (dangling) nodes redistribute their mass uniformly.  Scores sum
    to 1.
    """
    n = g.node_count
    if n == 0:
        raise InputError("pagerank needs at least one node")
    A = g.to_csr()
    deg = g.degrees.astype(np.float64)
    inv_deg = np.where(deg > 0, 1.0 / np.where(deg > 0, deg, 1.0), 0.0)
    dangling = deg == 0
    x = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    for _ in range(max_iter):
        walk = A @ (x * inv_deg) + x[dangling].sum() / n
        x_new = damping * walk + teleport
        if np.max(np.abs(x_new - x)) < tol:
            return CentralityScores(CentralityKind.PAGERANK, x_new)
        x = x_new
    raise NumericError(
        f"pagerank did not converge in {max_iter} iterations", last_iterate=x
    )


_DISPATCH = {
    CentralityKind.DEGREE: degree_centrality,
    CentralityKind.EIGENVECTOR: eigenvector_centrality,
    CentralityKind.CLOSENESS: closeness_centrality,
    CentralityKind.BETWEENNESS: betweenness_centrality,
    CentralityKind.PAGERANK: pagerank,
}


def compute_centrality(g: Graph, kind: CentralityKind) -> CentralityScores:
    """Compute the named measure; the random baseline carries no scores."""
    kind = CentralityKind(kind)
    if kind is CentralityKind.RANDOM:
        raise InputError("the random strategy has no centrality scores")
    return _DISPATCH[kind](g)


def top_k_by_score(scores: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k highest scores; ties break by ascending node index."""
    n = len(scores)
    order = np.lexsort((np.arange(n), -np.asarray(scores, dtype=np.float64)))
    return order[:k].astype(np.int64)


def select_seeds(g: Graph, kind: CentralityKind, k: int, rng_seed=None) -> np.ndarray:
    """Choose k information creators by strategy.

    Centrality kinds take the k top-scoring nodes (ties by ascending index);
    the random kind draws k distinct nodes uniformly from the seeded RNG and
    therefore requires ``rng_seed``.
    """
    kind = CentralityKind(kind)
    if not 0 <= k <= g.node_count:
        raise InputError(f"k must be in [0, {g.node_count}], got {k}")
    if kind is CentralityKind.RANDOM:
        if rng_seed is None:
            raise InputError("the random strategy requires an explicit rng_seed")
        rng = np.random.default_rng(rng_seed)
        return rng.choice(g.node_count, size=k, replace=False).astype(np.int64)
    return top_k_by_score(compute_centrality(g, kind).scores, k)
