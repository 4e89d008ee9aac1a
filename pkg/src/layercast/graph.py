"""Immutable undirected simple graph with BFS layering and closed-triplet queries.

Node identity is a dense integer index in ``[0, node_count)``.  Adjacency is
stored CSR-style (``indptr``/``indices``) with each neighbor row sorted, so
iteration order is deterministic everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError, InputError


class Graph:
    """Undirected simple graph: no self-loops, no duplicate edges.

    Instances are immutable after construction and safe to share across
    threads.  Use :func:`build_graph` to construct one from a raw edge list.
    """

    __slots__ = ("node_count", "edges", "_indptr", "_indices", "_nbr_sets")

    def __init__(self, node_count: int, edge_list) -> None:
        if node_count < 0:
            raise InputError(f"node_count must be nonnegative, got {node_count}")
        self.node_count = int(node_count)

        e = np.asarray(list(edge_list), dtype=np.int64).reshape(-1, 2)
        if e.size:
            if e.min() < 0 or e.max() >= node_count:
                raise InputError(
                    f"edge endpoint out of range [0, {node_count}): "
                    f"min={e.min()}, max={e.max()}"
                )
            lo = e.min(axis=1)
            hi = e.max(axis=1)
            keep = lo != hi  # drop self-loops
            e = np.unique(np.stack([lo[keep], hi[keep]], axis=1), axis=0)
        else:
            e = np.empty((0, 2), dtype=np.int64)
        self.edges = e
        self.edges.setflags(write=False)

        counts = np.bincount(e.ravel(), minlength=node_count) if e.size else np.zeros(
            node_count, dtype=np.int64
        )
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        self._indptr = indptr
        self._indices = dst[order]
        self._indptr.setflags(write=False)
        self._indices.setflags(write=False)
        self._nbr_sets = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor indices of ``v`` (read-only view)."""
        return self._indices[self._indptr[v] : self._indptr[v + 1]]

    def neighbor_set(self, v: int) -> frozenset:
        if self._nbr_sets is None:
            ind, ptr = self._indices, self._indptr
            self._nbr_sets = tuple(
                frozenset(ind[ptr[i] : ptr[i + 1]].tolist())
                for i in range(self.node_count)
            )
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def to_csr(self):
        """Adjacency as a scipy CSR matrix of float64 (built per call)."""
        from scipy.sparse import csr_matrix

        data = np.ones(len(self._indices), dtype=np.float64)
        return csr_matrix(
            (data, self._indices, self._indptr),
            shape=(self.node_count, self.node_count),
        )

    def __repr__(self) -> str:
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


def build_graph(node_count: int, edge_list) -> Graph:
    """Build a graph from an edge list, deduplicating and dropping self-loops.

    Raises :class:`InputError` if any endpoint is outside ``[0, node_count)``.
    """
    return Graph(node_count, edge_list)


@dataclass(frozen=True)
class LayeredView:
    """BFS layering of a graph from a set of source nodes.

    ``layer_of[v]`` is the hop distance from ``v`` to the nearest source, or
    ``-1`` if unreachable.  ``layers[L]`` holds the sorted node indices at
    distance ``L``; ``layers[0]`` is the source set itself.
    """

    sources: np.ndarray
    layer_of: np.ndarray
    layers: tuple

    @property
    def depth(self) -> int:
        """Largest layer index among reachable nodes."""
        return len(self.layers) - 1

    def layer(self, v: int):
        """Layer index of ``v``, or None if unreachable."""
        L = int(self.layer_of[v])
        return None if L < 0 else L


def layer_from_sources(g: Graph, sources) -> LayeredView:
    """Multi-source BFS: layer = hop distance to the nearest source."""
    src = np.unique(np.asarray(list(sources), dtype=np.int64))
    if src.size == 0:
        raise InputError("source set must be non-empty")
    if src.min() < 0 or src.max() >= g.node_count:
        raise InputError(f"source index out of range [0, {g.node_count})")

    layer_of = np.full(g.node_count, -1, dtype=np.int64)
    layer_of[src] = 0
    layers = [src]
    frontier = src
    ind, ptr = g._indices, g._indptr
    while frontier.size:
        nbrs = np.concatenate([ind[ptr[v] : ptr[v + 1]] for v in frontier])
        nxt = np.unique(nbrs)
        nxt = nxt[layer_of[nxt] < 0]
        if nxt.size == 0:
            break
        layer_of[nxt] = len(layers)
        layers.append(nxt)
        frontier = nxt
    layer_of.setflags(write=False)
    for arr in layers:
        arr.setflags(write=False)
    return LayeredView(sources=src, layer_of=layer_of, layers=tuple(layers))


def effective_edge_count(g: Graph, lv: LayeredView, target: int, source: int) -> int:
    """Number of closed triplets boosting a transmission from source to target.

    Counts nodes in the target's own layer that are adjacent to both the
    target and the source.  Requires ``layer(target) == layer(source) + 1``
    and an existing edge between the two; violations raise
    :class:`ContractError`.
    """
    lt = int(lv.layer_of[target])
    ls = int(lv.layer_of[source])
    if lt < 0 or ls < 0 or lt != ls + 1:
        raise ContractError(
            f"target layer ({lt}) must be source layer ({ls}) + 1"
        )
    if not g.has_edge(target, source):
        raise ContractError(f"no edge between target {target} and source {source}")
    common = g.neighbor_set(target) & g.neighbor_set(source)
    layer_of = lv.layer_of
    return sum(1 for i in common if layer_of[i] == lt)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format: ``n m`` then one ``u v`` per line."""
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format produced by :func:`format_edge_list`."""
    tokens = text.split()
    if len(tokens) < 2:
        raise InputError("edge-list text must start with 'n m'")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"edge-list contains a non-integer token: {exc}") from None
    n, m = values[0], values[1]
    body = values[2:]
    if len(body) != 2 * m:
        raise InputError(
            f"edge-list declares {m} edges but carries {len(body) // 2}"
        )
    edges = np.array(body, dtype=np.int64).reshape(-1, 2)
    return Graph(n, edges)


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))


def load_edge_list(path) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_edge_list(fh.read())
    except FileNotFoundError:
        raise InputError(f"no such edge-list file: {path}") from None
