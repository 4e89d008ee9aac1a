"""Single-information layered diffusion.

Belief spreads outward through BFS layers radiating from the information
creators.  A node's belief probability is accumulated from all of its
previous-layer neighbors via a complement product, with each edge's
contribution boosted by the number of closed triplets (effective edges) the
transmission participates in.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph, LayeredView, layer_from_sources


class Label(enum.IntEnum):
    SUSCEPTIBLE = 0
    INFECTED = 1
    PROTECTED = 2


@dataclass(frozen=True)
class DiffusionParams:
    """Transmission probability P and believer threshold T."""

    transmission_prob: float
    threshold: float

    def __post_init__(self):
        for name in ("transmission_prob", "threshold"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InputError(f"{name} must be in [0, 1], got {v}")


@dataclass
class DiffusionState:
    """Final state of one diffusion run.

    ``p_i[v]`` is the probability node v believes the information;
    ``p_i_bar`` its complement (the accumulation domain).  Unreachable nodes
    keep ``p_i = 0``.
    """

    p_i: np.ndarray
    p_i_bar: np.ndarray
    layers: LayeredView
    iterations_run: int
    labels: np.ndarray


def transmission_factor(transmission_prob: float, effective_edges: int) -> float:
    """Per-edge belief multiplier for a transmission with N effective edges.

    F(N, P) = P + sum_{j=1..N} P^j (1-P)^(N+1-j) C(N, j) (1 - (1-P)^j).
    Bounded by 1 for every N, and equals P when N = 0.
    """
    P = transmission_prob
    q = 1.0 - P
    total = P
    for j in range(1, effective_edges + 1):
        total += P**j * q ** (effective_edges + 1 - j) * math.comb(effective_edges, j) * (1.0 - q**j)
    return total


def update_from_source(source_belief: float, transmission_prob: float, effective_edges: int) -> float:
    """Belief contribution one source node passes to a next-layer neighbor."""
    return source_belief * transmission_factor(transmission_prob, effective_edges)


def _count_effective(g: Graph, layer_of: np.ndarray, target: int, source: int, target_layer: int) -> int:
    """Unchecked effective-edge count for the propagation inner loop."""
    set_t = g.neighbor_set(target)
    set_s = g.neighbor_set(source)
    common = set_t & set_s if len(set_t) <= len(set_s) else set_s & set_t
    n_eff = 0
    for i in common:
        if layer_of[i] == target_layer:
            n_eff += 1
    return n_eff


def run_single_diffusion(g: Graph, creators, params: DiffusionParams) -> DiffusionState:
    """Propagate one piece of information from the creator set.

    Layers are built by multi-source BFS from the creators; every node is
    updated exactly once, when its layer is processed, accumulating over all
    previous-layer neighbors through the complement product.  The number of
    iterations equals the layering depth (further sweeps would be no-ops).
    """
    lv = layer_from_sources(g, creators)
    n = g.node_count
    p_bar = np.ones(n)
    p_bar[lv.sources] = 0.0
    p_i = np.zeros(n)
    p_i[lv.sources] = 1.0

    P = params.transmission_prob
    factors = {0: P}
    layer_of = lv.layer_of
    for L in range(lv.depth):
        for u in lv.layers[L + 1]:
            acc = p_bar[u]
            for v in g.neighbors(u):
                if layer_of[v] != L or p_i[v] == 0.0:
                    continue
                n_eff = _count_effective(g, layer_of, u, v, L + 1)
                f = factors.get(n_eff)
                if f is None:
                    f = transmission_factor(P, n_eff)
                    factors[n_eff] = f
                acc *= 1.0 - p_i[v] * f
            p_bar[u] = acc
            p_i[u] = 1.0 - acc

    return DiffusionState(
        p_i=p_i,
        p_i_bar=p_bar,
        layers=lv,
        iterations_run=lv.depth,
        labels=_labels_from_belief(p_i, params.threshold),
    )


def _labels_from_belief(p_i: np.ndarray, threshold: float) -> np.ndarray:
    return np.where(p_i >= threshold, Label.INFECTED, Label.SUSCEPTIBLE).astype(np.int8)


def label_nodes(state: DiffusionState, threshold: float) -> np.ndarray:
    """Infected where p_i >= threshold (boundary inclusive), else susceptible."""
    return _labels_from_belief(state.p_i, threshold)


def diffusion_metrics(state: DiffusionState):
    """(iterations, sum of p_i) — diffusion speed and accumulated belief.

    The sum is correctly rounded (order-invariant), so symmetric runs that
    differ only in node labeling report identical totals.
    """
    return state.iterations_run, math.fsum(state.p_i)
