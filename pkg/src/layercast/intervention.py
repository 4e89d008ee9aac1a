"""Competing true-vs-false diffusion with decisive-threshold blocking.

Two layered diffusion processes share one timeline: the false process runs
one global step ahead of the true process.  A node whose false-belief
probability has reached the decisive threshold becomes unavailable to the
true process, both for receiving and for transmitting.  Final three-way
labels compare the two accumulated probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .centrality import CentralityKind, compute_centrality, top_k_by_score
from .diffusion import Label, _count_effective, transmission_factor
from .errors import InputError
from .graph import Graph, LayeredView, layer_from_sources


@dataclass(frozen=True)
class CombatParams:
    """Transmission probabilities and thresholds for the competing processes.

    ``decisive_threshold`` is the false-belief level at which a node stops
    participating in the true process; values above 1 disable blocking
    entirely.  ``comparative_threshold`` is the minimum belief gap that labels
    a node infected.
    """

    false_transmission_prob: float
    true_transmission_prob: float
    decisive_threshold: float
    comparative_threshold: float

    def __post_init__(self):
        for name in ("false_transmission_prob", "true_transmission_prob", "comparative_threshold"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InputError(f"{name} must be in [0, 1], got {v}")
        if self.decisive_threshold < 0.0:
            raise InputError(
                f"decisive_threshold must be >= 0, got {self.decisive_threshold}"
            )


@dataclass
class CombatState:
    """Final state of one intervention run.

    ``blocked[v]`` records that v crossed the decisive threshold before its
    true update, so its true-belief probability stayed 0.
    """

    p_if: np.ndarray
    p_it: np.ndarray
    false_layers: LayeredView
    true_layers: LayeredView
    blocked: np.ndarray
    labels: np.ndarray


def determine_combat_label(p_if: float, p_it: float, comparative_threshold: float) -> Label:
    """Three-way status: infected / susceptible / protected."""
    if p_if - p_it >= comparative_threshold:
        return Label.INFECTED
    if p_if >= p_it:
        return Label.SUSCEPTIBLE
    return Label.PROTECTED


def _combat_labels(p_if: np.ndarray, p_it: np.ndarray, comparative_threshold: float) -> np.ndarray:
    labels = np.full(len(p_if), Label.PROTECTED, dtype=np.int8)
    labels[p_if >= p_it] = Label.SUSCEPTIBLE
    labels[p_if - p_it >= comparative_threshold] = Label.INFECTED
    return labels


def run_intervention(g: Graph, false_creators, true_creators, params: CombatParams, step_log=None) -> CombatState:
    """Run the competing diffusion of false and true information.

    At global step t the true process updates its layer t - 1, then the false
    process updates its layer t, so the false front keeps a one-iteration head
    start (its first layer update lands a full step before the true
    process's).  A true-layer target whose false belief has reached the
    decisive threshold by the end of the previous step is blocked and receives
    nothing; a source in the same condition transmits nothing.  Creator sets
    may overlap (both beliefs start at 1).

    ``step_log``, if given, receives ``(step, process, layer)`` tuples and
    exposes the interleaving for verification.
    """
    false_lv = layer_from_sources(g, false_creators)
    true_lv = layer_from_sources(g, true_creators)
    n = g.node_count

    p_if_bar = np.ones(n)
    p_if_bar[false_lv.sources] = 0.0
    p_if = np.zeros(n)
    p_if[false_lv.sources] = 1.0
    p_it_bar = np.ones(n)
    p_it_bar[true_lv.sources] = 0.0
    p_it = np.zeros(n)
    p_it[true_lv.sources] = 1.0
    blocked = np.zeros(n, dtype=bool)

    pf, pt = params.false_transmission_prob, params.true_transmission_prob
    td = params.decisive_threshold
    false_factors = {0: pf}
    true_factors = {0: pt}
    f_layer = false_lv.layer_of
    t_layer = true_lv.layer_of

    last_step = max(false_lv.depth, true_lv.depth + 1)
    for step in range(1, last_step + 1):
        true_layer = step - 1
        if 1 <= true_layer <= true_lv.depth:
            if step_log is not None:
                step_log.append((step, "true", true_layer))
            for u in true_lv.layers[true_layer]:
                if p_if[u] >= td:
                    blocked[u] = True
                    continue
                acc = p_it_bar[u]
                for v in g.neighbors(u):
                    if t_layer[v] != true_layer - 1 or p_it[v] == 0.0:
                        continue
                    if p_if[v] >= td:
                        continue  # source no longer transmits true information
                    n_eff = _count_effective(g, t_layer, u, v, true_layer)
                    f = true_factors.get(n_eff)
                    if f is None:
                        f = transmission_factor(pt, n_eff)
                        true_factors[n_eff] = f
                    acc *= 1.0 - p_it[v] * f
                p_it_bar[u] = acc
                p_it[u] = 1.0 - acc

        if step <= false_lv.depth:
            if step_log is not None:
                step_log.append((step, "false", step))
            for u in false_lv.layers[step]:
                acc = p_if_bar[u]
                for v in g.neighbors(u):
                    if f_layer[v] != step - 1 or p_if[v] == 0.0:
                        continue
                    n_eff = _count_effective(g, f_layer, u, v, step)
                    f = false_factors.get(n_eff)
                    if f is None:
                        f = transmission_factor(pf, n_eff)
                        false_factors[n_eff] = f
                    acc *= 1.0 - p_if[v] * f
                p_if_bar[u] = acc
                p_if[u] = 1.0 - acc

    return CombatState(
        p_if=p_if,
        p_it=p_it,
        false_layers=false_lv,
        true_layers=true_lv,
        blocked=blocked,
        labels=_combat_labels(p_if, p_it, params.comparative_threshold),
    )


def intervention_metrics(state: CombatState):
    """(sum of p_it, infected count, susceptible count, protected count)."""
    labels = state.labels
    return (
        math.fsum(state.p_it),
        int(np.count_nonzero(labels == Label.INFECTED)),
        int(np.count_nonzero(labels == Label.SUSCEPTIBLE)),
        int(np.count_nonzero(labels == Label.PROTECTED)),
    )


def minimum_true_seeds(
    graphs,
    strategy: CentralityKind,
    false_seed_sets,
    params: CombatParams,
    k_max: int,
    rng_seed=None,
    curve_out=None,
):
    """Smallest true-creator count achieving a complete intervention.

    A complete intervention means the ensemble-mean protected count strictly
    exceeds the ensemble-mean infected count.  The search runs k = 1..k_max in
    order and returns the first qualifying k (completeness is not guaranteed
    monotone in k), or None when no k qualifies.  ``false_seed_sets`` gives
    each graph its fixed false creators; the random strategy draws its true
    creators from seeds derived per (graph, k) and requires ``rng_seed``.

    ``curve_out``, if given, receives ``(k, mean_protected, mean_infected)``
    for every k examined.
    """
    graphs = list(graphs)
    false_seed_sets = [np.asarray(s, dtype=np.int64) for s in false_seed_sets]
    if not graphs:
        raise InputError("graph ensemble must be non-empty")
    if len(false_seed_sets) != len(graphs):
        raise InputError("one false seed set is required per graph")
    strategy = CentralityKind(strategy)
    if not 1 <= k_max <= min(g.node_count for g in graphs):
        raise InputError(f"k_max must be in [1, min node count], got {k_max}")
    if strategy is CentralityKind.RANDOM and rng_seed is None:
        raise InputError("the random strategy requires an explicit rng_seed")

    scores = None
    if strategy is not CentralityKind.RANDOM:
        scores = [compute_centrality(g, strategy).scores for g in graphs]

    for k in range(1, k_max + 1):
        protected = np.empty(len(graphs))
        infected = np.empty(len(graphs))
        for i, g in enumerate(graphs):
            if scores is not None:
                ic_t = top_k_by_score(scores[i], k)
            else:
                rng = np.random.default_rng(np.random.SeedSequence(rng_seed, spawn_key=(i, k)))
                ic_t = rng.choice(g.node_count, size=k, replace=False)
            state = run_intervention(g, false_seed_sets[i], ic_t, params)
            _, inf, _, prot = intervention_metrics(state)
            protected[i] = prot
            infected[i] = inf
        mean_prot = float(protected.mean())
        mean_inf = float(infected.mean())
        if curve_out is not None:
            curve_out.append((k, mean_prot, mean_inf))
        if mean_prot > mean_inf:
            return k
    return None
