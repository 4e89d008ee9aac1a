"""Declarative experiment runner for ensemble studies.

A battery generates an ensemble of graphs from one generator configuration,
runs every seed-selection strategy on the same graphs (and, in intervention
mode, against the same randomly drawn false creators), and compares each
centrality strategy to the random baseline with paired one-tailed Wilcoxon
tests.  Identical configurations (including the master seed) always export
byte-identical CSV.

Seed discipline: every random stream is derived from the master seed with a
splittable spawn key ``(stream, sweep_index, graph_index)`` where stream 0
feeds graph generation, stream 1 the false-creator draws, and stream 2 the
random selection strategy.  Adding strategies never perturbs other streams.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from .centrality import CentralityKind, select_seeds
from .diffusion import DiffusionParams, Label, diffusion_metrics, run_single_diffusion
from .errors import DegenerateSampleError, GenerationError, InputError
from .generators import (
    ErParams,
    GaussianPartitionParams,
    LfrParams,
    gen_er,
    gen_gaussian_partition,
    gen_lfr,
)
from .intervention import CombatParams, intervention_metrics, minimum_true_seeds, run_intervention
from .stats import PairedSample, compare_strategies

_STREAM_GRAPH = 0
_STREAM_FALSE_SEEDS = 1
_STREAM_RANDOM_STRATEGY = 2

#: Strategy order used by the preset batteries.
ALL_STRATEGIES = (
    CentralityKind.DEGREE,
    CentralityKind.EIGENVECTOR,
    CentralityKind.CLOSENESS,
    CentralityKind.BETWEENNESS,
    CentralityKind.PAGERANK,
    CentralityKind.RANDOM,
)

#: Which direction means "the strategy beats the baseline" per metric.
METRIC_ALTERNATIVE = {
    "iterations": "x_less",
    "sum_p_i": "x_greater",
    "sum_p_it": "x_greater",
    "infected": "x_less",
    "susceptible": "x_less",
    "protected": "x_greater",
}

_SINGLE_COLUMNS = ("iterations", "sum_p_i", "infected", "susceptible")
_COMBAT_COLUMNS = ("sum_p_it", "infected", "susceptible", "protected")
_SINGLE_TESTED = ("iterations", "sum_p_i")
_COMBAT_TESTED = ("sum_p_it", "infected", "susceptible", "protected")

GeneratorParams = ErParams | GaussianPartitionParams | LfrParams


@dataclass(frozen=True)
class SweepSpec:
    """Grid of values for one generator or model parameter."""

    parameter: str
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) == 0:
            raise InputError("sweep grid must be non-empty")


@dataclass(frozen=True)
class ExperimentConfig:
    """One ensemble battery: generator, model, strategies, and seeds."""

    generator: GeneratorParams
    ensemble_size: int
    mode: str
    strategies: tuple
    model: DiffusionParams | CombatParams
    master_rng_seed: int
    info_starter: int = 0
    false_info_starter: int = 0
    true_info_starter: int = 0
    sweep: SweepSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, "strategies", tuple(CentralityKind(s) for s in self.strategies))
        if self.ensemble_size < 1:
            raise InputError(f"ensemble_size must be >= 1, got {self.ensemble_size}")
        if self.mode not in ("single", "intervention"):
            raise InputError(f"mode must be 'single' or 'intervention', got {self.mode!r}")
        if not self.strategies:
            raise InputError("at least one strategy is required")
        if len(set(self.strategies)) != len(self.strategies):
            raise InputError("strategies must be unique")
        if self.mode == "single":
            if not isinstance(self.model, DiffusionParams):
                raise InputError("single mode requires DiffusionParams")
            if self.info_starter < 1:
                raise InputError("single mode requires info_starter >= 1")
        else:
            if not isinstance(self.model, CombatParams):
                raise InputError("intervention mode requires CombatParams")
            if self.false_info_starter < 1 or self.true_info_starter < 1:
                raise InputError("intervention mode requires both starter counts >= 1")


@dataclass(frozen=True)
class MetricRecord:
    strategy: str
    graph_index: int
    sweep_value: float | None
    metrics: dict


@dataclass(frozen=True)
class PValueEntry:
    strategy: str
    metric: str
    sweep_value: float | None
    p: float
    method: str
    degenerate: bool


@dataclass(frozen=True)
class Provenance:
    config_hash: str
    master_rng_seed: int
    timestamp: str


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list
    p_values: list
    provenance: Provenance

    def sweep_values(self):
        return self.config.sweep.values if self.config.sweep else (None,)

    def metric_column(self, strategy, metric: str, sweep_value=None) -> np.ndarray:
        """Per-graph metric values for one strategy, ordered by graph index."""
        name = CentralityKind(strategy).value
        rows = [
            r for r in self.records
            if r.strategy == name and r.sweep_value == sweep_value
        ]
        rows.sort(key=lambda r: r.graph_index)
        return np.array([r.metrics[metric] for r in rows], dtype=np.float64)

    def p_value(self, strategy, metric: str, sweep_value=None) -> PValueEntry:
        name = CentralityKind(strategy).value
        for entry in self.p_values:
            if entry.strategy == name and entry.metric == metric and entry.sweep_value == sweep_value:
                return entry
        raise InputError(f"no p-value recorded for ({name}, {metric}, {sweep_value})")

    def mean_advantage(self, strategy, metric: str, sweep_value=None) -> float:
        """Mean per-graph difference (strategy - random baseline)."""
        own = self.metric_column(strategy, metric, sweep_value)
        base = self.metric_column(CentralityKind.RANDOM, metric, sweep_value)
        return float((own - base).mean())


def derive_seed(master: int, stream: int, sweep_index: int, graph_index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master, spawn_key=(stream, sweep_index, graph_index))


def generate_graph(params: GeneratorParams, rng_seed):
    """Dispatch to the matching generator; returns (graph, communities|None)."""
    if isinstance(params, ErParams):
        return gen_er(params, rng_seed), None
    if isinstance(params, GaussianPartitionParams):
        return gen_gaussian_partition(params, rng_seed)
    if isinstance(params, LfrParams):
        return gen_lfr(params, rng_seed)
    raise InputError(f"unknown generator params: {type(params).__name__}")


def _apply_sweep_value(config: ExperimentConfig, parameter: str, value):
    if hasattr(config.generator, parameter):
        gen = dataclasses.replace(config.generator, **{parameter: value})
        return dataclasses.replace(config, generator=gen, sweep=None)
    if hasattr(config.model, parameter):
        model = dataclasses.replace(config.model, **{parameter: value})
        return dataclasses.replace(config, model=model, sweep=None)
    raise InputError(f"sweep parameter {parameter!r} is neither a generator nor a model field")


def _run_one_graph(point: ExperimentConfig, sweep_index: int, graph_index: int, master: int):
    """All strategy runs for one ensemble member (shared graph and false seeds)."""
    try:
        g, _ = generate_graph(
            point.generator, derive_seed(master, _STREAM_GRAPH, sweep_index, graph_index)
        )
    except GenerationError as exc:
        raise GenerationError(f"graph {graph_index}: {exc}") from None
    out = {}
    if point.mode == "single":
        k = point.info_starter
        for strategy in point.strategies:
            if strategy is CentralityKind.RANDOM:
                ic = select_seeds(
                    g, strategy, k,
                    derive_seed(master, _STREAM_RANDOM_STRATEGY, sweep_index, graph_index),
                )
            else:
                ic = select_seeds(g, strategy, k)
            state = run_single_diffusion(g, ic, point.model)
            iterations, sum_p_i = diffusion_metrics(state)
            infected = int(np.count_nonzero(state.labels == Label.INFECTED))
            out[strategy.value] = {
                "iterations": iterations,
                "sum_p_i": sum_p_i,
                "infected": infected,
                "susceptible": g.node_count - infected,
            }
    else:
        rng_false = np.random.default_rng(
            derive_seed(master, _STREAM_FALSE_SEEDS, sweep_index, graph_index)
        )
        ic_f = rng_false.choice(g.node_count, size=point.false_info_starter, replace=False)
        k = point.true_info_starter
        for strategy in point.strategies:
            if strategy is CentralityKind.RANDOM:
                ic_t = select_seeds(
                    g, strategy, k,
                    derive_seed(master, _STREAM_RANDOM_STRATEGY, sweep_index, graph_index),
                )
            else:
                ic_t = select_seeds(g, strategy, k)
            state = run_intervention(g, ic_f, ic_t, point.model)
            sum_p_it, infected, susceptible, protected = intervention_metrics(state)
            out[strategy.value] = {
                "sum_p_it": sum_p_it,
                "infected": infected,
                "susceptible": susceptible,
                "protected": protected,
            }
    return out


def run_experiment(config: ExperimentConfig, threads: int = 1) -> ExperimentResult:
    """Run the battery described by the config.

    Graphs (and, in intervention mode, the random false creators) are shared
    across strategies within each ensemble member, so the per-strategy metric
    columns form paired samples.  With ``threads > 1`` ensemble members run on
    a thread pool; results merge in graph-index order, so the output is
    independent of scheduling.
    """
    if threads < 1:
        raise InputError(f"threads must be >= 1, got {threads}")
    master = config.master_rng_seed
    if config.sweep is None:
        points = [(None, config)]
    else:
        points = [
            (value, _apply_sweep_value(config, config.sweep.parameter, value))
            for value in config.sweep.values
        ]
    sweep_on_generator = config.sweep is not None and hasattr(
        config.generator, config.sweep.parameter
    )

    records = []
    p_values = []
    for point_index, (sweep_value, point) in enumerate(points):
        # a model-parameter sweep reuses one shared ensemble of graphs
        graph_sweep_index = point_index if sweep_on_generator else 0
        indices = range(point.ensemble_size)
        if threads == 1:
            per_graph = [_run_one_graph(point, graph_sweep_index, i, master) for i in indices]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                per_graph = list(
                    pool.map(lambda i: _run_one_graph(point, graph_sweep_index, i, master), indices)
                )
        for strategy in point.strategies:
            for i in indices:
                records.append(
                    MetricRecord(
                        strategy=strategy.value,
                        graph_index=i,
                        sweep_value=sweep_value,
                        metrics=per_graph[i][strategy.value],
                    )
                )
        if CentralityKind.RANDOM in point.strategies:
            tested = _SINGLE_TESTED if point.mode == "single" else _COMBAT_TESTED
            baseline = {
                m: np.array([per_graph[i][CentralityKind.RANDOM.value][m] for i in indices], dtype=np.float64)
                for m in tested
            }
            for strategy in point.strategies:
                if strategy is CentralityKind.RANDOM:
                    continue
                for metric in tested:
                    own = np.array(
                        [per_graph[i][strategy.value][metric] for i in indices], dtype=np.float64
                    )
                    try:
                        res = compare_strategies(
                            PairedSample(x=own, y=baseline[metric]),
                            METRIC_ALTERNATIVE[metric],
                        )
                        entry = PValueEntry(
                            strategy=strategy.value,
                            metric=metric,
                            sweep_value=sweep_value,
                            p=res.p_one_tailed,
                            method=res.method,
                            degenerate=False,
                        )
                    except DegenerateSampleError:
                        entry = PValueEntry(
                            strategy=strategy.value,
                            metric=metric,
                            sweep_value=sweep_value,
                            p=1.0,
                            method="degenerate",
                            degenerate=True,
                        )
                    p_values.append(entry)

    provenance = Provenance(
        config_hash=config_hash(config),
        master_rng_seed=master,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
    return ExperimentResult(config=config, records=records, p_values=p_values, provenance=provenance)


def run_density_sweep(base: ExperimentConfig, density_grid) -> ExperimentResult:
    """One sub-experiment per edge-existence probability."""
    if not isinstance(base.generator, ErParams):
        raise InputError("density sweeps require an Erdős–Rényi generator")
    sweep = SweepSpec(parameter="edge_exist_prob", values=tuple(density_grid))
    return run_experiment(dataclasses.replace(base, sweep=sweep))


def run_variance_sweep(base: ExperimentConfig, shape_grid) -> ExperimentResult:
    """One sub-experiment per community-size shape value (variance = mean/shape)."""
    if not isinstance(base.generator, GaussianPartitionParams):
        raise InputError("variance sweeps require a Gaussian-partition generator")
    sweep = SweepSpec(parameter="shape", values=tuple(shape_grid))
    return run_experiment(dataclasses.replace(base, sweep=sweep))


# -- ensembles and the minimum-seed search -------------------------------------


def build_ensemble(config: ExperimentConfig):
    """The ensemble of (graph, communities) the config's battery runs on."""
    return [
        generate_graph(config.generator, derive_seed(config.master_rng_seed, _STREAM_GRAPH, 0, i))
        for i in range(config.ensemble_size)
    ]


def minimum_seed_battery(config: ExperimentConfig, k_max: int, strategies=None):
    """Minimum true-creator count per strategy for a complete intervention.

    Reuses the config's ensemble and false-creator draws so every strategy
    faces identical conditions.  Returns ``{strategy name: k or None}``.
    """
    if config.mode != "intervention":
        raise InputError("minimum_seed_battery requires an intervention config")
    graphs = [g for g, _ in build_ensemble(config)]
    false_sets = []
    for i, g in enumerate(graphs):
        rng = np.random.default_rng(
            derive_seed(config.master_rng_seed, _STREAM_FALSE_SEEDS, 0, i)
        )
        false_sets.append(rng.choice(g.node_count, size=config.false_info_starter, replace=False))
    out = {}
    for strategy in (strategies or config.strategies):
        strategy = CentralityKind(strategy)
        out[strategy.value] = minimum_true_seeds(
            graphs,
            strategy,
            false_sets,
            config.model,
            k_max,
            rng_seed=config.master_rng_seed,
        )
    return out


# -- presets -------------------------------------------------------------------

_PRESET_SEED = 1729


def apply_scale(config: ExperimentConfig, scale: str) -> ExperimentConfig:
    """Map a paper-scale battery to desk scale (or return it unchanged).

    Desk mapping: node counts shrink 5x (1000 -> 200) and ensembles cap at 30
    graphs; pairwise edge probabilities scale up by the node ratio so the mean
    degree is preserved (ER: p, Gaussian partition: p_out).  Community-level
    parameters and the diffusion model are untouched.
    """
    if scale == "paper":
        return config
    if scale != "desk":
        raise InputError(f"scale must be 'desk' or 'paper', got {scale!r}")
    gen = config.generator
    n_new = max(2, gen.n // 5)
    ratio = gen.n / n_new
    if isinstance(gen, ErParams):
        gen = ErParams(n=n_new, edge_exist_prob=min(1.0, gen.edge_exist_prob * ratio))
    elif isinstance(gen, GaussianPartitionParams):
        gen = dataclasses.replace(gen, n=n_new, p_out=min(1.0, gen.p_out * ratio))
    else:
        gen = dataclasses.replace(gen, n=n_new, min_community=min(gen.min_community, n_new))
    return dataclasses.replace(
        config, generator=gen, ensemble_size=min(config.ensemble_size, 30)
    )


def dense_er_single_preset(scale: str = "desk") -> ExperimentConfig:
    """Dense one-community battery (paper scale: n=1000, p=0.04, 50 graphs)."""
    cfg = ExperimentConfig(
        generator=ErParams(n=1000, edge_exist_prob=0.04),
        ensemble_size=50,
        mode="single",
        strategies=ALL_STRATEGIES,
        model=DiffusionParams(transmission_prob=0.5, threshold=0.5),
        info_starter=3,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


def sparse_er_single_preset(scale: str = "desk") -> ExperimentConfig:
    """Sparse one-community battery (paper scale: n=1000, p=0.0005)."""
    cfg = dataclasses.replace(
        dense_er_single_preset("paper"), generator=ErParams(n=1000, edge_exist_prob=0.0005)
    )
    return apply_scale(cfg, scale)


def gaussian_single_preset(similar: bool = True, scale: str = "desk") -> ExperimentConfig:
    """Multi-community battery; similar sizes (shape 40) or varying (shape 1)."""
    cfg = ExperimentConfig(
        generator=GaussianPartitionParams(
            n=1000, mean_size=40, shape=40 if similar else 1, p_in=0.1, p_out=0.001
        ),
        ensemble_size=50,
        mode="single",
        strategies=ALL_STRATEGIES,
        model=DiffusionParams(transmission_prob=0.5, threshold=0.5),
        info_starter=3,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


def lfr_single_preset(scale: str = "desk") -> ExperimentConfig:
    """LFR benchmark battery (tau1=3, tau2=1.5, mu=0.1, avg degree 5)."""
    cfg = ExperimentConfig(
        generator=LfrParams(
            n=1000, tau1=3.0, tau2=1.5, mu=0.1, average_degree=5.0, min_community=50
        ),
        ensemble_size=50,
        mode="single",
        strategies=ALL_STRATEGIES,
        model=DiffusionParams(transmission_prob=0.5, threshold=0.5),
        info_starter=3,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


def er_intervention_preset(scale: str = "desk") -> ExperimentConfig:
    """Complete-intervention battery (paper scale: n=1000, p=0.03)."""
    cfg = ExperimentConfig(
        generator=ErParams(n=1000, edge_exist_prob=0.03),
        ensemble_size=50,
        mode="intervention",
        strategies=ALL_STRATEGIES,
        model=CombatParams(
            false_transmission_prob=0.5,
            true_transmission_prob=0.4,
            decisive_threshold=0.4,
            comparative_threshold=0.1,
        ),
        false_info_starter=3,
        true_info_starter=10,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


def gaussian_intervention_preset(similar: bool = True, scale: str = "desk") -> ExperimentConfig:
    """Multi-community intervention battery (similar or varying community sizes)."""
    cfg = ExperimentConfig(
        generator=GaussianPartitionParams(
            n=1000, mean_size=40, shape=40 if similar else 1, p_in=0.1, p_out=0.001
        ),
        ensemble_size=50,
        mode="intervention",
        strategies=ALL_STRATEGIES,
        model=CombatParams(
            false_transmission_prob=0.5,
            true_transmission_prob=0.4,
            decisive_threshold=0.4,
            comparative_threshold=0.1,
        ),
        false_info_starter=3,
        true_info_starter=10,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


def lfr_intervention_preset(scale: str = "desk") -> ExperimentConfig:
    """LFR intervention battery (decisive threshold 0.5 on this family)."""
    cfg = ExperimentConfig(
        generator=LfrParams(
            n=1000, tau1=3.0, tau2=1.5, mu=0.1, average_degree=5.0, min_community=50
        ),
        ensemble_size=50,
        mode="intervention",
        strategies=ALL_STRATEGIES,
        model=CombatParams(
            false_transmission_prob=0.5,
            true_transmission_prob=0.4,
            decisive_threshold=0.5,
            comparative_threshold=0.1,
        ),
        false_info_starter=3,
        true_info_starter=10,
        master_rng_seed=_PRESET_SEED,
    )
    return apply_scale(cfg, scale)


# -- serialization ---------------------------------------------------------------

_GENERATOR_TYPES = {
    "er": ErParams,
    "gaussian_partition": GaussianPartitionParams,
    "lfr": LfrParams,
}
_GENERATOR_NAMES = {cls: name for name, cls in _GENERATOR_TYPES.items()}


def config_to_dict(config: ExperimentConfig) -> dict:
    gen = dataclasses.asdict(config.generator)
    gen["type"] = _GENERATOR_NAMES[type(config.generator)]
    out = {
        "generator": gen,
        "ensemble_size": config.ensemble_size,
        "mode": config.mode,
        "strategies": [s.value for s in config.strategies],
        "model": dataclasses.asdict(config.model),
        "master_rng_seed": config.master_rng_seed,
        "info_starter": config.info_starter,
        "false_info_starter": config.false_info_starter,
        "true_info_starter": config.true_info_starter,
        "sweep": (
            {"parameter": config.sweep.parameter, "values": list(config.sweep.values)}
            if config.sweep
            else None
        ),
    }
    return out


def config_from_dict(data: dict) -> ExperimentConfig:
    try:
        gen_data = dict(data["generator"])
        gen_type = gen_data.pop("type")
        if gen_type not in _GENERATOR_TYPES:
            raise InputError(
                f"generator.type must be one of {sorted(_GENERATOR_TYPES)}, got {gen_type!r}"
            )
        generator = _GENERATOR_TYPES[gen_type](**gen_data)
        mode = data["mode"]
        model_cls = DiffusionParams if mode == "single" else CombatParams
        model = model_cls(**data["model"])
        sweep = None
        if data.get("sweep"):
            sweep = SweepSpec(
                parameter=data["sweep"]["parameter"], values=tuple(data["sweep"]["values"])
            )
        return ExperimentConfig(
            generator=generator,
            ensemble_size=data["ensemble_size"],
            mode=mode,
            strategies=tuple(data["strategies"]),
            model=model,
            master_rng_seed=data["master_rng_seed"],
            info_starter=data.get("info_starter", 0),
            false_info_starter=data.get("false_info_starter", 0),
            true_info_starter=data.get("true_info_starter", 0),
            sweep=sweep,
        )
    except KeyError as exc:
        raise InputError(f"experiment config is missing field {exc}") from None
    except TypeError as exc:
        raise InputError(f"malformed experiment config: {exc}") from None


def load_config(path) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such config file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"config file is not valid JSON: {exc}") from None
    return config_from_dict(data)


def config_hash(config: ExperimentConfig) -> str:
    canonical = json.dumps(config_to_dict(config), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _csv_columns(mode: str):
    metrics = _SINGLE_COLUMNS if mode == "single" else _COMBAT_COLUMNS
    return ("strategy", "graph_index", "sweep_value") + metrics


def write_records_csv(result: ExperimentResult, stream) -> None:
    columns = _csv_columns(result.config.mode)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for rec in result.records:
        row = [rec.strategy, rec.graph_index, "" if rec.sweep_value is None else repr(rec.sweep_value)]
        row.extend(rec.metrics[m] for m in columns[3:])
        writer.writerow(row)


def result_to_dict(result: ExperimentResult) -> dict:
    return {
        "config": config_to_dict(result.config),
        "provenance": dataclasses.asdict(result.provenance),
        "records": [dataclasses.asdict(r) for r in result.records],
        "p_values": [dataclasses.asdict(p) for p in result.p_values],
    }


def export_results(result: ExperimentResult, path, format: str = "csv") -> None:
    """Write the battery output; CSV carries the records, JSON everything."""
    if format == "csv":
        with open(path, "w", encoding="ascii", newline="") as fh:
            write_records_csv(result, fh)
    elif format == "json":
        with open(path, "w", encoding="ascii") as fh:
            json.dump(result_to_dict(result), fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        raise InputError(f"format must be 'csv' or 'json', got {format!r}")


def records_to_csv_text(result: ExperimentResult) -> str:
    buf = io.StringIO()
    write_records_csv(result, buf)
    return buf.getvalue()


def _parse_sweep_cell(cell: str):
    return None if cell == "" else float(cell)


def read_records(path, format: str = "csv"):
    """Re-import exported records (CSV or JSON) as MetricRecord lists."""
    if format == "csv":
        with open(path, "r", encoding="ascii", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            metric_names = header[3:]
            records = []
            for row in reader:
                metrics = {}
                for name, cell in zip(metric_names, row[3:]):
                    value = float(cell)
                    metrics[name] = int(value) if name in ("iterations", "infected", "susceptible", "protected") else value
                records.append(
                    MetricRecord(
                        strategy=row[0],
                        graph_index=int(row[1]),
                        sweep_value=_parse_sweep_cell(row[2]),
                        metrics=metrics,
                    )
                )
            return records
    if format == "json":
        with open(path, "r", encoding="ascii") as fh:
            data = json.load(fh)
        return [
            MetricRecord(
                strategy=r["strategy"],
                graph_index=r["graph_index"],
                sweep_value=r["sweep_value"],
                metrics=r["metrics"],
            )
            for r in data["records"]
        ]
    raise InputError(f"format must be 'csv' or 'json', got {format!r}")
