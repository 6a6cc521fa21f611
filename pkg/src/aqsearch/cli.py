"""Command-line driver: experiment configuration from JSON plus flag overrides,
CSV emission (spectra, entanglement traces, initial-state sweeps, runtime
scaling, iteration cross-checks, full propagation runs).

CSV contract: UTF-8, LF line endings, a header row, floats in 15-significant-
digit scientific notation, '#'-prefixed summary lines after the data rows.
Exit codes: 0 success, 2 configuration error, 3 numerical-contract violation.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields

import numpy as np

from .entanglement import entanglement_trace, entropy_of_entanglement
from .evolution import default_steps, ground_state_trace, propagate
from .exceptions import ConfigError, NumericalContractError
from .grover import grover_search, optimal_iterations
from .hamiltonian import (
    AdiabaticCriterion,
    Schedule,
    SearchProblem,
    _gap_and_matrix_element,
    _lowest_two,
    action_integral,
    adiabatic_t_min,
    hamiltonian_at,
    local_schedule,
    min_gap,
    spectrum_trace,
)
from .linalg import QState
from .refine import refine_maximum

NORM_WARN_TOL = 1e-6
OVERLAP_SKIP_TOL = 1e-12
# cap on recorded propagation rows; steps between records grow with T
MAX_EVOLVE_ROWS = 4096


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: problem, schedule, accuracy, grids, and output target."""

    n: int = 2
    marked: int = 0
    schedule: str = "linear"
    epsilon: float = 0.1
    grid_points: int = 1024
    T: float | None = None
    initial: object = "uniform"
    sweep_resolution: int = 9
    out: str | None = None


@dataclass(frozen=True)
class SweepResult:
    """Entanglement and runtime figures for one initial state of the sweep family."""

    amplitudes: tuple[float, float, float, float]
    initial_entropy: float
    max_entropy: float
    s_of_max: float
    final_entropy: float
    g_min: float
    s_of_gmin: float
    t_min: float
    monotone_decreasing: bool

    def __post_init__(self) -> None:
        if self.max_entropy < max(self.initial_entropy, self.final_entropy) - 1e-12:
            raise ValueError("max_entropy below an endpoint entropy")


_CONFIG_KEYS = tuple(f.name for f in fields(ExperimentConfig))


def load_config_file(path: str) -> dict:
    """Flat JSON object mirroring ExperimentConfig; unknown keys are an error."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = sorted(set(data) - set(_CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return data


def validate_config(config: ExperimentConfig) -> None:
    if not isinstance(config.n, int) or config.n < 1:
        raise ConfigError("n must be a positive integer")
    if not isinstance(config.marked, int) or not 0 <= config.marked < 2**config.n:
        raise ConfigError("marked must be an integer in [0, 2^n)")
    if config.schedule not in ("linear", "local"):
        raise ConfigError("schedule must be 'linear' or 'local'")
    if not isinstance(config.epsilon, (int, float)) or not 0 < config.epsilon < 1:
        raise ConfigError("epsilon must lie in (0, 1)")
    if not isinstance(config.grid_points, int) or config.grid_points < 64:
        raise ConfigError("grid_points must be an integer >= 64")
    if config.T is not None and (not isinstance(config.T, (int, float)) or config.T <= 0):
        raise ConfigError("T must be positive when given")
    if not isinstance(config.sweep_resolution, int) or config.sweep_resolution < 3:
        raise ConfigError("sweep_resolution must be an integer >= 3")


def _amplitudes_from_list(values: list) -> np.ndarray:
    amps = []
    for item in values:
        if isinstance(item, bool):
            raise ConfigError("amplitude entries must be numbers or [re, im] pairs")
        if isinstance(item, (int, float)):
            amps.append(complex(item))
        elif isinstance(item, (list, tuple)) and len(item) == 2:
            try:
                amps.append(complex(float(item[0]), float(item[1])))
            except (TypeError, ValueError):
                raise ConfigError("amplitude pairs must hold two numbers") from None
        else:
            raise ConfigError("amplitude entries must be numbers or [re, im] pairs")
    return np.asarray(amps, dtype=complex)


def _state_from_values(values: list, n: int) -> QState:
    amps = _amplitudes_from_list(values)
    if amps.shape[0] != 2**n:
        raise ConfigError(f"initial state needs {2**n} amplitudes, got {amps.shape[0]}")
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise ConfigError("initial state has zero norm")
    if abs(norm - 1.0) > NORM_WARN_TOL:
        print(f"warning: normalizing initial state (norm was {norm!r})", file=sys.stderr)
    return QState(n, amps / norm)


def parse_initial(spec: object, n: int) -> QState | None:
    """uniform -> None (problem default); bell; file:<path> or inline amplitude list."""
    if spec is None or spec == "uniform":
        return None
    if spec == "bell":
        if n != 2:
            raise ConfigError("the bell initial state needs n = 2")
        return QState.bell()
    if isinstance(spec, str) and spec.startswith("file:"):
        path = spec[len("file:"):]
        try:
            with open(path, encoding="utf-8") as fh:
                values = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read initial-state file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"initial-state file is not valid JSON: {exc}") from None
        if not isinstance(values, list):
            raise ConfigError("initial-state file must hold a JSON array")
        return _state_from_values(values, n)
    if isinstance(spec, (list, tuple)):
        return _state_from_values(list(spec), n)
    raise ConfigError(f"unrecognized initial-state spec {spec!r}")


def build_problem(config: ExperimentConfig) -> SearchProblem:
    initial = parse_initial(config.initial, config.n)
    try:
        return SearchProblem(n=config.n, marked=config.marked, initial=initial)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def build_criterion(config: ExperimentConfig) -> AdiabaticCriterion:
    return AdiabaticCriterion(epsilon=float(config.epsilon), grid_points=config.grid_points)


def build_schedule(problem: SearchProblem, config: ExperimentConfig,
                   crit: AdiabaticCriterion) -> Schedule:
    if config.schedule == "linear":
        return Schedule.linear()
    return local_schedule(problem, crit)


def _format_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "{:.14e}".format(float(value) + 0.0)


def write_csv(header: list[str], rows: list[list], summary: list[str],
              out: str | None) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_format_value(v) for v in row) for row in rows)
    lines.extend(f"# {line}" for line in summary)
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output file: {exc}") from None


def _summary(name: str, value) -> str:
    return f"{name} = {_format_value(value)}"


def cmd_spectrum(config: ExperimentConfig) -> int:
    """CSV of s, all energies, gap, matrix element; summary with g_min, s*, T_min."""
    problem = build_problem(config)
    crit = build_criterion(config)
    schedule = build_schedule(problem, config, crit)
    trace = spectrum_trace(problem, schedule, config.grid_points)

    header = ["s"] + [f"E{i}" for i in range(problem.dim)] + ["gap", "matrix_element"]
    rows = [[p.s, *(float(e) for e in p.energies), p.gap, p.matrix_element] for p in trace]

    def gap_at(s: float) -> float:
        return _gap_and_matrix_element(problem, schedule, s)[0]

    s_star, g_min = min_gap(trace, gap_fn=gap_at)
    t_min = adiabatic_t_min(problem, schedule, crit)
    summary = [
        _summary("g_min", g_min),
        _summary("s_star", s_star),
        _summary("t_min", t_min),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def _refined_entropy_max(problem: SearchProblem, schedule: Schedule,
                         svals: np.ndarray, entropies: np.ndarray) -> tuple[float, float]:
    """Grid argmax refined off-grid against the instantaneous-ground-state entropy."""

    def entropy_at(s: float) -> float:
        h = hamiltonian_at(problem, schedule, s)
        v0 = _lowest_two(h.entries)[2]
        return entropy_of_entanglement(QState(problem.n, v0), (0,))

    k = int(np.argmax(entropies))
    lo = float(svals[max(k - 1, 0)])
    hi = float(svals[min(k + 1, len(svals) - 1)])
    s_of_max, max_entropy = refine_maximum(entropy_at, lo, hi)
    if entropies[k] >= max_entropy:
        return float(svals[k]), float(entropies[k])
    return s_of_max, max_entropy


def cmd_entanglement(config: ExperimentConfig) -> int:
    """Instantaneous-ground-state entanglement trace.

    n = 2 emits concurrence and reduced eigenvalues; larger n emits the entropy
    of qubit 0 only.
    """
    problem = build_problem(config)
    crit = build_criterion(config)
    schedule = build_schedule(problem, config, crit)
    trace = ground_state_trace(problem, schedule, config.grid_points)
    svals = np.array([sample.s for sample in trace.samples])

    if config.n == 2:
        points = entanglement_trace(trace)
        header = ["s", "concurrence", "entropy", "mu_plus", "mu_minus", "fidelity_marked"]
        rows = [
            [pt.s, pt.concurrence, pt.entropy, pt.mu_plus, pt.mu_minus, sample.fidelity_marked]
            for pt, sample in zip(points, trace.samples)
        ]
        entropies = np.array([pt.entropy for pt in points])
    else:
        header = ["s", "entropy", "fidelity_marked"]
        entropies = np.array([
            entropy_of_entanglement(sample.state, (0,)) for sample in trace.samples
        ])
        rows = [
            [sample.s, float(ent), sample.fidelity_marked]
            for sample, ent in zip(trace.samples, entropies)
        ]

    s_of_max, max_entropy = _refined_entropy_max(problem, schedule, svals, entropies)
    summary = [
        _summary("entropy_initial", float(entropies[0])),
        _summary("entropy_final", float(entropies[-1])),
        _summary("entropy_max", max_entropy),
        _summary("s_of_entropy_max", s_of_max),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def sweep_states(resolution: int) -> list[np.ndarray]:
    """Real-amplitude family (c0, c1 = c2, c3) on the unit sphere.

    Polar angle alpha in [0, pi/2] (resolution nodes) sets the weight split
    between the symmetric pair and the outer amplitudes; azimuth beta divides
    the full circle into 4*(resolution - 1) steps. Odd resolutions place the
    uniform state on the grid.
    """
    states = []
    for alpha in np.linspace(0.0, math.pi / 2, resolution):
        pair = math.cos(alpha) / math.sqrt(2.0)
        for beta in np.linspace(0.0, 2 * math.pi, 4 * (resolution - 1), endpoint=False):
            c0 = math.sin(alpha) * math.cos(beta)
            c3 = math.sin(alpha) * math.sin(beta)
            states.append(np.array([c0, pair, pair, c3], dtype=complex))
    return states


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    if x.size < 2:
        return float("nan")
    dx = x - x.mean()
    dy = y - y.mean()
    denom = math.sqrt(float(np.sum(dx * dx)) * float(np.sum(dy * dy)))
    if denom == 0.0:
        return float("nan")
    return float(np.sum(dx * dy) / denom)


def sweep_state_result(config: ExperimentConfig, amplitudes: np.ndarray) -> SweepResult:
    problem = SearchProblem(n=2, marked=config.marked,
                            initial=QState(2, amplitudes / np.linalg.norm(amplitudes)))
    crit = build_criterion(config)
    schedule = build_schedule(problem, config, crit)
    trace = ground_state_trace(problem, schedule, config.grid_points)
    points = entanglement_trace(trace)
    svals = np.array([pt.s for pt in points])
    entropies = np.array([pt.entropy for pt in points])

    s_of_max, max_entropy = _refined_entropy_max(problem, schedule, svals, entropies)

    def gap_at(s: float) -> float:
        return _gap_and_matrix_element(problem, schedule, s)[0]

    spect = spectrum_trace(problem, schedule, config.grid_points)
    s_of_gmin, g_min = min_gap(spect, gap_fn=gap_at)
    t_min = adiabatic_t_min(problem, schedule, crit)

    return SweepResult(
        amplitudes=tuple(float(c.real) for c in amplitudes),
        initial_entropy=float(entropies[0]),
        max_entropy=max_entropy,
        s_of_max=s_of_max,
        final_entropy=float(entropies[-1]),
        g_min=g_min,
        s_of_gmin=s_of_gmin,
        t_min=t_min,
        monotone_decreasing=bool(np.all(np.diff(entropies) <= 1e-12)),
    )


def cmd_sweep(config: ExperimentConfig) -> int:
    """One row per initial state of the real symmetric family; correlation report."""
    if config.n != 2:
        raise ConfigError("the initial-state sweep needs n = 2")
    states = sweep_states(config.sweep_resolution)

    results = []
    skipped = 0
    for amplitudes in states:
        if abs(amplitudes[config.marked]) < OVERLAP_SKIP_TOL:
            skipped += 1
            continue
        results.append(sweep_state_result(config, amplitudes))

    header = ["c0", "c1", "c2", "c3", "initial_entropy", "max_entropy", "s_of_max",
              "final_entropy", "g_min", "s_of_gmin", "t_min", "monotone_decreasing"]
    rows = [
        [*r.amplitudes, r.initial_entropy, r.max_entropy, r.s_of_max, r.final_entropy,
         r.g_min, r.s_of_gmin, r.t_min, r.monotone_decreasing]
        for r in results
    ]
    initial_entropies = np.array([r.initial_entropy for r in results])
    summary = [
        _summary("states_total", len(states)),
        _summary("states_skipped_zero_overlap", skipped),
        _summary("corr_initial_entropy_g_min",
                 _pearson(initial_entropies, np.array([r.g_min for r in results]))),
        _summary("corr_initial_entropy_t_min",
                 _pearson(initial_entropies, np.array([r.t_min for r in results]))),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def cmd_scaling(config: ExperimentConfig, n_min: int, n_max: int) -> int:
    """Runtimes, iteration counts, and action ratios per size; fitted exponents."""
    if not 2 <= n_min <= n_max <= 10:
        raise ConfigError("need 2 <= n_min <= n_max <= 10")
    crit = build_criterion(config)

    header = ["n", "N", "t_min_linear", "t_min_local", "k0", "action", "action_ratio"]
    rows = []
    t_linear, t_local, sizes = [], [], []
    for n in range(n_min, n_max + 1):
        if not 0 <= config.marked < 2**n:
            raise ConfigError("marked must be an integer in [0, 2^n) for every swept n")
        problem = SearchProblem(n=n, marked=config.marked)
        t_lin = adiabatic_t_min(problem, Schedule.linear(), crit)
        local = local_schedule(problem, crit)
        t_loc = float(local.total_time)
        action = action_integral(local, t_loc)
        ratio = action / (math.sqrt(2**n) / 4.0)
        rows.append([n, 2**n, t_lin, t_loc, optimal_iterations(2**n), action, ratio])
        sizes.append(2**n)
        t_linear.append(t_lin)
        t_local.append(t_loc)

    log_n = np.log(np.array(sizes, dtype=float))
    summary = [
        _summary("slope_linear", float(np.polyfit(log_n, np.log(t_linear), 1)[0])),
        _summary("slope_local", float(np.polyfit(log_n, np.log(t_local), 1)[0])),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def cmd_grover(config: ExperimentConfig, k_max: int | None) -> int:
    """Success probability per iteration count; summary with k0 and P(k0)."""
    problem = build_problem(config)
    k0 = optimal_iterations(problem.dim)
    if k_max is None:
        k_max = 2 * k0 + 1
    if k_max < 1:
        raise ConfigError("k_max must be >= 1")
    run = grover_search(problem, k_max)

    header = ["k", "success_probability"]
    rows = [[k, prob] for k, prob in run.iterations]
    summary = [
        _summary("k0", k0),
        _summary("p_k0", run.iterations[k0][1] if k0 <= k_max else float("nan")),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def cmd_evolve(config: ExperimentConfig) -> int:
    """Full propagation; per-row fidelities and norm drift, final-fidelity summary."""
    problem = build_problem(config)
    crit = build_criterion(config)
    schedule = build_schedule(problem, config, crit)
    if config.T is not None:
        T = float(config.T)
    elif schedule.kind == "linear":
        T = 10.0 * adiabatic_t_min(problem, schedule, crit)
    else:
        T = 10.0 * float(schedule.total_time)

    steps = default_steps(T)
    record_every = max(1, -(-steps // MAX_EVOLVE_ROWS))
    trace = propagate(problem, schedule, T, steps=steps, record_every=record_every)

    header = ["s", "fidelity_ground", "fidelity_marked", "norm_drift"]
    rows = [
        [sample.s, sample.fidelity_ground, sample.fidelity_marked, sample.norm_drift]
        for sample in trace.samples
    ]
    final = trace.samples[-1]
    summary = [
        _summary("T", T),
        _summary("steps", steps),
        _summary("final_fidelity_marked", final.fidelity_marked),
        _summary("adiabatic_target", 1.0 - float(config.epsilon) ** 2),
    ]
    write_csv(header, rows, summary, config.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="JSON",
                        help="JSON config file; explicit flags override its fields")
    common.add_argument("--n", type=int, help="qubit count")
    common.add_argument("--marked", type=int, help="marked basis index (default 0)")
    common.add_argument("--schedule", choices=["linear", "local"],
                        help="interpolation schedule (default linear)")
    common.add_argument("--epsilon", type=float,
                        help="adiabatic accuracy parameter (default 0.1)")
    common.add_argument("--grid", type=int, dest="grid_points",
                        help="evaluation grid points (default 1024)")
    common.add_argument("--T", type=float, dest="T",
                        help="total evolution time (default 10 * T_min)")
    common.add_argument("--initial",
                        help="initial state: uniform, bell, or file:<path> "
                             "(JSON array of numbers or [re, im] pairs)")
    common.add_argument("--out", metavar="PATH", help="output CSV path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="aqsearch",
        description="Adiabatic quantum search experiments: spectra, entanglement, "
                    "runtime scaling, and propagation, emitted as CSV.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common],
                   help="instantaneous energies, gap, and matrix element over s")
    sub.add_parser("entanglement", parents=[common],
                   help="ground-state concurrence and entropy over s")
    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="entanglement and runtime across a grid of initial states")
    p_sweep.add_argument("--resolution", type=int,
                         help="polar nodes of the initial-state grid (default 9)")
    p_scaling = sub.add_parser("scaling", parents=[common],
                               help="runtimes and action ratios across problem sizes")
    p_scaling.add_argument("--n-min", type=int, default=2, help="smallest qubit count")
    p_scaling.add_argument("--n-max", type=int, default=10, help="largest qubit count")
    p_grover = sub.add_parser("grover", parents=[common],
                              help="discrete-iteration success probabilities")
    p_grover.add_argument("--k-max", type=int,
                          help="iterations to record (default 2 * k0 + 1)")
    sub.add_parser("evolve", parents=[common],
                   help="integrate the time-dependent dynamics and track fidelities")
    return parser


def merge_config(args: argparse.Namespace) -> ExperimentConfig:
    """Defaults, then config-file fields, then explicitly passed flags."""
    data = load_config_file(args.config) if args.config is not None else {}
    overrides = {
        "n": args.n,
        "marked": args.marked,
        "schedule": args.schedule,
        "epsilon": args.epsilon,
        "grid_points": args.grid_points,
        "T": args.T,
        "initial": args.initial,
        "sweep_resolution": getattr(args, "resolution", None),
        "out": args.out,
    }
    for key, value in overrides.items():
        if value is not None:
            data[key] = value
    config = ExperimentConfig(**data)
    validate_config(config)
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = merge_config(args)
        if args.command == "spectrum":
            return cmd_spectrum(config)
        if args.command == "entanglement":
            return cmd_entanglement(config)
        if args.command == "sweep":
            return cmd_sweep(config)
        if args.command == "scaling":
            return cmd_scaling(config, args.n_min, args.n_max)
        if args.command == "grover":
            return cmd_grover(config, args.k_max)
        return cmd_evolve(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
