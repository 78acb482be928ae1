"""Command-line front end: sweeps, temperature scans, invariant suites.

Subcommands
-----------
``sweep``
    Exact (noise-free) table of entropy production, geometric bounds and
    geodesic lengths along a thermalization trajectory.
``asymptotic``
    Long-time entropy production and its Wigner-Yanase lower bound as a
    function of bath temperature, for a set of named initial states.
``experiment``
    Simulated photonic run: evolve through the two-qubit circuit, draw
    tomography counts, reconstruct, and report the same quantities as
    ``sweep`` together with bootstrap error columns.
``verify``
    Run the invariant suites and print one machine-readable line per
    check: ``name max_violation threshold verdict``.

Trajectory CSVs share a fixed header::

    time, eta, ds_irr, upper_qf, upper_wy, lower_qf, lower_wy,
    relent_to_eq, l_qf_init, l_wy_init, l_qf_eq, l_wy_eq

``experiment`` appends a ``<column>_sigma`` twin for every column after
``eta``.  Floats are printed with 12 significant digits; the terminal
``eta = 1`` sentinel row carries ``time = inf``.  Outputs are
byte-deterministic for a fixed configuration and seed.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .channels import (
    BathParams,
    DampingSchedule,
    ad_channel,
    apply,
    bath_from_temperature,
    choi_distance,
    gad_channel,
    gad_family,
    gibbs_state,
    iad_channel,
    qubit_hamiltonian,
)
from .errors import (
    GadBoundsError,
    InvalidGrid,
    IOFailure,
    NonPositiveTemperature,
    TooFewResamples,
    ZeroShots,
)
from .geometry import (
    MetricKind,
    bounds_report,
    geodesic_length,
    lower_bound,
    mixing_triangle_proof_check,
    relent_geometric_lower,
    triangle_slack,
    upper_bound,
)
from .photonic import (
    damping_from_process,
    gad_from_circuit,
    monte_carlo_errors,
    reconstruct_state,
    simulate_counts,
)
from .qmat import DensityMatrix, bloch_to_rho
from .thermo import delta_s_irr_relent, delta_s_irr_thermo, relative_entropy

NAMED_STATES = {
    "H": (0.0, 0.0, 1.0),
    "V": (0.0, 0.0, -1.0),
    "D": (1.0, 0.0, 0.0),
}

BASE_COLUMNS = (
    "time",
    "eta",
    "ds_irr",
    "upper_qf",
    "upper_wy",
    "lower_qf",
    "lower_wy",
    "relent_to_eq",
    "l_qf_init",
    "l_wy_init",
    "l_qf_eq",
    "l_wy_eq",
)
SIGMA_COLUMNS = tuple(f"{name}_sigma" for name in BASE_COLUMNS[2:])
ASYMPTOTIC_COLUMNS = ("temperature", "state", "ds_irr_inf", "lower_wy_inf")

# CSV column -> BoundsReport attribute
_REPORT_ATTRS = {
    "time": "time",
    "eta": "eta",
    "ds_irr": "ds_irr",
    "upper_qf": "upper_qf",
    "upper_wy": "upper_wy",
    "lower_qf": "lower_qf",
    "lower_wy": "lower_wy",
    "relent_to_eq": "rel_ent_to_eq",
    "l_qf_init": "l_qf_from_init",
    "l_wy_init": "l_wy_from_init",
    "l_qf_eq": "l_qf_to_eq",
    "l_wy_eq": "l_wy_to_eq",
}


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class SweepConfig:
    """Knobs shared by the sweep and experiment commands.

    ``initial_state`` is a Bloch triple (named states are resolved before
    construction); ``time_grid`` must be non-empty, non-negative and
    strictly increasing (``inf`` is allowed as a final sentinel).
    ``shots``/``resamples``/``seed`` only matter for the experiment path.
    """

    temperature: float
    initial_state: tuple[float, float, float]
    time_grid: tuple[float, ...]
    shots: Optional[int] = None
    resamples: int = 100
    seed: int = 0
    output_path: str = "out.csv"

    def __post_init__(self):
        if not (self.temperature > 0.0) or math.isinf(self.temperature):
            raise NonPositiveTemperature(
                f"temperature {self.temperature!r} must be positive and finite"
            )
        grid = tuple(float(t) for t in self.time_grid)
        object.__setattr__(self, "time_grid", grid)
        if not grid:
            raise InvalidGrid("time grid must not be empty")
        if any(math.isnan(t) or t < 0.0 for t in grid):
            raise InvalidGrid(f"time grid entries must be >= 0, got {grid!r}")
        for earlier, later in zip(grid, grid[1:]):
            if not later > earlier:
                raise InvalidGrid(
                    f"time grid must be strictly increasing, got {earlier!r} "
                    f"followed by {later!r}"
                )
        if self.shots is not None and int(self.shots) < 1:
            raise ZeroShots(f"shots {self.shots!r} must be >= 1")
        if int(self.resamples) < 2:
            raise TooFewResamples(f"resamples {self.resamples!r} must be >= 2")


def parse_state(text: str) -> tuple[float, float, float]:
    """Resolve ``H``/``V``/``D`` or an explicit ``x,y,z`` Bloch triple."""
    key = text.strip().upper()
    if key in NAMED_STATES:
        return NAMED_STATES[key]
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(
            f"state must be one of H, V, D or an 'x,y,z' triple, got {text!r}"
        )
    return (float(parts[0]), float(parts[1]), float(parts[2]))


def default_time_grid(bath: BathParams) -> tuple[float, ...]:
    """Twenty points uniform in damping over [0, 0.95] plus the eta = 1
    (infinite-time) sentinel."""
    etas = list(np.linspace(0.0, 0.95, 20)) + [1.0]
    return tuple(DampingSchedule.from_eta(bath, eta).time for eta in etas)


# ---------------------------------------------------------------------------
# CSV emission


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    return format(float(value), ".12g")


def _write_csv(path: str, header: Sequence[str], rows) -> None:
    try:
        with open(path, "w", encoding="ascii", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(value) for value in row])
    except OSError as exc:
        raise IOFailure(f"cannot write {path!r}: {exc}") from exc


def _report_row(report) -> list:
    return [getattr(report, _REPORT_ATTRS[name]) for name in BASE_COLUMNS]


# ---------------------------------------------------------------------------
# sweep


def sweep_rows(cfg: SweepConfig):
    """Exact per-time-point reports for the configured trajectory.

    Rows are independent of one another; they are emitted in grid order.
    """
    bath = bath_from_temperature(cfg.temperature)
    rho0 = bloch_to_rho(cfg.initial_state)
    rho_eq = gibbs_state(bath)
    rows = []
    for time in cfg.time_grid:
        schedule = DampingSchedule.from_time(bath, time)
        rho_t = apply(gad_channel(bath, schedule.eta), rho0)
        rows.append(
            bounds_report(rho0, rho_t, rho_eq, time=schedule.time, eta=schedule.eta)
        )
    return rows


def cmd_sweep(cfg: SweepConfig) -> None:
    """Write the exact trajectory table as CSV."""
    _write_csv(
        cfg.output_path, BASE_COLUMNS, (_report_row(r) for r in sweep_rows(cfg))
    )


# ---------------------------------------------------------------------------
# asymptotic


def asymptotic_rows(temperatures: Sequence[float], states: Sequence[str]):
    """(temperature, state, entropy produced by full thermalization, its
    Wigner-Yanase lower bound) for every combination, in scan order."""
    rows = []
    for temperature in temperatures:
        bath = bath_from_temperature(temperature)
        rho_eq = gibbs_state(bath)
        for name in states:
            rho0 = bloch_to_rho(NAMED_STATES[name])
            rows.append(
                (
                    temperature,
                    name,
                    relative_entropy(rho0, rho_eq),
                    relent_geometric_lower(MetricKind.WY, rho0, rho_eq),
                )
            )
    return rows


def cmd_asymptotic(
    temperatures: Sequence[float], states: Sequence[str], output_path: str
) -> None:
    """Write the temperature scan as CSV."""
    _write_csv(output_path, ASYMPTOTIC_COLUMNS, asymptotic_rows(temperatures, states))


# ---------------------------------------------------------------------------
# experiment


def _functionals(rho0, rho_eq, time, eta) -> Callable[[DensityMatrix], dict]:
    def compute(rho: DensityMatrix) -> dict:
        report = bounds_report(rho0, rho, rho_eq, time=time, eta=eta)
        return {
            name: getattr(report, _REPORT_ATTRS[name]) for name in BASE_COLUMNS[2:]
        }

    return compute


def experiment_rows(cfg: SweepConfig):
    """Simulated-experiment reports plus bootstrap sigmas, in grid order.

    Each grid point prepares the circuit at the waveplate angle realizing
    its damping, draws tomography counts, reconstructs the state, and
    evaluates every trajectory functional on the reconstruction; sigmas
    come from the parametric bootstrap.  Per-point random streams are
    drawn from a master stream up front, so rows could be computed in any
    order (or in parallel) without changing the output.
    """
    if cfg.shots is None:
        raise ZeroShots("experiment requires a shot count")
    bath = bath_from_temperature(cfg.temperature)
    rho0 = bloch_to_rho(cfg.initial_state)
    rho_eq = gibbs_state(bath)
    point_seeds = []
    master = np.random.default_rng(cfg.seed)
    for _ in cfg.time_grid:
        point_seeds.append(
            (int(master.integers(1 << 62)), int(master.integers(1 << 62)))
        )
    rows = []
    for time, (count_seed, boot_seed) in zip(cfg.time_grid, point_seeds):
        schedule = DampingSchedule.from_time(bath, time)
        theta = math.asin(math.sqrt(schedule.eta)) / 4.0
        truth = apply(gad_from_circuit(theta, bath), rho0)
        counts = simulate_counts(truth, cfg.shots, count_seed)
        estimate = reconstruct_state(counts)
        report = bounds_report(
            rho0, estimate, rho_eq, time=schedule.time, eta=schedule.eta
        )
        _, sigma = monte_carlo_errors(
            counts,
            cfg.resamples,
            boot_seed,
            derived=_functionals(rho0, rho_eq, schedule.time, schedule.eta),
        )
        rows.append((report, sigma))
    return rows


def cmd_experiment(cfg: SweepConfig) -> None:
    """Write the noisy trajectory table (with sigma columns) as CSV."""
    out = []
    for report, sigma in experiment_rows(cfg):
        out.append(
            _report_row(report) + [sigma[name] for name in BASE_COLUMNS[2:]]
        )
    _write_csv(cfg.output_path, BASE_COLUMNS + SIGMA_COLUMNS, out)


# ---------------------------------------------------------------------------
# verification suites


@dataclass(frozen=True)
class CheckResult:
    """One verification line: worst violation seen vs. allowed threshold.

    ``violation`` may be negative, meaning the check passed with margin.
    """

    name: str
    violation: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.violation <= self.threshold


_SUITE_TEMPERATURES = (0.1, 0.34, 0.5, 1.0, 5.0)


def _named_state(name: str) -> DensityMatrix:
    return bloch_to_rho(NAMED_STATES[name])


def _random_density(rng) -> DensityMatrix:
    sample = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    wishart = sample @ sample.conj().T
    return DensityMatrix(wishart / np.trace(wishart).real)


def _suite_cptp():
    worst = 0.0
    eye = np.eye(2)
    for temperature in _SUITE_TEMPERATURES:
        bath = bath_from_temperature(temperature)
        for eta in np.linspace(0.0, 1.0, 21):
            for channel in (gad_channel(bath, eta), ad_channel(eta), iad_channel(eta)):
                acc = sum(k.conj().T @ k for k in channel.kraus_ops)
                worst = max(worst, float(np.max(np.abs(acc - eye))))
    return [CheckResult("cptp.completeness", worst, 1e-10)]


def _suite_fixed_point():
    worst = 0.0
    for temperature in _SUITE_TEMPERATURES:
        bath = bath_from_temperature(temperature)
        rho_eq = gibbs_state(bath)
        for eta in np.linspace(0.0, 1.0, 21):
            out = apply(gad_channel(bath, eta), rho_eq)
            worst = max(worst, float(np.max(np.abs(out.mat - rho_eq.mat))))
    return [CheckResult("fixed_point.gibbs_invariance", worst, 1e-10)]


def _suite_triangle():
    min_slack = math.inf
    for temperature in _SUITE_TEMPERATURES:
        bath = bath_from_temperature(temperature)
        family = gad_family(bath)
        times = [
            DampingSchedule.from_eta(bath, eta).time
            for eta in np.linspace(0.0, 0.95, 20)
        ]
        for name in ("H", "V", "D"):
            rho0 = _named_state(name)
            for i, t1 in enumerate(times):
                for t2 in times[i:]:
                    min_slack = min(min_slack, triangle_slack(family, rho0, t1, t2))
    min_proof = math.inf
    lambdas = np.linspace(0.1, 1.0, 8)
    probes = [_named_state(n) for n in ("H", "V", "D")]
    probes += [bloch_to_rho((0.5, 0.3, -0.2)), bloch_to_rho((0.0, -0.6, 0.4))]
    for temperature in (0.34, 1.0):
        rho_eq = gibbs_state(bath_from_temperature(temperature))
        for rho0 in probes:
            for i, lam1 in enumerate(lambdas):
                for lam2 in lambdas[i:]:
                    slack_a, slack_b = mixing_triangle_proof_check(
                        rho0, rho_eq, lam1, lam2
                    )
                    min_proof = min(min_proof, slack_a, slack_b)
    return [
        CheckResult("triangle.trajectory_slack", -min_slack, 1e-9),
        CheckResult("triangle.mixing_proof_slack", -min_proof, 1e-9),
    ]


def _suite_metric_order():
    rng = np.random.default_rng(11)
    worst_order = -math.inf
    for _ in range(1000):
        rho = _random_density(rng)
        sigma = _random_density(rng)
        worst_order = max(
            worst_order,
            geodesic_length(MetricKind.QF, rho, sigma)
            - geodesic_length(MetricKind.WY, rho, sigma),
        )
    worst_commuting = 0.0
    for _ in range(200):
        rho = _random_density(rng)
        basis = rho.eigen.eigenvectors
        probs = rng.dirichlet((1.0, 1.0))
        sigma = DensityMatrix(basis @ np.diag(probs) @ basis.conj().T)
        worst_commuting = max(
            worst_commuting,
            abs(
                geodesic_length(MetricKind.WY, rho, sigma)
                - geodesic_length(MetricKind.QF, rho, sigma)
            ),
        )
    return [
        CheckResult("metric_order.wy_dominates_qf", worst_order, 1e-10),
        CheckResult("metric_order.commuting_coincide", worst_commuting, 1e-10),
    ]


def _suite_sandwich():
    rng = np.random.default_rng(13)
    states = []
    for index in range(100):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        radius = 1.0 if index % 2 == 0 else float(rng.uniform(0.0, 1.0))
        states.append(bloch_to_rho(tuple(radius * direction)))
    min_lower = math.inf
    min_gap_low = math.inf
    min_gap_up = math.inf
    etas = np.linspace(0.0, 0.95, 20)
    for temperature in _SUITE_TEMPERATURES:
        bath = bath_from_temperature(temperature)
        rho_eq = gibbs_state(bath)
        channels = [gad_channel(bath, eta) for eta in etas]
        for rho0 in states:
            for channel in channels:
                rho_t = apply(channel, rho0)
                ds_irr = delta_s_irr_relent(rho0, rho_t, rho_eq)
                low = lower_bound(rho0, rho_t).wy
                up = upper_bound(rho0, rho_t, rho_eq).wy
                min_lower = min(min_lower, low)
                min_gap_low = min(min_gap_low, ds_irr - low)
                min_gap_up = min(min_gap_up, up - ds_irr)
    return [
        CheckResult("sandwich.lower_nonnegative", -min_lower, 1e-9),
        CheckResult("sandwich.lower_below_dsirr", -min_gap_low, 1e-9),
        CheckResult("sandwich.dsirr_below_upper", -min_gap_up, 1e-9),
    ]


def _suite_eq_equivalence():
    rng = np.random.default_rng(17)
    hamiltonian = qubit_hamiltonian()
    worst = 0.0
    for _ in range(1000):
        temperature = float(rng.uniform(0.1, 5.0))
        eta = float(rng.uniform(0.0, 1.0))
        rho0 = _random_density(rng)
        bath = bath_from_temperature(temperature)
        rho_t = apply(gad_channel(bath, eta), rho0)
        thermo_form = delta_s_irr_thermo(rho0, rho_t, hamiltonian, temperature)
        relent_form = delta_s_irr_relent(rho0, rho_t, gibbs_state(bath))
        worst = max(worst, abs(thermo_form - relent_form))
    return [CheckResult("eq_equivalence.forms_agree", worst, 1e-10)]


def _suite_circuit_equivalence():
    worst_choi = 0.0
    worst_eta = 0.0
    for temperature in _SUITE_TEMPERATURES:
        bath = bath_from_temperature(temperature)
        for theta in np.linspace(0.0, math.pi / 2, 50):
            eta = math.sin(4.0 * theta) ** 2
            channel = gad_from_circuit(theta, bath)
            worst_choi = max(worst_choi, choi_distance(channel, gad_channel(bath, eta)))
            worst_eta = max(worst_eta, abs(damping_from_process(channel) - eta))
    return [
        CheckResult("circuit_equivalence.choi_distance", worst_choi, 1e-10),
        CheckResult("circuit_equivalence.damping_recovery", worst_eta, 1e-10),
    ]


SUITES = {
    "cptp": _suite_cptp,
    "fixed_point": _suite_fixed_point,
    "triangle": _suite_triangle,
    "metric_order": _suite_metric_order,
    "sandwich": _suite_sandwich,
    "eq_equivalence": _suite_eq_equivalence,
    "circuit_equivalence": _suite_circuit_equivalence,
}


def run_suites(names: Sequence[str]) -> list[CheckResult]:
    results = []
    for name in names:
        results.extend(SUITES[name]())
    return results


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(token) for token in text.split(",") if token.strip())


def _parse_state_names(text: str) -> tuple[str, ...]:
    names = tuple(token.strip().upper() for token in text.split(",") if token.strip())
    for name in names:
        if name not in NAMED_STATES:
            raise ValueError(f"unknown state {name!r}; choose among H, V, D")
    return names


def _add_trajectory_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--temperature", type=float, default=0.34, help="bath temperature (default 0.34)"
    )
    sub.add_argument(
        "--state",
        type=parse_state,
        default=NAMED_STATES["D"],
        help="initial state: H, V, D or an 'x,y,z' Bloch triple (default D)",
    )
    grid = sub.add_mutually_exclusive_group()
    grid.add_argument(
        "--time-grid",
        type=_parse_float_list,
        default=None,
        help="comma-separated times (inf allowed last); default maps damping "
        "uniformly over [0, 0.95] in 20 steps plus the eta=1 sentinel",
    )
    grid.add_argument(
        "--theta-grid",
        type=_parse_float_list,
        default=None,
        help="comma-separated waveplate angles; converted to times via "
        "eta = sin^2(4 theta)",
    )
    sub.add_argument("--output", required=True, help="CSV output path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gadbounds",
        description="Entropy production and geometric bounds for a qubit "
        "thermalizing through generalized amplitude damping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="exact trajectory table")
    _add_trajectory_args(sweep)
    sweep.set_defaults(func=_run_sweep)

    asymptotic = sub.add_parser(
        "asymptotic", help="long-time entropy production versus temperature"
    )
    asymptotic.add_argument(
        "--temperatures",
        type=_parse_float_list,
        default=None,
        help="comma-separated temperatures (default: 30 points in [0.05, 3])",
    )
    asymptotic.add_argument(
        "--states",
        type=_parse_state_names,
        default=("H", "D", "V"),
        help="comma-separated named states among H, D, V (default: H,D,V)",
    )
    asymptotic.add_argument("--output", required=True, help="CSV output path")
    asymptotic.set_defaults(func=_run_asymptotic)

    experiment = sub.add_parser(
        "experiment", help="simulated photonic run with tomographic noise"
    )
    _add_trajectory_args(experiment)
    experiment.add_argument(
        "--shots", type=int, default=10_000, help="shots per Pauli basis (default 10000)"
    )
    experiment.add_argument(
        "--resamples", type=int, default=100, help="bootstrap resamples (default 100)"
    )
    experiment.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    experiment.set_defaults(func=_run_experiment)

    verify = sub.add_parser("verify", help="run invariant suites")
    verify.add_argument(
        "--suite",
        choices=tuple(SUITES),
        default=None,
        help="run a single suite (default: all)",
    )
    verify.set_defaults(func=_run_verify)
    return parser


def _grid_from_args(args, bath: BathParams) -> tuple[float, ...]:
    if args.time_grid is not None:
        return args.time_grid
    if args.theta_grid is not None:
        return tuple(
            DampingSchedule.from_eta(bath, math.sin(4.0 * theta) ** 2).time
            for theta in args.theta_grid
        )
    return default_time_grid(bath)


def _trajectory_config(args, shots=None, resamples=100, seed=0) -> SweepConfig:
    bath = bath_from_temperature(args.temperature)
    return SweepConfig(
        temperature=args.temperature,
        initial_state=tuple(args.state),
        time_grid=_grid_from_args(args, bath),
        shots=shots,
        resamples=resamples,
        seed=seed,
        output_path=args.output,
    )


def _run_sweep(args) -> int:
    cmd_sweep(_trajectory_config(args))
    return 0


def _run_asymptotic(args) -> int:
    temperatures = args.temperatures
    if temperatures is None:
        temperatures = tuple(np.linspace(0.05, 3.0, 30))
    cmd_asymptotic(temperatures, args.states, args.output)
    return 0


def _run_experiment(args) -> int:
    cmd_experiment(
        _trajectory_config(
            args, shots=args.shots, resamples=args.resamples, seed=args.seed
        )
    )
    return 0


def _run_verify(args) -> int:
    names = (args.suite,) if args.suite else tuple(SUITES)
    all_passed = True
    for check in run_suites(names):
        verdict = "PASS" if check.passed else "FAIL"
        all_passed = all_passed and check.passed
        violation = check.violation + 0.0  # avoid printing negative zero
        print(f"{check.name} {violation:.12g} {check.threshold:.12g} {verdict}")
    return 0 if all_passed else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GadBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
