"""Figure assembly from trajectory and temperature-scan tables.

Three figures are supported:

``fig3``
    Entropy production with its geometric upper/lower bounds along a
    thermalization trajectory, one panel per theory table.  Tables
    carrying ``*_sigma`` columns are drawn as points with vertical error
    bars on the most recently started panel, so the natural call is
    theory CSV followed by its matching experiment CSV, repeated per
    panel.
``fig4``
    Temperature scan of the full-thermalization entropy production
    (dotted) and its Wigner-Yanase lower bound (solid), colored red /
    green / blue for the H / D / V initial states.
``supp``
    Remaining relative entropy to equilibrium against its two geometric
    lower estimates ``(8/pi^2) L^2``, one panel per table; the squared
    lengths are taken from the ``l_*_eq`` columns.

All curves are plotted against the damping ``eta``, which stays finite
on the infinite-time sentinel row.  Rendering is read-only over its
inputs and byte-deterministic: no timestamps are embedded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import UnreadableInput
from .tables import Table, load_table

matplotlib.rcParams.update(
    {
        "figure.dpi": 150,
        "savefig.dpi": 150,
        "font.size": 9,
        "axes.grid": True,
        "grid.alpha": 0.3,
        "legend.fontsize": 7.5,
        "svg.hashsalt": "gadfigures",  # stable ids in SVG output
    }
)

EIGHT_OVER_PI_SQ = 8.0 / math.pi**2

FIGURES = ("fig3", "fig4", "supp")

# column, legend label, color, line style
TRAJECTORY_SERIES = (
    ("ds_irr", "produced entropy", "black", "-"),
    ("upper_wy", "upper bound (WY)", "tab:red", "-"),
    ("upper_qf", "upper bound (QF)", "tab:red", "--"),
    ("lower_wy", "lower bound (WY)", "tab:blue", "-"),
    ("lower_qf", "lower bound (QF)", "tab:blue", "--"),
)

STATE_COLORS = {"H": "tab:red", "D": "tab:green", "V": "tab:blue"}


@dataclass(frozen=True)
class FigureSpec:
    """What to draw, from which CSVs, into which file."""

    figure: str
    input_paths: tuple
    output_path: str
    image_format: Optional[str] = None

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"figure must be one of {FIGURES}, got {self.figure!r}")
        if not self.input_paths:
            raise ValueError("at least one input CSV is required")


def _is_experiment(table: Table) -> bool:
    return table.has("ds_irr_sigma")


def _panel_label(index: int, table: Table) -> str:
    return f"({chr(ord('a') + index)}) {Path(table.path).stem}"


def build_fig3(tables) -> plt.Figure:
    """Bounds along trajectories: theory curves plus noisy points."""
    panels = []
    for table in tables:
        if _is_experiment(table):
            if not panels:
                panels.append({"theory": [], "points": []})
            panels[-1]["points"].append(table)
        else:
            panels.append({"theory": [table], "points": []})
    fig, axes = plt.subplots(
        1, len(panels), figsize=(4.2 * len(panels), 3.2), squeeze=False
    )
    for index, (ax, panel) in enumerate(zip(axes[0], panels)):
        for table in panel["theory"]:
            eta = table.floats("eta")
            for column, label, color, style in TRAJECTORY_SERIES:
                ax.plot(eta, table.floats(column), style, color=color, label=label)
        for table in panel["points"]:
            eta = table.floats("eta")
            for column, _, color, _ in TRAJECTORY_SERIES:
                label = "simulated run" if column == "ds_irr" else "_nolegend_"
                ax.errorbar(
                    eta,
                    table.floats(column),
                    yerr=table.floats(column + "_sigma"),
                    fmt="o",
                    color=color,
                    markersize=2.5,
                    capsize=1.5,
                    linewidth=0.8,
                    linestyle="none",
                    label=label,
                )
        title_table = (panel["theory"] or panel["points"])[0]
        ax.set_title(_panel_label(index, title_table))
        ax.set_xlabel(r"damping $\eta$")
        ax.set_ylabel("nats")
        ax.legend(loc="best")
    fig.tight_layout()
    return fig


def build_fig4(tables) -> plt.Figure:
    """Temperature scan: dotted entropy production, solid lower bound."""
    series = {}
    order = []
    for table in tables:
        temperatures = table.floats("temperature")
        states = table.strings("state")
        ds_values = table.floats("ds_irr_inf")
        lower_values = table.floats("lower_wy_inf")
        for temp, state, ds, low in zip(temperatures, states, ds_values, lower_values):
            if state not in series:
                series[state] = []
                order.append(state)
            series[state].append((temp, ds, low))
    fig, ax = plt.subplots(figsize=(4.8, 3.4))
    for state in order:
        rows = sorted(series[state])
        temps = [r[0] for r in rows]
        color = STATE_COLORS.get(state, "tab:gray")
        ax.plot(
            temps,
            [r[1] for r in rows],
            linestyle=":",
            color=color,
            label=f"{state}: produced entropy",
        )
        ax.plot(
            temps,
            [r[2] for r in rows],
            linestyle="-",
            color=color,
            label=f"{state}: lower bound (WY)",
        )
    ax.set_xlabel("bath temperature")
    ax.set_ylabel("nats")
    ax.legend(loc="best", ncol=2)
    fig.tight_layout()
    return fig


def build_supp(tables) -> plt.Figure:
    """Relative entropy to equilibrium vs. its two geometric estimates."""
    fig, axes = plt.subplots(
        1, len(tables), figsize=(4.2 * len(tables), 3.2), squeeze=False
    )
    for index, (ax, table) in enumerate(zip(axes[0], tables)):
        eta = table.floats("eta")
        ax.plot(
            eta,
            table.floats("relent_to_eq"),
            "-",
            color="black",
            label="relative entropy to equilibrium",
        )
        wy = [EIGHT_OVER_PI_SQ * v * v for v in table.floats("l_wy_eq")]
        qf = [EIGHT_OVER_PI_SQ * v * v for v in table.floats("l_qf_eq")]
        ax.plot(eta, wy, "-", color="tab:blue", label=r"$(8/\pi^2)\,L_{WY}^2$")
        ax.plot(eta, qf, "--", color="tab:orange", label=r"$(8/\pi^2)\,L_{QF}^2$")
        ax.set_title(_panel_label(index, table))
        ax.set_xlabel(r"damping $\eta$")
        ax.set_ylabel("nats")
        ax.legend(loc="best")
    fig.tight_layout()
    return fig


_BUILDERS = {"fig3": build_fig3, "fig4": build_fig4, "supp": build_supp}

# formats we will infer from an output suffix; anything else falls back
# to the vector default
_KNOWN_FORMATS = {"pdf", "svg", "png", "eps", "ps"}
_SCRUB_METADATA = {"pdf": {"CreationDate": None}, "svg": {"Date": None}}


def _output_format(path: str, image_format: Optional[str]) -> str:
    if image_format:
        return image_format
    suffix = Path(path).suffix.lstrip(".").lower()
    return suffix if suffix in _KNOWN_FORMATS else "pdf"


def build(spec: FigureSpec) -> plt.Figure:
    """Load the inputs and assemble the figure without saving it."""
    tables = [load_table(path) for path in spec.input_paths]
    return _BUILDERS[spec.figure](tables)


def render(spec: FigureSpec) -> None:
    """Build the figure and write it to ``spec.output_path``.

    Timestamp metadata is suppressed so identical inputs give identical
    bytes.
    """
    fig = build(spec)
    fmt = _output_format(spec.output_path, spec.image_format)
    try:
        fig.savefig(
            spec.output_path,
            format=fmt,
            metadata=_SCRUB_METADATA.get(fmt),
            bbox_inches="tight",
        )
    finally:
        plt.close(fig)
