"""Figure recipes: one function per standard plot.

Each recipe names its input artifacts, renders from them only, and
writes ``<id>.png`` and ``<id>.svg``.  Rendering is deterministic: a
fixed style, a fixed SVG hash salt, and no timestamps in the outputs, so
re-rendering identical inputs yields identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "billiard-figs"

import matplotlib.pyplot as plt
import numpy as np

from billiard_figs.io import load_histogram, load_table


# closed-form overlays, duplicated here deliberately as cross-checks
def cosine_density(theta):
    return np.cos(theta) / 2.0


def post_collision_density(v, sigma):
    return (v / sigma**2) * np.exp(-0.5 * (v / sigma) ** 2)


def normal_density(x, sigma):
    return np.exp(-0.5 * (x / sigma) ** 2) / (sigma * math.sqrt(2 * math.pi))


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: str
    inputs: tuple[str, ...]
    title: str
    build: Callable[[Path, "plt.Axes"], None]


def _bars(ax, edges, density, label):
    centers = 0.5 * (edges[:-1] + edges[1:])
    ax.bar(centers, density, width=np.diff(edges), color="#9ecae1", edgecolor="none", label=label)


def _entry_positions(in_dir: Path, ax) -> None:
    edges, _c, density, _m = load_histogram(in_dir / "chamber_r_hist.csv", "chamber-r-hist")
    _bars(ax, edges, density, "entry offsets")
    ax.axhline(1.0, color="k", lw=1.2, label="uniform")
    ax.set_xlabel("entry offset r")
    ax.set_ylabel("density")
    ax.set_ylim(0, None)
    ax.legend()


def _entry_angles(in_dir: Path, ax) -> None:
    edges, _c, density, _m = load_histogram(in_dir / "chamber_theta_hist.csv", "chamber-theta-hist")
    _bars(ax, edges, density, "entry angles")
    grid = np.linspace(-math.pi / 2, math.pi / 2, 400)
    ax.plot(grid, cosine_density(grid), "k-", lw=1.2, label="cos(theta)/2")
    ax.set_xlabel("entry angle theta")
    ax.set_ylabel("density")
    ax.legend()


def _expansion(in_dir: Path, ax) -> None:
    t = load_table(in_dir / "chamber_expansion.csv", "chamber-expansion",
                   ["t", "fraction_deterministic", "fraction_random_billiard", "fraction_two_state"])
    x = t.floats("t")
    ax.plot(x, t.floats("fraction_deterministic"), "-", label="deterministic billiard")
    ax.plot(x, t.floats("fraction_random_billiard"), "--", label="scattering-line chain")
    ax.plot(x, t.floats("fraction_two_state"), "-.", label="two-state chain")
    ax.axhline(0.5, color="k", lw=0.8, alpha=0.5)
    ax.set_xlabel("time")
    ax.set_ylabel("fraction in right chamber")
    ax.set_ylim(0, 0.6)
    ax.legend()


def _mb_evolution(in_dir: Path, ax) -> None:
    grid = load_table(in_dir / "operator_grid.csv", "operator-grid",
                      ["cell", "lo", "hi", "stationary_prob"])
    lo = grid.floats("lo")
    hi = grid.floats("hi")
    centers = 0.5 * (lo + hi)
    width = hi - lo
    dens = load_table(in_dir / "operator_densities.csv", "operator-densities",
                      ["step", "cell", "density"])
    steps = dens.floats("step").astype(int)
    cells = dens.floats("cell").astype(int)
    vals = dens.floats("density")
    for step in np.unique(steps):
        mask = steps == step
        rho = np.zeros(centers.size)
        rho[cells[mask]] = vals[mask]
        ax.plot(centers, rho / width, lw=1.0, alpha=0.8, label=f"step {step}")
    ax.plot(centers, grid.floats("stationary_prob") / width, "k--", lw=1.4, label="stationary law")
    ax.set_xlabel("speed v")
    ax.set_ylabel("density")
    ax.legend(fontsize=7, ncol=2)


def _thermostat_law(in_dir: Path, ax) -> None:
    edges, _c, density, meta = load_histogram(in_dir / "thermostat_hist.csv", "thermostat-hist")
    _bars(ax, edges, density, "chain speeds")
    sigma = math.sqrt(float(meta.get("sigma2", 1.0)))
    grid = np.linspace(1e-6, edges[-1], 400)
    ax.plot(grid, post_collision_density(grid, sigma), "k-", lw=1.2,
            label="(v/sigma^2) exp(-v^2/2 sigma^2)")
    ax.set_xlabel("speed v")
    ax.set_ylabel("density")
    ax.legend()


def _crossing_angles(in_dir: Path, ax) -> None:
    edges, _c, density, meta = load_histogram(in_dir / "parallelogram_theta_hist.csv",
                                              "parallelogram-theta-hist")
    _bars(ax, edges, density, f"crossing angles ({meta.get('mode', '?')})")
    grid = np.linspace(-math.pi / 2, math.pi / 2, 400)
    ax.plot(grid, cosine_density(grid), "k-", lw=1.2, label="cos(theta)/2")
    ax.set_xlabel("crossing angle theta")
    ax.set_ylabel("density")
    ax.legend()


def _two_temp_speeds(in_dir: Path, ax) -> None:
    e1, _c1, d1, _m1 = load_histogram(in_dir / "heatflow_speed_away.csv", "heatflow-speed-away")
    e2, _c2, d2, _m2 = load_histogram(in_dir / "heatflow_speed_toward.csv", "heatflow-speed-toward")
    ax.stairs(d1, e1, label="away from hot wall", lw=1.4)
    ax.stairs(d2, e2, label="toward hot wall", lw=1.4)
    ax.set_xlabel("speed v")
    ax.set_ylabel("density")
    ax.legend()


def _heat_linearity(in_dir: Path, ax) -> None:
    points = load_table(in_dir / "heatflow_points.csv", "heatflow-points",
                        ["wall_mass", "delta_t", "mean_q_hot", "se_q_hot"])
    fits = load_table(in_dir / "heatflow_fit.csv", "heatflow-fit",
                      ["wall_mass", "gamma", "slope", "intercept", "r_squared",
                       "slope_se", "intercept_se"])
    masses = points.floats("wall_mass")
    for m in np.unique(masses):
        mask = masses == m
        x = points.floats("delta_t")[mask]
        y = points.floats("mean_q_hot")[mask]
        se = points.floats("se_q_hot")[mask]
        ax.errorbar(x, y, yerr=3 * se, fmt="o", ms=3, capsize=2, label=f"wall mass {m:g}")
        fm = fits.floats("wall_mass")
        row = np.nonzero(fm == m)[0][0]
        slope = fits.floats("slope")[row]
        icpt = fits.floats("intercept")[row]
        grid = np.linspace(x.min(), x.max(), 50)
        ax.plot(grid, icpt + slope * grid, "k-", lw=0.8, alpha=0.7)
    ax.set_xlabel("temperature difference")
    ax.set_ylabel("mean heat per hot collision")
    ax.legend()


def _brownian_paths(in_dir: Path, ax) -> None:
    t = load_table(in_dir / "engine_trajectory.csv", "engine-trajectory",
                   ["record", "t", "event_type", "x_b", "v_b", "v_g", "q_hot", "q_cold", "w"])
    ax.plot(t.floats("t"), t.floats("x_b"), lw=0.8)
    ax.axhline(0.0, color="k", lw=0.6, alpha=0.5)
    ax.set_xlabel("time")
    ax.set_ylabel("slider displacement")


def _mean_velocity(in_dir: Path, ax) -> None:
    t = load_table(in_dir / "engine_trajectory.csv", "engine-trajectory",
                   ["record", "t", "event_type", "x_b", "v_b", "v_g", "q_hot", "q_cold", "w"])
    times = t.floats("t")
    x = t.floats("x_b")
    mask = times > 0
    ax.plot(times[mask], (x[mask] - x[0]) / times[mask], lw=0.9)
    ax.axhline(0.0, color="k", lw=0.6, alpha=0.5)
    ax.set_xlabel("time")
    ax.set_ylabel("mean slider velocity")


def _efficiency(in_dir: Path, ax) -> None:
    t = load_table(in_dir / "sweep_summary.csv", "sweep-summary",
                   ["force", "mean_eps_q", "se_eps_q", "ci99_lo", "ci99_hi",
                    "mean_eps_w", "mean_w", "n_runs"])
    force = t.floats("force")
    mean = 100.0 * t.floats("mean_eps_q")  # percentage units
    lo = 100.0 * t.floats("ci99_lo")
    hi = 100.0 * t.floats("ci99_hi")
    ax.errorbar(force, mean, yerr=[mean - lo, hi - mean], fmt="o", ms=4, capsize=3)
    ax.plot(force, mean, "--", lw=0.8, alpha=0.6)
    ax.axhline(0.0, color="k", lw=0.8)
    ax.set_xlabel("force load")
    ax.set_ylabel("efficiency (%), 99% CI")


def _hemisphere(in_dir: Path, ax) -> None:
    e0, _c0, d0, meta = load_histogram(in_dir / "hemisphere_v0_hist.csv", "hemisphere-v0-hist")
    ei, _ci, di, _mi = load_histogram(in_dir / "hemisphere_vi_hist.csv", "hemisphere-vi-hist")
    sigma = math.sqrt(float(meta.get("sigma", 1.0)))
    ax.stairs(d0, e0, label="first coordinate", lw=1.4)
    g0 = np.linspace(1e-6, e0[-1], 300)
    ax.plot(g0, post_collision_density(g0, sigma), "k-", lw=1.0, label="post-collision law")
    ax.stairs(di, ei, label="other coordinate", lw=1.4)
    gi = np.linspace(ei[0], ei[-1], 300)
    ax.plot(gi, normal_density(gi, sigma), "k--", lw=1.0, label="Gaussian")
    ax.set_xlabel("coordinate value")
    ax.set_ylabel("density")
    ax.legend(fontsize=8)


RECIPES: dict[str, FigureRecipe] = {
    r.figure_id: r
    for r in [
        FigureRecipe("entry-positions", ("chamber_r_hist.csv",),
                     "Screen entry offsets", _entry_positions),
        FigureRecipe("entry-angles", ("chamber_theta_hist.csv",),
                     "Screen entry angles", _entry_angles),
        FigureRecipe("expansion", ("chamber_expansion.csv",),
                     "Gas expansion: three models", _expansion),
        FigureRecipe("crossing-angles", ("parallelogram_theta_hist.csv",),
                     "Parallelogram crossing angles", _crossing_angles),
        FigureRecipe("mb-evolution", ("operator_grid.csv", "operator_densities.csv"),
                     "Speed-density relaxation under the grid operator", _mb_evolution),
        FigureRecipe("thermostat-law", ("thermostat_hist.csv",),
                     "Thermostat chain: stationary speed law", _thermostat_law),
        FigureRecipe("two-temp-speeds", ("heatflow_speed_away.csv", "heatflow_speed_toward.csv"),
                     "Directional speed distributions between two walls", _two_temp_speeds),
        FigureRecipe("heat-linearity", ("heatflow_points.csv", "heatflow_fit.csv"),
                     "Mean hot-wall heat against temperature difference", _heat_linearity),
        FigureRecipe("brownian-paths", ("engine_trajectory.csv",),
                     "Slider displacement", _brownian_paths),
        FigureRecipe("mean-velocity", ("engine_trajectory.csv",),
                     "Slider mean velocity", _mean_velocity),
        FigureRecipe("efficiency", ("sweep_summary.csv",),
                     "Engine efficiency against force load", _efficiency),
        FigureRecipe("hemisphere", ("hemisphere_v0_hist.csv", "hemisphere_vi_hist.csv"),
                     "Cosine-hemisphere coordinate laws", _hemisphere),
    ]
}


def render(figure_id: str, in_dir: str | Path, out_dir: str | Path) -> list[Path]:
    """Render one recipe; writes PNG and SVG, returns their paths.

    Inputs are verified before any output file is opened, so a failed
    render leaves no partial artifacts behind.
    """
    if figure_id not in RECIPES:
        raise KeyError(f"unknown recipe {figure_id!r}; known: {', '.join(sorted(RECIPES))}")
    recipe = RECIPES[figure_id]
    in_dir = Path(in_dir)
    missing = [name for name in recipe.inputs if not (in_dir / name).is_file()]
    if missing:
        raise FileNotFoundError(f"recipe {figure_id!r}: missing inputs {missing} in {in_dir}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6.0, 4.0), dpi=120)
    try:
        recipe.build(in_dir, ax)
        ax.set_title(recipe.title)
        fig.tight_layout()
        png = out_dir / f"{figure_id}.png"
        svg = out_dir / f"{figure_id}.svg"
        fig.savefig(png, metadata=None)
        fig.savefig(svg, metadata={"Date": None})
    finally:
        plt.close(fig)
    return [png, svg]
