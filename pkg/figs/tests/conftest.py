"""Shared fixture: tiny billiard-thermo runs providing real CSV inputs.

The plotting package consumes the simulation suite only through its
external interfaces, so the inputs here are produced by invoking the
``billiard-thermo`` CLI on small configurations.
"""

import subprocess
import sys
from pathlib import Path

import pytest

_CONFIGS = {
    "parallelogram.toml": """
kind = "parallelogram"
seed = 3
[params]
chains = 20
crossings_per_chain = 300
""",
    "chamber.toml": """
kind = "chamber"
seed = 3
[params]
n_entries = 4000
trace_limit = 100
expansion = true
expansion_particles = 400
expansion_t_max = 120.0
expansion_dt = 20.0
chain_entries = 10000
""",
    "thermostat.toml": """
kind = "thermostat"
seed = 3
[params]
n_steps = 20000
trace_limit = 100
""",
    "operator.toml": """
kind = "operator"
seed = 3
[params]
cells = 40
samples_per_row = 1000
evolve_steps = 20
""",
    "heatflow.toml": """
kind = "heatflow"
seed = 3
[params]
n_collisions = 20000
trace_limit = 100
""",
    "heatflow_linearity.toml": """
kind = "heatflow"
seed = 3
[params]
sigma2_hot_grid = [1.0, 3.0, 5.0, 7.0, 9.0]
wall_mass_grid = [5.001]
n_collisions_per_point = 4000
""",
    "engine.toml": """
kind = "engine"
seed = 3
[params]
n_events = 20000
""",
    "engine_sweep.toml": """
kind = "engine-sweep"
seed = 3
[params]
forces = [0.0, 100.0, 200.0]
n_runs = 8
events_per_run = 400
""",
    "hemisphere.toml": """
kind = "hemisphere"
seed = 3
[params]
k = 40
n_samples = 5000
""",
}


@pytest.fixture(scope="session")
def artifact_dir(tmp_path_factory) -> Path:
    root = tmp_path_factory.mktemp("figdata")
    out = root / "artifacts"
    for name, text in _CONFIGS.items():
        cfg = root / name
        cfg.write_text(text)
        kind = name.split(".")[0].split("_")[0]
        if name == "engine_sweep.toml":
            kind = "engine-sweep"
        proc = subprocess.run(
            [sys.executable, "-m", "billiard_thermo.cli", kind, "--config", str(cfg), "--out", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, f"{name}: {proc.stderr}"
    return out
