import json
import logging
import sys
from dataclasses import dataclass
from functools import wraps
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from src.centrality.local_limit import local_limit_estimates
from src.centrality.scores import finite_radius_pagerank, kill_by_threshold, threshold_kill_sequence
from src.degrees.distributions import alpha_of
from src.degrees.dominance import decompose_to_transforms, general_comparison_chain
from src.degrees.json_io import alpha_sequence_from_json, distribution_from_json, load_distribution, load_job, read_json
from src.degrees.transforms import apply_epsilon_transform
from src.errors import VertexRemovalError
from src.graphs.components import components as component_summary
from src.graphs.removal import remove_quantile_fraction
from src.graphs.rng import stream
from src.graphs.sampling import sample_cm, sample_degree_sequence
from src.harness.compare import compare_sequences
from src.harness.experiment import ExperimentSpec, run
from src.harness.reporting import CSV_HEADER, write_outputs
from src.settings import (
    ASSERTION_TOL,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    LOCAL_LIMIT_CUTOFF,
    LOCAL_LIMIT_SAMPLES,
    LOG_FORMAT,
    LOG_LEVEL,
    PAGERANK_DAMPING,
    PAGERANK_RADIUS,
)
from src.theory.bounds import bound_violations
from src.theory.critical import MODES, critical_alpha as solve_critical_alpha, removal_sequence
from src.theory.fixed_point import giant_fractions

logger = logging.getLogger(__name__)

app = typer.Typer(help="Degree-based vertex removal on configuration models: theory and simulation.")


@dataclass
class CliContext:
    seed: int = DEFAULT_SEED
    threads: int = DEFAULT_THREADS
    out: Optional[Path] = None


state = CliContext()


def handle_errors(command):
    """Library errors exit with status 2, failed checks with status 1."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            ok = command(*args, **kwargs)
        except VertexRemovalError as e:
            logger.error("%s: %s", type(e).__name__, e)
            raise typer.Exit(2)
        if ok is False:
            raise typer.Exit(1)

    return wrapper


def emit(name: str, payload):
    """Print JSON to stdout, or write it to --out/<name> when an output directory is set."""
    text = json.dumps(payload, indent=2)
    if state.out is None:
        typer.echo(text)
        return
    state.out.mkdir(parents=True, exist_ok=True)
    path = state.out / name
    path.write_text(text + "\n")
    logger.info("wrote %s", path)


def emit_csv_row(n, alpha, seed, summary):
    line = ",".join(map(str, [n, repr(alpha), seed, summary.component_count, summary.giant_vertices,
                              summary.giant_edges]))
    typer.echo(",".join(CSV_HEADER))
    typer.echo(line)


@app.callback()
def main(
    seed: int = typer.Option(DEFAULT_SEED, help="Root seed for every random stream."),
    threads: int = typer.Option(DEFAULT_THREADS, help="Worker processes for replicas."),
    out: Optional[Path] = typer.Option(None, help="Directory for output files (default: stdout)."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging."),
):
    logging.basicConfig(level=logging.DEBUG if verbose else LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)
    state.seed, state.threads, state.out = seed, threads, out


@app.command()
@handle_errors
def theory(job: Path = typer.Argument(..., help="JSON job: {p, r} or {p, mode, alpha}, optional tol.")):
    """Exploded law, extinction probability, giant fractions and bounds for one (p, r)."""
    spec = load_job(job)
    r = spec.r if spec.r is not None else removal_sequence(spec.p, spec.mode, spec.alpha)
    report = giant_fractions(spec.p, r, spec.tol)
    emit("theory.json", report.to_json())

    broken = bound_violations(report.eta, report.rho, report.e, report.bounds)
    if broken:
        logger.error("bounds violated: %s", ", ".join(broken))
    return not broken


@app.command("critical-alpha")
@handle_errors
def critical_alpha(
    distribution: Path = typer.Argument(..., help="JSON file with the degree law."),
    mode: str = typer.Option("top", help=f"Removal mode, one of {MODES}."),
):
    """Critical removal fraction at which the giant disappears."""
    p = load_distribution(distribution)
    emit("critical_alpha.json", {"alpha_c": solve_critical_alpha(p, mode), "mode": mode})


@app.command()
@handle_errors
def simulate(spec_file: Path = typer.Argument(..., help="ExperimentSpec JSON file.")):
    """Run an experiment spec and write its CSV, JSON and JSONL outputs."""
    spec = ExperimentSpec.load(spec_file)
    report = run(spec, threads=state.threads)
    outputs = spec.outputs or {"csv": "rows.csv", "json": "report.json", "jsonl": "rows.jsonl"}
    if state.out is None and not spec.outputs:
        emit("report.json", report.to_json())
    else:
        write_outputs(report, outputs, state.out)

    broken = []
    if report.theory is not None:
        t = report.theory
        broken = bound_violations(t.eta, t.rho, t.e, t.bounds)
        if broken:
            logger.error("bounds violated: %s", ", ".join(broken))
        gaps = [entry["rho_gap"] for entry in report.deviations]
        if len(gaps) > 1 and gaps[-1] > gaps[0]:
            logger.warning("giant gap grows along n: %.5f at n=%d, %.5f at n=%d", gaps[0], spec.n_grid[0],
                           gaps[-1], spec.n_grid[-1])
    return all(row.v_giant <= row.n for row in report.rows) and not broken


@app.command()
@handle_errors
def compare(
    distribution: Path = typer.Argument(..., help="JSON with 'p' and optionally 'sequences' (list of r mappings)."),
    alpha: Optional[float] = typer.Option(None, help="Common alpha for the mode sequences."),
    modes: str = typer.Option("top,uniform,bottom", help="Comma-separated modes used with --alpha."),
    n: int = typer.Option(10000, help="Graph size."),
    replicas: int = typer.Option(1, help="Graphs per sequence."),
):
    """Theory and simulation side by side for alpha-sequences of equal mass."""
    obj = read_json(distribution)
    p = distribution_from_json(obj["p"] if "p" in obj else obj)
    labels, sequences = [], []
    for i, r in enumerate(obj.get("sequences", []) if "p" in obj else []):
        labels.append(f"r{i}")
        sequences.append(alpha_sequence_from_json(r))
    if alpha is not None:
        for mode in modes.split(","):
            labels.append(mode)
            sequences.append(removal_sequence(p, mode.strip(), alpha))
    table = compare_sequences(p, sequences, n, replicas, state.seed, labels=labels, threads=state.threads)
    emit("compare.json", table.to_json())
    return table.holds


@app.command()
@handle_errors
def decompose(
    job: Path = typer.Argument(..., help="JSON with 'p', 'r' and 'r2'."),
    delta: bool = typer.Option(False, "--delta", help="r <= r2 with larger alpha: also build the lifting delta."),
):
    """Epsilon-transformations between two stochastically ordered alpha-sequences."""
    obj = read_json(job)
    p = distribution_from_json(obj["p"])
    r, r2 = alpha_sequence_from_json(obj["r"]), alpha_sequence_from_json(obj["r2"])

    payload = {}
    if delta:
        lift, transforms = general_comparison_chain(p, r, r2)
        payload["delta"] = {str(d): v for d, v in lift.mass.items()}
        payload["delta_mass"] = alpha_of(p, lift)
        start, target = r2, np.clip(r.aligned(p) + lift.aligned(p), 0.0, 1.0)
    else:
        transforms = decompose_to_transforms(p, r, r2)
        start, target = r, r2.aligned(p)
    payload["transforms"] = [t.to_json() for t in transforms]

    replay = start
    for t in transforms:
        replay = apply_epsilon_transform(p, replay, t)
    error = float(np.max(np.abs(replay.aligned(p) - target)))
    payload["replay_error"] = error
    emit("decompose.json", payload)
    return error <= ASSERTION_TOL


@app.command("pagerank-kill")
@handle_errors
def pagerank_kill(
    distribution: Path = typer.Argument(..., help="JSON file with the degree law."),
    n: int = typer.Option(10000, help="Graph size."),
    c: float = typer.Option(PAGERANK_DAMPING, "--c", help="Damping factor."),
    radius: int = typer.Option(PAGERANK_RADIUS, "--radius", help="Number of power-iteration steps N."),
    threshold: float = typer.Option(..., "--threshold", help="Kill every vertex scoring above this."),
):
    """Kill by finite-radius PageRank threshold and report the components."""
    p = load_distribution(distribution)
    degrees = sample_degree_sequence(p, n, stream(state.seed, "degrees"))
    g = sample_cm(degrees, stream(state.seed, "matching"))
    killed = kill_by_threshold(g, finite_radius_pagerank(g, c, radius), threshold)
    emit_csv_row(n, 1.0 - killed.n_alive / n, state.seed, component_summary(killed))


@app.command("local-limit")
@handle_errors
def local_limit(
    distribution: Path = typer.Argument(..., help="JSON file with the degree law."),
    threshold: float = typer.Option(..., help="Kill every degree strictly above this."),
    cutoff: int = typer.Option(LOCAL_LIMIT_CUTOFF, help="Component size counted as infinite."),
    samples: int = typer.Option(LOCAL_LIMIT_SAMPLES, help="Number of sampled roots."),
):
    """Branching-process estimates of the surviving fraction and of E[1/|C(o)|]."""
    p = load_distribution(distribution)
    est = local_limit_estimates(p, threshold_kill_sequence(p, threshold), cutoff, samples,
                                stream(state.seed, "local_limit"))
    payload = {
        "zeta": est.zeta,
        "inv_component_mean": est.inv_component_mean,
        "stderr": {"zeta": est.zeta_stderr, "inv_component_mean": est.inv_component_stderr},
        "M": est.cutoff,
        "samples": est.samples,
    }
    emit("local_limit.json", payload)


@app.command()
@handle_errors
def components(
    distribution: Path = typer.Argument(..., help="JSON file with the degree law."),
    n: int = typer.Option(10000, help="Graph size."),
    alpha: float = typer.Option(0.0, help="Fraction removed before counting."),
    side: str = typer.Option("top", help="Remove the top or bottom degrees."),
    dump: Optional[Path] = typer.Option(None, "--dump", help="Write the remaining graph in text form."),
):
    """Sample a configuration model, optionally remove a degree quantile, count components."""
    p = load_distribution(distribution)
    degrees = sample_degree_sequence(p, n, stream(state.seed, "degrees"))
    g = sample_cm(degrees, stream(state.seed, "matching"))
    g = remove_quantile_fraction(g, alpha, side, stream(state.seed, "removal"))
    if dump is not None:
        with open(dump, "w") as f:
            g.dump(f)
    emit_csv_row(n, alpha, state.seed, component_summary(g))


if __name__ == "__main__":
    app()
