from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel

from hybrid_switch.analysis import (
    build_report,
    fixture_yields,
    format_summary,
    load_published_tables,
    load_report,
    write_plot_data,
    write_report,
)
from hybrid_switch.chip import (
    DESIGNED_DIMENSIONS,
    build_wafers,
    default_chip,
    load_failure_config,
    load_manifest,
    load_material,
    save_manifest,
    designed_geometry,
)
from hybrid_switch.config import (
    OUTPUT_DIR,
    AnalysisConfig,
    FailureConfig,
    PhysicsConfig,
    RunConfig,
    physics_config,
)
from hybrid_switch.definition.material import CODATA_2018, Material2DEG
from hybrid_switch.definition.trace import SweepProtocol
from hybrid_switch.errors import ConfigError
from hybrid_switch.logging import configure_logging, logger
from hybrid_switch.physics import DARK, classify_regime, max_modes, transport_quantities
from hybrid_switch.simulator import (
    read_device_geometries,
    read_trace_dir,
    run_ensemble,
    write_index,
    write_trace,
)
from hybrid_switch.utils.pydantic import load_data, save_dict
from hybrid_switch.validation import format_diagnosis

EXIT_INPUT_ERROR = 2
EXIT_IO_ERROR = 3

console = Console(stderr=True)
app = typer.Typer(help="Hybrid switch: simulate and characterize split-gate junction arrays")


@app.callback()
def _setup(
    log_level: str = typer.Option(None, "--log-level", help="Loguru level (default: HYBRID_SWITCH_LOG_LEVEL)"),
):
    if log_level:
        configure_logging(level=log_level.upper())
    else:
        configure_logging()


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map domain errors to exit code 2 and write failures to exit code 3."""
    try:
        yield
    except FileNotFoundError as e:
        console.print(f"[bold red]Error:[/] File not found: {e.filename}")
        raise typer.Exit(EXIT_INPUT_ERROR) from e
    except ValueError as e:
        # domain errors and pydantic ValidationError
        console.print(f"[bold red]Error:[/] {e}")
        raise typer.Exit(EXIT_INPUT_ERROR) from e
    except OSError as e:
        console.print(f"[bold red]I/O error:[/] {e}")
        raise typer.Exit(EXIT_IO_ERROR) from e


def _material(path: Path | None) -> Material2DEG:
    return load_material(path) if path is not None else DARK


def _load_yaml_config(path: Path, model):
    try:
        return model.model_validate(load_data(path) or {})
    except ValidationError as e:
        raise ConfigError(f"{path}: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}") from e


# -- physics ----------------------------------------------------------------------------


@app.command("physics")
def physics(
    material_file: Path = typer.Argument(..., help="Material file (YAML or JSON)"),
    temperature: float = typer.Option(physics_config.temperature, "--temperature", help="Temperature in K"),
    ballistic_factor: float = typer.Option(
        physics_config.ballistic_factor, "--ballistic-factor", help="l_e must exceed this multiple of a length"
    ),
):
    """
    Print the derived transport quantities of a 2DEG as ``key = value`` lines.
    """
    with _exit_codes():
        settings = PhysicsConfig(temperature=temperature, ballistic_factor=ballistic_factor)
        material = load_material(material_file)
        q = transport_quantities(material, settings.temperature)
        lines = {
            "n_s_per_m2": f"{material.n_s:.6e}",
            "mu_e_m2_per_Vs": f"{material.mu_e:.6g}",
            "m_star_ratio": f"{material.m_star_ratio:.6g}",
            "temperature_K": f"{settings.temperature:.6g}",
            "k_F_per_m": f"{q.k_F:.6e}",
            "v_F_m_per_s": f"{q.v_F:.6e}",
            "E_F_J": f"{q.E_F:.6e}",
            "E_F_meV": f"{q.E_F / (CODATA_2018.e_charge * 1e-3):.6g}",
            "l_e_m": f"{q.l_e:.6e}",
            "zeta_N_m": f"{q.zeta_N:.6e}",
        }
        for W_c_nm in sorted({dims[1] for dims in DESIGNED_DIMENSIONS.values()}, reverse=True):
            lines[f"max_modes_W_c_{W_c_nm:g}nm"] = str(max_modes(q.k_F, W_c_nm * 1e-9))

        references = {f"L_c_{dims[0]:g}nm": dims[0] * 1e-9 for dims in DESIGNED_DIMENSIONS.values()}
        references |= {f"L_J_{dims[2]:g}um": dims[2] * 1e-6 for dims in DESIGNED_DIMENSIONS.values()}
        for name, length in references.items():
            regime = classify_regime(q.l_e, q.zeta_N, length, settings.ballistic_factor)
            lines[f"clean_{name}"] = str(regime.is_clean).lower()
            lines[f"ballistic_{name}"] = str(regime.is_ballistic).lower()

    for key, value in lines.items():
        typer.echo(f"{key} = {value}")


# -- chip-new ---------------------------------------------------------------------------


@app.command("chip-new")
def chip_new(
    chip_id: str = typer.Argument(..., help="Identifier of the new chip"),
    material: Path = typer.Option(None, "--material", help="Material file (default: dark preset)"),
    seed: int = typer.Option(None, "--seed", help="Draw calibrations from the prior with this seed"),
    output: Path = typer.Option(None, "-o", "--output", help="Manifest path (default: <output dir>/<chip>.json)"),
):
    """
    Write a chip manifest with the standard eight-junction layout.
    """
    with _exit_codes():
        chip = default_chip(chip_id, _material(material), seed=seed)
        output = output or OUTPUT_DIR / f"{chip_id}.json"
        save_manifest(chip, output)
    typer.echo(str(output))


# -- simulate ---------------------------------------------------------------------------


def _run_config(
    config: Path | None,
    *,
    protocol_overrides: dict,
    noise: bool | None,
    **overrides,
) -> RunConfig:
    """Defaults < config file < flags."""
    run = _load_yaml_config(config, RunConfig) if config is not None else RunConfig()
    # unset flags arrive as None (or an empty sequence for repeatable options)
    update = {key: value for key, value in overrides.items() if value is not None and value != ()}
    if not update.get("manifests", True):
        update.pop("manifests")
    protocol_overrides = {key: value for key, value in protocol_overrides.items() if value is not None}
    if protocol_overrides:
        update["protocol"] = SweepProtocol.model_validate(
            run.protocol.model_dump() | protocol_overrides
        )
    if noise is not None:
        update["noise"] = run.noise.model_copy(update={"enabled": noise})
    return RunConfig.model_validate(run.model_dump() | update)


@app.command("simulate")
def simulate(
    manifest: list[Path] = typer.Option(None, "--manifest", help="Chip manifest(s) to simulate"),
    chips: int = typer.Option(None, "--chips", min=1, help="Chips per wafer when no manifest is given"),
    wafers: int = typer.Option(None, "--wafers", min=1, help="Number of wafers"),
    config: Path = typer.Option(None, "--config", help="Run config YAML"),
    seed: int = typer.Option(None, "--seed", help="Master seed"),
    noise: bool = typer.Option(None, "--noise/--no-noise", help="Lock-in current noise"),
    v_step: float = typer.Option(None, "--v-step", help="Gate step in V"),
    v_end: float = typer.Option(None, "--v-end", help="Most negative gate voltage in V"),
    directions: str = typer.Option(None, "--directions", help="down_then_up or down_only"),
    failure_config: Path = typer.Option(None, "--failure-config", help="Failure config YAML"),
    repeats: int = typer.Option(None, "--repeats", min=1, help="Down/up cycles per junction"),
    workers: int = typer.Option(None, "--workers", min=1, help="Chips simulated concurrently"),
    output: Path = typer.Option(None, "-o", "--output", help="Trace directory"),
):
    """
    Simulate gate sweeps of every junction and write one trace file per sweep.
    """
    with _exit_codes():
        run = _run_config(
            config,
            protocol_overrides={"v_step": v_step, "v_end": v_end, "directions": directions},
            noise=noise,
            manifests=manifest,
            chips=chips,
            wafers=wafers,
            seed=seed,
            failure_config=failure_config,
            repeats=repeats,
            workers=workers,
            output_dir=output,
        )
        if run.manifests:
            chip_list = [load_manifest(path) for path in run.manifests]
        else:
            chip_list = build_wafers(_material(run.material), run.seed, run.wafers, n_chips=run.chips)
        failures = (
            load_failure_config(load_data(run.failure_config))
            if run.failure_config is not None
            else FailureConfig()
        )

        console.print(
            Panel(
                f"[bold]Chips:[/] {len(chip_list)}  [bold]Seed:[/] {run.seed}  "
                f"[bold]Points:[/] {run.protocol.n_points}  [bold]Repeats:[/] {run.repeats}\n"
                f"Noise: {'[bold green]On[/]' if run.noise.enabled else '[bold red]Off[/]'}",
                title="Simulation",
                expand=False,
            )
        )
        result = run_ensemble(
            chip_list,
            run.protocol,
            failures,
            run.noise,
            run.seed,
            n_repeats=run.repeats,
            max_workers=run.workers,
        )

    with _exit_codes():
        devices = {(chip.chip_id, d.junction_id): d for chip in result.chips for d in chip.junctions}
        files = [
            write_trace(
                trace,
                run.output_dir,
                device=devices[(trace.chip_id, trace.junction_id)],
                noise_config=run.noise,
                with_repeat=run.repeats > 1,
            )
            for trace in result.traces
        ]
        write_index(
            run.output_dir,
            result.chips,
            files,
            seed=run.seed,
            repeats=run.repeats,
            protocol=run.protocol.model_dump(mode="json"),
            noise=run.noise.model_dump(mode="json"),
        )
    logger.info(f"Wrote {len(files)} trace files to {run.output_dir}")
    typer.echo(f"traces = {len(files)}")
    typer.echo(f"output_dir = {run.output_dir}")


# -- analyze ----------------------------------------------------------------------------


def _geometries(trace_dir: Path, traces) -> dict:
    geometries = read_device_geometries(trace_dir)
    for trace in traces:
        key = (trace.chip_id, trace.junction_id)
        if key not in geometries and trace.junction_id in DESIGNED_DIMENSIONS:
            geometries[key] = designed_geometry(trace.junction_id)
    return geometries


@app.command("analyze")
def analyze(
    trace_dir: Path = typer.Argument(None, help="Directory of trace CSV files"),
    config: Path = typer.Option(None, "--config", help="Analysis config YAML"),
    output: Path = typer.Option(None, "-o", "--output", help="Report directory (default: the trace directory)"),
    fixture: Path = typer.Option(None, "--fixture", help="Yield-count fixture instead of traces"),
):
    """
    Extract switching metrics, statistics and yields from trace files.
    """
    if fixture is not None:
        with _exit_codes():
            tables = load_published_tables(fixture)
            yields = fixture_yields(tables)
            out_dir = output or OUTPUT_DIR
            save_dict({name: table.model_dump(mode="json") for name, table in yields.items()}, out_dir / "yields.json")
        for name, table in yields.items():
            for row in [*table.rows, table.total]:
                value = "n/a" if row.yield_percent is None else f"{row.yield_percent:g}"
                typer.echo(f"{name}.{row.group_key} = {row.switching_count}/{row.measured_count} ({value}%)")
        return

    if trace_dir is None:
        console.print("[bold red]Error:[/] TRACE_DIR or --fixture is required")
        raise typer.Exit(EXIT_INPUT_ERROR)

    with _exit_codes():
        analysis_config = _load_yaml_config(config, AnalysisConfig) if config else AnalysisConfig()
        traces, malformed = read_trace_dir(trace_dir)
        if not traces:
            raise ConfigError(f"{trace_dir}: no readable trace files")
        report = build_report(traces, analysis_config, _geometries(trace_dir, traces), malformed)

    with _exit_codes():
        write_report(report, output or trace_dir)

    typer.echo(format_summary(report))
    if report.diagnoses:
        console.print(format_diagnosis(report.diagnoses))
    if malformed:
        for name in malformed:
            console.print(f"[bold red]Malformed:[/] {name}")
        raise typer.Exit(EXIT_INPUT_ERROR)


# -- report -----------------------------------------------------------------------------


@app.command("report")
def report(
    metrics_file: Path = typer.Argument(..., help="metrics.json written by analyze"),
    output: Path = typer.Option(None, "-o", "--output", help="Directory for plot-data CSVs"),
):
    """
    Write plot-ready tables (box statistics, V_p scatter, correlations) from a metrics report.
    """
    with _exit_codes():
        metrics = load_report(metrics_file)
    with _exit_codes():
        written = write_plot_data(metrics, output or metrics_file.parent)
    for path in written:
        typer.echo(str(path))


def main():
    """
    Main entry point for the hybrid-switch command line.
    """
    app()


if __name__ == "__main__":
    main()
