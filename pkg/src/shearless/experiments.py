"""Experiment drivers: one function per CLI subcommand.

Each driver takes a resolved ``ExperimentConfig`` and returns one or more
``OutputTable`` objects whose headers echo the full configuration, so a
table is reproducible from its own header alone.
"""

import numpy as np

from .classical import (
    _interior_extremum,
    ensemble_spread,
    rotation_profile,
    surface_of_section,
)
from .config import ExperimentConfig
from .entanglement import concurrence_series
from .errors import ContractViolation, NoPeaks, NotFound
from .floquet import (
    floquet_decompose,
    local_spectrum,
    monodromy,
    peak_positions,
    peak_spacings,
    smooth_spectrum,
    spacing_rsd,
)
from .output import OutputTable
from .quantum import gaussian_packet, packet_diagnostics, propagate, spin_distribution
from .version import __version__


def _header(config: ExperimentConfig, **extra) -> dict:
    header = {"generator": f"shearless {__version__}"}
    header.update(config.resolved())
    header.update(extra)
    return header


def run_sos(config: ExperimentConfig) -> OutputTable:
    """Stroboscopic phase portrait on a uniform grid of seeds."""
    params = config.params
    sos = config.section("sos")
    nx, npp = sos["x_seeds"], sos["p_seeds"]
    x0 = params.N * (np.arange(nx) + 0.5) / nx
    p0 = -np.pi + 2.0 * np.pi * (np.arange(npp) + 0.5) / npp
    seeds = np.stack(
        [np.repeat(x0, npp), np.tile(p0, nx)], axis=1
    )
    result = surface_of_section(
        params, seeds, sos["periods"], substeps=sos["substeps"]
    )
    n_seeds, n_rows = result.x.shape
    return OutputTable(
        name="sos",
        columns={
            "seed": np.repeat(np.arange(n_seeds), n_rows),
            "n": np.tile(np.arange(n_rows), n_seeds),
            "x": result.x.ravel(),
            "p": result.p.ravel(),
        },
        header=_header(config),
    )


def run_evolve(config: ExperimentConfig):
    """Wavepacket evolution: site distribution plus summary diagnostics."""
    params = config.params
    ev = config.section("evolve")
    stride, n_periods = ev["stride"], ev["periods"]
    psi = gaussian_packet(params, config.packet)
    n_times = n_periods * stride + 1
    dt = params.period / stride
    sites = np.arange(1, params.N + 1)
    dist_rows = {"t": [], "j": [], "prob": []}
    diag_rows = {"t": [], "norm": [], "center": [], "width": [], "ipr": []}
    for k in range(n_times):
        if k > 0:
            psi = propagate(params, psi, (k - 1) * dt, k * dt, substeps=ev["substeps"])
        t = k * dt
        dist = spin_distribution(psi)
        norm = float(np.sum(dist))
        if abs(norm - 1.0) > 1e-10:
            raise ContractViolation(
                f"norm drift {abs(norm - 1.0):.3e} exceeds 1e-10 at t = {t:g}"
            )
        diag = packet_diagnostics(dist)
        dist_rows["t"].append(np.full(params.N, t))
        dist_rows["j"].append(sites)
        dist_rows["prob"].append(dist)
        diag_rows["t"].append(t)
        diag_rows["norm"].append(norm)
        diag_rows["center"].append(diag.center)
        diag_rows["width"].append(diag.width)
        diag_rows["ipr"].append(diag.ipr)
    distribution = OutputTable(
        name="evolve_distribution",
        columns={key: np.concatenate(val) for key, val in dist_rows.items()},
        header=_header(config),
    )
    diagnostics = OutputTable(
        name="evolve_diagnostics",
        columns={key: np.asarray(val) for key, val in diag_rows.items()},
        header=_header(config),
    )
    return {"distribution": distribution, "diagnostics": diagnostics}


def run_floquet(config: ExperimentConfig):
    """Local quasienergy spectrum of the configured packet, raw and smoothed."""
    params = config.params
    fl = config.section("floquet")
    decomp = floquet_decompose(monodromy(params, substeps=fl["substeps"]))
    psi = gaussian_packet(params, config.packet)
    spectrum = local_spectrum(decomp, psi)
    eps, weights = spectrum.filtered(fl["weight_floor"])
    smoothed = smooth_spectrum(spectrum, fl["sigma"], grid_size=fl["grid_size"])
    note = ""
    try:
        peaks = peak_positions(smoothed, fl["prominence"])
        gaps = peak_spacings(smoothed, fl["prominence"])
    except NoPeaks as exc:
        peaks = np.array([])
        gaps = np.array([])
        note = str(exc)
    try:
        rsd = spacing_rsd(smoothed, fl["prominence"])
    except NoPeaks:
        rsd = ""
    stats = {
        "floquet.peak_count": peaks.size,
        "floquet.mean_circular_gap": float(np.mean(gaps)) if gaps.size else "",
        "floquet.spacing_rsd": rsd,
        "floquet.note": note,
    }
    raw = OutputTable(
        name="floquet_spectrum",
        columns={"eigenphase": eps, "weight": weights},
        header=_header(config, **stats),
    )
    smooth = OutputTable(
        name="floquet_smoothed",
        columns={"eigenphase": smoothed.grid, "density": smoothed.density},
        header=_header(config, **stats),
    )
    order = np.argsort(peaks)
    peak_table = OutputTable(
        name="floquet_peaks",
        columns={
            "eigenphase": np.sort(peaks),
            "circular_gap_to_next": gaps[order] if gaps.size else gaps,
        },
        header=_header(config, **stats),
    )
    return {"spectrum": raw, "smoothed": smooth, "peaks": peak_table}


def run_concurrence(config: ExperimentConfig) -> OutputTable:
    """Pairwise concurrence traces for the configured probe pairs."""
    params = config.params
    co = config.section("concurrence")
    psi = gaussian_packet(params, config.packet)
    series = concurrence_series(
        params,
        psi,
        pairs=co["pairs"],
        n_periods=co["periods"],
        stride=co["stride"],
        substeps=co["substeps"],
    )
    columns = {"t": series.times}
    for row, (i, j) in enumerate(series.pairs):
        columns[f"C_{i}_{j}"] = series.values[row]
    return OutputTable(name="concurrence", columns=columns, header=_header(config))


def run_rotation(config: ExperimentConfig) -> OutputTable:
    """Rotation-number profile over a momentum scan, with extremum search."""
    params = config.params
    ro = config.section("rotation")
    x0 = ro["x0"] if ro["x0"] is not None else float(config.packet.j0)
    p_values = np.linspace(ro["p_min"], ro["p_max"], ro["resolution"])
    nu, err = rotation_profile(
        params, x0, p_values, ro["iterations"], substeps=ro["substeps"]
    )
    extra = {"rotation.p_star": "", "rotation.nu_star": "", "rotation.note": ""}
    try:
        point = _interior_extremum(p_values, nu)
        extra["rotation.p_star"] = point.p_star
        extra["rotation.nu_star"] = point.nu_star
    except NotFound as exc:
        extra["rotation.note"] = str(exc)
    return OutputTable(
        name="rotation",
        columns={"p0": p_values, "nu": nu, "convergence_error": err},
        header=_header(config, **extra),
    )


def run_ensemble(config: ExperimentConfig) -> OutputTable:
    """Circular variance of a classical cloud matched to the packet."""
    params = config.params
    en = config.section("ensemble")
    variances = ensemble_spread(
        params,
        config.packet,
        en["samples"],
        en["periods"],
        en["rng_seed"],
        substeps=en["substeps"],
    )
    n = np.arange(en["periods"] + 1)
    return OutputTable(
        name="ensemble",
        columns={"n": n, "t": n * params.period, "variance": variances},
        header=_header(config),
    )
