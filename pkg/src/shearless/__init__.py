"""Quantum transport on shearless tori.

A driven chain with a single excitation, its classical image on the torus,
Floquet quasienergy analysis and pairwise concurrence, plus a CLI that
writes delimited tables, plot scripts and rendered figures.
"""

from . import errors
from .classical import (
    PhasePoint,
    SOSResult,
    ShearlessPoint,
    canonical_p,
    canonical_x,
    canonicalize,
    energy,
    ensemble_spread,
    find_shearless,
    integrate,
    map_kicked,
    one_period_jacobian_det,
    one_period_map,
    rotation_number,
    rotation_profile,
    step,
    surface_of_section,
)
from .config import (
    ExperimentConfig,
    apply_overrides,
    default_config,
    load_config,
    parse_config,
)
from .entanglement import (
    ConcurrenceSeries,
    concurrence_one_excitation,
    concurrence_series,
    concurrence_wootters,
    reduce_two_site,
    standard_pairs,
)
from .floquet import (
    FloquetDecomposition,
    LocalSpectrum,
    SmoothedSpectrum,
    floquet_decompose,
    local_spectrum,
    monodromy,
    peak_positions,
    peak_spacings,
    smooth_spectrum,
    spacing_rsd,
    wrap_phase,
)
from .model import (
    DRIVES,
    KICKED,
    SINUSOIDAL,
    PacketSpec,
    SimParams,
    drive_value,
)
from .output import OutputTable, read_table, render_table, write_table
from .quantum import (
    PacketDiagnostics,
    apply_hamiltonian,
    gaussian_packet,
    hopping_eigenvalues,
    packet_diagnostics,
    plane_wave,
    potential_profile,
    propagate,
    site_labels,
    spin_distribution,
)
from .version import __version__

__all__ = [
    "__version__",
    "errors",
    "SimParams",
    "PacketSpec",
    "drive_value",
    "SINUSOIDAL",
    "KICKED",
    "DRIVES",
    "PhasePoint",
    "SOSResult",
    "ShearlessPoint",
    "canonical_x",
    "canonical_p",
    "canonicalize",
    "energy",
    "integrate",
    "step",
    "map_kicked",
    "one_period_map",
    "surface_of_section",
    "rotation_number",
    "rotation_profile",
    "find_shearless",
    "ensemble_spread",
    "one_period_jacobian_det",
    "gaussian_packet",
    "plane_wave",
    "site_labels",
    "potential_profile",
    "hopping_eigenvalues",
    "apply_hamiltonian",
    "propagate",
    "spin_distribution",
    "packet_diagnostics",
    "PacketDiagnostics",
    "monodromy",
    "FloquetDecomposition",
    "floquet_decompose",
    "LocalSpectrum",
    "local_spectrum",
    "SmoothedSpectrum",
    "smooth_spectrum",
    "peak_positions",
    "peak_spacings",
    "spacing_rsd",
    "wrap_phase",
    "reduce_two_site",
    "concurrence_wootters",
    "concurrence_one_excitation",
    "concurrence_series",
    "ConcurrenceSeries",
    "standard_pairs",
    "ExperimentConfig",
    "parse_config",
    "load_config",
    "default_config",
    "apply_overrides",
    "OutputTable",
    "write_table",
    "read_table",
    "render_table",
]
