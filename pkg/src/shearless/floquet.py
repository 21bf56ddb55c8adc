"""Floquet analysis: monodromy, quasienergies, and local spectra.

The one-period propagator U(T) defines Floquet modes through
U phi_m = exp(-i eps_m) phi_m; the quasienergy eps_m (the phase in units
of 1 / T) is reported in (-pi, pi].  A wavepacket's local spectrum is the
set of weights w_m = |<phi_m | psi>|^2 over the modes; smoothing it with a
wrapped Gaussian exposes the ladder structure of near-integrable packets.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.signal

from .errors import NoConvergence, NonPositiveSigma, NoPeaks, NotUnitary
from .model import SimParams
from .quantum import propagate


def wrap_phase(x):
    """Map angles into (-pi, pi]."""
    return np.pi - np.mod(np.pi - np.asarray(x, dtype=float), 2.0 * np.pi)


def monodromy(params: SimParams, substeps=None) -> np.ndarray:
    """One-period propagator U(T), built by evolving the identity columns."""
    eye = np.eye(params.N, dtype=complex)
    return propagate(params, eye, 0.0, params.period, substeps=substeps)


@dataclass(frozen=True)
class FloquetDecomposition:
    """Quasienergies sorted ascending and the matching orthonormal modes.

    ``modes[:, m]`` is the eigenvector of eigenphase ``eigenphases[m]``.
    """

    eigenphases: np.ndarray
    modes: np.ndarray


def floquet_decompose(
    u: np.ndarray, unitarity_tol: float = 1e-8
) -> FloquetDecomposition:
    """Eigenphases and orthonormal Floquet modes of a unitary matrix.

    Uses a complex Schur decomposition, which returns an orthonormal basis
    even for (numerically) degenerate eigenphases.  Raises ``NotUnitary``
    when max |U^H U - 1| exceeds ``unitarity_tol`` and ``NoConvergence``
    when the QR iteration fails.
    """
    u = np.asarray(u, dtype=complex)
    residual = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if residual > unitarity_tol:
        raise NotUnitary(
            f"unitarity residual {residual:.3e} exceeds {unitarity_tol:.1e}"
        )
    try:
        t, q = scipy.linalg.schur(u, output="complex")
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"Schur decomposition failed: {exc}") from exc
    eigenphases = wrap_phase(-np.angle(np.diagonal(t)))
    order = np.argsort(eigenphases, kind="stable")
    return FloquetDecomposition(eigenphases=eigenphases[order], modes=q[:, order])


@dataclass(frozen=True)
class LocalSpectrum:
    """Overlap weights of one state against a Floquet mode basis."""

    eigenphases: np.ndarray
    weights: np.ndarray

    def filtered(self, floor: float = 1e-3):
        """Entries with weight above ``floor``, still sorted by eigenphase."""
        keep = self.weights > floor
        return self.eigenphases[keep], self.weights[keep]


def local_spectrum(decomp: FloquetDecomposition, psi: np.ndarray) -> LocalSpectrum:
    """Weights w_m = |<phi_m | psi>|^2; they sum to 1 for normalized psi."""
    weights = np.abs(decomp.modes.conj().T @ np.asarray(psi, dtype=complex)) ** 2
    return LocalSpectrum(eigenphases=decomp.eigenphases.copy(), weights=weights)


@dataclass(frozen=True)
class SmoothedSpectrum:
    """Wrapped-Gaussian density S(eps) sampled on a uniform phase grid."""

    grid: np.ndarray
    density: np.ndarray
    sigma: float


def smooth_spectrum(
    spectrum: LocalSpectrum, sigma: float, grid_size: int = 4096
) -> SmoothedSpectrum:
    """S(eps) = sum_m w_m G_sigma(eps - eps_m) with a wrapped Gaussian kernel.

    The grid covers (-pi, pi] at cell centres; enough periodic images are
    summed that the truncation error is negligible even for sigma >> 1, in
    which case S becomes flat at (sum_m w_m) / 2 pi.
    """
    if sigma <= 0.0:
        raise NonPositiveSigma(f"sigma must be > 0, got {sigma}")
    grid = -np.pi + 2.0 * np.pi * (np.arange(grid_size) + 0.5) / grid_size
    n_images = int(np.ceil(4.0 * sigma / (2.0 * np.pi))) + 2
    norm = 1.0 / (sigma * np.sqrt(2.0 * np.pi))
    density = np.zeros(grid_size)
    for k in range(-n_images, n_images + 1):
        diff = grid[:, None] - (spectrum.eigenphases[None, :] + 2.0 * np.pi * k)
        density += np.exp(-0.5 * (diff / sigma) ** 2) @ spectrum.weights
    return SmoothedSpectrum(grid=grid, density=norm * density, sigma=sigma)


def peak_positions(
    smoothed: SmoothedSpectrum, min_prominence: float = 0.10
) -> np.ndarray:
    """Local maxima of S with topographic prominence above a global fraction.

    ``min_prominence`` is measured relative to max S.  Detection runs on
    three tiled copies of the density so peaks near the branch cut and
    their prominences are handled circularly.  Raises ``NoPeaks`` when
    nothing qualifies.
    """
    s = smoothed.density
    g = s.size
    threshold = min_prominence * float(s.max())
    idx, _ = scipy.signal.find_peaks(np.tile(s, 3), prominence=threshold)
    idx = idx[(idx >= g) & (idx < 2 * g)] - g
    if idx.size == 0:
        raise NoPeaks(
            f"no peaks with prominence >= {min_prominence:g} of the maximum"
        )
    return smoothed.grid[idx]


def peak_spacings(
    smoothed: SmoothedSpectrum, min_prominence: float = 0.10
) -> np.ndarray:
    """Circular gaps between consecutive peaks, one per peak.

    The gaps are returned in peak order (ascending eigenphase); the last
    entry closes the circle, so they sum to 2 pi.  A single peak yields
    the full circle [2 pi].
    """
    peaks = np.sort(peak_positions(smoothed, min_prominence))
    if peaks.size == 1:
        return np.array([2.0 * np.pi])
    gaps = np.diff(peaks)
    return np.append(gaps, 2.0 * np.pi - (peaks[-1] - peaks[0]))


def spacing_rsd(smoothed: SmoothedSpectrum, min_prominence: float = 0.10) -> float:
    """Relative standard deviation of the ladder gaps.

    Uses the linear gaps between consecutive sorted peaks, leaving out the
    arc that closes the circle: a finite ladder occupies an arc of phases,
    and the closure gap reflects the arc length rather than the rung
    spacing.  (Phases are reported in (-pi, pi]; the statistic assumes the
    ladder does not straddle the branch cut.)  Needs at least three peaks.
    """
    peaks = np.sort(peak_positions(smoothed, min_prominence))
    if peaks.size < 3:
        raise NoPeaks(f"need >= 3 peaks for a spacing statistic, got {peaks.size}")
    gaps = np.diff(peaks)
    return float(np.std(gaps) / np.mean(gaps))
