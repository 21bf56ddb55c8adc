"""Single-excitation wavefunctions on the ring and their time evolution.

Sites carry external labels j = 1..N (array index j - 1).  The Hamiltonian
acts as

    (H psi)_j = (J / 2) (psi_{j-1} + psi_{j+1}) + B0 F(t) cos(2 pi j / N) psi_j

with periodic boundaries.  The hopping term is diagonal in the discrete
Fourier basis with eigenvalue J cos(2 pi m / N), so the sinusoidal drive is
propagated with a Strang splitting (half potential, exact hopping, half
potential), the field evaluated at each substep midpoint.  Every substep is
a product of unitaries, hence exactly norm-preserving.  The kicked drive
applies the impulse phase exp(-i B0 T cos(2 pi j / N)) once per period
followed by exact free hopping.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadTimeOrder, IndexOutOfRange, KickedDriveNotSampleable
from .model import KICKED, PacketSpec, SimParams, drive_value


def site_labels(params: SimParams) -> np.ndarray:
    """External site labels 1..N."""
    return np.arange(1, params.N + 1)


def potential_profile(params: SimParams) -> np.ndarray:
    """Static spatial profile cos(2 pi j / N) of the driven potential."""
    return np.cos(2.0 * np.pi * site_labels(params) / params.N)


def hopping_eigenvalues(params: SimParams) -> np.ndarray:
    """Hopping band J cos k on the np.fft frequency grid."""
    k = 2.0 * np.pi * np.fft.fftfreq(params.N)
    return params.J * np.cos(k)


def plane_wave(params: SimParams, m: int) -> np.ndarray:
    """Normalized hopping eigenstate psi_j = exp(2 pi i m j / N) / sqrt(N)."""
    j = site_labels(params)
    return np.exp(2j * np.pi * m * j / params.N) / math.sqrt(params.N)


def gaussian_packet(
    params: SimParams, spec: PacketSpec, snap_k0: bool = False
) -> np.ndarray:
    """Normalized Gaussian packet a_j ~ exp(-d^2 / (2 delta_j^2)) e^(i k0 j).

    d is the minimal-image distance from j to j0 on the ring.  With
    ``snap_k0`` the momentum is rounded to the nearest Fourier grid point
    2 pi m / N, which makes translates of the packet exact ring shifts.
    """
    if spec.j0 > params.N:
        raise IndexOutOfRange(f"j0 = {spec.j0} exceeds N = {params.N}")
    j = site_labels(params)
    d = np.mod(j - spec.j0 + params.N / 2, params.N) - params.N / 2
    k0 = spec.k0
    if snap_k0:
        k0 = 2.0 * np.pi * round(k0 * params.N / (2.0 * np.pi)) / params.N
    psi = np.exp(-(d**2) / (2.0 * spec.delta_j**2)) * np.exp(1j * k0 * j)
    return psi / np.linalg.norm(psi)


def apply_hamiltonian(params: SimParams, psi: np.ndarray, t: float) -> np.ndarray:
    """H(t) psi for the sinusoidal drive (kicked has no pointwise H)."""
    if params.drive == KICKED:
        raise KickedDriveNotSampleable("kicked drive has no pointwise Hamiltonian")
    hop = 0.5 * params.J * (np.roll(psi, 1, axis=0) + np.roll(psi, -1, axis=0))
    v = params.B0 * drive_value(params, t) * potential_profile(params)
    if psi.ndim > 1:
        v = v[:, None]
    return hop + v * psi


def _hop_step(psi: np.ndarray, phases: np.ndarray) -> np.ndarray:
    """Exact free-hopping evolution, diagonal in the Fourier basis."""
    if psi.ndim > 1:
        phases = phases[:, None]
    return np.fft.ifft(phases * np.fft.fft(psi, axis=0), axis=0)


def propagate(
    params: SimParams, psi: np.ndarray, t0: float, t1: float, substeps=None
) -> np.ndarray:
    """Evolve psi from t0 to t1 > t0.

    ``psi`` may be a single state of shape (N,) or a batch of shape (N, K)
    evolved column-wise.  ``substeps`` is the Strang resolution per period
    for the sinusoidal drive and is ignored by the kicked drive, which is
    exact: impulses fire at integer multiples of T in [t0, t1), with free
    hopping in between.
    """
    if t1 <= t0:
        raise BadTimeOrder(f"need t1 > t0, got t0 = {t0}, t1 = {t1}")
    psi = np.asarray(psi, dtype=complex)
    band = hopping_eigenvalues(params)
    if params.drive == KICKED:
        return _propagate_kicked(params, psi, t0, t1, band)
    if substeps is None:
        substeps = params.quantum_substeps
    span = t1 - t0
    n_steps = max(1, round(substeps * span / params.period))
    dt = span / n_steps
    hop = np.exp(-1j * band * dt)
    v = potential_profile(params)
    if psi.ndim > 1:
        v = v[:, None]
    half = -0.5j * dt * params.B0 * v
    omega = params.omega
    for s in range(n_steps):
        phase = np.exp(half * math.sin(omega * (t0 + (s + 0.5) * dt)))
        psi = phase * (_hop_step(phase * psi, hop))
    return psi


def _propagate_kicked(params, psi, t0, t1, band):
    T = params.period
    tol = 1e-9 * T
    v = potential_profile(params)
    if psi.ndim > 1:
        v = v[:, None]
    impulse_phase = np.exp(-1j * params.B0 * T * v)
    t = t0
    n = math.ceil(t0 / T - 1e-9)
    while n * T < t1 - tol:
        t_kick = n * T
        if t_kick > t + tol:
            psi = _hop_step(psi, np.exp(-1j * band * (t_kick - t)))
            t = t_kick
        psi = impulse_phase * psi
        n += 1
    if t1 > t + tol:
        psi = _hop_step(psi, np.exp(-1j * band * (t1 - t)))
    return psi


def spin_distribution(psi: np.ndarray) -> np.ndarray:
    """Site-resolved probabilities P(j) = |a_j|^2 (index 0 is site 1)."""
    return np.abs(psi) ** 2


@dataclass(frozen=True)
class PacketDiagnostics:
    """Circular centre (site units, in (0, N]), circular width, and IPR."""

    center: float
    width: float
    ipr: float


def packet_diagnostics(dist: np.ndarray) -> PacketDiagnostics:
    """Summarise a normalized site distribution on the ring.

    centre and width come from the first circular moment
    z = sum_j P(j) exp(2 pi i j / N): centre is the argument of z mapped to
    site units and width is (N / 2 pi) sqrt(-2 ln |z|), which reduces to
    the ordinary standard deviation for narrow packets.
    """
    dist = np.asarray(dist, dtype=float)
    n = dist.size
    j = np.arange(1, n + 1)
    z = np.sum(dist * np.exp(2j * np.pi * j / n))
    r = min(abs(z), 1.0)
    theta = np.angle(z) % (2.0 * np.pi)
    center = theta * n / (2.0 * np.pi)
    if center == 0.0:
        center = float(n)
    width = n / (2.0 * np.pi) * math.sqrt(-2.0 * math.log(max(r, 1e-300)))
    return PacketDiagnostics(center=float(center), width=width, ipr=float(np.sum(dist**2)))
