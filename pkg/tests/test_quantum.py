"""Wavepacket construction and split-operator propagation."""

import math

import numpy as np
import pytest
import scipy.linalg

from shearless import (
    KICKED,
    PacketSpec,
    SimParams,
    apply_hamiltonian,
    gaussian_packet,
    hopping_eigenvalues,
    packet_diagnostics,
    plane_wave,
    potential_profile,
    propagate,
    spin_distribution,
)
from shearless.errors import (
    BadTimeOrder,
    IndexOutOfRange,
    KickedDriveNotSampleable,
)

P012 = SimParams(omega=0.12)
FREE = SimParams(B0=0.0, omega=0.12)


def test_gaussian_packet_shape_norm_and_peak():
    psi = gaussian_packet(P012, PacketSpec())
    assert psi.shape == (100,)
    assert abs(np.linalg.norm(psi) - 1.0) <= 1e-12
    dist = spin_distribution(psi)
    assert np.argmax(dist) == 24  # site 25
    # peak probability equals 1 / (sum of squared envelope over images)
    d = np.mod(np.arange(1, 101) - 25 + 50.0, 100.0) - 50.0
    expected = 1.0 / np.sum(np.exp(-(d**2) / 25.0))
    assert abs(dist[24] - expected) <= 1e-12
    assert abs(dist[24] - 0.11284) <= 1e-4


def test_gaussian_packet_symmetry_and_phase():
    psi = gaussian_packet(P012, PacketSpec(j0=25, k0=1.3))
    dist = spin_distribution(psi)
    for offset in range(1, 20):
        assert abs(dist[24 + offset] - dist[24 - offset]) <= 1e-12
    # k0 enters only as a local phase gradient
    ratio = psi[25] / psi[24] * abs(psi[24] / psi[25])
    assert abs(np.angle(ratio) - 1.3) <= 1e-9


def test_gaussian_packet_snap_and_bounds():
    spec = PacketSpec(j0=25, k0=1.0)
    snapped = gaussian_packet(P012, spec, snap_k0=True)
    k_grid = 2.0 * np.pi * round(1.0 * 100 / (2.0 * np.pi)) / 100
    manual = gaussian_packet(P012, PacketSpec(j0=25, k0=k_grid))
    assert np.max(np.abs(snapped - manual)) <= 1e-14
    with pytest.raises(IndexOutOfRange):
        gaussian_packet(P012, PacketSpec(j0=101))


def test_apply_hamiltonian_plane_waves_and_hermiticity():
    for m in (0, 3, 17, 50):
        psi = plane_wave(FREE, m)
        h_psi = apply_hamiltonian(FREE, psi, 0.0)
        expected = -math.cos(2.0 * np.pi * m / 100.0)
        assert np.max(np.abs(h_psi - expected * psi)) <= 1e-12
    rng = np.random.default_rng(5)
    a = rng.normal(size=100) + 1j * rng.normal(size=100)
    b = rng.normal(size=100) + 1j * rng.normal(size=100)
    t = 7.3
    lhs = np.vdot(a, apply_hamiltonian(P012, b, t))
    rhs = np.vdot(apply_hamiltonian(P012, a, t), b)
    assert abs(lhs - rhs) <= 1e-10
    with pytest.raises(KickedDriveNotSampleable):
        apply_hamiltonian(SimParams(drive=KICKED), a, 0.0)


def test_propagate_free_plane_wave_phase():
    # B0 = 0: each plane wave only picks up exp(-i J cos k t).
    psi = plane_wave(FREE, 7)
    t1 = 13.7
    out = propagate(FREE, psi, 0.0, t1, substeps=32)
    phase = np.exp(-1j * (-math.cos(2.0 * np.pi * 7 / 100.0)) * t1)
    assert np.max(np.abs(out - phase * psi)) <= 1e-10


def test_propagate_rejects_bad_interval():
    psi = gaussian_packet(P012, PacketSpec())
    with pytest.raises(BadTimeOrder):
        propagate(P012, psi, 5.0, 5.0)
    with pytest.raises(BadTimeOrder):
        propagate(P012, psi, 5.0, 1.0)


def test_propagate_norm_and_free_energy_conservation():
    psi = gaussian_packet(FREE, PacketSpec(k0=0.8))
    e0 = np.vdot(psi, apply_hamiltonian(FREE, psi, 0.0)).real
    out = propagate(FREE, psi, 0.0, 20.0 * FREE.period, substeps=64)
    e1 = np.vdot(out, apply_hamiltonian(FREE, out, 0.0)).real
    assert abs(np.linalg.norm(out) - 1.0) <= 1e-12
    assert abs(e1 - e0) <= 1e-10


def test_propagate_translation_covariance():
    # Free evolution commutes with ring shifts exactly.
    psi = gaussian_packet(FREE, PacketSpec(j0=25, k0=0.6))
    shifted = np.roll(psi, 17)
    a = propagate(FREE, shifted, 0.0, 9.0, substeps=32)
    b = np.roll(propagate(FREE, psi, 0.0, 9.0, substeps=32), 17)
    assert np.max(np.abs(a - b)) <= 1e-12


def test_propagate_batched_matches_single():
    psi0 = gaussian_packet(P012, PacketSpec())
    psi1 = gaussian_packet(P012, PacketSpec(j0=60, k0=0.5))
    batch = np.stack([psi0, psi1], axis=1)
    out = propagate(P012, batch, 0.0, P012.period, substeps=500)
    a = propagate(P012, psi0, 0.0, P012.period, substeps=500)
    b = propagate(P012, psi1, 0.0, P012.period, substeps=500)
    assert np.max(np.abs(out[:, 0] - a)) <= 1e-12
    assert np.max(np.abs(out[:, 1] - b)) <= 1e-12


def test_propagate_time_reversal_identity():
    # H(t) is real, and reversing the midpoint schedule of a whole-period
    # window flips the drive sign, so conjugation undoes the evolution.
    psi0 = gaussian_packet(P012, PacketSpec())
    n, T = 3, P012.period
    forward = propagate(P012, psi0, 0.0, n * T, substeps=2000)
    flipped = SimParams(omega=0.12, B0=-P012.B0)
    back = np.conj(propagate(flipped, np.conj(forward), 0.0, n * T, substeps=2000))
    assert np.max(np.abs(back - psi0)) <= 1e-8


def test_kicked_propagator_against_dense_oracle():
    params = SimParams(omega=0.20, drive=KICKED)
    hop = np.zeros((100, 100))
    idx = np.arange(100)
    hop[idx, (idx + 1) % 100] = -0.5
    hop[idx, (idx - 1) % 100] = -0.5
    impulse = np.diag(np.exp(-1j * 2.0 * params.period * potential_profile(params)))
    u_dense = scipy.linalg.expm(-1j * hop * params.period) @ impulse
    psi = gaussian_packet(params, PacketSpec())
    expected = u_dense @ (u_dense @ psi)
    out = propagate(params, psi, 0.0, 2.0 * params.period)
    assert np.max(np.abs(out - expected)) <= 1e-8


def test_kicked_propagate_composes_over_periods():
    params = SimParams(omega=0.20, drive=KICKED)
    psi = gaussian_packet(params, PacketSpec())
    twice = propagate(params, propagate(params, psi, 0.0, params.period),
                      params.period, 2.0 * params.period)
    direct = propagate(params, psi, 0.0, 2.0 * params.period)
    assert np.max(np.abs(twice - direct)) <= 1e-12


def test_spin_distribution_and_diagnostics():
    basis = np.zeros(100, dtype=complex)
    basis[36] = 1.0  # site 37
    dist = spin_distribution(basis)
    assert dist[36] == 1.0 and np.sum(dist) == 1.0
    diag = packet_diagnostics(dist)
    assert abs(diag.center - 37.0) <= 1e-9
    assert diag.width <= 1e-6
    assert abs(diag.ipr - 1.0) <= 1e-12
    uniform = np.full(100, 0.01)
    assert abs(packet_diagnostics(uniform).ipr - 0.01) <= 1e-15


def test_packet_diagnostics_gaussian_width():
    dist = spin_distribution(gaussian_packet(P012, PacketSpec()))
    diag = packet_diagnostics(dist)
    assert abs(diag.center - 25.0) <= 1e-9
    # probability profile has std delta_j / sqrt(2)
    assert abs(diag.width - 5.0 / math.sqrt(2.0)) <= 0.05


def test_packet_diagnostics_center_wraps_to_upper_bound():
    dist = np.zeros(100)
    dist[99] = 1.0  # site 100 sits at the branch point of the ring
    assert abs(packet_diagnostics(dist).center - 100.0) <= 1e-9


def test_hopping_eigenvalues_match_dense_spectrum():
    dense = np.zeros((100, 100))
    idx = np.arange(100)
    dense[idx, (idx + 1) % 100] = -0.5
    dense[idx, (idx - 1) % 100] = -0.5
    expected = np.sort(np.linalg.eigvalsh(dense))
    assert np.max(np.abs(np.sort(hopping_eigenvalues(P012)) - expected)) <= 1e-10
