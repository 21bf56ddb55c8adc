"""Shared fixtures: the expensive evolutions are computed once per session."""

import numpy as np
import pytest

from shearless import (
    PacketSpec,
    SimParams,
    concurrence_series,
    floquet_decompose,
    gaussian_packet,
    monodromy,
    propagate,
)


def evolve_stroboscopic(params, psi, n_periods):
    """Propagate period by period, returning all n_periods + 1 states."""
    states = [psi]
    for n in range(n_periods):
        psi = propagate(params, psi, n * params.period, (n + 1) * params.period)
        states.append(psi)
    return states


@pytest.fixture(scope="session")
def floquet_012():
    params = SimParams(omega=0.12)
    u = monodromy(params)
    return params, u, floquet_decompose(u)


@pytest.fixture(scope="session")
def floquet_020():
    params = SimParams(omega=0.20)
    u = monodromy(params)
    return params, u, floquet_decompose(u)


@pytest.fixture(scope="session")
def floquet_100():
    params = SimParams(omega=1.0)
    u = monodromy(params)
    return params, u, floquet_decompose(u)


@pytest.fixture(scope="session")
def evolution_012():
    params = SimParams(omega=0.12)
    psi = gaussian_packet(params, PacketSpec())
    return params, evolve_stroboscopic(params, psi, 20)


@pytest.fixture(scope="session")
def evolution_020():
    params = SimParams(omega=0.20)
    psi = gaussian_packet(params, PacketSpec())
    return params, evolve_stroboscopic(params, psi, 10)


@pytest.fixture(scope="session")
def series_012():
    params = SimParams(omega=0.12)
    psi = gaussian_packet(params, PacketSpec())
    return params, concurrence_series(params, psi)


@pytest.fixture(scope="session")
def series_020():
    params = SimParams(omega=0.20)
    psi = gaussian_packet(params, PacketSpec())
    return params, concurrence_series(params, psi)
