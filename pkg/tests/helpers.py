"""Shared generators for the test suite (seeded numpy sampling)."""

import numpy as np

from qmemchan import ChannelParams


def random_params(rng, mu_lo=-0.95, mu_hi=0.95) -> ChannelParams:
    """Uniform draw over the valid region: x0, x1 in [-1/3, 1], mu in (lo, hi)."""
    mu = rng.uniform(mu_lo, mu_hi)
    x0, x1 = rng.uniform(-1.0 / 3.0, 1.0, size=2)
    return ChannelParams.from_x(mu, x0, x1)


def random_ket(rng, dim) -> np.ndarray:
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


def random_pure_dm(rng, dim) -> np.ndarray:
    psi = random_ket(rng, dim)
    return np.outer(psi, psi.conj())


def random_mixed_dm(rng, dim) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
