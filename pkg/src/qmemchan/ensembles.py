"""Input-state families and ensemble information quantities.

Each family names a pure n-qubit state; the ensemble actually fed to the
channel is its equiprobable Pauli orbit {sigma_w rho sigma_w : w in
{0,1,2,3}^n}.  The channel commutes with Pauli-string conjugation and the
orbit averages to the maximally mixed state, so the ensemble's Holevo
quantity collapses to I_n = n - S(Gamma_n(rho)) and the 4**n orbit is never
materialized (except in tests).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, apply_gamma_n_fast
from .errors import InvalidParameterError
from .linalg import ket_to_dm, num_qubits, pauli_conjugate, von_neumann_entropy

FAMILY_KINDS = ("product", "ghz", "w", "max_entangled", "schmidt")


@dataclass(frozen=True)
class InputFamily:
    """A named pure input state on n qubits.

    kind: 'product' (a computational basis state, see ``bits``), 'ghz', 'w',
    'max_entangled' (maximal entanglement between the first and second half
    of the chain, n even) or 'schmidt' (two-qubit cos|00> + e^{i phi} sin|11>).
    """

    kind: str
    n: int
    bits: int = 0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidParameterError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise InvalidParameterError(f"n = {self.n} must be >= 1")
        if self.kind == "w" and self.n < 2:
            raise InvalidParameterError("the W state needs n >= 2")
        if self.kind == "max_entangled" and self.n % 2 != 0:
            raise InvalidParameterError("half-chain entanglement needs even n")
        if self.kind == "schmidt" and self.n != 2:
            raise InvalidParameterError("the Schmidt-pair family is two-qubit")
        if self.kind == "product" and not 0 <= self.bits < 2**self.n:
            raise InvalidParameterError(f"bits = {self.bits} out of range for n = {self.n}")

    def state_vector(self) -> np.ndarray:
        dim = 2**self.n
        psi = np.zeros(dim, dtype=complex)
        if self.kind == "product":
            psi[self.bits] = 1.0
        elif self.kind == "ghz":
            psi[0] = psi[dim - 1] = 1.0 / math.sqrt(2.0)
        elif self.kind == "w":
            amp = 1.0 / math.sqrt(self.n)
            for k in range(self.n):
                psi[1 << k] = amp
        elif self.kind == "max_entangled":
            half = 2 ** (self.n // 2)
            amp = 1.0 / math.sqrt(half)
            for j in range(half):
                psi[j * half + j] = amp
        else:  # schmidt
            psi[0] = math.cos(self.theta)
            psi[dim - 1] = math.sin(self.theta) * np.exp(1j * self.phi)
        return psi


def basis_product(n: int, bits: int = 0) -> InputFamily:
    return InputFamily(kind="product", n=n, bits=bits)


def ghz(n: int) -> InputFamily:
    return InputFamily(kind="ghz", n=n)


def w_state(n: int) -> InputFamily:
    return InputFamily(kind="w", n=n)


def max_entangled_halves(n: int) -> InputFamily:
    return InputFamily(kind="max_entangled", n=n)


def schmidt_pair(theta: float, phi: float = 0.0) -> InputFamily:
    return InputFamily(kind="schmidt", n=2, theta=theta, phi=phi)


def generate(family: InputFamily) -> np.ndarray:
    """Density matrix of the family's pure state."""
    return ket_to_dm(family.state_vector())


@dataclass(frozen=True)
class HolevoEnsemble:
    states: tuple
    probs: np.ndarray

    def __post_init__(self):
        if len(self.states) != len(self.probs):
            raise InvalidParameterError("states and probs length mismatch")
        if abs(float(np.sum(self.probs)) - 1.0) > 1e-12 or np.any(np.asarray(self.probs) < 0):
            raise InvalidParameterError("probs is not a probability vector")
        dims = {s.shape for s in self.states}
        if len(dims) != 1:
            raise InvalidParameterError(f"mixed state dimensions {dims}")


def pauli_orbit_ensemble(rho: np.ndarray) -> HolevoEnsemble:
    """The explicit equiprobable Pauli orbit of rho (4**n members; small n only)."""
    n = num_qubits(rho)
    states = tuple(
        pauli_conjugate(rho, indices) for indices in itertools.product(range(4), repeat=n)
    )
    probs = np.full(len(states), 1.0 / len(states))
    return HolevoEnsemble(states=states, probs=probs)


def holevo_quantity(ensemble: HolevoEnsemble, params: ChannelParams) -> float:
    """S(average output) - average output entropy for a fixed ensemble, in bits."""
    outputs = [apply_gamma_n_fast(state, params) for state in ensemble.states]
    average = sum(p * out for p, out in zip(ensemble.probs, outputs))
    mean_entropy = sum(p * von_neumann_entropy(out) for p, out in zip(ensemble.probs, outputs))
    return von_neumann_entropy(average) - mean_entropy


@dataclass(frozen=True)
class MutualInformation:
    family: InputFamily
    i_n: float
    per_use: float


def orbit_mutual_information(family: InputFamily, params: ChannelParams) -> MutualInformation:
    """I_n = n - S(Gamma_n(rho)) for the family's Pauli-orbit ensemble.

    Uses covariance + unitality instead of materializing the orbit.
    """
    rho = generate(family)
    i_n = family.n - von_neumann_entropy(apply_gamma_n_fast(rho, params))
    return MutualInformation(family=family, i_n=i_n, per_use=i_n / family.n)


def default_families(n: int) -> list[InputFamily]:
    """The four families the figure sweeps compare (max_entangled only at even n)."""
    families = [basis_product(n), ghz(n), w_state(n)]
    if n % 2 == 0:
        families.append(max_entangled_halves(n))
    return families


def family_comparison(
    params: ChannelParams,
    n: int,
    families: list[InputFamily] | None = None,
) -> list[MutualInformation]:
    """Per-family orbit mutual information, sorted by per-use value descending.

    Ties keep the input order (sorted() is stable).
    """
    if families is None:
        families = default_families(n)
    for family in families:
        if family.n != n:
            raise InvalidParameterError(f"family {family.kind} has n = {family.n}, expected {n}")
    rows = [orbit_mutual_information(family, params) for family in families]
    return sorted(rows, key=lambda row: -row.per_use)
