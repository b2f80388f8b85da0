"""Flip-process measure, entropy-rate brackets, and capacity bounds.

Applied to a computational basis state, every branch path either keeps or
flips each qubit, so the channel output is diagonal and its spectrum is the
law of a binary hidden-Markov process: the hidden chain is the active
depolarizing branch, the observation is whether qubit t flipped, emitted
with probability (1 -/+ x_i)/2.

The entropy rate of that process is what caps the product-state capacity
(capacity = 1 - rate).  The rate itself has no closed form in general; we
bracket it between the standard conditional entropies

    H(X_n | X_1..X_{n-1}, S_1)  <=  rate  <=  H(X_n | X_1..X_{n-1})

computed exactly by the forward algorithm over all length-n strings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, MarkovMemory
from .errors import InvalidParameterError
from .linalg import shannon_entropy

EXACT_ENUMERATION_MAX = 24


@dataclass(frozen=True)
class FlipProcess:
    """Hidden branch chain + per-branch flip probabilities.

    emission[i, k] is the probability that hidden state i emits symbol k
    (k = 1 meaning the qubit flipped): (1 + x_i)/2, (1 - x_i)/2.
    """

    memory: MarkovMemory
    emission: np.ndarray

    @classmethod
    def from_params(cls, params: ChannelParams) -> "FlipProcess":
        return cls.from_memory(params.memory, params.x0, params.x1)

    @classmethod
    def from_memory(cls, memory: MarkovMemory, x0: float, x1: float) -> "FlipProcess":
        """Flip process driven by an arbitrary ergodic 2x2 chain."""
        for name, x in (("x0", x0), ("x1", x1)):
            if not -1.0 - 1e-12 <= x <= 1.0 + 1e-12:
                raise InvalidParameterError(f"{name} = {x:.6g} outside [-1, 1]")
        emission = np.array(
            [
                [(1.0 + x0) / 2.0, (1.0 - x0) / 2.0],
                [(1.0 + x1) / 2.0, (1.0 - x1) / 2.0],
            ]
        )
        return cls(memory=memory, emission=emission)


def _check_exact(n: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n = {n} must be >= 1")
    if n > EXACT_ENUMERATION_MAX:
        raise InvalidParameterError(
            f"n = {n} exceeds the exact-enumeration cap {EXACT_ENUMERATION_MAX}"
        )


def _forward_init(process: FlipProcess, initial_state=None) -> np.ndarray:
    """Joint P(k_1, hidden state); rows index k_1, columns the hidden state.

    ``initial_state`` pins the hidden state at time 1 (used by the lower
    bracket); otherwise the chain starts stationary.
    """
    if initial_state is None:
        start = process.memory.stationary
    else:
        start = np.zeros(2)
        start[initial_state] = 1.0
    return (start[None, :] * process.emission.T).copy()


def _forward_step(forward: np.ndarray, process: FlipProcess) -> np.ndarray:
    """One forward-algorithm step over all strings at once.

    forward[s, i] = P(string s, hidden_t = i); strings are indexed with the
    first symbol as the most significant bit.
    """
    propagated = forward @ process.memory.transition
    extended = propagated[:, None, :] * process.emission.T[None, :, :]
    return extended.reshape(-1, 2)


def path_measure(process: FlipProcess, n: int) -> np.ndarray:
    """Exact law of the first n flip symbols, indexed MSB-first; sums to 1."""
    _check_exact(n)
    forward = _forward_init(process)
    for _ in range(n - 1):
        forward = _forward_step(forward, process)
    return forward.sum(axis=1)


def _block_entropy_series(process: FlipProcess, n: int, initial_state=None) -> np.ndarray:
    """H(X_1..X_t) for t = 1..n, optionally conditioned on the first hidden state."""
    entropies = np.empty(n)
    forward = _forward_init(process, initial_state)
    entropies[0] = shannon_entropy(forward.sum(axis=1))
    for t in range(1, n):
        forward = _forward_step(forward, process)
        entropies[t] = shannon_entropy(forward.sum(axis=1))
    return entropies


def block_entropy(process: FlipProcess, n: int) -> float:
    """H of the length-n flip-string law, in bits; equals the output entropy
    of the n-fold channel on any basis product state."""
    _check_exact(n)
    return float(_block_entropy_series(process, n)[-1])


@dataclass(frozen=True)
class EntropyRateBracket:
    lower: float
    upper: float
    block_length: int

    @property
    def estimate(self) -> float:
        return (self.lower + self.upper) / 2.0

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _bracket_from_series(stationary, cond0, cond1, gamma, n) -> EntropyRateBracket:
    upper = stationary[n - 1] - stationary[n - 2]
    lower = gamma[0] * (cond0[n - 1] - cond0[n - 2]) + gamma[1] * (cond1[n - 1] - cond1[n - 2])
    return EntropyRateBracket(lower=float(lower), upper=float(upper), block_length=n)


def entropy_rate_bracket(process: FlipProcess, n: int) -> EntropyRateBracket:
    """Conditional-entropy bracket at block length n (n >= 2).

    upper = H(X_n | X_1..X_{n-1}); lower additionally conditions on the
    hidden state at time 1.  Both converge monotonically to the rate.
    """
    if n < 2:
        raise InvalidParameterError(f"bracket needs n >= 2, got n = {n}")
    _check_exact(n)
    stationary = _block_entropy_series(process, n)
    cond0 = _block_entropy_series(process, n, initial_state=0)
    cond1 = _block_entropy_series(process, n, initial_state=1)
    return _bracket_from_series(stationary, cond0, cond1, process.memory.stationary, n)


@dataclass(frozen=True)
class CapacityEstimate:
    """Product-state capacity with its bracket: capacity in [lower, upper]."""

    capacity: float
    lower: float
    upper: float
    rate_bracket: EntropyRateBracket
    n_used: int
    converged: bool


def product_state_capacity(
    params: ChannelParams,
    n_max: int = 20,
    tolerance: float = 1e-4,
) -> CapacityEstimate:
    """1 - (flip-process entropy rate), bracketed to the requested half-width.

    Grows the block length until the bracket half-width drops below
    ``tolerance`` or n_max (clamped to the exact-enumeration cap) is hit;
    a partial bracket is returned (flagged ``converged=False``), never an
    error.
    """
    if n_max < 1:
        raise InvalidParameterError(f"n_max = {n_max} must be >= 1")
    n_max = min(n_max, EXACT_ENUMERATION_MAX)
    process = FlipProcess.from_params(params)
    gamma = process.memory.stationary
    forwards = [_forward_init(process), _forward_init(process, 0), _forward_init(process, 1)]
    series = [[shannon_entropy(f.sum(axis=1))] for f in forwards]
    # at n = 1 the rate is pinned only by 0 <= rate <= H(X_1)
    bracket = EntropyRateBracket(lower=0.0, upper=series[0][0], block_length=1)
    if bracket.width / 2.0 > tolerance:
        for n in range(2, n_max + 1):
            for k in range(3):
                forwards[k] = _forward_step(forwards[k], process)
                series[k].append(shannon_entropy(forwards[k].sum(axis=1)))
            bracket = _bracket_from_series(series[0], series[1], series[2], gamma, n)
            if bracket.width / 2.0 <= tolerance:
                break
    return _estimate_from(bracket, tolerance)


def _estimate_from(bracket: EntropyRateBracket, tolerance: float) -> CapacityEstimate:
    return CapacityEstimate(
        capacity=1.0 - bracket.estimate,
        lower=1.0 - bracket.upper,
        upper=1.0 - bracket.lower,
        rate_bracket=bracket,
        n_used=bracket.block_length,
        converged=bracket.width / 2.0 <= tolerance,
    )


def markov_entropy_rate(memory: MarkovMemory) -> float:
    """Entropy rate of the memory chain itself: sum_i gamma_i H(row i).

    For the symmetric chain this is the binary entropy of (1+mu)/2.
    """
    rate = 0.0
    for i in range(2):
        rate += memory.stationary[i] * shannon_entropy(memory.transition[i])
    return float(rate)


def capacity_upper_bound(
    params: ChannelParams,
    n_max: int = 20,
    tolerance: float = 1e-4,
    estimate: CapacityEstimate | None = None,
) -> float:
    """Upper bound on the full classical capacity: the product-state
    capacity's upper bracket plus the memory chain's entropy rate, clamped
    to the 1-bit-per-qubit ceiling."""
    if estimate is None:
        estimate = product_state_capacity(params, n_max=n_max, tolerance=tolerance)
    bound = estimate.upper + markov_entropy_rate(params.memory)
    return float(min(1.0, bound))
