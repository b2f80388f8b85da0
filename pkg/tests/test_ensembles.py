import math

import numpy as np
import pytest

from helpers import random_params, random_pure_dm
from qmemchan import (
    ChannelParams,
    HolevoEnsemble,
    InvalidParameterError,
    apply_gamma_n_fast,
    basis_ket,
    basis_product,
    block_entropy,
    default_families,
    family_comparison,
    FlipProcess,
    generate,
    ghz,
    holevo_quantity,
    ket_to_dm,
    max_entangled_halves,
    orbit_mutual_information,
    pauli_orbit_ensemble,
    schmidt_pair,
    threshold_f,
    two_use_capacity,
    von_neumann_entropy,
    w_state,
)

BELL = ket_to_dm(np.array([1, 0, 0, 1]) / math.sqrt(2))


# ------------------------------------------------------------------ generation


def test_two_qubit_family_coincidences():
    assert np.max(np.abs(generate(ghz(2)) - BELL)) < 1e-14
    assert np.max(np.abs(generate(max_entangled_halves(2)) - BELL)) < 1e-14
    assert np.max(np.abs(generate(schmidt_pair(math.pi / 4)) - BELL)) < 1e-14
    w2 = ket_to_dm(np.array([0, 1, 1, 0]) / math.sqrt(2))
    assert np.max(np.abs(generate(w_state(2)) - w2)) < 1e-14


def test_generated_states_are_pure_and_normalized():
    for family in [basis_product(3, 5), ghz(4), w_state(5), max_entangled_halves(4),
                   schmidt_pair(0.7, 1.3)]:
        rho = generate(family)
        assert abs(np.trace(rho) - 1.0) < 1e-13
        assert abs(np.trace(rho @ rho) - 1.0) < 1e-13  # rank one


def test_family_validation():
    with pytest.raises(InvalidParameterError):
        w_state(1)
    with pytest.raises(InvalidParameterError):
        max_entangled_halves(3)
    with pytest.raises(InvalidParameterError):
        basis_product(2, 4)


def test_ghz_and_max_entangled_structure():
    psi = ghz(3).state_vector()
    assert psi[0] == pytest.approx(1 / math.sqrt(2))
    assert psi[7] == pytest.approx(1 / math.sqrt(2))
    assert np.count_nonzero(psi) == 2
    psi = max_entangled_halves(4).state_vector()
    # sum_j |j>|j> over the half-chain bipartition
    assert np.count_nonzero(psi) == 4
    for j in range(4):
        assert psi[j * 4 + j] == pytest.approx(0.5)


# ---------------------------------------------------------------- holevo chi


def test_holevo_single_state_is_zero():
    rng = np.random.default_rng(50)
    params = random_params(rng)
    ensemble = HolevoEnsemble(states=(random_pure_dm(rng, 4),), probs=np.array([1.0]))
    assert holevo_quantity(ensemble, params) == pytest.approx(0.0, abs=1e-12)


def test_holevo_basis_ensemble_noiseless():
    params = ChannelParams.from_x(0.4, 1.0, 1.0)
    for n in (1, 2, 3):
        states = tuple(ket_to_dm(basis_ket(n, j)) for j in range(2**n))
        probs = np.full(2**n, 1.0 / 2**n)
        chi = holevo_quantity(HolevoEnsemble(states=states, probs=probs), params)
        assert chi == pytest.approx(float(n), abs=1e-11)


def test_materialized_orbit_matches_shortcut():
    rng = np.random.default_rng(51)
    for n in (1, 2, 3):
        params = random_params(rng)
        rho = random_pure_dm(rng, 2**n)
        explicit = holevo_quantity(pauli_orbit_ensemble(rho), params)
        shortcut = n - von_neumann_entropy(apply_gamma_n_fast(rho, params))
        assert explicit == pytest.approx(shortcut, abs=1e-10)


def test_holevo_dim_mismatch():
    rng = np.random.default_rng(52)
    with pytest.raises(InvalidParameterError):
        HolevoEnsemble(
            states=(random_pure_dm(rng, 2), random_pure_dm(rng, 4)),
            probs=np.array([0.5, 0.5]),
        )


# ----------------------------------------------------------- mutual information


def test_orbit_information_matches_two_use_branches():
    rng = np.random.default_rng(53)
    for _ in range(10):
        params = random_params(rng)
        result = two_use_capacity(params)
        product = orbit_mutual_information(schmidt_pair(0.0), params)
        entangled = orbit_mutual_information(schmidt_pair(math.pi / 4), params)
        assert product.i_n == pytest.approx(2.0 * result.c2_product, abs=1e-12)
        assert entangled.i_n == pytest.approx(2.0 * result.c2_entangled, abs=1e-12)


def test_orbit_information_noiseless():
    params = ChannelParams.from_x(0.2, 1.0, 1.0)
    for family in default_families(4):
        mi = orbit_mutual_information(family, params)
        assert mi.i_n == pytest.approx(4.0, abs=1e-11)
        assert mi.per_use == pytest.approx(1.0, abs=1e-11)


def test_per_use_values_bounded():
    rng = np.random.default_rng(54)
    for _ in range(5):
        params = random_params(rng)
        for n in (2, 3, 4):
            for mi in family_comparison(params, n):
                assert -1e-12 <= mi.per_use <= 1.0 + 1e-12


def test_basis_product_matches_block_entropy():
    rng = np.random.default_rng(55)
    for n in (3, 5):
        params = random_params(rng)
        mi = orbit_mutual_information(basis_product(n), params)
        expected = 1.0 - block_entropy(FlipProcess.from_params(params), n) / n
        assert mi.per_use == pytest.approx(expected, abs=1e-10)


# ------------------------------------------------------------------ comparison


def test_comparison_sorted_and_validated():
    params = ChannelParams(mu=0.9, a=2 / 3, d=-4 / 3)
    rows = family_comparison(params, 6)
    values = [r.per_use for r in rows]
    assert values == sorted(values, reverse=True)
    assert rows[0].family.kind == "product"  # the n=6 conjecture-evidence regime
    with pytest.raises(InvalidParameterError):
        family_comparison(params, 4, families=[ghz(6)])


def test_comparison_winner_follows_threshold_at_two_uses():
    count = 0
    for mu in np.linspace(-0.9, 0.9, 10):
        for a in np.linspace(-2 / 3, 2.0, 10):
            for d in np.linspace(-4 / 3, 4 / 3, 10):
                try:
                    params = ChannelParams(mu=float(mu), a=float(a), d=float(d))
                except InvalidParameterError:
                    continue
                f = threshold_f(params)
                if abs(f) < 1e-9:
                    continue
                per = {r.family.kind: r.per_use for r in family_comparison(params, 2)}
                entangled_best = max(v for k, v in per.items() if k != "product")
                if abs(entangled_best - per["product"]) < 1e-12:
                    continue
                assert (f > 0) == (entangled_best > per["product"])
                count += 1
    assert count > 300  # the grid actually exercised the comparison


def test_identical_branches_favor_product():
    # d = 0 collapses to a memoryless depolarizing channel, which is additive
    for mu in (0.0, 0.5, -0.7):
        params = ChannelParams(mu=mu, a=0.9, d=0.0)
        for n in (2, 4):
            per = {r.family.kind: r.per_use for r in family_comparison(params, n)}
            for kind, value in per.items():
                if kind != "product":
                    assert per["product"] >= value - 1e-12
