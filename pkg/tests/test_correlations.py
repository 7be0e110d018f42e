import numpy as np
import pytest

import oracles
from roothadamard import cyclo, data
from roothadamard.checks import random_function, random_spec
from roothadamard.correlations import (
    LaurentPoly,
    aperiodic_autocorr,
    aperiodic_crosscorr,
    correlation_from_spectrum,
    crosscorrelation,
    function_negaperiodic_correlation,
    function_periodic_correlation,
    golay_poly_residue,
    nega_crosscorrelation,
    negaperiodic_autocorr,
    negaperiodic_crosscorr,
    periodic_autocorr,
    periodic_crosscorr,
    root_autocorrelation,
    root_correlation_profile,
    root_crosscorrelation,
    sequence_profile,
    shift_matrix_autocorr,
    spectral_products,
    spectral_profile,
)
from roothadamard.cyclo import CycElement
from roothadamard.gbf import BooleanFunction, GeneralizedBooleanFunction, index_to_bits
from roothadamard.transforms import RootSpec, is_flat, nega_hadamard, root_hadamard, walsh_hadamard


def blocks_of(spec):
    return [(b.indices, b.order) for b in spec.blocks]


def popcount(z):
    return bin(z).count("1")


def test_crosscorrelation_basics():
    rng = np.random.default_rng(0)
    F = random_function(rng, 4, 2)
    assert crosscorrelation(F, F, 0) == 16
    zero = GeneralizedBooleanFunction(4, 2, [0] * 16)
    assert all(crosscorrelation(zero, zero, z) == 16 for z in range(16))
    with pytest.raises(ValueError):
        crosscorrelation(F, GeneralizedBooleanFunction(3, 2, [0] * 8), 0)


def test_walsh_spectral_formula_both_directions():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(1, 4))
        F, G = random_function(rng, n, k), random_function(rng, n, k)
        spec = RootSpec.trivial(n)
        Sf, Sg = root_hadamard(F, spec), root_hadamard(G, spec)
        prof = correlation_from_spectrum(Sf, Sg)
        for z in range(1 << n):
            assert prof[z] == crosscorrelation(F, G, z)
        # inverse direction: Sf conj(Sg) recovered from the profile
        coeffs, m = spectral_products(prof)
        want = cyclo.mul(Sf.lifted(m), cyclo.conj(Sg.lifted(m), m), m)
        assert np.array_equal(coeffs, want)


def test_nega_crosscorrelation():
    rng = np.random.default_rng(2)
    F, G = random_function(rng, 4, 1), random_function(rng, 4, 1)
    assert nega_crosscorrelation(F, G, 0) == crosscorrelation(F, G, 0)
    zero = GeneralizedBooleanFunction(2, 1, [0] * 4)
    assert nega_crosscorrelation(zero, zero, (1, 1)) == 0
    # i^{wt z}-prefactored spectral identity; the shift sits on the second function
    prof = correlation_from_spectrum(nega_hadamard(F), nega_hadamard(G))
    for z in range(16):
        direct = sum(oracles.zeta(2, int(F.values[x]) - int(G.values[x ^ z])) * (-1) ** popcount(x & z)
                     for x in range(16))
        assert abs(prof[z].to_complex() - direct) < 1e-9


def test_root_crosscorrelation_against_oracle():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        F, G = random_function(rng, n, k), random_function(rng, n, k)
        for z in range(1 << n):
            ref = oracles.root_crosscorrelation(F.values, G.values, n, k, blocks_of(spec), z)
            assert abs(root_crosscorrelation(F, G, spec, z).to_complex() - ref) < 1e-9
        assert root_crosscorrelation(F, F, spec, 0) == 1 << n
        trivial = RootSpec(n, tuple((b.indices, 1) for b in spec.blocks))
        assert root_crosscorrelation(F, G, trivial, 1) == crosscorrelation(F, G, 1)


def test_example_profiles():
    spec = data.EXAMPLE_SPEC
    f = data.f_functions()[0]
    prof = root_correlation_profile(f, None, spec)
    assert prof.nonzero_shifts() == [0, 5]
    assert index_to_bits(5, 4) == (0, 1, 0, 1)
    assert prof[0] == 16
    assert prof[(0, 1, 0, 1)] == CycElement(2, (0, -8))
    g = data.g_functions()[0]
    assert root_correlation_profile(g, None, spec)[5] == CycElement(2, (0, 8))
    assert root_autocorrelation(f, spec, 5) == prof[5]


def test_spectral_profile_matches_direct_both_orientations():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n, k = int(rng.integers(1, 6)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        F, G = random_function(rng, n, k), random_function(rng, n, k)
        for shift in ("first", "second"):
            assert spectral_profile(F, G, spec, shift).equals(root_correlation_profile(F, G, spec, shift))
        direct = root_correlation_profile(F, G, spec, shift="second")
        assert correlation_from_spectrum(root_hadamard(F, spec), root_hadamard(G, spec)).equals(direct)


def test_float_profile_matches_exact():
    rng = np.random.default_rng(5)
    spec = random_spec(rng, 4)
    F, G = random_function(rng, 4, 2), random_function(rng, 4, 2)
    assert root_correlation_profile(F, G, spec, mode="float").equals(root_correlation_profile(F, G, spec))


def test_root_bent_iff_autocorrelation_vanishes():
    spec = data.EXAMPLE_SPEC
    F = data.root_bent_example()
    for shift in ("first", "second"):
        assert root_correlation_profile(F, None, spec, shift).nonzero_shifts() == [0]
    rng = np.random.default_rng(6)
    for _ in range(40):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        spec = random_spec(rng, n)
        G = random_function(rng, n, k)
        vanishes = root_correlation_profile(G, None, spec, "second").nonzero_shifts() == [0]
        assert vanishes == is_flat(root_hadamard(G, spec))


def test_function_level_correlations():
    rng = np.random.default_rng(7)
    F, G = random_function(rng, 4, 2), random_function(rng, 4, 2)
    assert function_periodic_correlation(F, F, 0) == 16
    for u in range(16):
        # substitution x = v + u links the two orientations
        assert function_periodic_correlation(F, G, u) == crosscorrelation(F, G, u)
        sign = -1 if popcount(u) % 2 else 1
        assert function_negaperiodic_correlation(F, G, u) == sign * nega_crosscorrelation(F, G, u)


def test_profile_json():
    prof = root_correlation_profile(data.f_functions()[0], None, data.EXAMPLE_SPEC)
    js = prof.to_json()
    assert js["ring_order_exponent"] == prof.m
    assert js["entries_complex"][5] == pytest.approx([0.0, -8.0], abs=1e-12)


# ---------------------------------------------------------------------------
# sequences

def test_aperiodic_examples():
    a = (1, 1, 1, -1)
    assert aperiodic_autocorr(a, 0) == 4
    assert [aperiodic_autocorr(a, k) for k in (1, 2, 3)] == [1, 0, -1]
    with pytest.raises(ValueError):
        aperiodic_autocorr(a, 4)
    with pytest.raises(ValueError):
        aperiodic_crosscorr(a, (1, 1), 0)


def test_periodic_examples():
    a = (1, 1, 1, -1)
    assert periodic_autocorr(a, 0) == 4 and negaperiodic_autocorr(a, 0) == 4
    assert periodic_autocorr(a, 1) == 0
    assert negaperiodic_autocorr(a, 1) == 2
    assert shift_matrix_autocorr(a, 0, "periodic") == 4
    assert shift_matrix_autocorr(a, 1, "periodic") == 0


def test_sequence_correlations_against_oracle():
    rng = np.random.default_rng(8)
    for _ in range(100):
        N = int(rng.integers(1, 17))
        a, b = rng.choice([1, -1], N).tolist(), rng.choice([1, -1], N).tolist()
        for k in range(N):
            assert aperiodic_crosscorr(a, b, k) == oracles.aperiodic(a, b, k)
            assert periodic_crosscorr(a, b, k) == oracles.periodic(a, b, k)
            assert negaperiodic_crosscorr(a, b, k) == oracles.negaperiodic(a, b, k)


def test_periodic_identities_and_shift_matrices():
    rng = np.random.default_rng(9)
    for _ in range(100):
        N = int(rng.integers(2, 17))
        a = rng.choice([1, -1], N)
        for k in range(1, N):
            A, Ab = aperiodic_autocorr(a, k), aperiodic_autocorr(a, N - k)
            assert periodic_autocorr(a, k) == A + Ab
            assert negaperiodic_autocorr(a, k) == A - Ab
            assert shift_matrix_autocorr(a, k, "periodic") == periodic_autocorr(a, k)
            assert shift_matrix_autocorr(a, k, "nega") == negaperiodic_autocorr(a, k)


def test_laurent_product_gives_crosscorrelation():
    rng = np.random.default_rng(10)
    a, b = rng.choice([1, -1], 8), rng.choice([1, -1], 8)
    prod = LaurentPoly.from_sequence(a, inverse=True) * LaurentPoly.from_sequence(b)
    for k in range(8):
        assert prod.coefficient(k) == aperiodic_crosscorr(a, b, k)


def test_golay_residues():
    assert golay_poly_residue((1,), (1,)) == 2
    assert golay_poly_residue((1, 1), (1, -1)) == 4
    assert golay_poly_residue((1, 1, 1, -1), (1, 1, -1, 1)) == 8
    r = golay_poly_residue((1, 1), (1, 1), "periodic")
    assert not r.is_constant()


def test_sequence_profile_kinds():
    a = (1, 1, 1, -1)
    assert sequence_profile(a, kind="aperiodic").tolist() == [4, 1, 0, -1]
    assert sequence_profile(a, kind="periodic").tolist() == [4, 0, 0, 0]
    with pytest.raises(ValueError):
        sequence_profile(a, kind="cyclic")
    with pytest.raises(ValueError):
        sequence_profile((1, 2))


def test_walsh_spectrum_of_zero_profile():
    S = walsh_hadamard(BooleanFunction(3, [0] * 8))
    prof = correlation_from_spectrum(S, S)
    assert all(prof[z] == 8 for z in range(8))
