import itertools

import numpy as np
import pytest

import oracles
from roothadamard import data
from roothadamard.checks import random_function, random_spec
from roothadamard.complementarity import (
    complementary_iff_P_and_N,
    is_complementary_set,
    is_crosscomplementary,
    is_function_complementary_set,
    is_la_complementary_set,
    is_la_crosscomplementary,
    verify_component_complementarity,
)
from roothadamard.correlations import golay_poly_residue
from roothadamard.gbf import GeneralizedBooleanFunction
from roothadamard.transforms import Block, RootSpec


def test_golay_examples():
    assert is_complementary_set([(1, 1), (1, -1)])
    assert is_complementary_set([(1, 1, 1, -1), (1, 1, -1, 1)])
    v = is_complementary_set([(1, 1), (1, 1)])
    assert not v and v.witnesses == (1,)
    assert v.to_json() == {"kind": "aperiodic", "holds": False, "witnesses": [1]}
    with pytest.raises(ValueError):
        is_complementary_set([(1, 1), (1, -1, 1)])
    with pytest.raises(ValueError):
        is_complementary_set([(1, 1)], kind="cyclic")


def test_pairwise_mode():
    # four sequences whose total cancels although not every pair does
    seqs = [(1, 1), (1, 1), (1, -1), (1, -1)]
    assert is_complementary_set(seqs)
    pw = is_complementary_set(seqs, pairwise=True)
    assert not pw
    assert (0, 1) in pw.witnesses and (0, 2) not in pw.witnesses


def test_crosscomplementary_exhaustive_length_two():
    seqs = oracles.bipolar(2)
    for a1, a2, b1, b2 in itertools.product(seqs, repeat=4):
        want = oracles.aperiodic(a1, a2, 1) + oracles.aperiodic(b1, b2, 1) == 0
        assert bool(is_crosscomplementary((a1, a2), (b1, b2))) == want
    with pytest.raises(ValueError):
        is_crosscomplementary(((1,), (1,)), ((1,), (1,)), kind="Q")


def test_crosscomplementary_kinds():
    rng = np.random.default_rng(0)
    for _ in range(50):
        N = int(rng.integers(1, 7))
        a1, a2, b1, b2 = (rng.choice([1, -1], N).tolist() for _ in range(4))
        for kind, ref in (("P", oracles.periodic), ("N", oracles.negaperiodic)):
            want = all(ref(a1, a2, k) + ref(b1, b2, k) == 0 for k in range(1, N))
            assert bool(is_crosscomplementary((a1, a2), (b1, b2), kind)) == want


def test_complementary_iff_periodic_and_nega_exhaustive():
    for N in range(1, 7):
        seqs = oracles.bipolar(N)
        for a, b in itertools.product(seqs, repeat=2):
            rep = complementary_iff_P_and_N(a, b)
            assert rep.agree
            assert rep.aperiodic.holds == golay_poly_residue(a, b).is_constant()


def test_la_examples():
    spec = data.EXAMPLE_SPEC
    assert is_la_complementary_set([data.root_bent_example()], spec)
    fs, gs = data.f_functions(), data.g_functions()
    assert is_la_complementary_set([fs[0], gs[0]], spec)
    assert is_la_complementary_set([fs[-1], gs[-1]], spec)
    v = is_la_complementary_set([fs[0]], spec)
    assert not v and v.witnesses == ((0, 1, 0, 1),)
    assert not is_la_complementary_set([fs[0], fs[1]], spec)


def test_la_cross_reduces_to_set():
    rng = np.random.default_rng(1)
    for _ in range(30):
        n = int(rng.integers(1, 5))
        spec = random_spec(rng, n)
        S = [random_function(rng, n, 2) for _ in range(int(rng.integers(1, 4)))]
        assert bool(is_la_crosscomplementary(S, S, spec)) == bool(is_la_complementary_set(S, spec))
    with pytest.raises(ValueError):
        is_la_crosscomplementary(S, S + S, spec)


def test_la_specializes_to_periodic_and_nega():
    rng = np.random.default_rng(2)
    for _ in range(60):
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 3))
        S = [random_function(rng, n, k) for _ in range(int(rng.integers(1, 4)))]
        assert bool(is_la_complementary_set(S, RootSpec.trivial(n))) == \
            bool(is_function_complementary_set(S, "periodic"))
        assert bool(is_la_complementary_set(S, RootSpec.nega(n))) == \
            bool(is_function_complementary_set(S, "nega"))


def test_component_report_structure():
    fs, gs = data.f_functions(), data.g_functions()
    rep = verify_component_complementarity([fs[0], gs[0]], data.EXAMPLE_SPEC)
    assert set(rep.right) == {((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))}
    js = rep.to_json()
    assert js["left"]["holds"] == rep.left.holds
    assert len(js["right"]) == 4


def test_component_criterion_recorded_counterexample():
    # Smallest counterexample found by exhaustive search: the set is
    # LA-complementary while the components fail to cross-cancel.
    spec = RootSpec(2, (Block((0, 1), 4),))
    F = GeneralizedBooleanFunction(2, 2, [3, 0, 0, 3])
    rep = verify_component_complementarity([F], spec)
    assert rep.left.holds
    assert not rep.right[((0,), (1,))].holds
    assert not rep.agree


def test_function_sets_validated():
    with pytest.raises(ValueError):
        is_la_complementary_set([], RootSpec.trivial(2))
    with pytest.raises(ValueError):
        is_la_complementary_set([GeneralizedBooleanFunction(2, 1, [0] * 4),
                                 GeneralizedBooleanFunction(2, 2, [0] * 4)], RootSpec.trivial(2))
    with pytest.raises(ValueError):
        is_function_complementary_set([GeneralizedBooleanFunction(2, 1, [0] * 4)], "aperiodic")
