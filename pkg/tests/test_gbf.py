import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import anf_eval, bits
from roothadamard.gbf import (
    AnfPolynomial,
    BooleanFunction,
    GeneralizedBooleanFunction,
    anf_from_truth_table,
    as_index,
    component_function,
    compose_components,
    decompose_components,
    derivative,
    elementary_symmetric,
    index_to_bits,
    iota,
    parse_function,
    popcounts,
    selectors,
    symmetric_table,
    truth_table_from_anf,
)

# a_0 of the root-bent example, evaluated point by point with the oracle
ROOT_BENT_A0 = [0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1]


def test_index_convention():
    assert index_to_bits(1, 3) == (0, 0, 1)
    assert as_index((1, 0, 0), 3) == 4
    f = parse_function("x3", 3)
    assert f.table.tolist() == [0, 1, 0, 1, 0, 1, 0, 1]


def test_anf_examples():
    assert parse_function("x1*x2", 2).table.tolist() == [0, 0, 0, 1]
    assert parse_function("1", 2).table.tolist() == [1, 1, 1, 1]
    a0 = parse_function("x1*x2 + x2*x3 + x2*x4 + x1*x4 + x3*x4", 4)
    assert a0.table.tolist() == ROOT_BENT_A0
    assert str(anf_from_truth_table(BooleanFunction(2, [0, 0, 0, 1]))) == "x1*x2"
    assert str(anf_from_truth_table(BooleanFunction(2, [0, 1, 1, 1]))) == "x1 + x2 + x1*x2"


def test_anf_grammar_variants():
    assert parse_function("x2 x1+x4 x1", 4) == parse_function("x1*x2 + x1*x4", 4)
    # a repeated monomial cancels over F_2
    assert parse_function("x1 + x1", 2).weight() == 0
    with pytest.raises(ValueError):
        AnfPolynomial.parse("x5", 4)
    with pytest.raises(ValueError):
        AnfPolynomial.parse("x1 ^ x2", 2)


def test_anf_round_trip_exhaustive_small():
    for n in range(1, 4):
        for code in range(1 << (1 << n)):
            f = BooleanFunction.from_int(n, code)
            assert truth_table_from_anf(anf_from_truth_table(f)) == f


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (1 << n)) - 1))))
def test_anf_round_trip_random(nc):
    n, code = nc
    f = BooleanFunction.from_int(n, code)
    anf = anf_from_truth_table(f)
    assert truth_table_from_anf(anf) == f
    mons = [tuple(sorted(m)) for m in anf.monomials]
    assert [anf_eval(mons, bits(t, n)) for t in range(1 << n)] == f.table.tolist()


def test_decompose_examples():
    F = GeneralizedBooleanFunction(2, 2, [0, 1, 2, 3])
    a0, a1 = decompose_components(F)
    assert a0.table.tolist() == [0, 1, 0, 1]
    assert a1.table.tolist() == [0, 0, 1, 1]
    f = parse_function("x1*x2", 2)
    a0, a1 = decompose_components(GeneralizedBooleanFunction(2, 2, 2 * f.table))
    assert a0.weight() == 0 and a1 == f


def test_compose_decompose_exhaustive():
    for n in (1, 2):
        for k in (1, 2, 3):
            for vals in np.ndindex(*([1 << k] * (1 << n))):
                F = GeneralizedBooleanFunction(n, k, vals)
                assert compose_components(decompose_components(F)) == F


def test_component_function():
    rng = np.random.default_rng(1)
    F = GeneralizedBooleanFunction(4, 3, rng.integers(0, 8, 16))
    a = decompose_components(F)
    assert component_function(F, (0, 0)) == a[2]
    assert component_function(F, (1, 0)) == a[0] ^ a[2]
    G = GeneralizedBooleanFunction(3, 1, [0, 1, 1, 0, 1, 0, 0, 1])
    assert component_function(G, ()).table.tolist() == G.values.tolist()
    with pytest.raises(ValueError):
        component_function(F, (1,))


def test_iota_and_selectors():
    assert iota((0, 0, 0)) == 0
    assert iota((1, 0, 1)) == 5
    for k in range(1, 7):
        sels = selectors(k)
        assert sorted(iota(c) for c in sels) == list(range(1 << (k - 1)))
        assert all(iota(c) == i for i, c in enumerate(sels))


def test_elementary_symmetric():
    assert elementary_symmetric(2, (1, 1, 0, 0)) == 1
    assert elementary_symmetric(2, (1, 1, 1, 0)) == 1
    assert elementary_symmetric(2, (1, 1, 1, 1)) == 0
    assert elementary_symmetric(1, (1, 0, 1)) == 0
    n = 10
    w = popcounts(n)
    assert np.array_equal((symmetric_table(n, 1) + 2 * symmetric_table(n, 2)) % 4, w % 4)
    # Lucas table agrees with the binomial definition
    for t in (1, 2, 3, 4, 5):
        assert all(symmetric_table(6, t)[i] == elementary_symmetric(t, bits(i, 6)) for i in range(64))


def test_weight_recursion_exhaustive():
    for n in range(1, 13):
        w = popcounts(n)
        for k in range(1, 5):
            step = (w % (1 << (k - 1))) + (symmetric_table(n, 1 << (k - 1)) << (k - 1))
            assert np.array_equal(w % (1 << k), step)


def test_weight_sum_identity():
    for n in range(1, 9):
        w = popcounts(n)
        x = np.arange(1 << n)
        xy = x[:, None] ^ x[None, :]
        both = x[:, None] & x[None, :]
        assert np.array_equal(w[xy], w[:, None] + w[None, :] - 2 * w[both])


def test_derivative():
    rng = np.random.default_rng(2)
    F = GeneralizedBooleanFunction(4, 2, rng.integers(0, 4, 16))
    assert not derivative(F, 0).values.any()
    lin = parse_function("x1 + x3", 4)
    D = derivative(lin, (1, 1, 1, 0))
    assert set(D.values.tolist()) == {lin((1, 1, 1, 0))}
    a = (0, 1, 1, 0)
    D = derivative(F, a)
    ai = as_index(a, 4)
    assert D.values.tolist() == [(F.values[t ^ ai] - F.values[t]) % 4 for t in range(16)]


def test_second_derivative_vanishes_k1():
    for n in range(1, 5):
        rng = np.random.default_rng(n)
        for _ in range(20):
            f = BooleanFunction(n, rng.integers(0, 2, 1 << n))
            for a in range(1 << n):
                assert not derivative(derivative(f, a), a).values.any()


def test_validation_errors():
    with pytest.raises(ValueError):
        BooleanFunction(2, [0, 1, 1])
    with pytest.raises(ValueError):
        GeneralizedBooleanFunction(1, 2, [0, 4])
    with pytest.raises(ValueError):
        BooleanFunction(25, [0])
