import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import random_code
from rankforge.codes import WeightDistribution, dual_code, weight_distribution
from rankforge.errors import InconsistentInput, InvalidParameter
from rankforge.macwilliams import (CodeParams, RecursionInput, ZeroPattern, binomial_moment,
                                   count_zero_diagonal, dual_moment, dual_weights_from_moments,
                                   macwilliams_transform, weight_recursion)

F5_PARAMS = CodeParams(5, 2, 3, 25)


def test_f5_transform_and_moments():
    assert macwilliams_transform((1, 8, 16), F5_PARAMS).counts == (1, 64, 560)
    assert dual_weights_from_moments((1, 8, 16), F5_PARAMS).counts == (1, 64, 560)
    assert binomial_moment((1, 8, 16), 1, F5_PARAMS) == 14
    for nu in range(3):
        assert binomial_moment((1, 8, 16), nu, F5_PARAMS) == dual_moment((1, 64, 560), nu, F5_PARAMS)


def test_full_and_zero_codes():
    # the zero code's dual is everything, whose weights count matrices by rank
    q, k, m = 2, 2, 3
    full = tuple(oracles.weights(oracles.all_flats(k * m, q), k, m, q))
    assert macwilliams_transform((1, 0, 0), CodeParams(q, k, m, 1)).counts == full
    assert macwilliams_transform(full, CodeParams(q, k, m, q ** (k * m))).counts == (1, 0, 0)


def test_inconsistent_inputs():
    with pytest.raises(InconsistentInput):
        macwilliams_transform((1, 8, 17), F5_PARAMS)  # checksum
    with pytest.raises(InconsistentInput):
        macwilliams_transform((1, 8, 17), CodeParams(5, 2, 3, 26))  # 26 does not divide 5^6
    with pytest.raises(InconsistentInput):
        macwilliams_transform((1, -1, 25), F5_PARAMS)
    with pytest.raises(InconsistentInput):
        dual_weights_from_moments((1, 8, 17), F5_PARAMS)
    with pytest.raises(InvalidParameter):
        macwilliams_transform((1, 24), F5_PARAMS)


def test_params_validation():
    with pytest.raises(InvalidParameter):
        CodeParams(6, 2, 3, 1)
    with pytest.raises(InvalidParameter):
        CodeParams(2, 3, 2, 1)
    with pytest.raises(InvalidParameter):
        CodeParams(2, 2, 2, 0)
    with pytest.raises(InvalidParameter):
        binomial_moment((1, 8, 16), 3, F5_PARAMS)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_transform_matches_enumerated_dual(q, a, b, seed):
    k, m = min(a, b), max(a, b)
    if q ** (k * m) > 3 ** 6:
        k, m = 2, 3
    rng = random.Random(seed)
    C = random_code(rng, q, k, m, rng.randint(0, k * m))
    D = dual_code(C)
    W, Wd = weight_distribution(C), weight_distribution(D)
    params = CodeParams(q, k, m, C.size)
    assert macwilliams_transform(W, params) == Wd
    assert dual_weights_from_moments(W, params) == Wd
    assert macwilliams_transform(Wd, CodeParams(q, k, m, D.size)) == W


def test_transform_of_nonlinear_code():
    # the identity holds for the distance distribution of any code; for a code
    # closed under subtraction that is its weight distribution
    words = [(0, 0, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (1, 1, 1, 1)]
    W = oracles.weights(words, 2, 2, 2)
    dual = oracles.dual_by_search(words, 4, 2)
    assert macwilliams_transform(W, CodeParams(2, 2, 2, 4)).counts == oracles.weights(dual, 2, 2, 2)


def test_recursion_examples():
    mrd = RecursionInput(CodeParams.linear(2, 2, 2, 2), 2, 2, 2, 1, {})
    assert weight_recursion(mrd).counts == (1, 0, 3)
    quasi = RecursionInput(CodeParams.linear(2, 2, 2, 1), 1, 2, 1, 0, {})
    assert weight_recursion(quasi).counts == (1, 0, 1)
    f5 = RecursionInput(CodeParams.linear(5, 2, 3, 2), 2, 1, 1, 0, {1: 8})
    assert weight_recursion(f5).counts == (1, 8, 16)


def test_recursion_random_codes():
    rng = random.Random(31)
    for _ in range(20):
        C = random_code(rng, 2, 3, 3, rng.randint(2, 7))
        W = weight_distribution(C)
        D = weight_distribution(dual_code(C))
        d = next(i for i in range(1, 4) if W[i])
        dp = next(i for i in range(1, 4) if D[i])
        eps = int(C.size == 2 ** (3 * (3 - d + 1)))
        inp = RecursionInput(CodeParams.linear(2, 3, 3, C.dim), C.dim, d, dp, eps,
                             {i: W[i] for i in range(d, 3 - dp + 1)})
        assert weight_recursion(inp) == W


def test_recursion_rejects_bad_inputs():
    params = CodeParams.linear(2, 2, 2, 2)
    with pytest.raises(InvalidParameter):
        RecursionInput(params, 2, 2, 2, 1, {1: 0})  # wrong index set
    with pytest.raises(InvalidParameter):
        RecursionInput(params, 4, 1, 1, 0, {1: 0})  # dim = km
    with pytest.raises(InvalidParameter):
        RecursionInput(params, 2, 2, 2, 2, {})
    with pytest.raises(InconsistentInput):
        # W_1 = 100 forces W_2 = 25 - 1 - 100 < 0
        weight_recursion(RecursionInput(CodeParams.linear(5, 2, 3, 2), 2, 1, 1, 0, {1: 100}))


def test_epsilon_term_vanishes_for_mrd_parameters():
    # the extra u = i - 1 summand has exponent dim - m(d⊥ - 1) = 0 when C is MRD
    params = CodeParams.linear(2, 2, 2, 2)
    assert weight_recursion(RecursionInput(params, 2, 2, 2, 0, {})) == \
        weight_recursion(RecursionInput(params, 2, 2, 2, 1, {}))


def test_zero_pattern_examples():
    full = ZeroPattern.of(2, 2, [(1, 1), (2, 2)])
    assert count_zero_diagonal(full, 2, 2) == 1
    assert count_zero_diagonal(full, 2, 0) == 1
    with pytest.raises(InvalidParameter):
        ZeroPattern.of(2, 2, [(1, 2)])
    with pytest.raises(InvalidParameter):
        ZeroPattern.of(2, 2, [(3, 3)])
    with pytest.raises(InvalidParameter):
        count_zero_diagonal(full, 2, 3)


@pytest.mark.parametrize("k,m,q", [(1, 3, 2), (2, 3, 2), (2, 3, 3), (1, 2, 5)])
def test_zero_pattern_rectangular(k, m, q):
    ranks = [(f, oracles.flat_rank(f, k, m, q)) for f in oracles.all_flats(k * m, q)]
    diag = [(i, i) for i in range(1, k + 1)]
    for size in range(k + 1):
        for I in itertools.combinations(diag, size):
            for r in range(k + 1):
                expected = sum(1 for f, rr in ranks
                               if rr == r and all(f[(i - 1) * m + i - 1] == 0 for i, _ in I))
                assert count_zero_diagonal(ZeroPattern.of(k, m, I), q, r) == expected


def test_results_are_ints():
    assert type(count_zero_diagonal(ZeroPattern.of(2, 2, []), 2, 1)) is int
    assert all(type(x) is int for x in macwilliams_transform((1, 8, 16), F5_PARAMS))
    assert isinstance(dual_moment((1, 64, 560), 2, F5_PARAMS), Fraction)
    assert WeightDistribution((1, 8, 16)).to_json() == ["1", "8", "16"]
