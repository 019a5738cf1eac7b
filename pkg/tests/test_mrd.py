import itertools
import random

import pytest

import oracles
from rankforge.codes import LinearMatrixCode, VectorCode, gamma_expand, min_distance, weight_distribution
from rankforge.errors import InvalidParameter, NotApplicable
from rankforge.field import ExtensionBasis, extension_field, galois_field
from rankforge.mrd import (FieldSubspace, GabidulinSpec, LinearizedPolynomial, gabidulin_code,
                           gabidulin_matrix_code, is_mrd, lin_poly_eval, mrd_weight_distribution,
                           quasi_mrd_weights, root_space, singleton_bound, subspace_polynomial)


def test_linearized_polynomial_is_linear():
    F16 = extension_field(2, 4)
    rng = random.Random(1)
    for _ in range(10):
        P = LinearizedPolynomial(F16, tuple(rng.randrange(16) for _ in range(3)))
        for a, b in itertools.product(range(0, 16, 3), repeat=2):
            assert P(F16.add(a, b)) == F16.add(P(a), P(b))
        for lam in F16.subfield.elements:
            assert P(F16.mul(lam, 7)) == F16.mul(lam, P(7))


def test_linearized_polynomial_trims_and_degree():
    F8 = extension_field(2, 3)
    assert LinearizedPolynomial(F8, (1, 0, 0)).degree == 0
    assert LinearizedPolynomial(F8, ()).degree == -1
    assert LinearizedPolynomial(F8, (0,)).is_zero()
    # x^q evaluates to the Frobenius
    assert all(lin_poly_eval(LinearizedPolynomial(F8, (0, 1)), a) == F8.frobenius(a) for a in range(8))


def test_root_space_of_trace():
    F9 = extension_field(3, 2)
    trace = LinearizedPolynomial(F9, (1, 1))
    V = root_space(trace)
    assert V.dim == 1
    assert V.elements() == sorted(a for a in range(9) if F9.trace(a) == 0)
    with pytest.raises(InvalidParameter):
        root_space(LinearizedPolynomial(F9, ()))


def test_subspace_polynomial_vanishes_exactly_on_subspace():
    for q, m in [(2, 2), (2, 3), (2, 4), (3, 2)]:
        S = extension_field(q, m)
        rng = random.Random(q * 10 + m)
        for _ in range(5):
            U = FieldSubspace.span(S, [rng.randrange(S.order) for _ in range(rng.randint(1, m))])
            P = subspace_polynomial(U)
            assert P.degree == U.dim
            assert P.coeffs[-1] == 1
            assert root_space(P).elements() == U.elements()


def test_subspace_polynomial_of_prime_subfield():
    F4 = extension_field(2, 2)
    P = subspace_polynomial(FieldSubspace.span(F4, [1]))
    assert P.coeffs == (1, 1)  # x + x^2 over F_2


def test_gabidulin_validation():
    F8 = extension_field(2, 3)
    with pytest.raises(InvalidParameter):
        GabidulinSpec(F8, 4, 2)
    with pytest.raises(InvalidParameter):
        GabidulinSpec(F8, 2, 3)
    with pytest.raises(InvalidParameter):
        GabidulinSpec(F8, 2, 1, (1, 1))
    with pytest.raises(InvalidParameter):
        GabidulinSpec(F8, 2, 1, (1,))


def test_gabidulin_with_custom_points():
    F16 = extension_field(2, 4)
    rng = random.Random(2)
    for _ in range(5):
        while True:
            pts = tuple(rng.randrange(1, 16) for _ in range(3))
            if FieldSubspace.span(F16, pts).dim == 3:
                break
        V = gabidulin_code(GabidulinSpec(F16, 3, 2, pts))
        assert V.dim == 2
        assert min_distance(V) == 2
        G = gabidulin_matrix_code(2, 4, 3, 2, pts)
        assert is_mrd(G).mrd
        assert weight_distribution(G) == mrd_weight_distribution(3, 4, 2, 2)


def test_gabidulin_over_nonprime_q():
    # F_4 as base field: q = 4, m = 2
    V = gabidulin_code(GabidulinSpec(extension_field(4, 2), 2, 2))
    assert min_distance(V) == 2
    G = gabidulin_matrix_code(4, 2, 2, 2)
    assert G.spec == galois_field(4)
    assert weight_distribution(G).counts == (1, 0, 15)
    assert mrd_weight_distribution(2, 2, 2, 4).counts == (1, 0, 15)


def test_singleton_bound_and_is_mrd():
    assert singleton_bound(2, 3, 2, 2) == 2 ** 3
    with pytest.raises(InvalidParameter):
        singleton_bound(3, 2, 1, 2)
    F2 = galois_field(2)
    v = is_mrd(LinearMatrixCode.zero(F2, 2, 2))
    assert v.mrd and v.d is None and v.to_json() == {"mrd": True, "d": None, "size": "1", "bound": None}
    identity = LinearMatrixCode.from_flats(F2, 2, 2, [(1, 0, 0, 1)])
    v = is_mrd(identity)
    assert not v.mrd and v.d == 2 and v.bound == 4
    # a 3 x 2 code is judged in transposed shape
    tall = LinearMatrixCode.from_flats(F2, 3, 2, [(1, 0, 0, 1, 0, 0)])
    assert is_mrd(tall).bound == 2 ** (3 * (2 - 2 + 1))


def test_mrd_weight_distribution_small():
    assert mrd_weight_distribution(2, 2, 2, 2).counts == (1, 0, 3)
    assert mrd_weight_distribution(2, 2, 1, 2).counts == (1, 9, 6)
    W = mrd_weight_distribution(3, 3, 2, 3)
    assert W.total == 3 ** 6
    with pytest.raises(InvalidParameter):
        mrd_weight_distribution(3, 2, 1, 2)


def test_mrd_full_space_is_rank_count():
    for k, m, q in [(2, 2, 2), (2, 3, 2), (2, 2, 3)]:
        full = oracles.weights(oracles.all_flats(k * m, q), k, m, q)
        assert mrd_weight_distribution(k, m, 1, q).counts == full


def test_quasi_mrd_weights():
    assert quasi_mrd_weights(2, 2, 1, 2)[0] == 2
    assert quasi_mrd_weights(2, 2, 1, 2)[1].counts == (1, 0, 1)
    assert quasi_mrd_weights(2, 2, 3, 2)[0] == 1
    assert quasi_mrd_weights(2, 2, 3, 2)[1].counts == (1, 3, 4)
    with pytest.raises(NotApplicable):
        quasi_mrd_weights(2, 2, 2, 2)
    with pytest.raises(InvalidParameter):
        quasi_mrd_weights(2, 2, 4, 2)


def test_vector_and_matrix_views_agree():
    F8 = extension_field(2, 3)
    V = gabidulin_code(GabidulinSpec(F8, 3, 2))
    G = gamma_expand(V, ExtensionBasis.polynomial(F8))
    assert weight_distribution(V) == weight_distribution(G)
    assert isinstance(V, VectorCode)
