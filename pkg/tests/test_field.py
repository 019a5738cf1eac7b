import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankforge.errors import FieldZeroDivision, InvalidParameter, NotABasis, SpecMismatch
from rankforge.field import (ExtensionBasis, FieldElement, FieldSpec, dual_basis, extension_field,
                             find_irreducible, galois_field, is_irreducible, prime_power,
                             relative_trace, subfield_elements, subfield_isomorphism)

SPECS = [
    galois_field(2), galois_field(5), galois_field(4), galois_field(9),
    extension_field(2, 3), extension_field(2, 4), extension_field(4, 2),
    extension_field(3, 2), extension_field(3, 3), FieldSpec(3, 2, (2, 2, 1), 1),
]


def poly_mulmod(a, b, modulus, p):
    """Schoolbook product of little-endian coefficient lists, reduced mod a monic modulus."""
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, n - 1, -1):
        c = prod[top]
        if c:
            for i in range(n + 1):
                prod[top - n + i] = (prod[top - n + i] - c * modulus[i]) % p
    return (prod + [0] * n)[:n]


def spec_and_elements(count):
    return st.sampled_from(SPECS).flatmap(
        lambda S: st.tuples(st.just(S), *[st.integers(0, S.order - 1)] * count))


def test_prime_power_and_rejection():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(InvalidParameter):
        prime_power(12)
    with pytest.raises(InvalidParameter, match="p must be prime"):
        FieldSpec.build(4, 1)


def test_irreducible_search():
    assert find_irreducible(2, 2) == (1, 1, 1)
    assert find_irreducible(3, 2) == (1, 0, 1)
    for p, n in [(2, 3), (2, 4), (3, 3), (5, 2)]:
        f = find_irreducible(p, n)
        assert len(f) == n + 1 and f[-1] == 1 and is_irreducible(f, p)
        # no root in F_p, a necessary condition checked independently
        assert all(sum(c * x ** i for i, c in enumerate(f)) % p for x in range(p))


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidParameter, match="reducible"):
        FieldSpec(3, 2, (1, 2, 1))  # (x + 1)^2
    with pytest.raises(InvalidParameter):
        FieldSpec(2, 2, (1, 1, 0))  # not monic of degree 2


def test_order_cap():
    with pytest.raises(InvalidParameter):
        FieldSpec.build(2, 25)


def test_sub_degree_must_divide():
    with pytest.raises(InvalidParameter):
        FieldSpec.build(2, 3, sub_degree=2)


def test_multiplication_matches_polynomial_oracle():
    for S in SPECS:
        if S.degree == 1:
            continue
        for a, b in itertools.product(range(S.order), repeat=2):
            expected = poly_mulmod(S.to_coeffs(a), S.to_coeffs(b), S.modulus, S.p)
            assert S.mul(a, b) == S.from_coeffs(expected)


def test_f4_table():
    F4 = extension_field(2, 2)
    w = F4.generator_x
    assert w == 2
    assert F4.mul(w, w) == 3
    assert F4.trace(w) == 1 and F4.trace(1) == 0
    assert dual_basis(ExtensionBasis(F4, (1, w))).elements == (3, 1)


def test_f9_example_encoding():
    F9 = FieldSpec(3, 2, (2, 2, 1), 1)
    eta = F9.generator_x
    xi = F9.pow(eta, 2)
    assert (eta, xi) == (3, 4)
    assert F9.add(F9.mul(xi, xi), 1) == 0


@settings(max_examples=200, deadline=None)
@given(spec_and_elements(3))
def test_field_axioms(data):
    S, a, b, c = data
    assert S.add(a, b) == S.add(b, a)
    assert S.mul(a, b) == S.mul(b, a)
    assert S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c))
    assert S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))
    assert S.add(a, S.neg(a)) == 0
    assert S.sub(a, b) == S.add(a, S.neg(b))
    if a:
        assert S.mul(a, S.inv(a)) == 1
        assert S.pow(a, S.order - 1) == 1


@settings(max_examples=200, deadline=None)
@given(spec_and_elements(2))
def test_frobenius_and_trace(data):
    S, a, b = data
    assert S.frobenius(S.mul(a, b)) == S.mul(S.frobenius(a), S.frobenius(b))
    assert S.frobenius(S.add(a, b)) == S.add(S.frobenius(a), S.frobenius(b))
    t = S.trace(a)
    assert S.in_subfield(t)
    assert S.trace(S.add(a, b)) == S.add(t, S.trace(b))
    for lam in S.subfield.elements:
        assert S.trace(S.mul(lam, a)) == S.mul(lam, t)


def test_subfield_is_fixed_field():
    for S in SPECS:
        fixed = [a for a in S.elements() if S.pow(a, S.q) == a]
        assert S.subfield.elements == fixed
        assert len(fixed) == S.q
        assert [int(e) for e in subfield_elements(S)] == fixed


def test_zero_inverse():
    for S in SPECS:
        with pytest.raises(FieldZeroDivision):
            S.inv(0)
        with pytest.raises(ZeroDivisionError):
            S.subfield.inv(0)


def test_field_element_operators():
    F9 = extension_field(3, 2)
    a, b = F9.element(5), F9.element(7)
    assert int(a + b) == F9.add(5, 7)
    assert int(a - b) == F9.sub(5, 7)
    assert int(a * b) == F9.mul(5, 7)
    assert (a / b) * b == a
    assert -(-a) == a
    assert a ** 8 == F9.element(1)
    assert a.inverse() * a == F9.element(1)
    assert relative_trace(a).in_subfield()
    assert F9.element(0).is_zero()
    with pytest.raises(SpecMismatch):
        a + galois_field(9).element(1)
    with pytest.raises(InvalidParameter):
        F9.element(81)


@pytest.mark.parametrize("S", [S for S in SPECS if S.m > 1])
def test_dual_basis_and_coordinates(S):
    B = ExtensionBasis.polynomial(S)
    D = dual_basis(B)
    for i, g in enumerate(B.elements):
        for j, h in enumerate(D.elements):
            assert S.trace(S.mul(g, h)) == (1 if i == j else 0)
    assert dual_basis(D).elements == B.elements
    for a in S.elements():
        coords = B.coordinates(a)
        assert all(S.in_subfield(c) for c in coords)
        assert B.combine(coords) == a


def test_dependent_basis_rejected():
    F16 = extension_field(4, 2)
    with pytest.raises(NotABasis):
        ExtensionBasis(F16, (1, 2 if F16.in_subfield(2) else 1))
    with pytest.raises(NotABasis):
        ExtensionBasis(F16, (1,))


def test_json_round_trip():
    for S in SPECS:
        assert FieldSpec.from_json(S.to_json()) == S


def test_subfield_isomorphism_is_a_field_map():
    src, dst = extension_field(4, 2), galois_field(4)
    table = subfield_isomorphism(src, dst)
    assert sorted(table) == src.subfield.elements
    assert sorted(table.values()) == dst.subfield.elements
    for a, b in itertools.product(table, repeat=2):
        assert table[src.add(a, b)] == dst.add(table[a], table[b])
        assert table[src.mul(a, b)] == dst.mul(table[a], table[b])
    with pytest.raises(SpecMismatch):
        subfield_isomorphism(extension_field(2, 2), galois_field(3))
