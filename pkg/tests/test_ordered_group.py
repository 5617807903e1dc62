from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perron import (GroupBasis, GroupElement, GroupOrder, ValidationError,
                    apply_step, determinant, element_compare, lex_sign, lexvec,
                    positivize, positivize_all, simple_perron, validate_order)

from conftest import group_orders, positive_element


def standard_basis():
    order = GroupOrder((lexvec(["1", "0"]), lexvec(["0", "1"])))
    return GroupBasis.initial(order)


def expansion(coords, images):
    """Oracle: the exact rational combination of images."""
    total = [Fraction(0)] * len(images[0])
    for c, img in zip(coords, images):
        for k, x in enumerate(img):
            total[k] += c * x
    return tuple(total)


def test_validate_order_examples():
    ok = GroupOrder((lexvec(["1", "0"]), lexvec(["0", "1"])))
    assert validate_order(ok) == []
    dependent = GroupOrder((lexvec(["1", "0"]), lexvec(["2", "0"])))
    assert any("independent" in v for v in validate_order(dependent))
    negative = GroupOrder((lexvec(["1", "0"]), lexvec(["0", "-1"])))
    assert any("positive" in v for v in validate_order(negative))
    with pytest.raises(ValidationError):
        GroupBasis.initial(dependent)


def test_element_compare_examples():
    basis = standard_basis()
    # oracle: exact dot products against the images
    assert lex_sign(expansion((2, -1), basis.images)) == 1
    e = GroupElement(basis, (2, -1))
    zero = GroupElement(basis, (0, 0))
    assert element_compare(e, zero) == 1
    assert element_compare(e, e) == 0
    assert expansion((0, 1), basis.images) < expansion((1, 0), basis.images)
    assert element_compare(GroupElement(basis, (0, 1)),
                           GroupElement(basis, (1, 0))) == -1


def test_element_compare_requires_same_basis():
    b1 = standard_basis()
    b2, _ = simple_perron(b1, {1, 2})
    with pytest.raises(ValidationError):
        element_compare(GroupElement(b1, (1, 0)), GroupElement(b2, (1, 0)))


def test_simple_perron_examples():
    basis = standard_basis()
    new_basis, step = simple_perron(basis, {1, 2})
    # lex-min of {(1,0),(0,1)} is (0,1), so j = 2
    assert step.j == 2
    assert new_basis.images == (lexvec(["1", "-1"]), lexvec(["0", "1"]))
    assert lex_sign(new_basis.images[0]) == 1

    # coordinates transform by the step matrix: (2,-1) -> (2,1), and the
    # expansion oracle agrees: 2(g1-g2) + 1*g2 == 2*g1 - g2
    new_coords = apply_step(step, (2, -1))
    assert new_coords == (2, 1)
    assert expansion(new_coords, new_basis.images) == expansion((2, -1), basis.images)

    unchanged, singleton = simple_perron(basis, {1})
    assert singleton.j == 1
    assert unchanged.images == basis.images


def test_positivize_examples():
    basis = standard_basis()
    result = positivize(basis, GroupElement(basis, (2, -1)))
    assert len(result.steps) == 1
    assert result.steps[0].J == {1, 2} and result.steps[0].j == 2
    assert result.basis.images == (lexvec(["1", "-1"]), lexvec(["0", "1"]))
    assert result.coords == (2, 1)
    assert expansion(result.coords, result.basis.images) == \
        expansion((2, -1), basis.images)

    result = positivize(basis, GroupElement(basis, (1, 0)))
    assert result.steps == () and result.coords == (1, 0)
    assert result.basis == basis

    result = positivize(basis, GroupElement(basis, (0, 0)))
    assert result.steps == () and result.coords == (0, 0)


def test_positivize_rejects_negative():
    basis = standard_basis()
    with pytest.raises(ValidationError):
        positivize(basis, GroupElement(basis, (-1, 0)))
    other, _ = simple_perron(basis, {1, 2})
    with pytest.raises(ValidationError):
        positivize(basis, GroupElement(other, (1, 0)))


def test_positivize_all_examples():
    basis = standard_basis()
    result = positivize_all(
        basis, [GroupElement(basis, (2, -1)), GroupElement(basis, (0, 1))])
    assert all(all(c >= 0 for c in row) for row in result.coords)
    # second element keeps coords (0,1): the transform fixes g2
    assert result.coords == ((2, 1), (0, 1))
    assert expansion(result.coords[1], result.basis.images) == \
        expansion((0, 1), basis.images)

    empty = positivize_all(basis, [])
    assert empty.basis == basis and empty.coords == () and empty.steps == ()

    already = positivize_all(
        basis, [GroupElement(basis, (1, 0)), GroupElement(basis, (0, 1))])
    assert already.steps == ()

    with pytest.raises(ValidationError) as err:
        positivize_all(basis, [GroupElement(basis, (1, 0)),
                               GroupElement(basis, (-2, 0))])
    assert "element 2" in str(err.value)


@given(group_orders(), st.data())
def test_basis_integrity_under_random_transforms(order, data):
    basis = GroupBasis.initial(order)
    n = order.rank
    for _ in range(data.draw(st.integers(0, 5))):
        J = data.draw(st.frozensets(st.integers(1, n), min_size=1))
        basis, _ = simple_perron(basis, J)
    assert abs(determinant(basis.coords_in_original)) == 1
    assert all(lex_sign(img) == 1 for img in basis.images)


@given(group_orders(), st.data())
def test_change_of_basis_identity(order, data):
    basis = GroupBasis.initial(order)
    n = order.rank
    coords = tuple(data.draw(st.integers(-9, 9)) for _ in range(n))
    J = data.draw(st.frozensets(st.integers(1, n), min_size=1))
    new_basis, step = simple_perron(basis, J)
    new_coords = apply_step(step, coords)
    assert expansion(new_coords, new_basis.images) == expansion(coords, basis.images)


@given(group_orders(), st.data())
def test_cone_monotonicity(order, data):
    basis = GroupBasis.initial(order)
    n = order.rank
    coords = tuple(data.draw(st.integers(0, 9)) for _ in range(n))
    J = data.draw(st.frozensets(st.integers(1, n), min_size=1))
    _, step = simple_perron(basis, J)
    assert all(c >= 0 for c in apply_step(step, coords))


@given(group_orders(), st.data())
def test_positivize_round_trip(order, data):
    basis = GroupBasis.initial(order)
    element = positive_element(data.draw, basis)
    result = positivize(basis, element)
    assert all(c >= 0 for c in result.coords)
    assert expansion(result.coords, result.basis.images) == \
        expansion(element.coords, basis.images)
    assert abs(determinant(result.basis.coords_in_original)) == 1
    assert all(lex_sign(img) == 1 for img in result.basis.images)


@given(group_orders(), st.data())
def test_positivize_all_round_trip(order, data):
    basis = GroupBasis.initial(order)
    elements = [positive_element(data.draw, basis)
                for _ in range(data.draw(st.integers(0, 3)))]
    result = positivize_all(basis, elements)
    assert len(result.coords) == len(elements)
    for element, coords in zip(elements, result.coords):
        assert all(c >= 0 for c in coords)
        assert expansion(coords, result.basis.images) == \
            expansion(element.coords, basis.images)
