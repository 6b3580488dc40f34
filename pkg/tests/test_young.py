"""Tests for Young frames, tableaux and the group algebra."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from permion import (
    DegreeMismatchError,
    GroupAlgebraElement,
    CapacityError,
    Limits,
    OperatorOrder,
    RepresentationKind,
    TableauError,
    YoungFrame,
    YoungTableau,
    enumerate_group,
    natural_rep,
    parse_cycles,
    partitions,
    regular_rep,
    sign,
    standard_tableaux,
    tableau_count_hook,
    verify_idempotent,
    young_operator,
)
from permion.linalg import identity_matrix, mat_mul, scale
from permion.permutation import identity
from permion.representation import (
    character,
    one_dim_rep,
    standard_rep,
    symmetrizer_image,
    verify_character_decomposition,
    verify_homomorphism,
)
from permion.young import (
    col_antisymmetrizer,
    format_tableau,
    full_antisymmetrizer,
    full_symmetrizer,
    ga_multiply,
    ga_to_matrix,
    hook_lengths,
    irrep_dimensions,
    parse_frame,
    parse_tableau,
    row_symmetrizer,
    transfer_operator,
    transfer_permutation,
    young_ideal_rep,
)


def ga(n, pairs):
    return GroupAlgebraElement(n, {parse_cycles(text, n): c for text, c in pairs})


def test_frame_validation_and_conjugate():
    """Test frame invariants and conjugation."""
    with pytest.raises(TableauError):
        YoungFrame((1, 2))
    with pytest.raises(TableauError):
        YoungFrame(())
    assert YoungFrame((3, 1)).conjugate() == YoungFrame((2, 1, 1))
    assert YoungFrame((2, 2)).conjugate() == YoungFrame((2, 2))
    assert str(YoungFrame((2, 1))) == "[2,1]"


def test_tableau_validation():
    """Test that a filling must use 1..n once and standardness is detected."""
    with pytest.raises(TableauError):
        YoungTableau(((1, 1), (2,)))
    assert parse_tableau("1,2;3").is_standard
    assert not parse_tableau("2,1;3").is_standard
    assert parse_tableau("1,3;2,4").is_standard
    assert format_tableau(parse_tableau("1, 3; 2")) == "1,3;2"


def test_parse_errors():
    """Test malformed frame and tableau text."""
    with pytest.raises(TableauError):
        parse_frame("2,x")
    with pytest.raises(TableauError):
        parse_tableau("1,2;;3")
    assert parse_frame("2,1") == YoungFrame((2, 1))


def test_partitions():
    """Test partitions in reverse-lexicographic order."""
    assert [f.rows for f in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert [f.rows for f in partitions(1)] == [(1,)]
    assert len(partitions(5)) == 7
    assert len(partitions(10)) == 42


def test_standard_tableaux_examples():
    """Test the standard tableaux of small frames."""
    assert [format_tableau(t) for t in standard_tableaux(YoungFrame((2, 1)))] == ["1,2;3", "1,3;2"]
    assert [format_tableau(t) for t in standard_tableaux(YoungFrame((3,)))] == ["1,2,3"]
    assert len(standard_tableaux(YoungFrame((2, 2)))) == 2
    assert all(t.is_standard for t in standard_tableaux(YoungFrame((3, 2, 1))))


def test_hook_lengths_and_counts():
    """Test hook lengths and the hook-length formula."""
    assert hook_lengths(YoungFrame((3, 2))) == [[4, 3, 1], [2, 1]]
    assert tableau_count_hook(YoungFrame((2, 1))) == 2
    assert tableau_count_hook(YoungFrame((1, 1, 1))) == 1
    assert tableau_count_hook(YoungFrame((3, 2))) == 5


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_formula_matches_enumeration(n):
    """Test that the hook-length count equals the enumerated tableaux, and Σ f² = n!."""
    total = 0
    for frame in partitions(n):
        count = tableau_count_hook(frame)
        assert len(standard_tableaux(frame)) == count
        total += count * count
    assert total == math.factorial(n)


def test_ga_multiply_examples():
    """Test convolution products in the group algebra of S_3."""
    x = ga(3, [("e", 1), ("(12)", 1)])
    assert ga_multiply(x, x) == ga(3, [("e", 2), ("(12)", 2)])
    left = ga(3, [("e", 1), ("(13)", -1)])
    product = ga_multiply(left, x)
    assert product == ga(3, [("e", 1), ("(12)", 1), ("(13)", -1), ("(123)", -1)])
    assert ga_multiply(GroupAlgebraElement.one(3), x) == x
    with pytest.raises(DegreeMismatchError):
        ga_multiply(GroupAlgebraElement.one(2), x)


def test_group_algebra_arithmetic():
    """Test sums, differences and zero elimination."""
    x = ga(3, [("(12)", "1/2")])
    assert (x + x).coefficient(parse_cycles("(12)", 3)) == 1
    assert (x - x).is_zero()
    assert str(GroupAlgebraElement.zero(3)) == "0"
    assert str(ga(3, [("(12)", -2), ("e", 1)])) == "e - 2(12)"


def test_row_and_column_factors():
    """Test row symmetrizers and column antisymmetrizers."""
    t = parse_tableau("1,2;3")
    assert row_symmetrizer(t) == ga(3, [("e", 1), ("(12)", 1)])
    assert col_antisymmetrizer(t) == ga(3, [("e", 1), ("(13)", -1)])
    assert row_symmetrizer(parse_tableau("1,2,3")) == full_symmetrizer(3)
    assert row_symmetrizer(parse_tableau("1;2;3")) == GroupAlgebraElement.one(3)
    assert col_antisymmetrizer(parse_tableau("1;2;3")) == full_antisymmetrizer(3)
    assert col_antisymmetrizer(parse_tableau("1,2,3")) == GroupAlgebraElement.one(3)


def test_young_operator_examples():
    """Test Young operators of the three S_3 frames."""
    t = parse_tableau("1,2;3")
    e21 = young_operator(t)
    assert e21 == ga(3, [("e", 1), ("(12)", 1), ("(13)", -1), ("(123)", -1)])
    assert str(e21) == "e + (12) - (123) - (13)"
    assert young_operator(parse_tableau("1,2,3")) == full_symmetrizer(3)
    assert young_operator(parse_tableau("1;2;3")) == full_antisymmetrizer(3)
    with pytest.raises(TableauError):
        young_operator(parse_tableau("2,1;3"))


def test_rows_first_order_differs_but_has_same_constant():
    """Test that S·A and A·S differ yet square to the same multiple of themselves."""
    t = parse_tableau("1,2;3")
    columns_first = young_operator(t, OperatorOrder.COLUMNS_FIRST)
    rows_first = young_operator(t, OperatorOrder.ROWS_FIRST)
    assert columns_first != rows_first
    assert verify_idempotent(rows_first).constant == verify_idempotent(columns_first).constant == 3


def test_verify_idempotent_examples():
    """Test idempotency constants."""
    assert verify_idempotent(full_symmetrizer(3)).constant == 6
    assert verify_idempotent(full_antisymmetrizer(3)).constant == 6
    report = verify_idempotent(young_operator(parse_tableau("1,2;3")))
    assert report.is_proportional
    assert report.constant == 3
    not_idempotent = ga(3, [("e", 1), ("(123)", 1)])
    assert not verify_idempotent(not_idempotent).is_proportional


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_young_constant_is_n_factorial_over_dimension(n):
    """Test E² = (n!/f)·E for every standard tableau."""
    for frame in partitions(n):
        expected = Fraction(math.factorial(n), tableau_count_hook(frame))
        for t in standard_tableaux(frame):
            report = verify_idempotent(young_operator(t))
            assert report.is_proportional
            assert report.constant == expected


def test_transfer_permutation_examples():
    """Test the box-by-box transfer permutation."""
    ta = parse_tableau("1,2;3")
    tb = parse_tableau("1,3;2")
    assert transfer_permutation(ta, ta).is_identity()
    assert transfer_permutation(ta, tb) == parse_cycles("(23)", 3)
    assert transfer_permutation(tb, ta) == parse_cycles("(23)", 3)
    with pytest.raises(TableauError):
        transfer_permutation(ta, parse_tableau("1,2,3"))


def test_transfer_operator():
    """Test E_AB = E_AA · P and that E_AA is recovered for equal tableaux."""
    ta = parse_tableau("1,2;3")
    tb = parse_tableau("1,3;2")
    assert transfer_operator(ta, ta) == young_operator(ta)
    carrier = GroupAlgebraElement.from_permutation(parse_cycles("(23)", 3))
    assert transfer_operator(ta, tb) == ga_multiply(young_operator(ta), carrier)


def test_ga_to_matrix_examples():
    """Test realizations of group algebra elements."""
    nat = natural_rep(3)
    assert ga_to_matrix(full_symmetrizer(3), nat) == symmetrizer_image(nat)
    assert ga_to_matrix(GroupAlgebraElement.one(3), nat) == identity_matrix(3)
    m = ga_to_matrix(young_operator(parse_tableau("1,2;3")), regular_rep(3))
    assert mat_mul(m, m) == scale(m, 3)


def test_irrep_dimensions_s4():
    """Test the irreducible dimensions of S_4."""
    dims = {str(f): d for f, d in irrep_dimensions(4).items()}
    assert dims == {"[4]": 1, "[3,1]": 3, "[2,2]": 2, "[2,1,1]": 3, "[1,1,1,1]": 1}


coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)
s3 = enumerate_group(3)
algebra_elements = st.lists(coefficients, min_size=6, max_size=6).map(
    lambda cs: GroupAlgebraElement(3, dict(zip(s3, cs)))
)


@settings(max_examples=30, deadline=None)
@given(algebra_elements, algebra_elements)
def test_ga_to_matrix_is_multiplicative(x, y):
    """Test ga_to_matrix(x·y) = ga_to_matrix(x)·ga_to_matrix(y) in the natural representation."""
    nat = natural_rep(3)
    expected = mat_mul(ga_to_matrix(x, nat), ga_to_matrix(y, nat))
    assert ga_to_matrix(ga_multiply(x, y), nat) == expected


@settings(max_examples=30, deadline=None)
@given(algebra_elements, algebra_elements, algebra_elements)
def test_ga_multiply_associative(x, y, z):
    """Test associativity of the convolution product."""
    assert ga_multiply(ga_multiply(x, y), z) == ga_multiply(x, ga_multiply(y, z))


def test_full_antisymmetrizer_signs():
    """Test that the full antisymmetrizer weights each element by its sign."""
    a = full_antisymmetrizer(4)
    assert all(a.coefficient(g) == sign(g) for g in enumerate_group(4))
    assert a.coefficient(identity(4)) == 1


@pytest.mark.parametrize("order", list(OperatorOrder))
def test_young_ideal_rep_is_the_standard_rep_of_s3(order):
    """Test that the left ideal of E for frame [2,1] carries the standard representation."""
    r = young_ideal_rep(YoungFrame((2, 1)), order)
    assert r.dim == 2
    assert verify_homomorphism(r).ok
    assert character(r) == character(standard_rep(3))
    assert verify_character_decomposition(r, [(standard_rep(3), 1)]).ok


def test_young_ideal_rep_one_dimensional_frames():
    """Test that the single-row and single-column frames give trivial and alternating."""
    trivial = young_ideal_rep(YoungFrame((3,)))
    alternating = young_ideal_rep(YoungFrame((1, 1, 1)))
    assert character(trivial) == character(one_dim_rep(3, RepresentationKind.TRIVIAL))
    assert character(alternating) == character(one_dim_rep(3, RepresentationKind.ALTERNATING))


@pytest.mark.parametrize("frame", partitions(4), ids=str)
def test_young_ideal_rep_dimensions_on_s4(frame):
    """Test that every ideal of S_4 is a homomorphism of dimension f."""
    r = young_ideal_rep(frame)
    assert r.dim == tableau_count_hook(frame)
    assert verify_homomorphism(r).ok


def test_young_ideal_rep_characters_fill_the_regular_rep():
    """Test χ(reg) = Σ f·χ(ideal) over the frames of S_3."""
    components = [(young_ideal_rep(f), tableau_count_hook(f)) for f in partitions(3)]
    assert verify_character_decomposition(regular_rep(3), components).ok


def test_young_ideal_rep_cap():
    """Test that the ideal respects max_regular_n."""
    with pytest.raises(CapacityError):
        young_ideal_rep(YoungFrame((3, 2)), limits=Limits(max_regular_n=4))
