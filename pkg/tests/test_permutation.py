"""
Tests for permutations and role permutations.
"""

import pytest

from latin_bitrades.groups.permutation import Permutation, RolePerm
from latin_bitrades.utils.errors import ParseError, PreconditionError


class TestPermutationParsing:
    """Test cases for Permutation.parse."""

    def test_compact_cycles_read_one_digit_per_point(self):
        assert Permutation.parse("(013)", 4).images == (1, 3, 2, 0)

    def test_spaced_cycles_read_whole_numbers(self):
        """Test that "(5 10)" swaps 5 and 10 rather than 5, 1 and 0."""
        # Act
        theta = Permutation.parse("(12)(36)(48)(5 10)(79)", 11)

        # Assert
        assert theta(5) == 10
        assert theta(10) == 5
        assert theta(1) == 2

    def test_image_array(self):
        assert Permutation.parse("[1, 0, 2]", 3) == Permutation([1, 0, 2])

    @pytest.mark.parametrize("text", ["Id", "", "()"])
    def test_identity_forms(self, text):
        assert Permutation.parse(text, 5).is_identity()

    @pytest.mark.parametrize("text", ["(00)", "(0a)", "abc", "(04)"])
    def test_malformed_text_is_rejected(self, text):
        with pytest.raises(ParseError):
            Permutation.parse(text, 4)

    def test_image_array_of_wrong_length(self):
        with pytest.raises(ParseError):
            Permutation.parse("[0, 1]", 3)


class TestPermutationAlgebra:
    """Test cases for products, powers and printing."""

    def test_right_factor_applies_first(self):
        # Arrange
        a = Permutation.parse("(01)", 3)
        b = Permutation.parse("(12)", 3)

        # Act
        product = a * b

        # Assert
        assert product(1) == a(b(1)) == 2
        assert product(0) == 1

    def test_inverse_and_powers(self):
        x = Permutation.parse("(0132)", 4)

        assert x * x.inverse() == Permutation.identity(4)
        assert x.order() == 4
        assert x ** 4 == Permutation.identity(4)
        assert x ** -1 == x.inverse()
        assert x ** 2 == x * x

    def test_degree_mismatch(self):
        with pytest.raises(PreconditionError):
            Permutation.identity(3) * Permutation.identity(4)

    def test_cycles_start_at_least_point(self):
        assert Permutation.parse("(310)(54)", 6).cycles() == [(0, 3, 1), (4, 5)]

    def test_compact_printing_up_to_degree_ten(self):
        assert str(Permutation.parse("(1735)(46)", 8)) == "(1735)(46)"
        assert str(Permutation.identity(8)) == "Id"

    def test_spaced_printing_from_degree_eleven(self):
        theta = Permutation.parse("(12)(36)(48)(5 10)(79)", 11)

        assert str(theta) == "(1 2)(3 6)(4 8)(5 10)(7 9)"

    def test_from_function(self):
        double = Permutation.from_function(5, lambda x: 2 * x % 5)

        assert double.images == (0, 2, 4, 1, 3)


class TestRolePerm:
    """Test cases for the 1-based role permutation."""

    def test_one_based_parsing_and_printing(self):
        # Act
        role = RolePerm.parse("(12)")

        # Assert
        assert role.images == (1, 0, 2)
        assert str(role) == "(12)"

    def test_three_cycle(self):
        role = RolePerm.parse("(123)")

        assert role.images == (1, 2, 0)
        assert role.order() == 3
