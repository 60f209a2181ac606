"""
Tests for finite fields and the two field constructions.
"""

import pytest

from latin_bitrades.core.formats import format_square
from latin_bitrades.core.partial_latin_square import PartialLatinSquare
from latin_bitrades.core.verifiers import is_latin_square
from latin_bitrades.fields.finite_field import DEFAULT_POLYNOMIALS, make_field, parse_polynomial
from latin_bitrades.fields.mersenne import (
    addition_square,
    candidate_polynomials,
    linear_relabeling,
    mersenne_params,
    mersenne_trade,
    published_relabeling,
)
from latin_bitrades.fields.orthomorphism import (
    affine_automorphisms,
    check_quadratic_constants,
    l_theta,
    ortho_trade,
    quadratic_orthomorphism,
)
from latin_bitrades.groups.paratopism_group import ParatopismGroup, is_entry_transitive
from latin_bitrades.utils.errors import PreconditionError


class TestFiniteField:
    """Test cases for make_field and FieldCtx."""

    def test_binary_field_of_order_8(self):
        # Act
        f = make_field("binary", 3)

        # Assert
        assert f.size == 8
        assert f.element_order(f.primitive) == 7
        assert f.mul(f.primitive, f.primitive) == 4
        assert f.power(f.primitive, 3) == f.add(f.primitive, 1)

    def test_prime_field_squares(self, gf11):
        assert gf11.primitive == 2
        assert gf11.squares() == [1, 3, 4, 5, 9]
        assert not gf11.is_square(0)

    def test_log_and_exp_agree(self, gf11):
        for x in range(1, 11):
            assert gf11.power(gf11.primitive, gf11.log[x]) == x
            assert gf11.mul(x, gf11.inv(x)) == 1

    def test_composite_order_is_rejected(self):
        with pytest.raises(PreconditionError) as excinfo:
            make_field("prime", 4)

        assert "not prime" in str(excinfo.value)

    def test_reducible_polynomial_is_rejected(self):
        with pytest.raises(PreconditionError) as excinfo:
            make_field("binary", 3, polynomial=0b1001)

        assert "reducible" in str(excinfo.value)

    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            make_field("ternary", 3)

    def test_parse_polynomial(self):
        assert parse_polynomial("1011") == 0b1011
        assert parse_polynomial("0x13") == 0b10011


class TestMersenne:
    """Test cases for the Mersenne construction."""

    def test_parameters_for_gf8(self, gf8_params):
        # Assert
        assert (gf8_params.q, gf8_params.p, gf8_params.i, gf8_params.j) == (3, 7, 6, 1)
        assert gf8_params.omega.order() == 7
        assert gf8_params.alpha.order() == 3

    def test_generator_relations(self, gf8_params):
        omega, alpha, alpha_bar = gf8_params.omega, gf8_params.alpha, gf8_params.alpha_bar

        assert alpha * omega ** 2 == omega * alpha
        assert alpha_bar(gf8_params.field.primitive) == gf8_params.field.primitive

    def test_trade_of_size_21(self, gf8_construction):
        report = gf8_construction.report

        assert len(gf8_construction.group) == 21
        assert report.summary_line() == "size=21 k=3 orthogonal=yes"
        assert report.extras == {"i": "6", "j": "1", "p": "7", "q": "3"}

    @pytest.mark.parametrize("q", [2, 4])
    def test_degree_is_rejected(self, q):
        with pytest.raises(PreconditionError):
            mersenne_params(q)

    def test_degree_5(self):
        # Act
        built = mersenne_trade(mersenne_params(5))

        # Assert
        assert built.report.size == 155
        assert built.report.k == 5
        assert built.report.orthogonal_direct

    def test_degree_7(self):
        # Act
        params = mersenne_params(7)
        built = mersenne_trade(params)

        # Assert
        assert (params.p, params.i, params.j) == (127, 112, 4)
        assert built.report.size == 889
        assert built.report.k == 7

    def test_explicit_polynomial_without_j_is_rejected(self):
        # Act & Assert
        with pytest.raises(PreconditionError) as excinfo:
            mersenne_params(7, 0b10001001)

        assert "no j" in str(excinfo.value)

    def test_candidate_polynomials_start_with_the_default(self):
        # Act
        candidates = list(candidate_polynomials(7))

        # Assert
        assert candidates[0] == DEFAULT_POLYNOMIALS[7]
        assert 0b10111111 in candidates
        assert len(candidates) == len(set(candidates)) == 18

    def test_published_relabeling(self, gf8_params):
        # Arrange
        mapping = published_relabeling(gf8_params)

        # Act
        relabeled = PartialLatinSquare.from_table(
            [[mapping[x ^ y] for y in range(8)] for x in range(8)]
        )

        # Assert
        assert sorted(mapping) == list(range(8))
        assert mapping[0] == 0
        assert is_latin_square(relabeled)

    def test_dependent_basis_is_rejected(self):
        with pytest.raises(PreconditionError):
            linear_relabeling((1, 2, 3))

    def test_addition_square_is_latin(self, gf8_params):
        assert is_latin_square(addition_square(gf8_params.field))


class TestQuadraticOrthomorphism:
    """Test cases for quadratic orthomorphisms over prime fields."""

    def test_theta_over_gf11(self, gf11):
        # Act
        ortho = quadratic_orthomorphism(gf11, 2, 6)

        # Assert
        assert str(ortho.theta) == "(1 2)(3 6)(4 8)(5 10)(7 9)"
        assert format_square(l_theta(ortho)).splitlines()[1] == "0 2 1 6 8 10 3 9 4 7 5"

    @pytest.mark.parametrize("a, b, expected", [(2, 6, True), (1, 6, False), (2, 7, False)])
    def test_constant_check(self, gf11, a, b, expected):
        assert check_quadratic_constants(gf11, a, b) is expected

    def test_failing_constants_raise(self):
        with pytest.raises(PreconditionError):
            quadratic_orthomorphism(make_field("prime", 7), 2, 4)

    def test_zero_constant_raises(self, gf11):
        with pytest.raises(PreconditionError):
            check_quadratic_constants(gf11, 0, 6)

    def test_equal_constants(self, gf11):
        """a = b gives the linear orthomorphism but no trade."""
        ortho = quadratic_orthomorphism(gf11, 4, 4)

        assert ortho.theta(1) == 4
        with pytest.raises(PreconditionError) as excinfo:
            ortho_trade(gf11, 4, 4)
        assert "must differ" in str(excinfo.value)

    def test_affine_automorphism_group(self, gf11):
        group = affine_automorphisms(quadratic_orthomorphism(gf11, 2, 6))

        assert len(group) == 55
        assert group.is_closed()


class TestOrthoTrade:
    """Test cases for ortho_trade."""

    def test_trade_over_gf11(self, gf11):
        # Act
        result = ortho_trade(gf11, 2, 6)

        # Assert
        assert result.m == 5
        assert len(result.copies) == 2
        assert result.orbit_sizes == [55, 55, 11]
        assert result.construction.report.summary_line() == "size=55 k=5 orthogonal=yes"
        assert result.construction.report.entry_transitive

    def test_union_of_copies_is_not_entry_transitive(self, gf11):
        # Arrange
        result = ortho_trade(gf11, 2, 6)
        union = PartialLatinSquare.from_entries(11, result.copies[0] | result.copies[1])

        # Act & Assert
        assert not is_entry_transitive(result.construction.group, union)

    @pytest.mark.parametrize("q", [7, 11, 13, 19, 23])
    def test_every_constant_pair(self, q):
        """Every admissible pair gives a trade of size mq and (q-1)/m copies."""
        f = make_field("prime", q)
        pairs = [
            (a, b)
            for a in range(2, q)
            for b in range(2, q)
            if a != b and check_quadratic_constants(f, a, b)
        ]
        assert pairs
        for a, b in pairs:
            result = ortho_trade(f, a, b)
            assert result.construction.bitrade.size == result.m * q
            assert len(result.copies) == (q - 1) // result.m
            assert isinstance(result.construction.group, ParatopismGroup)
