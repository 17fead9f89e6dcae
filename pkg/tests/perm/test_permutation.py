"""
Unit tests for beauville_forge.core.perm.

Tests cover:
- Left-to-right composition and conjugation
- Powers, orders, parity and cycle types
- Cycle-notation parsing with positioned errors
- Agreement with sympy.combinatorics on products
"""

import pytest
from sympy.combinatorics import Permutation as SympyPermutation

from beauville_forge.core.exceptions import DegreeMismatchError, PermutationParseError
from beauville_forge.core.perm import (
    Permutation,
    direct_sum,
    format_cycles,
    parse_cycles,
    parse_image_list,
)

pytestmark = pytest.mark.unit


class TestComposition:
    """Products act left to right."""

    def test_product_applies_left_factor_first(self):
        """Should map i to q(p(i)) for p * q."""
        p = parse_cycles("(1,2)", 3)
        q = parse_cycles("(2,3)", 3)
        r = p * q
        assert r(1) == q(p(1)) == 3
        assert str(r) == "(1,3,2)"

    def test_conjugate_relabels_cycles(self):
        """Should give g^-1 x g, which relabels the cycles of x by g."""
        x = parse_cycles("(1,2)", 3)
        g = parse_cycles("(2,3)", 3)
        assert str(x.conjugate(g)) == "(1,3)"
        assert x.conjugate(g) == g.inverse() * x * g

    def test_degree_mismatch(self):
        """Should refuse to compose permutations of different degree."""
        with pytest.raises(DegreeMismatchError):
            parse_cycles("(1,2)", 2) * parse_cycles("(1,2)", 3)

    @pytest.mark.parametrize(
        "left, right",
        [("(1,2,3)", "(3,4,5)"), ("(1,5)(2,4)", "(1,2,3,4,5)"), ("(2,5,3)", "(1,4)(3,5)")],
    )
    def test_products_agree_with_sympy(self, left, right):
        """Should agree with sympy, which also composes left to right."""
        p, q = parse_cycles(left, 5), parse_cycles(right, 5)
        sp = SympyPermutation(list(p.images))
        sq = SympyPermutation(list(q.images))
        assert list((p * q).images) == (sp * sq).array_form


class TestInvariants:
    """Orders, powers, parity and cycle types."""

    def test_order_and_parity(self):
        """Should take the lcm of cycle lengths and count transpositions."""
        p = parse_cycles("(1,2)(3,4,5)", 6)
        assert p.order() == 6
        assert p.parity() == "odd"
        assert p.support() == frozenset({1, 2, 3, 4, 5})
        ct = p.cycle_type()
        assert ct.lengths == (3, 2)
        assert ct.fixed_points == 1
        assert str(ct) == "{3,2}"

    def test_powers(self):
        """Should walk cycles for positive, negative and zero exponents."""
        c = Permutation.cycle([1, 2, 3, 4, 5], 5)
        assert str(c ** 2) == "(1,3,5,2,4)"
        assert str(c ** -1) == "(1,5,4,3,2)"
        assert (c ** 5).is_identity()
        assert (c ** 0).is_identity()

    def test_restricted_cycle_type(self):
        """Should report only the cycles that start inside the block."""
        p = parse_cycles("(1,2,3)(4,5)", 5)
        assert p.restricted_cycle_type([1, 2, 3]) == (3,)
        assert p.restricted_cycle_type([4, 5]) == (2,)

    def test_identity_prints_empty(self):
        """Should print the identity as ()."""
        assert format_cycles(Permutation.identity(4)) == "()"


class TestParsing:
    """Cycle notation and image lists."""

    def test_round_trip_canonical(self):
        """Should print cycles by least point, least point first."""
        p = parse_cycles(" (3, 1, 2) (5,4) ", 6)
        assert str(p) == "(1,2,3)(4,5)"
        assert parse_cycles(str(p), 6) == p

    def test_empty_and_unit_cycles(self):
        """Should read '' and '()' as the identity and ignore 1-cycles."""
        assert parse_cycles("", 3).is_identity()
        assert parse_cycles("()", 3).is_identity()
        assert parse_cycles("(2)", 3).is_identity()

    @pytest.mark.parametrize(
        "text, position, fragment",
        [
            ("(1,2", 4, "end of input"),
            ("(1,1)", 3, "repeated point 1"),
            ("(1,9)", 3, "outside 1..5"),
            ("1,2)", 0, "expected '('"),
        ],
    )
    def test_errors_name_the_position(self, text, position, fragment):
        """Should raise PermutationParseError at the offending character."""
        with pytest.raises(PermutationParseError) as exc_info:
            parse_cycles(text, 5)
        assert exc_info.value.position == position
        assert fragment in str(exc_info.value)

    def test_image_list(self):
        """Should read 1-based whitespace separated images."""
        p = parse_image_list("2 1 3")
        assert p.degree == 3
        assert str(p) == "(1,2)"
        with pytest.raises(PermutationParseError):
            parse_image_list("1 1 3")

    def test_direct_sum(self):
        """Should shift each later part past the earlier ones."""
        a = parse_cycles("(1,2)", 2)
        b = parse_cycles("(1,2,3)", 3)
        s = direct_sum(a, b)
        assert s.degree == 5
        assert str(s) == "(1,2)(3,4,5)"
