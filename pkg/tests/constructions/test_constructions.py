"""
Tests for beauville_forge.core.constructions.

Tests cover:
- Family requests and the registry
- Hypothesis checks of every family
- Verified constructions on small groups
- Strict mode and discrepancy reporting
- Direct products of constructions
- Reading notes, limits threading and known structures on larger groups
"""

import math
from dataclasses import replace

import pytest

from beauville_forge.core.constructions import (
    Construction,
    FamilyRequest,
    Limits,
    MATHIEU_NAMES,
    base,
    check_construction,
    construct,
    coprime_direct_product,
    cyclic_square,
    families,
    first_triple,
    printed_elements,
    second_prime,
    suzuki_order,
    suzuki_parameters,
)
from beauville_forge.core.exceptions import ConstructionDiscrepancyError, ConstructionError
from beauville_forge.core.structures import AbelianInversion, OvergroupConjugation, StructureType, search_beauville

pytestmark = pytest.mark.unit


class TestFamilyRequest:
    """Parameter parsing and validation."""

    def test_parse_integers(self):
        """Should turn integer tokens into ints and skip blanks."""
        r = FamilyRequest.parse("alt_power", "11, 2,")
        assert r.params == (11, 2)
        assert str(r) == "alt_power(11,2)"

    def test_parse_names(self):
        """Should keep non-integer tokens as text."""
        r = FamilyRequest.parse("product_double", "alt_coprime,6", "curated")
        assert r.params == ("alt_coprime", 6)
        assert r.reading == "curated"

    def test_unknown_reading(self):
        """Should reject readings other than literal and curated."""
        with pytest.raises(ConstructionError, match="reading"):
            FamilyRequest("abelian", (5,), "loose")  # type: ignore[arg-type]

    def test_wrong_parameter_count(self):
        """Should raise ConstructionError for a missing parameter."""
        with pytest.raises(ConstructionError, match="integer parameter"):
            construct(FamilyRequest("abelian", ()))

    def test_unknown_family(self):
        """Should list the known families in the error."""
        with pytest.raises(ConstructionError, match="unknown family"):
            construct(FamilyRequest("monster", (1,)))

    def test_registry(self):
        """Should register every family on import."""
        assert {
            "abelian",
            "alt_coprime",
            "alt_4r",
            "alt_power",
            "mathieu_double",
            "product_double",
            "suzuki",
            "sym_double",
        } <= set(families())


class TestHypotheses:
    """Parameters outside a family's hypothesis."""

    @pytest.mark.parametrize(
        "family, params",
        [
            ("abelian", (6,)),
            ("abelian", (1,)),
            ("alt_coprime", (4,)),
            ("alt_coprime", (0,)),
            ("alt_4r", (3,)),
            ("alt_4r", (2,)),
            ("alt_power", (11, 3)),
            ("alt_power", (12, 2)),
            ("alt_power", (9, 1)),
            ("sym_double", (4,)),
            ("suzuki", (4,)),
            ("suzuki", (1,)),
            ("mathieu_double", ("M12xM12",)),
        ],
    )
    def test_rejected(self, family, params):
        """Should raise ConstructionError before building anything."""
        with pytest.raises(ConstructionError):
            construct(FamilyRequest(family, params))


class TestAbelian:
    """Z_n x Z_n with inversion."""

    def test_z5_square(self):
        """Should verify the structure and the inversion witness."""
        c = construct(FamilyRequest("abelian", (5,)))
        assert c.verified
        assert c.discrepancies == ()
        assert c.structure.type() == StructureType((5, 5, 5), (5, 5, 5))
        assert isinstance(c.witness.automorphism, AbelianInversion)
        assert c.witness_report.verdict.is_pass

    def test_as_dict(self):
        """Should record family, parameters and reading."""
        c = construct(FamilyRequest("abelian", (5,)), verify=False)
        d = c.as_dict()
        assert d["family"] == "abelian"
        assert d["params"] == [5]
        assert d["reading"] == "literal"
        assert d["type"] == "((5,5,5),(5,5,5))"
        assert c.report is None


class TestMathieuDouble:
    """Hard-coded structures on squares of simple groups."""

    def test_names(self):
        """Should offer the three printed groups."""
        assert MATHIEU_NAMES == ("A5xA5", "M11xM11", "M23xM23")

    def test_printed_elements_are_permutations_of_the_right_degree(self):
        """Should parse x1, y1, x2, y2 and the involution on 2d points."""
        elements = printed_elements("M11xM11")
        assert len(elements) == 5
        assert {e.degree for e in elements} == {22}
        assert elements[4].order() == 2

    def test_a5_square_literal(self):
        """Should verify A5 x A5 with its printed involution."""
        c = construct(FamilyRequest("mathieu_double", ("A5xA5",)))
        assert c.report.overall.is_pass
        assert c.report.group_order == 3600
        assert c.structure.type() == StructureType((5, 6, 5), (15, 10, 15))
        assert c.witness_report.verdict.is_pass
        assert c.discrepancies == ()

    def test_a5_square_curated(self):
        """Should derive the same involution under the curated reading."""
        c = construct(FamilyRequest("mathieu_double", ("A5xA5",), "curated"))
        a = printed_elements("A5xA5")[4]
        assert isinstance(c.witness.automorphism, OvergroupConjugation)
        assert c.witness.automorphism.tau == a
        assert c.witness.uses_trivial_conjugators
        assert any("derived" in n for n in c.notes)


class TestAlternating:
    """Families on alternating groups."""

    def test_alt_coprime_six(self):
        """Should verify A12 with the coprime type."""
        c = construct(FamilyRequest("alt_coprime", (6,)))
        assert c.structure.type() == StructureType((35, 7, 7), (11, 11, 3))
        assert c.expected_type == c.structure.type()
        assert c.report.coprime
        assert c.report.overall.is_pass
        assert c.witness_report.verdict.is_pass
        assert c.discrepancies == ()

    def test_alt_coprime_uses_conjugator_for_second_pair(self):
        """Should carry a nontrivial g2 and no g1."""
        c = construct(FamilyRequest("alt_coprime", (6,)), verify=False)
        assert c.witness.g1 is None
        assert c.witness.g2 is not None

    def test_alt_4r_reading_note(self):
        """Should note how the repeated label is read."""
        c = construct(FamilyRequest("alt_4r", (4,)), verify=False)
        assert any("(x2, y2)" in n for n in c.notes)
        assert c.structure.group.degree == 16


class TestSymmetric:
    """S_n x S_n."""

    @pytest.mark.parametrize("n, p", [(6, 4), (8, 4), (7, 5), (9, 5), (11, 5)])
    def test_second_prime(self, n, p):
        """Should pick 4 for even n and the least admissible prime otherwise."""
        assert second_prime(n) == p

    def test_second_prime_skips_shared_factors(self):
        """Should skip 5 when it divides 3(n-3)."""
        assert second_prime(13) == 7

    def test_smallest_case(self):
        """Should build S5 x S5 from the printed elements."""
        c = construct(FamilyRequest("sym_double", (5,)), verify=False)
        assert c.structure.group.order() == 14400
        assert "explicit elements printed for n=5" in c.notes


class TestSuzuki:
    """Sz(q) over GF(2^m)."""

    def test_order(self):
        """Should give |Sz(8)| = 29120."""
        assert suzuki_order(8) == 29120

    def test_first_triple_are_involutions(self):
        """Should build three involutions."""
        p = suzuki_parameters(3)
        for t in first_triple(p.spec, p.alpha, p.beta):
            assert not t.is_identity()
            assert (t * t).is_identity()

    def test_structure_shape(self):
        """Should give x1 of order q - 1 and x2 y2 an involution."""
        c = construct(FamilyRequest("suzuki", (3,)), verify=False)
        t = c.structure.type()
        assert t.first[0] == 7
        assert t.second[2] == 2
        assert c.structure.group.declared_order == 29120
        assert c.structure.group.certificate == "suzuki"


class TestProducts:
    """Structures on direct products."""

    def test_coprime_direct_product(self):
        """Should multiply the coordinate orders and lift the inversion."""
        c5 = construct(FamilyRequest("abelian", (5,)))
        c7 = construct(FamilyRequest("abelian", (7,)))
        c = coprime_direct_product(c5, c7)
        assert c.expected_type == StructureType((35, 35, 35), (35, 35, 35))
        assert isinstance(c.witness.automorphism, AbelianInversion)
        checked = check_construction(c)
        assert checked.report.overall.is_pass
        assert checked.discrepancies == ()

    def test_coprime_direct_product_rejects_shared_primes(self):
        """Should refuse groups whose orders share a prime."""
        c5 = construct(FamilyRequest("abelian", (5,)), verify=False)
        with pytest.raises(ConstructionError, match="not coprime"):
            coprime_direct_product(c5, c5)

    def test_product_double_needs_coprime_type(self):
        """Should refuse a base whose type is not coprime."""
        with pytest.raises(ConstructionError, match="not coprime"):
            construct(FamilyRequest("product_double", ("abelian", 5)))

    def test_product_double_needs_base_family(self):
        """Should ask for a family name first."""
        with pytest.raises(ConstructionError, match="base family"):
            construct(FamilyRequest("product_double", (6,)))

    def test_product_double_literal_refuses_conjugators(self):
        """Should point to the curated reading when the base uses g2."""
        with pytest.raises(ConstructionError, match="curated"):
            construct(FamilyRequest("product_double", ("alt_coprime", 6)))


class TestStrictMode:
    """Discrepancies and strict construction."""

    @pytest.fixture
    def mislabeled(self, monkeypatch):
        def builder(request: FamilyRequest, limits: Limits) -> Construction:
            c = base.build(FamilyRequest("abelian", (5,)), limits)
            return replace(c, request=request, expected_type=StructureType((5, 5, 5), (7, 7, 7)))

        monkeypatch.setitem(base._REGISTRY, "mislabeled", builder)
        return FamilyRequest("mislabeled", ())

    def test_discrepancy_recorded(self, mislabeled):
        """Should record a type mismatch without raising."""
        c = construct(mislabeled)
        assert not c.verified
        assert any("differs from the promised" in d for d in c.discrepancies)

    def test_strict_raises(self, mislabeled):
        """Should raise ConstructionDiscrepancyError in strict mode."""
        with pytest.raises(ConstructionDiscrepancyError) as exc:
            construct(mislabeled, strict=True)
        assert exc.value.discrepancies
        assert exc.value.family == "mislabeled"

    def test_strict_passes_clean_construction(self):
        """Should return normally when nothing disagrees."""
        c = construct(FamilyRequest("abelian", (5,)), strict=True)
        assert c.verified


@pytest.mark.slow
class TestMathieuSquares:
    """The larger hard-coded squares."""

    def test_m11_square(self):
        """Should verify M11 x M11 with the coprime type and the swapping involution."""
        c = construct(FamilyRequest("mathieu_double", ("M11xM11",)))
        assert c.report.group_order == 7920 * 7920
        assert c.structure.type() == StructureType((11, 11, 11), (8, 8, 8))
        assert c.report.overall.is_pass
        assert c.witness_report.verdict.is_pass


class TestReadingNotes:
    """Notes recording how printed formulas are read."""

    def test_alt_4r_involution_note(self):
        """Should say which pair the printed b ends with and how it is read."""
        c = construct(FamilyRequest("alt_4r", (4,)), verify=False)
        note = next(n for n in c.notes if n.startswith("b printed"))
        assert "(13,15)" in note
        assert "fixing 5" in note
        assert "fixing 14" in note

    def test_alt_power_even_fixed_point_note(self):
        """Should record that the even-case t follows its printed pairs."""
        c = construct(FamilyRequest("alt_power", (12, 1)), verify=False)
        assert any("n+2j+6" in n and "(n+2j+4)/2" in n for n in c.notes)

    def test_alt_power_odd_has_no_fixed_point_note(self):
        """Should not add the even-case note for odd n."""
        c = construct(FamilyRequest("alt_power", (11, 1)), verify=False)
        assert not any("n+2j+6" in n for n in c.notes)

    def test_suzuki_exponent_note(self):
        """Should say the second pair uses the 2^(n+1) power."""
        c = construct(FamilyRequest("suzuki", (3,)), verify=False)
        assert any("2^(n+1)" in n and "q = 8" in n for n in c.notes)

    def test_suzuki_curated_keeps_printed_witness(self):
        """Should keep t1 under the curated reading and say so."""
        literal = construct(FamilyRequest("suzuki", (3,)), verify=False)
        curated = construct(FamilyRequest("suzuki", (3,), "curated"), verify=False)
        assert curated.witness.automorphism.tau == literal.witness.automorphism.tau
        assert any("printed witness t1 kept" in n for n in curated.notes)
        assert not any("printed witness t1 kept" in n for n in literal.notes)

    @pytest.mark.parametrize("n", [5, 6])
    def test_sym_double_printed_cases_flagged(self, n):
        """Should warn that the elements printed for n = 5, 6 break condition dagger."""
        c = construct(FamilyRequest("sym_double", (n,)), verify=False)
        assert any("break condition dagger" in note for note in c.notes)

    def test_sym_double_odd_multiple_of_three_flagged(self):
        """Should warn about shared 3-cycle powers for n = 9."""
        c = construct(FamilyRequest("sym_double", (9,)), verify=False)
        assert any("3^3" in n for n in c.notes)

    @pytest.mark.parametrize("n", [7, 8, 10, 11])
    def test_sym_double_other_cases_not_flagged(self, n):
        """Should not flag n outside 5, 6 and the odd multiples of 3."""
        c = construct(FamilyRequest("sym_double", (n,)), verify=False)
        assert not any("condition dagger" in note for note in c.notes)


class TestLimits:
    """Enumeration budget and order bound reaching the group handles."""

    def test_budget_reaches_handle(self):
        """Should build the group handle with the requested budget."""
        c = construct(FamilyRequest("abelian", (5,)), limits=Limits(enumeration_budget=1000))
        assert c.structure.group.enumeration_budget == 1000

    def test_order_bound_reaches_matrix_handle(self):
        """Should pass the order bound to the Suzuki group."""
        c = construct(FamilyRequest("suzuki", (3,)), verify=False, limits=Limits(order_bound=5000))
        assert c.structure.group.order_bound == 5000

    def test_limits_reach_product_base(self):
        """Should hand the limits to the base construction of a product."""
        limits = Limits(enumeration_budget=123456)
        c = construct(FamilyRequest("product_double", ("alt_coprime", 6), "curated"), verify=False, limits=limits)
        assert c.structure.group.enumeration_budget == 123456
        assert all(f.enumeration_budget == 123456 for f in c.structure.group.factors)

    def test_defaults_without_limits(self):
        """Should fall back to the handle defaults."""
        from beauville_forge.core.groups import DEFAULT_ENUMERATION_BUDGET

        c = construct(FamilyRequest("abelian", (5,)), verify=False)
        assert c.structure.group.enumeration_budget == DEFAULT_ENUMERATION_BUDGET


@pytest.mark.integration
class TestSymmetricDagger:
    """Condition dagger across small S_n x S_n."""

    @pytest.mark.parametrize("n", [5, 6, 9])
    def test_printed_cases_fail_dagger(self, n):
        """Should fail condition dagger and record it as a discrepancy."""
        c = construct(FamilyRequest("sym_double", (n,)))
        assert c.report.dagger.is_fail
        assert any(d.startswith("condition dagger") for d in c.discrepancies)
        assert not c.verified

    @pytest.mark.parametrize("n", [7, 8, 10])
    def test_remaining_cases_verify(self, n):
        """Should verify both pairs and condition dagger."""
        c = construct(FamilyRequest("sym_double", (n,)))
        assert c.report.overall.is_pass
        assert c.report.group_order == math.factorial(n) ** 2

    def test_strict_mode_raises_for_printed_case(self):
        """Should raise in strict mode for n = 5."""
        with pytest.raises(ConstructionDiscrepancyError):
            construct(FamilyRequest("sym_double", (5,)), strict=True)


@pytest.mark.integration
class TestSuzukiVerification:
    """Sz(8) end to end."""

    @pytest.fixture(scope="class")
    def sz8(self):
        return construct(FamilyRequest("suzuki", (3,)))

    def test_order_and_tier(self, sz8):
        """Should enumerate Sz(8) and decide generation by closure."""
        assert sz8.report.group_order == 29120
        assert sz8.report.generation[0].tier == "closure"
        assert sz8.report.generation[1].tier == "closure"

    def test_type(self, sz8):
        """Should give type ((7,7,7),(13,13,2))."""
        assert sz8.structure.type() == StructureType((7, 7, 7), (13, 13, 2))
        assert sz8.report.coprime

    def test_verified_with_witness(self, sz8):
        """Should verify the structure and the t1 witness."""
        assert sz8.report.overall.is_pass
        assert sz8.witness_report.verdict.is_pass
        assert sz8.discrepancies == ()

    def test_first_pair_shares_characteristic_polynomial(self, sz8):
        """Should give x1 and y1 the same characteristic polynomial."""
        x1, y1 = sz8.structure.pair1
        assert x1.char_poly() == y1.char_poly()


@pytest.mark.integration
class TestAlternatingAcceptance:
    """Alternating families beyond the smallest parameters."""

    @pytest.mark.parametrize("n, k", [(11, 1), (11, 2), (13, 2)])
    def test_alt_power_literal_witness_fails(self, n, k):
        """Should reject the printed t on the first pair."""
        c = construct(FamilyRequest("alt_power", (n, k)))
        assert c.witness_report.verdict.is_fail
        assert "inversion fails for x1, y1" in c.witness_report.verdict.reason

    @pytest.mark.parametrize("n, k", [(11, 1), (11, 2), (13, 2)])
    def test_alt_power_curated_verifies(self, n, k):
        """Should verify the structure and a derived witness."""
        c = construct(FamilyRequest("alt_power", (n, k), "curated"))
        assert c.report.overall.is_pass
        assert c.witness_report.verdict.is_pass

    def test_alt_coprime_twelve(self):
        """Should verify A24 with type ((143,13,13),(23,23,3))."""
        c = construct(FamilyRequest("alt_coprime", (12,)))
        assert c.structure.type() == StructureType((143, 13, 13), (23, 23, 3))
        assert c.report.overall.is_pass
        assert c.witness_report.verdict.is_pass

    @pytest.mark.parametrize("r", [4, 5])
    def test_alt_4r_dagger_discrepancy(self, r):
        """Should record condition dagger as a discrepancy."""
        c = construct(FamilyRequest("alt_4r", (r,)))
        assert any("condition dagger" in d for d in c.discrepancies)


@pytest.mark.integration
class TestProductDoubleAcceptance:
    """product_double over verified coprime bases."""

    def test_alt_coprime_six_curated(self):
        """Should lift A12 to A12 x A12 with the lcm type."""
        c = construct(FamilyRequest("product_double", ("alt_coprime", 6), "curated"))
        assert c.structure.type() == StructureType((385, 77, 21), (385, 77, 21))
        assert c.report.overall.is_pass
        assert c.witness_report.verdict.is_pass

    @pytest.mark.slow
    def test_suzuki_square_curated(self):
        """Should decide Sz(8) x Sz(8) by coprime projection."""
        c = construct(FamilyRequest("product_double", ("suzuki", 3), "curated"))
        assert c.structure.type() == StructureType((91, 91, 14), (91, 91, 14))
        assert c.report.generation[0].tier == "coprime projection"
        assert c.report.overall.is_pass


@pytest.mark.slow
class TestAbelianClassification:
    """Z_n x Z_n carries a structure exactly when gcd(n, 6) = 1."""

    @pytest.mark.parametrize("n", [11, 13, 25])
    def test_found(self, n):
        """Should find a structure by search."""
        assert search_beauville(cyclic_square(n)).found

    @pytest.mark.parametrize("n", [6, 8, 9, 12])
    def test_none(self, n):
        """Should exhaust the search without a structure."""
        outcome = search_beauville(cyclic_square(n))
        assert not outcome.found
        assert outcome.exhaustive


@pytest.mark.slow
class TestLargeAcceptance:
    """Groups too large for closure."""

    def test_suzuki_32(self):
        """Should certify Sz(32) generation structurally."""
        c = construct(FamilyRequest("suzuki", (5,)))
        assert c.report.generation[0].tier == "structural certificate"
        assert c.report.overall.is_pass

    def test_m23_square(self):
        """Should verify M23 x M23."""
        c = construct(FamilyRequest("mathieu_double", ("M23xM23",)))
        assert c.report.group_order == 104059584921600
        assert c.report.overall.is_pass
