"""
Unit tests for beauville_forge.core.structures.

Tests cover:
- Structure types: parsing, printing, coprimality
- verify_structure on passing and failing structures
- Strongly real witnesses and their error cases
- Inverting permutations and witness derivation
- Generation tiers for product groups beyond the enumeration budget
- Surface invariants in exact arithmetic
- Exhaustive searches on small groups
"""

import random
from fractions import Fraction

import pytest

from beauville_forge.core.constructions import cyclic_square
from beauville_forge.core.exceptions import MembershipError, WitnessError
from beauville_forge.core.groups import GroupHandle, ProductElement
from beauville_forge.core.perm import Permutation, parse_cycles
from beauville_forge.core.structures import (
    AbelianInversion,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
    check_dagger,
    derive_witness,
    first_inverter,
    genus,
    inspect_witness,
    inverters,
    search_beauville,
    search_strongly_real,
    surface_invariants,
    verify_strongly_real,
    verify_generation,
    verify_structure,
)

pytestmark = pytest.mark.unit


@pytest.fixture
def z5_square():
    return cyclic_square(5)


@pytest.fixture
def z5_structure(z5_square):
    outcome = search_beauville(z5_square)
    assert outcome.found
    return outcome.structure


def f21():
    """The Frobenius group of order 21 on 7 points."""
    x = parse_cycles("(1,2,3,4,5,6,7)", 7)
    y = parse_cycles("(2,3,5)(4,7,6)", 7)
    return GroupHandle([x, y], name="F21"), x, y


class TestStructureType:
    """Parsing and printing of types."""

    def test_parse_flat_and_nested(self):
        """Should read both the flat and the nested spelling."""
        flat = StructureType.parse("5,6,5,15,10,15")
        nested = StructureType.parse("((5,6,5),(15,10,15))")
        assert flat == nested
        assert flat.first == (5, 6, 5)
        assert flat.second == (15, 10, 15)

    def test_str(self):
        """Should print the nested form without spaces."""
        assert str(StructureType((5, 6, 5), (15, 10, 15))) == "((5,6,5),(15,10,15))"

    def test_parse_wrong_count(self):
        """Should reject anything other than six orders."""
        with pytest.raises(ValueError, match="six orders"):
            StructureType.parse("5,6,5")

    def test_non_positive_order(self):
        """Should reject orders below one."""
        with pytest.raises(ValueError):
            StructureType((0, 2, 2), (3, 3, 3))

    def test_coprime(self):
        """Should compare the products of the two triples."""
        assert StructureType((11, 11, 11), (8, 8, 8)).is_coprime()
        assert not StructureType((5, 6, 5), (15, 10, 15)).is_coprime()

    def test_swapped(self):
        """Should exchange the two triples."""
        t = StructureType((2, 3, 5), (7, 7, 7))
        assert t.swapped() == StructureType((7, 7, 7), (2, 3, 5))


class TestVerifyStructure:
    """Generation, condition dagger and type."""

    def test_cyclic_square_structure_passes(self, z5_structure):
        """Should pass every check for the structure found on Z5 x Z5."""
        report = verify_structure(z5_structure)
        assert report.overall.is_pass
        assert report.generation[0].is_pass and report.generation[1].is_pass
        assert report.dagger.is_pass
        assert report.type == StructureType((5, 5, 5), (5, 5, 5))
        assert report.group_order == 25
        assert not report.coprime

    def test_repeated_pair_fails(self, a5):
        """Should fail generation and dagger for a pair that does not generate."""
        c = parse_cycles("(1,2,3,4,5)", 5)
        s = BeauvilleStructure(a5, (c, c), (c, c), name="degenerate")
        report = verify_structure(s)
        assert report.generation[0].is_fail
        assert report.dagger.is_fail
        assert report.overall.is_fail

    def test_dagger_fails_on_equal_pairs(self, a5):
        """Should find shared classes when both pairs are the same."""
        x, y = parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)
        s = BeauvilleStructure(a5, (x, y), (x, y))
        assert check_dagger(a5, s).is_fail

    def test_element_outside_group(self, a5):
        """Should raise MembershipError for an odd permutation in A5."""
        x, y = parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)
        s = BeauvilleStructure(a5, (x, y), (y, y))
        with pytest.raises(MembershipError):
            verify_structure(s)

    def test_wrong_degree_rejected(self, a5):
        """Should refuse elements on a different point set."""
        with pytest.raises(ValueError):
            BeauvilleStructure(a5, (Permutation.identity(6), Permutation.identity(6)), (a5.identity(), a5.identity()))

    def test_report_as_dict(self, z5_structure):
        """Should serialize verdict values and the group order as text."""
        d = verify_structure(z5_structure).as_dict()
        assert d["overall"]["verdict"] == "PASS"
        assert d["group_order"] == "25"
        assert d["type"] == [[5, 5, 5], [5, 5, 5]]


class TestWitness:
    """The four inversion equations."""

    def test_inversion_on_abelian_group(self, z5_structure):
        """Should pass for inversion on Z5 x Z5."""
        w = StronglyRealWitness(AbelianInversion())
        wr = inspect_witness(z5_structure, w)
        assert wr.verdict.is_pass
        assert wr.equations == (True, True, True, True)
        assert wr.structure_verified

    def test_identity_conjugation_fails(self, z5_structure, z5_square):
        """Should fail when nothing inverts the elements."""
        w = StronglyRealWitness(OvergroupConjugation(z5_square.identity()))
        assert verify_strongly_real(z5_structure, w).is_fail

    def test_inversion_on_non_abelian_group(self, a5):
        """Should raise WitnessError for inversion on A5."""
        x, y = parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)
        s = BeauvilleStructure(a5, (x, y), (x, y))
        with pytest.raises(WitnessError, match="abelian"):
            inspect_witness(s, StronglyRealWitness(AbelianInversion()))

    def test_tau_not_normalizing(self, z5_structure):
        """Should raise WitnessError when tau mixes the two blocks unevenly."""
        tau = parse_cycles("(1,6)", 10)
        with pytest.raises(WitnessError, match="normalize"):
            inspect_witness(z5_structure, StronglyRealWitness(OvergroupConjugation(tau)))

    def test_conjugator_outside_group(self, z5_structure):
        """Should raise WitnessError for a conjugator outside G."""
        w = StronglyRealWitness(AbelianInversion(), g1=parse_cycles("(1,2)", 10))
        with pytest.raises(WitnessError, match="g1"):
            inspect_witness(z5_structure, w)

    def test_trivial_conjugators(self, z5_square):
        """Should treat missing and identity conjugators alike."""
        assert StronglyRealWitness(AbelianInversion()).uses_trivial_conjugators
        assert StronglyRealWitness(AbelianInversion(), z5_square.identity(), None).uses_trivial_conjugators


class TestInverters:
    """Inverting permutations and derived witnesses."""

    def test_three_cycle_inverters(self):
        """Should list the three transpositions inverting a 3-cycle."""
        x = Permutation.cycle([1, 2, 3], 3)
        assert [str(s) for s in inverters(x, x)] == ["(2,3)", "(1,2)", "(1,3)"]

    def test_every_inverter_inverts(self):
        """Should only yield permutations inverting both elements."""
        x = parse_cycles("(1,2,3,4,5)(6,7,8)", 8)
        y = parse_cycles("(6,7,8)", 8)
        found = list(inverters(x, y))
        assert found
        for s in found:
            assert x.conjugate(s) == x.inverse()
            assert y.conjugate(s) == y.inverse()

    def test_frobenius_pair_has_no_inverter(self):
        """Should find nothing for the generators of F21."""
        _, x, y = f21()
        assert first_inverter(x, y) is None

    def test_derive_witness_on_cyclic_square(self, z5_structure):
        """Should derive a conjugation witness that passes."""
        w = derive_witness(z5_structure)
        assert isinstance(w.automorphism, OvergroupConjugation)
        assert w.g1 is None
        assert inspect_witness(z5_structure, w).verdict.is_pass

    def test_derive_witness_without_inverter(self):
        """Should raise WitnessError when the first pair has no inverter."""
        G, x, y = f21()
        s = BeauvilleStructure(G, (x, y), (x, y))
        with pytest.raises(WitnessError, match="first pair"):
            derive_witness(s)


class TestInvariants:
    """Genera, Euler number and chi."""

    def test_a5_square_values(self):
        """Should give the known values for |G| = 3600."""
        inv = surface_invariants(3600, StructureType.parse("5,6,5,15,10,15"))
        assert (inv.g1, inv.g2, inv.euler_number, inv.chi) == (781, 1381, 1196, 299)
        assert inv.integral
        assert inv.curves_have_genus_at_least_two
        assert str(inv) == "g1=781 g2=1381 e=1196 chi=299"

    def test_non_integral_values(self):
        """Should keep fractions exact and flag them."""
        g = genus(10, (2, 5, 5))
        assert g == Fraction(3, 2)
        inv = surface_invariants(10, StructureType((2, 5, 5), (2, 5, 5)))
        assert not inv.integral
        assert inv.as_dict()["g1"] == "3/2"

    def test_invalid_order(self):
        """Should reject a non-positive group order."""
        with pytest.raises(ValueError):
            genus(0, (2, 3, 7))

    def test_euler_number_formula(self):
        """Should satisfy e = 4 (g1 - 1)(g2 - 1) / |G|."""
        inv = surface_invariants(25, StructureType((5, 5, 5), (5, 5, 5)))
        assert inv.g1 == inv.g2 == 6
        assert inv.euler_number == Fraction(4 * 5 * 5, 25)
        assert inv.chi == 1

    def test_identities_on_random_types(self):
        """Should satisfy Riemann-Hurwitz and e = 4 chi on seeded random types."""
        rng = random.Random(20240611)
        for _ in range(1000):
            order = rng.randint(1, 10**6)
            t = StructureType(
                tuple(rng.randint(2, 60) for _ in range(3)),  # type: ignore[arg-type]
                tuple(rng.randint(2, 60) for _ in range(3)),  # type: ignore[arg-type]
            )
            inv = surface_invariants(order, t)
            assert inv.euler_number == 4 * inv.chi
            assert inv.chi == (inv.g1 - 1) * (inv.g2 - 1) / order
            for g, triple in ((inv.g1, t.first), (inv.g2, t.second)):
                assert 2 * g - 2 == order * (1 - sum(Fraction(1, a) for a in triple))


class TestSearch:
    """Exhaustive searches."""

    def test_a5_has_no_structure(self, a5):
        """Should report that A5 carries no Beauville structure."""
        outcome = search_beauville(a5)
        assert not outcome.found
        assert outcome.exhaustive
        assert outcome.pairs_examined > 0
        assert outcome.describe() == "no Beauville structure (exhaustive)"

    def test_cyclic_square_found(self, z5_square):
        """Should find a structure on Z5 x Z5."""
        outcome = search_beauville(z5_square)
        assert outcome.found
        assert outcome.structure.type() == StructureType((5, 5, 5), (5, 5, 5))
        assert outcome.describe().startswith("found Beauville structure")

    def test_search_is_deterministic(self, z5_square):
        """Should return the same pairs on repeated runs."""
        a = search_beauville(z5_square).structure
        b = search_beauville(cyclic_square(5)).structure
        assert a.pairs() == b.pairs()

    def test_strongly_real_with_inversion(self, z5_square):
        """Should find a strongly real structure through the inversion candidate."""
        outcome = search_strongly_real(z5_square, [AbelianInversion()])
        assert outcome.found
        assert isinstance(outcome.witness.automorphism, AbelianInversion)
        assert outcome.candidates == ("inversion", "identity")
        assert inspect_witness(outcome.structure, outcome.witness).verdict.is_pass

    def test_strongly_real_a5(self, a5):
        """Should stay empty on A5, relative to the identity candidate."""
        outcome = search_strongly_real(a5)
        assert not outcome.found
        assert outcome.candidates == ("identity",)
        assert "1 automorphism candidates" in outcome.describe()

    def test_invalid_candidate(self, a5):
        """Should reject inversion as a candidate on A5."""
        with pytest.raises(WitnessError):
            search_strongly_real(a5, [AbelianInversion()])

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_small_cyclic_squares_have_none(self, n):
        """Should find nothing on Z_n x Z_n when gcd(n, 6) > 1."""
        outcome = search_beauville(cyclic_square(n))
        assert not outcome.found
        assert outcome.exhaustive

    def test_z7_square_found(self):
        """Should find a structure on Z7 x Z7."""
        assert search_beauville(cyclic_square(7)).found


class TestProductGeneration:
    """Generation on direct products whose order exceeds the budget."""

    @pytest.fixture
    def a5_square(self, a5):
        e = a5.identity()
        gens = [ProductElement([g, e]) for g in a5.generators] + [ProductElement([e, g]) for g in a5.generators]
        return GroupHandle(gens, factors=[a5, a5], name="A5xA5", enumeration_budget=100)

    def test_falls_through_to_coprime_projection(self, a5_square):
        """Should skip closure when |G| exceeds the budget and decide by coprime projection."""
        three, five = parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)
        x, y = ProductElement([three, five]), ProductElement([five, three])
        st = verify_generation(a5_square, (x, y))
        assert st.is_pass
        assert st.tier == "coprime projection"

    def test_closure_within_budget(self, a5):
        """Should still use closure when the product fits the budget."""
        e = a5.identity()
        gens = [ProductElement([g, e]) for g in a5.generators] + [ProductElement([e, g]) for g in a5.generators]
        G = GroupHandle(gens, factors=[a5, a5], enumeration_budget=10_000)
        three, five = parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)
        st = verify_generation(G, (ProductElement([three, five]), ProductElement([five, three])))
        assert st.is_pass
        assert st.tier == "closure"

    def test_non_generating_coordinate_fails(self, a5_square):
        """Should fail when one coordinate does not generate its factor."""
        three, five = parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)
        x, y = ProductElement([three, five]), ProductElement([five, five])
        st = verify_generation(a5_square, (x, y))
        assert st.is_fail
        assert st.tier == "coprime projection"
