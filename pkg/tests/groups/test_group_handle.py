"""
Unit tests for beauville_forge.core.groups.

Tests cover:
- Stabilizer-chain orders and membership against sympy
- Enumeration budgets and the soft BudgetExceededError
- Orbit blocks, projections and exact conjugacy tiers
- The tiered conjugacy oracle and TriState combination
- Direct products of factor handles
- Seeded random subgroups of S8 against sympy and brute-force classes
"""

import random

import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from beauville_forge.core.exceptions import BudgetExceededError, EnumerationUnavailableError
from beauville_forge.core.groups import (
    GroupHandle,
    ProductElement,
    StabilizerChain,
    TriState,
    are_conjugate,
    class_id,
    combine,
    conjugacy_classes,
    fingerprint,
    restrict,
)
from beauville_forge.core.perm import Permutation, parse_cycles

pytestmark = pytest.mark.unit


def to_sympy(G: GroupHandle) -> PermutationGroup:
    return PermutationGroup([SympyPermutation(list(g.images)) for g in G.generators])


class TestStabilizerChain:
    """Schreier-Sims orders and membership."""

    @pytest.mark.parametrize(
        "gens, degree",
        [
            (["(1,2)", "(1,2,3,4,5,6)"], 6),
            (["(1,2,3)", "(1,2,3,4,5)"], 5),
            (["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"], 7),
            (["(1,2)(3,4)", "(1,3)(2,4)"], 4),
        ],
    )
    def test_orders_agree_with_sympy(self, gens, degree):
        """Should compute the same order as sympy's Schreier-Sims."""
        G = GroupHandle([parse_cycles(g, degree) for g in gens])
        assert G.order() == to_sympy(G).order()

    def test_membership(self, a5):
        """Should separate even from odd permutations in A5."""
        assert a5.contains(parse_cycles("(1,2)(3,4)", 5))
        assert not a5.contains(parse_cycles("(1,2)", 5))

    def test_extend_reports_growth(self):
        """Should grow from C3 to S3 and then stay put."""
        chain = StabilizerChain.from_permutations([parse_cycles("(1,2,3)", 3)])
        assert chain.order() == 3
        assert chain.extend([parse_cycles("(1,2)", 3)])
        assert chain.order() == 6
        assert not chain.extend([parse_cycles("(1,3)", 3)])


class TestEnumeration:
    """Closure enumeration within a budget."""

    def test_cyclic_group_fits(self, cyclic5):
        """Should list the five elements, identity first."""
        elements = cyclic5.enumerate(budget=100)
        assert len(elements) == 5
        assert elements[0].is_identity()

    def test_budget_exceeded(self, a5):
        """Should raise the soft budget error when the order exceeds the budget."""
        with pytest.raises(BudgetExceededError) as exc_info:
            a5.enumerate(budget=10)
        assert exc_info.value.budget == 10
        assert not a5.is_enumerable(budget=10)
        assert a5.is_enumerable()

    def test_matrix_style_membership_needs_enumeration(self):
        """Should turn a budget failure into EnumerationUnavailableError for product groups."""
        c = Permutation.cycle([1, 2, 3, 4, 5], 5)
        G = GroupHandle([ProductElement([c, c])], enumeration_budget=2)
        with pytest.raises(EnumerationUnavailableError):
            G.contains(ProductElement([c, c ** 2]))


class TestBlocks:
    """Orbit blocks, projections and exact tiers."""

    def test_blocks_and_projection(self):
        """Should project onto each block and recognize a full direct product."""
        G = GroupHandle(
            [parse_cycles("(1,2,3)", 5), parse_cycles("(4,5)", 5)],
            orbit_blocks=[[1, 2, 3], [4, 5]],
        )
        assert G.order() == 6
        assert G.projection(0).order() == 3
        assert G.projection(1).order() == 2
        assert G.exact_tier() == "blocks"

    def test_block_validation(self):
        """Should reject generators that cross blocks."""
        with pytest.raises(ValueError, match="does not preserve"):
            GroupHandle([parse_cycles("(1,4)", 5)], orbit_blocks=[[1, 2, 3], [4, 5]])

    def test_restrict_relabels(self):
        """Should relabel the block's points to 1..k in sorted order."""
        x = parse_cycles("(4,6)(1,2)", 6)
        assert str(restrict(x, [4, 5, 6])) == "(1,3)"

    def test_exact_tiers(self, a5, s4, cyclic5):
        """Should prefer the symmetric and alternating tiers, then enumeration."""
        assert s4.exact_tier() == "symmetric"
        assert a5.exact_tier() == "alternating"
        assert cyclic5.exact_tier() == "enumeration"


class TestConjugacy:
    """Fingerprints, class tables and the oracle."""

    def test_a5_classes(self, a5):
        """Should find the five classes of A5 with sizes 1, 15, 20, 12, 12."""
        classes = conjugacy_classes(a5)
        assert [c.size for c in classes] == [1, 15, 20, 12, 12]
        assert len(classes) == len(to_sympy(a5).conjugacy_classes())

    def test_split_five_cycles(self, a5):
        """Should separate c from c^2 but not from c^-1 in A5."""
        c = parse_cycles("(1,2,3,4,5)", 5)
        assert are_conjugate(a5, c, c ** -1).is_pass
        verdict = are_conjugate(a5, c, c ** 2)
        assert verdict.is_fail
        assert verdict.tier == "alternating"
        assert fingerprint(a5, c) == fingerprint(a5, c ** 2)
        assert class_id(a5, c) != class_id(a5, c ** 2)

    def test_fingerprint_refutes(self, a5):
        """Should refute conjugacy from the cycle types alone."""
        verdict = are_conjugate(a5, parse_cycles("(1,2)(3,4)", 5), parse_cycles("(1,2,3)", 5))
        assert verdict.is_fail
        assert verdict.tier == "fingerprint"

    def test_undetermined_without_exact_tier(self):
        """Should answer UNDETERMINED when D5 does not fit the budget."""
        c = parse_cycles("(1,2,3,4,5)", 5)
        D5 = GroupHandle([c, parse_cycles("(2,5)(3,4)", 5)], enumeration_budget=5)
        assert D5.exact_tier() is None
        verdict = are_conjugate(D5, c, c ** -1)
        assert verdict.is_undetermined
        assert verdict.tier == "enumeration"

    def test_enumeration_tier(self):
        """Should decide conjugacy in D5 once it fits the budget."""
        c = parse_cycles("(1,2,3,4,5)", 5)
        D5 = GroupHandle([c, parse_cycles("(2,5)(3,4)", 5)])
        assert D5.exact_tier() == "enumeration"
        assert are_conjugate(D5, c, c ** -1).is_pass
        assert are_conjugate(D5, c, c ** 2).is_fail


class TestProducts:
    """Direct products of factor handles."""

    def test_product_order_and_membership(self, a5, cyclic5):
        """Should multiply factor orders and test membership coordinatewise."""
        gens = [ProductElement([g, cyclic5.identity()]) for g in a5.generators]
        gens += [ProductElement([a5.identity(), g]) for g in cyclic5.generators]
        G = GroupHandle(gens, factors=[a5, cyclic5])
        assert G.order() == 300
        c = cyclic5.generators[0]
        assert G.contains(ProductElement([parse_cycles("(1,2)(3,4)", 5), c ** 3]))
        assert not G.contains(ProductElement([parse_cycles("(1,2)", 5), c]))
        assert G.exact_tier() == "blocks"

    def test_product_element_algebra(self):
        """Should multiply and invert coordinatewise."""
        a = ProductElement([parse_cycles("(1,2,3)", 3), parse_cycles("(1,2)", 2)])
        assert a.order() == 6
        assert (a * a.inverse()).is_identity()
        assert (a ** 6).is_identity()
        assert len(a) == 2


class TestTriState:
    """Three-valued verdicts."""

    def test_combine_precedence(self):
        """Should let FAIL win over UNDETERMINED and UNDETERMINED over PASS."""
        p = TriState.passed("ok")
        u = TriState.undetermined("enumeration", "budget")
        f = TriState.failed("bad")
        assert combine([p, u, f]).is_fail
        assert combine([p, u]).is_undetermined
        assert combine([p, p]).is_pass
        assert (p & u).tier == "enumeration"

    def test_undetermined_needs_tier(self):
        """Should refuse an UNDETERMINED verdict without a tier."""
        with pytest.raises(ValueError):
            TriState.undetermined("")


def _brute_force_classes(G: GroupHandle):
    """Class index per element, filled one conjugation orbit at a time."""
    index = {}
    labels = iter(range(10**6))

    def class_of(x):
        if x not in index:
            label = next(labels)
            frontier, index[x] = [x], label
            while frontier:
                z = frontier.pop()
                for g in G.generators:
                    w = z.conjugate(g)
                    if w not in index:
                        index[w] = label
                        frontier.append(w)
        return index[x]

    return class_of


@pytest.mark.slow
class TestRandomSubgroups:
    """Seeded random two-generator subgroups of S8."""

    @pytest.fixture(scope="class")
    def groups(self):
        rng = random.Random(8008)
        out = []
        for _ in range(25):
            gens = []
            for _ in range(2):
                images = list(range(8))
                rng.shuffle(images)
                gens.append(Permutation(images))
            out.append(GroupHandle(gens))
        return out

    def test_order_matches_enumeration_and_sympy(self, groups):
        """Should agree on |G| across the chain, enumeration and sympy."""
        for G in groups:
            assert G.order() == len(G.enumerate()) == to_sympy(G).order()

    def test_conjugacy_against_brute_force(self, groups):
        """Should decide 10^4 conjugacy questions exactly as orbit enumeration does."""
        rng = random.Random(4242)
        for G in groups:
            elements = G.enumerate()
            class_of = _brute_force_classes(G)
            for _ in range(400):
                a = rng.choice(elements)
                if rng.random() < 0.5:
                    b = a.conjugate(rng.choice(elements))
                else:
                    b = rng.choice(elements)
                st = are_conjugate(G, a, b)
                assert not st.is_undetermined
                assert st.is_pass == (class_of(a) == class_of(b))
