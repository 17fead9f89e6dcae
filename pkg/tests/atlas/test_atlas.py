"""
Tests for beauville_forge.core.atlas.

Tests cover:
- The word grammar: parsing, printing, error positions
- Evaluation under left-to-right composition
- Standard-generator files in both line formats
- Table lookup and the optional check against real generator files
"""

import io
import os

import pytest

from beauville_forge.core.atlas import (
    HN_BRACKETS,
    SPORADIC_ROWS,
    Atom,
    Commutator,
    Conjugate,
    Power,
    Product,
    atoms,
    evaluate_word,
    format_word,
    load_generators,
    lookup_row,
    parse_generators,
    parse_word,
    verify_sporadic,
)
from beauville_forge.core.exceptions import BeauvilleError, GeneratorFileError, UnboundAtomError, WordSyntaxError
from beauville_forge.core.perm import parse_cycles
from beauville_forge.core.structures import StructureType


@pytest.fixture
def env():
    return {"c": parse_cycles("(1,2,3)", 4), "d": parse_cycles("(1,2)(3,4)", 4)}


@pytest.mark.unit
class TestParseWord:
    """The word grammar."""

    def test_atoms_split_on_letters(self):
        """Should read t1t2 as two atoms and cd as two atoms."""
        assert parse_word("t1t2") == Product((Atom("t1"), Atom("t2")))
        assert parse_word("cd") == Product((Atom("c"), Atom("d")))

    def test_power_and_conjugate(self):
        """Should distinguish integer exponents from conjugating words."""
        assert parse_word("c^-2") == Power(Atom("c"), -2)
        assert parse_word("c^d") == Conjugate(Atom("c"), Atom("d"))
        assert parse_word("c^(dc)") == Conjugate(Atom("c"), Product((Atom("d"), Atom("c"))))

    def test_left_chaining(self):
        """Should read a^b^c as (a^b)^c."""
        assert parse_word("a^b^c") == Conjugate(Conjugate(Atom("a"), Atom("b")), Atom("c"))

    def test_commutator(self):
        """Should parse brackets with two words."""
        assert parse_word("[c, d^2]") == Commutator(Atom("c"), Power(Atom("d"), 2))

    @pytest.mark.parametrize(
        "text, position",
        [
            ("", 0),
            ("c^", 2),
            ("(cd", 3),
            ("[c]", 2),
            ("c)", 1),
            ("c^-", 3),
        ],
    )
    def test_error_positions(self, text, position):
        """Should report where parsing stopped."""
        with pytest.raises(WordSyntaxError) as exc:
            parse_word(text)
        assert exc.value.position == position

    def test_table_words_print_back(self):
        """Should print every table word so that it parses to the same expression."""
        for row in SPORADIC_ROWS.values():
            for w in (row.t1, row.t2, row.x1, row.x2, row.u1, row.u2):
                e = parse_word(w)
                assert parse_word(format_word(e)) == e

    def test_atoms_in_order(self):
        """Should list identifiers by first appearance."""
        assert atoms(parse_word("t1t2^(dcd)")) == ("t1", "t2", "d", "c")


@pytest.mark.unit
class TestEvaluateWord:
    """Evaluation against an environment of permutations."""

    def test_product_is_left_to_right(self, env):
        """Should apply c first, then d."""
        assert evaluate_word("cd", env) == env["c"] * env["d"]

    def test_powers(self, env):
        """Should handle negative and zero exponents."""
        c = env["c"]
        assert evaluate_word("c^-1", env) == c.inverse()
        assert evaluate_word("c^3", env).is_identity()
        assert evaluate_word("c^0", env).is_identity()

    def test_conjugate(self, env):
        """Should compute u^v = v^-1 u v."""
        c, d = env["c"], env["d"]
        assert evaluate_word("c^d", env) == d.inverse() * c * d

    def test_commutator(self, env):
        """Should compute [u,v] = u^-1 v^-1 u v."""
        c, d = env["c"], env["d"]
        assert evaluate_word("[c,d]", env) == c.inverse() * d.inverse() * c * d

    def test_unbound(self, env):
        """Should name the missing identifier."""
        with pytest.raises(UnboundAtomError) as exc:
            evaluate_word("ce", env)
        assert exc.value.name == "e"
        assert str(exc.value) == "Unbound identifier 'e'"


@pytest.mark.unit
class TestGeneratorFiles:
    """Reading (c, d) from text."""

    def test_header_and_cycles(self):
        """Should honour the degree header."""
        c, d = parse_generators("degree 6\n(1,2)\n(1,2,3,4,5)\n")
        assert c.degree == d.degree == 6
        assert d.order() == 5

    def test_commented_header(self):
        """Should accept '# degree: N'."""
        c, _ = parse_generators("# degree: 7\n# standard generators\n(1,2)\n(3,4)\n")
        assert c.degree == 7

    def test_degree_from_points(self):
        """Should take the largest point when there is no header."""
        c, d = parse_generators("(1,2)\n\n(3,4,5)\n")
        assert c.degree == 5
        assert d == parse_cycles("(3,4,5)", 5)

    def test_image_lists(self):
        """Should read whitespace-separated 1-based images."""
        c, d = parse_generators("2 1 3\n1 3 2\n")
        assert c == parse_cycles("(1,2)", 3)
        assert d == parse_cycles("(2,3)", 3)

    def test_mixed_formats(self):
        """Should mix an image list with cycle notation."""
        c, d = parse_generators("2 1 3 4\n(3,4)\n")
        assert c.degree == d.degree == 4

    def test_too_many(self):
        """Should point at the third permutation."""
        with pytest.raises(GeneratorFileError) as exc:
            parse_generators("(1,2)\n(2,3)\n(3,4)\n")
        assert exc.value.line == 3

    def test_too_few(self):
        """Should refuse a single permutation."""
        with pytest.raises(GeneratorFileError, match="exactly two"):
            parse_generators("(1,2)\n")

    def test_degree_twice(self):
        """Should refuse a second header."""
        with pytest.raises(GeneratorFileError) as exc:
            parse_generators("degree 4\ndegree 5\n(1,2)\n(3,4)\n")
        assert exc.value.line == 2

    def test_malformed_line(self):
        """Should report the line of a broken cycle."""
        with pytest.raises(GeneratorFileError) as exc:
            parse_generators("(1,2)\n(1,2\n")
        assert exc.value.line == 2

    def test_degree_conflict(self):
        """Should refuse an image list shorter than the header degree."""
        with pytest.raises(GeneratorFileError) as exc:
            parse_generators("degree 5\n2 1 3\n(1,2)\n")
        assert exc.value.line == 2

    def test_load_from_stream_and_path(self, tmp_path):
        """Should read both open streams and paths."""
        text = "(1,2)\n(1,2,3)\n"
        path = tmp_path / "gens.txt"
        path.write_text(text, encoding="utf-8")
        assert load_generators(io.StringIO(text)) == load_generators(str(path))

    def test_missing_file(self, tmp_path):
        """Should wrap the OS error."""
        with pytest.raises(GeneratorFileError, match="cannot read"):
            load_generators(str(tmp_path / "absent.txt"))


@pytest.mark.unit
class TestTable:
    """Rows of the sporadic table."""

    def test_rows(self):
        """Should hold twelve rows."""
        assert len(SPORADIC_ROWS) == 12
        assert "Fi24" in SPORADIC_ROWS

    @pytest.mark.parametrize("name", ["M12:2", "M12.2", "m12:2"])
    def test_lookup_spellings(self, name):
        """Should accept dots, colons and any case."""
        assert lookup_row(name).name == "M12:2"

    def test_lookup_apostrophe(self):
        """Should match O'N:2 to the ON:2 row."""
        assert lookup_row("O'N:2").name == "ON:2"

    def test_lookup_unknown(self):
        """Should list known groups in the error."""
        with pytest.raises(BeauvilleError, match="known groups"):
            lookup_row("M24")

    def test_filename(self):
        """Should replace the colon by a dot."""
        assert lookup_row("HS:2").filename == "HS.2.txt"

    def test_promised_types(self):
        """Should store the promised types as parsed."""
        assert lookup_row("M12:2").expected == StructureType((4, 4, 5), (6, 6, 3))
        assert lookup_row("HN:2").large

    def test_hn_brackets(self):
        """Should offer both bracket readings."""
        assert HN_BRACKETS == ("commutator", "group")


ATLAS_DIR = os.environ.get("BEAUVILLE_ATLAS_DIR")


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.skipif(not ATLAS_DIR, reason="BEAUVILLE_ATLAS_DIR not set")
class TestTableData:
    """Rows checked against real standard generators, when available."""

    @pytest.mark.parametrize("name", ["M12:2", "M22:2", "J2:2"])
    def test_small_rows(self, name):
        """Should reproduce the promised type on the smaller groups."""
        row = lookup_row(name)
        path = os.path.join(ATLAS_DIR, row.filename)
        if not os.path.exists(path):
            pytest.skip(f"{row.filename} not present")
        c, d = load_generators(path)
        outcome = verify_sporadic(name, c, d)
        assert outcome.structure.type() == row.expected
        assert outcome.witness_report is not None
