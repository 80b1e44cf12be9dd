"""Tests for the presentation ideals, the claim certificates and the printed table."""

import dataclasses

import pytest

from chowgen.algebra.ring import C3, T, degree, normal_form_mod_2c3, parse
from chowgen.golden import TABLE_ONE, TABLE_RANKS
from chowgen.logging_config import InvalidArgumentError, InvalidRError, MismatchReport
from chowgen.presentation import (
    TWO_C3,
    Form,
    PresentationIdeal,
    alpha_name,
    ambient_redundancy_witness,
    ambient_rho_name,
    build_table_block,
    certify_claim_Z1,
    certify_claim_Z2,
    closed_form_ideal,
    gf_form_ideal,
    presentation,
    raw_discrepancies,
    reproduce_table,
    rho_name,
    verify_ambient_redundancy,
    verify_claim_Z1,
    verify_claim_Z2,
    verify_complement_class,
)


class TestNames:
    """Tests for generator labels."""

    def test_alpha_and_rho(self):
        """Test the alpha and rho labels."""
        assert alpha_name(2, 1, 3) == "alpha_2,1^3"
        assert rho_name(1, 4) == "rho_1,4"
        assert ambient_rho_name(2) == "rho_2,2(T^3 + c2T + c3)"


class TestClosedForm:
    """Tests for the ideal built from the localization relations."""

    def test_generator_names(self):
        """Test the generator order of the closed form."""
        ideal = closed_form_ideal(1)
        assert ideal.names == [
            "2c3",
            "ambient^2",
            "alpha_1,0^1",
            "alpha_1,1^1",
            "alpha_1,2^1",
            "alpha_2,0^1",
            "alpha_2,1^1",
            "alpha_2,2^1",
        ]
        assert len(ideal) == 8
        assert ideal.form is Form.CLOSED

    @pytest.mark.parametrize(
        "name,expected",
        [
            ("alpha_1,0^1", "4T"),
            ("alpha_1,1^1", "2T^2 - 2c2"),
            ("alpha_1,2^1", "-4c2T"),
            ("alpha_2,0^1", "3T^2 + c2"),
            ("alpha_2,1^1", "-2T^3 + c3"),
            ("alpha_2,2^1", "T^4 - c2T^2"),
        ],
    )
    def test_values_r1(self, name, expected):
        """Test the closed-form values at r = 1."""
        assert closed_form_ideal(1)[name].poly == parse(expected)

    def test_two_c3_kept_literally(self):
        """Test that 2c3 is kept unreduced."""
        assert closed_form_ideal(2)["2c3"].poly == 2 * C3

    def test_ambient_power_reduced(self, ambient):
        """Test that the ambient power is reduced mod 2c3."""
        ideal = closed_form_ideal(2)
        assert ideal["ambient^3"].poly == normal_form_mod_2c3(ambient**3)

    @pytest.mark.parametrize("r", [1, 2, 5])
    def test_degrees(self, r):
        """Test the degrees of the closed-form generators."""
        ideal = closed_form_ideal(r)
        assert ideal["2c3"].degree == 3
        assert ideal[f"ambient^{r + 1}"].degree == 3 * (r + 1)
        for k in (0, 1, 2):
            assert ideal[alpha_name(1, k, r)].degree == r + k
            assert ideal[alpha_name(2, k, r)].degree == 2 * r + k

    def test_generators_in_normal_form(self):
        """Test that every generator but 2c3 is in normal form."""
        for g in closed_form_ideal(3):
            if g.name != "2c3":
                assert normal_form_mod_2c3(g.poly) == g.poly

    def test_unknown_name(self):
        """Test that an unknown label raises KeyError."""
        with pytest.raises(KeyError):
            closed_form_ideal(1)["alpha_3,0^1"]


class TestGeneratingFunctionForm:
    """Tests for the ideal built from the series coefficients."""

    def test_generator_names(self):
        """Test the generator order of the series form."""
        assert gf_form_ideal(1).names == [
            "2c3",
            "ambient^2",
            "rho_1,1",
            "rho_1,2",
            "rho_2,0(T^3 + c2T + c3)",
            "rho_2,2",
            "rho_2,4",
        ]

    def test_values_r1(self, ambient):
        """Test the series-form values at r = 1."""
        ideal = gf_form_ideal(1)
        assert ideal["rho_1,1"].poly == 4 * T
        assert ideal["rho_2,0(T^3 + c2T + c3)"].poly == ambient
        assert ideal["rho_2,4"].poly == parse("6T^4 + 3c2T^2 + c3T + c2^2")

    @pytest.mark.parametrize("r", [1, 3])
    def test_degrees(self, r):
        """Test the degrees of the series-form generators."""
        ideal = gf_form_ideal(r)
        assert ideal[rho_name(1, r)].degree == r
        assert ideal[rho_name(1, r + 1)].degree == r + 1
        assert ideal[ambient_rho_name(r)].degree == 2 * r + 1
        assert ideal[rho_name(2, 2 * r + 2)].degree == 2 * r + 2


class TestPresentationDispatch:
    """Tests for choosing a form."""

    def test_form_from_string(self):
        """Test that forms can be given by name."""
        assert presentation(2, "gf") == gf_form_ideal(2)
        assert presentation(2, Form.CLOSED) == closed_form_ideal(2)
        assert isinstance(presentation(1, "closed"), PresentationIdeal)

    @pytest.mark.parametrize("r", [0, -3])
    def test_invalid_r(self, r):
        """Test that r must be positive."""
        with pytest.raises(InvalidRError):
            presentation(r, Form.CLOSED)
        with pytest.raises(InvalidRError):
            gf_form_ideal(r)

    def test_invalid_form(self):
        """Test that an unknown form is rejected."""
        with pytest.raises(ValueError):
            presentation(1, "matrix")


class TestClaims:
    """Both forms generate the same ideal modulo 2c3."""

    @pytest.mark.parametrize("r", range(1, 7))
    def test_claim_Z1(self, r):
        """Test the first-component ideal equality."""
        certificate = certify_claim_Z1(r)
        assert certificate
        assert len(certificate.identities) == 5
        assert certificate.failed == []
        assert verify_claim_Z1(r)

    @pytest.mark.parametrize("r", range(1, 7))
    def test_claim_Z2(self, r):
        """Test the second-component ideal equality."""
        certificate = certify_claim_Z2(r)
        assert certificate
        assert len(certificate.identities) == 6
        assert verify_claim_Z2(r)

    def test_invalid_r(self):
        """Test that r must be positive."""
        with pytest.raises(InvalidRError):
            certify_claim_Z1(0)


class TestAmbientRelations:
    """Tests for the relations coming from the ambient bundle."""

    def test_witness(self):
        """Test the redundancy witness for the ambient square."""
        witness = ambient_redundancy_witness()
        assert witness == -4 * C3
        assert TWO_C3 * witness == -8 * C3**2

    def test_redundancy(self):
        """Test that the ambient relation is redundant."""
        assert verify_ambient_redundancy()

    def test_complement_class(self):
        """Test the complement class check."""
        assert verify_complement_class()


class TestPrintedTable:
    """Tests for reproducing the published generator table."""

    @pytest.mark.parametrize("r", TABLE_RANKS)
    def test_every_cell_matches(self, r):
        """Test that every printed cell is reproduced."""
        block = reproduce_table(r)
        assert block.mismatches == []
        assert len(block.cells) == 12
        assert len(block.z1) == 2
        assert len(block.z2) == 3

    def test_cell_labels(self):
        """Test plain and LaTeX cell labels."""
        block = build_table_block(2)
        assert block.ambient[1].label == "ambient^3"
        assert block.z2[1].right.label == "rho_2,2(T^3 + c2T + c3)"
        assert block.z2[1].right.latex_label == r"\rho_{2,2}(T^3+c_2T+c_3)"

    def test_cells_compare_mod_2c3(self):
        """Test that cells are compared mod 2c3."""
        cell = build_table_block(1).z2[1].left
        assert cell.matches
        assert cell.computed == parse("-2T^3 + c3")

    def test_alpha_cells_keep_exact_value(self):
        """Test that alpha cells carry the value before reduction mod 2c3."""
        block = build_table_block(1)
        assert block.z2[1].left.exact == parse("-2T^3 - c3")
        assert block.z1[0].left.exact == block.z1[0].left.computed
        assert block.z2[1].right.exact is None
        assert block.ambient[0].exact is None

    def test_rank_outside_table(self):
        """Test that ranks outside the table are rejected."""
        with pytest.raises(InvalidArgumentError):
            reproduce_table(4)

    def test_mismatch_reported(self, monkeypatch):
        """Test that a wrong printed cell is reported."""
        bad = dataclasses.replace(TABLE_ONE[1], ambient=("2c_3", "(T^3+c_2T+c_3)^3"))
        monkeypatch.setitem(TABLE_ONE, 1, bad)
        with pytest.raises(MismatchReport) as excinfo:
            reproduce_table(1)
        assert len(excinfo.value.mismatches) == 1
        assert excinfo.value.mismatches[0][0] == "r=1 ambient^2"

    def test_golden_strings_degrees(self):
        """Test that printed pairs have equal degrees."""
        for block in TABLE_ONE.values():
            for row in block.z1:
                assert degree(parse(row.left)) == degree(parse(row.right))


class TestRawDiscrepancies:
    """Tests for alpha cells that differ from print before reduction."""

    def test_r1(self):
        """Test the r = 1 discrepancies."""
        found = raw_discrepancies(1)
        assert [d.label for d in found] == ["alpha_2,1^1", "alpha_2,2^1"]
        assert parse(found[0].exact) == parse("-2T^3 - c3")
        assert parse(found[1].exact) == parse("T^4 - c2T^2 + 2c3T")
        assert found[0].printed == "-2T^3+c_3"

    def test_differences_vanish_mod_2c3(self):
        """Test that every discrepancy vanishes mod 2c3."""
        for r in TABLE_RANKS:
            for d in raw_discrepancies(r):
                assert normal_form_mod_2c3(parse(d.exact) - parse(d.printed)) == 0
