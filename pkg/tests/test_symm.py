"""Tests for symmetric reduction to Chern classes."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowgen.algebra.ring import (
    C1,
    C2,
    C3,
    L0,
    L1,
    L2,
    L_VARS,
    IntPoly,
    Q,
    T,
    degree,
    homogeneous_part,
    is_homogeneous,
    permute,
    substitute,
)
from chowgen.algebra.symm import (
    CHERN_CONVENTION,
    chern_in_l,
    complete_homogeneous,
    elementary,
    from_chern,
    is_symmetric,
    to_chern,
)
from chowgen.logging_config import ForeignVariableError, NotSymmetricError


def symmetrize(a: IntPoly) -> IntPoly:
    total = IntPoly.zero()
    for image in permutations(L_VARS):
        total = total + permute(a, dict(zip(L_VARS, image)))
    return total


l_monomials = st.tuples(*[st.integers(0, 3)] * 4).map(
    lambda m: (m[0], 0, 0, 0, m[1], m[2], m[3], 0, 0)
)
symmetric_polys = st.dictionaries(l_monomials, st.integers(-9, 9), max_size=4).map(
    lambda terms: symmetrize(IntPoly(terms))
)


class TestElementary:
    """Tests for the elementary and complete symmetric polynomials."""

    def test_elementary(self):
        """Test the elementary symmetric polynomials in l0, l1, l2."""
        assert elementary(0) == 1
        assert elementary(1) == L0 + L1 + L2
        assert elementary(2) == L0 * L1 + L0 * L2 + L1 * L2
        assert elementary(3) == L0 * L1 * L2
        assert elementary(4) == 0

    def test_complete_homogeneous(self):
        """Test the complete homogeneous polynomials."""
        assert len(complete_homogeneous(2)) == 6
        assert complete_homogeneous(0) == 1
        assert complete_homogeneous(-1) == 0

    def test_convention(self):
        """Test the sign convention linking Chern classes and l-variables."""
        assert CHERN_CONVENTION.as_dict() == {
            "e1": ("c1", -1),
            "e2": ("c2", 1),
            "e3": ("c3", -1),
        }
        assert chern_in_l("c1") == -(L0 + L1 + L2)
        assert chern_in_l("c3") == -(L0 * L1 * L2)

    def test_chern_in_l_rejects_other_names(self):
        """Test that only Chern classes can be expanded."""
        with pytest.raises(ForeignVariableError):
            chern_in_l("T")

    def test_is_symmetric(self):
        """Test the symmetry check."""
        assert is_symmetric(elementary(2) * T)
        assert not is_symmetric(L0 + L1)


class TestToChern:
    """Tests for writing symmetric polynomials in Chern classes."""

    def test_elementary_images(self):
        """Test the images of the elementary polynomials."""
        assert to_chern(elementary(1)) == -C1
        assert to_chern(elementary(2)) == C2
        assert to_chern(elementary(3)) == -C3

    def test_power_sums(self):
        """Test the power sums, with and without c1."""
        p2 = L0**2 + L1**2 + L2**2
        p3 = L0**3 + L1**3 + L2**3
        assert to_chern(p2) == C1**2 - 2 * C2
        assert to_chern(p3) == -(C1**3) + 3 * C1 * C2 - 3 * C3
        assert to_chern(p2, set_c1_zero=True) == -2 * C2
        assert to_chern(p3, set_c1_zero=True) == -3 * C3

    def test_complete_homogeneous(self):
        """Test a complete homogeneous polynomial in Chern classes."""
        assert to_chern(complete_homogeneous(2)) == C1**2 - C2

    def test_inert_variables_pass_through(self):
        """Test that variables other than l0, l1, l2 pass through."""
        p = (Q + L0) * (Q + L1) * (Q + L2)
        assert to_chern(p) == Q**3 - C1 * Q**2 + C2 * Q - C3

    def test_plane_reduction_with_inert_variables(self):
        """Test the c1 = 0 reduction with T present."""
        p = (T + L0) * (T + L1) * (T + L2)
        assert to_chern(p, set_c1_zero=True) == T**3 + C2 * T - C3

    def test_not_symmetric(self):
        """Test that an asymmetric input is rejected."""
        with pytest.raises(NotSymmetricError):
            to_chern(L0 * T)
        with pytest.raises(NotSymmetricError):
            to_chern(L0 - L1, set_c1_zero=True)

    def test_already_in_chern_classes(self):
        """Test that an input already in Chern classes is rejected."""
        with pytest.raises(ForeignVariableError):
            to_chern(C2 + elementary(2))

    def test_zero_and_constants(self):
        """Test zero and constants."""
        assert to_chern(IntPoly.zero()) == 0
        assert to_chern(IntPoly.constant(5), set_c1_zero=True) == 5

    @settings(max_examples=40, deadline=None)
    @given(symmetric_polys)
    def test_from_chern_inverts_to_chern(self, s):
        """Test that expanding back to l-variables inverts the reduction."""
        assert from_chern(to_chern(s)) == s

    @settings(max_examples=40, deadline=None)
    @given(symmetric_polys)
    def test_plane_reduction_is_c1_specialisation(self, s):
        """Test that the c1 = 0 reduction equals substituting c1 = 0."""
        assert to_chern(s, set_c1_zero=True) == substitute(to_chern(s), "c1", 0)

    @settings(max_examples=40, deadline=None)
    @given(symmetric_polys, st.booleans())
    def test_homogeneous_input_stays_homogeneous(self, s, set_c1_zero):
        """Test that a homogeneous input of degree d maps to a homogeneous output of degree d."""
        if not s:
            return
        d = degree(s)
        part = homogeneous_part(s, d)
        image = to_chern(part, set_c1_zero=set_c1_zero)

        assert is_homogeneous(image)
        assert image.is_zero or degree(image) == d
