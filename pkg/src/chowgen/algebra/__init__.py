"""
Exact integer algebra behind the presentation.

- ring: sparse polynomials over Z in T, c1, c2, c3, l0, l1, l2, Q, H
- symm: symmetric reduction from the l's to Chern classes
- localization: three-point localization sums and the alpha relations
- series: rational generating functions and their graded expansions
"""

from .localization import alpha, alpha1, alpha2, eval_loc_sum, LocalizationSum, Convention
from .ring import IntPoly, normal_form_mod_2c3, parse, to_latex, to_text
from .series import RationalGF, expand, r2, rho, resummed_A
from .symm import from_chern, is_symmetric, to_chern

__all__ = [
    "IntPoly",
    "parse",
    "to_text",
    "to_latex",
    "normal_form_mod_2c3",
    "from_chern",
    "is_symmetric",
    "to_chern",
    "LocalizationSum",
    "Convention",
    "eval_loc_sum",
    "alpha",
    "alpha1",
    "alpha2",
    "RationalGF",
    "expand",
    "r2",
    "rho",
    "resummed_A",
]
