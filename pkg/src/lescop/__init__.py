"""Exact Casson-Walker-Lescop invariants of rational surgeries on links.

Modules
-------
arith     exact rationals, slopes, Dedekind sums
linalg    symmetric rational matrices: determinant, inertia, bordered minors
surgery   surgery presentations and the surgery formula for lambda
cosmetic  cosmetic-surgery obstructions built on lambda differences
conway    Conway polynomials of PD diagrams; the example links
cli       the ``lescop`` command
"""
from .arith import Slope, dedekind_sum, format_fraction, parse_fraction
# the ``conway`` function stays in its module: re-exporting it would shadow
# the submodule of the same name
from .conway import Diagram, a1hat, builtin_link, hat_conway, linking_number, mirror, parse_pd
from .cosmetic import (
    CosmeticVerdict,
    QuadraticPoly,
    positive_integer_roots,
    thm21_admissible_p,
    thm21_difference_poly,
    thm22_admissible_q,
    thm22_coefficients,
    thm3_verdict,
    thm4_verdict,
    thm5_verdict,
)
from .linalg import Inertia, SymRatMatrix
from .surgery import (
    ConwayData,
    MissingConwayData,
    SurgeryPresentation,
    UnsupportedTheta,
    lescop_breakdown,
    lescop_lambda,
    walker_from_lescop,
)

__version__ = "0.1.0"

__all__ = [
    "CosmeticVerdict",
    "ConwayData",
    "Diagram",
    "Inertia",
    "MissingConwayData",
    "QuadraticPoly",
    "Slope",
    "SurgeryPresentation",
    "SymRatMatrix",
    "UnsupportedTheta",
    "a1hat",
    "builtin_link",
    "dedekind_sum",
    "format_fraction",
    "hat_conway",
    "lescop_breakdown",
    "lescop_lambda",
    "linking_number",
    "mirror",
    "parse_fraction",
    "parse_pd",
    "positive_integer_roots",
    "thm21_admissible_p",
    "thm21_difference_poly",
    "thm22_admissible_q",
    "thm22_coefficients",
    "thm3_verdict",
    "thm4_verdict",
    "thm5_verdict",
    "walker_from_lescop",
]
